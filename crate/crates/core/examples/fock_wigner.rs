//! Wigner functions of Fock states along a radial cut, and their normalization.

use cvbell::phasespace::{expectation, wigner_fock, PhasePoint, WeylSymbol, WignerState};
use num_complex::Complex64;

fn main() -> cvbell::Result<()> {
    let one = WeylSymbol::constant(1, Complex64::new(1.0, 0.0));
    for m in [0, 1, 2, 5] {
        let norm = expectation(&WignerState::Fock(m), &one, 1e-10)?;
        println!("m = {m}: int W = {:.12}", norm.re);
        let cut: Vec<String> = (0..=6)
            .map(|i| format!("{:+.4}", wigner_fock(m, PhasePoint::new(0.5 * i as f64, 0.0))))
            .collect();
        println!("  W_m(q, 0), q = 0, 0.5, .., 3: {}", cut.join(" "));
    }
    Ok(())
}
