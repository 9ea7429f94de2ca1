//! Moyal products three ways: first-order series, Groenewold integral, Fock matrices.

use cvbell::moyal::{star_integral_min_nodes, star_integral_with, star_series, star_via_operators};
use cvbell::phasespace::{PhaseGrid, PhasePoint, WeylSymbol};

fn main() -> cvbell::Result<()> {
    let (q, p) = (WeylSymbol::position(), WeylSymbol::momentum());
    let x = PhasePoint::new(1.0, 1.0);
    println!("q*p at (1,1): series {}, operators {:.12}", star_series(&q, &p, [x], 1.0)?, star_via_operators(&q, &p, 64, x)?);

    let f = WeylSymbol::real(|x| (-x.norm_sqr()).exp());
    let g = WeylSymbol::real(|x| (-((x.q - 0.5).powi(2) + 2.0 * x.p * x.p)).exp());
    let x = PhasePoint::new(0.5, 0.3);
    for hbar in [1.0, 0.4, 0.2, 0.1] {
        let nodes = (3 * star_integral_min_nodes(5.0, hbar)).clamp(96, 512);
        let exact = star_integral_with(&f, &g, x, hbar, &PhaseGrid::new(5.0, nodes, 1)?)?;
        let series = star_series(&f, &g, [x], hbar)?;
        println!(
            "hbar = {hbar:<4} f*g = {:.10}  first-order residual {:.3e}  (estimate {:.1e})",
            exact.value,
            (exact.value - series).norm(),
            exact.error_estimate
        );
    }
    Ok(())
}
