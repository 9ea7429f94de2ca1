//! lambda_m(R) by quadrature, generating function and recurrence.

use cvbell::bell::{lambda_generating, lambda_quadrature_series, lambda_recurrence};

fn main() -> cvbell::Result<()> {
    for radius in [1.0, 3.5] {
        let quad = lambda_quadrature_series(12, radius)?;
        let gen = lambda_generating(12, radius)?;
        let rec = lambda_recurrence(12, radius)?;
        println!("R = {radius}");
        for m in 0..=12 {
            println!("  m = {m:>2}  lambda = {:+.14}  |1 - 2 lambda| = {:.6}", quad.values[m], (1.0 - 2.0 * quad.values[m]).abs());
        }
        println!("  max spread: gen {:.1e}, rec {:.1e}", quad.max_difference(&gen), quad.max_difference(&rec));
    }
    Ok(())
}
