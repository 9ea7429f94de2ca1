//! The largest Bell value reachable from |m>: the integral of |W_m|.

use cvbell::bell::abs_wigner_integral;

fn main() -> cvbell::Result<()> {
    for m in [0, 1, 2, 3, 5, 10, 20, 30] {
        println!("m = {m:>2}  int |W_m| = {:.12}", abs_wigner_integral(m)?);
    }
    Ok(())
}
