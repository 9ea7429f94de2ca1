//! The two-mode Bell state against a disk observable: factorized and full routes.

use std::f64::consts::FRAC_1_SQRT_2;

use cvbell::bell::{bell_expectation_with, cirelson_ratio, BellRoute};
use cvbell::phasespace::{Region, WignerState};

fn main() -> cvbell::Result<()> {
    let disk = Region::disk(FRAC_1_SQRT_2)?;
    let fast = bell_expectation_with(&WignerState::Bell, &disk, 1e-12, BellRoute::Factorized, None)?;
    let full = bell_expectation_with(&WignerState::Bell, &disk, 1e-6, BellRoute::Full, None)?;
    println!("factorized  <B> = {:.15}", fast.value);
    println!("4D tensor   <B> = {:.15}", full.value);
    println!("4/sqrt(e)-1     = {:.15}", 4.0 * (-0.5f64).exp() - 1.0);
    println!("LHV bound {}, violated: {}", fast.lhv_bound, fast.violated);
    let c = cirelson_ratio(&fast)?;
    println!("ratio {:.6} vs sqrt 2: {:?}", c.ratio, c.flag);
    Ok(())
}
