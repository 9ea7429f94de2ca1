//! The CHSH square identity on random observables and the singlet optimum.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cvbell::bell::{chsh_random_suite, optimize_singlet_chsh};

fn main() -> cvbell::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let residual = chsh_random_suite(&mut rng, 1000)?;
    println!("max |<B^2> - 4 - <[Y1,X1][X2,Y2]>| over 1000 draws: {residual:.2e}");
    let opt = optimize_singlet_chsh(&mut rng);
    println!("singlet CHSH optimum {:.12} (2 sqrt 2 = {:.12})", opt.value, 2.0 * std::f64::consts::SQRT_2);
    Ok(())
}
