//! The CHSH operator for two qubits and the identity
//! `<B^2> = 4 + <[Y1, X1][X2, Y2]>` for dichotomic observables.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Qubit = Matrix2<Complex64>;
pub type TwoQubit = Matrix4<Complex64>;
pub type TwoQubitState = Vector4<Complex64>;

const DICHOTOMY_TOL: f64 = 1e-12;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn max_abs<const R: usize, const C: usize>(m: &nalgebra::SMatrix<Complex64, R, C>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn check_dichotomic(name: &str, o: &Qubit) -> Result<()> {
    let square = max_abs(&(o * o - Qubit::identity()));
    let herm = max_abs(&(o - o.adjoint()));
    if square > DICHOTOMY_TOL || herm > DICHOTOMY_TOL {
        return Err(Error::Domain(format!(
            "{name} is not a dichotomic observable (|O^2 - 1| = {square:e}, |O - O^+| = {herm:e})"
        )));
    }
    Ok(())
}

/// `B = X1 X2 + X1 Y2 + Y1 X2 - Y1 Y2` on the two-qubit space.
pub fn chsh_operator(x1: &Qubit, y1: &Qubit, x2: &Qubit, y2: &Qubit) -> TwoQubit {
    x1.kronecker(x2) + x1.kronecker(y2) + y1.kronecker(x2) - y1.kronecker(y2)
}

fn expect(op: &TwoQubit, psi: &TwoQubitState) -> Complex64 {
    psi.dotc(&(op * psi))
}

/// `|<B^2> - 4 - <[Y1, X1] [X2, Y2]>|` in `psi`.
pub fn chsh_identity_check(x1: &Qubit, y1: &Qubit, x2: &Qubit, y2: &Qubit, psi: &TwoQubitState) -> Result<f64> {
    for (name, o) in [("X1", x1), ("Y1", y1), ("X2", x2), ("Y2", y2)] {
        check_dichotomic(name, o)?;
    }
    if (psi.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!("state must be normalized, has norm {}", psi.norm())));
    }
    let b = chsh_operator(x1, y1, x2, y2);
    let comm1 = y1 * x1 - x1 * y1;
    let comm2 = x2 * y2 - y2 * x2;
    let residual = expect(&(b * b), psi) - c(4.0) - expect(&comm1.kronecker(&comm2), psi);
    Ok(residual.norm())
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// `U diag(1, -1) U^+` for a unitary `U` from the QR factorization of a complex Gaussian matrix.
pub fn random_dichotomic<R: Rng + ?Sized>(rng: &mut R) -> Qubit {
    let g = Qubit::from_fn(|_, _| gaussian(rng));
    let u = g.qr().q();
    u * Qubit::from_diagonal(&nalgebra::Vector2::new(c(1.0), c(-1.0))) * u.adjoint()
}

pub fn random_state<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitState {
    TwoQubitState::from_fn(|_, _| gaussian(rng)).normalize()
}

/// Largest identity residual over `draws` random observables and states.
pub fn chsh_random_suite<R: Rng + ?Sized>(rng: &mut R, draws: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..draws {
        let (x1, y1) = (random_dichotomic(rng), random_dichotomic(rng));
        let (x2, y2) = (random_dichotomic(rng), random_dichotomic(rng));
        let psi = random_state(rng);
        worst = worst.max(chsh_identity_check(&x1, &y1, &x2, &y2, &psi)?);
    }
    Ok(worst)
}

/// `(|01> - |10>)/sqrt 2`.
pub fn singlet() -> TwoQubitState {
    TwoQubitState::new(c(0.0), c(FRAC_1_SQRT_2), c(-FRAC_1_SQRT_2), c(0.0))
}

/// `cos(theta) sigma_z + sin(theta) sigma_x`.
pub fn spin_observable(theta: f64) -> Qubit {
    let (s, co) = theta.sin_cos();
    Qubit::new(c(co), c(s), c(s), c(-co))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChshOptimum {
    pub value: f64,
    /// Measurement angles of `X1, Y1, X2, Y2` in the x-z plane.
    pub angles: [f64; 4],
    pub sweeps: usize,
}

fn chsh_value(angles: &[f64; 4], psi: &TwoQubitState) -> f64 {
    let [a, b, c2, d] = angles.map(spin_observable);
    expect(&chsh_operator(&a, &b, &c2, &d), psi).re
}

/// Maximize `<B>` in the singlet over planar spin observables.
///
/// `<B>` is `A cos(theta) + B sin(theta) + C` in each angle separately, so every
/// coordinate step jumps to the exact one-dimensional maximizer.
pub fn optimize_singlet_chsh<R: Rng + ?Sized>(rng: &mut R) -> ChshOptimum {
    let psi = singlet();
    let mut angles: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.0..std::f64::consts::TAU));
    let mut value = chsh_value(&angles, &psi);
    let mut sweeps = 0;
    while sweeps < 1000 {
        sweeps += 1;
        for k in 0..4 {
            let at = |t: f64, angles: &[f64; 4]| {
                let mut trial = *angles;
                trial[k] = t;
                chsh_value(&trial, &psi)
            };
            let f0 = at(0.0, &angles);
            let f1 = at(std::f64::consts::FRAC_PI_2, &angles);
            let f2 = at(std::f64::consts::PI, &angles);
            let offset = 0.5 * (f0 + f2);
            angles[k] = (f1 - offset).atan2(f0 - offset);
        }
        let next = chsh_value(&angles, &psi);
        let done = (next - value).abs() < 1e-15;
        value = next;
        if done {
            break;
        }
    }
    ChshOptimum { value, angles, sweeps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_observables_are_dichotomic() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            assert!(check_dichotomic("O", &random_dichotomic(&mut rng)).is_ok());
        }
    }

    #[test]
    fn commuting_pairs_give_four() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let (x1, x2) = (random_dichotomic(&mut rng), random_dichotomic(&mut rng));
        let psi = random_state(&mut rng);
        let b = chsh_operator(&x1, &x1, &x2, &x2);
        assert!((expect(&(b * b), &psi) - 4.0).norm() < 1e-13);
        assert!(chsh_identity_check(&x1, &x1, &x2, &x2, &psi).unwrap() < 1e-13);
    }

    #[test]
    fn identity_holds_for_random_draws() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        assert!(chsh_random_suite(&mut rng, 1000).unwrap() < 1e-12);
    }

    #[test]
    fn singlet_reaches_cirelson_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let opt = optimize_singlet_chsh(&mut rng);
        assert!((opt.value - 2.0 * std::f64::consts::SQRT_2).abs() < 1e-6, "{opt:?}");
    }

    #[test]
    fn rejects_non_dichotomic() {
        let half = Qubit::identity() * c(0.5);
        let psi = singlet();
        assert!(chsh_identity_check(&half, &half, &half, &half, &psi).is_err());
    }
}
