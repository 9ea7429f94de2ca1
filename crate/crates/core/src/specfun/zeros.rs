use nalgebra::DMatrix;

use super::polynomial::laguerre_with_derivative;
use crate::error::{Error, Result};

pub const MAX_ZEROS_DEGREE: usize = 100;

/// The `m` zeros of `L_m`, strictly increasing.
///
/// Initial values are the eigenvalues of the symmetric Jacobi matrix of the
/// Laguerre recurrence (diagonal `2i+1`, off-diagonal `-(i+1)`); each is then
/// polished by Newton steps on the recurrence itself.
pub fn laguerre_zeros(m: usize) -> Result<Vec<f64>> {
    if m == 0 || m > MAX_ZEROS_DEGREE {
        return Err(Error::Domain(format!(
            "laguerre_zeros: degree {m} outside 1..={MAX_ZEROS_DEGREE}"
        )));
    }
    let jacobi = DMatrix::from_fn(m, m, |i, j| {
        if i == j {
            2.0 * i as f64 + 1.0
        } else if i + 1 == j || j + 1 == i {
            -(i.max(j) as f64)
        } else {
            0.0
        }
    });
    let mut roots: Vec<f64> = jacobi.symmetric_eigenvalues().iter().copied().collect();
    roots.sort_by(f64::total_cmp);

    for (index, root) in roots.iter_mut().enumerate() {
        let mut x = *root;
        for _ in 0..8 {
            let (value, deriv) = laguerre_with_derivative(m, x)?;
            if deriv == 0.0 {
                break;
            }
            let step = value / deriv;
            x -= step;
            if step.abs() <= 4.0 * f64::EPSILON * x.abs() {
                break;
            }
        }
        let (value, deriv) = laguerre_with_derivative(m, x)?;
        if !x.is_finite() || value.abs() >= 1e-11 * deriv.abs().max(1.0) {
            return Err(Error::Numerical {
                message: format!("laguerre_zeros: root {index} of L_{m} failed to converge (residual {value:e})"),
                estimate: Some(x),
                error: Some(value.abs()),
            });
        }
        *root = x;
    }
    if let Some(index) = roots.windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::Numerical {
            message: format!("laguerre_zeros: roots {index} and {} of L_{m} coincide", index + 1),
            estimate: Some(roots[index]),
            error: None,
        });
    }
    Ok(roots)
}
