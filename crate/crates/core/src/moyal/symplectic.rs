use nalgebra::{DMatrix, DVector};

/// The standard symplectic form `J = [[0, -I], [I, 0]]` on `R^(2n)`, acting on
/// vectors laid out as `(q_1..q_n, p_1..p_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticForm {
    pub modes: usize,
}

impl SymplecticForm {
    pub fn new(modes: usize) -> Self {
        SymplecticForm { modes }
    }

    pub fn matrix(&self) -> DMatrix<f64> {
        let n = self.modes;
        DMatrix::from_fn(2 * n, 2 * n, |i, j| {
            if i < n && j == i + n {
                -1.0
            } else if i >= n && j + n == i {
                1.0
            } else {
                0.0
            }
        })
    }

    pub fn apply(&self, v: &DVector<f64>) -> DVector<f64> {
        let n = self.modes;
        DVector::from_fn(2 * n, |i, _| if i < n { -v[i + n] } else { v[i - n] })
    }

    /// `x . J y`.
    pub fn pairing(&self, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
        x.dot(&self.apply(y))
    }
}
