//! Independent numerical oracles shared by the integration tests.
//!
//! Nothing here calls into the crate: the Hermite/Laguerre evaluations,
//! Gauss-Legendre nodes and the adaptive 2D quadrature are written from
//! scratch so that agreement with the library is a real cross-check.

#![allow(dead_code)]

use std::f64::consts::PI;

/// `L_m(u)` from the explicit coefficient expansion; fine for `m <= 12`.
pub fn laguerre_series(m: usize, u: f64) -> f64 {
    let mut total = 0.0;
    let mut term = 1.0;
    // term_j = (-1)^j C(m, j) u^j / j!
    for j in 0..=m {
        if j > 0 {
            term *= -u * (m + 1 - j) as f64 / (j * j) as f64;
        }
        total += term;
    }
    total
}

/// `W_m(q, p) = (-1)^m L_m(2 x^2) e^{-x^2} / pi`.
pub fn wigner(m: usize, q: f64, p: f64) -> f64 {
    let s = q * q + p * p;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    sign * laguerre_series(m, 2.0 * s) * (-s).exp() / PI
}

/// Normalized oscillator eigenfunction `psi_m(q)`, by upward recurrence.
pub fn hermite_function(m: usize, q: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25) * (-0.5 * q * q).exp();
    for n in 0..m {
        let next = (2.0 / (n as f64 + 1.0)).sqrt() * q * cur - (n as f64 / (n as f64 + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pm) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule.reverse();
    rule
}

pub struct Adaptive {
    coarse: Vec<(f64, f64)>,
    fine: Vec<(f64, f64)>,
}

impl Adaptive {
    pub fn new() -> Self {
        Adaptive { coarse: gauss_legendre(7), fine: gauss_legendre(15) }
    }

    fn apply(rule: &[(f64, f64)], f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> f64 {
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        rule.iter().map(|&(x, w)| w * f(mid + half * x)).sum::<f64>() * half
    }

    /// Recursive bisection until a 7-point and a 15-point rule agree locally.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
        self.recurse(&mut f, a, b, tol, 0)
    }

    fn recurse(&self, f: &mut impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64, depth: usize) -> f64 {
        if b <= a {
            return 0.0;
        }
        let fine = Self::apply(&self.fine, f, a, b);
        let coarse = Self::apply(&self.coarse, f, a, b);
        if (fine - coarse).abs() <= tol || depth > 40 {
            return fine;
        }
        let mid = 0.5 * (a + b);
        self.recurse(f, a, mid, 0.5 * tol, depth + 1) + self.recurse(f, mid, b, 0.5 * tol, depth + 1)
    }

    /// Sum over consecutive pieces of `breaks`.
    pub fn integrate_pieces(&self, mut f: impl FnMut(f64) -> f64, breaks: &[f64], tol: f64) -> f64 {
        let n = breaks.len().saturating_sub(1).max(1) as f64;
        breaks.windows(2).map(|w| self.recurse(&mut f, w[0], w[1], tol / n, 0)).sum()
    }
}

/// Sign changes of `f` on `[a, b]`, located by a uniform scan and bisection.
pub fn sign_changes(f: impl Fn(f64) -> f64, a: f64, b: f64, steps: usize) -> Vec<f64> {
    let h = (b - a) / steps as f64;
    let mut roots = Vec::new();
    let mut x0 = a;
    let mut f0 = f(a);
    for i in 1..=steps {
        let x1 = a + h * i as f64;
        let f1 = f(x1);
        if f0 * f1 < 0.0 {
            let (mut lo, mut hi, mut flo) = (x0, x1, f0);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if fm * flo <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}

/// Half-width of the box outside which Fock-state quantities are negligible.
pub fn extent(m: usize) -> f64 {
    (((2 * m + 1) as f64).sqrt() + 5.0).max(6.0)
}

/// `int_{disk(R)} W_m dq dp` by iterated Cartesian quadrature over the quarter disk.
pub fn disk_integral(m: usize, radius: f64, tol: f64) -> f64 {
    let quad = Adaptive::new();
    let inner = |q: f64| {
        let top = (radius * radius - q * q).max(0.0).sqrt();
        quad.integrate(|p| wigner(m, q, p), 0.0, top, 0.1 * tol)
    };
    4.0 * quad.integrate(inner, 0.0, radius, 0.25 * tol)
}

/// `int |W_m| dq dp` over the plane by iterated Cartesian quadrature.
///
/// Sign changes are located numerically along each line, first along the
/// `q` axis for the outer integral and then along `p` for each inner one.
pub fn abs_wigner_integral(m: usize, tol: f64) -> f64 {
    let quad = Adaptive::new();
    let l = extent(m);
    let mut outer = vec![0.0];
    outer.extend(sign_changes(|q| wigner(m, q, 0.0), 0.0, l, 4000));
    outer.push(l);
    let inner = |q: f64| {
        let mut breaks = vec![0.0];
        breaks.extend(sign_changes(|p| wigner(m, q, p), 0.0, l, 2000));
        breaks.push(l);
        quad.integrate_pieces(|p| wigner(m, q, p).abs(), &breaks, 0.1 * tol)
    };
    4.0 * quad.integrate_pieces(inner, &outer, 0.25 * tol)
}

/// `Smb[|m><m|](q, p) = int psi_m(q + y/2) psi_m(q - y/2) e^{-i p y} dy`, by direct quadrature.
pub fn fock_symbol_direct(m: usize, q: f64, p: f64) -> f64 {
    let quad = Adaptive::new();
    let reach = 2.0 * (extent(m) + q.abs());
    let breaks: Vec<f64> = (0..=64).map(|i| -reach + 2.0 * reach * i as f64 / 64.0).collect();
    quad.integrate_pieces(
        |y| hermite_function(m, q + 0.5 * y) * hermite_function(m, q - 0.5 * y) * (p * y).cos(),
        &breaks,
        1e-13,
    )
}

/// Deterministic pseudo-random points in `[-width, width]^2` (splitmix64).
pub fn test_points(count: usize, width: f64, seed: u64) -> Vec<(f64, f64)> {
    let mut state = seed;
    let mut next = || {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        (z >> 11) as f64 / (1u64 << 53) as f64
    };
    (0..count).map(|_| (width * (2.0 * next() - 1.0), width * (2.0 * next() - 1.0))).collect()
}
