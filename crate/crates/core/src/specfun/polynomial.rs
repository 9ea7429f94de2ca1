//! Hermite and Laguerre polynomials by forward three-term recurrence.

use crate::error::{Error, Result};

/// Highest polynomial degree accepted by the evaluators.
pub const MAX_DEGREE: usize = 200;

/// Above this degree the Hermite recurrence runs on normalized values and the
/// norm is restored at the end.
const HERMITE_SCALED_FROM: usize = 40;

fn check_degree(name: &str, m: usize) -> Result<()> {
    if m > MAX_DEGREE {
        return Err(Error::Domain(format!(
            "{name}: degree {m} exceeds the supported maximum {MAX_DEGREE}"
        )));
    }
    Ok(())
}

/// `ln(m!)` by direct summation; exact enough for `m <= MAX_DEGREE + a few`.
pub(crate) fn ln_factorial(m: usize) -> f64 {
    (2..=m).map(|k| (k as f64).ln()).sum()
}

/// Physicists' Hermite polynomial `H_m(q)`.
pub fn hermite_eval(m: usize, q: f64) -> Result<f64> {
    check_degree("hermite_eval", m)?;
    if m <= HERMITE_SCALED_FROM {
        let (mut prev, mut cur) = (0.0, 1.0);
        for k in 0..m {
            let next = 2.0 * q * cur - 2.0 * k as f64 * prev;
            prev = cur;
            cur = next;
        }
        return Ok(cur);
    }
    // h_k = H_k / sqrt(2^k k!)
    let h = hermite_normalized(m, q);
    let log_norm = 0.5 * (m as f64 * std::f64::consts::LN_2 + ln_factorial(m));
    let value = h * log_norm.exp();
    if !value.is_finite() {
        return Err(Error::Domain(format!(
            "hermite_eval: H_{m}({q}) overflows double precision"
        )));
    }
    Ok(value)
}

/// `H_m(q) / sqrt(2^m m!)` via the normalized recurrence.
fn hermite_normalized(m: usize, q: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..m {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * q * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Normalized oscillator eigenfunction `<q|m> = e^{-q^2/2} H_m(q) / sqrt(2^m m! sqrt(pi))`.
pub fn hermite_function(m: usize, q: f64) -> Result<f64> {
    check_degree("hermite_function", m)?;
    let pi_quarter = std::f64::consts::PI.powf(-0.25);
    let mut prev = 0.0;
    let mut cur = pi_quarter * (-0.5 * q * q).exp();
    for k in 0..m {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * q * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Laguerre polynomial `L_m(u)`.
pub fn laguerre_eval(m: usize, u: f64) -> Result<f64> {
    check_degree("laguerre_eval", m)?;
    Ok(laguerre_pair(m, u).1)
}

/// `(L_{m-1}(u), L_m(u))`, with `L_{-1} = 0`.
pub(crate) fn laguerre_pair(m: usize, u: f64) -> (f64, f64) {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..m {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 - u) * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    (prev, cur)
}

/// `L_m(u)` together with its derivative `L_m'(u)`.
pub fn laguerre_with_derivative(m: usize, u: f64) -> Result<(f64, f64)> {
    check_degree("laguerre_with_derivative", m)?;
    let (prev, cur) = laguerre_pair(m, u);
    if m == 0 {
        return Ok((cur, 0.0));
    }
    let deriv = if u.abs() > 1e-300 {
        m as f64 * (cur - prev) / u
    } else {
        // L_m'(0) = -m
        -(m as f64)
    };
    Ok((cur, deriv))
}

/// Associated Laguerre polynomial `L_m^k(u)`.
pub fn laguerre_assoc_eval(m: usize, k: usize, u: f64) -> Result<f64> {
    check_degree("laguerre_assoc_eval", m)?;
    check_degree("laguerre_assoc_eval (order)", k)?;
    Ok(laguerre_assoc_unchecked(m, k, u))
}

fn laguerre_assoc_unchecked(m: usize, k: usize, u: f64) -> f64 {
    let kf = k as f64;
    let (mut prev, mut cur) = (0.0, 1.0);
    for j in 0..m {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + kf - u) * cur - (jf + kf) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}
