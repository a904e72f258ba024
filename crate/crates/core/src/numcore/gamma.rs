//! Gamma-family scalar functions.
//!
//! `gamma` and `log_gamma` are thin checked wrappers over the musl-derived
//! routines in `libm` (rational/Stirling approximation for positive
//! arguments, reflection for negative ones). The wrappers add pole and
//! overflow reporting; `rgamma` is the total reciprocal with exact zeros at
//! the poles, which is what series with shifted gamma arguments need.

use crate::error::{domain, Error, Result};

/// Largest argument for which `Γ(x)` is finite in `f64`.
pub const GAMMA_MAX_ARG: f64 = 171.624_376_956_302_7;

/// True when `x` is `0, -1, -2, …`.
#[inline]
pub fn is_gamma_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// `Γ(x)` for any real non-pole argument.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(domain("gamma of NaN"));
    }
    if is_gamma_pole(x) {
        return Err(domain(format!("gamma has a pole at x = {x}")));
    }
    let g = libm::tgamma(x);
    if !g.is_finite() {
        return Err(Error::Overflow(format!("gamma({x}) exceeds f64 range")));
    }
    Ok(g)
}

/// `1/Γ(x)`, defined everywhere, exactly zero at the poles of `Γ`.
pub fn rgamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_gamma_pole(x) {
        return 0.0;
    }
    if x > GAMMA_MAX_ARG {
        return (-libm::lgamma(x)).exp();
    }
    if x < -GAMMA_MAX_ARG {
        // Γ(x)Γ(1-x) = π / sin(πx); Γ(1-x) is huge, so go through logs.
        let (lg, _) = libm::lgamma_r(1.0 - x);
        let s = sin_pi(x);
        return s.signum() * (libm::log(s.abs()) + lg - std::f64::consts::PI.ln()).exp();
    }
    1.0 / libm::tgamma(x)
}

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(libm::lgamma(x))
}

/// `(ln |Γ(x)|, sign Γ(x))`. At a pole returns `(+∞, 0.0)`.
pub fn log_abs_gamma(x: f64) -> (f64, f64) {
    if is_gamma_pole(x) {
        return (f64::INFINITY, 0.0);
    }
    let (lg, sign) = libm::lgamma_r(x);
    (lg, if sign < 0 { -1.0 } else { 1.0 })
}

/// `sin(πx)` with exact zeros at integers.
fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).floor();
    if r == 0.0 || r == 1.0 {
        0.0
    } else {
        (std::f64::consts::PI * r).sin()
    }
}

/// Rising factorial `(a)_n = a(a+1)⋯(a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    if n == 0 {
        return 1.0;
    }
    // Iterated product is exact to a few ulp for moderate n and is the only
    // safe route when the sequence crosses zero or a gamma pole.
    if n <= 64 || a <= 0.0 {
        return (0..n).fold(1.0, |acc, k| acc * (a + f64::from(k)));
    }
    let hi = a + f64::from(n);
    (libm::lgamma(hi) - libm::lgamma(a)).exp()
}

/// `ln (a)_n` for `a > 0`.
pub fn log_pochhammer(a: f64, n: u32) -> f64 {
    if n == 0 {
        return 0.0;
    }
    if n <= 16 {
        return pochhammer(a, n).ln();
    }
    libm::lgamma(a + f64::from(n)) - libm::lgamma(a)
}

/// `ln B(x, y)` for `x, y > 0`.
pub fn log_beta(x: f64, y: f64) -> f64 {
    libm::lgamma(x) + libm::lgamma(y) - libm::lgamma(x + y)
}
