//! Classical Gamma function in log form with explicit sign tracking.
//!
//! Everything Gamma-shaped in this crate goes through `ln_gamma_signed` and is
//! exponentiated once at the end, so products like `Gamma_Omega` stay finite
//! well past partition weight 30.

use crate::error::{Error, Result};

/// Lanczos coefficients (g = 7, n = 9), the same table used by the GNU
/// Scientific Library.
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && (x - x.round()).abs() < 1e-12
}

/// ln|Gamma(x)| for x > 0 via the Lanczos series.
fn ln_gamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let z = x - 1.0;
    let mut t = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        t += c / (z + i as f64);
    }
    let w = z + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * w.ln() - w + t.ln()
}

/// `(ln|Gamma(x)|, sign)` for any non-pole `x`; reflection handles `x < 0.5`.
pub fn ln_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if is_nonpositive_integer(x) {
        return Err(Error::PoleError(x));
    }
    if x >= 0.5 {
        return Ok((ln_gamma_pos(x), 1.0));
    }
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    let s = (std::f64::consts::PI * x).sin();
    let (lg, _) = ln_gamma_signed(1.0 - x)?;
    Ok((
        std::f64::consts::PI.ln() - s.abs().ln() - lg,
        s.signum(),
    ))
}

/// Gamma(x) for non-pole `x`.
pub fn gamma(x: f64) -> Result<f64> {
    let (lg, sign) = ln_gamma_signed(x)?;
    Ok(sign * lg.exp())
}

/// Classical rising factorial `(a)_k = a (a+1) ... (a+k-1)`, multiplied left
/// to right so results are reproducible exactly.
pub fn rising(a: f64, k: u32) -> f64 {
    let mut p = 1.0;
    for i in 0..k {
        p *= a + i as f64;
    }
    p
}

/// `(a)_k` for a possibly negative integer index, `(a)_{-k} = 1/(a-k)_k`.
/// Returns `None` when the needed factor vanishes.
pub fn rising_signed(a: f64, k: i64) -> Option<f64> {
    if k >= 0 {
        Some(rising(a, k as u32))
    } else {
        let denom = rising(a + k as f64, (-k) as u32);
        if denom == 0.0 {
            None
        } else {
            Some(1.0 / denom)
        }
    }
}
