//! Generalized binomial coefficients, Laguerre polynomials `L_m^nu` and
//! Laguerre functions `ell_m^nu`, together with the three-term recurrence
//! data of the trace multiplication operator.
//!
//! The binomial coefficients are defined by the expansion
//! `Phi_m(e + x) = sum_{|n| <= |m|} (m choose n) Phi_n(x)` and are produced
//! exactly: the shift `x -> e + x` is carried out in the monomial basis and
//! the result is resolved against the Jack basis weight by weight with a
//! dominance-triangular elimination. Zero coefficients are exact zeros and
//! are dropped, which is what makes the discrete Wallach policy decidable.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cone::{dim_km, pochhammer, wallach_classify, ConeParams, WallachPoint};
use crate::error::{Error, Result};
use crate::jordan::{jtrace, JordanElement, JordanElementC};
use crate::partition::{enumerate_partitions, Partition};
use crate::spherical::{jack_coeffs, weight_limit, PowerSums};
use crate::symfunc::{shift_by_ones, MonoPoly};

/// One row of generalized binomial coefficients: the nonzero `(m choose n)`
/// for a fixed `m`, keyed by `n`.
pub type BinomialRow = Vec<(Partition, f64)>;

type Key = (usize, u32, Partition);

static BINOMIAL_ROWS: LazyLock<RwLock<HashMap<Key, Arc<BinomialRow>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// The table of generalized binomial coefficients up to a weight bound.
pub struct BinomialTable {
    pub cone: ConeParams,
    pub max_weight: u32,
    pub rows: HashMap<Partition, Arc<BinomialRow>>,
}

/// Builds (or fetches) the full binomial table for weights up to `max_weight`.
pub fn binomial_table(cone: &ConeParams, max_weight: u32) -> Result<BinomialTable> {
    if max_weight > weight_limit() {
        return Err(Error::WeightLimitExceeded {
            got: max_weight as usize,
            max: weight_limit() as usize,
        });
    }
    let mut rows = HashMap::new();
    for m in enumerate_partitions(cone.rank(), max_weight) {
        rows.insert(m.clone(), binomial_row(cone, &m)?);
    }
    Ok(BinomialTable {
        cone: *cone,
        max_weight,
        rows,
    })
}

/// The nonzero coefficients `(m choose n)`, cached by `(r, d, m)`.
pub fn binomial_row(cone: &ConeParams, m: &Partition) -> Result<Arc<BinomialRow>> {
    let key: Key = (cone.rank(), cone.peirce_d(), m.clone());
    if let Some(hit) = BINOMIAL_ROWS.read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let row = Arc::new(build_binomial_row(cone, m)?);
    BINOMIAL_ROWS.write().unwrap().insert(key, row.clone());
    Ok(row)
}

fn build_binomial_row(cone: &ConeParams, m: &Partition) -> Result<BinomialRow> {
    let r = cone.rank();
    // Phi_m(e + x) in the monomial basis, exactly
    let entry = jack_coeffs(cone, m)?;
    let mut shifted = MonoPoly::new();
    for (mu, c) in &entry.monomial {
        for (beta, s) in shift_by_ones(mu, r) {
            let slot = shifted.entry(beta).or_insert_with(BigRational::zero);
            *slot += c * s;
        }
    }
    // resolve against the Jack basis, one weight at a time, eliminating the
    // lexicographically largest remaining monomial (lex refines dominance)
    let mut out = BinomialRow::new();
    for w in 0..=m.weight() {
        let mut component: MonoPoly = shifted
            .iter()
            .filter(|(mu, _)| mu.weight() == w)
            .map(|(mu, c)| (mu.clone(), c.clone()))
            .collect();
        while let Some(nu) = component
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mu, _)| mu.clone())
            .max_by(|a, b| a.canonical_cmp(b))
        {
            let phi_nu = jack_coeffs(cone, &nu)?;
            let lead = phi_nu
                .monomial
                .iter()
                .find(|(mu, _)| mu == &nu)
                .map(|(_, c)| c.clone())
                .expect("Jack leading coefficient");
            let coeff = component.remove(&nu).unwrap() / lead;
            for (mu, c) in &phi_nu.monomial {
                if mu == &nu {
                    continue;
                }
                let slot = component.entry(mu.clone()).or_insert_with(BigRational::zero);
                *slot -= &coeff * c;
            }
            if !coeff.is_zero() {
                out.push((nu, coeff.to_f64().expect("finite")));
            }
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(out)
}

/// `(nu)_n = 0` exactly when `nu` sits at a discrete Wallach point `k d/2`
/// and `n` has a nonzero part past position `k`.
fn pochhammer_vanishes(cone: &ConeParams, nu: f64, n: &Partition) -> bool {
    match wallach_classify(cone, nu) {
        WallachPoint::Discrete(k) => n.part(k) > 0,
        _ => pochhammer(cone, nu, n) == 0.0,
    }
}

/// Generalized Laguerre polynomial
/// `L_m^nu(x) = (nu)_m sum_n (m choose n) Phi_n(-x) / (nu)_n`.
///
/// At discrete Wallach points the value is defined only when every
/// contributing `(nu)_n` is nonzero (all contributing `n` vanish past the
/// rank bound); otherwise `WallachSingularity`.
pub fn laguerre_poly(
    cone: &ConeParams,
    nu: f64,
    m: &Partition,
    x: &JordanElementC,
) -> Result<Complex64> {
    // the alternating sum cancels heavily at higher ranks of m; on the line
    // every input is a dyadic rational, so the sum can be carried out exactly
    // and rounded once
    if let JordanElementC::RealLine(z) = x {
        if z.im == 0.0 {
            return laguerre_rank1_exact(nu, m.weight(), z.re)
                .map(|v| Complex64::new(v, 0.0));
        }
    }
    let row = binomial_row(cone, m)?;
    let minus_x = x.scale(Complex64::new(-1.0, 0.0));
    let ps = PowerSums::new(&minus_x, m.weight());
    laguerre_poly_ps(cone, nu, m, &row, &ps)
}

/// Exact rational evaluation of
/// `(nu)_m sum_k C(m,k) (-x)^k / (nu)_k` on the line.
fn laguerre_rank1_exact(nu: f64, m: u32, x: f64) -> Result<f64> {
    use num_bigint::BigInt;
    let nu_q = BigRational::from_float(nu)
        .ok_or(Error::PoleError(nu))?;
    let x_q = BigRational::from_float(x).ok_or(Error::PoleError(x))?;
    let one = BigRational::from_integer(BigInt::from(1));
    // rising factorials (nu)_k, k = 0..=m
    let mut rising = Vec::with_capacity(m as usize + 1);
    rising.push(one.clone());
    for k in 0..m {
        let factor = &nu_q + BigRational::from_integer(BigInt::from(k));
        let next = rising.last().unwrap() * factor;
        rising.push(next);
    }
    let mut sum = BigRational::zero();
    let mut binom = one.clone();
    let mut power = one.clone();
    for k in 0..=m {
        if k > 0 {
            binom = binom * BigRational::from_integer(BigInt::from(m - k + 1))
                / BigRational::from_integer(BigInt::from(k));
            power *= -&x_q;
        }
        if rising[k as usize].is_zero() {
            return Err(Error::WallachSingularity { nu, n: vec![k] });
        }
        sum += &binom * &power / &rising[k as usize];
    }
    let value = &rising[m as usize] * sum;
    Ok(value.to_f64().expect("finite"))
}

/// Shared inner loop: evaluation against precomputed power sums of `-x`.
pub(crate) fn laguerre_poly_ps(
    cone: &ConeParams,
    nu: f64,
    m: &Partition,
    row: &BinomialRow,
    ps_minus_x: &PowerSums,
) -> Result<Complex64> {
    let mut sum = Complex64::ZERO;
    for (n, b) in row {
        if pochhammer_vanishes(cone, nu, n) {
            return Err(Error::WallachSingularity {
                nu,
                n: n.parts().to_vec(),
            });
        }
        let entry = jack_coeffs(cone, n)?;
        let phi = ps_minus_x.eval(&entry);
        sum += Complex64::new(b / pochhammer(cone, nu, n), 0.0) * phi;
    }
    Ok(Complex64::new(pochhammer(cone, nu, m), 0.0) * sum)
}

/// Generalized Laguerre function `ell_m^nu(x) = e^{-tr(x)} L_m^nu(2x)`,
/// real-valued on `V`.
pub fn laguerre_fn(cone: &ConeParams, nu: f64, m: &Partition, x: &JordanElement) -> Result<f64> {
    let xc = x.complexify();
    let two_x = xc.scale(Complex64::new(2.0, 0.0));
    let l = laguerre_poly(cone, nu, m, &two_x)?;
    let tr = jtrace(&xc).re;
    Ok((-tr).exp() * l.re)
}

/// Squared norm `(n/r)_m (nu)_m / d_m` of `ell_m^nu` in the weighted
/// `L^2`-space of the cone; requires `nu` in the continuous Wallach range.
pub fn laguerre_norm_sq(cone: &ConeParams, nu: f64, m: &Partition) -> Result<f64> {
    if nu <= (cone.rank() - 1) as f64 * cone.half_d() {
        return Err(Error::OutsideContinuousWallach(nu));
    }
    Ok(pochhammer(cone, cone.n_over_r(), m) * pochhammer(cone, nu, m) / dim_km(cone, m))
}

/// Coefficients of the recurrence
/// `tr(x) ell_m = a ell_m + sum_j (b_j ell_{m+e_j} + c_j ell_{m-e_j})`.
///
/// `b_j` vanishes exactly when `m + e_j` is not a partition, and `c_j` when
/// `m - e_j` is not, so invalid neighbors never contribute.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceCoeffs {
    pub a: f64,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
}

pub fn recurrence_coeffs(cone: &ConeParams, nu: f64, m: &Partition) -> Result<RecurrenceCoeffs> {
    let r = cone.rank();
    let hd = cone.half_d();
    let a = f64::from(m.weight()) + r as f64 * nu / 2.0;
    let mut b = Vec::with_capacity(r);
    let mut c = Vec::with_capacity(r);
    for j in 0..r {
        let mj = f64::from(m.part(j));
        let mut bj = -0.5;
        let mut cj = -0.5 * (nu + mj - j as f64 * hd - 1.0) * (mj + (r - 1 - j) as f64 * hd);
        for i in 0..r {
            if i == j {
                continue;
            }
            let diff = mj - f64::from(m.part(i));
            let ij = i as f64 - j as f64;
            let den = diff + ij * hd;
            if den.abs() < 1e-12 {
                return Err(Error::DegenerateDenominator { i: i + 1, j: j + 1 });
            }
            bj *= (diff + (ij + 1.0) * hd) / den;
            cj *= (diff + (ij - 1.0) * hd) / den;
        }
        b.push(bj);
        c.push(cj);
    }
    Ok(RecurrenceCoeffs { a, b, c })
}

/// Residual of the recurrence at a cone point, invalid neighbors contributing
/// zero.
pub fn recurrence_residual(
    cone: &ConeParams,
    nu: f64,
    m: &Partition,
    x: &JordanElement,
) -> Result<f64> {
    let coeffs = recurrence_coeffs(cone, nu, m)?;
    let tr = jtrace(&x.complexify()).re;
    let lm = laguerre_fn(cone, nu, m, x)?;
    let mut rhs = coeffs.a * lm;
    for j in 0..cone.rank() {
        if let Some(up) = m.up(j) {
            rhs += coeffs.b[j] * laguerre_fn(cone, nu, &up, x)?;
        }
        if let Some(down) = m.down(j) {
            rhs += coeffs.c[j] * laguerre_fn(cone, nu, &down, x)?;
        }
    }
    Ok((tr * lm - rhs).abs())
}
