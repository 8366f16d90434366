//! Structure constants of a symmetric cone and the combinatorial special
//! functions attached to them: the cone Gamma function, the multivariate
//! Pochhammer symbol, K-type dimensions and the Wallach set.
//!
//! Everything is keyed off the triple `(r, d, n)` with `n = r + r(r-1) d/2`:
//! the rank, the common dimension of the off-diagonal Peirce spaces and the
//! dimension of the ambient Jordan algebra.

use crate::error::{Error, Result};
use crate::gamma::{ln_gamma_signed, rising, rising_signed};
use crate::partition::Partition;

/// The supported simple Euclidean Jordan algebra families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `V = R`, the half-line cone.
    RealLine,
    /// `V = Sym(r, R)`, cone of positive definite symmetric matrices, d = 1.
    RealSym,
    /// `V = Herm(r, C)`, cone of positive definite Hermitian matrices, d = 2.
    ComplexHerm,
    /// `V = R^n` with the Lorentz (light-cone) product, r = 2, d = n - 2.
    Lorentz,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::RealLine => "line",
            Family::RealSym => "realsym",
            Family::ComplexHerm => "complexherm",
            Family::Lorentz => "lorentz",
        }
    }
}

/// Structure constants `(r, d, n)` of a symmetric cone together with its
/// family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConeParams {
    rank: usize,
    peirce_d: u32,
    dim_n: usize,
    family: Family,
}

impl ConeParams {
    /// `V = R`.
    pub fn real_line() -> Self {
        ConeParams { rank: 1, peirce_d: 1, dim_n: 1, family: Family::RealLine }
    }

    /// `V = Sym(r, R)`, `n = r(r+1)/2`.
    pub fn real_sym(r: usize) -> Self {
        assert!(r >= 1);
        ConeParams {
            rank: r,
            peirce_d: 1,
            dim_n: r * (r + 1) / 2,
            family: Family::RealSym,
        }
    }

    /// `V = Herm(r, C)`, `n = r^2`.
    pub fn complex_herm(r: usize) -> Self {
        assert!(r >= 1);
        ConeParams {
            rank: r,
            peirce_d: 2,
            dim_n: r * r,
            family: Family::ComplexHerm,
        }
    }

    /// Lorentz cone in `R^n`, `n >= 3`.
    pub fn lorentz(n: usize) -> Self {
        assert!(n >= 3);
        ConeParams {
            rank: 2,
            peirce_d: (n - 2) as u32,
            dim_n: n,
            family: Family::Lorentz,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn peirce_d(&self) -> u32 {
        self.peirce_d
    }

    pub fn dim_n(&self) -> usize {
        self.dim_n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `d/2` as a float; the basic shift between consecutive Gamma factors.
    pub fn half_d(&self) -> f64 {
        f64::from(self.peirce_d) / 2.0
    }

    /// `n/r = 1 + (r-1) d/2`, the Pochhammer base of the K-type norm formulas.
    pub fn n_over_r(&self) -> f64 {
        self.dim_n as f64 / self.rank as f64
    }

    /// Checks `n = r + r(r-1) d/2` and the per-family constraints.
    pub fn validate(&self) -> bool {
        let r = self.rank;
        let n = r + r * (r - 1) * self.peirce_d as usize / 2;
        let family_ok = match self.family {
            Family::RealLine => self.rank == 1,
            Family::RealSym => self.peirce_d == 1,
            Family::ComplexHerm => self.peirce_d == 2,
            Family::Lorentz => self.rank == 2 && self.peirce_d as usize == self.dim_n - 2,
        };
        // r(r-1)d must be even for n to be integral; all four families satisfy it
        n == self.dim_n && family_ok
    }

    pub fn label(&self) -> String {
        match self.family {
            Family::RealLine => "line".to_string(),
            Family::RealSym => format!("realsym:{}", self.rank),
            Family::ComplexHerm => format!("complexherm:{}", self.rank),
            Family::Lorentz => format!("lorentz:{}", self.dim_n),
        }
    }
}

/// Position of a parameter in the Wallach set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WallachPoint {
    /// `nu = k d/2` for `k in {0, ..., r-1}`.
    Discrete(usize),
    /// `nu > (r-1) d/2`.
    Continuous,
    /// Not in the Wallach set.
    Outside,
}

/// Classifies `nu` against the Wallach set of the cone.
pub fn wallach_classify(cone: &ConeParams, nu: f64) -> WallachPoint {
    let hd = cone.half_d();
    for k in 0..cone.rank() {
        if (nu - k as f64 * hd).abs() < 1e-12 {
            return WallachPoint::Discrete(k);
        }
    }
    if nu > (cone.rank() - 1) as f64 * hd {
        WallachPoint::Continuous
    } else {
        WallachPoint::Outside
    }
}

/// The Gamma function of the cone,
/// `Gamma_Omega(nu) = (2 pi)^{(n-r)/2} prod_j Gamma(nu - (j-1) d/2)`.
///
/// Computed in log form and exponentiated once.
pub fn gamma_omega(cone: &ConeParams, nu: f64) -> Result<f64> {
    gamma_omega_shifted(cone, nu, &Partition::zero())
}

/// `Gamma_Omega(nu + m) = (2 pi)^{(n-r)/2} prod_j Gamma(nu + m_j - (j-1) d/2)`.
pub fn gamma_omega_shifted(cone: &ConeParams, nu: f64, m: &Partition) -> Result<f64> {
    let hd = cone.half_d();
    let mut log = 0.5 * (cone.dim_n() - cone.rank()) as f64 * (2.0 * std::f64::consts::PI).ln();
    let mut sign = 1.0;
    for j in 0..cone.rank() {
        let (lg, s) = ln_gamma_signed(nu + f64::from(m.part(j)) - j as f64 * hd)?;
        log += lg;
        sign *= s;
    }
    Ok(sign * log.exp())
}

/// The multivariate Pochhammer symbol
/// `(nu)_m = prod_j (nu - (j-1) d/2)_{m_j}`, left-to-right factors.
pub fn pochhammer(cone: &ConeParams, nu: f64, m: &Partition) -> f64 {
    let hd = cone.half_d();
    let mut p = 1.0;
    for j in 0..m.len() {
        p *= rising(nu - j as f64 * hd, m.part(j));
    }
    p
}

/// Dimension `d_m` of the K-type indexed by `m`, from the pole-free product
/// form
/// `prod_{i<j} ((i-j)d/2 + m_j - m_i)(m_j - m_i + (i-j-1)d/2 + 1)_{d-1}
///  / ((i-j)d/2)((i-j-1)d/2 + 1)_{d-1}`.
///
/// The value is a positive integer up to round-off.
pub fn dim_km(cone: &ConeParams, m: &Partition) -> f64 {
    let r = cone.rank();
    let d = cone.peirce_d();
    let hd = cone.half_d();
    let mut out = 1.0;
    for i in 0..r {
        for j in (i + 1)..r {
            let diff = f64::from(m.part(j)) - f64::from(m.part(i));
            let ij = i as f64 - j as f64;
            let num = (ij * hd + diff) * rising(diff + (ij - 1.0) * hd + 1.0, d - 1);
            let den = (ij * hd) * rising((ij - 1.0) * hd + 1.0, d - 1);
            out *= num / den;
        }
    }
    out
}

/// `d_m` from the c-function quotient (the Pochhammer form with negative
/// indices, `(a)_{-k} = 1/(a-k)_k`). Slower and pole-prone; kept as an
/// independent cross-check of `dim_km`.
pub fn dim_km_quotient_form(cone: &ConeParams, m: &Partition) -> Option<f64> {
    let r = cone.rank();
    let hd = cone.half_d();
    let mut out = 1.0;
    for i in 0..r {
        for j in (i + 1)..r {
            let k = i64::from(m.part(j)) - i64::from(m.part(i));
            let ij = i as f64 - j as f64;
            let diff = f64::from(m.part(i)) - f64::from(m.part(j));
            let num = rising_signed((ij + 1.0) * hd, k)?
                * rising_signed(diff + (-ij) * hd, k)?;
            let den = rising_signed(ij * hd, k)?
                * rising_signed(diff + (1.0 - ij) * hd, k)?;
            out *= num / den;
        }
    }
    Some(out)
}

/// The quotient `d_{m+e_j} / d_m` from its own displayed product,
/// `prod_{i != j} ((i-j)d/2 + m_j - m_i + 1)(m_j - m_i + (i-j+1)d/2)
///  / ((i-j)d/2 + m_j - m_i)(m_j - m_i + (i-j-1)d/2 + 1)`.
///
/// `j` is 0-based. Errors with `InvalidStep` when `m + e_j` is not a
/// partition.
pub fn dim_ratio(cone: &ConeParams, m: &Partition, j: usize) -> Result<f64> {
    if j >= cone.rank() || m.up(j).is_none() {
        return Err(Error::InvalidStep { j: j + 1, sign: '+' });
    }
    let hd = cone.half_d();
    let mut out = 1.0;
    for i in 0..cone.rank() {
        if i == j {
            continue;
        }
        let diff = f64::from(m.part(j)) - f64::from(m.part(i));
        let ij = i as f64 - j as f64;
        let num = (ij * hd + diff + 1.0) * (diff + (ij + 1.0) * hd);
        let den = (ij * hd + diff) * (diff + (ij - 1.0) * hd + 1.0);
        out *= num / den;
    }
    Ok(out)
}
