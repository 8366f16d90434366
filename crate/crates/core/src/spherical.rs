//! Spherical polynomials `Phi_m`.
//!
//! `Phi_m` is the unique `(K cap L)`-invariant polynomial in its L-module,
//! normalized to `Phi_m(e) = 1`. As a symmetric function of the Jordan-frame
//! eigenvalues it is the Jack polynomial with parameter `alpha = 2/d`,
//! normalized at `(1, ..., 1)`; the Haar-average definition is validated
//! against this realization by the Monte-Carlo oracle `spherical_via_haar`.
//!
//! Coefficients are generated by the dominance-triangular recurrence coming
//! from the Laplace-Beltrami eigenvalue relation, entirely in exact rational
//! arithmetic (`alpha = 2/d` is rational for every supported cone), then
//! converted once into the power-sum basis. Evaluation at an arbitrary
//! complexified argument only needs the traces of Jordan powers, so it stays
//! well-defined where no eigendecomposition exists.

use std::collections::{BTreeMap, HashMap};
use std::io::{BufRead, Write};
use std::sync::{Arc, LazyLock, RwLock};
use std::sync::atomic::{AtomicU32, Ordering};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cone::ConeParams;
use crate::error::{Error, Result};
use crate::jordan::{
    haar_kl_sample_rng, power_sums, quad_apply, sqrt_regularized, JordanElement, JordanElementC,
};
use crate::partition::{partitions_of_weight, Partition};
use crate::symfunc::{monomial_at_ones, monomials_to_power_sums, MonoPoly};

/// Default cap on partition weights; raise it with [`set_weight_limit`].
pub const DEFAULT_WEIGHT_LIMIT: u32 = 40;

static WEIGHT_LIMIT: AtomicU32 = AtomicU32::new(DEFAULT_WEIGHT_LIMIT);

/// Raises or lowers the global weight cap for coefficient generation.
pub fn set_weight_limit(limit: u32) {
    WEIGHT_LIMIT.store(limit, Ordering::Relaxed);
}

pub fn weight_limit() -> u32 {
    WEIGHT_LIMIT.load(Ordering::Relaxed)
}

/// Coefficients of one spherical polynomial: exact monomial-basis expansion
/// (normalized so the value at `(1,...,1)` is one) and its power-sum form.
#[derive(Debug)]
pub struct SymPolyCoeffs {
    pub partition: Partition,
    /// Monomial-basis coefficients, exact; only dominance-compatible entries.
    pub monomial: Vec<(Partition, BigRational)>,
    /// Power-sum expansion: exponent pattern `lambda` (parts <= r) and float
    /// coefficient; what evaluation actually uses.
    pub power: Vec<(Vec<u32>, f64)>,
}

type Key = (usize, u32, Partition);

struct CacheInner {
    entries: HashMap<Key, Arc<SymPolyCoeffs>>,
}

static CACHE: LazyLock<RwLock<CacheInner>> = LazyLock::new(|| {
    RwLock::new(CacheInner {
        entries: HashMap::new(),
    })
});

fn big(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

/// Laplace-Beltrami eigenvalue `rho(kappa) = sum_i kappa_i (kappa_i - 1 - d (i-1))`,
/// an integer; only differences at fixed weight matter.
fn lb_eigenvalue(kappa: &[u32], d: u32) -> i64 {
    kappa
        .iter()
        .enumerate()
        .map(|(i, &k)| i64::from(k) * (i64::from(k) - 1 - i64::from(d) * i as i64))
        .sum()
}

/// Monic (dominance-triangular) Jack coefficients for `kappa` in `r`
/// variables at `alpha = 2/d`, by downward recursion from the leading term.
fn jack_monic(r: usize, d: u32, kappa: &Partition) -> MonoPoly {
    let k = kappa.weight();
    let mut coeffs = MonoPoly::new();
    coeffs.insert(kappa.clone(), BigRational::one());
    if k == 0 {
        return coeffs;
    }
    let rho_kappa = lb_eigenvalue(&kappa.padded(r), d);
    // descending lexicographic order refines descending dominance order, so
    // every mu reachable from lambda is already resolved
    let mut lams = partitions_of_weight(r, k);
    lams.reverse();
    for lam in lams {
        if lam == *kappa || !lam.dominated_by(kappa) {
            continue;
        }
        let lam_pad = lam.padded(r);
        let mut acc = BigRational::zero();
        for i in 0..r {
            for j in (i + 1)..r {
                for t in 1..=lam_pad[j] {
                    let mut v = lam_pad.clone();
                    v[i] += t;
                    v[j] -= t;
                    let weight = i64::from(lam_pad[i]) - i64::from(lam_pad[j]) + 2 * i64::from(t);
                    v.sort_unstable_by(|a, b| b.cmp(a));
                    let mu = Partition::new(&v).expect("sorted");
                    if let Some(cmu) = coeffs.get(&mu) {
                        acc += cmu * big(weight);
                    }
                }
            }
        }
        if acc.is_zero() {
            continue;
        }
        let denom = rho_kappa - lb_eigenvalue(&lam_pad, d);
        debug_assert!(denom > 0, "eigenvalue gap must be positive below kappa");
        let c = acc * big(i64::from(d)) / big(denom);
        coeffs.insert(lam, c);
    }
    coeffs
}

fn build_entry(r: usize, d: u32, m: &Partition) -> SymPolyCoeffs {
    let monic = jack_monic(r, d, m);
    let at_ones: BigRational = monic
        .iter()
        .map(|(mu, c)| c * monomial_at_ones(mu, r))
        .sum();
    debug_assert!(at_ones.is_positive());
    let monomial: Vec<(Partition, BigRational)> = monic
        .into_iter()
        .map(|(mu, c)| (mu, c / &at_ones))
        .collect();
    let power = to_power_basis(r, m.weight(), &monomial);
    SymPolyCoeffs {
        partition: m.clone(),
        monomial,
        power,
    }
}

fn to_power_basis(
    r: usize,
    weight: u32,
    monomial: &[(Partition, BigRational)],
) -> Vec<(Vec<u32>, f64)> {
    if weight == 0 {
        return vec![(Vec::new(), 1.0)];
    }
    let table = monomials_to_power_sums(r, weight);
    let (lambdas, rows) = (&table.0, &table.1);
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); lambdas.len()];
    for (mu, c) in monomial {
        let row = &rows[mu];
        for (slot, v) in acc.iter_mut().zip(row) {
            *slot += c * v;
        }
    }
    lambdas
        .iter()
        .zip(acc)
        .filter(|(_, v)| !v.is_zero())
        .map(|(lam, v)| (lam.parts().to_vec(), v.to_f64().expect("finite")))
        .collect()
}

/// Monomial and power-sum coefficients of `Phi_m`, cached by `(r, d, m)`.
pub fn jack_coeffs(cone: &ConeParams, m: &Partition) -> Result<Arc<SymPolyCoeffs>> {
    let limit = weight_limit();
    if m.weight() > limit {
        return Err(Error::WeightLimitExceeded {
            got: m.weight() as usize,
            max: limit as usize,
        });
    }
    let key: Key = (cone.rank(), cone.peirce_d(), m.clone());
    if let Some(hit) = CACHE.read().unwrap().entries.get(&key) {
        return Ok(hit.clone());
    }
    let entry = Arc::new(build_entry(cone.rank(), cone.peirce_d(), m));
    CACHE
        .write()
        .unwrap()
        .entries
        .insert(key, entry.clone());
    Ok(entry)
}

/// Power sums of a fixed argument, shared across many `Phi_m` evaluations.
pub struct PowerSums {
    p: Vec<Complex64>,
}

impl PowerSums {
    pub fn new(z: &JordanElementC, max_weight: u32) -> Self {
        PowerSums {
            p: power_sums(z, max_weight as usize),
        }
    }

    pub fn eval(&self, coeffs: &SymPolyCoeffs) -> Complex64 {
        let mut total = Complex64::ZERO;
        for (lam, c) in &coeffs.power {
            let mut term = Complex64::new(*c, 0.0);
            for &e in lam {
                term *= self.p[(e - 1) as usize];
            }
            total += term;
        }
        total
    }
}

/// `Phi_m(z)` for a complexified argument, through the cached power-sum form.
pub fn phi_eval(cone: &ConeParams, m: &Partition, z: &JordanElementC) -> Result<Complex64> {
    let entry = jack_coeffs(cone, m)?;
    Ok(PowerSums::new(z, m.weight()).eval(&entry))
}

/// Two-argument kernel `Phi_m(z, x) = Phi_m(P(x^{1/2}) z)` for `x` in the
/// closed cone (boundary arguments are nudged by `1e-12 * e`).
pub fn phi_eval2(
    cone: &ConeParams,
    m: &Partition,
    z: &JordanElementC,
    x: &JordanElement,
) -> Result<Complex64> {
    let w = cone_half_power_apply(cone, x, z)?;
    phi_eval(cone, m, &w)
}

/// `P(x^{1/2}) z` with the boundary regularization shared by every
/// two-argument evaluation.
pub fn cone_half_power_apply(
    cone: &ConeParams,
    x: &JordanElement,
    z: &JordanElementC,
) -> Result<JordanElementC> {
    let root = sqrt_regularized(cone, x)?;
    quad_apply(&root.complexify(), z)
}

/// Monte-Carlo oracle: the Haar average of `Delta_m(k x)` over `K cap L`,
/// using leading principal minors (matrix backends only). Returns the sample
/// mean and its standard error.
pub fn spherical_via_haar<R: rand::Rng>(
    cone: &ConeParams,
    m: &Partition,
    x: &JordanElement,
    samples: usize,
    rng: &mut R,
) -> Result<(f64, f64)> {
    match x {
        JordanElement::RealSym(_) | JordanElement::ComplexHerm(_) => {}
        _ => return Err(Error::UnsupportedBackend(x.backend())),
    }
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for _ in 0..samples {
        let k = haar_kl_sample_rng(cone, rng);
        let v = delta_m_minors(m, &k.apply(x));
        sum += v;
        sum_sq += v * v;
    }
    let n = samples as f64;
    let mean = sum / n;
    let var = (sum_sq / n - mean * mean).max(0.0);
    Ok((mean, (var / n).sqrt()))
}

/// `Delta_m(y) = prod_k minor_k(y)^{m_k - m_{k+1}}` from leading principal
/// minors.
fn delta_m_minors(m: &Partition, y: &JordanElement) -> f64 {
    let minors: Vec<f64> = match y {
        JordanElement::RealSym(mat) => (1..=mat.nrows())
            .map(|k| mat.view((0, 0), (k, k)).clone_owned().determinant())
            .collect(),
        JordanElement::ComplexHerm(mat) => (1..=mat.nrows())
            .map(|k| {
                mat.view((0, 0), (k, k))
                    .clone_owned()
                    .lu()
                    .determinant()
                    .re
            })
            .collect(),
        _ => unreachable!("guarded by caller"),
    };
    let r = minors.len();
    let mut out = 1.0;
    for k in 0..r {
        let exp = m.part(k) - m.part(k + 1);
        if exp > 0 {
            out *= minors[k].powi(exp as i32);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// on-disk coefficient cache
// ---------------------------------------------------------------------------

/// Writes every cached monomial expansion as `jackcache.tsv` rows:
/// `r  d_num  d_den  m  mu  coeff_num  coeff_den` (partitions as comma lists,
/// the zero partition as `0`). Returns the number of rows written.
pub fn save_cache(path: &std::path::Path) -> std::io::Result<usize> {
    let guard = CACHE.read().unwrap();
    let mut keys: Vec<&Key> = guard.entries.keys().collect();
    keys.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then(a.2.canonical_cmp(&b.2)));
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    let mut rows = 0;
    for key in keys {
        let entry = &guard.entries[key];
        for (mu, c) in &entry.monomial {
            writeln!(
                out,
                "{}\t{}\t1\t{}\t{}\t{}\t{}",
                key.0,
                key.1,
                key.2,
                mu,
                c.numer(),
                c.denom()
            )?;
            rows += 1;
        }
    }
    Ok(rows)
}

/// Loads `jackcache.tsv` rows back into the in-memory cache. Rows for ranks
/// other than the requested one are kept too; the file is shared. Returns the
/// number of polynomials loaded.
pub fn load_cache(path: &std::path::Path) -> std::io::Result<usize> {
    let file = std::fs::File::open(path)?;
    let mut grouped: BTreeMap<Key, Vec<(Partition, BigRational)>> = BTreeMap::new();
    for line in std::io::BufReader::new(file).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 7 {
            return Err(std::io::Error::new(
                std::io::ErrorKind::InvalidData,
                format!("expected 7 columns, got {}", cols.len()),
            ));
        }
        let parse_err = |what: &str| {
            std::io::Error::new(std::io::ErrorKind::InvalidData, format!("bad {what} field"))
        };
        let r: usize = cols[0].parse().map_err(|_| parse_err("rank"))?;
        let d_num: u32 = cols[1].parse().map_err(|_| parse_err("d"))?;
        let d_den: u32 = cols[2].parse().map_err(|_| parse_err("d"))?;
        if d_den != 1 {
            return Err(parse_err("d (must be integral)"));
        }
        let m = parse_partition(cols[3]).ok_or_else(|| parse_err("partition m"))?;
        let mu = parse_partition(cols[4]).ok_or_else(|| parse_err("partition mu"))?;
        let num: BigInt = cols[5].parse().map_err(|_| parse_err("numerator"))?;
        let den: BigInt = cols[6].parse().map_err(|_| parse_err("denominator"))?;
        grouped
            .entry((r, d_num, m))
            .or_default()
            .push((mu, BigRational::new(num, den)));
    }
    let mut loaded = 0;
    let mut guard = CACHE.write().unwrap();
    for ((r, d, m), monomial) in grouped {
        let power = to_power_basis(r, m.weight(), &monomial);
        let entry = Arc::new(SymPolyCoeffs {
            partition: m.clone(),
            monomial,
            power,
        });
        guard.entries.insert((r, d, m), entry);
        loaded += 1;
    }
    Ok(loaded)
}

fn parse_partition(s: &str) -> Option<Partition> {
    if s == "0" || s.is_empty() {
        return Some(Partition::zero());
    }
    let parts: Option<Vec<u32>> = s.split(',').map(|t| t.parse().ok()).collect();
    Partition::new(&parts?)
}
