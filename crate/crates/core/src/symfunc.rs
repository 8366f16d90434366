//! Exact symmetric-function algebra in `r` variables.
//!
//! Symmetric polynomials are kept in the monomial basis `m_mu` with exact
//! rational coefficients. Two pieces of machinery live here: multiplication
//! by a power sum `p_c` (which drives the change of basis from monomials to
//! products of power sums), and the shift `x -> e + x` used by the
//! generalized binomial coefficients. Power-sum expansions are what make
//! evaluation possible at arbitrary complexified Jordan-algebra arguments,
//! where eigenvalues are unavailable but traces of powers are cheap.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::{partitions_of_weight, Partition};

/// A symmetric polynomial in `r` variables, monomial basis, exact
/// coefficients. Keys are partitions with at most `r` parts.
pub type MonoPoly = BTreeMap<Partition, BigRational>;

pub fn big(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

/// `m_mu(1, ..., 1)` in `r` variables: the number of distinct rearrangements
/// of the padded exponent tuple.
pub fn monomial_at_ones(mu: &Partition, r: usize) -> BigRational {
    let padded = mu.padded(r);
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &p in &padded {
        *counts.entry(p).or_insert(0) += 1;
    }
    let mut num = BigInt::one();
    for k in 2..=r as u64 {
        num *= BigInt::from(k);
    }
    let mut den = BigInt::one();
    for (_, c) in counts {
        for k in 2..=c {
            den *= BigInt::from(k);
        }
    }
    BigRational::new(num, den)
}

/// Multiplies a monomial-basis polynomial by the power sum `p_c` in `r`
/// variables.
///
/// For a fixed sorted target exponent `rho`, the coefficient contributed by
/// `m_mu * p_c` is the number of positions `i` with `rho - c e_i` a
/// rearrangement of `mu`.
pub fn mul_power_sum(poly: &MonoPoly, c: u32, r: usize) -> MonoPoly {
    assert!(c >= 1);
    let mut out = MonoPoly::new();
    for (mu, coeff) in poly {
        let mu_pad = mu.padded(r);
        // candidate targets: add c to one slot, then sort
        let mut targets: Vec<Partition> = Vec::new();
        for i in 0..r {
            let mut v = mu_pad.clone();
            v[i] += c;
            v.sort_unstable_by(|a, b| b.cmp(a));
            let rho = Partition::new(&v).expect("sorted");
            if !targets.contains(&rho) {
                targets.push(rho);
            }
        }
        for rho in targets {
            let rho_pad = rho.padded(r);
            let mut mult = 0i64;
            for i in 0..r {
                if rho_pad[i] < c {
                    continue;
                }
                let mut v = rho_pad.clone();
                v[i] -= c;
                v.sort_unstable_by(|a, b| b.cmp(a));
                while v.last() == Some(&0) {
                    v.pop();
                }
                if v == mu.parts() {
                    mult += 1;
                }
            }
            if mult != 0 {
                let entry = out.entry(rho).or_insert_with(BigRational::zero);
                *entry += coeff * big(mult);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Expands the product `p_lambda = p_{lambda_1} ... p_{lambda_k}` in the
/// monomial basis of `r` variables.
pub fn power_product_in_monomials(lambda: &[u32], r: usize) -> MonoPoly {
    let mut poly = MonoPoly::new();
    poly.insert(Partition::zero(), BigRational::one());
    for &c in lambda {
        poly = mul_power_sum(&poly, c, r);
    }
    poly
}

/// Partitions of `k` with every part at most `r` (exponent patterns of
/// power-sum products in `r` variables), canonical order.
pub fn partitions_with_part_le(k: u32, r: usize) -> Vec<Partition> {
    partitions_of_weight(k as usize, k)
        .into_iter()
        .filter(|p| p.part(0) <= r as u32)
        .collect()
}

/// Cached result of [`monomials_to_power_sums`]; the exact inversion is worth
/// sharing across the many polynomials of one weight.
pub type PowerSumRows = (Vec<Partition>, BTreeMap<Partition, Vec<BigRational>>);

static POWER_SUM_ROWS: std::sync::LazyLock<
    std::sync::RwLock<BTreeMap<(usize, u32), std::sync::Arc<PowerSumRows>>>,
> = std::sync::LazyLock::new(|| std::sync::RwLock::new(BTreeMap::new()));

/// Change of basis at a fixed weight `k`, memoized per `(r, k)`.
pub fn monomials_to_power_sums(r: usize, k: u32) -> std::sync::Arc<PowerSumRows> {
    if let Some(hit) = POWER_SUM_ROWS.read().unwrap().get(&(r, k)) {
        return hit.clone();
    }
    let computed = std::sync::Arc::new(monomials_to_power_sums_uncached(r, k));
    POWER_SUM_ROWS
        .write()
        .unwrap()
        .insert((r, k), computed.clone());
    computed
}

/// Change of basis at a fixed weight `k`: expresses every monomial `m_mu`
/// (`mu` with at most `r` parts, `|mu| = k`) as an exact combination of
/// power-sum products `p_lambda` (`lambda` with parts at most `r`).
///
/// Returns the list of `lambda`s and, for each `mu` in canonical order, the
/// coefficient row over those `lambda`s.
fn monomials_to_power_sums_uncached(r: usize, k: u32) -> PowerSumRows {
    let mus = partitions_of_weight(r, k);
    let lambdas = partitions_with_part_le(k, r);
    let dim = mus.len();
    assert_eq!(
        lambdas.len(),
        dim,
        "conjugation must match the two index sets"
    );

    // A[i][j]: coefficient of m_{mu_j} in p_{lambda_i}
    let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(dim);
    for lam in &lambdas {
        let poly = power_product_in_monomials(lam.parts(), r);
        let row: Vec<BigRational> = mus
            .iter()
            .map(|mu| poly.get(mu).cloned().unwrap_or_else(BigRational::zero))
            .collect();
        a.push(row);
    }

    // invert A by Gauss-Jordan; exact arithmetic, pivot = first nonzero
    let mut inv: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    let mut mat = a;
    for col in 0..dim {
        let pivot = (col..dim)
            .find(|&row| !mat[row][col].is_zero())
            .expect("basis change matrix is invertible");
        mat.swap(col, pivot);
        inv.swap(col, pivot);
        let p = mat[col][col].clone();
        for j in 0..dim {
            mat[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for row in 0..dim {
            if row != col && !mat[row][col].is_zero() {
                let f = mat[row][col].clone();
                for j in 0..dim {
                    let t = &mat[col][j] * &f;
                    mat[row][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[row][j] -= t;
                }
            }
        }
    }

    // m = A^{-1} p: row for mu_j is column j of... with (p)_i = sum_j A_ij m_j,
    // the inverse satisfies (m)_j = sum_i (A^{-1})_ji p_i.
    let mut rows = BTreeMap::new();
    for (j, mu) in mus.iter().enumerate() {
        let row: Vec<BigRational> = (0..dim).map(|i| inv[j][i].clone()).collect();
        rows.insert(mu.clone(), row);
    }
    (lambdas, rows)
}

/// Expands `m_mu(1 + x)` in the monomial basis: coefficient of the sorted
/// exponent `beta` is `sum_{alpha in Orbit(mu), alpha >= beta} prod_i
/// C(alpha_i, beta_i)`.
pub fn shift_by_ones(mu: &Partition, r: usize) -> MonoPoly {
    let orbit = distinct_permutations(&mu.padded(r));
    let mut out = MonoPoly::new();
    // all sorted beta <= some alpha; enumerate beta over partitions of weight
    // <= |mu| with at most r parts and part <= mu_1
    for w in 0..=mu.weight() {
        for beta in partitions_of_weight(r, w) {
            if beta.part(0) > mu.part(0) {
                continue;
            }
            let beta_pad = beta.padded(r);
            let mut total = BigInt::zero();
            for alpha in &orbit {
                if (0..r).all(|i| alpha[i] >= beta_pad[i]) {
                    let mut prod = BigInt::one();
                    for i in 0..r {
                        prod *= binomial_int(alpha[i], beta_pad[i]);
                    }
                    total += prod;
                }
            }
            if !total.is_zero() {
                out.insert(beta, BigRational::from_integer(total));
            }
        }
    }
    out
}

fn binomial_int(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    permute_rec(&mut sorted, 0, &mut out);
    out.sort();
    out.dedup();
    out
}

fn permute_rec(v: &mut Vec<u32>, start: usize, out: &mut Vec<Vec<u32>>) {
    if start == v.len() {
        out.push(v.clone());
        return;
    }
    let mut seen = Vec::new();
    for i in start..v.len() {
        if seen.contains(&v[i]) {
            continue;
        }
        seen.push(v[i]);
        v.swap(start, i);
        permute_rec(v, start + 1, out);
        v.swap(start, i);
    }
}
