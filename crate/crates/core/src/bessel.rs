//! Multivariate I-Bessel series and the rank-1 K-Bessel integral.
//!
//! `I_nu(z) = sum_m d_m / ((n/r)_m (nu)_m) Phi_m(z)`, summed shell by shell
//! in the canonical partition order with the last completed shell serving as
//! the tail estimate. At a discrete Wallach point `nu = k d/2` the sum runs
//! over partitions supported on the first `k` parts, which is the regime
//! where the function extends to rank-bounded arguments.

use num_complex::Complex64;

use crate::cone::{dim_km, pochhammer, wallach_classify, ConeParams, WallachPoint};
use crate::error::{Error, Result};
use crate::jordan::{JordanElement, JordanElementC};
use crate::partition::partitions_of_weight;
use crate::spherical::{cone_half_power_apply, jack_coeffs, PowerSums};

/// Truncation policy for every partial-sum evaluation: maximal weight plus a
/// relative tail tolerance on the last shell.
#[derive(Debug, Clone, Copy)]
pub struct SeriesTruncation {
    pub max_weight: u32,
    pub tail_tol: f64,
}

impl SeriesTruncation {
    pub fn new(max_weight: u32, tail_tol: f64) -> Self {
        assert!(tail_tol > 0.0);
        SeriesTruncation {
            max_weight,
            tail_tol,
        }
    }
}

impl Default for SeriesTruncation {
    fn default() -> Self {
        SeriesTruncation {
            max_weight: 40,
            tail_tol: 1e-9,
        }
    }
}

/// Value of a truncated shell sum plus the magnitude of its last shell.
#[derive(Debug, Clone, Copy)]
pub struct SeriesValue {
    pub value: Complex64,
    pub last_shell: f64,
}

/// Checks the Wallach precondition and returns the part-support bound for
/// the partition sum (`rank` for continuous parameters, `k` at `k d/2`).
pub(crate) fn wallach_support(cone: &ConeParams, nu: f64) -> Result<usize> {
    match wallach_classify(cone, nu) {
        WallachPoint::Continuous => Ok(cone.rank()),
        WallachPoint::Discrete(k) => Ok(k),
        WallachPoint::Outside => Err(Error::OutsideContinuousWallach(nu)),
    }
}

fn check_rank_bound(cone: &ConeParams, nu: f64, support: usize, z: &JordanElementC) -> Result<()> {
    if support == cone.rank() {
        return Ok(());
    }
    // rank is only measurable for (nearly) real arguments; complex callers
    // assert the bound themselves
    let im = z.imag_part().norm();
    if im > 1e-9 * (1.0 + z.norm()) {
        return Ok(());
    }
    let x = z.real_part();
    let tol = 1e-9 * (1.0 + x.norm());
    let rank = x.eigenvalues().iter().filter(|l| l.abs() > tol).count();
    if rank > support {
        return Err(Error::WallachRankViolation {
            nu,
            k: support,
        });
    }
    Ok(())
}

/// One-argument I-Bessel series `I_nu(z)` with tail reporting.
pub fn ibessel_with_tail(
    cone: &ConeParams,
    nu: f64,
    z: &JordanElementC,
    trunc: &SeriesTruncation,
) -> Result<SeriesValue> {
    let support = wallach_support(cone, nu)?;
    check_rank_bound(cone, nu, support, z)?;
    let ps = PowerSums::new(z, trunc.max_weight);
    let n_over_r = cone.n_over_r();
    let mut value = Complex64::ZERO;
    let mut last_shell = 0.0;
    for w in 0..=trunc.max_weight {
        let mut shell = Complex64::ZERO;
        for m in partitions_of_weight(cone.rank(), w) {
            if support < cone.rank() && m.part(support) > 0 {
                continue;
            }
            let entry = jack_coeffs(cone, &m)?;
            let denom = pochhammer(cone, n_over_r, &m) * pochhammer(cone, nu, &m);
            shell += Complex64::new(dim_km(cone, &m) / denom, 0.0) * ps.eval(&entry);
        }
        value += shell;
        last_shell = shell.norm();
    }
    if last_shell > trunc.tail_tol * value.norm().max(f64::MIN_POSITIVE) {
        return Err(Error::TruncationNotConverged {
            shell: last_shell,
            value: value.norm(),
        });
    }
    Ok(SeriesValue { value, last_shell })
}

/// `I_nu(z)`, the scalar value.
pub fn ibessel(
    cone: &ConeParams,
    nu: f64,
    z: &JordanElementC,
    trunc: &SeriesTruncation,
) -> Result<Complex64> {
    ibessel_with_tail(cone, nu, z, trunc).map(|sv| sv.value)
}

/// Two-argument I-Bessel `I_nu(z, x) = I_nu(P(x^{1/2}) z)` for `x` in the
/// closed cone.
pub fn ibessel2(
    cone: &ConeParams,
    nu: f64,
    z: &JordanElementC,
    x: &JordanElement,
    trunc: &SeriesTruncation,
) -> Result<Complex64> {
    let w = cone_half_power_apply(cone, x, z)?;
    ibessel(cone, nu, &w, trunc)
}

/// Termwise two-argument series `sum_m d_m/((n/r)_m (nu)_m) Phi_m(z, x)`;
/// same value as [`ibessel2`] along an independent evaluation path.
pub fn ibessel2_termwise(
    cone: &ConeParams,
    nu: f64,
    z: &JordanElementC,
    x: &JordanElement,
    trunc: &SeriesTruncation,
) -> Result<Complex64> {
    let support = wallach_support(cone, nu)?;
    let w = cone_half_power_apply(cone, x, z)?;
    let ps = PowerSums::new(&w, trunc.max_weight);
    let n_over_r = cone.n_over_r();
    let mut value = Complex64::ZERO;
    for wgt in 0..=trunc.max_weight {
        for m in partitions_of_weight(cone.rank(), wgt) {
            if support < cone.rank() && m.part(support) > 0 {
                continue;
            }
            let entry = jack_coeffs(cone, &m)?;
            let denom = pochhammer(cone, n_over_r, &m) * pochhammer(cone, nu, &m);
            value += Complex64::new(dim_km(cone, &m) / denom, 0.0) * ps.eval(&entry);
        }
    }
    Ok(value)
}

/// Rank-1 K-Bessel integral `int_0^inf e^{-1/u - x u} u^{nu-2} du` by
/// trapezoid quadrature on the doubly-exponentially decaying substitution
/// `u = e^s`, refined until two consecutive grids agree.
pub fn kbessel_rank1(nu: f64, x: f64) -> Result<f64> {
    assert!(x > 0.0, "argument must be positive");
    // integrand in s: exp(-e^{-s} - x e^s + (nu - 1) s)
    let g = |s: f64| (-(-s).exp() - x * s.exp() + (nu - 1.0) * s).exp();
    // generous cutoffs: both tails below e^{-700}
    let s_lo = -(700.0f64.ln() + 1.0);
    let s_hi = (700.0 / x).ln().max(1.0) + 1.0;
    let mut h = 0.1;
    let mut prev = trapezoid(&g, s_lo, s_hi, h);
    for _ in 0..8 {
        h /= 2.0;
        let next = trapezoid(&g, s_lo, s_hi, h);
        if (next - prev).abs() <= 1e-12 * next.abs() {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::QuadratureNotConverged(
        (prev.abs()).recip().min(1.0),
    ))
}

fn trapezoid(g: &dyn Fn(f64) -> f64, lo: f64, hi: f64, h: f64) -> f64 {
    let n = ((hi - lo) / h).ceil() as usize;
    let h = (hi - lo) / n as f64;
    let mut sum = 0.5 * (g(lo) + g(hi));
    for i in 1..n {
        sum += g(lo + h * i as f64);
    }
    sum * h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::ConeParams;
    use crate::gamma::{gamma, rising};
    use crate::jordan::{random_in_cone, JordanElement};
    use crate::laguerre::laguerre_poly;
    use crate::partition::enumerate_partitions;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn trunc(m: u32) -> SeriesTruncation {
        SeriesTruncation::new(m, 1e-6)
    }

    #[test]
    fn at_zero_equals_one() {
        for cone in [
            ConeParams::real_line(),
            ConeParams::real_sym(2),
            ConeParams::complex_herm(3),
            ConeParams::lorentz(4),
        ] {
            let v = ibessel(&cone, 2.5, &JordanElementC::zero(&cone), &trunc(8)).unwrap();
            assert!((v - Complex64::ONE).norm() < 1e-14);
        }
    }

    #[test]
    fn rank1_matches_direct_series() {
        let cone = ConeParams::real_line();
        for nu in [1.3, 2.0, 3.7] {
            for z in [0.3, 1.0, 2.5] {
                let got = ibessel(&cone, nu, &JordanElementC::RealLine(z.into()), &trunc(40))
                    .unwrap()
                    .re;
                let mut want = 0.0;
                let mut term;
                for k in 0..40u32 {
                    term = z.powi(k as i32)
                        / ((1..=k).map(f64::from).product::<f64>() * rising(nu, k));
                    want += term;
                }
                assert_relative_eq!(got, want, max_relative = 1e-12);
            }
        }
    }

    /// Classical modified Bessel `I_alpha(y)` by its own power series.
    fn bessel_i(alpha: f64, y: f64) -> f64 {
        let mut sum = 0.0;
        for k in 0..120u32 {
            let kf: f64 = (1..=k).map(f64::from).product();
            let term = (y / 2.0).powf(2.0 * f64::from(k) + alpha)
                / (kf * gamma(f64::from(k) + alpha + 1.0).unwrap());
            sum += term;
            if term.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        sum
    }

    #[test]
    fn rank1_matches_classical_bessel() {
        // I_nu(z) = Gamma(nu) z^{(1-nu)/2} I_{nu-1}(2 sqrt z), z > 0
        let cone = ConeParams::real_line();
        for nu in [1.5, 2.5] {
            for z in [0.4, 1.0, 3.0] {
                let got = ibessel(&cone, nu, &JordanElementC::RealLine(z.into()), &trunc(36))
                    .unwrap()
                    .re;
                let want =
                    gamma(nu).unwrap() * z.powf((1.0 - nu) / 2.0) * bessel_i(nu - 1.0, 2.0 * z.sqrt());
                assert_relative_eq!(got, want, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn scalar_argument_via_laguerre_expansion() {
        // I_nu(t e) = sum_m (-t)^{|m|} e^{rt/2} d_m L_m^nu(2e)
        //             / (2^{|m|} (n/r)_m (nu)_m)
        for cone in [ConeParams::real_sym(2), ConeParams::lorentz(4)] {
            let nu = 2.4;
            let t = 0.6;
            let te = JordanElementC::unit(&cone).scale(Complex64::new(t, 0.0));
            let direct = ibessel(&cone, nu, &te, &trunc(30)).unwrap();
            let two_e = JordanElementC::unit(&cone).scale(Complex64::new(2.0, 0.0));
            let mut sum = Complex64::ZERO;
            for m in enumerate_partitions(cone.rank(), 30) {
                let l = laguerre_poly(&cone, nu, &m, &two_e).unwrap();
                let coeff = dim_km(&cone, &m)
                    / (2f64.powi(m.weight() as i32)
                        * pochhammer(&cone, cone.n_over_r(), &m)
                        * pochhammer(&cone, nu, &m));
                sum += Complex64::new(coeff * (-t).powi(m.weight() as i32), 0.0) * l;
            }
            let want = sum * Complex64::new((cone.rank() as f64 * t / 2.0).exp(), 0.0);
            assert!(
                (direct - want).norm() < 1e-8 * (1.0 + want.norm()),
                "{:?}: {direct} vs {want}",
                cone.family()
            );
        }
    }

    #[test]
    fn two_argument_consistency() {
        for cone in [ConeParams::real_sym(2), ConeParams::complex_herm(2), ConeParams::lorentz(4)] {
            let mut rng = ChaCha8Rng::seed_from_u64(15);
            let x = random_in_cone(&cone, 0.3, 1.5, &mut rng);
            let z = crate::jordan::random_element(&cone, &mut rng).complexify();
            let nu = 2.8;
            // at e the two-argument function is the one-argument one
            let e = JordanElement::unit(&cone);
            let a = ibessel2(&cone, nu, &z, &e, &trunc(24)).unwrap();
            let b = ibessel(&cone, nu, &z, &trunc(24)).unwrap();
            assert!((a - b).norm() < 1e-12 * (1.0 + b.norm()));
            // at z = 0 it is 1
            let one = ibessel2(&cone, nu, &JordanElementC::zero(&cone), &x, &trunc(8)).unwrap();
            assert!((one - Complex64::ONE).norm() < 1e-13);
            // termwise path agrees with the quadratic-representation path
            let t1 = ibessel2(&cone, nu, &z, &x, &trunc(24)).unwrap();
            let t2 = ibessel2_termwise(&cone, nu, &z, &x, &trunc(24)).unwrap();
            assert!((t1 - t2).norm() < 1e-12 * (1.0 + t1.norm()));
        }
    }

    #[test]
    fn shell_decay_guard() {
        // shells decay by at least a factor 2 beyond weight 15 inside the
        // safe region
        for cone in [ConeParams::real_sym(2), ConeParams::lorentz(4)] {
            let nu = (cone.rank() - 1) as f64 * cone.half_d() + 0.5;
            let mut rng = ChaCha8Rng::seed_from_u64(19);
            let z = crate::jordan::random_element(&cone, &mut rng);
            let z = z.scale(2.0 / (1.0 + z.norm())).complexify();
            let ps = PowerSums::new(&z, 24);
            let mut shells = Vec::new();
            for w in 0..=24u32 {
                let mut shell = Complex64::ZERO;
                for m in partitions_of_weight(cone.rank(), w) {
                    let entry = jack_coeffs(&cone, &m).unwrap();
                    let denom =
                        pochhammer(&cone, cone.n_over_r(), &m) * pochhammer(&cone, nu, &m);
                    shell += Complex64::new(dim_km(&cone, &m) / denom, 0.0) * ps.eval(&entry);
                }
                shells.push(shell.norm());
            }
            for w in 15..24 {
                assert!(
                    shells[w + 1] <= 0.5 * shells[w] + 1e-300,
                    "{:?} shell {w}: {} -> {}",
                    cone.family(),
                    shells[w],
                    shells[w + 1]
                );
            }
        }
    }

    #[test]
    fn truncation_failure_detected() {
        let cone = ConeParams::real_sym(2);
        let big = JordanElementC::unit(&cone).scale(Complex64::new(30.0, 0.0));
        assert!(matches!(
            ibessel(&cone, 2.0, &big, &SeriesTruncation::new(6, 1e-9)),
            Err(Error::TruncationNotConverged { .. })
        ));
    }

    #[test]
    fn wallach_gate() {
        let cone = ConeParams::complex_herm(2);
        // nu = 0.4 is outside the Wallach set
        assert!(matches!(
            ibessel(&cone, 0.4, &JordanElementC::unit(&cone), &trunc(8)),
            Err(Error::OutsideContinuousWallach(_))
        ));
        // nu = 1 = d/2: rank-1 arguments pass, full-rank real arguments fail
        let rank1 = JordanElement::from_eigenvalues(&cone, &[0.7, 0.0]).complexify();
        assert!(ibessel(&cone, 1.0, &rank1, &trunc(12)).is_ok());
        let full = JordanElementC::unit(&cone);
        assert!(matches!(
            ibessel(&cone, 1.0, &full, &trunc(12)),
            Err(Error::WallachRankViolation { .. })
        ));
    }

    /// Classical K-Bessel by the cosh integral, an independent formula.
    fn bessel_k(alpha: f64, y: f64) -> f64 {
        let g = |t: f64| (-y * t.cosh()).exp() * (alpha * t).cosh();
        trapezoid(&g, 0.0, 30.0, 0.00625)
    }

    #[test]
    fn kbessel_matches_classical() {
        // K_nu(x) = 2 x^{(1-nu)/2} K_{nu-1}(2 sqrt x)
        for nu in [1.5, 2.0, 3.0] {
            for x in [0.5, 1.0, 4.0] {
                let got = kbessel_rank1(nu, x).unwrap();
                let want = 2.0 * x.powf((1.0 - nu) / 2.0) * bessel_k(nu - 1.0, 2.0 * x.sqrt());
                assert_relative_eq!(got, want, max_relative = 1e-8);
            }
        }
    }

    #[test]
    fn kbessel_monotone_and_symmetric_forms() {
        let nu = 2.2;
        let a = kbessel_rank1(nu, 0.5).unwrap();
        let b = kbessel_rank1(nu, 1.5).unwrap();
        let c = kbessel_rank1(nu, 3.0).unwrap();
        assert!(a > b && b > c);
        // second displayed form: int e^{-v - x/v} v^{-nu} dv, same substitution
        for x in [0.7, 2.0] {
            let g = |s: f64| (-(-s).exp() * x - s.exp() + (-nu + 1.0) * s).exp();
            let lo = -(700.0f64 / x).ln() - 1.0;
            let hi = 700.0f64.ln() + 1.0;
            let coarse = trapezoid(&g, lo, hi, 0.02);
            let fine = trapezoid(&g, lo, hi, 0.01);
            assert!((fine - coarse).abs() < 1e-10 * fine.abs());
            assert_relative_eq!(kbessel_rank1(nu, x).unwrap(), fine, max_relative = 1e-8);
        }
    }
}
