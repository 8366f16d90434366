//! The four realizations of the scalar highest-weight representations and
//! their Whittaker vectors.
//!
//! * `L2Omega` — the weighted `L^2`-space on the cone; the Whittaker vector
//!   is the Dirac distribution at `te` and is only ever touched through
//!   pairings and truncated expansions, never as a function value.
//! * `Tube`    — holomorphic functions on `T_Omega = V + i Omega`; the
//!   Whittaker vector is `e^{i(z|v)}`.
//! * `Disc`    — the bounded realization; closed form
//!   `Delta(e-w)^{-nu} e^{-((e+w)(e-w)^{-1}|v)}`.
//! * `Fock`    — entire functions on `V_C`; closed form
//!   `e^{-tr(z)/2} I_nu(z, v) e^{-tr(v)}`.
//!
//! Branch policy: every power `Delta(.)^{-nu}` is evaluated as
//! `exp(-nu * sum log lambda_i)` with principal logarithms of the spectral
//! values. On the declared domains all spectra lie in the open right
//! half-plane; this is asserted, not assumed.

use num_complex::Complex64;

use crate::bessel::{ibessel2, SeriesTruncation};
use crate::cone::{dim_km, pochhammer, ConeParams};
use crate::error::{Error, Result};
use crate::jordan::{
    jinv, jmul, jtrace, spectral_values, trace_form, JordanElement, JordanElementC,
};
use crate::laguerre::laguerre_fn;
use crate::partition::{partitions_of_weight, Partition};
use crate::spherical::{jack_coeffs, PowerSums};

/// The four realizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    L2Omega,
    Tube,
    Disc,
    Fock,
}

impl Model {
    pub fn label(self) -> &'static str {
        match self {
            Model::L2Omega => "l2omega",
            Model::Tube => "tube",
            Model::Disc => "disc",
            Model::Fock => "fock",
        }
    }
}

/// `Delta(z)^s` by principal logarithms of the spectral values; the whole
/// spectrum must sit in the open right half-plane.
pub fn delta_power(z: &JordanElementC, s: f64) -> Result<Complex64> {
    let mut log_sum = Complex64::ZERO;
    for lambda in spectral_values(z) {
        if lambda.re <= 0.0 {
            return Err(Error::BranchViolation(lambda));
        }
        log_sum += lambda.ln();
    }
    Ok((log_sum * s).exp())
}

/// Tube-domain membership: `Im z` in the open cone.
pub fn in_tube(z: &JordanElementC) -> bool {
    z.imag_part().in_cone()
}

/// Bounded-domain membership with the working margin `1 - 1e-9`.
pub fn in_disc(w: &JordanElementC) -> bool {
    w.spectral_norm() < 1.0 - 1e-9
}

/// The Cayley ratio `(z - ie)(z + ie)^{-1}` sending the tube to the disc.
pub fn tube_to_disc_point(cone: &ConeParams, z: &JordanElementC) -> Result<JordanElementC> {
    let ie = JordanElementC::unit(cone).scale(Complex64::I);
    jmul(&z.sub(&ie), &jinv(&z.add(&ie))?)
}

/// The inverse ratio `i (e + w)(e - w)^{-1}` sending the disc to the tube.
pub fn disc_to_tube_point(cone: &ConeParams, w: &JordanElementC) -> Result<JordanElementC> {
    let e = JordanElementC::unit(cone);
    Ok(jmul(&e.add(w), &jinv(&e.sub(w))?)?.scale(Complex64::I))
}

/// `(K cap L)`-invariant basis vector of the K-type `m` in the tube model,
/// `Psi_m^nu(z) = Delta((z + ie)/2i)^{-nu} Phi_m((z - ie)(z + ie)^{-1})`.
pub fn psi_basis(cone: &ConeParams, nu: f64, m: &Partition, z: &JordanElementC) -> Result<Complex64> {
    if !in_tube(z) {
        return Err(Error::NotInDomain("tube domain (Im z must lie in the cone)"));
    }
    let ie = JordanElementC::unit(cone).scale(Complex64::I);
    let half = z.add(&ie).scale(Complex64::new(0.0, -0.5)); // (z + ie)/(2i)
    let factor = delta_power(&half, -nu)?;
    let ratio = tube_to_disc_point(cone, z)?;
    let entry = jack_coeffs(cone, m)?;
    let phi = PowerSums::new(&ratio, m.weight()).eval(&entry);
    Ok(factor * phi)
}

/// Whittaker vector in the tube model, `e^{i (z|v)}`.
pub fn whittaker_tube(
    _cone: &ConeParams,
    _nu: f64,
    v: &JordanElement,
    z: &JordanElementC,
) -> Result<Complex64> {
    let pairing = trace_form(z, &v.complexify())?;
    Ok((Complex64::I * pairing).exp())
}

/// Whittaker vector in the bounded model,
/// `Delta(e-w)^{-nu} e^{-((e+w)(e-w)^{-1}|v)}`.
pub fn whittaker_disc(
    cone: &ConeParams,
    nu: f64,
    v: &JordanElement,
    w: &JordanElementC,
) -> Result<Complex64> {
    if !in_disc(w) {
        return Err(Error::NotInDomain("bounded domain (spectral norm < 1)"));
    }
    let e = JordanElementC::unit(cone);
    let factor = delta_power(&e.sub(w), -nu)?;
    let cayley = jmul(&e.add(w), &jinv(&e.sub(w))?)?;
    let pairing = trace_form(&cayley, &v.complexify())?;
    Ok(factor * (-pairing).exp())
}

/// Whittaker vector in the Fock model,
/// `e^{-tr(z)/2} I_nu(z, v) e^{-tr(v)}`.
pub fn whittaker_fock(
    cone: &ConeParams,
    nu: f64,
    v: &JordanElement,
    z: &JordanElementC,
    trunc: &SeriesTruncation,
) -> Result<Complex64> {
    let bess = ibessel2(cone, nu, z, v, trunc)?;
    let tr_z = jtrace(z);
    let tr_v = jtrace(&v.complexify()).re;
    Ok((tr_z * -0.5).exp() * bess * (-tr_v).exp())
}

/// Truncated K-type expansion of the Whittaker vector `W_{nu, te}` in the
/// requested model, evaluated at `point` (for `L2Omega` the real part of
/// `point` is the cone argument).
pub fn expansion_partial(
    model: Model,
    cone: &ConeParams,
    nu: f64,
    t: f64,
    point: &JordanElementC,
    trunc: &SeriesTruncation,
) -> Result<Complex64> {
    if nu <= (cone.rank() - 1) as f64 * cone.half_d() {
        return Err(Error::OutsideContinuousWallach(nu));
    }
    if t <= 0.0 {
        return Err(Error::NotInDomain("expansion parameter t must be positive"));
    }
    let te = JordanElement::te(cone, t);
    let n_over_r = cone.n_over_r();

    // model-specific per-point preparation
    let x_real = point.real_part();
    let (ratio_ps, tube_factor) = match model {
        Model::Tube => {
            if !in_tube(point) {
                return Err(Error::NotInDomain("tube domain (Im z must lie in the cone)"));
            }
            let ie = JordanElementC::unit(cone).scale(Complex64::I);
            let half = point.add(&ie).scale(Complex64::new(0.0, -0.5));
            let factor = delta_power(&half, -nu)?;
            let ratio = tube_to_disc_point(cone, point)?;
            (Some(PowerSums::new(&ratio, trunc.max_weight)), factor)
        }
        Model::Disc => {
            if !in_disc(point) {
                return Err(Error::NotInDomain("bounded domain (spectral norm < 1)"));
            }
            (Some(PowerSums::new(point, trunc.max_weight)), Complex64::ONE)
        }
        Model::Fock => (Some(PowerSums::new(point, trunc.max_weight)), Complex64::ONE),
        Model::L2Omega => {
            if !x_real.in_cone() {
                return Err(Error::NotInCone(
                    x_real.eigenvalues().last().copied().unwrap_or(f64::NAN),
                ));
            }
            (None, Complex64::ONE)
        }
    };

    let mut total = Complex64::ZERO;
    for w in 0..=trunc.max_weight {
        for m in partitions_of_weight(cone.rank(), w) {
            let ell_te = laguerre_fn(cone, nu, &m, &te)?;
            let dm = dim_km(cone, &m);
            let base = dm * ell_te / pochhammer(cone, n_over_r, &m);
            let term = match model {
                Model::L2Omega => {
                    let ell_x = laguerre_fn(cone, nu, &m, &x_real)?;
                    Complex64::new(base / pochhammer(cone, nu, &m) * ell_x, 0.0)
                }
                Model::Tube | Model::Disc => {
                    let entry = jack_coeffs(cone, &m)?;
                    let phi = ratio_ps.as_ref().unwrap().eval(&entry);
                    tube_factor * Complex64::new(base, 0.0) * phi
                }
                Model::Fock => {
                    let entry = jack_coeffs(cone, &m)?;
                    let phi = ratio_ps.as_ref().unwrap().eval(&entry);
                    let sign = if w % 2 == 0 { 1.0 } else { -1.0 };
                    let coeff =
                        sign * base / (2f64.powi(w as i32) * pochhammer(cone, nu, &m));
                    Complex64::new(coeff, 0.0) * phi
                }
            };
            total += term;
        }
    }
    Ok(total)
}

/// `|tr(x) S_M(x) - r t S_M(x)|` for the truncated `L^2`-model expansion;
/// the Whittaker multiplier property holds only in the limit.
pub fn whittaker_multiplier_residual(
    cone: &ConeParams,
    nu: f64,
    t: f64,
    x: &JordanElement,
    trunc: &SeriesTruncation,
) -> Result<f64> {
    let s = expansion_partial(Model::L2Omega, cone, nu, t, &x.complexify(), trunc)?;
    let tr = jtrace(&x.complexify()).re;
    let rt = cone.rank() as f64 * t;
    Ok(((tr - rt) * s.re).abs())
}
