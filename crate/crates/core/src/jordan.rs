//! Concrete Euclidean Jordan algebra backends and their complexifications.
//!
//! Four backends, one per supported cone family:
//!
//! * `RealLine`    — `V = R`, product `xy`;
//! * `RealSym`     — `V = Sym(r, R)`, product `(xy + yx)/2`;
//! * `ComplexHerm` — `V = Herm(r, C)`, same symmetrized product; the
//!                   complexification is the full matrix algebra `M_r(C)`;
//! * `Lorentz`     — `V = R^n`, product `(x.y, x_0 ybar + y_0 xbar)`.
//!
//! Complexified determinants and inverses go through pivoted elimination, not
//! spectral theory. Spectral values (the roots of `t -> Delta(t e - z)`) are
//! obtained from Newton's identities and closed-form quadratic/cubic root
//! formulas, which keeps them available for complex symmetric arguments where
//! no Hermitian eigensolver applies.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::cone::{ConeParams, Family};
use crate::error::{Error, Result};

/// Relative threshold for cone membership: an element is in the open cone
/// when its minimal eigenvalue exceeds `CONE_EPS * (1 + norm)`.
pub const CONE_EPS: f64 = 1e-10;

/// A point of the real Jordan algebra `V`.
#[derive(Debug, Clone, PartialEq)]
pub enum JordanElement {
    RealLine(f64),
    /// Symmetric `r x r` real matrix.
    RealSym(DMatrix<f64>),
    /// Hermitian `r x r` complex matrix.
    ComplexHerm(DMatrix<Complex64>),
    /// `(x_0, xbar)` as an `n`-vector.
    Lorentz(DVector<f64>),
}

/// A point of the complexified algebra `V_C`.
#[derive(Debug, Clone, PartialEq)]
pub enum JordanElementC {
    RealLine(Complex64),
    /// Complex symmetric `r x r` matrix.
    RealSym(DMatrix<Complex64>),
    /// Arbitrary complex `r x r` matrix.
    ComplexHerm(DMatrix<Complex64>),
    /// Complex `n`-vector.
    Lorentz(DVector<Complex64>),
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl JordanElement {
    /// The identity element `e`.
    pub fn unit(cone: &ConeParams) -> Self {
        match cone.family() {
            Family::RealLine => JordanElement::RealLine(1.0),
            Family::RealSym => JordanElement::RealSym(DMatrix::identity(cone.rank(), cone.rank())),
            Family::ComplexHerm => {
                JordanElement::ComplexHerm(DMatrix::identity(cone.rank(), cone.rank()))
            }
            Family::Lorentz => {
                let mut v = DVector::zeros(cone.dim_n());
                v[0] = 1.0;
                JordanElement::Lorentz(v)
            }
        }
    }

    /// `t * e`.
    pub fn te(cone: &ConeParams, t: f64) -> Self {
        Self::unit(cone).scale(t)
    }

    /// Diagonal element with the given spectral values (matrix backends place
    /// them on the diagonal, Lorentz uses the rank-2 frame, the line takes the
    /// first value).
    pub fn from_eigenvalues(cone: &ConeParams, ev: &[f64]) -> Self {
        assert_eq!(ev.len(), cone.rank());
        match cone.family() {
            Family::RealLine => JordanElement::RealLine(ev[0]),
            Family::RealSym => {
                JordanElement::RealSym(DMatrix::from_diagonal(&DVector::from_row_slice(ev)))
            }
            Family::ComplexHerm => {
                let d: Vec<Complex64> = ev.iter().map(|&x| c(x)).collect();
                JordanElement::ComplexHerm(DMatrix::from_diagonal(&DVector::from_vec(d)))
            }
            Family::Lorentz => {
                // lambda_+ c_+ + lambda_- c_- with c_pm = (1, +-u)/2, u = e_1
                let mut v = DVector::zeros(cone.dim_n());
                v[0] = (ev[0] + ev[1]) / 2.0;
                v[1] = (ev[0] - ev[1]) / 2.0;
                JordanElement::Lorentz(v)
            }
        }
    }

    pub fn backend(&self) -> &'static str {
        match self {
            JordanElement::RealLine(_) => "line",
            JordanElement::RealSym(_) => "realsym",
            JordanElement::ComplexHerm(_) => "complexherm",
            JordanElement::Lorentz(_) => "lorentz",
        }
    }

    /// Embeds into the complexification.
    pub fn complexify(&self) -> JordanElementC {
        match self {
            JordanElement::RealLine(x) => JordanElementC::RealLine(c(*x)),
            JordanElement::RealSym(m) => JordanElementC::RealSym(m.map(c)),
            JordanElement::ComplexHerm(m) => JordanElementC::ComplexHerm(m.clone()),
            JordanElement::Lorentz(v) => JordanElementC::Lorentz(v.map(c)),
        }
    }

    pub fn scale(&self, t: f64) -> Self {
        match self {
            JordanElement::RealLine(x) => JordanElement::RealLine(t * x),
            JordanElement::RealSym(m) => JordanElement::RealSym(m * t),
            JordanElement::ComplexHerm(m) => JordanElement::ComplexHerm(m * c(t)),
            JordanElement::Lorentz(v) => JordanElement::Lorentz(v * t),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (JordanElement::RealLine(a), JordanElement::RealLine(b)) => {
                JordanElement::RealLine(a + b)
            }
            (JordanElement::RealSym(a), JordanElement::RealSym(b)) => JordanElement::RealSym(a + b),
            (JordanElement::ComplexHerm(a), JordanElement::ComplexHerm(b)) => {
                JordanElement::ComplexHerm(a + b)
            }
            (JordanElement::Lorentz(a), JordanElement::Lorentz(b)) => JordanElement::Lorentz(a + b),
            _ => panic!("backend mismatch in add: {} vs {}", self.backend(), other.backend()),
        }
    }

    /// Coordinate norm (trace-form norm up to the fixed per-family scale).
    pub fn norm(&self) -> f64 {
        match self {
            JordanElement::RealLine(x) => x.abs(),
            JordanElement::RealSym(m) => m.norm(),
            JordanElement::ComplexHerm(m) => m.norm(),
            JordanElement::Lorentz(v) => v.norm(),
        }
    }

    /// Jordan-frame eigenvalues, descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev = match self {
            JordanElement::RealLine(x) => vec![*x],
            JordanElement::RealSym(m) => m.clone().symmetric_eigen().eigenvalues.iter().copied().collect(),
            JordanElement::ComplexHerm(m) => {
                m.clone().symmetric_eigen().eigenvalues.iter().copied().collect()
            }
            JordanElement::Lorentz(v) => {
                let spatial = v.rows(1, v.len() - 1).norm();
                vec![v[0] + spatial, v[0] - spatial]
            }
        };
        ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
        ev
    }

    /// Open-cone membership: min eigenvalue above the relative threshold.
    pub fn in_cone(&self) -> bool {
        let min = self.eigenvalues().last().copied().unwrap();
        min > CONE_EPS * (1.0 + self.norm())
    }

    /// Closed-cone membership up to the same tolerance.
    pub fn in_closed_cone(&self) -> bool {
        let min = self.eigenvalues().last().copied().unwrap();
        min > -CONE_EPS * (1.0 + self.norm())
    }

    /// The unique square root in the cone, via the spectral decomposition of
    /// each backend.
    pub fn sqrt_omega(&self) -> Result<Self> {
        let min = self.eigenvalues().last().copied().unwrap();
        if min <= CONE_EPS * (1.0 + self.norm()) {
            return Err(Error::NotInCone(min));
        }
        Ok(match self {
            JordanElement::RealLine(x) => JordanElement::RealLine(x.sqrt()),
            JordanElement::RealSym(m) => {
                let eig = m.clone().symmetric_eigen();
                let sq = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| l.sqrt()));
                JordanElement::RealSym(&eig.eigenvectors * sq * eig.eigenvectors.transpose())
            }
            JordanElement::ComplexHerm(m) => {
                let eig = m.clone().symmetric_eigen();
                let sq = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| c(l.sqrt())));
                JordanElement::ComplexHerm(&eig.eigenvectors * sq * eig.eigenvectors.adjoint())
            }
            JordanElement::Lorentz(v) => {
                let n = v.len();
                let spatial = v.rows(1, n - 1).norm();
                if spatial < 1e-300 {
                    let mut w = DVector::zeros(n);
                    w[0] = v[0].sqrt();
                    JordanElement::Lorentz(w)
                } else {
                    let lp = (v[0] + spatial).sqrt();
                    let lm = (v[0] - spatial).sqrt();
                    let mut w = DVector::zeros(n);
                    w[0] = (lp + lm) / 2.0;
                    let coef = (lp - lm) / (2.0 * spatial);
                    for i in 1..n {
                        w[i] = coef * v[i];
                    }
                    JordanElement::Lorentz(w)
                }
            }
        })
    }

    /// Coordinates in the fixed orthonormal basis of `V` (Lorentz uses the
    /// standard coordinates, a uniform multiple of an orthonormal basis, which
    /// leaves the `quad_rep` matrix unchanged).
    pub fn coords(&self, cone: &ConeParams) -> DVector<f64> {
        let sqrt2 = std::f64::consts::SQRT_2;
        match self {
            JordanElement::RealLine(x) => DVector::from_vec(vec![*x]),
            JordanElement::RealSym(m) => {
                let r = cone.rank();
                let mut v = Vec::with_capacity(cone.dim_n());
                for i in 0..r {
                    v.push(m[(i, i)]);
                }
                for i in 0..r {
                    for j in (i + 1)..r {
                        v.push(m[(i, j)] * sqrt2);
                    }
                }
                DVector::from_vec(v)
            }
            JordanElement::ComplexHerm(m) => {
                let r = cone.rank();
                let mut v = Vec::with_capacity(cone.dim_n());
                for i in 0..r {
                    v.push(m[(i, i)].re);
                }
                for i in 0..r {
                    for j in (i + 1)..r {
                        v.push(m[(i, j)].re * sqrt2);
                        v.push(-m[(i, j)].im * sqrt2);
                    }
                }
                DVector::from_vec(v)
            }
            JordanElement::Lorentz(v) => v.clone(),
        }
    }

    /// Inverse of `coords`.
    pub fn from_coords(cone: &ConeParams, v: &DVector<f64>) -> Self {
        let sqrt2 = std::f64::consts::SQRT_2;
        match cone.family() {
            Family::RealLine => JordanElement::RealLine(v[0]),
            Family::RealSym => {
                let r = cone.rank();
                let mut m = DMatrix::zeros(r, r);
                for i in 0..r {
                    m[(i, i)] = v[i];
                }
                let mut k = r;
                for i in 0..r {
                    for j in (i + 1)..r {
                        m[(i, j)] = v[k] / sqrt2;
                        m[(j, i)] = v[k] / sqrt2;
                        k += 1;
                    }
                }
                JordanElement::RealSym(m)
            }
            Family::ComplexHerm => {
                let r = cone.rank();
                let mut m = DMatrix::zeros(r, r);
                for i in 0..r {
                    m[(i, i)] = c(v[i]);
                }
                let mut k = r;
                for i in 0..r {
                    for j in (i + 1)..r {
                        let z = Complex64::new(v[k] / sqrt2, -v[k + 1] / sqrt2);
                        m[(i, j)] = z;
                        m[(j, i)] = z.conj();
                        k += 2;
                    }
                }
                JordanElement::ComplexHerm(m)
            }
            Family::Lorentz => JordanElement::Lorentz(v.clone()),
        }
    }

    /// Matrix of the quadratic representation `P(x) = 2 L(x)^2 - L(x^2)` in
    /// the fixed basis of `V`.
    pub fn quad_rep(&self, cone: &ConeParams) -> DMatrix<f64> {
        let n = cone.dim_n();
        let xc = self.complexify();
        let mut cols = Vec::with_capacity(n);
        for k in 0..n {
            let mut unit = DVector::zeros(n);
            unit[k] = 1.0;
            let b = JordanElement::from_coords(cone, &unit).complexify();
            let img = quad_apply(&xc, &b).expect("same backend");
            cols.push(img.real_part().coords(cone));
        }
        DMatrix::from_columns(&cols)
    }
}

impl JordanElementC {
    pub fn unit(cone: &ConeParams) -> Self {
        JordanElement::unit(cone).complexify()
    }

    pub fn zero(cone: &ConeParams) -> Self {
        JordanElement::unit(cone).scale(0.0).complexify()
    }

    /// Element with the given complex spectral values in the standard frame
    /// (diagonal matrix, or the rank-2 Lorentz frame).
    pub fn from_diag(cone: &ConeParams, values: &[Complex64]) -> Self {
        assert_eq!(values.len(), cone.rank());
        match cone.family() {
            Family::RealLine => JordanElementC::RealLine(values[0]),
            Family::RealSym => {
                JordanElementC::RealSym(DMatrix::from_diagonal(&DVector::from_row_slice(values)))
            }
            Family::ComplexHerm => JordanElementC::ComplexHerm(DMatrix::from_diagonal(
                &DVector::from_row_slice(values),
            )),
            Family::Lorentz => {
                let mut v = DVector::from_element(cone.dim_n(), Complex64::ZERO);
                v[0] = (values[0] + values[1]) * 0.5;
                v[1] = (values[0] - values[1]) * 0.5;
                JordanElementC::Lorentz(v)
            }
        }
    }

    /// Lorentz element from its raw coordinates `(x_0, xbar)`.
    pub fn from_lorentz_coords(cone: &ConeParams, coords: &[Complex64]) -> Self {
        assert_eq!(cone.family(), Family::Lorentz);
        assert_eq!(coords.len(), cone.dim_n());
        JordanElementC::Lorentz(DVector::from_row_slice(coords))
    }

    pub fn backend(&self) -> &'static str {
        match self {
            JordanElementC::RealLine(_) => "line",
            JordanElementC::RealSym(_) => "realsym",
            JordanElementC::ComplexHerm(_) => "complexherm",
            JordanElementC::Lorentz(_) => "lorentz",
        }
    }

    pub fn scale(&self, t: Complex64) -> Self {
        match self {
            JordanElementC::RealLine(x) => JordanElementC::RealLine(t * x),
            JordanElementC::RealSym(m) => JordanElementC::RealSym(m * t),
            JordanElementC::ComplexHerm(m) => JordanElementC::ComplexHerm(m * t),
            JordanElementC::Lorentz(v) => JordanElementC::Lorentz(v * t),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (JordanElementC::RealLine(a), JordanElementC::RealLine(b)) => {
                JordanElementC::RealLine(a + b)
            }
            (JordanElementC::RealSym(a), JordanElementC::RealSym(b)) => {
                JordanElementC::RealSym(a + b)
            }
            (JordanElementC::ComplexHerm(a), JordanElementC::ComplexHerm(b)) => {
                JordanElementC::ComplexHerm(a + b)
            }
            (JordanElementC::Lorentz(a), JordanElementC::Lorentz(b)) => {
                JordanElementC::Lorentz(a + b)
            }
            _ => panic!(
                "backend mismatch in add: {} vs {}",
                self.backend(),
                other.backend()
            ),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(c(-1.0)))
    }

    /// Real part, as an element of `V`. For the `ComplexHerm` backend this is
    /// the Hermitian part `(z + z*)/2`.
    pub fn real_part(&self) -> JordanElement {
        match self {
            JordanElementC::RealLine(x) => JordanElement::RealLine(x.re),
            JordanElementC::RealSym(m) => JordanElement::RealSym(m.map(|z| z.re)),
            JordanElementC::ComplexHerm(m) => {
                JordanElement::ComplexHerm((m + m.adjoint()).map(|z| z * c(0.5)))
            }
            JordanElementC::Lorentz(v) => JordanElement::Lorentz(v.map(|z| z.re)),
        }
    }

    /// Imaginary part, as an element of `V` (`(z - z*)/2i` on matrices).
    pub fn imag_part(&self) -> JordanElement {
        self.scale(Complex64::new(0.0, -1.0)).real_part()
    }

    pub fn norm(&self) -> f64 {
        match self {
            JordanElementC::RealLine(x) => x.norm(),
            JordanElementC::RealSym(m) => m.norm(),
            JordanElementC::ComplexHerm(m) => m.norm(),
            JordanElementC::Lorentz(v) => v.norm(),
        }
    }

    /// Largest singular value of the payload; the operator norm used for
    /// bounded-domain membership. For the Lorentz backend this is the largest
    /// modulus of the two spectral values (the documented rank-2 rule).
    pub fn spectral_norm(&self) -> f64 {
        match self {
            JordanElementC::RealLine(x) => x.norm(),
            JordanElementC::RealSym(m) | JordanElementC::ComplexHerm(m) => {
                m.clone().singular_values()[0]
            }
            JordanElementC::Lorentz(_) => spectral_values(self)
                .iter()
                .map(|l| l.norm())
                .fold(0.0, f64::max),
        }
    }
}

/// Requires matching backends (and shapes) or reports a `BackendMismatch`.
fn same_backend(a: &JordanElementC, b: &JordanElementC) -> Result<()> {
    let ok = matches!(
        (a, b),
        (JordanElementC::RealLine(_), JordanElementC::RealLine(_))
            | (JordanElementC::RealSym(_), JordanElementC::RealSym(_))
            | (JordanElementC::ComplexHerm(_), JordanElementC::ComplexHerm(_))
            | (JordanElementC::Lorentz(_), JordanElementC::Lorentz(_))
    );
    if ok {
        Ok(())
    } else {
        Err(Error::BackendMismatch(a.backend(), b.backend()))
    }
}

/// The Jordan product `x o y`.
pub fn jmul(x: &JordanElementC, y: &JordanElementC) -> Result<JordanElementC> {
    same_backend(x, y)?;
    Ok(match (x, y) {
        (JordanElementC::RealLine(a), JordanElementC::RealLine(b)) => {
            JordanElementC::RealLine(a * b)
        }
        (JordanElementC::RealSym(a), JordanElementC::RealSym(b)) => {
            JordanElementC::RealSym((a * b + b * a).map(|z| z * c(0.5)))
        }
        (JordanElementC::ComplexHerm(a), JordanElementC::ComplexHerm(b)) => {
            JordanElementC::ComplexHerm((a * b + b * a).map(|z| z * c(0.5)))
        }
        (JordanElementC::Lorentz(a), JordanElementC::Lorentz(b)) => {
            let n = a.len();
            let dot: Complex64 = (0..n).map(|i| a[i] * b[i]).sum();
            let mut v = DVector::from_element(n, c(0.0));
            v[0] = dot;
            for i in 1..n {
                v[i] = a[0] * b[i] + b[0] * a[i];
            }
            JordanElementC::Lorentz(v)
        }
        _ => unreachable!(),
    })
}

/// Jordan trace: `r/n Tr L(x)`; matrix trace on the matrix backends, `2 x_0`
/// on the Lorentz backend.
pub fn jtrace(x: &JordanElementC) -> Complex64 {
    match x {
        JordanElementC::RealLine(a) => *a,
        JordanElementC::RealSym(m) | JordanElementC::ComplexHerm(m) => m.trace(),
        JordanElementC::Lorentz(v) => 2.0 * v[0],
    }
}

/// The bilinear trace form `(x|y) = tr(x o y)` on `V_C`.
pub fn trace_form(x: &JordanElementC, y: &JordanElementC) -> Result<Complex64> {
    Ok(jtrace(&jmul(x, y)?))
}

/// Jordan determinant: matrix determinant, `x_0^2 - |xbar|^2` on Lorentz.
pub fn jdet(x: &JordanElementC) -> Complex64 {
    match x {
        JordanElementC::RealLine(a) => *a,
        JordanElementC::RealSym(m) | JordanElementC::ComplexHerm(m) => m.clone().lu().determinant(),
        JordanElementC::Lorentz(v) => {
            let spatial: Complex64 = (1..v.len()).map(|i| v[i] * v[i]).sum();
            v[0] * v[0] - spatial
        }
    }
}

/// Jordan inverse; `SingularElement` below the relative determinant
/// threshold.
pub fn jinv(x: &JordanElementC) -> Result<JordanElementC> {
    let rank = match x {
        JordanElementC::RealLine(_) => 1,
        JordanElementC::RealSym(m) | JordanElementC::ComplexHerm(m) => m.nrows(),
        JordanElementC::Lorentz(_) => 2,
    };
    let det = jdet(x);
    let scale = (1.0 + x.norm()).powi(rank as i32);
    if det.norm() <= 1e-12 * scale {
        return Err(Error::SingularElement(det.norm()));
    }
    Ok(match x {
        JordanElementC::RealLine(a) => JordanElementC::RealLine(1.0 / a),
        JordanElementC::RealSym(m) => {
            JordanElementC::RealSym(m.clone().try_inverse().ok_or(Error::SingularElement(0.0))?)
        }
        JordanElementC::ComplexHerm(m) => {
            JordanElementC::ComplexHerm(m.clone().try_inverse().ok_or(Error::SingularElement(0.0))?)
        }
        JordanElementC::Lorentz(v) => {
            let mut w = v.clone();
            for i in 1..v.len() {
                w[i] = -w[i];
            }
            JordanElementC::Lorentz(w.map(|z| z / det))
        }
    })
}

/// Square root of a closed-cone element; spectra on the boundary are nudged
/// by a hair above the cone threshold before taking the root. Errors when `x`
/// is outside the closed cone.
pub fn sqrt_regularized(cone: &ConeParams, x: &JordanElement) -> Result<JordanElement> {
    let min = x.eigenvalues().last().copied().unwrap();
    let tol = CONE_EPS * (1.0 + x.norm());
    if min <= -tol {
        return Err(Error::NotInClosedCone(min));
    }
    if min > tol {
        x.sqrt_omega()
    } else {
        x.add(&JordanElement::te(cone, 2.0 * tol + 1e-12)).sqrt_omega()
    }
}

/// `P(x) y = 2 x o (x o y) - (x o x) o y`, the quadratic representation
/// applied without assembling a matrix.
pub fn quad_apply(x: &JordanElementC, y: &JordanElementC) -> Result<JordanElementC> {
    let xy = jmul(x, y)?;
    let xxy = jmul(x, &xy)?;
    let xx = jmul(x, x)?;
    let xxy2 = jmul(&xx, y)?;
    Ok(xxy.scale(c(2.0)).sub(&xxy2))
}

/// Power sums `p_k = tr(x^k)` for `k = 1..=kmax`, with Jordan powers.
pub fn power_sums(x: &JordanElementC, kmax: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(kmax);
    let mut xk = x.clone();
    for k in 0..kmax {
        if k > 0 {
            xk = jmul(x, &xk).expect("same backend");
        }
        out.push(jtrace(&xk));
    }
    out
}

/// Spectral values of `z`: the roots of `t -> Delta(t e - z)`, via Newton's
/// identities and closed-form root formulas (rank <= 3).
pub fn spectral_values(z: &JordanElementC) -> Vec<Complex64> {
    match z {
        JordanElementC::RealLine(a) => vec![*a],
        JordanElementC::Lorentz(v) => {
            let spatial: Complex64 = (1..v.len()).map(|i| v[i] * v[i]).sum();
            let s = spatial.sqrt();
            vec![v[0] + s, v[0] - s]
        }
        JordanElementC::RealSym(m) | JordanElementC::ComplexHerm(m) => {
            let r = m.nrows();
            match r {
                1 => vec![m[(0, 0)]],
                2 => {
                    let e1 = m.trace();
                    let e2 = jdet(z);
                    roots_quadratic(e1, e2)
                }
                3 => {
                    let p = power_sums(z, 3);
                    let e1 = p[0];
                    let e2 = (p[0] * p[0] - p[1]) * c(0.5);
                    let e3 = jdet(z);
                    roots_cubic(e1, e2, e3)
                }
                _ => panic!("spectral values only implemented for rank <= 3"),
            }
        }
    }
}

/// Roots of `t^2 - e1 t + e2`.
fn roots_quadratic(e1: Complex64, e2: Complex64) -> Vec<Complex64> {
    let disc = (e1 * e1 - 4.0 * e2).sqrt();
    vec![(e1 + disc) * c(0.5), (e1 - disc) * c(0.5)]
}

/// Roots of `t^3 - e1 t^2 + e2 t - e3`, Cardano plus one Newton polish.
fn roots_cubic(e1: Complex64, e2: Complex64, e3: Complex64) -> Vec<Complex64> {
    // depressed cubic s^3 + p s + q with t = s + e1/3
    let shift = e1 / 3.0;
    let p = e2 - e1 * e1 / 3.0;
    let q = -2.0 * e1 * e1 * e1 / 27.0 + e1 * e2 / 3.0 - e3;
    let disc = (q * q * 0.25 + p * p * p / 27.0).sqrt();
    let mut u3 = -q * 0.5 + disc;
    if u3.norm() < 1e-30 {
        u3 = -q * 0.5 - disc;
    }
    let roots = if u3.norm() < 1e-30 {
        // p == q == 0: triple root
        vec![c(0.0); 3]
    } else {
        let u = u3.cbrt();
        let omega = Complex64::new(-0.5, 0.75f64.sqrt());
        [c(1.0), omega, omega * omega]
            .iter()
            .map(|&w| {
                let uw = u * w;
                uw - p / (3.0 * uw)
            })
            .collect()
    };
    roots
        .into_iter()
        .map(|s| {
            let mut t = s + shift;
            // one Newton step on the monic cubic
            for _ in 0..2 {
                let f = ((t - e1) * t + e2) * t - e3;
                let df = (3.0 * t - 2.0 * e1) * t + e2;
                if df.norm() > 1e-14 {
                    t -= f / df;
                }
            }
            t
        })
        .collect()
}

/// An element of `K cap L = Aut(V)`, in the concrete form each backend acts
/// by.
#[derive(Debug, Clone)]
pub enum KLRotation {
    Identity,
    /// Orthogonal `k`: acts on `Sym(r, R)` by `x -> k x k^T`.
    Orthogonal(DMatrix<f64>),
    /// Unitary `u`: acts on the complexified matrix algebra by `z -> u z u*`.
    Unitary(DMatrix<Complex64>),
    /// Rotation of the spatial part of a Lorentz vector.
    Spatial(DMatrix<f64>),
}

impl KLRotation {
    pub fn inverse(&self) -> KLRotation {
        match self {
            KLRotation::Identity => KLRotation::Identity,
            KLRotation::Orthogonal(k) => KLRotation::Orthogonal(k.transpose()),
            KLRotation::Unitary(u) => KLRotation::Unitary(u.adjoint()),
            KLRotation::Spatial(k) => KLRotation::Spatial(k.transpose()),
        }
    }

    pub fn apply(&self, x: &JordanElement) -> JordanElement {
        match (self, x) {
            (KLRotation::Identity, _) => x.clone(),
            (KLRotation::Orthogonal(k), JordanElement::RealSym(m)) => {
                JordanElement::RealSym(k * m * k.transpose())
            }
            (KLRotation::Unitary(u), JordanElement::ComplexHerm(m)) => {
                JordanElement::ComplexHerm(u * m * u.adjoint())
            }
            (KLRotation::Spatial(k), JordanElement::Lorentz(v)) => {
                let spatial = v.rows(1, v.len() - 1).clone_owned();
                let rotated = k * spatial;
                let mut w = DVector::zeros(v.len());
                w[0] = v[0];
                for i in 1..v.len() {
                    w[i] = rotated[i - 1];
                }
                JordanElement::Lorentz(w)
            }
            _ => panic!("rotation does not match element backend"),
        }
    }

    /// Complex-linear extension of the action to `V_C`.
    pub fn apply_c(&self, z: &JordanElementC) -> JordanElementC {
        match (self, z) {
            (KLRotation::Identity, _) => z.clone(),
            (KLRotation::Orthogonal(k), JordanElementC::RealSym(m)) => {
                let kc = k.map(c);
                JordanElementC::RealSym(&kc * m * kc.transpose())
            }
            (KLRotation::Unitary(u), JordanElementC::ComplexHerm(m)) => {
                JordanElementC::ComplexHerm(u * m * u.adjoint())
            }
            (KLRotation::Spatial(k), JordanElementC::Lorentz(v)) => {
                let kc = k.map(c);
                let spatial = v.rows(1, v.len() - 1).clone_owned();
                let rotated = kc * spatial;
                let mut w = DVector::from_element(v.len(), c(0.0));
                w[0] = v[0];
                for i in 1..v.len() {
                    w[i] = rotated[i - 1];
                }
                JordanElementC::Lorentz(w)
            }
            _ => panic!("rotation does not match element backend"),
        }
    }
}

/// Haar-orthogonal matrix via QR of a Gaussian matrix with the R-diagonal
/// sign correction.
fn haar_orthogonal<R: Rng>(dim: usize, rng: &mut R) -> DMatrix<f64> {
    let g: DMatrix<f64> = DMatrix::from_fn(dim, dim, |_, _| StandardNormal.sample(rng));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        if r[(j, j)] < 0.0 {
            for i in 0..dim {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    q
}

/// Haar-unitary matrix, complex Gaussian QR with phase correction.
fn haar_unitary<R: Rng>(dim: usize, rng: &mut R) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
    });
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        let d = r[(j, j)];
        if d.norm() > 0.0 {
            let phase = d / d.norm();
            for i in 0..dim {
                q[(i, j)] *= phase.conj();
            }
        }
    }
    q
}

/// Samples an element of `K cap L` from the provided stream.
pub fn haar_kl_sample_rng<R: Rng>(cone: &ConeParams, rng: &mut R) -> KLRotation {
    match cone.family() {
        Family::RealLine => KLRotation::Identity,
        Family::RealSym => KLRotation::Orthogonal(haar_orthogonal(cone.rank(), rng)),
        Family::ComplexHerm => KLRotation::Unitary(haar_unitary(cone.rank(), rng)),
        Family::Lorentz => KLRotation::Spatial(haar_orthogonal(cone.dim_n() - 1, rng)),
    }
}

/// Seeded variant; every caller owns its stream, there is no global RNG.
pub fn haar_kl_sample(cone: &ConeParams, seed: u64) -> KLRotation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    haar_kl_sample_rng(cone, &mut rng)
}

/// Random element of `V` with independent standard Gaussian coordinates.
pub fn random_element<R: Rng>(cone: &ConeParams, rng: &mut R) -> JordanElement {
    let v = DVector::from_fn(cone.dim_n(), |_, _| StandardNormal.sample(rng));
    JordanElement::from_coords(cone, &v)
}

/// Random element of the open cone: eigenvalues uniform in `[lo, hi]`,
/// frame rotated by a Haar sample.
pub fn random_in_cone<R: Rng>(
    cone: &ConeParams,
    lo: f64,
    hi: f64,
    rng: &mut R,
) -> JordanElement {
    let ev: Vec<f64> = (0..cone.rank()).map(|_| rng.random_range(lo..hi)).collect();
    let mut sorted = ev;
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let diag = JordanElement::from_eigenvalues(cone, &sorted);
    let k = haar_kl_sample_rng(cone, rng);
    k.apply(&diag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::ConeParams;
    use approx::assert_relative_eq;

    fn test_cones() -> Vec<ConeParams> {
        vec![
            ConeParams::real_line(),
            ConeParams::real_sym(2),
            ConeParams::real_sym(3),
            ConeParams::complex_herm(2),
            ConeParams::complex_herm(3),
            ConeParams::lorentz(3),
            ConeParams::lorentz(5),
        ]
    }

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn cnorm(z: Complex64) -> f64 {
        z.norm()
    }

    #[test]
    fn unit_law_and_trace() {
        for cone in test_cones() {
            let e = JordanElementC::unit(&cone);
            assert_relative_eq!(jtrace(&e).re, cone.rank() as f64, max_relative = 1e-14);
            let mut r = rng(7);
            for _ in 0..20 {
                let x = random_element(&cone, &mut r).complexify();
                let ex = jmul(&e, &x).unwrap();
                assert!(ex.sub(&x).norm() < 1e-12 * (1.0 + x.norm()));
            }
        }
    }

    #[test]
    fn commutativity_and_jordan_identity() {
        for cone in test_cones() {
            let mut r = rng(13);
            for _ in 0..100 {
                let x = random_element(&cone, &mut r).complexify();
                let y = random_element(&cone, &mut r).complexify();
                let xy = jmul(&x, &y).unwrap();
                let yx = jmul(&y, &x).unwrap();
                assert!(xy.sub(&yx).norm() < 1e-12 * (1.0 + xy.norm()));
                // x^2 o (x o y) = x o (x^2 o y)
                let xx = jmul(&x, &x).unwrap();
                let lhs = jmul(&xx, &xy).unwrap();
                let rhs = jmul(&x, &jmul(&xx, &y).unwrap()).unwrap();
                let scale = 1.0 + lhs.norm().max(rhs.norm());
                assert!(
                    lhs.sub(&rhs).norm() < 1e-10 * scale,
                    "{:?}", cone.family()
                );
            }
        }
    }

    #[test]
    fn orthogonal_idempotents() {
        let x = JordanElementC::RealSym(DMatrix::from_diagonal(&DVector::from_vec(vec![
            c(1.0),
            c(0.0),
        ])));
        let y = JordanElementC::RealSym(DMatrix::from_diagonal(&DVector::from_vec(vec![
            c(0.0),
            c(1.0),
        ])));
        assert!(jmul(&x, &y).unwrap().norm() < 1e-15);
    }

    #[test]
    fn lorentz_product_by_hand() {
        let a = JordanElementC::Lorentz(DVector::from_vec(vec![c(1.0), c(1.0), c(0.0)]));
        let b = JordanElementC::Lorentz(DVector::from_vec(vec![c(1.0), c(0.0), c(1.0)]));
        let ab = jmul(&a, &b).unwrap();
        match ab {
            JordanElementC::Lorentz(v) => {
                assert_relative_eq!(v[0].re, 1.0);
                assert_relative_eq!(v[1].re, 1.0);
                assert_relative_eq!(v[2].re, 1.0);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn backend_mismatch_detected() {
        let a = JordanElementC::RealLine(c(1.0));
        let b = JordanElementC::Lorentz(DVector::from_element(3, c(0.0)));
        assert!(matches!(jmul(&a, &b), Err(Error::BackendMismatch(_, _))));
    }

    #[test]
    fn trace_examples() {
        // RealSym: Jordan trace is the matrix trace; Lorentz: 2 x_0
        let m = JordanElementC::RealSym(DMatrix::from_row_slice(
            2,
            2,
            &[c(1.0), c(3.0), c(3.0), c(2.0)],
        ));
        assert_relative_eq!(jtrace(&m).re, 3.0);
        let v = JordanElementC::Lorentz(DVector::from_vec(vec![c(1.5), c(0.3), c(0.1)]));
        assert_relative_eq!(jtrace(&v).re, 3.0);
    }

    #[test]
    fn trace_is_normalized_multiplication_trace() {
        // tr(x) = (r/n) Tr L(x), the intrinsic definition, against the
        // per-backend closed forms
        for cone in test_cones() {
            let mut r = rng(53);
            for _ in 0..10 {
                let x = random_element(&cone, &mut r);
                let xc = x.complexify();
                let n = cone.dim_n();
                let mut trace_l = 0.0;
                for k in 0..n {
                    let mut unit = DVector::zeros(n);
                    unit[k] = 1.0;
                    let b = JordanElement::from_coords(&cone, &unit);
                    let img = jmul(&xc, &b.complexify()).unwrap().real_part();
                    trace_l += img.coords(&cone)[k];
                }
                let want = cone.rank() as f64 / n as f64 * trace_l;
                assert_relative_eq!(jtrace(&xc).re, want, max_relative = 1e-10, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn trace_form_positive_definite_on_v() {
        for cone in test_cones() {
            let mut r = rng(5);
            for _ in 0..20 {
                let x = random_element(&cone, &mut r);
                let q = trace_form(&x.complexify(), &x.complexify()).unwrap();
                if x.norm() > 1e-9 {
                    assert!(q.re > 0.0 && q.im.abs() < 1e-12 * q.re);
                }
            }
        }
    }

    #[test]
    fn det_examples() {
        for cone in test_cones() {
            let e = JordanElementC::unit(&cone);
            assert!(cnorm(jdet(&e) - c(1.0)) < 1e-13);
            let t = 1.7;
            let te = e.scale(c(t));
            assert_relative_eq!(
                jdet(&te).re,
                t.powi(cone.rank() as i32),
                max_relative = 1e-12
            );
        }
        let v = JordanElementC::Lorentz(DVector::from_vec(vec![c(2.0), c(1.0), c(0.0)]));
        assert_relative_eq!(jdet(&v).re, 3.0);
    }

    #[test]
    fn inverse_examples() {
        for cone in test_cones() {
            let e = JordanElementC::unit(&cone);
            assert!(jinv(&e).unwrap().sub(&e).norm() < 1e-13);
            let mut r = rng(3);
            for _ in 0..20 {
                let x = random_in_cone(&cone, 0.4, 2.5, &mut r).complexify();
                let xi = jinv(&x).unwrap();
                let prod = jmul(&x, &xi).unwrap();
                assert!(
                    prod.sub(&e).norm() < 1e-10,
                    "{:?}: {}",
                    cone.family(),
                    prod.sub(&e).norm()
                );
            }
        }
        // Lorentz closed form: (2,1,0)^{-1} = (2,-1,0)/3
        let v = JordanElementC::Lorentz(DVector::from_vec(vec![c(2.0), c(1.0), c(0.0)]));
        let vi = jinv(&v).unwrap();
        match vi {
            JordanElementC::Lorentz(w) => {
                assert_relative_eq!(w[0].re, 2.0 / 3.0, max_relative = 1e-14);
                assert_relative_eq!(w[1].re, -1.0 / 3.0, max_relative = 1e-14);
            }
            _ => unreachable!(),
        }
        let zero = JordanElementC::RealLine(c(0.0));
        assert!(matches!(jinv(&zero), Err(Error::SingularElement(_))));
    }

    #[test]
    fn quad_rep_identity_and_det() {
        for cone in test_cones() {
            let e = JordanElement::unit(&cone);
            let p = e.quad_rep(&cone);
            assert!((p - DMatrix::identity(cone.dim_n(), cone.dim_n())).norm() < 1e-12);
            let mut r = rng(11);
            for _ in 0..10 {
                let x = random_element(&cone, &mut r);
                let p = x.quad_rep(&cone);
                let det_p = p.determinant();
                let dx = jdet(&x.complexify()).re;
                let want = dx.powf(2.0 * cone.dim_n() as f64 / cone.rank() as f64);
                // Delta(x)^{2n/r} may be irrational for odd powers of negatives;
                // compare on the absolute value.
                assert_relative_eq!(
                    det_p.abs(),
                    want.abs(),
                    max_relative = 1e-9,
                );
                // P(x) e = x^2
                let xc = x.complexify();
                let px_e = quad_apply(&xc, &JordanElementC::unit(&cone)).unwrap();
                let xx = jmul(&xc, &xc).unwrap();
                assert!(px_e.sub(&xx).norm() < 1e-10 * (1.0 + xx.norm()));
                // matrix route agrees with the direct route
                let y = random_element(&cone, &mut r);
                let via_matrix =
                    JordanElement::from_coords(&cone, &(x.quad_rep(&cone) * y.coords(&cone)));
                let direct = quad_apply(&xc, &y.complexify()).unwrap().real_part();
                assert!(via_matrix.add(&direct.scale(-1.0)).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn sqrt_in_cone() {
        for cone in test_cones() {
            let e = JordanElement::unit(&cone);
            assert!(e.sqrt_omega().unwrap().add(&e.scale(-1.0)).norm() < 1e-13);
            let t = 1.3;
            let s = JordanElement::te(&cone, t * t).sqrt_omega().unwrap();
            assert!(s.add(&JordanElement::te(&cone, t).scale(-1.0)).norm() < 1e-12);
            let mut r = rng(17);
            for _ in 0..20 {
                let x = random_in_cone(&cone, 0.2, 3.0, &mut r);
                let y = x.sqrt_omega().unwrap();
                assert!(y.in_cone());
                let yy = jmul(&y.complexify(), &y.complexify()).unwrap().real_part();
                assert!(yy.add(&x.scale(-1.0)).norm() < 1e-10 * (1.0 + x.norm()));
            }
            let neg = JordanElement::te(&cone, -1.0);
            assert!(matches!(neg.sqrt_omega(), Err(Error::NotInCone(_))));
        }
    }

    #[test]
    fn power_sums_match_eigenvalues() {
        for cone in test_cones() {
            let mut r = rng(23);
            for _ in 0..10 {
                let x = random_element(&cone, &mut r);
                let ps = power_sums(&x.complexify(), 6);
                let ev = x.eigenvalues();
                for (k, p) in ps.iter().enumerate() {
                    let want: f64 = ev.iter().map(|l| l.powi(k as i32 + 1)).sum();
                    assert!(
                        (p.re - want).abs() < 1e-9 * (1.0 + want.abs()),
                        "{:?} k={} {} vs {}",
                        cone.family(),
                        k + 1,
                        p.re,
                        want
                    );
                    assert!(p.im.abs() < 1e-10 * (1.0 + want.abs()));
                }
            }
        }
    }

    #[test]
    fn power_sums_bracketing_free() {
        // x^4 computed as x o x^3 equals (x^2) o (x^2): power associativity
        for cone in test_cones() {
            let mut r = rng(29);
            let x = random_element(&cone, &mut r).complexify();
            let x2 = jmul(&x, &x).unwrap();
            let x3 = jmul(&x, &x2).unwrap();
            let x4a = jmul(&x, &x3).unwrap();
            let x4b = jmul(&x2, &x2).unwrap();
            assert!(x4a.sub(&x4b).norm() < 1e-10 * (1.0 + x4a.norm()));
        }
    }

    #[test]
    fn spectral_values_match_char_poly() {
        for cone in test_cones() {
            let mut r = rng(31);
            for _ in 0..20 {
                // complex argument: x + i y
                let x = random_element(&cone, &mut r).complexify();
                let y = random_element(&cone, &mut r).complexify();
                let z = x.add(&y.scale(Complex64::new(0.0, 1.0)));
                let vals = spectral_values(&z);
                assert_eq!(vals.len(), cone.rank());
                // sum = trace, product = det
                let sum: Complex64 = vals.iter().sum();
                let prod: Complex64 = vals.iter().product();
                assert!(cnorm(sum - jtrace(&z)) < 1e-8 * (1.0 + cnorm(jtrace(&z))));
                assert!(cnorm(prod - jdet(&z)) < 1e-8 * (1.0 + cnorm(jdet(&z))));
            }
        }
    }

    #[test]
    fn haar_samples_are_automorphisms() {
        for cone in test_cones() {
            let mut r = rng(37);
            for trial in 0..20 {
                let k = haar_kl_sample(&cone, 1000 + trial);
                let e = JordanElement::unit(&cone);
                assert!(k.apply(&e).add(&e.scale(-1.0)).norm() < 1e-12);
                let x = random_element(&cone, &mut r);
                let y = random_element(&cone, &mut r);
                let kx = k.apply(&x).complexify();
                let ky = k.apply(&y).complexify();
                let lhs = jmul(&kx, &ky).unwrap();
                let rhs = k.apply_c(&jmul(&x.complexify(), &y.complexify()).unwrap());
                assert!(lhs.sub(&rhs).norm() < 1e-10 * (1.0 + lhs.norm()));
                // determinant and trace invariance
                let xc = x.complexify();
                assert!(cnorm(jdet(&kx) - jdet(&xc)) < 1e-10 * (1.0 + cnorm(jdet(&xc))));
                assert!(cnorm(jtrace(&kx) - jtrace(&xc)) < 1e-10 * (1.0 + cnorm(jtrace(&xc))));
            }
            // RealLine: K cap L is trivial
            if cone.family() == Family::RealLine {
                assert!(matches!(haar_kl_sample(&cone, 0), KLRotation::Identity));
            }
        }
    }

    #[test]
    fn det_of_inverse_sum_identity() {
        // Delta(a^{-1} + b^{-1}) = Delta(a)^{-1} Delta(b)^{-1} Delta(a+b)
        for cone in test_cones() {
            let mut r = rng(41);
            for _ in 0..20 {
                let a = random_in_cone(&cone, 0.3, 2.0, &mut r).complexify();
                let b = random_in_cone(&cone, 0.3, 2.0, &mut r).complexify();
                let lhs = jdet(&jinv(&a).unwrap().add(&jinv(&b).unwrap()));
                let rhs = jdet(&a.add(&b)) / (jdet(&a) * jdet(&b));
                assert!(
                    cnorm(lhs - rhs) < 1e-9 * cnorm(rhs),
                    "{:?}: {} vs {}",
                    cone.family(),
                    lhs,
                    rhs
                );
            }
        }
    }

    #[test]
    fn coords_roundtrip_and_trace_form() {
        for cone in test_cones() {
            let mut r = rng(43);
            for _ in 0..10 {
                let x = random_element(&cone, &mut r);
                let v = x.coords(&cone);
                assert_eq!(v.len(), cone.dim_n());
                let back = JordanElement::from_coords(&cone, &v);
                assert!(back.add(&x.scale(-1.0)).norm() < 1e-12);
                // trace form is the euclidean form in coordinates (Lorentz
                // carries the uniform factor 2)
                let y = random_element(&cone, &mut r);
                let w = y.coords(&cone);
                let form = trace_form(&x.complexify(), &y.complexify()).unwrap().re;
                let factor = if cone.family() == Family::Lorentz { 2.0 } else { 1.0 };
                assert_relative_eq!(form, factor * v.dot(&w), max_relative = 1e-10, epsilon = 1e-12);
            }
        }
    }
}
