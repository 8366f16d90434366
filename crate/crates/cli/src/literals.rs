//! The cone and element mini-grammar.
//!
//! Cones: `line`, `realsym:R`, `complexherm:R`, `lorentz:N`.
//! Elements: `te:T` (scalar multiple of the unit), `diag:A,B,...`
//! (eigenvalue/diagonal literal), `lorentz:X0,X1,...` (Lorentz coordinates),
//! or a bare scalar on the line. Complexified literals accept components of
//! the form `a`, `ai`, or `a+bi` / `a-bi`.
//!
//! Malformed literals terminate the process with exit code 2 (bad flags).

use num_complex::Complex64;
use symcone::cone::ConeParams;
use symcone::jordan::{JordanElement, JordanElementC};
use symcone::partition::Partition;

pub fn bad_flags(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

pub fn parse_f64_or_exit(s: &str, what: &str) -> f64 {
    s.trim()
        .parse()
        .unwrap_or_else(|_| bad_flags(&format!("{what} must be a number, got `{s}`")))
}

pub fn parse_cone(spec: &str) -> ConeParams {
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (spec, None),
    };
    let arg_usize = |what: &str| -> usize {
        arg.unwrap_or_else(|| bad_flags(&format!("{what} needs a size, e.g. `{what}:2`")))
            .parse()
            .unwrap_or_else(|_| bad_flags(&format!("{what} size must be an integer")))
    };
    match name {
        "line" => ConeParams::real_line(),
        "realsym" => {
            let r = arg_usize("realsym");
            if r < 1 || r > 3 {
                bad_flags("realsym rank must be 1..=3");
            }
            ConeParams::real_sym(r)
        }
        "complexherm" => {
            let r = arg_usize("complexherm");
            if r < 1 || r > 3 {
                bad_flags("complexherm rank must be 1..=3");
            }
            ConeParams::complex_herm(r)
        }
        "lorentz" => {
            let n = arg_usize("lorentz");
            if n < 3 {
                bad_flags("lorentz dimension must be at least 3");
            }
            ConeParams::lorentz(n)
        }
        other => bad_flags(&format!(
            "unknown cone `{other}`; use line, realsym:R, complexherm:R or lorentz:N"
        )),
    }
}

pub fn parse_partition_arg(spec: &str, cone: &ConeParams) -> Partition {
    let parts: Vec<u32> = spec
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .unwrap_or_else(|_| bad_flags(&format!("partition part `{p}` must be an integer")))
        })
        .collect();
    if parts.len() > cone.rank() {
        bad_flags(&format!(
            "partition has {} parts but the cone has rank {}",
            parts.len(),
            cone.rank()
        ));
    }
    Partition::new(&parts)
        .unwrap_or_else(|| bad_flags(&format!("parts must be weakly decreasing, got `{spec}`")))
}

/// One complex component: `a`, `bi`, `a+bi`, `a-bi`.
fn parse_complex(s: &str) -> Complex64 {
    let t = s.trim();
    if let Some(im) = t.strip_suffix('i') {
        // split the imaginary suffix from an optional real part
        let bytes = im.as_bytes();
        for pos in (1..bytes.len()).rev() {
            if (bytes[pos] == b'+' || bytes[pos] == b'-')
                && bytes[pos - 1] != b'e'
                && bytes[pos - 1] != b'E'
            {
                let re = parse_f64_or_exit(&im[..pos], "real part");
                let imag = if &im[pos..] == "+" {
                    1.0
                } else if &im[pos..] == "-" {
                    -1.0
                } else {
                    parse_f64_or_exit(&im[pos..], "imaginary part")
                };
                return Complex64::new(re, imag);
            }
        }
        let imag = if im.is_empty() { 1.0 } else { parse_f64_or_exit(im, "imaginary part") };
        return Complex64::new(0.0, imag);
    }
    Complex64::new(parse_f64_or_exit(t, "component"), 0.0)
}

fn components_c(body: &str) -> Vec<Complex64> {
    body.split(',').map(parse_complex).collect()
}

pub fn parse_element_c(spec: &str, cone: &ConeParams) -> JordanElementC {
    let (kind, body) = match spec.split_once(':') {
        Some((k, b)) => (k, b),
        None => {
            if cone.rank() == 1 && cone.dim_n() == 1 {
                return JordanElementC::RealLine(parse_complex(spec));
            }
            bad_flags(&format!(
                "element literal `{spec}` needs a prefix: te:, diag: or lorentz:"
            ));
        }
    };
    match kind {
        "te" => {
            let t = parse_complex(body);
            JordanElementC::unit(cone).scale(t)
        }
        "diag" => {
            let comps = components_c(body);
            if comps.len() != cone.rank() {
                bad_flags(&format!(
                    "diag literal needs {} entries for this cone",
                    cone.rank()
                ));
            }
            JordanElementC::from_diag(cone, &comps)
        }
        "lorentz" => {
            if cone.family() != symcone::cone::Family::Lorentz {
                bad_flags("lorentz literals require a lorentz cone");
            }
            let comps = components_c(body);
            if comps.len() != cone.dim_n() {
                bad_flags(&format!(
                    "lorentz literal needs {} coordinates",
                    cone.dim_n()
                ));
            }
            JordanElementC::from_lorentz_coords(cone, &comps)
        }
        other => bad_flags(&format!("unknown element prefix `{other}`")),
    }
}

pub fn parse_element(spec: &str, cone: &ConeParams) -> JordanElement {
    let z = parse_element_c(spec, cone);
    let x = z.real_part();
    let imag = z.imag_part().norm();
    if imag > 1e-12 * (1.0 + x.norm()) {
        bad_flags("this argument must be a real cone element");
    }
    x
}
