use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use symcone::bessel::{ibessel, SeriesTruncation};
use symcone::cone::ConeParams;
use symcone::harness::{check_genfct, VerifyConfig};
use symcone::jordan::{haar_kl_sample_rng, random_element, JordanElement, JordanElementC};
use symcone::laguerre::laguerre_fn;
use symcone::models::{expansion_partial, Model};
use symcone::partition::Partition;
use symcone::spherical::{jack_coeffs, phi_eval};

fn bench_phi_eval(c: &mut Criterion) {
    let cone = ConeParams::real_sym(2);
    let m = Partition::new(&[6, 3]).unwrap();
    jack_coeffs(&cone, &m).unwrap(); // warm the coefficient cache
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = random_element(&cone, &mut rng).complexify();
    c.bench_function("phi_eval realsym2 m=(6,3)", |b| {
        b.iter(|| phi_eval(&cone, black_box(&m), black_box(&x)).unwrap())
    });
}

fn bench_laguerre(c: &mut Criterion) {
    let cone = ConeParams::real_sym(2);
    let m = Partition::new(&[5, 2]).unwrap();
    let x = JordanElement::te(&cone, 0.7);
    laguerre_fn(&cone, 2.5, &m, &x).unwrap(); // warm the binomial cache
    c.bench_function("laguerre_fn realsym2 m=(5,2)", |b| {
        b.iter(|| laguerre_fn(&cone, 2.5, black_box(&m), black_box(&x)).unwrap())
    });
}

fn bench_ibessel(c: &mut Criterion) {
    let cone = ConeParams::complex_herm(2);
    let trunc = SeriesTruncation::new(24, 1e-6);
    let z = JordanElementC::unit(&cone).scale(Complex64::new(0.8, 0.3));
    ibessel(&cone, 2.5, &z, &trunc).unwrap();
    c.bench_function("ibessel complexherm2 M=24", |b| {
        b.iter(|| ibessel(&cone, 2.5, black_box(&z), &trunc).unwrap())
    });
}

fn bench_haar_sample(c: &mut Criterion) {
    let cone = ConeParams::real_sym(3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    c.bench_function("haar_kl_sample realsym3", |b| {
        b.iter(|| haar_kl_sample_rng(&cone, &mut rng))
    });
}

fn bench_expansion(c: &mut Criterion) {
    let cone = ConeParams::real_sym(2);
    let trunc = SeriesTruncation::new(20, 1e-6);
    let w = JordanElementC::unit(&cone).scale(Complex64::new(0.3, 0.0));
    expansion_partial(Model::Disc, &cone, 3.0, 0.5, &w, &trunc).unwrap();
    c.bench_function("expansion_partial disc M=20", |b| {
        b.iter(|| expansion_partial(Model::Disc, &cone, 3.0, 0.5, black_box(&w), &trunc).unwrap())
    });
}

fn bench_genfct_deterministic(c: &mut Criterion) {
    let cone = ConeParams::real_sym(2);
    let cfg = VerifyConfig::default();
    let trunc = SeriesTruncation::new(20, 1e-6);
    let w = JordanElement::from_eigenvalues(&cone, &[0.3, -0.2]).complexify();
    let u = JordanElement::te(&cone, 0.5);
    c.bench_function("check_genfct te M=20", |b| {
        b.iter(|| {
            check_genfct(&cone, 2.0, black_box(&w), &u, &trunc, &cfg, "bench", 1e-7, 2).unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_phi_eval,
    bench_laguerre,
    bench_ibessel,
    bench_haar_sample,
    bench_expansion,
    bench_genfct_deterministic
);
criterion_main!(benches);
