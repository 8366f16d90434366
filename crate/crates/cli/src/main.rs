//! `symcone` command line: evaluate the special functions, run verification
//! suites, emit tables, manage the Jack-coefficient cache.
//!
//! Exit codes: 0 success (all checks pass), 1 at least one failed check,
//! 2 malformed flags or literals, 3 domain errors from the library.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use symcone::bessel::{ibessel, ibessel2, SeriesTruncation};
use symcone::cone::{dim_km, pochhammer};
use symcone::harness::{run_suite, CheckReport, VerifyConfig};
use symcone::jordan::JordanElement;
use symcone::laguerre::{laguerre_fn, laguerre_poly};
use symcone::models::{psi_basis, whittaker_disc, whittaker_fock, whittaker_tube, Model};
use symcone::partition::enumerate_partitions;
use symcone::spherical::{load_cache, phi_eval, save_cache, set_weight_limit};

mod literals;
use literals::{parse_cone, parse_element, parse_element_c, parse_partition_arg};

#[derive(Parser)]
#[command(name = "symcone", version, about = "Special functions on symmetric cones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalFlags,
}

#[derive(Args, Clone)]
struct GlobalFlags {
    /// Master seed for every Monte-Carlo stream.
    #[arg(long, global = true, default_value_t = 12345)]
    seed: u64,
    /// Partition-weight bound for series and coefficient generation.
    #[arg(long, global = true, default_value_t = 40)]
    max_weight: u32,
    /// Tolerance override applied to every check in a verify run.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Haar sample count for Monte-Carlo averages.
    #[arg(long, global = true, default_value_t = 100_000)]
    haar_samples: usize,
    /// Quadrature node count.
    #[arg(long, global = true, default_value_t = 200)]
    nodes: usize,
    /// Output format for reports and tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the report/table to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval {
        #[command(subcommand)]
        what: EvalCommand,
    },
    /// Run a verification suite and emit one report row per check.
    Verify {
        /// genfct | genfct-fock | fk-ex1 | expansions | recurrence |
        /// transforms | jordan-axioms | all
        suite: String,
        /// Reduced sample counts and thinner grids.
        #[arg(long)]
        quick: bool,
        /// Restrict the suite to one cone (e.g. realsym:2).
        #[arg(long)]
        cone: Option<String>,
        /// Replace the suite's parameter list with a single nu.
        #[arg(long)]
        nu: Option<f64>,
        /// Whittaker parameter t where a suite uses one.
        #[arg(long)]
        t: Option<f64>,
        /// Ignored selector for forward compatibility of scripted runs.
        #[arg(long, default_value = "default")]
        grid: String,
    },
    /// Emit a table as CSV/JSON.
    Table {
        #[command(subcommand)]
        what: TableCommand,
    },
    /// Manage the on-disk Jack-coefficient cache (jackcache.tsv in
    /// SYMCONE_CACHE_DIR, default the working directory).
    Cache {
        #[command(subcommand)]
        what: CacheCommand,
    },
}

#[derive(Subcommand)]
enum EvalCommand {
    /// Spherical polynomial Phi_m(x).
    Phi {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        m: String,
        #[arg(long)]
        x: String,
    },
    /// Laguerre function ell_m^nu(x) (or polynomial L_m^nu(x) with --poly).
    Laguerre {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        m: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        poly: bool,
    },
    /// I-Bessel series I_nu(z) or two-argument I_nu(z, x) with --x.
    Ibessel {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        z: String,
        #[arg(long)]
        x: Option<String>,
        #[arg(long, default_value_t = 1e-9)]
        tail_tol: f64,
    },
    /// Whittaker vector in a model at a point.
    Whittaker {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        cone: String,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        v: String,
        #[arg(long)]
        z: String,
    },
    /// K-type basis vector Psi_m^nu(z) in the tube model.
    Psi {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        m: String,
        #[arg(long)]
        z: String,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum ModelArg {
    Tube,
    Disc,
    Fock,
}

#[derive(Subcommand)]
enum TableCommand {
    /// K-type dimensions d_m and Pochhammer values up to a weight.
    Dims {
        #[arg(long)]
        cone: String,
        #[arg(long, default_value_t = 2.0)]
        nu: f64,
    },
    /// Laguerre function values on a scalar grid t e.
    Laguerre {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        m: String,
        /// Grid start:stop:count over t.
        #[arg(long, default_value = "0.1:2.0:20")]
        grid: String,
    },
    /// Expansion-coefficient rows of the Whittaker vector per model.
    Coeffs {
        #[arg(long, value_enum)]
        model: CoeffModelArg,
        #[arg(long)]
        cone: String,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        t: f64,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum CoeffModelArg {
    L2omega,
    Tube,
    Disc,
    Fock,
}

#[derive(Subcommand)]
enum CacheCommand {
    /// Generate coefficients for a cone up to the weight bound and save.
    Build {
        #[arg(long)]
        cone: String,
    },
    /// Print the cache location and row count.
    Info,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_weight_limit(cli.global.max_weight.max(40) + 10);
    load_cache_if_present();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
    }
}

fn cache_path() -> std::path::PathBuf {
    let dir = std::env::var("SYMCONE_CACHE_DIR").unwrap_or_else(|_| ".".to_string());
    std::path::Path::new(&dir).join("jackcache.tsv")
}

fn load_cache_if_present() {
    let path = cache_path();
    if path.exists() {
        if let Err(err) = load_cache(&path) {
            eprintln!("warning: ignoring unreadable cache {}: {err}", path.display());
        }
    }
}

fn run(cli: Cli) -> symcone::Result<ExitCode> {
    match cli.command {
        Command::Eval { what } => {
            let value = eval(&what, &cli.global)?;
            emit_value(value);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, quick, cone, nu, t, grid: _ } => {
            const SUITES: [&str; 8] = [
                "genfct",
                "genfct-fock",
                "fk-ex1",
                "expansions",
                "recurrence",
                "transforms",
                "jordan-axioms",
                "all",
            ];
            if !SUITES.contains(&suite.as_str()) {
                literals::bad_flags(&format!(
                    "unknown suite `{suite}`; expected one of {}",
                    SUITES.join(", ")
                ));
            }
            // validate the restriction early so typos exit with code 2
            let cone_filter = cone.map(|c| parse_cone(&c).label());
            let cfg = VerifyConfig {
                seed: cli.global.seed,
                haar_samples: cli.global.haar_samples,
                nodes: cli.global.nodes,
                tol_override: cli.global.tol,
                quick,
                cone_filter,
                nu_override: nu,
                t_override: t,
                m_max_override: if cli.global.max_weight == 40 {
                    None
                } else {
                    Some(cli.global.max_weight)
                },
            };
            let reports = run_suite(&suite, &cfg)?;
            write_reports(&reports, &cli.global);
            let failed = reports.iter().filter(|r| !r.pass).count();
            if failed > 0 {
                eprintln!("{failed} of {} checks failed", reports.len());
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Table { what } => {
            table(&what, &cli.global)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cache { what } => {
            match what {
                CacheCommand::Build { cone } => {
                    let cone = parse_cone(&cone);
                    let max = cli.global.max_weight;
                    for m in enumerate_partitions(cone.rank(), max) {
                        symcone::spherical::jack_coeffs(&cone, &m)?;
                    }
                    let path = cache_path();
                    let rows = save_cache(&path).map_err(io_to_domain)?;
                    println!("wrote {rows} rows to {}", path.display());
                }
                CacheCommand::Info => {
                    let path = cache_path();
                    if path.exists() {
                        let rows = std::fs::read_to_string(&path)
                            .map(|s| s.lines().count())
                            .unwrap_or(0);
                        println!("{}: {rows} rows", path.display());
                    } else {
                        println!("{}: absent", path.display());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn io_to_domain(err: std::io::Error) -> symcone::Error {
    eprintln!("io error: {err}");
    symcone::Error::NotInDomain("cache file not writable")
}

fn eval(what: &EvalCommand, global: &GlobalFlags) -> symcone::Result<Complex64> {
    match what {
        EvalCommand::Phi { cone, m, x } => {
            let cone = parse_cone(cone);
            let m = parse_partition_arg(m, &cone);
            let x = parse_element_c(x, &cone);
            phi_eval(&cone, &m, &x)
        }
        EvalCommand::Laguerre { cone, nu, m, x, poly } => {
            let cone = parse_cone(cone);
            let m = parse_partition_arg(m, &cone);
            if *poly {
                let x = parse_element_c(x, &cone);
                laguerre_poly(&cone, *nu, &m, &x)
            } else {
                let x = parse_element(x, &cone);
                laguerre_fn(&cone, *nu, &m, &x).map(|v| Complex64::new(v, 0.0))
            }
        }
        EvalCommand::Ibessel { cone, nu, z, x, tail_tol } => {
            let cone = parse_cone(cone);
            let z = parse_element_c(z, &cone);
            let trunc = SeriesTruncation::new(global.max_weight, *tail_tol);
            match x {
                Some(x) => ibessel2(&cone, *nu, &z, &parse_element(x, &cone), &trunc),
                None => ibessel(&cone, *nu, &z, &trunc),
            }
        }
        EvalCommand::Whittaker { model, cone, nu, v, z } => {
            let cone = parse_cone(cone);
            let v = parse_element(v, &cone);
            let z = parse_element_c(z, &cone);
            match model {
                ModelArg::Tube => whittaker_tube(&cone, *nu, &v, &z),
                ModelArg::Disc => whittaker_disc(&cone, *nu, &v, &z),
                ModelArg::Fock => {
                    let trunc = SeriesTruncation::new(global.max_weight, 1e-9);
                    whittaker_fock(&cone, *nu, &v, &z, &trunc)
                }
            }
        }
        EvalCommand::Psi { cone, nu, m, z } => {
            let cone = parse_cone(cone);
            let m = parse_partition_arg(m, &cone);
            let z = parse_element_c(z, &cone);
            psi_basis(&cone, *nu, &m, &z)
        }
    }
}

fn emit_value(value: Complex64) {
    if value.im.abs() <= 1e-15 * (1.0 + value.re.abs()) {
        println!("{:.16e}", value.re);
    } else {
        println!("{:.16e}{:+.16e}i", value.re, value.im);
    }
}

fn writer(global: &GlobalFlags) -> Box<dyn Write> {
    match &global.output {
        Some(path) => Box::new(std::io::BufWriter::new(
            std::fs::File::create(path).expect("output file must be creatable"),
        )),
        None => Box::new(std::io::stdout()),
    }
}

fn write_reports(reports: &[CheckReport], global: &GlobalFlags) {
    let mut out = writer(global);
    match global.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, reports).expect("serializable");
            writeln!(out).ok();
        }
        Format::Csv => {
            writeln!(out, "suite,identity,cone,nu,point,M,residual,tol,stderr,pass").ok();
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{:.16e},\"{}\",{},{:.16e},{:.16e},{},{}",
                    r.suite,
                    r.identity,
                    r.cone,
                    r.nu,
                    r.point,
                    r.truncation,
                    r.residual,
                    r.tol,
                    r.stderr.map(|s| format!("{s:.16e}")).unwrap_or_default(),
                    r.pass
                )
                .ok();
            }
        }
    }
}

fn table(what: &TableCommand, global: &GlobalFlags) -> symcone::Result<()> {
    let mut rows: Vec<serde_json::Value> = Vec::new();
    let csv_header;
    let mut csv_rows: Vec<String> = Vec::new();
    match what {
        TableCommand::Dims { cone, nu } => {
            let cone = parse_cone(cone);
            csv_header = "m,weight,d_m,pochhammer_nu,pochhammer_n_over_r".to_string();
            for m in enumerate_partitions(cone.rank(), global.max_weight) {
                let d = dim_km(&cone, &m);
                let p = pochhammer(&cone, *nu, &m);
                let q = pochhammer(&cone, cone.n_over_r(), &m);
                csv_rows.push(format!(
                    "\"{m}\",{},{:.16e},{:.16e},{:.16e}",
                    m.weight(),
                    d,
                    p,
                    q
                ));
                rows.push(serde_json::json!({
                    "m": m.to_string(), "weight": m.weight(),
                    "d_m": d, "pochhammer_nu": p, "pochhammer_n_over_r": q,
                }));
            }
        }
        TableCommand::Laguerre { cone, nu, m, grid } => {
            let cone = parse_cone(cone);
            let m = parse_partition_arg(m, &cone);
            let (t0, t1, count) = parse_grid(grid);
            csv_header = "t,ell".to_string();
            for i in 0..count {
                let t = t0 + (t1 - t0) * i as f64 / (count - 1).max(1) as f64;
                let v = laguerre_fn(&cone, *nu, &m, &JordanElement::te(&cone, t))?;
                csv_rows.push(format!("{t:.16e},{v:.16e}"));
                rows.push(serde_json::json!({"t": t, "ell": v}));
            }
        }
        TableCommand::Coeffs { model, cone, nu, t } => {
            let cone = parse_cone(cone);
            let model = match model {
                CoeffModelArg::L2omega => Model::L2Omega,
                CoeffModelArg::Tube => Model::Tube,
                CoeffModelArg::Disc => Model::Disc,
                CoeffModelArg::Fock => Model::Fock,
            };
            csv_header = "m,weight,coefficient".to_string();
            let te = JordanElement::te(&cone, *t);
            for m in enumerate_partitions(cone.rank(), global.max_weight) {
                let ell = laguerre_fn(&cone, *nu, &m, &te)?;
                let dm = dim_km(&cone, &m);
                let nr = pochhammer(&cone, cone.n_over_r(), &m);
                let pn = pochhammer(&cone, *nu, &m);
                let coeff = match model {
                    Model::L2Omega => dm * ell / (nr * pn),
                    Model::Tube | Model::Disc => dm * ell / nr,
                    Model::Fock => {
                        let sign = if m.weight() % 2 == 0 { 1.0 } else { -1.0 };
                        sign * dm * ell / (2f64.powi(m.weight() as i32) * nr * pn)
                    }
                };
                csv_rows.push(format!("\"{m}\",{},{coeff:.16e}", m.weight()));
                rows.push(serde_json::json!({
                    "m": m.to_string(), "weight": m.weight(), "coefficient": coeff,
                }));
            }
        }
    }
    let mut out = writer(global);
    match global.format {
        Format::Csv => {
            writeln!(out, "{csv_header}").ok();
            for row in csv_rows {
                writeln!(out, "{row}").ok();
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &rows).expect("serializable");
            writeln!(out).ok();
        }
    }
    Ok(())
}

fn parse_grid(grid: &str) -> (f64, f64, usize) {
    let parts: Vec<&str> = grid.split(':').collect();
    if parts.len() != 3 {
        literals::bad_flags(&format!("grid must be start:stop:count, got `{grid}`"));
    }
    let t0 = literals::parse_f64_or_exit(parts[0], "grid start");
    let t1 = literals::parse_f64_or_exit(parts[1], "grid stop");
    let count: usize = parts[2]
        .parse()
        .unwrap_or_else(|_| literals::bad_flags("grid count must be an integer"));
    (t0, t1, count.max(1))
}
