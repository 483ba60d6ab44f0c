//! `ford`: exact arithmetic for SO3(Z[i]) and SO(2,1)_Z as fractional
//! linear transformation groups, with fundamental-domain reduction.
//!
//! Data commands print one line of JSON; `verify` prints one line per
//! check and exits nonzero on failure. Exact values are serialized as
//! strings, floats only for points and distances. Exit codes: 0 ok,
//! 1 verification failure, 2 usage error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use ford_core::geometry::{export_domain, slices_to_svg, DomainTag};
use ford_core::hecke::{hecke_decompose, xi_classify};
use ford_core::hyperbolic::{reduce_gamma, reduce_picard, H2Point, H3Point};
use ford_core::matrix::Mat2;
use ford_core::orthogonal::{conj3, gamma_membership};
use ford_core::realform::{gamma_int_membership, reduce_gamma_int};
use ford_core::verify::{run_suite, SuiteOptions};
use ford_core::GaussianInt;

#[derive(Parser)]
#[command(
    name = "ford",
    version,
    about = "Exact SO3(Z[i]) / SO(2,1)_Z arithmetic and Ford-domain reduction",
    max_term_width = 100
)]
struct Cli {
    /// Geometric tolerance; also settable via the FORD_EPS environment
    /// variable (flag wins). Default 1e-9.
    #[arg(long, global = true)]
    eps: Option<f64>,

    /// Emit machine-readable JSON errors on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for the deterministic sampler used by `verify`.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spin-cover image conj3 of a det-1 matrix, with integrality flags.
    Conj { matrix: String },
    /// Membership in the preimage of SO3(Z[i]) (or, with --real, of
    /// SO(2,1)_Z) together with the coset label.
    Member {
        /// Decide membership in the real form instead.
        #[arg(long)]
        real: bool,
        matrix: String,
    },
    /// Xi residue class and coset label of an SL2(Z[i]) matrix.
    Coset { matrix: String },
    /// Gaussian Hecke decomposition of a nonzero-determinant matrix.
    Hecke { matrix: String },
    /// Reduce a point into the chosen fundamental domain.
    Reduce(ReduceArgs),
    /// Residue system for a Gaussian modulus.
    Residues {
        #[arg(long)]
        modulus: String,
    },
    /// Export vertices, faces and cross-sections of a fundamental domain.
    #[command(name = "domain-export")]
    DomainExport {
        #[arg(long)]
        which: String,
        /// Heights at which to sample cross-sections.
        #[arg(long, value_delimiter = ',')]
        slices: Vec<f64>,
        /// Also write a flat SVG rendering of the slices to this path.
        #[arg(long)]
        svg: Option<std::path::PathBuf>,
    },
    /// Run property suites; exits 1 if any check fails.
    Verify {
        /// Suite name (conj3, cosets, residues, hecke, picard, gamma,
        /// f1, realform, relation, torsion) or "all".
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

#[derive(Args)]
struct ReduceArgs {
    /// Target domain: picard, gamma, or gamma-int.
    #[arg(long)]
    group: String,
    /// Point coordinates: "x1,x2,y" for picard/gamma, "x,y" for gamma-int.
    #[arg(long)]
    point: String,
}

#[derive(Serialize)]
struct ConjOutput {
    matrix: ford_core::Mat3,
    gaussian: bool,
    orthogonal: bool,
}

#[derive(Serialize)]
struct MemberOutput {
    member: bool,
    coset: Option<String>,
}

#[derive(Serialize)]
struct CosetOutput {
    xi_class: ford_core::hecke::XiClass,
    gamma_coset: Option<String>,
}

#[derive(Serialize)]
struct HeckeOutput {
    gamma: Mat2,
    m: GaussianInt,
    x: GaussianInt,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<ford_core::Error> for Failure {
    fn from(e: ford_core::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let eps = cli
        .eps
        .or_else(|| std::env::var("FORD_EPS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(ford_core::DEFAULT_EPS);
    match run(&cli, eps) {
        Ok(code) => code,
        Err(failure) => {
            if cli.json {
                println!("{}", json!({ "error": failure.message }));
            } else {
                eprintln!("error: {}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli, eps: f64) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Conj { matrix } => {
            let m = read_matrix(matrix)?;
            let image = conj3(&m)?;
            emit(&ConjOutput {
                gaussian: image.is_gaussian(),
                orthogonal: image.is_special_orthogonal(),
                matrix: image,
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Member { real, matrix } => {
            let m = read_matrix(matrix)?;
            let coset = if *real {
                gamma_int_membership(&m)?.map(|l| l.to_string())
            } else {
                gamma_membership(&m)?.map(|l| l.to_string())
            };
            emit(&MemberOutput {
                member: coset.is_some(),
                coset,
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Coset { matrix } => {
            let m = read_matrix(matrix)?;
            emit(&CosetOutput {
                xi_class: xi_classify(&m)?,
                gamma_coset: gamma_membership(&m)?.map(|l| l.to_string()),
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Hecke { matrix } => {
            let m = read_matrix(matrix)?;
            let factors = hecke_decompose(&m)?;
            emit(&HeckeOutput {
                gamma: factors.gamma,
                m: factors.m,
                x: factors.x,
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce(args) => {
            let coords = parse_floats(&args.point)?;
            match args.group.as_str() {
                "picard" | "gamma" => {
                    let [x1, x2, y] = coords[..] else {
                        return Err(Failure::usage("expected --point x1,x2,y"));
                    };
                    let z = H3Point::new(x1, x2, y);
                    let result = if args.group == "picard" {
                        reduce_picard(&z, eps)?
                    } else {
                        reduce_gamma(&z, eps)?
                    };
                    emit(&result);
                }
                "gamma-int" => {
                    let [x, y] = coords[..] else {
                        return Err(Failure::usage("expected --point x,y"));
                    };
                    let result = reduce_gamma_int(&H2Point::new(x, y), eps)?;
                    emit(&result);
                }
                other => {
                    return Err(Failure::usage(format!(
                        "unknown group '{other}' (expected picard, gamma, or gamma-int)"
                    )))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Residues { modulus } => {
            let y: GaussianInt = modulus.parse()?;
            let system = ford_core::gaussian::omega_reps(&y)?;
            let reps: Vec<String> = system.reps.iter().map(|r| r.to_string()).collect();
            emit(&reps);
            Ok(ExitCode::SUCCESS)
        }
        Command::DomainExport { which, slices, svg } => {
            let tag = DomainTag::parse(which)?;
            let geometry = export_domain(tag, slices);
            if let Some(path) = svg {
                std::fs::write(path, slices_to_svg(&geometry))
                    .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            }
            emit(&geometry);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, samples } => {
            let opts = SuiteOptions {
                samples: *samples,
                seed: cli.seed,
                eps,
            };
            let results = run_suite(suite, opts)?;
            let mut all_ok = true;
            let mut out = String::new();
            for r in &results {
                all_ok &= r.passed;
                let status = if r.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {}: {}", r.name, r.detail).expect("string write");
            }
            print!("{out}");
            if all_ok {
                Ok(ExitCode::SUCCESS)
            } else {
                if cli.json {
                    println!("{}", json!({ "error": "verification failed" }));
                }
                Ok(ExitCode::from(1))
            }
        }
    }
}

/// Matrix arguments are inline JSON when they start with '{', otherwise
/// paths to JSON files.
fn read_matrix(arg: &str) -> Result<Mat2, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Failure::usage(format!("cannot read {arg}: {e}")))?
    };
    Ok(Mat2::parse(&text)?)
}

fn parse_floats(s: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Failure::usage(format!("bad coordinate '{p}'")))
        })
        .collect()
}

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("serializable output")
    );
}
