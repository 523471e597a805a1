//! Batch CLI: compute homology decompositions, run the built-in
//! verification checks, and export operator blocks.
//!
//! Exit codes: 0 success, 1 invalid input, 2 verification failure,
//! 3 internal inconsistency (e.g. the two homology routes disagree).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use nilhom_cli::checks::{run_all, run_check, CheckScale, CHECK_NAMES};
use nilhom_cli::driver::Driver;
use nilhom_cli::dump;
use nilhom_cli::render::{
    homology_text, to_canonical_json, AllDegreesJson, HomologyJson, OperatorsJson, PlethysmJson,
    SiggJson, VerifyJson,
};
use nilhom_core::homology::sigg_homology;
use nilhom_core::weightchar::plethysm_ext_sym2;
use nilhom_core::{Complex, OperatorName};

#[derive(Parser)]
#[command(
    name = "nilhom",
    version,
    about = "Exact homology of two-step nilpotent Lie algebras over symplectic vector spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute H_k(L_H(V)) and decompose it into H_m ⊗ S(λ) summands.
    Homology {
        /// Half the dimension of the symplectic space H.
        #[arg(long, default_value_t = 1)]
        g: usize,
        /// dim V; defaults to 2k (large enough to see every diagram).
        #[arg(long)]
        r: Option<usize>,
        /// Homological degree.
        #[arg(long)]
        k: Option<usize>,
        /// Report total homology dimensions in every degree instead.
        #[arg(long)]
        all_degrees: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
        /// Write the result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0 = automatic).
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
    },
    /// Homology of the free two-step nilpotent algebra Lie₂(V).
    Sigg {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
    },
    /// Verify the exact operator identities on every block in range.
    Operators {
        #[arg(long, default_value_t = 1)]
        g: usize,
        #[arg(long)]
        r: usize,
        /// Check blocks with k + 2l up to this total degree.
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
    },
    /// Decompose the exterior power of the symmetric square, Λ^l(S²V).
    Plethysm {
        #[arg(long)]
        l: usize,
        /// dim V; defaults to 2l so no diagram is truncated.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
    },
    /// Run the named verification checks (all by default).
    VerifyPaper {
        /// Run a single check: intro-table, sigg, theorem-main, casimir,
        /// plethysm, limit-theorem, ell1-proposition, ell2-formula,
        /// poincare, kostant, general-g.
        #[arg(long)]
        only: Option<String>,
        /// Narrow the scale where the check supports it.
        #[arg(long)]
        g: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
    },
    /// Write one triplet-format matrix file per weight block.
    Dump {
        /// boundary, coboundary, laplacian, euler, casimir-gl, casimir-sp,
        /// e (with --i, --j), or e-sp (with --a, --b).
        #[arg(long)]
        operator: String,
        #[arg(long, default_value_t = 1)]
        g: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        /// Row index for e (1-based).
        #[arg(long)]
        i: Option<usize>,
        /// Column index for e (1-based).
        #[arg(long)]
        j: Option<usize>,
        /// Row index for e-sp (1-based).
        #[arg(long)]
        a: Option<usize>,
        /// Column index for e-sp (1-based).
        #[arg(long)]
        b: Option<usize>,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Invalid(String),
    Verification(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Verification(m) | Failure::Internal(m) => m,
        }
    }
}

fn internal(e: nilhom_core::HomologyError) -> Failure {
    Failure::Internal(format!("{e}"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn with_pool<T: Send>(parallelism: usize, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|e| Failure::Invalid(format!("cannot build worker pool: {e}")))?;
    Ok(pool.install(f))
}

fn emit(text: String, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))?;
            file.write_all(text.as_bytes())
                .map_err(|e| Failure::Invalid(format!("write failed: {e}")))?;
            if !text.ends_with('\n') {
                let _ = file.write_all(b"\n");
            }
            Ok(())
        }
    }
}

fn validate_ranks(g: usize, r: usize) -> Result<(), Failure> {
    if g < 1 {
        return Err(Failure::Invalid("g must be at least 1".to_string()));
    }
    if r < 1 {
        return Err(Failure::Invalid("r must be at least 1".to_string()));
    }
    if 2 * g * r > 64 {
        return Err(Failure::Invalid(format!(
            "2·g·r = {} generators is beyond desk scale",
            2 * g * r
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Homology {
            g,
            r,
            k,
            all_degrees,
            output,
            out,
            parallelism,
        } => {
            if all_degrees {
                let r = r.ok_or_else(|| {
                    Failure::Invalid("--all-degrees requires an explicit --r".to_string())
                })?;
                validate_ranks(g, r)?;
                let dims = with_pool(parallelism, || Driver::new(g, r).homology_dims())?
                    .map_err(internal)?;
                let text = match output {
                    OutputFormat::Json => to_canonical_json(&AllDegreesJson {
                        g,
                        r,
                        dims_by_poly_degree: dims.by_poly_degree.clone(),
                        dims_by_homological_degree: dims.by_homological_degree.clone(),
                    }),
                    OutputFormat::Text => format!(
                        "total homology of L_H (g={g}, r={r})\n  dims by polynomial degree:  {:?}\n  dims by homological degree: {:?}\n",
                        dims.by_poly_degree, dims.by_homological_degree
                    ),
                };
                return emit(text, &out);
            }
            let k = k.ok_or_else(|| {
                Failure::Invalid("pass --k, or --all-degrees for the full profile".to_string())
            })?;
            let r = r.unwrap_or_else(|| (2 * k).max(1));
            validate_ranks(g, r)?;
            let res = with_pool(parallelism, || Driver::new(g, r).homology_decomposition(k))?
                .map_err(internal)?;
            let text = match output {
                OutputFormat::Json => to_canonical_json(&HomologyJson::from_result(&res)),
                OutputFormat::Text => homology_text(&res),
            };
            emit(text, &out)
        }
        Command::Sigg {
            r,
            k,
            output,
            out,
            parallelism,
        } => {
            validate_ranks(1, r)?;
            let report = with_pool(parallelism, || sigg_homology(r, k))?.map_err(internal)?;
            let text = match output {
                OutputFormat::Json => to_canonical_json(&SiggJson {
                    r,
                    k,
                    decomposition: report,
                }),
                OutputFormat::Text => format!("H_{k}(Lie2) at r={r}: {report}\n"),
            };
            emit(text, &out)
        }
        Command::Operators {
            g,
            r,
            max_degree,
            output,
            out,
            parallelism,
        } => {
            validate_ranks(g, r)?;
            let report = with_pool(parallelism, || {
                Complex::new(g, r).verify_operator_identities(max_degree)
            })?;
            let json = OperatorsJson {
                g,
                r,
                max_degree,
                blocks_checked: report.blocks_checked,
                identities_checked: report.identities_checked,
                failures: report.failures.iter().map(|f| format!("{f}")).collect(),
            };
            let text = match output {
                OutputFormat::Json => to_canonical_json(&json),
                OutputFormat::Text => {
                    let mut s = format!(
                        "operator identities at g={g}, r={r}, degree <= {max_degree}: {} identities on {} blocks\n",
                        json.identities_checked, json.blocks_checked
                    );
                    if json.failures.is_empty() {
                        s.push_str("all identities hold\n");
                    } else {
                        for f in &json.failures {
                            s.push_str(&format!("FAIL {f}\n"));
                        }
                    }
                    s
                }
            };
            emit(text, &out)?;
            if report.all_pass() {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "{} operator identities failed",
                    report.failures.len()
                )))
            }
        }
        Command::Plethysm {
            l,
            r,
            output,
            out,
            parallelism,
        } => {
            if l < 1 {
                return Err(Failure::Invalid("l must be at least 1".to_string()));
            }
            let r = r.unwrap_or(2 * l);
            if r < 2 * l {
                return Err(Failure::Invalid(format!(
                    "r = {r} truncates diagrams of size 2l = {}; need r >= 2l",
                    2 * l
                )));
            }
            let report = with_pool(parallelism, || plethysm_ext_sym2(l, r))?
                .map_err(|e| Failure::Internal(format!("{e}")))?;
            let text = match output {
                OutputFormat::Json => to_canonical_json(&PlethysmJson {
                    l,
                    r,
                    decomposition: report,
                }),
                OutputFormat::Text => format!("Λ^{l}(S²V) at r={r}: {report}\n"),
            };
            emit(text, &out)
        }
        Command::VerifyPaper {
            only,
            g,
            r,
            k,
            max_degree,
            output,
            out,
            parallelism,
        } => {
            let scale = CheckScale {
                g,
                r,
                k,
                max_degree,
            };
            let checks = with_pool(parallelism, || match &only {
                Some(name) => run_check(name, &scale).map(|c| vec![c]),
                None => Some(run_all(&scale)),
            })?
            .ok_or_else(|| {
                Failure::Invalid(format!(
                    "unknown check {:?}; valid names: {}",
                    only.as_deref().unwrap_or(""),
                    CHECK_NAMES.join(", ")
                ))
            })?;
            let all_passed = checks.iter().all(|c| c.passed);
            let text = match output {
                OutputFormat::Json => to_canonical_json(&VerifyJson {
                    all_passed,
                    checks: checks.clone(),
                }),
                OutputFormat::Text => {
                    let mut s = String::new();
                    for c in &checks {
                        s.push_str(&format!(
                            "{} {}\n",
                            if c.passed { "PASS" } else { "FAIL" },
                            c.name
                        ));
                        for case in &c.cases {
                            s.push_str(&format!(
                                "  {} {}: {}\n",
                                if case.passed { "pass" } else { "FAIL" },
                                case.name,
                                case.detail
                            ));
                        }
                    }
                    s
                }
            };
            emit(text, &out)?;
            if all_passed {
                Ok(())
            } else {
                let failing: Vec<&str> = checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name.as_str())
                    .collect();
                Err(Failure::Verification(format!(
                    "checks failed: {}",
                    failing.join(", ")
                )))
            }
        }
        Command::Dump {
            operator,
            g,
            r,
            k,
            l,
            i,
            j,
            a,
            b,
            out,
        } => {
            validate_ranks(g, r)?;
            let cx = Complex::new(g, r);
            if k > cx.hv_count() || l > cx.sym_count() {
                return Err(Failure::Invalid(format!(
                    "bidegree ({k},{l}) is outside the complex for g={g}, r={r}"
                )));
            }
            let one_based = |name: &str, v: Option<usize>| -> Result<usize, Failure> {
                let v = v.ok_or_else(|| {
                    Failure::Invalid(format!("operator {operator:?} requires --{name}"))
                })?;
                if v < 1 {
                    return Err(Failure::Invalid(format!("--{name} is 1-based")));
                }
                Ok(v - 1)
            };
            let name = match operator.as_str() {
                "boundary" => OperatorName::Boundary,
                "coboundary" => OperatorName::Coboundary,
                "laplacian" => OperatorName::Laplacian,
                "euler" => OperatorName::EulerD,
                "casimir-gl" => OperatorName::CasimirGl,
                "casimir-sp" => OperatorName::CasimirSp,
                "e" => OperatorName::GlElementary {
                    i: one_based("i", i)?,
                    j: one_based("j", j)?,
                },
                "e-sp" => OperatorName::SpElementary {
                    a: one_based("a", a)?,
                    b: one_based("b", b)?,
                },
                other => return Err(Failure::Invalid(format!("unknown operator {other:?}"))),
            };
            let blocks = cx.bidegree_blocks(k, l);
            let mut written = 0usize;
            for block in &blocks {
                let matrix = cx
                    .operator(name, block)
                    .map_err(|e| Failure::Invalid(format!("{e}")))?;
                let gl: Vec<String> = block.gl.0.iter().map(|x| x.to_string()).collect();
                let sp: Vec<String> = block.sp.0.iter().map(|x| x.to_string()).collect();
                let file = out.join(format!(
                    "{operator}_g{g}_r{r}_k{k}_l{l}_gl{}_sp{}.txt",
                    gl.join("-"),
                    sp.join("-")
                ));
                dump::write_triplet_file(&file, &matrix)
                    .map_err(|e| Failure::Invalid(format!("{e}")))?;
                written += 1;
            }
            println!("wrote {written} block files to {}", out.display());
            Ok(())
        }
    }
}
