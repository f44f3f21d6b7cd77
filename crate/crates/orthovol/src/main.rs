//! Command-line surface: validation, classification, statistics, bounds,
//! volumes, doubling, generation, claim verification and CSV reports.
//!
//! Exit codes: 0 on success (and on every claim holding), 1 on validation or
//! claim failure, 2 on usage, I/O or parse errors.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use orthovol::catalog::{self, CatalogEntry, Suite};
use orthovol::harness::{self, Verdict};
use orthovol::polytope::{validate, CombinatorialPolytope, Polytope};
use orthovol::surgery::{self, FaceSelector};
use orthovol::{andreev, bounds, format, report, volumes};

#[derive(Parser)]
#[command(
    name = "orthovol",
    version,
    about = "Combinatorics, volumes and volume bounds of right-angled hyperbolic 3-polyhedra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the combinatorial invariants of a polytope file.
    Validate {
        /// Input file; stdin when omitted or "-".
        file: Option<PathBuf>,
    },
    /// Decide realizability as a right-angled polyhedron.
    Classify {
        file: Option<PathBuf>,
    },
    /// Print the incidence profile.
    Stats {
        file: Option<PathBuf>,
    },
    /// Evaluate every applicable volume bound.
    Bounds {
        file: Option<PathBuf>,
    },
    /// Closed-form volume of a family member.
    Volume {
        /// Family: antiprism or loebell.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u64,
    },
    /// Double along a face, optionally iterating.
    Double {
        file: Option<PathBuf>,
        /// Face to double along in the first step.
        #[arg(long)]
        face: Option<usize>,
        /// Number of doubling steps.
        #[arg(long, default_value_t = 1)]
        depth: usize,
        /// Face choice for steps without an explicit face:
        /// first-valid, max-degree or all-triangle-neighbours.
        #[arg(long, default_value = "first-valid")]
        selector: String,
    },
    /// Generate a family member: antiprism, loebell or octa-double-chain.
    Generate {
        family: String,
        /// n for the families, depth for the chain.
        n: usize,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the claim harness over a catalog.
    Verify {
        /// ideal, compact, mixed or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Directory of additional .poly files.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Write the CSV bound report for a catalog.
    Report {
        /// Directory of additional .poly files.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Output CSV path.
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_input(file: Option<&Path>) -> Result<String, String> {
    match file {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn parse_input(file: Option<&Path>) -> Result<CombinatorialPolytope, String> {
    let text = read_input(file)?;
    format::parse(&text).map_err(|e| e.to_string())
}

fn validated(file: Option<&Path>) -> Result<Result<Polytope, ExitCode>, String> {
    let raw = parse_input(file)?;
    match Polytope::new(raw) {
        Ok(p) => Ok(Ok(p)),
        Err(violations) => {
            for v in &violations.violations {
                println!("violation: {v}");
            }
            Ok(Err(ExitCode::from(1)))
        }
    }
}

fn load_user_catalog(dir: &Path) -> Result<Vec<CatalogEntry>, String> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|x| x == "poly").unwrap_or(false))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for path in paths {
        let text =
            std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let raw = format::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let p = Polytope::new(raw)
            .map_err(|v| format!("{}: invalid polytope: {v}", path.display()))?;
        out.push(CatalogEntry {
            polytope: p,
            known_volume: None,
        });
    }
    Ok(out)
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Validate { file } => {
            let raw = parse_input(file.as_deref())?;
            let report = validate(&raw);
            if report.is_ok() {
                println!("ok");
                Ok(ExitCode::SUCCESS)
            } else {
                for v in &report.violations {
                    println!("violation: {v}");
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Classify { file } => {
            let p = match validated(file.as_deref())? {
                Ok(p) => p,
                Err(code) => return Ok(code),
            };
            println!("{}", andreev::classify(&p));
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { file } => {
            let p = match validated(file.as_deref())? {
                Ok(p) => p,
                Err(code) => return Ok(code),
            };
            let profile = p.profile();
            println!("polytope {}", p.name());
            println!("class {}", andreev::classify(&p).label());
            println!("V {}", profile.v);
            println!("E {}", profile.e);
            println!("F {}", profile.f);
            println!("V_inf {}", profile.v_inf);
            println!("V_F {}", profile.v_f);
            for (k, c) in &profile.p_k {
                println!("p_{k} {c}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { file } => {
            let p = match validated(file.as_deref())? {
                Ok(p) => p,
                Err(code) => return Ok(code),
            };
            match bounds::bound_report(&p) {
                Ok(report) => {
                    print!("{report}");
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Volume { family, n } => {
            let value = match family.as_str() {
                "antiprism" => volumes::vol_antiprism(n),
                "loebell" => volumes::vol_loebell(n),
                other => return Err(format!("unknown family '{other}'")),
            }
            .map_err(|e| e.to_string())?;
            println!("{}", report::sig9(value.value));
            Ok(ExitCode::SUCCESS)
        }
        Command::Double {
            file,
            face,
            depth,
            selector,
        } => {
            let p = match validated(file.as_deref())? {
                Ok(p) => p,
                Err(code) => return Ok(code),
            };
            let strategy: FaceSelector = selector.parse()?;
            let mut current = p;
            for stage in 0..depth {
                let chosen = match (stage, face) {
                    (0, Some(f)) => f,
                    _ => strategy.select(&current, stage).map_err(|e| e.to_string())?,
                };
                current = surgery::double_along_face(&current, chosen)
                    .map_err(|e| e.to_string())?;
            }
            print!("{}", format::serialize_polytope(&current));
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { family, n, output } => {
            let p = match family.as_str() {
                "antiprism" => catalog::antiprism(n).map_err(|e| e.to_string())?,
                "loebell" => catalog::loebell(n).map_err(|e| e.to_string())?,
                "octa-double-chain" => {
                    let chain = catalog::octa_double_chain(n).map_err(|e| e.to_string())?;
                    chain.into_iter().last().expect("chain is never empty")
                }
                other => return Err(format!("unknown family '{other}'")),
            };
            let text = format::serialize_polytope(&p);
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, catalog } => {
            let suite: Suite = suite.parse()?;
            let mut results = Vec::new();
            let label = |s: Suite| match s {
                Suite::Ideal => "ideal",
                Suite::Compact => "compact",
                Suite::Mixed => "mixed",
                Suite::All => "all",
            };
            let entries = catalog::default_catalog(suite);
            results.extend(harness::run_claims(&entries, label(suite)));
            if let Some(dir) = catalog {
                let user = load_user_catalog(&dir)?;
                results.extend(harness::run_claims(&user, "user"));
            }
            let mut holds = 0usize;
            let mut fails = 0usize;
            let mut na = 0usize;
            for r in &results {
                println!("{}", r.line());
                match r.verdict {
                    Verdict::Holds => holds += 1,
                    Verdict::Fails => fails += 1,
                    Verdict::NotApplicable => na += 1,
                }
            }
            println!(
                "summary: {} claims, {holds} hold, {na} not applicable, {fails} fail",
                results.len()
            );
            if fails > 0 {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Report { catalog, output } => {
            let mut entries = catalog::default_catalog(Suite::All);
            if let Some(dir) = catalog {
                entries.extend(load_user_catalog(&dir)?);
            }
            let csv = report::report_csv(&entries);
            if output.as_os_str() == "-" {
                print!("{csv}");
            } else {
                std::fs::write(&output, csv)
                    .map_err(|e| format!("{}: {e}", output.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
