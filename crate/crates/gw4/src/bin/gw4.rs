use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use gw4::dot::export_dot;
use gw4::euler::is_admissible;
use gw4::exact::{expand, Center};
use gw4::formulas::{check_3l_edges, check_ah, check_residues, weight1_balance};
use gw4::graph::GraphOfWeights;
use gw4::gw1;
use gw4::models::{model, model_fixed_surface, FixedSurfaceModel, ModelName};
use gw4::realize::{realize, replay, Certificate};
use gw4::surgery::reduce;

#[derive(Parser)]
#[command(name = "gw4", version, about = "Exact fixed-point graph calculus for circle actions on oriented 4-manifolds")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the structural invariants of a GW1 file.
    Validate { file: PathBuf },
    /// Verify every exact identity: signature sum, residues, weight-1
    /// balance, admissibility, and the edge-Euler form of 3L.
    Check { file: PathBuf },
    /// Reduce to an all-label-1 graph; prints the final graph as GW1.
    Reduce {
        file: PathBuf,
        /// Write the move trace and final graph to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Decide realizability; prints a certificate or a rejection witness.
    Realize {
        file: PathBuf,
        /// Write the serialized certificate to this file.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Rebuild and verify the graph certified by a certificate file.
    Replay { certfile: PathBuf },
    /// Print a model graph as GW1 text.
    Model {
        name: ModelArg,
        a: Option<u64>,
        b: Option<u64>,
    },
    /// Exact Laurent coefficients of the signature sum.
    Expand {
        file: PathBuf,
        /// Expansion center: 0 or 1.
        #[arg(long)]
        center: u8,
        /// First order to report (may be negative).
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        /// Number of coefficients.
        #[arg(long)]
        count: usize,
    },
    /// Graphviz DOT output.
    ExportDot { file: PathBuf },
    /// Run `check` over every file in a directory.
    CheckBatch {
        dir: PathBuf,
        /// Number of worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "PQ", alias = "pq")]
    Pq,
    #[value(name = "P10", alias = "p10")]
    P10,
    #[value(name = "Q10", alias = "q10")]
    Q10,
    #[value(name = "S10", alias = "s10")]
    S10,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn load(path: &Path) -> Result<GraphOfWeights, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    gw1::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// The full `check` report; ok iff every identity holds exactly.
fn run_check(g: &GraphOfWeights) -> (String, bool) {
    let report = g.validate();
    if !report.is_valid() {
        return (format!("invalid graph:\n{report}"), false);
    }
    let mut out = String::new();
    let mut ok = true;

    let ah = check_ah(g).unwrap();
    match &ah.constant {
        Some(c) => out.push_str(&format!("constant = {c}\n")),
        None => {
            out.push_str(&format!("constant = none (sum is {})\n", ah.ah_function));
            ok = false;
        }
    }
    out.push_str(&format!("signature = {}\n", ah.signature));
    out.push_str(&format!("3*signature = {}\n", ah.sign_times_3));
    ok &= ah.holds();

    let (r2, r1) = check_residues(g).unwrap();
    out.push_str(&format!("residues = ({r2}, {r1})\n"));
    ok &= r2.is_zero() && r1.is_zero();

    let balance = weight1_balance(g).unwrap();
    out.push_str(&format!("balance = {balance}\n"));
    ok &= balance == 0;

    let adm = is_admissible(g);
    out.push_str(&format!("admissible = {}\n", if adm.is_admissible() { "yes" } else { "no" }));
    for (id, n) in &adm.non_integral {
        out.push_str(&format!("  edge {id} has n_e = {n}\n"));
    }
    for id in &adm.self_loops {
        out.push_str(&format!("  note: self-loop {id} uses the verbatim Euler-number extension\n"));
    }
    ok &= adm.is_admissible();

    let (three_l, rhs) = check_3l_edges(g).unwrap();
    out.push_str(&format!("3L = {three_l}\n"));
    out.push_str(&format!("sum n_e + sum n_j = {rhs}\n"));
    ok &= three_l == rhs;

    out.push_str(if ok { "all identities hold\n" } else { "IDENTITY FAILURE\n" });
    (out, ok)
}

fn run(cmd: Cmd) -> Result<u8, String> {
    match cmd {
        Cmd::Validate { file } => {
            let g = load(&file)?;
            let report = g.validate();
            println!("{report}");
            Ok(if report.is_valid() { 0 } else { EXIT_FAIL })
        }
        Cmd::Check { file } => {
            let g = load(&file)?;
            let (report, ok) = run_check(&g);
            print!("{report}");
            Ok(if ok { 0 } else { EXIT_FAIL })
        }
        Cmd::Reduce { file, trace } => {
            let g = load(&file)?;
            match reduce(&g) {
                Ok(t) => {
                    if let Some(path) = trace {
                        fs::write(&path, t.serialize())
                            .map_err(|e| format!("{}: {e}", path.display()))?;
                    }
                    print!("{}", gw1::serialize(&t.final_graph));
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(EXIT_FAIL)
                }
            }
        }
        Cmd::Realize { file, cert } => {
            let g = load(&file)?;
            match realize(&g) {
                Ok(c) => {
                    let text = c.serialize();
                    if let Some(path) = cert {
                        fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
                    }
                    println!(
                        "realizable: base of {} S(1,1) blocks, {} moves",
                        c.base,
                        c.moves.len()
                    );
                    print!("{text}");
                    Ok(0)
                }
                Err(r) => {
                    eprintln!("not realizable: {r}");
                    Ok(EXIT_FAIL)
                }
            }
        }
        Cmd::Replay { certfile } => {
            let text = fs::read_to_string(&certfile)
                .map_err(|e| format!("{}: {e}", certfile.display()))?;
            let cert =
                Certificate::parse(&text).map_err(|e| format!("{}: {e}", certfile.display()))?;
            match replay(&cert) {
                Ok(g) => {
                    print!("{}", gw1::serialize(&g));
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("certificate rejected: {e}");
                    Ok(EXIT_FAIL)
                }
            }
        }
        Cmd::Model { name, a, b } => {
            let fixed = match name {
                ModelArg::P10 => Some(FixedSurfaceModel::P10),
                ModelArg::Q10 => Some(FixedSurfaceModel::Q10),
                ModelArg::S10 => Some(FixedSurfaceModel::S10),
                _ => None,
            };
            let g = match fixed {
                Some(f) => model_fixed_surface(f),
                None => {
                    let (a, b) = match (a, b) {
                        (Some(a), Some(b)) => (a, b),
                        _ => return Err("this model requires parameters a and b".into()),
                    };
                    let name = match name {
                        ModelArg::S => ModelName::S,
                        ModelArg::P => ModelName::P,
                        ModelArg::Q => ModelName::Q,
                        ModelArg::Pq => ModelName::PQ,
                        _ => unreachable!(),
                    };
                    model(name, a, b).map_err(|e| e.to_string())?
                }
            };
            print!("{}", gw1::serialize(&g));
            Ok(0)
        }
        Cmd::Expand {
            file,
            center,
            from,
            count,
        } => {
            let g = load(&file)?;
            let center = match center {
                0 => Center::Zero,
                1 => Center::One,
                other => return Err(format!("--center must be 0 or 1, got {other}")),
            };
            let f = gw4::formulas::ah_sum(&g).map_err(|e| e.to_string())?;
            let window = expand(&f, center, from, count);
            let rendered: Vec<String> = window.coeffs.iter().map(|c| c.to_string()).collect();
            println!("{}", rendered.join(" "));
            Ok(0)
        }
        Cmd::ExportDot { file } => {
            let g = load(&file)?;
            print!("{}", export_dot(&g));
            Ok(0)
        }
        Cmd::CheckBatch { dir, jobs } => {
            let mut files: Vec<PathBuf> = fs::read_dir(&dir)
                .map_err(|e| format!("{}: {e}", dir.display()))?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            files.sort();
            let jobs = jobs.max(1);
            let mut results: Vec<(PathBuf, Result<bool, String>)> = Vec::new();
            for chunk in files.chunks(jobs.max(1)) {
                let handles: Vec<_> = chunk
                    .iter()
                    .cloned()
                    .map(|path| {
                        std::thread::spawn(move || {
                            let outcome = load(&path).map(|g| run_check(&g).1);
                            (path, outcome)
                        })
                    })
                    .collect();
                for h in handles {
                    results.push(h.join().expect("worker panicked"));
                }
            }
            let mut all_ok = true;
            for (path, outcome) in results {
                match outcome {
                    Ok(true) => println!("PASS {}", path.display()),
                    Ok(false) => {
                        println!("FAIL {}", path.display());
                        all_ok = false;
                    }
                    Err(e) => {
                        println!("ERROR {e}");
                        all_ok = false;
                    }
                }
            }
            Ok(if all_ok { 0 } else { EXIT_FAIL })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
