//! `pig2dom` — minimum total 2-dominating sets of proper interval graphs.
//!
//! Exit codes: 0 solved/valid, 2 infeasible/invalid set, 1 usage or parse
//! error.

mod report;
mod xval;

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pig2dom::formats::{self, Dialect, ParsedInstance};
use pig2dom::{dot, expansive, gen, oracle, reduced, reference, VertexSet};
use report::SolveReport;

const DEFAULT_SEED: u64 = 7;

#[derive(Parser)]
#[command(name = "pig2dom", version, about = "Minimum total 2-dominating sets of proper interval graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FormatArg {
    Auto,
    Straight,
    Intervals,
    Edges,
}

impl FormatArg {
    fn forced(self) -> Option<Dialect> {
        match self {
            FormatArg::Auto => None,
            FormatArg::Straight => Some(Dialect::Straight),
            FormatArg::Intervals => Some(Dialect::Intervals),
            FormatArg::Edges => Some(Dialect::Edges),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Reduced,
    Reference,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichDag {
    D,
    R,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Straight,
    Intervals,
    PathPower,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    PathPower,
    Straight,
}

#[derive(Args)]
struct InputArg {
    /// Instance file; `-` reads standard input.
    input: PathBuf,
    /// Input dialect; `auto` dispatches on the header keyword.
    #[arg(short, long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a minimum total 2-dominating set.
    Solve {
        #[command(flatten)]
        input: InputArg,
        /// reduced = O(m) pipeline, reference = O(nm) model, oracle = brute force (n <= 24).
        #[arg(short, long, value_enum, default_value_t = AlgorithmArg::Reduced)]
        algorithm: AlgorithmArg,
        /// Emit a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Differentially validate the solvers on seeded random instances.
    Xval {
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        nmax: usize,
        /// Base seed (default: $PIG2DOM_SEED, then 7).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 0.1)]
        density_min: f64,
        #[arg(long, default_value_t = 0.9)]
        density_max: f64,
        /// Skip the brute-force oracle (otherwise nmax must be <= 24).
        #[arg(long)]
        no_oracle: bool,
        /// Where failing instances are written.
        #[arg(long, default_value = ".")]
        repro_dir: PathBuf,
    },
    /// Time the reduced pipeline on a generated family.
    Bench {
        #[arg(long, value_enum, default_value_t = FamilyArg::PathPower)]
        family: FamilyArg,
        /// Comma-separated instance sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        k: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long)]
        seed: Option<u64>,
        /// Repetitions per size; the median is reported.
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
    /// Export a solver digraph of the augmented instance as DOT.
    Export {
        #[command(flatten)]
        input: InputArg,
        /// d = reference digraph, r = reduced digraph.
        #[arg(long, value_enum)]
        which: WhichDag,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether a vertex set is a total 2-dominating set.
    Check {
        #[command(flatten)]
        input: InputArg,
        /// Comma-separated vertex labels in the input labeling.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Generate an instance file.
    Gen {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// 1 = usage/parse error, 2 = infeasible/invalid set.
struct Failure {
    code: i32,
    message: Option<String>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: Some(message.into()),
        }
    }

    fn outcome(code: i32) -> Self {
        Failure {
            code,
            message: None,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(()) => {}
        Err(f) => {
            if let Some(msg) = f.message {
                eprintln!("error: {msg}");
            }
            std::process::exit(f.code);
        }
    }
}

fn seed_or_env(seed: Option<u64>) -> u64 {
    seed.or_else(|| {
        std::env::var("PIG2DOM_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_SEED)
}

fn read_instance(arg: &InputArg) -> Result<ParsedInstance, Failure> {
    let text = if arg.input.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(&arg.input)?
    };
    formats::parse_instance(&text, arg.format.forced()).map_err(|e| Failure::usage(e.to_string()))
}

fn write_out(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            input,
            algorithm,
            json,
        } => cmd_solve(&input, algorithm, json),
        Command::Xval {
            trials,
            nmax,
            seed,
            density_min,
            density_max,
            no_oracle,
            repro_dir,
        } => {
            if !no_oracle && nmax > oracle::MAX_ORACLE_N {
                return Err(Failure::usage(format!(
                    "nmax {} exceeds the oracle cutoff {}; pass --no-oracle",
                    nmax,
                    oracle::MAX_ORACLE_N
                )));
            }
            let cfg = xval::XvalConfig {
                trials,
                nmax,
                seed: seed_or_env(seed),
                density_min,
                density_max,
                use_oracle: !no_oracle,
            };
            let summary = xval::run(&cfg, &repro_dir, &mut |line| println!("{line}"))?;
            println!(
                "trials {} feasible {} mismatches {}",
                summary.trials, summary.feasible, summary.mismatches
            );
            if summary.mismatches > 0 {
                return Err(Failure::outcome(1));
            }
            Ok(())
        }
        Command::Bench {
            family,
            sizes,
            k,
            density,
            seed,
            reps,
        } => {
            let seed = seed_or_env(seed);
            for n in sizes {
                let g = match family {
                    FamilyArg::PathPower => gen::path_power(n, k),
                    FamilyArg::Straight => gen::random_straight(n, density, seed),
                };
                let mut times: Vec<f64> = (0..reps.max(1))
                    .map(|_| {
                        let t = Instant::now();
                        let sol = reduced::solve(&g);
                        let elapsed = t.elapsed().as_secs_f64() * 1e3;
                        std::hint::black_box(sol);
                        elapsed
                    })
                    .collect();
                times.sort_by(|a, b| a.total_cmp(b));
                let median = times[times.len() / 2];
                println!("{} {} {:.3}", g.n(), g.m(), median);
            }
            Ok(())
        }
        Command::Export { input, which, out } => {
            let parsed = read_instance(&input)?;
            let aug = parsed.graph.augment();
            let text = match which {
                WhichDag::D => dot::export_d(&reference::build_d(&aug)),
                WhichDag::R => {
                    let widths = expansive::build_width_map(aug.graph());
                    dot::export_r(&reduced::build_r(&aug, &widths))
                }
            };
            write_out(&out, &text)
        }
        Command::Check { input, set } => cmd_check(&input, &set),
        Command::Gen {
            model,
            n,
            density,
            k,
            seed,
            out,
        } => {
            let seed = seed_or_env(seed);
            let content = match model {
                ModelArg::Straight => {
                    formats::serialize_straight(&gen::random_straight(n, density, seed))
                }
                ModelArg::Intervals => {
                    formats::serialize_intervals(&gen::random_intervals(n, density, seed))
                }
                ModelArg::PathPower => formats::serialize_straight(&gen::path_power(n, k)),
            };
            write_out(&out, &content)
        }
    }
}

fn cmd_solve(input: &InputArg, algorithm: AlgorithmArg, json: bool) -> Result<(), Failure> {
    let parsed = read_instance(input)?;
    let g = &parsed.graph;
    let name = match algorithm {
        AlgorithmArg::Reduced => "reduced",
        AlgorithmArg::Reference => "reference",
        AlgorithmArg::Oracle => "oracle",
    };
    let relabel = |v: usize| parsed.to_input_label(v);

    let started = Instant::now();
    let outcome: Option<(usize, Vec<usize>, Vec<report::BlockReport>)> = match algorithm {
        AlgorithmArg::Reduced | AlgorithmArg::Reference => {
            let sol = match algorithm {
                AlgorithmArg::Reduced => reduced::solve(g),
                _ => reference::solve_reference(g),
            };
            sol.map(|s| {
                let blocks = report::blocks_of_solution(&s, relabel);
                (s.size, s.vertices, blocks)
            })
        }
        AlgorithmArg::Oracle => {
            let res = oracle::brute_min_2dom(g).map_err(|e| Failure::usage(e.to_string()))?;
            res.map(|b| {
                let witness = b.witnesses.first().cloned().unwrap_or_default();
                let blocks = report::blocks_of_witness(g, &witness, relabel);
                (b.size, witness, blocks)
            })
        }
    };
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;

    match outcome {
        None => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&SolveReport::infeasible(name, elapsed_ms)).unwrap()
                );
            } else {
                println!("INFEASIBLE");
            }
            Err(Failure::outcome(2))
        }
        Some((size, vertices, blocks)) => {
            let mut labeled: Vec<usize> = vertices.iter().map(|&v| relabel(v)).collect();
            labeled.sort_unstable();
            if json {
                let report = SolveReport::solved(
                    name,
                    elapsed_ms,
                    size,
                    labeled,
                    blocks,
                    parsed.permutation.clone(),
                );
                println!("{}", serde_json::to_string(&report).unwrap());
            } else {
                println!("size {size}");
                let words: Vec<String> = labeled.iter().map(|v| v.to_string()).collect();
                println!("{}", format!("witness {}", words.join(" ")).trim_end());
            }
            Ok(())
        }
    }
}

fn cmd_check(input: &InputArg, set: &[usize]) -> Result<(), Failure> {
    let parsed = read_instance(input)?;
    let mut internal = Vec::with_capacity(set.len());
    for &label in set {
        match parsed.to_internal_label(label) {
            Some(v) => internal.push(v),
            None => {
                return Err(Failure::usage(format!(
                    "vertex {label} does not exist in the instance"
                )))
            }
        }
    }
    let valid = oracle::is_2dom(&parsed.graph, &VertexSet::new(internal))
        .map_err(|e| Failure::usage(e.to_string()))?;
    if valid {
        println!("VALID");
        Ok(())
    } else {
        println!("INVALID");
        Err(Failure::outcome(2))
    }
}
