use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use oddprime::search::DEFAULT_SEARCH_BUDGET;
use oddprime::{
    build_family, classify, convert_prime_to_odd, dot, exhaustive_search, label_family,
    lemma2_check, rn_sequence, verify_labeling, BoundCheck, FamilySpec, Graph, Labeling,
    SearchVerdict, Verdict,
};

#[derive(Parser)]
#[command(
    name = "oddprime",
    version,
    about = "Odd prime graph labelings: generate, label, verify, search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family tag, e.g. snake, book, grid, path_power
    #[arg(long)]
    family: String,
    /// Family parameters as one JSON object, e.g. '{"k":6,"n":5}'
    #[arg(long, default_value = "{}")]
    params: String,
}

#[derive(Args)]
struct OutputArgs {
    /// Write output here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format; defaults to json, or dot when --out ends in .dot
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a family specification
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Construct an odd prime labeling for a proven family
    Label {
        #[command(flatten)]
        family: FamilyArgs,
        /// Also run the verifier and include its report
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a labeling against a graph
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exhaustively search for an odd prime labeling
    Search {
        #[arg(long)]
        graph: PathBuf,
        /// Node budget before giving up
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Accepted for compatibility; the search is always deterministic
        #[arg(long, default_value_t = true)]
        deterministic: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit the stored labeling of the maximal coprime graph R_n (n <= 50)
    Rn {
        #[arg(long)]
        n: usize,
        /// Emit the labeled graph instead of the bare sequence
        #[arg(long)]
        emit_graph: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Convert a prime labeling into an odd prime labeling
    Convert {
        #[arg(long)]
        graph: PathBuf,
        /// JSON file {"labels": {"1": 2, ...}} mapping vertices to 1..n
        #[arg(long)]
        prime: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the independence-number bound necessary for odd primality
    CheckBound {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Report what is known about a family instance
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Deserialize)]
struct PrimeLabeling {
    labels: BTreeMap<usize, usize>,
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), String> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn chosen_format(output: &OutputArgs) -> Format {
    output.format.unwrap_or_else(|| match &output.out {
        Some(p) if p.extension().is_some_and(|e| e == "dot") => Format::Dot,
        _ => Format::Json,
    })
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_family(args: &FamilyArgs) -> Result<FamilySpec, String> {
    let spec = FamilySpec::from_tag_params(&args.family, &args.params)
        .map_err(|e| format!("--family/--params: {e}"))?;
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Generate { family, output } => {
            let spec = parse_family(&family)?;
            let g = build_family(&spec).map_err(|e| e.to_string())?;
            let text = match chosen_format(&output) {
                Format::Json => pretty(&g),
                Format::Dot => dot::to_dot(&g, None),
            };
            emit(&output, &text)?;
            Ok(0)
        }
        Command::Label {
            family,
            verify,
            output,
        } => {
            let spec = parse_family(&family)?;
            let g = build_family(&spec).map_err(|e| e.to_string())?;
            let ell = label_family(&spec).map_err(|e| e.to_string())?;
            match chosen_format(&output) {
                Format::Dot => {
                    emit(&output, &dot::to_dot(&g, Some(&ell)))?;
                    Ok(0)
                }
                Format::Json => {
                    if verify {
                        let report = verify_labeling(&g, &ell).map_err(|e| e.to_string())?;
                        let doc = serde_json::json!({
                            "labels": ell.labels,
                            "report": &report,
                        });
                        emit(&output, &pretty(&doc))?;
                        Ok(if report.is_valid { 0 } else { 1 })
                    } else {
                        emit(&output, &pretty(&ell))?;
                        Ok(0)
                    }
                }
            }
        }
        Command::Verify {
            graph,
            labeling,
            output,
        } => {
            let g: Graph = read_json(&graph)?;
            let ell: Labeling = read_json(&labeling)?;
            let report = verify_labeling(&g, &ell).map_err(|e| e.to_string())?;
            emit(&output, &pretty(&report))?;
            Ok(if report.is_valid { 0 } else { 1 })
        }
        Command::Search {
            graph,
            budget,
            deterministic: _,
            output,
        } => {
            let g: Graph = read_json(&graph)?;
            let outcome = exhaustive_search(&g, budget);
            emit(&output, &pretty(&outcome))?;
            Ok(match outcome.verdict {
                SearchVerdict::Found { .. } => 0,
                SearchVerdict::ExhaustedNoSolution => 1,
                SearchVerdict::BudgetExceeded => 3,
            })
        }
        Command::Rn {
            n,
            emit_graph,
            output,
        } => {
            let seq = rn_sequence(n).map_err(|e| e.to_string())?;
            if emit_graph {
                let g = build_family(&FamilySpec::MaximalPrimeGraph { n })
                    .map_err(|e| e.to_string())?;
                let ell = Labeling::new(seq.iter().enumerate().map(|(i, &l)| (i + 1, l)));
                let text = match chosen_format(&output) {
                    Format::Dot => dot::to_dot(&g, Some(&ell)),
                    Format::Json => pretty(&serde_json::json!({
                        "graph": g,
                        "labels": ell.labels,
                    })),
                };
                emit(&output, &text)?;
            } else {
                emit(
                    &output,
                    &pretty(&serde_json::json!({ "n": n, "sequence": seq })),
                )?;
            }
            Ok(0)
        }
        Command::Convert {
            graph,
            prime,
            output,
        } => {
            let g: Graph = read_json(&graph)?;
            let p: PrimeLabeling = read_json(&prime)?;
            match convert_prime_to_odd(&g, &p.labels) {
                Ok(ell) => {
                    emit(&output, &pretty(&ell))?;
                    Ok(0)
                }
                Err(e @ oddprime::Error::NotAPrimeLabeling(_)) => {
                    eprintln!("{e}");
                    Ok(1)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::CheckBound { graph, output } => {
            let g: Graph = read_json(&graph)?;
            let check = lemma2_check(&g).map_err(|e| e.to_string())?;
            emit(&output, &pretty(&check))?;
            Ok(match check {
                BoundCheck::Pass { .. } => 0,
                BoundCheck::Fail { .. } => 1,
            })
        }
        Command::Classify { family, output } => {
            let spec = parse_family(&family)?;
            let verdict = classify(&spec).map_err(|e| e.to_string())?;
            emit(&output, &pretty(&verdict))?;
            Ok(match verdict {
                Verdict::NotOddPrime { .. } => 1,
                _ => 0,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
