use clap::{Args, Parser, Subcommand, ValueEnum};
use qwalk_cli::commands::{
    cmd_convert, cmd_invariant, cmd_iso, cmd_scan, ConvertTarget, ScanOptions,
};
use qwalk_cli::invariant::{InvariantConfig, InvariantKind};
use qwalk_cli::verify::cmd_verify;
use qwalk_core::charpoly::SignatureMode;
use qwalk_core::iso::{IsoVerdict, DEFAULT_NODE_BUDGET};
use std::path::PathBuf;
use std::process::ExitCode;

/// Quantum-walk graph invariants: signatures, family scans, verification.
#[derive(Parser)]
#[command(name = "qwalk", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Adjacency,
    SupportU,
    SplusU,
    SplusU2,
    SplusU3,
    #[value(name = "splus-u-p")]
    SplusUP,
    AdjacencyPowerSupport,
}

impl From<KindArg> for InvariantKind {
    fn from(value: KindArg) -> Self {
        match value {
            KindArg::Adjacency => InvariantKind::Adjacency,
            KindArg::SupportU => InvariantKind::SupportU,
            KindArg::SplusU => InvariantKind::SplusU,
            KindArg::SplusU2 => InvariantKind::SplusU2,
            KindArg::SplusU3 => InvariantKind::SplusU3,
            KindArg::SplusUP => InvariantKind::SplusUP,
            KindArg::AdjacencyPowerSupport => InvariantKind::AdjacencyPowerSupport,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Modular,
}

impl From<ModeArg> for SignatureMode {
    fn from(value: ModeArg) -> Self {
        match value {
            ModeArg::Exact => SignatureMode::Exact,
            ModeArg::Modular => SignatureMode::Modular,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

#[derive(Args)]
struct InvariantArgs {
    /// Matrix family to reduce to a signature.
    #[arg(long = "invariant", value_enum, default_value = "splus-u3")]
    kind: KindArg,
    /// Power for splus-u-p and adjacency-power-support.
    #[arg(long, default_value_t = 3)]
    power: u32,
    /// Signature backend.
    #[arg(long, value_enum, default_value = "modular")]
    mode: ModeArg,
    /// Use the unamended diagonal rule in the direct strongly-regular
    /// cube construction (misclassifies triangle-free inputs; kept for
    /// comparison runs).
    #[arg(long = "strict-paper")]
    strict_paper: bool,
    /// Worker threads for per-graph signature computation.
    #[arg(long)]
    jobs: Option<usize>,
}

impl InvariantArgs {
    fn config(&self) -> InvariantConfig {
        let mut config = InvariantConfig::new(self.kind.into(), self.power, self.mode.into());
        config.strict_paper = self.strict_paper;
        config
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print one signature line per graph in the input family.
    Invariant {
        /// graph6 (one record per line) or edge-list input file.
        input: PathBuf,
        #[command(flatten)]
        invariant: InvariantArgs,
        /// Write matrix dumps (dense 0/1 rows; rational walk-operator
        /// triplets) into this directory.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Group a family by signature and certify collisions by isomorphism.
    Scan {
        input: PathBuf,
        #[command(flatten)]
        invariant: InvariantArgs,
        /// Report format (JSON document or TSV summary).
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Search-node budget for the isomorphism backtracker.
        #[arg(long = "node-budget", default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        /// Single-prime first pass for very large families.
        #[arg(long)]
        streaming: bool,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the closed-form and exactness check suite.
    Verify {
        /// Optional graph file; without it the builtin fixtures run.
        input: Option<PathBuf>,
        /// Base tolerance for floating-point comparisons.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long = "strict-paper")]
        strict_paper: bool,
    },
    /// Decide isomorphism of two graphs (first graph of each file).
    Iso {
        graph_a: PathBuf,
        graph_b: PathBuf,
        #[arg(long = "node-budget", default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Re-encode a graph file between graph6 and edge-list formats.
    Convert {
        input: PathBuf,
        output: PathBuf,
        /// Target encoding.
        #[arg(long = "to", value_enum)]
        target: TargetArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Graph6,
    Edges,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Invariant {
            input,
            invariant,
            dump,
        } => {
            let (lines, errors) =
                cmd_invariant(&input, &invariant.config(), invariant.jobs, dump.as_deref())?;
            print!("{lines}");
            if errors > 0 {
                eprintln!("{errors} graph(s) failed; see ERROR lines");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            input,
            invariant,
            format,
            node_budget,
            streaming,
            output,
        } => {
            let options = ScanOptions {
                config: invariant.config(),
                jobs: invariant.jobs,
                node_budget,
                streaming,
            };
            let report = cmd_scan(&input, &options)?;
            let rendered = match format {
                FormatArg::Json => report.to_json(),
                FormatArg::Tsv => report.to_tsv(),
            };
            match output {
                Some(path) => std::fs::write(path, rendered)?,
                None => print!("{rendered}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            tol,
            strict_paper,
        } => {
            let report = cmd_verify(input.as_deref(), tol, strict_paper)?;
            print!("{}", report.render());
            Ok(if report.failures() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Iso {
            graph_a,
            graph_b,
            node_budget,
        } => {
            let outcome = cmd_iso(&graph_a, &graph_b, node_budget)?;
            match outcome.verdict {
                IsoVerdict::Isomorphic { witness } => {
                    let mapping: Vec<String> = witness.iter().map(|w| w.to_string()).collect();
                    println!("isomorphic");
                    println!("witness: {}", mapping.join(" "));
                    Ok(ExitCode::SUCCESS)
                }
                IsoVerdict::NonIsomorphic => {
                    println!("non-isomorphic");
                    Ok(ExitCode::SUCCESS)
                }
                IsoVerdict::Inconclusive { nodes_explored } => {
                    println!("inconclusive (node budget exhausted after {nodes_explored})");
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Convert {
            input,
            output,
            target,
        } => {
            let target = match target {
                TargetArg::Graph6 => ConvertTarget::Graph6,
                TargetArg::Edges => ConvertTarget::Edges,
            };
            let text = cmd_convert(&input, target)?;
            std::fs::write(output, text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
