use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dwork::pointcount::{CountOptions, DEFAULT_BUDGET};
use dwork::report::{self, CountRequest, ReportDocument, StrategyChoice};
use dwork::Result;

#[derive(Parser)]
#[command(name = "dwork", version, about = "Eigenspace tables and point counts for Dwork-family hypersurfaces")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for point counting.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Maximum candidates a single count or scan may evaluate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Write the document here instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// List every class, or the permutation orbits.
    Classes {
        #[arg(long = "N")]
        n: u32,
        #[arg(long = "W")]
        w: Option<String>,
        #[arg(long)]
        orbits: bool,
    },
    /// Dimensions and Hodge-Tate weights.
    Hodge {
        #[arg(long = "N")]
        n: u32,
        #[arg(long = "W")]
        w: Option<String>,
        #[arg(long = "v", allow_hyphen_values = true)]
        v: Option<String>,
    },
    /// A class with a repeated Hodge-Tate weight.
    Witness {
        #[arg(long = "N")]
        n: u32,
        #[arg(long = "W")]
        w: Option<String>,
    },
    /// Point count of one fiber.
    Count {
        #[arg(long = "N")]
        n: u32,
        #[arg(long = "W")]
        w: Option<String>,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// An integer below p, or polynomial coefficients `c0,c1,...`.
        #[arg(long)]
        t: String,
        #[arg(long, default_value = "auto")]
        strategy: String,
        /// Also count over the extensions of degree 1..=k.
        #[arg(long)]
        tower: Option<u32>,
    },
    /// The quintic tables in one document.
    Report,
}

fn list(s: &Option<String>) -> Result<Option<Vec<i64>>> {
    s.as_deref().map(report::parse_list).transpose()
}

fn run(cli: &Cli) -> Result<ReportDocument> {
    match &cli.command {
        Command::Classes { n, w, orbits } => report::cmd_classes(*n, list(w)?.as_deref(), *orbits),
        Command::Hodge { n, w, v } => report::cmd_hodge(*n, list(w)?.as_deref(), list(v)?.as_deref()),
        Command::Witness { n, w } => report::cmd_witness(*n, list(w)?.as_deref(), cli.budget),
        Command::Count { n, w, p, m, t, strategy, tower } => {
            let req = CountRequest {
                n: *n,
                w: list(w)?,
                p: *p,
                m: *m,
                t: report::parse_element(t)?,
                strategy: strategy.parse::<StrategyChoice>()?,
                tower: *tower,
            };
            report::cmd_count(&req, &CountOptions { workers: cli.workers, budget: cli.budget })
        }
        Command::Report => report::cmd_report(),
    }
}

fn emit(cli: &Cli, doc: &ReportDocument) -> Result<()> {
    let body = match cli.format {
        Format::Json => {
            for (label, elapsed) in &doc.timings {
                eprintln!("time {label}: {:.3}s", elapsed.as_secs_f64());
            }
            doc.to_json()?
        }
        Format::Text => report::render_text(doc),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli).and_then(|doc| emit(&cli, &doc)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_class().code() as u8)
        }
    }
}
