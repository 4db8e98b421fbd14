use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use regedge::ReductionKind;
use regedge_cli::{exit, CliError, CliResult, Level};

#[derive(Parser)]
#[command(name = "regedge", version, about = "Regular edges and Hilbert series of edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report regularity flags, coveredness, a regular sequence and the Hilbert series
    Analyze { path: PathBuf },
    /// Contract or polarize a sequence of disjoint edges
    Reduce {
        path: PathBuf,
        /// Edges as `u,v`; repeat the flag or separate edges with `;`
        #[arg(long = "edges")]
        edges: Vec<String>,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Surviving endpoint of each edge, comma separated (default: first endpoint)
        #[arg(long, value_delimiter = ',')]
        survivors: Vec<String>,
    },
    /// Find a longest certified regular sequence of edge binomials
    Regseq { path: PathBuf },
    /// Replay the theorem checks on the corpus or on all small graphs
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        level: VerifyLevel,
        /// Directory of `.el` files to use instead of the built-in corpus
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Contract,
    Polarize,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyLevel {
    Quick,
    Exhaustive,
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Analyze { path } => {
            let g = regedge_cli::load_graph(&path)?;
            print!("{}", regedge_cli::analyze(&g)?);
        }
        Command::Reduce { path, edges, kind, survivors } => {
            let g = regedge_cli::load_graph(&path)?;
            let pairs = regedge_cli::parse_edge_pairs(&edges)?;
            let kind = match kind {
                Kind::Contract => ReductionKind::Contract,
                Kind::Polarize => ReductionKind::Polarize,
            };
            let (result, trace) = regedge_cli::reduce(&g, &pairs, kind, &survivors)?;
            print!("{}", regedge_cli::render_reduction(&result, &trace));
        }
        Command::Regseq { path } => {
            let g = regedge_cli::load_graph(&path)?;
            print!("{}", regedge_cli::regseq(&g));
        }
        Command::Verify { level, corpus } => {
            let files = match corpus {
                Some(dir) => regedge_cli::corpus_from_dir(&dir)?,
                None => regedge_cli::embedded_corpus(),
            };
            let level = match level {
                VerifyLevel::Quick => Level::Quick,
                VerifyLevel::Exhaustive => Level::Exhaustive,
            };
            let summary = regedge_cli::verify(level, &files);
            print!("{summary}");
            if !summary.all_passed() {
                return Ok(exit::VERIFICATION_FAILED);
            }
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(CliError { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code as u8)
        }
    }
}
