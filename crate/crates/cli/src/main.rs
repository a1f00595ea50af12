//! `hodge-locus`: period-domain invariants and dimension bounds from a
//! Hodge-number signature, exact hypersurface Hodge numbers, signature-space
//! search, and admissibility verdicts.

use clap::{Parser, Subcommand, ValueEnum};

use hodge_locus_cli::search::Predicate;
use hodge_locus_cli::{
    run_admissible, run_analyze, run_hypersurface, run_search, CliError, Format,
};

#[derive(Parser)]
#[command(
    name = "hodge-locus",
    version,
    about = "Exact period-domain invariants and Hodge-locus dimension bounds",
    after_help = "Exit codes: 0 success, 2 invalid input, 3 image dimension exceeds the bound, 4 search cap exceeded."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(value: FormatArg) -> Format {
        match value {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateArg {
    /// Hodge-locus estimate exists and beats the Carlson-Toledo figure.
    #[value(name = "mhl-lt-ct")]
    MhlLtCt,
    /// Level at least 3.
    #[value(name = "level-ge-3")]
    LevelGe3,
    /// Hodge-locus estimate is strictly the best applicable bound.
    #[value(name = "sharp-candidates")]
    SharpCandidates,
}

impl From<PredicateArg> for Predicate {
    fn from(value: PredicateArg) -> Predicate {
        match value {
            PredicateArg::MhlLtCt => Predicate::MhlLtCt,
            PredicateArg::LevelGe3 => Predicate::LevelGe3,
            PredicateArg::SharpCandidates => Predicate::SharpCandidates,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one signature: level, domain dimension, and all bounds.
    Analyze {
        /// Weight of the signature.
        #[arg(long)]
        weight: i64,
        /// Dense list "1,426,1755,426,1" ordered h^{w,0} first, or sparse
        /// "p:value" entries (mirrors are filled in automatically).
        #[arg(long, allow_hyphen_values = true)]
        hodge: String,
        /// Known period-image dimension to check against the final bound.
        #[arg(long)]
        image_dim: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Hodge numbers and bound analysis of smooth projective hypersurfaces.
    Hypersurface {
        /// Complex dimension of the hypersurface.
        #[arg(long)]
        dim: u32,
        /// Degree of the defining equation.
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Enumerate signatures of one weight and report those matching a
    /// predicate.
    Search {
        #[arg(long)]
        weight: i64,
        /// Upper bound for the total dimension (sum of all Hodge numbers).
        #[arg(long)]
        max_total: u64,
        #[arg(long, value_enum)]
        predicate: PredicateArg,
        /// Stop after this many matches.
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Admissibility verdict for a subdatum against a variation.
    Admissible {
        #[arg(long)]
        domain_dim: String,
        #[arg(long)]
        subdatum_dim: String,
        #[arg(long)]
        image_dim: String,
        #[arg(long)]
        level: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    match cli.command {
        Command::Analyze {
            weight,
            hodge,
            image_dim,
            format,
        } => run_analyze(weight, &hodge, image_dim.as_deref(), format.into()),
        Command::Hypersurface {
            dim,
            degree,
            format,
        } => run_hypersurface(dim, degree, format.into()),
        Command::Search {
            weight,
            max_total,
            predicate,
            limit,
            format,
        } => run_search(weight, max_total, predicate.into(), limit, format.into()),
        Command::Admissible {
            domain_dim,
            subdatum_dim,
            image_dim,
            level,
            format,
        } => run_admissible(&domain_dim, &subdatum_dim, &image_dim, level, format.into()),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok((output, code)) => {
            print!("{output}");
            std::process::exit(code);
        }
        Err(error) => {
            eprintln!("error: {error}");
            std::process::exit(error.exit_code());
        }
    }
}
