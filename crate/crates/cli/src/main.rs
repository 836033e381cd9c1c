use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod config_file;
mod report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Compute(String),
}

impl From<dnormal::Error> for CliError {
    fn from(e: dnormal::Error) -> Self {
        use dnormal::Error as E;
        match e {
            E::Input(_) | E::Dimension(_) | E::Rank(_) | E::NonPointed(_) => {
                CliError::Input(e.to_string())
            }
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dnormal", version, about = "Toric initial ideals, triangulations and Stanley filtrations")]
pub struct Cli {
    /// Truncation degree for filtration and CM checks.
    #[arg(long, global = true)]
    pub degree_cap: Option<u64>,
    /// Worker threads for parallel sections; output is unaffected.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Include wall-clock stage timings in the report.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Overrides for the term order stored in the configuration file.
#[derive(Debug, Args, Clone, Default)]
pub struct OrderArgs {
    /// Weight vector, space or comma separated.
    #[arg(long)]
    pub weight: Option<String>,
    /// Variable names, largest first.
    #[arg(long)]
    pub tiebreak: Option<String>,
}

#[derive(Debug, Args, Clone, Default)]
pub struct ShellingArgs {
    /// Facet order as 1-based column indices, e.g. "4 11 12 | 11 12 13".
    #[arg(long)]
    pub shelling: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Groebner basis, initial ideal and maximal degree.
    Groebner {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Regular triangulation induced by the term order.
    Triangulate {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Standard pairs of the initial ideal, or of a monomial ideal file.
    StandardPairs {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        ideal: Option<PathBuf>,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Checks that the induced triangulation is Delta-normal.
    DeltaNormal {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Checks that the semigroup is saturated.
    Normal { file: PathBuf },
    /// Builds and verifies the Stanley filtration.
    StanleyFiltration {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        shelling: ShellingArgs,
    },
    /// Certifies Cohen-Macaulayness of the initial ideal.
    CmCertify {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        shelling: ShellingArgs,
    },
    /// Classifies initial ideal generators and checks the degree bound.
    DegreeBound {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Generates configurations from a named family.
    Family {
        kind: FamilyKind,
        /// Vector (a,b,c,d) for fz and delta-tower.
        #[arg(long, default_value = "1,2,3,5")]
        v: String,
        /// Top level of a tower.
        #[arg(long)]
        d: Option<usize>,
        /// Base configuration for non-delta-tower.
        #[arg(long)]
        base: Option<PathBuf>,
        /// Edge list for graph.
        #[arg(long)]
        edges: Option<PathBuf>,
        /// Vertex count for graph; defaults to the largest vertex in the list.
        #[arg(long)]
        vertices: Option<usize>,
        /// Directory for the generated configuration files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs every stage in order and stops at the first failing certificate.
    Pipeline {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        shelling: ShellingArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Fz,
    DeltaTower,
    NonDeltaTower,
    Graph,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(report) => {
            print!("{}", report.to_json());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_error_kind() {
        use dnormal::Error as E;
        assert_eq!(CliError::from(E::Input("x".into())).exit_code(), 2);
        assert_eq!(CliError::from(E::Rank("x".into())).exit_code(), 2);
        assert_eq!(CliError::from(E::Resource("x".into())).exit_code(), 3);
        assert_eq!(CliError::from(E::NoShelling("x".into())).exit_code(), 3);
    }
}
