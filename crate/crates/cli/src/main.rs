mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use arthom::classify::Caps;

#[derive(Parser, Debug)]
#[command(name = "arthom", version, about = "Exact relative homological algebra for bound quiver algebras")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(flatten)]
    caps: CapArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CapArgs {
    /// Longest (co)resolution computed before reporting infinity.
    #[arg(long = "cap-resolution", env = "ARTHOM_CAP_RESOLUTION", global = true, default_value_t = 32,
          value_parser = clap::value_parser!(u64).range(1..))]
    resolution: u64,
    /// Most indecomposables enumerated before giving up.
    #[arg(long = "cap-enumeration", env = "ARTHOM_CAP_ENUMERATION", global = true, default_value_t = 512,
          value_parser = clap::value_parser!(u64).range(1..))]
    enumeration: u64,
    /// Longest path considered while completing the relations.
    #[arg(long = "cap-path", env = "ARTHOM_CAP_PATH", global = true, default_value_t = 64,
          value_parser = clap::value_parser!(u64).range(1..))]
    path: u64,
    /// Longest approximation coresolution.
    #[arg(long = "cap-codim", env = "ARTHOM_CAP_CODIM", global = true, default_value_t = 8,
          value_parser = clap::value_parser!(u64).range(1..))]
    codim: u64,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            resolution: self.resolution as usize,
            enumeration: self.enumeration as usize,
            path: self.path as usize,
            codim: self.codim as usize,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal projective or injective resolution of a module.
    Resolve {
        input: PathBuf,
        #[arg(long)]
        module: String,
        /// Resolve by injectives instead of projectives.
        #[arg(long)]
        injective: bool,
    },
    /// Dimensions of Ext^i(from, to) for 0 <= i <= max.
    Ext {
        input: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Dominant dimension of the algebra, or relative to an injective module.
    Domdim {
        input: PathBuf,
        /// Injective module whose additive closure replaces the projective-injectives.
        #[arg(long)]
        relative: Option<String>,
        /// Module to resolve instead of the regular module.
        #[arg(long)]
        module: Option<String>,
    },
    /// Coresolution of a module by minimal left add M-approximations.
    Coresolve {
        input: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long)]
        over: String,
    },
    /// Auslander-Reiten translates.
    Tau {
        input: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value_t = TauArg::Tau)]
        kind: TauArg,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Presentation of End_A(M) in the algebra file format.
    Endo {
        input: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test a module for a tilting-type property.
    Check {
        input: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Sub-bifunctor used by f-cotilting.
        #[arg(long, value_enum, default_value_t = FArg::Upper)]
        f: FArg,
        /// Module defining the sub-bifunctor; defaults to the tested module.
        #[arg(long)]
        m: Option<String>,
    },
    /// Homological invariants and class memberships of the algebra.
    Classify {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Relative homology for the sub-bifunctor F^M or F_M.
    Relhom {
        input: PathBuf,
        #[arg(long, value_enum)]
        f: FArg,
        #[arg(long)]
        m: String,
        /// Module whose relative dimensions are reported.
        #[arg(long)]
        module: Option<String>,
        /// Second argument of relative Ext.
        #[arg(long)]
        to: Option<String>,
        #[arg(long, default_value_t = 3)]
        max: usize,
        /// Also report the relative global dimension.
        #[arg(long)]
        global: bool,
    },
    /// Run an embedded golden scenario, or all of them.
    VerifyFixture { name: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TauArg {
    Tau,
    #[value(name = "tau-")]
    TauInverse,
    #[value(name = "tau_n")]
    TauN,
    #[value(name = "tau_n-")]
    TauNInverse,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    AlmostPrecluster,
    Precluster,
    AlmostCluster,
    FCotilting,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FArg {
    Upper,
    Lower,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = commands::run(&cli.command, &cli.caps.caps());
    match out {
        Ok(o) => {
            let body = if cli.json { serde_json::to_string_pretty(&o.json).expect("json") + "\n" } else { o.text };
            emit(&body);
            ExitCode::from(o.status as u8)
        }
        Err(e) => {
            if cli.json {
                emit(&(serde_json::to_string_pretty(&commands::error_json(&e)).expect("json") + "\n"));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(commands::Status::Error as u8)
        }
    }
}

/// Write to stdout, ignoring a closed pipe.
fn emit(body: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(body.as_bytes()).and_then(|_| out.flush());
}
