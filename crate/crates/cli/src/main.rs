mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grig_core::Params;

/// Experiments on the substitution subshift of Grigorchuk's group.
#[derive(Parser, Debug)]
#[command(name = "grig", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the result here instead of stdout (replaced atomically).
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for sweeps.
    #[arg(long, env = "GRIG_THREADS", global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a prefix of η.
    Eta {
        #[arg(long)]
        length: usize,
    },
    /// Enumerated factor counts against the closed form.
    Complexity {
        #[arg(long, default_value_t = 64)]
        max: usize,
        /// Prefix length to enumerate over (default grows until stable).
        #[arg(long)]
        window: Option<usize>,
    },
    /// Longest repetition of every period up to `--max-period`.
    Powers {
        #[arg(long, default_value_t = 256)]
        max_period: usize,
        #[arg(long, default_value_t = 1 << 20)]
        window: usize,
    },
    /// The n-partition of a window.
    Partition {
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long)]
        level: u32,
    },
    /// Edge list of Γₙ or of the graph of a window.
    Graph {
        #[arg(long, conflicts_with = "window")]
        level: Option<usize>,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Eigenvalues of Mₙ or of Hω on a window.
    Spectrum {
        #[arg(long, conflicts_with = "window")]
        level: Option<usize>,
        #[command(flatten)]
        window: WindowArgs,
        /// Operator size for windows (default: every site the window allows).
        #[arg(long)]
        size: Option<usize>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 1e-15)]
        tol: f64,
        /// Cover radius for the JSON summary (default 2⁻ⁿ or 1/size).
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Counting-function distance between Mₙ and the window operators.
    Ids {
        #[arg(long, default_value_t = 6)]
        from: usize,
        #[arg(long, default_value_t = 12)]
        to: usize,
        #[command(flatten)]
        params: ParamArgs,
        /// Instead of the table, print the three counting functions at `LEVEL`.
        #[arg(long, value_name = "LEVEL")]
        curve: Option<usize>,
    },
    /// Cover lengths at ε = 2⁻ⁿ for two parameter points across levels.
    Dichotomy {
        #[arg(long, default_value_t = 8)]
        from: usize,
        #[arg(long, default_value_t = 13)]
        to: usize,
        #[arg(long, default_value = "1,1,1,1", value_parser = parse_params)]
        first: Params,
        #[arg(long, default_value = "1,1,2,3", value_parser = parse_params)]
        second: Params,
    },
    /// Checks the defining relations and Lysenok's relators on a level.
    Relators {
        #[arg(long, default_value_t = 10)]
        level: usize,
        #[arg(long, default_value_t = 3)]
        kappa: u32,
    },
}

#[derive(Args, Debug, Clone)]
struct WindowArgs {
    /// Window such as `xax|axa`; `|` marks the origin.
    #[arg(long)]
    window: Option<String>,
    /// Use `η₁ … η_LENGTH` as the window.
    #[arg(long, conflicts_with = "window")]
    prefix: Option<usize>,
    /// With `--prefix`: 1-based index of ω₁.
    #[arg(long, default_value_t = 1, requires = "prefix")]
    origin: usize,
}

#[derive(Args, Debug, Clone, Copy)]
struct ParamArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    t: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    u: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    v: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    w: f64,
}

impl ParamArgs {
    fn params(&self) -> Params {
        Params::new(self.t, self.u, self.v, self.w)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

fn parse_params(s: &str) -> Result<Params, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match parts.as_slice() {
        &[t, u, v, w] => Ok(Params::new(t, u, v, w)),
        _ => Err("expected four comma-separated numbers t,u,v,w".into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("grig: {e:#}");
            ExitCode::FAILURE
        }
    }
}
