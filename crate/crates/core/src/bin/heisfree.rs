use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heisfree::cli::{self, CartanInput, CliError, CommonOpts, Format, VerdictReport};
use heisfree::scalars::{ScalarPath, DEFAULT_TOL};

/// Freeness checkers and calculators for groups generated by two Heisenberg
/// translations.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    /// Maximum word length for the identity-word search (0 disables it).
    #[arg(long, global = true, default_value_t = 0)]
    depth: usize,
    /// Tolerance for floating comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Structured)]
    format: OutputFormat,
    /// Worker threads for the word search.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Structured,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    Complex,
    Quaternion,
}

impl From<PathArg> for ScalarPath {
    fn from(p: PathArg) -> Self {
        match p {
            PathArg::Complex => ScalarPath::Complex,
            PathArg::Quaternion => ScalarPath::Quaternion,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the circle threshold for mu, optionally searching for identity words.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, value_enum, default_value_t = PathArg::Complex)]
        path: PathArg,
    },
    /// Cartan invariant and inversion decomposition for a circle parameter.
    Cartan(CartanArgs),
    /// Reproduce the mu = -3/4 counterexample.
    Refute,
    /// Sample nu over an interval and write one JSON record per line.
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        nu_min: String,
        #[arg(long, allow_hyphen_values = true)]
        nu_max: String,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Heisenberg group law, written "(zeta; nu)".
    Heis {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum, default_value_t = PathArg::Complex)]
        path: PathArg,
    },
    /// Lyndon-Ullman condition |mn| >= 4.
    Lu {
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
    },
    /// Vertical quaternionic pair with imaginary tau.
    Vquat {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CartanArgs {
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    /// nu^2, for parameters with irrational nu.
    #[arg(long, allow_hyphen_values = true)]
    nu_squared: Option<String>,
}

fn run(cli: &Cli) -> Result<VerdictReport, CliError> {
    let opts = CommonOpts {
        depth: cli.depth,
        tol: cli.tol,
        workers: cli.workers,
    };
    match &cli.command {
        Command::Check { mu, path } => cli::cmd_check(mu, (*path).into(), &opts),
        Command::Cartan(args) => {
            let input = match (&args.nu, &args.nu_squared) {
                (Some(nu), _) => CartanInput::Nu(nu.clone()),
                (None, Some(sq)) => CartanInput::NuSquared(sq.clone()),
                (None, None) => unreachable!("clap requires one of --nu, --nu-squared"),
            };
            cli::cmd_cartan(&input, &opts)
        }
        Command::Refute => cli::cmd_refute(&opts),
        Command::Sweep {
            nu_min,
            nu_max,
            steps,
            out,
        } => cli::cmd_sweep(nu_min, nu_max, *steps, out, &opts),
        Command::Heis { p, q, path } => cli::cmd_heis(p, q, (*path).into(), &opts),
        Command::Lu { m, n } => cli::cmd_lu(m, n, &opts),
        Command::Vquat { tau } => cli::cmd_vquat(tau, &opts),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = match cli.format {
        OutputFormat::Structured => Format::Structured,
        OutputFormat::Pretty => Format::Pretty,
    };
    match run(&cli) {
        Ok(report) => {
            let text = report.render(format);
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
