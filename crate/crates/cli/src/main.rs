use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand};
use tauideal::FrobeniusConfig;
use tauideal_cli::campaigns::{campaign_names, CheckOptions};
use tauideal_cli::commands::{cmd_check, cmd_crosscheck, cmd_newton, cmd_tau, cmd_veronese, Format, Method, Output};
use tauideal_cli::generate::IdealShape;
use tauideal_cli::io::{load, IdealSpec, Rat, RingSpec};
use tauideal_cli::CliError;

/// Exact test ideals of monomial ideals in Q-Gorenstein toric rings.
///
/// Exit codes: 0 all pass, 1 counterexample or disagreement, 2 inconclusive,
/// 3 input error.
#[derive(Parser, Debug)]
#[command(name = "tauideal", version)]
struct Cli {
    /// Ring JSON: a file path or an inline object.
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Ideal JSON: a file path or an inline object.
    #[arg(long, global = true)]
    ideal: Option<String>,
    /// Exponent t, as `n` or `n/d`; crosscheck takes a comma-separated list.
    #[arg(long, global = true, value_delimiter = ',')]
    t: Vec<Rat>,
    #[arg(long, global = true, value_enum, default_value_t = Method::Polyhedral)]
    method: Method,
    /// Largest q for the finite-q oracles.
    #[arg(long, global = true, default_value_t = 128)]
    qmax: u64,
    #[arg(long, global = true, default_value_t = 2)]
    prime: u64,
    /// Multiplier box for tight-closure experiments.
    #[arg(long, global = true, default_value_t = 8)]
    cbox: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    out: Format,
    /// Report zero wall time so that reports are byte-identical.
    #[arg(long, global = true)]
    omit_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal generators of the test ideal by one or all methods.
    Tau,
    /// Vertices, rays and facets of t times the Newton polyhedron.
    Newton,
    /// Run a property campaign.
    Check {
        campaign: String,
        /// Random instances, replacing the campaign default.
        #[arg(long)]
        instances: Option<usize>,
        /// Run only this instance index.
        #[arg(long)]
        only: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_exp: i64,
        #[arg(long, default_value_t = 5)]
        max_gens: usize,
    },
    /// Compare all oracles over a directory of ideal JSON files.
    Crosscheck {
        #[arg(long)]
        corpus: PathBuf,
    },
    /// Closed-form exponent for Veronese rings, checked on the toric model.
    Veronese {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        l: u64,
    },
    /// List campaign names.
    Campaigns,
}

fn single_t(ts: &[Rat]) -> Result<Rat, CliError> {
    match ts {
        [] => Ok(Rat::integer(1)),
        [t] => Ok(t.clone()),
        _ => Err(CliError::Input("this command takes a single --t".into())),
    }
}

fn required<'a>(arg: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    arg.as_deref().ok_or_else(|| CliError::Input(format!("--{flag} is required")))
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let cfg = FrobeniusConfig::new(cli.prime, cli.qmax, cli.cbox)?;
    match cli.command {
        Command::Tau => {
            let ring: RingSpec = load(required(&cli.ring, "ring")?)?;
            let ideal: IdealSpec = load(required(&cli.ideal, "ideal")?)?;
            cmd_tau(&ring, &ideal, &single_t(&cli.t)?, cli.method, &cfg, cli.out)
        }
        Command::Newton => {
            let ring: RingSpec = load(required(&cli.ring, "ring")?)?;
            let ideal: IdealSpec = load(required(&cli.ideal, "ideal")?)?;
            cmd_newton(&ring, &ideal, &single_t(&cli.t)?, cli.out)
        }
        Command::Check {
            campaign,
            instances,
            only,
            max_exp,
            max_gens,
        } => {
            if max_exp < 0 || max_gens == 0 {
                return Err(CliError::Input("--max-exp must be >= 0 and --max-gens >= 1".into()));
            }
            let opts = CheckOptions {
                seed: cli.seed,
                instances,
                only,
                frobenius: cfg,
                shape: IdealShape { max_exp, max_gens },
                omit_timing: cli.omit_timing,
            };
            cmd_check(&campaign, &opts, cli.out)
        }
        Command::Crosscheck { corpus } => {
            let ts = if cli.t.is_empty() {
                vec![Rat::new(1, 2), Rat::integer(1), Rat::new(3, 2)]
            } else {
                cli.t.clone()
            };
            cmd_crosscheck(required(&cli.ring, "ring")?, &corpus, &ts, &cfg, cli.omit_timing, cli.out)
        }
        Command::Veronese { d, r, l } => cmd_veronese(d, r, l, cli.out),
        Command::Campaigns => Ok(Output {
            text: campaign_names().join("\n") + "\n",
            exit: 0,
        }),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(CliError::EXIT_CODE),
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.exit)
        }
        Err(e) => {
            eprintln!("tauideal: {e}");
            ExitCode::from(CliError::EXIT_CODE)
        }
    }
}
