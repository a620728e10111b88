use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lgm_cli::{
    cmd_compare_methods, cmd_examples, cmd_generate, cmd_iseries, cmd_newton, cmd_period_check,
    model_spec, AmbientArg, CliError, Format, Global, Outcome,
};
use lgm_periods::{Method, ModelSpec};

#[derive(Parser)]
#[command(name = "lgm", version, about = "Laurent mirrors of complete intersections in G(2,N)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,
    /// Write the construction trace as JSON to this file.
    #[arg(long, global = true)]
    dump_pipeline: Option<PathBuf>,
    /// Number of series coefficients to compare.
    #[arg(long, global = true)]
    terms: Option<usize>,
    /// Check every step's post-conditions; failures exit with code 1.
    #[arg(long, global = true)]
    strict_verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Main,
    Appendix,
    ClosedForm,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Main => Method::Main,
            MethodArg::Appendix => Method::Appendix,
            MethodArg::ClosedForm => Method::ClosedForm,
        }
    }
}

#[derive(Args)]
struct Target {
    /// Grassmannian G(2, k+2).
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    k: Option<usize>,
    /// Projective space P^n.
    #[arg(long)]
    n: Option<usize>,
    /// Hypersurface degrees, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "")]
    degrees: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a Laurent mirror.
    Generate {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = MethodArg::Main)]
        method: MethodArg,
        /// Nef partition as JSON {"E":[..],"Em":[[..],..],"sm":[..]}.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Print the regularized I-series.
    Iseries {
        #[command(flatten)]
        target: Target,
        /// Show the calibration evidence.
        #[arg(long)]
        calibration: bool,
    },
    /// Compare the mirror's period with the I-series.
    PeriodCheck {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = MethodArg::Main)]
        method: MethodArg,
    },
    /// Compare periods of the main and appendix mirrors.
    CompareMethods {
        #[command(flatten)]
        target: Target,
    },
    /// Newton polytope of the mirror.
    Newton {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = MethodArg::Main)]
        method: MethodArg,
    },
    /// Regenerate the worked examples and compare with their known forms.
    Examples {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

fn spec(t: &Target) -> Result<ModelSpec, CliError> {
    let degrees = t
        .degrees
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad degree `{s}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let ambient = match (t.k, t.n) {
        (Some(k), _) => AmbientArg::Grassmannian(k),
        (None, Some(n)) => AmbientArg::Projective(n),
        (None, None) => return Err(CliError::Usage("need --k or --n".into())),
    };
    model_spec(ambient, &degrees)
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let g = Global {
        format: match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        dump_pipeline: cli.dump_pipeline,
        terms: cli.terms,
        strict_verify: cli.strict_verify,
    };
    match cli.command {
        Command::Generate {
            target,
            method,
            partition,
        } => cmd_generate(&spec(&target)?, method.into(), partition.as_deref(), &g),
        Command::Iseries {
            target,
            calibration,
        } => cmd_iseries(&spec(&target)?, calibration, &g),
        Command::PeriodCheck { target, method } => {
            cmd_period_check(&spec(&target)?, method.into(), &g)
        }
        Command::CompareMethods { target } => cmd_compare_methods(&spec(&target)?, &g),
        Command::Newton { target, method } => cmd_newton(&spec(&target)?, method.into(), &g),
        Command::Examples { id, .. } => cmd_examples(id.as_deref(), &g),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(o) => {
            print!("{}", o.output);
            if !o.output.ends_with('\n') {
                println!();
            }
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
