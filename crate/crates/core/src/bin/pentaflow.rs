use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pentaflow::experiment::{
    output_dir, run_converge, run_figure, run_flow, run_invariant, run_map, Figure, Perturbation,
    PolygonSource, Report, RunError,
};
use pentaflow::flow::Claim;

#[derive(Parser)]
#[command(name = "pentaflow", version, about = "Pentagram map experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolygonInput {
    /// Polygon CSV (`x,y` per line, cyclic order, no header).
    #[arg(long, conflicts_with = "random")]
    input: Option<PathBuf>,
    /// Use a seeded random convex polygon with this many vertices instead of --input.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl PolygonInput {
    fn source(&self) -> Result<PolygonSource, RunError> {
        match (&self.input, self.random) {
            (Some(p), _) => Ok(PolygonSource::File(p.clone())),
            (None, Some(n)) => Ok(PolygonSource::Random { n, seed: self.seed }),
            (None, None) => Err(RunError::Input(
                "one of --input or --random is required".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Apply the pentagram map repeatedly and write the result.
    Map {
        #[command(flatten)]
        polygon: PolygonInput,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
        /// Output CSV; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print f(V) and its drift under iteration.
    Invariant {
        #[command(flatten)]
        polygon: PolygonInput,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
        #[arg(long = "tolerance", value_name = "KEY=VAL")]
        tolerance: Vec<String>,
        /// Directory for the factor and drift tables.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Test hook: displace a vertex after this iteration.
        #[arg(long, hide = true)]
        perturb_at: Option<usize>,
    },
    /// Residual sweep and convergence exponent for one asymptotic claim.
    Flow {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_parser = parse_claim)]
        claim: Claim,
        #[arg(long = "tolerance", value_name = "KEY=VAL")]
        tolerance: Vec<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Figure data comparing |n^2 T^2(v_{i-1})| with the predicted curve.
    Figure {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_parser = parse_figure)]
        which: Figure,
        #[arg(long = "tolerance", value_name = "KEY=VAL")]
        tolerance: Vec<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Diameter decay under iteration.
    Converge {
        #[command(flatten)]
        polygon: PolygonInput,
        #[arg(long, default_value_t = 30)]
        steps: usize,
        #[arg(long = "tolerance", value_name = "KEY=VAL")]
        tolerance: Vec<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_claim(s: &str) -> Result<Claim, String> {
    Claim::parse(s).ok_or_else(|| {
        format!("unknown claim {s:?} (lemma32, lemma34, theorem31, eq4, corollary35)")
    })
}

fn parse_figure(s: &str) -> Result<Figure, String> {
    Figure::parse(s).ok_or_else(|| format!("unknown figure {s:?} (fig3, fig4)"))
}

fn dispatch(cmd: Command) -> Result<Report, RunError> {
    match cmd {
        Command::Map {
            polygon,
            iterations,
            output,
        } => run_map(&polygon.source()?, iterations, output.as_deref()),
        Command::Invariant {
            polygon,
            iterations,
            tolerance,
            output,
            perturb_at,
        } => {
            let perturb = perturb_at.map(|k| Perturbation {
                after_iteration: k,
                size: 1e-3,
            });
            run_invariant(
                &polygon.source()?,
                iterations,
                &tolerance,
                perturb,
                output.as_deref(),
            )
        }
        Command::Flow {
            config,
            claim,
            tolerance,
            output,
        } => run_flow(&config, claim, &tolerance, output.as_deref()),
        Command::Figure {
            config,
            which,
            tolerance,
            output,
        } => run_figure(&config, which, &tolerance, output.as_deref()),
        Command::Converge {
            polygon,
            steps,
            tolerance,
            output,
        } => {
            let dir = output_dir(output.as_deref(), None);
            run_converge(&polygon.source()?, steps, &tolerance, &dir)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match dispatch(cli.command) {
        Ok(report) => {
            print!("{}", report.stdout);
            ExitCode::from(report.status.code() as u8)
        }
        Err(e) => {
            eprintln!("pentaflow: {e}");
            ExitCode::from(e.status().code() as u8)
        }
    }
}
