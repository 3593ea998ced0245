use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mapcos_bench::commands::{cmd_compare, cmd_converge, cmd_optimize, cmd_resolve};
use mapcos_bench::config::{parse_maps, parse_rule_variant};
use mapcos_bench::output::{gnuplot_stub, vega_stub, CommandOutput};
use mapcos_bench::{BenchError, RunConfig};

#[derive(Parser)]
#[command(
    name = "mapcos-bench",
    version,
    about = "Sweeps for mapped cosine approximation: convergence, resolution, comparison, constant search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Error against n for one function under the selected maps.
    Converge(CommonArgs),
    /// Degrees of freedom needed to resolve each frequency to delta.
    Resolve(CommonArgs),
    /// Error tables for f1/f2/f3 across maps, constants grid-optimized.
    Compare(CommonArgs),
    /// Grid-search the tunable constant of one map for one function.
    Optimize(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Map families: e, se, de, sde, or all (comma-separated).
    #[arg(long, value_delimiter = ',')]
    map: Vec<String>,
    /// Function id from the registry (one, x13, osc, f1, f2, f3).
    #[arg(long)]
    function: Option<String>,
    /// Rule constant c (maps e, de, sde).
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    /// Rule constant alpha0 (map se).
    #[arg(long, default_value_t = 1.0)]
    alpha0: f64,
    /// Rule constant L0 (maps se, sde).
    #[arg(long = "L0", default_value_t = 0.1)]
    l0: f64,
    /// Largest degree considered.
    #[arg(long = "n-max", default_value_t = 1024)]
    n_max: usize,
    /// Frequency schedule for resolve, and frequency override for f1/osc.
    #[arg(long, value_delimiter = ',')]
    omega: Vec<u32>,
    /// Target uniform accuracy for resolve.
    #[arg(long, default_value_t = 1e-2)]
    delta: f64,
    /// Points per discrete max-norm.
    #[arg(long, default_value_t = 20_000)]
    grid: usize,
    /// Parameter-rule form: theorem or caption.
    #[arg(long = "rule-variant", default_value = "theorem")]
    rule_variant: String,
    /// Output CSV path (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    /// Also write a gnuplot script next to --out.
    #[arg(long)]
    gnuplot: bool,
    /// Also write a Vega-Lite spec next to --out.
    #[arg(long)]
    vega: bool,
    /// Lower end of the constant search range (optimize/compare).
    #[arg(long = "opt-min")]
    opt_min: Option<f64>,
    /// Upper end of the constant search range (optimize/compare).
    #[arg(long = "opt-max")]
    opt_max: Option<f64>,
    /// Number of log-spaced candidates (optimize/compare).
    #[arg(long = "opt-points")]
    opt_points: Option<usize>,
}

fn to_config(args: &CommonArgs, command: &str) -> Result<RunConfig, BenchError> {
    let maps = parse_maps(&args.map)?;
    let rule_variant = parse_rule_variant(&args.rule_variant)?;
    let mut cfg = RunConfig {
        maps,
        function: args.function.clone(),
        c: args.c,
        alpha0: args.alpha0,
        l0: args.l0,
        n_max: args.n_max,
        omegas: args.omega.clone(),
        omega_param: None,
        delta: args.delta,
        grid: args.grid,
        rule_variant,
        jobs: args.jobs,
        opt_min: args.opt_min,
        opt_max: args.opt_max,
        opt_points: args.opt_points,
    };
    if cfg.maps.is_empty() && command == "compare" {
        cfg.maps = parse_maps(&["all".to_string()])?;
    }
    // Outside resolve, --omega acts as the frequency parameter of f1/osc.
    if command != "resolve" {
        if cfg.omegas.len() > 1 {
            return Err(BenchError::config(
                "omega",
                "this command takes at most one frequency",
            ));
        }
        cfg.omega_param = cfg.omegas.first().copied();
        cfg.omegas = Vec::new();
    }
    Ok(cfg)
}

fn plot_columns(command: &str) -> (usize, usize, &'static str, &'static str) {
    match command {
        "resolve" => (2, 5, "omega", "ratio_to_scaling"),
        "converge" => (2, 8, "n", "total"),
        "compare" => (3, 12, "n", "total"),
        _ => (4, 5, "value", "error_at_n_max"),
    }
}

fn emit(out: &CommandOutput, args: &CommonArgs, command: &str) -> Result<(), BenchError> {
    match &args.out {
        Some(path) => {
            let mut file = std::fs::File::create(path)?;
            out.write_to(&mut file)?;
            file.flush()?;
            let csv_name = path
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            let (xc, yc, xf, yf) = plot_columns(command);
            if args.gnuplot {
                std::fs::write(
                    path.with_extension("gp"),
                    gnuplot_stub(&csv_name, xc, yc, command),
                )?;
            }
            if args.vega {
                std::fs::write(
                    path.with_extension("vega.json"),
                    vega_stub(&csv_name, xf, yf),
                )?;
            }
            Ok(())
        }
        None => {
            if args.gnuplot || args.vega {
                return Err(BenchError::config(
                    "gnuplot/vega",
                    "plot stubs require --out",
                ));
            }
            let stdout = std::io::stdout();
            out.write_to(stdout.lock())?;
            Ok(())
        }
    }
}

fn run() -> Result<(), BenchError> {
    let cli = Cli::parse();
    let (args, command): (&CommonArgs, &str) = match &cli.command {
        Command::Converge(a) => (a, "converge"),
        Command::Resolve(a) => (a, "resolve"),
        Command::Compare(a) => (a, "compare"),
        Command::Optimize(a) => (a, "optimize"),
    };
    let cfg = to_config(args, command)?;
    let out = match command {
        "converge" => cmd_converge(&cfg)?,
        "resolve" => cmd_resolve(&cfg)?,
        "compare" => cmd_compare(&cfg)?,
        _ => cmd_optimize(&cfg)?,
    };
    emit(&out, args, command)
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mapcos-bench: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
