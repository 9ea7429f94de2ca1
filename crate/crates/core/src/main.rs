use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cvbell::cli::{exit_code, run, Command, Format, RunConfig};

#[derive(Parser)]
#[command(name = "cvbell", version, about = "Continuous-variable Bell inequalities in phase space")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Largest Fock index in tables
    #[arg(long = "m-max", global = true, default_value_t = 30)]
    m_max: usize,
    /// Disk radius; repeat for several series
    #[arg(long = "R", global = true, allow_negative_numbers = true)]
    radii: Vec<f64>,
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Nodes per axis for full phase-space quadratures
    #[arg(long = "grid-n", global = true)]
    grid_n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Csv)]
    format: OutFormat,
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long = "route-offset", global = true, hide = true, default_value_t = 0.0, allow_negative_numbers = true)]
    route_offset: f64,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Bell value of the two-mode Bell state by every route
    BellState,
    /// Table of |1 - 2 lambda_m(R)| (fig1.csv)
    Eigenvalues,
    /// Integral of |W_m| for m = 0..=m-max (fig2.csv)
    AbsWigner,
    /// Star-product and operator cross-checks
    StarCheck,
    /// CHSH identity on random dichotomic observables
    ChshCheck,
    /// SVG charts of both figures
    Plot,
}

#[derive(ValueEnum, Clone, Copy)]
enum OutFormat {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let command = match cli.command {
        Cmd::BellState => Command::BellState,
        Cmd::Eigenvalues => Command::Eigenvalues,
        Cmd::AbsWigner => Command::AbsWigner,
        Cmd::StarCheck => Command::StarCheck,
        Cmd::ChshCheck => Command::ChshCheck,
        Cmd::Plot => Command::Plot,
    };
    let defaults = RunConfig::default();
    let config = RunConfig {
        m_max: cli.m_max,
        radii: if cli.radii.is_empty() { defaults.radii } else { cli.radii },
        tol: cli.tol,
        grid_n: cli.grid_n,
        format: match cli.format {
            OutFormat::Csv => Format::Csv,
            OutFormat::Json => Format::Json,
        },
        out: cli.out,
        seed: cli.seed,
        route_offset: cli.route_offset,
    };
    match run(command, &config) {
        Ok(report) => {
            print!("{}", report.render(config.format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
