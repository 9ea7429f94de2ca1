//! Write fig1/fig2 tables and SVG charts into a directory (default: ./figures).

use std::path::PathBuf;

use cvbell::cli::{run, Command, RunConfig};

fn main() -> cvbell::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("figures"));
    let config = RunConfig { out, ..RunConfig::default() };
    for command in [Command::Eigenvalues, Command::AbsWigner, Command::Plot] {
        print!("{}", run(command, &config)?.render(config.format));
    }
    Ok(())
}
