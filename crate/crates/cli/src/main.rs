use std::process::ExitCode;

use clap::Parser;
use rgsmooth_cli::{run_generate, run_smooth, Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Smooth(args) => run_smooth(args, &mut std::io::stderr().lock()).map(drop),
        Command::Generate(args) => run_generate(args).map(drop),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rgsmooth: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
