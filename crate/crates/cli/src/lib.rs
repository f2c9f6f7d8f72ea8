//! Library side of the `rgsmooth` command-line tool.

pub mod args;
pub mod generate;
pub mod run;

pub use args::{Cli, Command, GenerateArgs, SignalKind, SmoothArgs, StepsArg};
pub use generate::{clean_signal, sine_noise};
pub use run::{run_generate, run_smooth, CliError};
