use clap::Parser;
use flagdual::cli::{execute, Command};

fn main() -> std::process::ExitCode {
    std::process::ExitCode::from(execute(&Command::parse()))
}
