use std::process::ExitCode;

fn main() -> ExitCode {
    monophonic_cli::cli::main_with(std::env::args_os())
}
