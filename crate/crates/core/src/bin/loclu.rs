use std::process::ExitCode;

fn main() -> ExitCode {
    loclu::cli::main_with_args(std::env::args_os())
}
