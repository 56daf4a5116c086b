use std::process::ExitCode;

fn main() -> ExitCode {
    charq_cli::run()
}
