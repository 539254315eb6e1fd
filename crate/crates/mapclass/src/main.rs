use std::process::ExitCode;

fn main() -> ExitCode {
    mapclass::cli::run()
}
