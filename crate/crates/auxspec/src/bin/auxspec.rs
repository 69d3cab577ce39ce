use std::process::ExitCode;

fn main() -> ExitCode {
    auxspec::cli::run()
}
