use std::process::ExitCode;

fn main() -> ExitCode {
    pingmark::cli::main()
}
