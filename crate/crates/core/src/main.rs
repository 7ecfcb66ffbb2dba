use std::process::ExitCode;

fn main() -> ExitCode {
    longknot::cli::main()
}
