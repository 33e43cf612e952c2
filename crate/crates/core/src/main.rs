use std::process::ExitCode;

fn main() -> ExitCode {
    hypersph::cli::main()
}
