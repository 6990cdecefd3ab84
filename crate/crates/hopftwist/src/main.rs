use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    hopftwist::cli::main_with_args(&args)
}
