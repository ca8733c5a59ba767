use std::process::ExitCode;

fn main() -> ExitCode {
    uslev::cli::main_entry()
}
