use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    stefan3::cli::init_logging();
    let outcome = stefan3::cli::run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
