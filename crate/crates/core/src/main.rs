use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = finrec::cli::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let code = finrec::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
