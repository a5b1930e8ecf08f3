use std::io::Write;

use clap::Parser;
use monok_cli::args::Cli;

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let code = match monok_cli::run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return std::process::ExitCode::from(2);
            }
            out.code
        }
        Err(e) => {
            eprintln!("monok: {e}");
            e.exit_code()
        }
    };
    std::process::ExitCode::from(code as u8)
}
