use std::io::Write;
use std::process::ExitCode;

use landauer::cli;

fn main() -> ExitCode {
    let env = std::env::var(cli::DIGITS_ENV).ok();
    let digits = match cli::digits_from_env(env.as_deref()) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("landauer: {}", e.message);
            return ExitCode::from(e.code as u8);
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = cli::run(std::env::args_os(), digits, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
