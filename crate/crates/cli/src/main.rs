use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use edgesquare::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(1),
        Err(e) => {
            drop(out);
            eprintln!("edgesquare: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
