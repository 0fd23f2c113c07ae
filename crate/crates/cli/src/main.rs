use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use pctree_cli::{run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(reply) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(reply.stdout.as_bytes());
            let _ = out.flush();
            ExitCode::from(reply.code as u8)
        }
        Err((code, err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(code as u8)
        }
    }
}
