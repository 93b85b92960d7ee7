use std::io::Write as _;
use std::process::ExitCode;

use clap::Parser;
use nullideal::{run, Cli, BUDGET_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_budget = std::env::var(BUDGET_ENV).ok();
    match run(&cli, env_budget.as_deref()) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if out
                .write_all(outcome.render(cli.pretty).as_bytes())
                .is_err()
            {
                return ExitCode::from(1);
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("nullideal: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
