use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use jwcat_core::expr::{eval_str, EvalError};
use jwcat_core::fixtures::{show_fixture, FIXTURE_NAMES};
use jwcat_core::pipeline::zigzag_arc;
use jwcat_core::verify::{run_suite, VerificationConfig, DEFAULT_WINDOW, MIN_WINDOW};

const EXIT_USAGE: u8 = 3;

/// Exact verification of the categorified Jones-Wenzl comparison on the zig-zag algebra.
#[derive(Parser, Debug)]
#[command(name = "jwcat", version)]
struct Cli {
    /// Truncation window for infinite complexes (at least 4).
    #[arg(long, short = 'n', global = true, env = "JWCAT_WINDOW", default_value_t = DEFAULT_WINDOW)]
    window: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the verification suite.
    Verify {
        /// Order of the power series comparisons (default 2N+1).
        #[arg(long, short = 'm')]
        order: Option<i32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Only run these check groups (comma separated or repeated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Evaluate an expression such as `D(P(P(1)))<1>` or `CK(D(P(2)))`.
    Eval {
        expr: String,
        #[arg(long, short = 'm')]
        order: Option<i32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a built-in fixture; `list` shows the names.
    Show { fixture: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if cli.window < MIN_WINDOW {
        return usage(format!("window must be at least {MIN_WINDOW}, got {}", cli.window));
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify { order, format, only } => {
            let mut cfg = VerificationConfig::new(cli.window);
            if let Some(m) = order {
                cfg.order = m;
            }
            cfg.only = only.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            if let Err(e) = cfg.validate() {
                return Ok(usage(e));
            }
            let report = run_suite(&cfg);
            match format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Command::Eval { expr, order, format } => {
            let order = order.unwrap_or(2 * cli.window as i32 + 1);
            if order < 1 {
                return Ok(usage(format!("series order must be positive, got {order}")));
            }
            let b = zigzag_arc();
            match eval_str(&b, &expr, cli.window, order) {
                Ok(ev) => {
                    match format {
                        Format::Text => print!("{ev}"),
                        Format::Json => println!("{}", serde_json::to_string_pretty(&ev)?),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(EvalError::Parse(p)) => {
                    eprintln!("{expr}");
                    eprintln!("{}^", " ".repeat(p.position));
                    Ok(usage(p))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Show { fixture } => {
            if fixture == "list" {
                for name in FIXTURE_NAMES {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let b = zigzag_arc();
            match show_fixture(&b, &fixture, cli.window as i32) {
                Some(s) => {
                    println!("{s}");
                    Ok(ExitCode::SUCCESS)
                }
                None => Ok(usage(format!(
                    "unknown fixture `{fixture}` (known: {})",
                    FIXTURE_NAMES.join(", ")
                ))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use jwcat_core::verify::GROUPS;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn only_splits_on_commas() {
        let cli = Cli::try_parse_from(["jwcat", "verify", "--only", "kdm,decat", "--only", "objects"]).unwrap();
        let Command::Verify { only, .. } = cli.command else { panic!() };
        assert_eq!(only, ["kdm", "decat", "objects"]);
        assert!(only.iter().all(|g| GROUPS.contains(&g.as_str())));
    }
}
