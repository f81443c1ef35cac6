use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use thl_cli::{emit, load_config, run, CliError, Format, JobConfig, COMMANDS};

#[derive(Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Human,
    Machine,
}

/// Exact twisted and crossed-product cyclic homology.
#[derive(Parser)]
#[command(name = "thl", version)]
struct Args {
    /// One of: validate, hc-twisted, hc-crossed, hc-coinv, hc-lambda, hh-G, hdr-G,
    /// verify-identities, verify-theorem, verify-lemma, verify-sbi, verify-karoubi, all
    command: String,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    twist: Option<String>,
    #[arg(long, value_enum)]
    lambda_coinv: Option<Switch>,
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
    /// Built-in fixture, used when no config is given
    #[arg(long)]
    fixture: Option<String>,
}

fn job(args: &Args) -> Result<JobConfig, CliError> {
    let mut job = match (&args.config, &args.fixture) {
        (Some(path), None) => load_config(path)?,
        (None, Some(name)) => JobConfig::from_fixture(name)?,
        (Some(_), Some(_)) => return Err(CliError::Usage("give --config or --fixture, not both".into())),
        (None, None) => return Err(CliError::Usage("missing --config (or --fixture)".into())),
    };
    if let Some(n) = args.max_degree {
        job.max_degree = n;
    }
    if let Some(t) = &args.twist {
        job.twist = Some(t.clone());
        job.twist_index()?;
    }
    match args.lambda_coinv {
        Some(Switch::On) => job.lambda_coinvariants = true,
        Some(Switch::Off) => job.lambda_coinvariants = false,
        None => {}
    }
    match args.format {
        Some(OutFormat::Human) => job.format = Format::Human,
        Some(OutFormat::Machine) => job.format = Format::Machine,
        None => {}
    }
    Ok(job)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = job(&args).and_then(|job| {
        let command = job.command.clone().filter(|_| args.command == "config").unwrap_or(args.command.clone());
        if !COMMANDS.contains(&command.as_str()) {
            return Err(CliError::UnknownCommand(command));
        }
        let start = Instant::now();
        let report = run(&command, &job)?;
        print!("{}", emit(&report, job.format));
        if job.format == Format::Human {
            eprintln!("elapsed {:.2?}", start.elapsed());
        }
        Ok(report.exit_code())
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
