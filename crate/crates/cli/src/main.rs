//! `symperm`: sampling, exact laws, Tracy–Widom tables and comparisons.
//!
//! Exit status: 0 on success, 2 for parameter and usage errors, 3 for
//! numerical failures, 1 for I/O errors.

mod args;
mod commands;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, ExperimentConfig, Format};
use commands::{CliError, CliResult};

fn config_from(cli: &Cli) -> CliResult<ExperimentConfig> {
    if let Some(path) = &cli.config {
        let text = commands::read_file(path)?;
        let mut config: ExperimentConfig =
            serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        // command-line output options override the file
        if cli.output.is_some() {
            config.output = cli.output.clone();
        }
        if cli.format.is_some() {
            config.format = cli.format;
        }
        return Ok(config);
    }
    match &cli.command {
        Some(command) => Ok(ExperimentConfig { command: command.clone(), output: cli.output.clone(), format: cli.format }),
        None => Err(CliError::Input("no command given (see --help)".into())),
    }
}

fn run(config: &ExperimentConfig, threads: Option<usize>) -> CliResult<String> {
    let default_format = match config.command {
        Command::Compare(_) => Format::Json,
        _ => Format::Csv,
    };
    let format = config.format.unwrap_or(default_format);
    match &config.command {
        Command::Sample(a) => commands::sample(a, format, threads),
        Command::Exact(a) => commands::exact(a, format),
        Command::Twtable(a) => commands::twtable(a, format),
        Command::Lpp(a) => commands::lpp(a, format, threads),
        Command::Walk(a) => commands::walk(a, format, threads),
        Command::Compare(a) => commands::compare(a, format),
    }
}

fn emit(config: &ExperimentConfig, text: &str) -> CliResult<()> {
    match &config.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = config_from(&cli).and_then(|config| {
        if cli.print_config {
            let text = format!("{}\n", serde_json::to_string_pretty(&config).expect("configs serialize"));
            return emit(&ExperimentConfig { output: None, ..config }, &text);
        }
        let text = run(&config, cli.threads)?;
        emit(&config, &text)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("symperm: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
