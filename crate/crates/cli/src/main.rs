use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use suzuki_cli::{parse_list, run_acceptance, Failure, GroupSpec, TableDocument};
use suzuki_core::{character_table, verify, Check, CheckStatus, Family};

/// Exact character tables of the Suzuki p-groups.
#[derive(Parser)]
#[command(name = "suzuki-chars", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a character table.
    Table {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a recomputed or stored table.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        /// A stored table document.
        #[arg(long, conflicts_with_all = ["family", "p", "m", "l", "epsilon", "modulus"])]
        input: Option<PathBuf>,
        /// Comma-separated subset of orth1,orth2,central,profile,classes,closedform.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<Check>>,
        #[arg(long, env = "SUZUKI_CHARS_THREADS")]
        threads: Option<usize>,
    },
    /// Run the acceptance corpus.
    Selftest {
        #[arg(long, env = "SUZUKI_CHARS_THREADS")]
        threads: Option<usize>,
    },
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    /// Enumeration index, or ascending coefficient list such as `1,0,1`.
    #[arg(long)]
    epsilon: Option<String>,
    /// Ascending coefficients of the field modulus, leading 1 included.
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: suzuki_core::Error| e.to_string())
}

impl GroupArgs {
    fn spec(&self) -> Result<GroupSpec, Failure> {
        let missing = |flag: &str| Failure::Params(format!("--{flag} is required"));
        Ok(GroupSpec {
            family: self.family.ok_or_else(|| missing("family"))?,
            p: self.p.ok_or_else(|| missing("p"))?,
            m: self.m.ok_or_else(|| missing("m"))?,
            l: self.l.ok_or_else(|| missing("l"))?,
            epsilon: self.epsilon.clone(),
            modulus: self.modulus.as_deref().map(parse_list).transpose().map_err(Failure::Params)?,
        })
    }
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn cmd_table(group: &GroupArgs, format: Format, out: Option<&PathBuf>) -> Result<(), Failure> {
    let params = group.spec()?.build()?;
    let table = character_table(&params).map_err(|e| Failure::Params(e.to_string()))?;
    let doc = TableDocument::from_table(&table);
    let text = match format {
        Format::Json => doc.to_json(),
        Format::Csv => doc.to_csv(),
    };
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn cmd_verify(group: &GroupArgs, input: Option<&PathBuf>, checks: Option<&[Check]>, threads: Option<usize>) -> Result<(), Failure> {
    let table = match input {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
            TableDocument::from_json(&text)?.to_table()?
        }
        None => {
            let params = group.spec()?.build()?;
            character_table(&params).map_err(|e| Failure::Params(e.to_string()))?
        }
    };
    let checks = checks.unwrap_or(&Check::ALL);
    let report = verify(&table, checks, threads).map_err(|e| Failure::Params(e.to_string()))?;
    println!("{}: k(G) = {}", table.params().short_name(), table.len());
    for c in &report.checks {
        let mode = if c.status == CheckStatus::NotRun { String::new() } else { format!(" [{}]", c.mode.as_str()) };
        println!("{:<10} {:<7}{mode} {} ({} ms)", c.check.name(), c.status.as_str(), c.detail, c.elapsed_ms);
    }
    match report.first_failure() {
        None => Ok(()),
        Some(f) => Err(Failure::Verification(match &f.counterexample {
            Some(cx) => format!("{}: {}; counterexample: {cx}", f.check, f.detail),
            None => format!("{}: {}", f.check, f.detail),
        })),
    }
}

fn cmd_selftest(threads: Option<usize>) -> Result<(), Failure> {
    let outcomes = run_acceptance(threads, |c| println!("{}", c.line())).map_err(Failure::Verification)?;
    let failed = outcomes.iter().filter(|c| !c.passed()).count();
    if failed == 0 {
        return Ok(());
    }
    let unexpected: usize = outcomes.iter().map(|c| c.unexpected().len()).sum();
    Err(Failure::Verification(format!(
        "{failed} of {} criteria failed ({unexpected} unexpected failures)",
        outcomes.len()
    )))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table { group, format, out } => cmd_table(group, *format, out.as_ref()),
        Command::Verify { group, input, checks, threads } => {
            cmd_verify(group, input.as_ref(), checks.as_deref(), *threads)
        }
        Command::Selftest { threads } => cmd_selftest(*threads),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
