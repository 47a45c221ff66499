use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use blockloewy::group::{default_catalog, GroupSpec};
use blockloewy::lab::{analyze_instance, run_suite, RunConfig, SuiteReport, TOOL_VERSION};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod render;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "blockloewy", version = TOOL_VERSION)]
#[command(about = "Block invariants and Loewy lengths of centers of modular group algebras")]
#[command(after_help = "The BLOCKLOEWY_SEEDLESS environment variable is reserved and ignored: \
    no computation uses randomness, so output is identical for identical arguments.\n\n\
    Exit codes: 0 all checks pass, 1 a gated check failed, 2 usage or input error.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze every block of one group at one prime.
    Analyze {
        /// Group spec, e.g. 'S 3', 'M 2 4', 'CS 5 2', 'perm:4:(0 1 2 3);(0 2)'.
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run every check over the built-in catalog.
    Verify {
        #[arg(long, default_value_t = 200)]
        max_order: usize,
        /// Also run the order-25392 Frobenius group at p = 23 (several seconds).
        #[arg(long)]
        large: bool,
        /// Worker threads; output does not depend on this.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// List the catalog groups.
    Catalog {
        #[arg(long, default_value_t = 200)]
        max_order: usize,
        #[arg(long)]
        large: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest |G| for which the full group algebra is built to compute l(B).
    #[arg(long, default_value_t = blockloewy::block::DEFAULT_FULL_ALGEBRA_CAP)]
    full_algebra_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn emit(out: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn finish(report: &SuiteReport, common: &Common) -> ExitCode {
    let text = match render::suite(report, common.format) {
        Ok(t) => t,
        Err(e) => return usage_error(e),
    };
    if let Err(e) = emit(common.out.as_ref(), &text) {
        return usage_error(format!("cannot write output: {e}"));
    }
    if let Some(inst) = report.instances.iter().find(|i| i.error.is_some()) {
        return usage_error(format!("{}: {}", inst.group, inst.error.as_deref().unwrap_or_default()));
    }
    if report.passed() {
        return ExitCode::SUCCESS;
    }
    let failures: Vec<_> = report.checks().filter(|r| r.is_gate_failure()).collect();
    eprintln!("{} check(s) failed:", failures.len());
    for r in failures {
        eprintln!("  {}", render::check_line(r));
    }
    ExitCode::from(EXIT_FAIL)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Analyze { group, p, common } => {
            let spec: GroupSpec = match group.parse() {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            if !blockloewy::ffla::is_prime(p as u64) {
                return usage_error(format!("--p {p} is not prime"));
            }
            if common.full_algebra_cap == 0 {
                return usage_error("--full-algebra-cap must be positive");
            }
            let config = RunConfig {
                command: "analyze".into(),
                group: Some(spec.to_string()),
                p: Some(p),
                max_order: 0,
                full_algebra_cap: common.full_algebra_cap,
                large: false,
            };
            let report = SuiteReport {
                tool_version: TOOL_VERSION.into(),
                config,
                instances: vec![analyze_instance(&spec, p, common.full_algebra_cap)],
            };
            finish(&report, &common)
        }
        Command::Verify { max_order, large, jobs, common } => {
            if max_order == 0 || common.full_algebra_cap == 0 || jobs == Some(0) {
                return usage_error("--max-order, --full-algebra-cap and --jobs must be positive");
            }
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let config = RunConfig {
                command: "verify".into(),
                group: None,
                p: None,
                max_order,
                full_algebra_cap: common.full_algebra_cap,
                large,
            };
            match run_suite(&config, jobs) {
                Ok(report) => finish(&report, &common),
                Err(e) => usage_error(e),
            }
        }
        Command::Catalog { max_order, large, format, out } => {
            let mut entries = Vec::new();
            for spec in default_catalog(large) {
                let is_large = matches!(spec, GroupSpec::Frobenius(_));
                let cap = if is_large { usize::MAX } else { max_order };
                if let Ok(g) = spec.build_capped(cap) {
                    if is_large || g.order() <= max_order {
                        entries.push(render::CatalogEntry { spec: spec.to_string(), order: g.order(), name: g.name().into() });
                    }
                }
            }
            let text = match render::catalog(&entries, format) {
                Ok(t) => t,
                Err(e) => return usage_error(e),
            };
            match emit(out.as_ref(), &text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => usage_error(format!("cannot write output: {e}")),
            }
        }
    }
}
