//! Command-line entry point for the verification driver.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use wverify::output::{emit, render_reports, Format};
use wverify::suites::{self, Suite};
use wverify::{cacheadmin, exit_code, parse_range, ClaimReport, RunConfig};

/// Environment variable consulted when `--cache-dir` is not given.
const CACHE_ENV: &str = "WVERIFY_CACHE_DIR";
const USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "wverify",
    about = "Exact verification of orbifold Zhu polynomials, weight tables, and characters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Residue cache directory (falls back to $WVERIFY_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker-pool size.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Residue-engine monomial cap.
    #[arg(long, global = true)]
    max_monomials: Option<usize>,
    /// q-series truncation order.
    #[arg(long, global = true)]
    order: Option<i64>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Tsv => Format::Tsv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyArg {
    Twisted,
    Singlet,
    CtConjecture,
    Determinant,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharactersArg {
    Identity,
    Closure,
    Decomposition,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportArg {
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    List,
    Clear,
    Verify,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite.
    Verify {
        /// Which suite.
        #[arg(value_enum)]
        suite: VerifyArg,
        /// Inclusive p range, `A` or `A..B`.
        #[arg(long, default_value = "1..2")]
        p: String,
    },
    /// Emit data tables.
    Tables {
        #[command(subcommand)]
        what: TablesCmd,
    },
    /// Character identity/decomposition/closure checks.
    Characters {
        /// Which check family.
        #[arg(value_enum)]
        what: CharactersArg,
        /// Inclusive p range.
        #[arg(long, default_value = "1..2")]
        p: String,
        /// Inclusive m range.
        #[arg(long, default_value = "1..3")]
        m: String,
    },
    /// Run every suite and emit a combined report.
    Report {
        /// Scope (only `all`).
        #[arg(value_enum)]
        what: ReportArg,
        /// Inclusive p range.
        #[arg(long, default_value = "1..2")]
        p: String,
        /// Inclusive m range.
        #[arg(long, default_value = "1..3")]
        m: String,
    },
    /// Administer the residue disk cache.
    Cache {
        /// list, clear, or verify (recompute a spot-check entry).
        #[arg(value_enum)]
        action: CacheAction,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("wverify: {}", msg);
    ExitCode::from(USAGE)
}

fn build_config(cli: &Cli, p: Option<&str>, m: Option<&str>) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::default();
    if let Some(p) = p {
        cfg.p_range = parse_range(p)?;
    }
    if let Some(m) = m {
        cfg.m_range = parse_range(m)?;
    }
    if let Some(order) = cli.order {
        cfg.order = order;
    }
    if let Some(jobs) = cli.jobs {
        cfg.jobs = jobs;
    }
    if let Some(cap) = cli.max_monomials {
        cfg.max_monomials = cap;
    }
    cfg.cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    cfg.validate()?;
    Ok(cfg)
}

fn finish(cli: &Cli, reports: Vec<ClaimReport>) -> ExitCode {
    let text = render_reports(&reports, cli.format.into());
    if let Err(e) = emit(&text, cli.out.as_deref()) {
        return usage_error(&format!("cannot write output: {}", e));
    }
    ExitCode::from(exit_code(&reports) as u8)
}

fn decomposition_tsv(cfg: &RunConfig) -> String {
    let mut out = String::new();
    for p in cfg.ps() {
        for m in cfg.ms() {
            for i in 1..=p {
                let (plus, minus) = qchar::lambda0_pm_characters(p, m, i, cfg.order);
                out.push_str(&format!("# Lambda({i})0+ p={p} m={m}\n"));
                out.push_str(&plus.to_tsv());
                out.push_str(&format!("# Lambda({i})0- p={p} m={m}\n"));
                out.push_str(&minus.to_tsv());
            }
        }
    }
    out
}

fn run(cli: Cli) -> ExitCode {
    match &cli.command {
        Command::Verify { suite, p } => {
            let cfg = match build_config(&cli, Some(p), None) {
                Ok(c) => c,
                Err(e) => return usage_error(&e),
            };
            let suites = match suite {
                VerifyArg::Twisted => [Suite::Twisted],
                VerifyArg::Singlet => [Suite::Singlet],
                VerifyArg::CtConjecture => [Suite::CtConjecture],
                VerifyArg::Determinant => [Suite::Determinant],
            };
            match suites::run_suites(&cfg, &suites) {
                Ok(reports) => finish(&cli, reports),
                Err(e) => usage_error(&e),
            }
        }
        Command::Tables { what } => {
            let TablesCmd::Weights { p, m } = what;
            if *m < 2 {
                return usage_error("weight tables are defined for m >= 2");
            }
            match spectra::weight_table(*p, *m) {
                Ok(table) => {
                    let text = match cli.format {
                        FormatArg::Tsv => table.to_tsv(),
                        FormatArg::Json => {
                            let mut s = serde_json::to_string_pretty(&table)
                                .expect("table serializes");
                            s.push('\n');
                            s
                        }
                    };
                    if let Err(e) = emit(&text, cli.out.as_deref()) {
                        return usage_error(&format!("cannot write output: {}", e));
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Characters { what, p, m } => {
            let cfg = match build_config(&cli, Some(p), Some(m)) {
                Ok(c) => c,
                Err(e) => return usage_error(&e),
            };
            if matches!(what, CharactersArg::Decomposition) && matches!(cli.format, FormatArg::Tsv)
            {
                let text = decomposition_tsv(&cfg);
                if let Err(e) = emit(&text, cli.out.as_deref()) {
                    return usage_error(&format!("cannot write output: {}", e));
                }
                return ExitCode::SUCCESS;
            }
            let suites = match what {
                CharactersArg::Identity | CharactersArg::Decomposition => [Suite::Characters],
                CharactersArg::Closure => [Suite::Closure],
            };
            let result = match what {
                CharactersArg::Identity => cfg
                    .with_pool(|| suites::characters_identity_suite(&cfg)),
                CharactersArg::Decomposition => cfg
                    .with_pool(|| suites::characters_decomposition_suite(&cfg)),
                CharactersArg::Closure => suites::run_suites(&cfg, &suites),
            };
            match result {
                Ok(reports) => finish(&cli, reports),
                Err(e) => usage_error(&e),
            }
        }
        Command::Report { what: ReportArg::All, p, m } => {
            let cfg = match build_config(&cli, Some(p), Some(m)) {
                Ok(c) => c,
                Err(e) => return usage_error(&e),
            };
            match suites::run_suites(&cfg, Suite::all()) {
                Ok(reports) => finish(&cli, reports),
                Err(e) => usage_error(&e),
            }
        }
        Command::Cache { action } => {
            let cfg = match build_config(&cli, None, None) {
                Ok(c) => c,
                Err(e) => return usage_error(&e),
            };
            let cache = match cfg.cache() {
                Ok(Some(c)) => c,
                Ok(None) => {
                    return usage_error("cache commands need --cache-dir or $WVERIFY_CACHE_DIR")
                }
                Err(e) => return usage_error(&e),
            };
            let result = match action {
                CacheAction::List => cacheadmin::list(&cache),
                CacheAction::Clear => cacheadmin::clear(&cache),
                CacheAction::Verify => cacheadmin::verify(&cache, &cfg.engine_config()),
            };
            match result {
                Ok(reports) => finish(&cli, reports),
                Err(e) => usage_error(&e),
            }
        }
    }
}

#[derive(Subcommand)]
enum TablesCmd {
    /// The lowest-weight table for one `(p, m)`.
    Weights {
        /// Family parameter p.
        #[arg(long)]
        p: u32,
        /// Dihedral order parameter m.
        #[arg(long)]
        m: u32,
    },
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            ExitCode::SUCCESS
        }
        Err(e) => {
            let _ = e.print();
            ExitCode::from(USAGE)
        }
    }
}
