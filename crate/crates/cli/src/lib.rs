// Copyright 2026 The scv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Command-line front end: argument parsing, worker pools and report output.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use scv_core::gamma::{build_rep, GammaRep, Signature};
use scv_core::report::VerificationReport;
use scv_core::suites::{run_suite, Suite, SuiteOptions};
use scv_core::symmetry::{generate_table, SymmetryError};

/// Exit code when no check failed.
pub const EXIT_OK: i32 = 0;
/// Exit code when at least one check failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for usage and I/O errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Clifford,
    #[value(alias = "table2")]
    SymmetryTable,
    Identities,
    TraceLemmas,
    Superspace,
    Bianchi,
    Algebra,
    All,
}

impl SuiteArg {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Clifford => vec![Suite::Clifford],
            SuiteArg::SymmetryTable => vec![Suite::SymmetryTable],
            SuiteArg::Identities => vec![Suite::Identities],
            SuiteArg::TraceLemmas => vec![Suite::TraceLemmas],
            SuiteArg::Superspace => vec![Suite::Superspace],
            SuiteArg::Bianchi => vec![Suite::Bianchi],
            SuiteArg::Algebra => vec![Suite::Algebra],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    #[value(alias = "markdown")]
    Md,
}

fn parse_q(s: &str) -> Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(q) if (1..=4).contains(&q) => Ok(q),
        _ => Err(format!("q must be one of 1, 2, 3, 4 (got {s:?})")),
    }
}

/// Exact verification of the ten-dimensional Clifford, superspace and brane
/// charge algebra identities.
///
/// Every flag with an environment variable reads it when the flag is absent.
#[derive(Debug, Clone, Parser)]
#[command(name = "verify", version)]
pub struct Args {
    /// Suite to run.
    #[arg(value_enum)]
    pub suite: SuiteArg,
    /// Comma-separated ranks q (the rank is 2q).
    #[arg(long, value_delimiter = ',', value_parser = parse_q, default_value = "1,2,3,4")]
    pub q: Vec<usize>,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, env = "SCV_JOBS")]
    pub jobs: Option<usize>,
    /// Seed for the sampled sweeps.
    #[arg(long, env = "SCV_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Report path; standard output when absent.
    #[arg(long, env = "SCV_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Stop after the first suite that has a failing check.
    #[arg(long)]
    pub fail_fast: bool,
    /// Add the necessary-condition values for D in {4, 6, 8, 10, 11, 12}.
    #[arg(long)]
    pub dimension_sweep: bool,
    /// Attach wall times; reports are then no longer byte-reproducible.
    #[arg(long)]
    pub timings: bool,
    /// Sampled tuples per q >= 2 trace-lemma run.
    #[arg(long, default_value_t = 100)]
    pub trace_samples: usize,
    /// Also write the symmetry table (in --format) to this path.
    #[arg(long)]
    pub table_out: Option<PathBuf>,
}

/// Fully resolved run configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub suites: Vec<Suite>,
    pub options: SuiteOptions,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub fail_fast: bool,
    pub table_out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(suites: Vec<Suite>) -> Self {
        RunConfig {
            suites,
            options: SuiteOptions::default(),
            jobs: None,
            out: None,
            format: Format::Json,
            fail_fast: false,
            table_out: None,
        }
    }
}

impl From<Args> for RunConfig {
    fn from(a: Args) -> Self {
        let mut qs = a.q;
        qs.sort_unstable();
        qs.dedup();
        RunConfig {
            suites: a.suite.suites(),
            options: SuiteOptions {
                qs,
                seed: a.seed,
                trace_samples: a.trace_samples,
                dimension_sweep: a.dimension_sweep,
                timings: a.timings,
            },
            jobs: a.jobs,
            out: a.out,
            format: a.format,
            fail_fast: a.fail_fast,
            table_out: a.table_out,
        }
    }
}

/// Runs every configured suite against `rep` on a pool of `config.jobs`
/// workers. Report content does not depend on the pool size.
pub fn run_with_rep(config: &RunConfig, rep: &GammaRep) -> VerificationReport {
    let body = || {
        let mut report = VerificationReport::new();
        for &suite in &config.suites {
            let r = run_suite(suite, rep, &config.options);
            let failed = !r.all_passed();
            report.merge(r);
            if failed && config.fail_fast {
                break;
            }
        }
        report
    };
    match config.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(body),
        None => body(),
    }
}

/// Runs the configuration on the standard representation.
pub fn run(config: &RunConfig) -> VerificationReport {
    let rep = build_rep(&Signature::default()).expect("the standard representation is valid");
    run_with_rep(config, &rep)
}

pub fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Md => report.to_markdown(),
    }
}

/// The symmetry table recomputed from `rep`, as markdown rows or JSON.
pub fn emit_symmetry_table(rep: &GammaRep, format: Format) -> Result<String, SymmetryError> {
    let table = generate_table(rep)?;
    Ok(match format {
        Format::Md => table.to_markdown(),
        Format::Json => serde_json::to_string_pretty(&table).expect("serializable") + "\n",
    })
}

/// Writes the report, returning the exit code.
pub fn finish(config: &RunConfig, report: &VerificationReport) -> i32 {
    let text = render(report, config.format);
    let written = match &config.out {
        Some(path) => fs::write(path, &text),
        None => io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("verify: cannot write report: {e}");
        return EXIT_USAGE;
    }
    if let Some(path) = &config.table_out {
        let rep = build_rep(&Signature::default()).expect("the standard representation is valid");
        let table = match emit_symmetry_table(&rep, config.format) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("verify: {e}");
                return EXIT_FAIL;
            }
        };
        if let Err(e) = fs::write(path, table) {
            eprintln!("verify: cannot write table: {e}");
            return EXIT_USAGE;
        }
    }
    let s = &report.summary;
    eprintln!(
        "verify: {} checks, {} passed, {} failed, {} recorded",
        s.total, s.passed, s.failed, s.recorded
    );
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let config = RunConfig::from(args);
    let report = run(&config);
    finish(&config, &report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Args, clap::Error> {
        Args::try_parse_from(std::iter::once("verify").chain(args.iter().copied()))
    }

    #[test]
    fn table2_is_an_alias() {
        assert_eq!(parse(&["table2"]).unwrap().suite, SuiteArg::SymmetryTable);
    }

    #[test]
    fn q_list_is_validated() {
        assert_eq!(parse(&["algebra", "--q", "3,1"]).unwrap().q, vec![3, 1]);
        assert!(parse(&["algebra", "--q", "5"]).is_err());
        assert!(parse(&["nonsense"]).is_err());
    }

    #[test]
    fn config_sorts_q() {
        let c = RunConfig::from(parse(&["all", "--q", "3,1,3"]).unwrap());
        assert_eq!(c.options.qs, vec![1, 3]);
        assert_eq!(c.suites.len(), 7);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(main_with_args(["verify", "bogus"]), EXIT_USAGE);
        assert_eq!(
            main_with_args(["verify", "clifford", "--format", "xml"]),
            EXIT_USAGE
        );
    }
}
