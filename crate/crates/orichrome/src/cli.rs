//! Command-line front end.
//!
//! Subcommands: `analyze`, `classes`, `poly`, `oracle`, `field`, `verify`.
//! Exit status: 0 success, 2 usage/input error, 3 cap exceeded; with
//! `--exit-verdict`, 0 means colorable and 1 means not colorable, and a
//! failed `verify` also exits 1. All standard output is deterministic;
//! `--verbose` puts timing on standard error only.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::census::{CensusError, ClassTable, ResidueVector};
use crate::criteria::{
    cross_check, necessary_profile, necessary_profile_from_coefficients, odd_k_parity,
    sufficient_witness, Caps, CriteriaError, Engine, LProfile, Verdict, Witness,
};
use crate::field::{Field, FieldError};
use crate::graph::{GraphError, Multigraph};
use crate::poly::{reduced_graph_polynomial_capped, PolyError};

/// Result of one CLI invocation.
#[derive(Debug)]
pub struct RunOutcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on a full argument vector (program name included) and
/// returns the rendered output instead of touching the process.
pub fn run<I, S>(argv: I) -> RunOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => RunOutcome {
                    status: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => RunOutcome {
                    status: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let started = Instant::now();
    let verbose = cli.command.verbose();
    match execute(cli.command) {
        Ok((stdout, status)) => {
            let stderr = if verbose {
                format!("elapsed: {:?}\n", started.elapsed())
            } else {
                String::new()
            };
            RunOutcome {
                status,
                stdout,
                stderr,
            }
        }
        Err(err) => RunOutcome {
            status: err.status(),
            stdout: String::new(),
            stderr: format!("error: {}\n", err.message),
        },
    }
}

#[derive(Parser)]
#[command(
    name = "orichrome",
    version,
    about = "k-colorability of multigraphs via edge-orientation censuses and reduced polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colorability verdict, divisibility profile, and odd-k parity
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Profile moduli, comma separated
        #[arg(short = 'l', value_delimiter = ',', default_values_t = crate::criteria::DEFAULT_PROFILE_MODULI.to_vec())]
        ls: Vec<u64>,
        /// Exit 0 if colorable, 1 if not
        #[arg(long)]
        exit_verdict: bool,
    },
    /// Orientation class table with subclass cardinalities
    Classes {
        #[command(flatten)]
        common: Common,
    },
    /// Reduced graph polynomial
    Poly {
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force coloring oracle
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Count proper colorings instead of finding one
        #[arg(long)]
        count: bool,
        /// Exit 0 if colorable, 1 if not
        #[arg(long)]
        exit_verdict: bool,
    },
    /// Finite field inspection: modulus, tables, color set
    Field {
        /// Characteristic (a prime)
        #[arg(short)]
        p: u64,
        /// Extension degree
        #[arg(short, default_value_t = 1)]
        t: u32,
        /// Color count; prints the k-th roots of unity when given
        #[arg(short)]
        k: Option<u32>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        verbose: bool,
    },
    /// Cross-check census, polynomial, and oracle against each other
    Verify {
        #[command(flatten)]
        common: Common,
        /// Exit 0 if colorable, 1 if not
        #[arg(long)]
        exit_verdict: bool,
    },
}

impl Command {
    fn verbose(&self) -> bool {
        match self {
            Command::Analyze { common, .. }
            | Command::Classes { common }
            | Command::Poly { common }
            | Command::Oracle { common, .. }
            | Command::Verify { common, .. } => common.verbose,
            Command::Field { verbose, .. } => *verbose,
        }
    }
}

#[derive(Args)]
struct Common {
    /// Input file; `-` reads standard input
    #[arg(default_value = "-")]
    input: String,
    /// Number of colors
    #[arg(short)]
    k: u32,
    /// Input format
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Census enumeration cap in edges
    #[arg(long, default_value_t = crate::census::DEFAULT_EDGE_CAP)]
    max_edges: u32,
    /// Polynomial term cap (projected k^n)
    #[arg(long, default_value_t = crate::poly::DEFAULT_TERM_CAP)]
    max_terms: u64,
    /// Field evaluation cap (points q^n)
    #[arg(long, default_value_t = crate::field::DEFAULT_EVAL_CAP)]
    max_eval: u64,
    /// Timing on standard error
    #[arg(long)]
    verbose: bool,
}

impl Common {
    fn caps(&self) -> Caps {
        Caps {
            census_edges: self.max_edges,
            poly_terms: self.max_terms,
            field_eval_points: self.max_eval,
        }
    }

    fn load_graph(&self) -> Result<Multigraph, CliError> {
        let text = if self.input == "-" {
            std::io::read_to_string(std::io::stdin())
                .map_err(|e| CliError::input(format!("reading standard input: {e}")))?
        } else {
            std::fs::read_to_string(&self.input)
                .map_err(|e| CliError::input(format!("reading {}: {e}", self.input)))?
        };
        let graph = match self.format {
            FormatArg::Edgelist => Multigraph::parse_edge_list(&text),
            FormatArg::Dimacs => Multigraph::parse_dimacs(&text),
            FormatArg::Auto => Multigraph::parse_auto(&text),
        }?;
        Ok(graph)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Edgelist,
    Dimacs,
}

struct CliError {
    message: String,
    cap_exceeded: bool,
}

impl CliError {
    fn input(message: String) -> Self {
        CliError {
            message,
            cap_exceeded: false,
        }
    }

    fn cap(message: String) -> Self {
        CliError {
            message,
            cap_exceeded: true,
        }
    }

    fn status(&self) -> i32 {
        if self.cap_exceeded {
            3
        } else {
            2
        }
    }
}

impl From<GraphError> for CliError {
    fn from(err: GraphError) -> Self {
        CliError::input(err.to_string())
    }
}

impl From<CensusError> for CliError {
    fn from(err: CensusError) -> Self {
        match err {
            CensusError::EdgeCapExceeded { .. } => CliError::cap(err.to_string()),
            CensusError::InvalidModulus => CliError::input(err.to_string()),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(err: PolyError) -> Self {
        match err {
            PolyError::TermCapExceeded { .. } => CliError::cap(err.to_string()),
            _ => CliError::input(err.to_string()),
        }
    }
}

impl From<FieldError> for CliError {
    fn from(err: FieldError) -> Self {
        match err {
            FieldError::EvalCapExceeded { .. } | FieldError::OrderBoundExceeded { .. } => {
                CliError::cap(err.to_string())
            }
            _ => CliError::input(err.to_string()),
        }
    }
}

impl From<CriteriaError> for CliError {
    fn from(err: CriteriaError) -> Self {
        match err {
            CriteriaError::EnginesUnavailable { .. }
            | CriteriaError::OracleBoundExceeded { .. } => CliError::cap(err.to_string()),
            CriteriaError::Census(inner) => inner.into(),
            CriteriaError::Poly(inner) => inner.into(),
            _ => CliError::input(err.to_string()),
        }
    }
}

fn execute(command: Command) -> Result<(String, i32), CliError> {
    match command {
        Command::Analyze {
            common,
            ls,
            exit_verdict,
        } => analyze(common, ls, exit_verdict),
        Command::Classes { common } => classes(common),
        Command::Poly { common } => poly(common),
        Command::Oracle {
            common,
            count,
            exit_verdict,
        } => oracle(common, count, exit_verdict),
        Command::Field { p, t, k, json, .. } => field(p, t, k, json),
        Command::Verify {
            common,
            exit_verdict,
        } => verify(common, exit_verdict),
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    k: u32,
    verdict: Verdict,
    profile: LProfile,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_parity: Option<bool>,
}

fn analyze(common: Common, ls: Vec<u64>, exit_verdict: bool) -> Result<(String, i32), CliError> {
    let graph = common.load_graph()?;
    let k = common.k;
    let caps = common.caps();
    if k == 0 {
        return Err(CriteriaError::InvalidModulus.into());
    }

    let report = if graph.edge_count() as u32 <= caps.census_edges {
        let table = ClassTable::build_capped(&graph, k, caps.census_edges)?;
        let witness = sufficient_witness(&table);
        AnalyzeReport {
            k,
            verdict: Verdict {
                colorable: witness.is_some(),
                witness,
                engine: Engine::Census,
            },
            profile: necessary_profile(&table, &ls),
            odd_parity: (k % 2 == 1).then(|| odd_k_parity(&table).expect("k checked odd")),
        }
    } else {
        let poly = reduced_graph_polynomial_capped(&graph, k, caps.poly_terms)?;
        let coefficients: BTreeMap<ResidueVector, i64> = poly
            .terms()
            .map(|(e, c)| (ResidueVector::new(e.clone()), c))
            .collect();
        let witness = coefficients
            .iter()
            .next()
            .map(|(class, &coefficient)| Witness {
                class: class.clone(),
                coefficient,
                agree: None,
                disagree: None,
            });
        AnalyzeReport {
            k,
            verdict: Verdict {
                colorable: witness.is_some(),
                witness,
                engine: Engine::Polynomial,
            },
            profile: necessary_profile_from_coefficients(k, &coefficients, &ls),
            // class cardinality and signed difference share parity
            odd_parity: (k % 2 == 1).then(|| coefficients.values().any(|c| c % 2 != 0)),
        }
    };

    let status = verdict_status(exit_verdict, report.verdict.colorable);
    if common.json {
        return Ok((to_json(&report), status));
    }
    let mut out = String::new();
    let _ = writeln!(out, "colorable: {}", report.verdict.colorable);
    let _ = writeln!(out, "engine: {}", report.verdict.engine);
    if let Some(w) = &report.verdict.witness {
        let _ = writeln!(out, "witness class: {}", w.class);
        let _ = writeln!(out, "witness coefficient: {}", w.coefficient);
        if let (Some(agree), Some(disagree)) = (w.agree, w.disagree) {
            let _ = writeln!(out, "witness subclasses: agree={agree} disagree={disagree}");
        }
    }
    let _ = writeln!(out, "profile:");
    for row in &report.profile.rows {
        let _ = write!(
            out,
            "  l={} coprime={} satisfied={}",
            row.l, row.coprime_to_k, row.satisfied
        );
        if let Some(class) = &row.witness {
            let _ = write!(out, " witness={class}");
        }
        out.push('\n');
    }
    if let Some(parity) = report.odd_parity {
        let _ = writeln!(out, "odd-cardinality class exists: {parity}");
    }
    Ok((out, status))
}

fn classes(common: Common) -> Result<(String, i32), CliError> {
    let graph = common.load_graph()?;
    let table = ClassTable::build_capped(&graph, common.k, common.max_edges)?;
    if common.json {
        Ok((to_json(&table.dump()), 0))
    } else {
        Ok((table.to_text(), 0))
    }
}

fn poly(common: Common) -> Result<(String, i32), CliError> {
    let graph = common.load_graph()?;
    let poly = reduced_graph_polynomial_capped(&graph, common.k, common.max_terms)?;
    if common.json {
        Ok((to_json(&poly.dump()), 0))
    } else {
        Ok((poly.to_text(), 0))
    }
}

#[derive(Serialize)]
struct OracleReport {
    k: u32,
    colorable: bool,
    coloring: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<u64>,
}

fn oracle(common: Common, count: bool, exit_verdict: bool) -> Result<(String, i32), CliError> {
    let graph = common.load_graph()?;
    let k = common.k;
    let coloring = crate::criteria::find_coloring(&graph, k);
    let report = OracleReport {
        k,
        colorable: coloring.is_some(),
        coloring,
        count: if count {
            Some(crate::criteria::count_colorings(&graph, k)?)
        } else {
            None
        },
    };
    let status = verdict_status(exit_verdict, report.colorable);
    if common.json {
        return Ok((to_json(&report), status));
    }
    let mut out = String::new();
    match &report.coloring {
        Some(colors) => {
            let rendered: Vec<String> = colors.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "coloring: {}", rendered.join(" "));
        }
        None => {
            let _ = writeln!(out, "no proper coloring with k={k}");
        }
    }
    if let Some(total) = report.count {
        let _ = writeln!(out, "proper colorings: {total}");
    }
    Ok((out, status))
}

#[derive(Serialize)]
struct FieldReport {
    p: u64,
    t: u32,
    q: u64,
    modulus: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    color_set: Option<Vec<Vec<u64>>>,
}

fn field(p: u64, t: u32, k: Option<u32>, json: bool) -> Result<(String, i32), CliError> {
    let field = Field::new(p, t)?;
    let colors = match k {
        Some(k) => Some(field.color_set(k)?),
        None => None,
    };
    if json {
        let report = FieldReport {
            p,
            t,
            q: field.order(),
            modulus: field.modulus().to_vec(),
            color_set: colors
                .as_ref()
                .map(|set| set.iter().map(|c| c.coeffs().to_vec()).collect()),
        };
        return Ok((to_json(&report), 0));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{field}");
    if let Some(set) = &colors {
        let rendered: Vec<String> = set.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            out,
            "color set (k={}): {{{}}}",
            k.expect("k present when colors are"),
            rendered.join(", ")
        );
    }
    // full tables stay readable only for tiny fields
    if field.order() <= 16 {
        for (name, op) in [("add", true), ("mul", false)] {
            let _ = writeln!(out, "{name}:");
            for a in field.elements() {
                let row: Vec<String> = field
                    .elements()
                    .map(|b| {
                        let value = if op {
                            field.add(&a, &b).expect("same field")
                        } else {
                            field.mul(&a, &b).expect("same field")
                        };
                        value.to_string()
                    })
                    .collect();
                let _ = writeln!(out, "  {}", row.join(" | "));
            }
        }
    }
    Ok((out, 0))
}

fn verify(common: Common, exit_verdict: bool) -> Result<(String, i32), CliError> {
    let graph = common.load_graph()?;
    let caps = common.caps();
    let report = cross_check(&graph, common.k, &caps)?;
    let status = if exit_verdict {
        verdict_status(true, report.verdict.colorable)
    } else if report.ok() {
        0
    } else {
        1
    };
    if common.json {
        return Ok((to_json(&report), status));
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "census = polynomial: {}; verdict = oracle: {}",
        if report.coefficients_match {
            "OK"
        } else {
            "FAIL"
        },
        if report.verdict_matches_oracle {
            "OK"
        } else {
            "FAIL"
        },
    );
    let _ = writeln!(out, "colorable: {}", report.verdict.colorable);
    Ok((out, status))
}

fn verdict_status(exit_verdict: bool, colorable: bool) -> i32 {
    if exit_verdict && !colorable {
        1
    } else {
        0
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serialization");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> RunOutcome {
        run(std::iter::once("orichrome").chain(args.iter().copied()))
    }

    fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
        let path =
            std::env::temp_dir().join(format!("orichrome-test-{name}-{}", std::process::id()));
        std::fs::write(&path, contents).unwrap();
        path
    }

    #[test]
    fn analyze_c4() {
        let path = write_temp("c4", "4 4\n1 2\n2 3\n3 4\n4 1\n");
        let out = run_cli(&["analyze", path.to_str().unwrap(), "-k", "2"]);
        assert_eq!(out.status, 0, "{}", out.stderr);
        assert!(out.stdout.contains("colorable: true"));
        assert!(out.stdout.contains("witness class: (0,0,0,0)"));
        assert!(out.stdout.contains("l=2 coprime=false satisfied=false"));
    }

    #[test]
    fn classes_c4_has_eight_rows_of_two() {
        let path = write_temp("c4-classes", "4 4\n1 2\n2 3\n3 4\n4 1\n");
        let out = run_cli(&["classes", path.to_str().unwrap(), "-k", "2"]);
        assert_eq!(out.status, 0);
        let rows: Vec<&str> = out.stdout.lines().skip(1).collect();
        assert_eq!(rows.len(), 8);
        for row in rows {
            let agree = row.contains("agree=2") || row.contains("agree=0");
            assert!(agree && row.contains("diff="), "row: {row}");
        }
    }

    #[test]
    fn field_color_set() {
        let out = run_cli(&["field", "-p", "7", "-t", "1", "-k", "3"]);
        assert_eq!(out.status, 0);
        assert!(out.stdout.starts_with("GF(7), modulus = [0, 1]"));
        assert!(out.stdout.contains("color set (k=3): {1, 2, 4}"));
    }

    #[test]
    fn verify_k3() {
        let path = write_temp("k3", "3 3\n1 2\n1 3\n2 3\n");
        let out = run_cli(&["verify", path.to_str().unwrap(), "-k", "3"]);
        assert_eq!(out.status, 0);
        assert!(out
            .stdout
            .starts_with("census = polynomial: OK; verdict = oracle: OK"));
    }

    #[test]
    fn exit_verdict_statuses() {
        let c5 = write_temp("c5", "5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
        let not_colorable =
            run_cli(&["analyze", c5.to_str().unwrap(), "-k", "2", "--exit-verdict"]);
        assert_eq!(not_colorable.status, 1);
        let colorable = run_cli(&["analyze", c5.to_str().unwrap(), "-k", "3", "--exit-verdict"]);
        assert_eq!(colorable.status, 0);
        let oracle = run_cli(&["oracle", c5.to_str().unwrap(), "-k", "2", "--exit-verdict"]);
        assert_eq!(oracle.status, 1);
    }

    #[test]
    fn usage_and_input_errors_exit_2() {
        assert_eq!(run_cli(&["frobnicate"]).status, 2);
        assert_eq!(run_cli(&["analyze", "-k", "x"]).status, 2);
        let bad = write_temp("bad", "2 1\n1 5\n");
        let out = run_cli(&["analyze", bad.to_str().unwrap(), "-k", "2"]);
        assert_eq!(out.status, 2);
        assert!(out.stderr.contains("line 2"));
    }

    #[test]
    fn cap_exceeded_exits_3() {
        let path = write_temp("caps", "2 3\n1 2\n1 2\n1 2\n");
        let out = run_cli(&[
            "classes",
            path.to_str().unwrap(),
            "-k",
            "2",
            "--max-edges",
            "2",
        ]);
        assert_eq!(out.status, 3);
        let out = run_cli(&[
            "poly",
            path.to_str().unwrap(),
            "-k",
            "2",
            "--max-terms",
            "3",
        ]);
        assert_eq!(out.status, 3);
    }

    #[test]
    fn help_exits_0() {
        let out = run_cli(&["--help"]);
        assert_eq!(out.status, 0);
        assert!(out.stdout.contains("analyze"));
    }

    #[test]
    fn json_outputs_parse_back() {
        let path = write_temp("json", "3 3\n1 2\n1 3\n2 3\n");
        for sub in ["analyze", "classes", "poly", "verify"] {
            let out = run_cli(&[sub, path.to_str().unwrap(), "-k", "3", "--json"]);
            assert_eq!(out.status, 0, "{sub}: {}", out.stderr);
            let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
            assert!(value.is_object() || value.is_array(), "{sub}");
        }
        let out = run_cli(&[
            "oracle",
            path.to_str().unwrap(),
            "-k",
            "3",
            "--count",
            "--json",
        ]);
        let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(value["count"], 6);
    }

    #[test]
    fn oracle_text_output() {
        let path = write_temp("oracle", "3 3\n1 2\n1 3\n2 3\n");
        let out = run_cli(&["oracle", path.to_str().unwrap(), "-k", "3", "--count"]);
        assert_eq!(out.stdout, "coloring: 0 1 2\nproper colorings: 6\n");
    }

    #[test]
    fn analyze_polynomial_engine_fallback() {
        // forcing the census off must not change the verdict
        let path = write_temp("fallback", "3 3\n1 2\n1 3\n2 3\n");
        let census = run_cli(&["analyze", path.to_str().unwrap(), "-k", "3"]);
        let polynomial = run_cli(&[
            "analyze",
            path.to_str().unwrap(),
            "-k",
            "3",
            "--max-edges",
            "1",
        ]);
        assert!(census.stdout.contains("engine: census"));
        assert!(polynomial.stdout.contains("engine: polynomial"));
        assert!(polynomial.stdout.contains("colorable: true"));
        for line in census.stdout.lines().filter(|l| l.starts_with("  l=")) {
            assert!(
                polynomial.stdout.contains(line),
                "missing profile row {line}"
            );
        }
    }

    #[test]
    fn verbose_times_to_stderr_only() {
        let path = write_temp("verbose", "2 1\n1 2\n");
        let out = run_cli(&["classes", path.to_str().unwrap(), "-k", "2", "--verbose"]);
        assert!(out.stderr.starts_with("elapsed:"));
        assert!(!out.stdout.contains("elapsed"));
    }
}
