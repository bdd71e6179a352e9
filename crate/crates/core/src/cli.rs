//! Command-line front end. Every subcommand builds a [`ReportDocument`] and a
//! table; `--format` picks which one is printed.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::coverings::{count_complete_coverings, count_coverings, HostGraph};
use crate::error::{Error, Result};
use crate::family::{fibonacci, generate, Family, FamilyKind};
use crate::moments::{closed_form_moment, gram, l2_norm, lukasiewicz_moment, WeightSchema};
use crate::report::{ser_bigint, ser_bigints, ser_matrix, PolynomialRow, ReportDocument};
use crate::verify::{self, combinatorial_moment, combinatorial_moment_limit, CheckKind, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    U,
    T,
    H,
    L,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::U => FamilyKind::ChebyshevU,
            FamilyArg::T => FamilyKind::ChebyshevT,
            FamilyArg::H => FamilyKind::Hermite,
            FamilyArg::L => FamilyKind::Laguerre,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Method {
    Closed,
    Paths,
    Enumerate,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum GraphArg {
    Path,
    Cycle,
    Complete,
    Bipartite,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Recurrence,
    Orthogonality,
    Involution,
    Bijection,
    Gf,
    All,
}

impl From<CheckArg> for CheckKind {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::Recurrence => CheckKind::Recurrence,
            CheckArg::Orthogonality => CheckKind::Orthogonality,
            CheckArg::Involution => CheckKind::Involution,
            CheckArg::Bijection => CheckKind::Bijection,
            CheckArg::Gf => CheckKind::Gf,
            CheckArg::All => CheckKind::All,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "matchpoly", version, about = "Higher-order matching polynomials and exact verification")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "MATCHPOLY_FORMAT", default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficient table of P_0 ..= P_n.
    Poly {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        n: usize,
    },
    /// Moments mu_0 ..= mu_max.
    Moments {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
    },
    /// Gram matrix L(x^m P_n) for m, n <= max.
    Gram {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        max: usize,
    },
    /// Count coverings of a host graph by vertex-disjoint t-paths.
    CountCoverings {
        #[arg(long, value_enum)]
        graph: GraphArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: u32,
        /// Count only coverings without fixed vertices.
        #[arg(long)]
        complete: bool,
        /// Largest host size to enumerate.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Higher-order Fibonacci numbers.
    Fibonacci {
        #[arg(long)]
        order: u32,
        #[arg(long)]
        max: usize,
    },
    /// Aggregated pass/fail verification report.
    Verify {
        #[arg(long, value_enum)]
        check: CheckArg,
        #[arg(long)]
        order: u32,
        /// Largest host size and involution total to enumerate.
        #[arg(long, default_value_t = 12)]
        bound: usize,
        /// Series truncation order; per-identity defaults when absent.
        #[arg(long)]
        trunc: Option<usize>,
    },
}

struct Output {
    json: String,
    table: Vec<Vec<String>>,
    passed: bool,
}

fn document<P: Serialize, R: Serialize>(
    command: &str,
    parameters: P,
    result: R,
    provenance: Vec<String>,
) -> String {
    ReportDocument {
        command: command.to_string(),
        parameters,
        result,
        provenance,
    }
    .to_json()
}

/// Parse `args` (including the program name), run, and write to `out`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(output) => {
            let text = match cli.format {
                Format::Json => output.json + "\n",
                Format::Csv => render_csv(&output.table),
                Format::Text => render_text(&output.table),
            };
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_FAILED;
            }
            if output.passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn family(kind: FamilyArg, t: u32) -> Result<Family> {
    Family::new(kind.into(), t)
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn execute(command: &Command) -> Result<Output> {
    match *command {
        Command::Poly { family: f, order, n } => {
            let fam = family(f, order)?;
            let rows: Vec<PolynomialRow> = generate(fam, n)
                .iter()
                .enumerate()
                .map(|(i, p)| PolynomialRow::new(i, p))
                .collect();
            let mut table = vec![vec!["n".to_string(), "coefficients".into(), "polynomial".into()]];
            for r in &rows {
                table.push(vec![r.index.to_string(), strings(&r.coefficients).join(" "), r.text.clone()]);
            }
            Ok(Output {
                json: document(
                    "poly",
                    json!({"family": fam.kind(), "order": order, "n": n}),
                    &rows,
                    vec!["three-term recurrence".into()],
                ),
                table,
                passed: true,
            })
        }
        Command::Moments {
            family: f,
            order,
            max,
            method,
        } => {
            let fam = family(f, order)?;
            let (moments, provenance): (Vec<BigInt>, &str) = match method {
                Method::Closed => ((0..=max).map(|n| closed_form_moment(fam, n)).collect(), "closed form"),
                Method::Paths => {
                    let schema = WeightSchema::for_family(fam);
                    (
                        (0..=max).map(|n| lukasiewicz_moment(&schema, n, 0)).collect(),
                        "weighted Lukasiewicz paths",
                    )
                }
                Method::Enumerate => {
                    let limit = combinatorial_moment_limit(fam);
                    if max > limit {
                        return Err(Error::BoundExceeded(format!(
                            "direct enumeration of {fam} moments stops at n = {limit}"
                        )));
                    }
                    (
                        (0..=max).map(|n| combinatorial_moment(fam, n)).collect(),
                        "direct enumeration",
                    )
                }
            };
            #[derive(Serialize)]
            struct Moments {
                #[serde(serialize_with = "ser_bigints")]
                moments: Vec<BigInt>,
            }
            let mut table = vec![vec!["n".to_string(), "moment".into()]];
            table.extend(moments.iter().enumerate().map(|(n, m)| vec![n.to_string(), m.to_string()]));
            Ok(Output {
                json: document(
                    "moments",
                    json!({"family": fam.kind(), "order": order, "max": max, "method": method}),
                    Moments { moments },
                    vec![provenance.into()],
                ),
                table,
                passed: true,
            })
        }
        Command::Gram { family: f, order, max } => {
            let fam = family(f, order)?;
            let t = order as usize;
            let matrix = gram(fam, max, max);
            let band_ok = (0..=max).all(|m| (0..=max).all(|n| m <= t * n || matrix[m][n] == BigInt::from(0)));
            let norms_ok = (0..=max)
                .filter(|&n| t * n <= max)
                .all(|n| matrix[t * n][n] == l2_norm(fam, n));
            #[derive(Serialize)]
            struct Gram {
                /// `matrix[m][n] = L(x^m P_n)`.
                #[serde(serialize_with = "ser_matrix")]
                matrix: Vec<Vec<BigInt>>,
                band_ok: bool,
                norms_ok: bool,
            }
            let mut header = vec!["m".to_string()];
            header.extend((0..=max).map(|n| format!("n={n}")));
            let mut table = vec![header];
            for (m, row) in matrix.iter().enumerate() {
                let mut line = vec![m.to_string()];
                line.extend(strings(row));
                table.push(line);
            }
            table.push(vec!["band".into(), pass_fail(band_ok).into()]);
            table.push(vec!["norms".into(), pass_fail(norms_ok).into()]);
            Ok(Output {
                json: document(
                    "gram",
                    json!({"family": fam.kind(), "order": order, "max": max}),
                    Gram {
                        matrix,
                        band_ok,
                        norms_ok,
                    },
                    vec!["functional applied through the closed-form moments".into()],
                ),
                table,
                passed: band_ok && norms_ok,
            })
        }
        Command::CountCoverings {
            graph,
            n,
            order,
            complete,
            bound,
        } => {
            if order == 0 {
                return Err(Error::ZeroOrder);
            }
            let defaults = verify::HostBounds::capped(order, usize::MAX);
            let (host, default_bound) = match graph {
                GraphArg::Path => (HostGraph::Path(n), defaults.path),
                GraphArg::Cycle => (HostGraph::Cycle(n), defaults.cycle),
                GraphArg::Complete => (HostGraph::Complete(n), defaults.complete),
                GraphArg::Bipartite => (HostGraph::CompleteBipartite(n), defaults.bipartite),
            };
            let limit = bound.unwrap_or(default_bound);
            if n > limit {
                return Err(Error::BoundExceeded(format!("{host} is larger than the bound {limit}")));
            }
            let count = if complete {
                count_complete_coverings(host, order)
            } else {
                count_coverings(host, order)
            };
            #[derive(Serialize)]
            struct Count {
                #[serde(serialize_with = "ser_bigint")]
                count: BigInt,
            }
            let table = vec![vec!["count".to_string()], vec![count.to_string()]];
            Ok(Output {
                json: document(
                    "count-coverings",
                    json!({"graph": graph, "n": n, "order": order, "complete": complete}),
                    Count { count },
                    vec!["exhaustive enumeration".into()],
                ),
                table,
                passed: true,
            })
        }
        Command::Fibonacci { order, max } => {
            let numbers = fibonacci(order, max)?;
            #[derive(Serialize)]
            struct Fib {
                #[serde(serialize_with = "ser_bigints")]
                numbers: Vec<BigInt>,
            }
            let mut table = vec![vec!["n".to_string(), "fibonacci".into()]];
            table.extend(numbers.iter().enumerate().map(|(n, f)| vec![n.to_string(), f.to_string()]));
            Ok(Output {
                json: document(
                    "fibonacci",
                    json!({"order": order, "max": max}),
                    Fib { numbers },
                    vec!["absolute coefficient sums of the path polynomials".into()],
                ),
                table,
                passed: true,
            })
        }
        Command::Verify {
            check,
            order,
            bound,
            trunc,
        } => {
            let report: VerifyReport = verify::verify(check.into(), order, bound, trunc)?;
            let mut table = vec![vec!["check".to_string(), "name".into(), "status".into(), "detail".into()]];
            for o in &report.outcomes {
                table.push(vec![o.check.to_string(), o.name.clone(), pass_fail(o.passed).into(), o.detail.clone()]);
            }
            for note in &report.notes {
                table.push(vec!["note".into(), String::new(), String::new(), note.clone()]);
            }
            let passed = report.passed();
            Ok(Output {
                json: document(
                    "verify",
                    json!({"check": CheckKind::from(check).to_string(), "order": order, "bound": bound, "trunc": trunc}),
                    &report,
                    vec!["exhaustive enumeration against recurrences, closed forms and series".into()],
                ),
                table,
                passed,
            })
        }
    }
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn render_csv(table: &[Vec<String>]) -> String {
    let mut s = String::new();
    for row in table {
        let cells: Vec<String> = row
            .iter()
            .map(|c| {
                if c.contains([',', '"', '\n']) {
                    format!("\"{}\"", c.replace('"', "\"\""))
                } else {
                    c.clone()
                }
            })
            .collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

fn render_text(table: &[Vec<String>]) -> String {
    let columns = table.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|j| {
            table
                .iter()
                .filter_map(|r| r.get(j))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut s = String::new();
    for row in table {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, c)| format!("{c:<w$}", w = widths[j]))
            .collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("matchpoly").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn csv_quotes_commas() {
        let t = vec![vec!["a,b".to_string(), "c".into()]];
        assert_eq!(render_csv(&t), "\"a,b\",c\n");
    }

    #[test]
    fn text_aligns_columns() {
        let t = vec![vec!["n".to_string(), "x".into()], vec!["10".into(), "y".into()]];
        assert_eq!(render_text(&t), "n   x\n10  y\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["poly", "--family", "q", "--order", "1", "--n", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["poly", "--family", "l", "--order", "2", "--n", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
    }

    #[test]
    fn fibonacci_csv() {
        let (code, out) = run_str(&["--format", "csv", "fibonacci", "--order", "1", "--max", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,fibonacci\n0,1\n1,1\n2,2\n3,3\n");
    }
}
