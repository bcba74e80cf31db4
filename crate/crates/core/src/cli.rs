//! Command-line front end. Exit codes: 0 success, 1 verification failure, 2 usage or library error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::analysis::{positivity_report, real_root_certificate, symmetric_decompose};
use crate::enumeration::{gen_family, Caps};
use crate::error::{Error, Result};
use crate::methods::{family_poly, grammar_iterate, Method};
use crate::recurrences::{family_table, qnk_via_r, GammaTable, GammaTables, TriTable};
use crate::verify::{verify_suite, Suite, SuiteReport};
use crate::Family;

#[derive(Parser, Debug)]
#[command(
    name = "eulerian",
    version,
    about = "Exact descent polynomials of multiset permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one family polynomial.
    Compute(ComputeArgs),
    /// Print the gamma coordinates behind one family polynomial.
    Gamma(RankArgs),
    /// Symmetric decomposition and positivity report.
    Decompose(RankArgs),
    /// Sturm-certified real-root isolation.
    Roots(RankArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Dump coefficient and gamma tables.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct RankArgs {
    #[arg(long)]
    family: Family,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    rank: RankArgs,
    #[arg(long, default_value = "rec")]
    method: Method,
    /// Emit the raw grammar iterate instead of the polynomial.
    #[arg(long)]
    dump_formal: bool,
    /// Emit the enumerated words, one per line, instead of the polynomial.
    #[arg(long)]
    dump_words: bool,
    /// Lift the enumeration caps.
    #[arg(long)]
    unsafe_cap_override: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Include elapsed times in the report.
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    unsafe_cap_override: bool,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n_max: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, Error::CapExceeded { .. }) {
                let _ = writeln!(err, "pass --unsafe-cap-override to enumerate anyway");
            }
            2
        }
    }
}

fn caps(override_caps: bool) -> Caps {
    if override_caps {
        Caps::unlimited()
    } else {
        Caps::default()
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    let text = match command {
        Command::Compute(a) => compute(a)?,
        Command::Gamma(a) => gamma(a)?,
        Command::Decompose(a) => decompose(a)?,
        Command::Roots(a) => roots(a)?,
        Command::Export(a) => export(a)?,
        Command::Verify(a) => {
            let (text, passed) = verify(a)?;
            emit(out, &text)?;
            return Ok(if passed { 0 } else { 1 });
        }
    };
    emit(out, &text)?;
    Ok(0)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .and_then(|_| {
            if text.ends_with('\n') {
                Ok(())
            } else {
                out.write_all(b"\n")
            }
        })
        .map_err(|e| Error::Invalid(format!("write failed: {e}")))
}

fn strings<T: ToString>(v: impl IntoIterator<Item = T>) -> Vec<String> {
    v.into_iter().map(|c| c.to_string()).collect()
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values always serialize")
}

fn csv_rows(out: &mut String, label: &str, n: usize, values: &[String]) {
    for (k, v) in values.iter().enumerate() {
        out.push_str(&format!("{label},{n},{k},{v}\n"));
    }
}

const CSV_HEADER: &str = "family,n,k,value\n";

fn compute(a: ComputeArgs) -> Result<String> {
    let (family, n) = (a.rank.family, a.rank.n as usize);
    let caps = caps(a.unsafe_cap_override);
    if a.dump_words {
        let mut s = String::new();
        for w in gen_family(family.word_family(), n, &caps)? {
            s.push_str(&w.to_string());
            s.push('\n');
        }
        return Ok(s);
    }
    if a.dump_formal {
        let f = grammar_iterate(family, n)?;
        return Ok(match a.rank.format {
            Format::Text => f.to_string(),
            _ => pretty(&json!({
                "schema": 1, "family": family.to_string(), "n": n, "formal": f.to_json(),
            })),
        });
    }
    let p = family_poly(family, n, a.method, &caps)?;
    let coeffs = strings(p.to_integers()?);
    Ok(match a.rank.format {
        Format::Json => pretty(&json!({
            "schema": 1, "family": family.to_string(), "n": n,
            "method": a.method.name(), "coeffs": coeffs,
        })),
        Format::Csv => {
            let mut s = CSV_HEADER.to_string();
            csv_rows(&mut s, &family.to_string(), n, &coeffs);
            s
        }
        Format::Text => format!("{family}_{n}(x) = {p}"),
    })
}

/// Named gamma rows whose reassembly gives the family polynomial.
fn gamma_parts(family: Family, n: usize) -> Result<Vec<(&'static str, usize, Vec<BigInt>)>> {
    let t = GammaTables::build(n)?;
    let row = |g: &GammaTable, m: usize| g.row(m).to_vec();
    Ok(match family {
        Family::P => vec![("p", n, row(&t.p, n))],
        Family::Q => vec![("r", n, row(&t.r, n)), ("p", n, row(&t.p, n))],
        Family::S => vec![
            ("eta_plus", 2 * n, row(&t.eta_plus, 2 * n)),
            ("eta_minus", 2 * n, row(&t.eta_minus, 2 * n)),
        ],
        Family::T => vec![
            ("eta_plus", 2 * n + 1, row(&t.eta_plus, 2 * n + 1)),
            ("eta_minus", 2 * n + 1, row(&t.eta_minus, 2 * n + 1)),
        ],
    })
}

fn gamma(a: RankArgs) -> Result<String> {
    let (family, n) = (a.family, a.n as usize);
    let parts = gamma_parts(family, n)?;
    Ok(match a.format {
        Format::Json => {
            let tables: serde_json::Map<String, Value> = parts
                .iter()
                .map(|(name, m, row)| {
                    (
                        name.to_string(),
                        json!({ "row": m, "gammas": strings(row) }),
                    )
                })
                .collect();
            pretty(&json!({
                "schema": 1, "family": family.to_string(), "n": n, "gamma": tables,
            }))
        }
        Format::Csv => {
            let mut s = CSV_HEADER.to_string();
            for (name, m, row) in &parts {
                csv_rows(&mut s, name, *m, &strings(row));
            }
            s
        }
        Format::Text => parts
            .iter()
            .map(|(name, m, row)| format!("{name}_{m} = ({})", strings(row).join(", ")))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn decompose(a: RankArgs) -> Result<String> {
    let (family, n) = (a.family, a.n as usize);
    let f = family_table(family, n).poly(n);
    let center = family.degree(n);
    let d = symmetric_decompose(&f, center)?;
    let report = positivity_report(&f, center)?;
    Ok(match a.format {
        Format::Json => pretty(&json!({
            "schema": 1, "family": family.to_string(), "n": n, "center": center,
            "a": strings(d.a.to_integers()?), "b": strings(d.b.to_integers()?),
            "report": report.to_json(),
        })),
        Format::Csv => {
            let mut s = CSV_HEADER.to_string();
            csv_rows(
                &mut s,
                &format!("{family}+"),
                n,
                &strings(d.a.to_integers()?),
            );
            csv_rows(
                &mut s,
                &format!("{family}-"),
                n,
                &strings(d.b.to_integers()?),
            );
            s
        }
        Format::Text => format!(
            "{family}_{n} = a + x b\na = {}\nb = {}\n{}",
            d.a,
            d.b,
            report.to_json()
        ),
    })
}

fn roots(a: RankArgs) -> Result<String> {
    let (family, n) = (a.family, a.n as usize);
    let f = family_table(family, n).poly(n);
    let cert = real_root_certificate(&f)?;
    Ok(match a.format {
        Format::Text => {
            let mut s = format!(
                "{family}_{n}: real-rooted = {}, {} distinct roots\n",
                cert.is_real_rooted,
                cert.isolation.intervals.len()
            );
            for iv in &cert.isolation.intervals {
                s.push_str(&format!("  ({}, {}] mult {}\n", iv.lo, iv.hi, iv.mult));
            }
            s
        }
        _ => pretty(&json!({
            "schema": 1, "family": family.to_string(), "n": n, "degree": f.degree(),
            "real_rooted": cert.is_real_rooted, "roots": cert.isolation.to_json(),
        })),
    })
}

fn report_json(r: &SuiteReport, timing: bool) -> Value {
    let mut v = r.to_json();
    if !timing {
        v.as_object_mut()
            .expect("report is an object")
            .remove("elapsed_ms");
    }
    v
}

fn verify(a: VerifyArgs) -> Result<(String, bool)> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse()?]
    };
    let caps = caps(a.unsafe_cap_override);
    let reports: Vec<SuiteReport> = suites
        .into_iter()
        .map(|s| verify_suite(s, a.max_n as usize, &caps))
        .collect();
    let passed = reports.iter().all(SuiteReport::passed);
    let json_out = || {
        if reports.len() == 1 {
            pretty(&report_json(&reports[0], a.timing))
        } else {
            pretty(&json!({
                "schema": 1, "passed": passed,
                "suites": reports.iter().map(|r| report_json(r, a.timing)).collect::<Vec<_>>(),
            }))
        }
    };
    let text = match a.format {
        Format::Text if passed => reports
            .iter()
            .map(|r| {
                format!(
                    "{}: PASS ({} checks, {} skipped)",
                    r.suite,
                    r.checks.len(),
                    r.count(crate::verify::Status::Skip)
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => {
            return Err(Error::Invalid("verify reports are json or text".into()));
        }
        _ => json_out(),
    };
    Ok((text, passed))
}

fn push_tri(out: &mut Vec<(String, usize, Vec<String>)>, label: &str, t: &TriTable) {
    for (n, row) in t.rows() {
        out.push((label.to_string(), n, strings(row)));
    }
}

fn push_gamma(out: &mut Vec<(String, usize, Vec<String>)>, label: &str, t: &GammaTable) {
    for (n, row) in t.rows() {
        out.push((label.to_string(), n, strings(row)));
    }
}

fn export(a: ExportArgs) -> Result<String> {
    let n_max = a.n_max as usize;
    let gammas = GammaTables::build(n_max)?;
    let (r, q) = qnk_via_r(n_max);
    let mut rows = Vec::new();
    push_tri(&mut rows, "P", &family_table(Family::P, n_max));
    push_tri(&mut rows, "Q", &q);
    push_tri(&mut rows, "S", &family_table(Family::S, n_max));
    push_tri(&mut rows, "T", &family_table(Family::T, n_max));
    push_tri(&mut rows, "R", &r);
    push_gamma(&mut rows, "p", &gammas.p);
    push_gamma(&mut rows, "r", &gammas.r);
    push_gamma(&mut rows, "eta_plus", &gammas.eta_plus);
    push_gamma(&mut rows, "eta_minus", &gammas.eta_minus);
    Ok(match a.format {
        Format::Json => {
            let mut tables = serde_json::Map::new();
            for (label, n, row) in rows {
                tables
                    .entry(label)
                    .or_insert_with(|| Value::Array(Vec::new()))
                    .as_array_mut()
                    .expect("tables hold arrays")
                    .push(json!({ "n": n, "values": row }));
            }
            pretty(&json!({ "schema": 1, "n_max": n_max, "tables": tables }))
        }
        _ => {
            let mut s = CSV_HEADER.to_string();
            for (label, n, row) in &rows {
                csv_rows(&mut s, label, *n, row);
            }
            s
        }
    })
}
