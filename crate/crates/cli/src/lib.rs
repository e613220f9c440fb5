//! Command-line front end for `whitney-core`.
//!
//! ```text
//! whitney triangle --kind {w|W|s|sr} --n-max INT [--r0 INT] [--eval q=RAT,r=RAT] [--format FMT]
//! whitney cauchy   --kind {first|second} --n INT [--eval q=RAT,r=RAT] [--format FMT]
//! whitney egf      --which {w:K|c|chat} --order INT [--format FMT]
//! whitney verify   --suite NAME --n-max INT [--shift-values RAT,RAT,...]
//! ```
//!
//! Exit codes: 0 success, 1 identity failure, 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use whitney_core::cauchy::cauchy_poly;
use whitney_core::render::{render_bipoly, to_json};
use whitney_core::series::{egf_c, egf_chat, egf_w};
use whitney_core::triangle::{rstirling1, stirling1, whitney1_with, whitney2_with};
use whitney_core::verify::{default_shifts, run_suite, Suite, Tables};
use whitney_core::{BiPoly, CauchyKind, OutputFormat, Rational, Series, Triangle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "whitney", version, about = "Exact r-Whitney numbers and Cauchy polynomials with a q parameter")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a triangle of r-Whitney, Stirling or r-Stirling numbers.
    Triangle(TriangleArgs),
    /// Print a Cauchy polynomial with a q parameter.
    Cauchy(CauchyArgs),
    /// Print the coefficients of a truncated exponential generating function.
    Egf(EgfArgs),
    /// Run an identity verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TriangleChoice {
    Whitney1,
    Whitney2,
    Stirling1,
    RStirling1,
}

fn parse_triangle_kind(s: &str) -> Result<TriangleChoice, String> {
    match s {
        "w" => Ok(TriangleChoice::Whitney1),
        "W" => Ok(TriangleChoice::Whitney2),
        "s" => Ok(TriangleChoice::Stirling1),
        "sr" => Ok(TriangleChoice::RStirling1),
        other => Err(format!("unknown triangle `{other}` (expected w, W, s or sr)")),
    }
}

/// Values substituted for `q` and/or `r`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EvalPoint {
    pub q: Option<Rational>,
    pub r: Option<Rational>,
}

impl EvalPoint {
    fn is_empty(&self) -> bool {
        self.q.is_none() && self.r.is_none()
    }

    fn apply(&self, p: &BiPoly) -> BiPoly {
        p.specialize(self.q.as_ref(), self.r.as_ref())
    }
}

/// Parses `q=RAT,r=RAT`; either assignment may be omitted.
pub fn parse_eval(s: &str) -> Result<EvalPoint, String> {
    let mut point = EvalPoint::default();
    for part in s.split(',') {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected name=value, got `{part}`"))?;
        let value: Rational = value.parse().map_err(|e| format!("{e}"))?;
        let slot = match name.trim() {
            "q" => &mut point.q,
            "r" => &mut point.r,
            other => return Err(format!("unknown variable `{other}` (expected q or r)")),
        };
        if slot.replace(value).is_some() {
            return Err(format!("`{}` given twice", name.trim()));
        }
    }
    Ok(point)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EgfChoice {
    WColumn(usize),
    C,
    Chat,
}

fn parse_egf_choice(s: &str) -> Result<EgfChoice, String> {
    match s {
        "c" => Ok(EgfChoice::C),
        "chat" => Ok(EgfChoice::Chat),
        _ => match s.strip_prefix("w:") {
            Some(k) => k
                .parse()
                .map(EgfChoice::WColumn)
                .map_err(|_| format!("invalid column index in `{s}`")),
            None => Err(format!("unknown generating function `{s}` (expected w:K, c or chat)")),
        },
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Args)]
struct TriangleArgs {
    #[arg(long, value_parser = parse_triangle_kind)]
    kind: TriangleChoice,
    #[arg(long)]
    n_max: usize,
    /// r-Stirling parameter (only with --kind sr).
    #[arg(long, allow_negative_numbers = true)]
    r0: Option<i64>,
    #[arg(long, value_parser = parse_eval)]
    eval: Option<EvalPoint>,
    #[arg(long, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct CauchyArgs {
    #[arg(long)]
    kind: CauchyKind,
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_eval)]
    eval: Option<EvalPoint>,
    #[arg(long, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct EgfArgs {
    #[arg(long, value_parser = parse_egf_choice)]
    which: EgfChoice,
    #[arg(long)]
    order: usize,
    #[arg(long, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: Suite,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rational)]
    shift_values: Option<Vec<Rational>>,
}

/// A usage problem detected after argument parsing.
struct UsageError(String);

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Triangle(a) => triangle_cmd(a, out),
        Command::Cauchy(a) => cauchy_cmd(a, out),
        Command::Egf(a) => egf_cmd(a, out),
        Command::Verify(a) => return verify_cmd(a, out, err),
    };
    match result {
        Ok(Ok(())) => EXIT_OK,
        Ok(Err(UsageError(msg))) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(io) => {
            let _ = writeln!(err, "error: {io}");
            EXIT_FAILURE
        }
    }
}

type CmdResult = std::io::Result<Result<(), UsageError>>;

fn polynomial_or_symbol(value: Option<&Rational>, symbol: BiPoly) -> BiPoly {
    value.map_or(symbol, |v| BiPoly::constant(v.clone()))
}

fn triangle_cmd(a: TriangleArgs, out: &mut dyn Write) -> CmdResult {
    if a.r0.is_some() && a.kind != TriangleChoice::RStirling1 {
        return Ok(Err(UsageError("--r0 is only valid with --kind sr".into())));
    }
    let eval = a.eval.unwrap_or_default();
    let q = polynomial_or_symbol(eval.q.as_ref(), BiPoly::q());
    let r = polynomial_or_symbol(eval.r.as_ref(), BiPoly::r());
    let triangle = match a.kind {
        TriangleChoice::Whitney1 => whitney1_with(a.n_max, &q, &r),
        TriangleChoice::Whitney2 => whitney2_with(a.n_max, &q, &r),
        TriangleChoice::Stirling1 => stirling1(a.n_max),
        TriangleChoice::RStirling1 => match rstirling1(a.n_max, a.r0.unwrap_or(0)) {
            Ok(t) => t,
            Err(e) => return Ok(Err(UsageError(e.to_string()))),
        },
    };
    write_triangle(&triangle, a.format, out)?;
    Ok(Ok(()))
}

fn write_triangle(t: &Triangle, fmt: OutputFormat, out: &mut dyn Write) -> std::io::Result<()> {
    let label = t.kind().label();
    match fmt {
        OutputFormat::Json => {
            let entries: Vec<Value> = t
                .rows()
                .iter()
                .map(|row| Value::Array(row.iter().map(to_json).collect()))
                .collect();
            writeln!(out, "{}", json!({ "kind": label, "entries": entries }))
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "k", "value"])?;
            for (n, row) in t.rows().iter().enumerate() {
                for (k, p) in row.iter().enumerate() {
                    w.write_record([n.to_string(), k.to_string(), render_bipoly(p, fmt)])?;
                }
            }
            w.flush()
        }
        OutputFormat::Text => {
            for (n, row) in t.rows().iter().enumerate() {
                for (k, p) in row.iter().enumerate() {
                    writeln!(out, "{label}({n},{k}) = {}", render_bipoly(p, fmt))?;
                }
            }
            Ok(())
        }
        OutputFormat::Latex => {
            for (n, row) in t.rows().iter().enumerate() {
                for (k, p) in row.iter().enumerate() {
                    writeln!(out, "{label}({n},{k}) &= {} \\\\", render_bipoly(p, fmt))?;
                }
            }
            Ok(())
        }
    }
}

fn cauchy_cmd(a: CauchyArgs, out: &mut dyn Write) -> CmdResult {
    let mut p = cauchy_poly(a.kind, a.n);
    if let Some(point) = a.eval.as_ref().filter(|e| !e.is_empty()) {
        p = point.apply(&p);
    }
    match a.format {
        OutputFormat::Json => {
            let doc = json!({ "kind": a.kind.to_string(), "n": a.n, "entries": to_json(&p) });
            writeln!(out, "{doc}")?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "value"])?;
            w.write_record([a.n.to_string(), render_bipoly(&p, a.format)])?;
            w.flush()?;
        }
        OutputFormat::Text | OutputFormat::Latex => writeln!(out, "{}", render_bipoly(&p, a.format))?,
    }
    Ok(Ok(()))
}

fn egf_cmd(a: EgfArgs, out: &mut dyn Write) -> CmdResult {
    let (label, series): (String, Series) = match a.which {
        EgfChoice::WColumn(k) => (format!("w:{k}"), egf_w(k, a.order)),
        EgfChoice::C => ("c".into(), egf_c(a.order)),
        EgfChoice::Chat => ("chat".into(), egf_chat(a.order)),
    };
    match a.format {
        OutputFormat::Json => {
            let entries: Vec<Value> = series.coeffs().iter().map(to_json).collect();
            writeln!(out, "{}", json!({ "kind": label, "order": a.order, "entries": entries }))?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "value"])?;
            for (n, p) in series.coeffs().iter().enumerate() {
                w.write_record([n.to_string(), render_bipoly(p, a.format)])?;
            }
            w.flush()?;
        }
        OutputFormat::Text => {
            for (n, p) in series.coeffs().iter().enumerate() {
                writeln!(out, "[t^{n}] {}", render_bipoly(p, a.format))?;
            }
        }
        OutputFormat::Latex => {
            for (n, p) in series.coeffs().iter().enumerate() {
                writeln!(out, "[t^{{{n}}}] &= {} \\\\", render_bipoly(p, a.format))?;
            }
        }
    }
    Ok(Ok(()))
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let shifts = a.shift_values.unwrap_or_else(default_shifts);
    let tables = Tables::new(a.n_max);
    let reports = run_suite(a.suite, a.n_max, &shifts, &tables);
    let mut failed = false;
    for report in &reports {
        if report.passed() {
            let _ = writeln!(out, "PASS {} ({} checks, n <= {})", report.suite, report.checks, a.n_max);
        } else {
            failed = true;
            let _ = writeln!(
                out,
                "FAIL {} ({} of {} checks failed, n <= {})",
                report.suite,
                report.failures.len(),
                report.checks,
                a.n_max
            );
            if let Some(first) = report.failures.first() {
                let _ = writeln!(err, "counterexample in {}: {first}", report.suite);
            }
        }
    }
    if failed {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_parsing() {
        let p = parse_eval("q=1,r=0").unwrap();
        assert_eq!(p.q, Some(Rational::one()));
        assert_eq!(p.r, Some(Rational::zero()));
        let p = parse_eval("r=-3/4").unwrap();
        assert_eq!((p.q, p.r), (None, Some(Rational::new(-3, 4))));
        assert!(parse_eval("q=1,q=2").is_err());
        assert!(parse_eval("x=1").is_err());
        assert!(parse_eval("q=1/0").is_err());
        assert!(parse_eval("q").is_err());
    }

    #[test]
    fn egf_choice_parsing() {
        assert_eq!(parse_egf_choice("w:3").unwrap(), EgfChoice::WColumn(3));
        assert_eq!(parse_egf_choice("c").unwrap(), EgfChoice::C);
        assert_eq!(parse_egf_choice("chat").unwrap(), EgfChoice::Chat);
        assert!(parse_egf_choice("w:x").is_err());
        assert!(parse_egf_choice("d").is_err());
    }
}
