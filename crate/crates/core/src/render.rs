//! Deterministic text, LaTeX and JSON renderings of [`BiPoly`] values.
//!
//! Text and LaTeX group terms by descending power of `r`; a power of `r` whose
//! coefficient has several `q` terms is printed as a parenthesized factor, e.g.
//! `r^2 + (q - 1)*r - (1/2)*q + 1/3`. JSON lists `{dq, dr, num, den}` records in
//! the canonical monomial order (descending total degree, then `dr`, then `dq`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Number, Value};

use crate::arith::{BigInt, Rational};
use crate::error::{Error, Result};
use crate::poly::BiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
    Latex,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "latex" => Ok(OutputFormat::Latex),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Latex => "latex",
        })
    }
}

/// Renders a single polynomial. CSV cells use the text form.
pub fn render_bipoly(p: &BiPoly, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text | OutputFormat::Csv => text(p),
        OutputFormat::Latex => latex(p),
        OutputFormat::Json => to_json(p).to_string(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Text,
    Latex,
}

pub fn text(p: &BiPoly) -> String {
    render(p, Style::Text)
}

pub fn latex(p: &BiPoly) -> String {
    render(p, Style::Latex)
}

fn render(p: &BiPoly, style: Style) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut groups: BTreeMap<u32, Vec<(u32, Rational)>> = BTreeMap::new();
    for (m, c) in p.iter() {
        groups.entry(m.dr).or_default().push((m.dq, c.clone()));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    for (&dr, terms) in groups.iter_mut().rev() {
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        if dr == 0 || terms.len() == 1 {
            for (dq, c) in terms.iter() {
                pieces.push((c.is_negative(), monomial_body(&c.abs(), *dq, dr, style)));
            }
        } else {
            let negate = terms[0].1.is_negative();
            let inner: Vec<(bool, String)> = terms
                .iter()
                .map(|(dq, c)| {
                    let c = if negate { -c } else { c.clone() };
                    (c.is_negative(), monomial_body(&c.abs(), *dq, 0, style))
                })
                .collect();
            let sep = if style == Style::Text { "*" } else { " " };
            let body = format!("({}){}{}", join(&inner), sep, power("r", dr, style));
            pieces.push((negate, body));
        }
    }
    join(&pieces)
}

fn join(pieces: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in pieces.iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    out
}

fn power(var: &str, e: u32, style: Style) -> String {
    match (e, style) {
        (1, _) => var.to_string(),
        (e, Style::Latex) if e >= 10 => format!("{var}^{{{e}}}"),
        (e, _) => format!("{var}^{e}"),
    }
}

fn number(c: &Rational, style: Style) -> String {
    match style {
        _ if c.is_integer() => c.numer().to_string(),
        Style::Text => format!("{}/{}", c.numer(), c.denom()),
        Style::Latex => format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
    }
}

// `c` is nonnegative; the sign is carried separately.
fn monomial_body(c: &Rational, dq: u32, dr: u32, style: Style) -> String {
    let sep = if style == Style::Text { "*" } else { " " };
    let vars: Vec<String> = [("q", dq), ("r", dr)]
        .into_iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| power(v, e, style))
        .collect();
    if vars.is_empty() {
        return number(c, style);
    }
    let vars = vars.join(sep);
    if c.is_one() {
        vars
    } else if c.is_integer() || style == Style::Latex {
        format!("{}{sep}{vars}", number(c, style))
    } else {
        format!("({}){sep}{vars}", number(c, style))
    }
}

fn big_number(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal is valid JSON"))
}

/// JSON array of `{dq, dr, num, den}` records in canonical order.
pub fn to_json(p: &BiPoly) -> Value {
    Value::Array(
        p.canonical_terms()
            .into_iter()
            .map(|(m, c)| {
                json!({
                    "dq": m.dq,
                    "dr": m.dr,
                    "num": big_number(c.numer()),
                    "den": big_number(c.denom()),
                })
            })
            .collect(),
    )
}

/// Parses the output of [`to_json`]. Integers may be JSON numbers or strings.
pub fn from_json(v: &Value) -> Result<BiPoly> {
    let records = v
        .as_array()
        .ok_or_else(|| Error::Json("expected an array of term records".into()))?;
    let mut terms = Vec::with_capacity(records.len());
    for rec in records {
        let exp = |key: &str| -> Result<u32> {
            rec.get(key)
                .and_then(Value::as_u64)
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| Error::Json(format!("missing or invalid `{key}`")))
        };
        let int = |key: &str| -> Result<BigInt> {
            let raw = match rec.get(key) {
                Some(Value::Number(n)) => n.to_string(),
                Some(Value::String(s)) => s.clone(),
                _ => return Err(Error::Json(format!("missing or invalid `{key}`"))),
            };
            raw.parse()
                .map_err(|_| Error::Json(format!("`{key}` is not an integer: {raw}")))
        };
        let den = int("den")?;
        if den == BigInt::from(0) {
            return Err(Error::Json("zero denominator".into()));
        }
        terms.push((exp("dq")?, exp("dr")?, Rational::new(int("num")?, den)));
    }
    Ok(BiPoly::from_terms(terms))
}
