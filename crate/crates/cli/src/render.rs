//! Output assembly shared by every subcommand.

use std::fmt::Write as _;

use ihrep::exact::rat;
use ihrep::report::{CheckRecord, Status};
use ihrep::{GradedPoly, Monomial3, Rational};
use serde_json::{json, Value};

/// One line of the `checks` array.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

impl Check {
    pub fn new(name: &str, ok: bool, details: impl Into<String>) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Self { name: name.to_string(), status, details: details.into() }
    }

    pub fn skipped(name: &str, details: impl Into<String>) -> Self {
        Self { name: name.to_string(), status: Status::Skipped, details: details.into() }
    }

    fn to_json(&self) -> Value {
        json!({"name": self.name, "status": self.status.as_str(), "details": self.details})
    }
}

impl From<CheckRecord> for Check {
    fn from(r: CheckRecord) -> Self {
        Self { name: r.name.to_string(), status: r.status, details: r.details }
    }
}

/// Everything a subcommand produces, in all three formats.
#[derive(Debug)]
pub struct Output {
    pub genus: Option<u32>,
    pub command: &'static str,
    pub data: Value,
    pub text: String,
    pub latex: String,
    pub checks: Vec<Check>,
}

impl Output {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let doc = json!({
            "genus": self.genus,
            "command": self.command,
            "data": self.data,
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = self.text.clone();
        if !self.checks.is_empty() {
            let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            s.push_str("\nchecks\n");
            for c in &self.checks {
                let _ = writeln!(s, "  {:<width$}  {:<7}  {}", c.name, c.status.as_str(), c.details);
            }
        }
        s
    }

    pub fn to_latex(&self) -> String {
        let mut s = self.latex.clone();
        for c in &self.checks {
            let _ = writeln!(s, "% check {}: {} ({})", c.name, c.status.as_str(), c.details);
        }
        s
    }
}

pub fn rational_json(q: &Rational) -> Value {
    json!({"num": q.numer().to_string(), "den": q.denom().to_string()})
}

pub fn rationals_json(qs: &[Rational]) -> Value {
    Value::Array(qs.iter().map(rational_json).collect())
}

fn latex_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

/// Joins `(coefficient, monomial)` pairs as a signed sum. An empty
/// monomial means the constant term.
fn latex_sum<'a>(terms: impl Iterator<Item = (&'a Rational, String)>) -> String {
    let zero = rat(0);
    let mut out = String::new();
    for (c, mono) in terms {
        if *c == zero {
            continue;
        }
        let neg = *c < zero;
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() || mag != rat(1) {
            out.push_str(&latex_rational(&mag));
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn latex_power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{{{e}}}"),
    }
}

/// Explicit polynomial in `t`, optionally followed by an `O(t^{N})` tail.
pub fn latex_series(coeffs: &[Rational], tail: Option<usize>) -> String {
    let mut s = latex_sum(coeffs.iter().enumerate().map(|(d, c)| (c, latex_power("t", d))));
    if let Some(n) = tail {
        let _ = write!(s, " + O(t^{{{n}}})");
    }
    s
}

pub fn latex_monomial(m: &Monomial3) -> String {
    [("\\alpha", m.i), ("\\beta", m.j), ("\\gamma", m.k)]
        .iter()
        .map(|(v, e)| latex_power(v, *e as usize))
        .collect()
}

pub fn latex_poly(p: &GradedPoly) -> String {
    latex_sum(p.terms().rev().map(|(m, c)| (c, latex_monomial(m))))
}
