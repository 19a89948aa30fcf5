//! Decomposition reports and their text and JSON serializations.
//!
//! Text layout:
//!
//! ```text
//! n 1
//! m 6
//! d 6
//! input
//! 2 2
//! 6 0
//! 0 1/6
//! sigma
//! 2 2
//! ...
//! sigma_prime
//! 2 2
//! ...
//! verification
//! shape: pass
//! ...
//! ```
//!
//! followed by optional `locals` (lines `p: e_1 ... e_n`) and `words`
//! (lines `sigma: label ...`, `sigma_prime: label ...`) sections.

use serde_json::{json, Value};
use sympsnf::local::{exponents_of_chain, prime_factors};
use sympsnf::{
    verify_decomposition, ClaimedDecomposition, IntMatrix, Integer, LocalCartanExponents, RatMatrix, Rational, SpWord,
    SympSmithDecomposition, VerificationReport,
};

use crate::format::{
    content_lines, entry_from_json, matrix_from_json, matrix_to_json, parse_integer, read_matrix, write_matrix,
};
use crate::{CliError, CliResult};

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub input: RatMatrix,
    pub m: Integer,
    pub d: Vec<Integer>,
    pub sigma: IntMatrix,
    pub sigma_prime: IntMatrix,
    pub verification: VerificationReport,
    pub locals: Option<Vec<LocalCartanExponents>>,
    pub words: Option<(Vec<String>, Vec<String>)>,
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn strings<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn locals_of_chain(d: &[Integer]) -> CliResult<Vec<LocalCartanExponents>> {
    let Some(last) = d.last() else { return Ok(Vec::new()) };
    prime_factors(last)
        .iter()
        .map(|p| exponents_of_chain(d, p).map_err(CliError::from))
        .collect()
}

pub fn local_line(l: &LocalCartanExponents) -> String {
    format!("{}: {}", l.p, join(&l.exps))
}

pub fn local_json(l: &LocalCartanExponents) -> Value {
    json!({ "p": l.p.to_string(), "exponents": l.exps })
}

pub fn verification_lines(report: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        if c.passed {
            out.push_str(&format!("{}: pass\n", c.name));
        } else {
            out.push_str(&format!("{}: FAIL ({})\n", c.name, c.detail));
        }
    }
    out
}

pub fn verification_json(report: &VerificationReport) -> Value {
    Value::Array(
        report
            .checks
            .iter()
            .map(|c| json!({ "check": c.name, "passed": c.passed, "detail": c.detail }))
            .collect(),
    )
}

impl DecompositionReport {
    /// Builds the report, re-verifying the decomposition against `g`.
    /// Refuses to produce a report whose witnesses do not check out.
    pub fn new(g: &RatMatrix, dec: &SympSmithDecomposition, locals: bool, words: bool) -> CliResult<Self> {
        let verification = verify_decomposition(g, &ClaimedDecomposition::from(dec));
        if let Some(c) = verification.failed().next() {
            return Err(CliError::Internal(format!(
                "decomposition failed check {:?}: {}",
                c.name, c.detail
            )));
        }
        let labels = |w: &SpWord| w.factors().iter().map(ToString::to_string).collect::<Vec<_>>();
        Ok(DecompositionReport {
            input: g.clone(),
            m: dec.scale.m.clone(),
            d: dec.d.clone(),
            sigma: dec.sigma.matrix().clone(),
            sigma_prime: dec.sigma_prime.matrix().clone(),
            verification,
            locals: if locals { Some(locals_of_chain(&dec.d)?) } else { None },
            words: words.then(|| (labels(&dec.sigma), labels(&dec.sigma_prime))),
        })
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\nm {}\nd {}\n", self.n(), self.m, join(&self.d));
        out.push_str("input\n");
        out.push_str(&write_matrix(&self.input));
        out.push_str("sigma\n");
        out.push_str(&write_matrix(&self.sigma));
        out.push_str("sigma_prime\n");
        out.push_str(&write_matrix(&self.sigma_prime));
        out.push_str("verification\n");
        out.push_str(&verification_lines(&self.verification));
        if let Some(locals) = &self.locals {
            out.push_str("locals\n");
            for l in locals {
                out.push_str(&local_line(l));
                out.push('\n');
            }
        }
        if let Some((s, sp)) = &self.words {
            out.push_str("words\n");
            out.push_str(&format!("sigma: {}\n", s.join(" ")));
            out.push_str(&format!("sigma_prime: {}\n", sp.join(" ")));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "n": self.n(),
            "m": self.m.to_string(),
            "d": strings(&self.d),
            "input": matrix_to_json(&self.input),
            "sigma": matrix_to_json(&self.sigma),
            "sigma_prime": matrix_to_json(&self.sigma_prime),
            "verification": verification_json(&self.verification),
        });
        if let Some(locals) = &self.locals {
            v["locals"] = Value::Array(locals.iter().map(local_json).collect());
        }
        if let Some((s, sp)) = &self.words {
            v["words"] = json!({ "sigma": s, "sigma_prime": sp });
        }
        v
    }
}

fn parse_json_decomposition(text: &str) -> CliResult<ClaimedDecomposition> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    let field = |k: &str| v.get(k).ok_or_else(|| CliError::Input(format!("missing field {k:?}")));
    let d = field("d")?
        .as_array()
        .ok_or_else(|| CliError::Input("\"d\" must be an array".into()))?
        .iter()
        .map(|x| integral(&entry_from_json(x)?).ok_or_else(|| CliError::Input(format!("non-integral entry {x} in d"))))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(ClaimedDecomposition {
        sigma: matrix_from_json(field("sigma")?)?,
        d,
        sigma_prime: matrix_from_json(field("sigma_prime")?)?,
    })
}

fn integral(x: &Rational) -> Option<Integer> {
    x.is_integer().then(|| x.to_integer())
}

fn parse_text_decomposition(text: &str) -> CliResult<ClaimedDecomposition> {
    let mut lines = content_lines(text);
    let (mut d, mut sigma, mut sigma_prime) = (None, None, None);
    while let Some((line_no, line)) = lines.next() {
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("d") => {
                let entries = tokens
                    .map(|t| parse_integer(t).map_err(|e| CliError::Input(format!("line {line_no}: {e}"))))
                    .collect::<CliResult<Vec<_>>>()?;
                d = Some(entries);
            }
            Some("sigma") if line == "sigma" => sigma = Some(read_matrix(&mut lines)?),
            Some("sigma_prime") if line == "sigma_prime" => sigma_prime = Some(read_matrix(&mut lines)?),
            Some("input") if line == "input" => {
                read_matrix(&mut lines)?;
            }
            // the remaining sections are informational
            Some("verification") if line == "verification" => break,
            _ => {}
        }
    }
    let missing = |k: &str| CliError::Input(format!("decomposition file has no {k} section"));
    Ok(ClaimedDecomposition {
        sigma: sigma.ok_or_else(|| missing("sigma"))?,
        d: d.ok_or_else(|| missing("d"))?,
        sigma_prime: sigma_prime.ok_or_else(|| missing("sigma_prime"))?,
    })
}

/// Reads a decomposition in either serialization; JSON is recognized by a
/// leading `{`.
pub fn parse_decomposition(text: &str) -> CliResult<ClaimedDecomposition> {
    if text.trim_start().starts_with('{') {
        parse_json_decomposition(text)
    } else {
        parse_text_decomposition(text)
    }
}
