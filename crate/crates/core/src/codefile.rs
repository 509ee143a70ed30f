//! Line-oriented text format for QT codes.
//!
//! ```text
//! # [7,4] cyclic Hamming code
//! q 2
//! lambda 1
//! m 7
//! ell 1
//! gen 1,1,0,1
//! ```
//!
//! Each `gen` line is one generator row of `ell` polynomials, each written
//! as comma-separated ascending coefficients. Over `GF(p^s)` with `s > 1` a
//! coefficient may be given as colon-separated ascending base-`p` digits
//! (`0:1` is the field generator). `lambda` accepts either digit separator.
//! No `gen` lines describes the zero code.

use std::path::Path;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::ntheory::prime_power;
use crate::poly::Poly;
use crate::qt::QtCode;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_digits(field: &Field, s: &str, sep: char, line: usize) -> Result<FieldElement> {
    let digits = s
        .split(sep)
        .map(|t| t.trim().parse::<i64>().map_err(|e| parse_err(line, format!("bad coefficient {:?}: {e}", t.trim()))))
        .collect::<Result<Vec<_>>>()?;
    field.from_coeffs(&digits).map_err(|e| parse_err(line, e.to_string()))
}

fn parse_entry(field: &Field, s: &str, line: usize) -> Result<Poly> {
    let coeffs = s
        .split(',')
        .map(|c| {
            let c = c.trim();
            if c.contains(':') {
                parse_digits(field, c, ':', line)
            } else {
                c.parse::<i64>()
                    .map(|v| field.from_int(v))
                    .map_err(|e| parse_err(line, format!("bad coefficient {c:?}: {e}")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(field, coeffs))
}

fn parse_usize(value: &str, key: &str, line: usize) -> Result<usize> {
    value.trim().parse::<usize>().map_err(|e| parse_err(line, format!("bad {key} value {:?}: {e}", value.trim())))
}

/// Parses and reduces a code description.
pub fn parse_code(text: &str) -> Result<QtCode> {
    let mut q: Option<(u64, usize)> = None;
    let mut lambda: Option<(String, usize)> = None;
    let mut m: Option<usize> = None;
    let mut ell: Option<usize> = None;
    let mut gens: Vec<(Vec<String>, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        let set_once = |slot_filled: bool| {
            if slot_filled {
                Err(parse_err(line, format!("duplicate {key} line")))
            } else {
                Ok(())
            }
        };
        match key {
            "q" => {
                set_once(q.is_some())?;
                let v = rest.parse::<u64>().map_err(|e| parse_err(line, format!("bad q value {rest:?}: {e}")))?;
                q = Some(prime_power(v).ok_or_else(|| parse_err(line, format!("{v} is not a prime power")))?);
            }
            "lambda" => {
                set_once(lambda.is_some())?;
                if rest.is_empty() {
                    return Err(parse_err(line, "missing lambda value"));
                }
                lambda = Some((rest.to_string(), line));
            }
            "m" => {
                set_once(m.is_some())?;
                m = Some(parse_usize(rest, key, line)?);
            }
            "ell" => {
                set_once(ell.is_some())?;
                ell = Some(parse_usize(rest, key, line)?);
            }
            "gen" => gens.push((rest.split_whitespace().map(str::to_string).collect(), line)),
            _ => return Err(parse_err(line, format!("unknown key {key:?}"))),
        }
    }

    let last = text.lines().count().max(1);
    let (p, s) = q.ok_or_else(|| parse_err(last, "missing q line"))?;
    let m = m.ok_or_else(|| parse_err(last, "missing m line"))?;
    let ell = ell.ok_or_else(|| parse_err(last, "missing ell line"))?;
    let (lambda_text, lambda_line) = lambda.ok_or_else(|| parse_err(last, "missing lambda line"))?;
    let field = Field::new(p, s)?;
    let sep = if lambda_text.contains(':') { ':' } else { ',' };
    let lambda = parse_digits(&field, &lambda_text, sep, lambda_line)?;

    let mut generators = Vec::with_capacity(gens.len());
    for (entries, line) in gens {
        if entries.len() != ell {
            return Err(parse_err(line, format!("generator has {} entries, expected ell = {ell}", entries.len())));
        }
        generators.push(entries.iter().map(|e| parse_entry(&field, e, line)).collect::<Result<Vec<_>>>()?);
    }
    QtCode::from_generators(&field, lambda, m, ell, &generators)
}

pub fn parse_code_file(path: impl AsRef<Path>) -> Result<QtCode> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_err(0, format!("cannot read {}: {e}", path.display())))?;
    parse_code(&text)
}

fn format_coeff(field: &Field, c: FieldElement) -> String {
    field.format(c).replace(',', ":")
}

/// Writes the reduced generator matrix of `code` in the file format; rows
/// with a zero diagonal entry are omitted.
pub fn format_code(code: &QtCode) -> String {
    let f = code.field();
    let mut out = format!(
        "q {}\nlambda {}\nm {}\nell {}\n",
        f.order(),
        format_coeff(f, code.lambda()),
        code.m(),
        code.ell()
    );
    let g = code.gmatrix();
    for r in 0..g.rows() {
        if g.get(r, r).is_zero() {
            continue;
        }
        let entries: Vec<String> = g
            .row(r)
            .iter()
            .map(|p| {
                if p.is_zero() {
                    "0".to_string()
                } else {
                    p.coeffs().iter().map(|&c| format_coeff(f, c)).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        out.push_str(&format!("gen {}\n", entries.join(" ")));
    }
    out
}
