//! Textual ideal descriptions.
//!
//! ```text
//! # label: conic
//! char 32003;
//! vars x, y;
//! gens x^2, x*y, y^2;
//! ```

use std::fmt;

use jacdual::gbasis::Ideal;
use jacdual::polycore::{MonomialOrder, Polynomial, PrimeField, Ring, RingRef, DEFAULT_CHARACTERISTIC};
use serde::Serialize;
use thiserror::Error;

/// A parsed and validated input file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealDescription {
    pub characteristic: u64,
    pub vars: Vec<String>,
    /// Generator expressions with whitespace removed.
    pub gens: Vec<String>,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("{line}:{col}: {msg}")]
    At { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

/// Term order on the source ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OrderChoice {
    #[default]
    Grevlex,
    Lex,
}

impl OrderChoice {
    fn order(self) -> MonomialOrder {
        match self {
            OrderChoice::Grevlex => MonomialOrder::grevlex(),
            OrderChoice::Lex => MonomialOrder::lex(),
        }
    }
}

fn line_col(src: &str, pos: usize) -> (usize, usize) {
    let pos = pos.min(src.len());
    let before = &src[..pos];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, col)
}

fn at(src: &str, pos: usize, msg: impl Into<String>) -> InputError {
    let (line, col) = line_col(src, pos);
    InputError::At { line, col, msg: msg.into() }
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_') && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `body` on commas, returning trimmed pieces with their absolute offsets.
fn split_list(body: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in body.char_indices().chain(std::iter::once((body.len(), ','))) {
        if c == ',' {
            let piece = &body[start..i];
            let lead = piece.len() - piece.trim_start().len();
            out.push((base + start + lead, piece.trim()));
            start = i + 1;
        }
    }
    out
}

fn build_ring(p: u64, vars: &[String], order: OrderChoice) -> Result<RingRef, InputError> {
    let field = PrimeField::new(p).map_err(|e| InputError::Invalid(e.to_string()))?;
    Ok(Ring::new(field, vars.to_vec(), order.order()))
}

fn check_generator(g: &Polynomial) -> Result<(), String> {
    if g.is_zero() {
        return Err("generator is zero".into());
    }
    if !g.is_homogeneous() {
        return Err("generator is not homogeneous".into());
    }
    Ok(())
}

/// Parses and validates a description; `label` defaults to `input`.
pub fn parse_ideal(src: &str) -> Result<IdealDescription, InputError> {
    let mut label = None;
    let mut clean = String::with_capacity(src.len());
    for line in src.split_inclusive('\n') {
        match line.find('#') {
            Some(h) => {
                let comment = line[h + 1..].trim();
                if let Some(l) = comment.strip_prefix("label:") {
                    if label.is_none() {
                        label = Some(l.trim().to_string());
                    }
                }
                clean.push_str(&line[..h]);
                clean.extend(line[h..].chars().map(|c| if c == '\n' { '\n' } else { ' ' }));
            }
            None => clean.push_str(line),
        }
    }

    let mut characteristic: Option<u64> = None;
    let mut vars: Option<(usize, Vec<String>)> = None;
    let mut gens: Option<(usize, Vec<(usize, String)>)> = None;
    let mut start = 0;
    let bytes = clean.as_bytes();
    while start < clean.len() {
        let Some(rel) = clean[start..].find(';') else {
            let rest = &clean[start..];
            if rest.trim().is_empty() {
                break;
            }
            let lead = rest.len() - rest.trim_start().len();
            return Err(at(src, start + lead, "statement is missing its terminating `;`"));
        };
        let stmt = &clean[start..start + rel];
        let lead = stmt.len() - stmt.trim_start().len();
        let kw_start = start + lead;
        let body_rel = stmt[lead..].find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).map_or(stmt.len(), |k| lead + k);
        let keyword = &stmt[lead..body_rel];
        let body = &stmt[body_rel..];
        let body_base = start + body_rel;
        match keyword {
            "" if stmt.trim().is_empty() => return Err(at(src, kw_start.min(bytes.len()), "empty statement")),
            "char" => {
                if characteristic.is_some() {
                    return Err(at(src, kw_start, "duplicate `char` statement"));
                }
                let t = body.trim();
                let off = body_base + (body.len() - body.trim_start().len());
                let p: u64 = t.parse().map_err(|_| at(src, off, format!("expected a prime, found `{t}`")))?;
                PrimeField::new(p).map_err(|_| at(src, off, format!("characteristic {p} is not a prime below 2^31")))?;
                characteristic = Some(p);
            }
            "vars" => {
                if vars.is_some() {
                    return Err(at(src, kw_start, "duplicate `vars` statement"));
                }
                let mut names: Vec<String> = Vec::new();
                for (off, name) in split_list(body, body_base) {
                    if !is_ident(name) {
                        return Err(at(src, off, format!("invalid variable name `{name}`")));
                    }
                    if names.iter().any(|n| n == name) {
                        return Err(at(src, off, format!("duplicate variable `{name}`")));
                    }
                    names.push(name.to_string());
                }
                vars = Some((kw_start, names));
            }
            "gens" => {
                if gens.is_some() {
                    return Err(at(src, kw_start, "duplicate `gens` statement"));
                }
                let list = split_list(body, body_base);
                if let Some(&(off, _)) = list.iter().find(|(_, g)| g.is_empty()) {
                    return Err(at(src, off, "empty generator"));
                }
                gens = Some((kw_start, list.into_iter().map(|(o, g)| (o, g.to_string())).collect()));
            }
            other => return Err(at(src, kw_start, format!("unknown statement `{other}`"))),
        }
        start += rel + 1;
    }

    let (_, vars) = vars.ok_or_else(|| InputError::Invalid("missing `vars` statement".into()))?;
    let (_, gens) = gens.ok_or_else(|| InputError::Invalid("missing `gens` statement".into()))?;
    let characteristic = characteristic.unwrap_or(DEFAULT_CHARACTERISTIC as u64);
    let ring = build_ring(characteristic, &vars, OrderChoice::Grevlex)?;
    let mut texts = Vec::with_capacity(gens.len());
    for (off, g) in &gens {
        let poly = Polynomial::parse_at(&ring, g, *off).map_err(|e| match e {
            jacdual::Error::Parse { pos, msg } => at(src, pos, msg),
            other => at(src, *off, other.to_string()),
        })?;
        check_generator(&poly).map_err(|m| at(src, *off, m))?;
        texts.push(g.chars().filter(|c| !c.is_whitespace()).collect());
    }
    Ok(IdealDescription { characteristic, vars, gens: texts, label: label.unwrap_or_else(|| "input".into()) })
}

/// Text that [`parse_ideal`] reads back to the same description.
pub fn render(desc: &IdealDescription) -> String {
    format!(
        "# label: {}\nchar {};\nvars {};\ngens {};\n",
        desc.label,
        desc.characteristic,
        desc.vars.join(", "),
        desc.gens.join(", ")
    )
}

impl fmt::Display for IdealDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl IdealDescription {
    pub fn new(characteristic: u64, vars: Vec<String>, gens: &[Polynomial], label: impl Into<String>) -> Self {
        IdealDescription {
            characteristic,
            vars,
            gens: gens.iter().map(|g| g.to_string().chars().filter(|c| !c.is_whitespace()).collect()).collect(),
            label: label.into(),
        }
    }

    /// Builds the ideal, optionally overriding the characteristic.
    pub fn to_ideal(&self, characteristic: Option<u64>, order: OrderChoice) -> Result<Ideal, InputError> {
        let p = characteristic.unwrap_or(self.characteristic);
        let ring = build_ring(p, &self.vars, order)?;
        let mut gens = Vec::with_capacity(self.gens.len());
        for (k, g) in self.gens.iter().enumerate() {
            let poly = Polynomial::parse(&ring, g).map_err(|e| InputError::Invalid(format!("generator {}: {e}", k + 1)))?;
            check_generator(&poly).map_err(|m| InputError::Invalid(format!("generator {} in characteristic {p}: {m}", k + 1)))?;
            gens.push(poly);
        }
        Ideal::new(&ring, gens).map_err(|e| InputError::Invalid(e.to_string()))
    }
}
