//! LP-file text (`Minimize / Subject To / Bounds / Binaries / End`).
//!
//! Every variable gets an explicit line in `Bounds`, in index order, so that
//! [`parse_lp`] can rebuild the variable list exactly. Coefficients are
//! written with Rust's shortest round-trip float formatting.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ip::program::{Constraint, LinearProgram, Sense, VarKind, Variable};

pub fn emit_lp(program: &LinearProgram) -> String {
    let mut out = String::new();
    out.push_str("\\ NANIP installation-order model\n");
    out.push_str("Minimize\n obj:");
    write_terms(&mut out, program, &program.objective);
    out.push_str("\nSubject To\n");
    for c in &program.constraints {
        write!(out, " {}:", c.name).unwrap();
        write_terms(&mut out, program, &c.terms);
        writeln!(out, " {} {}", c.sense.symbol(), c.rhs).unwrap();
    }
    out.push_str("Bounds\n");
    for v in &program.variables {
        if v.upper.is_finite() {
            writeln!(out, " {} <= {} <= {}", v.lower, v.name, v.upper).unwrap();
        } else {
            writeln!(out, " {} >= {}", v.name, v.lower).unwrap();
        }
    }
    let binaries: Vec<&str> = program
        .variables
        .iter()
        .filter(|v| v.kind == VarKind::Binary)
        .map(|v| v.name.as_str())
        .collect();
    if !binaries.is_empty() {
        out.push_str("Binaries\n");
        for name in binaries {
            writeln!(out, " {name}").unwrap();
        }
    }
    out.push_str("End\n");
    out
}

fn write_terms(out: &mut String, program: &LinearProgram, terms: &[(usize, f64)]) {
    for (i, &(j, coef)) in terms.iter().enumerate() {
        let sign = if coef < 0.0 { "-" } else if i == 0 { "" } else { "+" };
        let sep = if sign.is_empty() { "" } else { " " };
        write!(out, " {sign}{sep}{} {}", coef.abs(), program.variables[j].name).unwrap();
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Preamble,
    Objective,
    Constraints,
    Bounds,
    Binaries,
    End,
}

/// Parses the subset of LP text written by [`emit_lp`]: one row per line,
/// `lo <= x <= hi` or `x >= lo` bounds, a `Binaries` list.
pub fn parse_lp(text: &str) -> Result<LinearProgram> {
    let mut section = Section::Preamble;
    let mut objective_line = None;
    let mut rows = Vec::new();
    let mut bounds = Vec::new();
    let mut binaries = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line_no = idx + 1;
        if line.is_empty() || line.starts_with('\\') {
            continue;
        }
        let header = match line.to_ascii_lowercase().as_str() {
            "minimize" | "minimise" | "min" => Some(Section::Objective),
            "subject to" | "st" | "s.t." => Some(Section::Constraints),
            "bounds" => Some(Section::Bounds),
            "binaries" | "binary" => Some(Section::Binaries),
            "end" => Some(Section::End),
            _ => None,
        };
        if let Some(next) = header {
            section = next;
            continue;
        }
        match section {
            Section::Objective => objective_line = Some((line_no, line)),
            Section::Constraints => rows.push((line_no, line)),
            Section::Bounds => bounds.push((line_no, line)),
            Section::Binaries => binaries.extend(line.split_whitespace()),
            Section::Preamble | Section::End => {
                return Err(parse_error(line_no, "text outside any section"));
            }
        }
    }

    let mut program = LinearProgram::default();
    for &(line_no, line) in &bounds {
        let (name, lower, upper) = parse_bound(line).ok_or_else(|| parse_error(line_no, "bad bound"))?;
        if program.variable_index(name).is_some() {
            return Err(parse_error(line_no, "variable bounded twice"));
        }
        program.variables.push(Variable {
            name: name.to_string(),
            kind: VarKind::Continuous,
            lower,
            upper,
        });
    }
    for name in binaries {
        let j = program
            .variable_index(name)
            .ok_or_else(|| parse_error(0, &format!("binary `{name}` has no bound line")))?;
        program.variables[j].kind = VarKind::Binary;
    }

    if let Some((line_no, line)) = objective_line {
        let (_, expr) = split_label(line);
        program.objective = parse_terms(&program, expr).map_err(|m| parse_error(line_no, &m))?;
    }
    for (line_no, line) in rows {
        let (label, body) = split_label(line);
        let (expr, sense, rhs) = split_relation(body).ok_or_else(|| parse_error(line_no, "bad row"))?;
        program.constraints.push(Constraint {
            name: label.unwrap_or_default().to_string(),
            terms: parse_terms(&program, expr).map_err(|m| parse_error(line_no, &m))?,
            sense,
            rhs,
        });
    }
    Ok(program)
}

fn parse_error(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

fn split_label(line: &str) -> (Option<&str>, &str) {
    match line.split_once(':') {
        Some((label, rest)) => (Some(label.trim()), rest.trim()),
        None => (None, line),
    }
}

fn split_relation(body: &str) -> Option<(&str, Sense, f64)> {
    for (symbol, sense) in [("<=", Sense::Le), (">=", Sense::Ge), ("=", Sense::Eq)] {
        if let Some((lhs, rhs)) = body.split_once(symbol) {
            return Some((lhs.trim(), sense, parse_number(rhs.trim())?));
        }
    }
    None
}

fn parse_number(s: &str) -> Option<f64> {
    match s.to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" => Some(f64::INFINITY),
        "-inf" | "-infinity" => Some(f64::NEG_INFINITY),
        other => other.parse().ok(),
    }
}

fn parse_bound(line: &str) -> Option<(&str, f64, f64)> {
    let parts: Vec<&str> = line.split("<=").map(str::trim).collect();
    match parts[..] {
        [lo, name, hi] => Some((name, parse_number(lo)?, parse_number(hi)?)),
        _ => {
            let (name, lo) = line.split_once(">=")?;
            Some((name.trim(), parse_number(lo.trim())?, f64::INFINITY))
        }
    }
}

fn parse_terms(program: &LinearProgram, expr: &str) -> Result<Vec<(usize, f64)>, String> {
    let mut terms = Vec::new();
    let mut tokens = expr.split_whitespace().peekable();
    while tokens.peek().is_some() {
        let mut sign = 1.0;
        while let Some(&t) = tokens.peek() {
            match t {
                "+" => {}
                "-" => sign = -sign,
                _ => break,
            }
            tokens.next();
        }
        let first = tokens.next().ok_or("dangling sign")?;
        let (coef, name) = match parse_number(first) {
            Some(c) => (c, tokens.next().ok_or("coefficient without variable")?),
            None => (1.0, first),
        };
        let j = program
            .variable_index(name)
            .ok_or_else(|| format!("unknown variable `{name}`"))?;
        terms.push((j, sign * coef));
    }
    Ok(terms)
}
