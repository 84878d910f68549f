//! Plain-text formats for circuits, matrices and CNF formulas.
//!
//! Circuit files list gates in topological order with 1-based ids, inputs
//! taking ids `1..=n_inputs`:
//!
//! ```text
//! CIRCUIT XOR 3 2 1
//! 4: 1 2
//! 5: 4 3
//! OUTPUTS: 5
//! ```
//!
//! Matrix files are a `MATRIX <rows> <cols>` header followed by one line of
//! `0`/`1` characters per row. CNF formulas use the DIMACS `cnf` format.

use std::fmt::Write as _;

use lincirc::satbridge::CnfFormula;
use lincirc::{BooleanMatrix, Circuit, Semiring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(&'static str),
    #[error(transparent)]
    Invalid(#[from] lincirc::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_usize(line: usize, token: &str) -> Result<usize, FormatError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected a non-negative integer, found `{token}`")))
}

pub fn write_circuit(c: &Circuit) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "CIRCUIT {} {} {} {}",
        c.semiring(),
        c.n_inputs(),
        c.n_gates(),
        c.n_outputs()
    );
    for (g, children) in c.gates().enumerate() {
        let _ = write!(out, "{}:", c.n_inputs() + g + 1);
        for &ch in children {
            let _ = write!(out, " {}", ch + 1);
        }
        out.push('\n');
    }
    out.push_str("OUTPUTS:");
    for &o in c.outputs() {
        let _ = write!(out, " {}", o + 1);
    }
    out.push('\n');
    out
}

pub fn parse_circuit(text: &str) -> Result<Circuit, FormatError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or(FormatError::Truncated("circuit header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 || fields[0] != "CIRCUIT" {
        return Err(syntax(ln, "expected `CIRCUIT <OR|SUM|XOR> <n_inputs> <n_gates> <n_outputs>`"));
    }
    let semiring: Semiring = fields[1]
        .parse()
        .map_err(|_| syntax(ln, format!("unknown semiring `{}`", fields[1])))?;
    let n_inputs = parse_usize(ln, fields[2])?;
    let n_gates = parse_usize(ln, fields[3])?;
    let n_outputs = parse_usize(ln, fields[4])?;

    let mut gates = Vec::with_capacity(n_gates);
    for g in 0..n_gates {
        let (ln, line) = lines.next().ok_or(FormatError::Truncated("gate list"))?;
        let (id, rest) = line
            .split_once(':')
            .ok_or_else(|| syntax(ln, "expected `<gate-id>: <children>`"))?;
        let id = parse_usize(ln, id.trim())?;
        if id != n_inputs + g + 1 {
            return Err(syntax(ln, format!("expected gate id {}, found {id}", n_inputs + g + 1)));
        }
        gates.push(parse_ids(ln, rest)?);
    }
    let (ln, line) = lines.next().ok_or(FormatError::Truncated("output list"))?;
    let rest = line
        .strip_prefix("OUTPUTS:")
        .ok_or_else(|| syntax(ln, "expected `OUTPUTS: <gate ids>`"))?;
    let outputs = parse_ids(ln, rest)?;
    if outputs.len() != n_outputs {
        return Err(syntax(ln, format!("header promises {n_outputs} outputs, found {}", outputs.len())));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "trailing content after the output list"));
    }
    Ok(Circuit::new(semiring, n_inputs, gates, outputs)?)
}

fn parse_ids(line: usize, text: &str) -> Result<Vec<usize>, FormatError> {
    text.split_whitespace()
        .map(|t| match parse_usize(line, t)? {
            0 => Err(syntax(line, "ids are 1-based")),
            id => Ok(id - 1),
        })
        .collect()
}

pub fn write_matrix(a: &BooleanMatrix) -> String {
    let mut out = String::with_capacity((a.n_cols() + 1) * a.n_rows() + 32);
    let _ = writeln!(out, "MATRIX {} {}", a.n_rows(), a.n_cols());
    for i in 0..a.n_rows() {
        out.extend((0..a.n_cols()).map(|j| if a.get(i, j) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<BooleanMatrix, FormatError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or(FormatError::Truncated("matrix header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "MATRIX" {
        return Err(syntax(ln, "expected `MATRIX <n_rows> <n_cols>`"));
    }
    let (n_rows, n_cols) = (parse_usize(ln, fields[1])?, parse_usize(ln, fields[2])?);
    let mut a = BooleanMatrix::zeros(n_rows, n_cols)?;
    for i in 0..n_rows {
        let (ln, line) = lines.next().ok_or(FormatError::Truncated("matrix rows"))?;
        if line.len() != n_cols {
            return Err(syntax(ln, format!("expected {n_cols} entries, found {}", line.len())));
        }
        for (j, ch) in line.bytes().enumerate() {
            match ch {
                b'0' => {}
                b'1' => a.set(i, j, true),
                _ => return Err(syntax(ln, format!("unexpected character `{}`", ch as char))),
            }
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "trailing content after the last row"));
    }
    Ok(a)
}

/// DIMACS `cnf`: `c` comment lines, a `p cnf <vars> <clauses>` header, then
/// literals with each clause closed by `0`. Clauses may span lines.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, FormatError> {
    let mut header = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    let mut last_line = 0;
    for (ln, line) in content_lines(text) {
        last_line = ln;
        if line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if header.is_some() || fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(syntax(ln, "expected a single `p cnf <vars> <clauses>` header"));
            }
            header = Some((parse_usize(ln, fields[2])?, parse_usize(ln, fields[3])?));
            continue;
        }
        let Some((n_vars, _)) = header else {
            return Err(syntax(ln, "clause before the `p cnf` header"));
        };
        for token in line.split_whitespace() {
            let lit: i32 = token
                .parse()
                .map_err(|_| syntax(ln, format!("expected a literal, found `{token}`")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > n_vars {
                return Err(syntax(ln, format!("literal {lit} exceeds {n_vars} variables")));
            } else {
                current.push(lit);
            }
        }
    }
    let (n_vars, n_clauses) = header.ok_or(FormatError::Truncated("`p cnf` header"))?;
    if !current.is_empty() {
        return Err(syntax(last_line, "last clause is missing its terminating 0"));
    }
    if clauses.len() != n_clauses {
        return Err(syntax(
            last_line,
            format!("header promises {n_clauses} clauses, found {}", clauses.len()),
        ));
    }
    Ok(CnfFormula::new(n_vars, clauses)?)
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.n_vars(), f.clauses().len());
    for clause in f.clauses() {
        for lit in clause {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}
