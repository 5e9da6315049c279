//! Text formats for matrices and traces.
//!
//! Symmetric matrix file:
//!
//! ```text
//! sym 2
//! 5 3
//! 3 6
//! ```
//!
//! Integer (possibly rectangular) matrix file: header `mat R C`, then `R`
//! rows of `C` integers (no row lines when `C = 0`).
//!
//! Trace file, one move per line, matrices inline as `[a b; c d]`:
//!
//! ```text
//! trace
//! start [5]
//! kink -1
//! congr [1 2; 0 1]
//! congr [-2 -1; -1 0]
//! unkink +1
//! end [-5]
//! ```
//!
//! `#` starts a comment everywhere; blank lines are ignored.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ParseError;
use crate::linalg::{IntMatrix, LinalgError, SymMatrix};
use crate::moves::{Move, Sign, Trace};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let c = l.split('#').next().unwrap_or("").trim();
        (!c.is_empty()).then_some((i + 1, c))
    })
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Parses `p` or `p/q` with an optional sign.
pub fn parse_rational(token: &str, line: usize) -> Result<BigRational, ParseError> {
    let bad = || ParseError::BadRational {
        line,
        token: token.to_string(),
    };
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let num: BigInt = parse_int_token(num).ok_or_else(bad)?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(bad());
            }
            parse_int_token(d).ok_or_else(bad)?
        }
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn parse_int_token(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.strip_prefix('+').unwrap_or(s).parse().ok()
}

fn parse_integer(token: &str, line: usize) -> Result<BigInt, ParseError> {
    parse_int_token(token).ok_or_else(|| syntax(line, format!("bad integer '{}'", token)))
}

fn sym_error(e: LinalgError, line: usize) -> ParseError {
    match e {
        LinalgError::NotSymmetric { i, j } => ParseError::NotSymmetric { i, j },
        other => syntax(line, other.to_string()),
    }
}

fn header_size(fields: &[&str], keyword: &str, arity: usize, line: usize) -> Result<Vec<usize>, ParseError> {
    if fields.len() != arity + 1 || fields[0] != keyword {
        let dims = if arity == 1 { "N" } else { "R C" };
        return Err(syntax(line, format!("expected header '{} {}'", keyword, dims)));
    }
    fields[1..]
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| syntax(line, format!("bad size '{}'", f)))
        })
        .collect()
}

/// Parses a `sym N` matrix file; symmetry is checked exactly.
pub fn parse_matrix(text: &str) -> Result<SymMatrix, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "empty matrix file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let n = header_size(&fields, "sym", 1, hline)?[0];

    let mut rows = Vec::with_capacity(n);
    let mut last = hline;
    for _ in 0..n {
        let (line, content) = lines
            .next()
            .ok_or_else(|| syntax(last + 1, format!("expected {} rows", n)))?;
        last = line;
        let row = content
            .split_whitespace()
            .map(|t| parse_rational(t, line))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(syntax(line, format!("expected {} entries, found {}", n, row.len())));
        }
        rows.push(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "unexpected content after matrix"));
    }
    SymMatrix::from_rows(rows).map_err(|e| sym_error(e, hline))
}

pub fn serialize_matrix(g: &SymMatrix) -> String {
    let mut out = format!("sym {}\n", g.size());
    for i in 0..g.size() {
        let row: Vec<String> = g.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a `mat R C` integer matrix file.
pub fn parse_int_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "empty matrix file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let dims = header_size(&fields, "mat", 2, hline)?;
    let (r, c) = (dims[0], dims[1]);

    let mut data = Vec::with_capacity(r * c);
    let mut last = hline;
    // Rows of an R x 0 matrix are empty and are not written.
    let written = if c == 0 { 0 } else { r };
    for _ in 0..written {
        let (line, content) = lines
            .next()
            .ok_or_else(|| syntax(last + 1, format!("expected {} rows", r)))?;
        last = line;
        let row = content
            .split_whitespace()
            .map(|t| parse_integer(t, line))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != c {
            return Err(syntax(line, format!("expected {} entries, found {}", c, row.len())));
        }
        data.extend(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "unexpected content after matrix"));
    }
    Ok(IntMatrix::from_vec(r, c, data))
}

pub fn serialize_int_matrix(m: &IntMatrix) -> String {
    let mut out = format!("mat {} {}\n", m.rows(), m.cols());
    if m.cols() == 0 {
        return out;
    }
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Splits `[a b; c d]` into rows of tokens. `[]` is the 0×0 matrix.
fn inline_rows(s: &str, line: usize) -> Result<Vec<Vec<&str>>, ParseError> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| syntax(line, "inline matrix must be written as [a b; c d]"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(inner
        .split(';')
        .map(|r| r.split_whitespace().collect())
        .collect())
}

pub fn parse_inline_sym(s: &str, line: usize) -> Result<SymMatrix, ParseError> {
    let rows = inline_rows(s, line)?
        .into_iter()
        .map(|r| r.into_iter().map(|t| parse_rational(t, line)).collect())
        .collect::<Result<Vec<Vec<_>>, _>>()?;
    SymMatrix::from_rows(rows).map_err(|e| sym_error(e, line))
}

pub fn parse_inline_int(s: &str, line: usize) -> Result<IntMatrix, ParseError> {
    let rows = inline_rows(s, line)?
        .into_iter()
        .map(|r| r.into_iter().map(|t| parse_integer(t, line)).collect())
        .collect::<Result<Vec<Vec<_>>, _>>()?;
    IntMatrix::from_rows(rows).map_err(|e| syntax(line, e.to_string()))
}

fn parse_sign(tok: &str, line: usize) -> Result<Sign, ParseError> {
    match tok {
        "+1" | "1" => Ok(Sign::Plus),
        "-1" => Ok(Sign::Minus),
        other => Err(syntax(line, format!("bad sign '{}' (expected +1 or -1)", other))),
    }
}

/// Parses a trace file. Structural problems are parse errors; whether the
/// moves are valid is left to the verifier.
pub fn parse_trace(text: &str) -> Result<Trace, ParseError> {
    let mut lines = content_lines(text).peekable();
    match lines.next() {
        Some((_, "trace")) => {}
        Some((line, _)) => return Err(syntax(line, "expected 'trace'")),
        None => return Err(syntax(1, "empty trace file")),
    }
    let (sline, sdecl) = lines.next().ok_or_else(|| syntax(2, "missing start matrix"))?;
    let start = match sdecl.split_once(char::is_whitespace) {
        Some(("start", rest)) => parse_inline_sym(rest, sline)?,
        _ => return Err(syntax(sline, "expected 'start [..]'")),
    };

    let mut moves = Vec::new();
    let mut end = None;
    for (line, content) in lines.by_ref() {
        let (kw, rest) = content
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((content, ""));
        match kw {
            "congr" => moves.push(Move::Congruence(parse_inline_int(rest, line)?)),
            "kink" => moves.push(Move::Kink(parse_sign(rest, line)?)),
            "unkink" => moves.push(Move::Unkink(parse_sign(rest, line)?)),
            "end" => {
                end = Some(parse_inline_sym(rest, line)?);
                break;
            }
            other => return Err(syntax(line, format!("unknown move '{}'", other))),
        }
    }
    let end = end.ok_or_else(|| syntax(text.lines().count().max(1), "missing 'end [..]' line"))?;
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "unexpected content after 'end'"));
    }
    Ok(Trace::new(start, moves, end))
}

pub fn serialize_trace(t: &Trace) -> String {
    let mut out = String::from("trace\n");
    writeln!(out, "start {}", t.start).unwrap();
    for m in &t.moves {
        writeln!(out, "{}", m).unwrap();
    }
    writeln!(out, "end {}", t.end).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(
            parse_matrix("sym 2\n5 3\n3 6").unwrap(),
            SymMatrix::from_i64(&[&[5, 3], &[3, 6]]).unwrap()
        );
        assert_eq!(
            parse_matrix("sym 1\n1/2").unwrap(),
            SymMatrix::from_rows(vec![vec![q(1, 2)]]).unwrap()
        );
        assert_eq!(
            parse_matrix("sym 2\n1 2\n3 4").unwrap_err(),
            ParseError::NotSymmetric { i: 0, j: 1 }
        );
    }

    #[test]
    fn matrix_errors() {
        assert!(matches!(
            parse_matrix("sym 1\n1/0"),
            Err(ParseError::BadRational { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix("sym 1\nx"),
            Err(ParseError::BadRational { .. })
        ));
        assert!(matches!(parse_matrix("sym 2\n1 2"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_matrix("sym 1\n1 2"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_matrix("mat 1 1\n1"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_matrix("sym 1\n1\n2"), Err(ParseError::Syntax { line: 3, .. })));
    }

    #[test]
    fn matrix_comments_and_empty() {
        let g = parse_matrix("# hi\nsym 2 # size\n\n-2 1/3\n1/3 0\n").unwrap();
        assert_eq!(*g.get(0, 1), q(1, 3));
        assert_eq!(parse_matrix("sym 0\n").unwrap(), SymMatrix::empty());
        assert_eq!(serialize_matrix(&g), "sym 2\n-2 1/3\n1/3 0\n");
    }

    #[test]
    fn rational_tokens() {
        assert_eq!(parse_rational("-3/6", 1).unwrap(), q(-1, 2));
        assert_eq!(parse_rational("+4", 1).unwrap(), q(4, 1));
        assert!(parse_rational("3/-4", 1).is_err());
        assert!(parse_rational("1.5", 1).is_err());
        assert!(parse_rational("/2", 1).is_err());
    }

    #[test]
    fn int_matrix_round_trip() {
        let m = parse_int_matrix("mat 2 3\n1 0 -2\n0 1 5\n").unwrap();
        assert_eq!(m, IntMatrix::from_i64(&[&[1, 0, -2], &[0, 1, 5]]));
        assert_eq!(parse_int_matrix(&serialize_int_matrix(&m)).unwrap(), m);
        assert_eq!(parse_int_matrix("mat 2 0\n").unwrap(), IntMatrix::zeros(2, 0));
        let e = parse_int_matrix("mat 2 1\n1\n").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { .. }));
    }

    #[test]
    fn trace_round_trip() {
        let text = "trace\nstart [5]\nkink -1\ncongr [1 2; 0 1]\ncongr [-2 -1; -1 0]\nunkink +1\nend [-5]\n";
        let t = parse_trace(text).unwrap();
        assert_eq!(t.moves.len(), 4);
        assert_eq!(serialize_trace(&t), text);
    }

    #[test]
    fn trace_with_empty_matrix() {
        let t = parse_trace("trace\nstart [1]\nunkink +1\nend []\n").unwrap();
        assert_eq!(t.end, SymMatrix::empty());
    }

    #[test]
    fn trace_errors() {
        assert!(matches!(parse_trace("start [1]"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(
            parse_trace("trace\nstart [1]\nflip +1\nend [1]"),
            Err(ParseError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_trace("trace\nstart [1]\nkink 2\nend [1]"),
            Err(ParseError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_trace("trace\nstart [1]\nkink +1\n"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_trace("trace\nstart [1 2; 3 4]\nend [1]"),
            Err(ParseError::NotSymmetric { .. })
        ));
    }
}
