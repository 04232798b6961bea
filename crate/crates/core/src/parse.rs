//! Reader for the line-oriented instance format.
//!
//! ```text
//! # comment
//! 3dsmi 3
//! 0: 1 7
//! 4: 5 8 2
//! ```
//!
//! The header names the dimension; each body line gives one vertex's targets
//! from most to least preferred. Vertices without a line have empty lists.

use thiserror::Error;

use crate::instance::{Instance, VertexId, GENDERS};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header")]
    MissingHeader,
    #[error("malformed header: {0}")]
    BadHeader(String),
    #[error("expected `<vertex>:`")]
    ExpectedColon,
    #[error("not a vertex id: `{0}`")]
    BadNumber(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("target {0} out of range")]
    TargetOutOfRange(usize),
    #[error("edge {vertex} -> {target} does not go to the next gender")]
    WrongGender { vertex: usize, target: usize },
    #[error("target {0} listed twice")]
    DuplicateTarget(usize),
    #[error("vertex {0} has more than one line")]
    DuplicateVertexLine(usize),
    #[error("list of length {len} exceeds dimension {n}")]
    ListTooLong { len: usize, n: usize },
}

/// A parse failure with a 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, column, kind }
    }
}

/// A whitespace-separated token with its 1-based column.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn number(tok: &Token<'_>, line: usize) -> Result<usize, ParseError> {
    tok.text
        .parse()
        .map_err(|_| ParseError::at(line, tok.column, ParseErrorKind::BadNumber(tok.text.into())))
}

/// Meaningful lines as `(line number, content without comment)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.trim().is_empty())
}

/// Parses the header line; returns the numeric fields after `keyword`.
pub(crate) fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
    fields: usize,
) -> Result<Vec<usize>, ParseError> {
    let (lineno, line) = lines
        .next()
        .ok_or_else(|| ParseError::at(1, 1, ParseErrorKind::MissingHeader))?;
    let toks = tokens(line);
    if toks.first().map(|t| t.text) != Some(keyword) || toks.len() != fields + 1 {
        let column = toks.first().map_or(1, |t| t.column);
        return Err(ParseError::at(
            lineno,
            column,
            ParseErrorKind::BadHeader(format!(
                "expected `{keyword}` followed by {fields} number(s)"
            )),
        ));
    }
    let values = toks[1..]
        .iter()
        .map(|t| number(t, lineno))
        .collect::<Result<Vec<_>, _>>()?;
    if values.contains(&0) {
        return Err(ParseError::at(
            lineno,
            toks[1].column,
            ParseErrorKind::BadHeader("values must be positive".into()),
        ));
    }
    Ok(values)
}

/// Parses body lines into per-vertex lists, checking ids, gender direction
/// (`gender = id mod genders`), duplicates and list length.
pub(crate) fn parse_body<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    genders: usize,
    n: usize,
) -> Result<Vec<Vec<VertexId>>, ParseError> {
    let count = genders * n;
    let mut prefs: Vec<Option<Vec<VertexId>>> = vec![None; count];
    for (lineno, line) in lines {
        let toks = tokens(line);
        let head = &toks[0];
        let Some(vtext) = head.text.strip_suffix(':') else {
            return Err(ParseError::at(
                lineno,
                head.column,
                ParseErrorKind::ExpectedColon,
            ));
        };
        let v = vtext.parse::<usize>().map_err(|_| {
            ParseError::at(lineno, head.column, ParseErrorKind::BadNumber(vtext.into()))
        })?;
        if v >= count {
            return Err(ParseError::at(
                lineno,
                head.column,
                ParseErrorKind::VertexOutOfRange(v),
            ));
        }
        if prefs[v].is_some() {
            return Err(ParseError::at(
                lineno,
                head.column,
                ParseErrorKind::DuplicateVertexLine(v),
            ));
        }
        let mut list = Vec::with_capacity(toks.len() - 1);
        for tok in &toks[1..] {
            let t = number(tok, lineno)?;
            let err = |kind| ParseError::at(lineno, tok.column, kind);
            if t >= count {
                return Err(err(ParseErrorKind::TargetOutOfRange(t)));
            }
            if t % genders != (v + 1) % genders {
                return Err(err(ParseErrorKind::WrongGender {
                    vertex: v,
                    target: t,
                }));
            }
            if list.contains(&VertexId(t)) {
                return Err(err(ParseErrorKind::DuplicateTarget(t)));
            }
            list.push(VertexId(t));
        }
        if list.len() > n {
            return Err(ParseError::at(
                lineno,
                head.column,
                ParseErrorKind::ListTooLong { len: list.len(), n },
            ));
        }
        prefs[v] = Some(list);
    }
    Ok(prefs.into_iter().map(Option::unwrap_or_default).collect())
}

/// Parses a `3dsmi` instance file.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "3dsmi", 1)?[0];
    let prefs = parse_body(lines, GENDERS, n)?;
    Ok(Instance::new(n, prefs).expect("parser enforces every instance invariant"))
}

pub(crate) fn kdsmi_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    content_lines(text)
}
