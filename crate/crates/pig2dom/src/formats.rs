//! Instance files.
//!
//! Three dialects, chosen by the header line:
//!
//! ```text
//! straight n      body: n whitespace-separated 1-based reach values
//! intervals n     body: n lines `left right` (decimal)
//! edges n m       body: m lines `u v` (1-based)
//! ```
//!
//! `#` starts a comment that runs to the end of the line.  The straight
//! dialect round-trips losslessly through parse -> serialize.

use std::fmt::Write as _;

use thiserror::Error;

use crate::straight::{GraphError, StraightGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dialect {
    Straight,
    Intervals,
    Edges,
}

impl Dialect {
    pub fn keyword(self) -> &'static str {
        match self {
            Dialect::Straight => "straight",
            Dialect::Intervals => "intervals",
            Dialect::Edges => "edges",
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: expected dialect {expected}, found {found}")]
    DialectMismatch {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed instance.  For the intervals and edges dialects, `permutation`
/// maps internal vertex `k+1` to its 1-based position in the input.
#[derive(Debug)]
pub struct ParsedInstance {
    pub graph: StraightGraph,
    pub dialect: Dialect,
    pub permutation: Option<Vec<usize>>,
}

impl ParsedInstance {
    /// Internal labels back to input labels.
    pub fn to_input_label(&self, v: usize) -> usize {
        match &self.permutation {
            Some(p) => p[v - 1],
            None => v,
        }
    }

    /// Input labels to internal labels; `None` when out of range.
    pub fn to_internal_label(&self, v: usize) -> Option<usize> {
        if v == 0 || v > self.graph.n() {
            return None;
        }
        match &self.permutation {
            Some(p) => p.iter().position(|&x| x == v).map(|k| k + 1),
            None => Some(v),
        }
    }
}

struct Token<'a> {
    text: &'a str,
    line: usize,
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        for word in body.split_whitespace() {
            out.push(Token {
                text: word,
                line: idx + 1,
            });
        }
    }
    out
}

fn parse_usize(t: &Token<'_>, what: &str) -> Result<usize, ParseError> {
    t.text.parse().map_err(|_| ParseError::Syntax {
        line: t.line,
        msg: format!("expected {what}, found {:?}", t.text),
    })
}

fn parse_f64(t: &Token<'_>, what: &str) -> Result<f64, ParseError> {
    let v: f64 = t.text.parse().map_err(|_| ParseError::Syntax {
        line: t.line,
        msg: format!("expected {what}, found {:?}", t.text),
    })?;
    if !v.is_finite() {
        return Err(ParseError::Syntax {
            line: t.line,
            msg: format!("non-finite {what}"),
        });
    }
    Ok(v)
}

/// Parses an instance, dispatching on the header keyword unless a dialect is
/// forced.
pub fn parse_instance(text: &str, forced: Option<Dialect>) -> Result<ParsedInstance, ParseError> {
    let tokens = tokenize(text);
    let mut pos = 0usize;
    let next = |pos: &mut usize, what: &str| -> Result<&Token<'_>, ParseError> {
        let t = tokens.get(*pos).ok_or_else(|| ParseError::Syntax {
            line: text.lines().count().max(1),
            msg: format!("unexpected end of input, expected {what}"),
        })?;
        *pos += 1;
        Ok(t)
    };

    let head = next(&mut pos, "dialect keyword")?;
    let dialect = match head.text {
        "straight" => Dialect::Straight,
        "intervals" => Dialect::Intervals,
        "edges" => Dialect::Edges,
        other => {
            return Err(ParseError::Syntax {
                line: head.line,
                msg: format!("unknown dialect {other:?}"),
            })
        }
    };
    if let Some(expected) = forced {
        if expected != dialect {
            return Err(ParseError::DialectMismatch {
                line: head.line,
                expected: expected.keyword(),
                found: dialect.keyword().to_string(),
            });
        }
    }

    let n = parse_usize(next(&mut pos, "vertex count")?, "vertex count")?;
    let instance = match dialect {
        Dialect::Straight => {
            let mut reach = Vec::with_capacity(n);
            for _ in 0..n {
                reach.push(parse_usize(next(&mut pos, "reach value")?, "reach value")?);
            }
            ParsedInstance {
                graph: StraightGraph::from_reach(n, &reach)?,
                dialect,
                permutation: None,
            }
        }
        Dialect::Intervals => {
            let mut pairs = Vec::with_capacity(n);
            for _ in 0..n {
                let l = parse_f64(next(&mut pos, "left endpoint")?, "left endpoint")?;
                let r = parse_f64(next(&mut pos, "right endpoint")?, "right endpoint")?;
                pairs.push((l, r));
            }
            let (graph, perm) = StraightGraph::from_intervals(&pairs)?;
            ParsedInstance {
                graph,
                dialect,
                permutation: Some(perm),
            }
        }
        Dialect::Edges => {
            let m = parse_usize(next(&mut pos, "edge count")?, "edge count")?;
            let mut edges = Vec::with_capacity(m);
            for _ in 0..m {
                let u = parse_usize(next(&mut pos, "edge endpoint")?, "edge endpoint")?;
                let v = parse_usize(next(&mut pos, "edge endpoint")?, "edge endpoint")?;
                edges.push((u, v));
            }
            let (graph, ordering) = StraightGraph::from_adjacency(n, &edges)?;
            ParsedInstance {
                graph,
                dialect,
                permutation: Some(ordering),
            }
        }
    };
    if let Some(t) = tokens.get(pos) {
        return Err(ParseError::Syntax {
            line: t.line,
            msg: format!("trailing input {:?}", t.text),
        });
    }
    Ok(instance)
}

/// Canonical straight-dialect form.
pub fn serialize_straight(g: &StraightGraph) -> String {
    let mut out = format!("straight {}\n", g.n());
    if g.n() > 0 {
        let words: Vec<String> = g.reach_slice().iter().map(|r| r.to_string()).collect();
        let _ = writeln!(out, "{}", words.join(" "));
    }
    out
}

/// Intervals-dialect form of an explicit family.
pub fn serialize_intervals(pairs: &[(f64, f64)]) -> String {
    let mut out = format!("intervals {}\n", pairs.len());
    for (l, r) in pairs {
        let _ = writeln!(out, "{l} {r}");
    }
    out
}
