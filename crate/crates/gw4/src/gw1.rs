//! GW1 text format: UTF-8, line-oriented, `#` comments.
//!
//! ```text
//! point <id> <+|->
//! surface <id> <integer>
//! edge <id> <vid> <vid> <positive-integer>
//! ```
//!
//! Serialization emits points sorted by id, then surfaces sorted by id,
//! then edges sorted by id.

use std::fmt;

use crate::graph::{GraphError, GraphOfWeights, Sign, VertexKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    DuplicateId(String),
    UnknownVertex(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "{msg}"),
            ParseErrorKind::DuplicateId(id) => write!(f, "duplicate id {id}"),
            ParseErrorKind::UnknownVertex(id) => write!(f, "unknown vertex {id}"),
        }
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        kind: ParseErrorKind::Syntax(msg.into()),
    }
}

pub fn parse(text: &str) -> Result<GraphOfWeights, ParseError> {
    let mut g = GraphOfWeights::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let map_err = |e: GraphError| match e {
            GraphError::DuplicateVertex(id) | GraphError::DuplicateEdge(id) => ParseError {
                line,
                kind: ParseErrorKind::DuplicateId(id),
            },
            GraphError::UnknownVertex(id) => ParseError {
                line,
                kind: ParseErrorKind::UnknownVertex(id),
            },
            other => syntax(line, other.to_string()),
        };
        match tokens[0] {
            "point" => {
                if tokens.len() != 3 {
                    return Err(syntax(line, "expected: point <id> <+|->"));
                }
                let sign = match tokens[2] {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => return Err(syntax(line, format!("bad sign {other:?}"))),
                };
                g.add_point(tokens[1], sign).map_err(map_err)?;
            }
            "surface" => {
                if tokens.len() != 3 {
                    return Err(syntax(line, "expected: surface <id> <integer>"));
                }
                let euler: i64 = tokens[2]
                    .parse()
                    .map_err(|_| syntax(line, format!("bad integer {:?}", tokens[2])))?;
                g.add_surface(tokens[1], euler).map_err(map_err)?;
            }
            "edge" => {
                if tokens.len() != 5 {
                    return Err(syntax(line, "expected: edge <id> <vid> <vid> <label>"));
                }
                let label: u64 = tokens[4]
                    .parse()
                    .map_err(|_| syntax(line, format!("bad label {:?}", tokens[4])))?;
                if label == 0 {
                    return Err(syntax(line, "edge label must be a positive integer"));
                }
                g.add_edge(tokens[1], tokens[2], tokens[3], label)
                    .map_err(map_err)?;
            }
            other => return Err(syntax(line, format!("unknown directive {other:?}"))),
        }
    }
    Ok(g)
}

pub fn serialize(g: &GraphOfWeights) -> String {
    let mut out = String::new();
    for (id, kind) in g.vertices() {
        if let VertexKind::Point { sign } = kind {
            out.push_str(&format!("point {id} {sign}\n"));
        }
    }
    for (id, kind) in g.vertices() {
        if let VertexKind::Surface { euler } = kind {
            out.push_str(&format!("surface {id} {euler}\n"));
        }
    }
    for (id, e) in g.edges() {
        out.push_str(&format!("edge {id} {} {} {}\n", e.ends.0, e.ends.1, e.label));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CP2: &str = "\
# graph of weights for the rotation of the projective plane
point p +
surface F 1
edge e1 p F 1
edge e2 p F 1
";

    #[test]
    fn parse_cp2() {
        let g = parse(CP2).unwrap();
        assert!(g.is_valid());
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.point_weights("p").unwrap(), (1, 1));
    }

    #[test]
    fn round_trip() {
        let g = parse(CP2).unwrap();
        let text = serialize(&g);
        assert_eq!(parse(&text).unwrap(), g);
        assert_eq!(serialize(&parse(&text).unwrap()), text);
    }

    #[test]
    fn empty_is_valid() {
        let g = parse("# nothing\n\n").unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert!(g.is_valid());
    }

    #[test]
    fn unknown_vertex_in_edge() {
        let err = parse("point p +\nedge e1 p q 1\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::UnknownVertex("q".into()));
    }

    #[test]
    fn duplicate_id() {
        let err = parse("point p +\npoint p -\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateId("p".into()));
    }

    #[test]
    fn bad_label() {
        assert!(parse("point p +\npoint q -\nedge e p q 0\n").is_err());
    }
}
