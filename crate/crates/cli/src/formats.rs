//! On-disk hypergraph formats.
//!
//! Two formats, both canonical on output:
//!
//! - `lines`: `#` starts a comment, the first significant line is the vertex
//!   count, every following non-empty line is one edge as whitespace-separated
//!   1-based vertex ids.
//! - `json`: `{"n": <int>, "edges": [[...], ...]}`.
//!
//! Parse errors carry the 1-based source line (or the JSON parser position).

use std::collections::BTreeMap;
use std::fmt;

use hyperspec_core::{Hypergraph, ModelError, Vertex};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Auto,
    Lines,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParseError {
    Syntax {
        line: usize,
        message: String,
    },
    EmptyEdge {
        line: usize,
    },
    VertexOutOfRange {
        line: usize,
        vertex: Vertex,
        n: usize,
    },
    RepeatedVertex {
        line: usize,
        vertex: Vertex,
    },
    DuplicateEdge {
        line: usize,
        first_line: usize,
    },
    Model(ModelError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            ParseError::EmptyEdge { line } => write!(f, "line {line}: empty edge"),
            ParseError::VertexOutOfRange { line, vertex, n } => {
                write!(f, "line {line}: vertex {vertex} out of range 1..={n}")
            }
            ParseError::RepeatedVertex { line, vertex } => {
                write!(f, "line {line}: vertex {vertex} repeated within the edge")
            }
            ParseError::DuplicateEdge { line, first_line } => {
                write!(f, "line {line}: duplicate of the edge on line {first_line}")
            }
            ParseError::Model(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<ModelError> for ParseError {
    fn from(e: ModelError) -> Self {
        ParseError::Model(e)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonHypergraph {
    n: usize,
    edges: Vec<Vec<Vertex>>,
}

pub fn parse_hypergraph(text: &str, format: Format) -> Result<Hypergraph, ParseError> {
    let format = match format {
        Format::Auto => {
            if text.trim_start().starts_with('{') {
                Format::Json
            } else {
                Format::Lines
            }
        }
        f => f,
    };
    match format {
        Format::Lines => parse_lines(text),
        Format::Json => parse_json(text),
        Format::Auto => unreachable!(),
    }
}

fn parse_lines(text: &str) -> Result<Hypergraph, ParseError> {
    let mut n: Option<(usize, usize)> = None; // (value, line)
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    // Canonical edge -> first line, for duplicate reporting.
    let mut seen: BTreeMap<Vec<Vertex>, usize> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if n.is_none() {
            let value: usize = content.parse().map_err(|_| ParseError::Syntax {
                line: line_no,
                message: format!("expected the vertex count, found {content:?}"),
            })?;
            if value == 0 {
                return Err(ParseError::Syntax {
                    line: line_no,
                    message: "vertex count must be positive".into(),
                });
            }
            n = Some((value, line_no));
            continue;
        }
        let (n_val, _) = n.unwrap();
        let mut edge: Vec<Vertex> = Vec::new();
        for token in content.split_whitespace() {
            let v: usize = token.parse().map_err(|_| ParseError::Syntax {
                line: line_no,
                message: format!("expected a vertex id, found {token:?}"),
            })?;
            if v == 0 || v > n_val {
                return Err(ParseError::VertexOutOfRange {
                    line: line_no,
                    vertex: v,
                    n: n_val,
                });
            }
            edge.push(v);
        }
        if edge.is_empty() {
            return Err(ParseError::EmptyEdge { line: line_no });
        }
        let mut canon = edge.clone();
        canon.sort_unstable();
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(ParseError::RepeatedVertex {
                    line: line_no,
                    vertex: w[0],
                });
            }
        }
        if let Some(&first_line) = seen.get(&canon) {
            return Err(ParseError::DuplicateEdge {
                line: line_no,
                first_line,
            });
        }
        seen.insert(canon, line_no);
        edges.push(edge);
    }

    let Some((n_val, _)) = n else {
        return Err(ParseError::Syntax {
            line: 1,
            message: "missing the vertex count".into(),
        });
    };
    Ok(Hypergraph::new(n_val, edges)?)
}

fn parse_json(text: &str) -> Result<Hypergraph, ParseError> {
    let parsed: JsonHypergraph = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        message: e.to_string(),
    })?;
    // Pre-check for line-less structured errors so the messages match the
    // lines format (the JSON parser has no per-edge source positions).
    for (i, edge) in parsed.edges.iter().enumerate() {
        if edge.is_empty() {
            return Err(ParseError::EmptyEdge { line: i + 1 });
        }
    }
    Ok(Hypergraph::new(parsed.n, parsed.edges)?)
}

/// Canonical `lines` serialization.
pub fn to_lines(h: &Hypergraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", h.vertex_count()));
    for e in h.edges() {
        let ids: Vec<String> = e.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

/// Canonical JSON serialization.
pub fn to_json(h: &Hypergraph) -> String {
    let doc = JsonHypergraph {
        n: h.vertex_count(),
        edges: h.edges().iter().map(|e| e.vertices().to_vec()).collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

/// FNV-1a over the canonical serialization; stable content digest.
pub fn digest(h: &Hypergraph) -> String {
    let canon = to_lines(h);
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in canon.as_bytes() {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("fnv1a64:{hash:016x}")
}
