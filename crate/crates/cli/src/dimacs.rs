//! DIMACS edge format: `c` comment lines, one `p edge N M` header, then `M`
//! lines `e u v` with 1-based vertex ids.

use std::fmt::Write as _;

use distgirth_core::Graph;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct DimacsError {
    pub line: usize,
    pub kind: ErrorKind,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ErrorKind {
    #[error("missing `p edge N M` header")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed header, expected `p edge N M`")]
    BadHeader,
    #[error("edge line before header")]
    EdgeBeforeHeader,
    #[error("malformed edge line, expected `e u v`")]
    BadEdge,
    #[error("vertex {0} outside 1..={1}")]
    VertexRange(u64, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(u64, u64),
    #[error("unknown line type `{0}`")]
    UnknownLine(String),
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

/// A parsed DIMACS file. Comments are kept so that writing a parsed file
/// reproduces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dimacs {
    pub comments: Vec<String>,
    pub graph: Graph,
}

impl Dimacs {
    pub fn new(graph: Graph) -> Self {
        Dimacs {
            comments: Vec::new(),
            graph,
        }
    }

    pub fn with_comment(mut self, c: impl Into<String>) -> Self {
        self.comments.push(c.into());
        self
    }
}

pub fn parse(text: &str) -> Result<Dimacs, DimacsError> {
    let mut comments = Vec::new();
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let err = |kind| DimacsError { line, kind };
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut words = trimmed.split_whitespace();
        match words.next().unwrap() {
            "c" => comments.push(trimmed.strip_prefix('c').unwrap().trim_start().to_string()),
            "p" => {
                if header.is_some() {
                    return Err(err(ErrorKind::DuplicateHeader));
                }
                let fields: Vec<&str> = words.collect();
                let [kind, n, m] = fields[..] else {
                    return Err(err(ErrorKind::BadHeader));
                };
                if kind != "edge" && kind != "col" {
                    return Err(err(ErrorKind::BadHeader));
                }
                let (Ok(n), Ok(m)) = (n.parse(), m.parse()) else {
                    return Err(err(ErrorKind::BadHeader));
                };
                header = Some((n, m, line));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(err(ErrorKind::EdgeBeforeHeader));
                };
                let fields: Vec<&str> = words.collect();
                let [u, v] = fields[..] else {
                    return Err(err(ErrorKind::BadEdge));
                };
                let (Ok(u), Ok(v)) = (u.parse::<u64>(), v.parse::<u64>()) else {
                    return Err(err(ErrorKind::BadEdge));
                };
                for x in [u, v] {
                    if x == 0 || x > n as u64 {
                        return Err(err(ErrorKind::VertexRange(x, n)));
                    }
                }
                if u == v {
                    return Err(err(ErrorKind::SelfLoop(u)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(ErrorKind::DuplicateEdge(u, v)));
                }
                edges.push(((u - 1) as u32, (v - 1) as u32));
            }
            other => return Err(err(ErrorKind::UnknownLine(other.to_string()))),
        }
    }
    let Some((n, m, header_line)) = header else {
        return Err(DimacsError {
            line: last_line.max(1),
            kind: ErrorKind::MissingHeader,
        });
    };
    if edges.len() != m {
        return Err(DimacsError {
            line: header_line,
            kind: ErrorKind::EdgeCount {
                expected: m,
                found: edges.len(),
            },
        });
    }
    let graph = Graph::from_edges(n, edges).expect("edges validated above");
    Ok(Dimacs { comments, graph })
}

/// Writes comments, header and edges in canonical `(u < v)` order.
pub fn write(d: &Dimacs) -> String {
    let mut out = String::new();
    for c in &d.comments {
        if c.is_empty() {
            out.push_str("c\n");
        } else {
            writeln!(out, "c {c}").unwrap();
        }
    }
    writeln!(
        out,
        "p edge {} {}",
        d.graph.vertex_count(),
        d.graph.edge_count()
    )
    .unwrap();
    for (u, v) in d.graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
