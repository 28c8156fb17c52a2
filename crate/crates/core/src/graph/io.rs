//! Edge-list text format.
//!
//! ```text
//! # comment
//! 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first meaningful line is the vertex count, then one `u w` pair per
//! line. `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| err(format!("expected a non-negative integer, found {t:?}")))
            };
            match n {
                None => {
                    if tokens.len() != 1 {
                        return Err(err("first line must hold only the vertex count".into()));
                    }
                    n = Some(parse(tokens[0])?);
                }
                Some(count) => {
                    if tokens.len() != 2 {
                        return Err(err(format!("expected \"u w\", found {line:?}")));
                    }
                    let (u, w) = (parse(tokens[0])?, parse(tokens[1])?);
                    if u >= count || w >= count {
                        return Err(err(format!(
                            "edge ({u},{w}) out of range for {count} vertices"
                        )));
                    }
                    if u == w {
                        return Err(err(format!("self-loop at vertex {u}")));
                    }
                    edges.push((u, w, line_no));
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            message: "missing vertex count".into(),
        })?;
        let mut seen = std::collections::HashSet::new();
        for &(u, w, line) in &edges {
            if !seen.insert((u.min(w), u.max(w))) {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate edge ({u},{w})"),
                });
            }
        }
        Graph::new(n, edges.into_iter().map(|(u, w, _)| (u, w)))
    }

    /// Serializes with normalized, sorted edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for e in self.edges() {
            writeln!(out, "{} {}", e.u, e.w).expect("writing to a String cannot fail");
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s)
    }
}
