//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n m
//! u v        (unweighted)
//! u v w      (weighted, w a decimal literal)
//! ```
//!
//! Node ids are 0-indexed. Graphs whose weights are all 1 serialize in the
//! two-column form; anything else writes all three columns. Weights print
//! with the shortest representation that parses back to the same `f64`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();

        let Some((n, m)) = header else {
            if fields.len() != 2 {
                return Err(err("expected header \"n m\"".into()));
            }
            let n = fields[0]
                .parse()
                .map_err(|_| err(format!("bad node count {:?}", fields[0])))?;
            let m = fields[1]
                .parse()
                .map_err(|_| err(format!("bad edge count {:?}", fields[1])))?;
            header = Some((n, m));
            edges.reserve(m);
            continue;
        };

        if edges.len() == m {
            return Err(err(format!("more than the declared {m} edges")));
        }
        if fields.len() != 2 && fields.len() != 3 {
            return Err(err(format!(
                "expected \"u v\" or \"u v w\", got {} fields",
                fields.len()
            )));
        }
        let node = |s: &str| -> Result<usize> {
            let x: usize = s.parse().map_err(|_| err(format!("bad node id {s:?}")))?;
            if x >= n {
                return Err(err("node id out of range".into()));
            }
            Ok(x)
        };
        let u = node(fields[0])?;
        let v = node(fields[1])?;
        let w = match fields.get(2) {
            Some(s) => s
                .parse::<f64>()
                .map_err(|_| err(format!("bad weight {s:?}")))?,
            None => 1.0,
        };
        if u == v {
            return Err(err(format!("self-loop at node {u}")));
        }
        if w <= 0.0 || !w.is_finite() {
            return Err(err(format!("non-positive weight {w}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(format!("parallel edge ({},{})", u.min(v), u.max(v))));
        }
        edges.push(Edge { u, v, w });
    }

    let Some((n, m)) = header else {
        return Err(Error::Parse {
            line: 1,
            message: "missing header \"n m\"".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("declared {m} edges but found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.m() + 1));
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    let weighted = !g.is_unweighted();
    for e in g.edges() {
        if weighted {
            writeln!(out, "{} {} {}", e.u, e.v, e.w).unwrap();
        } else {
            writeln!(out, "{} {}", e.u, e.v).unwrap();
        }
    }
    out
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_edge_list(&text)
}

pub fn write_edge_list(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    write_text(path, &serialize_edge_list(g))
}

pub(crate) fn write_text(path: impl AsRef<Path>, text: &str) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert!(g.is_unweighted());
    }

    #[test]
    fn parses_weighted() {
        let g = parse_edge_list("3 1\n0 1 2.5\n").unwrap();
        assert_eq!(g.max_weight(), 2.5);
        assert_eq!(serialize_edge_list(&g), "3 1\n0 1 2.5\n");
    }

    #[test]
    fn out_of_range_reports_line() {
        let err = parse_edge_list("3 1\n0 3\n").unwrap_err();
        assert_eq!(err.to_string(), "node id out of range, line 2");
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# hello\n\n4 2\n# mid\n0 1\n\n2 3\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn malformed_lines() {
        for (text, line) in [
            ("3\n", 1),
            ("3 1\n0 1 2 3\n", 2),
            ("3 1\n0 x\n", 2),
            ("3 1\n0 1 -2\n", 2),
            ("3 2\n0 1\n1 0\n", 3),
            ("3 1\n1 1\n", 2),
            ("3 1\n0 1\n1 2\n", 3),
        ] {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("").is_err());
    }
}
