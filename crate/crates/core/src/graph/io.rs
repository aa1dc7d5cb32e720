use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::path::Path;

use super::{Digraph, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// Whitespace-separated `u v` lines; `#` and `%` start comments. A third
    /// numeric column (weight) is tolerated and ignored.
    Snap,
    /// 9th DIMACS challenge `.gr`: `c` comments, one `p sp n m`, arcs `a u v w`.
    Dimacs,
}

impl GraphFormat {
    /// `.gr` means DIMACS, anything else SNAP.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("gr") => GraphFormat::Dimacs,
            _ => GraphFormat::Snap,
        }
    }
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "snap" => Ok(GraphFormat::Snap),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(Error::Format(format!("unknown graph format {other:?}"))),
        }
    }
}

/// First-appearance relabelling of source-file ids.
#[derive(Default)]
struct Relabel {
    index: HashMap<u64, usize>,
    ids: Vec<u64>,
}

impl Relabel {
    fn get(&mut self, id: u64) -> Vertex {
        *self.index.entry(id).or_insert_with(|| {
            self.ids.push(id);
            self.ids.len() - 1
        })
    }
}

fn parse_id(tok: Option<&str>, line: usize, what: &str) -> Result<u64> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse::<u64>().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what} {tok:?}"),
    })
}

/// Parses a graph. Vertices are relabelled densely in order of first
/// appearance; duplicate edges and self-loops are kept. The returned graph
/// carries the original labels (see [`Digraph::original_ids`]).
pub fn parse_graph<R: BufRead>(reader: R, format: GraphFormat) -> Result<Digraph> {
    match format {
        GraphFormat::Snap => parse_snap(reader),
        GraphFormat::Dimacs => parse_dimacs(reader),
    }
}

fn parse_snap<R: BufRead>(reader: R) -> Result<Digraph> {
    let mut labels = Relabel::default();
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') || body.starts_with('%') {
            continue;
        }
        let mut toks = body.split_whitespace();
        let u = parse_id(toks.next(), lineno, "source vertex")?;
        let v = parse_id(toks.next(), lineno, "target vertex")?;
        if let Some(w) = toks.next() {
            if w.parse::<f64>().is_err() || toks.next().is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    message: "expected `u v` or `u v weight`".into(),
                });
            }
        }
        let (u, v) = (labels.get(u), labels.get(v));
        edges.push((u, v));
    }
    Ok(Digraph::from_edges(labels.ids.len(), &edges).with_original_ids(labels.ids))
}

fn parse_dimacs<R: BufRead>(reader: R) -> Result<Digraph> {
    let mut labels = Relabel::default();
    let mut header: Option<(u64, usize)> = None;
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let body = line.trim();
        let mut toks = body.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::Format(format!("second problem line at line {lineno}")));
                }
                if toks.next() != Some("sp") {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "expected `p sp n m`".into(),
                    });
                }
                let n = parse_id(toks.next(), lineno, "vertex count")?;
                let m = parse_id(toks.next(), lineno, "arc count")? as usize;
                header = Some((n, m));
            }
            Some("a") => {
                let (n, _) = header.ok_or_else(|| {
                    Error::Format(format!("arc before problem line at line {lineno}"))
                })?;
                let u = parse_id(toks.next(), lineno, "arc tail")?;
                let v = parse_id(toks.next(), lineno, "arc head")?;
                // weight is validated and discarded
                if !toks.next().is_some_and(|w| w.parse::<f64>().is_ok()) {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "missing or invalid arc weight".into(),
                    });
                }
                for id in [u, v] {
                    if id == 0 || id > n {
                        return Err(Error::Format(format!(
                            "vertex {id} at line {lineno} outside 1..={n}"
                        )));
                    }
                }
                edges.push((labels.get(u), labels.get(v)));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("unknown line type {other:?}"),
                })
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Format("missing problem line".into()))?;
    if edges.len() != m {
        return Err(Error::Format(format!(
            "header declares {m} arcs, file has {}",
            edges.len()
        )));
    }
    // vertices that never occur in an arc keep the header's vertex count
    for id in 1..=n {
        labels.get(id);
    }
    Ok(Digraph::from_edges(labels.ids.len(), &edges).with_original_ids(labels.ids))
}

/// Writes `g` as a SNAP edge list using original labels when present.
pub fn write_snap<W: Write>(g: &Digraph, mut out: W) -> Result<()> {
    writeln!(out, "# Nodes: {} Edges: {}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{}\t{}", g.label(u), g.label(v))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &Digraph) -> Vec<(Vertex, Vertex)> {
        g.edges().collect()
    }

    #[test]
    fn snap_two_lines() {
        let g = parse_graph("# c\n1 2\n2 1\n".as_bytes(), GraphFormat::Snap).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 2));
        assert_eq!(edges(&g), vec![(0, 1), (1, 0)]);
        assert_eq!(g.original_ids(), Some(&[1u64, 2][..]));
    }

    #[test]
    fn snap_keeps_duplicates_and_loops_with_crlf() {
        let g = parse_graph("7\t9\r\n7 9\r\n9 9\r\n".as_bytes(), GraphFormat::Snap).unwrap();
        assert_eq!(edges(&g), vec![(0, 1), (0, 1), (1, 1)]);
    }

    #[test]
    fn snap_errors_carry_line() {
        let err = parse_graph("1 2\nx 3\n".as_bytes(), GraphFormat::Snap).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("1\n".as_bytes(), GraphFormat::Snap).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn dimacs_header_echo() {
        let g = parse_graph("p sp 3 2\na 1 2 5\na 2 3 1\n".as_bytes(), GraphFormat::Dimacs).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
        assert_eq!(edges(&g), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn dimacs_inconsistent_counts() {
        let err = parse_graph("p sp 3 3\na 1 2 5\n".as_bytes(), GraphFormat::Dimacs).unwrap_err();
        assert!(matches!(err, Error::Format(_)));
        let err = parse_graph("p sp 2 1\na 1 3 5\n".as_bytes(), GraphFormat::Dimacs).unwrap_err();
        assert!(matches!(err, Error::Format(_)));
        let err = parse_graph("c x\na 1 2 3\n".as_bytes(), GraphFormat::Dimacs).unwrap_err();
        assert!(matches!(err, Error::Format(_)));
    }

    #[test]
    fn dimacs_unused_vertices_are_kept() {
        let g = parse_graph("p sp 4 1\na 3 1 1\n".as_bytes(), GraphFormat::Dimacs).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.original_ids(), Some(&[3u64, 1, 2, 4][..]));
    }

    #[test]
    fn snap_roundtrip_with_labels() {
        let g = parse_graph("10 20\n20 30\n30 10\n".as_bytes(), GraphFormat::Snap).unwrap();
        let mut buf = Vec::new();
        write_snap(&g, &mut buf).unwrap();
        let back = parse_graph(&buf[..], GraphFormat::Snap).unwrap();
        assert_eq!(back, g);
    }
}
