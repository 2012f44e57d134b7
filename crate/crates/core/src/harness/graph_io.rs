use std::collections::HashSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use log::warn;

use crate::error::{Error, Result};
use crate::problems::Graph;

/// On-disk graph formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    /// One whitespace-separated 1-based edge per line, optionally preceded by
    /// an `n m` header. Lines starting with `#` or `%` are comments.
    #[default]
    EdgeList,
    /// Matrix Market coordinate format; only the first two columns are read.
    MatrixMarket,
}

impl GraphFormat {
    pub fn name(&self) -> &'static str {
        match self {
            GraphFormat::EdgeList => "edge_list",
            GraphFormat::MatrixMarket => "matrix_market",
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "edge_list" | "edges" => Ok(GraphFormat::EdgeList),
            "matrix_market" | "mtx" => Ok(GraphFormat::MatrixMarket),
            _ => Err(Error::domain(format!(
                "unknown graph format '{s}' (expected edge_list or matrix_market)"
            ))),
        }
    }
}

/// A parsed graph with the number of dropped input lines.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub duplicate_edges: usize,
    pub self_loops: usize,
}

struct Line<'a> {
    number: usize,
    fields: Vec<&'a str>,
}

fn data_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            None
        } else {
            Some(Line {
                number: i + 1,
                fields: trimmed.split_whitespace().collect(),
            })
        }
    })
}

fn parse_index(source: &str, line: &Line<'_>, field: usize) -> Result<usize> {
    let raw = line.fields.get(field).ok_or_else(|| Error::Parse {
        path: source.to_string(),
        line: line.number,
        msg: format!("expected at least {} fields", field + 1),
    })?;
    raw.parse().map_err(|_| Error::Parse {
        path: source.to_string(),
        line: line.number,
        msg: format!("'{raw}' is not a non-negative integer"),
    })
}

fn parse_edge(source: &str, line: &Line<'_>) -> Result<(usize, usize)> {
    let u = parse_index(source, line, 0)?;
    let v = parse_index(source, line, 1)?;
    if u == 0 || v == 0 {
        return Err(Error::Parse {
            path: source.to_string(),
            line: line.number,
            msg: "vertex indices are 1-based".into(),
        });
    }
    Ok((u - 1, v - 1))
}

fn build(raw: Vec<(usize, usize)>, declared: Option<usize>) -> Result<LoadedGraph> {
    let max_vertex = raw.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(0).max(max_vertex);
    if n == 0 {
        return Err(Error::domain("graph file contains no vertices"));
    }
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let (mut duplicate_edges, mut self_loops) = (0, 0);
    for (u, v) in raw {
        if u == v {
            self_loops += 1;
        } else if seen.insert((u.min(v), u.max(v))) {
            edges.push((u, v));
        } else {
            duplicate_edges += 1;
        }
    }
    Ok(LoadedGraph {
        graph: Graph::new(n, edges)?,
        duplicate_edges,
        self_loops,
    })
}

fn parse_edge_list(source: &str, text: &str) -> Result<LoadedGraph> {
    let lines: Vec<Line<'_>> = data_lines(text).collect();
    // A leading "n m" line is a header when exactly m edges follow and no
    // edge refers to a vertex beyond n.
    let mut declared = None;
    let mut body = &lines[..];
    if let Some(first) = lines.first() {
        if first.fields.len() == 2 {
            let n = parse_index(source, first, 0)?;
            let m = parse_index(source, first, 1)?;
            if m == lines.len() - 1 {
                let rest = lines[1..]
                    .iter()
                    .map(|l| parse_edge(source, l))
                    .collect::<Result<Vec<_>>>();
                if let Ok(rest) = rest {
                    if rest.iter().all(|&(u, v)| u < n && v < n) {
                        declared = Some(n);
                        body = &lines[1..];
                    }
                }
            }
        }
    }
    let raw = body
        .iter()
        .map(|l| parse_edge(source, l))
        .collect::<Result<Vec<_>>>()?;
    build(raw, declared)
}

fn parse_matrix_market(source: &str, text: &str) -> Result<LoadedGraph> {
    let banner = text.lines().next().unwrap_or_default().to_ascii_lowercase();
    if !banner.starts_with("%%matrixmarket") {
        return Err(Error::Parse {
            path: source.to_string(),
            line: 1,
            msg: "missing %%MatrixMarket banner".into(),
        });
    }
    if !banner.contains("coordinate") {
        return Err(Error::Parse {
            path: source.to_string(),
            line: 1,
            msg: "only coordinate matrices are supported".into(),
        });
    }
    let mut lines = data_lines(text);
    let size = lines.next().ok_or_else(|| Error::domain("graph file contains no vertices"))?;
    let rows = parse_index(source, &size, 0)?;
    let cols = parse_index(source, &size, 1)?;
    let nnz = parse_index(source, &size, 2)?;
    let mut raw = Vec::with_capacity(nnz);
    for line in lines {
        let (u, v) = parse_edge(source, &line)?;
        if u >= rows || v >= cols {
            return Err(Error::Parse {
                path: source.to_string(),
                line: line.number,
                msg: format!("entry outside the declared {rows} x {cols} matrix"),
            });
        }
        raw.push((u, v));
    }
    if raw.len() != nnz {
        return Err(Error::Parse {
            path: source.to_string(),
            line: size.number,
            msg: format!("declared {nnz} entries but found {}", raw.len()),
        });
    }
    build(raw, Some(rows.max(cols)))
}

/// Parses graph text; `source` names the input in error messages.
pub fn parse_graph(text: &str, format: GraphFormat, source: &str) -> Result<LoadedGraph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(source, text),
        GraphFormat::MatrixMarket => parse_matrix_market(source, text),
    }
}

/// Reads a simple undirected graph; duplicate edges and self-loops are
/// dropped and logged.
pub fn load_graph(path: impl AsRef<Path>, format: GraphFormat) -> Result<LoadedGraph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let loaded = parse_graph(&text, format, &path.display().to_string())?;
    if loaded.duplicate_edges > 0 || loaded.self_loops > 0 {
        warn!(
            "{}: dropped {} duplicate edges and {} self-loops",
            path.display(),
            loaded.duplicate_edges,
            loaded.self_loops
        );
    }
    Ok(loaded)
}

/// Writes `graph` as a 1-based edge list with an `n m` header.
pub fn write_edge_list(graph: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut out = format!("{} {}\n", graph.n_vertices(), graph.n_edges());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    std::fs::write(path, out).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(text: &str) -> LoadedGraph {
        parse_graph(text, GraphFormat::EdgeList, "test").unwrap()
    }

    #[test]
    fn plain_edge_list() {
        let g = edges("1 2\n2 3\n");
        assert_eq!(g.graph.n_vertices(), 3);
        assert_eq!(g.graph.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn duplicates_and_loops_are_counted() {
        let g = edges("1 2\n1 2\n2 1\n3 3\n");
        assert_eq!(g.graph.n_edges(), 1);
        assert_eq!(g.duplicate_edges, 2);
        assert_eq!(g.self_loops, 1);
        assert_eq!(g.graph.n_vertices(), 3);
    }

    #[test]
    fn header_adds_isolated_vertices() {
        let g = edges("5 2\n1 2\n2 3\n");
        assert_eq!(g.graph.n_vertices(), 5);
        assert_eq!(g.graph.n_edges(), 2);
        // Not a header: the edge count does not match.
        let g = edges("5 1\n1 2\n2 3\n");
        assert_eq!(g.graph.n_vertices(), 5);
        assert_eq!(g.graph.n_edges(), 3);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_graph("1 2\n\n2 x\n", GraphFormat::EdgeList, "g.txt") {
            Err(Error::Parse { line, path, .. }) => {
                assert_eq!(line, 3);
                assert_eq!(path, "g.txt");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_graph("0 1\n", GraphFormat::EdgeList, "g"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn empty_graph_is_a_domain_error() {
        assert!(matches!(
            parse_graph("# nothing\n", GraphFormat::EdgeList, "g"),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn matrix_market_matches_edge_list() {
        let pairs = [
            (1, 2),
            (1, 3),
            (2, 4),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 1),
            (2, 7),
        ];
        let mut list = String::new();
        let mut mtx = String::from(
            "%%MatrixMarket matrix coordinate pattern symmetric\n% comment\n8 8 10\n",
        );
        for (u, v) in pairs {
            list.push_str(&format!("{u} {v}\n"));
            // Lower triangle, as symmetric files store it.
            mtx.push_str(&format!("{} {}\n", u.max(v), u.min(v)));
        }
        let a = parse_graph(&list, GraphFormat::EdgeList, "a").unwrap();
        let b = parse_graph(&mtx, GraphFormat::MatrixMarket, "b").unwrap();
        assert_eq!(a.graph.n_vertices(), b.graph.n_vertices());
        let norm = |g: &Graph| {
            let mut e: Vec<_> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
            e.sort_unstable();
            e
        };
        assert_eq!(norm(&a.graph), norm(&b.graph));
    }

    #[test]
    fn matrix_market_entry_count_checked() {
        let text = "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n2 1\n";
        assert!(matches!(
            parse_graph(text, GraphFormat::MatrixMarket, "m"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.txt");
        let g = Graph::new(6, vec![(0, 1), (2, 3)]).unwrap();
        write_edge_list(&g, &path).unwrap();
        assert_eq!(load_graph(&path, GraphFormat::EdgeList).unwrap().graph, g);
    }
}
