//! Text formats: edge lists, labelings, and DOT.
//!
//! Edge list: header `n m`, then `m` lines `u v`. Labels: line `v` holds the
//! label of vertex `v`. In both, `#` starts a comment line and blank lines
//! are skipped.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{verify, Graph, Labeling};

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<const N: usize>(line: usize, s: &str) -> Result<[usize; N]> {
    let fields: Vec<&str> = s.split_whitespace().collect();
    if fields.len() != N {
        return Err(Error::parse(line, format!("expected {N} integers, got `{s}`")));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| Error::parse(line, format!("`{f}` is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let [n, m] = parse_fields::<2>(hline, header)?;
    if n == 0 {
        return Err(Error::parse(hline, "graph needs at least one vertex"));
    }
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, s) in lines {
        last_line = line;
        let [u, v] = parse_fields::<2>(line, s)?;
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::parse(line, format!("endpoint outside 1..={n}")));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at {u}")));
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(Error::parse(line, format!("duplicate edge {} {}", e.0, e.1)));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses a labels file. Values are not checked for bijectivity here; use
/// [`Labeling::new`] for that.
pub fn parse_label_values(text: &str) -> Result<Vec<usize>> {
    content_lines(text)
        .map(|(line, s)| parse_fields::<1>(line, s).map(|[x]| x))
        .collect()
}

/// Parses and validates a labels file.
pub fn parse_labels(text: &str) -> Result<Labeling> {
    Labeling::new(parse_label_values(text)?)
}

pub fn write_labels(f: &Labeling) -> String {
    let mut out = String::with_capacity(f.len() * 4);
    for l in f.as_slice() {
        let _ = writeln!(out, "{l}");
    }
    out
}

/// Undirected DOT. With a labeling, nodes show `v:f(v)` and vertices whose
/// neighborhood gcd exceeds 1 are filled red.
pub fn write_dot(g: &Graph, f: Option<&Labeling>) -> Result<String> {
    let bad: HashSet<usize> = match f {
        Some(f) => verify(g, f)?.violations.iter().map(|v| v.vertex).collect(),
        None => HashSet::new(),
    };
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let text = match f {
            Some(f) => format!("{v}:{}", f.label(v)),
            None => v.to_string(),
        };
        let style = if bad.contains(&v) {
            ", style=filled, fillcolor=red"
        } else {
            ""
        };
        let _ = writeln!(out, "  {v} [label=\"{text}\"{style}];");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    Ok(out)
}
