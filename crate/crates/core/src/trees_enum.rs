//! Non-isomorphic free trees and the exhaustive conjecture scan over them.
//!
//! The primary enumerator walks canonical level sequences of rooted trees
//! (Beyer-Hedetniemi successor) and keeps exactly the rooted trees whose
//! root encoding equals the free tree's center-rooted AHU form. Two
//! independent generators (Prüfer enumeration and leaf extension, both
//! deduplicated by AHU form) exist to cross-check the counts.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::prufer_decode;
use crate::graph::{is_tree, Graph, Vertex};
use crate::search::{find_labeling, SearchConfig, StatusKind};

pub const MAX_ENUMERATION_N: usize = 18;

/// AHU string of `t` rooted at `root`: `(` + sorted child strings + `)`.
pub fn rooted_encoding(t: &Graph, root: Vertex) -> String {
    let n = t.vertex_count();
    let mut parent = vec![0; n + 1];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = usize::MAX;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in t.neighbors(v) {
            if w != parent[v] {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<Vec<String>> = vec![Vec::new(); n + 1];
    let mut root_code = String::new();
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut codes[v]);
        kids.sort_unstable();
        let mut code = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        code.push('(');
        for k in &kids {
            code.push_str(k);
        }
        code.push(')');
        if v == root {
            root_code = code;
        } else {
            codes[parent[v]].push(code);
        }
    }
    root_code
}

/// One or two centers, by repeatedly stripping leaves.
pub fn tree_centers(t: &Graph) -> Vec<Vertex> {
    let n = t.vertex_count();
    if n <= 2 {
        return t.vertices().collect();
    }
    let mut degree: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { t.degree(v) }).collect();
    let mut layer: Vec<Vertex> = t.vertices().filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in t.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Canonical string of a free tree: the smaller AHU encoding over its
/// centers. Equal strings iff isomorphic trees.
pub fn ahu_canonical(t: &Graph) -> Result<String> {
    if !is_tree(t) {
        return Err(Error::Usage("ahu_canonical needs a tree".into()));
    }
    Ok(tree_centers(t)
        .into_iter()
        .map(|c| rooted_encoding(t, c))
        .min()
        .expect("a tree has a center"))
}

/// Canonical level sequences of rooted trees on `n` nodes (root at level 0),
/// in decreasing lexicographic order, one per rooted isomorphism class.
pub struct LevelSequences {
    levels: Vec<usize>,
    done: bool,
}

impl LevelSequences {
    pub fn new(n: usize) -> Self {
        LevelSequences {
            levels: (0..n).collect(),
            done: n == 0,
        }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.levels.clone();
        let l = &mut self.levels;
        match (1..l.len()).rev().find(|&i| l[i] != 1) {
            None => self.done = true,
            Some(p) => {
                let q = (0..p).rev().find(|&i| l[i] == l[p] - 1).expect("parent exists");
                let shift = p - q;
                for i in p..l.len() {
                    l[i] = l[i - shift];
                }
            }
        }
        Some(current)
    }
}

/// Rooted tree (root = vertex 1, preorder numbering) from a level sequence.
pub fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut last_at = vec![0usize; levels.len() + 1];
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (i, &lvl) in levels.iter().enumerate() {
        let v = i + 1;
        if lvl > 0 {
            edges.push((last_at[lvl - 1], v));
        }
        last_at[lvl] = v;
    }
    Graph::new(levels.len(), edges).expect("level sequence encodes a tree")
}

fn check_range(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::Usage(format!("tree size must be in 1..={max}, got {n}")));
    }
    Ok(())
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn enumerate_free_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_range(n, MAX_ENUMERATION_N)?;
    Ok(LevelSequences::new(n).filter_map(|levels| {
        let t = tree_from_levels(&levels);
        let canonical = ahu_canonical(&t).expect("tree");
        (rooted_encoding(&t, 1) == canonical).then_some(t)
    }))
}

pub const PRUFER_MAX_N: usize = 9;

/// Cross-check generator: decode all `n^(n-2)` Prüfer sequences and keep one
/// tree per AHU form. Sorted by canonical string.
pub fn free_trees_by_prufer(n: usize) -> Result<Vec<Graph>> {
    check_range(n, PRUFER_MAX_N)?;
    if n <= 2 {
        return Ok(vec![Graph::new(n, (n == 2).then_some((1, 2)))?]);
    }
    let mut classes = BTreeMap::new();
    let mut seq = vec![1; n - 2];
    loop {
        let t = prufer_decode(n, &seq);
        classes.entry(ahu_canonical(&t)?).or_insert(t);
        // odometer over 1..=n
        let mut i = 0;
        while i < seq.len() && seq[i] == n {
            seq[i] = 1;
            i += 1;
        }
        if i == seq.len() {
            break;
        }
        seq[i] += 1;
    }
    Ok(classes.into_values().collect())
}

/// Cross-check generator: every tree on `n` vertices is a tree on `n - 1`
/// vertices plus a leaf. Sorted by canonical string.
pub fn free_trees_by_leaf_extension(n: usize) -> Result<Vec<Graph>> {
    check_range(n, MAX_ENUMERATION_N)?;
    let mut level = vec![Graph::new(1, [])?];
    for size in 2..=n {
        let mut classes = BTreeMap::new();
        for t in &level {
            for v in t.vertices() {
                let grown = Graph::new(size, t.edges().iter().copied().chain([(v, size)]))?;
                classes.entry(ahu_canonical(&grown)?).or_insert(grown);
            }
        }
        level = classes.into_values().collect();
    }
    Ok(level)
}

/// A tree for which the search proved no labeling exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub canonical: String,
    pub tree: Graph,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SizeRow {
    pub n: usize,
    pub tree_count: usize,
    pub solved_count: usize,
    pub failures: Vec<Counterexample>,
    /// Canonical forms of trees where the budget ran out.
    pub inconclusive: Vec<String>,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct ConjectureReport {
    pub rows: Vec<SizeRow>,
}

impl ConjectureReport {
    /// True when no scanned tree was shown to lack a labeling.
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.failures.is_empty())
    }

    pub fn inconclusive_count(&self) -> usize {
        self.rows.iter().map(|r| r.inconclusive.len()).sum()
    }

    pub fn tree_counts(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.tree_count).collect()
    }

    pub fn table_header() -> String {
        format!(
            "{:>3} {:>8} {:>8} {:>7} {:>13} {:>9}\n",
            "n", "trees", "solved", "failed", "inconclusive", "seconds"
        )
    }

    pub fn table_row(r: &SizeRow) -> String {
        format!(
            "{:>3} {:>8} {:>8} {:>7} {:>13} {:>9.3}\n",
            r.n,
            r.tree_count,
            r.solved_count,
            r.failures.len(),
            r.inconclusive.len(),
            r.seconds
        )
    }

    pub fn render_table(&self) -> String {
        let mut out = Self::table_header();
        for r in &self.rows {
            out.push_str(&Self::table_row(r));
        }
        out
    }
}

/// Runs the search over every tree on `n` vertices. Searches run in
/// parallel on the current rayon pool; the row does not depend on order.
pub fn scan_size(n: usize, cfg: &SearchConfig) -> Result<SizeRow> {
    let start = Instant::now();
    let trees: Vec<Graph> = enumerate_free_trees(n)?.collect();
    let outcomes: Vec<StatusKind> = trees
        .par_iter()
        .map(|t| find_labeling(t, cfg).status.kind())
        .collect();
    let mut failures = Vec::new();
    let mut inconclusive = Vec::new();
    let mut solved_count = 0;
    for (t, kind) in trees.iter().zip(outcomes) {
        match kind {
            StatusKind::Found => solved_count += 1,
            StatusKind::Exhausted => failures.push(Counterexample {
                canonical: ahu_canonical(t)?,
                tree: t.clone(),
            }),
            StatusKind::Inconclusive => inconclusive.push(ahu_canonical(t)?),
        }
    }
    failures.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    inconclusive.sort();
    Ok(SizeRow {
        n,
        tree_count: trees.len(),
        solved_count,
        failures,
        inconclusive,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Scans every tree of every size `1..=max_n`.
pub fn scan_conjecture(max_n: usize, cfg: &SearchConfig) -> Result<ConjectureReport> {
    check_range(max_n, MAX_ENUMERATION_N)?;
    let rows = (1..=max_n)
        .map(|n| scan_size(n, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjectureReport { rows })
}

/// Edge-list text for a failing tree, headed by its canonical form.
pub fn counterexample_text(c: &Counterexample) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# counterexample {}", c.canonical);
    out.push_str(&crate::io::write_edge_list(&c.tree));
    out
}

#[cfg(test)]
fn eccentricity(t: &Graph, v: Vertex) -> usize {
    use std::collections::VecDeque;
    let mut dist = vec![usize::MAX; t.vertex_count() + 1];
    dist[v] = 0;
    let mut q = VecDeque::from([v]);
    let mut far = 0;
    while let Some(x) = q.pop_front() {
        far = far.max(dist[x]);
        for &w in t.neighbors(x) {
            if dist[w] == usize::MAX {
                dist[w] = dist[x] + 1;
                q.push_back(w);
            }
        }
    }
    far
}
