//! Simple undirected graphs on vertices `1..=n`, vertex labelings, and the
//! neighborhood-prime verifier.
//!
//! Vertex ids and label values are both 1-based. A labeling is valid for a
//! graph when it is a bijection onto `{1, ..., n}`; it is neighborhood-prime
//! when every vertex of degree at least two sees neighbor labels with gcd 1.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Vertex id in `1..=n`.
pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // adj[0] is unused so that adj[v] is the neighbor list of vertex v.
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoints may be given in either
    /// order; self-loops, duplicates and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Usage("graph must have at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::Usage(format!(
                    "edge {a}-{b} has an endpoint outside 1..={n}"
                )));
            }
            if a == b {
                return Err(Error::Usage(format!("self-loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::Usage(format!("duplicate edge {}-{}", e.0, e.1)));
            }
        }
        Ok(Self::from_sorted_set(n, set))
    }

    /// Like [`Graph::new`] but silently merges duplicate edges. Used by
    /// transformations such as contraction where parallel edges collapse.
    pub(crate) fn new_merging(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let set: BTreeSet<_> = edges
            .into_iter()
            .map(|(a, b)| {
                debug_assert!(a != b && a >= 1 && b >= 1 && a <= n && b <= n);
                (a.min(b), a.max(b))
            })
            .collect();
        Self::from_sorted_set(n, set)
    }

    fn from_sorted_set(n: usize, set: BTreeSet<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n + 1];
        for &(a, b) in &set {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    /// Ascending neighbor list of `v`. Panics if `v` is out of range; see
    /// [`neighborhood`] for the checked variant.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a >= 1 && a <= self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Renumbers vertices: vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Usage(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::new(
            self.n,
            self.edges.iter().map(|&(a, b)| (perm[a - 1], perm[b - 1])),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A bijection from vertices `1..=n` onto labels `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    /// `labels[v - 1]` is the label of vertex `v`. Fails with
    /// [`Error::LabelingInvalid`] unless the values are a permutation of `1..=n`.
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for (i, &l) in labels.iter().enumerate() {
            if l == 0 || l > n {
                return Err(Error::LabelingInvalid(format!(
                    "vertex {} has label {l}, outside 1..={n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[l], true) {
                return Err(Error::LabelingInvalid(format!(
                    "label {l} is used more than once"
                )));
            }
        }
        Ok(Labeling { labels })
    }

    pub fn identity(n: usize) -> Self {
        Labeling {
            labels: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: Vertex) -> usize {
        self.labels[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.labels
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.labels
    }

    /// The vertex carrying `label`.
    pub fn vertex_with(&self, label: usize) -> Option<Vertex> {
        self.labels.iter().position(|&l| l == label).map(|i| i + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: Vertex,
    pub neighbor_labels: Vec<usize>,
    pub gcd_value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    /// Number of vertices of degree at least two.
    pub checked_count: usize,
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Greatest common divisor of a nonempty list of positive integers.
pub fn gcd_of(values: &[usize]) -> Result<usize> {
    if values.is_empty() {
        return Err(Error::Usage("gcd of an empty list".into()));
    }
    if values.contains(&0) {
        return Err(Error::Usage("gcd inputs must be positive".into()));
    }
    Ok(values.iter().fold(0, |acc, &x| gcd(acc, x)))
}

/// Open neighborhood of `v`, ascending.
pub fn neighborhood(g: &Graph, v: Vertex) -> Result<&[Vertex]> {
    if v == 0 || v > g.vertex_count() {
        return Err(Error::Usage(format!(
            "vertex {v} outside 1..={}",
            g.vertex_count()
        )));
    }
    Ok(g.neighbors(v))
}

/// Checks the neighborhood-gcd condition at every vertex of degree >= 2 and
/// reports every violation. Vertices of degree 0 or 1 are not checked.
pub fn verify(g: &Graph, f: &Labeling) -> Result<VerificationReport> {
    if f.len() != g.vertex_count() {
        return Err(Error::Usage(format!(
            "labeling has {} entries, graph has {} vertices",
            f.len(),
            g.vertex_count()
        )));
    }
    let mut violations = Vec::new();
    let mut checked_count = 0;
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        if nbrs.len() < 2 {
            continue;
        }
        checked_count += 1;
        let d = nbrs.iter().fold(0, |acc, &w| gcd(acc, f.label(w)));
        if d != 1 {
            let mut neighbor_labels: Vec<usize> = nbrs.iter().map(|&w| f.label(w)).collect();
            neighbor_labels.sort_unstable();
            violations.push(Violation {
                vertex: v,
                neighbor_labels,
                gcd_value: d,
            });
        }
    }
    Ok(VerificationReport {
        ok: violations.is_empty(),
        violations,
        checked_count,
    })
}

/// Convenience wrapper: `verify(g, f)?.ok`, with errors mapped to `false`.
pub fn is_neighborhood_prime(g: &Graph, f: &Labeling) -> bool {
    verify(g, f).map(|r| r.ok).unwrap_or(false)
}

pub fn is_tree(g: &Graph) -> bool {
    g.edge_count() + 1 == g.vertex_count() && g.is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p3() -> Graph {
        Graph::new(3, [(1, 2), (2, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_of(&[3, 5, 7]).unwrap(), 1);
        assert_eq!(gcd_of(&[6]).unwrap(), 6);
        assert_eq!(gcd_of(&[4, 6, 10]).unwrap(), 2);
        assert!(matches!(gcd_of(&[]), Err(Error::Usage(_))));
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(neighborhood(&p3(), 2).unwrap(), &[1, 3]);
        assert_eq!(neighborhood(&p3(), 1).unwrap(), &[2]);
        assert_eq!(neighborhood(&c4(), 1).unwrap(), &[2, 4]);
        assert!(neighborhood(&p3(), 0).is_err());
        assert!(neighborhood(&p3(), 4).is_err());
    }

    #[test]
    fn verify_c4_identity_fails_at_both_odd_vertices() {
        let r = verify(&c4(), &Labeling::new(vec![1, 2, 3, 4]).unwrap()).unwrap();
        assert!(!r.ok);
        assert_eq!(
            r.violations,
            vec![
                Violation {
                    vertex: 1,
                    neighbor_labels: vec![2, 4],
                    gcd_value: 2
                },
                Violation {
                    vertex: 3,
                    neighbor_labels: vec![2, 4],
                    gcd_value: 2
                },
            ]
        );
        assert_eq!(r.checked_count, 4);
    }

    #[test]
    fn verify_passing_examples() {
        let r = verify(&c4(), &Labeling::new(vec![1, 2, 4, 3]).unwrap()).unwrap();
        assert!(r.ok);
        let r = verify(&p3(), &Labeling::new(vec![2, 1, 3]).unwrap()).unwrap();
        assert!(r.ok);
        assert_eq!(r.checked_count, 1);
    }

    #[test]
    fn labeling_must_be_bijection() {
        assert!(matches!(
            Labeling::new(vec![1, 1, 2]),
            Err(Error::LabelingInvalid(_))
        ));
        assert!(matches!(
            Labeling::new(vec![1, 4, 2]),
            Err(Error::LabelingInvalid(_))
        ));
        let short = Labeling::new(vec![1, 2]).unwrap();
        assert!(matches!(verify(&p3(), &short), Err(Error::Usage(_))));
    }

    #[test]
    fn tree_detection() {
        assert!(is_tree(&p3()));
        assert!(!is_tree(&c4()));
        assert!(!is_tree(&Graph::new(4, [(1, 2), (3, 4)]).unwrap()));
        assert!(is_tree(&Graph::new(1, []).unwrap()));
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(3, [(1, 4)]).is_err());
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn isolated_and_leaf_vertices_are_not_checked() {
        let g = Graph::new(5, [(1, 2), (3, 4)]).unwrap();
        let r = verify(&g, &Labeling::new(vec![2, 4, 1, 3, 5]).unwrap()).unwrap();
        assert!(r.ok);
        assert_eq!(r.checked_count, 0);
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #[test]
        fn gcd_unimodular_combination_first(a in 1i64..100_000, b in 1i64..100_000,
                                            unit: bool, d in -1000i64..1000) {
            // gcd{a, b} = gcd{c*a + d*b, b} needs c = +-1.
            let c = if unit { 1 } else { -1 };
            let s = c * a + d * b;
            prop_assume!(s >= 1);
            let lhs = gcd_of(&[a as usize, b as usize]).unwrap();
            prop_assert_eq!(lhs, gcd_of(&[s as usize, b as usize]).unwrap());
        }

        #[test]
        fn gcd_unimodular_combination_second(a in 1i64..100_000, b in 1i64..100_000,
                                             c in -1000i64..1000, unit: bool) {
            let d = if unit { 1 } else { -1 };
            let s = c * a + d * b;
            prop_assume!(s >= 1);
            let lhs = gcd_of(&[a as usize, b as usize]).unwrap();
            prop_assert_eq!(lhs, gcd_of(&[a as usize, s as usize]).unwrap());
        }

        #[test]
        fn gcd_general_combination(a in 1i64..100_000, b in 1i64..100_000,
                                   c in -1000i64..1000, d in -1000i64..1000) {
            // gcd{c*a + d*b, b} = gcd{a, b} * gcd{c, b / gcd{a, b}}
            let s = c * a + d * b;
            prop_assume!(s >= 1);
            let g = gcd(a as usize, b as usize);
            let expected = g * gcd(c.unsigned_abs() as usize, b as usize / g);
            prop_assert_eq!(gcd_of(&[s as usize, b as usize]).unwrap(), expected);
        }

        #[test]
        fn gcd_order_and_duplication(mut v in prop::collection::vec(1usize..10_000, 1..8), k in 0usize..8) {
            let g = gcd_of(&v).unwrap();
            for &x in &v { prop_assert_eq!(x % g, 0); }
            let extra = v[k % v.len()];
            v.push(extra);
            v.reverse();
            prop_assert_eq!(gcd_of(&v).unwrap(), g);
        }

        #[test]
        fn matchings_pass_vacuously(perm in arb_perm(8)) {
            let g = Graph::new(8, [(1, 2), (3, 4), (5, 6)]).unwrap();
            let r = verify(&g, &Labeling::new(perm).unwrap()).unwrap();
            prop_assert!(r.ok);
            prop_assert_eq!(r.checked_count, 0);
        }

        // Rotations and reflections of C8 are automorphisms.
        #[test]
        fn verify_is_automorphism_invariant(perm in arb_perm(8), shift in 0usize..8, flip: bool) {
            let n = 8;
            let g = Graph::new(n, (1..=n).map(|i| (i, i % n + 1))).unwrap();
            let f = Labeling::new(perm.clone()).unwrap();
            let sigma = |v: usize| {
                let w = if flip { n - v } else { v - 1 };
                (w + shift) % n + 1
            };
            // Labels follow the automorphism: vertex sigma(v) gets f(v).
            let mut moved = vec![0; n];
            for v in 1..=n {
                moved[sigma(v) - 1] = perm[v - 1];
            }
            let moved = Labeling::new(moved).unwrap();
            prop_assert_eq!(verify(&g, &f).unwrap().ok, verify(&g, &moved).unwrap().ok);
        }
    }
}
