//! Constructive neighborhood-prime labelings, one per graph family, each over
//! the canonical numbering of [`crate::families`].

mod cyclic;
mod trees;

pub use cyclic::{
    label_book5, label_gear, label_mobius, label_snake, label_star_gon, snake_case, SnakeCase,
};
pub use trees::{
    admits_bivalent_free_procedure, label_banana, label_bivalent_free, label_caterpillar,
    label_firecracker, label_full_binary, label_spider, spider_processing_order,
};

use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::{verify, Graph, Labeling, Vertex};

/// Which end of a shifted path carries the smallest label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftKind {
    /// Smallest label at the second vertex (shifted Patel-Shrimali path labeling).
    InteriorMin,
    /// Smallest label at the first vertex (spider legs).
    HeadMin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftVariant {
    pub kind: ShiftKind,
    pub offset: usize,
    pub len: usize,
}

/// Path labeling of `P_n`: odd positions get `n/2 + (i+1)/2`, even
/// positions get `i/2`.
pub fn label_path(n: usize) -> Labeling {
    Labeling::new(shifted_path_labels(ShiftVariant {
        kind: ShiftKind::InteriorMin,
        offset: 0,
        len: n,
    }))
    .expect("path labeling is a bijection")
}

/// Labels for positions `1..=len` of a path, filling `offset+1..=offset+len`.
/// Positions `i-1` and `i+1` always receive consecutive values.
pub fn shifted_path_labels(v: ShiftVariant) -> Vec<usize> {
    let (base, m) = (v.offset, v.len);
    (1..=m)
        .map(|i| match (v.kind, i % 2 == 1) {
            (ShiftKind::InteriorMin, true) => base + m / 2 + (i + 1) / 2,
            (ShiftKind::InteriorMin, false) => base + i / 2,
            (ShiftKind::HeadMin, true) => base + (i + 1) / 2,
            // Ceiling keeps odd-length legs bijective.
            (ShiftKind::HeadMin, false) => base + m.div_ceil(2) + i / 2,
        })
        .collect()
}

/// Merges `u1` (label 1) and `u2` (label n) into one vertex labeled 1.
///
/// The merged vertex keeps `u1`'s position; vertices numbered above `u2`
/// shift down by one. All other labels are unchanged, so the result is a
/// bijection onto `1..n-1`.
pub fn contract_one_max(
    g: &Graph,
    f: &Labeling,
    u1: Vertex,
    u2: Vertex,
) -> Result<(Graph, Labeling)> {
    let n = g.vertex_count();
    let pre = |msg: String| Err(Error::PreconditionViolated(msg));
    if u1 == 0 || u2 == 0 || u1 > n || u2 > n || u1 == u2 {
        return pre(format!("vertices {u1}, {u2} must be distinct and in 1..={n}"));
    }
    if !verify(g, f)?.ok {
        return pre("input labeling is not neighborhood-prime".into());
    }
    if f.label(u1) != 1 {
        return pre(format!("f(u1) = {} but must be 1", f.label(u1)));
    }
    if f.label(u2) != n {
        return pre(format!("f(u2) = {} but must be {n}", f.label(u2)));
    }
    if g.has_edge(u1, u2) {
        return pre(format!("u1u2 = {u1}{u2} is an edge"));
    }
    if g.degree(u1) <= 1 && g.degree(u2) <= 1 {
        return pre("both u1 and u2 have degree <= 1".into());
    }
    let renumber = |v: Vertex| {
        let v = if v == u2 { u1 } else { v };
        if v > u2 {
            v - 1
        } else {
            v
        }
    };
    let graph = Graph::new_merging(
        n - 1,
        g.edges().iter().map(|&(a, b)| (renumber(a), renumber(b))),
    );
    let mut labels = vec![0; n - 1];
    for v in g.vertices().filter(|&v| v != u2) {
        labels[renumber(v) - 1] = f.label(v);
    }
    Ok((graph, Labeling::new(labels)?))
}

/// Attaches a new leaf `n+1` to `v` and gives it label `n+1`.
pub fn extend_pendant(g: &Graph, f: &Labeling, v: Vertex) -> Result<(Graph, Labeling)> {
    let n = g.vertex_count();
    if v == 0 || v > n {
        return Err(Error::PreconditionViolated(format!("vertex {v} outside 1..={n}")));
    }
    if g.degree(v) <= 1 {
        return Err(Error::PreconditionViolated(format!(
            "vertex {v} has degree {} but must have degree > 1",
            g.degree(v)
        )));
    }
    if !verify(g, f)?.ok {
        return Err(Error::PreconditionViolated(
            "input labeling is not neighborhood-prime".into(),
        ));
    }
    let graph = Graph::new(
        n + 1,
        g.edges().iter().copied().chain(std::iter::once((v, n + 1))),
    )?;
    let mut labels = f.as_slice().to_vec();
    labels.push(n + 1);
    Ok((graph, Labeling::new(labels)?))
}

/// Generates the family's graph and runs its constructive labeler.
pub fn label_family(spec: &FamilySpec) -> Result<(Graph, Labeling)> {
    let g = generate(spec)?;
    let f = match spec {
        FamilySpec::Path(n) => label_path(*n),
        FamilySpec::Gear(n) => label_gear(*n)?,
        FamilySpec::Snake { k, n } => label_snake(*k, *n)?,
        FamilySpec::StarGon { k, n } => label_star_gon(*k, *n)?,
        FamilySpec::Book { k: 5, n } => label_book5(*n)?,
        FamilySpec::Book { k, .. } => {
            return Err(Error::UnsupportedParameters(format!(
                "no constructive labeling for {k}-gonal books"
            )))
        }
        FamilySpec::Mobius(n) => label_mobius(*n)?,
        FamilySpec::Caterpillar(c) => label_caterpillar(c)?,
        FamilySpec::Spider(legs) => label_spider(legs)?,
        FamilySpec::Banana { n, k } => label_banana(*n, *k)?,
        FamilySpec::Firecracker { n, k } => label_firecracker(*n, *k)?,
        FamilySpec::FullBinary(_) | FamilySpec::CompleteBinary(_) => label_full_binary(&g)?,
        FamilySpec::FullKAry { k: 2, .. } => label_full_binary(&g)?,
        FamilySpec::FullKAry { .. } | FamilySpec::Cayley { .. } | FamilySpec::RandomTree { .. } => {
            label_bivalent_free(&g)?
        }
        FamilySpec::Cycle(n) => {
            return Err(Error::UnsupportedParameters(format!(
                "no constructive labeling for the cycle C{n}"
            )))
        }
    };
    Ok((g, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::graph::is_neighborhood_prime;
    use proptest::prelude::*;

    fn path_graph(n: usize) -> Graph {
        generate(&FamilySpec::Path(n)).unwrap()
    }

    #[test]
    fn path_examples() {
        assert_eq!(label_path(1).as_slice(), &[1]);
        assert_eq!(label_path(3).as_slice(), &[2, 1, 3]);
        assert_eq!(label_path(5).as_slice(), &[3, 1, 4, 2, 5]);
    }

    #[test]
    fn shifted_examples() {
        let lab = |kind, offset, len| shifted_path_labels(ShiftVariant { kind, offset, len });
        assert_eq!(lab(ShiftKind::InteriorMin, 5, 3), vec![7, 6, 8]);
        assert_eq!(lab(ShiftKind::HeadMin, 1, 2), vec![2, 3]);
        assert_eq!(lab(ShiftKind::HeadMin, 3, 3), vec![4, 6, 5]);
    }

    #[test]
    fn pendant_examples() {
        let (g, f) = extend_pendant(&path_graph(3), &label_path(3), 2).unwrap();
        assert_eq!(g.neighbors(2), &[1, 3, 4]);
        assert_eq!(f.as_slice(), &[2, 1, 3, 4]);
        let (_, f) = extend_pendant(&g, &f, 2).unwrap();
        assert_eq!(f.as_slice(), &[2, 1, 3, 4, 5]);
        assert!(matches!(
            extend_pendant(&path_graph(3), &label_path(3), 1),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn contraction_examples() {
        let g = generate(&FamilySpec::Snake { k: 3, n: 4 }).unwrap();
        let f = label_snake(3, 4).unwrap();
        let (h, lab) = contract_one_max(&g, &f, 1, 7).unwrap();
        assert_eq!(h, generate(&FamilySpec::StarGon { k: 3, n: 3 }).unwrap());
        assert_eq!(lab.label(1), 1);
        assert!(is_neighborhood_prime(&h, &lab));

        let p4 = path_graph(4);
        let f4 = Labeling::new(vec![2, 1, 3, 4]).unwrap();
        assert!(matches!(
            contract_one_max(&p4, &f4, 1, 4),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            contract_one_max(&path_graph(3), &label_path(3), 2, 3),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn contraction_renumbers_above_u2() {
        // P5 with label 1 at vertex 4 and label 5 at vertex 1.
        let g = path_graph(5);
        let f = Labeling::new(vec![5, 4, 3, 1, 2]).unwrap();
        assert!(is_neighborhood_prime(&g, &f));
        let (h, lab) = contract_one_max(&g, &f, 4, 1).unwrap();
        // Vertex 1 vanishes, the merged vertex becomes 3: a triangle 1-2-3 plus leaf 4.
        assert_eq!(h.edges(), &[(1, 2), (1, 3), (2, 3), (3, 4)]);
        assert_eq!(lab.as_slice(), &[4, 3, 1, 2]);
        assert!(is_neighborhood_prime(&h, &lab));
    }

    proptest! {
        #[test]
        fn shifted_labels_fill_their_range(interior: bool, offset in 0usize..50, len in 1usize..60) {
            let kind = if interior { ShiftKind::InteriorMin } else { ShiftKind::HeadMin };
            let labels = shifted_path_labels(ShiftVariant { kind, offset, len });
            let mut sorted = labels.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (offset + 1..=offset + len).collect::<Vec<_>>());
            for i in 1..len.saturating_sub(1) {
                prop_assert_eq!(labels[i - 1].abs_diff(labels[i + 1]), 1);
            }
        }

        #[test]
        fn path_labeling_verifies(n in 1usize..200) {
            let f = label_path(n);
            prop_assert!(is_neighborhood_prime(&path_graph(n), &f));
            if n >= 2 {
                prop_assert_eq!(f.label(2), 1);
            }
        }
    }
}
