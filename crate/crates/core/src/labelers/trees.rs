use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::{is_tree, Graph, Labeling, Vertex};
use crate::search::{bertrand_prime, coprime_matching};

use super::{extend_pendant, label_path, shifted_path_labels, ShiftKind, ShiftVariant};

/// Caterpillar: the spine gets the path labeling, then pendants are attached
/// one at a time (ascending spine vertex), each taking the next label.
pub fn label_caterpillar(pendant_counts: &[usize]) -> Result<Labeling> {
    let s = pendant_counts.len() + 2;
    let mut g = generate(&FamilySpec::Path(s))?;
    let mut f = label_path(s);
    for (j, &c) in pendant_counts.iter().enumerate() {
        for _ in 0..c {
            (g, f) = extend_pendant(&g, &f, j + 2)?;
        }
    }
    Ok(f)
}

/// Order in which spider legs are labeled: the first odd-length leg leads,
/// the rest follow in their given order.
pub fn spider_processing_order(leg_lengths: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..leg_lengths.len()).collect();
    if let Some(pos) = leg_lengths.iter().position(|&l| l % 2 == 1) {
        order.remove(pos);
        order.insert(0, pos);
    }
    order
}

/// Spider: center 1, every leg labeled head-first from the next free block.
/// When every leg is even the last leg is reflected so the center sees an
/// odd label next to the 2 on the first leg.
pub fn label_spider(leg_lengths: &[usize]) -> Result<Labeling> {
    generate(&FamilySpec::Spider(leg_lengths.to_vec()))?;
    // first vertex id of each leg in the canonical numbering
    let starts: Vec<usize> = leg_lengths
        .iter()
        .scan(2, |next, &len| {
            let s = *next;
            *next += len;
            Some(s)
        })
        .collect();
    let n = 1 + leg_lengths.iter().sum::<usize>();
    let mut labels = vec![0; n];
    labels[0] = 1;
    let all_even = leg_lengths.iter().all(|&l| l % 2 == 0);
    let order = spider_processing_order(leg_lengths);
    let mut offset = 1;
    for (pos, &leg) in order.iter().enumerate() {
        let len = leg_lengths[leg];
        let mut block = shifted_path_labels(ShiftVariant {
            kind: ShiftKind::HeadMin,
            offset,
            len,
        });
        if all_even && pos + 1 == order.len() {
            block.reverse();
        }
        labels[starts[leg] - 1..starts[leg] - 1 + len].copy_from_slice(&block);
        offset += len;
    }
    Labeling::new(labels)
}

/// `(n,k)`-banana tree for `n >= 3`, `k >= 4`.
pub fn label_banana(n: usize, k: usize) -> Result<Labeling> {
    if n < 3 || k < 4 {
        return Err(Error::UnsupportedParameters(format!(
            "banana labeling needs n >= 3 and k >= 4, got ({n},{k})"
        )));
    }
    let mut labels = vec![0; n * k + 1];
    labels[0] = 1;
    for i in 1..=n {
        let u = 2 + (i - 1) * k;
        let w_label = (i - 1) * (k - 1) + n + 2;
        labels[u - 1] = i + 1;
        labels[u] = w_label;
        for j in 0..k - 2 {
            labels[u + 1 + j] = w_label + 1 + j;
        }
    }
    Labeling::new(labels)
}

/// Firecracker `F_{n,k}`, `k >= 3`.
///
/// The path gets the path labeling, the last star center takes the smallest
/// prime in `(n, 2n]`, the other centers take the rest of `n+1..=2n`
/// ascending, and each first extra leaf `w_i` takes the coprime partner of
/// `f(u_i)` in `2n+1..=3n`. Further leaves are added as pendants.
pub fn label_firecracker(n: usize, k: usize) -> Result<Labeling> {
    if n < 1 || k < 3 {
        return Err(Error::UnsupportedParameters(format!(
            "firecracker labeling needs n >= 1 and k >= 3, got ({n},{k})"
        )));
    }
    let path = label_path(n);
    let p = bertrand_prime(n);
    let matching = coprime_matching(n);
    let mut labels = vec![0; 3 * n];
    labels[..n].copy_from_slice(path.as_slice());
    let mut centers = (n + 1..=2 * n).filter(|&x| x != p);
    for i in 1..n {
        labels[n + i - 1] = centers.next().expect("n-1 non-prime center labels");
    }
    labels[2 * n - 1] = p;
    for i in 1..=n {
        labels[2 * n + i - 1] = matching.partner(path.label(i));
    }
    let mut f = Labeling::new(labels)?;
    let mut g = generate(&FamilySpec::Firecracker { n, k: 3 })?;
    for i in 1..=n {
        for _ in 3..k {
            (g, f) = extend_pendant(&g, &f, n + i)?;
        }
    }
    Ok(f)
}

/// Walks away from `from` through `start`, always stepping to the
/// lowest-numbered new neighbor, until a leaf is reached.
fn walk_to_leaf(t: &Graph, from: Vertex, start: Vertex) -> Vec<Vertex> {
    let mut path = vec![start];
    let (mut prev, mut cur) = (from, start);
    while t.degree(cur) > 1 {
        let next = *t
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev)
            .expect("non-leaf has a forward neighbor");
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

/// Leaf-to-leaf path through the two given branches of `center`.
fn path_through(t: &Graph, center: Vertex, a: Vertex, b: Vertex) -> Vec<Vertex> {
    let mut path = walk_to_leaf(t, center, a);
    path.reverse();
    path.push(center);
    path.extend(walk_to_leaf(t, center, b));
    path
}

/// The first leaf-to-leaf path: through the lowest non-leaf when there are no
/// degree-2 vertices, otherwise through all degree-2 vertices (or `None`
/// when they do not lie on a common path).
fn first_path(t: &Graph) -> Option<Vec<Vertex>> {
    let n = t.vertex_count();
    let bivalent: Vec<Vertex> = t.vertices().filter(|&v| t.degree(v) == 2).collect();
    let Some(&root) = bivalent.first() else {
        let v = t.vertices().find(|&v| t.degree(v) > 1)?;
        let nb = t.neighbors(v);
        return Some(path_through(t, v, nb[0], nb[1]));
    };

    // Minimal subtree spanning the degree-2 vertices, rooted at one of them.
    let mut parent = vec![0; n + 1];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    let mut seen = vec![false; n + 1];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut in_steiner = vec![false; n + 1];
    for &v in order.iter().rev() {
        if t.degree(v) == 2 {
            in_steiner[v] = true;
        }
        if in_steiner[v] && v != root {
            in_steiner[parent[v]] = true;
        }
    }
    let steiner_nbrs = |v: Vertex| t.neighbors(v).iter().filter(|&&w| in_steiner[w]).count();
    let members: Vec<Vertex> = t.vertices().filter(|&v| in_steiner[v]).collect();
    if members.iter().any(|&v| steiner_nbrs(v) > 2) {
        return None;
    }
    let end = *members.iter().find(|&&v| steiner_nbrs(v) <= 1)?;
    let mut spine = vec![end];
    let (mut prev, mut cur) = (0, end);
    while let Some(&next) = t
        .neighbors(cur)
        .iter()
        .find(|&&w| w != prev && in_steiner[w])
    {
        spine.push(next);
        prev = cur;
        cur = next;
    }

    if spine.len() == 1 {
        let nb = t.neighbors(end);
        return Some(path_through(t, end, nb[0], nb[1]));
    }
    // Both spine ends have degree 2, hence exactly one off-spine neighbor.
    let off = |v: Vertex, spine_nbr: Vertex| -> Vertex {
        *t.neighbors(v).iter().find(|&&w| w != spine_nbr).unwrap()
    };
    let head = spine[0];
    let tail = *spine.last().unwrap();
    let mut path = walk_to_leaf(t, head, off(head, spine[1]));
    path.reverse();
    path.extend_from_slice(&spine);
    path.extend(walk_to_leaf(t, tail, off(tail, spine[spine.len() - 2])));
    Some(path)
}

/// Whether [`label_bivalent_free`] accepts `t`: a tree whose degree-2
/// vertices (if any) all lie on one leaf-to-leaf path.
pub fn admits_bivalent_free_procedure(t: &Graph) -> bool {
    is_tree(t) && (t.vertex_count() <= 2 || first_path(t).is_some())
}

/// Path-cover labeling for trees with no degree-2 vertices, or whose
/// degree-2 vertices share one leaf-to-leaf path.
///
/// Leaf-to-leaf paths are grown one at a time (FIFO over non-leaves adjacent
/// to an interior vertex of an earlier path) and each is labeled with the
/// shifted path labeling on the next free block. Off-path leaves take the
/// leftover labels ascending by vertex id. Every non-leaf ends up interior
/// to some path, so it sees two consecutive labels.
pub fn label_bivalent_free(t: &Graph) -> Result<Labeling> {
    if !is_tree(t) {
        return Err(Error::UnsupportedStructure("graph is not a tree".into()));
    }
    let n = t.vertex_count();
    if n <= 2 {
        return Ok(Labeling::identity(n));
    }
    let unsupported = || {
        Error::UnsupportedStructure(
            "degree-2 vertices do not lie on a single leaf-to-leaf path".into(),
        )
    };
    let first = first_path(t).ok_or_else(unsupported)?;

    let mut labels = vec![0; n + 1];
    let mut on_path = vec![false; n + 1];
    let mut queued = vec![false; n + 1];
    let mut queue = VecDeque::new();
    let mut used = 0;

    let mut place = |path: &[Vertex],
                     labels: &mut [usize],
                     on_path: &mut [bool],
                     queue: &mut VecDeque<Vertex>| {
        let block = shifted_path_labels(ShiftVariant {
            kind: ShiftKind::InteriorMin,
            offset: used,
            len: path.len(),
        });
        for (&v, &l) in path.iter().zip(&block) {
            labels[v] = l;
            on_path[v] = true;
        }
        used += path.len();
        for &v in &path[1..path.len() - 1] {
            for &w in t.neighbors(v) {
                if !on_path[w] && !queued[w] && t.degree(w) > 1 {
                    queued[w] = true;
                    queue.push_back(w);
                }
            }
        }
    };

    place(&first, &mut labels, &mut on_path, &mut queue);
    while let Some(v) = queue.pop_front() {
        if on_path[v] {
            continue;
        }
        let free: Vec<Vertex> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !on_path[w])
            .collect();
        if free.len() < 2 {
            return Err(unsupported());
        }
        let path = path_through(t, v, free[0], free[1]);
        // walk_to_leaf only avoids its predecessor; in a tree that suffices.
        debug_assert!(path.iter().all(|&x| !on_path[x]));
        place(&path, &mut labels, &mut on_path, &mut queue);
    }

    let mut next = used;
    for v in 1..=n {
        if !on_path[v] {
            if t.degree(v) > 1 {
                return Err(unsupported());
            }
            next += 1;
            labels[v] = next;
        }
    }
    Labeling::new(labels.split_off(1))
}

/// Children of every vertex when `t` is rooted at 1, provided a BFS that
/// visits neighbors in ascending order reproduces the numbering `1..=n`
/// and no vertex has more than two children.
fn level_order_children(t: &Graph) -> Option<Vec<usize>> {
    if !is_tree(t) {
        return None;
    }
    let n = t.vertex_count();
    let mut children = vec![0; n + 1];
    let mut parent = vec![0; n + 1];
    let mut queue = VecDeque::from([1]);
    let mut expected = 1;
    while let Some(v) = queue.pop_front() {
        if v != expected {
            return None;
        }
        expected += 1;
        for &w in t.neighbors(v) {
            if w != parent[v] {
                parent[w] = v;
                children[v] += 1;
                queue.push_back(w);
            }
        }
        if children[v] > 2 {
            return None;
        }
    }
    Some(children)
}

/// Binary trees in level-order numbering. Full trees get the identity (every
/// parent's two children are consecutive); other binary trees fall back to
/// [`label_bivalent_free`].
pub fn label_full_binary(t: &Graph) -> Result<Labeling> {
    let children = level_order_children(t).ok_or_else(|| {
        Error::UnsupportedStructure("not a binary tree in level-order numbering".into())
    })?;
    if children[1..].iter().all(|&c| c == 0 || c == 2) {
        Ok(Labeling::identity(t.vertex_count()))
    } else {
        label_bivalent_free(t)
    }
}
