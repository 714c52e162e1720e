//! Deterministic constructors for the graph families the labelers target.
//!
//! Each family has one canonical vertex numbering and the labelers are
//! written against it:
//!
//! * `Gear(n)`: hub is 1, rim is the cycle `2, 3, ..., 2n+1`; odd rim
//!   vertices `3, 5, ..., 2n+1` are joined to the hub.
//! * `Snake(k, n)`: `m = (n-1)(k-1)+1` vertices along the zigzag trace
//!   path `1 - 2 - ... - m`, plus base chords `i(k-1)+1 -- (i+1)(k-1)+1`
//!   for `i = 0..n-2`. Base vertex `u_j` is `(j-1)(k-1)+1`.
//! * `StarGon(k, n)`: `Snake(k, n+1)` with its two end base vertices merged
//!   into vertex 1 (the last trace vertex disappears).
//! * `Book(k, n)`: spine `u1 = 1`, `u2 = 2`; page `i` is the path
//!   `u1 - p_1 - ... - p_{k-2} - u2` on consecutive ids `3 + (i-1)(k-2)..`.
//! * `Mobius(n)`: `u_i = i`, `v_i = n+i`; ladder rails and rungs plus the
//!   crossings `v_1 u_n` and `u_1 v_n`.
//! * `Caterpillar(counts)`: spine `1..=s` with `s = counts.len() + 2`, then
//!   pendants grouped by interior spine vertex `2..s-1` in ascending order.
//! * `Spider(lengths)`: center 1, legs numbered consecutively outward.
//! * `Banana(n, k)`: root 1; star `i` occupies the block starting at
//!   `2 + (i-1)k` as `u_i, w_i` followed by the `k-2` remaining leaves.
//! * `Firecracker(n, k)`: path `1..=n`, star centers `n+i`, first extra leaf
//!   `2n+i`, the other `k-3` leaves after `3n` grouped by star.
//! * k-ary, Cayley and binary trees: level order with root 1.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{is_tree, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Gear(usize),
    Snake { k: usize, n: usize },
    StarGon { k: usize, n: usize },
    Book { k: usize, n: usize },
    Mobius(usize),
    /// Pendant counts for the interior spine vertices.
    Caterpillar(Vec<usize>),
    Spider(Vec<usize>),
    Banana { n: usize, k: usize },
    Firecracker { n: usize, k: usize },
    /// Level-order internal/leaf decisions; missing entries are leaves.
    FullKAry { k: usize, shape: Vec<bool> },
    Cayley { k: usize, shape: Vec<bool> },
    FullBinary(Vec<bool>),
    CompleteBinary(usize),
    RandomTree { n: usize, seed: u64 },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Gear(_) => "gear",
            FamilySpec::Snake { .. } => "snake",
            FamilySpec::StarGon { .. } => "stargon",
            FamilySpec::Book { .. } => "book",
            FamilySpec::Mobius(_) => "mobius",
            FamilySpec::Caterpillar(_) => "caterpillar",
            FamilySpec::Spider(_) => "spider",
            FamilySpec::Banana { .. } => "banana",
            FamilySpec::Firecracker { .. } => "firecracker",
            FamilySpec::FullKAry { .. } => "kary",
            FamilySpec::Cayley { .. } => "cayley",
            FamilySpec::FullBinary(_) => "fullbinary",
            FamilySpec::CompleteBinary(_) => "completebinary",
            FamilySpec::RandomTree { .. } => "random",
        }
    }

    /// Checks the parameter ranges; `generate` calls this first.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Path(n) if n < 1 => Err(invalid("path needs n >= 1")),
            FamilySpec::Cycle(n) if n < 3 => Err(invalid("cycle needs n >= 3")),
            FamilySpec::Gear(n) if n < 3 => Err(invalid("gear needs n >= 3")),
            FamilySpec::Snake { k, n } if k < 3 || n < 2 => {
                Err(invalid("snake needs k >= 3 and n >= 2"))
            }
            FamilySpec::StarGon { k, n } if k < 3 || n < 3 => {
                Err(invalid("stargon needs k >= 3 and n >= 3"))
            }
            FamilySpec::Book { k, n } if !(3..=5).contains(&k) || n < 1 => {
                Err(invalid("book needs k in {3,4,5} and n >= 1"))
            }
            FamilySpec::Mobius(n) if n < 3 => Err(invalid("mobius needs n >= 3")),
            FamilySpec::Spider(ref legs) if legs.len() < 3 => {
                Err(invalid("spider needs at least 3 legs"))
            }
            FamilySpec::Spider(ref legs) if legs.contains(&0) => {
                Err(invalid("spider legs need length >= 1"))
            }
            FamilySpec::Banana { n, k } if n < 1 || k < 3 => {
                Err(invalid("banana needs n >= 1 and k >= 3"))
            }
            FamilySpec::Firecracker { n, k } if n < 1 || k < 1 => {
                Err(invalid("firecracker needs n >= 1 and k >= 1"))
            }
            FamilySpec::FullKAry { k, .. } if k < 2 => Err(invalid("kary needs k >= 2")),
            FamilySpec::Cayley { k, .. } if k < 3 => Err(invalid("cayley needs k >= 3")),
            FamilySpec::CompleteBinary(n) if n < 1 => {
                Err(invalid("completebinary needs n_nodes >= 1"))
            }
            FamilySpec::RandomTree { n, .. } if n < 1 => Err(invalid("random needs n >= 1")),
            _ => Ok(()),
        }
    }

    /// Whether the family always produces trees.
    pub fn is_tree_family(&self) -> bool {
        match self {
            FamilySpec::Path(_)
            | FamilySpec::Caterpillar(_)
            | FamilySpec::Spider(_)
            | FamilySpec::Banana { .. }
            | FamilySpec::Firecracker { .. }
            | FamilySpec::FullKAry { .. }
            | FamilySpec::Cayley { .. }
            | FamilySpec::FullBinary(_)
            | FamilySpec::CompleteBinary(_)
            | FamilySpec::RandomTree { .. } => true,
            FamilySpec::Cycle(_)
            | FamilySpec::Gear(_)
            | FamilySpec::Snake { .. }
            | FamilySpec::StarGon { .. }
            | FamilySpec::Book { .. }
            | FamilySpec::Mobius(_) => false,
        }
    }
}

fn bits(shape: &[bool]) -> String {
    shape.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Gear(n)
            | FamilySpec::Mobius(n)
            | FamilySpec::CompleteBinary(n) => write!(f, "{name}:{n}"),
            FamilySpec::Snake { k, n }
            | FamilySpec::StarGon { k, n }
            | FamilySpec::Book { k, n } => write!(f, "{name}:{k},{n}"),
            FamilySpec::Banana { n, k } | FamilySpec::Firecracker { n, k } => {
                write!(f, "{name}:{n},{k}")
            }
            FamilySpec::Caterpillar(c) => write!(f, "{name}:{}", join(c)),
            FamilySpec::Spider(l) => write!(f, "{name}:{}", join(l)),
            FamilySpec::FullKAry { k, shape } | FamilySpec::Cayley { k, shape } => {
                write!(f, "{name}:{k},{}", bits(shape))
            }
            FamilySpec::FullBinary(shape) => write!(f, "{name}:{}", bits(shape)),
            FamilySpec::RandomTree { n, seed } => write!(f, "{name}:{n},{seed}"),
        }
    }
}

fn parse_shape(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '1' => Ok(true),
            '0' => Ok(false),
            _ => Err(invalid(format!("shape descriptor must be 0/1 digits, got {s:?}"))),
        })
        .collect()
}

fn parse_nums(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| invalid(format!("expected a nonnegative integer, got {t:?}")))
        })
        .collect()
}

/// Grammar: `<family>:<args>` where args are comma-separated integers.
///
/// ```text
/// path:N  cycle:N  gear:N  mobius:N  completebinary:N
/// snake:K,N  stargon:K,N  book:K,N
/// banana:N,K  firecracker:N,K
/// caterpillar:C1,C2,...   (pendant counts of interior spine vertices; may be empty)
/// spider:L1,L2,L3,...     (leg lengths)
/// kary:K,SHAPE  cayley:K,SHAPE  fullbinary:SHAPE   (SHAPE = level-order 0/1 string)
/// random:N,SEED
/// ```
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("expected <family>:<args>, got {s:?}")))?;
        let name = name.trim().to_ascii_lowercase();
        let exact = |want: usize| -> Result<Vec<usize>> {
            let v = parse_nums(args)?;
            if v.len() != want {
                return Err(invalid(format!(
                    "{name} takes {want} parameter(s), got {}",
                    v.len()
                )));
            }
            Ok(v)
        };
        let shaped = || -> Result<(usize, Vec<bool>)> {
            let (k, shape) = args.split_once(',').unwrap_or((args, ""));
            let k = k
                .trim()
                .parse()
                .map_err(|_| invalid(format!("bad arity {k:?}")))?;
            Ok((k, parse_shape(shape.trim())?))
        };
        let spec = match name.as_str() {
            "path" => FamilySpec::Path(exact(1)?[0]),
            "cycle" => FamilySpec::Cycle(exact(1)?[0]),
            "gear" => FamilySpec::Gear(exact(1)?[0]),
            "mobius" => FamilySpec::Mobius(exact(1)?[0]),
            "completebinary" => FamilySpec::CompleteBinary(exact(1)?[0]),
            "snake" => {
                let v = exact(2)?;
                FamilySpec::Snake { k: v[0], n: v[1] }
            }
            "stargon" => {
                let v = exact(2)?;
                FamilySpec::StarGon { k: v[0], n: v[1] }
            }
            "book" => {
                let v = exact(2)?;
                FamilySpec::Book { k: v[0], n: v[1] }
            }
            "banana" => {
                let v = exact(2)?;
                FamilySpec::Banana { n: v[0], k: v[1] }
            }
            "firecracker" => {
                let v = exact(2)?;
                FamilySpec::Firecracker { n: v[0], k: v[1] }
            }
            "caterpillar" => FamilySpec::Caterpillar(parse_nums(args)?),
            "spider" => FamilySpec::Spider(parse_nums(args)?),
            "kary" => {
                let (k, shape) = shaped()?;
                FamilySpec::FullKAry { k, shape }
            }
            "cayley" => {
                let (k, shape) = shaped()?;
                FamilySpec::Cayley { k, shape }
            }
            "fullbinary" => FamilySpec::FullBinary(parse_shape(args.trim())?),
            "random" => {
                let v = exact(2)?;
                FamilySpec::RandomTree {
                    n: v[0],
                    seed: v[1] as u64,
                }
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Trace-path numbering of `S_{k,n}`: vertex count and edges.
fn snake_edges(k: usize, n: usize) -> (usize, Vec<(Vertex, Vertex)>) {
    let m = (n - 1) * (k - 1) + 1;
    let mut edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
    for i in 0..n - 1 {
        edges.push((i * (k - 1) + 1, (i + 1) * (k - 1) + 1));
    }
    (m, edges)
}

/// Level-order tree where node `i` gets `children(i, is_root)` children when
/// its shape entry is set.
fn shaped_tree(shape: &[bool], children: impl Fn(bool) -> usize) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut next = 2;
    let mut node = 1;
    // Nodes are created in level order, so processing ids ascending is BFS.
    while node < next {
        let internal = shape.get(node - 1).copied().unwrap_or(false);
        if internal {
            for _ in 0..children(node == 1) {
                edges.push((node, next));
                next += 1;
            }
        }
        node += 1;
    }
    if shape.len() > next - 1 {
        return Err(invalid(format!(
            "shape has {} entries but the tree only has {} nodes",
            shape.len(),
            next - 1
        )));
    }
    Graph::new(next - 1, edges)
}

/// Builds the family's graph in its canonical numbering.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match spec {
        FamilySpec::Path(n) => Graph::new(*n, (1..*n).map(|i| (i, i + 1))),
        FamilySpec::Cycle(n) => Graph::new(*n, (1..=*n).map(|i| (i, i % n + 1))),
        FamilySpec::Gear(n) => {
            let rim_last = 2 * n + 1;
            let mut edges: Vec<_> = (2..rim_last).map(|i| (i, i + 1)).collect();
            edges.push((2, rim_last));
            edges.extend((1..=*n).map(|i| (1, 2 * i + 1)));
            Graph::new(rim_last, edges)
        }
        FamilySpec::Snake { k, n } => {
            let (m, edges) = snake_edges(*k, *n);
            Graph::new(m, edges)
        }
        FamilySpec::StarGon { k, n } => {
            let (m, edges) = snake_edges(*k, n + 1);
            let merge = |v: Vertex| if v == m { 1 } else { v };
            Ok(Graph::new_merging(
                m - 1,
                edges.into_iter().map(|(a, b)| (merge(a), merge(b))),
            ))
        }
        FamilySpec::Book { k, n } => {
            let inner = k - 2;
            let mut edges = vec![(1, 2)];
            for page in 0..*n {
                let first = 3 + page * inner;
                let last = first + inner - 1;
                edges.push((1, first));
                edges.extend((first..last).map(|v| (v, v + 1)));
                edges.push((last, 2));
            }
            Graph::new(2 + n * inner, edges)
        }
        FamilySpec::Mobius(n) => {
            let n = *n;
            let mut edges = Vec::with_capacity(3 * n);
            for i in 1..n {
                edges.push((i, i + 1));
                edges.push((n + i, n + i + 1));
            }
            edges.extend((1..=n).map(|i| (i, n + i)));
            edges.push((n + 1, n));
            edges.push((1, 2 * n));
            Graph::new(2 * n, edges)
        }
        FamilySpec::Caterpillar(counts) => {
            let s = counts.len() + 2;
            let mut edges: Vec<_> = (1..s).map(|i| (i, i + 1)).collect();
            let mut next = s + 1;
            for (j, &c) in counts.iter().enumerate() {
                for _ in 0..c {
                    edges.push((j + 2, next));
                    next += 1;
                }
            }
            Graph::new(next - 1, edges)
        }
        FamilySpec::Spider(legs) => {
            let mut edges = Vec::new();
            let mut next = 2;
            for &len in legs {
                let mut prev = 1;
                for _ in 0..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            Graph::new(next - 1, edges)
        }
        FamilySpec::Banana { n, k } => {
            let mut edges = Vec::new();
            for i in 0..*n {
                let u = 2 + i * k;
                let w = u + 1;
                edges.push((1, u));
                edges.push((u, w));
                edges.extend((w + 1..u + k).map(|leaf| (w, leaf)));
            }
            Graph::new(n * k + 1, edges)
        }
        FamilySpec::Firecracker { n, k } => {
            let (n, k) = (*n, *k);
            let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            if k >= 2 {
                edges.extend((1..=n).map(|i| (i, n + i)));
            }
            if k >= 3 {
                edges.extend((1..=n).map(|i| (n + i, 2 * n + i)));
                let extra = k - 3;
                for i in 1..=n {
                    let base = 3 * n + (i - 1) * extra;
                    edges.extend((1..=extra).map(|j| (n + i, base + j)));
                }
            }
            Graph::new(n * k, edges)
        }
        FamilySpec::FullKAry { k, shape } => shaped_tree(shape, |_| *k),
        FamilySpec::Cayley { k, shape } => {
            shaped_tree(shape, |root| if root { *k } else { k - 1 })
        }
        FamilySpec::FullBinary(shape) => shaped_tree(shape, |_| 2),
        FamilySpec::CompleteBinary(n) => Graph::new(*n, (2..=*n).map(|i| (i / 2, i))),
        FamilySpec::RandomTree { n, seed } => Ok(random_tree(*n, *seed)),
    }
}

/// Uniformly random labeled tree on `1..=n`, decoded from a random Prüfer
/// sequence drawn from a seeded ChaCha stream.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "random_tree needs n >= 1");
    if n <= 2 {
        return Graph::new(n, (n == 2).then_some((1, 2))).expect("trivial tree");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    prufer_decode(n, &seq)
}

/// Decodes a Prüfer sequence of length `n - 2` over `1..=n` into its tree.
pub fn prufer_decode(n: usize, seq: &[Vertex]) -> Graph {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n + 1];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 1;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple tree")
}

/// If `t` is a caterpillar, returns the pendant counts of a spine through it
/// (the spec that regenerates an isomorphic tree).
pub fn caterpillar_counts(t: &Graph) -> Option<Vec<usize>> {
    if !is_tree(t) || t.vertex_count() < 2 {
        return None;
    }
    if t.vertex_count() == 2 {
        return Some(Vec::new());
    }
    let inner: Vec<Vertex> = t.vertices().filter(|&v| t.degree(v) > 1).collect();
    let inner_deg = |v: Vertex| t.neighbors(v).iter().filter(|&&w| t.degree(w) > 1).count();
    if inner.iter().any(|&v| inner_deg(v) > 2) {
        return None;
    }
    // Non-leaves induce a path; walk it from one end.
    let start = *inner.iter().find(|&&v| inner_deg(v) <= 1)?;
    let mut order = vec![start];
    let mut prev = 0;
    let mut cur = start;
    loop {
        let next = t
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev && t.degree(w) > 1);
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
                order.push(w);
            }
            None => break,
        }
    }
    if order.len() != inner.len() {
        return None;
    }
    // The spine borrows one leaf at each end of the inner path, so every
    // inner vertex has exactly two spine neighbors.
    Some(order.iter().map(|&v| t.degree(v) - 2).collect())
}

/// If `t` is a spider (exactly one vertex of degree >= 3), returns its leg
/// lengths ordered by the ascending id of each leg's first vertex.
pub fn spider_legs(t: &Graph) -> Option<Vec<usize>> {
    if !is_tree(t) {
        return None;
    }
    let mut centers = t.vertices().filter(|&v| t.degree(v) >= 3);
    let center = centers.next()?;
    if centers.next().is_some() {
        return None;
    }
    Some(
        t.neighbors(center)
            .iter()
            .map(|&first| {
                let (mut prev, mut cur, mut len) = (center, first, 1);
                while let Some(&next) = t.neighbors(cur).iter().find(|&&w| w != prev) {
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            })
            .collect(),
    )
}
