//! Exact search for neighborhood-prime labelings of arbitrary graphs, the
//! brute-force oracle it is tested against, and the number-theoretic helpers
//! used by the firecracker labeling.

mod numtheory;

pub use numtheory::{bertrand_prime, coprime_matching, is_prime, CoprimeMatching};

use crate::error::{Error, Result};
use crate::graph::{gcd, verify, Graph, Labeling, Vertex};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum VertexOrder {
    /// Highest degree first, ties by id.
    #[default]
    DegreeDescending,
    NaturalOrder,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of label assignments tried; `None` is unbounded.
    pub node_budget: Option<u64>,
    pub order: VertexOrder,
    pub find_all: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: Some(DEFAULT_NODE_BUDGET),
            order: VertexOrder::default(),
            find_all: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Found(Labeling),
    /// The whole space was searched and no labeling exists.
    Exhausted,
    /// The node budget ran out first.
    Inconclusive,
}

impl Status {
    pub fn kind(&self) -> StatusKind {
        match self {
            Status::Found(_) => StatusKind::Found,
            Status::Exhausted => StatusKind::Exhausted,
            Status::Inconclusive => StatusKind::Inconclusive,
        }
    }
}

/// Status without the payload, for comparisons between routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StatusKind {
    Found,
    Exhausted,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: Status,
    pub nodes_explored: u64,
    /// Every solution, when requested. Partial if the budget ran out.
    pub all_solutions: Option<Vec<Labeling>>,
}

impl SearchOutcome {
    pub fn labeling(&self) -> Option<&Labeling> {
        match &self.status {
            Status::Found(f) => Some(f),
            _ => None,
        }
    }
}

enum Flow {
    Continue,
    Stop,
    OutOfBudget,
}

struct Searcher<'a> {
    g: &'a Graph,
    order: Vec<Vertex>,
    label_of: Vec<usize>,
    used: Vec<bool>,
    // running gcd of the labeled neighbors of each vertex (0 = none yet)
    acc: Vec<usize>,
    // neighbors of each vertex still unlabeled
    open: Vec<usize>,
    nodes: u64,
    budget: u64,
    find_all: bool,
    solutions: Vec<Labeling>,
}

impl Searcher<'_> {
    fn dfs(&mut self, depth: usize) -> Flow {
        let n = self.g.vertex_count();
        if depth == n {
            self.solutions
                .push(Labeling::new(self.label_of[1..].to_vec()).expect("search builds bijections"));
            return if self.find_all { Flow::Continue } else { Flow::Stop };
        }
        let v = self.order[depth];
        let g = self.g;
        let mut saved = Vec::with_capacity(g.degree(v));
        for label in 1..=n {
            if self.used[label] {
                continue;
            }
            if self.nodes >= self.budget {
                return Flow::OutOfBudget;
            }
            self.nodes += 1;
            self.used[label] = true;
            self.label_of[v] = label;
            saved.clear();
            let mut dead = false;
            for &w in g.neighbors(v) {
                saved.push(self.acc[w]);
                self.acc[w] = gcd(self.acc[w], label);
                self.open[w] -= 1;
                // A neighborhood closes when its last member gets labeled.
                if self.open[w] == 0 && g.degree(w) >= 2 && self.acc[w] != 1 {
                    dead = true;
                }
            }
            let flow = if dead { Flow::Continue } else { self.dfs(depth + 1) };
            for (&w, &old) in g.neighbors(v).iter().zip(&saved) {
                self.acc[w] = old;
                self.open[w] += 1;
            }
            self.label_of[v] = 0;
            self.used[label] = false;
            match flow {
                Flow::Continue => {}
                stop => return stop,
            }
        }
        Flow::Continue
    }
}

/// Depth-first search over label assignments in `cfg.order`, pruning as soon
/// as a vertex of degree >= 2 has all its neighbors labeled with gcd >= 2.
/// Sound and complete within the budget; deterministic for a fixed config.
pub fn find_labeling(g: &Graph, cfg: &SearchConfig) -> SearchOutcome {
    let n = g.vertex_count();
    let mut order: Vec<Vertex> = g.vertices().collect();
    if cfg.order == VertexOrder::DegreeDescending {
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    }
    let mut s = Searcher {
        g,
        order,
        label_of: vec![0; n + 1],
        used: vec![false; n + 1],
        acc: vec![0; n + 1],
        open: (0..=n).map(|v| if v == 0 { 0 } else { g.degree(v) }).collect(),
        nodes: 0,
        budget: cfg.node_budget.unwrap_or(u64::MAX).max(1),
        find_all: cfg.find_all,
        solutions: Vec::new(),
    };
    let flow = s.dfs(0);
    let status = match (flow, s.solutions.first()) {
        (_, Some(f)) => Status::Found(f.clone()),
        (Flow::OutOfBudget, None) => Status::Inconclusive,
        (_, None) => Status::Exhausted,
    };
    if let Status::Found(f) = &status {
        debug_assert!(verify(g, f).map(|r| r.ok).unwrap_or(false));
    }
    SearchOutcome {
        status,
        nodes_explored: s.nodes,
        all_solutions: cfg.find_all.then_some(s.solutions),
    }
}

pub const BRUTE_FORCE_MAX_N: usize = 9;

/// Checks all `n!` bijections against [`verify`]. `nodes_explored` counts the
/// bijections checked and `all_solutions` lists every passing one in
/// lexicographic order.
pub fn brute_force_oracle(g: &Graph) -> Result<SearchOutcome> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::Usage(format!(
            "brute force is limited to n <= {BRUTE_FORCE_MAX_N}, got {n}"
        )));
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut checked = 0u64;
    let mut solutions = Vec::new();
    loop {
        checked += 1;
        let f = Labeling::new(perm.clone())?;
        if verify(g, &f)?.ok {
            solutions.push(f);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let status = match solutions.first() {
        Some(f) => Status::Found(f.clone()),
        None => Status::Exhausted,
    };
    Ok(SearchOutcome {
        status,
        nodes_explored: checked,
        all_solutions: Some(solutions),
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
