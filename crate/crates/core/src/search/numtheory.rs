
/// Deterministic trial division.
pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x % 2 == 0 {
        return x == 2;
    }
    let mut d = 3;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime `p` with `n < p <= 2n`. Exists for every `n >= 1`.
pub fn bertrand_prime(n: usize) -> usize {
    assert!(n >= 1, "bertrand_prime needs n >= 1");
    (n + 1..=2 * n)
        .find(|&p| is_prime(p as u64))
        .expect("Bertrand's postulate guarantees a prime in (n, 2n]")
}

/// Perfect matching between `1..=n` and `2n+1..=3n` with coprime pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeMatching {
    n: usize,
    // map[x - 1] is the partner of x
    map: Vec<usize>,
}

impl CoprimeMatching {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Partner of `x` in `2n+1..=3n`.
    pub fn partner(&self, x: usize) -> usize {
        self.map[x - 1]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map.iter().enumerate().map(|(i, &y)| (i + 1, y))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

/// Smallest-prime-factor table for `0..=max`.
fn spf_table(max: usize) -> Vec<usize> {
    let mut spf: Vec<usize> = (0..=max).collect();
    let mut p = 2;
    while p * p <= max {
        if spf[p] == p {
            for m in (p * p..=max).step_by(p) {
                if spf[m] == m {
                    spf[m] = p;
                }
            }
        }
        p += 1;
    }
    spf
}

fn distinct_primes(mut v: usize, spf: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    while v > 1 {
        let p = spf[v];
        out.push(p);
        while v % p == 0 {
            v /= p;
        }
    }
    out
}

type Bits = Vec<u64>;

fn ones(len: usize) -> Bits {
    let mut b = vec![u64::MAX; len.div_ceil(64)];
    if len % 64 != 0 {
        *b.last_mut().unwrap() = (1u64 << (len % 64)) - 1;
    }
    b
}

fn test(b: &[u64], i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set(b: &mut [u64], i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn clear(b: &mut [u64], i: usize) {
    b[i / 64] &= !(1 << (i % 64));
}

/// Smallest index set in both `a` and `b`.
fn first_common(a: &[u64], b: &[u64]) -> Option<usize> {
    a.iter()
        .zip(b)
        .position(|(x, y)| x & y != 0)
        .map(|w| w * 64 + (a[w] & b[w]).trailing_zeros() as usize)
}

/// Bipartite coprime graph over local indices: row x stands for x+1,
/// column y for 2n+1+y. Adjacency is kept as bitsets in both directions.
struct CoprimeGraph {
    rows: Vec<Bits>,
    cols: Vec<Bits>,
}

impl CoprimeGraph {
    fn new(n: usize) -> Self {
        let spf = spf_table(3 * n);
        let base = 2 * n + 1;
        let rows = (0..n)
            .map(|x| {
                let mut b = ones(n);
                for p in distinct_primes(x + 1, &spf) {
                    for y in ((p - base % p) % p..n).step_by(p) {
                        clear(&mut b, y);
                    }
                }
                b
            })
            .collect();
        let cols = (0..n)
            .map(|y| {
                let mut b = ones(n);
                for p in distinct_primes(base + y, &spf) {
                    for x in (p - 1..n).step_by(p) {
                        clear(&mut b, x);
                    }
                }
                b
            })
            .collect();
        CoprimeGraph { rows, cols }
    }
}

struct Matching {
    x_of: Vec<usize>,
    y_of: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl Matching {
    fn assign(&mut self, x: usize, y: usize) {
        self.x_of[y] = x;
        self.y_of[x] = y;
    }

    /// BFS for an augmenting path from the unmatched row `x`. Returns the
    /// previously free column the path ends in.
    fn augment(&mut self, g: &CoprimeGraph, x: usize) -> Option<usize> {
        let n = self.y_of.len();
        let mut unseen = ones(n);
        let mut parent = vec![NONE; n];
        let mut queue = std::collections::VecDeque::from([x]);
        while let Some(r) = queue.pop_front() {
            for w in 0..unseen.len() {
                let mut word = g.rows[r][w] & unseen[w];
                unseen[w] &= !word;
                while word != 0 {
                    let y = w * 64 + word.trailing_zeros() as usize;
                    word &= word - 1;
                    parent[y] = r;
                    if self.x_of[y] == NONE {
                        let free = y;
                        let mut col = y;
                        loop {
                            let r = parent[col];
                            let prev = self.y_of[r];
                            self.assign(r, col);
                            if r == x {
                                return Some(free);
                            }
                            col = prev;
                        }
                    }
                    queue.push_back(self.x_of[y]);
                }
            }
        }
        None
    }
}

/// The lexicographically smallest perfect coprime matching of `1..=n` into
/// `2n+1..=3n`.
///
/// A perfect matching is built by augmenting paths (x ascending, smallest
/// free y first). Then rows are fixed in order: row x moves to the smallest
/// partner y such that the owner of y can shift along an alternating path
/// into x's current partner using only rows after x. Those y are found with
/// one reverse BFS per row. Panics if no perfect matching exists, which
/// would contradict the Pomerance-Selfridge theorem.
pub fn coprime_matching(n: usize) -> CoprimeMatching {
    assert!(n >= 1, "coprime_matching needs n >= 1");
    let g = CoprimeGraph::new(n);
    let mut m = Matching {
        x_of: vec![NONE; n],
        y_of: vec![NONE; n],
    };
    let mut free_cols = ones(n);
    for x in 0..n {
        if let Some(y) = first_common(&g.rows[x], &free_cols) {
            m.assign(x, y);
            clear(&mut free_cols, y);
        } else {
            let y = m.augment(&g, x);
            clear(&mut free_cols, y.expect("Pomerance-Selfridge guarantees a perfect matching"));
        }
    }

    // Columns owned by rows not yet fixed.
    let mut open_cols = ones(n);
    let mut next_col = vec![NONE; n];
    for x in 0..n {
        let c = m.y_of[x];
        let best = match first_common(&g.rows[x], &open_cols) {
            Some(y) if y < c => {
                let owner = m.x_of[y];
                if test(&g.rows[owner], c) {
                    next_col[owner] = c;
                    y
                } else {
                    // Columns from which an alternating path reaches c.
                    let mut reach = vec![0u64; open_cols.len()];
                    set(&mut reach, c);
                    let mut unseen = ones(n);
                    let start = (x + 1) / 64;
                    unseen[..start].iter_mut().for_each(|w| *w = 0);
                    for r in start * 64..=x.min(n - 1) {
                        clear(&mut unseen, r);
                    }
                    let mut queue = vec![c];
                    while let Some(t) = queue.pop() {
                        for w in start..unseen.len() {
                            let mut word = g.cols[t][w] & unseen[w];
                            unseen[w] &= !word;
                            while word != 0 {
                                let r = w * 64 + word.trailing_zeros() as usize;
                                word &= word - 1;
                                next_col[r] = t;
                                let y = m.y_of[r];
                                set(&mut reach, y);
                                queue.push(y);
                            }
                        }
                    }
                    first_common(&g.rows[x], &reach).expect("c is reachable")
                }
            }
            _ => c,
        };
        if best != c {
            let mut mover = x;
            let mut col = best;
            loop {
                let r = m.x_of[col];
                m.assign(mover, col);
                if r == x {
                    break;
                }
                mover = r;
                col = next_col[r];
            }
        }
        clear(&mut open_cols, m.y_of[x]);
    }

    CoprimeMatching {
        n,
        map: m.y_of.into_iter().map(|y| 2 * n + 1 + y).collect(),
    }
}
