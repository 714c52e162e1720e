//! Acceptance checks. Each criterion prints one `PASS`/`FAIL` line; the
//! process exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nprime::families::random_tree;
use nprime::labelers::{
    admits_bivalent_free_procedure, label_bivalent_free, label_snake, snake_case,
};
use nprime::search::{bertrand_prime, coprime_matching};
use nprime::trees_enum::{
    ahu_canonical, enumerate_free_trees, free_trees_by_leaf_extension, free_trees_by_prufer,
    scan_conjecture,
};
use nprime::{
    brute_force_oracle, contract_one_max, extend_pendant, find_labeling, gcd, gcd_of, generate,
    label_family, verify, Error, FamilySpec, Graph, Labeling, SearchConfig, Status, StatusKind,
};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verified(g: &Graph, f: &Labeling) -> bool {
    f.len() == g.vertex_count() && verify(g, f).map(|r| r.ok).unwrap_or(false)
}

/// Level-order internal/leaf decisions for every full binary tree with at
/// most `max_internal` internal nodes.
fn full_binary_shapes(max_internal: usize) -> Vec<Vec<bool>> {
    fn rec(pending: usize, internal: usize, max: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if pending == 0 {
            out.push(cur.clone());
            return;
        }
        cur.push(false);
        rec(pending - 1, internal, max, cur, out);
        cur.pop();
        if internal < max {
            cur.push(true);
            rec(pending + 1, internal + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, 0, max_internal, &mut Vec::new(), &mut out);
    out
}

/// Nondecreasing leg lists with `legs` entries from `1..=max_len`.
fn leg_multisets(legs: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, min: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for l in min..=max {
            cur.push(l);
            rec(left - 1, l, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(legs, 1, max_len, &mut Vec::new(), &mut out);
    out
}

/// Gives every degree-2 vertex an extra leaf.
fn repair_bivalent(t: &Graph) -> Graph {
    let mut edges = t.edges().to_vec();
    let mut n = t.vertex_count();
    for v in t.vertices().filter(|&v| t.degree(v) == 2) {
        n += 1;
        edges.push((v, n));
    }
    Graph::new(n, edges).unwrap()
}

fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let t = random_tree(n, rng.gen());
    let mut edges = t.edges().to_vec();
    for u in 1..=n {
        for v in u + 1..=n {
            if !t.has_edge(u, v) && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

fn labeler_sweep() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut specs = Vec::new();
    specs.extend((3..=60).map(FamilySpec::Gear));
    specs.extend((2..=60).map(|n| FamilySpec::Snake { k: 3, n }));
    specs.extend((2..=40).map(|n| FamilySpec::Snake { k: 4, n }));
    specs.extend((2..=32).map(|n| FamilySpec::Snake { k: 5, n }));
    let mut snake_cases = 0;
    for k in 6..=41 {
        for n in 3..=65 {
            if snake_case(k, n).is_some() {
                snake_cases += 1;
                specs.push(FamilySpec::Snake { k, n });
            }
        }
    }
    for k in 3..=5 {
        specs.extend((3..=30).map(|n| FamilySpec::StarGon { k, n }));
    }
    specs.extend((1..=50).map(|n| FamilySpec::Book { k: 5, n }));
    specs.extend((3..=50).map(FamilySpec::Mobius));
    for _ in 0..500 {
        let len = rng.gen_range(0..=18);
        specs.push(FamilySpec::Caterpillar((0..len).map(|_| rng.gen_range(0..=4)).collect()));
    }
    let mut spider_sets = 0;
    for legs in 3..=5 {
        for m in leg_multisets(legs, 5) {
            spider_sets += 1;
            specs.push(FamilySpec::Spider(m));
        }
    }
    for _ in 0..200 {
        let legs = rng.gen_range(3..=9);
        specs.push(FamilySpec::Spider((0..legs).map(|_| rng.gen_range(1..=15)).collect()));
    }
    for n in 3..=12 {
        specs.extend((4..=10).map(|k| FamilySpec::Banana { n, k }));
    }
    for n in 1..=40 {
        specs.extend((3..=8).map(|k| FamilySpec::Firecracker { n, k }));
    }
    let shapes = full_binary_shapes(7);
    ensure(shapes.len() == 626, || format!("{} full binary shapes, expected 626", shapes.len()))?;
    specs.extend(shapes.into_iter().map(FamilySpec::FullBinary));
    specs.extend((1..=63).map(FamilySpec::CompleteBinary));

    let mut bad = Vec::new();
    for spec in &specs {
        match label_family(spec) {
            Ok((g, f)) if verified(&g, &f) => {}
            Ok(_) => bad.push(format!("{spec}: violation")),
            Err(e) => bad.push(format!("{spec}: {e}")),
        }
    }
    let mut bivalent = 0;
    while bivalent < 500 {
        let t = repair_bivalent(&random_tree(rng.gen_range(2..=60), rng.gen()));
        ensure(admits_bivalent_free_procedure(&t), || "repair left a degree-2 vertex".into())?;
        bivalent += 1;
        match label_bivalent_free(&t) {
            Ok(f) if verified(&t, &f) => {}
            Ok(_) => bad.push(format!("bivalent-free tree {:?}: violation", t.edges())),
            Err(e) => bad.push(format!("bivalent-free tree {:?}: {e}", t.edges())),
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(bad.is_empty(), || format!("{} failures, first: {}", bad.len(), bad[0]))?;
    ensure(secs < 30.0, || format!("sweep took {secs:.1} s"))?;
    Ok(format!(
        "{} labelings verified ({snake_cases} snake cases k>=6, {spider_sets} spider multisets, 500 bivalent-free trees) in {secs:.1} s",
        specs.len() + bivalent
    ))
}

fn hexagon_negative() -> Check {
    let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
    let oracle = brute_force_oracle(&c6).unwrap();
    ensure(oracle.status == Status::Exhausted, || "oracle found a labeling of C6".into())?;
    ensure(oracle.nodes_explored == 720, || {
        format!("oracle checked {} bijections", oracle.nodes_explored)
    })?;
    let search = find_labeling(&c6, &SearchConfig::default());
    ensure(search.status == Status::Exhausted, || format!("search says {:?}", search.status))?;
    Ok(format!(
        "C6 exhausted over 720 bijections; search agrees after {} nodes",
        search.nodes_explored
    ))
}

fn cycle_positive() -> Check {
    for n in [3, 4, 5, 7, 8, 9, 11, 12, 13] {
        let g = generate(&FamilySpec::Cycle(n)).unwrap();
        match find_labeling(&g, &SearchConfig::default()).status {
            Status::Found(f) => ensure(verified(&g, &f), || format!("C{n}: bad labeling"))?,
            other => return Err(format!("C{n}: {other:?}")),
        }
    }
    let data: Vec<String> = [6, 10, 14]
        .iter()
        .map(|&n| {
            let g = generate(&FamilySpec::Cycle(n)).unwrap();
            format!("C{n} {:?}", find_labeling(&g, &SearchConfig::default()).status.kind())
        })
        .collect();
    Ok(format!(
        "found for n in {{3,4,5,7,8,9,11,12,13}}; n = 2 mod 4 data: {}",
        data.join(", ")
    ))
}

fn conjecture_scan() -> Check {
    const EXPECTED: [usize; 11] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235];
    let start = Instant::now();
    for n in 1..=11 {
        let mut primary: Vec<String> = enumerate_free_trees(n)
            .unwrap()
            .map(|t| ahu_canonical(&t).unwrap())
            .collect();
        primary.sort();
        let grown: Vec<String> = free_trees_by_leaf_extension(n)
            .unwrap()
            .iter()
            .map(|t| ahu_canonical(t).unwrap())
            .collect();
        ensure(primary == grown, || format!("n = {n}: level sequences and leaf extension disagree"))?;
        if n <= 8 {
            let prufer: Vec<String> = free_trees_by_prufer(n)
                .unwrap()
                .iter()
                .map(|t| ahu_canonical(t).unwrap())
                .collect();
            ensure(primary == prufer, || format!("n = {n}: level sequences and Prufer disagree"))?;
        }
    }
    let report = scan_conjecture(11, &SearchConfig::default()).unwrap();
    ensure(report.tree_counts() == EXPECTED, || {
        format!("counts {:?}", report.tree_counts())
    })?;
    ensure(report.holds(), || {
        let c = report.rows.iter().flat_map(|r| &r.failures).next().unwrap();
        format!("counterexample {}", c.canonical)
    })?;
    ensure(report.inconclusive_count() == 0, || {
        format!("{} inconclusive", report.inconclusive_count())
    })?;
    Ok(format!(
        "counts {:?} agree across generators; 0 failures, 0 inconclusive in {:.1} s",
        EXPECTED,
        start.elapsed().as_secs_f64()
    ))
}

fn oracle_equivalence() -> Check {
    let mut graphs: Vec<Graph> = (1..=7).flat_map(|n| enumerate_free_trees(n).unwrap()).collect();
    let trees = graphs.len();
    graphs.extend((3..=7).map(|n| generate(&FamilySpec::Cycle(n)).unwrap()));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        graphs.push(random_connected_graph(&mut rng, n, 0.3));
    }
    let mut exhausted = 0;
    for g in &graphs {
        let ours = find_labeling(g, &SearchConfig::default()).status.kind();
        let oracle = brute_force_oracle(g).unwrap().status.kind();
        ensure(ours == oracle, || format!("{g:?}: search {ours:?}, oracle {oracle:?}"))?;
        exhausted += usize::from(oracle == StatusKind::Exhausted);
    }
    Ok(format!(
        "{} graphs ({trees} trees, 5 cycles, 200 random) agree; {exhausted} without a labeling",
        graphs.len()
    ))
}

fn transformations() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let cfg = SearchConfig::default();
    let (mut contracted, mut rejected_contract) = (0, 0);
    while contracted < 200 {
        let n = rng.gen_range(4..=11);
        let g = random_connected_graph(&mut rng, n, 0.15);
        let Status::Found(f) = find_labeling(&g, &cfg).status else {
            continue;
        };
        let (u1, u2) = (f.vertex_with(1).unwrap(), f.vertex_with(n).unwrap());
        match contract_one_max(&g, &f, u1, u2) {
            Ok((h, lab)) => {
                ensure(verified(&h, &lab), || format!("contraction of {g:?} fails verify"))?;
                contracted += 1;
            }
            Err(Error::PreconditionViolated(_)) => {
                let expected = g.has_edge(u1, u2) || (g.degree(u1) <= 1 && g.degree(u2) <= 1);
                ensure(expected, || format!("contraction of {g:?} rejected wrongly"))?;
                rejected_contract += 1;
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    let (mut extended, mut rejected_pendant) = (0, 0);
    while extended < 200 {
        let n = rng.gen_range(3..=10);
        let mut g = random_connected_graph(&mut rng, n, 0.2);
        let Status::Found(mut f) = find_labeling(&g, &cfg).status else {
            continue;
        };
        for _ in 0..rng.gen_range(1..=3) {
            let v = rng.gen_range(1..=g.vertex_count());
            match extend_pendant(&g, &f, v) {
                Ok((h, lab)) => {
                    ensure(verified(&h, &lab), || format!("pendant on {g:?} at {v} fails verify"))?;
                    (g, f) = (h, lab);
                    extended += 1;
                }
                Err(Error::PreconditionViolated(_)) => {
                    ensure(g.degree(v) <= 1, || format!("pendant at {v} rejected wrongly"))?;
                    rejected_pendant += 1;
                }
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(format!(
        "{contracted} contractions and {extended} pendant extensions verified; preconditions rejected {rejected_contract} and {rejected_pendant} inputs"
    ))
}

fn number_theory() -> Check {
    for n in 1..=2000 {
        let m = coprime_matching(n);
        let mut seen = vec![false; n];
        for (x, y) in m.pairs() {
            ensure((2 * n + 1..=3 * n).contains(&y), || format!("n = {n}: {x} -> {y} out of range"))?;
            ensure(!std::mem::replace(&mut seen[y - 2 * n - 1], true), || {
                format!("n = {n}: {y} used twice")
            })?;
            ensure(gcd(x, y) == 1, || format!("n = {n}: gcd({x}, {y}) > 1"))?;
        }
    }
    const N: usize = 1_000_000;
    let mut composite = vec![false; 2 * N + 1];
    let mut p = 2;
    while p * p <= 2 * N {
        if !composite[p] {
            (p * p..=2 * N).step_by(p).for_each(|m| composite[m] = true);
        }
        p += 1;
    }
    // next_prime[i] = smallest prime >= i
    let mut next_prime = vec![0; 2 * N + 2];
    next_prime[2 * N + 1] = usize::MAX;
    for i in (2..=2 * N).rev() {
        next_prime[i] = if composite[i] { next_prime[i + 1] } else { i };
    }
    for n in 1..=N {
        let expected = next_prime[n + 1];
        ensure(expected <= 2 * n, || format!("sieve found no prime in ({n}, {}]", 2 * n))?;
        let got = bertrand_prime(n);
        ensure(got == expected, || format!("bertrand_prime({n}) = {got}, sieve says {expected}"))?;
    }
    Ok("coprime matchings perfect and coprime for n <= 2000; bertrand_prime matches sieve for n <= 10^6".into())
}

fn gcd_identities() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut instances = 0;
    while instances < 10_000 {
        let a: i64 = rng.gen_range(1..1_000_000);
        let b: i64 = rng.gen_range(1..1_000_000);
        let c: i64 = rng.gen_range(-1000..=1000);
        let d: i64 = rng.gen_range(-1000..=1000);
        let unit = *[-1i64, 1].choose(&mut rng).unwrap();
        let g = gcd_of(&[a as usize, b as usize]).unwrap();
        let first = unit * a + d * b;
        let second = c * a + unit * b;
        let general = c * a + d * b;
        if first < 1 || second < 1 || general < 1 {
            continue;
        }
        instances += 1;
        let (first, second, general) = (first as usize, second as usize, general as usize);
        ensure(g == gcd_of(&[first, b as usize]).unwrap(), || {
            format!("gcd{{{a},{b}}} != gcd{{{unit}*{a}+{d}*{b}, {b}}}")
        })?;
        ensure(g == gcd_of(&[a as usize, second]).unwrap(), || {
            format!("gcd{{{a},{b}}} != gcd{{{a}, {c}*{a}+{unit}*{b}}}")
        })?;
        let expected = g * gcd(c.unsigned_abs() as usize, b as usize / g);
        ensure(gcd_of(&[general, b as usize]).unwrap() == expected, || {
            format!("general combination law fails for a={a} b={b} c={c} d={d}")
        })?;
    }
    Ok(format!("{instances} instances of each identity hold exactly"))
}

fn hexagonal_snakes() -> Check {
    for n in [3, 7, 11, 15] {
        let g = generate(&FamilySpec::Snake { k: 6, n }).unwrap();
        let f = label_snake(6, n).map_err(|e| format!("n = {n}: {e}"))?;
        ensure(verified(&g, &f), || format!("hexagonal snake n = {n} fails verify"))?;
    }
    Ok("hexagonal snakes n = 3, 7, 11, 15 verified".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("constructive labeler sweep", labeler_sweep),
        ("C6 negative oracle", hexagon_negative),
        ("cycle positive oracle", cycle_positive),
        ("all-trees scan to n = 11", conjecture_scan),
        ("search vs brute-force oracle", oracle_equivalence),
        ("contraction and pendant lemmas", transformations),
        ("coprime matchings and Bertrand primes", number_theory),
        ("gcd identities", gcd_identities),
        ("hexagonal snake spotlight", hexagonal_snakes),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{secs:.1} s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail} [{secs:.1} s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
