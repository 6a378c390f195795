//! Independent oracles and corpus builders shared by integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use magiclab_core::{build_regular, random_regular, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every nonincreasing degree sequence realized by some simple graph on `n`
/// vertices, by enumerating all `2^(n choose 2)` edge subsets.
pub fn realized_sequences(n: usize) -> BTreeSet<Vec<usize>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut deg = vec![0usize; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(deg);
    }
    out
}

/// All nonincreasing sequences of length `n` with entries in `0..=max`.
pub fn all_sequences(n: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in (0..=cap).rev() {
            cur.push(x);
            go(n, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max, &mut Vec::new(), &mut out);
    out
}

/// Seeded Erdős–Rényi G(n, p).
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

/// `count` random graphs with 1..=max_n vertices and varying density.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.1..0.9);
            gnp(n, p, rng.gen())
        })
        .collect()
}

/// Bridge-freeness by deleting each edge and re-testing connectivity.
pub fn two_edge_connected_by_deletion(g: &Graph) -> bool {
    g.order() >= 2 && g.is_connected() && (0..g.size()).all(|e| g.without_edge(e).is_connected())
}

/// Small named graphs.
pub fn named_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("K1", Graph::empty(1)),
        ("K2", Graph::complete(2)),
        ("P3", Graph::path(3)),
        ("C4", Graph::cycle(4).unwrap()),
        ("C5", Graph::cycle(5).unwrap()),
        ("K4", Graph::complete(4)),
        ("K6", Graph::complete(6)),
        ("star4", Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()),
        (
            "K3,3",
            Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap(),
        ),
        ("petersen", Graph::petersen()),
        ("octahedron", magiclab_core::base_4regular_6()),
    ]
}

/// Regular graphs: the two-vertex-growth builder for `r` in {4, 5} and
/// even `n` in 6..=30, plus seeded random 3-, 4- and 5-regular graphs.
pub fn regular_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for r in [4, 5] {
        for n in (6..=30).step_by(2) {
            out.push(build_regular(n, r).unwrap());
        }
    }
    for seed in 0..20u64 {
        for n in (4..=12).step_by(2) {
            out.push(random_regular(n, 3, seed).unwrap());
        }
        for n in 5..=10 {
            out.push(random_regular(n, 4, seed).unwrap());
        }
        for n in (6..=16).step_by(2) {
            out.push(random_regular(n, 5, seed).unwrap());
        }
    }
    out
}

/// A 5-regular graph on 22 vertices with no perfect matching: a centre
/// vertex joined by single bridges to two 7-vertex gadgets and by three
/// edges to a third. Deleting the centre leaves three odd components.
pub fn bridged_five_regular_22() -> Graph {
    let mut edges = Vec::new();
    let centre = 0;
    for k in 0..3 {
        let base = 1 + 7 * k;
        // Complement of the gadget inside K7.
        let missing: &[(usize, usize)] = if k < 2 {
            &[(0, 1), (2, 3), (4, 5), (5, 6)]
        } else {
            &[(0, 1), (2, 3), (4, 5), (5, 6), (4, 6)]
        };
        for i in 0..7 {
            for j in i + 1..7 {
                if !missing.contains(&(i, j)) {
                    edges.push((base + i, base + j));
                }
            }
        }
        let ports: &[usize] = if k < 2 { &[5] } else { &[4, 5, 6] };
        edges.extend(ports.iter().map(|&p| (centre, base + p)));
    }
    Graph::new(22, edges).unwrap()
}

/// The smallest counterexample found to "decremented sequence graphical
/// implies a 1-factor": two pendant vertices force the matching.
pub fn lemma11_counterexample() -> Graph {
    Graph::new(6, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (4, 5)]).unwrap()
}

/// Whether any simple graph with the same degree sequence as `g` has a
/// perfect matching, by enumerating every graph on `g.order()` vertices.
pub fn some_realization_has_one_factor(g: &Graph) -> bool {
    let n = g.order();
    let target = g.degrees().sorted_desc();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..(1u64 << pairs.len())).any(|mask| {
        if mask.count_ones() as usize != g.size() {
            return false;
        }
        let h = Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        )
        .unwrap();
        h.degrees().sorted_desc() == target && magiclab_core::perfect_matching(&h).is_ok()
    })
}

/// Seeded uniform G(n, m).
pub fn gnm(n: usize, m: usize, seed: u64) -> Graph {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    pairs.truncate(m);
    Graph::new(n, pairs).unwrap()
}
