//! Regular graph generators.
//!
//! [`build_regular`] grows a 4- or 5-regular graph of any even order `n >= 6`
//! from a six-vertex base. Each step picks two edge-disjoint matchings
//! `m1`, `m2` of size two, deletes their four edges, adds two new vertices
//! `a` and `b`, joins the endpoints of `m1` to `a` and those of `m2` to `b`,
//! and for degree 5 also adds the edge `ab`. Every touched old vertex loses
//! exactly as many edges as it gains, so regularity is preserved.
//!
//! [`random_regular`] samples regular graphs from a seeded pairing model and
//! is intended for building test corpora.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

/// Pairing attempts before [`random_regular`] gives up.
pub const PAIRING_RETRY_LIMIT: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("no surgery plan found (graph has no two edge-disjoint 2-matchings)")]
    NoPlanFound,
    #[error("invalid surgery plan: {0}")]
    InvalidPlan(&'static str),
    #[error("unsupported parameters n={n}, r={r}: {reason}")]
    UnsupportedParameters {
        n: usize,
        r: usize,
        reason: &'static str,
    },
    #[error("n*r must be even (n={n}, r={r})")]
    ParityViolation { n: usize, r: usize },
    #[error("pairing model failed after {0} attempts")]
    RetryLimitExceeded(usize),
}

/// Two edge-disjoint matchings of size two, as edge indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurgeryPlan {
    pub m1: [usize; 2],
    pub m2: [usize; 2],
}

impl SurgeryPlan {
    /// Checks the plan's invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), ConstructError> {
        let all = [self.m1[0], self.m1[1], self.m2[0], self.m2[1]];
        if all.iter().any(|&e| e >= g.size()) {
            return Err(ConstructError::InvalidPlan("edge index out of range"));
        }
        let disjoint = |[e, f]: [usize; 2]| {
            let (a, b) = g.edge(e);
            let (c, d) = g.edge(f);
            a != c && a != d && b != c && b != d
        };
        if !disjoint(self.m1) {
            return Err(ConstructError::InvalidPlan("m1 edges share a vertex"));
        }
        if !disjoint(self.m2) {
            return Err(ConstructError::InvalidPlan("m2 edges share a vertex"));
        }
        if self.m1.iter().any(|e| self.m2.contains(e)) {
            return Err(ConstructError::InvalidPlan("m1 and m2 share an edge"));
        }
        Ok(())
    }
}

/// K6, the 5-regular base graph.
pub fn base_k6() -> Graph {
    Graph::complete(6)
}

/// The octahedron K(2,2,2): K6 minus the perfect matching {01, 23, 45}.
pub fn base_4regular_6() -> Graph {
    let edges = Graph::complete(6)
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1))
        .collect::<Vec<_>>();
    Graph::new(6, edges).expect("subgraph of K6 is simple")
}

// First pair (i, j), i < j, in lexicographic order of edge indices such that
// both edges are allowed and vertex-disjoint.
fn first_disjoint_pair(g: &Graph, allowed: impl Fn(usize) -> bool) -> Option<[usize; 2]> {
    let m = g.size();
    for i in (0..m).filter(|&i| allowed(i)) {
        let (a, b) = g.edge(i);
        let partner = (i + 1..m).filter(|&j| allowed(j)).find(|&j| {
            let (c, d) = g.edge(j);
            a != c && a != d && b != c && b != d
        });
        if let Some(j) = partner {
            return Some([i, j]);
        }
    }
    None
}

/// Deterministic scan in edge-index order: `m1` is the first vertex-disjoint
/// pair of edges, `m2` the first vertex-disjoint pair avoiding the edges of
/// `m1`. `m2` may share vertices with `m1`.
pub fn find_surgery_plan(g: &Graph) -> Result<SurgeryPlan, ConstructError> {
    let m1 = first_disjoint_pair(g, |_| true).ok_or(ConstructError::NoPlanFound)?;
    let m2 = first_disjoint_pair(g, |e| !m1.contains(&e)).ok_or(ConstructError::NoPlanFound)?;
    Ok(SurgeryPlan { m1, m2 })
}

/// Grows an `r`-regular graph (`r` in {4, 5}) by two vertices.
pub fn expand_two(g: &Graph, plan: &SurgeryPlan, r: usize) -> Result<Graph, ConstructError> {
    let n = g.order();
    if r != 4 && r != 5 {
        return Err(ConstructError::UnsupportedParameters {
            n,
            r,
            reason: "degree must be 4 or 5",
        });
    }
    if !g.is_regular(r) {
        return Err(ConstructError::UnsupportedParameters {
            n,
            r,
            reason: "input graph is not r-regular",
        });
    }
    plan.validate(g)?;

    let (a, b) = (n, n + 1);
    let removed = [plan.m1[0], plan.m1[1], plan.m2[0], plan.m2[1]];
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed.contains(i))
        .map(|(_, &e)| e)
        .collect();
    for (matching, hub) in [(plan.m1, a), (plan.m2, b)] {
        for e in matching {
            let (u, v) = g.edge(e);
            edges.push((u, hub));
            edges.push((v, hub));
        }
    }
    if r == 5 {
        edges.push((a, b));
    }
    Graph::new(n + 2, edges)
        .map_err(|_| ConstructError::InvalidPlan("surgery produced a non-simple graph"))
}

/// An `r`-regular graph on `n` vertices for `r` in {4, 5} and even `n >= 6`,
/// grown from [`base_k6`] or [`base_4regular_6`].
pub fn build_regular(n: usize, r: usize) -> Result<Graph, ConstructError> {
    let unsupported = |reason| ConstructError::UnsupportedParameters { n, r, reason };
    let mut g = match r {
        5 => base_k6(),
        4 => base_4regular_6(),
        _ => return Err(unsupported("degree must be 4 or 5")),
    };
    if !n.is_multiple_of(2) {
        return Err(unsupported("order must be even"));
    }
    if n < 6 {
        return Err(unsupported("order must be at least 6"));
    }
    while g.order() < n {
        let plan = find_surgery_plan(&g)?;
        g = expand_two(&g, &plan, r)?;
    }
    Ok(g)
}

/// Seeded random `r`-regular graph on `n` vertices.
///
/// Stubs are shuffled and paired; pairs that would form a loop or repeat an
/// edge are returned to the pool and re-paired in the next round. An attempt
/// restarts from scratch when the leftover stubs can no longer form any new
/// edge, up to [`PAIRING_RETRY_LIMIT`] attempts.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph, ConstructError> {
    if !(n * r).is_multiple_of(2) {
        return Err(ConstructError::ParityViolation { n, r });
    }
    if r >= n && !(r == 0 && n == 0) {
        return Err(ConstructError::UnsupportedParameters {
            n,
            r,
            reason: "degree must be less than the order",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PAIRING_RETRY_LIMIT {
        if let Some(edges) = try_pairing(n, r, &mut rng) {
            return Ok(Graph::new(n, edges).expect("pairing yields a simple graph"));
        }
    }
    Err(ConstructError::RetryLimitExceeded(PAIRING_RETRY_LIMIT))
}

fn try_pairing(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Option<BTreeSet<(usize, usize)>> {
    let mut edges = BTreeSet::new();
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| core::iter::repeat_n(v, r)).collect();
    while !stubs.is_empty() {
        let mut leftover: BTreeMap<usize, usize> = BTreeMap::new();
        stubs.shuffle(rng);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u != v && edges.insert((u, v)) {
                continue;
            }
            *leftover.entry(u).or_default() += 1;
            *leftover.entry(v).or_default() += 1;
        }
        if !can_extend(&edges, &leftover) {
            return None;
        }
        stubs = leftover
            .iter()
            .flat_map(|(&v, &k)| core::iter::repeat_n(v, k))
            .collect();
    }
    Some(edges)
}

// Whether some two distinct leftover vertices are still non-adjacent.
fn can_extend(edges: &BTreeSet<(usize, usize)>, leftover: &BTreeMap<usize, usize>) -> bool {
    if leftover.is_empty() {
        return true;
    }
    let vs: Vec<usize> = leftover.keys().copied().collect();
    vs.iter()
        .enumerate()
        .any(|(i, &u)| vs[i + 1..].iter().any(|&v| !edges.contains(&(u, v))))
}
