//! Maximum-cardinality matchings in general graphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::Graph;

/// Largest edge count accepted by [`brute_force_max_matching`].
pub const BRUTE_FORCE_EDGE_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("graph has no perfect matching (maximum matching has {size} edges, order {order})")]
    NoPerfectMatching { size: usize, order: usize },
    #[error("brute-force matching limited to {cap} edges, graph has {edges}")]
    TooLarge { edges: usize, cap: usize },
    #[error("edges {0} and {1} share a vertex")]
    NotIndependent(usize, usize),
    #[error("edge index {0} out of range")]
    EdgeOutOfRange(usize),
}

/// A set of pairwise vertex-disjoint edges, stored as sorted edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edge_indices: Vec<usize>,
}

impl Matching {
    pub fn new(g: &Graph, mut edge_indices: Vec<usize>) -> Result<Self, MatchingError> {
        edge_indices.sort_unstable();
        edge_indices.dedup();
        let mut owner = vec![usize::MAX; g.order()];
        for &e in &edge_indices {
            if e >= g.size() {
                return Err(MatchingError::EdgeOutOfRange(e));
            }
            let (u, v) = g.edge(e);
            for x in [u, v] {
                if owner[x] != usize::MAX {
                    return Err(MatchingError::NotIndependent(owner[x], e));
                }
                owner[x] = e;
            }
        }
        Ok(Matching { edge_indices })
    }

    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn len(&self) -> usize {
        self.edge_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_indices.is_empty()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edge_indices.binary_search(&edge).is_ok()
    }

    pub fn saturates_all(&self, g: &Graph) -> bool {
        2 * self.len() == g.order()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingReport {
    pub matching: Matching,
    pub is_perfect: bool,
}

impl MatchingReport {
    fn new(g: &Graph, matching: Matching) -> Self {
        let is_perfect = matching.saturates_all(g);
        MatchingReport {
            matching,
            is_perfect,
        }
    }

    pub fn size(&self) -> usize {
        self.matching.len()
    }
}

const NONE: usize = usize::MAX;

/// Working state for Edmonds' blossom algorithm.
struct Blossom<'a> {
    adj: &'a [Vec<(usize, usize)>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<(usize, usize)>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    // Lowest common ancestor of the blossom bases of `a` and `b` in the
    // alternating tree.
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn contract(&mut self, v: usize, to: usize) {
        let b = self.lca(v, to);
        self.in_blossom.fill(false);
        self.mark_path(v, b, to);
        self.mark_path(to, b, v);
        for i in 0..self.base.len() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.used[i] {
                    self.used[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// Breadth-first search for an augmenting path from `root`; returns its
    /// free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &(to, _) in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_is_outer =
                    to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_is_outer {
                    self.contract(v, to);
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Vec<usize> {
        for root in 0..self.mate.len() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// Maximum-cardinality matching by Edmonds' blossom algorithm.
///
/// Roots are tried in ascending vertex order and neighbors are scanned in
/// ascending order, so the result depends only on the canonical graph.
pub fn max_matching(g: &Graph) -> MatchingReport {
    let adj = g.adjacency();
    let mate = Blossom::new(&adj).run();
    let indices = mate
        .iter()
        .enumerate()
        .filter(|&(u, &v)| v != NONE && u < v)
        .map(|(u, &v)| g.edge_index(u, v).expect("matched pair is an edge"))
        .collect();
    let matching = Matching::new(g, indices).expect("blossom output is a matching");
    MatchingReport::new(g, matching)
}

/// A perfect matching of `g`, if one exists.
pub fn perfect_matching(g: &Graph) -> Result<Matching, MatchingError> {
    let report = max_matching(g);
    if report.is_perfect {
        Ok(report.matching)
    } else {
        Err(MatchingError::NoPerfectMatching {
            size: report.size(),
            order: g.order(),
        })
    }
}

/// Exhaustive include/exclude search over edges. Test oracle only.
pub fn brute_force_max_matching(g: &Graph) -> Result<MatchingReport, MatchingError> {
    if g.size() > BRUTE_FORCE_EDGE_CAP {
        return Err(MatchingError::TooLarge {
            edges: g.size(),
            cap: BRUTE_FORCE_EDGE_CAP,
        });
    }

    struct Search<'g> {
        g: &'g Graph,
        covered: Vec<bool>,
        current: Vec<usize>,
        best: Vec<usize>,
    }

    impl Search<'_> {
        fn go(&mut self, e: usize) {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            let remaining = self.g.size() - e;
            let cap = self.g.order() / 2;
            if e == self.g.size()
                || self.current.len() + remaining <= self.best.len()
                || self.best.len() == cap
            {
                return;
            }
            let (u, v) = self.g.edge(e);
            if !self.covered[u] && !self.covered[v] {
                self.covered[u] = true;
                self.covered[v] = true;
                self.current.push(e);
                self.go(e + 1);
                self.current.pop();
                self.covered[u] = false;
                self.covered[v] = false;
            }
            self.go(e + 1);
        }
    }

    let mut search = Search {
        g,
        covered: vec![false; g.order()],
        current: Vec::new(),
        best: Vec::new(),
    };
    search.go(0);
    let matching = Matching::new(g, search.best).expect("search keeps edges independent");
    Ok(MatchingReport::new(g, matching))
}
