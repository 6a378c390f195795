//! Degree sequences: graphicality and realization.

use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegSeqError {
    #[error("degree sequence is not graphical")]
    NotGraphical,
}

/// A nonincreasing sequence of vertex degrees. The constructor sorts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut d: Vec<usize>) -> Self {
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    pub fn of_graph(g: &Graph) -> Self {
        DegreeSequence(g.degrees().sorted_desc())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// `max(d) <= n - 1` and an even degree sum.
    pub fn necessary_conditions(&self) -> bool {
        let n = self.0.len();
        let max_ok = self.0.first().is_none_or(|&d| d < n);
        max_ok && self.sum().is_multiple_of(2)
    }

    /// Erdős–Gallai: for every k, the k largest degrees sum to at most
    /// `k(k-1) + Σ_{i>k} min(d_i, k)`.
    pub fn is_graphical(&self) -> bool {
        let d = &self.0;
        if !self.sum().is_multiple_of(2) {
            return false;
        }
        let mut prefix = 0;
        for k in 1..=d.len() {
            prefix += d[k - 1];
            let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
            if prefix > k * (k - 1) + tail {
                return false;
            }
        }
        true
    }

    /// Havel–Hakimi realization. Vertex `i` receives degree `d[i]`. At every
    /// step the vertex with the highest residual degree is joined to the
    /// vertices with the next-highest residual degrees, ties broken by lowest
    /// index.
    pub fn realize(&self) -> Result<Graph, DegSeqError> {
        if !self.is_graphical() {
            return Err(DegSeqError::NotGraphical);
        }
        let n = self.0.len();
        if n == 0 {
            return Ok(Graph::empty(0));
        }
        let mut residual = self.0.clone();
        let mut edges = Vec::with_capacity(self.sum() / 2);
        let mut order: Vec<usize> = (0..n).collect();
        loop {
            order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
            let hub = order[0];
            let k = residual[hub];
            if k == 0 {
                break;
            }
            residual[hub] = 0;
            for &w in &order[1..=k] {
                if residual[w] == 0 {
                    return Err(DegSeqError::NotGraphical);
                }
                residual[w] -= 1;
                edges.push((hub, w));
            }
        }
        Graph::new(n, edges).map_err(|_| DegSeqError::NotGraphical)
    }

    /// Every degree reduced by one, or `None` if some degree is zero.
    pub fn decremented(&self) -> Option<DegreeSequence> {
        self.0
            .iter()
            .map(|&x| x.checked_sub(1))
            .collect::<Option<Vec<_>>>()
            .map(DegreeSequence)
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(d: Vec<usize>) -> Self {
        DegreeSequence::new(d)
    }
}

pub fn necessary_conditions(d: &DegreeSequence) -> bool {
    d.necessary_conditions()
}

pub fn is_graphical(d: &DegreeSequence) -> bool {
    d.is_graphical()
}

pub fn realize(d: &DegreeSequence) -> Result<Graph, DegSeqError> {
    d.realize()
}

/// Sufficient condition for a 1-factor: `G` has even order and
/// `(d_1 - 1, ..., d_n - 1)` is again graphical.
pub fn lemma11_one_factor_condition(g: &Graph) -> bool {
    if !g.order().is_multiple_of(2) {
        return false;
    }
    DegreeSequence::of_graph(g)
        .decremented()
        .is_some_and(|d| d.is_graphical())
}
