//! Zero-sum `h`-magic labelings.
//!
//! A labeling assigns every edge a nonzero element of `Z_h`; it is zero-sum
//! when the labels around every vertex add up to `0 (mod h)`. The null set of
//! a graph is the set of moduli `h >= 2` admitting such a labeling.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::matching::{perfect_matching, Matching, MatchingError};

/// Default node budget for [`null_set_oracle`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    NotRegular,
    EvenDegree(usize),
    ModulusTooSmall(u32),
    ModulusDoesNotDivide { h: u32, degree_plus_one: usize },
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::NotRegular => write!(f, "graph is not regular"),
            Precondition::EvenDegree(r) => write!(f, "degree {r} is even"),
            Precondition::ModulusTooSmall(h) => write!(f, "modulus {h} is below 3"),
            Precondition::ModulusDoesNotDivide { h, degree_plus_one } => {
                write!(f, "modulus {h} does not divide r+1 = {degree_plus_one}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagicError {
    #[error("labeling has {labels} labels but the graph has {edges} edges")]
    LengthMismatch { labels: usize, edges: usize },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u32),
    #[error("label {label} on edge {edge} is not in 1..{h}")]
    LabelOutOfRange { edge: usize, label: u32, h: u32 },
    #[error("graph is not 5-regular")]
    NotFiveRegular,
    #[error(transparent)]
    NoPerfectMatching(#[from] MatchingError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(Precondition),
    #[error("invalid modulus range {h_min}..={h_max}")]
    InvalidRange { h_min: u32, h_max: u32 },
    #[error("search budget exhausted at h={0}")]
    BudgetExceeded(u32),
}

/// Edge labels in `Z_h \ {0}`, indexed like the graph's edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    h: u32,
    labels: Vec<u32>,
}

impl Labeling {
    /// Validates `h >= 2` and `1 <= label <= h - 1` for every label.
    pub fn new(h: u32, labels: Vec<u32>) -> Result<Self, MagicError> {
        if h < 2 {
            return Err(MagicError::InvalidModulus(h));
        }
        if let Some((edge, &label)) = labels.iter().enumerate().find(|(_, &l)| l == 0 || l >= h) {
            return Err(MagicError::LabelOutOfRange { edge, label, h });
        }
        Ok(Labeling { h, labels })
    }

    pub fn modulus(&self) -> u32 {
        self.h
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// `s(v) mod h` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSums(pub Vec<u32>);

impl VertexSums {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn all_zero(&self) -> bool {
        self.0.iter().all(|&s| s == 0)
    }
}

pub fn vertex_sums(g: &Graph, labeling: &Labeling) -> Result<VertexSums, MagicError> {
    if labeling.len() != g.size() {
        return Err(MagicError::LengthMismatch {
            labels: labeling.len(),
            edges: g.size(),
        });
    }
    let h = u64::from(labeling.h);
    let mut sums = vec![0u64; g.order()];
    for (&(u, v), &l) in g.edges().iter().zip(&labeling.labels) {
        sums[u] = (sums[u] + u64::from(l)) % h;
        sums[v] = (sums[v] + u64::from(l)) % h;
    }
    Ok(VertexSums(sums.into_iter().map(|s| s as u32).collect()))
}

pub fn is_zero_sum(g: &Graph, labeling: &Labeling) -> Result<bool, MagicError> {
    let sums = vertex_sums(g, labeling)?;
    let nonzero = labeling.labels.iter().all(|&l| l % labeling.h != 0);
    Ok(nonzero && sums.all_zero())
}

fn factor_labeling(g: &Graph, factor: &Matching, h: u32) -> Labeling {
    let labels = (0..g.size())
        .map(|e| if factor.contains(e) { 2 } else { 1 })
        .collect();
    Labeling::new(h, labels).expect("labels 1 and 2 are nonzero for h >= 3")
}

/// Zero-sum 3-magic labeling of a 5-regular graph: edges of a perfect
/// matching get 2, all others get 1, so every vertex sums to `2 + 4 = 6`.
pub fn label_five_regular(g: &Graph) -> Result<Labeling, MagicError> {
    if !g.is_regular(5) {
        return Err(MagicError::NotFiveRegular);
    }
    let factor = perfect_matching(g)?;
    Ok(factor_labeling(g, &factor, 3))
}

/// The same 1-factor construction for any odd-regular graph and any modulus
/// `h >= 3` dividing `r + 1`. This extends the 5-regular, `h = 3` case and is
/// not a published result in its own right; it holds because every vertex
/// sums to `2 + (r - 1) = r + 1`.
pub fn label_odd_regular_via_factor(g: &Graph, h: u32) -> Result<Labeling, MagicError> {
    let violated = MagicError::PreconditionViolated;
    let r = g
        .regular_degree()
        .ok_or(violated(Precondition::NotRegular))?;
    if r % 2 == 0 {
        return Err(violated(Precondition::EvenDegree(r)));
    }
    if h < 3 {
        return Err(violated(Precondition::ModulusTooSmall(h)));
    }
    if (r + 1) % h as usize != 0 {
        return Err(violated(Precondition::ModulusDoesNotDivide {
            h,
            degree_plus_one: r + 1,
        }));
    }
    let factor = perfect_matching(g)?;
    Ok(factor_labeling(g, &factor, h))
}

/// Only label 1 exists mod 2, so `s(v) = deg(v)`: a graph is zero-sum
/// 2-magic iff all its degrees are even.
pub fn check_h2_characterization(g: &Graph) -> bool {
    g.degrees().all_even()
}

/// Verdict of the null-set search for one modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member(Labeling),
    NonMember,
    /// The node budget ran out before the search finished.
    Undecided,
}

impl Membership {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Membership::Member(_) => Some(true),
            Membership::NonMember => Some(false),
            Membership::Undecided => None,
        }
    }

    pub fn witness(&self) -> Option<&Labeling> {
        match self {
            Membership::Member(l) => Some(l),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Membership::Member(_) => "member",
            Membership::NonMember => "non-member",
            Membership::Undecided => "undecided",
        }
    }
}

/// Membership verdicts for every `h` in `h_min..=h_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullSetReport {
    pub h_min: u32,
    pub h_max: u32,
    pub entries: Vec<(u32, Membership)>,
}

impl NullSetReport {
    pub fn get(&self, h: u32) -> Option<&Membership> {
        self.entries.iter().find(|(k, _)| *k == h).map(|(_, m)| m)
    }

    /// `Some(true/false)` when decided, `None` when undecided or out of range.
    pub fn member(&self, h: u32) -> Option<bool> {
        self.get(h).and_then(Membership::as_bool)
    }

    pub fn witness(&self, h: u32) -> Option<&Labeling> {
        self.get(h).and_then(Membership::witness)
    }

    pub fn all_decided(&self) -> bool {
        self.entries.iter().all(|(_, m)| m.as_bool().is_some())
    }
}

/// Edge order in which every vertex's incident edges are decided as a block:
/// repeatedly take the vertex with the fewest undecided edges (lowest index
/// on ties) and append its undecided edges in ascending index order.
pub fn elimination_order(g: &Graph) -> Vec<usize> {
    let adj = g.adjacency();
    let mut open: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut decided = vec![false; g.size()];
    let mut order = Vec::with_capacity(g.size());
    while let Some(v) = (0..g.order())
        .filter(|&v| open[v] > 0)
        .min_by_key(|&v| (open[v], v))
    {
        for &(w, e) in &adj[v] {
            if !decided[e] {
                decided[e] = true;
                order.push(e);
                open[v] -= 1;
                open[w] -= 1;
            }
        }
    }
    order
}

struct LabelSearch<'g> {
    g: &'g Graph,
    h: u32,
    order: Vec<usize>,
    // Position in `order` at which each vertex's last edge is decided.
    closes_at: Vec<usize>,
    sums: Vec<u32>,
    labels: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl LabelSearch<'_> {
    fn closes(&self, v: usize, pos: usize) -> bool {
        self.closes_at[v] == pos
    }

    // Ok(true): witness found; Ok(false): subtree exhausted.
    fn search(&mut self, pos: usize) -> Result<bool, ()> {
        if pos == self.order.len() {
            return Ok(true);
        }
        let e = self.order[pos];
        let (u, v) = self.g.edge(e);
        let h = self.h;
        // A closing endpoint forces the label; ascending trial order is kept,
        // so the first witness is the same one plain enumeration finds.
        let (lo, hi) = if self.closes(u, pos) {
            let forced = (h - self.sums[u]) % h;
            (forced, forced)
        } else if self.closes(v, pos) {
            let forced = (h - self.sums[v]) % h;
            (forced, forced)
        } else {
            (1, h - 1)
        };
        for label in lo.max(1)..=hi {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(());
            }
            let su = (self.sums[u] + label) % h;
            let sv = (self.sums[v] + label) % h;
            if (self.closes(u, pos) && su != 0) || (self.closes(v, pos) && sv != 0) {
                continue;
            }
            let (old_u, old_v) = (self.sums[u], self.sums[v]);
            self.sums[u] = su;
            self.sums[v] = sv;
            self.labels[e] = label;
            let found = self.search(pos + 1)?;
            self.sums[u] = old_u;
            self.sums[v] = old_v;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Decides whether `g` is zero-sum `h`-magic by exhaustive backtracking.
///
/// Returns the first witness under [`elimination_order`] with labels tried in
/// ascending order, `Ok(None)` when none exists, and
/// [`MagicError::BudgetExceeded`] when more than `budget` label assignments
/// were tried.
pub fn zero_sum_labeling(g: &Graph, h: u32, budget: u64) -> Result<Option<Labeling>, MagicError> {
    if h < 2 {
        return Err(MagicError::InvalidModulus(h));
    }
    let order = elimination_order(g);
    let mut closes_at = vec![usize::MAX; g.order()];
    for (pos, &e) in order.iter().enumerate() {
        let (u, v) = g.edge(e);
        closes_at[u] = pos;
        closes_at[v] = pos;
    }
    let mut search = LabelSearch {
        g,
        h,
        order,
        closes_at,
        sums: vec![0; g.order()],
        labels: vec![0; g.size()],
        nodes: 0,
        budget,
    };
    match search.search(0) {
        Ok(true) => Ok(Some(Labeling::new(h, search.labels)?)),
        Ok(false) => Ok(None),
        Err(()) => Err(MagicError::BudgetExceeded(h)),
    }
}

/// Null-set membership for every `h` in `h_min..=h_max`. Each modulus gets
/// its own budget; an exhausted budget yields [`Membership::Undecided`].
pub fn null_set_oracle(
    g: &Graph,
    h_min: u32,
    h_max: u32,
    budget: u64,
) -> Result<NullSetReport, MagicError> {
    if h_min < 2 || h_min > h_max {
        return Err(MagicError::InvalidRange { h_min, h_max });
    }
    let entries = (h_min..=h_max).map(|h| (h, decide(g, h, budget))).collect();
    Ok(NullSetReport {
        h_min,
        h_max,
        entries,
    })
}

/// Single-modulus verdict, as used by [`null_set_oracle`].
pub fn decide(g: &Graph, h: u32, budget: u64) -> Membership {
    match zero_sum_labeling(g, h, budget) {
        Ok(Some(l)) => Membership::Member(l),
        Ok(None) => Membership::NonMember,
        Err(_) => Membership::Undecided,
    }
}
