//! Zero-sum magic labelings of simple graphs.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`graph`]: canonical simple graphs and structural predicates;
//! * [`degseq`]: degree sequences, graphicality, Havel-Hakimi realization and
//!   a degree-sequence sufficient condition for a 1-factor;
//! * [`construct`]: 4- and 5-regular graphs grown two vertices at a time,
//!   plus seeded random regular graphs;
//! * [`matching`]: maximum matchings (Edmonds' blossom algorithm) and a
//!   brute-force oracle;
//! * [`magic`]: zero-sum `h`-magic labelings, the 1-factor construction for
//!   5-regular graphs, and an exhaustive null-set search.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod construct;
pub mod degseq;
pub mod graph;
pub mod magic;
pub mod matching;

pub use construct::{
    base_4regular_6, base_k6, build_regular, expand_two, find_surgery_plan, random_regular,
    ConstructError, SurgeryPlan,
};
pub use degseq::{DegSeqError, DegreeSequence};
pub use graph::{Graph, GraphError, VertexDegrees};
pub use magic::{
    check_h2_characterization, is_zero_sum, label_five_regular, label_odd_regular_via_factor,
    null_set_oracle, vertex_sums, Labeling, MagicError, Membership, NullSetReport, VertexSums,
    DEFAULT_BUDGET,
};
pub use matching::{
    brute_force_max_matching, max_matching, perfect_matching, Matching, MatchingError,
    MatchingReport,
};
