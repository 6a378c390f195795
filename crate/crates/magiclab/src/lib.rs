//! File formats and command-line front end for `magiclab-core`.
//!
//! * [`graph6`]: the standard graph6 text encoding (short form, n <= 62);
//! * [`edgelist`]: a human-editable `n m` / `u v` edge list;
//! * [`record`]: line-oriented labeling records written by `label` and read
//!   by `verify`;
//! * [`cli`]: the `magiclab` command.

pub mod cli;
pub mod edgelist;
pub mod graph6;
pub mod record;

use magiclab_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl IoError {
    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        IoError::MalformedInput(msg.into())
    }
}

/// Reads a graph from either format. A first significant line of two
/// integers (`n m`) selects the edge list; anything else is read as graph6.
pub fn read_graph(text: &str) -> Result<Graph, IoError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| IoError::malformed("empty input"))?;
    let tokens: Vec<&str> = first.split_whitespace().collect();
    if tokens.len() == 2 && tokens.iter().all(|t| t.bytes().all(|b| b.is_ascii_digit())) {
        edgelist::read_edge_list(text)
    } else {
        graph6::decode_graph6(first)
    }
}
