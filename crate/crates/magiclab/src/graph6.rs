//! graph6 encoding, short form only.
//!
//! A line is one header byte `n + 63` followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte, most significant first, each byte offset by 63.

use magiclab_core::Graph;

use crate::IoError;

pub const MAX_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode_graph6(g: &Graph) -> Result<String, IoError> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(IoError::TooLarge(n));
    }
    let mut bytes = vec![0u8; data_len(n)];
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                bytes[bit / 6] |= 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    let mut out = String::with_capacity(1 + bytes.len());
    out.push((n as u8 + 63) as char);
    out.extend(bytes.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

pub fn decode_graph6(line: &str) -> Result<Graph, IoError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&head, data) = bytes
        .split_first()
        .ok_or_else(|| IoError::malformed("empty graph6 line"))?;
    if head == 126 {
        return Err(IoError::malformed(
            "graph6 long form (n > 62) is not supported",
        ));
    }
    if !(63..126).contains(&head) {
        return Err(IoError::malformed(format!("bad graph6 header byte {head}")));
    }
    let n = (head - 63) as usize;
    if data.len() != data_len(n) {
        return Err(IoError::malformed(format!(
            "graph6 line for n={n} needs {} data bytes, found {}",
            data_len(n),
            data.len()
        )));
    }
    if let Some(&b) = data.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(IoError::malformed(format!(
            "byte {b} outside graph6 range 63..=126"
        )));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if (k..data.len() * 6).any(bit) {
        return Err(IoError::malformed("nonzero graph6 padding bits"));
    }
    Ok(Graph::new(n, edges)?)
}
