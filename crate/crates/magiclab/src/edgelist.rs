//! Plain edge lists: a header line `n m`, then `m` lines `u v`. Tokens are
//! whitespace-separated decimals; `#` starts a comment.

use std::fmt::Write;

use magiclab_core::Graph;

use crate::IoError;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), IoError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let [a, b] = tokens[..] else {
        return Err(IoError::malformed(format!(
            "line {lineno}: expected two integers, found {line:?}"
        )));
    };
    let num = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| IoError::malformed(format!("line {lineno}: bad integer {t:?}")))
    };
    Ok((num(a)?, num(b)?))
}

pub fn read_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| IoError::malformed("missing `n m` header"))?;
    let (n, m) = parse_pair(header, lineno)?;
    let pairs = lines
        .map(|(i, l)| parse_pair(l, i))
        .collect::<Result<Vec<_>, _>>()?;
    if pairs.len() != m {
        return Err(IoError::malformed(format!(
            "header announces {m} edges, found {}",
            pairs.len()
        )));
    }
    Ok(Graph::new(n, pairs)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
