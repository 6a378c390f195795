//! Labeling records.
//!
//! ```text
//! n 6
//! h 3
//! m 15
//! edge 0 1 2
//! edge 0 2 1
//! ...
//! sums 0 0 0 0 0 0
//! verdict true
//! ```
//!
//! Keys always appear in this order when written. When read, `m`, `sums` and
//! `verdict` are optional; if present they must agree with the edges and with
//! the sums recomputed from the labels.

use std::fmt::Write;

use magiclab_core::{is_zero_sum, vertex_sums, Graph, Labeling, MagicError};
use thiserror::Error;

use crate::IoError;

#[derive(Debug, Error)]
pub enum RecordError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Labeling(#[from] MagicError),
    #[error("record disagrees with recomputation: {0}")]
    Inconsistent(String),
    #[error("record has h={stored} but h={requested} was requested")]
    ModulusMismatch { stored: u32, requested: u32 },
}

impl RecordError {
    /// Whether the failure is a syntax problem rather than a semantic one.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            RecordError::Io(IoError::MalformedInput(_)) | RecordError::ModulusMismatch { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingRecord {
    pub n: usize,
    pub h: u32,
    /// `(u, v, label)` with `u < v`, in canonical edge order.
    pub entries: Vec<(usize, usize, u32)>,
    pub sums: Vec<u32>,
    pub verdict: bool,
}

impl LabelingRecord {
    pub fn new(g: &Graph, labeling: &Labeling) -> Result<Self, MagicError> {
        let sums = vertex_sums(g, labeling)?;
        let verdict = is_zero_sum(g, labeling)?;
        let entries = g
            .edges()
            .iter()
            .zip(labeling.labels())
            .map(|(&(u, v), &l)| (u, v, l))
            .collect();
        Ok(LabelingRecord {
            n: g.order(),
            h: labeling.modulus(),
            entries,
            sums: sums.0,
            verdict,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n {}", self.n).unwrap();
        writeln!(out, "h {}", self.h).unwrap();
        writeln!(out, "m {}", self.entries.len()).unwrap();
        for (u, v, l) in &self.entries {
            writeln!(out, "edge {u} {v} {l}").unwrap();
        }
        let sums: Vec<String> = self.sums.iter().map(u32::to_string).collect();
        writeln!(out, "sums {}", sums.join(" ")).unwrap();
        writeln!(out, "verdict {}", self.verdict).unwrap();
        out
    }

    /// Parses a record and recomputes sums and verdict. `modulus` supplies
    /// `h` when the record has none, and must match it otherwise.
    pub fn load(text: &str, modulus: Option<u32>) -> Result<Self, RecordError> {
        let raw = RawRecord::parse(text)?;
        let h = match (raw.h, modulus) {
            (Some(stored), Some(requested)) if stored != requested => {
                return Err(RecordError::ModulusMismatch { stored, requested })
            }
            (Some(h), _) | (None, Some(h)) => h,
            (None, None) => return Err(IoError::malformed("no modulus: add an `h` line").into()),
        };
        if let Some(m) = raw.m {
            if m != raw.entries.len() {
                return Err(IoError::malformed(format!(
                    "record announces {m} edges, found {}",
                    raw.entries.len()
                ))
                .into());
            }
        }
        let g = Graph::new(raw.n, raw.entries.iter().map(|&(u, v, _)| (u, v)))
            .map_err(IoError::from)?;
        let mut labels = vec![0u32; g.size()];
        for &(u, v, l) in &raw.entries {
            labels[g.edge_index(u, v).expect("edge was just inserted")] = l;
        }
        let labeling = Labeling::new(h, labels)?;
        let record = LabelingRecord::new(&g, &labeling)?;
        if let Some(sums) = raw.sums {
            if sums != record.sums {
                return Err(RecordError::Inconsistent(format!(
                    "stored sums {sums:?}, recomputed {:?}",
                    record.sums
                )));
            }
        }
        if let Some(verdict) = raw.verdict {
            if verdict != record.verdict {
                return Err(RecordError::Inconsistent(format!(
                    "stored verdict {verdict}, recomputed {}",
                    record.verdict
                )));
            }
        }
        Ok(record)
    }

    pub fn graph(&self) -> Result<Graph, IoError> {
        Ok(Graph::new(
            self.n,
            self.entries.iter().map(|&(u, v, _)| (u, v)),
        )?)
    }

    pub fn count_label(&self, label: u32) -> usize {
        self.entries.iter().filter(|e| e.2 == label).count()
    }
}

#[derive(Default)]
struct RawRecord {
    n: usize,
    h: Option<u32>,
    m: Option<usize>,
    entries: Vec<(usize, usize, u32)>,
    sums: Option<Vec<u32>>,
    verdict: Option<bool>,
}

impl RawRecord {
    fn parse(text: &str) -> Result<Self, IoError> {
        let mut raw = RawRecord::default();
        let mut n = None;
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = i + 1;
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let bad =
                |what: &str| IoError::malformed(format!("line {lineno}: bad {what}: {line:?}"));
            let nums = |what: &str| -> Result<Vec<u64>, IoError> {
                rest.split_whitespace()
                    .map(|t| t.parse::<u64>().map_err(|_| bad(what)))
                    .collect()
            };
            let one = |what: &str| -> Result<u64, IoError> {
                match nums(what)?[..] {
                    [x] => Ok(x),
                    _ => Err(bad(what)),
                }
            };
            match key {
                "n" => n = Some(one("vertex count")? as usize),
                "h" => raw.h = Some(u32::try_from(one("modulus")?).map_err(|_| bad("modulus"))?),
                "m" => raw.m = Some(one("edge count")? as usize),
                "edge" => match nums("edge")?[..] {
                    [u, v, l] => raw.entries.push((
                        u as usize,
                        v as usize,
                        u32::try_from(l).map_err(|_| bad("label"))?,
                    )),
                    _ => return Err(bad("edge")),
                },
                "sums" => {
                    let sums = nums("sums")?
                        .into_iter()
                        .map(|s| u32::try_from(s).map_err(|_| bad("sums")))
                        .collect::<Result<_, _>>()?;
                    raw.sums = Some(sums);
                }
                "verdict" => {
                    raw.verdict = Some(match rest.trim() {
                        "true" => true,
                        "false" => false,
                        _ => return Err(bad("verdict")),
                    })
                }
                _ => {
                    return Err(IoError::malformed(format!(
                        "line {lineno}: unknown key {key:?}"
                    )))
                }
            }
        }
        raw.n = n.ok_or_else(|| IoError::malformed("missing `n` line"))?;
        Ok(raw)
    }
}
