//! Acceptance suite. Each test checks one criterion and prints a single
//! `[PASS]` / `[FAIL]` line; run with `-- --nocapture` to see them.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use common::*;
use magiclab::graph6::{decode_graph6, encode_graph6};
use magiclab_core::degseq::lemma11_one_factor_condition;
use magiclab_core::magic::decide;
use magiclab_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const THEOREM_RUNTIME_LIMIT: Duration = Duration::from_secs(60);
const RANDOM_FIVE_REGULAR: usize = 200;
const MATCHING_SAMPLES: usize = 500;
const MAX_SEQUENCE_LEN: usize = 7;
const ORACLE_DECIDE_EDGES: usize = 20;
const DETERMINISM_RUNS: usize = 10;
const REFERENCE_DECODER_LINES: usize = 100;

fn report(id: &str, title: &str, ok: bool, detail: String) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] {id} {title}: {detail}");
    assert!(ok, "{id} {title}: {detail}");
}

fn random_five_regular() -> Vec<Graph> {
    (0..RANDOM_FIVE_REGULAR as u64)
        .map(|seed| {
            let n = 6 + 2 * (seed as usize % 10);
            random_regular(n, 5, seed).unwrap()
        })
        .collect()
}

/// Random graphs on at most 10 vertices with at most 24 edges, so the
/// brute-force matching oracle applies to every one.
fn small_random_graphs(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=10);
            let m = rng.gen_range(0..=(n * (n - 1) / 2).min(24));
            gnm(n, m, rng.gen())
        })
        .collect()
}

/// Everything the suite draws on: named graphs, generator outputs and
/// random graphs.
fn corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = named_graphs().into_iter().map(|(_, g)| g).collect();
    out.extend(regular_corpus());
    out.extend(random_five_regular());
    out.push(bridged_five_regular_22());
    out.extend(small_random_graphs(MATCHING_SAMPLES, 1));
    out.extend(random_graphs(300, 10, 2));
    out
}

#[test]
fn ac1_five_regular_graphs_are_zero_sum_3_magic() {
    let start = Instant::now();
    let mut graphs: Vec<Graph> = (6..=30)
        .step_by(2)
        .map(|n| build_regular(n, 5).unwrap())
        .collect();
    graphs.extend(random_five_regular());
    let failures: Vec<usize> = graphs
        .iter()
        .enumerate()
        .filter(|(_, g)| {
            !label_five_regular(g)
                .and_then(|l| {
                    let bounded = l.labels().iter().all(|&x| x == 1 || x == 2);
                    Ok(bounded && l.modulus() == 3 && is_zero_sum(g, &l)?)
                })
                .unwrap_or(false)
        })
        .map(|(i, _)| i)
        .collect();
    let elapsed = start.elapsed();
    report(
        "AC1",
        "5-regular graphs labeled and verified at h=3",
        failures.is_empty() && elapsed < THEOREM_RUNTIME_LIMIT,
        format!(
            "{}/{} verified (13 builder + {RANDOM_FIVE_REGULAR} random), {:.2?} (limit {:?}), failures {failures:?}",
            graphs.len() - failures.len(),
            graphs.len(),
            elapsed,
            THEOREM_RUNTIME_LIMIT
        ),
    );
}

#[test]
fn ac2_builder_yields_simple_regular_graphs() {
    let mut checked = 0;
    let mut bad = Vec::new();
    for r in [4, 5] {
        for n in (6..=30).step_by(2) {
            let g = build_regular(n, r).unwrap();
            let canonical = g.edges().iter().all(|&(u, v)| u < v && v < n)
                && g.edges().windows(2).all(|w| w[0] < w[1]);
            if !(canonical && g.order() == n && g.degrees().0 == vec![r; n]) {
                bad.push((n, r));
            }
            checked += 1;
        }
    }
    report(
        "AC2",
        "builder output is simple and r-regular",
        bad.is_empty(),
        format!("{}/{checked} pass, failures {bad:?}", checked - bad.len()),
    );
}

#[test]
fn ac3_one_factor_condition_soundness() {
    let graphs: Vec<Graph> = corpus()
        .into_iter()
        .filter(|g| g.order() % 2 == 0 && g.order() <= 10)
        .collect();
    let applicable: Vec<&Graph> = graphs
        .iter()
        .filter(|g| lemma11_one_factor_condition(g))
        .collect();
    let counterexamples: Vec<&&Graph> = applicable
        .iter()
        .filter(|g| perfect_matching(g).is_err())
        .collect();
    let first = counterexamples
        .first()
        .map(|g| format!("{:?}", g.edges()))
        .unwrap_or_default();
    report(
        "AC3",
        "decremented-sequence condition implies a perfect matching",
        counterexamples.is_empty(),
        format!(
            "{} counterexamples among {} applicable graphs (of {} even-order corpus graphs); first: {first}",
            counterexamples.len(),
            applicable.len(),
            graphs.len()
        ),
    );
}

#[test]
fn ac4_blossom_matches_brute_force() {
    let graphs = small_random_graphs(MATCHING_SAMPLES, 1);
    let mismatches: Vec<usize> = graphs
        .iter()
        .enumerate()
        .filter(|(_, g)| max_matching(g).size() != brute_force_max_matching(g).unwrap().size())
        .map(|(i, _)| i)
        .collect();
    report(
        "AC4",
        "blossom cardinality equals brute force",
        graphs.len() >= MATCHING_SAMPLES && mismatches.is_empty(),
        format!(
            "{}/{} agree, mismatches {mismatches:?}",
            graphs.len() - mismatches.len(),
            graphs.len()
        ),
    );
}

#[test]
fn ac5_erdos_gallai_matches_enumeration() {
    let mut total = 0;
    let mut wrong = Vec::new();
    for n in 0..=MAX_SEQUENCE_LEN {
        let realized = realized_sequences(n);
        for d in all_sequences(n, n + 1) {
            total += 1;
            if DegreeSequence::new(d.clone()).is_graphical() != realized.contains(&d) {
                wrong.push(d);
            }
        }
    }
    report(
        "AC5",
        "Erdős–Gallai verdict equals enumeration",
        wrong.is_empty(),
        format!(
            "{}/{total} sequences of length <= {MAX_SEQUENCE_LEN} agree, wrong {wrong:?}",
            total - wrong.len()
        ),
    );
}

#[test]
fn ac6_null_set_laws() {
    let graphs = corpus();

    // (a) h = 2 membership is exactly "all degrees even".
    let mut h2_wrong = 0;
    let mut h2_undecided_small = 0;
    for g in &graphs {
        match decide(g, 2, DEFAULT_BUDGET).as_bool() {
            Some(m) if m != check_h2_characterization(g) => h2_wrong += 1,
            None if g.size() <= ORACLE_DECIDE_EDGES => h2_undecided_small += 1,
            _ => {}
        }
    }

    // (b) every 5-regular graph is a member at h = 3, by search alone.
    let mut h3_checked = 0;
    let mut h3_undecided = 0;
    let mut h3_undecided_small = 0;
    let mut h3_wrong = 0;
    for g in graphs.iter().filter(|g| g.is_regular(5)) {
        h3_checked += 1;
        match decide(g, 3, DEFAULT_BUDGET) {
            Membership::Member(w) if is_zero_sum(g, &w).unwrap() => {}
            Membership::Undecided => {
                h3_undecided += 1;
                if g.size() <= ORACLE_DECIDE_EDGES {
                    h3_undecided_small += 1;
                }
            }
            _ => h3_wrong += 1,
        }
    }

    // (c) K4.
    let k4 = Graph::complete(4);
    let r = null_set_oracle(&k4, 2, 6, DEFAULT_BUDGET).unwrap();
    let k4_ok = r.member(2) == Some(false) && (3..=6).all(|h| r.member(h) == Some(true));

    let ok = h2_wrong == 0
        && h2_undecided_small == 0
        && h3_wrong == 0
        && h3_undecided_small == 0
        && k4_ok;
    report(
        "AC6",
        "null-set laws",
        ok,
        format!(
            "(a) {} graphs, {h2_wrong} wrong, {h2_undecided_small} small undecided; \
             (b) {h3_checked} 5-regular graphs, {h3_wrong} wrong, {h3_undecided} undecided ({h3_undecided_small} with |E| <= {ORACLE_DECIDE_EDGES}); \
             (c) K4 N∩[2,6] = {:?}",
            graphs.len(),
            r.entries.iter().filter(|(_, m)| m.as_bool() == Some(true)).map(|(h, _)| *h).collect::<Vec<_>>()
        ),
    );
}

#[test]
fn ac7_four_regular_null_set_is_full() {
    let mut graphs: Vec<Graph> = [6, 8, 10]
        .iter()
        .map(|&n| build_regular(n, 4).unwrap())
        .collect();
    for seed in 0..20 {
        for n in [6, 8, 10] {
            graphs.push(random_regular(n, 4, seed).unwrap());
        }
    }
    let distinct: BTreeSet<_> = graphs.iter().map(|g| encode_graph6(g).unwrap()).collect();
    let mut failures = Vec::new();
    for g in &graphs {
        let r = null_set_oracle(g, 2, 6, DEFAULT_BUDGET).unwrap();
        let witnesses_ok =
            (2..=6).all(|h| r.witness(h).is_some_and(|w| is_zero_sum(g, w).unwrap()));
        if !witnesses_ok {
            failures.push(encode_graph6(g).unwrap());
        }
    }
    report(
        "AC7",
        "4-regular graphs on 6, 8, 10 vertices are members for h = 2..6",
        failures.is_empty(),
        format!(
            "{} graphs ({} distinct), failures {failures:?}",
            graphs.len(),
            distinct.len()
        ),
    );
}

fn run_cli(args: &[&str], stdin: &[u8]) -> (Option<i32>, Vec<u8>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_magiclab"))
        .args(args)
        .env_remove("MAGICLAB_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code(), out.stdout)
}

fn pipeline_transcript() -> Vec<u8> {
    let mut transcript = Vec::new();
    let gens: [&[&str]; 3] = [
        &["generate", "--n", "14", "--r", "5"],
        &[
            "generate", "--n", "18", "--r", "5", "--random", "--seed", "11",
        ],
        &[
            "generate", "--n", "10", "--r", "4", "--random", "--seed", "3",
        ],
    ];
    for args in gens {
        let (_, g) = run_cli(args, b"");
        let (_, rec) = run_cli(&["label", "--h", "3"], &g);
        let (_, ver) = run_cli(&["verify", "--h", "3"], &rec);
        let (_, mat) = run_cli(&["matching"], &g);
        let (_, null) = run_cli(&["nullset", "--hmin", "2", "--hmax", "5", "--witness"], &g);
        for part in [g, rec, ver, mat, null] {
            transcript.extend(part);
        }
    }
    let (_, gr) = run_cli(
        &["graphical", "--sequence", "4,4,4,4,4,4,4,4", "--realize"],
        b"",
    );
    transcript.extend(gr);
    transcript
}

#[test]
fn ac8_pipelines_are_deterministic() {
    let first = pipeline_transcript();
    let identical = (1..DETERMINISM_RUNS)
        .filter(|_| pipeline_transcript() == first)
        .count()
        + 1;
    let in_process = (0..DETERMINISM_RUNS).all(|_| {
        let g = random_regular(20, 5, 77).unwrap();
        g == random_regular(20, 5, 77).unwrap()
            && label_five_regular(&g) == label_five_regular(&g)
            && null_set_oracle(&g, 3, 4, DEFAULT_BUDGET)
                == null_set_oracle(&g, 3, 4, DEFAULT_BUDGET)
    });
    report(
        "AC8",
        "fixed-seed pipelines give byte-identical output",
        identical == DETERMINISM_RUNS && in_process && !first.is_empty(),
        format!(
            "{identical}/{DETERMINISM_RUNS} identical transcripts ({} bytes)",
            first.len()
        ),
    );
}

/// Independent graph6 reader: expands the data bytes into a bit string first,
/// then walks the upper triangle column by column.
fn reference_decode(line: &str) -> Option<(usize, BTreeSet<(usize, usize)>)> {
    let bytes = line.as_bytes();
    let n = bytes.first()?.checked_sub(63)? as usize;
    if n > 62 {
        return None;
    }
    let bits: String = bytes[1..]
        .iter()
        .map(|&b| format!("{:06b}", b.checked_sub(63).filter(|&x| x < 64).unwrap()))
        .collect();
    let needed = n * n.saturating_sub(1) / 2;
    if bits.len() != needed.div_ceil(6) * 6 {
        return None;
    }
    let mut edges = BTreeSet::new();
    let mut chars = bits.chars();
    for j in 0..n {
        for i in 0..j {
            if chars.next()? == '1' {
                edges.insert((i, j));
            }
        }
    }
    Some((n, edges))
}

#[test]
fn ac9_graph6_fidelity() {
    let graphs: Vec<Graph> = corpus().into_iter().filter(|g| g.order() <= 62).collect();
    let mut roundtrip_failures = 0;
    let mut reference_failures = 0;
    let mut lines = BTreeSet::new();
    for g in &graphs {
        let line = encode_graph6(g).unwrap();
        if decode_graph6(&line).ok().as_ref() != Some(g) {
            roundtrip_failures += 1;
        }
        let ours: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
        if reference_decode(&line) != Some((g.order(), ours)) {
            reference_failures += 1;
        }
        lines.insert(line);
    }
    report(
        "AC9",
        "graph6 round-trip and reference-decoder agreement",
        roundtrip_failures == 0 && reference_failures == 0 && lines.len() >= REFERENCE_DECODER_LINES,
        format!(
            "{} graphs, {} distinct lines; round-trip failures {roundtrip_failures}, reference disagreements {reference_failures}",
            graphs.len(),
            lines.len()
        ),
    );
}
