//! The `magiclab` command.
//!
//! Exit codes: 0 on success, 1 on a semantic failure (the graph is not
//! 5-regular, a labeling is not zero-sum, ...), 2 on usage or parse errors.
//! All diagnostics go to stderr.

use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};
use magiclab_core::magic::decide;
use magiclab_core::{
    build_regular, label_five_regular, label_odd_regular_via_factor, max_matching, random_regular,
    DegreeSequence, Graph, Labeling, Membership, DEFAULT_BUDGET,
};

use crate::edgelist::write_edge_list;
use crate::graph6::encode_graph6;
use crate::record::LabelingRecord;
use crate::{read_graph, IoError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "magiclab",
    version,
    about = "Zero-sum magic labelings of regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print an r-regular graph on n vertices.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Sample from the seeded pairing model instead of the two-vertex builder.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Label a graph by the 1-factor construction and print the record.
    Label {
        #[arg(long, default_value_t = 3)]
        h: u32,
        /// Input graph (graph6 or edge list); stdin when omitted.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Check a labeling record for the zero-sum property.
    Verify {
        #[arg(long)]
        h: Option<u32>,
        /// Labeling record; stdin when omitted.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Decide null-set membership for every h in hmin..=hmax.
    Nullset {
        #[arg(long)]
        hmin: u32,
        #[arg(long)]
        hmax: u32,
        /// Search nodes per modulus.
        #[arg(long, env = "MAGICLAB_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Print the witness labels of each member.
        #[arg(long)]
        witness: bool,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Print a maximum matching.
    Matching {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Test a degree sequence for graphicality.
    Graphical {
        /// Comma- or space-separated degrees, e.g. "5,5,5,5,5,5".
        #[arg(long)]
        sequence: String,
        /// Also print a Havel-Hakimi realization as graph6.
        #[arg(long)]
        realize: bool,
    },
}

/// Outcome of a subcommand: text for stdout, plus the exit code.
struct Output {
    stdout: String,
    code: i32,
}

/// Failure of a subcommand, with its exit code.
struct Failure {
    message: String,
    code: i32,
}

impl Failure {
    fn semantic(message: impl ToString) -> Self {
        Failure {
            message: message.to_string(),
            code: EXIT_FAILURE,
        }
    }

    fn usage(message: impl ToString) -> Self {
        Failure {
            message: message.to_string(),
            code: EXIT_USAGE,
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::MalformedInput(_) => Failure::usage(e),
            _ => Failure::semantic(e),
        }
    }
}

/// Runs the CLI on explicit streams and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            out.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "magiclab: {}", f.message);
            f.code
        }
    }
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn load_graph(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    Ok(read_graph(&read_input(path, stdin)?)?)
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match command {
        Command::Generate {
            n,
            r,
            random,
            seed,
            format,
        } => {
            let g = if random {
                random_regular(n, r, seed)
            } else {
                build_regular(n, r)
            }
            .map_err(Failure::semantic)?;
            let stdout = match format {
                Format::Graph6 => encode_graph6(&g)? + "\n",
                Format::Edges => write_edge_list(&g),
            };
            Ok(Output {
                stdout,
                code: EXIT_OK,
            })
        }
        Command::Label { h, input } => {
            let g = load_graph(input.as_ref(), stdin)?;
            let labeling = label(&g, h).map_err(Failure::semantic)?;
            let record = LabelingRecord::new(&g, &labeling).map_err(Failure::semantic)?;
            let code = if record.verdict {
                EXIT_OK
            } else {
                EXIT_FAILURE
            };
            Ok(Output {
                stdout: record.to_text(),
                code,
            })
        }
        Command::Verify { h, labels } => {
            let text = read_input(labels.as_ref(), stdin)?;
            let record = LabelingRecord::load(&text, h).map_err(|e| {
                if e.is_parse_error() {
                    Failure::usage(e)
                } else {
                    Failure::semantic(e)
                }
            })?;
            let sums: Vec<String> = record.sums.iter().map(u32::to_string).collect();
            let stdout = format!(
                "h {}\nsums {}\nverdict {}\n",
                record.h,
                sums.join(" "),
                record.verdict
            );
            let code = if record.verdict {
                EXIT_OK
            } else {
                EXIT_FAILURE
            };
            Ok(Output { stdout, code })
        }
        Command::Nullset {
            hmin,
            hmax,
            budget,
            witness,
            input,
        } => {
            if hmin < 2 || hmin > hmax {
                return Err(Failure::usage(format!(
                    "need 2 <= hmin <= hmax, got {hmin}..={hmax}"
                )));
            }
            let g = load_graph(input.as_ref(), stdin)?;
            let verdicts = null_set_parallel(&g, hmin, hmax, budget);
            let mut stdout = String::new();
            for (h, m) in &verdicts {
                write!(stdout, "h {h} {}", m.name()).unwrap();
                if let (true, Some(w)) = (witness, m.witness()) {
                    let labels: Vec<String> = w.labels().iter().map(u32::to_string).collect();
                    write!(stdout, " labels {}", labels.join(" ")).unwrap();
                }
                stdout.push('\n');
            }
            Ok(Output {
                stdout,
                code: EXIT_OK,
            })
        }
        Command::Matching { input } => {
            let g = load_graph(input.as_ref(), stdin)?;
            let report = max_matching(&g);
            let mut stdout = format!("size {}\nperfect {}\n", report.size(), report.is_perfect);
            for &e in report.matching.edge_indices() {
                let (u, v) = g.edge(e);
                writeln!(stdout, "edge {u} {v}").unwrap();
            }
            Ok(Output {
                stdout,
                code: EXIT_OK,
            })
        }
        Command::Graphical { sequence, realize } => {
            let degrees = parse_sequence(&sequence)?;
            let d = DegreeSequence::new(degrees);
            let mut stdout = String::new();
            if d.is_graphical() {
                stdout.push_str("graphical\n");
                if realize {
                    let g = d.realize().map_err(Failure::semantic)?;
                    writeln!(stdout, "realization {}", encode_graph6(&g)?).unwrap();
                }
            } else {
                stdout.push_str("not graphical\n");
            }
            Ok(Output {
                stdout,
                code: EXIT_OK,
            })
        }
    }
}

fn label(g: &Graph, h: u32) -> Result<Labeling, magiclab_core::MagicError> {
    if h == 3 && g.is_regular(5) {
        label_five_regular(g)
    } else {
        label_odd_regular_via_factor(g, h)
    }
}

fn parse_sequence(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Failure::usage(format!("bad degree {t:?} in sequence")))
        })
        .collect()
}

/// Moduli are decided on scoped worker threads, at most one per available
/// core at a time; results come back in ascending `h`.
fn null_set_parallel(g: &Graph, hmin: u32, hmax: u32, budget: u64) -> Vec<(u32, Membership)> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get());
    let moduli: Vec<u32> = (hmin..=hmax).collect();
    let mut out = Vec::with_capacity(moduli.len());
    for batch in moduli.chunks(workers) {
        thread::scope(|s| {
            let handles: Vec<_> = batch
                .iter()
                .map(|&h| (h, s.spawn(move || decide(g, h, budget))))
                .collect();
            for (h, handle) in handles {
                out.push((h, handle.join().expect("null-set worker panicked")));
            }
        });
    }
    out
}
