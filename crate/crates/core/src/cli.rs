//! The `nprime` command line.
//!
//! Exit codes: 0 success or `FOUND`, 1 any error or a failed verification,
//! 2 `EXHAUSTED` (or a counterexample during a scan), 3 `INCONCLUSIVE`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::families::{generate, FamilySpec};
use crate::graph::verify;
use crate::io::{parse_edge_list, parse_label_values, write_dot, write_edge_list, write_labels};
use crate::labelers::label_family;
use crate::search::{coprime_matching, find_labeling, SearchConfig, Status, VertexOrder};
use crate::trees_enum::{counterexample_text, scan_size, ConjectureReport, MAX_ENUMERATION_N};
use crate::Labeling;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_EXHAUSTED: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "nprime", version, about = "Neighborhood-prime labelings of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a family member as an edge list.
    Gen {
        /// Family spec, e.g. `gear:4`, `snake:6,7`, `spider:1,2,3`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the family's constructive labeler and verify the result.
    Label {
        #[arg(long)]
        family: String,
        /// Labels file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Check a labeling against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labels: PathBuf,
    },
    /// Exact backtracking search.
    Search {
        #[arg(long)]
        graph: PathBuf,
        /// Label assignments to try before giving up; 0 means unbounded.
        #[arg(long, default_value_t = crate::search::DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Enumerate every labeling.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = OrderArg::Deg)]
        order: OrderArg,
    },
    /// Search every tree up to a size and tabulate the results.
    ScanTrees {
        #[arg(long)]
        max_n: usize,
        /// Worker threads; all cores when omitted.
        #[arg(long)]
        jobs: Option<usize>,
        /// Directory for counterexample edge lists.
        #[arg(long)]
        fail_dir: Option<PathBuf>,
    },
    /// Print the smallest coprime matching of 1..n into 2n+1..3n.
    MatchCoprime {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Deg,
    Nat,
}

impl From<OrderArg> for VertexOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Deg => VertexOrder::DegreeDescending,
            OrderArg::Nat => VertexOrder::NaturalOrder,
        }
    }
}

/// A one-line diagnostic.
struct Diag(String);

impl From<Error> for Diag {
    fn from(e: Error) -> Self {
        if e.suggests_search() {
            Diag(format!("{e} (try `nprime search` on the generated graph)"))
        } else {
            Diag(e.to_string())
        }
    }
}

impl From<std::io::Error> for Diag {
    fn from(e: std::io::Error) -> Self {
        Diag(format!("output failed: {e}"))
    }
}

type CmdResult = Result<i32, Diag>;

fn read(path: &Path) -> Result<String, Diag> {
    fs::read_to_string(path).map_err(|e| Diag(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Diag> {
    fs::write(path, text).map_err(|e| Diag(format!("cannot write {}: {e}", path.display())))
}

fn family(spec: &str) -> Result<FamilySpec, Diag> {
    Ok(spec.parse::<FamilySpec>()?)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{first}");
            return EXIT_ERROR;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Diag(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Gen { family: spec, out: path, dot } => {
            let g = generate(&family(&spec)?)?;
            write(&path, &write_edge_list(&g))?;
            if let Some(dot) = dot {
                write(&dot, &write_dot(&g, None)?)?;
            }
            writeln!(out, "{spec}: {} vertices, {} edges", g.vertex_count(), g.edge_count())?;
            Ok(EXIT_OK)
        }
        Command::Label { family: spec, out: path, graph_out } => {
            let (g, f) = label_family(&family(&spec)?)?;
            let report = verify(&g, &f)?;
            if !report.ok {
                // Never emit a labeling the verifier rejects.
                return Err(Diag(format!(
                    "LabelingInvalid: labeler output fails at {} vertices",
                    report.violations.len()
                )));
            }
            if let Some(gp) = graph_out {
                write(&gp, &write_edge_list(&g))?;
            }
            match path {
                Some(p) => write(&p, &write_labels(&f))?,
                None => out.write_all(write_labels(&f).as_bytes())?,
            }
            writeln!(out, "VERIFIED")?;
            Ok(EXIT_OK)
        }
        Command::Verify { graph, labels } => {
            let g = parse_edge_list(&read(&graph)?)?;
            let f = Labeling::new(parse_label_values(&read(&labels)?)?)?;
            let report = verify(&g, &f)?;
            for v in &report.violations {
                let ls: Vec<String> = v.neighbor_labels.iter().map(|l| l.to_string()).collect();
                writeln!(
                    out,
                    "violation at vertex {}: neighbor labels {{{}}} have gcd {}",
                    v.vertex,
                    ls.join(", "),
                    v.gcd_value
                )?;
            }
            if report.ok {
                writeln!(out, "OK ({} vertices checked)", report.checked_count)?;
                Ok(EXIT_OK)
            } else {
                writeln!(
                    out,
                    "FAILED ({} of {} vertices violate)",
                    report.violations.len(),
                    report.checked_count
                )?;
                Ok(EXIT_ERROR)
            }
        }
        Command::Search { graph, budget, all, order } => {
            let g = parse_edge_list(&read(&graph)?)?;
            let cfg = SearchConfig {
                node_budget: (budget > 0).then_some(budget),
                order: order.into(),
                find_all: all,
            };
            let outcome = find_labeling(&g, &cfg);
            let code = match &outcome.status {
                Status::Found(f) => {
                    writeln!(out, "FOUND")?;
                    out.write_all(write_labels(f).as_bytes())?;
                    EXIT_OK
                }
                Status::Exhausted => {
                    writeln!(out, "EXHAUSTED")?;
                    EXIT_EXHAUSTED
                }
                Status::Inconclusive => {
                    writeln!(out, "INCONCLUSIVE")?;
                    EXIT_INCONCLUSIVE
                }
            };
            if let Some(sols) = &outcome.all_solutions {
                writeln!(out, "solutions: {}", sols.len())?;
                for s in sols {
                    let line: Vec<String> = s.as_slice().iter().map(|l| l.to_string()).collect();
                    writeln!(out, "{}", line.join(" "))?;
                }
            }
            writeln!(out, "nodes explored: {}", outcome.nodes_explored)?;
            Ok(code)
        }
        Command::ScanTrees { max_n, jobs, fail_dir } => {
            if max_n == 0 || max_n > MAX_ENUMERATION_N {
                return Err(Error::Usage(format!(
                    "--max-n must be in 1..={MAX_ENUMERATION_N}, got {max_n}"
                ))
                .into());
            }
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                if j == 0 {
                    return Err(Diag("--jobs must be at least 1".into()));
                }
                builder = builder.num_threads(j);
            }
            let pool = builder
                .build()
                .map_err(|e| Diag(format!("cannot start worker pool: {e}")))?;
            if let Some(dir) = &fail_dir {
                fs::create_dir_all(dir)
                    .map_err(|e| Diag(format!("cannot create {}: {e}", dir.display())))?;
            }
            let cfg = SearchConfig::default();
            let mut report = ConjectureReport::default();
            out.write_all(ConjectureReport::table_header().as_bytes())?;
            for n in 1..=max_n {
                let row = pool.install(|| scan_size(n, &cfg))?;
                out.write_all(ConjectureReport::table_row(&row).as_bytes())?;
                for (i, c) in row.failures.iter().enumerate() {
                    let text = counterexample_text(c);
                    out.write_all(text.as_bytes())?;
                    if let Some(dir) = &fail_dir {
                        write(&dir.join(format!("n{n}_{}.el", i + 1)), &text)?;
                    }
                }
                out.flush()?;
                report.rows.push(row);
            }
            Ok(if !report.holds() {
                EXIT_EXHAUSTED
            } else if report.inconclusive_count() > 0 {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_OK
            })
        }
        Command::MatchCoprime { n } => {
            if n == 0 {
                return Err(Error::Usage("--n must be at least 1".into()).into());
            }
            let m = coprime_matching(n);
            let mut text = String::new();
            for (x, y) in m.pairs() {
                let _ = writeln!(text, "{x} {y}");
            }
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}
