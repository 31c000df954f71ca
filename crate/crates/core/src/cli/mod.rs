//! The `edge-betti` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a detector, oracle or scan comes back
//! negative, 2 on usage or input errors.

mod edge_list;
mod render;

pub use edge_list::{parse_edge_list, EdgeListDocument};
pub use render::{
    certificate_json, render_betti, scan_witness_json, EntryJson, Format, GradedJson, GraphJson,
    Mode, ReportDocument, WitnessJson,
};

use std::ffi::OsString;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use crate::detect::{
    detect_km_syzygy, detect_krs_syzygy, k33_k222_scan, kuratowski_desk_scan,
    oracle_contains_km_at, oracle_contains_multipartite_at, DEFAULT_SCAN_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hochster::{betti_table_capped, multigraded_betti_at, DEFAULT_TABLE_CAP};
use crate::homology::FieldSpec;

#[derive(Parser, Debug)]
#[command(
    name = "edge-betti",
    version,
    about = "Betti numbers of edge ideals and subgraph detection"
)]
struct Cli {
    /// Coefficient field: 0 for the rationals or a prime p.
    #[arg(long, global = true, default_value_t = 2)]
    field: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Edge-list file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    /// Vertex cap for full tables and scans.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full multigraded Betti table.
    Betti {
        #[arg(long, value_enum, default_value_t = Mode::Graded)]
        mode: Mode,
    },
    /// Betti numbers at a single squarefree support.
    BettiAt {
        #[arg(long, value_delimiter = ',', required = true)]
        support: Vec<usize>,
    },
    /// Detect K_m on the given vertices from first syzygies.
    DetectKm {
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<usize>,
    },
    /// Detect K_{r,s} with sides X and Y from first syzygies.
    DetectKrs {
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        y: Vec<usize>,
    },
    /// Scan all 6-subsets for K_{3,3} or K_{2,2,2}.
    ScanK33,
    /// Smooth degree-2 vertices, then scan for K_5 and K_{3,3}.
    ScanKuratowski,
    /// Suppress unprotected degree-2 vertices.
    Smooth {
        #[arg(long, value_delimiter = ',')]
        protect: Vec<usize>,
    },
    /// Brute-force oracles.
    Oracle {
        #[arg(long, value_enum)]
        kind: OracleKind,
        #[arg(long, value_delimiter = ',', required = true)]
        at: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Km,
    Multipartite,
}

/// Exit code plus captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, positive: bool) -> Self {
        Outcome {
            code: if positive { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(e: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Runs one invocation, reading `--input -` from the process's stdin.
pub fn run_command<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run(args, &mut std::io::stdin().lock())
}

/// Runs one invocation with an explicit stdin. `args[0]` is the program
/// name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text, true),
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let argv = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match execute(&cli, argv, stdin) {
        Ok(out) => out,
        Err(e) => Outcome::input_error(e),
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<Graph> {
    let mut text = String::new();
    let io = if path == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    io.map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {path}: {e}"),
    })?;
    parse_edge_list(&text)?.to_graph()
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Betti { .. } => "betti",
        Command::BettiAt { .. } => "betti-at",
        Command::DetectKm { .. } => "detect-km",
        Command::DetectKrs { .. } => "detect-krs",
        Command::ScanK33 => "scan-k33",
        Command::ScanKuratowski => "scan-kuratowski",
        Command::Smooth { .. } => "smooth",
        Command::Oracle { .. } => "oracle",
    }
}

fn execute(cli: &Cli, argv: Vec<String>, stdin: &mut dyn Read) -> Result<Outcome> {
    let field = FieldSpec::new(cli.field)?;
    let g = read_input(&cli.input, stdin)?;
    let n = g.n();
    let set = |labels: &[usize]| VertexSet::try_of(labels.iter().copied(), n);
    let mut report = ReportDocument::new(command_name(&cli.command), n, field);
    report.argv = argv;
    let json = cli.format == Format::Json;

    let (text, positive) = match &cli.command {
        Command::Betti { mode } => {
            let t = betti_table_capped(&g, field, cli.max_n.unwrap_or(DEFAULT_TABLE_CAP))?;
            report = report.with_table(&t);
            (render_betti(&t, field, *mode, Format::Table), true)
        }
        Command::BettiAt { support } => {
            let w = set(support)?;
            let betti = multigraded_betti_at(&g, w, field)?;
            let mut text = String::new();
            for (i, &value) in betti.iter().enumerate() {
                text.push_str(&format!("{i}  {}  {value}\n", w.monomial()));
                if value > 0 {
                    report.entries.push(EntryJson {
                        i,
                        alpha: w.to_vec(),
                        value,
                    });
                    report.graded.push(GradedJson {
                        i,
                        j: w.len(),
                        value,
                    });
                }
            }
            if betti.iter().all(|&v| v == 0) {
                text.push_str(&format!("all zero at {}\n", w.monomial()));
            }
            (text, true)
        }
        Command::DetectKm { vertices } => {
            let r = detect_km_syzygy(&g, set(vertices)?)?;
            report = report.with_detection(&r);
            (detection_text(&report), r.verdict)
        }
        Command::DetectKrs { x, y } => {
            let r = detect_krs_syzygy(&g, set(x)?, set(y)?)?;
            report = report.with_detection(&r);
            (detection_text(&report), r.verdict)
        }
        Command::ScanK33 => {
            let cap = cli.max_n.unwrap_or(DEFAULT_SCAN_CAP);
            if n > cap {
                return Err(Error::OverCap { n, cap });
            }
            let found = k33_k222_scan(&g);
            report.witnesses = found.iter().map(scan_witness_json).collect();
            report.verdict = Some(!found.is_empty());
            (witness_text(&report), !found.is_empty())
        }
        Command::ScanKuratowski => {
            let r = kuratowski_desk_scan(&g, cli.max_n.unwrap_or(DEFAULT_SCAN_CAP))?;
            let labelled = |kind: &str, sets: &[VertexSet]| -> Vec<WitnessJson> {
                sets.iter()
                    .map(|s| WitnessJson {
                        kind: kind.to_string(),
                        label: match kind {
                            "K5" => "K_5".into(),
                            "K33" => "K_{3,3}".into(),
                            _ => "K_{2,2,2}".into(),
                        },
                        vertices: s.to_vec(),
                        parts: Vec::new(),
                    })
                    .collect()
            };
            report.witnesses = labelled("K5", &r.k5);
            report.witnesses.extend(labelled("K33", &r.k33));
            report.witnesses.extend(labelled("K222", &r.k222));
            report.verdict = Some(r.found());
            report.label_map = Some(r.smoothed.labels().to_vec());
            report = report.with_graph(&r.smoothed.graph);
            let mut text = format!(
                "smoothed to {} vertices, {} edges\n",
                r.smoothed.graph.n(),
                r.smoothed.graph.edge_count()
            );
            text.push_str(&witness_text(&report));
            text.push_str(
                "note: finds K5/K33 subgraphs of the smoothed graph only; not a planarity test\n",
            );
            (text, r.found())
        }
        Command::Smooth { protect } => {
            let r = g.smooth(set(protect)?);
            report.label_map = Some(r.labels().to_vec());
            report = report.with_graph(&r.graph);
            let mut doc = EdgeListDocument::from_graph(&r.graph);
            doc.comments.push(format!(
                "original labels: {}",
                r.labels()
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            (doc.to_text(), true)
        }
        Command::Oracle { kind, at, sizes } => {
            let w = set(at)?;
            let found = match kind {
                OracleKind::Km => oracle_contains_km_at(&g, w).then(|| vec![w]),
                OracleKind::Multipartite => {
                    oracle_contains_multipartite_at(&g, w, sizes)?.map(|p| p.parts().to_vec())
                }
            };
            report.verdict = Some(found.is_some());
            if let Some(parts) = &found {
                report.witnesses.push(WitnessJson {
                    kind: format!("{kind:?}").to_lowercase(),
                    label: match kind {
                        OracleKind::Km => format!("K_{}", w.len()),
                        OracleKind::Multipartite => format!(
                            "K_{{{}}}",
                            parts
                                .iter()
                                .map(|p| p.len().to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                    },
                    vertices: w.to_vec(),
                    parts: parts.iter().map(|p| p.to_vec()).collect(),
                });
            }
            (witness_text(&report), found.is_some())
        }
    };
    let stdout = if json { report.to_json() } else { text };
    Ok(Outcome::ok(stdout, positive))
}

fn monomial(labels: &[usize]) -> String {
    VertexSet::of(labels.iter().copied()).monomial()
}

fn detection_text(r: &ReportDocument) -> String {
    let mut out = format!("verdict: {}\n", r.verdict.unwrap_or(false));
    if let Some(d) = &r.failing_degree {
        out.push_str(&format!("failing degree: {}\n", monomial(d)));
    }
    for w in &r.witnesses {
        out.push_str(&format!(
            "certificate: {} {}\n",
            w.label,
            parts_text(&w.parts)
        ));
    }
    out
}

fn parts_text(parts: &[Vec<usize>]) -> String {
    parts
        .iter()
        .map(|p| {
            let items: Vec<String> = p.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn witness_text(r: &ReportDocument) -> String {
    if r.witnesses.is_empty() {
        return "no witness\n".to_string();
    }
    r.witnesses
        .iter()
        .map(|w| {
            let vs: Vec<String> = w.vertices.iter().map(|v| v.to_string()).collect();
            let mut line = format!("{}  {{{}}}", w.kind, vs.join(","));
            if !w.parts.is_empty() {
                line.push_str(&format!("  {}  {}", w.label, parts_text(&w.parts)));
            }
            line + "\n"
        })
        .collect()
}
