//! Text and JSON rendering of Betti tables and detector reports.

use serde::Serialize;

use crate::detect::{Certificate, DetectionResult, ScanWitness};
use crate::graph::{Graph, VertexSet};
use crate::hochster::BettiTable;
use crate::homology::FieldSpec;

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Graded,
    Multigraded,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryJson {
    pub i: usize,
    pub alpha: Vec<usize>,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedJson {
    pub i: usize,
    pub j: usize,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub kind: String,
    pub label: String,
    pub vertices: Vec<usize>,
    pub parts: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// The machine-readable report. Every key is always present; keys that do
/// not apply to a command are `null` or empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub argv: Vec<String>,
    pub n: usize,
    pub field: u32,
    pub entries: Vec<EntryJson>,
    pub graded: Vec<GradedJson>,
    pub witnesses: Vec<WitnessJson>,
    pub verdict: Option<bool>,
    pub failing_degree: Option<Vec<usize>>,
    pub graph: Option<GraphJson>,
    pub label_map: Option<Vec<usize>>,
}

impl ReportDocument {
    pub fn new(command: &str, n: usize, field: FieldSpec) -> Self {
        ReportDocument {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            argv: Vec::new(),
            n,
            field: field.characteristic(),
            entries: Vec::new(),
            graded: Vec::new(),
            witnesses: Vec::new(),
            verdict: None,
            failing_degree: None,
            graph: None,
            label_map: None,
        }
    }

    pub fn with_table(mut self, t: &BettiTable) -> Self {
        self.entries = t
            .iter()
            .map(|(i, a, value)| EntryJson {
                i,
                alpha: a.to_vec(),
                value,
            })
            .collect();
        self.graded = t
            .graded()
            .iter()
            .map(|(i, j, value)| GradedJson { i, j, value })
            .collect();
        self
    }

    pub fn with_detection(mut self, r: &DetectionResult) -> Self {
        self.verdict = Some(r.verdict);
        self.failing_degree = r.failing_degree.map(VertexSet::to_vec);
        self.witnesses = r.certificate.iter().map(certificate_json).collect();
        self
    }

    pub fn with_graph(mut self, g: &Graph) -> Self {
        self.graph = Some(GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        });
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

pub fn certificate_json(c: &Certificate) -> WitnessJson {
    let kind = match c {
        Certificate::Complete { .. } => "complete",
        Certificate::Bipartite { .. } => "bipartite",
        Certificate::Paired { .. } => "paired",
    };
    WitnessJson {
        kind: kind.to_string(),
        label: c.label(),
        vertices: c.vertices().to_vec(),
        parts: c.parts().parts().iter().map(|p| p.to_vec()).collect(),
    }
}

pub fn scan_witness_json(w: &ScanWitness) -> WitnessJson {
    WitnessJson {
        kind: format!("{:?}", w.kind),
        label: w.certificate.label(),
        vertices: w.vertices.to_vec(),
        parts: w
            .certificate
            .parts()
            .parts()
            .iter()
            .map(|p| p.to_vec())
            .collect(),
    }
}

/// Renders a Betti table. Graded tables use the usual layout with one
/// column per homological index `i` and one row per `j − i`; multigraded
/// tables list `i`, `x^α` and the value, one entry per line.
pub fn render_betti(t: &BettiTable, field: FieldSpec, mode: Mode, format: Format) -> String {
    match format {
        Format::Json => ReportDocument::new("betti", t.n(), field)
            .with_table(t)
            .to_json(),
        Format::Table if t.is_empty() => "0 (zero ideal)\n".to_string(),
        Format::Table => match mode {
            Mode::Graded => graded_table(t),
            Mode::Multigraded => t
                .iter()
                .map(|(i, a, v)| format!("{i}  {}  {v}\n", a.monomial()))
                .collect(),
        },
    }
}

fn graded_table(t: &BettiTable) -> String {
    let row = t.graded();
    let pd = t.projective_dimension().unwrap_or(0);
    let shifts: Vec<usize> = {
        let mut s: Vec<usize> = row.iter().map(|(i, j, _)| j - i).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    let cell = |v: usize| {
        if v == 0 {
            ".".to_string()
        } else {
            v.to_string()
        }
    };
    let mut grid: Vec<Vec<String>> = Vec::new();
    grid.push(
        std::iter::once(String::new())
            .chain((0..=pd).map(|i| i.to_string()))
            .collect(),
    );
    grid.push(
        std::iter::once("total:".to_string())
            .chain((0..=pd).map(|i| cell(row.total(i))))
            .collect(),
    );
    for &d in &shifts {
        grid.push(
            std::iter::once(format!("{d}:"))
                .chain((0..=pd).map(|i| cell(row.get(i, i + d))))
                .collect(),
        );
    }
    let cols = pd + 2;
    let widths: Vec<usize> = (0..cols)
        .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in &grid {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:>w$}"))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}
