//! Subgraph detection from first syzygies and full Betti tables.
//!
//! * A graph contains `K_m` on `S` iff `β_{1,T}(G) ≥ 2` for every
//!   3-subset `T ⊆ S`.
//! * `β_{1,α}(K_{r,s}) ≤ β_{1,α}(G)` for all `α` iff `G` contains `K_{r,s}`
//!   on the given sides, or a `K_{2,…,2,a,b}` built from X–Y pairs and the
//!   leftover vertices of each side.
//! * For `H` complete or complete multipartite, `G ⊇ H` iff
//!   `β_{i,α}(H) ≤ β_{i,α}(G)` for all `i, α`; for cliques the inequality is
//!   an equality on supports inside `H`.
//!
//! Every detector states its verdict from Betti numbers alone and is
//! cross-checked against the brute-force oracles in [`oracle`].

pub mod oracle;
mod scan;

pub use oracle::{
    find_partition, oracle_contains_km_at, oracle_contains_multipartite_at, oracle_krs_certificate,
    RestParts,
};
pub use scan::{
    k33_k222_scan, kuratowski_desk_scan, KuratowskiReport, ScanWitness, WitnessKind,
    DEFAULT_SCAN_CAP,
};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, MultiDegree, PartitionSpec, VertexSet};
use crate::hochster::{
    closed_form_complete_on, closed_form_multipartite, first_syzygy_triple, multigraded_betti_at,
    BettiTable,
};
use crate::homology::FieldSpec;

/// A combinatorial witness for a positive detection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `K_m` on these vertices.
    Complete { vertices: VertexSet },
    /// `K_{r,s}` with these sides.
    Bipartite { x: VertexSet, y: VertexSet },
    /// `K_{2,…,2,a,b}`: each pair joins one vertex of X to one of Y; the
    /// leftover X vertices and Y vertices form the last two parts, either
    /// of which may be empty.
    Paired {
        pairs: Vec<VertexSet>,
        x_rest: VertexSet,
        y_rest: VertexSet,
    },
}

impl Certificate {
    pub(crate) fn from_placed_parts(parts: &[VertexSet], x: VertexSet, y: VertexSet) -> Self {
        let mut pairs = Vec::new();
        let (mut x_rest, mut y_rest) = (VertexSet::EMPTY, VertexSet::EMPTY);
        for &p in parts {
            if p.is_subset(x) {
                x_rest = p;
            } else if p.is_subset(y) {
                y_rest = p;
            } else {
                pairs.push(p);
            }
        }
        if pairs.is_empty() {
            Certificate::Bipartite { x, y }
        } else {
            Certificate::Paired {
                pairs,
                x_rest,
                y_rest,
            }
        }
    }

    /// Number `t` of two-element X–Y parts.
    pub fn pair_count(&self) -> usize {
        match self {
            Certificate::Paired { pairs, .. } => pairs.len(),
            _ => 0,
        }
    }

    /// The non-empty parts of the certified complete multipartite graph.
    /// A clique is reported as singleton parts.
    pub fn parts(&self) -> PartitionSpec {
        let parts = match self {
            Certificate::Complete { vertices } => {
                vertices.iter().map(VertexSet::singleton).collect()
            }
            Certificate::Bipartite { x, y } => vec![*x, *y],
            Certificate::Paired {
                pairs,
                x_rest,
                y_rest,
            } => pairs
                .iter()
                .copied()
                .chain([*x_rest, *y_rest])
                .filter(|p| !p.is_empty())
                .collect(),
        };
        PartitionSpec::new(parts).expect("certificate parts are disjoint")
    }

    /// Part sizes in descending order.
    pub fn shape(&self) -> Vec<usize> {
        let mut sizes = self.parts().sizes();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// `K_5`, `K_{3,3}`, `K_{2,2,1,1}`, …
    pub fn label(&self) -> String {
        match self {
            Certificate::Complete { vertices } => format!("K_{}", vertices.len()),
            _ => {
                let sizes: Vec<String> = self.shape().iter().map(|s| s.to_string()).collect();
                format!("K_{{{}}}", sizes.join(","))
            }
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.parts().vertices()
    }
}

/// Outcome of a Betti-number detector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetectionResult {
    /// Whether the Betti inequality holds.
    pub verdict: bool,
    /// Combinatorial witness, present exactly when the verdict is true.
    pub certificate: Option<Certificate>,
    /// First multidegree at which the inequality fails.
    pub failing_degree: Option<MultiDegree>,
}

impl DetectionResult {
    fn negative(at: MultiDegree) -> Self {
        DetectionResult {
            verdict: false,
            certificate: None,
            failing_degree: Some(at),
        }
    }

    fn positive(certificate: Certificate) -> Self {
        DetectionResult {
            verdict: true,
            certificate: Some(certificate),
            failing_degree: None,
        }
    }
}

fn check_range(g: &Graph, s: VertexSet) -> Result<()> {
    if s.is_subset(g.vertices()) {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange {
            vertex: s.difference(g.vertices()).first().unwrap_or(0),
            n: g.n(),
        })
    }
}

/// Decides whether `g` contains `K_m` on `s` by comparing first syzygies in
/// degree-3 supports: `K_m` has `β_{1,T} = 2` on every triple.
pub fn detect_km_syzygy(g: &Graph, s: VertexSet) -> Result<DetectionResult> {
    check_range(g, s)?;
    if s.len() < 2 {
        return Err(Error::TooFewVertices {
            min: 2,
            got: s.len(),
        });
    }
    let failing = if s.len() == 2 {
        // β_{0,S}(K_2) = 1
        let (u, v) = (s.first().unwrap(), s.last().unwrap());
        (!g.has_edge(u, v)).then_some(s)
    } else {
        s.subsets_of_size(3)
            .find(|&t| first_syzygy_triple(g, t).expect("triple") < 2)
    };
    let result = match failing {
        Some(at) => DetectionResult::negative(at),
        None => DetectionResult::positive(Certificate::Complete { vertices: s }),
    };
    debug_assert_eq!(result.verdict, oracle_contains_km_at(g, s));
    Ok(result)
}

/// Decides whether `β_{1,α}(K_{r,s}) ≤ β_{1,α}(G)` for every `α`, with `K_{r,s}`
/// placed on sides `x` and `y`, and classifies positive cases with the
/// partition oracle.
///
/// The first syzygies of `K_{r,s}` sit exactly on the triples meeting both
/// sides, each with value 1, so only those triples are inspected.
pub fn detect_krs_syzygy(g: &Graph, x: VertexSet, y: VertexSet) -> Result<DetectionResult> {
    check_range(g, x.union(y))?;
    if !x.is_disjoint(y) {
        return Err(Error::OverlappingSides);
    }
    for side in [x, y] {
        if side.is_empty() {
            return Err(Error::TooFewVertices { min: 1, got: 0 });
        }
    }
    let failing = x.union(y).subsets_of_size(3).find(|&t| {
        !t.is_disjoint(x) && !t.is_disjoint(y) && first_syzygy_triple(g, t).expect("triple") < 1
    });
    if let Some(at) = failing {
        debug_assert!(oracle_krs_certificate(g, x, y, RestParts::AllowEmpty)?.is_none());
        return Ok(DetectionResult::negative(at));
    }
    let certificate = oracle_krs_certificate(g, x, y, RestParts::AllowEmpty)?
        .expect("positive first-syzygy verdict always has a certificate");
    Ok(DetectionResult::positive(certificate))
}

/// A complete or complete multipartite pattern placed on labels of the host
/// graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Complete(VertexSet),
    Multipartite(PartitionSpec),
}

impl Pattern {
    pub fn vertices(&self) -> VertexSet {
        match self {
            Pattern::Complete(s) => *s,
            Pattern::Multipartite(spec) => spec.vertices(),
        }
    }

    /// The pattern as a graph on `1..=n`.
    pub fn graph(&self, n: usize) -> Result<Graph> {
        match self {
            Pattern::Complete(s) => {
                let spec = PartitionSpec::new(s.iter().map(VertexSet::singleton).collect())?;
                Graph::from_partition(&spec, n)
            }
            Pattern::Multipartite(spec) => Graph::from_partition(spec, n),
        }
    }

    /// Multigraded Betti numbers of the pattern from its closed form.
    pub fn closed_form(&self, n: usize) -> BettiTable {
        match self {
            Pattern::Complete(s) => closed_form_complete_on(*s, n),
            Pattern::Multipartite(spec) => {
                let t = closed_form_multipartite(spec);
                t.embedded(&(1..=t.n()).collect::<Vec<_>>(), n)
            }
        }
    }
}

/// True iff `β_{i,α}(H) ≤ β_{i,α}(G)` for every `i` and every support inside
/// `V(H)`; outside that range the pattern's Betti numbers vanish.
pub fn check_full_betti_dominance(g: &Graph, h: &Pattern, field: FieldSpec) -> Result<bool> {
    let vh = h.vertices();
    check_range(g, vh)?;
    let closed = h.closed_form(g.n());
    let supports: Vec<VertexSet> = vh.all_subsets().filter(|w| w.len() >= 2).collect();
    let dominated = supports.par_iter().all(|&w| {
        let host = multigraded_betti_at(g, w, field).expect("support inside host");
        host.iter().enumerate().all(|(i, &b)| closed.get(i, w) <= b)
    });
    debug_assert_eq!(dominated, g.contains_edges_of(&h.graph(g.n())?));
    Ok(dominated)
}

/// For `G ⊇ K_m` on `s`, true iff `β_{i,α}(G) = β_{i,α}(K_m)` for every `i`
/// and every support inside `s`.
pub fn check_km_equality(g: &Graph, s: VertexSet, field: FieldSpec) -> Result<bool> {
    check_range(g, s)?;
    if !oracle_contains_km_at(g, s) {
        return Err(Error::Precondition(format!("{s} is not a clique")));
    }
    let closed = closed_form_complete_on(s, g.n());
    let supports: Vec<VertexSet> = s.all_subsets().filter(|w| w.len() >= 2).collect();
    let equal = supports.par_iter().all(|&w| {
        let host = multigraded_betti_at(g, w, field).expect("support inside host");
        host.iter().enumerate().all(|(i, &b)| closed.get(i, w) == b)
    });
    debug_assert!(equal);
    Ok(equal)
}
