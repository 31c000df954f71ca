//! Six-vertex `K_{3,3}` / `K_{2,2,2}` scans and the smoothing-based
//! Kuratowski demonstrator.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Relabeled, VertexSet};

use super::{detect_km_syzygy, detect_krs_syzygy, Certificate};

/// Largest vertex count accepted by [`kuratowski_desk_scan`] by default.
pub const DEFAULT_SCAN_CAP: usize = 24;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum WitnessKind {
    K5,
    K33,
    K222,
}

/// A vertex set on which a detector fired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanWitness {
    pub vertices: VertexSet,
    pub kind: WitnessKind,
    pub certificate: Certificate,
}

fn kind_of(c: &Certificate) -> WitnessKind {
    // K_{3,3}, or K_{2,2,1,1} which contains one; otherwise K_{2,2,2}
    if c.shape() == [2, 2, 2] {
        WitnessKind::K222
    } else {
        WitnessKind::K33
    }
}

/// For every 6-subset `W` and each of its ten balanced bipartitions, runs
/// the `K_{3,3}` first-syzygy detector. Each `W` is reported once, as
/// `K33` if any bipartition certifies a `K_{3,3}`, else as `K222`.
pub fn k33_k222_scan(g: &Graph) -> Vec<ScanWitness> {
    if g.n() < 6 {
        return Vec::new();
    }
    let sixes: Vec<VertexSet> = g.vertices().subsets_of_size(6).collect();
    sixes.par_iter().filter_map(|&w| scan_six(g, w)).collect()
}

fn scan_six(g: &Graph, w: VertexSet) -> Option<ScanWitness> {
    let first = w.first()?;
    let mut best: Option<(u8, Certificate)> = None;
    for others in w.without(first).subsets_of_size(2) {
        let x = others.with(first);
        let y = w.difference(x);
        let result = detect_krs_syzygy(g, x, y).expect("sides are disjoint and in range");
        let Some(cert) = result.certificate else {
            continue;
        };
        let rank = match (&cert, kind_of(&cert)) {
            (Certificate::Bipartite { .. }, _) => 0,
            (_, WitnessKind::K33) => 1,
            _ => 2,
        };
        if best.as_ref().is_none_or(|(r, _)| rank < *r) {
            best = Some((rank, cert));
        }
        if rank == 0 {
            break;
        }
    }
    best.map(|(_, certificate)| ScanWitness {
        vertices: w,
        kind: kind_of(&certificate),
        certificate,
    })
}

/// Witnesses found after smoothing, in the caller's original labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiReport {
    pub smoothed: Relabeled,
    pub k5: Vec<VertexSet>,
    pub k33: Vec<VertexSet>,
    /// Octahedral six-sets; planar, so not Kuratowski witnesses.
    pub k222: Vec<VertexSet>,
}

impl KuratowskiReport {
    pub fn found(&self) -> bool {
        !self.k5.is_empty() || !self.k33.is_empty()
    }
}

/// Smooths away every degree-2 vertex, then looks for `K_5` on 5-subsets
/// and `K_{3,3}` on 6-subsets of what remains.
///
/// This is not a planarity test: it only finds `K_5`/`K_{3,3}` subgraphs of
/// the smoothed graph, which misses subdivisions whose branch paths run
/// through vertices of degree three or more.
pub fn kuratowski_desk_scan(g: &Graph, cap: usize) -> Result<KuratowskiReport> {
    if g.n() > cap {
        return Err(Error::OverCap { n: g.n(), cap });
    }
    let smoothed = g.smooth(VertexSet::EMPTY);
    let h = &smoothed.graph;
    let fives: Vec<VertexSet> = h.vertices().subsets_of_size(5).collect();
    let k5 = fives
        .par_iter()
        .filter(|&&s| detect_km_syzygy(h, s).expect("5-subset").verdict)
        .map(|&s| smoothed.to_old(s))
        .collect();
    let (mut k33, mut k222) = (Vec::new(), Vec::new());
    for w in k33_k222_scan(h) {
        let old = smoothed.to_old(w.vertices);
        match w.kind {
            WitnessKind::K222 => k222.push(old),
            _ => k33.push(old),
        }
    }
    Ok(KuratowskiReport {
        smoothed,
        k5,
        k33,
        k222,
    })
}
