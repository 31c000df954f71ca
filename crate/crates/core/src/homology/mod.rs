//! Independence complexes restricted to a vertex subset, and their reduced
//! homology over a field.

mod matrix;

pub use matrix::{matrix_rank, FieldMatrix, FieldSpec, IntMatrix};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The independence complex of a graph restricted to a ground set `W`:
/// every independent subset of `W`, grouped by dimension.
///
/// Faces of each dimension are sorted by mask value. The empty face is the
/// single face of dimension −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedComplex {
    ground: VertexSet,
    // by_size[s] holds the faces with s vertices (dimension s - 1)
    by_size: Vec<Vec<VertexSet>>,
}

impl RestrictedComplex {
    /// Enumerates the independent subsets of `w` in `g`.
    pub fn new(g: &Graph, w: VertexSet) -> Result<Self> {
        if !w.is_subset(g.vertices()) {
            return Err(Error::VertexOutOfRange {
                vertex: w.difference(g.vertices()).first().unwrap_or(0),
                n: g.n(),
            });
        }
        let mut by_size = vec![Vec::new(); w.len() + 1];
        extend(g, VertexSet::EMPTY, w, &mut by_size);
        while by_size.len() > 1 && by_size.last().is_some_and(Vec::is_empty) {
            by_size.pop();
        }
        for faces in &mut by_size {
            faces.sort_unstable();
        }
        Ok(RestrictedComplex { ground: w, by_size })
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    /// Dimension of the largest face; −1 when only the empty face exists.
    pub fn dim(&self) -> isize {
        self.by_size.len() as isize - 2
    }

    /// Faces of dimension `k` (`k ≥ −1`).
    pub fn faces(&self, k: isize) -> &[VertexSet] {
        usize::try_from(k + 1)
            .ok()
            .and_then(|s| self.by_size.get(s))
            .map_or(&[], Vec::as_slice)
    }

    /// Face counts `f_{-1}, f_0, f_1, …`.
    pub fn face_counts(&self) -> Vec<usize> {
        self.by_size.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.by_size
            .get(face.len())
            .is_some_and(|faces| faces.binary_search(&face).is_ok())
    }

    /// True when the whole ground set is a face, so the complex is a full
    /// simplex (acyclic unless the ground set is empty).
    pub fn is_simplex(&self) -> bool {
        self.contains(self.ground)
    }

    /// The boundary map `∂_k` from `k`-faces to `(k−1)`-faces, one row per
    /// `k`-face. `∂_0` sends every vertex to the empty face.
    ///
    /// Removing the `j`-th smallest vertex of a face contributes `(−1)^j`.
    pub fn boundary(&self, k: usize) -> IntMatrix {
        let rows = self.faces(k as isize);
        let cols = self.faces(k as isize - 1);
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (r, &face) in rows.iter().enumerate() {
            for (j, v) in face.iter().enumerate() {
                let c = cols
                    .binary_search(&face.without(v))
                    .expect("complex is closed under subsets");
                m.set(r, c, if j % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    }

    /// `dim H̃_k` for `k = 0..=dim`, computed as
    /// `f_k − rank ∂_k − rank ∂_{k+1}`.
    pub fn reduced_homology(&self, field: FieldSpec) -> Vec<usize> {
        let Ok(top) = usize::try_from(self.dim()) else {
            return Vec::new();
        };
        let ranks: Vec<usize> = (0..=top + 1)
            .map(|k| FieldMatrix::from_int(field, &self.boundary(k)).rank())
            .collect();
        (0..=top)
            .map(|k| self.faces(k as isize).len() - ranks[k] - ranks[k + 1])
            .collect()
    }

    /// `Σ_{k ≥ −1} (−1)^k f_k`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .map(|(s, &f)| if s % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

fn extend(g: &Graph, face: VertexSet, candidates: VertexSet, out: &mut [Vec<VertexSet>]) {
    out[face.len()].push(face);
    for v in candidates {
        let rest = VertexSet::from_mask(
            candidates.mask() & u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0),
        )
        .difference(g.neighbors(v));
        extend(g, face.with(v), rest, out);
    }
}

/// The independence complex of `g` restricted to `w`.
pub fn restricted_independence_complex(g: &Graph, w: VertexSet) -> Result<RestrictedComplex> {
    RestrictedComplex::new(g, w)
}

/// Reduced homology dimensions of `c` over `field`, indexed by `k = 0..=dim`.
pub fn reduced_homology_dims(c: &RestrictedComplex, field: FieldSpec) -> Vec<usize> {
    c.reduced_homology(field)
}
