//! Multigraded Betti numbers of edge ideals via Hochster's formula.
//!
//! For a squarefree multidegree `α` with support `W`,
//!
//! ```text
//! β_{i,α}(I(G)) = dim H̃_{|W|-i-2}(Δ(G)|_W)
//! ```
//!
//! where `Δ(G)|_W` is the independence complex of `G` restricted to `W`.
//! Non-squarefree degrees never carry Betti numbers, so a table is a sparse
//! map from `(i, W)` to a positive count.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, MultiDegree, PartitionSpec, VertexSet};
use crate::homology::{FieldSpec, RestrictedComplex};

/// Largest vertex count for which [`betti_table`] sweeps all supports.
pub const DEFAULT_TABLE_CAP: usize = 16;

/// Nonzero multigraded Betti numbers `β_{i,α}` of an edge ideal in
/// `k[x_1, …, x_n]`. Absent entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, MultiDegree), usize>,
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        BettiTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// Ambient number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, alpha: MultiDegree) -> usize {
        self.entries.get(&(i, alpha)).copied().unwrap_or(0)
    }

    /// Sets `β_{i,α}`; a zero value removes the entry.
    pub fn set(&mut self, i: usize, alpha: MultiDegree, value: usize) {
        if value == 0 {
            self.entries.remove(&(i, alpha));
        } else {
            self.entries.insert((i, alpha), value);
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries `(i, α, β_{i,α})` sorted by `(i, α)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, MultiDegree, usize)> + '_ {
        self.entries.iter().map(|(&(i, a), &v)| (i, a, v))
    }

    /// Entries whose support lies inside `w`.
    pub fn restricted_to(&self, w: VertexSet) -> BettiTable {
        BettiTable {
            n: self.n,
            entries: self
                .entries
                .iter()
                .filter(|((_, a), _)| a.is_subset(w))
                .map(|(&k, &v)| (k, v))
                .collect(),
        }
    }

    /// Re-indexes a table computed on relabeled vertices into an ambient
    /// ring with `n` variables; `labels[v - 1]` is the ambient label of `v`.
    pub fn embedded(&self, labels: &[usize], n: usize) -> BettiTable {
        BettiTable {
            n,
            entries: self
                .entries
                .iter()
                .map(|(&(i, a), &v)| ((i, a.iter().map(|x| labels[x - 1]).collect()), v))
                .collect(),
        }
    }

    /// Total-degree aggregation `β_{i,j} = Σ_{|α| = j} β_{i,α}`.
    pub fn graded(&self) -> GradedRow {
        let mut entries = BTreeMap::new();
        for (i, a, v) in self.iter() {
            *entries.entry((i, a.len())).or_insert(0) += v;
        }
        GradedRow { entries }
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }
}

/// Graded Betti numbers `β_{i,j}`, keyed by homological index `i` and total
/// degree `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedRow {
    entries: BTreeMap<(usize, usize), usize>,
}

impl GradedRow {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.iter()
            .filter(|&(k, _, _)| k == i)
            .map(|(_, _, v)| v)
            .sum()
    }
}

pub fn graded_from_multigraded(table: &BettiTable) -> GradedRow {
    table.graded()
}

/// `β_{i,W}(G)` for `i = 0..=|W|−2`. Supports with fewer than two vertices
/// carry no Betti numbers and give an empty list.
pub fn multigraded_betti_at(g: &Graph, w: VertexSet, field: FieldSpec) -> Result<Vec<usize>> {
    if !w.is_subset(g.vertices()) {
        return Err(Error::VertexOutOfRange {
            vertex: w.difference(g.vertices()).first().unwrap_or(0),
            n: g.n(),
        });
    }
    let size = w.len();
    if size < 2 {
        return Ok(Vec::new());
    }
    // a full simplex is acyclic
    if g.is_independent(w) {
        return Ok(vec![0; size - 1]);
    }
    let homology = RestrictedComplex::new(g, w)?.reduced_homology(field);
    Ok((0..=size - 2)
        .map(|i| homology.get(size - i - 2).copied().unwrap_or(0))
        .collect())
}

/// The full multigraded table, refusing graphs above [`DEFAULT_TABLE_CAP`].
pub fn betti_table(g: &Graph, field: FieldSpec) -> Result<BettiTable> {
    betti_table_capped(g, field, DEFAULT_TABLE_CAP)
}

/// The full multigraded table, sweeping every support of size at least 2.
pub fn betti_table_capped(g: &Graph, field: FieldSpec, cap: usize) -> Result<BettiTable> {
    let n = g.n();
    if n > cap {
        return Err(Error::OverCap { n, cap });
    }
    let found: Vec<(usize, MultiDegree, usize)> = (0..1u64 << n)
        .into_par_iter()
        .map(|m| VertexSet::from_mask(m << 1))
        .filter(|w| w.len() >= 2 && !g.is_independent(*w))
        .flat_map_iter(|w| {
            let betti = multigraded_betti_at(g, w, field).expect("support inside vertex range");
            betti
                .into_iter()
                .enumerate()
                .filter(|&(_, v)| v > 0)
                .map(move |(i, v)| (i, w, v))
        })
        .collect();
    let mut table = BettiTable::new(n);
    for (i, w, v) in found {
        table.set(i, w, v);
    }
    Ok(table)
}

/// Closed form for `K_m`: `β_{i,α} = i + 1` exactly when `|α| = i + 2`.
pub fn closed_form_complete(m: usize) -> BettiTable {
    closed_form_complete_on(VertexSet::range(m), m)
}

/// The same closed form for a complete graph on an arbitrary label set
/// inside `k[x_1, …, x_n]`.
pub fn closed_form_complete_on(vertices: VertexSet, n: usize) -> BettiTable {
    let mut table = BettiTable::new(n);
    if vertices.len() < 2 {
        return table;
    }
    for alpha in vertices.all_subsets().filter(|a| a.len() >= 2) {
        let i = alpha.len() - 2;
        table.set(i, alpha, i + 1);
    }
    table
}

/// Closed form for a complete multipartite graph: `β_{i,α} = c_α − 1` when
/// `|α| = i + 2`, where `c_α` counts the parts meeting `α`. The ambient ring
/// has as many variables as the largest label.
pub fn closed_form_multipartite(spec: &PartitionSpec) -> BettiTable {
    let vertices = spec.vertices();
    let mut table = BettiTable::new(vertices.last().unwrap_or(0));
    if spec.parts().len() < 2 {
        return table;
    }
    for alpha in vertices.all_subsets().filter(|a| a.len() >= 2) {
        let c = spec.parts_meeting(alpha);
        if c >= 2 {
            table.set(alpha.len() - 2, alpha, c - 1);
        }
    }
    table
}

/// Number of connected components of the complement of `g` restricted to
/// `w`; this is the component count of the 1-skeleton of `Δ(G)|_W`.
pub fn complement_components(g: &Graph, w: VertexSet) -> usize {
    let mut left = w;
    let mut count = 0;
    while let Some(start) = left.first() {
        let mut reached = VertexSet::singleton(start);
        let mut frontier = reached;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(w.difference(g.neighbors(v)).without(v));
            }
            frontier = next.difference(reached);
            reached = reached.union(frontier);
        }
        left = left.difference(reached);
        count += 1;
    }
    count
}

/// `β_{1,T}(G)` for a 3-element support, read off as the number of
/// components of the complement on `T`, minus one. Independent of the field.
pub fn first_syzygy_triple(g: &Graph, t: VertexSet) -> Result<usize> {
    if t.len() != 3 {
        return Err(Error::WrongSize {
            expected: 3,
            got: t.len(),
        });
    }
    if !t.is_subset(g.vertices()) {
        return Err(Error::VertexOutOfRange {
            vertex: t.difference(g.vertices()).first().unwrap_or(0),
            n: g.n(),
        });
    }
    Ok(complement_components(g, t) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p6() -> Graph {
        Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 6)]).unwrap()
    }

    #[test]
    fn path_square_support() {
        let b = multigraded_betti_at(&p6(), VertexSet::of([1, 4, 5, 6]), FieldSpec::GF2).unwrap();
        assert_eq!(b, vec![0, 1, 0]);
    }

    #[test]
    fn complete_graph_four_support() {
        let k6 = Graph::complete(6).unwrap();
        for w in VertexSet::range(6).subsets_of_size(4) {
            assert_eq!(
                multigraded_betti_at(&k6, w, FieldSpec::RATIONALS).unwrap(),
                vec![0, 0, 3]
            );
        }
    }

    #[test]
    fn edge_support_is_a_generator() {
        let b = multigraded_betti_at(&p6(), VertexSet::of([3, 4]), FieldSpec::GF2).unwrap();
        assert_eq!(b, vec![1]);
        let b = multigraded_betti_at(&p6(), VertexSet::of([3, 5]), FieldSpec::GF2).unwrap();
        assert_eq!(b, vec![0]);
        assert!(
            multigraded_betti_at(&p6(), VertexSet::of([3]), FieldSpec::GF2)
                .unwrap()
                .is_empty()
        );
        assert!(multigraded_betti_at(&p6(), VertexSet::of([3, 9]), FieldSpec::GF2).is_err());
    }

    #[test]
    fn path_graded_table() {
        for field in [FieldSpec::GF2, FieldSpec::RATIONALS] {
            let row = betti_table(&p6(), field).unwrap().graded();
            let got: Vec<_> = row.iter().collect();
            assert_eq!(
                got,
                vec![(0, 2, 5), (1, 3, 4), (1, 4, 3), (2, 5, 4), (3, 6, 1)]
            );
        }
    }

    #[test]
    fn complete_graph_graded() {
        let row = betti_table(&Graph::complete(5).unwrap(), FieldSpec::GF2)
            .unwrap()
            .graded();
        assert_eq!(row.get(1, 3), 20);
        for (i, j, v) in row.iter() {
            assert_eq!(j, i + 2);
            let binom = [1, 5, 10, 10, 5, 1][j];
            assert_eq!(v, (i + 1) * binom);
        }
    }

    #[test]
    fn complete_bipartite_graded() {
        let g = Graph::complete_multipartite(&[3, 3]).unwrap();
        let row = betti_table(&g, FieldSpec::GF2).unwrap().graded();
        assert_eq!(row.get(1, 3), 18);
    }

    #[test]
    fn edgeless_table_is_empty() {
        let t = betti_table(&Graph::edgeless(5).unwrap(), FieldSpec::GF2).unwrap();
        assert!(t.is_empty());
        assert!(t.graded().is_empty());
    }

    #[test]
    fn table_cap() {
        let g = Graph::edgeless(17).unwrap();
        assert_eq!(
            betti_table(&g, FieldSpec::GF2),
            Err(Error::OverCap { n: 17, cap: 16 })
        );
        assert!(betti_table_capped(&g, FieldSpec::GF2, 17).is_ok());
    }

    #[test]
    fn complete_closed_form() {
        let t = closed_form_complete(6);
        assert_eq!(t.get(1, VertexSet::of([2, 4, 6])), 2);
        assert_eq!(t.get(0, VertexSet::of([2, 4, 6])), 0);
        let t = closed_form_complete(2);
        assert_eq!(
            t.iter().collect::<Vec<_>>(),
            vec![(0, VertexSet::of([1, 2]), 1)]
        );
        assert_eq!(closed_form_complete(5).get(3, VertexSet::range(5)), 4);
        assert!(closed_form_complete(1).is_empty());
    }

    #[test]
    fn multipartite_closed_form() {
        let spec = PartitionSpec::consecutive(&[2, 2, 2]).unwrap();
        let t = closed_form_multipartite(&spec);
        assert_eq!(t.get(1, VertexSet::of([1, 3, 5])), 2);
        assert_eq!(t.get(1, VertexSet::of([1, 2, 3])), 1);
        assert_eq!(t.get(0, VertexSet::of([1, 2])), 0);

        let k33 = closed_form_multipartite(&PartitionSpec::consecutive(&[3, 3]).unwrap());
        assert!(k33.iter().all(|(i, a, v)| v == 1 && a.len() == i + 2));
        assert_eq!(k33.get(2, VertexSet::of([1, 2, 4, 5])), 1);
        assert_eq!(k33.get(1, VertexSet::of([1, 2, 3])), 0);

        assert!(closed_form_multipartite(&PartitionSpec::consecutive(&[4]).unwrap()).is_empty());
    }

    #[test]
    fn triple_fast_path() {
        let k222 = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(
            first_syzygy_triple(&k222, VertexSet::of([1, 3, 5])).unwrap(),
            2
        );
        assert_eq!(
            first_syzygy_triple(&p6(), VertexSet::of([1, 2, 3])).unwrap(),
            1
        );
        assert_eq!(
            first_syzygy_triple(&p6(), VertexSet::of([1, 2, 4])).unwrap(),
            0
        );
        assert_eq!(
            first_syzygy_triple(&p6(), VertexSet::of([1, 3, 5])).unwrap(),
            0
        );
        assert_eq!(
            first_syzygy_triple(&p6(), VertexSet::of([1, 3])),
            Err(Error::WrongSize {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn embedding_relabels_supports() {
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        let sub = k33.induced(VertexSet::of([1, 2, 4])).unwrap();
        let t = betti_table(&sub.graph, FieldSpec::GF2)
            .unwrap()
            .embedded(sub.labels(), 6);
        assert_eq!(t.n(), 6);
        assert_eq!(t.get(1, VertexSet::of([1, 2, 4])), 1);
        assert_eq!(t.get(0, VertexSet::of([1, 4])), 1);
    }
}
