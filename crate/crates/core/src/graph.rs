//! Simple graphs on the labels `1..=n`, stored as one adjacency bit-mask per
//! vertex.
//!
//! Bit `v` of a mask stands for vertex `v`; bit 0 is never used, so a single
//! `u64` covers graphs with up to [`MAX_VERTICES`] vertices. The same mask type,
//! [`VertexSet`], doubles as a squarefree multidegree: the set `{1, 4, 5}` is
//! the exponent vector of the monomial `x1*x4*x5`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 63;

/// A set of vertex labels drawn from `1..=63`, packed into a machine word.
///
/// Ordering is by mask value, which is the order used for faces, table
/// entries and reports throughout the crate.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

/// A squarefree multidegree `α ∈ {0,1}^n`, identified with its support.
pub type MultiDegree = VertexSet;

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Wraps a raw mask. Bit 0 is cleared.
    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask & !1)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    /// The set `{1, …, n}`.
    pub fn range(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        if n == 0 {
            Self::EMPTY
        } else {
            VertexSet((u64::MAX >> (63 - n)) & !1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        VertexSet(1 << v)
    }

    /// Builds a set from labels, panicking on labels outside `1..=63`.
    pub fn of<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices.into_iter().fold(Self::EMPTY, |acc, v| acc.with(v))
    }

    /// Builds a set from labels, checking each against `1..=n`.
    pub fn try_of<I: IntoIterator<Item = usize>>(vertices: I, n: usize) -> Result<Self> {
        let mut set = Self::EMPTY;
        for v in vertices {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set = set.with(v);
        }
        Ok(set)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | Self::singleton(v).0)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        if v < 64 {
            VertexSet(self.0 & !(1 << v))
        } else {
            self
        }
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest label in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest label in the set.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Labels in ascending order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All `k`-element subsets, in lexicographic order of their sorted
    /// vertex lists.
    pub fn subsets_of_size(self, k: usize) -> Combinations {
        Combinations::new(self.to_vec(), k)
    }

    /// Every subset, including the empty set and `self`, in increasing
    /// order of the packed mask.
    pub fn all_subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(VertexSet(cur))
        })
    }

    /// Renders the squarefree monomial `x^α`, e.g. `x1*x4*x5`; the empty
    /// set renders as `1`.
    pub fn monomial(self) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.iter()
            .map(|v| format!("x{v}"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::of(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Vertices;

    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

/// Ascending iterator over the labels of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Lexicographic `k`-combinations of a sorted label list.
#[derive(Clone, Debug)]
pub struct Combinations {
    items: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(items: Vec<usize>, k: usize) -> Self {
        let done = k > items.len();
        Combinations {
            idx: (0..k).collect(),
            items,
            done,
        }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = VertexSet::of(self.idx.iter().map(|&i| self.items[i]));
        let n = self.items.len();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// An ordered list of disjoint, non-empty vertex blocks `X_1, …, X_l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionSpec {
    parts: Vec<VertexSet>,
}

impl PartitionSpec {
    pub fn new(parts: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for &p in &parts {
            if p.is_empty() {
                return Err(Error::EmptyPart);
            }
            if !p.is_disjoint(seen) {
                return Err(Error::OverlappingParts);
            }
            seen = seen.union(p);
        }
        Ok(PartitionSpec { parts })
    }

    /// Consecutive blocks `{1..r_1}, {r_1+1..r_1+r_2}, …`.
    pub fn consecutive(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::EmptySizes);
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: total,
                max: MAX_VERTICES,
            });
        }
        let mut next = 1;
        let mut parts = Vec::with_capacity(sizes.len());
        for &r in sizes {
            if r == 0 {
                return Err(Error::EmptyPart);
            }
            parts.push(VertexSet::of(next..next + r));
            next += r;
        }
        Ok(PartitionSpec { parts })
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.len()).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        self.parts
            .iter()
            .fold(VertexSet::EMPTY, |acc, &p| acc.union(p))
    }

    /// Number of blocks meeting `alpha`.
    pub fn parts_meeting(&self, alpha: VertexSet) -> usize {
        self.parts.iter().filter(|p| !p.is_disjoint(alpha)).count()
    }
}

/// A simple undirected graph on the vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    // adj[v] for v in 0..=n; adj[0] is always empty
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list; duplicate pairs collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop { vertex: u });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n + 1],
        })
    }

    /// The complete graph `K_m`.
    pub fn complete(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::NoVertices);
        }
        let mut g = Graph::edgeless(m)?;
        let all = VertexSet::range(m);
        for v in all {
            g.adj[v] = all.without(v).mask();
        }
        Ok(g)
    }

    /// The complete multipartite graph `K_{r_1,…,r_l}` on consecutive
    /// vertex blocks.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self> {
        let spec = PartitionSpec::consecutive(sizes)?;
        Graph::from_partition(&spec, spec.vertices().last().unwrap_or(0))
    }

    /// Joins every pair of vertices lying in different blocks of `spec`,
    /// on an ambient vertex set `1..=n`.
    pub fn from_partition(spec: &PartitionSpec, n: usize) -> Result<Self> {
        let mut g = Graph::edgeless(n)?;
        if let Some(v) = spec.vertices().last() {
            if v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        let all = spec.vertices();
        for &part in spec.parts() {
            let others = all.difference(part).mask();
            for v in part {
                g.adj[v] |= others;
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u <= self.n && v <= self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for v in VertexSet(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of edges with both ends in `w`.
    pub fn edges_within(&self, w: VertexSet) -> usize {
        w.iter()
            .map(|v| (self.adj[v] & w.mask()).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_independent(&self, w: VertexSet) -> bool {
        w.iter().all(|v| self.adj[v] & w.mask() == 0)
    }

    pub fn is_clique(&self, w: VertexSet) -> bool {
        w.iter()
            .all(|v| w.without(v).is_subset(VertexSet(self.adj[v])))
    }

    /// True when every edge of `other` is an edge of `self` (vertex counts
    /// may differ; `other`'s labels must fit inside `self`).
    pub fn contains_edges_of(&self, other: &Graph) -> bool {
        other.edges().into_iter().all(|(u, v)| self.has_edge(u, v))
    }

    /// Adjacency symmetry, looplessness and mask range.
    pub fn is_well_formed(&self) -> bool {
        let all = self.vertices().mask();
        self.adj.len() == self.n + 1
            && self.adj[0] == 0
            && (1..=self.n).all(|u| {
                let m = self.adj[u];
                m & !all == 0
                    && m >> u & 1 == 0
                    && VertexSet(m).iter().all(|v| self.adj[v] >> u & 1 == 1)
            })
    }

    #[must_use]
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n);
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        g
    }

    #[must_use]
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if u <= self.n && v <= self.n {
            g.adj[u] &= !(1 << v);
            g.adj[v] &= !(1 << u);
        }
        g
    }

    /// The subgraph induced on `w`, relabeled to `1..=|w|` in increasing
    /// label order.
    pub fn induced(&self, w: VertexSet) -> Result<Relabeled> {
        if !w.is_subset(self.vertices()) {
            let bad = w.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        Ok(compact(self.n, &self.adj, w))
    }

    /// The subgraph induced on `w` with the original labels kept, so that
    /// vertices outside `w` become isolated.
    pub fn restricted(&self, w: VertexSet) -> Graph {
        let mut g = self.clone();
        for v in 1..=self.n {
            g.adj[v] = if w.contains(v) {
                g.adj[v] & w.mask()
            } else {
                0
            };
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices().mask();
        let mut g = self.clone();
        for v in 1..=self.n {
            g.adj[v] = all & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// Replaces the edge `uv` by the path `u, n + 1, v`.
    pub fn subdivide(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: self.n + 1,
                max: MAX_VERTICES,
            });
        }
        let z = self.n + 1;
        let mut g = self.without_edge(u, v);
        g.n = z;
        g.adj.push((1 << u) | (1 << v));
        g.adj[u] |= 1 << z;
        g.adj[v] |= 1 << z;
        Ok(g)
    }

    /// Suppresses unprotected degree-2 vertices until none remain.
    ///
    /// Candidates are taken in ascending label order and the scan restarts
    /// after every deletion. A deleted vertex's two neighbors are joined,
    /// or left joined if they already were. Surviving vertices are
    /// compacted to `1..=n'`.
    pub fn smooth(&self, protected: VertexSet) -> Relabeled {
        let mut adj = self.adj.clone();
        let mut alive = self.vertices();
        while let Some(z) = alive
            .difference(protected)
            .iter()
            .find(|&z| adj[z].count_ones() == 2)
        {
            let nb = VertexSet(adj[z]);
            let x = nb.first().unwrap();
            let y = nb.last().unwrap();
            adj[x] = (adj[x] & !(1 << z)) | 1 << y;
            adj[y] = (adj[y] & !(1 << z)) | 1 << x;
            adj[z] = 0;
            alive = alive.without(z);
        }
        compact(self.n, &adj, alive)
    }
}

fn compact(n: usize, adj: &[u64], keep: VertexSet) -> Relabeled {
    let labels = keep.to_vec();
    let mut new_of = vec![0usize; n + 1];
    for (i, &old) in labels.iter().enumerate() {
        new_of[old] = i + 1;
    }
    let mut g = Graph {
        n: labels.len(),
        adj: vec![0; labels.len() + 1],
    };
    for (i, &old) in labels.iter().enumerate() {
        g.adj[i + 1] = VertexSet(adj[old] & keep.mask())
            .iter()
            .fold(0, |m, w| m | 1 << new_of[w]);
    }
    Relabeled { graph: g, labels }
}

/// A graph whose vertices were renumbered to `1..=n'`, together with the
/// original label of every new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub graph: Graph,
    // labels[new - 1] == old
    labels: Vec<usize>,
}

impl Relabeled {
    pub fn old_label(&self, new: usize) -> usize {
        self.labels[new - 1]
    }

    pub fn new_label(&self, old: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == old).map(|i| i + 1)
    }

    /// Original labels, indexed by `new - 1`.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn to_old(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.old_label(v)).collect()
    }

    pub fn to_new(&self, set: VertexSet) -> Option<VertexSet> {
        set.iter()
            .map(|v| self.new_label(v))
            .collect::<Option<Vec<_>>>()
            .map(VertexSet::of)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p6() -> Graph {
        Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 6)]).unwrap()
    }

    #[test]
    fn build_rejects_loops_and_range() {
        assert_eq!(Graph::new(3, [(2, 2)]), Err(Error::Loop { vertex: 2 }));
        assert_eq!(
            Graph::new(3, [(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert!(Graph::new(64, []).is_err());
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(4, [(1, 2), (2, 1), (3, 4)]).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (3, 4)]);
        assert_eq!(Graph::new(3, []).unwrap().edge_count(), 0);
        assert_eq!(p6().edge_count(), 5);
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(Graph::complete(5).unwrap().edge_count(), 10);
        assert_eq!(Graph::complete(1).unwrap().edge_count(), 0);
        assert_eq!(
            Graph::complete(3).unwrap().edges(),
            vec![(1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(Graph::complete(0), Err(Error::NoVertices));
    }

    #[test]
    fn multipartite_graphs() {
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert!(k33.edges().iter().all(|&(u, v)| u <= 3 && v >= 4));
        assert_eq!(
            Graph::complete_multipartite(&[2, 2, 2])
                .unwrap()
                .edge_count(),
            12
        );
        let one = Graph::complete_multipartite(&[4]).unwrap();
        assert_eq!((one.n(), one.edge_count()), (4, 0));
        assert_eq!(Graph::complete_multipartite(&[]), Err(Error::EmptySizes));
        assert_eq!(Graph::complete_multipartite(&[2, 0]), Err(Error::EmptyPart));
    }

    #[test]
    fn induced_subgraphs() {
        let r = p6().induced(VertexSet::of([1, 2, 3])).unwrap();
        assert_eq!(r.graph.edges(), vec![(1, 2), (2, 3)]);
        let g = p6();
        assert_eq!(g.induced(g.vertices()).unwrap().graph, g);
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        let side = k33.induced(VertexSet::of([4, 5, 6])).unwrap();
        assert_eq!(side.graph.edge_count(), 0);
        assert_eq!(side.labels(), &[4, 5, 6]);
        assert_eq!(side.new_label(5), Some(2));
        assert!(g.induced(VertexSet::of([7])).is_err());
    }

    #[test]
    fn complements() {
        assert_eq!(Graph::complete(5).unwrap().complement().edge_count(), 0);
        assert_eq!(
            Graph::edgeless(3).unwrap().complement(),
            Graph::complete(3).unwrap()
        );
        let c = p6().complement();
        assert_eq!(c.edge_count(), 10);
        assert_eq!(c.complement(), p6());
    }

    #[test]
    fn subdivisions() {
        let g = Graph::complete(3).unwrap().subdivide(2, 3).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 4), (3, 4)]);
        let k5 = Graph::complete(5).unwrap().subdivide(1, 2).unwrap();
        assert_eq!((k5.n(), k5.edge_count()), (6, 11));
        let e = Graph::new(2, [(1, 2)]).unwrap().subdivide(1, 2).unwrap();
        assert_eq!(e.edges(), vec![(1, 3), (2, 3)]);
        assert_eq!(p6().subdivide(1, 3), Err(Error::NotAnEdge { u: 1, v: 3 }));
    }

    #[test]
    fn smoothing() {
        let k5 = Graph::complete(5).unwrap();
        let s = k5.subdivide(1, 2).unwrap().smooth(VertexSet::EMPTY);
        assert_eq!(s.graph, k5);

        // 2 and 4 both sit between 1 and 3; once one is gone the rest is a
        // triangle, whose vertices all have degree 2 in turn.
        let g = Graph::new(4, [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4)]).unwrap();
        let s = g.smooth(VertexSet::EMPTY);
        assert_eq!(s.graph.edges(), vec![(1, 2)]);
        assert_eq!(s.labels(), &[3, 4]);
        assert!(s.graph.vertices().iter().all(|v| s.graph.degree(v) != 2));

        let s = g.smooth(VertexSet::of([1, 3]));
        assert_eq!(s.graph.edges(), vec![(1, 2)]);
        assert_eq!(s.labels(), &[1, 3]);

        let s = p6().smooth(p6().vertices());
        assert_eq!(s.graph, p6());
    }

    #[test]
    fn cycle_smooths_to_an_edge() {
        let c8 = Graph::new(8, (1..=8).map(|i| (i, i % 8 + 1))).unwrap();
        let s = c8.smooth(VertexSet::EMPTY);
        assert_eq!(s.graph.n(), 2);
        assert_eq!(s.graph.edge_count(), 1);
    }

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::of([1, 4, 5, 6]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.monomial(), "x1*x4*x5*x6");
        assert_eq!(VertexSet::EMPTY.monomial(), "1");
        assert_eq!(s.to_string(), "{1,4,5,6}");
        assert_eq!(VertexSet::range(63).len(), 63);
        assert_eq!(s.subsets_of_size(2).count(), 6);
        let triples: Vec<_> = VertexSet::range(4).subsets_of_size(3).collect();
        assert_eq!(
            triples,
            vec![
                VertexSet::of([1, 2, 3]),
                VertexSet::of([1, 2, 4]),
                VertexSet::of([1, 3, 4]),
                VertexSet::of([2, 3, 4])
            ]
        );
        assert_eq!(s.all_subsets().count(), 16);
        assert_eq!(VertexSet::range(3).subsets_of_size(4).count(), 0);
        assert_eq!(VertexSet::range(3).subsets_of_size(0).count(), 1);
    }
}
