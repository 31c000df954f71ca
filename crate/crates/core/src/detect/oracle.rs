//! Brute-force combinatorial oracles: clique checks and set-partition
//! enumeration. These never touch Betti numbers; the detectors are checked
//! against them.

use crate::error::{Error, Result};
use crate::graph::{Graph, PartitionSpec, VertexSet};

use super::Certificate;

/// True iff every pair of vertices in `s` is an edge of `g`.
pub fn oracle_contains_km_at(g: &Graph, s: VertexSet) -> bool {
    s.is_subset(g.vertices()) && g.is_clique(s)
}

/// Looks for a partition of `w` into blocks of the given sizes with every
/// cross-block pair an edge of `g`, i.e. a complete multipartite subgraph
/// spanning `w`. Zero sizes are ignored. Returns the lexicographically
/// first witness, comparing partitions as lists of sorted blocks ordered by
/// their smallest vertex.
pub fn oracle_contains_multipartite_at(
    g: &Graph,
    w: VertexSet,
    sizes: &[usize],
) -> Result<Option<PartitionSpec>> {
    find_partition(g, w, sizes, |_| true)
}

/// [`oracle_contains_multipartite_at`] restricted to partitions accepted by
/// `accept`.
pub fn find_partition<F>(
    g: &Graph,
    w: VertexSet,
    sizes: &[usize],
    accept: F,
) -> Result<Option<PartitionSpec>>
where
    F: Fn(&[VertexSet]) -> bool,
{
    if !w.is_subset(g.vertices()) {
        return Err(Error::VertexOutOfRange {
            vertex: w.difference(g.vertices()).first().unwrap_or(0),
            n: g.n(),
        });
    }
    let mut sizes: Vec<usize> = sizes.iter().copied().filter(|&s| s > 0).collect();
    let sum: usize = sizes.iter().sum();
    if sum != w.len() {
        return Err(Error::SizeMismatch { sum, len: w.len() });
    }
    sizes.sort_unstable();
    let mut blocks = Vec::new();
    Ok(search(g, w, &mut sizes, &mut blocks, &accept)
        .then(|| PartitionSpec::new(blocks).expect("blocks are disjoint and non-empty")))
}

fn search<F>(
    g: &Graph,
    remaining: VertexSet,
    sizes: &mut Vec<usize>,
    blocks: &mut Vec<VertexSet>,
    accept: &F,
) -> bool
where
    F: Fn(&[VertexSet]) -> bool,
{
    let Some(first) = remaining.first() else {
        return accept(blocks);
    };
    let rest = remaining.without(first);
    let mut candidates: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut distinct = sizes.clone();
    distinct.dedup();
    for (slot, &size) in distinct.iter().enumerate() {
        for others in rest.subsets_of_size(size - 1) {
            let block = others.with(first);
            let outside = remaining.difference(block);
            // everything left over must be joined to the whole block
            if block.iter().all(|v| outside.is_subset(g.neighbors(v))) {
                candidates.push((block.to_vec(), slot));
            }
        }
    }
    candidates.sort();
    for (block, slot) in candidates {
        let size = distinct[slot];
        let pos = sizes.iter().position(|&s| s == size).unwrap();
        sizes.remove(pos);
        let block = VertexSet::of(block);
        blocks.push(block);
        if search(g, remaining.difference(block), sizes, blocks, accept) {
            return true;
        }
        blocks.pop();
        sizes.insert(pos, size);
    }
    false
}

/// Which `K_{2,…,2,a,b}` shapes count as certificates.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum RestParts {
    /// `a` or `b` may be zero; empty parts are dropped.
    #[default]
    AllowEmpty,
    /// With at least one pair, both `a ≥ 1` and `b ≥ 1`.
    NonEmpty,
}

/// Searches for a complete multipartite subgraph on `X ∪ Y` that is either
/// `K_{r,s}` with sides `X` and `Y`, or `K_{2,…,2,a,b}` whose `t ≥ 1`
/// two-element parts each pair a vertex of `X` with a vertex of `Y`, and
/// whose remaining parts are the leftover `a = r − t` vertices of `X` and
/// `b = s − t` vertices of `Y`. Shapes are tried by ascending `t`.
pub fn oracle_krs_certificate(
    g: &Graph,
    x: VertexSet,
    y: VertexSet,
    rest: RestParts,
) -> Result<Option<Certificate>> {
    if !x.is_disjoint(y) {
        return Err(Error::OverlappingSides);
    }
    let (r, s) = (x.len(), y.len());
    let w = x.union(y);
    for t in 0..=r.min(s) {
        if t > 0 && rest == RestParts::NonEmpty && (t == r || t == s) {
            continue;
        }
        let mut sizes = vec![2; t];
        sizes.extend([r - t, s - t]);
        let accept = |blocks: &[VertexSet]| placement(blocks, x, y) == Some(t);
        if let Some(p) = find_partition(g, w, &sizes, accept)? {
            return Ok(Some(Certificate::from_placed_parts(p.parts(), x, y)));
        }
    }
    Ok(None)
}

// Number of X–Y pairs when every block is a crossing pair, the X
// leftovers, or the Y leftovers.
fn placement(blocks: &[VertexSet], x: VertexSet, y: VertexSet) -> Option<usize> {
    let (mut pairs, mut x_blocks, mut y_blocks) = (0, 0, 0);
    for &b in blocks {
        if b.is_subset(x) {
            x_blocks += 1;
        } else if b.is_subset(y) {
            y_blocks += 1;
        } else if b.len() == 2 {
            pairs += 1;
        } else {
            return None;
        }
    }
    (x_blocks <= 1 && y_blocks <= 1).then_some(pairs)
}
