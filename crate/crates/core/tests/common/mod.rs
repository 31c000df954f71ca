#![allow(dead_code)]

use edge_betti::{Graph, VertexSet};
use rand::Rng;

pub fn p6() -> Graph {
    Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 6)]).unwrap()
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// The labeled graph on `n` vertices whose edges are selected by the bits
/// of `code`, pairs taken in lexicographic order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).unwrap()
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> VertexSet {
    (1..=n).filter(|_| rng.gen_bool(0.5)).collect()
}

/// Every set partition of `items`, as block-index assignments.
pub fn all_set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn go(items: &[usize], i: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == items.len() {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(items[i]);
            go(items, i + 1, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![items[i]]);
        go(items, i + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(items, 0, &mut Vec::new(), &mut out);
    out
}

pub fn is_complete_multipartite_in(g: &Graph, blocks: &[Vec<usize>]) -> bool {
    blocks.iter().enumerate().all(|(i, a)| {
        blocks[i + 1..]
            .iter()
            .all(|b| a.iter().all(|&u| b.iter().all(|&v| g.has_edge(u, v))))
    })
}

/// Naive search over all set partitions of `X ∪ Y` for `K_{r,s}` on the
/// given sides or `K_{2,…,2,a,b}` built from `t ≥ 1` X–Y pairs plus the
/// leftovers of each side. `min_rest` bounds `a` and `b` from below when
/// `t ≥ 1`.
pub fn naive_placed_certificate(g: &Graph, x: VertexSet, y: VertexSet, min_rest: usize) -> bool {
    let items: Vec<usize> = x.union(y).iter().collect();
    all_set_partitions(&items).into_iter().any(|blocks| {
        let mut pairs = 0;
        let (mut xb, mut yb) = (Vec::new(), Vec::new());
        for b in &blocks {
            let in_x = b.iter().filter(|&&v| x.contains(v)).count();
            if in_x == b.len() {
                xb.push(b.len());
            } else if in_x == 0 {
                yb.push(b.len());
            } else if b.len() == 2 {
                pairs += 1;
            } else {
                return false;
            }
        }
        if xb.len() > 1 || yb.len() > 1 {
            return false;
        }
        let a = xb.first().copied().unwrap_or(0);
        let bb = yb.first().copied().unwrap_or(0);
        let shape_ok = pairs == 0 || (a >= min_rest && bb >= min_rest);
        shape_ok && is_complete_multipartite_in(g, &blocks)
    })
}

/// Naive search for any complete multipartite subgraph spanning `X ∪ Y`
/// with part sizes `{r, s}` or `{2×t, a, b}`, `a + b + 2t = r + s`, with no
/// regard for where the parts sit relative to `X` and `Y`.
pub fn naive_unplaced_certificate(g: &Graph, x: VertexSet, y: VertexSet) -> bool {
    let (r, s) = (x.len(), y.len());
    let items: Vec<usize> = x.union(y).iter().collect();
    all_set_partitions(&items).into_iter().any(|blocks| {
        let mut sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        let mut rs = vec![r, s];
        rs.sort_unstable();
        let bipartite = sizes == rs;
        let twos = sizes.iter().filter(|&&z| z == 2).count();
        let paired = (1..=twos).any(|t| {
            let rest: Vec<usize> = {
                let mut v = sizes.clone();
                for _ in 0..t {
                    let p = v.iter().position(|&z| z == 2).unwrap();
                    v.remove(p);
                }
                v
            };
            rest.len() <= 2
        });
        (bipartite || paired) && is_complete_multipartite_in(g, &blocks)
    })
}
