//! Graph families for exhaustive and randomized checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{Edge, Graph, Matching, VertexId};

/// Every labelled graph on `x1..xn` with at most `max_loops` loops. Edge
/// subsets vary fastest.
pub fn all_graphs(n: usize, max_loops: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let loop_masks: Vec<u64> = (0u64..(1u64 << n))
        .filter(|m| m.count_ones() as usize <= max_loops)
        .collect();
    let edge_subsets = 1u64 << pairs.len();
    loop_masks.into_iter().flat_map(move |loops| {
        let pairs = pairs.clone();
        (0..edge_subsets).map(move |mask| {
            let mut g = Graph::with_vertices(n).expect("small graph");
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    g.add_edge(VertexId(i), VertexId(j)).expect("valid");
                }
            }
            for v in 0..n {
                if loops & (1 << v) != 0 {
                    g.add_loop(VertexId(v)).expect("valid");
                }
            }
            g
        })
    })
}

/// A bipartite graph on `x1, y1, ..., xd, yd` with the whiskers `x_i y_i`
/// and `x_i y_j` whenever `i < j` and `(i, j)` lies in the transitive closure
/// of `relation` (0-based indices).
///
/// These are exactly the bipartite graphs satisfying the Herzog–Hibi
/// ordering condition, hence Cohen–Macaulay. The returned matching is
/// `{x_i, y_i}` in index order.
pub fn herzog_hibi_graph(d: usize, relation: &[(usize, usize)]) -> Result<(Graph, Matching)> {
    let mut reach = vec![vec![false; d]; d];
    for &(i, j) in relation {
        if i < j && j < d {
            reach[i][j] = true;
        }
    }
    // transitive closure over an upper-triangular relation
    for k in 0..d {
        for i in 0..k {
            if reach[i][k] {
                let (upper, lower) = reach.split_at_mut(k);
                for (target, &via) in upper[i].iter_mut().zip(&lower[0]).skip(k + 1) {
                    *target |= via;
                }
            }
        }
    }
    let mut g = Graph::new();
    let mut xs = Vec::with_capacity(d);
    let mut ys = Vec::with_capacity(d);
    for i in 1..=d {
        xs.push(g.add_vertex(&format!("x{i}"))?);
        ys.push(g.add_vertex(&format!("y{i}"))?);
    }
    for i in 0..d {
        g.add_edge(xs[i], ys[i])?;
        for j in i + 1..d {
            if reach[i][j] {
                g.add_edge(xs[i], ys[j])?;
            }
        }
    }
    let edges = (0..d).map(|i| Edge(xs[i], ys[i])).collect();
    let m = Matching::new(&g, edges)?;
    Ok((g, m))
}

/// Whether the matching `{x_i, y_i}` witnesses the Herzog–Hibi conditions:
/// `x_i y_j ∈ E` only for `i <= j`, and `x_i y_j, x_j y_k ∈ E` with
/// `i < j < k` force `x_i y_k ∈ E`.
pub fn satisfies_herzog_hibi(g: &Graph, m: &Matching) -> bool {
    let e = m.edges();
    let d = e.len();
    let adj = |i: usize, j: usize| g.has_edge(e[i].0, e[j].1);
    let xs: Vec<VertexId> = e.iter().map(|e| e.0).collect();
    let ys: Vec<VertexId> = e.iter().map(|e| e.1).collect();
    let bipartite = (0..d).all(|i| (0..d).all(|j| !g.has_edge(xs[i], xs[j]) && !g.has_edge(ys[i], ys[j])));
    bipartite
        && g.is_perfect_matching(m)
        && (0..d).all(|i| (0..i).all(|j| !adj(i, j)))
        && (0..d).all(|i| {
            (i + 1..d).all(|j| (j + 1..d).all(|k| !(adj(i, j) && adj(j, k)) || adj(i, k)))
        })
}

/// `count` Herzog–Hibi graphs with `1..=max_d` matching edges from a seeded
/// generator; the same seed always yields the same family.
pub fn random_herzog_hibi_family(count: usize, max_d: usize, seed: u64) -> Vec<(Graph, Matching)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_d);
            let density: f64 = rng.gen_range(0.1..0.7);
            let relation: Vec<(usize, usize)> = (0..d)
                .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
                .filter(|_| rng.gen_bool(density))
                .collect();
            herzog_hibi_graph(d, &relation).expect("at most 2 * max_d vertices")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        assert_eq!(all_graphs(3, 0).count(), 8);
        assert_eq!(all_graphs(3, 3).count(), 64);
        assert_eq!(all_graphs(4, 2).count(), 64 * 11);
        assert_eq!(all_graphs(0, 0).count(), 1);
    }

    #[test]
    fn herzog_hibi_closure() {
        let (g, m) = herzog_hibi_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(satisfies_herzog_hibi(&g, &m));
        assert!(g.has_edge(g.vertex("x1").unwrap(), g.vertex("y3").unwrap()));
    }

    #[test]
    fn condition_rejects_missing_transitive_edge() {
        let g = crate::graph::parse_edge_list("x1 y1\nx2 y2\nx3 y3\nx1 y2\nx2 y3").unwrap();
        let m = Matching::from_names(&g, &[("x1", "y1"), ("x2", "y2"), ("x3", "y3")]).unwrap();
        assert!(!satisfies_herzog_hibi(&g, &m));
    }

    #[test]
    fn families_are_reproducible() {
        let a = random_herzog_hibi_family(10, 6, 7);
        let b = random_herzog_hibi_family(10, 6, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|(g, m)| satisfies_herzog_hibi(g, m) && g.order() <= 12));
    }
}
