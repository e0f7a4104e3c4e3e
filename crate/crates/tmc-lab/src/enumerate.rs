//! Enumeration of small graphs, one canonical representative per
//! isomorphism class. The canonical form is the minimum upper-triangle
//! bit string over all vertex permutations, so the budget is factorial
//! and the order is capped at 7.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ENUMERATE_MAX_N: usize = 7;

fn pair_index(u: usize, v: usize) -> usize {
    // (u, v) with u < v, lexicographic
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

fn edge_mask(g: &Graph) -> u32 {
    let mut mask = 0u32;
    for (u, v) in g.edges() {
        mask |= 1 << pair_index(u, v);
    }
    mask
}

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for v in 1..n {
        for u in 0..v {
            if mask >> pair_index(u, v) & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(&mut cur, n, &mut out);
    out
}

fn heap(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap(cur, k - 1, out);
        if k % 2 == 0 {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

/// For each permutation, where every pair index maps to.
fn pair_maps(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
        .iter()
        .map(|p| {
            let mut map = vec![0usize; n * (n - 1) / 2];
            for v in 1..n {
                for u in 0..v {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    map[pair_index(u, v)] = pair_index(a, b);
                }
            }
            map
        })
        .collect()
}

fn canonical_mask(mask: u32, npairs: usize, maps: &[Vec<usize>]) -> u32 {
    let mut best = u32::MAX;
    for map in maps {
        let mut out = 0u32;
        for i in 0..npairs {
            if mask >> i & 1 == 1 {
                out |= 1 << map[i];
            }
        }
        if out < best {
            best = out;
        }
    }
    best
}

/// All graphs of order exactly `n` (connected or not), one canonical
/// representative per isomorphism class, built by vertex extension from
/// smaller orders.
fn all_canonical(n: usize) -> Vec<u32> {
    if n == 1 {
        return vec![0];
    }
    let prev = all_canonical(n - 1);
    let maps = pair_maps(n);
    let npairs = n * (n - 1) / 2;
    // pair indices incident to the new vertex n-1
    let base = (n - 1) * (n - 2) / 2;
    let mut seen = HashSet::new();
    for g in prev {
        for attach in 0u32..(1 << (n - 1)) {
            let mask = g | (attach << base);
            seen.insert(canonical_mask(mask, npairs, &maps));
        }
    }
    let mut out: Vec<u32> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// One canonical representative per isomorphism class of connected graphs
/// of order `n`, sorted by (size, canonical bit string).
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATE_MAX_N {
        return Err(Error::Unsupported(format!(
            "enumeration limited to 1 <= n <= {ENUMERATE_MAX_N}, got {n}"
        )));
    }
    let mut graphs: Vec<Graph> = all_canonical(n)
        .into_iter()
        .map(|mask| graph_from_mask(n, mask))
        .filter(Graph::is_connected)
        .collect();
    graphs.sort_by_key(|g| (g.m(), edge_mask(g)));
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    // Independent oracle: walk all 2^(n(n-1)/2) labeled graphs and count
    // connected isomorphism classes by keeping lexicographically minimal
    // representatives.
    fn naive_connected_count(n: usize) -> usize {
        let npairs = n * (n - 1) / 2;
        let maps = pair_maps(n);
        let mut reps = HashSet::new();
        for mask in 0u32..(1 << npairs) {
            let canon = canonical_mask(mask, npairs, &maps);
            if canon == mask && graph_from_mask(n, mask).is_connected() {
                reps.insert(mask);
            }
        }
        reps.len()
    }

    #[test]
    fn counts_match_naive_oracle() {
        for (n, expected) in [(2, 1), (3, 2), (4, 6), (5, 21)] {
            assert_eq!(naive_connected_count(n), expected);
            assert_eq!(enumerate_connected_graphs(n).unwrap().len(), expected);
        }
    }

    #[test]
    fn count_n6() {
        assert_eq!(enumerate_connected_graphs(6).unwrap().len(), 112);
        assert_eq!(naive_connected_count(6), 112);
    }

    #[test]
    fn refuses_large_n() {
        assert!(enumerate_connected_graphs(8).is_err());
    }

    #[test]
    fn pairwise_non_isomorphic_n5() {
        let graphs = enumerate_connected_graphs(5).unwrap();
        for i in 0..graphs.len() {
            for j in (i + 1)..graphs.len() {
                assert!(!is_isomorphic(&graphs[i], &graphs[j]));
            }
        }
    }
}
