//! Deterministic graph generators.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Part sizes of a complete multipartite graph, sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteSpec {
    sizes: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(mut sizes: Vec<usize>) -> Result<MultipartiteSpec> {
        if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
            return Err(Error::Invalid("part sizes must be positive".into()));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MultipartiteSpec { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of parts.
    pub fn r(&self) -> usize {
        self.sizes.len()
    }

    /// Number of parts of size at least 2.
    pub fn t(&self) -> usize {
        self.sizes.iter().filter(|&&s| s >= 2).count()
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }
}

/// Edge patterns deleted from `K_n` in the large-end characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    K2,
    P3,
    K3,
    P4,
    TwoK2,
    K4,
    K4MinusK2,
    K4MinusP3,
    C4,
    K13,
}

impl Pattern {
    /// Edges of the pattern, anchored on the lowest-numbered vertices.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            Pattern::K2 => &[(0, 1)],
            Pattern::P3 => &[(0, 1), (1, 2)],
            Pattern::K3 => &[(0, 1), (0, 2), (1, 2)],
            Pattern::P4 => &[(0, 1), (1, 2), (2, 3)],
            Pattern::TwoK2 => &[(0, 1), (2, 3)],
            Pattern::K4 => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            Pattern::K4MinusK2 => &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            Pattern::K4MinusP3 => &[(0, 2), (0, 3), (1, 3), (2, 3)],
            Pattern::C4 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            Pattern::K13 => &[(0, 1), (0, 2), (0, 3)],
        }
    }

    pub fn order(self) -> usize {
        self.edges().iter().map(|&(_, v)| v).max().unwrap() + 1
    }

    pub const ALL: [Pattern; 10] = [
        Pattern::K2,
        Pattern::P3,
        Pattern::K3,
        Pattern::P4,
        Pattern::TwoK2,
        Pattern::K4,
        Pattern::K4MinusK2,
        Pattern::K4MinusP3,
        Pattern::C4,
        Pattern::K13,
    ];
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 0..n.saturating_sub(1) {
        g.add_edge(u, u + 1)?;
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = path(n)?;
    g.add_edge(0, n - 1)?;
    Ok(g)
}

/// Star on `n` vertices with center 0 (i.e. `K_{1,n-1}`).
pub fn star(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for v in 1..n {
        g.add_edge(0, v)?;
    }
    Ok(g)
}

pub fn complete_multipartite(spec: &MultipartiteSpec) -> Graph {
    let n = spec.n();
    let mut part = vec![0usize; n];
    let mut v = 0;
    for (i, &s) in spec.sizes().iter().enumerate() {
        for _ in 0..s {
            part[v] = i;
            v += 1;
        }
    }
    let mut g = Graph::new(n).expect("n >= 1");
    for u in 0..n {
        for w in (u + 1)..n {
            if part[u] != part[w] {
                g.add_edge(u, w).unwrap();
            }
        }
    }
    g
}

/// `K_n` with the edges of `pattern` deleted; the pattern sits on the
/// lowest-numbered vertices, so the result is deterministic.
pub fn complete_minus(n: usize, pattern: Pattern) -> Result<Graph> {
    if pattern.order() > n {
        return Err(Error::Invalid(format!(
            "pattern on {} vertices does not fit in K_{n}",
            pattern.order()
        )));
    }
    let mut g = complete(n)?;
    for &(u, v) in pattern.edges() {
        g.remove_edge(u, v)?;
    }
    Ok(g)
}

/// Labeled tree on `seq.len() + 2` vertices from its Prüfer sequence.
pub fn tree_from_prufer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if seq.iter().any(|&x| x >= n) {
        return Err(Error::Invalid("Prüfer entry out of range".into()));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut g = Graph::new(n)?;
    let mut used = vec![false; n];
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1 && !used[v]).unwrap();
        g.add_edge(leaf, x)?;
        used[leaf] = true;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1 && !used[v]).collect();
    g.add_edge(rest[0], rest[1])?;
    Ok(g)
}

/// The Petersen graph (outer C_5, inner pentagram, spokes).
pub fn petersen() -> Graph {
    let mut g = Graph::new(10).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        g.add_edge(i, 5 + i).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn complete_minus_2k2_is_k221() {
        let g = complete_minus(5, Pattern::TwoK2).unwrap();
        let spec = MultipartiteSpec::new(vec![1, 2, 2]).unwrap();
        assert!(is_isomorphic(&g, &complete_multipartite(&spec)));
    }

    #[test]
    fn multipartite_211_is_k4_minus_edge() {
        let spec = MultipartiteSpec::new(vec![2, 1, 1]).unwrap();
        let g = complete_multipartite(&spec);
        assert_eq!((g.n(), g.m()), (4, 5));
        assert!(is_isomorphic(&g, &complete_minus(4, Pattern::K2).unwrap()));
    }

    #[test]
    fn path_edges() {
        let g = path(4).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn generator_errors() {
        assert!(cycle(2).is_err());
        assert!(complete_minus(3, Pattern::K4).is_err());
        assert!(MultipartiteSpec::new(vec![2, 0]).is_err());
    }

    #[test]
    fn prufer_tree() {
        // sequence [3,3] -> star-ish tree on 4 vertices centered at 3
        let g = tree_from_prufer(&[3, 3]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.degree(3), 3);
        assert!(tree_from_prufer(&[7]).is_err());
    }

    #[test]
    fn multipartite_spec_derived() {
        let spec = MultipartiteSpec::new(vec![1, 3, 2, 1]).unwrap();
        assert_eq!(spec.sizes(), &[3, 2, 1, 1]);
        assert_eq!((spec.r(), spec.t(), spec.n()), (4, 2, 7));
    }
}
