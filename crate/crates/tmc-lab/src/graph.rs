//! Simple undirected graphs on dense vertex labels `0..n-1`, with the
//! structural predicates the rest of the crate consumes.

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A simple undirected graph. Immutable by convention once built; every
/// operation in this crate takes `&Graph` and returns fresh values, so
/// graphs are safe to share across parallel workers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    // adjacency matrix, one bitset row per vertex
    adj: Vec<Vec<u64>>,
}

/// Summary of the structural quantities the theorem predicates look at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics {
    pub connected: bool,
    /// `None` iff the graph is disconnected.
    pub diameter: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub cut_vertices: Vec<usize>,
    pub triangle_free: bool,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn new(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Invalid("graph must have at least one vertex".into()));
        }
        let words = n.div_ceil(WORD);
        Ok(Graph { n, m: 0, adj: vec![vec![0u64; words]; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Invalid(format!("loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::Invalid(format!("edge ({u},{v}) out of range for n={}", self.n)));
        }
        if self.has_edge(u, v) {
            return Err(Error::Invalid(format!("duplicate edge ({u},{v})")));
        }
        self.adj[u][v / WORD] |= 1 << (v % WORD);
        self.adj[v][u / WORD] |= 1 << (u % WORD);
        self.m += 1;
        Ok(())
    }

    /// Removes an existing edge; no-op error if absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(Error::Invalid(format!("edge ({u},{v}) not present")));
        }
        self.adj[u][v / WORD] &= !(1 << (v % WORD));
        self.adj[v][u / WORD] &= !(1 << (u % WORD));
        self.m -= 1;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[u];
        (0..self.n).filter(move |&v| row[v / WORD] >> (v % WORD) & 1 == 1)
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    /// BFS distances from `src`, with `usize::MAX` marking unreachable.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Connectivity of the subgraph induced on the vertices NOT in `removed`
    /// (a bitset over vertex indices). Vacuously true when at most one
    /// vertex remains.
    pub fn connected_avoiding(&self, removed: &[u64]) -> bool {
        let start = (0..self.n).find(|&v| removed[v / WORD] >> (v % WORD) & 1 == 0);
        let Some(start) = start else { return true };
        let words = self.adj[0].len();
        let mut seen = vec![0u64; words];
        seen[start / WORD] |= 1 << (start % WORD);
        let mut queue = vec![start];
        let mut count = 1usize;
        while let Some(u) = queue.pop() {
            for w in 0..words {
                let mut fresh = self.adj[u][w] & !seen[w] & !removed[w];
                while fresh != 0 {
                    let b = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    seen[w] |= 1 << b;
                    queue.push(w * WORD + b);
                    count += 1;
                }
            }
        }
        let total = self.n - removed.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        count == total
    }

    pub fn diameter(&self) -> Option<usize> {
        let mut diam = 0;
        for u in 0..self.n {
            for d in self.bfs_distances(u) {
                if d == usize::MAX {
                    return None;
                }
                diam = diam.max(d);
            }
        }
        Some(diam)
    }

    /// Articulation points by the standard DFS low-point method.
    pub fn cut_vertices(&self) -> Vec<usize> {
        struct Dfs<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            cut: Vec<bool>,
        }
        impl Dfs<'_> {
            fn run(&mut self, u: usize, parent: Option<usize>) {
                self.time += 1;
                self.disc[u] = self.time;
                self.low[u] = self.time;
                let mut children = 0;
                for v in self.g.neighbors(u) {
                    if self.disc[v] == 0 {
                        children += 1;
                        self.run(v, Some(u));
                        self.low[u] = self.low[u].min(self.low[v]);
                        if parent.is_some() && self.low[v] >= self.disc[u] {
                            self.cut[u] = true;
                        }
                    } else if Some(v) != parent {
                        self.low[u] = self.low[u].min(self.disc[v]);
                    }
                }
                if parent.is_none() && children > 1 {
                    self.cut[u] = true;
                }
            }
        }
        let mut dfs = Dfs {
            g: self,
            disc: vec![0; self.n],
            low: vec![0; self.n],
            time: 0,
            cut: vec![false; self.n],
        };
        for u in 0..self.n {
            if dfs.disc[u] == 0 {
                dfs.run(u, None);
            }
        }
        (0..self.n).filter(|&u| dfs.cut[u]).collect()
    }

    pub fn triangle_free(&self) -> bool {
        for (u, v) in self.edges() {
            for w in 0..self.adj[0].len() {
                if self.adj[u][w] & self.adj[v][w] != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn metrics(&self) -> Metrics {
        let degrees: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        let diameter = self.diameter();
        Metrics {
            connected: diameter.is_some(),
            diameter,
            min_degree: degrees.iter().copied().min().unwrap(),
            max_degree: degrees.iter().copied().max().unwrap(),
            cut_vertices: self.cut_vertices(),
            triangle_free: self.triangle_free(),
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("n >= 1");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Subgraph induced on `keep` (relabeled 0.. in the order given).
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        let mut g = Graph::new(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }
}

/// True iff `n > k` and no vertex subset of size `< k` disconnects the
/// graph. Brute force over all small cuts; `K_n` comes out k-connected
/// exactly when `n >= k+1`.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "k must be positive");
    let n = g.n();
    if n <= k {
        return false;
    }
    if !g.is_connected() {
        return false;
    }
    let words = n.div_ceil(WORD);
    let mut removed = vec![0u64; words];
    // combinations of each size 1..k, in lexicographic order
    fn rec(g: &Graph, removed: &mut Vec<u64>, start: usize, left: usize) -> bool {
        if left == 0 {
            return g.connected_avoiding(removed);
        }
        for v in start..g.n() {
            removed[v / WORD] |= 1 << (v % WORD);
            if !rec(g, removed, v + 1, left - 1) {
                removed[v / WORD] &= !(1 << (v % WORD));
                return false;
            }
            removed[v / WORD] &= !(1 << (v % WORD));
        }
        true
    }
    for size in 1..k {
        if size >= n {
            break;
        }
        if !rec(g, &mut removed, 0, size) {
            return false;
        }
    }
    true
}

/// Exact isomorphism test by exhausting vertex bijections (n <= 8).
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    assert!(n <= 8, "is_isomorphic supports n <= 8");
    let mut da: Vec<usize> = (0..n).map(|u| a.degree(u)).collect();
    let mut db: Vec<usize> = (0..n).map(|u| b.degree(u)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    permute_check(a, b, &mut perm, 0)
}

fn permute_check(a: &Graph, b: &Graph, perm: &mut Vec<usize>, k: usize) -> bool {
    let n = a.n();
    if k == n {
        return true;
    }
    for i in k..n {
        perm.swap(k, i);
        // vertex k of `a` maps to perm[k] of `b`; check edges among mapped prefix
        let consistent = (0..k).all(|j| a.has_edge(j, k) == b.has_edge(perm[j], perm[k]));
        if consistent && permute_check(a, b, perm, k + 1) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn metrics_c5() {
        let g = generate::cycle(5).unwrap();
        let m = g.metrics();
        assert!(m.connected);
        assert_eq!(m.diameter, Some(2));
        assert_eq!((m.min_degree, m.max_degree), (2, 2));
        assert!(m.cut_vertices.is_empty());
        assert!(m.triangle_free);
    }

    #[test]
    fn metrics_bowtie_cut_vertex() {
        // two triangles sharing vertex 0
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(g.metrics().cut_vertices, vec![0]);
    }

    #[test]
    fn metrics_k4() {
        let g = generate::complete(4).unwrap();
        let m = g.metrics();
        assert_eq!(m.diameter, Some(1));
        assert!(!m.triangle_free);
    }

    #[test]
    fn connectivity_cycle_and_complete() {
        let c5 = generate::cycle(5).unwrap();
        assert!(vertex_connectivity_at_least(&c5, 2));
        assert!(!vertex_connectivity_at_least(&c5, 3));
        let k5 = generate::complete(5).unwrap();
        assert!(vertex_connectivity_at_least(&k5, 4));
        assert!(!vertex_connectivity_at_least(&k5, 5));
    }

    #[test]
    fn petersen_complement_is_4_connected() {
        let g = generate::petersen();
        let c = g.complement();
        assert!(vertex_connectivity_at_least(&c, 4));
        // independent check: no cut of size <= 3 exists
        assert!(brute_force_min_cut_exceeds(&c, 3));
    }

    // Test-only oracle, written against the definition: remove every vertex
    // subset of size <= bound and require the rest to stay connected.
    fn brute_force_min_cut_exceeds(g: &Graph, bound: usize) -> bool {
        let n = g.n();
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size == 0 || size > bound || size >= n - 1 {
                continue;
            }
            let keep: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            if !g.induced(&keep).unwrap().is_connected() {
                return false;
            }
        }
        true
    }

    #[test]
    fn complement_examples() {
        let k4 = generate::complete(4).unwrap();
        assert_eq!(k4.complement().m(), 0);
        let c5 = generate::cycle(5).unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()));
    }

    #[test]
    fn iso_examples() {
        let p4 = generate::path(4).unwrap();
        let claw = generate::star(4).unwrap();
        assert!(!is_isomorphic(&p4, &claw));
        let a = generate::complete_minus(5, generate::Pattern::TwoK2).unwrap();
        let spec = generate::MultipartiteSpec::new(vec![2, 2, 1]).unwrap();
        let b = generate::complete_multipartite(&spec);
        assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = Graph::new(3).unwrap();
        assert!(g.add_edge(0, 0).is_err());
        g.add_edge(0, 1).unwrap();
        assert!(g.add_edge(1, 0).is_err());
        assert!(g.add_edge(0, 5).is_err());
    }
}
