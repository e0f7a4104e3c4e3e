//! Total colorings, the TMC verifier, color-class decomposition, waste
//! accounting, and the constructive coloring behind the general lower
//! bound `m - n + 2 + l(G)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spanning::{self, spanning_stats};

/// One color per vertex and per edge of a host graph. Color ids are
/// opaque non-negative integers, assigned densely and deterministically
/// by the constructors in this module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalColoring {
    pub vertex_colors: Vec<u32>,
    /// Keys are edges `(u, v)` with `u < v`.
    pub edge_colors: BTreeMap<(usize, usize), u32>,
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    schema: Option<String>,
    n: usize,
    vertex_colors: Vec<u32>,
    edge_colors: Vec<(usize, usize, u32)>,
}

impl TotalColoring {
    pub fn num_colors(&self) -> usize {
        let mut ids: Vec<u32> = self
            .vertex_colors
            .iter()
            .copied()
            .chain(self.edge_colors.values().copied())
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = ColoringJson {
            schema: Some(crate::SCHEMA.to_string()),
            n: self.vertex_colors.len(),
            vertex_colors: self.vertex_colors.clone(),
            edge_colors: self.edge_colors.iter().map(|(&(u, v), &c)| (u, v, c)).collect(),
        };
        serde_json::to_value(doc).unwrap()
    }

    pub fn from_json(text: &str) -> Result<TotalColoring> {
        let doc: ColoringJson = serde_json::from_str(text)
            .map_err(|e| Error::Invalid(format!("coloring JSON: {e}")))?;
        if doc.vertex_colors.len() != doc.n {
            return Err(Error::Invalid(format!(
                "coloring declares n={} but has {} vertex colors",
                doc.n,
                doc.vertex_colors.len()
            )));
        }
        let mut edge_colors = BTreeMap::new();
        for (u, v, c) in doc.edge_colors {
            if u >= v || v >= doc.n {
                return Err(Error::Invalid(format!("bad edge ({u},{v}) in coloring")));
            }
            if edge_colors.insert((u, v), c).is_some() {
                return Err(Error::Invalid(format!("edge ({u},{v}) colored twice")));
            }
        }
        Ok(TotalColoring { vertex_colors: doc.vertex_colors, edge_colors })
    }

    fn check_matches(&self, g: &Graph) -> Result<()> {
        if self.vertex_colors.len() != g.n() {
            return Err(Error::Invalid(format!(
                "coloring covers {} vertices, graph has {}",
                self.vertex_colors.len(),
                g.n()
            )));
        }
        let edges = g.edges();
        if self.edge_colors.len() != edges.len()
            || !edges.iter().all(|e| self.edge_colors.contains_key(e))
        {
            return Err(Error::Invalid("coloring edge set does not match the graph".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub ok: bool,
    /// First vertex pair (lexicographic) with no total monochromatic path.
    pub failing_pair: Option<(usize, usize)>,
}

/// Checks the TMC property: every vertex pair must be joined by a path
/// whose edges and internal vertices all carry one color. Works per color
/// by contracting the c-colored subgraph on c-colored vertices; a pair
/// u-v then connects through color c iff some c-edge leaves u into a
/// component that some c-edge from v also reaches. Adjacent pairs always
/// pass through their own edge.
pub fn verify_tmc(g: &Graph, col: &TotalColoring) -> Result<VerifyOutcome> {
    col.check_matches(g)?;
    let n = g.n();
    // union-find per color over vertices of that color
    let mut colors: Vec<u32> = col.vertex_colors.clone();
    colors.extend(col.edge_colors.values().copied());
    colors.sort_unstable();
    colors.dedup();
    let color_index: BTreeMap<u32, usize> = colors.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dsu: Vec<Vec<usize>> = colors.iter().map(|_| (0..n).collect()).collect();
    fn find(p: &mut Vec<usize>, v: usize) -> usize {
        while p[v] != p[p[v]] {
            p[v] = p[p[v]];
        }
        p[v]
    }
    for (&(u, v), &c) in &col.edge_colors {
        if col.vertex_colors[u] == c && col.vertex_colors[v] == c {
            let p = &mut dsu[color_index[&c]];
            let (ru, rv) = (find(p, u), find(p, v));
            p[ru] = rv;
        }
    }
    for u in 0..n {
        'pair: for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            for (ci, &c) in colors.iter().enumerate() {
                // c-colored neighbors of u and v along c-colored edges
                let p = &mut dsu[ci];
                let mut roots_u = Vec::new();
                for x in g.neighbors(u) {
                    if col.vertex_colors[x] == c
                        && col.edge_colors[&(u.min(x), u.max(x))] == c
                    {
                        roots_u.push(find(p, x));
                    }
                }
                if roots_u.is_empty() {
                    continue;
                }
                for y in g.neighbors(v) {
                    if col.vertex_colors[y] == c
                        && col.edge_colors[&(v.min(y), v.max(y))] == c
                        && roots_u.contains(&find(p, y))
                    {
                        continue 'pair;
                    }
                }
            }
            return Ok(VerifyOutcome { ok: false, failing_pair: Some((u, v)) });
        }
    }
    Ok(VerifyOutcome { ok: true, failing_pair: None })
}

/// The constructive coloring attaining `m - n + 2 + l(G)` colors: color 0
/// covers the edges and internal vertices of a max-leaf spanning tree;
/// every leaf and every non-tree edge gets its own fresh color, leaves
/// first in vertex order, then non-tree edges in lexicographic order.
pub fn construct_theorem1(g: &Graph) -> Result<TotalColoring> {
    let stats = spanning_stats(g)?;
    let n = g.n();
    let tree: std::collections::BTreeSet<(usize, usize)> =
        stats.witness_tree.iter().copied().collect();
    let mut internal = vec![false; n];
    for &v in &stats.witness_cds {
        internal[v] = true;
    }
    let mut next = 1u32;
    let mut vertex_colors = vec![0u32; n];
    for v in 0..n {
        if !internal[v] {
            vertex_colors[v] = next;
            next += 1;
        }
    }
    let mut edge_colors = BTreeMap::new();
    for e in g.edges() {
        if tree.contains(&e) {
            edge_colors.insert(e, 0);
        } else {
            edge_colors.insert(e, next);
            next += 1;
        }
    }
    Ok(TotalColoring { vertex_colors, edge_colors })
}

/// All edges and vertices of one color, with the structural flags the
/// extremal theory cares about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClass {
    pub color: u32,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// For classes with at least one edge: does the class subgraph (its
    /// edges plus all vertices of the color) form a tree?
    pub is_tree: Option<bool>,
    /// For classes with at least one edge: is every internal vertex of
    /// the class subgraph colored with the class color?
    pub internals_match: Option<bool>,
}

pub fn decompose(g: &Graph, col: &TotalColoring) -> Result<Vec<ColorClass>> {
    col.check_matches(g)?;
    let mut by_color: BTreeMap<u32, (Vec<usize>, Vec<(usize, usize)>)> = BTreeMap::new();
    for (v, &c) in col.vertex_colors.iter().enumerate() {
        by_color.entry(c).or_default().0.push(v);
    }
    for (&e, &c) in &col.edge_colors {
        by_color.entry(c).or_default().1.push(e);
    }
    let mut out = Vec::new();
    for (color, (vertices, edges)) in by_color {
        let (is_tree, internals_match) = if edges.is_empty() {
            (None, None)
        } else {
            let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            verts.extend(vertices.iter().copied());
            verts.sort_unstable();
            verts.dedup();
            let tree = spanning::is_tree(&edges, &verts);
            let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
            for &(u, v) in &edges {
                *deg.entry(u).or_default() += 1;
                *deg.entry(v).or_default() += 1;
            }
            let internals_ok = deg
                .iter()
                .filter(|(_, &d)| d >= 2)
                .all(|(&v, _)| col.vertex_colors[v] == color);
            (Some(tree), Some(internals_ok))
        };
        out.push(ColorClass { color, vertices, edges, is_tree, internals_match });
    }
    Ok(out)
}

/// Waste of a nontrivial color tree: `e + q - 1` where `q` counts internal
/// vertices. Trees with fewer than two edges are trivial colors and waste
/// nothing by definition, so they are rejected here.
pub fn waste(tree: &[(usize, usize)]) -> Result<usize> {
    if tree.len() < 2 {
        return Err(Error::Invalid("waste is defined for trees with >= 2 edges".into()));
    }
    let (_, internal) = spanning::tree_leaf_profile(tree)?;
    Ok(tree.len() + internal.len() - 1)
}

/// A member of a simple family: a tree inside the host graph with at
/// least two edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTree {
    pub edges: Vec<(usize, usize)>,
    pub internal: Vec<usize>,
}

impl FamilyTree {
    pub fn new(mut edges: Vec<(usize, usize)>) -> Result<FamilyTree> {
        edges.sort_unstable();
        if edges.len() < 2 {
            return Err(Error::Invalid("family trees need >= 2 edges".into()));
        }
        let (_, internal) = spanning::tree_leaf_profile(&edges)?;
        Ok(FamilyTree { edges, internal })
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn waste(&self) -> usize {
        self.edges.len() + self.internal.len() - 1
    }
}

/// A simple family of color trees: members pairwise share at most one
/// vertex, and no vertex is internal in two members.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TreeFamily {
    pub trees: Vec<FamilyTree>,
}

impl TreeFamily {
    pub fn new(trees: Vec<FamilyTree>) -> Result<TreeFamily> {
        for (i, a) in trees.iter().enumerate() {
            for b in trees.iter().skip(i + 1) {
                let va = a.vertices();
                let shared: Vec<usize> =
                    b.vertices().into_iter().filter(|v| va.contains(v)).collect();
                if shared.len() > 1 {
                    return Err(Error::Invalid(format!(
                        "family trees share {} vertices",
                        shared.len()
                    )));
                }
                if let Some(&w) = shared.first() {
                    if a.internal.contains(&w) && b.internal.contains(&w) {
                        return Err(Error::Invalid(format!(
                            "vertex {w} is internal in two family trees"
                        )));
                    }
                }
            }
        }
        Ok(TreeFamily { trees })
    }

    pub fn total_waste(&self) -> usize {
        self.trees.iter().map(FamilyTree::waste).sum()
    }
}

/// Expands a simple family into a total coloring: tree `i` paints its
/// edges and internal vertices with color `i`; everything left over gets
/// a fresh color, vertices first in index order, then edges in
/// lexicographic order. Uses exactly `m + n - total_waste` colors.
pub fn family_to_coloring(g: &Graph, fam: &TreeFamily) -> Result<TotalColoring> {
    let n = g.n();
    let mut vertex_colors = vec![u32::MAX; n];
    let mut edge_colors: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for (i, tree) in fam.trees.iter().enumerate() {
        for &(u, v) in &tree.edges {
            if !g.has_edge(u, v) {
                return Err(Error::Invalid(format!("family edge ({u},{v}) not in the graph")));
            }
            if edge_colors.insert((u, v), i as u32).is_some() {
                return Err(Error::Invalid(format!("edge ({u},{v}) used by two family trees")));
            }
        }
        for &v in &tree.internal {
            if vertex_colors[v] != u32::MAX {
                return Err(Error::Invalid(format!("vertex {v} internal in two family trees")));
            }
            vertex_colors[v] = i as u32;
        }
    }
    let mut next = fam.trees.len() as u32;
    for c in vertex_colors.iter_mut() {
        if *c == u32::MAX {
            *c = next;
            next += 1;
        }
    }
    for e in g.edges() {
        edge_colors.entry(e).or_insert_with(|| {
            let c = next;
            next += 1;
            c
        });
    }
    Ok(TotalColoring { vertex_colors, edge_colors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn all_one_color(g: &Graph) -> TotalColoring {
        TotalColoring {
            vertex_colors: vec![0; g.n()],
            edge_colors: g.edges().into_iter().map(|e| (e, 0)).collect(),
        }
    }

    #[test]
    fn monochromatic_connected_graph_verifies() {
        for g in [generate::cycle(5).unwrap(), generate::petersen(), generate::star(6).unwrap()] {
            assert!(verify_tmc(&g, &all_one_color(&g)).unwrap().ok);
        }
    }

    #[test]
    fn rainbow_p3_fails_on_end_pair() {
        let g = generate::path(3).unwrap();
        let col = TotalColoring {
            vertex_colors: vec![0, 1, 2],
            edge_colors: BTreeMap::from([((0, 1), 3), ((1, 2), 4)]),
        };
        let out = verify_tmc(&g, &col).unwrap();
        assert!(!out.ok);
        assert_eq!(out.failing_pair, Some((0, 2)));
    }

    #[test]
    fn theorem1_counts() {
        for (g, expect) in [
            (generate::path(4).unwrap(), 3),
            (generate::cycle(4).unwrap(), 4),
            (generate::star(4).unwrap(), 4),
        ] {
            let col = construct_theorem1(&g).unwrap();
            assert_eq!(col.num_colors(), expect);
            assert!(verify_tmc(&g, &col).unwrap().ok);
        }
    }

    #[test]
    fn decompose_flags() {
        let c5 = generate::cycle(5).unwrap();
        let col = construct_theorem1(&c5).unwrap();
        let classes = decompose(&c5, &col).unwrap();
        let multi: Vec<_> = classes.iter().filter(|c| c.edges.len() >= 2).collect();
        assert_eq!(multi.len(), 1);
        assert_eq!(multi[0].is_tree, Some(true));
        assert_eq!(multi[0].internals_match, Some(true));

        let k3 = generate::complete(3).unwrap();
        let classes = decompose(&k3, &all_one_color(&k3)).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].is_tree, Some(false));
    }

    #[test]
    fn waste_examples() {
        assert_eq!(waste(&[(0, 1), (1, 2)]).unwrap(), 2); // P_3
        assert_eq!(waste(&[(0, 1), (0, 2), (0, 3)]).unwrap(), 3); // K_{1,3}
        assert_eq!(waste(&[(0, 1), (1, 2), (2, 3)]).unwrap(), 4); // P_4
        assert!(waste(&[(0, 1)]).is_err());
    }

    #[test]
    fn family_color_counts() {
        let k4 = generate::complete(4).unwrap();
        let empty = TreeFamily::default();
        assert_eq!(family_to_coloring(&k4, &empty).unwrap().num_colors(), 10);

        // single P_3 through the missing pair of K_4 - e
        let mut g = k4.clone();
        g.remove_edge(0, 1).unwrap();
        let fam =
            TreeFamily::new(vec![FamilyTree::new(vec![(0, 2), (1, 2)]).unwrap()]).unwrap();
        let col = family_to_coloring(&g, &fam).unwrap();
        assert_eq!(col.num_colors(), 7);
        assert!(verify_tmc(&g, &col).unwrap().ok);

        // spanning star of K_{1,4}: 4 edges, 1 internal vertex -> waste 4
        let star = generate::star(5).unwrap();
        let t = FamilyTree::new(star.edges()).unwrap();
        assert_eq!(t.waste(), 4);
        let fam = TreeFamily::new(vec![t]).unwrap();
        assert_eq!(family_to_coloring(&star, &fam).unwrap().num_colors(), 5);
    }

    #[test]
    fn family_invariants_enforced() {
        let t1 = FamilyTree::new(vec![(0, 1), (1, 2)]).unwrap();
        let t2 = FamilyTree::new(vec![(1, 3), (3, 4)]).unwrap(); // shares only vertex 1
        assert!(TreeFamily::new(vec![t1.clone(), t2]).is_ok());
        let t3 = FamilyTree::new(vec![(0, 3), (1, 3)]).unwrap(); // shares 0 and 1
        assert!(TreeFamily::new(vec![t1.clone(), t3]).is_err());
        let t4 = FamilyTree::new(vec![(1, 3), (1, 4)]).unwrap(); // 1 internal in both
        assert!(TreeFamily::new(vec![t1, t4]).is_err());
        assert!(FamilyTree::new(vec![(0, 1)]).is_err());
        assert!(FamilyTree::new(vec![(0, 1), (2, 3)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = generate::cycle(4).unwrap();
        let col = construct_theorem1(&g).unwrap();
        let text = serde_json::to_string(&col.to_json()).unwrap();
        assert_eq!(TotalColoring::from_json(&text).unwrap(), col);
        assert!(TotalColoring::from_json("{\"n\": 2, \"vertex_colors\": [0]}").is_err());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let g = generate::cycle(4).unwrap();
        let col = construct_theorem1(&generate::path(4).unwrap()).unwrap();
        assert!(verify_tmc(&g, &col).is_err());
    }
}
