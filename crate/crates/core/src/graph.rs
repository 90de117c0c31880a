use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Each vertex keeps both a sorted neighbor list and a bitset row, so
/// neighborhood unions are word operations and edge tests are constant time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
    lists: Vec<Vec<usize>>,
    size: usize,
}

/// Edges with one endpoint in each of two vertex sets, as `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeCut {
    pub pairs: Vec<(usize, usize)>,
}

impl EdgeCut {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }
}

/// An induced subgraph together with the order-preserving map from its
/// vertices back to the host: `map[i]` is the host id of local vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub map: Vec<usize>,
    host_order: usize,
}

impl InducedSubgraph {
    pub fn host_order(&self) -> usize {
        self.host_order
    }

    /// Local set expressed in host coordinates.
    pub fn lift(&self, local: &VertexSet) -> VertexSet {
        local.lift(&self.map, self.host_order)
    }

    /// Host set restricted to the subgraph, in local coordinates.
    pub fn restrict(&self, host: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.map.len());
        for (i, &v) in self.map.iter().enumerate() {
            if host.contains(v) {
                out.insert(i);
            }
        }
        out
    }

    /// Host vertex set covered by the subgraph.
    pub fn vertices(&self) -> VertexSet {
        let mut out = VertexSet::empty(self.host_order);
        for &v in &self.map {
            out.insert(v);
        }
        out
    }
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge_unchecked(u, v);
        }
        g.finish();
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![VertexSet::empty(n); n],
            lists: vec![Vec::new(); n],
            size: 0,
        }
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        if !self.rows[u].contains(v) {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
            self.size += 1;
        }
    }

    pub(crate) fn finish(&mut self) {
        for (row, list) in self.rows.iter().zip(self.lists.iter_mut()) {
            *list = row.to_vec();
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn adjacency(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Adjacency row of `v` as a bit mask. Requires order at most 64.
    pub fn adjacency_mask(&self, v: usize) -> u64 {
        self.rows[v].mask()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.lists[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.lists
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `N(S)`: the union of the neighborhoods of the members of `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        s.check_host(self.order())?;
        Ok(self.neighborhood_unchecked(s))
    }

    pub(crate) fn neighborhood_unchecked(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.order());
        for v in s {
            out.union_with(&self.rows[v]);
        }
        out
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        Ok(self.neighborhood(s)?.union(s))
    }

    /// `|S| - |N(S)|`.
    pub fn difference(&self, s: &VertexSet) -> Result<isize> {
        Ok(s.len() as isize - self.neighborhood(s)?.len() as isize)
    }

    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        s.check_host(self.order())?;
        Ok(s.iter().all(|v| self.rows[v].is_disjoint(s)))
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        s.check_host(self.order())?;
        let map = s.to_vec();
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut graph = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.lists[v] {
                let j = local[w];
                if j != usize::MAX && j > i {
                    graph.add_edge_unchecked(i, j);
                }
            }
        }
        graph.finish();
        Ok(InducedSubgraph {
            graph,
            map,
            host_order: self.order(),
        })
    }

    /// `G - S` as an induced subgraph on the remaining vertices.
    pub fn without(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        s.check_host(self.order())?;
        self.induced_subgraph(&s.complement())
    }

    /// `E(X, Y)`; an edge inside `X ∩ Y` is reported once.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> Result<EdgeCut> {
        x.check_host(self.order())?;
        y.check_host(self.order())?;
        let pairs = self
            .edges()
            .filter(|&(u, v)| (x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u)))
            .collect();
        Ok(EdgeCut { pairs })
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &self.lists[v] {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// A proper 2-colouring `(colour 0, colour 1)` if one exists. Each
    /// component's smallest vertex gets colour 0.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.order();
        let mut colour = vec![u8::MAX; n];
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.lists[v] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        stack.push(w);
                    } else if colour[w] == colour[v] {
                        return None;
                    }
                }
            }
        }
        let mut left = VertexSet::empty(n);
        let mut right = VertexSet::empty(n);
        for (v, &c) in colour.iter().enumerate() {
            if c == 0 {
                left.insert(v);
            } else {
                right.insert(v);
            }
        }
        Some((left, right))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn set(order: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(order, vs.iter().copied()).unwrap()
    }

    #[test]
    fn build_rejects_bad_pairs() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
    }

    #[test]
    fn figure1_neighborhoods() {
        let g = generators::figure1();
        assert_eq!(g.neighborhood(&set(5, &[4])).unwrap().to_vec(), vec![3]);
        assert_eq!(g.neighborhood(&set(5, &[0, 2])).unwrap().to_vec(), vec![0, 1, 2, 3]);
        assert!(g.neighborhood(&VertexSet::empty(5)).unwrap().is_empty());
        assert_eq!(
            g.neighborhood(&VertexSet::empty(4)),
            Err(Error::HostMismatch { expected: 5, found: 4 })
        );
    }

    #[test]
    fn figure1_induced_subgraphs() {
        let g = generators::figure1();
        let tri = g.induced_subgraph(&set(5, &[0, 1, 2])).unwrap();
        assert_eq!(tri.graph, generators::complete(3));
        let tail = g.induced_subgraph(&set(5, &[3, 4])).unwrap();
        assert_eq!(tail.graph, generators::path(2));
        assert_eq!(tail.map, vec![3, 4]);
        let none = g.induced_subgraph(&VertexSet::empty(5)).unwrap();
        assert_eq!(none.graph.order(), 0);
        let all = g.induced_subgraph(&g.vertices()).unwrap();
        assert_eq!(all.graph, g);
    }

    #[test]
    fn figure1_edge_cuts() {
        let g = generators::figure1();
        let tri = set(5, &[0, 1, 2]);
        assert_eq!(g.edges_between(&set(5, &[3]), &tri).unwrap().pairs, vec![(2, 3)]);
        assert!(g.edges_between(&set(5, &[4]), &tri).unwrap().is_empty());
        assert!(g.edges_between(&VertexSet::empty(5), &tri).unwrap().is_empty());
        // internal edges of X ∩ Y once each
        assert_eq!(g.edges_between(&tri, &tri).unwrap().len(), 3);
    }

    #[test]
    fn components_and_bipartition() {
        let g = Graph::new(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components().len(), 3);
        assert!(g.is_bipartite());
        assert!(!generators::figure1().is_bipartite());
    }
}
