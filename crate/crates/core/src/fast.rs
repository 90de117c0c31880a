//! Polynomial criticality routines through the bipartite double cover.
//!
//! The double cover `B` of `G` has a left copy `x_v` and a right copy `y_v`
//! of every vertex, with `x_u y_v` an edge whenever `uv` is. An independent
//! set of `B` is a pair `(X, Y)` with `Y ∩ N(X) = ∅`, so
//! `α(B) = n + d(G)`, and since `B` is bipartite `α(B) = 2n - μ(B)`.
//! A maximum independent set of `B` has `X` critical and `Y = V - N(X)`;
//! the vertices present on both sides form a critical independent set.

use alloc::collections::VecDeque;

use crate::graph::Graph;
use crate::matching::{max_bipartite_matching, Matching};
use crate::set::VertexSet;

/// The bipartite double cover: vertex `v` of `G` becomes `x_v = v` and
/// `y_v = n + v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCover {
    pub graph: Graph,
    order: usize,
}

impl DoubleCover {
    pub fn x(&self, v: usize) -> usize {
        v
    }

    pub fn y(&self, v: usize) -> usize {
        self.order + v
    }

    /// Order of the covered graph.
    pub fn base_order(&self) -> usize {
        self.order
    }

    pub fn left(&self) -> VertexSet {
        let mut s = VertexSet::empty(2 * self.order);
        (0..self.order).for_each(|v| s.insert(v));
        s
    }

    pub fn right(&self) -> VertexSet {
        self.left().complement()
    }

    pub fn max_matching(&self) -> Matching {
        max_bipartite_matching(&self.graph, &self.left(), &self.right())
            .expect("double cover sides are a bipartition")
    }
}

pub fn double_cover(g: &Graph) -> DoubleCover {
    let n = g.order();
    let mut b = Graph::empty(2 * n);
    for (u, v) in g.edges() {
        b.add_edge_unchecked(u, n + v);
        b.add_edge_unchecked(v, n + u);
    }
    b.finish();
    DoubleCover { graph: b, order: n }
}

/// `d(G) = n - μ(B)`.
pub fn critical_difference_fast(g: &Graph) -> isize {
    let mu = double_cover(g).max_matching().size();
    g.order() as isize - mu as isize
}

/// A maximum independent set of a bipartite graph from a maximum matching:
/// the complement of the König vertex cover. `left` must be one side.
fn koenig_independent_set(b: &Graph, left: &VertexSet, m: &Matching) -> VertexSet {
    // alternating reachability from exposed left vertices
    let mut reached = VertexSet::empty(b.order());
    let mut queue: VecDeque<usize> = left.iter().filter(|&v| m.is_exposed(v)).collect();
    for &v in &queue {
        reached.insert(v);
    }
    while let Some(v) = queue.pop_front() {
        for &w in b.neighbors(v) {
            if reached.contains(w) || m.mate(v) == w {
                continue;
            }
            reached.insert(w);
            let back = m.mate(w);
            if back != w && !reached.contains(back) {
                reached.insert(back);
                queue.push_back(back);
            }
        }
    }
    let right = left.complement();
    left.intersection(&reached).union(&right.difference(&reached))
}

/// A critical independent set: the vertices whose two copies both lie in a
/// maximum independent set of the double cover.
pub fn extract_critical_set(g: &Graph) -> VertexSet {
    let cover = double_cover(g);
    let m = cover.max_matching();
    let j = koenig_independent_set(&cover.graph, &cover.left(), &m);
    let mut out = VertexSet::empty(g.order());
    for v in 0..g.order() {
        if j.contains(cover.x(v)) && j.contains(cover.y(v)) {
            out.insert(v);
        }
    }
    out
}

/// Whether some critical independent set contains all of `forced`.
///
/// Both copies of every forced vertex are put into the independent set of
/// the double cover; this is possible without losing maximality exactly when
/// `α` of what remains drops by `2|forced|`.
pub fn is_critical_extension(g: &Graph, forced: &VertexSet) -> bool {
    let n = g.order();
    if !forced.iter().all(|v| g.adjacency(v).is_disjoint(forced)) {
        return false;
    }
    let cover = double_cover(g);
    let alpha_full = 2 * n - cover.max_matching().size();
    let mut removed = VertexSet::empty(2 * n);
    for v in forced {
        for side in [cover.x(v), cover.y(v)] {
            removed.insert(side);
            removed.union_with(cover.graph.adjacency(side));
        }
    }
    let rest = cover.graph.without(&removed).expect("same host");
    let rest_left = rest.restrict(&cover.left());
    let rest_right = rest_left.complement();
    let mu = max_bipartite_matching(&rest.graph, &rest_left, &rest_right)
        .expect("subgraph of a bipartite graph")
        .size();
    let alpha_rest = rest.graph.order() - mu;
    alpha_rest + 2 * forced.len() == alpha_full
}

/// Whether `v` lies in some critical independent set.
pub fn is_critical_vertex(g: &Graph, v: usize) -> bool {
    let mut forced = VertexSet::empty(g.order());
    forced.insert(v);
    is_critical_extension(g, &forced)
}

/// The union of all critical independent sets, one forcing test per vertex.
pub fn diadem_fast(g: &Graph) -> VertexSet {
    let mut out = VertexSet::empty(g.order());
    for v in 0..g.order() {
        if is_critical_vertex(g, v) {
            out.insert(v);
        }
    }
    out
}

/// The lexicographically least maximum critical independent set.
///
/// Vertices are added in increasing order whenever the enlarged set still
/// extends to a critical independent set. The result is an inclusion-maximal
/// critical independent set, and since every critical independent set lies
/// in a maximum one, it is maximum.
pub fn max_critical_independent_set_fast(g: &Graph) -> VertexSet {
    let mut chosen = VertexSet::empty(g.order());
    for v in 0..g.order() {
        if g.adjacency(v).is_disjoint(&chosen) {
            chosen.insert(v);
            if !is_critical_extension(g, &chosen) {
                chosen.remove(v);
            }
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use crate::generators::{complete, cycle, figure1, path, star};
    use crate::matching::matching_number;

    #[test]
    fn double_cover_shape() {
        let b = double_cover(&complete(2));
        assert_eq!(b.graph.edges().collect::<Vec<_>>(), [(0, 3), (1, 2)]);
        assert_eq!(b.max_matching().size(), 2);
        let b = double_cover(&path(3));
        assert_eq!(b.graph.size(), 4);
        assert_eq!(matching_number(&b.graph), 2);
        assert_eq!(double_cover(&Graph::empty(3)).graph, Graph::empty(6));
    }

    #[test]
    fn differences() {
        assert_eq!(critical_difference_fast(&path(3)), 1);
        assert_eq!(critical_difference_fast(&complete(2)), 0);
        assert_eq!(critical_difference_fast(&Graph::empty(4)), 4);
        assert_eq!(critical_difference_fast(&Graph::empty(0)), 0);
    }

    #[test]
    fn extraction() {
        assert_eq!(extract_critical_set(&path(3)).to_vec(), [0, 2]);
        assert!(extract_critical_set(&cycle(5).unwrap()).is_empty());
        assert_eq!(extract_critical_set(&complete(1)).to_vec(), [0]);
    }

    #[test]
    fn critical_vertices() {
        let g = figure1();
        assert!(is_critical_vertex(&g, 4));
        assert!(!is_critical_vertex(&g, 3));
        assert!(!is_critical_vertex(&star(3), 0));
        assert!((0..4).all(|v| is_critical_vertex(&Graph::empty(4), v)));
    }

    #[test]
    fn maximum_critical_sets() {
        assert_eq!(max_critical_independent_set_fast(&figure1()).to_vec(), [4]);
        assert_eq!(max_critical_independent_set_fast(&cycle(4).unwrap()).to_vec(), [0, 2]);
        assert!(max_critical_independent_set_fast(&cycle(5).unwrap()).is_empty());
        assert_eq!(max_critical_independent_set_fast(&star(3)).to_vec(), [1, 2, 3]);
    }
}
