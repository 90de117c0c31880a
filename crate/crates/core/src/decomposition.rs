//! Larson's independence decomposition, the Gallai–Edmonds decomposition and
//! the König–Egerváry, 2-bicritical and almost-bipartite classifiers.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{Caps, IndependenceOracle};
use crate::fast::{critical_difference_fast, is_critical_vertex, max_critical_independent_set_fast};
use crate::graph::{Graph, InducedSubgraph};
use crate::matching::{matching_number, max_matching};
use crate::set::{SetFamily, VertexSet};
use crate::twosat::{Lit, TwoSat};

/// `V = L ∪ L^c` with `L = J ∪ N(J)` for a maximum critical independent set
/// `J`, and the boundary `∂_L`: vertices of `L` with a neighbor in `L^c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LarsonParts {
    pub witness: VertexSet,
    pub l: VertexSet,
    pub lc: VertexSet,
    pub boundary: VertexSet,
    pub l_graph: InducedSubgraph,
    pub lc_graph: InducedSubgraph,
    /// Whether the α-additivity clause was confirmed by the oracle (it has
    /// no polynomial check).
    pub alpha_verified: bool,
}

impl LarsonParts {
    /// Builds the parts from a witness `J` without checking it.
    pub fn from_witness(g: &Graph, witness: VertexSet) -> Result<Self> {
        let l = g.closed_neighborhood(&witness)?;
        let lc = l.complement();
        let boundary = l
            .iter()
            .filter(|&v| !g.adjacency(v).is_disjoint(&lc))
            .fold(VertexSet::empty(g.order()), |mut acc, v| {
                acc.insert(v);
                acc
            });
        Ok(LarsonParts {
            l_graph: g.induced_subgraph(&l)?,
            lc_graph: g.induced_subgraph(&lc)?,
            witness,
            l,
            lc,
            boundary,
            alpha_verified: false,
        })
    }

    /// Checks the four decomposition clauses and the boundary invariants.
    ///
    /// Clauses 2 to 4 always have a polynomial check; within the oracle cap
    /// each is also confirmed exhaustively, together with clause 1.
    pub fn verify(&mut self, g: &Graph, caps: &Caps) -> Result<()> {
        let violation = |clause, detail| Err(Error::LarsonViolation { clause, detail });
        let j = &self.witness;
        let nj = g.neighborhood(j)?;

        // clause 4: J is a critical independent set and L = J ∪ N(J)
        if !g.is_independent(j)? {
            return violation(4, format!("witness {j} is not independent"));
        }
        let d = critical_difference_fast(g);
        if j.len() as isize - nj.len() as isize != d {
            return violation(4, format!("witness {j} does not attain d(G) = {d}"));
        }
        if self.l != j.union(&nj) || self.lc != self.l.complement() {
            return violation(4, format!("L is not J ∪ N(J) for J = {j}"));
        }

        // clause 2: μ(L_G) = |N(J)| makes J a witness of α(L_G) + μ(L_G) = |L|
        let mu_l = matching_number(&self.l_graph.graph);
        if mu_l != nj.len() {
            return violation(2, format!("μ(L_G) = {mu_l} but |N(J)| = {}", nj.len()));
        }

        // clause 3: only the empty set is critical in L^c_G
        let lc = &self.lc_graph.graph;
        if critical_difference_fast(lc) != 0 || (0..lc.order()).any(|v| is_critical_vertex(lc, v)) {
            return violation(3, format!("G[L^c] = G[{}] is not 2-bicritical", self.lc));
        }

        if !self.boundary.is_subset(&nj) {
            return violation(4, format!("boundary {} escapes N(J)", self.boundary));
        }

        if g.order() <= caps.oracle.min(crate::exact::MASK_LIMIT) {
            let whole = IndependenceOracle::new(g, caps)?;
            let left = IndependenceOracle::new(&self.l_graph.graph, caps)?;
            let right = IndependenceOracle::new(lc, caps)?;
            if whole.alpha() != left.alpha() + right.alpha() {
                return violation(
                    1,
                    format!(
                        "α(G) = {} but α(L_G) + α(L^c_G) = {} + {}",
                        whole.alpha(),
                        left.alpha(),
                        right.alpha()
                    ),
                );
            }
            if left.alpha() + mu_l != self.l.len() {
                return violation(2, format!("G[{}] is not König–Egerváry", self.l));
            }
            if !right.is_2_bicritical() {
                return violation(3, format!("G[{}] has a nonempty independent set with |N(S)| <= |S|", self.lc));
            }
            let profile = whole.profile(caps);
            if j.len() != profile.max_critical_size() {
                return violation(4, format!("witness {j} is critical but not maximum"));
            }
            self.alpha_verified = true;
        }
        Ok(())
    }

    /// Recomputes `J ∪ N(J)` for every maximum critical independent set and
    /// compares it with `L`.
    pub fn verify_uniqueness(&self, g: &Graph, max_critical: &SetFamily) -> Result<()> {
        for j in max_critical {
            if g.closed_neighborhood(j)? != self.l {
                return Err(Error::LarsonViolation {
                    clause: 4,
                    detail: format!("J ∪ N(J) differs from L = {} for J = {j}", self.l),
                });
            }
        }
        Ok(())
    }

    /// `ker(G) = D(L_G)`, mapped back to `G`.
    pub fn ker(&self) -> VertexSet {
        self.l_graph.lift(&gallai_edmonds(&self.l_graph.graph).d)
    }

    /// Intersection (`nucleus`) and union (`diadem`) of all maximum critical
    /// independent sets, from the maximum independent sets of `L_G` that
    /// avoid the boundary.
    ///
    /// With `M` a maximum matching of the König–Egerváry graph `L_G`, those
    /// sets are exactly the independent sets holding every `M`-exposed
    /// vertex and one end of every `M`-edge, which is a 2-SAT instance.
    pub fn nucleus_and_diadem(&self) -> (VertexSet, VertexSet) {
        let h = &self.l_graph.graph;
        let m = max_matching(h);
        let boundary = self.l_graph.restrict(&self.boundary);
        let mut base = TwoSat::new(h.order());
        for v in 0..h.order() {
            let w = m.mate(v);
            if w == v {
                base.unit(Lit::pos(v));
            } else if v < w {
                base.clause(Lit::pos(v), Lit::pos(w));
            }
        }
        for (u, v) in h.edges() {
            base.clause(Lit::neg(u), Lit::neg(v));
        }
        for v in &boundary {
            base.unit(Lit::neg(v));
        }
        let mut nucleus = VertexSet::empty(h.order());
        let mut diadem = VertexSet::empty(h.order());
        for v in 0..h.order() {
            let mut probe = base.clone();
            probe.unit(Lit::neg(v));
            let avoidable = probe.satisfiable();
            let mut probe = base.clone();
            probe.unit(Lit::pos(v));
            let reachable = probe.satisfiable();
            if !avoidable {
                nucleus.insert(v);
            }
            if reachable {
                diadem.insert(v);
            }
        }
        (self.l_graph.lift(&nucleus), self.l_graph.lift(&diadem))
    }
}

/// The decomposition from the fast maximum critical independent set,
/// verified before it is returned.
pub fn larson(g: &Graph, caps: &Caps) -> Result<LarsonParts> {
    let mut parts = LarsonParts::from_witness(g, max_critical_independent_set_fast(g))?;
    parts.verify(g, caps)?;
    Ok(parts)
}

/// The decomposition from the oracle's lexicographically least maximum
/// critical independent set, verified and checked for uniqueness of `L`.
pub fn larson_oracle(g: &Graph, caps: &Caps) -> Result<LarsonParts> {
    let profile = IndependenceOracle::new(g, caps)?.profile(caps);
    let witness = profile
        .max_critical
        .iter()
        .min_by(|a, b| a.iter().cmp(b.iter()))
        .cloned()
        .unwrap_or_else(|| VertexSet::empty(g.order()));
    let mut parts = LarsonParts::from_witness(g, witness)?;
    parts.verify(g, caps)?;
    parts.verify_uniqueness(g, &profile.max_critical)?;
    Ok(parts)
}

/// `D`: vertices missed by some maximum matching; `A = N(D) - D`; `C`: the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiEdmondsParts {
    pub d: VertexSet,
    pub a: VertexSet,
    pub c: VertexSet,
}

/// One matching computation per vertex: `v ∈ D` iff `μ(G - v) = μ(G)`.
pub fn gallai_edmonds(g: &Graph) -> GallaiEdmondsParts {
    let n = g.order();
    let mu = matching_number(g);
    let mut d = VertexSet::empty(n);
    for v in 0..n {
        let mut one = VertexSet::empty(n);
        one.insert(v);
        let rest = g.without(&one).expect("same host");
        if matching_number(&rest.graph) == mu {
            d.insert(v);
        }
    }
    let a = g.neighborhood_unchecked(&d).difference(&d);
    let c = d.union(&a).complement();
    GallaiEdmondsParts { d, a, c }
}

/// `α(G) + μ(G) = n(G)`. Bipartite graphs are answered by König's theorem;
/// others need the independence oracle.
pub fn is_koenig_egervary(g: &Graph, caps: &Caps) -> Result<bool> {
    if g.is_bipartite() {
        return Ok(true);
    }
    let alpha = IndependenceOracle::new(g, caps)?.alpha();
    Ok(alpha + matching_number(g) == g.order())
}

/// König–Egerváry test in polynomial time: the graph is König–Egerváry
/// exactly when its Larson part `L(G)` is the whole vertex set.
pub fn is_koenig_egervary_fast(g: &Graph) -> bool {
    let j = max_critical_independent_set_fast(g);
    g.neighborhood_unchecked(&j).union(&j).len() == g.order()
}

/// 2-bicritical test in polynomial time: `L(G) = ∅`, i.e. the only critical
/// independent set is empty.
pub fn is_2_bicritical_fast(g: &Graph) -> bool {
    max_critical_independent_set_fast(g).is_empty()
}

/// Number of odd simple cycles, counted up to `limit`.
pub fn odd_cycle_count(g: &Graph, caps: &Caps, limit: usize) -> Result<usize> {
    if g.order() > caps.cycles {
        return Err(Error::cap("cycle enumeration", g.order(), caps.cycles));
    }
    if g.is_bipartite() {
        return Ok(0);
    }
    let n = g.order();
    let mut count = 0;
    let mut on_path = VertexSet::empty(n);
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        on_path.insert(start);
        path.push(start);
        walk(g, start, &mut path, &mut on_path, &mut count, limit);
        path.pop();
        on_path.remove(start);
        if count >= limit {
            break;
        }
    }
    Ok(count.min(limit))
}

/// Extends simple paths from `path[0]` through larger vertices only, so each
/// cycle is found from its smallest vertex, once per direction.
fn walk(g: &Graph, start: usize, path: &mut Vec<usize>, on: &mut VertexSet, count: &mut usize, limit: usize) {
    let last = *path.last().expect("nonempty path");
    for &w in g.neighbors(last) {
        if *count >= limit {
            return;
        }
        if w == start && path.len() >= 3 && path[1] < last {
            if path.len() % 2 == 1 {
                *count += 1;
            }
        } else if w > start && !on.contains(w) {
            on.insert(w);
            path.push(w);
            walk(g, start, path, on, count, limit);
            path.pop();
            on.remove(w);
        }
    }
}

/// Exactly one odd cycle, by enumerating cycles (bounded by [`Caps::cycles`]).
pub fn is_almost_bipartite_oracle(g: &Graph, caps: &Caps) -> Result<bool> {
    Ok(odd_cycle_count(g, caps, 2)? == 1)
}

/// Exactly one odd cycle.
///
/// Cycles live inside blocks, and a 2-connected non-bipartite block that is
/// not itself a cycle carries at least two odd cycles (an ear on an odd cycle
/// closes an odd cycle with one of the two arcs it spans). So the graph has a
/// unique odd cycle iff exactly one block is non-bipartite and that block is
/// an odd cycle.
pub fn is_almost_bipartite(g: &Graph) -> bool {
    let mut odd_blocks = 0;
    for block in blocks(g) {
        let mut vertices = VertexSet::empty(g.order());
        for &(u, v) in &block {
            vertices.insert(u);
            vertices.insert(v);
        }
        let h = g.induced_subgraph(&vertices).expect("same host");
        if !h.graph.is_bipartite() {
            if !is_odd_cycle(&h.graph) {
                return false;
            }
            odd_blocks += 1;
        }
    }
    odd_blocks == 1
}

/// Edge sets of the biconnected components (Hopcroft–Tarjan).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, v: usize, parent: usize) {
            self.time += 1;
            self.disc[v] = self.time;
            self.low[v] = self.time;
            for &w in self.g.neighbors(v) {
                if self.disc[w] == 0 {
                    self.stack.push((v, w));
                    self.visit(w, v);
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.disc[v] {
                        let mut block = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            block.push(e);
                            if e == (v, w) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if w != parent && self.disc[w] < self.disc[v] {
                    self.stack.push((v, w));
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
        }
    }
    let n = g.order();
    let mut dfs = Dfs {
        g,
        disc: alloc::vec![0; n],
        low: alloc::vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            dfs.visit(v, usize::MAX);
        }
    }
    dfs.out
}

/// Connected, 2-regular and of odd order.
pub fn is_odd_cycle(g: &Graph) -> bool {
    g.order() >= 3
        && g.order() % 2 == 1
        && (0..g.order()).all(|v| g.degree(v) == 2)
        && g.components().len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::generators::{complete, complete_bipartite, cycle, figure1, path, star};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn larson_fixtures() {
        let p = larson(&figure1(), &caps()).unwrap();
        assert_eq!(p.witness.to_vec(), [4]);
        assert_eq!(p.l.to_vec(), [3, 4]);
        assert_eq!(p.lc.to_vec(), [0, 1, 2]);
        assert_eq!(p.boundary.to_vec(), [3]);
        assert!(p.alpha_verified);

        let p = larson(&cycle(5).unwrap(), &caps()).unwrap();
        assert!(p.witness.is_empty() && p.l.is_empty() && p.boundary.is_empty());
        assert_eq!(p.lc.len(), 5);

        let p = larson(&cycle(4).unwrap(), &caps()).unwrap();
        assert_eq!(p.l.len(), 4);
        assert!(p.lc.is_empty() && p.boundary.is_empty());

        assert_eq!(larson_oracle(&figure1(), &caps()).unwrap(), larson(&figure1(), &caps()).unwrap());
    }

    #[test]
    fn larson_rejects_bad_witness() {
        let g = figure1();
        let mut p = LarsonParts::from_witness(&g, VertexSet::from_vertices(5, [3]).unwrap()).unwrap();
        assert!(matches!(p.verify(&g, &caps()), Err(Error::LarsonViolation { clause: 4, .. })));
        let mut p = LarsonParts::from_witness(&g, VertexSet::empty(5)).unwrap();
        assert!(matches!(p.verify(&g, &caps()), Err(Error::LarsonViolation { clause: 3, .. })));
    }

    #[test]
    fn gallai_edmonds_fixtures() {
        let ge = gallai_edmonds(&star(3));
        assert_eq!((ge.d.to_vec(), ge.a.to_vec(), ge.c.to_vec()), (vec![1, 2, 3], vec![0], vec![]));
        let ge = gallai_edmonds(&cycle(4).unwrap());
        assert_eq!(ge.c.len(), 4);
        let ge = gallai_edmonds(&cycle(5).unwrap());
        assert_eq!(ge.d.len(), 5);
    }

    #[test]
    fn koenig_egervary() {
        assert!(is_koenig_egervary(&cycle(4).unwrap(), &caps()).unwrap());
        assert!(!is_koenig_egervary(&figure1(), &caps()).unwrap());
        assert!(is_koenig_egervary(&complete_bipartite(3, 3), &caps()).unwrap());
        assert!(is_koenig_egervary_fast(&cycle(4).unwrap()));
        assert!(!is_koenig_egervary_fast(&figure1()));
    }

    #[test]
    fn two_bicritical_fast() {
        assert!(is_2_bicritical_fast(&cycle(5).unwrap()));
        assert!(!is_2_bicritical_fast(&cycle(4).unwrap()));
        assert!(is_2_bicritical_fast(&complete(3)));
    }

    #[test]
    fn almost_bipartite() {
        assert!(is_almost_bipartite(&figure1()));
        assert!(!is_almost_bipartite(&cycle(4).unwrap()));
        assert!(!is_almost_bipartite(&complete(4)));
        assert!(is_almost_bipartite_oracle(&figure1(), &caps()).unwrap());
        assert!(!is_almost_bipartite_oracle(&complete(4), &caps()).unwrap());
        assert_eq!(odd_cycle_count(&complete(4), &caps(), usize::MAX).unwrap(), 4);
        assert_eq!(odd_cycle_count(&complete(5), &caps(), usize::MAX).unwrap(), 10 + 12);
        assert!(is_odd_cycle(&cycle(5).unwrap()));
        assert!(!is_odd_cycle(&path(3)));
    }

    #[test]
    fn almost_bipartite_block_test_matches_cycle_enumeration() {
        for n in 0..=6 {
            for g in crate::generators::labeled_graphs(n).unwrap() {
                assert_eq!(is_almost_bipartite(&g), is_almost_bipartite_oracle(&g, &caps()).unwrap(), "{g:?}");
            }
        }
    }

    #[test]
    fn fast_ker_nucleus_diadem() {
        let p = larson(&figure1(), &caps()).unwrap();
        assert!(p.ker().is_empty());
        let (nucleus, diadem) = p.nucleus_and_diadem();
        assert_eq!((nucleus.to_vec(), diadem.to_vec()), (vec![4], vec![4]));

        let p = larson(&star(3), &caps()).unwrap();
        assert_eq!(p.ker().to_vec(), [1, 2, 3]);
        let p = larson(&cycle(4).unwrap(), &caps()).unwrap();
        let (nucleus, diadem) = p.nucleus_and_diadem();
        assert!(nucleus.is_empty());
        assert_eq!(diadem.len(), 4);
    }
}
