//! Maximum matchings, in general graphs (Edmonds' blossom search) and in
//! bipartite graphs (Hopcroft–Karp), plus exhaustive enumeration of all
//! maximum matchings for small graphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

const NONE: usize = usize::MAX;

/// Largest order accepted by [`maximum_matchings`].
pub const ENUMERATION_CAP: usize = 14;

/// A matching viewed as an involution on the vertex set: `mate(v) == u` when
/// `uv` is matched and `mate(v) == v` when `v` is exposed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    pub fn empty(order: usize) -> Self {
        Matching {
            mate: (0..order).collect(),
        }
    }

    /// Builds a matching of `g` from its edges.
    pub fn from_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Self> {
        let mut m = Matching::empty(g.order());
        for &(u, v) in edges {
            if u >= g.order() || v >= g.order() {
                return Err(Error::VertexOutOfRange { u, v, n: g.order() });
            }
            if !g.has_edge(u, v) || m.mate[u] != u || m.mate[v] != v {
                return Err(Error::BadArgument(alloc::format!(
                    "({u}, {v}) cannot extend the matching"
                )));
            }
            m.mate[u] = v;
            m.mate[v] = u;
        }
        Ok(m)
    }

    fn from_mates(mate: Vec<usize>) -> Self {
        let mate = mate
            .into_iter()
            .enumerate()
            .map(|(v, m)| if m == NONE { v } else { m })
            .collect();
        Matching { mate }
    }

    pub fn order(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, v: usize) -> usize {
        self.mate[v]
    }

    pub fn is_exposed(&self, v: usize) -> bool {
        self.mate[v] == v
    }

    /// Number of matched edges.
    pub fn size(&self) -> usize {
        self.mate.iter().enumerate().filter(|&(v, &m)| m != v).count() / 2
    }

    /// Matched edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m > v)
            .map(|(v, &m)| (v, m))
            .collect()
    }

    /// Vertices covered by the matching.
    pub fn covered(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.order());
        for (v, &m) in self.mate.iter().enumerate() {
            if m != v {
                s.insert(v);
            }
        }
        s
    }

    /// `M(S) = { M(v) : v ∈ S }`.
    pub fn image(&self, s: &VertexSet) -> Result<VertexSet> {
        s.check_host(self.order())?;
        let mut out = VertexSet::empty(self.order());
        for v in s {
            out.insert(self.mate[v]);
        }
        Ok(out)
    }

    /// True when this is an involution whose non-fixed pairs are edges of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.order() == g.order()
            && self
                .mate
                .iter()
                .enumerate()
                .all(|(v, &m)| m < self.order() && self.mate[m] == v && (m == v || g.has_edge(v, m)))
    }

    /// The matching of a host graph obtained from a matching of an induced
    /// subgraph, `map[i]` being the host id of local vertex `i`.
    pub fn lift(&self, map: &[usize], order: usize) -> Matching {
        let mut m = Matching::empty(order);
        for (v, &w) in self.mate.iter().enumerate() {
            m.mate[map[v]] = map[w];
        }
        m
    }
}

impl core::fmt::Debug for Matching {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.edges()).finish()
    }
}

/// A maximum matching of `g`.
///
/// Augmenting paths are searched from each exposed vertex in increasing id
/// order with Edmonds' blossom contraction, so the result is a fixed
/// function of the graph.
pub fn max_matching(g: &Graph) -> Matching {
    let mut search = Blossom::new(g);
    for root in 0..g.order() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_path(root) {
                search.augment(end);
            }
        }
    }
    Matching::from_mates(search.mate)
}

pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).size()
}

/// `n(G) - 2μ(G)`, the number of vertices every maximum matching misses.
pub fn deficiency(g: &Graph) -> usize {
    g.order() - 2 * matching_number(g)
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating paths from `root`; returns the exposed endpoint
    /// of an augmenting path, with the path recorded in `parent`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// Hopcroft–Karp over an explicit left side. `adj[i]` lists the host ids of
/// the right-side neighbors of `left[i]`. Returns host-indexed mates.
fn hopcroft_karp(order: usize, left: &[usize], adj: &[Vec<usize>]) -> Vec<usize> {
    let mut mate = vec![NONE; order];
    let mut slot = vec![NONE; order];
    for (i, &v) in left.iter().enumerate() {
        slot[v] = i;
    }
    let mut dist = vec![usize::MAX; left.len()];
    loop {
        // layer the free left vertices
        let mut queue = VecDeque::new();
        for (i, &v) in left.iter().enumerate() {
            if mate[v] == NONE {
                dist[i] = 0;
                queue.push_back(i);
            } else {
                dist[i] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(i) = queue.pop_front() {
            for &w in &adj[i] {
                match mate[w] {
                    NONE => found = true,
                    u => {
                        let j = slot[u];
                        if dist[j] == usize::MAX {
                            dist[j] = dist[i] + 1;
                            queue.push_back(j);
                        }
                    }
                }
            }
        }
        if !found {
            return mate;
        }
        for i in 0..left.len() {
            if mate[left[i]] == NONE {
                hk_augment(i, left, adj, &slot, &mut dist, &mut mate);
            }
        }
    }
}

fn hk_augment(
    i: usize,
    left: &[usize],
    adj: &[Vec<usize>],
    slot: &[usize],
    dist: &mut [usize],
    mate: &mut [usize],
) -> bool {
    for &w in &adj[i] {
        let ok = match mate[w] {
            NONE => true,
            u => {
                let j = slot[u];
                dist[j] == dist[i] + 1 && hk_augment(j, left, adj, slot, dist, mate)
            }
        };
        if ok {
            mate[w] = left[i];
            mate[left[i]] = w;
            return true;
        }
    }
    dist[i] = usize::MAX;
    false
}

/// A maximum matching of a bipartite graph with the given sides.
pub fn max_bipartite_matching(g: &Graph, left: &VertexSet, right: &VertexSet) -> Result<Matching> {
    left.check_host(g.order())?;
    right.check_host(g.order())?;
    if !left.is_disjoint(right) || left.union(right) != g.vertices() {
        return Err(Error::BadPartition);
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| left.contains(u) == left.contains(v)) {
        return Err(Error::NotBipartite(u, v));
    }
    let l = left.to_vec();
    let adj: Vec<Vec<usize>> = l.iter().map(|&v| g.neighbors(v).to_vec()).collect();
    Ok(Matching::from_mates(hopcroft_karp(g.order(), &l, &adj)))
}

/// Whether some matching saturates `from` using only edges of `E(from, into)`.
pub fn saturating_matching_exists(g: &Graph, from: &VertexSet, into: &VertexSet) -> Result<bool> {
    from.check_host(g.order())?;
    into.check_host(g.order())?;
    if !from.is_disjoint(into) {
        return Err(Error::Overlap);
    }
    let l = from.to_vec();
    let adj: Vec<Vec<usize>> = l
        .iter()
        .map(|&v| g.neighbors(v).iter().copied().filter(|&w| into.contains(w)).collect())
        .collect();
    let mate = hopcroft_karp(g.order(), &l, &adj);
    Ok(l.iter().all(|&v| mate[v] != NONE))
}

/// Every maximum matching of `g`, once each, in lexicographic order of the
/// mate vectors with exposure sorting first.
pub fn maximum_matchings(g: &Graph) -> Result<Vec<Matching>> {
    if g.order() > ENUMERATION_CAP {
        return Err(Error::cap("maximum matching enumeration", g.order(), ENUMERATION_CAP));
    }
    let mu = matching_number(g);
    let mut state = Enumeration {
        g,
        target: mu,
        exposed_budget: g.order() - 2 * mu,
        mate: vec![NONE; g.order()],
        out: Vec::new(),
    };
    state.branch(0, 0, 0);
    Ok(state.out)
}

/// Up to `count` distinct maximum matchings, each found by running the
/// blossom search on a seeded random relabeling of `g`.
pub fn sample_maximum_matchings(g: &Graph, count: usize, seed: u64) -> Vec<Matching> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    let n = g.order();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = alloc::vec![max_matching(g)];
    let mut perm: Vec<usize> = (0..n).collect();
    for _ in 1..count {
        perm.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let shuffled = Graph::new(n, &edges).expect("relabeling preserves validity");
        let m = max_matching(&shuffled);
        let mut inverse = alloc::vec![0; n];
        for (v, &p) in perm.iter().enumerate() {
            inverse[p] = v;
        }
        let back = m.lift(&inverse, n);
        if !out.contains(&back) {
            out.push(back);
        }
    }
    out
}

struct Enumeration<'g> {
    g: &'g Graph,
    target: usize,
    exposed_budget: usize,
    mate: Vec<usize>,
    out: Vec<Matching>,
}

impl Enumeration<'_> {
    fn branch(&mut self, v: usize, size: usize, exposed: usize) {
        let n = self.g.order();
        let mut v = v;
        while v < n && self.mate[v] != NONE {
            v += 1;
        }
        if v == n {
            if size == self.target {
                self.out.push(Matching::from_mates(self.mate.clone()));
            }
            return;
        }
        let free = (v..n).filter(|&w| self.mate[w] == NONE).count();
        if size + free / 2 < self.target {
            return;
        }
        if exposed < self.exposed_budget {
            self.mate[v] = v;
            self.branch(v + 1, size, exposed + 1);
            self.mate[v] = NONE;
        }
        for i in 0..self.g.neighbors(v).len() {
            let u = self.g.neighbors(v)[i];
            if u > v && self.mate[u] == NONE {
                self.mate[v] = u;
                self.mate[u] = v;
                self.branch(v + 1, size + 1, exposed);
                self.mate[v] = NONE;
                self.mate[u] = NONE;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn set(order: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(order, vs.iter().copied()).unwrap()
    }

    /// Largest matching found by trying every subset of the edge list.
    fn brute_force_mu(g: &Graph) -> usize {
        let edges: Vec<_> = g.edges().collect();
        let mut best = 0;
        for mask in 0u32..(1 << edges.len()) {
            let mut used = 0u64;
            let mut ok = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if used >> u & 1 == 1 || used >> v & 1 == 1 {
                        ok = false;
                        break;
                    }
                    used |= 1 << u | 1 << v;
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn fixtures() {
        assert_eq!(matching_number(&generators::cycle(4).unwrap()), 2);
        assert_eq!(matching_number(&generators::figure1()), 2);
        assert_eq!(matching_number(&generators::cycle(5).unwrap()), 2);
        assert_eq!(matching_number(&generators::complete(1)), 0);
        assert_eq!(matching_number(&generators::star(3)), 1);
        assert_eq!(matching_number(&generators::complete_bipartite(3, 3)), 3);
        assert_eq!(brute_force_mu(&generators::figure1()), 2);
        assert_eq!(deficiency(&generators::cycle(5).unwrap()), 1);
    }

    #[test]
    fn blossom_agrees_with_brute_force_on_all_graphs_up_to_six() {
        for n in 0..=6 {
            for g in generators::labeled_graphs(n).unwrap() {
                let m = max_matching(&g);
                assert!(m.is_valid_for(&g));
                assert_eq!(m.size(), brute_force_mu(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn bipartite_matching() {
        let k33 = generators::complete_bipartite(3, 3);
        let m = max_bipartite_matching(&k33, &set(6, &[0, 1, 2]), &set(6, &[3, 4, 5])).unwrap();
        assert_eq!(m.size(), 3);
        assert!(m.is_valid_for(&k33));

        let empty = Graph::empty(4);
        let m = max_bipartite_matching(&empty, &set(4, &[0, 1]), &set(4, &[2, 3])).unwrap();
        assert_eq!(m.size(), 0);

        let p3 = generators::path(3);
        assert_eq!(
            max_bipartite_matching(&p3, &set(3, &[0, 1]), &set(3, &[2])),
            Err(Error::NotBipartite(0, 1))
        );
        assert_eq!(
            max_bipartite_matching(&p3, &set(3, &[1]), &set(3, &[2])),
            Err(Error::BadPartition)
        );
    }

    #[test]
    fn image_of_sets() {
        let g = generators::path(2);
        let m = Matching::from_edges(&g, &[(0, 1)]).unwrap();
        assert_eq!(m.image(&set(2, &[0])).unwrap().to_vec(), vec![1]);
        assert!(m.image(&VertexSet::empty(2)).unwrap().is_empty());
        let none = Matching::empty(3);
        assert_eq!(none.image(&set(3, &[0, 1])).unwrap().to_vec(), vec![0, 1]);
        assert!(none.image(&set(2, &[0])).is_err());
    }

    #[test]
    fn enumerates_all_maximum_matchings() {
        assert_eq!(maximum_matchings(&generators::path(3)).unwrap().len(), 2);
        assert_eq!(maximum_matchings(&generators::cycle(4).unwrap()).unwrap().len(), 2);
        let k1 = maximum_matchings(&generators::complete(1)).unwrap();
        assert_eq!(k1, vec![Matching::empty(1)]);
        // K6 has 5!! = 15 perfect matchings, C5 has 5 near-perfect ones
        assert_eq!(maximum_matchings(&generators::complete(6)).unwrap().len(), 15);
        assert_eq!(maximum_matchings(&generators::cycle(5).unwrap()).unwrap().len(), 5);
        assert!(maximum_matchings(&generators::path(15)).unwrap_err().is_cap());
    }

    #[test]
    fn sampled_matchings_are_maximum() {
        let g = generators::complete(6);
        let sample = sample_maximum_matchings(&g, 8, 3);
        assert!(sample.len() > 1);
        for m in &sample {
            assert!(m.is_valid_for(&g));
            assert_eq!(m.size(), 3);
        }
    }

    #[test]
    fn saturation() {
        let g = generators::figure1();
        assert!(saturating_matching_exists(&g, &set(5, &[3]), &set(5, &[4])).unwrap());
        let s = generators::star(3);
        assert!(!saturating_matching_exists(&s, &set(4, &[1, 2, 3]), &set(4, &[0])).unwrap());
        assert!(saturating_matching_exists(&s, &VertexSet::empty(4), &set(4, &[0])).unwrap());
        assert_eq!(
            saturating_matching_exists(&s, &set(4, &[0]), &set(4, &[0])),
            Err(Error::Overlap)
        );
    }
}
