//! Exhaustive oracles for the independence and criticality families.
//!
//! Everything here enumerates subsets as 64-bit masks, so the oracle is
//! bounded by [`Caps::oracle`] (and never above 63 vertices). These routines
//! are the reference that the polynomial routines in [`crate::fast`] and the
//! decompositions are tested against.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{SetFamily, VertexSet};

/// Vertex-count limits for the exponential routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Independent-set enumeration (Ω, critical families).
    pub oracle: usize,
    /// `d(G)` as a maximum over all `2^n` subsets.
    pub all_subsets: usize,
    /// Enumeration of every maximum matching.
    pub matching_enumeration: usize,
    /// Simple-cycle enumeration.
    pub cycles: usize,
    /// Gallai–Edmonds clause checks quantified over matchings or subsets.
    pub gallai_edmonds_clauses: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            oracle: 20,
            all_subsets: 16,
            matching_enumeration: crate::matching::ENUMERATION_CAP,
            cycles: 12,
            gallai_edmonds_clauses: 12,
        }
    }
}

/// Hard ceiling imposed by the mask representation.
pub const MASK_LIMIT: usize = 63;

impl Caps {
    pub fn with_oracle(oracle: usize) -> Self {
        Caps {
            oracle,
            ..Caps::default()
        }
    }

    pub(crate) fn check_oracle(&self, n: usize) -> Result<()> {
        let cap = self.oracle.min(MASK_LIMIT);
        if n > cap {
            Err(Error::cap("independence oracle", n, cap))
        } else {
            Ok(())
        }
    }
}

/// `d(G)`, `d_I(G)` and the critical independent families of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityProfile {
    /// `max { |X| - |N(X)| : X ⊆ V }`, present when the graph is within
    /// [`Caps::all_subsets`].
    pub d: Option<isize>,
    /// `max { |I| - |N(I)| : I independent }`.
    pub d_independent: isize,
    /// Every independent set attaining `d_independent`.
    pub critical: SetFamily,
    /// The members of `critical` of largest cardinality.
    pub max_critical: SetFamily,
}

impl CriticalityProfile {
    /// The critical difference; the all-subsets value when it was computed.
    pub fn difference(&self) -> isize {
        self.d.unwrap_or(self.d_independent)
    }

    /// `d(G) = d_I(G)`, or `None` when `d(G)` was not computed.
    pub fn zhang_identity(&self) -> Option<bool> {
        self.d.map(|d| d == self.d_independent)
    }

    /// Intersection of all critical independent sets.
    pub fn ker(&self) -> VertexSet {
        self.critical.intersection()
    }

    /// Intersection of all maximum critical independent sets.
    pub fn nucleus(&self) -> VertexSet {
        self.max_critical.intersection()
    }

    /// Union of all critical independent sets.
    pub fn diadem(&self) -> VertexSet {
        self.critical.union()
    }

    /// Cardinality shared by the maximum critical independent sets.
    pub fn max_critical_size(&self) -> usize {
        self.max_critical.iter().next().map_or(0, VertexSet::len)
    }
}

/// Independent sets of one graph, enumerated once and kept as masks with
/// their neighborhoods.
#[derive(Clone, Debug)]
pub struct IndependenceOracle {
    n: usize,
    adj: Vec<u64>,
    sets: Vec<(u64, u64)>,
}

impl IndependenceOracle {
    pub fn new(g: &Graph, caps: &Caps) -> Result<Self> {
        caps.check_oracle(g.order())?;
        let n = g.order();
        let adj: Vec<u64> = (0..n).map(|v| g.adjacency_mask(v)).collect();
        let mut sets = Vec::new();
        // (set, its neighborhood, candidates still addable)
        let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        let mut stack = vec![(0u64, 0u64, all)];
        while let Some((set, nbhd, cand)) = stack.pop() {
            sets.push((set, nbhd));
            let mut c = cand;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                // only vertices above v remain candidates, which avoids repeats
                let above = c & !adj[v];
                stack.push((set | 1 << v, nbhd | adj[v], above));
            }
        }
        sets.sort_unstable();
        Ok(IndependenceOracle { n, adj, sets })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// All independent sets (including the empty set), ascending by mask.
    pub fn independent_sets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.sets.iter().map(move |&(s, _)| VertexSet::from_mask(self.n, s))
    }

    pub fn count(&self) -> usize {
        self.sets.len()
    }

    pub fn alpha(&self) -> usize {
        self.sets.iter().map(|&(s, _)| s.count_ones() as usize).max().unwrap_or(0)
    }

    /// Ω(G): every maximum independent set.
    pub fn omega(&self) -> SetFamily {
        let alpha = self.alpha() as u32;
        self.family(|s, _| s.count_ones() == alpha)
    }

    fn family(&self, keep: impl Fn(u64, u64) -> bool) -> SetFamily {
        let sets = self
            .sets
            .iter()
            .filter(|&&(s, nb)| keep(s, nb))
            .map(|&(s, _)| VertexSet::from_mask(self.n, s))
            .collect();
        SetFamily::new(self.n, sets)
    }

    fn diff(s: u64, nb: u64) -> isize {
        s.count_ones() as isize - nb.count_ones() as isize
    }

    /// `d(G)` over all `2^n` subsets, or `None` above `cap`.
    pub fn all_subsets_difference(&self, cap: usize) -> Option<isize> {
        if self.n > cap {
            return None;
        }
        let total = 1usize << self.n;
        let mut nbhd = vec![0u64; total];
        let mut best = 0isize;
        for mask in 1..total {
            let low = mask.trailing_zeros() as usize;
            nbhd[mask] = nbhd[mask & (mask - 1)] | self.adj[low];
            best = best.max(Self::diff(mask as u64, nbhd[mask]));
        }
        Some(best)
    }

    pub fn profile(&self, caps: &Caps) -> CriticalityProfile {
        let d_independent = self
            .sets
            .iter()
            .map(|&(s, nb)| Self::diff(s, nb))
            .max()
            .unwrap_or(0);
        let critical = self.family(|s, nb| Self::diff(s, nb) == d_independent);
        let top = critical.iter().map(VertexSet::len).max().unwrap_or(0);
        let max_critical = critical.filter(|s| s.len() == top);
        CriticalityProfile {
            d: self.all_subsets_difference(caps.all_subsets),
            d_independent,
            critical,
            max_critical,
        }
    }

    /// Every nonempty independent set `S` has `|N(S)| > |S|`.
    pub fn is_2_bicritical(&self) -> bool {
        self.sets
            .iter()
            .all(|&(s, nb)| s == 0 || nb.count_ones() > s.count_ones())
    }
}

pub fn independent_sets(g: &Graph, caps: &Caps) -> Result<Vec<VertexSet>> {
    Ok(IndependenceOracle::new(g, caps)?.independent_sets().collect())
}

pub fn alpha(g: &Graph, caps: &Caps) -> Result<usize> {
    Ok(IndependenceOracle::new(g, caps)?.alpha())
}

pub fn omega_family(g: &Graph, caps: &Caps) -> Result<SetFamily> {
    Ok(IndependenceOracle::new(g, caps)?.omega())
}

/// Intersection of all maximum independent sets.
pub fn core(g: &Graph, caps: &Caps) -> Result<VertexSet> {
    Ok(omega_family(g, caps)?.intersection())
}

/// Union of all maximum independent sets.
pub fn corona(g: &Graph, caps: &Caps) -> Result<VertexSet> {
    Ok(omega_family(g, caps)?.union())
}

pub fn critical_profile(g: &Graph, caps: &Caps) -> Result<CriticalityProfile> {
    Ok(IndependenceOracle::new(g, caps)?.profile(caps))
}

pub fn ker(g: &Graph, caps: &Caps) -> Result<VertexSet> {
    Ok(critical_profile(g, caps)?.ker())
}

pub fn nucleus(g: &Graph, caps: &Caps) -> Result<VertexSet> {
    Ok(critical_profile(g, caps)?.nucleus())
}

pub fn diadem(g: &Graph, caps: &Caps) -> Result<VertexSet> {
    Ok(critical_profile(g, caps)?.diadem())
}

/// `|N(S)| > |S|` for every nonempty independent `S`; vacuously true on the
/// order-0 graph.
pub fn is_2_bicritical_oracle(g: &Graph, caps: &Caps) -> Result<bool> {
    Ok(IndependenceOracle::new(g, caps)?.is_2_bicritical())
}
