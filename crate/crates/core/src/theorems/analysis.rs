use alloc::string::String;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::decomposition::{gallai_edmonds, larson, GallaiEdmondsParts, LarsonParts};
use crate::error::Result;
use crate::exact::{Caps, CriticalityProfile, IndependenceOracle};
use crate::graph::Graph;
use crate::graph6;
use crate::matching::{matching_number, maximum_matchings, sample_maximum_matchings, Matching};
use crate::set::{SetFamily, VertexSet};

/// Matchings drawn per graph when full enumeration is over the cap.
const SAMPLED_MATCHINGS: usize = 16;
const SAMPLE_SEED: u64 = 0x5eed;

fn cached<T>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

/// Lazily computed invariants of one graph shared by all checks. Sets are
/// always in the coordinates of the analysed graph.
pub struct Analysis<'g> {
    graph: &'g Graph,
    caps: Caps,
    graph6: OnceCell<String>,
    oracle: OnceCell<IndependenceOracle>,
    omega: OnceCell<SetFamily>,
    profile: OnceCell<CriticalityProfile>,
    mu: OnceCell<usize>,
    parts: OnceCell<LarsonParts>,
    l_profile: OnceCell<(SetFamily, CriticalityProfile)>,
    core_lc: OnceCell<VertexSet>,
    ge: OnceCell<GallaiEdmondsParts>,
    ge_l: OnceCell<GallaiEdmondsParts>,
    l_matchings: OnceCell<(Vec<Matching>, bool)>,
}

impl<'g> Analysis<'g> {
    pub fn new(graph: &'g Graph, caps: Caps) -> Self {
        Analysis {
            graph,
            caps,
            graph6: OnceCell::new(),
            oracle: OnceCell::new(),
            omega: OnceCell::new(),
            profile: OnceCell::new(),
            mu: OnceCell::new(),
            parts: OnceCell::new(),
            l_profile: OnceCell::new(),
            core_lc: OnceCell::new(),
            ge: OnceCell::new(),
            ge_l: OnceCell::new(),
            l_matchings: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn graph6(&self) -> String {
        self.graph6.get_or_init(|| graph6::encode(self.graph)).clone()
    }

    pub fn oracle(&self) -> Result<&IndependenceOracle> {
        cached(&self.oracle, || IndependenceOracle::new(self.graph, &self.caps))
    }

    /// Ω(G).
    pub fn omega(&self) -> Result<&SetFamily> {
        cached(&self.omega, || Ok(self.oracle()?.omega()))
    }

    pub fn alpha(&self) -> Result<usize> {
        Ok(self.oracle()?.alpha())
    }

    pub fn core(&self) -> Result<VertexSet> {
        Ok(self.omega()?.intersection())
    }

    pub fn corona(&self) -> Result<VertexSet> {
        Ok(self.omega()?.union())
    }

    pub fn profile(&self) -> Result<&CriticalityProfile> {
        cached(&self.profile, || Ok(self.oracle()?.profile(&self.caps)))
    }

    pub fn mu(&self) -> usize {
        *self.mu.get_or_init(|| matching_number(self.graph))
    }

    /// König–Egerváry by the oracle: `α + μ = n`.
    pub fn is_koenig_egervary(&self) -> Result<bool> {
        Ok(self.alpha()? + self.mu() == self.order())
    }

    /// The verified decomposition, also checked for uniqueness of `L` against
    /// every maximum critical independent set of the oracle.
    pub fn parts(&self) -> Result<&LarsonParts> {
        cached(&self.parts, || {
            let parts = larson(self.graph, &self.caps)?;
            parts.verify_uniqueness(self.graph, &self.profile()?.max_critical)?;
            Ok(parts)
        })
    }

    /// Ω(L_G) and the criticality profile of `L_G`, in host coordinates
    /// (the profile itself stays local).
    fn l_profile(&self) -> Result<&(SetFamily, CriticalityProfile)> {
        cached(&self.l_profile, || {
            let parts = self.parts()?;
            let oracle = IndependenceOracle::new(&parts.l_graph.graph, &self.caps)?;
            let omega = oracle.omega().lift(&parts.l_graph.map, self.order());
            Ok((omega, oracle.profile(&self.caps)))
        })
    }

    pub fn omega_l(&self) -> Result<&SetFamily> {
        Ok(&self.l_profile()?.0)
    }

    /// `d(L_G)` by the oracle.
    pub fn d_l(&self) -> Result<isize> {
        Ok(self.l_profile()?.1.difference())
    }

    /// core(L^c_G), lifted.
    pub fn core_lc(&self) -> Result<&VertexSet> {
        cached(&self.core_lc, || {
            let lc = &self.parts()?.lc_graph;
            let core = IndependenceOracle::new(&lc.graph, &self.caps)?.omega().intersection();
            Ok(lc.lift(&core))
        })
    }

    pub fn gallai_edmonds(&self) -> &GallaiEdmondsParts {
        self.ge.get_or_init(|| gallai_edmonds(self.graph))
    }

    /// Gallai–Edmonds parts of `L_G`, lifted.
    pub fn gallai_edmonds_l(&self) -> Result<&GallaiEdmondsParts> {
        cached(&self.ge_l, || {
            let l = &self.parts()?.l_graph;
            let ge = gallai_edmonds(&l.graph);
            Ok(GallaiEdmondsParts {
                d: l.lift(&ge.d),
                a: l.lift(&ge.a),
                c: l.lift(&ge.c),
            })
        })
    }

    /// Maximum matchings of `L_G` lifted to `G`, and whether they are only a
    /// sample of all of them.
    pub fn l_matchings(&self) -> Result<(&[Matching], bool)> {
        let (ms, sampled) = cached(&self.l_matchings, || {
            let l = &self.parts()?.l_graph;
            let local = &l.graph;
            let (ms, sampled) = if local.order() <= self.caps.matching_enumeration {
                (maximum_matchings(local)?, false)
            } else {
                (sample_maximum_matchings(local, SAMPLED_MATCHINGS, SAMPLE_SEED), true)
            };
            let lifted = ms.iter().map(|m| m.lift(&l.map, self.order())).collect();
            Ok((lifted, sampled))
        })?;
        Ok((ms, *sampled))
    }
}
