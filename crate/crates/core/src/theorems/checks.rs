use alloc::vec;
use alloc::vec::Vec;

use super::{Analysis, Check, Counterexample, Outcome, Payload, TheoremVerdict, Value};
use crate::decomposition::{is_almost_bipartite, is_odd_cycle, larson};
use crate::error::Result;
use crate::fast::double_cover;
use crate::matching::{matching_number, maximum_matchings, sample_maximum_matchings, saturating_matching_exists, Matching};
use crate::set::{SetFamily, VertexSet};

const SAMPLED_MATCHINGS: usize = 16;
const SAMPLE_SEED: u64 = 0x6e5;

/// Accumulates the witness of a verdict.
pub(crate) struct Builder {
    id: &'static str,
    code: &'static str,
    sampled: bool,
    witness: Payload,
}

impl Builder {
    pub(crate) fn new(id: &'static str, code: &'static str) -> Self {
        Builder {
            id,
            code,
            sampled: false,
            witness: Vec::new(),
        }
    }

    pub(crate) fn with(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.witness.push((key, value.into()));
        self
    }

    pub(crate) fn sampled(mut self, sampled: bool) -> Self {
        self.sampled |= sampled;
        self
    }

    fn finish(self, outcome: Outcome, counterexample: Option<Counterexample>) -> TheoremVerdict {
        TheoremVerdict {
            id: self.id,
            code: self.code,
            outcome,
            sampled: self.sampled,
            witness: self.witness,
            counterexample,
        }
    }

    pub(crate) fn not_applicable(self) -> TheoremVerdict {
        self.finish(Outcome::NotApplicable, None)
    }

    /// Holds when `ok`; otherwise fails with the witness as the assignment.
    pub(crate) fn conclude(self, a: &Analysis<'_>, ok: bool) -> TheoremVerdict {
        if ok {
            self.finish(Outcome::Holds, None)
        } else {
            let assignment = self.witness.clone();
            self.fail(a, assignment)
        }
    }

    pub(crate) fn fail(self, a: &Analysis<'_>, assignment: Payload) -> TheoremVerdict {
        let counterexample = Counterexample {
            graph6: a.graph6(),
            assignment,
        };
        self.finish(Outcome::Fails, Some(counterexample))
    }
}

fn single(order: usize, v: usize) -> VertexSet {
    let mut s = VertexSet::empty(order);
    s.insert(v);
    s
}

/// `{ S ∈ Ω(L_G) : E(S, L^c) = ∅ }`, in host coordinates.
fn boundary_free_family(a: &Analysis<'_>) -> Result<SetFamily> {
    let lc = &a.parts()?.lc;
    let g = a.graph();
    Ok(a.omega_l()?.filter(|s| g.neighborhood_unchecked(s).is_disjoint(lc)))
}

fn two_bicritical(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let g = a.graph();
    let n = g.order();
    if n < 3 {
        return Ok(c.verdict().with("order", n).not_applicable());
    }
    let set_side = a.oracle()?.is_2_bicritical();
    let two_matching_side = (0..n).all(|v| {
        let rest = g.without(&single(n, v)).expect("same host");
        double_cover(&rest.graph).max_matching().size() == n - 1
    });
    let pair_side = (0..n).all(|u| {
        (u + 1..n).all(|v| {
            let mut pair = single(n, u);
            pair.insert(v);
            2 * matching_number(&g.without(&pair).expect("same host").graph) == n - 2
        })
    });
    let ok = set_side == two_matching_side && (!pair_side || set_side);
    Ok(c.verdict()
        .with("set_condition", set_side)
        .with("perfect_2_matchings_after_deletion", two_matching_side)
        .with("perfect_matchings_after_pair_deletion", pair_side)
        .conclude(a, ok))
}

fn core_critical(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let g = a.graph();
    let core = a.core()?;
    let d = a.profile()?.difference();
    let lhs = g.is_independent(&core)? && g.difference(&core)? == d;
    let core_lc = a.core_lc()?;
    let rhs = core_lc.is_empty();
    Ok(c.verdict()
        .with("core", &core)
        .with("d", d)
        .with("core_lc", core_lc)
        .with("core_critical", lhs)
        .with("core_lc_empty", rhs)
        .conclude(a, lhs == rhs))
}

fn larson_decomposition(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let owned;
    let parts = if a.order() <= a.caps().oracle {
        a.parts()?
    } else {
        owned = larson(a.graph(), a.caps())?;
        &owned
    };
    Ok(c.verdict()
        .with("J", &parts.witness)
        .with("L", &parts.l)
        .with("Lc", &parts.lc)
        .with("boundary", &parts.boundary)
        .with("alpha_verified", parts.alpha_verified)
        .sampled(!parts.alpha_verified)
        .conclude(a, true))
}

fn matching_into_critical(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let g = a.graph();
    let mu = a.mu();
    let critical = &a.profile()?.critical;
    for i in critical {
        let ni = g.neighborhood(i)?;
        let saturated = saturating_matching_exists(g, &ni, i)?;
        let rest = g.without(&i.union(&ni))?;
        let extends = matching_number(&rest.graph) + ni.len() == mu;
        if !saturated || !extends {
            let assignment = vec![
                ("I", Value::from(i)),
                ("N(I)", Value::from(&ni)),
                ("matches_into", Value::from(saturated)),
                ("extends_to_maximum", Value::from(extends)),
            ];
            return Ok(c.verdict().fail(a, assignment));
        }
    }
    Ok(c.verdict().with("critical_sets", critical.len()).conclude(a, true))
}

fn core_split(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let core = a.core()?;
    let l = &a.parts()?.l;
    let core_l = core.intersection(l);
    let core_lc = a.core_lc()?;
    let traced = a.omega()?.iter().fold(l.clone(), |acc, s| acc.intersection(&s.intersection(l)));
    let nucleus = a.profile()?.nucleus();
    let ok = core == core_lc.union(&core_l) && core_l == traced && core_l.is_subset(&nucleus);
    Ok(c.verdict()
        .with("core", &core)
        .with("core_lc", core_lc)
        .with("core_l", &core_l)
        .with("traced", &traced)
        .with("nucleus", &nucleus)
        .conclude(a, ok))
}

fn ker_is_d_of_l(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let ker = a.profile()?.ker();
    let d_l = &a.gallai_edmonds_l()?.d;
    Ok(c.verdict()
        .with("ker", &ker)
        .with("D(L)", d_l)
        .conclude(a, &ker == d_l))
}

/// Runs `body` on every maximum critical independent set and every maximum
/// matching of `L_G`; the first assignment it returns is a counterexample.
fn over_matchings(
    c: &Check,
    a: &Analysis<'_>,
    mut body: impl FnMut(&VertexSet, &Matching) -> Result<Option<Payload>>,
) -> Result<TheoremVerdict> {
    let (matchings, sampled) = a.l_matchings()?;
    let mcrit = &a.profile()?.max_critical;
    for i in mcrit {
        for m in matchings {
            if let Some(mut assignment) = body(i, m)? {
                assignment.insert(0, ("I", Value::from(i)));
                assignment.insert(1, ("M", Value::from(m)));
                return Ok(c.verdict().sampled(sampled).fail(a, assignment));
            }
        }
    }
    Ok(c.verdict()
        .with("max_critical_sets", mcrit.len())
        .with("matchings", matchings.len())
        .sampled(sampled)
        .conclude(a, true))
}

fn core_from_matchings(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let g = a.graph();
    let core = a.core()?;
    let corona = a.corona()?;
    let core_l = core.intersection(&a.parts()?.l);
    let core_lc = a.core_lc()?.clone();
    let d_l = a.gallai_edmonds_l()?.d.clone();
    let ker = a.profile()?.ker();
    over_matchings(c, a, |i, m| {
        let image = m.image(&g.neighborhood(i)?.difference(&corona))?;
        let local = image.union(&d_l);
        let global = core_lc.union(&image).union(&ker);
        Ok((core_l != local || core != global).then(|| {
            vec![
                ("core_l", Value::from(&core_l)),
                ("M(N(I) - corona) ∪ D(L)", Value::from(local)),
                ("core", Value::from(&core)),
                ("core_lc ∪ M(N(I) - corona) ∪ ker", Value::from(global)),
            ]
        }))
    })
}

fn ke_critical_maxima(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let g = a.graph();
    let ke = a.is_koenig_egervary()?;
    let d = a.profile()?.difference();
    let mut offender = None;
    for s in a.omega()? {
        if g.difference(s)? != d {
            offender = Some(s.clone());
            break;
        }
    }
    let builder = c.verdict().with("koenig_egervary", ke).with("d", d);
    let builder = match &offender {
        Some(s) => builder.with("non_critical_maximum", s),
        None => builder,
    };
    Ok(builder.conclude(a, ke == offender.is_none()))
}

fn ke_mcrit_is_omega(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    if !a.is_koenig_egervary()? {
        return Ok(c.verdict().with("koenig_egervary", false).not_applicable());
    }
    let mcrit = &a.profile()?.max_critical;
    let omega = a.omega()?;
    Ok(c.verdict()
        .with("max_critical", mcrit)
        .with("omega", omega)
        .conclude(a, mcrit == omega))
}

fn difference_of_l(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let d = a.profile()?.difference();
    let d_l = a.d_l()?;
    Ok(c.verdict().with("d", d).with("d(L)", d_l).conclude(a, d == d_l))
}

fn mcrit_from_l(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let family = boundary_free_family(a)?;
    let mcrit = &a.profile()?.max_critical;
    Ok(c.verdict()
        .with("max_critical", mcrit)
        .with("boundary_free_maxima_of_l", &family)
        .conclude(a, &family == mcrit))
}

fn nucleus_diadem_from_l(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let family = boundary_free_family(a)?;
    let profile = a.profile()?;
    let parts = a.parts()?;
    let nucleus = profile.nucleus();
    let diadem = profile.diadem();
    let corona_l = a.corona()?.intersection(&parts.l);
    let mcrit_union = profile.max_critical.union();
    let (fast_nucleus, fast_diadem) = parts.nucleus_and_diadem();
    let ok = nucleus == family.intersection()
        && diadem == family.union()
        && diadem.is_subset(&corona_l)
        && diadem == mcrit_union
        && fast_nucleus == nucleus
        && fast_diadem == diadem;
    Ok(c.verdict()
        .with("nucleus", &nucleus)
        .with("diadem", &diadem)
        .with("family_intersection", family.intersection())
        .with("family_union", family.union())
        .with("corona_l", &corona_l)
        .with("max_critical_union", &mcrit_union)
        .with("fast_nucleus", &fast_nucleus)
        .with("fast_diadem", &fast_diadem)
        .conclude(a, ok))
}

fn nucleus_lower_bound(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let g = a.graph();
    let outside = a.corona()?.difference(&a.parts()?.boundary);
    let ker = a.profile()?.ker();
    let nucleus = a.profile()?.nucleus();
    over_matchings(c, a, |i, m| {
        let bound = m.image(&g.neighborhood(i)?.difference(&outside))?.union(&ker);
        Ok((!bound.is_subset(&nucleus)).then(|| {
            vec![
                ("M(N(I) - (corona - boundary)) ∪ ker", Value::from(bound)),
                ("nucleus", Value::from(&nucleus)),
            ]
        }))
    })
}

fn ke_nucleus(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    if !a.is_koenig_egervary()? {
        return Ok(c.verdict().with("koenig_egervary", false).not_applicable());
    }
    let g = a.graph();
    let corona = a.corona()?;
    let ker = a.profile()?.ker();
    let nucleus = a.profile()?.nucleus();
    over_matchings(c, a, |i, m| {
        let formula = m.image(&g.neighborhood(i)?.difference(&corona))?.union(&ker);
        Ok((formula != nucleus).then(|| {
            vec![
                ("M(N(I) - corona) ∪ ker", Value::from(formula)),
                ("nucleus", Value::from(&nucleus)),
            ]
        }))
    })
}

fn boundary_free_corona(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let parts = a.parts()?;
    let corona = a.corona()?;
    let hit = corona.intersection(&parts.boundary);
    if !hit.is_empty() {
        return Ok(c.verdict().with("corona ∩ boundary", &hit).not_applicable());
    }
    let traces = SetFamily::new(
        a.order(),
        a.omega()?.iter().map(|t| t.intersection(&parts.l)).collect(),
    );
    let profile = a.profile()?;
    let core_l = a.core()?.intersection(&parts.l);
    let corona_l = corona.intersection(&parts.l);
    let nucleus = profile.nucleus();
    let diadem = profile.diadem();
    let ok = profile.max_critical == traces && nucleus == core_l && diadem == corona_l;
    Ok(c.verdict()
        .with("max_critical", &profile.max_critical)
        .with("traces_on_l", &traces)
        .with("nucleus", &nucleus)
        .with("core_l", &core_l)
        .with("diadem", &diadem)
        .with("corona_l", &corona_l)
        .conclude(a, ok))
}

fn core_equals_nucleus(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let core = a.core()?;
    let nucleus = a.profile()?.nucleus();
    let core_lc = a.core_lc()?;
    let hit = a.corona()?.intersection(&a.parts()?.boundary);
    let lhs = core == nucleus;
    let rhs = core_lc.is_empty() && hit.is_empty();
    Ok(c.verdict()
        .with("core", &core)
        .with("nucleus", &nucleus)
        .with("core_lc", core_lc)
        .with("corona ∩ boundary", &hit)
        .with("core_equals_nucleus", lhs)
        .with("condition", rhs)
        .conclude(a, lhs == rhs))
}

fn diadem_on_l(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let parts = a.parts()?;
    let corona = a.corona()?;
    let diadem = a.profile()?.diadem();
    let corona_l = corona.intersection(&parts.l);
    let hit = corona.intersection(&parts.boundary);
    let lhs = diadem == corona_l;
    Ok(c.verdict()
        .with("diadem", &diadem)
        .with("corona_l", &corona_l)
        .with("corona ∩ boundary", &hit)
        .conclude(a, lhs == hit.is_empty()))
}

fn core_equals_nucleus_by_diadem(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let core = a.core()?;
    let profile = a.profile()?;
    let nucleus = profile.nucleus();
    let diadem = profile.diadem();
    let corona_l = a.corona()?.intersection(&a.parts()?.l);
    let core_lc = a.core_lc()?;
    let lhs = core == nucleus;
    let rhs = core_lc.is_empty() && diadem == corona_l;
    Ok(c.verdict()
        .with("core", &core)
        .with("nucleus", &nucleus)
        .with("core_lc", core_lc)
        .with("diadem", &diadem)
        .with("corona_l", &corona_l)
        .conclude(a, lhs == rhs))
}

fn almost_bipartite(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let g = a.graph();
    if !is_almost_bipartite(g) {
        return Ok(c.verdict().with("almost_bipartite", false).not_applicable());
    }
    if a.is_koenig_egervary()? {
        return Ok(c.verdict().with("koenig_egervary", true).not_applicable());
    }
    let parts = a.parts()?;
    let ge_l = a.gallai_edmonds_l()?;
    let corona = a.corona()?;
    let l_bipartite = parts.l_graph.graph.is_bipartite();
    let lc_odd_cycle = is_odd_cycle(&parts.lc_graph.graph);
    let core_lc = a.core_lc()?;
    let d_boundary = ge_l.d.intersection(&parts.boundary);
    let a_corona = ge_l.a.intersection(&corona);
    let c_hit = ge_l.c.intersection(&corona).intersection(&parts.boundary);
    let core_is_nucleus = a.core()? == a.profile()?.nucleus();
    let ok = l_bipartite
        && lc_odd_cycle
        && core_lc.is_empty()
        && d_boundary.is_empty()
        && a_corona.is_empty()
        && core_is_nucleus == c_hit.is_empty();
    Ok(c.verdict()
        .with("l_bipartite", l_bipartite)
        .with("lc_odd_cycle", lc_odd_cycle)
        .with("core_lc", core_lc)
        .with("D(L) ∩ boundary", &d_boundary)
        .with("A(L) ∩ corona", &a_corona)
        .with("C(L) ∩ corona ∩ boundary", &c_hit)
        .with("core_equals_nucleus", core_is_nucleus)
        .conclude(a, ok))
}

fn diadem_corona(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let diadem = a.profile()?.diadem();
    let corona = a.corona()?;
    let ke = a.is_koenig_egervary()?;
    Ok(c.verdict()
        .with("diadem", &diadem)
        .with("corona", &corona)
        .with("koenig_egervary", ke)
        .conclude(a, (diadem == corona) == ke))
}

fn gallai_edmonds_structure(c: &Check, a: &Analysis<'_>) -> Result<TheoremVerdict> {
    let g = a.graph();
    let n = g.order();
    let cap = a.caps().gallai_edmonds_clauses;
    let ge = a.gallai_edmonds();
    let d_graph = g.induced_subgraph(&ge.d)?;
    let components: Vec<VertexSet> = d_graph.graph.components().iter().map(|s| d_graph.lift(s)).collect();
    let component_of = |v: usize| components.iter().position(|s| s.contains(v));
    let fail = |assignment: Payload| Ok(c.verdict().fail(a, assignment));

    // clause 2: components of G[D] are factor-critical
    for h in &components {
        let local = g.induced_subgraph(h)?.graph;
        let k = local.order();
        let critical = k % 2 == 1
            && (0..k).all(|v| {
                2 * matching_number(&local.without(&single(k, v)).expect("same host").graph) == k - 1
            });
        if !critical {
            return fail(vec![("component", Value::from(h)), ("factor_critical", Value::from(false))]);
        }
    }

    // clauses 1 and 2 for every maximum matching
    let (matchings, sampled_m) = if n <= cap {
        (maximum_matchings(g)?, false)
    } else {
        (sample_maximum_matchings(g, SAMPLED_MATCHINGS, SAMPLE_SEED), true)
    };
    for m in &matchings {
        let covers_c = ge.c.is_subset(&m.covered());
        let mut used = Vec::new();
        let mut a_into_d = true;
        for v in &ge.a {
            match component_of(m.mate(v)) {
                Some(k) if !m.is_exposed(v) && !used.contains(&k) => used.push(k),
                _ => a_into_d = false,
            }
        }
        let near_perfect = components.iter().all(|h| {
            let inside = h.iter().filter(|&v| !m.is_exposed(v) && h.contains(m.mate(v))).count();
            inside == h.len() - 1
        });
        if !(covers_c && a_into_d && near_perfect) {
            return fail(vec![
                ("M", Value::from(m)),
                ("covers_C", Value::from(covers_c)),
                ("matches_A_into_distinct_components", Value::from(a_into_d)),
                ("near_perfect_on_components", Value::from(near_perfect)),
            ]);
        }
    }

    // clause 3: every nonempty S ⊆ A touches at least |S| + 1 components
    let a_list = ge.a.to_vec();
    let subsets: Vec<VertexSet> = if a_list.len() <= cap {
        (1u64..1 << a_list.len())
            .map(|mask| {
                let mut s = VertexSet::empty(n);
                a_list.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).for_each(|(_, &v)| s.insert(v));
                s
            })
            .collect()
    } else {
        let mut s: Vec<VertexSet> = a_list.iter().map(|&v| single(n, v)).collect();
        s.push(ge.a.clone());
        s
    };
    let sampled_s = a_list.len() > cap;
    for s in &subsets {
        let nb = g.neighborhood(s)?;
        let touched = components.iter().filter(|h| !h.is_disjoint(&nb)).count();
        if touched < s.len() + 1 {
            return fail(vec![("S", Value::from(s)), ("components_touched", Value::from(touched))]);
        }
    }

    Ok(c.verdict()
        .with("D", &ge.d)
        .with("A", &ge.a)
        .with("C", &ge.c)
        .with("components", Value::Sets(components.clone()))
        .with("matchings", matchings.len())
        .sampled(sampled_m || sampled_s)
        .conclude(a, true))
}

macro_rules! check {
    ($id:literal, $code:literal, $statement:literal, $run:ident) => {
        Check {
            id: $id,
            code: $code,
            statement: $statement,
            run: $run,
        }
    };
}

pub(crate) static REGISTRY: &[Check] = &[
    check!(
        "two-bicritical",
        "T1.1",
        "|N(S)| > |S| for every nonempty independent S iff every G - v has a perfect 2-matching; \
         perfect matchings after every pair deletion imply it",
        two_bicritical
    ),
    check!(
        "core-critical",
        "T1.2",
        "core is a critical independent set iff core(L^c) is empty",
        core_critical
    ),
    check!(
        "larson-decomposition",
        "T3.1",
        "L = J ∪ N(J) for a maximum critical independent set J is König–Egerváry, \
         L^c is 2-bicritical, α is additive, and L does not depend on J",
        larson_decomposition
    ),
    check!(
        "matching-into-critical",
        "L3.3",
        "every critical independent set I has a maximum matching taking N(I) into I",
        matching_into_critical
    ),
    check!(
        "core-split",
        "L3.4",
        "core = core(L^c) ∪ (core ∩ L) and core ∩ L = ⋂ (S ∩ L) over Ω is inside the nucleus",
        core_split
    ),
    check!("ker-is-d-of-l", "T3.5", "ker = D(L_G)", ker_is_d_of_l),
    check!(
        "core-from-matchings",
        "L3.6/T3.7",
        "core ∩ L = M(N(I) - corona) ∪ D(L_G) and core = core(L^c) ∪ M(N(I) - corona) ∪ ker \
         for every maximum critical I and maximum matching M of L_G",
        core_from_matchings
    ),
    check!(
        "ke-critical-maxima",
        "T3.8",
        "König–Egerváry iff every maximum independent set is critical",
        ke_critical_maxima
    ),
    check!(
        "ke-mcrit-is-omega",
        "T3.9",
        "a König–Egerváry graph has exactly Ω as its maximum critical independent sets",
        ke_mcrit_is_omega
    ),
    check!("difference-of-l", "T3.10", "d(G) = d(L_G)", difference_of_l),
    check!(
        "mcrit-from-l",
        "T3.11",
        "the maximum critical independent sets are the S in Ω(L_G) with no edge to L^c",
        mcrit_from_l
    ),
    check!(
        "nucleus-diadem-from-l",
        "C3.12",
        "nucleus and diadem are the intersection and union of the boundary-free maxima of L_G, \
         inside corona ∩ L",
        nucleus_diadem_from_l
    ),
    check!(
        "nucleus-lower-bound",
        "T3.13",
        "M(N(I) - (corona - boundary)) ∪ ker ⊆ nucleus",
        nucleus_lower_bound
    ),
    check!(
        "ke-nucleus",
        "T3.14",
        "in a König–Egerváry graph nucleus = M(N(I) - corona) ∪ ker",
        ke_nucleus
    ),
    check!(
        "boundary-free-corona",
        "T3.15",
        "if corona misses the boundary, the maximum critical sets are the traces of Ω on L, \
         nucleus = core ∩ L and diadem = corona ∩ L",
        boundary_free_corona
    ),
    check!(
        "core-equals-nucleus",
        "T3.16",
        "core = nucleus iff core(L^c) and corona ∩ boundary are both empty",
        core_equals_nucleus
    ),
    check!(
        "diadem-on-l",
        "C3.17",
        "diadem = corona ∩ L iff corona ∩ boundary is empty",
        diadem_on_l
    ),
    check!(
        "core-equals-nucleus-by-diadem",
        "C3.18",
        "core = nucleus iff core(L^c) is empty and diadem = corona ∩ L",
        core_equals_nucleus_by_diadem
    ),
    check!(
        "almost-bipartite",
        "AB",
        "in an almost bipartite non-König–Egerváry graph L_G is bipartite, L^c is the odd cycle, \
         and core = nucleus iff C(L_G) ∩ corona ∩ boundary is empty",
        almost_bipartite
    ),
    check!(
        "diadem-corona",
        "KE",
        "diadem = corona iff the graph is König–Egerváry",
        diadem_corona
    ),
    check!(
        "gallai-edmonds-structure",
        "T2.1",
        "maximum matchings cover C and match A into distinct components of G[D], which are \
         factor-critical; every nonempty S ⊆ A touches at least |S| + 1 of them",
        gallai_edmonds_structure
    ),
];
