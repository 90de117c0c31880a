//! JSON shapes of the `analyze` and `check` commands.

use std::collections::BTreeMap;
use std::time::Instant;

use indeplab_core::decomposition::{
    is_2_bicritical_fast, is_koenig_egervary_fast, larson, larson_oracle, LarsonParts,
};
use indeplab_core::exact::IndependenceOracle;
use indeplab_core::fast::critical_difference_fast;
use indeplab_core::matching::{deficiency, matching_number};
use indeplab_core::theorems::{Analysis, Check, Outcome, TheoremVerdict, Value};
use indeplab_core::{gallai_edmonds, graph6, Caps, Graph, VertexSet};
use serde::Serialize;
use serde_json::{json, Map};

use crate::error::{CliError, Result};

/// Which routes `analyze` runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tiers {
    /// Both routes, cross-checked; the default.
    Both,
    /// Exhaustive oracles wherever they exist.
    Oracle,
    /// Polynomial routes, with the oracle only for fields that have no other.
    Fast,
    /// Polynomial routes only; oracle-only fields are left null.
    FastOnly,
}

#[derive(Serialize)]
pub struct LarsonJson {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "L")]
    pub l: Vec<usize>,
    #[serde(rename = "Lc")]
    pub lc: Vec<usize>,
    pub boundary: Vec<usize>,
}

#[derive(Serialize)]
pub struct GallaiEdmondsJson {
    #[serde(rename = "D")]
    pub d: Vec<usize>,
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "C")]
    pub c: Vec<usize>,
}

/// Every invariant of one graph. Fields that were not computed are null.
#[derive(Serialize)]
pub struct InvariantReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha: Option<usize>,
    pub mu: usize,
    pub deficiency: usize,
    pub d: isize,
    #[serde(rename = "is_KE")]
    pub is_ke: bool,
    pub is_2bicritical: bool,
    pub core: Option<Vec<usize>>,
    pub corona: Option<Vec<usize>>,
    pub ker: Vec<usize>,
    pub nucleus: Vec<usize>,
    pub diadem: Vec<usize>,
    pub larson: LarsonJson,
    pub gallai_edmonds: GallaiEdmondsJson,
    /// How each field was obtained: `exact` (polynomial and exact by
    /// definition), `oracle`, `fast`, `oracle+fast` (both, and they agreed)
    /// or `unavailable`.
    pub tiers: BTreeMap<&'static str, &'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

struct Fast {
    d: isize,
    ke: bool,
    bicritical: bool,
    parts: LarsonParts,
    ker: VertexSet,
    nucleus: VertexSet,
    diadem: VertexSet,
}

struct Oracle {
    alpha: usize,
    d: isize,
    ke: bool,
    bicritical: bool,
    core: VertexSet,
    corona: VertexSet,
    ker: VertexSet,
    nucleus: VertexSet,
    diadem: VertexSet,
    parts: LarsonParts,
}

fn fast(g: &Graph, caps: &Caps) -> Result<Fast> {
    let parts = larson(g, caps)?;
    let (nucleus, diadem) = parts.nucleus_and_diadem();
    Ok(Fast {
        d: critical_difference_fast(g),
        ke: is_koenig_egervary_fast(g),
        bicritical: is_2_bicritical_fast(g),
        ker: parts.ker(),
        parts,
        nucleus,
        diadem,
    })
}

fn oracle(g: &Graph, caps: &Caps, mu: usize) -> Result<Oracle> {
    let o = IndependenceOracle::new(g, caps)?;
    let omega = o.omega();
    let profile = o.profile(caps);
    Ok(Oracle {
        alpha: o.alpha(),
        d: profile.difference(),
        ke: o.alpha() + mu == g.order(),
        bicritical: o.is_2_bicritical(),
        core: omega.intersection(),
        corona: omega.union(),
        ker: profile.ker(),
        nucleus: profile.nucleus(),
        diadem: profile.diadem(),
        parts: larson_oracle(g, caps)?,
    })
}

fn agree<T: PartialEq + std::fmt::Debug>(field: &str, oracle: &T, fast: &T) -> Result<()> {
    if oracle == fast {
        Ok(())
    } else {
        Err(CliError::Inconsistent(format!("{field}: oracle gives {oracle:?}, fast gives {fast:?}")))
    }
}

pub fn analyze(g: &Graph, caps: &Caps, tiers: Tiers, timings: bool) -> Result<InvariantReport> {
    let start = Instant::now();
    let mu = matching_number(g);
    let fast = match tiers {
        Tiers::Oracle => None,
        _ => Some(fast(g, caps)?),
    };
    let oracle = match tiers {
        Tiers::FastOnly => None,
        _ => Some(oracle(g, caps, mu)?),
    };
    if let (Some(o), Some(f)) = (&oracle, &fast) {
        agree("d", &o.d, &f.d)?;
        agree("is_KE", &o.ke, &f.ke)?;
        agree("is_2bicritical", &o.bicritical, &f.bicritical)?;
        agree("ker", &o.ker, &f.ker)?;
        agree("nucleus", &o.nucleus, &f.nucleus)?;
        agree("diadem", &o.diadem, &f.diadem)?;
        agree("L", &o.parts.l, &f.parts.l)?;
    }

    let mut tier = BTreeMap::new();
    let dual = match tiers {
        Tiers::Both => "oracle+fast",
        Tiers::Oracle => "oracle",
        Tiers::Fast | Tiers::FastOnly => "fast",
    };
    for field in ["d", "is_KE", "is_2bicritical", "ker", "nucleus", "diadem", "larson"] {
        tier.insert(field, dual);
    }
    let oracle_only = if oracle.is_some() { "oracle" } else { "unavailable" };
    for field in ["alpha", "core", "corona"] {
        tier.insert(field, oracle_only);
    }
    for field in ["n", "m", "mu", "deficiency", "gallai_edmonds"] {
        tier.insert(field, "exact");
    }

    // with both routes present they agree, so either one can be reported
    let pick = |f: fn(&Fast) -> VertexSet, o: fn(&Oracle) -> VertexSet| {
        fast.as_ref().map(f).or_else(|| oracle.as_ref().map(o)).expect("one tier runs")
    };
    let parts = fast.as_ref().map(|f| &f.parts).or(oracle.as_ref().map(|o| &o.parts)).expect("one tier runs");
    let ge = gallai_edmonds(g);
    Ok(InvariantReport {
        graph6: graph6::encode(g),
        n: g.order(),
        m: g.size(),
        alpha: oracle.as_ref().map(|o| o.alpha),
        mu,
        deficiency: deficiency(g),
        d: fast.as_ref().map_or_else(|| oracle.as_ref().expect("one tier runs").d, |f| f.d),
        is_ke: fast.as_ref().map_or_else(|| oracle.as_ref().expect("one tier runs").ke, |f| f.ke),
        is_2bicritical: fast
            .as_ref()
            .map_or_else(|| oracle.as_ref().expect("one tier runs").bicritical, |f| f.bicritical),
        core: oracle.as_ref().map(|o| o.core.to_vec()),
        corona: oracle.as_ref().map(|o| o.corona.to_vec()),
        ker: pick(|f| f.ker.clone(), |o| o.ker.clone()).to_vec(),
        nucleus: pick(|f| f.nucleus.clone(), |o| o.nucleus.clone()).to_vec(),
        diadem: pick(|f| f.diadem.clone(), |o| o.diadem.clone()).to_vec(),
        larson: LarsonJson {
            j: parts.witness.to_vec(),
            l: parts.l.to_vec(),
            lc: parts.lc.to_vec(),
            boundary: parts.boundary.to_vec(),
        },
        gallai_edmonds: GallaiEdmondsJson {
            d: ge.d.to_vec(),
            a: ge.a.to_vec(),
            c: ge.c.to_vec(),
        },
        tiers: tier,
        timing_ms: timings.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

pub fn value_json(value: &Value) -> serde_json::Value {
    match value {
        Value::Bool(b) => json!(b),
        Value::Int(i) => json!(i),
        Value::Set(s) => json!(s.to_vec()),
        Value::Sets(f) => json!(f.iter().map(VertexSet::to_vec).collect::<Vec<_>>()),
        Value::Edges(e) => json!(e.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>()),
        Value::Text(t) => json!(t),
    }
}

fn payload_json(payload: &[(&'static str, Value)]) -> serde_json::Value {
    let map: Map<String, serde_json::Value> = payload.iter().map(|(k, v)| ((*k).to_owned(), value_json(v))).collect();
    serde_json::Value::Object(map)
}

pub fn outcome_name(outcome: Outcome) -> &'static str {
    match outcome {
        Outcome::Holds => "holds",
        Outcome::Fails => "fails",
        Outcome::NotApplicable => "not-applicable",
    }
}

pub fn verdict_json(v: &TheoremVerdict, timing_ms: Option<f64>) -> serde_json::Value {
    let mut out = json!({
        "theorem_id": v.code,
        "name": v.id,
        "holds": v.holds(),
        "outcome": outcome_name(v.outcome),
        "sampled": v.sampled,
        "witness": payload_json(&v.witness),
        "counterexample": v.counterexample.as_ref().map(|c| json!({
            "graph6": c.graph6,
            "assignment": payload_json(&c.assignment),
        })),
    });
    if let Some(t) = timing_ms {
        out["timing_ms"] = json!(t);
    }
    out
}

/// Runs `checks` on one graph, sharing cached invariants between them.
pub fn check(g: &Graph, caps: &Caps, checks: &[&Check], timings: bool) -> Result<serde_json::Value> {
    let analysis = Analysis::new(g, *caps);
    let mut verdicts = Vec::with_capacity(checks.len());
    let (mut failures, mut not_applicable) = (0, 0);
    for c in checks {
        let start = Instant::now();
        let v = c.evaluate(&analysis)?;
        let elapsed = timings.then(|| start.elapsed().as_secs_f64() * 1e3);
        failures += usize::from(!v.holds());
        not_applicable += usize::from(!v.applicable());
        verdicts.push(verdict_json(&v, elapsed));
    }
    Ok(json!({
        "graph6": analysis.graph6(),
        "n": g.order(),
        "verdicts": verdicts,
        "failures": failures,
        "not_applicable": not_applicable,
    }))
}
