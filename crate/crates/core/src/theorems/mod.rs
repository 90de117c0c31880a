//! A registry of structural identities about independence, criticality and
//! the Larson decomposition, each evaluated on one graph at a time.
//!
//! Every check is a predicate over a shared [`Analysis`] that returns a
//! [`TheoremVerdict`]: it holds, it fails (with the violating assignment),
//! or it does not apply because its hypothesis is false. The statements are
//! proved results, so a failure always points at a bug in this crate.

mod analysis;
mod checks;

use alloc::string::String;
use alloc::vec::Vec;

pub use analysis::Analysis;

use crate::error::Result;
use crate::exact::Caps;
use crate::graph::Graph;
use crate::matching::Matching;
use crate::set::{SetFamily, VertexSet};

/// A value in a witness or counterexample payload. Sets are in host
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Set(VertexSet),
    Sets(Vec<VertexSet>),
    Edges(Vec<(usize, usize)>),
    Text(String),
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<isize> for Value {
    fn from(v: isize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<VertexSet> for Value {
    fn from(s: VertexSet) -> Self {
        Value::Set(s)
    }
}

impl From<&VertexSet> for Value {
    fn from(s: &VertexSet) -> Self {
        Value::Set(s.clone())
    }
}

impl From<&Matching> for Value {
    fn from(m: &Matching) -> Self {
        Value::Edges(m.edges())
    }
}

impl From<&SetFamily> for Value {
    fn from(f: &SetFamily) -> Self {
        Value::Sets(f.sets().to_vec())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

pub type Payload = Vec<(&'static str, Value)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    NotApplicable,
}

/// The graph (as graph6) and the assignment that violates a statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: String,
    pub assignment: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub id: &'static str,
    pub code: &'static str,
    pub outcome: Outcome,
    /// A universally quantified statement was checked on a sample only.
    pub sampled: bool,
    pub witness: Payload,
    pub counterexample: Option<Counterexample>,
}

impl TheoremVerdict {
    pub fn holds(&self) -> bool {
        self.outcome != Outcome::Fails
    }

    pub fn applicable(&self) -> bool {
        self.outcome != Outcome::NotApplicable
    }
}

/// One registered statement.
pub struct Check {
    /// Stable descriptive identifier.
    pub id: &'static str,
    /// Short code accepted as an alias on the command line.
    pub code: &'static str,
    pub statement: &'static str,
    run: fn(&Check, &Analysis<'_>) -> Result<TheoremVerdict>,
}

impl Check {
    /// Runs the check. Cap overruns are returned as errors; any other
    /// internal error is reported as a failing verdict.
    pub fn evaluate(&self, analysis: &Analysis<'_>) -> Result<TheoremVerdict> {
        match (self.run)(self, analysis) {
            Err(e) if !e.is_cap() => Ok(TheoremVerdict {
                id: self.id,
                code: self.code,
                outcome: Outcome::Fails,
                sampled: false,
                witness: Vec::new(),
                counterexample: Some(Counterexample {
                    graph6: analysis.graph6(),
                    assignment: alloc::vec![("error", Value::Text(alloc::format!("{e}")))],
                }),
            }),
            other => other,
        }
    }

    pub(crate) fn verdict(&self) -> checks::Builder {
        checks::Builder::new(self.id, self.code)
    }
}

impl core::fmt::Debug for Check {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Check").field("id", &self.id).field("code", &self.code).finish()
    }
}

/// Every registered check, in report order.
pub fn registry() -> &'static [Check] {
    checks::REGISTRY
}

/// Looks a check up by id or code (case-insensitive). A combined code such
/// as `A/B` also answers to `A` and to `B`.
pub fn find(name: &str) -> Option<&'static Check> {
    registry().iter().find(|c| {
        c.id.eq_ignore_ascii_case(name)
            || c.code.eq_ignore_ascii_case(name)
            || c.code.split('/').any(|part| part.eq_ignore_ascii_case(name))
    })
}

/// The verdicts of a list of checks on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegistryReport {
    pub graph6: String,
    pub verdicts: Vec<TheoremVerdict>,
}

impl RegistryReport {
    pub fn failures(&self) -> usize {
        self.verdicts.iter().filter(|v| !v.holds()).count()
    }

    pub fn not_applicable(&self) -> usize {
        self.verdicts.iter().filter(|v| !v.applicable()).count()
    }
}

pub fn run_checks(g: &Graph, caps: &Caps, checks: &[&Check]) -> Result<RegistryReport> {
    let analysis = Analysis::new(g, *caps);
    let verdicts = checks
        .iter()
        .map(|c| c.evaluate(&analysis))
        .collect::<Result<Vec<_>>>()?;
    Ok(RegistryReport {
        graph6: analysis.graph6(),
        verdicts,
    })
}

/// Every registered check on one graph.
pub fn check_all(g: &Graph, caps: &Caps) -> Result<RegistryReport> {
    let all: Vec<&Check> = registry().iter().collect();
    run_checks(g, caps, &all)
}

/// Lazily evaluates `checks` on each graph of a corpus.
pub fn scan<'a, I>(corpus: I, checks: &'a [&'a Check], caps: Caps) -> impl Iterator<Item = Result<RegistryReport>> + 'a
where
    I: IntoIterator<Item = Graph>,
    I::IntoIter: 'a,
{
    corpus.into_iter().map(move |g| run_checks(&g, &caps, checks))
}
