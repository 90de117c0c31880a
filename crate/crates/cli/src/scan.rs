//! Corpus scans: parallel across graphs, output in input order.

use std::io::Write;

use indeplab_core::theorems::{run_checks, Check, Outcome};
use indeplab_core::{Caps, Graph};
use rayon::prelude::*;
use rayon::ThreadPool;
use serde_json::json;

use crate::error::Result;
use crate::report::verdict_json;

/// Graphs evaluated per parallel batch; output is flushed between batches.
const BATCH: usize = 4096;

#[derive(Default)]
struct Tally {
    holds: usize,
    fails: usize,
    not_applicable: usize,
    sampled: usize,
}

pub struct Summary {
    pub graphs: usize,
    pub failures: usize,
    pub not_applicable: usize,
    tallies: Vec<Tally>,
}

impl Summary {
    pub fn line(&self) -> String {
        format!("graphs={} failures={} not_applicable={}", self.graphs, self.failures, self.not_applicable)
    }

    pub fn json(&self, checks: &[&Check]) -> serde_json::Value {
        let per_check: Vec<_> = checks
            .iter()
            .zip(&self.tallies)
            .map(|(c, t)| {
                json!({
                    "theorem_id": c.code,
                    "name": c.id,
                    "holds": t.holds,
                    "fails": t.fails,
                    "not_applicable": t.not_applicable,
                    "sampled": t.sampled,
                })
            })
            .collect();
        json!({
            "graphs": self.graphs,
            "failures": self.failures,
            "not_applicable": self.not_applicable,
            "checks": per_check,
        })
    }
}

/// Runs `checks` on every graph; each failing verdict is written to `out`
/// as one JSON line, in corpus order.
pub fn scan<I, W>(corpus: I, checks: &[&Check], caps: &Caps, pool: &ThreadPool, out: &mut W) -> Result<Summary>
where
    I: IntoIterator<Item = Graph>,
    W: Write,
{
    let mut summary = Summary {
        graphs: 0,
        failures: 0,
        not_applicable: 0,
        tallies: checks.iter().map(|_| Tally::default()).collect(),
    };
    let mut corpus = corpus.into_iter().peekable();
    while corpus.peek().is_some() {
        let batch: Vec<Graph> = corpus.by_ref().take(BATCH).collect();
        let reports: Vec<_> = pool.install(|| batch.par_iter().map(|g| run_checks(g, caps, checks)).collect());
        for report in reports {
            let report = report?;
            summary.graphs += 1;
            for (v, tally) in report.verdicts.iter().zip(&mut summary.tallies) {
                tally.sampled += usize::from(v.sampled);
                match v.outcome {
                    Outcome::Holds => tally.holds += 1,
                    Outcome::NotApplicable => {
                        tally.not_applicable += 1;
                        summary.not_applicable += 1;
                    }
                    Outcome::Fails => {
                        tally.fails += 1;
                        summary.failures += 1;
                        let line = json!({ "graph6": report.graph6, "verdict": verdict_json(v, None) });
                        writeln!(out, "{line}")?;
                    }
                }
            }
        }
        out.flush()?;
    }
    Ok(summary)
}
