//! Aggregate report schema for suite runs.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::verdict::{Outcome, TheoremVerdict};

/// How the run was configured.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub cap: usize,
    pub slow: bool,
    pub parallelism: usize,
    /// "default" or the corpus file path.
    pub corpus_source: String,
    pub generated_unix: u64,
}

/// One corpus ring and how its construction went.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusRow {
    pub spec: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CorpusRow {
    pub fn ok(spec: String, label: String, order: usize) -> CorpusRow {
        CorpusRow { spec, label: Some(label), order: Some(order), status: "ok".into(), error: None }
    }

    pub fn failed(spec: String, error: String) -> CorpusRow {
        CorpusRow { spec, label: None, order: None, status: "error".into(), error: Some(error) }
    }
}

/// Outcome counts for one check across the corpus.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub verified: u64,
    pub vacuous: u64,
    pub counterexamples: u64,
    pub instances: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub verified: u64,
    pub vacuous: u64,
    pub counterexamples: u64,
    /// Corpus rows whose ring failed to build.
    pub errors: u64,
    pub per_check: BTreeMap<String, CheckTally>,
    /// Checks that ran on some ring but were never once verified; these
    /// hold only vacuously over the corpus.
    pub never_verified: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub corpus: Vec<CorpusRow>,
    pub results: Vec<TheoremVerdict>,
    pub summary: SuiteSummary,
}

impl SuiteReport {
    pub fn assemble(
        config: SuiteConfig,
        corpus: Vec<CorpusRow>,
        results: Vec<TheoremVerdict>,
    ) -> SuiteReport {
        let mut per_check: BTreeMap<String, CheckTally> = BTreeMap::new();
        let (mut verified, mut vacuous, mut counterexamples) = (0u64, 0u64, 0u64);
        for v in &results {
            let tally = per_check.entry(v.check_id.clone()).or_default();
            tally.instances += v.instances_checked;
            match v.outcome {
                Outcome::Verified => {
                    verified += 1;
                    tally.verified += 1;
                }
                Outcome::Vacuous => {
                    vacuous += 1;
                    tally.vacuous += 1;
                }
                Outcome::Counterexample => {
                    counterexamples += 1;
                    tally.counterexamples += 1;
                }
            }
        }
        let never_verified = per_check
            .iter()
            .filter(|(_, t)| t.verified == 0)
            .map(|(id, _)| id.clone())
            .collect();
        let errors = corpus.iter().filter(|r| r.status == "error").count() as u64;
        SuiteReport {
            config,
            corpus,
            results,
            summary: SuiteSummary {
                verified,
                vacuous,
                counterexamples,
                errors,
                per_check,
                never_verified,
            },
        }
    }

    /// Process exit code: 1 if any counterexample was found, otherwise 2 if
    /// any corpus ring failed to build, otherwise 0.
    pub fn exit_code(&self) -> i32 {
        if self.summary.counterexamples > 0 {
            1
        } else if self.summary.errors > 0 {
            2
        } else {
            0
        }
    }
}
