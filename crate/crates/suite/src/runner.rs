//! Corpus runner: builds each ring, runs every applicable check in
//! parallel across rings, recertifies any counterexample from a fresh
//! build, and assembles the aggregate report.

use std::time::{SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use ringlab_core::classify::verify_violation;
use ringlab_core::{CoreError, Ideal};

use crate::checks::{check_min_primes_construction, min_primes_spec, run_check, CheckDef, CHECKS, MIN_PRIMES_ID};
use crate::context::RingContext;
use crate::corpus::{Corpus, CorpusEntry};
use crate::report::{CorpusRow, SuiteConfig, SuiteReport};
use crate::verdict::{Outcome, TheoremVerdict};

/// Options for a suite run.
#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Largest ring order the run will construct.
    pub cap: usize,
    /// Include slow-tier corpus entries and the larger constructed family.
    pub slow: bool,
    /// Case-insensitive substring filter on check ids; None runs them all.
    pub check_filter: Option<String>,
    /// Recorded in the report config: "default" or a corpus file path.
    pub corpus_source: String,
}

impl Default for RunOptions {
    fn default() -> RunOptions {
        RunOptions { cap: 256, slow: false, check_filter: None, corpus_source: "default".into() }
    }
}

impl RunOptions {
    /// Cap the run actually builds with. The slow tier includes rings of
    /// order 1024, so it never runs with a smaller cap than that.
    pub fn effective_cap(&self) -> usize {
        if self.slow { self.cap.max(1024) } else { self.cap }
    }
}

fn admits_filter(id: &str, filter: Option<&str>) -> bool {
    match filter {
        None => true,
        Some(f) => id.to_lowercase().contains(&f.to_lowercase()),
    }
}

/// Confirms a counterexample from scratch: the ring is rebuilt, the check
/// rerun, and the fresh verdict must match in outcome, witness, and
/// instance count. When the witness carries a classification flag, its
/// element tuple must independently violate that flag on the last witness
/// ideal (the convention for every flag-carrying witness).
pub fn recertify(
    entry: &CorpusEntry,
    cap: usize,
    def: &CheckDef,
    original: &TheoremVerdict,
) -> Result<(), CoreError> {
    let fresh = RingContext::build(&entry.spec, cap)?;
    let rerun = run_check(&fresh, def)?;
    if rerun.outcome != original.outcome
        || rerun.witness != original.witness
        || rerun.instances_checked != original.instances_checked
    {
        return Err(CoreError::Internal(format!(
            "counterexample for {} on {} did not reproduce on a fresh build",
            def.id, original.ring
        )));
    }
    if let Some(w) = &original.witness {
        if let (Some(flag), Some(members)) = (&w.flag, w.ideals.last()) {
            let ideal = Ideal::from_members(&fresh.ring, members)?;
            if !verify_violation(&ideal, flag, &w.elements) {
                return Err(CoreError::Internal(format!(
                    "witness tuple for {} on {} does not violate {flag}",
                    def.id, original.ring
                )));
            }
        }
    }
    Ok(())
}

fn process_entry(
    entry: &CorpusEntry,
    cap: usize,
    filter: Option<&str>,
) -> (CorpusRow, Vec<TheoremVerdict>) {
    let ctx = match RingContext::build(&entry.spec, cap) {
        Ok(ctx) => ctx,
        Err(e) => return (CorpusRow::failed(entry.text.clone(), e.to_string()), Vec::new()),
    };
    let mut verdicts = Vec::new();
    for def in CHECKS {
        if !admits_filter(def.id, filter) {
            continue;
        }
        match run_check(&ctx, def) {
            Ok(v) => {
                if v.outcome == Outcome::Counterexample {
                    if let Err(e) = recertify(entry, cap, def, &v) {
                        return (CorpusRow::failed(entry.text.clone(), e.to_string()), verdicts);
                    }
                }
                verdicts.push(v);
            }
            Err(e) => {
                let msg = format!("check {}: {e}", def.id);
                return (CorpusRow::failed(entry.text.clone(), msg), verdicts);
            }
        }
    }
    let row = CorpusRow::ok(entry.text.clone(), ctx.ring.label().to_string(), ctx.ring.order());
    (row, verdicts)
}

/// Runs the constructed minimal-prime family at the sizes the tier allows:
/// two factors always, three in the slow tier.
fn run_min_primes(
    options: &RunOptions,
    corpus_rows: &mut Vec<CorpusRow>,
    results: &mut Vec<TheoremVerdict>,
) {
    if !admits_filter(MIN_PRIMES_ID, options.check_filter.as_deref()) {
        return;
    }
    let sizes: &[usize] = if options.slow { &[2, 3] } else { &[2] };
    for &n in sizes {
        let spec_text = min_primes_spec(n).to_string();
        match check_min_primes_construction(n, options.effective_cap()) {
            Ok(verdict) => {
                let order = 8usize.pow(n as u32) * 2;
                corpus_rows.push(CorpusRow::ok(spec_text, verdict.ring.clone(), order));
                results.push(verdict);
            }
            Err(e) => corpus_rows.push(CorpusRow::failed(spec_text, e.to_string())),
        }
    }
}

/// Runs every applicable check over the corpus and assembles the report.
/// Results are sorted by (ring label, check id); corpus rows keep corpus
/// order, with the constructed family appended at the end.
pub fn run_suite(corpus: &Corpus, options: &RunOptions) -> SuiteReport {
    let entries = corpus.active(options.slow);
    let cap = options.effective_cap();
    let filter = options.check_filter.as_deref();
    let processed: Vec<(CorpusRow, Vec<TheoremVerdict>)> = entries
        .par_iter()
        .map(|entry| process_entry(entry, cap, filter))
        .collect();
    let mut corpus_rows = Vec::with_capacity(processed.len());
    let mut results = Vec::new();
    for (row, verdicts) in processed {
        corpus_rows.push(row);
        results.extend(verdicts);
    }
    run_min_primes(options, &mut corpus_rows, &mut results);
    results.sort_by(|x, y| {
        (x.ring.as_str(), x.check_id.as_str()).cmp(&(y.ring.as_str(), y.check_id.as_str()))
    });
    let config = SuiteConfig {
        cap: options.effective_cap(),
        slow: options.slow,
        parallelism: rayon::current_num_threads(),
        corpus_source: options.corpus_source.clone(),
        generated_unix: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .unwrap_or_default()
            .as_secs(),
    };
    SuiteReport::assemble(config, corpus_rows, results)
}
