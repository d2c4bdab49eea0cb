//! Exploratory corpus scan: when a nonzero product of three proper ideals
//! lands inside a weakly 1-absorbing prime ideal I, must I1*I2 or I3 land
//! in I even without excluding triple-zeros? Hits (cases where the
//! conclusion fails) are recorded as data, never asserted; an empty hit
//! list over a large instance count is evidence, not proof.

use rayon::prelude::*;
use ringlab_core::Elem;
use serde::Serialize;

use crate::context::RingContext;
use crate::corpus::Corpus;
use crate::runner::RunOptions;

/// One failure of the unconditioned containment conclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenQuestionHit {
    pub ring: String,
    pub ideal: Vec<Elem>,
    pub factors: [Vec<Elem>; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenQuestionReport {
    pub rings_scanned: u64,
    /// Corpus rings that failed to build, with their errors.
    pub build_errors: Vec<String>,
    pub instances_checked: u64,
    pub hits: Vec<OpenQuestionHit>,
}

fn scan_ring(ctx: &RingContext) -> (u64, Vec<OpenQuestionHit>) {
    let mut instances = 0u64;
    let mut hits = Vec::new();
    for &i in &ctx.proper {
        if !ctx.w1ap(i) {
            continue;
        }
        for (a, &i1) in ctx.proper.iter().enumerate() {
            for &i2 in &ctx.proper[a..] {
                let p12 = ctx.product_of(i1, i2);
                let p12_in = ctx.is_subset(p12, i);
                for &i3 in &ctx.proper {
                    let p123 = ctx.product_of(p12, i3);
                    if p123 == ctx.zero_idx || !ctx.is_subset(p123, i) {
                        continue;
                    }
                    // Unordered (I1, I2) pairs stand for both orderings.
                    instances += if i1 == i2 { 1 } else { 2 };
                    if !p12_in && !ctx.is_subset(i3, i) {
                        hits.push(OpenQuestionHit {
                            ring: ctx.ring.label().to_string(),
                            ideal: ctx.ideal(i).members().to_vec(),
                            factors: [
                                ctx.ideal(i1).members().to_vec(),
                                ctx.ideal(i2).members().to_vec(),
                                ctx.ideal(i3).members().to_vec(),
                            ],
                        });
                    }
                }
            }
        }
    }
    (instances, hits)
}

/// Scans the corpus at the given tier. Check filters are ignored; cap and
/// slow are honored.
pub fn search_open_question(corpus: &Corpus, options: &RunOptions) -> OpenQuestionReport {
    let entries = corpus.active(options.slow);
    let scanned: Vec<Result<(u64, Vec<OpenQuestionHit>), String>> = entries
        .par_iter()
        .map(|entry| match RingContext::build(&entry.spec, options.cap) {
            Ok(ctx) => Ok(scan_ring(&ctx)),
            Err(e) => Err(format!("{}: {e}", entry.text)),
        })
        .collect();
    let mut report = OpenQuestionReport {
        rings_scanned: 0,
        build_errors: Vec::new(),
        instances_checked: 0,
        hits: Vec::new(),
    };
    for item in scanned {
        match item {
            Ok((instances, hits)) => {
                report.rings_scanned += 1;
                report.instances_checked += instances;
                report.hits.extend(hits);
            }
            Err(e) => report.build_errors.push(e),
        }
    }
    report
}
