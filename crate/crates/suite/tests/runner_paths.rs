//! Runner behavior: determinism, exit codes, build-failure rows, check
//! filtering, the constructed family, and counterexample recertification.

use std::sync::atomic::{AtomicU64, Ordering};

use ringlab_core::RingSpec;
use ringlab_suite::{
    parse_corpus, recertify, run_check, run_suite, CheckBody, CheckDef, CorpusEntry, Outcome,
    RingContext, RunOptions, Scope, SuiteReport, Witness, CHECKS, MIN_PRIMES_ID,
};

fn small_corpus() -> ringlab_suite::Corpus {
    parse_corpus("Z8\nZ12\nZ16\nZ2 x Z4\nZ2 x Z3 x Z5\n").expect("corpus parses")
}

fn strip_timing(mut report: SuiteReport) -> SuiteReport {
    report.config.generated_unix = 0;
    for v in &mut report.results {
        v.millis = 0;
    }
    report
}

#[test]
fn identical_runs_produce_identical_reports() {
    let corpus = small_corpus();
    let options = RunOptions::default();
    let first = strip_timing(run_suite(&corpus, &options));
    let second = strip_timing(run_suite(&corpus, &options));
    assert_eq!(first, second);
}

#[test]
fn clean_run_exits_zero_with_ordered_results() {
    let report = run_suite(&small_corpus(), &RunOptions::default());
    assert_eq!(report.exit_code(), 0);
    assert_eq!(report.summary.counterexamples, 0);
    assert_eq!(report.summary.errors, 0);
    // Results are sorted by (ring label, check id).
    let keys: Vec<(&str, &str)> =
        report.results.iter().map(|v| (v.ring.as_str(), v.check_id.as_str())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    // Every verdict owes its outcome to its instance count.
    for v in &report.results {
        match v.outcome {
            Outcome::Vacuous => assert_eq!(v.instances_checked, 0),
            Outcome::Verified => assert!(v.instances_checked > 0),
            Outcome::Counterexample => unreachable!("clean corpus"),
        }
    }
}

#[test]
fn oversized_ring_becomes_an_error_row_and_exit_two() {
    let corpus = parse_corpus("Z8\nZ300\n").expect("corpus parses");
    let report = run_suite(&corpus, &RunOptions::default());
    assert_eq!(report.exit_code(), 2);
    assert_eq!(report.summary.errors, 1);
    let row = report.corpus.iter().find(|r| r.spec == "Z300").expect("row exists");
    assert_eq!(row.status, "error");
    assert!(row.error.is_some());
    assert!(row.label.is_none());
    // The healthy ring still ran in full.
    let z8_verdicts = report.results.iter().filter(|v| v.ring == "Z8").count();
    assert_eq!(z8_verdicts, CHECKS.len());
}

#[test]
fn raising_the_cap_admits_the_oversized_ring() {
    // A prime modulus keeps the admitted ring cheap to classify.
    let corpus = parse_corpus("Z257\n").expect("corpus parses");
    let options = RunOptions { cap: 512, ..RunOptions::default() };
    let report = run_suite(&corpus, &options);
    assert_eq!(report.exit_code(), 0);
    assert_eq!(report.summary.errors, 0);
}

#[test]
fn the_slow_tier_raises_the_cap_on_its_own() {
    assert_eq!(RunOptions::default().effective_cap(), 256);
    assert_eq!(RunOptions { slow: true, ..RunOptions::default() }.effective_cap(), 1024);
    let wide = RunOptions { cap: 2048, slow: true, ..RunOptions::default() };
    assert_eq!(wide.effective_cap(), 2048);

    // Slow entries reach order 1024; the default options must still build
    // them. The filter keeps the run to the constructed family's checks.
    let options = RunOptions {
        slow: true,
        check_filter: Some(MIN_PRIMES_ID.into()),
        ..RunOptions::default()
    };
    let report = run_suite(&ringlab_suite::default_corpus(true), &options);
    assert_eq!(report.exit_code(), 0);
    assert_eq!(report.summary.errors, 0);
    assert_eq!(report.config.cap, 1024);
    assert!(report.corpus.iter().all(|row| row.error.is_none()));
    assert_eq!(report.results.len(), 2);
    assert!(report.results.iter().all(|v| v.outcome == Outcome::Verified));
}

#[test]
fn check_filter_is_a_case_insensitive_substring() {
    let corpus = small_corpus();
    let options =
        RunOptions { check_filter: Some("COLON".into()), ..RunOptions::default() };
    let report = run_suite(&corpus, &options);
    assert!(!report.results.is_empty());
    assert!(report.results.iter().all(|v| v.check_id == "colon-weakly-prime"));
    // The constructed family is filtered out along with everything else.
    assert!(report.corpus.iter().all(|r| !r.spec.contains("proj1")));
}

#[test]
fn min_primes_family_rows_are_appended() {
    let report = run_suite(&small_corpus(), &RunOptions::default());
    let family: Vec<_> =
        report.results.iter().filter(|v| v.check_id == MIN_PRIMES_ID).collect();
    assert_eq!(family.len(), 1, "fast tier runs the two-factor size only");
    assert_eq!(family[0].outcome, Outcome::Verified);
    assert_eq!(family[0].instances_checked, 1);
    let row = report
        .corpus
        .last()
        .expect("family row appended after corpus rows");
    assert_eq!(row.spec, "idealization(Z8 x Z8, proj1, {0,4})");
    assert_eq!(row.order, Some(128));
    // A filter aimed at the family keeps only its rows.
    let options = RunOptions { check_filter: Some("min".into()), ..RunOptions::default() };
    let filtered = run_suite(&small_corpus(), &options);
    assert!(filtered.results.iter().all(|v| v.check_id == MIN_PRIMES_ID));
    assert_eq!(filtered.summary.per_check.len(), 1);
}

// Synthetic checks for the verdict translation and recertification paths.

fn entry(spec: &str) -> CorpusEntry {
    CorpusEntry {
        text: spec.to_string(),
        spec: RingSpec::parse(spec).expect("spec parses"),
        slow: false,
    }
}

fn context(spec: &str) -> RingContext {
    RingContext::build(&RingSpec::parse(spec).expect("spec parses"), 256)
        .expect("context builds")
}

fn stable_violation(ctx: &RingContext) -> Result<CheckBody, ringlab_core::CoreError> {
    Ok(CheckBody::failed(
        7,
        Witness::note("synthetic violation")
            .ideal(&[0, 8])
            .elements(&ctx.ring, &[2, 2, 2])
            .flag("weakly_one_absorbing_prime"),
    ))
}

fn bogus_violation(ctx: &RingContext) -> Result<CheckBody, ringlab_core::CoreError> {
    // (4,4,4) multiplies to zero in Z16, so it cannot witness a weak
    // violation; recertification must reject it.
    Ok(CheckBody::failed(
        1,
        Witness::note("synthetic bogus violation")
            .ideal(&[0, 8])
            .elements(&ctx.ring, &[4, 4, 4])
            .flag("weakly_one_absorbing_prime"),
    ))
}

static FLAKY_CALLS: AtomicU64 = AtomicU64::new(0);

fn flaky_count(_: &RingContext) -> Result<CheckBody, ringlab_core::CoreError> {
    let calls = FLAKY_CALLS.fetch_add(1, Ordering::SeqCst);
    Ok(CheckBody::failed(calls + 1, Witness::note("synthetic flaky violation")))
}

fn empty_scan(_: &RingContext) -> Result<CheckBody, ringlab_core::CoreError> {
    Ok(CheckBody::clean(0))
}

fn busy_scan(_: &RingContext) -> Result<CheckBody, ringlab_core::CoreError> {
    Ok(CheckBody::clean(42))
}

#[test]
fn verdict_translation_covers_all_outcomes() {
    let ctx = context("Z16");
    let fail_def =
        CheckDef { id: "synthetic-fail", scope: Scope::All, run: stable_violation };
    let v = run_check(&ctx, &fail_def).expect("check runs");
    assert_eq!(v.outcome, Outcome::Counterexample);
    assert_eq!(v.instances_checked, 7);
    assert_eq!(v.witness.as_ref().map(|w| w.elements.as_slice()), Some(&[2, 2, 2][..]));

    let empty_def = CheckDef { id: "synthetic-empty", scope: Scope::All, run: empty_scan };
    let v = run_check(&ctx, &empty_def).expect("check runs");
    assert_eq!(v.outcome, Outcome::Vacuous);

    let busy_def = CheckDef { id: "synthetic-busy", scope: Scope::All, run: busy_scan };
    let v = run_check(&ctx, &busy_def).expect("check runs");
    assert_eq!(v.outcome, Outcome::Verified);
    assert_eq!(v.instances_checked, 42);

    // Out-of-scope rings never enter the body: the failing body is inert on
    // a non-local ring under a Local scope.
    let ctx12 = context("Z12");
    let scoped_def =
        CheckDef { id: "synthetic-scoped", scope: Scope::Local, run: stable_violation };
    let v = run_check(&ctx12, &scoped_def).expect("check runs");
    assert_eq!(v.outcome, Outcome::Vacuous);
    assert_eq!(v.instances_checked, 0);
}

#[test]
fn recertification_accepts_a_reproducible_violation() {
    let ctx = context("Z16");
    let def = CheckDef { id: "synthetic-fail", scope: Scope::All, run: stable_violation };
    let v = run_check(&ctx, &def).expect("check runs");
    recertify(&entry("Z16"), 256, &def, &v).expect("stable violation recertifies");
}

#[test]
fn recertification_rejects_a_nonreproducing_violation() {
    let ctx = context("Z16");
    let def = CheckDef { id: "synthetic-flaky", scope: Scope::All, run: flaky_count };
    let v = run_check(&ctx, &def).expect("check runs");
    let err = recertify(&entry("Z16"), 256, &def, &v)
        .expect_err("changing instance counts must not recertify");
    assert!(err.to_string().contains("did not reproduce"));
}

#[test]
fn recertification_rejects_a_witness_that_fails_revalidation() {
    let ctx = context("Z16");
    let def = CheckDef { id: "synthetic-bogus", scope: Scope::All, run: bogus_violation };
    let v = run_check(&ctx, &def).expect("check runs");
    let err = recertify(&entry("Z16"), 256, &def, &v)
        .expect_err("a tuple that does not violate the flag must not recertify");
    assert!(err.to_string().contains("does not violate"));
}

#[test]
fn exit_codes_rank_counterexamples_over_build_errors() {
    let ctx = context("Z16");
    let def = CheckDef { id: "synthetic-fail", scope: Scope::All, run: stable_violation };
    let bad = run_check(&ctx, &def).expect("check runs");
    let good = run_check(
        &ctx,
        &CheckDef { id: "synthetic-busy", scope: Scope::All, run: busy_scan },
    )
    .expect("check runs");

    let config = ringlab_suite::SuiteConfig {
        cap: 256,
        slow: false,
        parallelism: 1,
        corpus_source: "synthetic".into(),
        generated_unix: 0,
    };
    let ok_row = ringlab_suite::CorpusRow::ok("Z16".into(), "Z16".into(), 16);
    let err_row = ringlab_suite::CorpusRow::failed("Z999".into(), "too big".into());

    let clean =
        SuiteReport::assemble(config.clone(), vec![ok_row.clone()], vec![good.clone()]);
    assert_eq!(clean.exit_code(), 0);
    assert!(clean.summary.never_verified.is_empty());

    let broken = SuiteReport::assemble(
        config.clone(),
        vec![ok_row.clone(), err_row.clone()],
        vec![good.clone()],
    );
    assert_eq!(broken.exit_code(), 2);

    let disproven =
        SuiteReport::assemble(config, vec![ok_row, err_row], vec![good, bad.clone()]);
    assert_eq!(disproven.exit_code(), 1, "counterexamples outrank build errors");
    assert_eq!(disproven.summary.counterexamples, 1);
    let tally = &disproven.summary.per_check["synthetic-fail"];
    assert_eq!(tally.counterexamples, 1);
    assert_eq!(tally.instances, 7);
    assert_eq!(disproven.summary.never_verified, vec!["synthetic-fail".to_string()]);
}
