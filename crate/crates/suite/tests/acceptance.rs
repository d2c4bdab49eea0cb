//! End-to-end acceptance gates. Each test covers one numbered criterion
//! and prints a single `criterion N: PASS/FAIL` line (visible with
//! `--nocapture`). Criterion 5 prints FAIL by design: the family it
//! describes was expected to produce weakly 1-absorbing prime ideals with
//! several minimal primes, but the engine refutes that combination, so the
//! test asserts the corrected facts and reports the honest outcome.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use ringlab_core::classify::{
    classify, find_triple_zero, verify_violation, weakly_one_absorbing_prime_violation,
};
use ringlab_core::{enumerate_ideals, ActionKind, Elem, FiniteRing, Ideal, RingSpec};
use ringlab_suite::{
    check_min_primes_construction, default_corpus, run_check, run_suite, search_open_question,
    RingContext, RunOptions, CHECKS,
};

const CAP: usize = 1024;

fn build(text: &str) -> Arc<FiniteRing> {
    RingSpec::parse(text).expect("spec parses").build(CAP).expect("ring builds")
}

fn ideal(ring: &Arc<FiniteRing>, members: &[Elem]) -> Ideal {
    Ideal::from_members(ring, members).expect("members form an ideal")
}

fn names(ring: &FiniteRing, tuple: &[Elem]) -> String {
    let parts: Vec<&str> = tuple.iter().map(|&e| ring.elem_name(e)).collect();
    parts.join(", ")
}

#[test]
fn criterion_1_half_module_axis_splits_the_one_absorbing_pair() {
    let start = Instant::now();
    let ring = build("Z8 (+) {0,4}");
    let axis = ideal(&ring, &[0, 1]);
    let profile = classify(&axis).expect("classification succeeds");
    assert!(profile.weakly_one_absorbing_prime);
    assert!(!profile.one_absorbing_prime);
    let triple = find_triple_zero(&axis).expect("proper ideal").expect("triple exists");
    assert_eq!(triple, [4, 4, 4]);
    assert_eq!(ring.elem_name(4), "(2,0)");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 1: PASS - weakly-but-not 1-absorbing prime with triple-zero ({}) in {} ms",
        names(&ring, &triple),
        elapsed.as_millis()
    );
}

#[test]
fn criterion_2_coordinate_line_separates_the_weak_absorbing_pair() {
    let ring = build("Z2 x Z2 x Z2");
    let line = ideal(&ring, &[0, 4]);
    let profile = classify(&line).expect("classification succeeds");
    assert!(profile.weakly_two_absorbing);
    assert!(!profile.weakly_one_absorbing_prime);
    let witness = &profile.witnesses["weakly_one_absorbing_prime"];
    assert_eq!(witness, &vec![5, 5, 6]);
    assert_eq!(
        [ring.elem_name(5), ring.elem_name(5), ring.elem_name(6)],
        ["(1,0,1)", "(1,0,1)", "(1,1,0)"]
    );
    println!(
        "criterion 2: PASS - weakly 2-absorbing but not weakly 1-absorbing prime, witness ({})",
        names(&ring, witness)
    );
}

#[test]
fn criterion_3_weakly_prime_is_strictly_weaker_both_ways() {
    let z12 = build("Z12");
    let four = ideal(&z12, &[0, 4, 8]);
    let profile = classify(&four).expect("classification succeeds");
    assert!(profile.weakly_one_absorbing_prime);
    assert!(!profile.weakly_prime);

    let z16 = build("Z16");
    let eight = ideal(&z16, &[0, 8]);
    let profile = classify(&eight).expect("classification succeeds");
    assert!(!profile.weakly_one_absorbing_prime);
    let witness = &profile.witnesses["weakly_one_absorbing_prime"];
    assert_eq!(witness, &vec![2, 2, 2]);
    println!(
        "criterion 3: PASS - {{0,4,8}} in Z12 weakly 1-absorbing prime but not weakly prime; \
         {{0,8}} in Z16 fails with witness (2, 2, 2)"
    );
}

#[test]
fn criterion_4_local_cube_zero_biconditional_on_three_rings() {
    let mut timings = Vec::new();
    for (text, all_hold) in [("Z8", true), ("Z27", true), ("Z16", false)] {
        let start = Instant::now();
        let ring = build(text);
        let maximal = Ideal::local_maximal_ideal(&ring).expect("ring is local");
        let cube_zero = maximal.power(3).expect("cube").is_zero();
        assert_eq!(cube_zero, all_hold, "{text}: cube-zero mismatch");

        let lattice = enumerate_ideals(&ring, CAP).expect("lattice");
        let every_proper = lattice
            .entries()
            .iter()
            .filter(|e| e.proper)
            .all(|e| classify(&e.ideal).expect("profile").weakly_one_absorbing_prime);
        assert_eq!(every_proper, all_hold, "{text}: coverage mismatch");

        if !all_hold {
            let eight = ideal(&ring, &[0, 8]);
            assert!(!classify(&eight).expect("profile").weakly_one_absorbing_prime);
        }

        let ctx = RingContext::build(&RingSpec::parse(text).unwrap(), CAP).expect("context");
        let def = CHECKS.iter().find(|d| d.id == "local-all-ideals").expect("known check");
        let verdict = run_check(&ctx, def).expect("check runs");
        assert_eq!(format!("{:?}", verdict.outcome), "Verified", "{text}");

        let elapsed = start.elapsed();
        assert!(elapsed < Duration::from_secs(1), "{text} took {elapsed:?}");
        timings.push(format!("{text} {} ms", elapsed.as_millis()));
    }
    println!(
        "criterion 4: PASS - every-proper-ideal coverage tracks cube-zero exactly ({})",
        timings.join(", ")
    );
}

#[test]
fn criterion_5_minimal_prime_family_refutes_its_weak_primality_clause() {
    let start = Instant::now();
    let mut triples = Vec::new();
    for n in [2usize, 3] {
        let spec = RingSpec::Idealization(
            Box::new(RingSpec::Product(vec![RingSpec::Zmod(8); n])),
            ActionKind::FirstFactor,
            vec![0, 4],
        );
        let ring = spec.build(CAP).expect("family member builds");
        assert_eq!(ring.order(), 8usize.pow(n as u32) * 2);
        let axis = ideal(&ring, &[0, 1]);
        assert!(!axis.is_zero());

        let lattice = enumerate_ideals(&ring, CAP).expect("lattice");
        let primes = lattice.minimal_primes_over(&axis).expect("minimal primes");
        assert_eq!(primes.len(), n, "expected exactly {n} minimal primes");

        // The axis is NOT weakly 1-absorbing prime; re-derive the violation
        // from first principles instead of trusting the classifier.
        let tuple = weakly_one_absorbing_prime_violation(&axis)
            .expect("a nonzero ideal with several minimal primes admits a violation");
        let (a, b, c) = (tuple[0], tuple[1], tuple[2]);
        let ab = ring.mul(a, b);
        let abc = ring.mul(ab, c);
        assert!(!ring.is_unit(a) && !ring.is_unit(b) && !ring.is_unit(c));
        assert_ne!(abc, 0);
        assert!(axis.contains(abc) && !axis.contains(ab) && !axis.contains(c));
        assert!(verify_violation(&axis, "weakly_one_absorbing_prime", &tuple));
        triples.push(format!("n={n}: ({})", names(&ring, &tuple)));

        // The family check asserts the corrected statement and must agree.
        let verdict = check_min_primes_construction(n, CAP).expect("family check runs");
        assert_eq!(format!("{:?}", verdict.outcome), "Verified");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "criterion 5: FAIL - the module axis has exactly n minimal primes (n = 2 and 3) but is \
         NOT weakly 1-absorbing prime, refuting the stated combination; violations {} ({} ms)",
        triples.join("; "),
        elapsed.as_millis()
    );
}

#[test]
fn criterion_6_full_suite_over_the_default_corpus_is_clean() {
    let start = Instant::now();
    let corpus = default_corpus(false);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(4).build().expect("pool");
    let report = pool.install(|| run_suite(&corpus, &RunOptions::default()));
    let elapsed = start.elapsed();

    assert_eq!(report.summary.counterexamples, 0);
    assert_eq!(report.summary.errors, 0);
    assert_eq!(report.exit_code(), 0);
    assert_eq!(report.summary.never_verified, vec!["not-one-absorbing-iff-nil".to_string()]);
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    let instances: u64 = report.results.iter().map(|v| v.instances_checked).sum();
    println!(
        "criterion 6: PASS - {} rings, {} verdicts, {} instances, zero counterexamples, only \
         the hypothesis-free scan stayed vacuous ({} ms at parallelism 4)",
        report.corpus.len(),
        report.results.len(),
        instances,
        elapsed.as_millis()
    );
}

#[test]
fn criterion_7_hierarchy_implications_hold_on_every_corpus_ideal() {
    let profiles: Vec<(String, Vec<ringlab_core::ClassificationProfile>)> = default_corpus(false)
        .entries
        .par_iter()
        .map(|entry| {
            let ring = entry.spec.build(256).expect("corpus entry builds");
            let lattice = enumerate_ideals(&ring, 256).expect("lattice");
            let profiles = lattice
                .entries()
                .iter()
                .map(|e| classify(&e.ideal).expect("classification succeeds"))
                .collect();
            (entry.text.clone(), profiles)
        })
        .collect();

    let mut ideals = 0u64;
    for (ring, ring_profiles) in &profiles {
        for p in ring_profiles {
            ideals += 1;
            let implications = [
                ("prime", p.prime, "weakly_prime", p.weakly_prime),
                ("prime", p.prime, "one_absorbing_prime", p.one_absorbing_prime),
                (
                    "one_absorbing_prime",
                    p.one_absorbing_prime,
                    "weakly_one_absorbing_prime",
                    p.weakly_one_absorbing_prime,
                ),
                (
                    "weakly_prime",
                    p.weakly_prime,
                    "weakly_one_absorbing_prime",
                    p.weakly_one_absorbing_prime,
                ),
                (
                    "weakly_one_absorbing_prime",
                    p.weakly_one_absorbing_prime,
                    "weakly_two_absorbing",
                    p.weakly_two_absorbing,
                ),
                (
                    "one_absorbing_prime",
                    p.one_absorbing_prime,
                    "one_absorbing_primary",
                    p.one_absorbing_primary,
                ),
            ];
            for (weak, holds, strong, target) in implications {
                assert!(!holds || target, "{ring}: {weak} without {strong}");
            }
        }
    }
    assert!(ideals >= 300, "only {ideals} ideals");
    println!("criterion 7: PASS - 6 implications, {ideals} ideals, 0 violations");
}

// Naive ideal enumeration: every subset mask containing 0 that is closed
// under addition and absorbs ring multiplication. Finite additive closure
// plus 0 already forces a subgroup.
fn naive_ideal_masks(ring: &FiniteRing) -> Vec<u32> {
    let order = ring.order();
    assert!(order <= 16);
    let mut out = Vec::new();
    'mask: for half in 0u32..(1 << (order - 1)) {
        let mask = (half << 1) | 1;
        for x in 0..order {
            if mask & (1 << x) == 0 {
                continue;
            }
            for y in 0..order {
                if mask & (1 << y) != 0 && mask & (1 << ring.add(x, y)) == 0 {
                    continue 'mask;
                }
            }
            for r in 0..order {
                if mask & (1 << ring.mul(r, x)) == 0 {
                    continue 'mask;
                }
            }
        }
        out.push(mask);
    }
    out
}

fn naive_radical(i: &Ideal) -> Vec<bool> {
    let ring = i.ring();
    let order = ring.order();
    (0..order)
        .map(|x| {
            let mut p = x;
            for _ in 0..order {
                if i.contains(p) {
                    return true;
                }
                p = ring.mul(p, x);
            }
            false
        })
        .collect()
}

fn naive_square(i: &Ideal) -> Vec<bool> {
    let ring = i.ring();
    let order = ring.order();
    let mut in_sq = vec![false; order];
    for &x in i.members() {
        for &y in i.members() {
            in_sq[ring.mul(x, y)] = true;
        }
    }
    // Additive closure; absorption is inherited from the generators.
    loop {
        let mut grew = false;
        for a in 0..order {
            if !in_sq[a] {
                continue;
            }
            for b in 0..order {
                if in_sq[b] && !in_sq[ring.add(a, b)] {
                    in_sq[ring.add(a, b)] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    in_sq
}

// Definition-level predicate evaluations: full ordered scans, no a <= b
// symmetry, no scheduling. The pair and 2-absorbing forms quantify over
// all ring elements; the 1-absorbing forms quantify over nonunits.
fn naive_flags(i: &Ideal) -> Vec<(&'static str, bool)> {
    let ring = i.ring();
    let order = ring.order();
    let all: Vec<Elem> = (0..order).collect();
    let nonunits: Vec<Elem> = all.iter().copied().filter(|&x| !ring.is_unit(x)).collect();
    let rad = naive_radical(i);
    let sq = naive_square(i);

    let mut prime = true;
    let mut weakly_prime = true;
    let mut primary = true;
    let mut almost_prime = true;
    let mut two_prime = true;
    for &a in &all {
        for &b in &all {
            let ab = ring.mul(a, b);
            if i.contains(ab) {
                let in_either = i.contains(a) || i.contains(b);
                prime &= in_either;
                weakly_prime &= ab == 0 || in_either;
                primary &= i.contains(a) || rad[b];
                almost_prime &= sq[ab] || in_either;
                two_prime &= i.contains(ring.mul(a, a)) || i.contains(ring.mul(b, b));
            }
        }
    }

    let mut two_absorbing = true;
    let mut weakly_two_absorbing = true;
    for &a in &all {
        for &b in &all {
            for &c in &all {
                let abc = ring.mul(ring.mul(a, b), c);
                if i.contains(abc) {
                    let pair_in = i.contains(ring.mul(a, b))
                        || i.contains(ring.mul(a, c))
                        || i.contains(ring.mul(b, c));
                    two_absorbing &= pair_in;
                    weakly_two_absorbing &= abc == 0 || pair_in;
                }
            }
        }
    }

    let mut one_absorbing_prime = true;
    let mut weakly_one_absorbing_prime = true;
    let mut one_absorbing_primary = true;
    for &a in &nonunits {
        for &b in &nonunits {
            for &c in &nonunits {
                let ab = ring.mul(a, b);
                let abc = ring.mul(ab, c);
                if i.contains(abc) {
                    let strong = i.contains(ab) || i.contains(c);
                    one_absorbing_prime &= strong;
                    weakly_one_absorbing_prime &= abc == 0 || strong;
                    one_absorbing_primary &= i.contains(ab) || rad[c];
                }
            }
        }
    }

    vec![
        ("prime", prime),
        ("weakly_prime", weakly_prime),
        ("primary", primary),
        ("almost_prime", almost_prime),
        ("two_prime", two_prime),
        ("two_absorbing", two_absorbing),
        ("weakly_two_absorbing", weakly_two_absorbing),
        ("one_absorbing_prime", one_absorbing_prime),
        ("weakly_one_absorbing_prime", weakly_one_absorbing_prime),
        ("one_absorbing_primary", one_absorbing_primary),
    ]
}

#[test]
fn criterion_8_engine_matches_naive_oracles_on_small_rings() {
    let corpus = default_corpus(false);

    let mut lattice_rings = 0;
    let mut scan_rings = 0;
    let mut profiles = 0;
    for entry in &corpus.entries {
        let ring = entry.spec.build(256).expect("corpus entry builds");
        if ring.order() > 16 {
            continue;
        }
        let lattice = enumerate_ideals(&ring, 256).expect("lattice");
        let mut fast: Vec<Vec<Elem>> =
            lattice.entries().iter().map(|e| e.ideal.members().to_vec()).collect();
        let mut naive: Vec<Vec<Elem>> = naive_ideal_masks(&ring)
            .into_iter()
            .map(|mask| (0..ring.order()).filter(|&x| mask & (1 << x) != 0).collect())
            .collect();
        fast.sort();
        naive.sort();
        assert_eq!(fast, naive, "{}: ideal enumeration mismatch", entry.text);
        lattice_rings += 1;

        if ring.order() > 12 {
            continue;
        }
        scan_rings += 1;
        for e in lattice.entries() {
            let profile = classify(&e.ideal).expect("classification succeeds");
            if !e.proper {
                continue;
            }
            profiles += 1;
            for (flag, naive_value) in naive_flags(&e.ideal) {
                assert_eq!(
                    profile.get(flag),
                    Some(naive_value),
                    "{}: {:?} disagrees on {flag}",
                    entry.text,
                    e.ideal.members()
                );
            }
        }
    }
    assert!(lattice_rings >= 30, "only {lattice_rings} rings of order <= 16");
    assert!(scan_rings >= 20, "only {scan_rings} rings of order <= 12");
    println!(
        "criterion 8: PASS - ideal enumeration matches subset filtering on {lattice_rings} \
         rings; all 10 flags match definition-level scans on {profiles} proper ideals \
         across {scan_rings} rings"
    );
}

#[test]
fn criterion_9_open_question_scan_completes_without_judging() {
    let corpus = default_corpus(false);
    let report = search_open_question(&corpus, &RunOptions::default());
    assert!(report.build_errors.is_empty(), "{:?}", report.build_errors);
    assert_eq!(report.rings_scanned, 135);
    assert!(report.instances_checked > 10_000, "only {}", report.instances_checked);
    // The hit list is data, not a verdict: nothing is asserted about it.
    println!(
        "criterion 9: PASS - {} instances over {} rings, {} hits recorded",
        report.instances_checked,
        report.rings_scanned,
        report.hits.len()
    );
}
