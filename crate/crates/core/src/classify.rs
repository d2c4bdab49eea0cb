use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::CoreError;
use crate::ideal::Ideal;
use crate::ring::Elem;

/// The ten ideal predicates, in canonical order.
pub const FLAGS: [&str; 10] = [
    "prime",
    "weakly_prime",
    "primary",
    "almost_prime",
    "two_prime",
    "two_absorbing",
    "weakly_two_absorbing",
    "one_absorbing_prime",
    "weakly_one_absorbing_prime",
    "one_absorbing_primary",
];

/// Verdicts for all ten predicates on one ideal, with the lexicographically
/// first violating tuple for every false flag. An improper ideal gets all
/// flags false and no witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationProfile {
    pub prime: bool,
    pub weakly_prime: bool,
    pub primary: bool,
    pub almost_prime: bool,
    pub two_prime: bool,
    pub two_absorbing: bool,
    pub weakly_two_absorbing: bool,
    pub one_absorbing_prime: bool,
    pub weakly_one_absorbing_prime: bool,
    pub one_absorbing_primary: bool,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, Vec<Elem>>,
}

impl ClassificationProfile {
    pub fn get(&self, flag: &str) -> Option<bool> {
        match flag {
            "prime" => Some(self.prime),
            "weakly_prime" => Some(self.weakly_prime),
            "primary" => Some(self.primary),
            "almost_prime" => Some(self.almost_prime),
            "two_prime" => Some(self.two_prime),
            "two_absorbing" => Some(self.two_absorbing),
            "weakly_two_absorbing" => Some(self.weakly_two_absorbing),
            "one_absorbing_prime" => Some(self.one_absorbing_prime),
            "weakly_one_absorbing_prime" => Some(self.weakly_one_absorbing_prime),
            "one_absorbing_primary" => Some(self.one_absorbing_primary),
            _ => None,
        }
    }
}

// Every violating tuple of any predicate below consists of nonunits: a unit
// factor can be divided out, which forces one of the conclusion disjuncts.
// All scans therefore iterate the nonunit list only; the naive all-element
// oracles in the test suite confirm the restriction is lossless. Scans run
// in ascending index order (with b >= a, and c >= b where the predicate is
// symmetric in those slots), so the first hit is the lexicographically
// smallest violating tuple overall.

/// First (a, b) with ab in I, a not in I, b not in I.
pub fn prime_violation(i: &Ideal) -> Option<Vec<Elem>> {
    let ring = i.ring();
    let nonunits = ring.nonunits();
    for (ai, &a) in nonunits.iter().enumerate() {
        let a_in = i.contains(a);
        for &b in &nonunits[ai..] {
            if i.contains(ring.mul(a, b)) && !a_in && !i.contains(b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// First (a, b) with 0 != ab in I, a not in I, b not in I.
pub fn weakly_prime_violation(i: &Ideal) -> Option<Vec<Elem>> {
    let ring = i.ring();
    let nonunits = ring.nonunits();
    for (ai, &a) in nonunits.iter().enumerate() {
        let a_in = i.contains(a);
        for &b in &nonunits[ai..] {
            let p = ring.mul(a, b);
            if p != 0 && i.contains(p) && !a_in && !i.contains(b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// First (a, b) with ab in I, a not in I, b not in the radical of I.
/// Asymmetric, so the scan runs over ordered pairs.
pub fn primary_violation(i: &Ideal) -> Option<Vec<Elem>> {
    let ring = i.ring();
    let rad = i.radical();
    let nonunits = ring.nonunits();
    for &a in nonunits {
        if i.contains(a) {
            continue;
        }
        for &b in nonunits {
            if i.contains(ring.mul(a, b)) && !rad.contains(b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// First (a, b) with ab in I but not in I^2, a not in I, b not in I.
pub fn almost_prime_violation(i: &Ideal) -> Option<Vec<Elem>> {
    let ring = i.ring();
    let sq = i.power(2).expect("square of an ideal");
    let nonunits = ring.nonunits();
    for (ai, &a) in nonunits.iter().enumerate() {
        let a_in = i.contains(a);
        for &b in &nonunits[ai..] {
            let p = ring.mul(a, b);
            if i.contains(p) && !sq.contains(p) && !a_in && !i.contains(b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// First (a, b) with ab in I, a^2 not in I, b^2 not in I.
pub fn two_prime_violation(i: &Ideal) -> Option<Vec<Elem>> {
    let ring = i.ring();
    let nonunits = ring.nonunits();
    for (ai, &a) in nonunits.iter().enumerate() {
        let a_sq_in = i.contains(ring.mul(a, a));
        if a_sq_in {
            continue;
        }
        for &b in &nonunits[ai..] {
            if i.contains(ring.mul(a, b)) && !i.contains(ring.mul(b, b)) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn two_absorbing_violation_impl(i: &Ideal, require_nonzero: bool) -> Option<Vec<Elem>> {
    let ring = i.ring();
    let nonunits = ring.nonunits();
    for (ai, &a) in nonunits.iter().enumerate() {
        for (bj, &b) in nonunits[ai..].iter().enumerate() {
            let ab = ring.mul(a, b);
            if i.contains(ab) {
                continue;
            }
            for &c in &nonunits[ai + bj..] {
                let abc = ring.mul(ab, c);
                if !i.contains(abc) || (require_nonzero && abc == 0) {
                    continue;
                }
                if !i.contains(ring.mul(a, c)) && !i.contains(ring.mul(b, c)) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// First sorted (a, b, c) with abc in I and none of ab, ac, bc in I.
pub fn two_absorbing_violation(i: &Ideal) -> Option<Vec<Elem>> {
    two_absorbing_violation_impl(i, false)
}

/// Same with abc != 0 required.
pub fn weakly_two_absorbing_violation(i: &Ideal) -> Option<Vec<Elem>> {
    two_absorbing_violation_impl(i, true)
}

fn one_absorbing_violation_impl(i: &Ideal, require_nonzero: bool) -> Option<Vec<Elem>> {
    let ring = i.ring();
    let nonunits = ring.nonunits();
    for (ai, &a) in nonunits.iter().enumerate() {
        for &b in &nonunits[ai..] {
            let ab = ring.mul(a, b);
            if i.contains(ab) {
                continue;
            }
            for &c in nonunits {
                if i.contains(c) {
                    continue;
                }
                let abc = ring.mul(ab, c);
                if i.contains(abc) && !(require_nonzero && abc == 0) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// First (a, b, c) with a <= b, all nonunit, abc in I, ab not in I, c not
/// in I.
pub fn one_absorbing_prime_violation(i: &Ideal) -> Option<Vec<Elem>> {
    one_absorbing_violation_impl(i, false)
}

/// Same with abc != 0 required.
pub fn weakly_one_absorbing_prime_violation(i: &Ideal) -> Option<Vec<Elem>> {
    one_absorbing_violation_impl(i, true)
}

/// First (a, b, c) with a <= b, all nonunit, abc in I, ab not in I, c not
/// in the radical of I.
pub fn one_absorbing_primary_violation(i: &Ideal) -> Option<Vec<Elem>> {
    let ring = i.ring();
    let rad = i.radical();
    let nonunits = ring.nonunits();
    for (ai, &a) in nonunits.iter().enumerate() {
        for &b in &nonunits[ai..] {
            let ab = ring.mul(a, b);
            if i.contains(ab) {
                continue;
            }
            for &c in nonunits {
                if rad.contains(c) {
                    continue;
                }
                if i.contains(ring.mul(ab, c)) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

macro_rules! flag_predicates {
    ($($is_fn:ident => $violation:ident),* $(,)?) => {
        $(
            pub fn $is_fn(i: &Ideal) -> bool {
                i.is_proper() && $violation(i).is_none()
            }
        )*
    };
}

flag_predicates! {
    is_prime => prime_violation,
    is_weakly_prime => weakly_prime_violation,
    is_primary => primary_violation,
    is_almost_prime => almost_prime_violation,
    is_two_prime => two_prime_violation,
    is_two_absorbing => two_absorbing_violation,
    is_weakly_two_absorbing => weakly_two_absorbing_violation,
    is_one_absorbing_prime => one_absorbing_prime_violation,
    is_weakly_one_absorbing_prime => weakly_one_absorbing_prime_violation,
    is_one_absorbing_primary => one_absorbing_primary_violation,
}

/// Evaluates all ten predicates, recording the first violating tuple for
/// every false one, then cross-checks the implication lattice between the
/// verdicts. A lattice violation is a bug in the scans, reported loudly.
pub fn classify(i: &Ideal) -> Result<ClassificationProfile, CoreError> {
    if !i.is_proper() {
        return Ok(ClassificationProfile {
            prime: false,
            weakly_prime: false,
            primary: false,
            almost_prime: false,
            two_prime: false,
            two_absorbing: false,
            weakly_two_absorbing: false,
            one_absorbing_prime: false,
            weakly_one_absorbing_prime: false,
            one_absorbing_primary: false,
            witnesses: BTreeMap::new(),
        });
    }
    let mut witnesses = BTreeMap::new();
    let mut eval = |flag: &str, violation: Option<Vec<Elem>>| -> bool {
        match violation {
            Some(tuple) => {
                witnesses.insert(flag.to_string(), tuple);
                false
            }
            None => true,
        }
    };
    let profile = ClassificationProfile {
        prime: eval("prime", prime_violation(i)),
        weakly_prime: eval("weakly_prime", weakly_prime_violation(i)),
        primary: eval("primary", primary_violation(i)),
        almost_prime: eval("almost_prime", almost_prime_violation(i)),
        two_prime: eval("two_prime", two_prime_violation(i)),
        two_absorbing: eval("two_absorbing", two_absorbing_violation(i)),
        weakly_two_absorbing: eval("weakly_two_absorbing", weakly_two_absorbing_violation(i)),
        one_absorbing_prime: eval("one_absorbing_prime", one_absorbing_prime_violation(i)),
        weakly_one_absorbing_prime: eval(
            "weakly_one_absorbing_prime",
            weakly_one_absorbing_prime_violation(i),
        ),
        one_absorbing_primary: eval("one_absorbing_primary", one_absorbing_primary_violation(i)),
        witnesses,
    };
    let implications = [
        ("prime", profile.prime, "weakly_prime", profile.weakly_prime),
        ("prime", profile.prime, "one_absorbing_prime", profile.one_absorbing_prime),
        (
            "one_absorbing_prime",
            profile.one_absorbing_prime,
            "weakly_one_absorbing_prime",
            profile.weakly_one_absorbing_prime,
        ),
        (
            "weakly_prime",
            profile.weakly_prime,
            "weakly_one_absorbing_prime",
            profile.weakly_one_absorbing_prime,
        ),
        (
            "weakly_one_absorbing_prime",
            profile.weakly_one_absorbing_prime,
            "weakly_two_absorbing",
            profile.weakly_two_absorbing,
        ),
        (
            "one_absorbing_prime",
            profile.one_absorbing_prime,
            "one_absorbing_primary",
            profile.one_absorbing_primary,
        ),
    ];
    for (from, from_val, to, to_val) in implications {
        if from_val && !to_val {
            return Err(CoreError::Internal(format!(
                "implication {from} => {to} failed on ideal {:?} of {}",
                i.members(),
                i.ring().label()
            )));
        }
    }
    Ok(profile)
}

/// Re-checks that `tuple` is a genuine violating tuple of `flag` for this
/// ideal, for witness recertification. Unknown flags return false.
pub fn verify_violation(i: &Ideal, flag: &str, tuple: &[Elem]) -> bool {
    let ring = i.ring();
    if tuple.iter().any(|&e| e >= ring.order() || ring.is_unit(e)) || !i.is_proper() {
        return false;
    }
    match (flag, tuple) {
        ("prime", [a, b]) => {
            i.contains(ring.mul(*a, *b)) && !i.contains(*a) && !i.contains(*b)
        }
        ("weakly_prime", [a, b]) => {
            let p = ring.mul(*a, *b);
            p != 0 && i.contains(p) && !i.contains(*a) && !i.contains(*b)
        }
        ("primary", [a, b]) => {
            i.contains(ring.mul(*a, *b)) && !i.contains(*a) && !i.radical().contains(*b)
        }
        ("almost_prime", [a, b]) => {
            let p = ring.mul(*a, *b);
            let sq = i.power(2).expect("square of an ideal");
            i.contains(p) && !sq.contains(p) && !i.contains(*a) && !i.contains(*b)
        }
        ("two_prime", [a, b]) => {
            i.contains(ring.mul(*a, *b))
                && !i.contains(ring.mul(*a, *a))
                && !i.contains(ring.mul(*b, *b))
        }
        ("two_absorbing", [a, b, c]) | ("weakly_two_absorbing", [a, b, c]) => {
            let abc = ring.mul(ring.mul(*a, *b), *c);
            i.contains(abc)
                && (flag == "two_absorbing" || abc != 0)
                && !i.contains(ring.mul(*a, *b))
                && !i.contains(ring.mul(*a, *c))
                && !i.contains(ring.mul(*b, *c))
        }
        ("one_absorbing_prime", [a, b, c]) | ("weakly_one_absorbing_prime", [a, b, c]) => {
            let abc = ring.mul(ring.mul(*a, *b), *c);
            i.contains(abc)
                && (flag == "one_absorbing_prime" || abc != 0)
                && !i.contains(ring.mul(*a, *b))
                && !i.contains(*c)
        }
        ("one_absorbing_primary", [a, b, c]) => {
            i.contains(ring.mul(ring.mul(*a, *b), *c))
                && !i.contains(ring.mul(*a, *b))
                && !i.radical().contains(*c)
        }
        _ => false,
    }
}

/// First (a, b, c) with a <= b, all nonunit, abc = 0, ab not in I, c not in
/// I. Requires a proper ideal.
pub fn find_triple_zero(i: &Ideal) -> Result<Option<[Elem; 3]>, CoreError> {
    if !i.is_proper() {
        return Err(CoreError::DomainError(
            "triple zeros are defined for proper ideals only".into(),
        ));
    }
    let ring = i.ring();
    let nonunits = ring.nonunits();
    for (ai, &a) in nonunits.iter().enumerate() {
        for &b in &nonunits[ai..] {
            let ab = ring.mul(a, b);
            if i.contains(ab) {
                continue;
            }
            for &c in nonunits {
                if !i.contains(c) && ring.mul(ab, c) == 0 {
                    return Ok(Some([a, b, c]));
                }
            }
        }
    }
    Ok(None)
}

/// True iff no member triple (a, b, c) of (i1, i2, i3) is a triple zero of
/// `i`. Requires i1 i2 i3 to be contained in `i` and all ideals to share
/// the ring.
pub fn is_free_triple_zero(
    i: &Ideal,
    i1: &Ideal,
    i2: &Ideal,
    i3: &Ideal,
) -> Result<bool, CoreError> {
    let triple_product = i1.product(i2)?.product(i3)?;
    if !triple_product.subset_of(i)? {
        return Err(CoreError::DomainError(
            "triple product is not contained in the target ideal".into(),
        ));
    }
    let ring = i.ring();
    for &a in i1.members() {
        if ring.is_unit(a) {
            continue;
        }
        for &b in i2.members() {
            if ring.is_unit(b) {
                continue;
            }
            let ab = ring.mul(a, b);
            if i.contains(ab) {
                continue;
            }
            for &c in i3.members() {
                if !ring.is_unit(c) && !i.contains(c) && ring.mul(ab, c) == 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
