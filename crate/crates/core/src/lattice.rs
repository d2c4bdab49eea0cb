use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::classify::prime_violation;
use crate::error::CoreError;
use crate::ideal::Ideal;
use crate::ring::{Elem, FiniteRing};

/// One ideal of the lattice with its structural flags.
#[derive(Debug, Clone)]
pub struct LatticeEntry {
    pub ideal: Ideal,
    pub proper: bool,
    pub maximal: bool,
    pub prime: bool,
}

/// The complete ideal lattice of a ring, sorted by (cardinality, members).
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ring: Arc<FiniteRing>,
    entries: Vec<LatticeEntry>,
}

/// Enumerates every ideal by closing the zero ideal under joins with
/// principal ideals. I + Ra is a union of additive cosets I + p, and a
/// representative p already inside the accumulated set contributes nothing
/// new, so each join costs |Ra| skip checks plus one pass per new coset.
pub fn enumerate_ideals(ring: &Arc<FiniteRing>, cap: usize) -> Result<IdealLattice, CoreError> {
    let n = ring.order();
    if n > cap {
        return Err(CoreError::CapExceeded { order: n, cap });
    }
    let words = n.div_ceil(64);
    let full_count = n;

    // Distinct principal ideals; Ra = {ra} needs no additive closure.
    let mut principal_masks: Vec<Vec<u64>> = Vec::new();
    let mut principal_members: Vec<Vec<Elem>> = Vec::new();
    let mut seen_principal: HashMap<Vec<u64>, ()> = HashMap::new();
    for a in 0..n {
        let mut mask = vec![0u64; words];
        let mut members = Vec::new();
        for r in 0..n {
            let p = ring.mul(r, a);
            if mask[p / 64] >> (p % 64) & 1 == 0 {
                mask[p / 64] |= 1 << (p % 64);
                members.push(p);
            }
        }
        if seen_principal.insert(mask.clone(), ()).is_none() {
            members.sort_unstable();
            principal_masks.push(mask);
            principal_members.push(members);
        }
    }

    let mut seen: HashMap<Vec<u64>, ()> = HashMap::new();
    let mut masks: Vec<Vec<u64>> = Vec::new();
    let mut member_lists: Vec<Vec<Elem>> = Vec::new();
    let zero_mask = {
        let mut m = vec![0u64; words];
        m[0] |= 1;
        m
    };
    seen.insert(zero_mask.clone(), ());
    masks.push(zero_mask);
    member_lists.push(vec![0]);
    let mut cursor = 0;
    while cursor < masks.len() {
        let current_members = member_lists[cursor].clone();
        let current_mask = masks[cursor].clone();
        cursor += 1;
        if current_members.len() == full_count {
            continue;
        }
        for (pm, pmembers) in principal_masks.iter().zip(&principal_members) {
            if pm.iter().zip(&current_mask).all(|(p, c)| p & !c == 0) {
                continue; // principal already inside
            }
            let mut mask = current_mask.clone();
            let mut members = current_members.clone();
            for &p in pmembers {
                if mask[p / 64] >> (p % 64) & 1 == 1 {
                    continue;
                }
                for &i in &current_members {
                    let s = ring.add(i, p);
                    if mask[s / 64] >> (s % 64) & 1 == 0 {
                        mask[s / 64] |= 1 << (s % 64);
                        members.push(s);
                    }
                }
            }
            if seen.insert(mask.clone(), ()).is_none() {
                members.sort_unstable();
                masks.push(mask);
                member_lists.push(members);
            }
        }
    }

    let mut ideals: Vec<Ideal> =
        member_lists.into_iter().map(|m| Ideal::from_sorted_unchecked(ring, m)).collect();
    ideals.sort_by(|a, b| (a.len(), a.members()).cmp(&(b.len(), b.members())));

    let proper_flags: Vec<bool> = ideals.iter().map(|i| i.is_proper()).collect();
    let mut maximal_flags = vec![false; ideals.len()];
    for (k, i) in ideals.iter().enumerate() {
        if !proper_flags[k] {
            continue;
        }
        let covered = ideals.iter().enumerate().any(|(j, other)| {
            j != k
                && proper_flags[j]
                && other.len() > i.len()
                && i.subset_of(other).expect("same ring")
        });
        maximal_flags[k] = !covered;
    }
    let entries = ideals
        .into_iter()
        .enumerate()
        .map(|(k, ideal)| {
            let prime = proper_flags[k] && prime_violation(&ideal).is_none();
            LatticeEntry { ideal, proper: proper_flags[k], maximal: maximal_flags[k], prime }
        })
        .collect();
    Ok(IdealLattice { ring: Arc::clone(ring), entries })
}

impl IdealLattice {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn entries(&self) -> &[LatticeEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Position of an ideal with these exact members, if present.
    pub fn position_of(&self, ideal: &Ideal) -> Option<usize> {
        self.position_of_members(ideal.members())
    }

    /// Position by a sorted member list, avoiding an Ideal construction.
    pub fn position_of_members(&self, members: &[Elem]) -> Option<usize> {
        self.entries
            .binary_search_by(|e| {
                (e.ideal.len(), e.ideal.members()).cmp(&(members.len(), members))
            })
            .ok()
    }

    pub fn maximal_ideals(&self) -> Vec<&Ideal> {
        self.entries.iter().filter(|e| e.maximal).map(|e| &e.ideal).collect()
    }

    /// Intersection of all maximal ideals.
    pub fn jacobson_radical(&self) -> Ideal {
        let mut acc = Ideal::full(&self.ring);
        for m in self.maximal_ideals() {
            acc = acc.intersect(m).expect("same ring");
        }
        acc
    }

    /// Prime ideals containing `i` that are minimal with that property.
    pub fn minimal_primes_over(&self, i: &Ideal) -> Result<Vec<&Ideal>, CoreError> {
        if !Arc::ptr_eq(i.ring(), &self.ring) {
            return Err(CoreError::DomainError("ideal belongs to a different ring".into()));
        }
        if !i.is_proper() {
            return Err(CoreError::DomainError(
                "minimal primes are defined over proper ideals only".into(),
            ));
        }
        let over: Vec<&Ideal> = self
            .entries
            .iter()
            .filter(|e| e.prime)
            .map(|e| &e.ideal)
            .filter(|p| i.subset_of(p).expect("same ring"))
            .collect();
        Ok(over
            .iter()
            .filter(|p| {
                !over
                    .iter()
                    .any(|q| q.len() < p.len() && q.subset_of(p).expect("same ring"))
            })
            .copied()
            .collect())
    }

    pub fn view(&self) -> LatticeView<'_> {
        LatticeView {
            ring_label: self.ring.label(),
            ideals: self
                .entries
                .iter()
                .map(|e| LatticeEntryView {
                    members: e.ideal.members(),
                    proper: e.proper,
                    maximal: e.maximal,
                    prime: e.prime,
                })
                .collect(),
        }
    }
}

/// Serializable snapshot of a lattice.
#[derive(Serialize)]
pub struct LatticeView<'a> {
    pub ring_label: &'a str,
    pub ideals: Vec<LatticeEntryView<'a>>,
}

#[derive(Serialize)]
pub struct LatticeEntryView<'a> {
    pub members: &'a [Elem],
    pub proper: bool,
    pub maximal: bool,
    pub prime: bool,
}
