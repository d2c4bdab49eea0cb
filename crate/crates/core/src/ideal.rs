use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::CoreError;
use crate::ring::{Elem, FiniteRing};

fn mask_words(order: usize) -> usize {
    order.div_ceil(64)
}

#[inline]
fn mask_get(mask: &[u64], e: Elem) -> bool {
    mask[e / 64] >> (e % 64) & 1 == 1
}

#[inline]
fn mask_set(mask: &mut [u64], e: Elem) -> bool {
    let word = &mut mask[e / 64];
    let bit = 1u64 << (e % 64);
    let fresh = *word & bit == 0;
    *word |= bit;
    fresh
}

/// An ideal of a finite commutative ring, stored as a sorted member list
/// plus a membership bitmask.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    members: Vec<Elem>,
    mask: Vec<u64>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.members == other.members
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ideal {
    fn from_mask(ring: &Arc<FiniteRing>, mask: Vec<u64>) -> Ideal {
        let members = (0..ring.order()).filter(|&e| mask_get(&mask, e)).collect();
        Ideal { ring: Arc::clone(ring), members, mask }
    }

    pub fn zero(ring: &Arc<FiniteRing>) -> Ideal {
        let mut mask = vec![0; mask_words(ring.order())];
        mask_set(&mut mask, 0);
        Ideal { ring: Arc::clone(ring), members: vec![0], mask }
    }

    pub fn full(ring: &Arc<FiniteRing>) -> Ideal {
        let mut mask = vec![0; mask_words(ring.order())];
        for e in 0..ring.order() {
            mask_set(&mut mask, e);
        }
        Ideal { ring: Arc::clone(ring), members: (0..ring.order()).collect(), mask }
    }

    /// The smallest ideal containing `gens`; the zero ideal for no
    /// generators.
    pub fn generated(ring: &Arc<FiniteRing>, gens: &[Elem]) -> Result<Ideal, CoreError> {
        let n = ring.order();
        if let Some(&bad) = gens.iter().find(|&&g| g >= n) {
            return Err(CoreError::DomainError(format!(
                "generator {bad} out of range for {}",
                ring.label()
            )));
        }
        let mut mask = vec![0; mask_words(n)];
        let mut members: Vec<Elem> = Vec::new();
        let mut queue: Vec<Elem> = Vec::new();
        let push = |e: Elem, mask: &mut Vec<u64>, members: &mut Vec<Elem>, queue: &mut Vec<Elem>| {
            if mask_set(mask, e) {
                members.push(e);
                queue.push(e);
            }
        };
        push(0, &mut mask, &mut members, &mut queue);
        for &g in gens {
            push(g, &mut mask, &mut members, &mut queue);
        }
        // Worklist closure: when x is processed, every current member y has
        // x+y added, and every ring multiple rx added. Elements added later
        // pick up their sums with x when they are processed themselves.
        while let Some(x) = queue.pop() {
            for r in 0..n {
                push(ring.mul(r, x), &mut mask, &mut members, &mut queue);
            }
            let snapshot = members.len();
            for i in 0..snapshot {
                let y = members[i];
                push(ring.add(x, y), &mut mask, &mut members, &mut queue);
            }
        }
        members.sort_unstable();
        Ok(Ideal { ring: Arc::clone(ring), members, mask })
    }

    /// Wraps an explicit member set, verifying it is an ideal.
    pub fn from_members(ring: &Arc<FiniteRing>, members: &[Elem]) -> Result<Ideal, CoreError> {
        let n = ring.order();
        if let Some(&bad) = members.iter().find(|&&m| m >= n) {
            return Err(CoreError::DomainError(format!(
                "member {bad} out of range for {}",
                ring.label()
            )));
        }
        let mut sorted: Vec<Elem> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut mask = vec![0; mask_words(n)];
        for &m in &sorted {
            mask_set(&mut mask, m);
        }
        if !mask_get(&mask, 0) {
            return Err(CoreError::DomainError("ideal must contain 0".into()));
        }
        for &a in &sorted {
            for &b in &sorted {
                if !mask_get(&mask, ring.add(a, b)) {
                    return Err(CoreError::DomainError(format!(
                        "set not closed under addition at ({a}, {b})"
                    )));
                }
            }
            for r in 0..n {
                if !mask_get(&mask, ring.mul(r, a)) {
                    return Err(CoreError::DomainError(format!(
                        "set does not absorb multiplication at ({r}, {a})"
                    )));
                }
            }
        }
        Ok(Ideal { ring: Arc::clone(ring), members: sorted, mask })
    }

    pub(crate) fn from_sorted_unchecked(ring: &Arc<FiniteRing>, members: Vec<Elem>) -> Ideal {
        let mut mask = vec![0; mask_words(ring.order())];
        for &m in &members {
            mask_set(&mut mask, m);
        }
        Ideal { ring: Arc::clone(ring), members, mask }
    }

    /// All nilpotent elements. In a finite commutative ring these form an
    /// ideal (binomial expansion plus absorption), so no closure is needed.
    pub fn nilradical(ring: &Arc<FiniteRing>) -> Ideal {
        let members: Vec<Elem> = (0..ring.order()).filter(|&e| ring.is_nilpotent(e)).collect();
        Ideal::from_sorted_unchecked(ring, members)
    }

    /// The unique maximal ideal (the nonunits) when the ring is local.
    pub fn local_maximal_ideal(ring: &Arc<FiniteRing>) -> Option<Ideal> {
        if ring.is_local() {
            Some(Ideal::from_sorted_unchecked(ring, ring.nonunits().to_vec()))
        } else {
            None
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn mask(&self) -> &[u64] {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // ideals always contain 0
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        mask_get(&self.mask, e)
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.ring.order()
    }

    fn same_ring(&self, other: &Ideal) -> Result<(), CoreError> {
        if Arc::ptr_eq(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(CoreError::DomainError(format!(
                "ideals belong to different rings ({} vs {})",
                self.ring.label(),
                other.ring.label()
            )))
        }
    }

    pub fn subset_of(&self, other: &Ideal) -> Result<bool, CoreError> {
        self.same_ring(other)?;
        Ok(self.mask.iter().zip(&other.mask).all(|(a, b)| a & !b == 0))
    }

    /// Sum I + J = {i + j}; the elementwise sums already form an ideal.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, CoreError> {
        self.same_ring(other)?;
        let ring = &self.ring;
        // The sum is a union of additive cosets I + j. A representative j
        // that already landed in the accumulated set belongs to a coset
        // that is fully present, so each j is either skipped or brings in
        // a whole new coset; total work stays linear in the result size.
        let mut mask = self.mask.clone();
        for &j in &other.members {
            if mask_get(&mask, j) {
                continue;
            }
            for &i in &self.members {
                mask_set(&mut mask, ring.add(i, j));
            }
        }
        Ok(Ideal::from_mask(ring, mask))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, CoreError> {
        self.same_ring(other)?;
        let mask: Vec<u64> = self.mask.iter().zip(&other.mask).map(|(a, b)| a & b).collect();
        Ok(Ideal::from_mask(&self.ring, mask))
    }

    /// Product ideal: additive closure of the pairwise element products.
    /// The raw product set already absorbs ring multiplication, so only
    /// sums have to be closed over.
    pub fn product(&self, other: &Ideal) -> Result<Ideal, CoreError> {
        self.same_ring(other)?;
        let ring = &self.ring;
        let mut mask = vec![0; self.mask.len()];
        let mut members = Vec::new();
        let mut queue = Vec::new();
        for &i in &self.members {
            for &j in &other.members {
                let p = ring.mul(i, j);
                if mask_set(&mut mask, p) {
                    members.push(p);
                    queue.push(p);
                }
            }
        }
        while let Some(x) = queue.pop() {
            let snapshot = members.len();
            for k in 0..snapshot {
                let s = ring.add(x, members[k]);
                if mask_set(&mut mask, s) {
                    members.push(s);
                    queue.push(s);
                }
            }
        }
        members.sort_unstable();
        Ok(Ideal { ring: Arc::clone(ring), members, mask })
    }

    /// I^k for k >= 1.
    pub fn power(&self, k: u32) -> Result<Ideal, CoreError> {
        if k == 0 {
            return Err(CoreError::DomainError("ideal power requires exponent >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Radical {x : x^k in I for some k}; the additive order bounds k.
    pub fn radical(&self) -> Ideal {
        let ring = &self.ring;
        let n = ring.order();
        let members: Vec<Elem> = (0..n)
            .filter(|&x| {
                let mut acc = x;
                for _ in 0..n {
                    if self.contains(acc) {
                        return true;
                    }
                    acc = ring.mul(acc, x);
                }
                false
            })
            .collect();
        Ideal::from_sorted_unchecked(ring, members)
    }

    /// Colon ideal (I : c) = {r : rc in I}.
    pub fn colon(&self, c: Elem) -> Result<Ideal, CoreError> {
        let ring = &self.ring;
        if c >= ring.order() {
            return Err(CoreError::DomainError(format!(
                "element {c} out of range for {}",
                ring.label()
            )));
        }
        let members: Vec<Elem> =
            (0..ring.order()).filter(|&r| self.contains(ring.mul(r, c))).collect();
        Ok(Ideal::from_sorted_unchecked(ring, members))
    }
}

/// Annihilator of an element: (0 : x).
pub fn annihilator(ring: &Arc<FiniteRing>, x: Elem) -> Result<Ideal, CoreError> {
    Ideal::zero(ring).colon(x)
}
