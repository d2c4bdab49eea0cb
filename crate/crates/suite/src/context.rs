use std::sync::Arc;

use ringlab_core::classify::classify;
use ringlab_core::{
    enumerate_ideals, ClassificationProfile, CoreError, Elem, FiniteRing, Ideal, IdealLattice,
    LatticeEntry, RingSpec,
};

pub(crate) fn mask_words(n: usize) -> usize {
    n.div_ceil(64)
}

pub(crate) fn mask_get(mask: &[u64], e: usize) -> bool {
    mask[e / 64] >> (e % 64) & 1 == 1
}

pub(crate) fn mask_set(mask: &mut [u64], e: usize) {
    mask[e / 64] |= 1 << (e % 64);
}

pub(crate) fn mask_or_into(acc: &mut [u64], other: &[u64]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a |= b;
    }
}

pub(crate) fn masks_intersect(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

pub(crate) fn mask_bits(mask: &[u64]) -> impl Iterator<Item = usize> + '_ {
    mask.iter().enumerate().flat_map(|(w, &bits)| {
        let mut rest = bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            }
        })
    })
}

/// One ring with every derived structure the checks share: the full ideal
/// lattice, a classification profile per ideal, containment and
/// ideal-product tables, elementwise pair-product masks, per-element
/// zero-divisor partner masks, and (for product constructions) contexts for
/// the factors. Everything is immutable after construction, so checks on
/// the same ring can run concurrently.
pub struct RingContext {
    pub spec: RingSpec,
    pub ring: Arc<FiniteRing>,
    pub lattice: IdealLattice,
    pub profiles: Vec<ClassificationProfile>,
    /// Lattice indices of the proper ideals, ascending.
    pub proper: Vec<usize>,
    /// Lattice indices of the nonzero proper ideals, ascending.
    pub nonzero_proper: Vec<usize>,
    /// subset[i][j] is true when ideal i is contained in ideal j.
    pub subset: Vec<Vec<bool>>,
    /// product_idx[i][j] = lattice index of the ideal product of i and j.
    pub product_idx: Vec<Vec<usize>>,
    /// Elementwise products {ab : a in i, b in j} as an element mask, stored
    /// for i <= j (the set is symmetric).
    raw_products: Vec<Vec<Vec<u64>>>,
    /// zero_partner[p] = mask of elements c with p*c = 0.
    pub zero_partner: Vec<Vec<u64>>,
    /// pair_count[p] = number of ordered nonunit pairs (a, b) with ab = p.
    pub pair_count: Vec<u64>,
    pub maximal_idx: Vec<usize>,
    pub jacobson_idx: usize,
    pub nilradical_idx: usize,
    pub zero_idx: usize,
    pub full_idx: usize,
    pub is_local: bool,
    pub is_reduced: bool,
    /// Contexts for the factors when the spec is a top-level 2- or 3-factor
    /// product; empty otherwise.
    pub factors: Vec<RingContext>,
}

impl RingContext {
    pub fn build(spec: &RingSpec, cap: usize) -> Result<RingContext, CoreError> {
        let ring = spec.build(cap)?;
        let lattice = enumerate_ideals(&ring, cap)?;
        let profiles: Vec<ClassificationProfile> =
            lattice.entries().iter().map(|e| classify(&e.ideal)).collect::<Result<_, _>>()?;
        let l = lattice.len();
        let n = ring.order();
        let words = mask_words(n);

        let proper: Vec<usize> =
            (0..l).filter(|&i| lattice.entries()[i].proper).collect();
        let nonzero_proper: Vec<usize> = proper
            .iter()
            .copied()
            .filter(|&i| !lattice.entries()[i].ideal.is_zero())
            .collect();

        let mut subset = vec![vec![false; l]; l];
        for (i, row) in subset.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = lattice.entries()[i]
                    .ideal
                    .subset_of(&lattice.entries()[j].ideal)?;
            }
        }

        let mut product_idx = vec![vec![0usize; l]; l];
        let mut raw_products: Vec<Vec<Vec<u64>>> = vec![Vec::new(); l];
        for i in 0..l {
            raw_products[i] = vec![Vec::new(); l - i];
            for j in i..l {
                let a = &lattice.entries()[i].ideal;
                let b = &lattice.entries()[j].ideal;
                let p = a.product(b)?;
                let idx = lattice.position_of(&p).ok_or_else(|| {
                    CoreError::Internal("ideal product missing from the lattice".into())
                })?;
                product_idx[i][j] = idx;
                product_idx[j][i] = idx;
                let mut mask = vec![0u64; words];
                for &x in a.members() {
                    for &y in b.members() {
                        mask_set(&mut mask, ring.mul(x, y));
                    }
                }
                raw_products[i][j - i] = mask;
            }
        }

        let mut zero_partner = vec![vec![0u64; words]; n];
        for (p, row) in zero_partner.iter_mut().enumerate() {
            for c in 0..n {
                if ring.mul(p, c) == 0 {
                    mask_set(row, c);
                }
            }
        }

        let mut pair_count = vec![0u64; n];
        for &a in ring.nonunits() {
            for &b in ring.nonunits() {
                pair_count[ring.mul(a, b)] += 1;
            }
        }

        let maximal_idx: Vec<usize> =
            (0..l).filter(|&i| lattice.entries()[i].maximal).collect();
        let jacobson_idx = lattice
            .position_of(&lattice.jacobson_radical())
            .ok_or_else(|| CoreError::Internal("jacobson radical missing from lattice".into()))?;
        let nilradical_idx = lattice
            .position_of(&Ideal::nilradical(&ring))
            .ok_or_else(|| CoreError::Internal("nilradical missing from lattice".into()))?;
        let zero_idx = lattice
            .position_of(&Ideal::zero(&ring))
            .ok_or_else(|| CoreError::Internal("zero ideal missing from lattice".into()))?;
        let full_idx = lattice
            .position_of(&Ideal::full(&ring))
            .ok_or_else(|| CoreError::Internal("full ideal missing from lattice".into()))?;
        let is_local = ring.is_local();
        let is_reduced = nilradical_idx == zero_idx;

        let factors = match spec {
            RingSpec::Product(fs) if (2..=3).contains(&fs.len()) => fs
                .iter()
                .map(|f| RingContext::build(f, cap))
                .collect::<Result<Vec<_>, _>>()?,
            _ => Vec::new(),
        };

        Ok(RingContext {
            spec: spec.clone(),
            ring,
            lattice,
            profiles,
            proper,
            nonzero_proper,
            subset,
            product_idx,
            raw_products,
            zero_partner,
            pair_count,
            maximal_idx,
            jacobson_idx,
            nilradical_idx,
            zero_idx,
            full_idx,
            is_local,
            is_reduced,
            factors,
        })
    }

    pub fn entry(&self, idx: usize) -> &LatticeEntry {
        &self.lattice.entries()[idx]
    }

    pub fn ideal(&self, idx: usize) -> &Ideal {
        &self.lattice.entries()[idx].ideal
    }

    pub fn profile(&self, idx: usize) -> &ClassificationProfile {
        &self.profiles[idx]
    }

    /// Lattice index of the product of two lattice ideals.
    pub fn product_of(&self, i: usize, j: usize) -> usize {
        self.product_idx[i][j]
    }

    /// Lattice index of the product of three lattice ideals.
    pub fn product3(&self, i: usize, j: usize, k: usize) -> usize {
        self.product_of(self.product_of(i, j), k)
    }

    /// Mask of elementwise products {ab : a in ideal i, b in ideal j}.
    pub fn raw_product_mask(&self, i: usize, j: usize) -> &[u64] {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        &self.raw_products[lo][hi - lo]
    }

    pub fn is_subset(&self, i: usize, j: usize) -> bool {
        self.subset[i][j]
    }

    pub fn w1ap(&self, idx: usize) -> bool {
        self.profiles[idx].weakly_one_absorbing_prime
    }

    pub fn all_proper_w1ap(&self) -> bool {
        self.proper.iter().all(|&i| self.w1ap(i))
    }

    /// True when the ring is a field: zero is the only nonunit.
    pub fn is_field(&self) -> bool {
        self.ring.units_count() == self.ring.order() - 1
    }

    /// Lattice index of the ideal formed from one ideal per factor
    /// (componentwise), for product constructions.
    pub fn factor_tuple_index(&self, slots: &[usize]) -> Result<usize, CoreError> {
        if slots.len() != self.factors.len() || self.factors.is_empty() {
            return Err(CoreError::Internal(
                "factor tuple arity does not match the product construction".into(),
            ));
        }
        let mut members: Vec<Elem> = Vec::new();
        match slots {
            [s0, s1] => {
                let n1 = self.factors[1].ring.order();
                for &a in self.factors[0].ideal(*s0).members() {
                    for &b in self.factors[1].ideal(*s1).members() {
                        members.push(a * n1 + b);
                    }
                }
            }
            [s0, s1, s2] => {
                let n1 = self.factors[1].ring.order();
                let n2 = self.factors[2].ring.order();
                for &a in self.factors[0].ideal(*s0).members() {
                    for &b in self.factors[1].ideal(*s1).members() {
                        for &c in self.factors[2].ideal(*s2).members() {
                            members.push((a * n1 + b) * n2 + c);
                        }
                    }
                }
            }
            _ => unreachable!("factor counts are restricted to 2 or 3"),
        }
        self.lattice.position_of_members(&members).ok_or_else(|| {
            CoreError::Internal("componentwise factor ideal missing from the lattice".into())
        })
    }
}
