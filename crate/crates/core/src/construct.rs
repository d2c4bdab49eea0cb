use std::sync::Arc;

use crate::error::CoreError;
use crate::ideal::Ideal;
use crate::ring::{Elem, FiniteRing};

/// Z/nZ with elements 0..n-1 in the natural order.
pub fn zmod(n: usize) -> Result<FiniteRing, CoreError> {
    if n < 2 {
        return Err(CoreError::InvalidSpec(format!("modulus must be at least 2, got {n}")));
    }
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            add[a * n + b] = (a + b) % n;
            mul[a * n + b] = (a * b) % n;
        }
    }
    FiniteRing::from_raw_parts(format!("Z{n}"), n, add, mul, 1, None)
}

/// Encodes mixed-radix digits with the first digit most significant.
pub fn mixed_radix_encode(digits: &[usize], dims: &[usize]) -> usize {
    debug_assert_eq!(digits.len(), dims.len());
    digits.iter().zip(dims).fold(0, |acc, (&d, &n)| acc * n + d)
}

/// Inverse of `mixed_radix_encode`; returns big-endian digits.
pub fn mixed_radix_decode(index: usize, dims: &[usize]) -> Vec<usize> {
    let mut rest = index;
    let mut digits = vec![0; dims.len()];
    for (slot, &n) in digits.iter_mut().zip(dims).rev() {
        *slot = rest % n;
        rest /= n;
    }
    digits
}

fn paren_if_spaced(label: &str) -> String {
    if label.contains(' ') {
        format!("({label})")
    } else {
        label.to_string()
    }
}

/// Direct product of two or more rings. Element indices are mixed-radix
/// encodings of component tuples, first factor most significant, so tuple
/// displays read left to right like the index ordering.
pub fn product(factors: &[Arc<FiniteRing>]) -> Result<FiniteRing, CoreError> {
    if factors.len() < 2 {
        return Err(CoreError::InvalidSpec(format!(
            "product requires at least 2 factors, got {}",
            factors.len()
        )));
    }
    let dims: Vec<usize> = factors.iter().map(|f| f.order()).collect();
    let order = dims.iter().product();
    let digits: Vec<Vec<usize>> = (0..order).map(|e| mixed_radix_decode(e, &dims)).collect();
    let mut add = vec![0; order * order];
    let mut mul = vec![0; order * order];
    let mut buf = vec![0; dims.len()];
    for a in 0..order {
        for b in 0..order {
            for (k, f) in factors.iter().enumerate() {
                buf[k] = f.add(digits[a][k], digits[b][k]);
            }
            add[a * order + b] = mixed_radix_encode(&buf, &dims);
            for (k, f) in factors.iter().enumerate() {
                buf[k] = f.mul(digits[a][k], digits[b][k]);
            }
            mul[a * order + b] = mixed_radix_encode(&buf, &dims);
        }
    }
    let ones: Vec<usize> = factors.iter().map(|f| f.one()).collect();
    let one = mixed_radix_encode(&ones, &dims);
    let names = digits
        .iter()
        .map(|d| {
            let parts: Vec<&str> =
                d.iter().zip(factors).map(|(&e, f)| f.elem_name(e)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let label =
        factors.iter().map(|f| paren_if_spaced(f.label())).collect::<Vec<_>>().join(" x ");
    FiniteRing::from_raw_parts(label, order, add, mul, one, Some(names))
}

/// Quotient ring together with the projection from the base ring.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    pub ring: Arc<FiniteRing>,
    /// projection[a] = index of the coset of base element a.
    pub projection: Vec<Elem>,
}

/// Quotient of `base` by the ideal generated by `gens`. Cosets are indexed
/// by their minimal representative, so the coset of 0 is element 0.
pub fn quotient(base: &Arc<FiniteRing>, gens: &[Elem]) -> Result<QuotientMap, CoreError> {
    let ideal = Ideal::generated(base, gens).map_err(|e| match e {
        CoreError::DomainError(msg) => CoreError::InvalidSpec(msg),
        other => other,
    })?;
    if !ideal.is_proper() {
        return Err(CoreError::InvalidSpec(format!(
            "quotient generators span all of {}",
            base.label()
        )));
    }
    let n = base.order();
    let mut rep = vec![usize::MAX; n];
    for a in 0..n {
        rep[a] = ideal.members().iter().map(|&i| base.add(a, i)).min().expect("nonempty ideal");
    }
    let mut reps: Vec<Elem> = (0..n).filter(|&a| rep[a] == a).collect();
    reps.sort_unstable();
    let order = reps.len();
    let pos_of = |r: Elem| reps.binary_search(&r).expect("representative present");
    let projection: Vec<Elem> = (0..n).map(|a| pos_of(rep[a])).collect();
    let mut add = vec![0; order * order];
    let mut mul = vec![0; order * order];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            add[i * order + j] = projection[base.add(a, b)];
            mul[i * order + j] = projection[base.mul(a, b)];
        }
    }
    let one = projection[base.one()];
    let names = reps.iter().map(|&r| format!("[{}]", base.elem_name(r))).collect();
    let gens_text =
        gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",");
    let label = format!("{}/({})", paren_if_spaced(base.label()), gens_text);
    let ring = FiniteRing::from_raw_parts(label, order, add, mul, one, Some(names))?;
    Ok(QuotientMap { ring: Arc::new(ring), projection })
}

/// How a module's scalar action is derived, for labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleKind {
    /// Carrier is an ideal of the base ring, action is ring multiplication.
    Natural,
    /// Carrier sits in the first factor of a product base; a product element
    /// acts through its first coordinate.
    FirstFactor,
    /// Explicit tables supplied by the caller.
    Custom,
}

/// A finite module over a ring, given by explicit addition and action
/// tables. Module element 0 is the additive identity by convention.
#[derive(Debug, Clone)]
pub struct ModuleSpec {
    order: usize,
    /// order x order, row-major.
    add: Vec<usize>,
    /// ring_order x order, row-major: action[r * order + m].
    action: Vec<usize>,
    names: Vec<String>,
    kind: ModuleKind,
    members_display: String,
}

impl ModuleSpec {
    /// Module structure on a subset of the ring itself: the subset must be
    /// an ideal (additively closed, absorbing multiplication), the action is
    /// ring multiplication.
    pub fn natural(ring: &FiniteRing, members: &[Elem]) -> Result<ModuleSpec, CoreError> {
        Self::over_ring_subset(ring, ring, members, ModuleKind::Natural)
    }

    /// Module structure for a product base ring: the carrier is an ideal of
    /// the first factor, and a product element acts through its first
    /// coordinate. `dims` are the factor orders of the base product.
    pub fn first_factor(
        first: &FiniteRing,
        dims: &[usize],
        members: &[Elem],
    ) -> Result<ModuleSpec, CoreError> {
        if dims.first() != Some(&first.order()) {
            return Err(CoreError::InvalidSpec(
                "first factor order does not match product dimensions".into(),
            ));
        }
        let base = Self::over_ring_subset(first, first, members, ModuleKind::FirstFactor)?;
        let ring_order: usize = dims.iter().product();
        let m = base.order;
        let mut action = vec![0; ring_order * m];
        for r in 0..ring_order {
            let first_coord = mixed_radix_decode(r, dims)[0];
            action[r * m..(r + 1) * m]
                .copy_from_slice(&base.action[first_coord * m..(first_coord + 1) * m]);
        }
        Ok(ModuleSpec { action, ..base })
    }

    fn over_ring_subset(
        carrier_ring: &FiniteRing,
        acting_ring: &FiniteRing,
        members: &[Elem],
        kind: ModuleKind,
    ) -> Result<ModuleSpec, CoreError> {
        let mut sorted: Vec<Elem> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(CoreError::InvalidSpec("module carrier must be nonempty".into()));
        }
        if let Some(&bad) = sorted.iter().find(|&&m| m >= carrier_ring.order()) {
            return Err(CoreError::InvalidSpec(format!(
                "module member {bad} out of range for {}",
                carrier_ring.label()
            )));
        }
        if sorted[0] != 0 {
            return Err(CoreError::InvalidSpec("module carrier must contain 0".into()));
        }
        let pos = |e: Elem| sorted.binary_search(&e).ok();
        let m = sorted.len();
        let mut add = vec![0; m * m];
        for (i, &a) in sorted.iter().enumerate() {
            for (j, &b) in sorted.iter().enumerate() {
                add[i * m + j] = pos(carrier_ring.add(a, b)).ok_or_else(|| {
                    CoreError::InvalidSpec(format!(
                        "module carrier not closed under addition: {} + {}",
                        carrier_ring.elem_name(a),
                        carrier_ring.elem_name(b)
                    ))
                })?;
            }
        }
        let n = acting_ring.order();
        let mut action = vec![0; n * m];
        for r in 0..n {
            for (j, &b) in sorted.iter().enumerate() {
                action[r * m + j] = pos(acting_ring.mul(r, b)).ok_or_else(|| {
                    CoreError::InvalidSpec(format!(
                        "module carrier not closed under the ring action: {} * {}",
                        acting_ring.elem_name(r),
                        acting_ring.elem_name(b)
                    ))
                })?;
            }
        }
        let names: Vec<String> =
            sorted.iter().map(|&e| carrier_ring.elem_name(e).to_string()).collect();
        let members_display = format!(
            "{{{}}}",
            sorted.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
        );
        Ok(ModuleSpec { order: m, add, action, names, kind, members_display })
    }

    /// Explicit tables, for exercising the module-axiom validation.
    pub fn from_tables(
        order: usize,
        add: Vec<usize>,
        action: Vec<usize>,
        names: Option<Vec<String>>,
    ) -> Result<ModuleSpec, CoreError> {
        if order == 0 || add.len() != order * order || action.len() % order != 0 {
            return Err(CoreError::InvalidSpec("module table shapes are inconsistent".into()));
        }
        if let Some(&bad) = add.iter().chain(action.iter()).find(|&&e| e >= order) {
            return Err(CoreError::InvalidSpec(format!(
                "module table entry {bad} out of range for order {order}"
            )));
        }
        let names = names.unwrap_or_else(|| (0..order).map(|e| e.to_string()).collect());
        if names.len() != order {
            return Err(CoreError::InvalidSpec("module name list has wrong length".into()));
        }
        Ok(ModuleSpec {
            order,
            add,
            action,
            names,
            kind: ModuleKind::Custom,
            members_display: "custom".into(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    #[inline]
    fn madd(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    #[inline]
    fn act(&self, r: Elem, x: usize) -> usize {
        self.action[r * self.order + x]
    }
}

/// Checks the module axioms of `module` over `base`, naming the first
/// violated axiom.
fn validate_module(base: &FiniteRing, module: &ModuleSpec) -> Result<(), CoreError> {
    let m = module.order;
    let n = base.order();
    if module.action.len() != n * m {
        return Err(CoreError::InvalidSpec(format!(
            "module action table has {} rows, ring has order {}",
            module.action.len() / m,
            n
        )));
    }
    let fail = |axiom: &str| Err(CoreError::InvalidSpec(format!("module axiom violated: {axiom}")));
    for x in 0..m {
        if module.madd(x, 0) != x || module.madd(0, x) != x {
            return fail("0 is an additive identity");
        }
        if !(0..m).any(|y| module.madd(x, y) == 0) {
            return fail("every element has an additive inverse");
        }
        for y in 0..m {
            if module.madd(x, y) != module.madd(y, x) {
                return fail("addition is commutative");
            }
            for z in 0..m {
                if module.madd(module.madd(x, y), z) != module.madd(x, module.madd(y, z)) {
                    return fail("addition is associative");
                }
            }
        }
    }
    for x in 0..m {
        if module.act(base.one(), x) != x {
            return fail("1 acts as identity");
        }
    }
    for r in 0..n {
        for s in 0..n {
            let rs = base.mul(r, s);
            let r_plus_s = base.add(r, s);
            for x in 0..m {
                if module.act(rs, x) != module.act(r, module.act(s, x)) {
                    return fail("action is multiplicative");
                }
                if module.act(r_plus_s, x) != module.madd(module.act(r, x), module.act(s, x)) {
                    return fail("action distributes over ring addition");
                }
            }
        }
    }
    for r in 0..n {
        for x in 0..m {
            for y in 0..m {
                if module.act(r, module.madd(x, y)) != module.madd(module.act(r, x), module.act(r, y))
                {
                    return fail("action distributes over module addition");
                }
            }
        }
    }
    Ok(())
}

/// Trivial extension of `base` by `module`: pairs (r, x) with
/// (r, x)(s, y) = (rs, r.y + s.x). Element index is r * module_order + x,
/// identity is (1, 0). Validates the module axioms first.
pub fn idealization(base: &Arc<FiniteRing>, module: &ModuleSpec) -> Result<FiniteRing, CoreError> {
    validate_module(base, module)?;
    let m = module.order;
    let n = base.order();
    let order = n * m;
    let mut add = vec![0; order * order];
    let mut mul = vec![0; order * order];
    for r in 0..n {
        for x in 0..m {
            let a = r * m + x;
            for s in 0..n {
                for y in 0..m {
                    let b = s * m + y;
                    add[a * order + b] = base.add(r, s) * m + module.madd(x, y);
                    mul[a * order + b] =
                        base.mul(r, s) * m + module.madd(module.act(r, y), module.act(s, x));
                }
            }
        }
    }
    let one = base.one() * m;
    let names = (0..order)
        .map(|e| format!("({},{})", base.elem_name(e / m), module.names[e % m]))
        .collect();
    let label = match module.kind {
        ModuleKind::FirstFactor => {
            format!("idealization({}, proj1, {})", base.label(), module.members_display)
        }
        _ => format!("{} (+) {}", paren_if_spaced(base.label()), module.members_display),
    };
    FiniteRing::from_raw_parts(label, order, add, mul, one, Some(names))
}
