use std::fmt;

use crate::error::CoreError;

/// Element of a finite ring, identified by its index into the operation
/// tables. Index 0 is always the additive identity.
pub type Elem = usize;

/// A finite commutative unital ring given by dense operation tables.
///
/// Tables are row-major: `table[a * order + b]`. The additive identity is
/// element 0 by construction; the multiplicative identity is stored per
/// ring. Tables are taken at face value here; `validate` checks the axioms.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    label: String,
    order: usize,
    one: Elem,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    units: Vec<bool>,
    nonunits: Vec<Elem>,
    names: Vec<String>,
}

impl FiniteRing {
    /// Wraps raw tables as a ring without checking the axioms, so corrupt
    /// tables can be fed to `validate`. Only shapes and index ranges are
    /// enforced. Negation defaults to the element itself when no additive
    /// inverse exists in the table; `validate` reports that as a violation.
    pub fn from_raw_parts(
        label: impl Into<String>,
        order: usize,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        one: Elem,
        names: Option<Vec<String>>,
    ) -> Result<Self, CoreError> {
        if order == 0 {
            return Err(CoreError::InvalidSpec("ring order must be positive".into()));
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(CoreError::InvalidSpec(format!(
                "operation tables must have {} entries for order {}",
                order * order,
                order
            )));
        }
        if one >= order {
            return Err(CoreError::InvalidSpec(format!(
                "identity index {one} out of range for order {order}"
            )));
        }
        if let Some(bad) = add.iter().chain(mul.iter()).find(|&&e| e >= order) {
            return Err(CoreError::InvalidSpec(format!(
                "table entry {bad} out of range for order {order}"
            )));
        }
        let names = match names {
            Some(n) => {
                if n.len() != order {
                    return Err(CoreError::InvalidSpec(format!(
                        "expected {} element names, got {}",
                        order,
                        n.len()
                    )));
                }
                n
            }
            None => (0..order).map(|e| e.to_string()).collect(),
        };
        let mut neg = vec![0; order];
        for a in 0..order {
            neg[a] = (0..order).find(|&b| add[a * order + b] == 0).unwrap_or(a);
        }
        let mut units = vec![false; order];
        for a in 0..order {
            units[a] = (0..order).any(|b| mul[a * order + b] == one);
        }
        let nonunits = (0..order).filter(|&a| !units[a]).collect();
        Ok(FiniteRing { label: label.into(), order, one, add, mul, neg, units, nonunits, names })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub(crate) fn set_label(&mut self, label: String) {
        self.label = label;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// a^k for k >= 1.
    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        let mut acc = a;
        for _ in 1..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    #[inline]
    pub fn is_unit(&self, a: Elem) -> bool {
        self.units[a]
    }

    /// Nonunit elements in ascending order.
    pub fn nonunits(&self) -> &[Elem] {
        &self.nonunits
    }

    pub fn units_count(&self) -> usize {
        self.order - self.nonunits.len()
    }

    /// True iff a^k = 0 for some k >= 1. The additive order bounds the
    /// nilpotency index, so k ranges over 1..=order.
    pub fn is_nilpotent(&self, a: Elem) -> bool {
        let mut acc = a;
        for _ in 0..self.order {
            if acc == 0 {
                return true;
            }
            acc = self.mul(acc, a);
        }
        false
    }

    /// A finite commutative ring is local iff its nonunits are closed under
    /// addition (they then form the unique maximal ideal).
    pub fn is_local(&self) -> bool {
        for (i, &a) in self.nonunits.iter().enumerate() {
            for &b in &self.nonunits[i..] {
                if self.units[self.add(a, b)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn elem_name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn elem_names(&self) -> &[String] {
        &self.names
    }

    /// Checks every ring axiom by exhaustive scan, collecting the first
    /// witness for each violated axiom class.
    pub fn validate(&self) -> ValidationReport {
        let n = self.order;
        let mut violations = Vec::new();

        if self.one == 0 && n > 1 {
            violations.push(AxiomViolation::ZeroEqualsOne);
        }
        'comm_add: for a in 0..n {
            for b in a + 1..n {
                if self.add(a, b) != self.add(b, a) {
                    violations.push(AxiomViolation::AddNotCommutative { a, b });
                    break 'comm_add;
                }
            }
        }
        'assoc_add: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        violations.push(AxiomViolation::AddNotAssociative { a, b, c });
                        break 'assoc_add;
                    }
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| self.add(a, 0) != a) {
            violations.push(AxiomViolation::ZeroNotIdentity { a });
        }
        if let Some(a) = (0..n).find(|&a| self.add(a, self.neg[a]) != 0) {
            violations.push(AxiomViolation::MissingNegation { a });
        }
        'comm_mul: for a in 0..n {
            for b in a + 1..n {
                if self.mul(a, b) != self.mul(b, a) {
                    violations.push(AxiomViolation::MulNotCommutative { a, b });
                    break 'comm_mul;
                }
            }
        }
        'assoc_mul: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        violations.push(AxiomViolation::MulNotAssociative { a, b, c });
                        break 'assoc_mul;
                    }
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| self.mul(a, self.one) != a) {
            violations.push(AxiomViolation::OneNotIdentity { a });
        }
        'distrib: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        violations.push(AxiomViolation::NotDistributive { a, b, c });
                        break 'distrib;
                    }
                }
            }
        }
        ValidationReport { violations }
    }
}

/// One violated ring axiom with a witness tuple.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    AddNotCommutative { a: Elem, b: Elem },
    AddNotAssociative { a: Elem, b: Elem, c: Elem },
    ZeroNotIdentity { a: Elem },
    MissingNegation { a: Elem },
    MulNotCommutative { a: Elem, b: Elem },
    MulNotAssociative { a: Elem, b: Elem, c: Elem },
    OneNotIdentity { a: Elem },
    NotDistributive { a: Elem, b: Elem, c: Elem },
    ZeroEqualsOne,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::AddNotCommutative { a, b } => {
                write!(f, "addition not commutative at ({a}, {b})")
            }
            AxiomViolation::AddNotAssociative { a, b, c } => {
                write!(f, "addition not associative at ({a}, {b}, {c})")
            }
            AxiomViolation::ZeroNotIdentity { a } => {
                write!(f, "element 0 is not an additive identity at {a}")
            }
            AxiomViolation::MissingNegation { a } => {
                write!(f, "element {a} has no additive inverse")
            }
            AxiomViolation::MulNotCommutative { a, b } => {
                write!(f, "multiplication not commutative at ({a}, {b})")
            }
            AxiomViolation::MulNotAssociative { a, b, c } => {
                write!(f, "multiplication not associative at ({a}, {b}, {c})")
            }
            AxiomViolation::OneNotIdentity { a } => {
                write!(f, "stated identity fails at {a}")
            }
            AxiomViolation::NotDistributive { a, b, c } => {
                write!(f, "distributivity fails at ({a}, {b}, {c})")
            }
            AxiomViolation::ZeroEqualsOne => write!(f, "additive and multiplicative identities coincide"),
        }
    }
}

/// Outcome of a full axiom scan.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}
