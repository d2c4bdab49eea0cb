use ringlab_core::{Elem, FiniteRing};
use serde::Serialize;

/// Result of one check on one ring. `Vacuous` means the hypothesis class was
/// empty (or the ring was out of scope) so nothing was actually asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Verified,
    Vacuous,
    Counterexample,
}

/// Concrete data pinning down a failed instance: the ideals involved (as
/// member lists, in statement order), an element tuple where the statement
/// has one, and a prose note saying which conclusion broke. When the failure
/// is a violation of one of the ten classification flags, `flag` names it so
/// the witness can be re-certified through the classifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<Vec<Elem>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<Elem>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub element_names: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<String>,
    pub note: String,
}

impl Witness {
    pub fn note(note: impl Into<String>) -> Witness {
        Witness {
            ideals: Vec::new(),
            elements: Vec::new(),
            element_names: Vec::new(),
            flag: None,
            note: note.into(),
        }
    }

    pub fn ideal(mut self, members: &[Elem]) -> Witness {
        self.ideals.push(members.to_vec());
        self
    }

    pub fn elements(mut self, ring: &FiniteRing, elems: &[Elem]) -> Witness {
        self.element_names.extend(elems.iter().map(|&e| ring.elem_name(e).to_string()));
        self.elements.extend_from_slice(elems);
        self
    }

    pub fn flag(mut self, flag: &str) -> Witness {
        self.flag = Some(flag.to_string());
        self
    }
}

/// Verdict of one check on one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub check_id: String,
    pub ring: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub instances_checked: u64,
    pub millis: u64,
}

/// Raw result of a check body: how many hypothesis instances were examined
/// and the first failure, if any. The runner turns this into a verdict
/// (zero instances without a failure is Vacuous).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckBody {
    pub instances: u64,
    pub failure: Option<Witness>,
}

impl CheckBody {
    pub fn clean(instances: u64) -> CheckBody {
        CheckBody { instances, failure: None }
    }

    pub fn failed(instances: u64, witness: Witness) -> CheckBody {
        CheckBody { instances, failure: Some(witness) }
    }
}
