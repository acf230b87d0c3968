//! Knowledge base of derivability conditions.
//!
//! The lattice module records, as data, what is known about candidate
//! provability predicates: the condition atoms (local, uniform and global
//! versions of the derivability conditions), the inference rules between
//! them, the witness predicates that block reverse implications, and the
//! open problems. A forward-chaining engine computes closures with
//! certificate chains; every rule and witness carries its justification.

mod atoms;
mod engine;
mod kb;
mod rules;
mod sanity;
mod witnesses;

pub use atoms::{ConStatus, ConditionAtom, ContextFlag, Fact};
pub use engine::{
    certificate, closure, entails, separation, unprovability, CertStep, ClosureResult, Entailment,
};
pub use kb::{KnowledgeBase, OpenProblem, Rule, ViolationEntry, WitnessRecord};
pub use sanity::{kb_sanity, SanityReport};

pub use crate::witness::ConsistencyVariant;
