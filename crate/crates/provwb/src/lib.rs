//! provwb — a symbolic workbench for provability predicates.
//!
//! The crate mechanizes the bookkeeping around provability predicates of
//! arithmetical theories: a first-order syntax kernel with a bounded
//! evaluator, Gödel coding with the diagonal substitution function, a
//! Σn/Πn classifier, an executable fixed-point construction, the flattening
//! pipeline that turns quantifier-free formulas into existential equation
//! systems with right-hand sides of complexity at most one, a gallery of
//! consistency statements and witness predicates, a knowledge base of
//! derivability conditions with forward-chaining closure over cited
//! inference rules, and a modal engine for GL and the two-box system CS2.

pub mod cli;
pub mod coding;
pub mod diagonal;
pub mod flatten;
pub mod hierarchy;
pub mod lattice;
pub mod modal;
pub mod syntax;
pub mod witness;

pub use coding::{gn_formula, gn_term, GoedelNumber};
pub use hierarchy::HierarchyLevel;
pub use syntax::{parse, Formula, Registry, Term};
