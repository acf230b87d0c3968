//! Registry of designated atoms and function symbols.
//!
//! Each registered atom carries its declared place in the arithmetical
//! hierarchy and, optionally, an executable interpretation over the standard
//! model. Proof predicates (`Prf_T` and friends) stay abstract: the template
//! gallery uses them schematically and no interpretation is ever invented for
//! them. Bookkeeping predicates over Gödel codes (`Fml`, `Sent`, `Even`, ...)
//! are executable through the coding module, which is what lets the evaluator
//! decide ground instances of templates.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::ToPrimitive;

use super::ast::{AtomId, FuncId, Natural};
use crate::hierarchy::HierarchyLevel;

/// Executable interpretation of an atom over the standard model.
/// `None` means the arguments are outside the predicate's domain
/// (typically: not the code of a formula).
pub type AtomInterp = Arc<dyn Fn(&[Natural]) -> Option<bool> + Send + Sync>;

/// Executable interpretation of a function symbol.
pub type FuncInterp = Arc<dyn Fn(&[Natural]) -> Option<Natural> + Send + Sync>;

/// Declared hierarchy classification of a registered atom.
///
/// `Delta1` is not a syntactic class; it is a registry declaration meaning
/// "provably equivalent to both a Σ1 and a Π1 formula", and it classifies
/// like a bounded formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeclaredLevel {
    Delta1,
    Level(HierarchyLevel),
}

#[derive(Clone)]
pub struct AtomInfo {
    pub id: AtomId,
    pub arity: usize,
    pub level: DeclaredLevel,
    pub interp: Option<AtomInterp>,
    /// Side conditions assumed of the atom, recorded as prose metadata.
    pub note: Option<String>,
}

#[derive(Clone)]
pub struct FuncInfo {
    pub id: FuncId,
    pub arity: usize,
    pub interp: Option<FuncInterp>,
    pub note: Option<String>,
}

impl std::fmt::Debug for AtomInfo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AtomInfo")
            .field("id", &self.id)
            .field("arity", &self.arity)
            .field("level", &self.level)
            .field("interp", &self.interp.is_some())
            .finish()
    }
}

impl std::fmt::Debug for FuncInfo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FuncInfo")
            .field("id", &self.id)
            .field("arity", &self.arity)
            .field("interp", &self.interp.is_some())
            .finish()
    }
}

/// Immutable symbol table shared by the parser, classifier and evaluator.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    atoms: BTreeMap<String, AtomInfo>,
    funcs: BTreeMap<String, FuncInfo>,
}

impl Registry {
    pub fn empty() -> Registry {
        Registry::default()
    }

    pub fn atom(&self, id: &AtomId) -> Option<&AtomInfo> {
        self.atoms.get(&id.0)
    }

    pub fn func(&self, id: &FuncId) -> Option<&FuncInfo> {
        self.funcs.get(&id.0)
    }

    pub fn atoms(&self) -> impl Iterator<Item = &AtomInfo> {
        self.atoms.values()
    }

    pub fn register_atom(&mut self, info: AtomInfo) {
        self.atoms.insert(info.id.0.clone(), info);
    }

    pub fn register_func(&mut self, info: FuncInfo) {
        self.funcs.insert(info.id.0.clone(), info);
    }

    /// The registry used throughout the workbench: abstract proof predicates,
    /// executable code predicates, and the code-manipulating function symbols.
    pub fn standard() -> Registry {
        use crate::coding;

        let mut r = Registry::empty();

        let abstract_atom = |name: &str, arity: usize, level: DeclaredLevel, note: &str| AtomInfo {
            id: AtomId::from(name),
            arity,
            level,
            interp: None,
            note: if note.is_empty() {
                None
            } else {
                Some(note.to_owned())
            },
        };

        r.register_atom(abstract_atom(
            "Prf_T",
            2,
            DeclaredLevel::Delta1,
            "proof predicate of the ambient theory; proof codes bound theorem codes: Prf_T(x, y) -> x <= y",
        ));
        r.register_atom(abstract_atom(
            "Prf_a0",
            2,
            DeclaredLevel::Delta1,
            "proof predicate built from the first of a pair of independent numerations",
        ));
        r.register_atom(abstract_atom(
            "Prf_a1",
            2,
            DeclaredLevel::Delta1,
            "proof predicate built from the second of a pair of independent numerations",
        ));
        r.register_atom(abstract_atom(
            "PrL",
            1,
            DeclaredLevel::Level(HierarchyLevel::Sigma(1)),
            "provability in first-order predicate calculus",
        ));
        r.register_atom(abstract_atom(
            "PR_T0",
            1,
            DeclaredLevel::Level(HierarchyLevel::Sigma(1)),
            "provability from the finite subtheory parameter",
        ));
        r.register_atom(abstract_atom(
            "Phi",
            1,
            DeclaredLevel::Level(HierarchyLevel::Sigma(1)),
            "generic candidate provability predicate",
        ));
        r.register_atom(abstract_atom(
            "xi",
            0,
            DeclaredLevel::Level(HierarchyLevel::Pi(1)),
            "sentence parameter, undecidable in the ambient theory",
        ));

        r.register_atom(AtomInfo {
            id: AtomId::from("Fml"),
            arity: 1,
            level: DeclaredLevel::Delta1,
            interp: Some(Arc::new(|args: &[Natural]| {
                Some(coding::decode_formula(&args[0]).is_ok())
            })),
            note: None,
        });
        r.register_atom(AtomInfo {
            id: AtomId::from("Sent"),
            arity: 1,
            level: DeclaredLevel::Delta1,
            interp: Some(Arc::new(|args: &[Natural]| {
                Some(match coding::decode_formula(&args[0]) {
                    Ok(f) => f.free_vars().is_empty(),
                    Err(_) => false,
                })
            })),
            note: None,
        });
        r.register_atom(AtomInfo {
            id: AtomId::from("Sigma_z"),
            arity: 2,
            level: DeclaredLevel::Delta1,
            interp: Some(Arc::new(|args: &[Natural]| {
                let f = match coding::decode_formula(&args[0]) {
                    Ok(f) => f,
                    Err(_) => return Some(false),
                };
                let z = args[1].to_u32()?;
                let level = if z == 0 {
                    HierarchyLevel::Delta0
                } else {
                    HierarchyLevel::Sigma(z)
                };
                match crate::hierarchy::is_in(&f, level, &Registry::standard()) {
                    Ok(b) => Some(b),
                    Err(_) => None,
                }
            })),
            note: None,
        });
        r.register_atom(AtomInfo {
            id: AtomId::from("Even"),
            arity: 1,
            level: DeclaredLevel::Delta1,
            interp: Some(Arc::new(|args: &[Natural]| {
                Some(match coding::decode_formula(&args[0]) {
                    Ok(f) => f.count_logical_symbols() % 2 == 0,
                    Err(_) => false,
                })
            })),
            note: None,
        });
        r.register_atom(AtomInfo {
            id: AtomId::from("leq"),
            arity: 2,
            level: DeclaredLevel::Delta1,
            interp: Some(Arc::new(|args: &[Natural]| Some(args[0] <= args[1]))),
            note: None,
        });

        r.register_func(FuncInfo {
            id: FuncId::from("neg"),
            arity: 1,
            interp: Some(Arc::new(|args: &[Natural]| {
                Some(coding::not_code(&args[0]))
            })),
            note: Some("code of the negation of the formula coded by the argument".to_owned()),
        });
        r.register_func(FuncInfo {
            id: FuncId::from("imp"),
            arity: 2,
            interp: Some(Arc::new(|args: &[Natural]| {
                Some(coding::imp_code(&args[0], &args[1]))
            })),
            note: Some("code of the implication between the formulas coded by the arguments".to_owned()),
        });
        r.register_func(FuncInfo {
            id: FuncId::from("sub"),
            arity: 2,
            interp: Some(Arc::new(|args: &[Natural]| {
                coding::sub_eval(&args[0].clone().into(), &args[1].clone().into())
                    .ok()
                    .map(|g| g.into_value())
            })),
            note: Some(
                "diagonal substitution: code of the result of substituting the numeral of the second argument into the one-variable formula coded by the first".to_owned(),
            ),
        });
        r.register_func(FuncInfo {
            id: FuncId::from("n"),
            arity: 1,
            interp: Some(Arc::new(|args: &[Natural]| {
                let f = coding::decode_formula(&args[0]).ok()?;
                Some(Natural::from(f.count_negations()))
            })),
            note: Some("number of negation symbols in the formula coded by the argument".to_owned()),
        });

        r
    }
}
