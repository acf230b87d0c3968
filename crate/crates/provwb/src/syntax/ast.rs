//! Immutable ASTs for terms and formulas of arithmetic.
//!
//! The core signature is `{0, s, +, ×, =}`. Two extension points are
//! registry-controlled: `Atom` nodes (designated predicates such as `Prf_T`,
//! `Fml`, `Even`) and `Func` nodes (designated function symbols such as the
//! diagonal substitution function `sub` or the code-negation function `neg`).
//! `Num` is a numeral literal: it denotes the same value as the unary numeral
//! `s(s(...s(0)...))` but is stored by value, which keeps templates that
//! mention Gödel codes of formulas representable.

use num_bigint::BigUint;
use std::collections::BTreeSet;

/// Arbitrary-precision natural number.
pub type Natural = BigUint;

/// Registered atom identifier (e.g. `Prf_T`, `Fml`, `Even`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomId(pub String);

/// Registered function-symbol identifier (e.g. `sub`, `neg`, `n`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FuncId(pub String);

impl From<&str> for AtomId {
    fn from(name: &str) -> Self {
        AtomId(name.to_owned())
    }
}

impl From<&str> for FuncId {
    fn from(name: &str) -> Self {
        FuncId(name.to_owned())
    }
}

impl std::fmt::Display for AtomId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::fmt::Display for FuncId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// First-order term over `{0, s, +, ×}`, variables, numeral literals and
/// registered function symbols.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Zero,
    Succ(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Var(String),
    /// Numeral literal: semantically `s^k(0)`, stored by value.
    Num(Natural),
    /// Application of a registered function symbol.
    Func(FuncId, Vec<Term>),
}

/// Formula of arithmetic. Bounded quantifiers are first-class constructors:
/// they are what the Δ0 fragment is defined from, so they are never encoded
/// through `≤` and `→`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Eq(Term, Term),
    /// Application of a registered atom.
    Atom(AtomId, Vec<Term>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
    /// `∀ var ≤ bound . body` (or `∀ var < bound . body` when `strict`).
    BForall {
        var: String,
        bound: Term,
        strict: bool,
        body: Box<Formula>,
    },
    /// `∃ var ≤ bound . body` (or `∃ var < bound . body` when `strict`).
    BExists {
        var: String,
        bound: Term,
        strict: bool,
        body: Box<Formula>,
    },
}

// Shorthand constructors. Tests and the template gallery build a lot of
// syntax by hand; these keep that readable.
impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_owned())
    }

    pub fn succ(t: Term) -> Term {
        Term::Succ(Box::new(t))
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn func(name: &str, args: Vec<Term>) -> Term {
        Term::Func(FuncId::from(name), args)
    }

    /// Unary numeral `s^n(0)`.
    pub fn numeral(n: u64) -> Term {
        let mut t = Term::Zero;
        for _ in 0..n {
            t = Term::succ(t);
        }
        t
    }

    /// Free variables, in sorted order.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Zero | Term::Num(_) => {}
            Term::Succ(t) => t.collect_vars(out),
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Func(_, args) => {
                for a in args {
                    a.collect_vars(out);
                }
            }
        }
    }

    /// Number of constant and function symbols from `{0, s, +, ×}`.
    pub fn complexity(&self) -> usize {
        match self {
            Term::Zero => 1,
            Term::Succ(t) => 1 + t.complexity(),
            Term::Add(a, b) | Term::Mul(a, b) => 1 + a.complexity() + b.complexity(),
            Term::Var(_) | Term::Num(_) => 0,
            Term::Func(_, args) => args.iter().map(|a| a.complexity()).sum(),
        }
    }

    /// True when the term mentions only `{0, s, +, ×}` and variables.
    pub fn is_core(&self) -> bool {
        match self {
            Term::Zero | Term::Var(_) => true,
            Term::Succ(t) => t.is_core(),
            Term::Add(a, b) | Term::Mul(a, b) => a.is_core() && b.is_core(),
            Term::Num(_) | Term::Func(..) => false,
        }
    }
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn atom(name: &str, args: Vec<Term>) -> Formula {
        Formula::Atom(AtomId::from(name), args)
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn forall(v: &str, f: Formula) -> Formula {
        Formula::Forall(v.to_owned(), Box::new(f))
    }

    pub fn exists(v: &str, f: Formula) -> Formula {
        Formula::Exists(v.to_owned(), Box::new(f))
    }

    pub fn bforall(v: &str, bound: Term, strict: bool, f: Formula) -> Formula {
        Formula::BForall {
            var: v.to_owned(),
            bound,
            strict,
            body: Box::new(f),
        }
    }

    pub fn bexists(v: &str, bound: Term, strict: bool, f: Formula) -> Formula {
        Formula::BExists {
            var: v.to_owned(),
            bound,
            strict,
            body: Box::new(f),
        }
    }

    /// Free variables, in sorted order.
    pub fn free_vars(&self) -> BTreeSet<String> {
        match self {
            Formula::Eq(a, b) => {
                let mut out = a.free_vars();
                out.extend(b.free_vars());
                out
            }
            Formula::Atom(_, args) => {
                let mut out = BTreeSet::new();
                for a in args {
                    a.collect_vars(&mut out);
                }
                out
            }
            Formula::Not(f) => f.free_vars(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                let mut out = a.free_vars();
                out.extend(b.free_vars());
                out
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                let mut out = f.free_vars();
                out.remove(v);
                out
            }
            Formula::BForall {
                var, bound, body, ..
            }
            | Formula::BExists {
                var, bound, body, ..
            } => {
                let mut out = body.free_vars();
                out.remove(var);
                out.extend(bound.free_vars());
                out
            }
        }
    }

    /// All variable names occurring anywhere (free or bound).
    pub fn all_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_all_vars(&mut out);
        out
    }

    fn collect_all_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Eq(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Atom(_, args) => {
                for a in args {
                    a.collect_vars(out);
                }
            }
            Formula::Not(f) => f.collect_all_vars(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_all_vars(out);
                b.collect_all_vars(out);
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                out.insert(v.clone());
                f.collect_all_vars(out);
            }
            Formula::BForall {
                var, bound, body, ..
            }
            | Formula::BExists {
                var, bound, body, ..
            } => {
                out.insert(var.clone());
                bound.collect_vars(out);
                body.collect_all_vars(out);
            }
        }
    }

    /// Number of connectives and quantifiers (bounded quantifiers included).
    pub fn count_logical_symbols(&self) -> usize {
        match self {
            Formula::Eq(..) | Formula::Atom(..) => 0,
            Formula::Not(f) => 1 + f.count_logical_symbols(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.count_logical_symbols() + b.count_logical_symbols()
            }
            Formula::Forall(_, f) | Formula::Exists(_, f) => 1 + f.count_logical_symbols(),
            Formula::BForall { body, .. } | Formula::BExists { body, .. } => {
                1 + body.count_logical_symbols()
            }
        }
    }

    /// Number of negation nodes.
    pub fn count_negations(&self) -> usize {
        match self {
            Formula::Eq(..) | Formula::Atom(..) => 0,
            Formula::Not(f) => 1 + f.count_negations(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.count_negations() + b.count_negations()
            }
            Formula::Forall(_, f) | Formula::Exists(_, f) => f.count_negations(),
            Formula::BForall { body, .. } | Formula::BExists { body, .. } => {
                body.count_negations()
            }
        }
    }

    /// True when the formula has no quantifiers at all, bounded or not.
    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Eq(..) | Formula::Atom(..) => true,
            Formula::Not(f) => f.is_quantifier_free(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::Forall(..)
            | Formula::Exists(..)
            | Formula::BForall { .. }
            | Formula::BExists { .. } => false,
        }
    }

    /// True when every atom is an equation between core terms.
    pub fn is_core(&self) -> bool {
        match self {
            Formula::Eq(a, b) => a.is_core() && b.is_core(),
            Formula::Atom(..) => false,
            Formula::Not(f) => f.is_core(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.is_core() && b.is_core()
            }
            Formula::Forall(_, f) | Formula::Exists(_, f) => f.is_core(),
            Formula::BForall { bound, body, .. } | Formula::BExists { bound, body, .. } => {
                bound.is_core() && body.is_core()
            }
        }
    }
}

/// Smallest `{base}{k}` (k = 0, 1, ...) not in `taken`.
pub fn fresh_name(base: &str, taken: &BTreeSet<String>) -> String {
    let stem: String = base.trim_end_matches(|c: char| c.is_ascii_digit()).into();
    let stem = if stem.is_empty() { "v".to_owned() } else { stem };
    for k in 0u64.. {
        let candidate = format!("{stem}{k}");
        if !taken.contains(&candidate) {
            return candidate;
        }
    }
    unreachable!()
}
