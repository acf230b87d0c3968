//! Bounded standard-model evaluator.
//!
//! Bounded quantifiers are enumerated exactly, so the verdict on a Δ0
//! formula is exact. Unbounded quantifiers are searched up to a caller-chosen
//! witness bound; a search that ends without a verdict reports `Unknown`
//! rather than guessing, which keeps the evaluator monotone in the bound:
//! growing the bound can settle an `Unknown` but can never flip a settled
//! verdict.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use thiserror::Error;

use super::ast::{Formula, Natural, Term};
use super::atoms::Registry;

/// Three-valued verdict of the bounded evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    fn negate(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
        }
    }

    fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }

    fn or(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::True, _) | (_, Truth::True) => Truth::True,
            (Truth::False, Truth::False) => Truth::False,
            _ => Truth::Unknown,
        }
    }
}

impl std::fmt::Display for Truth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Truth::True => write!(f, "true"),
            Truth::False => write!(f, "false"),
            Truth::Unknown => write!(f, "unknown"),
        }
    }
}

/// Variable assignment; must cover the free variables of the formula.
pub type Assignment = BTreeMap<String, Natural>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("variable `{0}` has no value in the assignment")]
    UnboundVariable(String),
    #[error("atom `{0}` is not registered")]
    UnregisteredAtom(String),
    #[error("atom `{0}` has no executable interpretation")]
    AbstractAtom(String),
    #[error("function symbol `{0}` is not registered")]
    UnregisteredFunc(String),
    #[error("function symbol `{0}` has no executable interpretation")]
    AbstractFunc(String),
    #[error("`{0}` is undefined on the given arguments")]
    OutsideDomain(String),
    #[error("quantifier bound does not fit in a machine word")]
    BoundTooLarge,
}

/// Evaluate a term to a natural number.
pub fn eval_term(t: &Term, env: &Assignment, registry: &Registry) -> Result<Natural, EvalError> {
    // Successor chains can be thousands deep (numerals of Gödel codes), so
    // they are peeled iteratively.
    let mut succs: u64 = 0;
    let mut cur = t;
    while let Term::Succ(inner) = cur {
        succs += 1;
        cur = inner;
    }
    let base = match cur {
        Term::Zero => Natural::from(0u32),
        Term::Num(n) => n.clone(),
        Term::Var(v) => env
            .get(v)
            .cloned()
            .ok_or_else(|| EvalError::UnboundVariable(v.clone()))?,
        Term::Add(a, b) => eval_term(a, env, registry)? + eval_term(b, env, registry)?,
        Term::Mul(a, b) => eval_term(a, env, registry)? * eval_term(b, env, registry)?,
        Term::Func(f, args) => {
            let info = registry
                .func(f)
                .ok_or_else(|| EvalError::UnregisteredFunc(f.0.clone()))?;
            let interp = info
                .interp
                .as_ref()
                .ok_or_else(|| EvalError::AbstractFunc(f.0.clone()))?;
            let vals = args
                .iter()
                .map(|a| eval_term(a, env, registry))
                .collect::<Result<Vec<_>, _>>()?;
            interp(&vals).ok_or_else(|| EvalError::OutsideDomain(f.0.clone()))?
        }
        Term::Succ(_) => unreachable!(),
    };
    Ok(base + Natural::from(succs))
}

/// Evaluate a formula. `witness_bound` limits the search range of unbounded
/// quantifiers; bounded quantifiers are enumerated in full.
pub fn evaluate(
    phi: &Formula,
    env: &Assignment,
    witness_bound: u64,
    registry: &Registry,
) -> Result<Truth, EvalError> {
    let mut env = env.clone();
    eval_rec(phi, &mut env, witness_bound, registry)
}

fn eval_rec(
    phi: &Formula,
    env: &mut Assignment,
    witness_bound: u64,
    registry: &Registry,
) -> Result<Truth, EvalError> {
    match phi {
        Formula::Eq(a, b) => {
            let va = eval_term(a, env, registry)?;
            let vb = eval_term(b, env, registry)?;
            Ok(if va == vb { Truth::True } else { Truth::False })
        }
        Formula::Atom(name, args) => {
            let info = registry
                .atom(name)
                .ok_or_else(|| EvalError::UnregisteredAtom(name.0.clone()))?;
            let interp = info
                .interp
                .as_ref()
                .ok_or_else(|| EvalError::AbstractAtom(name.0.clone()))?;
            let vals = args
                .iter()
                .map(|a| eval_term(a, env, registry))
                .collect::<Result<Vec<_>, _>>()?;
            match interp(&vals) {
                Some(true) => Ok(Truth::True),
                Some(false) => Ok(Truth::False),
                None => Err(EvalError::OutsideDomain(name.0.clone())),
            }
        }
        Formula::Not(f) => Ok(eval_rec(f, env, witness_bound, registry)?.negate()),
        Formula::And(a, b) => {
            let ta = eval_rec(a, env, witness_bound, registry)?;
            if ta == Truth::False {
                return Ok(Truth::False);
            }
            Ok(ta.and(eval_rec(b, env, witness_bound, registry)?))
        }
        Formula::Or(a, b) => {
            let ta = eval_rec(a, env, witness_bound, registry)?;
            if ta == Truth::True {
                return Ok(Truth::True);
            }
            Ok(ta.or(eval_rec(b, env, witness_bound, registry)?))
        }
        Formula::Imp(a, b) => {
            let ta = eval_rec(a, env, witness_bound, registry)?;
            if ta == Truth::False {
                return Ok(Truth::True);
            }
            Ok(ta.negate().or(eval_rec(b, env, witness_bound, registry)?))
        }
        Formula::Forall(v, body) => {
            // Dual of the existential search: a counterexample settles the
            // matter, an exhausted search does not.
            let mut verdict = Truth::Unknown;
            for k in 0..=witness_bound {
                let t = with_value(env, v, Natural::from(k), |env| {
                    eval_rec(body, env, witness_bound, registry)
                })?;
                if t == Truth::False {
                    verdict = Truth::False;
                    break;
                }
            }
            Ok(verdict)
        }
        Formula::Exists(v, body) => {
            let mut verdict = Truth::Unknown;
            for k in 0..=witness_bound {
                let t = with_value(env, v, Natural::from(k), |env| {
                    eval_rec(body, env, witness_bound, registry)
                })?;
                if t == Truth::True {
                    verdict = Truth::True;
                    break;
                }
            }
            Ok(verdict)
        }
        Formula::BForall {
            var,
            bound,
            strict,
            body,
        } => {
            let limit = range_limit(bound, *strict, env, registry)?;
            let mut verdict = Truth::True;
            for k in 0..limit {
                let t = with_value(env, var, Natural::from(k), |env| {
                    eval_rec(body, env, witness_bound, registry)
                })?;
                verdict = verdict.and(t);
                if verdict == Truth::False {
                    break;
                }
            }
            Ok(verdict)
        }
        Formula::BExists {
            var,
            bound,
            strict,
            body,
        } => {
            let limit = range_limit(bound, *strict, env, registry)?;
            let mut verdict = Truth::False;
            for k in 0..limit {
                let t = with_value(env, var, Natural::from(k), |env| {
                    eval_rec(body, env, witness_bound, registry)
                })?;
                verdict = verdict.or(t);
                if verdict == Truth::True {
                    break;
                }
            }
            Ok(verdict)
        }
    }
}

/// Number of values ranged over by a bounded quantifier: `bound + 1` for `<=`,
/// `bound` for `<`.
fn range_limit(
    bound: &Term,
    strict: bool,
    env: &Assignment,
    registry: &Registry,
) -> Result<u64, EvalError> {
    let b = eval_term(bound, env, registry)?
        .to_u64()
        .ok_or(EvalError::BoundTooLarge)?;
    Ok(if strict { b } else { b.saturating_add(1) })
}

fn with_value<T>(
    env: &mut Assignment,
    var: &str,
    value: Natural,
    f: impl FnOnce(&mut Assignment) -> T,
) -> T {
    let old = env.insert(var.to_owned(), value);
    let out = f(env);
    match old {
        Some(v) => {
            env.insert(var.to_owned(), v);
        }
        None => {
            env.remove(var);
        }
    }
    out
}
