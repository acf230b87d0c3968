//! Capture-avoiding substitution.
//!
//! Bound variable names are significant (the Gödel numbering is a function on
//! concrete syntax, not on α-equivalence classes), so renaming is done only
//! when capture would actually occur, and the replacement name is chosen by a
//! deterministic smallest-unused-index scheme.

use super::ast::{fresh_name, Formula, Term};
use std::collections::BTreeSet;

/// Substitute `replacement` for every occurrence of `var` in `t`.
pub fn substitute_term(t: &Term, var: &str, replacement: &Term) -> Term {
    match t {
        Term::Zero | Term::Num(_) => t.clone(),
        Term::Succ(inner) => Term::succ(substitute_term(inner, var, replacement)),
        Term::Add(a, b) => Term::add(
            substitute_term(a, var, replacement),
            substitute_term(b, var, replacement),
        ),
        Term::Mul(a, b) => Term::mul(
            substitute_term(a, var, replacement),
            substitute_term(b, var, replacement),
        ),
        Term::Var(v) => {
            if v == var {
                replacement.clone()
            } else {
                t.clone()
            }
        }
        Term::Func(f, args) => Term::Func(
            f.clone(),
            args.iter()
                .map(|a| substitute_term(a, var, replacement))
                .collect(),
        ),
    }
}

/// Substitute `replacement` for every free occurrence of `var` in `phi`,
/// renaming bound variables when they would capture a variable of the
/// replacement term.
pub fn substitute(phi: &Formula, var: &str, replacement: &Term) -> Formula {
    match phi {
        Formula::Eq(a, b) => Formula::Eq(
            substitute_term(a, var, replacement),
            substitute_term(b, var, replacement),
        ),
        Formula::Atom(name, args) => Formula::Atom(
            name.clone(),
            args.iter()
                .map(|a| substitute_term(a, var, replacement))
                .collect(),
        ),
        Formula::Not(f) => Formula::not(substitute(f, var, replacement)),
        Formula::And(a, b) => Formula::and(
            substitute(a, var, replacement),
            substitute(b, var, replacement),
        ),
        Formula::Or(a, b) => Formula::or(
            substitute(a, var, replacement),
            substitute(b, var, replacement),
        ),
        Formula::Imp(a, b) => Formula::imp(
            substitute(a, var, replacement),
            substitute(b, var, replacement),
        ),
        Formula::Forall(v, body) => {
            let (v, body) = rebind(v, body, var, replacement);
            Formula::Forall(v, Box::new(body))
        }
        Formula::Exists(v, body) => {
            let (v, body) = rebind(v, body, var, replacement);
            Formula::Exists(v, Box::new(body))
        }
        Formula::BForall {
            var: v,
            bound,
            strict,
            body,
        } => {
            let bound = substitute_term(bound, var, replacement);
            let (v, body) = rebind(v, body, var, replacement);
            Formula::BForall {
                var: v,
                bound,
                strict: *strict,
                body: Box::new(body),
            }
        }
        Formula::BExists {
            var: v,
            bound,
            strict,
            body,
        } => {
            let bound = substitute_term(bound, var, replacement);
            let (v, body) = rebind(v, body, var, replacement);
            Formula::BExists {
                var: v,
                bound,
                strict: *strict,
                body: Box::new(body),
            }
        }
    }
}

/// Handle a binder `v` over `body` during substitution of `replacement` for
/// `var`. The bound term of a bounded quantifier is handled by the caller
/// (the binder does not scope over it).
fn rebind(v: &str, body: &Formula, var: &str, replacement: &Term) -> (String, Formula) {
    if v == var {
        // `var` is shadowed here; nothing to substitute below.
        return (v.to_owned(), body.clone());
    }
    let replacement_vars = replacement.free_vars();
    if replacement_vars.contains(v) && body.free_vars().contains(var) {
        // Capture: rename the binder first.
        let mut taken: BTreeSet<String> = body.all_vars();
        taken.extend(replacement_vars);
        taken.insert(var.to_owned());
        let fresh = fresh_name(v, &taken);
        let renamed = substitute(body, v, &Term::Var(fresh.clone()));
        (fresh, substitute(&renamed, var, replacement))
    } else {
        (v.to_owned(), substitute(body, var, replacement))
    }
}

/// Simultaneous substitution of several variables, applied left to right on
/// a fresh copy so the individual substitutions cannot feed each other as
/// long as the replaced variables do not occur in the replacement terms.
pub fn substitute_all<'a, I>(phi: &Formula, pairs: I) -> Formula
where
    I: IntoIterator<Item = (&'a str, &'a Term)>,
{
    let mut out = phi.clone();
    for (v, t) in pairs {
        out = substitute(&out, v, t);
    }
    out
}
