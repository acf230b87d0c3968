//! Negation normal form: implications unfolded, negations pushed to the
//! atoms, double negations erased. Idempotent, and `nnf(~~phi)` equals
//! `nnf(phi)` structurally.

use super::ast::Formula;

pub fn nnf(phi: &Formula) -> Formula {
    match phi {
        Formula::Eq(..) | Formula::Atom(..) => phi.clone(),
        Formula::And(a, b) => Formula::and(nnf(a), nnf(b)),
        Formula::Or(a, b) => Formula::or(nnf(a), nnf(b)),
        Formula::Imp(a, b) => Formula::or(nnf(&Formula::not((**a).clone())), nnf(b)),
        Formula::Forall(v, f) => Formula::Forall(v.clone(), Box::new(nnf(f))),
        Formula::Exists(v, f) => Formula::Exists(v.clone(), Box::new(nnf(f))),
        Formula::BForall {
            var,
            bound,
            strict,
            body,
        } => Formula::BForall {
            var: var.clone(),
            bound: bound.clone(),
            strict: *strict,
            body: Box::new(nnf(body)),
        },
        Formula::BExists {
            var,
            bound,
            strict,
            body,
        } => Formula::BExists {
            var: var.clone(),
            bound: bound.clone(),
            strict: *strict,
            body: Box::new(nnf(body)),
        },
        Formula::Not(inner) => match &**inner {
            Formula::Eq(..) | Formula::Atom(..) => phi.clone(),
            Formula::Not(f) => nnf(f),
            Formula::And(a, b) => Formula::or(
                nnf(&Formula::not((**a).clone())),
                nnf(&Formula::not((**b).clone())),
            ),
            Formula::Or(a, b) => Formula::and(
                nnf(&Formula::not((**a).clone())),
                nnf(&Formula::not((**b).clone())),
            ),
            Formula::Imp(a, b) => Formula::and(nnf(a), nnf(&Formula::not((**b).clone()))),
            Formula::Forall(v, f) => {
                Formula::Exists(v.clone(), Box::new(nnf(&Formula::not((**f).clone()))))
            }
            Formula::Exists(v, f) => {
                Formula::Forall(v.clone(), Box::new(nnf(&Formula::not((**f).clone()))))
            }
            Formula::BForall {
                var,
                bound,
                strict,
                body,
            } => Formula::BExists {
                var: var.clone(),
                bound: bound.clone(),
                strict: *strict,
                body: Box::new(nnf(&Formula::not((**body).clone()))),
            },
            Formula::BExists {
                var,
                bound,
                strict,
                body,
            } => Formula::BForall {
                var: var.clone(),
                bound: bound.clone(),
                strict: *strict,
                body: Box::new(nnf(&Formula::not((**body).clone()))),
            },
        },
    }
}
