//! Executable fixed-point construction.
//!
//! Given a context `psi` with designated variable `x`, let
//! `theta(x) := psi[x / sub(x, x)]` and `phi := theta[x / c]`, where `c` is
//! the constant term denoting `gn(theta)`. The registered function symbol
//! `sub` evaluates through [`crate::coding::sub_eval`], so inside `phi` the
//! term `sub(c, c)` evaluates to exactly `gn(phi)`: the sentence speaks about
//! its own code, and the certificate pins that down as a checkable numeric
//! identity rather than an appeal to provability.

use serde_json::{json, Value};
use thiserror::Error;

use crate::coding::{constant_term, gn_formula, sub_eval, CodingError, GoedelNumber};
use crate::syntax::ast::{Formula, Term};
use crate::syntax::subst::substitute;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagonalError {
    #[error("context has free variables {found:?}; expected at most the designated `{var}`")]
    WrongFreeVariables { var: String, found: Vec<String> },
    #[error(transparent)]
    Coding(#[from] CodingError),
}

/// Certificate that the diagonal substitution identity holds for a fixed
/// point: `lhs` is computed through codes alone, `rhs` through the AST.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointCertificate {
    pub theta: Formula,
    pub phi: Formula,
    /// `sub_eval(gn(theta), gn(theta))`.
    pub lhs: GoedelNumber,
    /// `gn(phi)`.
    pub rhs: GoedelNumber,
}

impl FixedPointCertificate {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "theta": self.theta.to_string(),
            "phi": self.phi.to_string(),
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "holds": self.holds(),
        })
    }
}

/// Produce the fixed point of `psi` in the designated variable `var`,
/// together with its numeric certificate.
///
/// The construction is deterministic: structurally equal contexts produce
/// the identical fixed point.
pub fn fixed_point(
    psi: &Formula,
    var: &str,
) -> Result<(Formula, FixedPointCertificate), DiagonalError> {
    let free = psi.free_vars();
    let extraneous: Vec<String> = free.iter().filter(|v| *v != var).cloned().collect();
    if !extraneous.is_empty() {
        return Err(DiagonalError::WrongFreeVariables {
            var: var.to_owned(),
            found: free.into_iter().collect(),
        });
    }

    let diagonal = Term::func("sub", vec![Term::var(var), Term::var(var)]);
    let theta = substitute(psi, var, &diagonal);
    let theta_code = gn_formula(&theta);
    let quote = constant_term(theta_code.value());
    let phi = substitute(&theta, var, &quote);

    let lhs = sub_eval(&theta_code, &theta_code)?;
    let rhs = gn_formula(&phi);
    Ok((
        phi.clone(),
        FixedPointCertificate {
            theta,
            phi,
            lhs,
            rhs,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::atoms::{AtomInfo, DeclaredLevel, Registry};
    use crate::syntax::eval::{evaluate, Assignment, Truth};
    use crate::syntax::parse;
    use crate::HierarchyLevel;
    use std::sync::Arc;

    #[test]
    fn constant_context() {
        let psi = parse("0 = 0").unwrap();
        let (phi, cert) = fixed_point(&psi, "x").unwrap();
        assert!(cert.holds());
        assert_eq!(phi, psi);
        let r = Registry::standard();
        assert_eq!(
            evaluate(&phi, &Assignment::new(), 0, &r).unwrap(),
            Truth::True
        );
    }

    #[test]
    fn goedel_sentence_shape() {
        let psi = parse("~Atom[Phi](x)").unwrap();
        let (phi, cert) = fixed_point(&psi, "x").unwrap();
        assert!(cert.holds());
        // phi is ~Phi(sub(c, c)) and sub(c, c) evaluates to gn(phi).
        match &phi {
            Formula::Not(inner) => match &**inner {
                Formula::Atom(name, args) => {
                    assert_eq!(name.0, "Phi");
                    let r = Registry::standard();
                    let v = crate::syntax::eval::eval_term(&args[0], &Assignment::new(), &r)
                        .unwrap();
                    assert_eq!(&v, gn_formula(&phi).value());
                }
                other => panic!("unexpected shape {other:?}"),
            },
            other => panic!("unexpected shape {other:?}"),
        }
    }

    #[test]
    fn jeroslow_sentence_shape() {
        let psi = parse("Atom[Phi](neg(x))").unwrap();
        let (phi, cert) = fixed_point(&psi, "x").unwrap();
        assert!(cert.holds());
        // The argument of Phi evaluates to the code of ~phi.
        match &phi {
            Formula::Atom(name, args) => {
                assert_eq!(name.0, "Phi");
                let r = Registry::standard();
                let v =
                    crate::syntax::eval::eval_term(&args[0], &Assignment::new(), &r).unwrap();
                assert_eq!(&v, gn_formula(&Formula::not(phi.clone())).value());
            }
            other => panic!("unexpected shape {other:?}"),
        }
    }

    #[test]
    fn fixed_point_is_deterministic() {
        let psi = parse("~Atom[Phi](x)").unwrap();
        let (a, cert_a) = fixed_point(&psi, "x").unwrap();
        let (b, cert_b) = fixed_point(&psi, "x").unwrap();
        assert_eq!(a, b);
        assert_eq!(cert_a, cert_b);
    }

    #[test]
    fn rejects_extraneous_free_variables() {
        let psi = parse("Atom[Phi](x) & y = y").unwrap();
        assert!(matches!(
            fixed_point(&psi, "x"),
            Err(DiagonalError::WrongFreeVariables { .. })
        ));
    }

    #[test]
    fn semantic_fixed_point_equivalence() {
        // With Phi interpreted as the empty predicate, the fixed point of
        // ~Phi(x) is true, and so is psi applied to its code.
        let mut r = Registry::standard();
        r.register_atom(AtomInfo {
            id: "Phi".into(),
            arity: 1,
            level: DeclaredLevel::Level(HierarchyLevel::Sigma(1)),
            interp: Some(Arc::new(|_args| Some(false))),
            note: None,
        });
        let psi = parse("~Atom[Phi](x)").unwrap();
        let (phi, cert) = fixed_point(&psi, "x").unwrap();
        assert!(cert.holds());
        let phi_truth = evaluate(&phi, &Assignment::new(), 0, &r).unwrap();
        let psi_at_code = substitute(&psi, "x", &constant_term(gn_formula(&phi).value()));
        let rhs_truth = evaluate(&psi_at_code, &Assignment::new(), 0, &r).unwrap();
        assert_eq!(phi_truth, Truth::True);
        assert_eq!(phi_truth, rhs_truth);
    }
}
