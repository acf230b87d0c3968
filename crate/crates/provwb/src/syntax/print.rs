//! ASCII pretty-printer. `parse(print(phi))` is structurally the identity;
//! only ASCII ever comes out, whatever aliases went in.
//!
//! Binding strength, loosest to tightest: `->` (right-associative), `|`, `&`,
//! then negation and quantifiers. A quantifier scopes over the next unary
//! formula; larger scopes take parentheses.

use super::ast::{Formula, Term};
use std::fmt;

const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;

const TPREC_ADD: u8 = 1;
const TPREC_MUL: u8 = 2;
const TPREC_ATOM: u8 = 3;

fn write_term(t: &Term, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let prec = match t {
        Term::Add(..) => TPREC_ADD,
        Term::Mul(..) => TPREC_MUL,
        _ => TPREC_ATOM,
    };
    if prec < min {
        write!(f, "(")?;
    }
    match t {
        Term::Zero => write!(f, "0")?,
        Term::Succ(inner) => {
            write!(f, "s(")?;
            write_term(inner, 0, f)?;
            write!(f, ")")?;
        }
        Term::Add(a, b) => {
            write_term(a, TPREC_ADD, f)?;
            write!(f, " + ")?;
            write_term(b, TPREC_MUL, f)?;
        }
        Term::Mul(a, b) => {
            write_term(a, TPREC_MUL, f)?;
            write!(f, " * ")?;
            write_term(b, TPREC_ATOM, f)?;
        }
        Term::Var(v) => write!(f, "{v}")?,
        Term::Num(n) => write!(f, "#{n}")?,
        Term::Func(name, args) => {
            write!(f, "{name}(")?;
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write_term(a, 0, f)?;
            }
            write!(f, ")")?;
        }
    }
    if prec < min {
        write!(f, ")")?;
    }
    Ok(())
}

fn write_formula(phi: &Formula, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let prec = match phi {
        Formula::Imp(..) => PREC_IMP,
        Formula::Or(..) => PREC_OR,
        Formula::And(..) => PREC_AND,
        Formula::Not(..)
        | Formula::Forall(..)
        | Formula::Exists(..)
        | Formula::BForall { .. }
        | Formula::BExists { .. } => PREC_UNARY,
        Formula::Eq(..) | Formula::Atom(..) => PREC_UNARY + 1,
    };
    if prec < min {
        write!(f, "(")?;
    }
    match phi {
        Formula::Eq(a, b) => {
            write_term(a, 0, f)?;
            write!(f, " = ")?;
            write_term(b, 0, f)?;
        }
        Formula::Atom(name, args) => {
            write!(f, "Atom[{name}](")?;
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write_term(a, 0, f)?;
            }
            write!(f, ")")?;
        }
        Formula::Not(inner) => {
            write!(f, "~")?;
            write_formula(inner, PREC_UNARY, f)?;
        }
        Formula::And(a, b) => {
            write_formula(a, PREC_AND, f)?;
            write!(f, " & ")?;
            write_formula(b, PREC_AND + 1, f)?;
        }
        Formula::Or(a, b) => {
            write_formula(a, PREC_OR, f)?;
            write!(f, " | ")?;
            write_formula(b, PREC_OR + 1, f)?;
        }
        Formula::Imp(a, b) => {
            write_formula(a, PREC_IMP + 1, f)?;
            write!(f, " -> ")?;
            write_formula(b, PREC_IMP, f)?;
        }
        Formula::Forall(v, body) => {
            write!(f, "!A {v} ")?;
            write_formula(body, PREC_UNARY, f)?;
        }
        Formula::Exists(v, body) => {
            write!(f, "!E {v} ")?;
            write_formula(body, PREC_UNARY, f)?;
        }
        Formula::BForall {
            var,
            bound,
            strict,
            body,
        } => {
            write!(f, "!A {var} {} ", if *strict { "<" } else { "<=" })?;
            write_term(bound, 0, f)?;
            write!(f, " . ")?;
            write_formula(body, PREC_UNARY, f)?;
        }
        Formula::BExists {
            var,
            bound,
            strict,
            body,
        } => {
            write!(f, "!E {var} {} ", if *strict { "<" } else { "<=" })?;
            write_term(bound, 0, f)?;
            write!(f, " . ")?;
            write_formula(body, PREC_UNARY, f)?;
        }
    }
    if prec < min {
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(self, 0, f)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self, 0, f)
    }
}
