//! Gödel numbering by tagged Cantor pairing.
//!
//! Every AST node encodes as `⟨tag, payload⟩` with the Cantor pairing
//! `⟨a,b⟩ = (a+b)(a+b+1)/2 + b`. The successor constructor carries tag 0, so
//! the numbering satisfies the two recurrences everything downstream leans
//! on:
//!
//! ```text
//! gn(s(t))   = ⟨0, gn(t)⟩
//! num(n + 1) = ⟨0, num(n)⟩        where num(n) = gn(s^n(0))
//! ```
//!
//! Codes of unary numerals roughly square at every step, so `num(n)` has on
//! the order of `2^n` bits. Numerals substituted *as unary towers* are capped
//! at [`UNARY_NUMERAL_CAP`]; beyond the cap, substitution uses the `#k`
//! numeral literal, which denotes the same value but codes as `⟨5, k⟩`.

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::syntax::ast::{AtomId, Formula, FuncId, Natural, Term};
use crate::syntax::eval::Assignment;
use crate::syntax::subst::substitute;

/// Largest value substituted as a unary numeral `s^k(0)`. The code of
/// `s^k(0)` has about `2^k` bits, so this is a hard feasibility line, not a
/// tuning knob.
pub const UNARY_NUMERAL_CAP: u64 = 24;

/// A Gödel number.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GoedelNumber(Natural);

impl GoedelNumber {
    pub fn value(&self) -> &Natural {
        &self.0
    }

    pub fn into_value(self) -> Natural {
        self.0
    }
}

impl From<Natural> for GoedelNumber {
    fn from(n: Natural) -> Self {
        GoedelNumber(n)
    }
}

impl From<u64> for GoedelNumber {
    fn from(n: u64) -> Self {
        GoedelNumber(Natural::from(n))
    }
}

impl std::fmt::Display for GoedelNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodingError {
    #[error("value does not decode to a term (tag {0})")]
    NotATerm(u64),
    #[error("value does not decode to a formula (tag {0})")]
    NotAFormula(u64),
    #[error("unknown constructor tag {0}")]
    UnknownTag(u64),
    #[error("embedded string payload is not valid")]
    BadString,
    #[error("numeral value {0} exceeds the unary cap of {cap}; the code of its unary tower is not representable", cap = UNARY_NUMERAL_CAP)]
    NumeralTooLarge(Natural),
    #[error("assignment does not cover free variable `{0}`")]
    MissingValue(String),
    #[error("formula has {0} free variables, expected exactly one")]
    NotOneFreeVariable(usize),
}

// ---------------------------------------------------------------------------
// Pairing
// ---------------------------------------------------------------------------

/// Cantor pairing `⟨a,b⟩ = (a+b)(a+b+1)/2 + b`, a bijection ℕ² → ℕ.
pub fn pair(a: &Natural, b: &Natural) -> Natural {
    let s: Natural = a + b;
    (&s * (&s + 1u32)) / 2u32 + b
}

/// Inverse of [`pair`].
pub fn unpair(z: &Natural) -> (Natural, Natural) {
    // w = floor((sqrt(8z + 1) - 1) / 2) is the diagonal index.
    let disc: Natural = z * 8u32 + 1u32;
    let w: Natural = (disc.sqrt() - 1u32) / 2u32;
    let t: Natural = (&w * (&w + 1u32)) / 2u32;
    let b: Natural = z - t;
    let a: Natural = w - &b;
    (a, b)
}

// ---------------------------------------------------------------------------
// Tag table
// ---------------------------------------------------------------------------

const TAG_SUCC: u64 = 0; // pinned: gn(s(t)) = <0, gn(t)>
const TAG_ZERO: u64 = 1;
const TAG_ADD: u64 = 2;
const TAG_MUL: u64 = 3;
const TAG_VAR: u64 = 4;
const TAG_NUM: u64 = 5;
const TAG_FUNC: u64 = 6;
const TAG_EQ: u64 = 7;
const TAG_ATOM: u64 = 8;
const TAG_NOT: u64 = 9;
const TAG_AND: u64 = 10;
const TAG_OR: u64 = 11;
const TAG_IMP: u64 = 12;
const TAG_FORALL: u64 = 13;
const TAG_EXISTS: u64 = 14;
const TAG_BFORALL_LE: u64 = 15;
const TAG_BEXISTS_LE: u64 = 16;
const TAG_BFORALL_LT: u64 = 17;
const TAG_BEXISTS_LT: u64 = 18;

/// The published coding scheme, exported by `gn --scheme` so that external
/// tooling can pin reproducibility to an exact table.
#[derive(Debug, Clone, Serialize)]
pub struct CodingScheme {
    pub version: String,
    pub pairing: String,
    pub string_encoding: String,
    pub list_encoding: String,
    pub tags: Vec<(String, u64)>,
}

impl CodingScheme {
    pub fn current() -> CodingScheme {
        CodingScheme {
            version: "1".to_owned(),
            pairing: "cantor: <a,b> = (a+b)(a+b+1)/2 + b".to_owned(),
            string_encoding: "little-endian base 257 over (byte value + 1)".to_owned(),
            list_encoding: "nil = 0, cons(x, r) = <x + 1, r>".to_owned(),
            tags: vec![
                ("succ".into(), TAG_SUCC),
                ("zero".into(), TAG_ZERO),
                ("add".into(), TAG_ADD),
                ("mul".into(), TAG_MUL),
                ("var".into(), TAG_VAR),
                ("num".into(), TAG_NUM),
                ("func".into(), TAG_FUNC),
                ("eq".into(), TAG_EQ),
                ("atom".into(), TAG_ATOM),
                ("not".into(), TAG_NOT),
                ("and".into(), TAG_AND),
                ("or".into(), TAG_OR),
                ("imp".into(), TAG_IMP),
                ("forall".into(), TAG_FORALL),
                ("exists".into(), TAG_EXISTS),
                ("bforall_le".into(), TAG_BFORALL_LE),
                ("bexists_le".into(), TAG_BEXISTS_LE),
                ("bforall_lt".into(), TAG_BFORALL_LT),
                ("bexists_lt".into(), TAG_BEXISTS_LT),
            ],
        }
    }
}

fn tagged(tag: u64, payload: Natural) -> Natural {
    pair(&Natural::from(tag), &payload)
}

fn code_string(s: &str) -> Natural {
    // Little-endian base 257 over byte+1 digits; injective on byte strings.
    let mut out = Natural::zero();
    for &b in s.as_bytes().iter().rev() {
        out = out * 257u32 + Natural::from(b as u32 + 1);
    }
    out
}

fn decode_string(mut n: Natural) -> Result<String, CodingError> {
    let mut bytes = Vec::new();
    while !n.is_zero() {
        let digit = (&n % 257u32).to_u32().expect("digit fits");
        if digit == 0 {
            return Err(CodingError::BadString);
        }
        bytes.push((digit - 1) as u8);
        n /= 257u32;
    }
    String::from_utf8(bytes).map_err(|_| CodingError::BadString)
}

fn code_list(items: &[Natural]) -> Natural {
    let mut out = Natural::zero();
    for item in items.iter().rev() {
        out = pair(&(item + 1u32), &out);
    }
    out
}

fn decode_list(mut n: Natural) -> Result<Vec<Natural>, CodingError> {
    let mut items = Vec::new();
    while !n.is_zero() {
        let (head, rest) = unpair(&n);
        if head.is_zero() {
            return Err(CodingError::BadString);
        }
        items.push(head - 1u32);
        n = rest;
    }
    Ok(items)
}

// ---------------------------------------------------------------------------
// Encoding
// ---------------------------------------------------------------------------

pub fn gn_term(t: &Term) -> GoedelNumber {
    GoedelNumber(gn_term_value(t))
}

fn gn_term_value(t: &Term) -> Natural {
    match t {
        Term::Zero => tagged(TAG_ZERO, Natural::zero()),
        Term::Succ(_) => {
            // Iterative, so numeral towers do not recurse.
            let mut depth: u64 = 0;
            let mut cur = t;
            while let Term::Succ(inner) = cur {
                depth += 1;
                cur = inner;
            }
            let mut code = gn_term_value(cur);
            for _ in 0..depth {
                code = tagged(TAG_SUCC, code);
            }
            code
        }
        Term::Add(a, b) => tagged(TAG_ADD, pair(&gn_term_value(a), &gn_term_value(b))),
        Term::Mul(a, b) => tagged(TAG_MUL, pair(&gn_term_value(a), &gn_term_value(b))),
        Term::Var(v) => tagged(TAG_VAR, code_string(v)),
        Term::Num(n) => tagged(TAG_NUM, n.clone()),
        Term::Func(f, args) => {
            let arg_codes: Vec<Natural> = args.iter().map(gn_term_value).collect();
            tagged(TAG_FUNC, pair(&code_string(&f.0), &code_list(&arg_codes)))
        }
    }
}

pub fn gn_formula(phi: &Formula) -> GoedelNumber {
    GoedelNumber(gn_formula_value(phi))
}

fn gn_formula_value(phi: &Formula) -> Natural {
    match phi {
        Formula::Eq(a, b) => tagged(TAG_EQ, pair(&gn_term_value(a), &gn_term_value(b))),
        Formula::Atom(name, args) => {
            let arg_codes: Vec<Natural> = args.iter().map(gn_term_value).collect();
            tagged(TAG_ATOM, pair(&code_string(&name.0), &code_list(&arg_codes)))
        }
        Formula::Not(f) => tagged(TAG_NOT, gn_formula_value(f)),
        Formula::And(a, b) => tagged(TAG_AND, pair(&gn_formula_value(a), &gn_formula_value(b))),
        Formula::Or(a, b) => tagged(TAG_OR, pair(&gn_formula_value(a), &gn_formula_value(b))),
        Formula::Imp(a, b) => tagged(TAG_IMP, pair(&gn_formula_value(a), &gn_formula_value(b))),
        Formula::Forall(v, f) => tagged(TAG_FORALL, pair(&code_string(v), &gn_formula_value(f))),
        Formula::Exists(v, f) => tagged(TAG_EXISTS, pair(&code_string(v), &gn_formula_value(f))),
        Formula::BForall {
            var,
            bound,
            strict,
            body,
        } => tagged(
            if *strict { TAG_BFORALL_LT } else { TAG_BFORALL_LE },
            pair(
                &code_string(var),
                &pair(&gn_term_value(bound), &gn_formula_value(body)),
            ),
        ),
        Formula::BExists {
            var,
            bound,
            strict,
            body,
        } => tagged(
            if *strict { TAG_BEXISTS_LT } else { TAG_BEXISTS_LE },
            pair(
                &code_string(var),
                &pair(&gn_term_value(bound), &gn_formula_value(body)),
            ),
        ),
    }
}

// ---------------------------------------------------------------------------
// Decoding
// ---------------------------------------------------------------------------

pub fn decode_term(code: &Natural) -> Result<Term, CodingError> {
    let (tag, payload) = unpair(code);
    let tag = tag.to_u64().ok_or(CodingError::BadString)?;
    match tag {
        TAG_SUCC => Ok(Term::succ(decode_term(&payload)?)),
        TAG_ZERO => {
            if payload.is_zero() {
                Ok(Term::Zero)
            } else {
                Err(CodingError::NotATerm(tag))
            }
        }
        TAG_ADD | TAG_MUL => {
            let (a, b) = unpair(&payload);
            let (a, b) = (decode_term(&a)?, decode_term(&b)?);
            Ok(if tag == TAG_ADD {
                Term::add(a, b)
            } else {
                Term::mul(a, b)
            })
        }
        TAG_VAR => Ok(Term::Var(decode_string(payload)?)),
        TAG_NUM => Ok(Term::Num(payload)),
        TAG_FUNC => {
            let (name, args) = unpair(&payload);
            let name = decode_string(name)?;
            let args = decode_list(args)?
                .iter()
                .map(decode_term)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Term::Func(FuncId(name), args))
        }
        t if t <= TAG_BEXISTS_LT => Err(CodingError::NotATerm(t)),
        t => Err(CodingError::UnknownTag(t)),
    }
}

pub fn decode_formula(code: &Natural) -> Result<Formula, CodingError> {
    let (tag, payload) = unpair(code);
    let tag = tag.to_u64().ok_or(CodingError::BadString)?;
    match tag {
        TAG_EQ => {
            let (a, b) = unpair(&payload);
            Ok(Formula::Eq(decode_term(&a)?, decode_term(&b)?))
        }
        TAG_ATOM => {
            let (name, args) = unpair(&payload);
            let name = decode_string(name)?;
            let args = decode_list(args)?
                .iter()
                .map(decode_term)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Formula::Atom(AtomId(name), args))
        }
        TAG_NOT => Ok(Formula::not(decode_formula(&payload)?)),
        TAG_AND | TAG_OR | TAG_IMP => {
            let (a, b) = unpair(&payload);
            let (a, b) = (decode_formula(&a)?, decode_formula(&b)?);
            Ok(match tag {
                TAG_AND => Formula::and(a, b),
                TAG_OR => Formula::or(a, b),
                _ => Formula::imp(a, b),
            })
        }
        TAG_FORALL | TAG_EXISTS => {
            let (v, f) = unpair(&payload);
            let v = decode_string(v)?;
            let f = decode_formula(&f)?;
            Ok(if tag == TAG_FORALL {
                Formula::forall(&v, f)
            } else {
                Formula::exists(&v, f)
            })
        }
        TAG_BFORALL_LE | TAG_BEXISTS_LE | TAG_BFORALL_LT | TAG_BEXISTS_LT => {
            let (v, rest) = unpair(&payload);
            let var = decode_string(v)?;
            let (bound, body) = unpair(&rest);
            let bound = decode_term(&bound)?;
            let body = decode_formula(&body)?;
            let strict = tag == TAG_BFORALL_LT || tag == TAG_BEXISTS_LT;
            Ok(if tag == TAG_BFORALL_LE || tag == TAG_BFORALL_LT {
                Formula::bforall(&var, bound, strict, body)
            } else {
                Formula::bexists(&var, bound, strict, body)
            })
        }
        t if t <= TAG_BEXISTS_LT => Err(CodingError::NotAFormula(t)),
        t => Err(CodingError::UnknownTag(t)),
    }
}

// ---------------------------------------------------------------------------
// Numerals and dotted substitution
// ---------------------------------------------------------------------------

/// Code of the negation of the formula coded by `code`: since every node is
/// `<tag, payload>`, this is just `<NOT, code>`. It is total and agrees with
/// `gn(~phi)` on every formula code by construction.
pub fn not_code(code: &Natural) -> Natural {
    tagged(TAG_NOT, code.clone())
}

/// Code of the implication between the formulas coded by `a` and `b`.
pub fn imp_code(a: &Natural, b: &Natural) -> Natural {
    tagged(TAG_IMP, pair(a, b))
}

/// `num(n) = gn(s^n(0))`, computed through the recurrence
/// `num(0) = gn(0)`, `num(n+1) = <0, num(n)>`.
pub fn num_value(n: u64) -> GoedelNumber {
    let mut code = tagged(TAG_ZERO, Natural::zero());
    for _ in 0..n {
        code = tagged(TAG_SUCC, code);
    }
    GoedelNumber(code)
}

/// The canonical constant term denoting `n`: the unary numeral up to
/// [`UNARY_NUMERAL_CAP`], the `#n` literal beyond it.
pub fn constant_term(n: &Natural) -> Term {
    match n.to_u64() {
        Some(small) if small <= UNARY_NUMERAL_CAP => Term::numeral(small),
        _ => Term::Num(n.clone()),
    }
}

fn unary_numeral(n: &Natural) -> Result<Term, CodingError> {
    match n.to_u64() {
        Some(small) if small <= UNARY_NUMERAL_CAP => Ok(Term::numeral(small)),
        _ => Err(CodingError::NumeralTooLarge(n.clone())),
    }
}

/// Gödel number of the sentence obtained from `phi` by substituting the unary
/// numeral of `assignment[x]` for each free variable `x`.
pub fn dotted_instance(
    phi: &Formula,
    assignment: &Assignment,
) -> Result<GoedelNumber, CodingError> {
    let mut instance = phi.clone();
    for v in phi.free_vars() {
        let value = assignment
            .get(&v)
            .ok_or_else(|| CodingError::MissingValue(v.clone()))?;
        instance = substitute(&instance, &v, &unary_numeral(value)?);
    }
    Ok(gn_formula(&instance))
}

/// Diagonal substitution on codes: decode `a` as a formula with one free
/// variable, substitute the canonical constant term for `b`, and return the
/// code of the result. A closed formula admits nothing to substitute into,
/// so its code passes through unchanged; two or more free variables are
/// rejected.
pub fn sub_eval(a: &GoedelNumber, b: &GoedelNumber) -> Result<GoedelNumber, CodingError> {
    let phi = decode_formula(a.value())?;
    let free = phi.free_vars();
    if free.len() > 1 {
        return Err(CodingError::NotOneFreeVariable(free.len()));
    }
    let Some(var) = free.into_iter().next() else {
        return Ok(a.clone());
    };
    let instance = substitute(&phi, &var, &constant_term(b.value()));
    Ok(gn_formula(&instance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;
    use std::collections::HashSet;

    #[test]
    fn cantor_base_cases() {
        assert_eq!(pair(&0u32.into(), &0u32.into()), Natural::from(0u32));
        assert_eq!(pair(&0u32.into(), &1u32.into()), Natural::from(2u32));
        assert_eq!(pair(&1u32.into(), &0u32.into()), Natural::from(1u32));
    }

    #[test]
    fn unpair_inverts_pair() {
        // Deterministic pseudo-random sweep, 10^4 pairs.
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..10_000 {
            let a = Natural::from(next() % 1_000_000);
            let b = Natural::from(next() % 1_000_000);
            assert_eq!(unpair(&pair(&a, &b)), (a, b));
        }
    }

    #[test]
    fn successor_recurrence_is_exact() {
        let t = Term::numeral(3);
        let inner = Term::numeral(2);
        assert_eq!(
            gn_term(&t).value(),
            &pair(&Natural::zero(), gn_term(&inner).value())
        );
    }

    #[test]
    fn num_recurrence() {
        for n in 0..=20u64 {
            assert_eq!(
                num_value(n + 1).value(),
                &pair(&Natural::zero(), num_value(n).value())
            );
            // num agrees with gn of the unary numeral.
            assert_eq!(num_value(n), gn_term(&Term::numeral(n)));
        }
    }

    #[test]
    fn encode_decode_round_trip() {
        for text in [
            "0 = 0",
            "!E y Atom[Prf_T](x, y)",
            "!A z < y . (Atom[Prf_T](#59, z) -> Atom[leq](x, z))",
            "~(x + y = y * x)",
            "sub(x, x) = n(x)",
        ] {
            let phi = parse(text).unwrap();
            let code = gn_formula(&phi);
            assert_eq!(decode_formula(code.value()).unwrap(), phi);
        }
    }

    #[test]
    fn distinct_small_terms_have_distinct_codes() {
        // All terms over {x, y} of nesting depth <= 2, exhaustively.
        let mut layer: Vec<Term> = vec![Term::Zero, Term::var("x"), Term::var("y")];
        for _ in 0..2 {
            let mut next = layer.clone();
            for t in &layer {
                next.push(Term::succ(t.clone()));
            }
            for a in &layer {
                for b in &layer {
                    next.push(Term::add(a.clone(), b.clone()));
                    next.push(Term::mul(a.clone(), b.clone()));
                }
            }
            next.sort();
            next.dedup();
            layer = next;
        }
        let mut seen = HashSet::new();
        for t in &layer {
            assert!(seen.insert(gn_term(t)), "collision at {t}");
        }
    }

    #[test]
    fn terms_and_formulas_do_not_collide() {
        let t = gn_term(&Term::Zero).into_value();
        assert!(decode_formula(&t).is_err());
        let f = gn_formula(&parse("0 = 0").unwrap()).into_value();
        assert!(decode_term(&f).is_err());
    }

    #[test]
    fn dotted_instance_matches_substitution() {
        let phi = parse("x = y + s(0)").unwrap();
        let mut env = Assignment::new();
        env.insert("x".into(), 3u32.into());
        env.insert("y".into(), 2u32.into());
        let direct = parse("s(s(s(0))) = s(s(0)) + s(0)").unwrap();
        assert_eq!(dotted_instance(&phi, &env).unwrap(), gn_formula(&direct));
    }

    #[test]
    fn dotted_instance_requires_total_assignment() {
        let phi = parse("x = y").unwrap();
        let mut env = Assignment::new();
        env.insert("x".into(), 0u32.into());
        assert!(matches!(
            dotted_instance(&phi, &env),
            Err(CodingError::MissingValue(_))
        ));
    }

    #[test]
    fn sub_eval_on_small_codes() {
        // Substituting 0 into `x = x` lands on the code of `0 = 0`.
        let theta = parse("x = x").unwrap();
        let got = sub_eval(&gn_formula(&theta), &GoedelNumber::from(0u64)).unwrap();
        assert_eq!(got, gn_formula(&parse("0 = 0").unwrap()));
    }

    #[test]
    fn sub_eval_rejects_non_formulas() {
        assert!(sub_eval(&GoedelNumber::from(0u64), &GoedelNumber::from(0u64)).is_err());
    }

    #[test]
    fn sub_eval_free_variable_counts() {
        // Closed formula: identity on codes.
        let closed = parse("0 = 0").unwrap();
        let code = gn_formula(&closed);
        assert_eq!(sub_eval(&code, &GoedelNumber::from(7u64)).unwrap(), code);
        // Two free variables: rejected.
        let two = parse("x = y").unwrap();
        assert!(matches!(
            sub_eval(&gn_formula(&two), &GoedelNumber::from(0u64)),
            Err(CodingError::NotOneFreeVariable(2))
        ));
    }
}
