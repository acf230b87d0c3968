//! Flattening pipeline: quantifier-free formulas over `{0, s, +, ×, =}` are
//! rewritten into an existentially quantified disjunction of equation systems
//! whose right-hand sides have complexity at most one.
//!
//! The pipeline runs in three stages:
//!
//! 1. [`eliminate_atoms`]: negation normal form, then every positive atom
//!    `t0 = t1` becomes `∃z (z = t0 & z = t1)` and every negated atom
//!    `t0 != t1` becomes `∃z0 ∃z1 (t0 + s(z0) = t1 | t1 + s(z1) = t0)`,
//!    with all the fresh existentials hoisted to the front.
//! 2. Disjunctive normal form over the quantifier-free matrix.
//! 3. [`flatten_terms`] per disjunct: any equation `z = f(..., t, ...)` with
//!    complexity above one is decomposed through fresh variables until every
//!    right-hand side is one of `0`, `s(v)`, `v + w`, `v × w` or a bare
//!    variable.
//!
//! A brute-force oracle checks the output equivalent to the input over a
//! finite domain, with witness bounds derived from the values the original
//! terms actually take, which makes the bounded check complete on the tested
//! domain.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde_json::{json, Value};
use thiserror::Error;

use crate::syntax::ast::{fresh_name, Formula, Natural, Term};
use crate::syntax::eval::Assignment;
use crate::syntax::nnf::nnf;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlattenError {
    #[error("formula contains a quantifier; the pipeline takes quantifier-free input")]
    QuantifierPresent,
    #[error("formula leaves the core signature (registered atoms, function symbols or numeral literals)")]
    NotCore,
    #[error("input has {0} literals, above the cap of {MAX_LITERALS}; disjunctive normal form would blow up")]
    TooManyLiterals(usize),
}

/// Inputs are capped before the naive DNF expansion.
pub const MAX_LITERALS: usize = 12;

/// One conjunction of equations `lhs = rhs`. The same left-hand variable may
/// be pinned by two equations (that is how an atom split `∃z(z = t0 & z = t1)`
/// expresses `t0 = t1`); decomposition auxiliaries are defined exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSystem {
    pub equations: Vec<(String, Term)>,
}

impl EquationSystem {
    /// Largest right-hand complexity; zero or one after flattening.
    pub fn max_rhs_complexity(&self) -> usize {
        self.equations
            .iter()
            .map(|(_, t)| t.complexity())
            .max()
            .unwrap_or(0)
    }
}

/// Existentially quantified disjunction of equation systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MtlNormalForm {
    pub existential_vars: Vec<String>,
    pub disjuncts: Vec<EquationSystem>,
}

impl MtlNormalForm {
    pub fn to_json(&self) -> Value {
        json!({
            "existential_vars": self.existential_vars,
            "disjuncts": self.disjuncts.iter().map(|d| json!({
                "equations": d.equations.iter().map(|(lhs, rhs)| json!({
                    "lhs": lhs,
                    "rhs": rhs.to_string(),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }

    /// The formula `∃ y⃗ (δ0 | ... | δk)` this normal form denotes.
    pub fn to_formula(&self) -> Formula {
        let mut matrix: Option<Formula> = None;
        for d in &self.disjuncts {
            let mut conj: Option<Formula> = None;
            for (lhs, rhs) in &d.equations {
                let eq = Formula::Eq(Term::var(lhs), rhs.clone());
                conj = Some(match conj {
                    None => eq,
                    Some(c) => Formula::and(c, eq),
                });
            }
            let disjunct = conj.unwrap_or_else(|| Formula::Eq(Term::Zero, Term::Zero));
            matrix = Some(match matrix {
                None => disjunct,
                Some(m) => Formula::or(m, disjunct),
            });
        }
        let mut out = matrix.unwrap_or_else(|| Formula::Eq(Term::Zero, Term::succ(Term::Zero)));
        for v in self.existential_vars.iter().rev() {
            out = Formula::exists(v, out);
        }
        out
    }
}

fn check_input(phi: &Formula) -> Result<(), FlattenError> {
    if !phi.is_quantifier_free() {
        return Err(FlattenError::QuantifierPresent);
    }
    if !phi.is_core() {
        return Err(FlattenError::NotCore);
    }
    Ok(())
}

fn count_literals(phi: &Formula) -> usize {
    match phi {
        Formula::Eq(..) | Formula::Atom(..) => 1,
        Formula::Not(f) => count_literals(f),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            count_literals(a) + count_literals(b)
        }
        Formula::Forall(_, f) | Formula::Exists(_, f) => count_literals(f),
        Formula::BForall { body, .. } | Formula::BExists { body, .. } => count_literals(body),
    }
}

/// Source of fresh variable names, disjoint from a fixed set of input names.
struct FreshVars {
    taken: BTreeSet<String>,
}

impl FreshVars {
    fn new(taken: BTreeSet<String>) -> Self {
        FreshVars { taken }
    }

    fn next(&mut self, base: &str) -> String {
        let name = fresh_name(base, &self.taken);
        self.taken.insert(name.clone());
        name
    }
}

/// Stage 1 of the pipeline. Returns the transformed formula with all
/// introduced existentials hoisted to the front.
pub fn eliminate_atoms(phi: &Formula) -> Result<Formula, FlattenError> {
    check_input(phi)?;
    let mut fresh = FreshVars::new(phi.all_vars());
    let mut hoisted = Vec::new();
    let matrix = eliminate_rec(&nnf(phi), &mut fresh, &mut hoisted)?;
    let mut out = matrix;
    for v in hoisted.into_iter().rev() {
        out = Formula::exists(&v, out);
    }
    Ok(out)
}

fn eliminate_rec(
    phi: &Formula,
    fresh: &mut FreshVars,
    hoisted: &mut Vec<String>,
) -> Result<Formula, FlattenError> {
    match phi {
        Formula::Eq(t0, t1) => {
            let z = fresh.next("z");
            hoisted.push(z.clone());
            Ok(Formula::and(
                Formula::Eq(Term::var(&z), t0.clone()),
                Formula::Eq(Term::var(&z), t1.clone()),
            ))
        }
        Formula::Not(inner) => match &**inner {
            Formula::Eq(t0, t1) => {
                let z0 = fresh.next("z");
                let z1 = fresh.next("z");
                hoisted.push(z0.clone());
                hoisted.push(z1.clone());
                Ok(Formula::or(
                    Formula::Eq(Term::add(t0.clone(), Term::succ(Term::var(&z0))), t1.clone()),
                    Formula::Eq(Term::add(t1.clone(), Term::succ(Term::var(&z1))), t0.clone()),
                ))
            }
            _ => Err(FlattenError::NotCore),
        },
        Formula::And(a, b) => Ok(Formula::and(
            eliminate_rec(a, fresh, hoisted)?,
            eliminate_rec(b, fresh, hoisted)?,
        )),
        Formula::Or(a, b) => Ok(Formula::or(
            eliminate_rec(a, fresh, hoisted)?,
            eliminate_rec(b, fresh, hoisted)?,
        )),
        // nnf leaves neither implications nor quantifiers behind.
        _ => Err(FlattenError::QuantifierPresent),
    }
}

/// Stage 3: decompose composite right-hand sides through fresh variables
/// until every equation has complexity at most one. Returns the flattened
/// system together with the auxiliaries it introduced.
pub fn flatten_terms(
    system: &[(String, Term)],
    fresh: &mut dyn FnMut() -> String,
) -> (EquationSystem, Vec<String>) {
    let mut auxiliaries = Vec::new();
    let mut queue: VecDeque<(String, Term)> = system.iter().cloned().collect();
    let mut out = Vec::new();
    while let Some((lhs, rhs)) = queue.pop_front() {
        if rhs.complexity() <= 1 {
            out.push((lhs, rhs));
            continue;
        }
        // Complexity above one: the head keeps its shape, composite
        // arguments move behind fresh variables.
        let mut punt = |t: &Term, queue: &mut VecDeque<(String, Term)>| {
            if let Term::Var(_) = t {
                t.clone()
            } else {
                let w = fresh();
                auxiliaries.push(w.clone());
                queue.push_back((w.clone(), t.clone()));
                Term::var(&w)
            }
        };
        let new_rhs = match &rhs {
            Term::Succ(t) => Term::succ(punt(t, &mut queue)),
            Term::Add(a, b) => {
                let a = punt(a, &mut queue);
                let b = punt(b, &mut queue);
                Term::add(a, b)
            }
            Term::Mul(a, b) => {
                let a = punt(a, &mut queue);
                let b = punt(b, &mut queue);
                Term::mul(a, b)
            }
            // Complexity > 1 is only reachable through the three composite
            // constructors.
            _ => unreachable!("complexity above one on a leaf term"),
        };
        out.push((lhs, new_rhs));
    }
    (EquationSystem { equations: out }, auxiliaries)
}

/// The full pipeline.
pub fn mtl_normal_form(phi: &Formula) -> Result<MtlNormalForm, FlattenError> {
    check_input(phi)?;
    let literals = count_literals(phi);
    if literals > MAX_LITERALS {
        return Err(FlattenError::TooManyLiterals(literals));
    }

    let eliminated = eliminate_atoms(phi)?;

    // Split off the hoisted existential prefix.
    let mut existential_vars = Vec::new();
    let mut matrix = &eliminated;
    while let Formula::Exists(v, body) = matrix {
        existential_vars.push(v.clone());
        matrix = body;
    }

    let mut fresh = FreshVars::new(eliminated.all_vars());
    let disjunct_atoms = dnf(matrix);

    let mut disjuncts = Vec::new();
    for atoms in disjunct_atoms {
        // Orient every equation into lhs-variable form.
        let mut system: Vec<(String, Term)> = Vec::new();
        for eq in atoms {
            let Formula::Eq(a, b) = eq else {
                unreachable!("stage 1 leaves only equations in the matrix")
            };
            match (&a, &b) {
                (Term::Var(v), _) => system.push((v.clone(), b.clone())),
                (_, Term::Var(v)) => system.push((v.clone(), a.clone())),
                _ => {
                    let w = fresh.next("w");
                    existential_vars.push(w.clone());
                    system.push((w.clone(), a.clone()));
                    system.push((w.clone(), b.clone()));
                }
            }
        }
        let mut next_aux = || fresh.next("u");
        let (flat, auxiliaries) = flatten_terms(&system, &mut next_aux);
        existential_vars.extend(auxiliaries);
        disjuncts.push(flat);
    }

    // Deduplicate while keeping first-appearance order.
    let mut seen = BTreeSet::new();
    existential_vars.retain(|v| seen.insert(v.clone()));

    Ok(MtlNormalForm {
        existential_vars,
        disjuncts,
    })
}

/// Disjunctive normal form of an and/or tree of equations: a list of
/// conjunctions, each a list of `Formula::Eq` atoms.
fn dnf(phi: &Formula) -> Vec<Vec<Formula>> {
    match phi {
        Formula::Eq(..) => vec![vec![phi.clone()]],
        Formula::Or(a, b) => {
            let mut out = dnf(a);
            out.extend(dnf(b));
            out
        }
        Formula::And(a, b) => {
            let left = dnf(a);
            let right = dnf(b);
            let mut out = Vec::with_capacity(left.len() * right.len());
            for l in &left {
                for r in &right {
                    let mut row = l.clone();
                    row.extend(r.iter().cloned());
                    out.push(row);
                }
            }
            out
        }
        _ => unreachable!("matrix is an and/or tree of equations"),
    }
}

// ---------------------------------------------------------------------------
// Brute-force equivalence oracle
// ---------------------------------------------------------------------------

/// Exact truth of a quantifier-free core formula under a total assignment.
fn qf_truth(phi: &Formula, env: &Assignment) -> bool {
    match phi {
        Formula::Eq(a, b) => eval_core_term(a, env) == eval_core_term(b, env),
        Formula::Not(f) => !qf_truth(f, env),
        Formula::And(a, b) => qf_truth(a, env) && qf_truth(b, env),
        Formula::Or(a, b) => qf_truth(a, env) || qf_truth(b, env),
        Formula::Imp(a, b) => !qf_truth(a, env) || qf_truth(b, env),
        _ => unreachable!("oracle input is quantifier-free and core"),
    }
}

fn eval_core_term(t: &Term, env: &Assignment) -> Natural {
    match t {
        Term::Zero => Natural::from(0u32),
        Term::Succ(inner) => eval_core_term(inner, env) + 1u32,
        Term::Add(a, b) => eval_core_term(a, env) + eval_core_term(b, env),
        Term::Mul(a, b) => eval_core_term(a, env) * eval_core_term(b, env),
        Term::Var(v) => env.get(v).cloned().expect("total assignment"),
        _ => unreachable!("oracle input is core"),
    }
}

/// Largest value any subterm of `phi` takes under `env`.
fn max_term_value(phi: &Formula, env: &Assignment) -> Natural {
    fn walk(phi: &Formula, env: &Assignment, best: &mut Natural) {
        match phi {
            Formula::Eq(a, b) => {
                for t in [a, b] {
                    let v = eval_core_term(t, env);
                    if v > *best {
                        *best = v;
                    }
                }
            }
            Formula::Not(f) => walk(f, env, best),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                walk(a, env, best);
                walk(b, env, best);
            }
            _ => unreachable!("oracle input is quantifier-free"),
        }
    }
    let mut best = Natural::from(0u32);
    walk(phi, env, &mut best);
    best
}

/// Check one equation system under a partial valuation, searching any
/// undetermined variables up to `search_limit`. Determined variables
/// propagate through their defining equations; conflicts prune immediately.
fn system_satisfiable(
    system: &EquationSystem,
    base: &BTreeMap<String, Natural>,
    search_limit: &Natural,
) -> bool {
    fn propagate(
        system: &EquationSystem,
        env: &mut BTreeMap<String, Natural>,
    ) -> Option<Vec<usize>> {
        let mut pending: Vec<usize> = (0..system.equations.len()).collect();
        loop {
            let mut progressed = false;
            let mut still = Vec::new();
            for idx in pending {
                let (lhs, rhs) = &system.equations[idx];
                let ready = rhs.free_vars().iter().all(|v| env.contains_key(v));
                if !ready {
                    still.push(idx);
                    continue;
                }
                let value = eval_core_term(rhs, env);
                match env.get(lhs) {
                    Some(existing) if *existing != value => return None,
                    Some(_) => {}
                    None => {
                        env.insert(lhs.clone(), value);
                        progressed = true;
                    }
                }
            }
            if still.is_empty() {
                return Some(Vec::new());
            }
            if !progressed {
                return Some(still);
            }
            pending = still;
        }
    }

    fn solve(
        system: &EquationSystem,
        env: &BTreeMap<String, Natural>,
        limit: &Natural,
    ) -> bool {
        let mut env = env.clone();
        let Some(stuck) = propagate(system, &mut env) else {
            return false; // conflict
        };
        if stuck.is_empty() {
            return true;
        }
        // Some equations wait on an undetermined variable: pick one and
        // search it up to the limit.
        let (_, rhs) = &system.equations[stuck[0]];
        let var = rhs
            .free_vars()
            .into_iter()
            .find(|v| !env.contains_key(v))
            .expect("stuck equation has an undetermined variable");
        let mut k = Natural::from(0u32);
        while k <= *limit {
            let mut attempt = env.clone();
            attempt.insert(var.clone(), k.clone());
            if solve(system, &attempt, limit) {
                return true;
            }
            k += 1u32;
        }
        false
    }

    solve(system, base, search_limit)
}

/// Brute-force equivalence of `phi` and `nf` over assignments of the free
/// variables of `phi` ranging over `{0, ..., domain_bound}`.
///
/// Witnesses for the existential variables are searched up to the largest
/// value any subterm of `phi` takes on the assignment, plus `domain_bound`;
/// every value forced along an equation chain is bounded by the evaluation of
/// the original terms, and inequality witnesses are bounded by the larger
/// side, so the bounded search is complete on the tested domain.
pub fn equivalence_oracle(phi: &Formula, nf: &MtlNormalForm, domain_bound: u64) -> bool {
    let free: Vec<String> = phi.free_vars().into_iter().collect();
    let mut env = Assignment::new();
    equivalence_rec(phi, nf, domain_bound, &free, 0, &mut env)
}

fn equivalence_rec(
    phi: &Formula,
    nf: &MtlNormalForm,
    domain_bound: u64,
    free: &[String],
    idx: usize,
    env: &mut Assignment,
) -> bool {
    if idx == free.len() {
        let lhs = qf_truth(phi, env);
        let limit = max_term_value(phi, env) + Natural::from(domain_bound);
        let rhs = nf
            .disjuncts
            .iter()
            .any(|d| system_satisfiable(d, env, &limit));
        return lhs == rhs;
    }
    for k in 0..=domain_bound {
        env.insert(free[idx].clone(), Natural::from(k));
        if !equivalence_rec(phi, nf, domain_bound, free, idx + 1, env) {
            env.remove(&free[idx]);
            return false;
        }
    }
    env.remove(&free[idx]);
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn parse_term(text: &str) -> Term {
        crate::syntax::parse_term(text).unwrap()
    }

    #[test]
    fn eliminate_negated_atom_has_the_witness_shape() {
        let phi = parse("0 != s(0)").unwrap();
        let got = eliminate_atoms(&phi).unwrap();
        let expected = parse("!E z0 !E z1 (0 + s(z0) = s(0) | s(0) + s(z1) = 0)").unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn eliminate_positive_atom_splits_through_a_fresh_variable() {
        let phi = parse("0 = 0").unwrap();
        let got = eliminate_atoms(&phi).unwrap();
        let expected = parse("!E z0 (z0 = 0 & z0 = 0)").unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn eliminate_rejects_quantifiers() {
        let phi = parse("!E x (x = 0)").unwrap();
        assert!(matches!(
            eliminate_atoms(&phi),
            Err(FlattenError::QuantifierPresent)
        ));
    }

    #[test]
    fn flatten_decomposes_step_by_step() {
        let mut counter = 0;
        let mut fresh = || {
            let name = format!("w{counter}");
            counter += 1;
            name
        };
        let system = vec![("z".to_owned(), parse_term("s(s(0))"))];
        let (flat, aux) = flatten_terms(&system, &mut fresh);
        assert_eq!(
            flat.equations,
            vec![
                ("z".to_owned(), parse_term("s(w0)")),
                ("w0".to_owned(), parse_term("s(w1)")),
                ("w1".to_owned(), parse_term("0")),
            ]
        );
        assert_eq!(aux, vec!["w0".to_owned(), "w1".to_owned()]);
        assert!(flat.max_rhs_complexity() <= 1);
    }

    #[test]
    fn flatten_keeps_bare_variables() {
        let mut fresh = || -> String { unreachable!("no auxiliary needed") };
        let system = vec![("z".to_owned(), Term::var("x"))];
        let (flat, aux) = flatten_terms(&system, &mut fresh);
        assert_eq!(flat.equations, vec![("z".to_owned(), Term::var("x"))]);
        assert!(aux.is_empty());
    }

    #[test]
    fn normal_form_shape_for_simple_equation() {
        let phi = parse("x = 0").unwrap();
        let nf = mtl_normal_form(&phi).unwrap();
        assert_eq!(nf.disjuncts.len(), 1);
        assert!(nf.disjuncts[0].max_rhs_complexity() <= 1);
        // The split variable carries both sides of the original atom.
        assert_eq!(nf.disjuncts[0].equations.len(), 2);
        assert!(equivalence_oracle(&phi, &nf, 4));
    }

    #[test]
    fn normal_form_two_stage_example() {
        let phi = parse("x != 0 & x = s(y)").unwrap();
        let nf = mtl_normal_form(&phi).unwrap();
        for d in &nf.disjuncts {
            assert!(d.max_rhs_complexity() <= 1);
        }
        assert!(equivalence_oracle(&phi, &nf, 4));
    }

    #[test]
    fn oracle_rejects_a_corrupted_normal_form() {
        let phi = parse("x = 0").unwrap();
        let mut nf = mtl_normal_form(&phi).unwrap();
        // Perturb one right-hand side: the system now says x = s(x).
        let last = nf.disjuncts[0].equations.len() - 1;
        nf.disjuncts[0].equations[last].1 = parse_term("s(x)");
        assert!(!equivalence_oracle(&phi, &nf, 4));
    }

    #[test]
    fn oracle_bound_is_monotone() {
        let phi = parse("x != y | x = s(s(y))").unwrap();
        let nf = mtl_normal_form(&phi).unwrap();
        for bound in [2, 3, 4, 6] {
            assert!(equivalence_oracle(&phi, &nf, bound));
        }
    }

    #[test]
    fn literal_cap_is_enforced() {
        let mut text = String::from("x = 0");
        for _ in 0..12 {
            text.push_str(" & x = 0");
        }
        let phi = parse(&text).unwrap();
        assert!(matches!(
            mtl_normal_form(&phi),
            Err(FlattenError::TooManyLiterals(13))
        ));
    }

    #[test]
    fn auxiliaries_do_not_collide_with_input_variables() {
        // Input uses z0 and u0 deliberately.
        let phi = parse("z0 = s(s(u0)) | u0 != z0").unwrap();
        let nf = mtl_normal_form(&phi).unwrap();
        let inputs = phi.free_vars();
        for v in &nf.existential_vars {
            assert!(!inputs.contains(v), "auxiliary {v} collides with an input");
        }
        assert!(equivalence_oracle(&phi, &nf, 4));
    }
}
