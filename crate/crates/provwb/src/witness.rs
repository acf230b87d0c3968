//! Consistency-statement constructors and the witness-predicate gallery.
//!
//! A [`PredicateTemplate`] is a formula with designated free variable `x`
//! over the abstract proof predicates of the registry. [`make_con`] builds
//! the four consistency statements for any candidate predicate, and
//! [`gallery`] serves the catalog of named witness predicates: the ones with
//! an explicit syntactic shape come as full templates, the ones whose
//! defining property needs simultaneous fixed points or external
//! constructions come as metadata records pointing at the knowledge base.

use std::sync::OnceLock;

use thiserror::Error;

use crate::coding::{constant_term, gn_formula};
use crate::hierarchy::{classify, HierarchyLevel};
use crate::syntax::ast::{Formula, Term};
use crate::syntax::atoms::Registry;
use crate::syntax::subst::substitute;

/// The four consistency statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConsistencyVariant {
    /// `∀x (Fml(x) & Φ(x) -> ~Φ(neg(x)))`
    H,
    /// `~Φ(⌜0 != 0⌝)`
    L,
    /// `∃x (Fml(x) & ~Φ(x))`
    G,
    /// `∃x (Σ1(x) & Sent(x) & ~Φ(x))`
    Sigma1,
}

impl ConsistencyVariant {
    pub const ALL: [ConsistencyVariant; 4] = [
        ConsistencyVariant::H,
        ConsistencyVariant::L,
        ConsistencyVariant::G,
        ConsistencyVariant::Sigma1,
    ];
}

impl std::fmt::Display for ConsistencyVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConsistencyVariant::H => write!(f, "H"),
            ConsistencyVariant::L => write!(f, "L"),
            ConsistencyVariant::G => write!(f, "G"),
            ConsistencyVariant::Sigma1 => write!(f, "Sigma1"),
        }
    }
}

impl std::str::FromStr for ConsistencyVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "h" => Ok(ConsistencyVariant::H),
            "l" => Ok(ConsistencyVariant::L),
            "g" => Ok(ConsistencyVariant::G),
            "sigma1" | "s1" => Ok(ConsistencyVariant::Sigma1),
            _ => Err(format!("unknown consistency variant `{s}` (H, L, G, Sigma1)")),
        }
    }
}

/// A named candidate provability predicate with one free variable `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateTemplate {
    pub name: String,
    pub formula: Formula,
    pub declared_level: HierarchyLevel,
    /// Attribution or knowledge-base pointer.
    pub provenance: String,
}

impl PredicateTemplate {
    /// The template applied to a term.
    pub fn apply(&self, arg: &Term) -> Formula {
        substitute(&self.formula, "x", arg)
    }
}

/// Catalog entry: a full template, or a metadata record for predicates whose
/// construction is not syntactically explicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GalleryEntry {
    Template(PredicateTemplate),
    MetadataOnly {
        name: String,
        summary: String,
        /// Name of the corresponding knowledge-base witness record.
        kb_witness: String,
        provenance: String,
    },
}

impl GalleryEntry {
    pub fn name(&self) -> &str {
        match self {
            GalleryEntry::Template(t) => &t.name,
            GalleryEntry::MetadataOnly { name, .. } => name,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("unknown gallery entry `{0}`")]
    UnknownName(String),
    #[error("template must have free variables within {{x}}, found {0:?}")]
    WrongVariables(Vec<String>),
    #[error("guard formula must be bounded (Δ0 with registered Δ1 atoms) in (x, z); it classifies to {0}")]
    GuardNotBounded(HierarchyLevel),
    #[error("guard formula may use only the variables x and z, found {0:?}")]
    GuardVariables(Vec<String>),
}

fn falsum() -> Formula {
    // 0 != 0, the canonical refutable sentence.
    Formula::not(Formula::Eq(Term::Zero, Term::Zero))
}

/// Constant term denoting the code of `0 != 0`.
fn falsum_code_term() -> Term {
    constant_term(gn_formula(&falsum()).value())
}

fn check_template_vars(phi: &Formula) -> Result<(), WitnessError> {
    let extraneous: Vec<String> = phi.free_vars().into_iter().filter(|v| v != "x").collect();
    if extraneous.is_empty() {
        Ok(())
    } else {
        Err(WitnessError::WrongVariables(extraneous))
    }
}

/// Build a consistency statement over the candidate predicate.
pub fn make_con(variant: ConsistencyVariant, phi: &PredicateTemplate) -> Formula {
    let x = Term::var("x");
    match variant {
        ConsistencyVariant::H => Formula::forall(
            "x",
            Formula::imp(
                Formula::and(Formula::atom("Fml", vec![x.clone()]), phi.apply(&x)),
                Formula::not(phi.apply(&Term::func("neg", vec![x]))),
            ),
        ),
        ConsistencyVariant::L => Formula::not(phi.apply(&falsum_code_term())),
        ConsistencyVariant::G => Formula::exists(
            "x",
            Formula::and(
                Formula::atom("Fml", vec![x.clone()]),
                Formula::not(phi.apply(&x)),
            ),
        ),
        ConsistencyVariant::Sigma1 => Formula::exists(
            "x",
            Formula::and(
                Formula::and(
                    Formula::atom("Sigma_z", vec![x.clone(), Term::numeral(1)]),
                    Formula::atom("Sent", vec![x.clone()]),
                ),
                Formula::not(phi.apply(&x)),
            ),
        ),
    }
}

/// Guarded proof predicate: from a bounded guard `delta(x, z)`, build
///
/// ```text
/// ∃y ( Prf_T(x, y) & ∀z < y . (Prf_T(⌜0 != 0⌝, z) -> delta(x, z)) )
/// ```
///
/// which is a Σ1 template whenever the guard is bounded.
pub fn pr_delta(delta: &Formula, name: &str, registry: &Registry) -> Result<PredicateTemplate, WitnessError> {
    let vars: Vec<String> = delta
        .free_vars()
        .into_iter()
        .filter(|v| v != "x" && v != "z")
        .collect();
    if !vars.is_empty() {
        return Err(WitnessError::GuardVariables(vars));
    }
    let level = classify(delta, registry).map_err(|_| {
        WitnessError::GuardVariables(delta.free_vars().into_iter().collect())
    })?;
    if level != HierarchyLevel::Delta0 {
        return Err(WitnessError::GuardNotBounded(level));
    }

    let guard = Formula::bforall(
        "z",
        Term::var("y"),
        true,
        Formula::imp(
            Formula::atom("Prf_T", vec![falsum_code_term(), Term::var("z")]),
            delta.clone(),
        ),
    );
    let formula = Formula::exists(
        "y",
        Formula::and(
            Formula::atom("Prf_T", vec![Term::var("x"), Term::var("y")]),
            guard,
        ),
    );
    Ok(PredicateTemplate {
        name: name.to_owned(),
        formula,
        declared_level: HierarchyLevel::Sigma(1),
        provenance: format!("guarded proof predicate over `{delta}`"),
    })
}

/// Give the template an odd number of logical symbols by conjoining `0 = 0`
/// when the count is even. Idempotent.
pub fn parity_normalize(template: &PredicateTemplate) -> PredicateTemplate {
    if template.formula.count_logical_symbols() % 2 == 1 {
        return template.clone();
    }
    PredicateTemplate {
        formula: Formula::and(
            template.formula.clone(),
            Formula::Eq(Term::Zero, Term::Zero),
        ),
        ..template.clone()
    }
}

/// The plain provability-predicate shape `∃y Prf_T(x, y)`.
pub fn pr_t() -> PredicateTemplate {
    PredicateTemplate {
        name: "pr".to_owned(),
        formula: Formula::exists(
            "y",
            Formula::atom("Prf_T", vec![Term::var("x"), Term::var("y")]),
        ),
        declared_level: HierarchyLevel::Sigma(1),
        provenance: "existential closure of the proof predicate".to_owned(),
    }
}

fn xi_prime() -> Formula {
    // xi | 0 = s(0), with xi an undecidable sentence parameter.
    Formula::or(
        Formula::atom("xi", vec![]),
        Formula::Eq(Term::Zero, Term::succ(Term::Zero)),
    )
}

fn build_catalog() -> Vec<GalleryEntry> {
    let registry = Registry::standard();
    let x = Term::var("x");
    let y = Term::var("y");
    let z = Term::var("z");
    let mut entries = Vec::new();

    entries.push(GalleryEntry::Template(pr_t()));

    // Finite numeration of the two-axiom toy theory {0 = 0, ~(0 = s(0))}:
    // the disjunction of code equations.
    let axioms = [
        Formula::Eq(Term::Zero, Term::Zero),
        Formula::not(Formula::Eq(Term::Zero, Term::succ(Term::Zero))),
    ];
    let numeration = axioms
        .iter()
        .map(|a| Formula::Eq(x.clone(), constant_term(gn_formula(a).value())))
        .reduce(Formula::or)
        .expect("nonempty theory");
    entries.push(GalleryEntry::Template(PredicateTemplate {
        name: "finite_numeration".to_owned(),
        formula: numeration,
        declared_level: HierarchyLevel::Delta0,
        provenance: "numeration of a finite theory: disjunction of code equations".to_owned(),
    }));

    // Formalized deduction theorem shape: provability from the finite theory
    // coincides with pure-logic provability of the implication from its
    // conjoined axioms.
    let conj = Formula::and(axioms[0].clone(), axioms[1].clone());
    let conj_code = constant_term(gn_formula(&conj).value());
    let pr_t0 = Formula::atom("PR_T0", vec![x.clone()]);
    let prl_imp = Formula::atom(
        "PrL",
        vec![Term::func("imp", vec![conj_code, x.clone()])],
    );
    entries.push(GalleryEntry::Template(PredicateTemplate {
        name: "fdt".to_owned(),
        formula: Formula::and(
            Formula::imp(pr_t0.clone(), prl_imp.clone()),
            Formula::imp(prl_imp, pr_t0),
        ),
        declared_level: HierarchyLevel::Sigma(2),
        provenance: "deduction-theorem bridge for a finitely axiomatized theory".to_owned(),
    }));

    // The empty predicate.
    entries.push(GalleryEntry::Template(PredicateTemplate {
        name: "psi".to_owned(),
        formula: Formula::not(Formula::Eq(x.clone(), x.clone())),
        declared_level: HierarchyLevel::Delta0,
        provenance: "empty predicate: rejects every code".to_owned(),
    }));

    // Proof predicate guarded against refutation codes at the same level.
    entries.push(GalleryEntry::Template(PredicateTemplate {
        name: "mostowski".to_owned(),
        formula: Formula::exists(
            "y",
            Formula::and(
                Formula::atom("Prf_T", vec![x.clone(), y.clone()]),
                Formula::not(Formula::atom(
                    "Prf_T",
                    vec![falsum_code_term(), y.clone()],
                )),
            ),
        ),
        declared_level: HierarchyLevel::Sigma(1),
        provenance: "Mostowski-style predicate: provability by a proof that is not a proof of the refutable sentence".to_owned(),
    }));

    // The three guarded predicates separating condition layers.
    let guard_i = Formula::or(
        Formula::atom("leq", vec![x.clone(), z.clone()]),
        Formula::atom("Even", vec![x.clone()]),
    );
    let pr_i = parity_normalize(
        &pr_delta(&guard_i, "pr_i", &registry).expect("bounded guard"),
    );
    entries.push(GalleryEntry::Template(PredicateTemplate {
        provenance: "guard x <= z | Even(x): keeps local conditions, breaks every uniform one".to_owned(),
        ..pr_i
    }));

    let guard_ii = Formula::or(
        Formula::atom(
            "leq",
            vec![Term::func("n", vec![x.clone()]), z.clone()],
        ),
        Formula::atom("Even", vec![x.clone()]),
    );
    let pr_ii = pr_delta(&guard_ii, "pr_ii", &registry).expect("bounded guard");
    entries.push(GalleryEntry::Template(PredicateTemplate {
        provenance: "guard n(x) <= z | Even(x): keeps uniform conditions, breaks the global ones".to_owned(),
        ..pr_ii
    }));

    let guard_iii = Formula::atom("Sigma_z", vec![x.clone(), z.clone()]);
    let pr_iii = pr_delta(&guard_iii, "pr_iii", &registry).expect("bounded guard");
    entries.push(GalleryEntry::Template(PredicateTemplate {
        provenance: "guard Sigma_z(x): keeps global Σ1-completeness, provable consistency in the sense of an unprovable formula".to_owned(),
        ..pr_iii
    }));

    // Provability with one sentence carved out.
    entries.push(GalleryEntry::Template(PredicateTemplate {
        name: "pr_vi".to_owned(),
        formula: Formula::and(
            pr_t().formula,
            Formula::not(Formula::Eq(
                x.clone(),
                constant_term(gn_formula(&Formula::not(xi_prime())).value()),
            )),
        ),
        declared_level: HierarchyLevel::Sigma(1),
        provenance: "provability minus the negation of an undecidable disjunction".to_owned(),
    }));

    // Union of two independent provability predicates.
    entries.push(GalleryEntry::Template(PredicateTemplate {
        name: "pr_star".to_owned(),
        formula: Formula::or(
            Formula::exists(
                "y",
                Formula::atom("Prf_a0", vec![x.clone(), y.clone()]),
            ),
            Formula::exists(
                "y",
                Formula::atom("Prf_a1", vec![x.clone(), y.clone()]),
            ),
        ),
        declared_level: HierarchyLevel::Sigma(1),
        provenance: "disjunction of the predicates of two independent numerations".to_owned(),
    }));

    // Metadata-only entries: predicates whose construction needs fixed
    // points or external machinery; their condition profiles live in the
    // knowledge base.
    let metadata = [
        (
            "feferman_pi",
            "provability from a Π1 numeration that enumerates axioms only up to the shortest inconsistency proof (Feferman 1960)",
            "feferman_pi",
        ),
        (
            "arai_a1",
            "Rosser-style predicate over negation normal forms satisfying the global modus-ponens condition (Arai 1990)",
            "arai_a1",
        ),
        (
            "arai_a2",
            "Rosser-style predicate over negation normal forms satisfying the global self-reference condition (Arai 1990)",
            "arai_a2",
        ),
        (
            "rosser_r1",
            "Rosser provability predicate with the global modus-ponens condition",
            "rosser_r1",
        ),
        (
            "rosser_r2",
            "Rosser provability predicate with uniform closure and the converse-Barcan condition",
            "rosser_r2",
        ),
        (
            "rosser_r3",
            "Rosser provability predicate keeping local modus ponens and global self-reference",
            "rosser_r3",
        ),
        (
            "pr_iv",
            "modal-closure predicate built by simultaneous fixed points; keeps the local conditions and the global versions of modus ponens and self-reference while failing Σ1-completeness (after Visser 2016)",
            "pr_iv",
        ),
        (
            "pr_v",
            "witness-comparison predicate built by a fixed point; keeps global Σ1-completeness while failing uniform closure and predicate-calculus containment",
            "pr_v",
        ),
    ];
    for (name, summary, kb) in metadata {
        entries.push(GalleryEntry::MetadataOnly {
            name: name.to_owned(),
            summary: summary.to_owned(),
            kb_witness: kb.to_owned(),
            provenance: format!("knowledge-base record `{kb}`"),
        });
    }

    entries
}

fn catalog() -> &'static [GalleryEntry] {
    static CATALOG: OnceLock<Vec<GalleryEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// List the catalog in publication order.
pub fn gallery_names() -> Vec<&'static str> {
    catalog().iter().map(|e| e.name()).collect()
}

/// Look up a catalog entry by name.
pub fn gallery(name: &str) -> Result<&'static GalleryEntry, WitnessError> {
    catalog()
        .iter()
        .find(|e| e.name() == name)
        .ok_or_else(|| WitnessError::UnknownName(name.to_owned()))
}

/// Validate that a user-supplied template is well-formed: free variables
/// within `{x}` and classification matching its declared level.
pub fn validate_template(t: &PredicateTemplate, registry: &Registry) -> Result<(), WitnessError> {
    check_template_vars(&t.formula)?;
    let got = classify(&t.formula, registry).map_err(|_| {
        WitnessError::WrongVariables(t.formula.free_vars().into_iter().collect())
    })?;
    if got != t.declared_level {
        return Err(WitnessError::GuardNotBounded(got));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::eval::{evaluate, Assignment, Truth};
    use crate::syntax::parse;

    fn registry() -> Registry {
        Registry::standard()
    }

    #[test]
    fn con_l_negates_the_predicate_at_the_refutable_code() {
        let con_l = make_con(ConsistencyVariant::L, &pr_t());
        let code = gn_formula(&falsum());
        let expected = Formula::not(
            pr_t().apply(&constant_term(code.value())),
        );
        assert_eq!(con_l, expected);
        assert_eq!(
            classify(&con_l, &registry()).unwrap(),
            HierarchyLevel::Pi(1)
        );
    }

    #[test]
    fn con_g_literal_shape() {
        let con_g = make_con(ConsistencyVariant::G, &pr_t());
        let expected = parse("!E x (Atom[Fml](x) & ~!E y Atom[Prf_T](x, y))").unwrap();
        assert_eq!(con_g, expected);
    }

    #[test]
    fn con_h_literal_shape() {
        let con_h = make_con(ConsistencyVariant::H, &pr_t());
        let expected = parse(
            "!A x ((Atom[Fml](x) & !E y Atom[Prf_T](x, y)) -> ~!E y Atom[Prf_T](neg(x), y))",
        )
        .unwrap();
        assert_eq!(con_h, expected);
        assert_eq!(
            classify(&con_h, &registry()).unwrap(),
            HierarchyLevel::Pi(1)
        );
    }

    #[test]
    fn con_sigma1_classifies_sigma_two() {
        // ∃x(Σ1(x) & Sent(x) & ~Φ(x)) with Σ1 Φ: the negation is Π1.
        let con = make_con(ConsistencyVariant::Sigma1, &pr_t());
        assert_eq!(classify(&con, &registry()).unwrap(), HierarchyLevel::Sigma(2));
    }

    #[test]
    fn pr_delta_guard_shape() {
        let delta = parse("Atom[leq](x, z) | Atom[Even](x)").unwrap();
        let t = pr_delta(&delta, "pr_i", &registry()).unwrap();
        assert_eq!(t.declared_level, HierarchyLevel::Sigma(1));
        assert_eq!(classify(&t.formula, &registry()).unwrap(), HierarchyLevel::Sigma(1));
        // ∃y (Prf_T(x,y) & ∀z < y . (Prf_T(q, z) -> delta))
        let Formula::Exists(yv, body) = &t.formula else {
            panic!("expected existential")
        };
        assert_eq!(yv, "y");
        let Formula::And(prf, guard) = &**body else {
            panic!("expected conjunction")
        };
        assert!(matches!(&**prf, Formula::Atom(a, _) if a.0 == "Prf_T"));
        let Formula::BForall {
            var,
            bound,
            strict,
            body: guard_body,
        } = &**guard
        else {
            panic!("expected bounded universal")
        };
        assert_eq!(var, "z");
        assert_eq!(bound, &Term::var("y"));
        assert!(strict);
        let Formula::Imp(prem, concl) = &**guard_body else {
            panic!("expected implication")
        };
        assert!(matches!(&**prem, Formula::Atom(a, _) if a.0 == "Prf_T"));
        assert_eq!(&**concl, &delta);
    }

    #[test]
    fn pr_delta_rejects_unbounded_guards() {
        let delta = parse("!E w (x + w = z)").unwrap();
        assert!(matches!(
            pr_delta(&delta, "bad", &registry()),
            Err(WitnessError::GuardNotBounded(HierarchyLevel::Sigma(1)))
        ));
    }

    #[test]
    fn parity_normalize_examples() {
        // Even count: a conjunct is appended.
        let even = PredicateTemplate {
            name: "even".to_owned(),
            formula: parse("~~(x = 0)").unwrap(),
            declared_level: HierarchyLevel::Delta0,
            provenance: String::new(),
        };
        let fixed = parity_normalize(&even);
        assert_eq!(fixed.formula.count_logical_symbols() % 2, 1);
        assert_eq!(
            fixed.formula,
            Formula::and(even.formula.clone(), parse("0 = 0").unwrap())
        );
        // Odd count: unchanged; and the operation is idempotent.
        let odd = PredicateTemplate {
            name: "odd".to_owned(),
            formula: parse("~(x = 0)").unwrap(),
            declared_level: HierarchyLevel::Delta0,
            provenance: String::new(),
        };
        assert_eq!(parity_normalize(&odd), odd);
        assert_eq!(parity_normalize(&fixed), fixed);
    }

    #[test]
    fn gallery_mostowski_shape_and_level() {
        let GalleryEntry::Template(t) = gallery("mostowski").unwrap() else {
            panic!("expected template")
        };
        let q = constant_term(gn_formula(&falsum()).value());
        let expected = Formula::exists(
            "y",
            Formula::and(
                Formula::atom("Prf_T", vec![Term::var("x"), Term::var("y")]),
                Formula::not(Formula::atom("Prf_T", vec![q, Term::var("y")])),
            ),
        );
        assert_eq!(t.formula, expected);
        assert_eq!(classify(&t.formula, &registry()).unwrap(), HierarchyLevel::Sigma(1));
    }

    #[test]
    fn gallery_psi_rejects_every_numeral() {
        let GalleryEntry::Template(t) = gallery("psi").unwrap() else {
            panic!("expected template")
        };
        let r = registry();
        for n in 0..=20u64 {
            let inst = t.apply(&Term::numeral(n));
            assert_eq!(
                evaluate(&inst, &Assignment::new(), 0, &r).unwrap(),
                Truth::False
            );
        }
    }

    #[test]
    fn gallery_pr_i_has_odd_symbol_count() {
        let GalleryEntry::Template(t) = gallery("pr_i").unwrap() else {
            panic!("expected template")
        };
        assert_eq!(t.formula.count_logical_symbols() % 2, 1);
    }

    #[test]
    fn gallery_pr_ii_mentions_the_negation_counter() {
        let GalleryEntry::Template(t) = gallery("pr_ii").unwrap() else {
            panic!("expected template")
        };
        fn mentions_n(t: &Term) -> bool {
            match t {
                Term::Func(f, args) => f.0 == "n" || args.iter().any(mentions_n),
                Term::Succ(a) => mentions_n(a),
                Term::Add(a, b) | Term::Mul(a, b) => mentions_n(a) || mentions_n(b),
                _ => false,
            }
        }
        fn formula_mentions_n(phi: &Formula) -> bool {
            match phi {
                Formula::Eq(a, b) => mentions_n(a) || mentions_n(b),
                Formula::Atom(_, args) => args.iter().any(mentions_n),
                Formula::Not(f) => formula_mentions_n(f),
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                    formula_mentions_n(a) || formula_mentions_n(b)
                }
                Formula::Forall(_, f) | Formula::Exists(_, f) => formula_mentions_n(f),
                Formula::BForall { bound, body, .. } | Formula::BExists { bound, body, .. } => {
                    mentions_n(bound) || formula_mentions_n(body)
                }
            }
        }
        assert!(formula_mentions_n(&t.formula));
    }

    #[test]
    fn gallery_pr_iii_mentions_the_level_atom() {
        let GalleryEntry::Template(t) = gallery("pr_iii").unwrap() else {
            panic!("expected template")
        };
        assert!(t.formula.to_string().contains("Atom[Sigma_z]"));
    }

    #[test]
    fn gallery_templates_classify_to_their_declared_levels() {
        let r = registry();
        for entry in catalog() {
            if let GalleryEntry::Template(t) = entry {
                assert_eq!(
                    classify(&t.formula, &r).unwrap(),
                    t.declared_level,
                    "level mismatch for {}",
                    t.name
                );
                check_template_vars(&t.formula).unwrap_or_else(|e| {
                    panic!("template {} has bad variables: {e}", t.name)
                });
            }
        }
    }

    #[test]
    fn gallery_unknown_name_is_an_error() {
        assert!(matches!(
            gallery("nonexistent"),
            Err(WitnessError::UnknownName(_))
        ));
    }
}
