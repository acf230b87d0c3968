//! The shipped witness records: concrete predicates certifying
//! non-implications between condition sets.
//!
//! `satisfies` lists the conditions recorded at the source; everything else
//! the predicate satisfies is derived by closure. A violation entry with a
//! citation is stated outright at the source; one without a citation is
//! recovered by contraposition (assuming the atom clashes with the rest of
//! the record), and the sanity audit verifies that the clash really derives.

use std::collections::BTreeMap;

use super::atoms::{ConStatus, ConditionAtom, ContextFlag};
use super::kb::{ViolationEntry, WitnessRecord};
use crate::hierarchy::HierarchyLevel;
use crate::witness::ConsistencyVariant;

fn cited(atom: ConditionAtom, citation: &str) -> ViolationEntry {
    ViolationEntry {
        atom,
        citation: citation.to_owned(),
    }
}

fn derived(atom: ConditionAtom) -> ViolationEntry {
    ViolationEntry {
        atom,
        citation: String::new(),
    }
}

fn proves(citation: &str) -> ConStatus {
    ConStatus::Proves {
        citation: citation.to_owned(),
    }
}

fn not_proves(citation: &str) -> ConStatus {
    ConStatus::NotProves {
        citation: citation.to_owned(),
    }
}

#[allow(clippy::too_many_arguments)]
fn record(
    name: &str,
    display: &str,
    flags: Vec<ContextFlag>,
    satisfies: Vec<ConditionAtom>,
    violates: Vec<ViolationEntry>,
    con_entries: Vec<(ConsistencyVariant, ConStatus)>,
    citation: &str,
) -> WitnessRecord {
    WitnessRecord {
        name: name.to_owned(),
        display: display.to_owned(),
        flags,
        satisfies,
        violates,
        con: con_entries
            .into_iter()
            .map(|(v, s)| (v.to_string(), s))
            .collect::<BTreeMap<_, _>>(),
        citation: citation.to_owned(),
    }
}

pub fn build_witnesses(m_cap: u32) -> Vec<WitnessRecord> {
    use ConditionAtom::*;
    use ConsistencyVariant as V;
    use HierarchyLevel::*;

    let sigma1 = ContextFlag::PhiInGamma(Sigma(1));
    let sigma2 = ContextFlag::PhiInGamma(Sigma(2));
    let s_eq_t = ContextFlag::SEqualsT;
    let sc = GammaC(Sigma(1));
    let scu = GammaCU(Sigma(1));
    let scg = GammaCG(Sigma(1));
    let d0cu = GammaCU(Delta0);
    let d0cg = GammaCG(Delta0);

    vec![
        record(
            "pr_q",
            "provability predicate of the weak finitely axiomatized base theory",
            vec![sigma1],
            vec![DG2, scg, Cb, Pcg],
            vec![
                cited(D1, "the base theory does not prove all theorems of the ambient theory"),
                cited(B(2), "schematic transfer over the ambient theory's theorems fails"),
            ],
            vec![(
                V::H,
                proves("the metatheory proves the base theory consistent, in the Hilbert-Bernays form"),
            )],
            "provability predicate of a weak finite base theory used as a candidate for the ambient theory",
        ),
        record(
            "psi_empty",
            "the empty predicate x != x",
            vec![ContextFlag::PhiInGamma(Delta0)],
            {
                let mut s = vec![DG2, DG3, Cb];
                for m in 2..=m_cap {
                    s.push(BU(m));
                }
                s
            },
            vec![
                derived(D1),
                cited(
                    GammaC(Delta0),
                    "a true bounded sentence is never sent to a provable claim by the empty predicate",
                ),
                derived(Pc),
            ],
            vec![(
                V::H,
                proves("the empty predicate accepts nothing, so the Hilbert-Bernays statement is provable"),
            )],
            "the empty predicate: every schematic rule with at least one premise holds vacuously",
        ),
        record(
            "feferman_pi",
            "provability from a Π1 numeration that enumerates axioms only below the least inconsistency proof",
            vec![s_eq_t, sigma2],
            vec![DU1, DG2, BU(2), scg, Cb, Pcg],
            vec![derived(D3)],
            vec![(
                V::H,
                proves("the Hilbert-Bernays consistency statement for the nonstandard numeration is provable"),
            )],
            "Feferman 1960, nonstandard Π1 numeration of the ambient theory",
        ),
        record(
            "mostowski",
            "provability by a proof that is not a proof of the refutable sentence",
            vec![sigma1],
            vec![D1, DU1, scg, Pcg],
            vec![
                cited(D2, "formalized modus ponens fails at the carved-out refutable sentence"),
                cited(B(2), "the two-premise schematic rule fails at the carved-out refutable sentence"),
                cited(Cb, "the converse-Barcan condition fails at the carved-out refutable sentence"),
            ],
            vec![
                (V::L, proves("the predicate visibly rejects the refutable sentence's code")),
                (V::H, not_proves("the Hilbert-Bernays statement for the predicate stays unprovable")),
            ],
            "Mostowski 1965, provability predicate escaping the second incompleteness theorem",
        ),
        record(
            "arai_a1",
            "Rosser-style predicate over negation normal forms with global modus ponens",
            vec![sigma1],
            vec![D1, DG2],
            vec![
                derived(DU1),
                derived(Cb),
                derived(BU(2)),
                derived(D3),
                derived(Pc),
            ],
            vec![(
                V::H,
                proves("Rosser-style predicates prove their own Hilbert-Bernays consistency statement"),
            )],
            "Arai 1990, Rosser provability with the global modus-ponens condition",
        ),
        record(
            "arai_a2",
            "Rosser-style predicate over negation normal forms with global self-provability",
            vec![sigma1],
            vec![D1, DG3],
            vec![derived(D2), derived(B(2)), derived(sc), derived(Pc)],
            vec![(
                V::H,
                proves("Rosser-style predicates prove their own Hilbert-Bernays consistency statement"),
            )],
            "Arai 1990, Rosser provability with the global self-provability condition",
        ),
        record(
            "rosser_r1",
            "Rosser provability predicate with global modus ponens and global bounded completeness",
            vec![s_eq_t, sigma1],
            vec![D1, DG2, d0cg],
            vec![
                derived(DU1),
                derived(Cb),
                derived(BU(2)),
                derived(D3),
                derived(Pc),
            ],
            vec![(
                V::H,
                proves("Rosser-style predicates prove their own Hilbert-Bernays consistency statement"),
            )],
            "Rosser provability predicate satisfying the global modus-ponens and bounded-completeness conditions",
        ),
        record(
            "rosser_r2",
            "Rosser provability predicate with uniform transfer, converse Barcan, local modus ponens and global bounded completeness",
            vec![s_eq_t, sigma1],
            vec![DU1, Cb, D2, d0cg],
            vec![derived(DU2), derived(D3), derived(BU(2)), derived(Pc)],
            vec![(
                V::L,
                proves("the refutation-free consistency statement for this Rosser predicate is provable"),
            )],
            "Rosser provability predicate with uniform transfer and the converse-Barcan condition",
        ),
        record(
            "rosser_r3",
            "Rosser provability predicate with uniform transfer, converse Barcan, the two-premise rule and global self-provability",
            vec![s_eq_t, sigma1],
            vec![DU1, Cb, B(2), DG3, d0cg],
            vec![
                cited(sc, "the predicate fails provable Σ1-completeness outright"),
                derived(D2),
                derived(BU(2)),
                derived(Pc),
            ],
            vec![(
                V::L,
                proves("the refutation-free consistency statement for this Rosser predicate is provable"),
            )],
            "Rosser provability predicate keeping the two-premise schematic rule and global self-provability",
        ),
        record(
            "pr_i",
            "proof predicate guarded by `x <= z | Even(x)`",
            vec![sigma1],
            vec![D1, D2, sc],
            vec![
                cited(DU1, "uniformity fails: beyond any alleged refutation proof there are odd-length instances the guard rejects"),
                cited(DU2, "uniform modus ponens drives the guard into an odd-length conclusion"),
                cited(DU3, "the guarded predicate itself has odd length after parity normalization"),
                cited(d0cu, "uniform bounded completeness fails on odd-length instances"),
                cited(Pcu, "uniform predicate-calculus containment fails on odd-length instances"),
                derived(BU(2)),
                derived(Cb),
            ],
            vec![],
            "guarded proof predicate separating the full local layer from every uniform condition",
        ),
        record(
            "pr_ii",
            "proof predicate guarded by `n(x) <= z | Even(x)`",
            vec![sigma1],
            vec![DU1, DU2, scu],
            vec![
                cited(DG2, "global modus ponens fails on codes with many negations"),
                cited(d0cg, "global bounded completeness fails on true codes with many negations"),
                cited(Pcg, "global predicate-calculus containment fails on logic theorems with many negations"),
            ],
            vec![(
                V::Sigma1,
                proves("the Σ1 consistency statement is provable: past a refutation proof, some Σ1 sentence with many negations is rejected"),
            )],
            "guarded proof predicate separating the uniform layer from the global one",
        ),
        record(
            "pr_iii",
            "proof predicate guarded by `Sigma_z(x)`",
            vec![sigma1],
            vec![DU1, DG2, scg],
            vec![derived(Pcg)],
            vec![(
                V::G,
                proves("the existence of an unprovable formula is provable: past a refutation proof, codes outside Σ_z are rejected"),
            )],
            "guarded proof predicate keeping global Σ1-completeness while the existence of an unprovable formula stays provable",
        ),
        record(
            "pr_iv",
            "modal-closure predicate built by simultaneous fixed points",
            vec![sigma1],
            vec![D1, DG2, DG3],
            vec![
                cited(sc, "provable Σ1-completeness fails at the comparison sentence of the construction"),
                derived(Pc),
                derived(BU(2)),
                derived(DU1),
                derived(Cb),
            ],
            vec![],
            "predicate closed under necessitation and modus ponens over finite theory stages, after Visser 2016",
        ),
        record(
            "pr_v",
            "witness-comparison predicate from a fixed point against a non-Σ1 implication",
            vec![sigma1],
            vec![D1, scg],
            vec![
                cited(DU1, "uniform transfer fails on instances that are not Σ1"),
                cited(Pc, "predicate-calculus containment fails at the comparison implication"),
                derived(D2),
                derived(B(2)),
                derived(Cb),
            ],
            vec![],
            "witness-comparison predicate keeping global Σ1-completeness while predicate-calculus containment fails",
        ),
        record(
            "pr_vi",
            "provability minus the negation of an undecidable disjunction",
            vec![sigma1],
            vec![D1, DU1, DG3, d0cg, Pcg],
            vec![
                cited(sc, "Σ1-completeness fails at the true Σ1 sentence asserting provability of the carved-out code"),
                cited(Cb, "the converse-Barcan condition fails at the universal form of the carved-out sentence"),
                derived(D2),
                derived(B(2)),
            ],
            vec![],
            "provability predicate with one undecidable negation carved out; the removed code is not a theorem of pure logic",
        ),
        record(
            "pr_star",
            "union of the predicates of two independent numerations",
            vec![sigma1],
            vec![D1, DU1, BU(2), scg, Pcg],
            vec![cited(
                D2,
                "formalized modus ponens fails: the two-box countermodel realizes provability of an implication and its antecedent in different numerations",
            )],
            vec![],
            "disjunction of two independent Σ1 numerations' predicates; separates the two-premise uniform rule from uniform modus ponens",
        ),
    ]
}
