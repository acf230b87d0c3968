//! The shipped inference rules between derivability conditions.
//!
//! Conventions: `B1` is identified with `D1` and `BU1` with `DU1` (the
//! one-premise schematic rule is the plain theorem-transfer condition), and
//! the schematic families are instantiated for premise counts up to the cap.
//! Γ-parametric rules are instantiated over `Δ0, Σ1, Π1, Σ2, Π2, Σ3, Π3`.

use super::atoms::{ConditionAtom, ContextFlag, Fact};
use super::kb::{OpenProblem, Rule};
use crate::hierarchy::HierarchyLevel;
use crate::witness::ConsistencyVariant;

pub const DEFAULT_M_CAP: u32 = 6;

/// Levels the Γ-parametric rule schemata are instantiated at.
pub fn level_domain() -> Vec<HierarchyLevel> {
    use HierarchyLevel::*;
    vec![Delta0, Sigma(1), Pi(1), Sigma(2), Pi(2), Sigma(3), Pi(3)]
}

fn rule(
    id: &str,
    flags: Vec<ContextFlag>,
    premises: Vec<ConditionAtom>,
    conclusion: Fact,
    statement: &str,
    source: &str,
) -> Rule {
    Rule {
        id: id.to_owned(),
        flags,
        premises: premises.into_iter().map(Fact::Has).collect(),
        conclusion,
        statement: statement.to_owned(),
        source: source.to_owned(),
    }
}

fn has(atom: ConditionAtom) -> Fact {
    Fact::Has(atom)
}

pub fn build_rules(m_cap: u32) -> Vec<Rule> {
    use ConditionAtom::*;
    use ConsistencyVariant as V;
    use HierarchyLevel::*;

    let sigma1 = ContextFlag::PhiInGamma(Sigma(1));
    let sc = GammaC(Sigma(1));
    let scu = GammaCU(Sigma(1));
    let scg = GammaCG(Sigma(1));
    let d0c = GammaC(Delta0);
    let d0cu = GammaCU(Delta0);

    let mut rules = Vec::new();

    // ---- local layer ----------------------------------------------------

    rules.push(rule(
        "lp1_1",
        vec![],
        vec![D1],
        has(d0c),
        "D1 implies completeness for bounded sentences: a bounded sentence is decidable, so a true one is a theorem and D1 turns it into a provable provability claim.",
        "",
    ));
    for m in 1..=m_cap {
        rules.push(rule(
            "lp1_2",
            vec![],
            vec![d0c, B(m)],
            has(D1),
            "bounded completeness together with any m-premise schematic rule recovers D1: pad the premises with 0 = 0.",
            "",
        ));
    }
    rules.push(rule(
        "lp1_3",
        vec![],
        vec![B(3)],
        has(D2),
        "the three-premise schematic rule applied to (p -> q) & p -> q yields formalized modus ponens.",
        "",
    ));
    for m in 1..=m_cap {
        rules.push(rule(
            "lp1_4_b",
            vec![],
            vec![D1, D2],
            has(B(m)),
            "D1 and D2 yield the schematic rule for every premise count, by the standard modal-logic argument.",
            "",
        ));
    }
    for m in 3..=m_cap {
        rules.push(rule(
            "lp1_4_c",
            vec![],
            vec![D1, B(m)],
            has(D2),
            "D1 plus an m-premise schematic rule with m >= 3 yields D2 by padding with 0 = 0.",
            "",
        ));
    }
    rules.push(rule(
        "b1_is_d1",
        vec![],
        vec![B(1)],
        has(D1),
        "the one-premise schematic rule is D1 itself.",
        "",
    ));
    rules.push(rule(
        "d1_is_b1",
        vec![],
        vec![D1],
        has(B(1)),
        "D1 is the one-premise schematic rule.",
        "",
    ));
    for m in 3..=m_cap {
        rules.push(rule(
            "b_pad",
            vec![],
            vec![B(m)],
            has(B(m - 1)),
            "an m-premise schematic rule yields the (m-1)-premise rule for m >= 3, by repeating a premise.",
            "",
        ));
    }
    for level in level_domain() {
        rules.push(rule(
            "lp1_5",
            vec![ContextFlag::PhiInGamma(level)],
            vec![GammaC(level)],
            has(D3),
            "a Γ predicate with Γ-completeness satisfies D3: instantiate completeness at its own applications.",
            "",
        ));
    }
    rules.push(rule(
        "lp1_6_fw",
        vec![],
        vec![B(2), Pc],
        has(sc),
        "containment of predicate calculus plus the two-premise rule give Σ1-completeness, through the formalized deduction theorem over a finite fragment.",
        "",
    ));
    rules.push(rule(
        "lp1_6_bw",
        vec![],
        vec![B(2), sc],
        has(Pc),
        "Σ1-completeness applied to pure-logic provability (a Σ1 sentence) plus reflexivity of the base theory and the two-premise rule give containment of predicate calculus.",
        "",
    ));
    rules.push(rule(
        "lp1_7",
        vec![],
        vec![B(2), Pc],
        has(D1),
        "the two-premise rule and containment of predicate calculus recover D1.",
        "",
    ));
    rules.push(rule(
        "lp1_8_fw",
        vec![],
        vec![D1, D2, Pc],
        has(sc),
        "with D1 and D2, containment of predicate calculus gives Σ1-completeness.",
        "",
    ));
    rules.push(rule(
        "lp1_8_bw",
        vec![],
        vec![D1, D2, sc],
        has(Pc),
        "with D1 and D2, Σ1-completeness gives containment of predicate calculus.",
        "",
    ));
    rules.push(rule(
        "scm_from_pc",
        vec![],
        vec![Pc],
        has(ScMinus),
        "containment of predicate calculus yields the makeshift relativized Σ1-completeness over a finite fragment.",
        "",
    ));
    rules.push(rule(
        "sc_from_scm",
        vec![],
        vec![B(2), ScMinus],
        has(sc),
        "the two-premise rule upgrades relativized Σ1-completeness to the full local version.",
        "",
    ));

    // Γ-monotonicity: completeness for a class covers its subclasses.
    for family in ["local", "uniform", "global"] {
        for upper in level_domain() {
            for lower in level_domain() {
                if lower != upper && lower.included_in(upper) {
                    let (id, premise, conclusion): (&str, ConditionAtom, ConditionAtom) =
                        match family {
                            "local" => ("gamma_mono_c", GammaC(upper), GammaC(lower)),
                            "uniform" => ("gamma_mono_cu", GammaCU(upper), GammaCU(lower)),
                            _ => ("gamma_mono_cg", GammaCG(upper), GammaCG(lower)),
                        };
                    rules.push(rule(
                        id,
                        vec![],
                        vec![premise],
                        has(conclusion),
                        "completeness for a class covers every included class.",
                        "",
                    ));
                }
            }
        }
    }

    // ---- consistency-statement implications ------------------------------

    rules.push(rule(
        "lp2_1",
        vec![],
        vec![D1],
        Fact::ConImplies(V::H, V::L),
        "under D1 the metatheory proves that the Hilbert-Bernays consistency statement implies the refutation-free one.",
        "",
    ));
    rules.push(rule(
        "lp2_2",
        vec![],
        vec![],
        Fact::ConImplies(V::L, V::Sigma1),
        "the refutation-free consistency statement implies the existence of an unprovable Σ1 sentence.",
        "",
    ));
    rules.push(rule(
        "lp2_3",
        vec![],
        vec![],
        Fact::ConImplies(V::Sigma1, V::G),
        "an unprovable Σ1 sentence is in particular an unprovable formula.",
        "",
    ));
    rules.push(rule(
        "gp2_1",
        vec![],
        vec![DG2, Pcg],
        Fact::ConImplies(V::G, V::H),
        "global modus ponens and global containment of predicate calculus turn one unprovable formula into the full Hilbert-Bernays consistency statement.",
        "",
    ));
    rules.push(rule(
        "gp2_3",
        vec![],
        vec![DG2, scg],
        Fact::ConImplies(V::Sigma1, V::L),
        "global modus ponens and global Σ1-completeness collapse the Σ1 consistency statement onto the refutation-free one.",
        "",
    ));

    // Chain rules over the implications.
    for a in V::ALL {
        for b in V::ALL {
            if a == b {
                continue;
            }
            rules.push(Rule {
                id: "con_chain".to_owned(),
                flags: vec![],
                premises: vec![Fact::ConImplies(a, b), Fact::NotProves(b)],
                conclusion: Fact::NotProves(a),
                statement:
                    "if one consistency statement implies another over the metatheory and the weaker is unprovable, so is the stronger."
                        .to_owned(),
                source: String::new(),
            });
            for c in V::ALL {
                if c != a && c != b {
                    rules.push(Rule {
                        id: "con_trans".to_owned(),
                        flags: vec![],
                        premises: vec![Fact::ConImplies(a, b), Fact::ConImplies(b, c)],
                        conclusion: Fact::ConImplies(a, c),
                        statement: "implication between consistency statements is transitive."
                            .to_owned(),
                        source: String::new(),
                    });
                }
            }
        }
    }

    // ---- unprovability theorems ------------------------------------------

    rules.push(rule(
        "g2",
        vec![],
        vec![D1, D2, D3],
        Fact::NotProves(V::L),
        "the three local closure conditions make the refutation-free consistency statement unprovable.",
        "Löb 1955",
    ));
    rules.push(rule(
        "g2_2",
        vec![],
        vec![D1, B(2), D3],
        Fact::NotProves(V::H),
        "D1, the two-premise schematic rule and D3 make the Hilbert-Bernays consistency statement unprovable.",
        "",
    ));
    for level in level_domain() {
        rules.push(rule(
            "jer",
            vec![ContextFlag::PhiInGamma(level)],
            vec![D1, GammaC(level)],
            Fact::NotProves(V::H),
            "a Γ predicate with D1 and Γ-completeness leaves the Hilbert-Bernays consistency statement unprovable.",
            "Jeroslow 1973; Kreisel-Takeuti 1974",
        ));
    }
    rules.push(rule(
        "g2_3",
        vec![sigma1],
        vec![D1, Pc],
        Fact::NotProves(V::H),
        "a Σ1 predicate with D1 that contains predicate calculus leaves the Hilbert-Bernays consistency statement unprovable.",
        "",
    ));
    rules.push(rule(
        "scm_con_h",
        vec![sigma1],
        vec![D1, ScMinus],
        Fact::NotProves(V::H),
        "a Σ1 predicate with D1 and the makeshift relativized Σ1-completeness leaves the Hilbert-Bernays consistency statement unprovable.",
        "",
    ));
    rules.push(rule(
        "uhb",
        vec![sigma1],
        vec![B(2), Cb, d0cu],
        Fact::NotProves(V::H),
        "the two-premise rule, the converse-Barcan condition and uniform bounded completeness make the Hilbert-Bernays consistency statement unprovable.",
        "Hilbert-Bernays 1939",
    ));
    rules.push(rule(
        "uc2",
        vec![sigma1],
        vec![DU1, DU2],
        Fact::NotProves(V::L),
        "the two uniform closure conditions make the refutation-free consistency statement unprovable.",
        "",
    ));
    rules.push(rule(
        "uc3",
        vec![sigma1],
        vec![D1, BU(2)],
        Fact::NotProves(V::H),
        "D1 and the two-premise uniform rule make the Hilbert-Bernays consistency statement unprovable.",
        "",
    ));
    rules.push(rule(
        "gc1_1",
        vec![sigma1],
        vec![D1, DG2, Pcg],
        Fact::NotProves(V::G),
        "D1 with the global modus ponens and global predicate-calculus conditions makes even the existence of an unprovable formula unprovable.",
        "",
    ));
    rules.push(rule(
        "gc1_2",
        vec![sigma1],
        vec![D1, DG2, scg],
        Fact::NotProves(V::Sigma1),
        "D1 with global modus ponens and global Σ1-completeness makes the Σ1 consistency statement unprovable.",
        "",
    ));
    rules.push(rule(
        "mon2_2",
        vec![sigma1],
        vec![D1, DG2, Ax],
        Fact::NotProves(V::G),
        "D1, global modus ponens and provability of all logical axioms make the existence of an unprovable formula unprovable.",
        "Montagna 1979",
    ));

    // ---- uniform layer ----------------------------------------------------

    for m in 1..=m_cap {
        rules.push(rule(
            "up1_1",
            vec![],
            vec![d0c, BU(m)],
            has(DU1),
            "bounded completeness plus any m-premise uniform rule recover the uniform theorem-transfer condition.",
            "",
        ));
    }
    rules.push(rule(
        "up1_2",
        vec![],
        vec![BU(3)],
        has(DU2),
        "the three-premise uniform rule yields uniform formalized modus ponens.",
        "",
    ));
    for m in 1..=m_cap {
        rules.push(rule(
            "up1_3_b",
            vec![],
            vec![DU1, DU2],
            has(BU(m)),
            "the two uniform closure conditions yield the uniform schematic rule for every premise count.",
            "",
        ));
    }
    for m in 3..=m_cap {
        rules.push(rule(
            "up1_3_c",
            vec![],
            vec![DU1, BU(m)],
            has(DU2),
            "the uniform theorem-transfer condition plus an m-premise uniform rule with m >= 3 yield uniform modus ponens.",
            "",
        ));
    }
    rules.push(rule(
        "bu1_is_du1",
        vec![],
        vec![BU(1)],
        has(DU1),
        "the one-premise uniform rule is the uniform theorem-transfer condition itself.",
        "",
    ));
    rules.push(rule(
        "du1_is_bu1",
        vec![],
        vec![DU1],
        has(BU(1)),
        "the uniform theorem-transfer condition is the one-premise uniform rule.",
        "",
    ));
    for m in 3..=m_cap {
        rules.push(rule(
            "bu_pad",
            vec![],
            vec![BU(m)],
            has(BU(m - 1)),
            "an m-premise uniform rule yields the (m-1)-premise rule for m >= 3, by repeating a premise.",
            "",
        ));
    }
    for level in level_domain() {
        rules.push(rule(
            "up1_4",
            vec![ContextFlag::PhiInGamma(level)],
            vec![GammaCU(level)],
            has(DU3),
            "a Γ predicate with uniform Γ-completeness satisfies the uniform self-provability condition.",
            "",
        ));
    }
    rules.push(rule(
        "up1_5_fw",
        vec![],
        vec![BU(2), Pcu],
        has(scu),
        "uniform containment of predicate calculus plus the two-premise uniform rule give uniform Σ1-completeness.",
        "",
    ));
    rules.push(rule(
        "up1_5_bw",
        vec![],
        vec![BU(2), scu],
        has(Pcu),
        "uniform Σ1-completeness plus the two-premise uniform rule give uniform containment of predicate calculus.",
        "",
    ));
    rules.push(rule(
        "up1_6",
        vec![],
        vec![BU(2), Pcu],
        has(DU1),
        "the two-premise uniform rule and uniform predicate-calculus containment recover the uniform theorem-transfer condition.",
        "",
    ));
    rules.push(rule(
        "up1_7_fw",
        vec![],
        vec![DU1, DU2, Pcu],
        has(scu),
        "with the two uniform closure conditions, uniform predicate-calculus containment gives uniform Σ1-completeness.",
        "",
    ));
    rules.push(rule(
        "up1_7_bw",
        vec![],
        vec![DU1, DU2, scu],
        has(Pcu),
        "with the two uniform closure conditions, uniform Σ1-completeness gives uniform predicate-calculus containment.",
        "",
    ));
    rules.push(rule(
        "up2_1",
        vec![],
        vec![D1, Cb],
        has(DU1),
        "D1 pushed through the converse-Barcan condition gives the uniform theorem-transfer condition.",
        "",
    ));
    rules.push(rule(
        "up2_2",
        vec![],
        vec![BU(2)],
        has(Cb),
        "the two-premise uniform rule applied to universal instantiation yields the converse-Barcan condition.",
        "",
    ));
    rules.push(rule(
        "up2_3",
        vec![],
        vec![DU2, Pcu],
        has(Cb),
        "uniform modus ponens over the pure-logic instantiation axioms yields the converse-Barcan condition.",
        "",
    ));
    rules.push(rule(
        "uc1_1",
        vec![],
        vec![D1, BU(2)],
        has(DU1),
        "D1 and the two-premise uniform rule give the uniform theorem-transfer condition.",
        "",
    ));
    rules.push(rule(
        "uc1_2",
        vec![],
        vec![D1, DU2, Pcu],
        has(DU1),
        "D1 with uniform modus ponens and uniform predicate-calculus containment give the uniform theorem-transfer condition.",
        "",
    ));
    rules.push(rule(
        "ubuc",
        vec![],
        vec![DU1, DU2],
        has(scu),
        "the uniform closure conditions prove uniform Σ1-completeness schematically.",
        "Buchholz 1993",
    ));
    rules.push(rule(
        "mt",
        vec![],
        vec![D1, BU(2)],
        has(scu),
        "the one- and two-premise cases of the uniform schematic rule already give uniform Σ1-completeness, through the flattened equation normal form of the matrix.",
        "",
    ));
    rules.push(rule(
        "mt_pcu",
        vec![],
        vec![D1, BU(2)],
        has(Pcu),
        "with D1 and the two-premise uniform rule, uniform Σ1-completeness specializes to uniform containment of predicate calculus.",
        "",
    ));

    // ---- strength: uniform implies local, global implies uniform ----------

    let strength: Vec<(&str, ConditionAtom, ConditionAtom)> = {
        let mut v = vec![
            ("st_du1", DU1, D1),
            ("st_du2", DU2, D2),
            ("st_du3", DU3, D3),
            ("st_pcu", Pcu, Pc),
            ("st_dg2", DG2, DU2),
            ("st_dg3", DG3, DU3),
            ("st_pcg", Pcg, Pcu),
        ];
        for m in 1..=m_cap {
            v.push(("st_bu", BU(m), B(m)));
        }
        for level in level_domain() {
            v.push(("st_gcu", GammaCU(level), GammaC(level)));
            v.push(("st_gcg", GammaCG(level), GammaCU(level)));
        }
        v
    };
    for (id, stronger, weaker) in strength {
        rules.push(rule(
            id,
            vec![],
            vec![stronger],
            has(weaker),
            "each uniform condition is stronger than its local version, and each global condition is stronger than its uniform version, by instantiation.",
            "",
        ));
    }

    // ---- global layer ------------------------------------------------------

    for level in level_domain() {
        rules.push(rule(
            "gp1_1",
            vec![ContextFlag::PhiInGamma(level)],
            vec![GammaCU(level)],
            has(DG3),
            "a Γ predicate with uniform Γ-completeness satisfies the global self-provability condition: instantiate completeness at the predicate itself.",
            "",
        ));
    }
    rules.push(rule(
        "gp1_2",
        vec![],
        vec![D1, DG2, Pcg],
        has(scg),
        "D1 with global modus ponens and global predicate-calculus containment give global Σ1-completeness.",
        "von Bülow; Visser",
    ));
    rules.push(rule(
        "gp3_1",
        vec![],
        vec![Pcg],
        has(Ax),
        "global predicate-calculus containment covers the logical axioms in particular.",
        "",
    ));
    rules.push(rule(
        "gp3_2",
        vec![],
        vec![DG2, Ax],
        has(Pcg),
        "provability of all logical axioms plus global modus ponens recover global predicate-calculus containment, by induction on proofs inside the metatheory.",
        "",
    ));
    rules.push(rule(
        "mon2_1a",
        vec![],
        vec![D1, DG2, Ax],
        has(DU1),
        "D1, global modus ponens and the logical-axiom condition give the uniform theorem-transfer condition.",
        "Montagna 1979",
    ));
    rules.push(rule(
        "mon2_1b",
        vec![],
        vec![D1, DG2, Ax],
        has(scg),
        "D1, global modus ponens and the logical-axiom condition give global Σ1-completeness.",
        "Montagna 1979",
    ));

    rules
}

pub fn build_problems() -> Vec<OpenProblem> {
    use ConditionAtom::*;
    use HierarchyLevel::*;
    let sigma1 = ContextFlag::PhiInGamma(Sigma(1));
    vec![
        OpenProblem {
            id: "p_cb_d0cu".to_owned(),
            flags: vec![sigma1],
            conditions: vec![D1, Cb, GammaCU(Delta0)],
            query: Fact::NotProves(ConsistencyVariant::H),
            statement: "whether a Σ1 provability predicate can satisfy D1, the converse-Barcan condition and uniform bounded completeness while its Hilbert-Bernays consistency statement stays provable is open.".to_owned(),
        },
        OpenProblem {
            id: "p_b2_cb".to_owned(),
            flags: vec![sigma1],
            conditions: vec![D1, B(2), Cb],
            query: Fact::NotProves(ConsistencyVariant::H),
            statement: "whether a Σ1 provability predicate can satisfy D1, the two-premise schematic rule and the converse-Barcan condition while its Hilbert-Bernays consistency statement stays provable is open.".to_owned(),
        },
        OpenProblem {
            id: "p_bu2_conl".to_owned(),
            flags: vec![sigma1],
            conditions: vec![D1, BU(2)],
            query: Fact::NotProves(ConsistencyVariant::L),
            statement: "whether a Σ1 formula can satisfy D1 and the two-premise uniform rule while its refutation-free consistency statement stays provable is open.".to_owned(),
        },
        OpenProblem {
            id: "p_further".to_owned(),
            flags: vec![],
            conditions: vec![],
            query: Fact::NotProves(ConsistencyVariant::H),
            statement: "further non-implications between the conditions, beyond the recorded witnesses, are open.".to_owned(),
        },
    ]
}
