//! The knowledge-base container: rules, witnesses and open problems, with
//! JSON export/import.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::atoms::{ConStatus, ConditionAtom, ContextFlag, Fact};
use crate::witness::ConsistencyVariant;

/// One inference rule. Parametric schemata (over a hierarchy level or over
/// the premise count of the schematic rules) ship as one instance per
/// parameter value, all sharing the schema id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub id: String,
    /// Side conditions on `Φ` that must hold in the query context.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<ContextFlag>,
    pub premises: Vec<Fact>,
    pub conclusion: Fact,
    /// What the rule asserts, stated in full.
    pub statement: String,
    /// Attribution in the literature, when the result has a classical home.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub source: String,
}

/// A violated condition, with a direct citation when the source states the
/// failure outright. An empty citation means the failure is recovered by
/// contraposition: assuming the atom derives a clash with the rest of the
/// record, and the sanity audit checks that derivation exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationEntry {
    pub atom: ConditionAtom,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub citation: String,
}

/// A concrete predicate certifying non-implications.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub name: String,
    pub display: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<ContextFlag>,
    pub satisfies: Vec<ConditionAtom>,
    pub violates: Vec<ViolationEntry>,
    /// Recorded provability statuses of the four consistency statements;
    /// absent means unknown (or derivable).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub con: BTreeMap<String, ConStatus>,
    pub citation: String,
}

impl WitnessRecord {
    pub fn con_status(&self, v: ConsistencyVariant) -> Option<&ConStatus> {
        self.con.get(&v.to_string())
    }

    pub fn violated_atoms(&self) -> impl Iterator<Item = ConditionAtom> + '_ {
        self.violates.iter().map(|e| e.atom)
    }
}

/// A question the sources leave open, recorded so that queries covering it
/// come back `unknown` with the right pointer instead of a guess.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenProblem {
    pub id: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<ContextFlag>,
    pub conditions: Vec<ConditionAtom>,
    pub query: Fact,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnowledgeBase {
    pub version: String,
    /// Largest premise count the schematic rule families are instantiated at.
    pub m_cap: u32,
    pub rules: Vec<Rule>,
    pub witnesses: Vec<WitnessRecord>,
    pub problems: Vec<OpenProblem>,
}

impl KnowledgeBase {
    /// The knowledge base shipped with the workbench, instantiated with the
    /// default premise cap.
    pub fn shipped() -> KnowledgeBase {
        KnowledgeBase::shipped_with_cap(super::rules::DEFAULT_M_CAP)
    }

    pub fn shipped_with_cap(m_cap: u32) -> KnowledgeBase {
        KnowledgeBase {
            version: "1".to_owned(),
            m_cap,
            rules: super::rules::build_rules(m_cap),
            witnesses: super::witnesses::build_witnesses(m_cap),
            problems: super::rules::build_problems(),
        }
    }

    pub fn rule(&self, id: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.id == id)
    }

    pub fn witness(&self, name: &str) -> Option<&WitnessRecord> {
        self.witnesses.iter().find(|w| w.name == name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("knowledge base serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<KnowledgeBase, serde_json::Error> {
        serde_json::from_value(v.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_kb_round_trips_through_json() {
        let kb = KnowledgeBase::shipped();
        let v = kb.to_json();
        let back = KnowledgeBase::from_json(&v).unwrap();
        assert_eq!(kb, back);
    }

    #[test]
    fn every_rule_and_witness_is_cited() {
        let kb = KnowledgeBase::shipped();
        for r in &kb.rules {
            assert!(!r.statement.is_empty(), "rule {} lacks a statement", r.id);
        }
        for w in &kb.witnesses {
            assert!(!w.citation.is_empty(), "witness {} lacks a citation", w.name);
        }
        for p in &kb.problems {
            assert!(!p.statement.is_empty(), "problem {} lacks a statement", p.id);
        }
    }
}
