//! Condition atoms, context flags and derived facts.

use serde::{Deserialize, Serialize};

use crate::hierarchy::HierarchyLevel;
use crate::witness::ConsistencyVariant;

/// A derivability condition for a candidate predicate `Φ`.
///
/// Naming: `D1`–`D3` are the local closure conditions (provability of
/// theorems, formalized modus ponens, formalized self-provability);
/// `GammaC(Γ)` is local Γ-completeness, so `GammaC(Σ1)` is the classic
/// provable Σ1-completeness and `GammaC(Δ0)` completeness for bounded
/// sentences; `B(m)` is the m-premise schematic rule; `Pc` is containment of
/// predicate calculus; `ScMinus` the makeshift relativized Σ1-completeness.
/// `DU*/GammaCU/BU/Pcu` are the uniform versions quantified over free
/// variables, `Cb` the converse-Barcan condition, and `DG2/DG3/GammaCG/Pcg/Ax`
/// the global versions quantified over codes inside the metatheory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConditionAtom {
    D1,
    D2,
    D3,
    GammaC(HierarchyLevel),
    B(u32),
    Pc,
    ScMinus,
    DU1,
    DU2,
    DU3,
    GammaCU(HierarchyLevel),
    BU(u32),
    Cb,
    Pcu,
    DG2,
    DG3,
    GammaCG(HierarchyLevel),
    Pcg,
    Ax,
}

impl std::fmt::Display for ConditionAtom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use ConditionAtom::*;
        use HierarchyLevel::*;
        match self {
            D1 => write!(f, "D1"),
            D2 => write!(f, "D2"),
            D3 => write!(f, "D3"),
            GammaC(Sigma(1)) => write!(f, "SC"),
            GammaC(Delta0) => write!(f, "D0C"),
            GammaC(level) => write!(f, "{level}-C"),
            B(m) => write!(f, "B{m}"),
            Pc => write!(f, "PC"),
            ScMinus => write!(f, "SC-"),
            DU1 => write!(f, "DU1"),
            DU2 => write!(f, "DU2"),
            DU3 => write!(f, "DU3"),
            GammaCU(Sigma(1)) => write!(f, "SCU"),
            GammaCU(Delta0) => write!(f, "D0CU"),
            GammaCU(level) => write!(f, "{level}-CU"),
            BU(m) => write!(f, "BU{m}"),
            Cb => write!(f, "CB"),
            Pcu => write!(f, "PCU"),
            DG2 => write!(f, "DG2"),
            DG3 => write!(f, "DG3"),
            GammaCG(Sigma(1)) => write!(f, "SCG"),
            GammaCG(Delta0) => write!(f, "D0CG"),
            GammaCG(level) => write!(f, "{level}-CG"),
            Pcg => write!(f, "PCG"),
            Ax => write!(f, "Ax"),
        }
    }
}

impl std::str::FromStr for ConditionAtom {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use ConditionAtom::*;
        use HierarchyLevel::*;
        let norm = s.trim();
        let upper = norm.to_ascii_uppercase();
        match upper.as_str() {
            "D1" => return Ok(D1),
            "D2" => return Ok(D2),
            "D3" => return Ok(D3),
            "SC" => return Ok(GammaC(Sigma(1))),
            "D0C" | "DC" => return Ok(GammaC(Delta0)),
            "PC" => return Ok(Pc),
            "SC-" | "SCMINUS" => return Ok(ScMinus),
            "DU1" => return Ok(DU1),
            "DU2" => return Ok(DU2),
            "DU3" => return Ok(DU3),
            "SCU" => return Ok(GammaCU(Sigma(1))),
            "D0CU" | "DCU" => return Ok(GammaCU(Delta0)),
            "CB" => return Ok(Cb),
            "PCU" => return Ok(Pcu),
            "DG2" => return Ok(DG2),
            "DG3" => return Ok(DG3),
            "SCG" => return Ok(GammaCG(Sigma(1))),
            "D0CG" | "DCG" => return Ok(GammaCG(Delta0)),
            "PCG" => return Ok(Pcg),
            "AX" => return Ok(Ax),
            _ => {}
        }
        if let Some(m) = upper.strip_prefix("BU") {
            let m: u32 = m.parse().map_err(|_| format!("bad index in `{s}`"))?;
            return Ok(BU(m));
        }
        if let Some(m) = upper.strip_prefix('B') {
            if m.chars().all(|c| c.is_ascii_digit()) && !m.is_empty() {
                let m: u32 = m.parse().map_err(|_| format!("bad index in `{s}`"))?;
                return Ok(B(m));
            }
        }
        // General forms: `GammaC:sigma2`, `GammaCU:pi1`, `GammaCG:delta0`,
        // and `<level>-C` / `<level>-CU` / `<level>-CG`.
        for (prefix, make) in [
            (
                "GAMMACU:",
                GammaCU as fn(HierarchyLevel) -> ConditionAtom,
            ),
            ("GAMMACG:", GammaCG as fn(HierarchyLevel) -> ConditionAtom),
            ("GAMMAC:", GammaC as fn(HierarchyLevel) -> ConditionAtom),
        ] {
            if let Some(rest) = upper.strip_prefix(prefix) {
                let level: HierarchyLevel = rest.parse()?;
                return Ok(make(level));
            }
        }
        for (suffix, make) in [
            ("-CU", GammaCU as fn(HierarchyLevel) -> ConditionAtom),
            ("-CG", GammaCG as fn(HierarchyLevel) -> ConditionAtom),
            ("-C", GammaC as fn(HierarchyLevel) -> ConditionAtom),
        ] {
            if let Some(rest) = upper.strip_suffix(suffix) {
                let level: HierarchyLevel = rest.parse()?;
                return Ok(make(level));
            }
        }
        Err(format!("unknown condition atom `{s}`"))
    }
}

impl Serialize for ConditionAtom {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ConditionAtom {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Side condition on the candidate predicate, never derived by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ContextFlag {
    /// `Φ` is a Γ formula.
    PhiInGamma(HierarchyLevel),
    /// The metatheory coincides with the object theory.
    SEqualsT,
}

impl std::fmt::Display for ContextFlag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ContextFlag::PhiInGamma(level) => write!(f, "phi-in:{level}"),
            ContextFlag::SEqualsT => write!(f, "s=t"),
        }
    }
}

impl std::str::FromStr for ContextFlag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase();
        if norm == "s=t" || norm == "seqt" {
            return Ok(ContextFlag::SEqualsT);
        }
        if let Some(rest) = norm.strip_prefix("phi-in:") {
            return Ok(ContextFlag::PhiInGamma(rest.parse()?));
        }
        // Bare level names are accepted as Φ-membership flags.
        if let Ok(level) = norm.parse::<HierarchyLevel>() {
            return Ok(ContextFlag::PhiInGamma(level));
        }
        Err(format!("unknown context flag `{s}`"))
    }
}

impl Serialize for ContextFlag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ContextFlag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Anything the engine can derive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Fact {
    /// `Φ` satisfies the condition.
    Has(ConditionAtom),
    /// The object theory does not prove the consistency statement.
    NotProves(ConsistencyVariant),
    /// The metatheory proves `Con^a -> Con^b`.
    ConImplies(ConsistencyVariant, ConsistencyVariant),
}

impl std::fmt::Display for Fact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Fact::Has(a) => write!(f, "{a}"),
            Fact::NotProves(v) => write!(f, "not-proves:Con^{v}"),
            Fact::ConImplies(a, b) => write!(f, "implies:Con^{a}->Con^{b}"),
        }
    }
}

impl std::str::FromStr for Fact {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim();
        let lower = norm.to_ascii_lowercase();
        for prefix in ["not-proves:con^", "unprovable:con^", "!con^", "!con"] {
            if let Some(rest) = lower.strip_prefix(prefix) {
                return Ok(Fact::NotProves(rest.parse()?));
            }
        }
        if let Some(rest) = lower.strip_prefix("implies:con^") {
            let (a, b) = rest
                .split_once("->con^")
                .ok_or_else(|| format!("bad implication fact `{s}`"))?;
            return Ok(Fact::ConImplies(a.parse()?, b.parse()?));
        }
        Ok(Fact::Has(norm.parse()?))
    }
}

impl Serialize for Fact {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Fact {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Recorded provability status of one consistency statement for a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConStatus {
    /// The object theory proves the statement.
    Proves { citation: String },
    /// The object theory does not prove the statement.
    NotProves { citation: String },
}

impl ConStatus {
    pub fn citation(&self) -> &str {
        match self {
            ConStatus::Proves { citation } | ConStatus::NotProves { citation } => citation,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use HierarchyLevel::*;

    #[test]
    fn atom_strings_round_trip() {
        let atoms = [
            ConditionAtom::D1,
            ConditionAtom::GammaC(Sigma(1)),
            ConditionAtom::GammaC(Delta0),
            ConditionAtom::GammaC(Pi(2)),
            ConditionAtom::B(4),
            ConditionAtom::BU(2),
            ConditionAtom::GammaCU(Sigma(1)),
            ConditionAtom::GammaCG(Delta0),
            ConditionAtom::ScMinus,
            ConditionAtom::Ax,
        ];
        for a in atoms {
            let text = a.to_string();
            assert_eq!(text.parse::<ConditionAtom>().unwrap(), a, "via `{text}`");
        }
        assert_eq!("SCU".parse::<ConditionAtom>().unwrap(), ConditionAtom::GammaCU(Sigma(1)));
        assert_eq!("GammaC:pi2".parse::<ConditionAtom>().unwrap(), ConditionAtom::GammaC(Pi(2)));
    }

    #[test]
    fn fact_strings_round_trip() {
        let facts = [
            Fact::Has(ConditionAtom::DU1),
            Fact::NotProves(ConsistencyVariant::H),
            Fact::ConImplies(ConsistencyVariant::L, ConsistencyVariant::Sigma1),
        ];
        for f in facts {
            let text = f.to_string();
            assert_eq!(text.parse::<Fact>().unwrap(), f, "via `{text}`");
        }
        assert_eq!(
            "!ConL".parse::<Fact>().unwrap(),
            Fact::NotProves(ConsistencyVariant::L)
        );
    }

    #[test]
    fn flag_strings_round_trip() {
        for flag in [
            ContextFlag::PhiInGamma(Sigma(1)),
            ContextFlag::PhiInGamma(Sigma(2)),
            ContextFlag::SEqualsT,
        ] {
            assert_eq!(flag.to_string().parse::<ContextFlag>().unwrap(), flag);
        }
        assert_eq!(
            "sigma1".parse::<ContextFlag>().unwrap(),
            ContextFlag::PhiInGamma(Sigma(1))
        );
    }
}
