//! Arithmetical hierarchy classifier.
//!
//! `Δ0 = Σ0 = Π0` is the class of formulas with only bounded quantifiers.
//! Above it, `Σn+1`/`Πn+1` are the least classes containing `Σn ∪ Πn`, closed
//! under `∧`, `∨` and bounded quantification, under `∃` (resp. `∀`), with `¬`
//! and the two dual-operand `→` rules swapping the classes. Classification is
//! purely syntactic: nothing is prenexed or simplified first, so the answer
//! is a property of the formula as written.
//!
//! Internally every formula gets a pair `(s, p)`: the least `n` with
//! `φ ∈ Σn` and the least `n` with `φ ∈ Πn`. [`classify`] reports the lower
//! of the two readings and prefers `Σ` on ties; [`is_in`] consults the pair,
//! so inclusion questions are answered exactly even when the two minima
//! coincide.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::syntax::ast::Formula;
use crate::syntax::atoms::{DeclaredLevel, Registry};

/// A class in the arithmetical hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HierarchyLevel {
    Delta0,
    /// `Σn`, `n >= 1`.
    Sigma(u32),
    /// `Πn`, `n >= 1`.
    Pi(u32),
}

impl HierarchyLevel {
    /// Inclusion order generated by `Σn ∪ Πn ⊆ Σn+1 ∩ Πn+1`.
    pub fn included_in(self, other: HierarchyLevel) -> bool {
        use HierarchyLevel::*;
        match (self, other) {
            (Delta0, _) => true,
            (_, Delta0) => false,
            (Sigma(n), Sigma(m)) | (Pi(n), Pi(m)) => n <= m,
            (Sigma(n), Pi(m)) | (Pi(n), Sigma(m)) => n < m,
        }
    }

    /// The dual class at the same index.
    pub fn dual(self) -> HierarchyLevel {
        match self {
            HierarchyLevel::Delta0 => HierarchyLevel::Delta0,
            HierarchyLevel::Sigma(n) => HierarchyLevel::Pi(n),
            HierarchyLevel::Pi(n) => HierarchyLevel::Sigma(n),
        }
    }
}

impl std::fmt::Display for HierarchyLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HierarchyLevel::Delta0 => write!(f, "Delta0"),
            HierarchyLevel::Sigma(n) => write!(f, "Sigma{n}"),
            HierarchyLevel::Pi(n) => write!(f, "Pi{n}"),
        }
    }
}

impl std::str::FromStr for HierarchyLevel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        if lower == "delta0" || lower == "d0" {
            return Ok(HierarchyLevel::Delta0);
        }
        for (prefix, make) in [
            ("sigma", HierarchyLevel::Sigma as fn(u32) -> HierarchyLevel),
            ("pi", HierarchyLevel::Pi as fn(u32) -> HierarchyLevel),
        ] {
            if let Some(rest) = lower.strip_prefix(prefix) {
                let n: u32 = rest
                    .parse()
                    .map_err(|_| format!("bad hierarchy index in `{s}`"))?;
                return Ok(if n == 0 { HierarchyLevel::Delta0 } else { make(n) });
            }
        }
        Err(format!("cannot parse hierarchy level `{s}`"))
    }
}

impl Serialize for HierarchyLevel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        match self {
            HierarchyLevel::Delta0 => map.serialize_entry("class", "delta0")?,
            HierarchyLevel::Sigma(n) => {
                map.serialize_entry("class", "sigma")?;
                map.serialize_entry("index", n)?;
            }
            HierarchyLevel::Pi(n) => {
                map.serialize_entry("class", "pi")?;
                map.serialize_entry("index", n)?;
            }
        }
        map.end()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("atom `{0}` is not registered, so the formula cannot be classified")]
    UnregisteredAtom(String),
}

/// Least Σ-index and least Π-index of `phi`.
fn level_pair(phi: &Formula, registry: &Registry) -> Result<(u32, u32), ClassifyError> {
    Ok(match phi {
        Formula::Eq(..) => (0, 0),
        Formula::Atom(name, _) => {
            let info = registry
                .atom(name)
                .ok_or_else(|| ClassifyError::UnregisteredAtom(name.0.clone()))?;
            match info.level {
                DeclaredLevel::Delta1 | DeclaredLevel::Level(HierarchyLevel::Delta0) => (0, 0),
                DeclaredLevel::Level(HierarchyLevel::Sigma(n)) => (n, n + 1),
                DeclaredLevel::Level(HierarchyLevel::Pi(n)) => (n + 1, n),
            }
        }
        Formula::Not(f) => {
            let (s, p) = level_pair(f, registry)?;
            if (s, p) == (0, 0) {
                (0, 0)
            } else {
                (p, s)
            }
        }
        Formula::And(a, b) | Formula::Or(a, b) => {
            let (sa, pa) = level_pair(a, registry)?;
            let (sb, pb) = level_pair(b, registry)?;
            (sa.max(sb), pa.max(pb))
        }
        Formula::Imp(a, b) => {
            let (sa, pa) = level_pair(a, registry)?;
            let (sb, pb) = level_pair(b, registry)?;
            if (sa, pa) == (0, 0) && (sb, pb) == (0, 0) {
                (0, 0)
            } else {
                // φ → ψ lands in Πn when φ ∈ Σn and ψ ∈ Πn, dually for Σn.
                let p = sa.max(pb).max(1);
                let s = pa.max(sb).max(1);
                (s.min(p + 1), p.min(s + 1))
            }
        }
        Formula::Forall(_, f) => {
            let (_, p) = level_pair(f, registry)?;
            let p = p.max(1);
            (p + 1, p)
        }
        Formula::Exists(_, f) => {
            let (s, _) = level_pair(f, registry)?;
            let s = s.max(1);
            (s, s + 1)
        }
        Formula::BForall { body, .. } | Formula::BExists { body, .. } => {
            level_pair(body, registry)?
        }
    })
}

/// The least level assignable to `phi`, with `Σ` preferred when the least Σ
/// and Π readings coincide.
pub fn classify(phi: &Formula, registry: &Registry) -> Result<HierarchyLevel, ClassifyError> {
    let (s, p) = level_pair(phi, registry)?;
    Ok(if s == 0 && p == 0 {
        HierarchyLevel::Delta0
    } else if s <= p {
        HierarchyLevel::Sigma(s)
    } else {
        HierarchyLevel::Pi(p)
    })
}

/// Whether `phi` belongs to `level` under the inclusion order.
pub fn is_in(
    phi: &Formula,
    level: HierarchyLevel,
    registry: &Registry,
) -> Result<bool, ClassifyError> {
    let (s, p) = level_pair(phi, registry)?;
    Ok(match level {
        HierarchyLevel::Delta0 => s == 0 && p == 0,
        HierarchyLevel::Sigma(n) => s <= n,
        HierarchyLevel::Pi(n) => p <= n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn std_classify(text: &str) -> HierarchyLevel {
        classify(&parse(text).unwrap(), &Registry::standard()).unwrap()
    }

    #[test]
    fn provability_shape_is_sigma_one() {
        assert_eq!(
            std_classify("!E y Atom[Prf_T](x, y)"),
            HierarchyLevel::Sigma(1)
        );
    }

    #[test]
    fn negated_provability_is_pi_one() {
        assert_eq!(
            std_classify("~(!E y Atom[Prf_T](x, y))"),
            HierarchyLevel::Pi(1)
        );
    }

    #[test]
    fn ground_equation_is_delta_zero() {
        assert_eq!(std_classify("0 = 0"), HierarchyLevel::Delta0);
    }

    #[test]
    fn bounded_quantifiers_stay_delta_zero() {
        assert_eq!(
            std_classify("!A z <= x . !E w < z . w + w = z"),
            HierarchyLevel::Delta0
        );
    }

    #[test]
    fn alternation_counts() {
        assert_eq!(
            std_classify("!A x !E y (x + y = y)"),
            HierarchyLevel::Pi(2)
        );
        assert_eq!(
            std_classify("!E x !A y (x + y = y)"),
            HierarchyLevel::Sigma(2)
        );
    }

    #[test]
    fn implication_between_dual_classes() {
        // Σ1 -> Π1 is Π1.
        assert_eq!(
            std_classify("(!E y Atom[Prf_T](x, y)) -> (!A y (x = y))"),
            HierarchyLevel::Pi(1)
        );
        // Σ1 -> Σ1 needs one more level; the Σ reading wins the tie.
        assert_eq!(
            std_classify("(!E y Atom[Prf_T](x, y)) -> (!E y Atom[Prf_T](y, x))"),
            HierarchyLevel::Sigma(2)
        );
    }

    #[test]
    fn inclusion_respects_the_lattice() {
        let r = Registry::standard();
        let sigma1 = parse("!E y Atom[Prf_T](x, y)").unwrap();
        assert!(is_in(&sigma1, HierarchyLevel::Sigma(2), &r).unwrap());
        assert!(is_in(&sigma1, HierarchyLevel::Pi(2), &r).unwrap());
        assert!(!is_in(&sigma1, HierarchyLevel::Pi(1), &r).unwrap());
        assert!(!is_in(&sigma1, HierarchyLevel::Delta0, &r).unwrap());
        let delta = parse("0 = 0").unwrap();
        assert!(is_in(&delta, HierarchyLevel::Sigma(1), &r).unwrap());
    }

    #[test]
    fn negation_dualizes_above_delta_zero() {
        let r = Registry::standard();
        for text in [
            "!E y Atom[Prf_T](x, y)",
            "!A x !E y (x + y = y)",
            "!A y (x = y)",
        ] {
            let phi = parse(text).unwrap();
            let neg = Formula::not(phi.clone());
            let level = classify(&phi, &r).unwrap();
            assert_eq!(classify(&neg, &r).unwrap(), level.dual());
        }
    }

    #[test]
    fn declared_atom_levels_are_honored() {
        // PrL is declared Σ1 even though it is syntactically an atom.
        assert_eq!(std_classify("Atom[PrL](x)"), HierarchyLevel::Sigma(1));
        assert_eq!(std_classify("~Atom[PrL](x)"), HierarchyLevel::Pi(1));
        assert_eq!(std_classify("Atom[xi]()"), HierarchyLevel::Pi(1));
    }

    #[test]
    fn unregistered_atom_is_an_error() {
        let phi = Formula::atom("Mystery", vec![]);
        assert!(matches!(
            classify(&phi, &Registry::standard()),
            Err(ClassifyError::UnregisteredAtom(_))
        ));
    }
}
