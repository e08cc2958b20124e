//! Sufficient conditions for a curve to be defined over its field of moduli.
//!
//! Rules are tried in a fixed order and the first match wins. When none
//! applies the verdict is `Undetermined`; no heuristic fills the gap.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::signatures::is_odd_signature;
use crate::superelliptic::{GSFamily, ReducedGroup};
use crate::uniqueness::{uniqueness_verdict, UniquenessVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DefinabilityRule {
    /// `Aut(X)` is trivial (asserted by the caller).
    TrivialAut,
    /// `X/Aut(X)` is the sphere with three cone points.
    Quasiplatonic,
    /// `H` is unique and `Ḡ` is neither trivial nor cyclic.
    NonCyclicReduced,
    /// `Ḡ` trivial or cyclic and `sig_G` is odd.
    OddSignature,
}

impl fmt::Display for DefinabilityRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DefinabilityRule::TrivialAut => "trivial_aut",
            DefinabilityRule::Quasiplatonic => "quasiplatonic",
            DefinabilityRule::NonCyclicReduced => "non_cyclic_reduced",
            DefinabilityRule::OddSignature => "odd_signature",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DefinabilityVerdict {
    Definable { rule: DefinabilityRule },
    Undetermined,
}

impl DefinabilityVerdict {
    pub fn rule(&self) -> Option<DefinabilityRule> {
        match self {
            DefinabilityVerdict::Definable { rule } => Some(*rule),
            DefinabilityVerdict::Undetermined => None,
        }
    }
}

impl fmt::Display for DefinabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DefinabilityVerdict::Definable { rule } => write!(f, "definable ({rule})"),
            DefinabilityVerdict::Undetermined => f.write_str("undetermined"),
        }
    }
}

fn is_trivial_or_cyclic(g: ReducedGroup) -> bool {
    matches!(g, ReducedGroup::Trivial | ReducedGroup::Cyclic(_))
}

/// Quasiplatonic, then non-cyclic reduced group with a unique `H`, then
/// odd signature for trivial or cyclic `Ḡ`.
pub fn definability_verdict(fam: &GSFamily, uniq: &UniquenessVerdict) -> DefinabilityVerdict {
    let sig = fam.sig_g();
    let definable = |rule| DefinabilityVerdict::Definable { rule };
    if sig.orbifold_genus() == 0 && sig.len() == 3 {
        return definable(DefinabilityRule::Quasiplatonic);
    }
    let cyclic = is_trivial_or_cyclic(fam.group());
    if uniq.is_unique() && !cyclic {
        return definable(DefinabilityRule::NonCyclicReduced);
    }
    if cyclic && is_odd_signature(sig) {
        return definable(DefinabilityRule::OddSignature);
    }
    DefinabilityVerdict::Undetermined
}

/// A curve with trivial automorphism group is defined over its field of
/// moduli. The library never computes `Aut(X)`, so the caller must assert it.
pub fn trivial_aut_verdict(aut_is_trivial: bool) -> DefinabilityVerdict {
    if aut_is_trivial {
        DefinabilityVerdict::Definable {
            rule: DefinabilityRule::TrivialAut,
        }
    } else {
        DefinabilityVerdict::Undetermined
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefinabilitySummary {
    pub total: usize,
    pub by_rule: BTreeMap<DefinabilityRule, usize>,
    /// Display forms of the undetermined families.
    pub undetermined: Vec<String>,
}

impl DefinabilitySummary {
    pub fn count(&self, rule: DefinabilityRule) -> usize {
        self.by_rule.get(&rule).copied().unwrap_or(0)
    }
}

pub fn census_definability_summary(families: &[GSFamily]) -> DefinabilitySummary {
    let mut out = DefinabilitySummary::default();
    for fam in families {
        out.total += 1;
        match definability_verdict(fam, &uniqueness_verdict(fam)) {
            DefinabilityVerdict::Definable { rule } => *out.by_rule.entry(rule).or_default() += 1,
            DefinabilityVerdict::Undetermined => out.undetermined.push(fam.to_string()),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superelliptic::{build_family, ExponentData};

    fn verdict(n: u64, g: ReducedGroup, d: ExponentData) -> DefinabilityVerdict {
        let fam = build_family(n, g, &d).unwrap();
        definability_verdict(&fam, &uniqueness_verdict(&fam))
    }

    fn rule(r: DefinabilityRule) -> DefinabilityVerdict {
        DefinabilityVerdict::Definable { rule: r }
    }

    #[test]
    fn examples() {
        // y^5 = x(x-1)(x-2)^3, quotient (0; 5, 5, 5)
        assert_eq!(
            verdict(
                5,
                ReducedGroup::Trivial,
                ExponentData::new(0, vec![], vec![1, 1, 3])
            ),
            rule(DefinabilityRule::Quasiplatonic)
        );
        // hyperelliptic with one generic S_4 orbit of branch points
        assert_eq!(
            verdict(
                2,
                ReducedGroup::Octahedral,
                ExponentData::new(0, vec![0, 0, 0], vec![1])
            ),
            rule(DefinabilityRule::NonCyclicReduced)
        );
        // y^3 = (x^2 - 1)(x^2 - 4)(x^2 - 9), sig_G (0; 2, 2, 3, 3, 3)
        let fam = build_family(
            3,
            ReducedGroup::Cyclic(2),
            &ExponentData::new(0, vec![], vec![1, 1, 1]),
        )
        .unwrap();
        assert_eq!(fam.sig_g().to_string(), "(0; 2, 2, 3, 3, 3)");
        assert_eq!(
            definability_verdict(&fam, &uniqueness_verdict(&fam)),
            rule(DefinabilityRule::OddSignature)
        );
        // y^3 = (x^2 - 1)(x^2 - 4), sig_G (0; 2, 2, 3, 3): even, undetermined
        let fam = build_family(
            3,
            ReducedGroup::Cyclic(2),
            &ExponentData::new(0, vec![], vec![1, 2]),
        )
        .unwrap();
        assert_eq!(
            definability_verdict(&fam, &uniqueness_verdict(&fam)),
            DefinabilityVerdict::Undetermined
        );
    }

    #[test]
    fn summary_counts() {
        assert_eq!(census_definability_summary(&[]).total, 0);
        let fam = build_family(
            5,
            ReducedGroup::Trivial,
            &ExponentData::new(0, vec![], vec![1, 1, 3]),
        )
        .unwrap();
        let s = census_definability_summary(&[fam]);
        assert_eq!(s.count(DefinabilityRule::Quasiplatonic), 1);
        assert_eq!(s.total, 1);
    }

    #[test]
    fn trivial_aut_needs_assertion() {
        assert_eq!(
            trivial_aut_verdict(true),
            rule(DefinabilityRule::TrivialAut)
        );
        assert_eq!(
            trivial_aut_verdict(false),
            DefinabilityVerdict::Undetermined
        );
    }
}
