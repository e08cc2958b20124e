//! The serialized form of a family together with its verdicts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moduli::{definability_verdict, DefinabilityVerdict};
use crate::superelliptic::{abelian_invariants, GSFamily};
use crate::uniqueness::{uniqueness_verdict, UniquenessVerdict};

pub const SCHEMA_VERSION: &str = "1";

/// Family fields at top level plus `uniqueness`, `field_of_moduli` and,
/// for abelian `G`, its invariant factors. Deserializing recomputes
/// everything and rejects records that disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RecordRepr")]
pub struct FamilyRecord {
    pub schema_version: String,
    #[serde(flatten)]
    pub family: GSFamily,
    pub uniqueness: UniquenessVerdict,
    pub field_of_moduli: DefinabilityVerdict,
    pub abelian_invariants: Option<Vec<u64>>,
}

#[derive(Deserialize)]
struct RecordRepr {
    schema_version: String,
    #[serde(flatten)]
    family: GSFamily,
    uniqueness: UniquenessVerdict,
    field_of_moduli: DefinabilityVerdict,
    abelian_invariants: Option<Vec<u64>>,
}

impl TryFrom<RecordRepr> for FamilyRecord {
    type Error = Error;

    fn try_from(r: RecordRepr) -> Result<Self> {
        if r.schema_version != SCHEMA_VERSION {
            return Err(Error::InvalidInput(format!(
                "schema version {:?}, expected {SCHEMA_VERSION:?}",
                r.schema_version
            )));
        }
        let fresh = FamilyRecord::new(r.family)?;
        let stored = (r.uniqueness, r.field_of_moduli, r.abelian_invariants);
        if stored
            != (
                fresh.uniqueness.clone(),
                fresh.field_of_moduli,
                fresh.abelian_invariants.clone(),
            )
        {
            return Err(Error::InvalidInput(
                "stored verdicts differ from the recomputed ones".into(),
            ));
        }
        Ok(fresh)
    }
}

impl FamilyRecord {
    pub fn new(family: GSFamily) -> Result<Self> {
        let uniqueness = uniqueness_verdict(&family);
        let field_of_moduli = definability_verdict(&family, &uniqueness);
        let abelian_invariants = if family.presentation().is_abelian() {
            Some(abelian_invariants(family.presentation())?)
        } else {
            None
        };
        Ok(Self {
            schema_version: SCHEMA_VERSION.into(),
            family,
            uniqueness,
            field_of_moduli,
            abelian_invariants,
        })
    }

    /// Family warnings followed by those of an exceptional witness.
    pub fn all_warnings(&self) -> Vec<String> {
        let mut out = self.family.warnings().to_vec();
        if let UniquenessVerdict::PossiblyNonUnique { witness } = &self.uniqueness {
            out.extend(witness.warnings.iter().cloned());
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::InvariantViolation(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superelliptic::{build_family, ExponentData, ReducedGroup};

    #[test]
    fn round_trip_and_tamper() {
        let fam = build_family(
            4,
            ReducedGroup::Cyclic(4),
            &ExponentData::new(2, vec![], vec![1, 1, 1]),
        )
        .unwrap();
        let rec = FamilyRecord::new(fam).unwrap();
        assert_eq!(rec.abelian_invariants, Some(vec![2, 8]));
        let s = rec.to_json().unwrap();
        assert_eq!(FamilyRecord::from_json(&s).unwrap(), rec);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["genus"], 17);
        assert_eq!(v["schema_version"], "1");
        let bad = s.replace("\"status\": \"unique\"", "\"status\": \"undetermined\"");
        assert!(FamilyRecord::from_json(&bad).is_err());
    }

    #[test]
    fn exceptional_record() {
        let fam = crate::uniqueness::exceptional_family(2, 1, 2, &[]).unwrap();
        let rec = FamilyRecord::new(fam).unwrap();
        assert!(rec.all_warnings().iter().any(|w| w.contains("gives 9")));
        let back = FamilyRecord::from_json(&rec.to_json().unwrap()).unwrap();
        assert_eq!(back, rec);
    }
}
