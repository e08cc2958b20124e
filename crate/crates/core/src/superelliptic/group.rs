//! Finite Möbius groups that can occur as reduced groups, in the normal
//! forms used by the family builder.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{CycNumber, ExtPoint, MoebiusMap};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "m")]
pub enum ReducedGroup {
    Trivial,
    Cyclic(u64),
    Dihedral(u64),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl ReducedGroup {
    pub fn validate(self) -> Result<Self> {
        match self {
            ReducedGroup::Cyclic(m) | ReducedGroup::Dihedral(m) if m < 2 => Err(
                Error::InvalidInput(format!("{self} needs a parameter m of at least 2")),
            ),
            _ => Ok(self),
        }
    }

    pub fn order(self) -> u64 {
        match self {
            ReducedGroup::Trivial => 1,
            ReducedGroup::Cyclic(m) => m,
            ReducedGroup::Dihedral(m) => 2 * m,
            ReducedGroup::Tetrahedral => 12,
            ReducedGroup::Octahedral => 24,
            ReducedGroup::Icosahedral => 60,
        }
    }

    pub fn is_platonic(self) -> bool {
        matches!(
            self,
            ReducedGroup::Tetrahedral | ReducedGroup::Octahedral | ReducedGroup::Icosahedral
        )
    }

    /// The generators `a` (and `b`) as Möbius maps.
    pub fn generators(self) -> Vec<MoebiusMap> {
        let one = CycNumber::one;
        match self {
            ReducedGroup::Trivial => vec![],
            ReducedGroup::Cyclic(m) => vec![MoebiusMap::scaling(CycNumber::zeta(m as u32))],
            ReducedGroup::Dihedral(m) => vec![
                MoebiusMap::scaling(CycNumber::zeta(m as u32)),
                MoebiusMap::inversion(),
            ],
            ReducedGroup::Tetrahedral => {
                vec![MoebiusMap::scaling(CycNumber::from_int(-1)), tetra_octa_b()]
            }
            ReducedGroup::Octahedral => vec![MoebiusMap::scaling(CycNumber::i()), tetra_octa_b()],
            ReducedGroup::Icosahedral => {
                let w = |k: i64| CycNumber::zeta_pow(5, k);
                let b =
                    MoebiusMap::new(&one() - &w(4), &w(4) - &w(1), &w(1) - &w(3), &w(2) - &w(3))
                        .expect("icosahedral generator is invertible");
                vec![MoebiusMap::scaling(w(1)), b]
            }
        }
    }
}

impl ReducedGroup {
    /// The orbit of a point under the generated group, in discovery order.
    pub fn orbit(self, start: &ExtPoint) -> Vec<ExtPoint> {
        let gens = self.generators();
        let mut orbit = vec![start.clone()];
        let mut i = 0;
        while i < orbit.len() {
            for m in &gens {
                let img = m.apply(&orbit[i]);
                if !orbit.contains(&img) {
                    orbit.push(img);
                }
            }
            i += 1;
        }
        orbit
    }
}

/// `b(x) = (i - x)/(i + x)`.
fn tetra_octa_b() -> MoebiusMap {
    let i = CycNumber::i();
    MoebiusMap::new(CycNumber::from_int(-1), i.clone(), CycNumber::one(), i)
        .expect("b is invertible")
}

impl fmt::Display for ReducedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReducedGroup::Trivial => write!(f, "trivial"),
            ReducedGroup::Cyclic(m) => write!(f, "cyclic:{m}"),
            ReducedGroup::Dihedral(m) => write!(f, "dihedral:{m}"),
            ReducedGroup::Tetrahedral => write!(f, "tetrahedral"),
            ReducedGroup::Octahedral => write!(f, "octahedral"),
            ReducedGroup::Icosahedral => write!(f, "icosahedral"),
        }
    }
}

impl FromStr for ReducedGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let (kind, param) = match s.split_once(':') {
            Some((k, p)) => (k.to_string(), Some(p.to_string())),
            None => (s.clone(), None),
        };
        let m = || -> Result<u64> {
            param
                .as_deref()
                .ok_or_else(|| {
                    Error::Parse(format!("group `{s}` needs a parameter, e.g. {kind}:3"))
                })?
                .parse()
                .map_err(|_| Error::Parse(format!("bad group parameter in `{s}`")))
        };
        let g = match kind.as_str() {
            "trivial" | "c1" => ReducedGroup::Trivial,
            "cyclic" | "c" => ReducedGroup::Cyclic(m()?),
            "dihedral" | "d" => ReducedGroup::Dihedral(m()?),
            "tetrahedral" | "a4" => ReducedGroup::Tetrahedral,
            "octahedral" | "s4" => ReducedGroup::Octahedral,
            "icosahedral" | "a5" => ReducedGroup::Icosahedral,
            _ => return Err(Error::Parse(format!("unknown reduced group `{s}`"))),
        };
        g.validate()
    }
}
