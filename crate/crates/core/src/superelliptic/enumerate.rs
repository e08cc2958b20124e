//! All generalized superelliptic families of a given genus, one per
//! canonical key.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::family::{build_family, family_genus, ExponentData, GSFamily};
use super::group::ReducedGroup;
use crate::census::{canonical_exponent_form, units_mod, ExponentTuple};
use crate::error::{Error, Result};

/// Identifies a family up to relabelling `y ↦ y^u` and the coordinate
/// changes that normalize the reduced group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyKey {
    pub n: u64,
    pub group: ReducedGroup,
    pub exponents: Vec<u64>,
}

fn sorted_generic(orbits: &[u64], u: u64, n: u64) -> Vec<u64> {
    let mut v: Vec<u64> = orbits
        .iter()
        .map(|&l| u * l % n)
        .filter(|&l| l != 0)
        .collect();
    v.sort_unstable();
    v
}

/// The canonical key of valid exponent data.
pub fn family_key(n: u64, group: ReducedGroup, data: &ExponentData) -> Result<FamilyKey> {
    family_genus(n, group, data)?;
    let units = units_mod(n);
    let sigma: u64 = data.orbits.iter().sum();
    let exponents = match group {
        ReducedGroup::Trivial => {
            let finite: Vec<u64> = data.orbits.iter().copied().filter(|&l| l != 0).collect();
            let t = ExponentTuple::from_finite(n, &finite)?;
            canonical_exponent_form(&t).exps().to_vec()
        }
        ReducedGroup::Cyclic(m) => {
            let linf = (n - (data.l0 + m * sigma) % n) % n;
            let mut ends = vec![(data.l0, linf)];
            // x ↦ 1/x swaps 0 and ∞; the normal form needs l0 ≠ 0 when
            // ∞ is branched
            if linf != 0 {
                ends.push((linf, data.l0));
            }
            units
                .iter()
                .flat_map(|&u| {
                    ends.iter().map(move |&(a, b)| {
                        let mut k = vec![u * a % n, u * b % n];
                        k.extend(sorted_generic(&data.orbits, u, n));
                        k
                    })
                })
                .min()
                .expect("units are nonempty")
        }
        ReducedGroup::Dihedral(m) => {
            let s = [data.l0, data.special[0], data.special[1]];
            // x ↦ ζ_{2m} x swaps x^m = 1 and x^m = -1; for m = 2 the
            // normalizer permutes all three short orbits
            let perms: Vec<[usize; 3]> = if m == 2 {
                vec![
                    [0, 1, 2],
                    [0, 2, 1],
                    [1, 0, 2],
                    [1, 2, 0],
                    [2, 0, 1],
                    [2, 1, 0],
                ]
            } else {
                vec![[0, 1, 2], [0, 2, 1]]
            };
            units
                .iter()
                .flat_map(|&u| {
                    perms.iter().map(move |p| {
                        let mut k: Vec<u64> = p.iter().map(|&i| u * s[i] % n).collect();
                        k.extend(sorted_generic(&data.orbits, u, n));
                        k
                    })
                })
                .min()
                .expect("units are nonempty")
        }
        _ => units
            .iter()
            .map(|&u| {
                let mut k: Vec<u64> = data.special.iter().map(|&l| u * l % n).collect();
                k.extend(sorted_generic(&data.orbits, u, n));
                k
            })
            .min()
            .expect("units are nonempty"),
    };
    Ok(FamilyKey {
        n,
        group,
        exponents,
    })
}

/// Reduced groups `Ḡ` with `n·|Ḡ| ≤ 84(g-1)`, plus the trivial group.
fn candidate_groups(g: u64, n: u64) -> Vec<ReducedGroup> {
    let bound = 84 * (g - 1);
    let mut out = vec![ReducedGroup::Trivial];
    let max_order = 4 * g + 2;
    for m in 2..=max_order {
        if n * m <= bound {
            out.push(ReducedGroup::Cyclic(m));
        }
    }
    for m in 2..=max_order {
        if 2 * n * m <= bound {
            out.push(ReducedGroup::Dihedral(m));
        }
    }
    for p in [
        ReducedGroup::Tetrahedral,
        ReducedGroup::Octahedral,
        ReducedGroup::Icosahedral,
    ] {
        if n * p.order() <= bound {
            out.push(p);
        }
    }
    out
}

/// Nondecreasing sequences of length `len` over `1..n`.
fn multisets(n: u64, len: usize) -> Vec<Vec<u64>> {
    fn rec(n: u64, len: usize, min: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in min..n {
            cur.push(v);
            rec(n, len, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, len, 1, &mut Vec::new(), &mut out);
    out
}

fn tuples(n: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// Candidate exponent data for `(group, n)` whose genus can be `g`.
fn candidates(g: u64, n: u64, group: ReducedGroup) -> Vec<ExponentData> {
    let budget = 2 * g - 2 + 2 * n;
    let generic_size = match group {
        ReducedGroup::Trivial => 1,
        ReducedGroup::Cyclic(m) => m,
        ReducedGroup::Dihedral(m) => 2 * m,
        p => p.order(),
    };
    // a branched orbit of size s costs at least s·(n - n/2)
    let max_r = (budget / (generic_size * (n - n / 2))) as usize;
    let l0s: Vec<u64> = match group {
        ReducedGroup::Cyclic(_) | ReducedGroup::Dihedral(_) => (0..n).collect(),
        _ => vec![0],
    };
    let special_len = match group {
        ReducedGroup::Dihedral(_) | ReducedGroup::Tetrahedral => 2,
        ReducedGroup::Octahedral | ReducedGroup::Icosahedral => 3,
        _ => 0,
    };
    let specials = tuples(n, special_len);
    let mut out = Vec::new();
    for r in 0..=max_r {
        for orbits in multisets(n, r) {
            for &l0 in &l0s {
                for sp in &specials {
                    out.push(ExponentData::new(l0, sp.clone(), orbits.clone()));
                }
            }
        }
    }
    out
}

/// Every family of genus `g` with level at most `max_n` (default
/// `4g + 2`), sorted by key. Constraint failures are skipped; an
/// internal inconsistency aborts.
pub fn gs_census(g: u64, max_n: Option<u64>) -> Result<Vec<GSFamily>> {
    if g < 2 {
        return Err(Error::InvalidInput(format!("genus {g} is below 2")));
    }
    let top = max_n.unwrap_or(4 * g + 2).min(4 * g + 2);
    let jobs: Vec<(u64, ReducedGroup)> = (2..=top)
        .flat_map(|n| candidate_groups(g, n).into_iter().map(move |grp| (n, grp)))
        .collect();
    let found: Vec<BTreeMap<FamilyKey, ExponentData>> = jobs
        .par_iter()
        .map(|&(n, group)| {
            let mut keys = BTreeMap::new();
            for data in candidates(g, n, group) {
                match family_genus(n, group, &data) {
                    Ok(genus) if genus == g => {}
                    Ok(_) => continue,
                    Err(Error::InvariantViolation(e)) => return Err(Error::InvariantViolation(e)),
                    Err(_) => continue,
                }
                let key = family_key(n, group, &data)?;
                keys.entry(key).or_insert(data);
            }
            Ok(keys)
        })
        .collect::<Result<_>>()?;
    let merged: BTreeMap<FamilyKey, ExponentData> = found.into_iter().flatten().collect();
    merged
        .into_par_iter()
        .map(|(key, data)| {
            let fam = build_family(key.n, key.group, &data)?;
            if fam.genus() != g {
                return Err(Error::InvariantViolation(format!(
                    "family {fam} was enumerated for genus {g}"
                )));
            }
            Ok(fam)
        })
        .collect()
}

/// The branch exponents of a family as a census tuple.
pub fn family_exponent_tuple(fam: &GSFamily) -> ExponentTuple {
    let exps: Vec<u64> = fam
        .orbits()
        .iter()
        .filter(|o| o.exponent % fam.n() != 0)
        .flat_map(|o| std::iter::repeat_n(o.exponent, o.size as usize))
        .collect();
    ExponentTuple::new(fam.n(), exps, true).expect("built families have valid branch data")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_identify_relabellings() {
        let c = ReducedGroup::Cyclic(2);
        let a = family_key(5, c, &ExponentData::new(0, vec![], vec![1, 4, 2, 3])).unwrap();
        let b = family_key(5, c, &ExponentData::new(0, vec![], vec![2, 3, 4, 1])).unwrap();
        assert_eq!(a, b);
        let d = ReducedGroup::Dihedral(2);
        let a = family_key(2, d, &ExponentData::new(1, vec![0, 1], vec![1])).unwrap();
        let b = family_key(2, d, &ExponentData::new(0, vec![1, 1], vec![1])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn genus_two_census() {
        let fams = gs_census(2, None).unwrap();
        assert!(fams.iter().all(|f| f.genus() == 2));
        assert!(fams
            .iter()
            .any(|f| f.group() == ReducedGroup::Octahedral && f.n() == 2));
        let mut keys: Vec<_> = fams
            .iter()
            .map(|f| family_key(f.n(), f.group(), f.exponents()).unwrap())
            .collect();
        let before = keys.len();
        keys.dedup();
        assert_eq!(keys.len(), before);
    }
}
