//! Enumeration of cyclic `n`-gonal branch data of a given genus, canonical
//! forms of exponent tuples, and isomorphism search between concrete curves.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{CycNumber, ExtPoint, MoebiusMap, Rational};
use crate::error::{Error, Result};
use crate::signatures::{genus_from_exponents, harvey_check, Signature};

/// `(n, r; n_1 ≤ … ≤ n_r)`: a level together with admissible cone orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignatureTuple {
    pub n: u64,
    pub orders: Vec<u64>,
}

impl SignatureTuple {
    pub fn r(&self) -> usize {
        self.orders.len()
    }

    /// The quotient signature `(0; n_1, …, n_r)`.
    pub fn signature(&self) -> Signature {
        Signature::new(0, self.orders.clone()).expect("orders are at least 2")
    }

    /// Genus forced by the tuple, when integral.
    pub fn genus(&self) -> Option<u64> {
        crate::signatures::riemann_hurwitz_genus(self.n, &self.signature()).ok()
    }
}

impl fmt::Display for SignatureTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o: Vec<String> = self.orders.iter().map(u64::to_string).collect();
        write!(f, "({}; {})", self.n, o.join(","))
    }
}

/// Exponents `(l_1, …, l_s)` over every branch point, the last one being the
/// exponent at ∞ when `infinity_included` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentTuple {
    n: u64,
    exps: Vec<u64>,
    infinity_included: bool,
}

impl ExponentTuple {
    pub fn new(n: u64, exps: Vec<u64>, infinity_included: bool) -> Result<Self> {
        validate_exponents(n, &exps)?;
        Ok(Self {
            n,
            exps,
            infinity_included,
        })
    }

    /// Takes the exponents at finite branch points and appends the exponent
    /// at ∞ (`-Σ l_j mod n`) when the finite sum is not divisible by `n`.
    pub fn from_finite(n: u64, finite: &[u64]) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("level {n} is below 2")));
        }
        let sum: u64 = finite.iter().map(|l| l % n).sum::<u64>() % n;
        let mut exps = finite.to_vec();
        let inf = sum != 0;
        if inf {
            exps.push(n - sum);
        }
        Self::new(n, exps, inf)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn infinity_included(&self) -> bool {
        self.infinity_included
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// Positional cone orders `n / gcd(n, l_j)`.
    pub fn orders(&self) -> Vec<u64> {
        self.exps.iter().map(|&l| self.n / self.n.gcd(&l)).collect()
    }

    /// The result of `l_j ↦ u · l_{η(j)} mod n`.
    pub fn act(&self, unit: u64, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.exps.len(), "permutation size mismatch");
        Self {
            n: self.n,
            exps: perm
                .iter()
                .map(|&p| (unit * self.exps[p]) % self.n)
                .collect(),
            infinity_included: false,
        }
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.exps.iter().map(u64::to_string).collect();
        write!(f, "({}; {})", self.n, e.join(","))
    }
}

fn validate_exponents(n: u64, exps: &[u64]) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("level {n} is below 2")));
    }
    if let Some(bad) = exps.iter().find(|&&l| l == 0 || l >= n) {
        return Err(Error::InvalidInput(format!(
            "exponent {bad} is outside 1..{}",
            n - 1
        )));
    }
    if exps.iter().sum::<u64>() % n != 0 {
        return Err(Error::InvalidInput(format!(
            "exponents {exps:?} do not sum to 0 mod {n}"
        )));
    }
    if exps.iter().fold(n, |g, &l| g.gcd(&l)) != 1 {
        return Err(Error::InvalidInput(format!(
            "gcd of {n} and the exponents {exps:?} is not 1"
        )));
    }
    Ok(())
}

pub fn units_mod(n: u64) -> Vec<u64> {
    (1..n.max(2)).filter(|u| u.gcd(&n) == 1).collect()
}

fn proper_divisors_at_least_two(n: u64) -> Vec<u64> {
    (2..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Appendix conditions (1)–(6) for a candidate tuple of genus `g`.
pub fn is_admissible_tuple(g: u64, t: &SignatureTuple) -> bool {
    let n = t.n;
    let r = t.orders.len();
    if n < 2 || r < 3 {
        return false;
    }
    if t.orders.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    if t.orders.iter().any(|&o| o < 2 || !n.is_multiple_of(o)) {
        return false;
    }
    if !harvey_check(n, &t.orders).unwrap_or(false) {
        return false;
    }
    // 2(g-1) = n (r - 2 - Σ 1/n_j)
    let mut rhs = Rational::from_integer((r as i64 - 2).into());
    for &o in &t.orders {
        rhs -= Rational::new(1.into(), (o as i64).into());
    }
    rhs *= Rational::from_integer((n as i64).into());
    rhs == Rational::from_integer((2 * (g as i64 - 1)).into())
}

/// All tuples of genus `g` with `n ≤ max_n` (default `4g + 2`), sorted by
/// `(n, r, orders)`.
pub fn enumerate_fg(g: u64, max_n: Option<u64>) -> Vec<SignatureTuple> {
    assert!(g >= 2, "genus must be at least 2");
    let max_n = max_n.unwrap_or(4 * g + 2);
    let per_n: Vec<Vec<SignatureTuple>> = (2..=max_n)
        .into_par_iter()
        .map(|n| {
            let divs = proper_divisors_at_least_two(n);
            let r_max = 4 + (4 * (g - 1)) / n;
            let mut out = Vec::new();
            for r in 3..=r_max as usize {
                let mut current = Vec::with_capacity(r);
                multisets(&divs, r, 0, &mut current, &mut |orders| {
                    let t = SignatureTuple {
                        n,
                        orders: orders.to_vec(),
                    };
                    if is_admissible_tuple(g, &t) {
                        out.push(t);
                    }
                });
            }
            out
        })
        .collect();
    per_n.into_iter().flatten().collect()
}

fn multisets(
    pool: &[u64],
    len: usize,
    start: usize,
    current: &mut Vec<u64>,
    emit: &mut dyn FnMut(&[u64]),
) {
    if current.len() == len {
        emit(current);
        return;
    }
    for i in start..pool.len() {
        current.push(pool[i]);
        multisets(pool, len, i, current, emit);
        current.pop();
    }
}

/// All positional exponent tuples for `t`: `l_j ∈ {1..n-1}` with
/// `gcd(n, l_j) = n/n_j` and `Σ l_j ≡ 0 mod n`.
pub fn enumerate_exponents(t: &SignatureTuple) -> Vec<ExponentTuple> {
    let n = t.n;
    let choices: Vec<Vec<u64>> = t
        .orders
        .iter()
        .map(|&o| (1..n).filter(|&l| n.gcd(&l) == n / o).collect())
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(choices.len());
    product(&choices, n, 0, &mut current, &mut out);
    out
}

fn product(
    choices: &[Vec<u64>],
    n: u64,
    sum: u64,
    cur: &mut Vec<u64>,
    out: &mut Vec<ExponentTuple>,
) {
    let k = cur.len();
    if k == choices.len() {
        if sum.is_multiple_of(n) && cur.iter().fold(n, |g, &l| g.gcd(&l)) == 1 {
            out.push(ExponentTuple {
                n,
                exps: cur.clone(),
                infinity_included: false,
            });
        }
        return;
    }
    for &l in &choices[k] {
        cur.push(l);
        product(choices, n, (sum + l) % n, cur, out);
        cur.pop();
    }
}

/// Lexicographically least representative of the orbit of `e` under unit
/// multiplication and cone-order preserving relabelling. Positions are
/// grouped into blocks of equal cone order (ascending), values sorted
/// inside each block.
pub fn canonical_exponent_form(e: &ExponentTuple) -> ExponentTuple {
    let n = e.n;
    let mut positions: Vec<usize> = (0..e.exps.len()).collect();
    let orders = e.orders();
    positions.sort_by_key(|&i| orders[i]);
    let block_bounds: Vec<(usize, usize)> = {
        let mut b = Vec::new();
        let mut i = 0;
        while i < positions.len() {
            let o = orders[positions[i]];
            let j = i + positions[i..]
                .iter()
                .take_while(|&&p| orders[p] == o)
                .count();
            b.push((i, j));
            i = j;
        }
        b
    };
    let mut best: Option<Vec<u64>> = None;
    for u in units_mod(n) {
        let mut cand: Vec<u64> = positions.iter().map(|&p| (u * e.exps[p]) % n).collect();
        for &(a, b) in &block_bounds {
            cand[a..b].sort_unstable();
        }
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    ExponentTuple {
        n,
        exps: best.unwrap_or_default(),
        infinity_included: false,
    }
}

pub fn are_equivalent_tuples(e1: &ExponentTuple, e2: &ExponentTuple) -> bool {
    e1.n == e2.n
        && e1.exps.len() == e2.exps.len()
        && canonical_exponent_form(e1) == canonical_exponent_form(e2)
}

pub fn genus_of_tuple(e: &ExponentTuple) -> Result<u64> {
    genus_from_exponents(e.n, e)
}

/// A concrete curve `y^n = ∏ (x - a_j)^{l_j}` given by its branch points
/// (∞ allowed once) and the exponent at each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchedCurve {
    pub n: u64,
    pub points: Vec<ExtPoint>,
    pub exponents: Vec<u64>,
}

impl BranchedCurve {
    /// Validates the data; when ∞ is absent and the exponent sum is not
    /// divisible by `n`, ∞ is appended with the balancing exponent.
    pub fn new(n: u64, points: Vec<ExtPoint>, exponents: Vec<u64>) -> Result<Self> {
        if points.len() != exponents.len() {
            return Err(Error::InvalidInput(format!(
                "{} branch points but {} exponents",
                points.len(),
                exponents.len()
            )));
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DegenerateInput(format!(
                        "branch point {} repeated",
                        points[i]
                    )));
                }
            }
        }
        let mut points = points;
        let mut exponents = exponents;
        let has_inf = points.iter().any(ExtPoint::is_infinity);
        let sum = exponents.iter().sum::<u64>() % n.max(1);
        if !has_inf && sum != 0 {
            points.push(ExtPoint::Infinity);
            exponents.push(n - sum);
        }
        validate_exponents(n, &exponents)?;
        Ok(Self {
            n,
            points,
            exponents,
        })
    }

    pub fn exponent_tuple(&self) -> ExponentTuple {
        ExponentTuple {
            n: self.n,
            exps: self.exponents.clone(),
            infinity_included: false,
        }
    }

    pub fn genus(&self) -> Result<u64> {
        genus_of_tuple(&self.exponent_tuple())
    }
}

/// Witness `(M, η, u)`: `a'_j = M(a_{η(j)})` and `l'_j ≡ u · l_{η(j)} mod n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub moebius: MoebiusMap,
    pub permutation: Vec<usize>,
    pub unit: u64,
}

impl IsoWitness {
    /// Checks the witness condition by condition.
    pub fn validates(&self, c1: &BranchedCurve, c2: &BranchedCurve) -> bool {
        let s = c1.points.len();
        if c2.points.len() != s || self.permutation.len() != s || c1.n != c2.n {
            return false;
        }
        if self.unit.gcd(&c1.n) != 1 {
            return false;
        }
        let mut seen = vec![false; s];
        for &p in &self.permutation {
            if p >= s || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..s).all(|j| {
            let i = self.permutation[j];
            c2.points[j] == self.moebius.apply(&c1.points[i])
                && c2.exponents[j] % c1.n == (self.unit * c1.exponents[i]) % c1.n
        })
    }
}

/// Searches for an isomorphism between two concrete curves of the same
/// level: the first three branch points of `c1` are sent to every ordered
/// triple of branch points of `c2`.
pub fn are_isomorphic_curves(c1: &BranchedCurve, c2: &BranchedCurve) -> Option<IsoWitness> {
    let s = c1.points.len();
    if c1.n != c2.n || s != c2.points.len() || s < 3 {
        return None;
    }
    let n = c1.n;
    let src = [
        c1.points[0].clone(),
        c1.points[1].clone(),
        c1.points[2].clone(),
    ];
    let units = units_mod(n);
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                if i == j || j == k || i == k {
                    continue;
                }
                let dst = [
                    c2.points[i].clone(),
                    c2.points[j].clone(),
                    c2.points[k].clone(),
                ];
                let Ok(m) = MoebiusMap::from_three_points(&src, &dst) else {
                    continue;
                };
                let Some(perm) = induced_permutation(&m, c1, c2) else {
                    continue;
                };
                for &u in &units {
                    let ok =
                        (0..s).all(|jj| c2.exponents[jj] % n == (u * c1.exponents[perm[jj]]) % n);
                    if ok {
                        return Some(IsoWitness {
                            moebius: m,
                            permutation: perm,
                            unit: u,
                        });
                    }
                }
            }
        }
    }
    None
}

/// `η` with `c2.points[j] = M(c1.points[η(j)])`, when `M` maps one branch
/// set onto the other.
fn induced_permutation(
    m: &MoebiusMap,
    c1: &BranchedCurve,
    c2: &BranchedCurve,
) -> Option<Vec<usize>> {
    let s = c1.points.len();
    let mut perm = vec![usize::MAX; s];
    for (i, p) in c1.points.iter().enumerate() {
        let image = m.apply(p);
        let j = c2.points.iter().position(|q| *q == image)?;
        perm[j] = i;
    }
    perm.iter().all(|&p| p != usize::MAX).then_some(perm)
}

/// One census row: a signature tuple with its exponent classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleClasses {
    pub tuple: SignatureTuple,
    pub genus: u64,
    /// Orbit representatives under units and relabelling; these are
    /// equivalence classes of pairs (X, H), not of curves.
    pub exponent_classes: Vec<ExponentTuple>,
}

/// Exponent classes for each tuple of genus `g`, in enumeration order.
pub fn census_classes(g: u64, max_n: Option<u64>) -> Result<Vec<TupleClasses>> {
    enumerate_fg(g, max_n)
        .into_par_iter()
        .map(|t| {
            let classes: BTreeSet<ExponentTuple> = enumerate_exponents(&t)
                .iter()
                .map(canonical_exponent_form)
                .collect();
            let exponent_classes: Vec<ExponentTuple> = classes.into_iter().collect();
            for e in &exponent_classes {
                let eg = genus_of_tuple(e)?;
                if eg != g {
                    return Err(Error::InvariantViolation(format!(
                        "tuple {t} of genus {g} has exponent class {e} of genus {eg}"
                    )));
                }
            }
            Ok(TupleClasses {
                tuple: t,
                genus: g,
                exponent_classes,
            })
        })
        .collect()
}

/// Convenience for building concrete points from small integers.
pub fn int_point(v: i64) -> ExtPoint {
    ExtPoint::Finite(CycNumber::from_int(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(n: u64, o: &[u64]) -> SignatureTuple {
        SignatureTuple {
            n,
            orders: o.to_vec(),
        }
    }

    fn et(n: u64, e: &[u64]) -> ExponentTuple {
        ExponentTuple::new(n, e.to_vec(), false).unwrap()
    }

    #[test]
    fn genus_two_tuples() {
        // sorted by (n, r, orders), so r = 3 precedes r = 4 at n = 6
        let got = enumerate_fg(2, None);
        let want = vec![
            st(2, &[2; 6]),
            st(3, &[3; 4]),
            st(4, &[2, 2, 4, 4]),
            st(5, &[5, 5, 5]),
            st(6, &[3, 6, 6]),
            st(6, &[2, 2, 3, 3]),
            st(8, &[2, 8, 8]),
            st(10, &[2, 5, 10]),
        ];
        assert_eq!(got, want);
        assert_eq!(enumerate_fg(2, Some(3)), want[..2].to_vec());
        let fives: Vec<_> = got.into_iter().filter(|t| t.n == 5).collect();
        assert_eq!(fives, vec![st(5, &[5, 5, 5])]);
    }

    #[test]
    fn exponent_enumeration() {
        assert_eq!(enumerate_exponents(&st(5, &[5, 5, 5])).len(), 12);
        assert_eq!(enumerate_exponents(&st(2, &[2; 6])), vec![et(2, &[1; 6])]);
        assert_eq!(
            enumerate_exponents(&st(4, &[2, 2, 4, 4])),
            vec![et(4, &[2, 2, 1, 3]), et(4, &[2, 2, 3, 1])]
        );
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(
            canonical_exponent_form(&et(5, &[2, 2, 1])).exps(),
            &[1, 1, 3]
        );
        assert_eq!(
            canonical_exponent_form(&et(5, &[3, 3, 4])).exps(),
            &[1, 1, 3]
        );
        assert_eq!(canonical_exponent_form(&et(2, &[1; 6])).exps(), &[1; 6]);
        assert!(are_equivalent_tuples(
            &et(8, &[1, 1, 2, 4]),
            &et(8, &[1, 1, 4, 2])
        ));
        assert!(are_equivalent_tuples(
            &et(5, &[1, 1, 3]),
            &et(5, &[2, 2, 1])
        ));
    }

    #[test]
    fn infinity_bookkeeping() {
        let mut finite = vec![2u64];
        finite.extend([1; 12]);
        let e = ExponentTuple::from_finite(4, &finite).unwrap();
        assert!(e.infinity_included());
        assert_eq!(*e.exps().last().unwrap(), 2);
        assert_eq!(genus_of_tuple(&e).unwrap(), 17);
    }

    #[test]
    fn isomorphism_examples() {
        let c1 = BranchedCurve::new(
            3,
            vec![int_point(0), int_point(1), int_point(2)],
            vec![1, 1, 1],
        )
        .unwrap();
        let c2 = BranchedCurve::new(
            3,
            vec![int_point(1), int_point(0), int_point(-1)],
            vec![1, 1, 1],
        )
        .unwrap();
        let w = are_isomorphic_curves(&c1, &c2).unwrap();
        assert!(w.validates(&c1, &c2));
        assert_eq!(w.moebius.apply(&int_point(0)), int_point(1));
        assert!(are_isomorphic_curves(&c1, &c1)
            .unwrap()
            .moebius
            .is_identity());

        let d1 = BranchedCurve::new(
            4,
            vec![int_point(0), int_point(1), int_point(2)],
            vec![1, 1, 1],
        )
        .unwrap();
        let d2 = BranchedCurve::new(
            4,
            vec![int_point(0), int_point(1), int_point(3)],
            vec![1, 1, 2],
        )
        .unwrap();
        assert!(are_isomorphic_curves(&d1, &d2).is_none());
    }
}
