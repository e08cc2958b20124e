//! Is `H = ⟨τ⟩` the only generalized superelliptic group of level `n`?
//!
//! A second one can only exist for even `n = 2d` on curves of the shape
//! `y^{2d} = x^2 (x^2-1)^{l1} (x^2-a_1^2)^{l2} ∏ (x^2-a_j^2)^{2 l̂_j}`, where
//! `η(x, y) = (-x, ω_{2d} y)` commutes with `τ`. The shape is necessary,
//! not sufficient, so a match is reported as "possibly non-unique".

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{CycNumber, MoebiusMap, Poly, RatFunc};
use crate::census::units_mod;
use crate::error::{Error, Result};
use crate::signatures::{genus_of_branch_data, riemann_hurwitz_genus, Signature};
use crate::superelliptic::{
    build_family, Action, AutPresentation, CurveEquation, ExponentData, GSFamily, ReducedGroup,
    StatedPower,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UniquenessRule {
    /// `n = 2` or `n` odd.
    LevelTwoOrOdd,
    /// `Ḡ` has no nontrivial central element: Platonic, or dihedral of
    /// order not divisible by 4.
    CenterlessReducedGroup,
    /// `n` even and `X → X/H` has no cone point of order `n/2`.
    NoHalfLevelCone,
    /// The equation does not have the exceptional shape.
    NotExceptional,
}

impl fmt::Display for UniquenessRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            UniquenessRule::LevelTwoOrOdd => "level_two_or_odd",
            UniquenessRule::CenterlessReducedGroup => "centerless_reduced_group",
            UniquenessRule::NoHalfLevelCone => "no_half_level_cone",
            UniquenessRule::NotExceptional => "not_exceptional",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExceptionalCase {
    /// `l2 = 2 l̂2` even.
    EvenSecond,
    /// `l2` odd with `l1 + l2 = 2d`.
    OddSecond,
}

/// Parameters of an exceptional shape, after replacing `τ` by `τ^unit` so
/// that the exponent of `x` is 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalData {
    pub d: u64,
    pub l1: u64,
    pub l2: u64,
    /// `l̂_3, …, l̂_L`.
    pub hats: Vec<u64>,
    pub case: ExceptionalCase,
    pub unit: u64,
    /// The matched equation with exponents multiplied by `unit`.
    pub equation: CurveEquation,
    pub warnings: Vec<String>,
}

impl ExceptionalData {
    pub fn n(&self) -> u64 {
        2 * self.d
    }

    /// `η(x, y) = (-x, ω_{2d} y)`.
    pub fn eta(&self) -> Action {
        Action::new(
            MoebiusMap::scaling(CycNumber::from_int(-1)),
            RatFunc::constant(CycNumber::zeta(self.n() as u32)),
        )
    }

    /// `K = ⟨τ, η⟩` with the relation `η^2 = τ^2` computed by composition.
    pub fn presentation(&self) -> AutPresentation {
        let mut pres = AutPresentation::new(self.n());
        let eta = pres.push_generator("eta", self.eta());
        pres.push_relation(vec![eta], 2, StatedPower::Exact(2));
        pres
    }

    /// `1 + l1 + l2 + 2 Σ l̂_j`.
    fn weight(&self) -> u64 {
        1 + self.l1 + self.l2 + 2 * self.hats.iter().sum::<u64>()
    }

    /// Exponents at every branch point of the matched equation (∞ last).
    pub fn branch_data(&self) -> Vec<u64> {
        let n = self.n();
        let mut v = vec![2, self.l1, self.l1, self.l2, self.l2];
        for &h in &self.hats {
            v.extend([2 * h, 2 * h]);
        }
        let inf = (n - 2 * self.weight() % n) % n;
        if inf != 0 {
            v.push(inf);
        }
        v
    }

    pub fn genus(&self) -> Result<u64> {
        genus_of_branch_data(self.n(), &self.branch_data())
    }
}

/// The curve `y^{2d} = x^2 (x^2-1)^{l1} (x^2-a_1^2)^{l2} ∏ (x^2-a_j^2)^{2 l̂_j}`
/// as a family with reduced group `C_2` (sample `a_j`).
pub fn exceptional_family(d: u64, l1: u64, l2: u64, hats: &[u64]) -> Result<GSFamily> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("d = {d} is below 2")));
    }
    let mut orbits = vec![l1, l2];
    orbits.extend(hats.iter().map(|h| 2 * h));
    build_family(
        2 * d,
        ReducedGroup::Cyclic(2),
        &ExponentData::new(2, vec![], orbits),
    )
}

/// Whether a polynomial only involves even powers of `x`.
fn is_even_poly(p: &Poly) -> bool {
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(k, c)| k % 2 == 0 || c.is_zero())
}

/// Matches the exceptional shape on the family's equation.
pub fn is_exceptional_shape(fam: &GSFamily) -> Option<ExceptionalData> {
    let n = fam.n();
    if !n.is_multiple_of(2) || n < 4 {
        return None;
    }
    let d = n / 2;
    let eq = fam.equation();
    let x = Poly::x();
    let x_exp = eq
        .factors()
        .iter()
        .find(|(p, _)| *p == x)
        .map(|(_, e)| *e)?;
    // every other factor must be a polynomial in x^2, giving deg/2 root
    // pairs {±a} with a common exponent
    let mut pairs: Vec<u64> = Vec::new();
    for (p, e) in eq.factors() {
        if *p == x {
            continue;
        }
        if !is_even_poly(p) || p.coeff(0).is_zero() {
            return None;
        }
        let deg = p.degree().unwrap_or(0) as u64;
        pairs.extend(std::iter::repeat_n(*e, (deg / 2) as usize));
    }
    for u in units_mod(n) {
        if u * x_exp % n != 2 {
            continue;
        }
        let scaled: Vec<u64> = pairs.iter().map(|&e| u * e % n).collect();
        if let Some(data) = match_pairs(d, &scaled) {
            let (l1, l2, hats, case) = data;
            let factors = eq
                .factors()
                .iter()
                .map(|(p, e)| (p.clone(), u * e % n))
                .collect();
            let mut out = ExceptionalData {
                d,
                l1,
                l2,
                hats,
                case,
                unit: u,
                equation: CurveEquation::new_unchecked(n, factors),
                warnings: vec![],
            };
            out.warnings = closed_form_warnings(&out);
            return Some(out);
        }
    }
    None
}

type PairMatch = (u64, u64, Vec<u64>, ExceptionalCase);

fn match_pairs(d: u64, pairs: &[u64]) -> Option<PairMatch> {
    let (odd, even): (Vec<u64>, Vec<u64>) = pairs.iter().partition(|&&e| e % 2 == 1);
    match odd.as_slice() {
        [l1] => {
            let (&l2, rest) = even.split_first()?;
            let hats: Vec<u64> = rest.iter().map(|e| e / 2).collect();
            let g = hats.iter().fold(d.gcd(l1).gcd(&(l2 / 2)), |g, h| g.gcd(h));
            (g == 1).then_some((*l1, l2, hats, ExceptionalCase::EvenSecond))
        }
        [a, b] => {
            if a + b != 2 * d {
                return None;
            }
            let hats: Vec<u64> = even.iter().map(|e| e / 2).collect();
            let g = hats.iter().fold(d.gcd(a).gcd(b), |g, h| g.gcd(h));
            (g == 1).then(|| (*a.min(b), *a.max(b), hats, ExceptionalCase::OddSecond))
        }
        _ => None,
    }
}

/// Signature of `X/K`, `K = ⟨τ, η⟩`, checked against Riemann-Hurwitz with
/// `|K| = 4d`. With `S = 1 + l1 + l2 + 2 Σ l̂_j` the point `x = ∞` gives a
/// cone of order `2d / gcd(d, S)`, which is 2 exactly when `S ≡ 0 mod d`.
pub fn exceptional_quotient_signature(data: &ExceptionalData) -> Result<Signature> {
    let d = data.d;
    let n = 2 * d;
    let mut orders = vec![
        n,
        n / d.gcd(&data.weight()),
        n / n.gcd(&data.l1),
        n / n.gcd(&data.l2),
    ];
    orders.extend(data.hats.iter().map(|h| d / d.gcd(h)));
    let sig = Signature::sphere_dropping_ones(orders);
    let direct = data.genus()?;
    let rh = riemann_hurwitz_genus(4 * d, &sig)
        .map_err(|e| Error::InvariantViolation(format!("X/K signature {sig}: {e}")))?;
    if rh != direct {
        return Err(Error::InvariantViolation(format!(
            "X/K signature {sig} gives genus {rh}, branch data gives {direct}"
        )));
    }
    Ok(sig)
}

/// The closed-form `X/K` signature and genus expressions, for comparison.
fn closed_form_warnings(data: &ExceptionalData) -> Vec<String> {
    let d = data.d;
    let n = 2 * d;
    let hat_sum: u64 = data.hats.iter().sum();
    let first = data.weight().is_multiple_of(d);
    let mut orders = vec![2, n, n / n.gcd(&data.l1), n / n.gcd(&data.l2)];
    orders.extend(data.hats.iter().map(|h| d / d.gcd(h)));
    if !first {
        orders.push(d / d.gcd(&(1 + data.l1 + data.l2 + hat_sum)));
    }
    let stated = Signature::sphere_dropping_ones(orders);
    let l_count = 2 + data.hats.len() as i64;
    let g_hat: i64 = data.hats.iter().map(|h| d.gcd(h) as i64).sum();
    let base = -(n.gcd(&data.l1) as i64) - n.gcd(&data.l2) as i64 - 2 * g_hat;
    let stated_genus = if first {
        n as i64 * (1 + l_count) + base
    } else {
        d as i64 * (3 + 2 * l_count) + base - d.gcd(&data.weight()) as i64
    };
    let mut out = Vec::new();
    let direct = data.genus().ok();
    if let Some(g) = direct {
        if stated_genus != g as i64 {
            out.push(format!(
                "closed-form genus expression gives {stated_genus}; branch data gives {g}"
            ));
        }
        match riemann_hurwitz_genus(4 * d, &stated) {
            Ok(rh) if rh == g => {}
            _ => out.push(format!(
                "closed-form X/K signature {stated} is inconsistent with genus {g}"
            )),
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum UniquenessVerdict {
    Unique { rule: UniquenessRule },
    PossiblyNonUnique { witness: Box<ExceptionalData> },
}

impl UniquenessVerdict {
    pub fn is_unique(&self) -> bool {
        matches!(self, UniquenessVerdict::Unique { .. })
    }
}

impl fmt::Display for UniquenessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniquenessVerdict::Unique { rule } => write!(f, "unique ({rule})"),
            UniquenessVerdict::PossiblyNonUnique { witness } => write!(
                f,
                "possibly non-unique (d = {}, l1 = {}, l2 = {})",
                witness.d, witness.l1, witness.l2
            ),
        }
    }
}

/// Rules in order: level 2 or odd; centerless reduced group; no cone
/// point of order `n/2`; otherwise the exceptional-shape test decides.
pub fn uniqueness_verdict(fam: &GSFamily) -> UniquenessVerdict {
    let n = fam.n();
    let unique = |rule| UniquenessVerdict::Unique { rule };
    if n == 2 || n % 2 == 1 {
        return unique(UniquenessRule::LevelTwoOrOdd);
    }
    match fam.group() {
        g if g.is_platonic() => return unique(UniquenessRule::CenterlessReducedGroup),
        ReducedGroup::Dihedral(m) if m % 2 == 1 => {
            return unique(UniquenessRule::CenterlessReducedGroup)
        }
        _ => {}
    }
    if !fam.sig_h().cone_orders().contains(&(n / 2)) {
        return unique(UniquenessRule::NoHalfLevelCone);
    }
    match is_exceptional_shape(fam) {
        Some(w) => UniquenessVerdict::PossiblyNonUnique {
            witness: Box::new(w),
        },
        None => unique(UniquenessRule::NotExceptional),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superelliptic::{abelian_invariants, apply_automorphism};

    #[test]
    fn d2_example_matches() {
        let fam = exceptional_family(2, 1, 2, &[]).unwrap();
        assert_eq!(fam.genus(), 3);
        let w = is_exceptional_shape(&fam).unwrap();
        assert_eq!(
            (w.d, w.l1, w.l2, w.case),
            (2, 1, 2, ExceptionalCase::EvenSecond)
        );
        assert!(apply_automorphism(&w.equation, &w.eta()));
        assert_eq!(abelian_invariants(&w.presentation()).unwrap(), vec![2, 4]);
        assert_eq!(
            exceptional_quotient_signature(&w).unwrap().to_string(),
            "(0; 2, 2, 4, 4)"
        );
        assert!(!uniqueness_verdict(&fam).is_unique());
        assert!(w.warnings.iter().any(|s| s.contains("gives 9")));
    }

    #[test]
    fn odd_second_case() {
        let fam = exceptional_family(2, 1, 3, &[]).unwrap();
        let w = is_exceptional_shape(&fam).unwrap();
        assert_eq!(w.case, ExceptionalCase::OddSecond);
        assert_eq!(
            exceptional_quotient_signature(&w).unwrap().to_string(),
            "(0; 4, 4, 4, 4)"
        );
    }

    #[test]
    fn mismatches() {
        // odd level
        let fam = build_family(
            5,
            ReducedGroup::Cyclic(2),
            &ExponentData::new(2, vec![], vec![1, 2]),
        )
        .unwrap();
        assert!(is_exceptional_shape(&fam).is_none());
        assert_eq!(
            uniqueness_verdict(&fam),
            UniquenessVerdict::Unique {
                rule: UniquenessRule::LevelTwoOrOdd
            }
        );
        // y^6 = (x^3 - 1)(x^3 - 8)^5: no x factor
        let fam = build_family(
            6,
            ReducedGroup::Cyclic(3),
            &ExponentData::new(0, vec![], vec![1, 5]),
        )
        .unwrap();
        assert!(is_exceptional_shape(&fam).is_none());
    }

    #[test]
    fn superelliptic_level_four() {
        let fam = build_family(
            4,
            ReducedGroup::Cyclic(2),
            &ExponentData::new(0, vec![], vec![1, 1, 1, 1]),
        )
        .unwrap();
        assert_eq!(
            uniqueness_verdict(&fam),
            UniquenessVerdict::Unique {
                rule: UniquenessRule::NoHalfLevelCone
            }
        );
    }
}
