//! Curve equations `y^n = ∏ f_k(x)^{e_k}` and automorphism actions
//! `(x, y) ↦ (M(x), R(x)·y)` on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{CycNumber, FactoredRatFunc, MoebiusMap, Poly, RatFunc};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveEquation {
    n: u64,
    factors: Vec<(Poly, u64)>,
    includes_infinity: bool,
}

impl CurveEquation {
    /// Builds the equation; factors must be nonconstant, pairwise coprime,
    /// with exponents in `1..n`. Whether ∞ is a branch value follows from
    /// the degree-weighted exponent sum.
    pub fn new(n: u64, factors: Vec<(Poly, u64)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("level {n} is below 2")));
        }
        for (p, e) in &factors {
            if p.degree().unwrap_or(0) == 0 {
                return Err(Error::InvalidInput(format!("constant factor {p}")));
            }
            if *e == 0 || *e >= n {
                return Err(Error::InvalidInput(format!(
                    "exponent {e} of ({p}) is outside 1..{n}"
                )));
            }
        }
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                if !factors[i].0.gcd(&factors[j].0).is_constant() {
                    return Err(Error::InvalidInput(format!(
                        "factors ({}) and ({}) share a root",
                        factors[i].0, factors[j].0
                    )));
                }
            }
        }
        Ok(Self::new_unchecked(n, factors))
    }

    /// As [`CurveEquation::new`] without the coprimality test, for factor
    /// lists that are coprime by construction.
    pub(crate) fn new_unchecked(n: u64, factors: Vec<(Poly, u64)>) -> Self {
        let weighted: u64 = factors
            .iter()
            .map(|(p, e)| p.degree().unwrap_or(0) as u64 * e)
            .sum();
        Self {
            n,
            factors,
            includes_infinity: !weighted.is_multiple_of(n),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(Poly, u64)] {
        &self.factors
    }

    pub fn includes_infinity(&self) -> bool {
        self.includes_infinity
    }

    /// Exponent of the branch value ∞, or 0 when ∞ is not branched.
    pub fn infinity_exponent(&self) -> u64 {
        let weighted: u64 = self
            .factors
            .iter()
            .map(|(p, e)| p.degree().unwrap_or(0) as u64 * e)
            .sum();
        (self.n - weighted % self.n) % self.n
    }

    /// The right-hand side as a factored rational function.
    pub fn rhs(&self) -> FactoredRatFunc {
        self.factors
            .iter()
            .fold(FactoredRatFunc::one(), |acc, (p, e)| {
                acc.mul(&FactoredRatFunc::from_poly_pow(p, *e as i64))
            })
    }

    /// The right-hand side with `x` replaced by `M(x)`.
    pub fn rhs_composed(&self, m: &MoebiusMap) -> FactoredRatFunc {
        self.factors
            .iter()
            .fold(FactoredRatFunc::one(), |acc, (p, e)| {
                acc.mul(&FactoredRatFunc::poly_compose(p, m).pow(*e as i64))
            })
    }
}

impl fmt::Display for CurveEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^{} = ", self.n)?;
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (p, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            write!(f, "({p})^({e})")?;
        }
        Ok(())
    }
}

/// The `y`-multiplier of a generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Multiplier {
    Explicit {
        value: RatFunc,
    },
    /// Known to exist, not constructed.
    Unconstructed {
        description: String,
    },
}

impl Multiplier {
    pub fn explicit(f: RatFunc) -> Self {
        Multiplier::Explicit { value: f }
    }

    pub fn as_explicit(&self) -> Option<&RatFunc> {
        match self {
            Multiplier::Explicit { value } => Some(value),
            Multiplier::Unconstructed { .. } => None,
        }
    }
}

/// `(x, y) ↦ (M(x), R(x)·y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Action {
    pub moebius: MoebiusMap,
    pub multiplier: Multiplier,
}

impl Action {
    pub fn new(moebius: MoebiusMap, multiplier: RatFunc) -> Self {
        Self {
            moebius,
            multiplier: Multiplier::explicit(multiplier),
        }
    }

    /// `τ: (x, y) ↦ (x, ω_n y)`.
    pub fn tau(n: u64) -> Self {
        Self::new(
            MoebiusMap::identity(),
            RatFunc::constant(CycNumber::zeta(n as u32)),
        )
    }

    pub fn identity() -> Self {
        Self::new(MoebiusMap::identity(), RatFunc::one())
    }

    /// `self ∘ other`: apply `other` first. `None` if either multiplier is
    /// unconstructed.
    pub fn compose(&self, other: &Action) -> Option<Action> {
        let r2 = self.multiplier.as_explicit()?;
        let r1 = other.multiplier.as_explicit()?;
        let mult = &r2.compose(&other.moebius) * r1;
        Some(Action::new(self.moebius.compose(&other.moebius), mult))
    }

    pub fn pow(&self, k: u32) -> Option<Action> {
        let mut out = Action::identity();
        for _ in 0..k {
            out = self.compose(&out)?;
        }
        Some(out)
    }

    /// `R(M^{-1}(x))^{-1}` paired with `M^{-1}`.
    pub fn inverse(&self) -> Option<Action> {
        let r = self.multiplier.as_explicit()?;
        let minv = self.moebius.inverse();
        Some(Action::new(minv.clone(), r.compose(&minv).inv()))
    }

    /// If the action is `(x, y) ↦ (x, ω_n^k y)`, that `k`.
    pub fn as_tau_power(&self, n: u64) -> Option<u64> {
        if !self.moebius.same_map(&MoebiusMap::identity()) {
            return None;
        }
        let c = self.multiplier.as_explicit()?.as_constant()?;
        (0..n).find(|&k| CycNumber::zeta_pow(n as u32, k as i64) == c)
    }

    /// Same transformation of the curve.
    pub fn same_action(&self, other: &Action) -> Option<bool> {
        if !self.moebius.same_map(&other.moebius) {
            return Some(false);
        }
        let a = self.multiplier.as_explicit()?;
        let b = other.multiplier.as_explicit()?;
        Some(a == b)
    }
}

/// Whether `(x, y) ↦ (M(x), R(x)·y)` preserves `y^n = ∏ f_k^{e_k}`, i.e.
/// `R^n · ∏ f_k^{e_k} = ∏ f_k(M(x))^{e_k}` exactly. An unconstructed
/// multiplier cannot be checked and yields `false`.
pub fn apply_automorphism(eq: &CurveEquation, action: &Action) -> bool {
    let Some(r) = action.multiplier.as_explicit() else {
        return false;
    };
    if r.is_zero() {
        return false;
    }
    let lhs = FactoredRatFunc::from_ratfunc(r)
        .pow(eq.n() as i64)
        .mul(&eq.rhs());
    let rhs = eq.rhs_composed(&action.moebius);
    lhs.same_function(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genus17() -> CurveEquation {
        let p = Poly::from_ints;
        CurveEquation::new(
            4,
            vec![
                (p(&[0, 1]), 2),
                (p(&[-1, 0, 0, 0, 1]), 1),
                (p(&[-16, 0, 0, 0, 1]), 1),
                (p(&[-81, 0, 0, 0, 1]), 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn display_and_infinity() {
        let eq = genus17();
        assert_eq!(
            eq.to_string(),
            "y^4 = (x)^(2) * (x^4 - 1)^(1) * (x^4 - 16)^(1) * (x^4 - 81)^(1)"
        );
        assert!(eq.includes_infinity());
        assert_eq!(eq.infinity_exponent(), 2);
    }

    #[test]
    fn tau_preserves_everything() {
        assert!(apply_automorphism(&genus17(), &Action::tau(4)));
    }

    #[test]
    fn rotation_needs_the_right_multiplier() {
        let eq = genus17();
        let rot = MoebiusMap::scaling(CycNumber::i());
        let good = Action::new(rot.clone(), RatFunc::constant(CycNumber::zeta_pow(16, 2)));
        assert!(apply_automorphism(&eq, &good));
        let bad = Action::new(rot, RatFunc::one());
        assert!(!apply_automorphism(&eq, &bad));
    }

    #[test]
    fn shared_roots_rejected() {
        let p = Poly::from_ints;
        assert!(CurveEquation::new(3, vec![(p(&[-1, 0, 1]), 1), (p(&[-1, 1]), 1)]).is_err());
    }

    #[test]
    fn action_algebra() {
        let a = Action::new(
            MoebiusMap::scaling(CycNumber::i()),
            RatFunc::constant(CycNumber::zeta_pow(16, 2)),
        );
        assert_eq!(a.pow(4).unwrap().as_tau_power(4), Some(2));
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv).unwrap().as_tau_power(4), Some(0));
    }
}
