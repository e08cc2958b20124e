//! Rational functions kept as `c · ∏ p_k^{e_k}` with monic bases.
//!
//! Large powers of equations are never expanded: equality is decided after
//! refining the bases into a pairwise coprime family, where the
//! representation is unique.

use num_traits::Zero;

use super::cyclotomic::CycNumber;
use super::moebius::MoebiusMap;
use super::poly::Poly;
use super::ratfunc::RatFunc;

#[derive(Clone, Debug)]
pub struct FactoredRatFunc {
    constant: CycNumber,
    factors: Vec<(Poly, i64)>,
}

impl FactoredRatFunc {
    pub fn one() -> Self {
        Self::constant(CycNumber::one())
    }

    pub fn constant(c: CycNumber) -> Self {
        assert!(!c.is_zero(), "factored form of zero");
        Self {
            constant: c,
            factors: vec![],
        }
    }

    pub fn from_poly(p: &Poly) -> Self {
        Self::from_poly_pow(p, 1)
    }

    pub fn from_poly_pow(p: &Poly, e: i64) -> Self {
        let lc = p.leading().expect("factored form of zero").clone();
        let mut out = Self::constant(lc.pow(e));
        if !p.is_constant() && e != 0 {
            out.factors.push((p.monic(), e));
        }
        out
    }

    pub fn from_ratfunc(f: &RatFunc) -> Self {
        Self::from_poly(f.numerator()).mul(&Self::from_poly_pow(f.denominator(), -1))
    }

    /// `p(M(x))` written as `H_p / (cx+d)^{deg p}`.
    pub fn poly_compose(p: &Poly, m: &MoebiusMap) -> Self {
        let deg = p.degree().expect("composition of the zero polynomial");
        let h = p.homogenized_compose(m, deg);
        let lin = Poly::new(vec![m.d().clone(), m.c().clone()]);
        Self::from_poly(&h).mul(&Self::from_poly_pow(&lin, -(deg as i64)))
    }

    pub fn constant_part(&self) -> &CycNumber {
        &self.constant
    }

    pub fn factors(&self) -> &[(Poly, i64)] {
        &self.factors
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Self {
            constant: &self.constant * &other.constant,
            factors,
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        Self {
            constant: self.constant.pow(e),
            factors: self
                .factors
                .iter()
                .filter(|_| e != 0)
                .map(|(p, k)| (p.clone(), k * e))
                .collect(),
        }
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// Rewrites the bases as a pairwise coprime family.
    pub fn refined(&self) -> Self {
        let mut items: Vec<(Poly, i64)> = self.factors.clone();
        loop {
            items = merge(items);
            let mut split = None;
            'search: for i in 0..items.len() {
                for j in i + 1..items.len() {
                    let g = items[i].0.gcd(&items[j].0);
                    if !g.is_constant() {
                        split = Some((i, j, g));
                        break 'search;
                    }
                }
            }
            let Some((i, j, g)) = split else { break };
            let (pj, ej) = items.remove(j);
            let (pi, ei) = items.remove(i);
            items.push((pi.div_exact(&g).expect("gcd divides"), ei));
            items.push((pj.div_exact(&g).expect("gcd divides"), ej));
            items.push((g, ei + ej));
        }
        Self {
            constant: self.constant.clone(),
            factors: items,
        }
    }

    /// The value when the function is constant.
    pub fn as_constant(&self) -> Option<CycNumber> {
        let r = self.refined();
        r.factors.is_empty().then_some(r.constant)
    }

    /// Exact equality of the represented functions.
    pub fn same_function(&self, other: &Self) -> bool {
        self.div(other).as_constant().is_some_and(|c| c.is_one())
    }

    /// Expands into a reduced rational function.
    pub fn to_ratfunc(&self) -> RatFunc {
        let r = self.refined();
        let mut num = Poly::constant(r.constant.clone());
        let mut den = Poly::one();
        for (p, e) in &r.factors {
            if *e > 0 {
                num = &num * &p.pow(*e as u32);
            } else {
                den = &den * &p.pow((-e) as u32);
            }
        }
        RatFunc::new(num, den)
    }
}

/// Merges equal bases, drops unit bases and zero exponents.
fn merge(items: Vec<(Poly, i64)>) -> Vec<(Poly, i64)> {
    let mut out: Vec<(Poly, i64)> = Vec::new();
    for (p, e) in items {
        // bases are monic, so a constant base is 1
        if p.is_constant() || e.is_zero() {
            continue;
        }
        match out.iter_mut().find(|(q, _)| *q == p) {
            Some(slot) => slot.1 += e,
            None => out.push((p, e)),
        }
    }
    out.retain(|(_, e)| *e != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refinement_cancels_shared_factors() {
        let a = Poly::from_ints(&[-1, 1]);
        let b = Poly::from_ints(&[1, 1]);
        let ab = &a * &b;
        // (x^2-1)^3 / ((x-1)^3 (x+1)^3) = 1
        let f = FactoredRatFunc::from_poly_pow(&ab, 3)
            .mul(&FactoredRatFunc::from_poly_pow(&a, -3))
            .mul(&FactoredRatFunc::from_poly_pow(&b, -3));
        assert_eq!(f.as_constant(), Some(CycNumber::one()));
    }

    #[test]
    fn expansion_matches() {
        let a = Poly::from_ints(&[2, 0, 2]);
        let f = FactoredRatFunc::from_poly_pow(&a, 2);
        assert_eq!(f.to_ratfunc(), RatFunc::from_poly(&a * &a));
        assert!(!f.same_function(&FactoredRatFunc::from_poly(&a)));
    }
}
