//! Rational functions in lowest terms with a monic denominator.

use std::fmt;
use std::ops::{Div, Mul};

use serde::{Deserialize, Serialize};

use super::cyclotomic::CycNumber;
use super::moebius::MoebiusMap;
use super::poly::Poly;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RatFuncRepr", into = "RatFuncRepr")]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    numerator: Poly,
    denominator: Poly,
}

impl TryFrom<RatFuncRepr> for RatFunc {
    type Error = crate::Error;
    fn try_from(r: RatFuncRepr) -> crate::Result<Self> {
        if r.denominator.is_zero() {
            return Err(crate::Error::Parse("zero denominator".into()));
        }
        Ok(RatFunc::new(r.numerator, r.denominator))
    }
}

impl From<RatFunc> for RatFuncRepr {
    fn from(f: RatFunc) -> Self {
        RatFuncRepr {
            numerator: f.num,
            denominator: f.den,
        }
    }
}

impl RatFunc {
    /// Reduces `num/den`; panics when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self {
                num,
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading().cloned().expect("nonzero denominator");
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: CycNumber) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn one() -> Self {
        Self::constant(CycNumber::one())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value when the function is constant.
    pub fn as_constant(&self) -> Option<CycNumber> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of the zero rational function");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        // coprime inputs stay coprime under powers, so skip the gcd
        let num = base.num.pow(k);
        let den = base.den.pow(k);
        Self { num, den }
    }

    /// `f ∘ M` in lowest terms.
    pub fn compose(&self, m: &MoebiusMap) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let p = self.num.degree().unwrap_or(0);
        let q = self.den.degree().unwrap_or(0);
        let hp = self.num.homogenized_compose(m, p);
        let hq = self.den.homogenized_compose(m, q);
        let lin = Poly::new(vec![m.d().clone(), m.c().clone()]);
        if q >= p {
            Self::new(&hp * &lin.pow((q - p) as u32), hq)
        } else {
            Self::new(hp, &hq * &lin.pow((p - q) as u32))
        }
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv()
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_under_inversion() {
        let f = RatFunc::from_poly(Poly::from_ints(&[0, 0, 1]));
        let g = f.compose(&MoebiusMap::inversion());
        assert_eq!(g, RatFunc::new(Poly::one(), Poly::from_ints(&[0, 0, 1])));
    }

    #[test]
    fn lowest_terms() {
        let num = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[2, 1]);
        let den = Poly::from_ints(&[-3, 3]);
        let f = RatFunc::new(num, den);
        assert_eq!(f.denominator(), &Poly::one());
        assert_eq!(
            f.numerator(),
            &Poly::new(vec![CycNumber::from_frac(2, 3), CycNumber::from_frac(1, 3)])
        );
    }

    #[test]
    fn constant_detection() {
        let f = RatFunc::new(Poly::from_ints(&[2, 2]), Poly::from_ints(&[1, 1]));
        assert_eq!(f.as_constant(), Some(CycNumber::from_int(2)));
    }
}
