//! Dense univariate polynomials with cyclotomic coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::cyclotomic::CycNumber;
use super::moebius::MoebiusMap;

/// Coefficients are stored lowest degree first with no trailing zeros.
/// Each coefficient keeps its own (minimal useful) conductor; arithmetic joins
/// conductors lazily, and [`Poly::conductor`] reports the join.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<CycNumber>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(CycNumber::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(CycNumber::one(), 1)
    }

    pub fn constant(c: CycNumber) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: CycNumber, k: usize) -> Self {
        let mut coeffs = vec![CycNumber::zero(1); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `x - a`.
    pub fn linear_root(a: &CycNumber) -> Self {
        Self::new(vec![-a, CycNumber::one()])
    }

    pub fn new(mut coeffs: Vec<CycNumber>) -> Self {
        while coeffs.last().is_some_and(CycNumber::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| CycNumber::from_int(c)).collect())
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[CycNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> CycNumber {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| CycNumber::zero(1))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&CycNumber> {
        self.coeffs.last()
    }

    pub fn conductor(&self) -> u32 {
        self.coeffs
            .iter()
            .fold(1u32, |acc, c| acc.lcm(&c.conductor()))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(CycNumber::is_one)
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// The monic associate; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: &CycNumber) -> CycNumber {
        let mut acc = CycNumber::zero(1);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let db = divisor.degree().expect("polynomial division by zero");
        if self.coeffs.len() <= db {
            return (Self::zero(), self.clone());
        }
        let lead_inv = divisor.coeffs[db]
            .inv()
            .expect("nonzero leading coefficient");
        let monic_divisor = divisor.is_monic();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CycNumber::zero(1); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + db];
            if top.is_zero() {
                continue;
            }
            let q = if monic_divisor {
                top.clone()
            } else {
                top * &lead_inv
            };
            for (j, d) in divisor.coeffs.iter().enumerate().take(db) {
                if !d.is_zero() {
                    rem[i + j] = &rem[i + j] - &(&q * d);
                }
            }
            rem[i + db] = CycNumber::zero(1);
            quot[i] = q;
        }
        rem.truncate(db);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &CycNumber::from_int(k as i64))
                .collect(),
        )
    }

    /// `P(M(x))·(cx+d)^deg P`, the homogenized pull-back under a Möbius map.
    pub fn homogenized_compose(&self, m: &MoebiusMap, deg: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let num = Poly::new(vec![m.b().clone(), m.a().clone()]);
        let den = Poly::new(vec![m.d().clone(), m.c().clone()]);
        let mut den_pows = Vec::with_capacity(deg + 1);
        den_pows.push(Poly::one());
        for k in 1..=deg {
            let next = &den_pows[k - 1] * &den;
            den_pows.push(next);
        }
        // Horner in the pair (ax+b, cx+d)
        let mut acc = Poly::zero();
        for k in (0..=deg).rev() {
            acc = &acc * &num;
            let c = self.coeff(k);
            if !c.is_zero() {
                acc = &acc + &den_pows[deg - k].scale(&c);
            }
        }
        acc
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![CycNumber::zero(1); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

/// Descending powers, e.g. `x^4 - (4*z3 + 2)*x^2 + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = match c.to_rational() {
                Some(q) => {
                    let abs = q.abs();
                    let text = if abs.denom().is_one() {
                        abs.numer().to_string()
                    } else {
                        format!("{}/{}", abs.numer(), abs.denom())
                    };
                    (
                        q.is_negative(),
                        if k > 0 && abs.is_one() {
                            String::new()
                        } else {
                            text
                        },
                    )
                }
                None => (false, format!("({c})")),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            match (body.is_empty(), mono.is_empty()) {
                (true, _) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{body}")?,
                (false, false) => write!(f, "{body}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn division_and_gcd() {
        let a = &p(&[-1, 1]) * &p(&[2, 0, 1]); // (x-1)(x^2+2)
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (q, r) = a.div_rem(&p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, p(&[2, 0, 1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), Poly::one());
    }

    #[test]
    fn gcd_over_gaussian_field() {
        let i = CycNumber::i();
        let x_minus_i = Poly::linear_root(&i);
        let x2p1 = p(&[1, 0, 1]);
        assert_eq!(x2p1.gcd(&(&x_minus_i * &p(&[5, 1]))), x_minus_i);
    }

    #[test]
    fn homogenized_inversion() {
        // x^2 + 3x under x -> 1/x, homogenized: 1 + 3x
        let m = MoebiusMap::new(
            CycNumber::zero(1),
            CycNumber::one(),
            CycNumber::one(),
            CycNumber::zero(1),
        )
        .unwrap();
        assert_eq!(p(&[0, 3, 1]).homogenized_compose(&m, 2), p(&[1, 3]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -3, 1]).to_string(), "x^3 - 3*x^2 + 1");
        let q = Poly::new(vec![CycNumber::one(), CycNumber::i()]);
        assert_eq!(q.to_string(), "(z4)*x + 1");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
