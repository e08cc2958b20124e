//! Elements of cyclotomic fields `Q(ζ_N)` in the power basis modulo `Φ_N`.
//!
//! Coefficients are stored as a shared integer numerator vector over one
//! positive denominator, which keeps multiplication free of per-coefficient
//! gcds. Mixed-conductor arithmetic lifts both operands to the lcm.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

/// Integer coefficients of `Φ_N`, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    // Φ_N = (x^N - 1) / ∏_{d | N, d < N} Φ_d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n as u64) {
        if d == n as u64 {
            continue;
        }
        let phi_d = cyclotomic_poly(d as u32);
        num = exact_monic_div(&num, &phi_d);
    }
    let arc = Arc::new(num);
    cache.lock().unwrap().insert(n, Arc::clone(&arc));
    arc
}

fn exact_monic_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// An element of the `N`-th cyclotomic field.
#[derive(Clone)]
pub struct CycNumber {
    conductor: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNumber {
    pub fn zero(conductor: u32) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        Self {
            conductor,
            num: vec![BigInt::zero(); euler_phi(conductor)],
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self {
            conductor: 1,
            num: vec![BigInt::from(v)],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(q: &Rational) -> Self {
        Self {
            conductor: 1,
            num: vec![q.numer().clone()],
            den: q.denom().clone(),
        }
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(&Rational::new(n.into(), d.into()))
    }

    /// Builds an element from power-basis coefficients of arbitrary length;
    /// the vector is reduced modulo `x^N - 1` and `Φ_N`.
    pub fn from_coeffs(conductor: u32, coeffs: &[Rational]) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_raw(conductor, num, den)
    }

    fn from_raw(conductor: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        let num = reduce(num, conductor);
        let mut out = Self {
            conductor,
            num,
            den,
        };
        out.normalize_content();
        out
    }

    /// `ζ_N^k` with `ζ_N = exp(2πi/N)`.
    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        let k = k.rem_euclid(conductor as i64) as usize;
        let mut num = vec![BigInt::zero(); k + 1];
        num[k] = BigInt::one();
        Self::from_raw(conductor, num, BigInt::one())
    }

    pub fn zeta(conductor: u32) -> Self {
        Self::zeta_pow(conductor, 1)
    }

    /// The imaginary unit `ζ_4`.
    pub fn i() -> Self {
        Self::zeta(4)
    }

    /// `√3·i = 2ζ_6 - 1`.
    pub fn sqrt3_i() -> Self {
        &(&Self::zeta(6) * &Self::from_int(2)) - &Self::one()
    }

    /// `√2 = ζ_8 + ζ_8^7`.
    pub fn sqrt2() -> Self {
        &Self::zeta(8) + &Self::zeta_pow(8, 7)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients, length `φ(N)`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Returns the rational value when the element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Re-expresses the element in `Q(ζ_M)`; `N` must divide `M`.
    pub fn embed(&self, target: u32) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.conductor) {
            return Err(Error::InvalidConductor {
                from: self.conductor,
                to: target,
            });
        }
        if target == self.conductor {
            return Ok(self.clone());
        }
        let step = (target / self.conductor) as usize;
        let mut num = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (k, c) in self.num.iter().enumerate() {
            num[k * step] = c.clone();
        }
        Ok(Self::from_raw(target, num, self.den.clone()))
    }

    fn lifted(&self, target: u32) -> Self {
        self.embed(target).expect("lcm conductor is a multiple")
    }

    /// The Galois automorphism `ζ_N ↦ ζ_N^k`, `gcd(k, N) = 1`.
    pub fn galois(&self, k: u32) -> Self {
        let n = self.conductor as usize;
        let mut num = vec![BigInt::zero(); n.max(1)];
        for (j, c) in self.num.iter().enumerate() {
            let idx = (j * k as usize) % n;
            num[idx] += c;
        }
        Self::from_raw(self.conductor, num, self.den.clone())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi: Vec<Rational> = cyclotomic_poly(self.conductor)
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        let a = self.coeffs();
        let s = rat_poly_inverse_mod(&a, &phi);
        Some(Self::from_coeffs(self.conductor, &s))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut base = self.clone();
        let mut acc = CycNumber::one();
        let mut e = e as u64;
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

    /// The same element written over the smallest possible conductor.
    pub fn normalized(&self) -> Self {
        if self.num[1..].iter().all(Zero::is_zero) {
            return Self {
                conductor: 1,
                num: vec![self.num[0].clone()],
                den: self.den.clone(),
            };
        }
        for m in divisors(self.conductor as u64) {
            let m = m as u32;
            if m == self.conductor {
                break;
            }
            if let Some(c) = self.express_in(m) {
                return c;
            }
        }
        self.clone()
    }

    fn express_in(&self, m: u32) -> Option<Self> {
        let rows = self.num.len();
        let cols = euler_phi(m);
        // columns: images of ζ_m^j in the power basis of conductor N
        let basis: Vec<Vec<Rational>> = (0..cols)
            .map(|j| {
                CycNumber::zeta_pow(m, j as i64)
                    .lifted(self.conductor)
                    .coeffs()
            })
            .collect();
        let target = self.coeffs();
        let mut mat: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> = basis.iter().map(|b| b[r].clone()).collect();
                row.push(target[r].clone());
                row
            })
            .collect();
        let sol = solve_linear(&mut mat, cols)?;
        let out = Self::from_coeffs(m, &sol);
        if out.lifted(self.conductor) == *self {
            Some(out)
        } else {
            None
        }
    }

    fn normalize_content(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    fn binary(&self, other: &Self, f: impl Fn(&Self, &Self) -> Self) -> Self {
        if self.conductor == other.conductor {
            f(self, other)
        } else {
            let l = lcm(self.conductor, other.conductor);
            f(&self.lifted(l), &other.lifted(l))
        }
    }
}

/// Reduces modulo `x^N - 1` and then the monic `Φ_N`, padding to `φ(N)`.
fn reduce(mut v: Vec<BigInt>, n: u32) -> Vec<BigInt> {
    let n_us = n as usize;
    if v.len() > n_us {
        for i in n_us..v.len() {
            let c = std::mem::take(&mut v[i]);
            if !c.is_zero() {
                v[i % n_us] += c;
            }
        }
        v.truncate(n_us);
    }
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    if v.len() > deg {
        for i in (deg..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[i]);
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    v[i - deg + j] -= &c * pj;
                }
            }
        }
        v.truncate(deg);
    }
    v.resize(deg, BigInt::zero());
    v
}

fn rat_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Inverse of `a` modulo `m` in `Q[x]` (extended Euclid); `a` and `m` coprime.
fn rat_poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    let mut r0: Vec<Rational> = m.to_vec();
    let mut r1: Vec<Rational> = a.to_vec();
    rat_trim(&mut r0);
    rat_trim(&mut r1);
    let mut s0: Vec<Rational> = vec![];
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while r1.len() > 1 {
        let (q, r) = rat_divrem(&r0, &r1);
        let qs1 = rat_mul(&q, &s1);
        let s2 = rat_sub(&s0, &qs1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    let c = r1[0].clone();
    s1.iter().map(|x| x / &c).collect()
}

fn rat_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead_inv = b[db].recip();
    let mut q = vec![Rational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lead_inv;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    rat_trim(&mut r);
    (q, r)
}

fn rat_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rat_trim(&mut out);
    out
}

fn rat_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    rat_trim(&mut out);
    out
}

/// Gaussian elimination on an augmented matrix with `cols` unknowns.
/// Returns `None` when the system is inconsistent.
fn solve_linear(mat: &mut [Vec<Rational>], cols: usize) -> Option<Vec<Rational>> {
    let rows = mat.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].recip();
        for v in mat[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in 0..=cols {
                    let t = &f * &mat[r][j];
                    mat[i][j] -= t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if mat[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        sol[c] = mat[i][cols].clone();
    }
    Some(sol)
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            self.den == other.den && self.num == other.num
        } else {
            let l = lcm(self.conductor, other.conductor);
            let (a, b) = (self.lifted(l), other.lifted(l));
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for CycNumber {}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        self.binary(rhs, |a, b| {
            let num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| x * &b.den + y * &a.den)
                .collect();
            let mut out = CycNumber {
                conductor: a.conductor,
                num,
                den: &a.den * &b.den,
            };
            out.normalize_content();
            out
        })
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self + &(-rhs)
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        if self.is_zero() || rhs.is_zero() {
            return CycNumber::zero(lcm(self.conductor, rhs.conductor));
        }
        // cheap path for rational scalars
        if self.conductor == 1 || rhs.conductor == 1 {
            let (s, v) = if self.conductor == 1 {
                (self, rhs)
            } else {
                (rhs, self)
            };
            let mut out = CycNumber {
                conductor: v.conductor,
                num: v.num.iter().map(|c| c * &s.num[0]).collect(),
                den: &v.den * &s.den,
            };
            out.normalize_content();
            return out;
        }
        self.binary(rhs, |a, b| {
            let mut num = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
            for (i, x) in a.num.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.num.iter().enumerate() {
                    if !y.is_zero() {
                        num[i + j] += x * y;
                    }
                }
            }
            CycNumber::from_raw(a.conductor, num, &a.den * &b.den)
        })
    }
}

impl<'a> Div<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &CycNumber) -> CycNumber {
        self * &rhs.inv().expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<i64> for CycNumber {
    fn from(v: i64) -> Self {
        CycNumber::from_int(v)
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNumber({})", self)
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Canonical text: terms in descending powers of `zN` over the minimal
/// conductor, e.g. `z12^2 - 1` or `-1/2*z5^3 + 2`.
impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let norm = self.normalized();
        if norm.is_zero() {
            return write!(f, "0");
        }
        let coeffs = norm.coeffs();
        let mut first = true;
        for (k, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", fmt_rational(&abs))?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{}*", fmt_rational(&abs))?;
            }
            if k == 1 {
                write!(f, "z{}", norm.conductor)?;
            } else {
                write!(f, "z{}^{}", norm.conductor, k)?;
            }
        }
        Ok(())
    }
}

impl FromStr for CycNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty cyclotomic literal".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = CycNumber::zero(1);
        for t in terms {
            acc = &acc + &parse_term(t)?;
        }
        Ok(acc)
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_term(t: &str) -> Result<CycNumber> {
    let (sign, body) = match t.as_bytes()[0] {
        b'-' => (-1, &t[1..]),
        b'+' => (1, &t[1..]),
        _ => (1, t),
    };
    let bad = || Error::Parse(format!("bad cyclotomic term `{t}`"));
    let (coef, zpart) = match body.find('z') {
        None => (parse_rational(body)?, None),
        Some(pos) => {
            let c = body[..pos].trim_end_matches('*');
            let c = if c.is_empty() {
                Rational::one()
            } else {
                parse_rational(c)?
            };
            (c, Some(&body[pos + 1..]))
        }
    };
    let coef = if sign < 0 { -coef } else { coef };
    let mut value = CycNumber::from_rational(&coef);
    if let Some(z) = zpart {
        let (cond, exp) = match z.split_once('^') {
            Some((c, e)) => (c, e.parse::<i64>().map_err(|_| bad())?),
            None => (z, 1),
        };
        let cond: u32 = cond.parse().map_err(|_| bad())?;
        if cond == 0 {
            return Err(bad());
        }
        value = &value * &CycNumber::zeta_pow(cond, exp);
    }
    Ok(value)
}

impl Serialize for CycNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CycNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(105).len() - 1, euler_phi(105));
    }

    #[test]
    fn embed_examples() {
        let one = CycNumber::one().embed(12).unwrap();
        assert_eq!(one.conductor(), 12);
        assert!(one.is_one());
        assert_eq!(
            CycNumber::zeta(4).embed(12).unwrap(),
            CycNumber::zeta_pow(12, 3)
        );
        assert_eq!(
            CycNumber::zeta(6).embed(4),
            Err(Error::InvalidConductor { from: 6, to: 4 })
        );
    }

    #[test]
    fn zeta_order_and_sum() {
        for n in [2u32, 3, 5, 8, 12, 15] {
            let z = CycNumber::zeta(n);
            assert!(z.pow(n as i64).is_one());
            for k in 1..n {
                assert!(!z.pow(k as i64).is_one(), "order of z{n} divides {k}");
            }
            let sum = (0..n).fold(CycNumber::zero(n), |acc, k| &acc + &z.pow(k as i64));
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn special_constants() {
        let s = CycNumber::sqrt3_i();
        assert_eq!(&s * &s, CycNumber::from_int(-3));
        let r = CycNumber::sqrt2();
        assert_eq!(&r * &r, CycNumber::from_int(2));
        let i = CycNumber::i();
        assert_eq!(&i * &i, CycNumber::from_int(-1));
    }

    #[test]
    fn normalization_and_text() {
        let x = CycNumber::zeta_pow(12, 4); // ζ_3
        assert_eq!(x.normalized().conductor(), 3);
        assert_eq!(x.to_string(), "z3");
        assert_eq!(CycNumber::sqrt3_i().to_string(), "2*z3 + 1");
        let y: CycNumber = "z12^2 - 1".parse().unwrap();
        assert_eq!(y, &CycNumber::zeta_pow(12, 2) - &CycNumber::one());
        assert_eq!(y.to_string().parse::<CycNumber>().unwrap(), y);
        assert_eq!(
            "-3/4".parse::<CycNumber>().unwrap(),
            CycNumber::from_frac(-3, 4)
        );
        assert!("z0".parse::<CycNumber>().is_err());
    }

    #[test]
    fn inverse_and_galois() {
        let a: CycNumber = "3*z7^2 - z7 + 1/2".parse().unwrap();
        assert!((&a * &a.inv().unwrap()).is_one());
        assert_eq!(CycNumber::zeta(5).galois(2), CycNumber::zeta_pow(5, 2));
        assert!(CycNumber::zero(5).inv().is_none());
    }
}
