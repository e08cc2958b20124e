//! Points of the extended plane and Möbius transformations over cyclotomic fields.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cyclotomic::CycNumber;
use crate::error::{Error, Result};

/// A point of `C ∪ {∞}` with cyclotomic coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtPoint {
    Finite(CycNumber),
    Infinity,
}

impl ExtPoint {
    pub fn finite(v: impl Into<CycNumber>) -> Self {
        ExtPoint::Finite(v.into())
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtPoint::Infinity)
    }

    pub fn as_finite(&self) -> Option<&CycNumber> {
        match self {
            ExtPoint::Finite(z) => Some(z),
            ExtPoint::Infinity => None,
        }
    }
}

impl fmt::Display for ExtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPoint::Finite(z) => write!(f, "{z}"),
            ExtPoint::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(ExtPoint::Infinity),
            other => Ok(ExtPoint::Finite(other.parse()?)),
        }
    }
}

impl Serialize for ExtPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExtPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `x ↦ (ax + b)/(cx + d)` with `ad - bc ≠ 0`.
#[derive(Clone, Debug)]
pub struct MoebiusMap {
    a: CycNumber,
    b: CycNumber,
    c: CycNumber,
    d: CycNumber,
}

impl MoebiusMap {
    pub fn new(a: CycNumber, b: CycNumber, c: CycNumber, d: CycNumber) -> Result<Self> {
        let det = &(&a * &d) - &(&b * &c);
        if det.is_zero() {
            return Err(Error::DegenerateInput(
                "Möbius coefficients have zero determinant".into(),
            ));
        }
        Ok(Self { a, b, c, d })
    }

    fn from_matrix(a: CycNumber, b: CycNumber, c: CycNumber, d: CycNumber) -> Self {
        Self::new(a, b, c, d).expect("product of invertible maps is invertible")
    }

    pub fn identity() -> Self {
        Self::from_matrix(
            CycNumber::one(),
            CycNumber::zero(1),
            CycNumber::zero(1),
            CycNumber::one(),
        )
    }

    /// `x ↦ λx`.
    pub fn scaling(lambda: CycNumber) -> Self {
        Self::new(
            lambda,
            CycNumber::zero(1),
            CycNumber::zero(1),
            CycNumber::one(),
        )
        .expect("scaling factor must be nonzero")
    }

    /// `x ↦ 1/x`.
    pub fn inversion() -> Self {
        Self::from_matrix(
            CycNumber::zero(1),
            CycNumber::one(),
            CycNumber::one(),
            CycNumber::zero(1),
        )
    }

    pub fn a(&self) -> &CycNumber {
        &self.a
    }
    pub fn b(&self) -> &CycNumber {
        &self.b
    }
    pub fn c(&self) -> &CycNumber {
        &self.c
    }
    pub fn d(&self) -> &CycNumber {
        &self.d
    }

    pub fn determinant(&self) -> CycNumber {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn apply(&self, p: &ExtPoint) -> ExtPoint {
        match p {
            ExtPoint::Infinity => {
                if self.c.is_zero() {
                    ExtPoint::Infinity
                } else {
                    ExtPoint::Finite(&self.a / &self.c)
                }
            }
            ExtPoint::Finite(z) => {
                let den = &(&self.c * z) + &self.d;
                if den.is_zero() {
                    ExtPoint::Infinity
                } else {
                    ExtPoint::Finite(&(&(&self.a * z) + &self.b) / &den)
                }
            }
        }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        let m = |p: &CycNumber, q: &CycNumber, r: &CycNumber, s: &CycNumber| &(p * q) + &(r * s);
        Self::from_matrix(
            m(&self.a, &other.a, &self.b, &other.c),
            m(&self.a, &other.b, &self.b, &other.d),
            m(&self.c, &other.a, &self.d, &other.c),
            m(&self.c, &other.b, &self.d, &other.d),
        )
    }

    pub fn inverse(&self) -> MoebiusMap {
        Self::from_matrix(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    /// Equality as transformations (matrices equal up to a scalar).
    pub fn same_map(&self, other: &MoebiusMap) -> bool {
        let p = [&self.a, &self.b, &self.c, &self.d];
        let q = [&other.a, &other.b, &other.c, &other.d];
        (0..4).all(|i| (i + 1..4).all(|j| p[i] * q[j] == p[j] * q[i]))
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// The map sending `src` to `(0, 1, ∞)`.
    fn to_standard(src: &[ExtPoint; 3]) -> Result<MoebiusMap> {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if src[i] == src[j] {
                return Err(Error::DegenerateInput(format!(
                    "repeated point {} in triple",
                    src[i]
                )));
            }
        }
        let zero = CycNumber::zero(1);
        let one = CycNumber::one();
        use ExtPoint::*;
        Ok(match (&src[0], &src[1], &src[2]) {
            (Infinity, Finite(z2), Finite(z3)) => Self::from_matrix(zero, z2 - z3, one, -z3),
            (Finite(z1), Infinity, Finite(z3)) => Self::from_matrix(one.clone(), -z1, one, -z3),
            (Finite(z1), Finite(z2), Infinity) => Self::from_matrix(one, -z1, zero, z2 - z1),
            (Finite(z1), Finite(z2), Finite(z3)) => {
                let p = z2 - z3;
                let q = z2 - z1;
                Self::from_matrix(p.clone(), -&(z1 * &p), q.clone(), -&(z3 * &q))
            }
            _ => unreachable!("distinctness checked above"),
        })
    }

    /// The unique map with `M(src[k]) = dst[k]`.
    pub fn from_three_points(src: &[ExtPoint; 3], dst: &[ExtPoint; 3]) -> Result<MoebiusMap> {
        let s = Self::to_standard(src)?;
        let t = Self::to_standard(dst)?;
        Ok(t.inverse().compose(&s))
    }
}

impl fmt::Display for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({})*x + ({}))/(({})*x + ({}))",
            self.a, self.b, self.c, self.d
        )
    }
}

#[derive(Serialize, Deserialize)]
struct MoebiusRepr {
    a: String,
    b: String,
    c: String,
    d: String,
}

impl Serialize for MoebiusMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MoebiusRepr {
            a: self.a.to_string(),
            b: self.b.to_string(),
            c: self.c.to_string(),
            d: self.d.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MoebiusMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MoebiusRepr::deserialize(d)?;
        let parse = |s: &str| s.parse::<CycNumber>().map_err(serde::de::Error::custom);
        MoebiusMap::new(parse(&r.a)?, parse(&r.b)?, parse(&r.c)?, parse(&r.d)?)
            .map_err(serde::de::Error::custom)
    }
}

/// Serialized maps compare as written, so round trips are exact.
impl PartialEq for MoebiusMap {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c && self.d == other.d
    }
}

impl Eq for MoebiusMap {}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: i64) -> ExtPoint {
        ExtPoint::finite(v)
    }

    #[test]
    fn three_point_examples() {
        let std = [pt(0), pt(1), ExtPoint::Infinity];
        let id = MoebiusMap::from_three_points(&std, &std).unwrap();
        assert!(id.is_identity());

        let m = MoebiusMap::from_three_points(&std, &[pt(1), pt(0), ExtPoint::Infinity]).unwrap();
        let one_minus_x = MoebiusMap::new(
            CycNumber::from_int(-1),
            CycNumber::one(),
            CycNumber::zero(1),
            CycNumber::one(),
        )
        .unwrap();
        assert!(m.same_map(&one_minus_x));

        let err = MoebiusMap::from_three_points(&[pt(0), pt(0), pt(1)], &std);
        assert!(matches!(err, Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn reproduces_destination() {
        let src = [ExtPoint::Infinity, pt(2), ExtPoint::finite(CycNumber::i())];
        let dst = [pt(5), ExtPoint::Infinity, pt(-1)];
        let m = MoebiusMap::from_three_points(&src, &dst).unwrap();
        for (s, d) in src.iter().zip(&dst) {
            assert_eq!(&m.apply(s), d);
        }
        assert!(m.compose(&m.inverse()).is_identity());
    }

    #[test]
    fn ext_point_text() {
        assert_eq!("inf".parse::<ExtPoint>().unwrap(), ExtPoint::Infinity);
        assert_eq!(
            "z4".parse::<ExtPoint>().unwrap(),
            ExtPoint::Finite(CycNumber::i())
        );
        assert_eq!(ExtPoint::Infinity.to_string(), "inf");
    }
}
