//! Fuchsian signatures: hyperbolic area, Riemann–Hurwitz, Harvey's
//! admissibility criterion and Singerman's finite-maximality tables.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::census::ExponentTuple;
use crate::error::{Error, Result};

/// `(γ; n_1, …, n_r)` with cone orders sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SignatureRepr", into = "SignatureRepr")]
pub struct Signature {
    orbifold_genus: u64,
    cone_orders: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct SignatureRepr {
    orbifold_genus: u64,
    cone_orders: Vec<u64>,
}

impl TryFrom<SignatureRepr> for Signature {
    type Error = Error;
    fn try_from(r: SignatureRepr) -> Result<Self> {
        Signature::new(r.orbifold_genus, r.cone_orders)
    }
}

impl From<Signature> for SignatureRepr {
    fn from(s: Signature) -> Self {
        SignatureRepr {
            orbifold_genus: s.orbifold_genus,
            cone_orders: s.cone_orders,
        }
    }
}

impl Signature {
    pub fn new(orbifold_genus: u64, mut cone_orders: Vec<u64>) -> Result<Self> {
        if let Some(bad) = cone_orders.iter().find(|&&c| c < 2) {
            return Err(Error::InvalidInput(format!("cone order {bad} is below 2")));
        }
        cone_orders.sort_unstable();
        Ok(Self {
            orbifold_genus,
            cone_orders,
        })
    }

    /// Genus-zero signature, silently dropping entries equal to 1.
    pub fn sphere_dropping_ones(orders: impl IntoIterator<Item = u64>) -> Self {
        let mut cone_orders: Vec<u64> = orders.into_iter().filter(|&c| c != 1).collect();
        assert!(cone_orders.iter().all(|&c| c >= 2), "zero cone order");
        cone_orders.sort_unstable();
        Self {
            orbifold_genus: 0,
            cone_orders,
        }
    }

    pub fn orbifold_genus(&self) -> u64 {
        self.orbifold_genus
    }

    pub fn cone_orders(&self) -> &[u64] {
        &self.cone_orders
    }

    pub fn len(&self) -> usize {
        self.cone_orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cone_orders.is_empty()
    }

    pub fn hyperbolic_area(&self) -> Rational {
        hyperbolic_area(self)
    }

    pub fn is_hyperbolic(&self) -> bool {
        hyperbolic_area(self) > Rational::zero()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cone_orders.is_empty() {
            return write!(f, "({}; -)", self.orbifold_genus);
        }
        let orders: Vec<String> = self.cone_orders.iter().map(u64::to_string).collect();
        write!(f, "({}; {})", self.orbifold_genus, orders.join(", "))
    }
}

/// Area divided by `2π`: `2γ - 2 + Σ (1 - 1/n_j)`.
pub fn hyperbolic_area(sig: &Signature) -> Rational {
    let mut area = Rational::from_integer((2 * sig.orbifold_genus as i64 - 2).into());
    for &c in &sig.cone_orders {
        area += Rational::one() - Rational::new(1.into(), (c as i64).into());
    }
    area
}

/// Genus of a surface carrying a group of the given order with quotient
/// signature `sig`: `2g - 2 = order · area`.
pub fn riemann_hurwitz_genus(order: u64, sig: &Signature) -> Result<u64> {
    let chi = hyperbolic_area(sig) * Rational::from_integer((order as i64).into());
    let two_g = chi + Rational::from_integer(2.into());
    if !two_g.is_integer() || !two_g.to_integer().is_even() || two_g < Rational::zero() {
        return Err(Error::Inconsistent(format!(
            "order {order} over {sig} gives 2g = {two_g}"
        )));
    }
    let g: i64 = (two_g.to_integer() / 2i32)
        .try_into()
        .map_err(|_| Error::Inconsistent("genus overflow".into()))?;
    Ok(g as u64)
}

fn lcm_all(xs: impl Iterator<Item = u64>) -> u64 {
    xs.fold(1, |a, b| a.lcm(&b))
}

/// Harvey's criterion for an order-`n` cyclic group acting with quotient
/// `(0; orders)`: every `(s-1)`-subset has lcm `n`, and for even `n` the
/// number of `j` with `n/n_j` odd is even.
pub fn harvey_check(n: u64, orders: &[u64]) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("level {n} is below 2")));
    }
    if orders.len() < 3 {
        return Err(Error::InvalidInput(format!(
            "need at least 3 cone orders, got {}",
            orders.len()
        )));
    }
    if let Some(&bad) = orders.iter().find(|&&o| o < 2 || !n.is_multiple_of(o)) {
        return Err(Error::InvalidInput(format!(
            "cone order {bad} is not a divisor of {n} that is at least 2"
        )));
    }
    let lcm_ok = (0..orders.len()).all(|skip| {
        lcm_all(
            orders
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, &o)| o),
        ) == n
    });
    let parity_ok = n % 2 == 1 || orders.iter().filter(|&&o| (n / o) % 2 == 1).count() % 2 == 0;
    Ok(lcm_ok && parity_ok)
}

/// Genus of `y^n = ∏ (x - a_j)^{l_j}` from the full branch data (the tuple
/// already carries the exponent at ∞ when there is one).
pub fn genus_from_exponents(n: u64, exps: &ExponentTuple) -> Result<u64> {
    if exps.n() != n {
        return Err(Error::InvalidInput(format!(
            "tuple has level {}, expected {n}",
            exps.n()
        )));
    }
    genus_of_branch_data(n, exps.exps())
}

/// As [`genus_from_exponents`] for a raw list covering every branch point.
pub fn genus_of_branch_data(n: u64, exps: &[u64]) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("level {n} is below 2")));
    }
    if let Some(bad) = exps.iter().find(|&&l| l % n == 0) {
        return Err(Error::InvalidInput(format!(
            "exponent {bad} is divisible by the level {n}"
        )));
    }
    if exps.iter().sum::<u64>() % n != 0 {
        return Err(Error::Inconsistent(format!(
            "exponents {exps:?} do not sum to 0 mod {n}"
        )));
    }
    if exps.iter().fold(n, |g, &l| g.gcd(&l)) != 1 {
        return Err(Error::Inconsistent(format!(
            "exponents {exps:?} share a factor with {n}; the cover is disconnected"
        )));
    }
    let s = exps.len() as i64;
    let n_i = n as i64;
    let gsum: i64 = exps.iter().map(|&l| n.gcd(&l) as i64).sum();
    let twice = (s - 2) * n_i - gsum;
    if twice < -2 || twice % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "branch data {exps:?} at level {n} gives a non-integral genus"
        )));
    }
    Ok((1 + twice / 2) as u64)
}

/// Genus zero with some cone order occurring an odd number of times.
pub fn is_odd_signature(sig: &Signature) -> bool {
    if sig.orbifold_genus != 0 {
        return false;
    }
    let c = &sig.cone_orders;
    let mut i = 0;
    while i < c.len() {
        let j = c[i..].iter().take_while(|&&x| x == c[i]).count();
        if j % 2 == 1 {
            return true;
        }
        i += j;
    }
    false
}

#[derive(Clone, Copy, Debug)]
enum Slot {
    Const(u64),
    /// parameter index times multiplier
    Param(usize, u64),
}

struct TableRow {
    sub_genus: u64,
    sub: &'static [Slot],
    sup: &'static [Slot],
    index: u64,
    normal: bool,
}

use Slot::{Const as C, Param as P};

#[rustfmt::skip]
const SINGERMAN_ROWS: &[TableRow] = &[
    // normal inclusions
    TableRow { sub_genus: 2, sub: &[], sup: &[C(2), C(2), C(2), C(2), C(2), C(2)], index: 2, normal: true },
    TableRow { sub_genus: 1, sub: &[P(0, 1), P(0, 1)], sup: &[C(2), C(2), C(2), C(2), P(0, 1)], index: 2, normal: true },
    TableRow { sub_genus: 1, sub: &[P(0, 1)], sup: &[C(2), C(2), C(2), P(0, 2)], index: 2, normal: true },
    TableRow { sub_genus: 0, sub: &[P(0, 1), P(0, 1), P(0, 1), P(0, 1)], sup: &[C(2), C(2), C(2), P(0, 1)], index: 4, normal: true },
    TableRow { sub_genus: 0, sub: &[P(0, 1), P(0, 1), P(1, 1), P(1, 1)], sup: &[C(2), C(2), P(0, 1), P(1, 1)], index: 2, normal: true },
    TableRow { sub_genus: 0, sub: &[P(0, 1), P(0, 1), P(0, 1)], sup: &[C(3), C(3), P(0, 1)], index: 3, normal: true },
    TableRow { sub_genus: 0, sub: &[P(0, 1), P(0, 1), P(0, 1)], sup: &[C(2), C(3), P(0, 2)], index: 6, normal: true },
    TableRow { sub_genus: 0, sub: &[P(0, 1), P(0, 1), P(1, 1)], sup: &[C(2), P(0, 1), P(1, 2)], index: 2, normal: true },
    // non-normal inclusions
    TableRow { sub_genus: 0, sub: &[C(7), C(7), C(7)], sup: &[C(2), C(3), C(7)], index: 24, normal: false },
    TableRow { sub_genus: 0, sub: &[C(2), C(7), C(7)], sup: &[C(2), C(3), C(7)], index: 9, normal: false },
    TableRow { sub_genus: 0, sub: &[C(3), C(3), C(7)], sup: &[C(2), C(3), C(7)], index: 8, normal: false },
    TableRow { sub_genus: 0, sub: &[C(4), C(8), C(8)], sup: &[C(2), C(3), C(8)], index: 12, normal: false },
    TableRow { sub_genus: 0, sub: &[C(3), C(8), C(8)], sup: &[C(2), C(3), C(8)], index: 10, normal: false },
    TableRow { sub_genus: 0, sub: &[C(9), C(9), C(9)], sup: &[C(2), C(3), C(9)], index: 12, normal: false },
    TableRow { sub_genus: 0, sub: &[C(4), C(4), C(5)], sup: &[C(2), C(4), C(5)], index: 6, normal: false },
    TableRow { sub_genus: 0, sub: &[P(0, 1), P(0, 4), P(0, 4)], sup: &[C(2), C(3), P(0, 4)], index: 6, normal: false },
    TableRow { sub_genus: 0, sub: &[P(0, 1), P(0, 2), P(0, 2)], sup: &[C(2), C(4), P(0, 2)], index: 4, normal: false },
    TableRow { sub_genus: 0, sub: &[C(3), P(0, 1), P(0, 3)], sup: &[C(2), C(3), P(0, 3)], index: 4, normal: false },
    TableRow { sub_genus: 0, sub: &[C(2), P(0, 1), P(0, 2)], sup: &[C(2), C(3), P(0, 2)], index: 3, normal: false },
];

fn instantiate(slots: &[Slot], params: &[u64; 2]) -> Vec<u64> {
    let mut v: Vec<u64> = slots
        .iter()
        .map(|s| match *s {
            Slot::Const(c) => c,
            Slot::Param(i, m) => params[i] * m,
        })
        .collect();
    v.sort_unstable();
    v
}

fn param_count(slots: &[Slot]) -> usize {
    slots
        .iter()
        .filter_map(|s| match s {
            Slot::Param(i, _) => Some(i + 1),
            Slot::Const(_) => None,
        })
        .max()
        .unwrap_or(0)
}

/// An inclusion `K < K̂` with equal Teichmüller dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inclusion {
    pub signature: Signature,
    pub index: u64,
    pub normal: bool,
}

/// Every table row whose left column instantiates to `sig`, with parameters
/// ranging over integers ≥ 2 and both signatures hyperbolic. Rows are
/// returned in table order, normal inclusions first. An empty list means
/// `sig` is finitely maximal.
pub fn singerman_inclusions(sig: &Signature) -> Vec<Inclusion> {
    let max_param = sig.cone_orders.iter().copied().max().unwrap_or(2).max(2);
    let mut out: Vec<Inclusion> = Vec::new();
    for row in SINGERMAN_ROWS {
        if row.sub_genus != sig.orbifold_genus || row.sub.len() != sig.cone_orders.len() {
            continue;
        }
        let k = param_count(row.sub);
        let range1: Vec<u64> = if k >= 1 {
            (2..=max_param).collect()
        } else {
            vec![0]
        };
        let range2: Vec<u64> = if k >= 2 {
            (2..=max_param).collect()
        } else {
            vec![0]
        };
        for &t1 in &range1 {
            for &t2 in &range2 {
                let params = [t1, t2];
                if instantiate(row.sub, &params) != sig.cone_orders {
                    continue;
                }
                let sup = Signature::new(0, instantiate(row.sup, &params))
                    .expect("instantiated parameters are at least 2");
                if !sup.is_hyperbolic() || !sig.is_hyperbolic() {
                    continue;
                }
                let inc = Inclusion {
                    signature: sup,
                    index: row.index,
                    normal: row.normal,
                };
                if !out.contains(&inc) {
                    out.push(inc);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(g: u64, c: &[u64]) -> Signature {
        Signature::new(g, c.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn area_examples() {
        assert_eq!(hyperbolic_area(&sig(0, &[2, 3, 7])), q(1, 42));
        assert_eq!(hyperbolic_area(&sig(2, &[])), q(2, 1));
        assert_eq!(hyperbolic_area(&sig(0, &[2, 2])), q(-1, 1));
    }

    #[test]
    fn harvey_examples() {
        assert!(harvey_check(2, &[2; 6]).unwrap());
        assert!(!harvey_check(4, &[2, 2, 4]).unwrap());
        assert!(harvey_check(10, &[2, 5, 10]).unwrap());
        assert!(harvey_check(4, &[3, 4, 4]).is_err());
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_of_branch_data(2, &[1; 6]).unwrap(), 2);
        assert_eq!(genus_of_branch_data(5, &[1, 1, 3]).unwrap(), 2);
        let mut g17 = vec![2u64];
        g17.extend([1; 12]);
        g17.push(2);
        assert_eq!(genus_of_branch_data(4, &g17).unwrap(), 17);
        assert!(genus_of_branch_data(4, &[2, 2]).is_err());
    }

    #[test]
    fn riemann_hurwitz() {
        assert_eq!(riemann_hurwitz_genus(168, &sig(0, &[2, 3, 7])).unwrap(), 3);
        assert!(riemann_hurwitz_genus(5, &sig(0, &[2, 3, 7])).is_err());
    }

    #[test]
    fn odd_signature_examples() {
        assert!(is_odd_signature(&sig(0, &[2, 2, 2, 3])));
        assert!(!is_odd_signature(&sig(0, &[2, 2, 4, 4])));
        assert!(!is_odd_signature(&sig(1, &[2, 2, 2])));
    }

    #[test]
    fn singerman_examples() {
        assert_eq!(
            singerman_inclusions(&sig(1, &[3, 3])),
            vec![Inclusion {
                signature: sig(0, &[2, 2, 2, 2, 3]),
                index: 2,
                normal: true
            }]
        );
        let seven = singerman_inclusions(&sig(0, &[7, 7, 7]));
        assert!(seven.contains(&Inclusion {
            signature: sig(0, &[2, 3, 7]),
            index: 24,
            normal: false
        }));
        assert!(singerman_inclusions(&sig(0, &[2, 3, 7])).is_empty());
        assert_eq!(
            singerman_inclusions(&sig(2, &[]))[0].signature,
            sig(0, &[2; 6])
        );
    }
}
