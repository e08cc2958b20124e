//! The invariant polynomials `R_1, R_2, R_3` of the Platonic groups and
//! exact checks of how they transform under the generators.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::group::ReducedGroup;
use crate::arith::{CycNumber, MoebiusMap, Poly, RatFunc};
use crate::error::{Error, Result};

fn sqrt3_i() -> CycNumber {
    CycNumber::sqrt3_i()
}

/// `[R_1, R_2, R_3]` for a Platonic group.
pub fn platonic_polys(group: ReducedGroup) -> Option<[Poly; 3]> {
    let p = Poly::from_ints;
    match group {
        ReducedGroup::Tetrahedral => {
            let c = &sqrt3_i() * &CycNumber::from_int(2);
            let one = CycNumber::one();
            let zero = CycNumber::zero(1);
            Some([
                Poly::new(vec![
                    one.clone(),
                    zero.clone(),
                    -&c,
                    zero.clone(),
                    one.clone(),
                ]),
                Poly::new(vec![one.clone(), zero.clone(), c, zero, one]),
                p(&[0, -1, 0, 0, 0, 1]),
            ])
        }
        ReducedGroup::Octahedral => Some([
            p(&[1, 0, 0, 0, 14, 0, 0, 0, 1]),
            p(&[1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1]),
            p(&[0, -1, 0, 0, 0, 1]),
        ]),
        ReducedGroup::Icosahedral => {
            let mut r1 = vec![0i64; 21];
            r1[0] = -1;
            r1[5] = -228;
            r1[10] = -494;
            r1[15] = 228;
            r1[20] = -1;
            let mut r2 = vec![0i64; 31];
            r2[0] = 1;
            r2[5] = -522;
            r2[10] = -10005;
            r2[20] = -10005;
            r2[25] = 522;
            r2[30] = 1;
            let mut r3 = vec![0i64; 12];
            r3[1] = -1;
            r3[6] = 11;
            r3[11] = 1;
            Some([p(&r1), p(&r2), p(&r3)])
        }
        _ => None,
    }
}

/// The degree-`|Ḡ|` factor whose roots form the generic orbit with
/// invariant value `t`: `R_1^3 + 12√3i·t·R_3^2`, `R_1^3 - 108t·R_3^4` or
/// `R_1^3 - 1728t·R_3^5`.
pub fn generic_orbit_poly(group: ReducedGroup, t: &CycNumber) -> Option<Poly> {
    let [r1, _, r3] = platonic_polys(group)?;
    let (coef, power) = match group {
        ReducedGroup::Tetrahedral => (&(&sqrt3_i() * &CycNumber::from_int(12)) * t, 2),
        ReducedGroup::Octahedral => (&CycNumber::from_int(-108) * t, 4),
        ReducedGroup::Icosahedral => (&CycNumber::from_int(-1728) * t, 5),
        _ => return None,
    };
    Some(&r1.pow(3) + &r3.pow(power).scale(&coef))
}

/// The quotient map `f` with `Ḡ`-invariant values.
pub fn quotient_map(group: ReducedGroup) -> Option<RatFunc> {
    let [r1, _, r3] = platonic_polys(group)?;
    let (coef, power) = match group {
        ReducedGroup::Tetrahedral => (&sqrt3_i() * &CycNumber::from_int(-12), 2),
        ReducedGroup::Octahedral => (CycNumber::from_int(108), 4),
        ReducedGroup::Icosahedral => (CycNumber::from_int(1728), 5),
        _ => return None,
    };
    Some(RatFunc::new(r1.pow(3), r3.pow(power).scale(&coef)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivarianceReport {
    pub group: ReducedGroup,
    pub checks: Vec<IdentityCheck>,
}

impl EquivarianceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `(R∘M)/R` reduced.
fn cofactor(r: &RatFunc, m: &MoebiusMap) -> RatFunc {
    &r.compose(m) / r
}

/// `c/(x+i)^k`.
fn over_x_plus_i(c: CycNumber, k: u32) -> RatFunc {
    let lin = Poly::new(vec![CycNumber::i(), CycNumber::one()]);
    RatFunc::new(Poly::constant(c), lin.pow(k))
}

fn check(identity: &str, computed: RatFunc, expected: RatFunc) -> IdentityCheck {
    IdentityCheck {
        identity: identity.to_string(),
        passed: computed == expected,
        expected: expected.to_string(),
        computed: computed.to_string(),
    }
}

/// Evaluates every transformation identity without failing.
pub fn equivariance_report(group: ReducedGroup) -> Result<EquivarianceReport> {
    let Some([r1, r2, r3]) = platonic_polys(group) else {
        return Err(Error::Unsupported(format!(
            "equivariance identities exist only for Platonic groups, not {group}"
        )));
    };
    let gens = group.generators();
    let (a, b) = (&gens[0], &gens[1]);
    let (r1, r2, r3) = (
        RatFunc::from_poly(r1),
        RatFunc::from_poly(r2),
        RatFunc::from_poly(r3),
    );
    let int = |v: i64| CycNumber::from_int(v);
    let c = |v: CycNumber| RatFunc::constant(v);
    let mut checks = Vec::new();
    match group {
        ReducedGroup::Tetrahedral => {
            let s = sqrt3_i();
            let two = int(2);
            checks.push(check(
                "R1(b(x)) = 2(1 - sqrt(3)i)/(x+i)^4 R1(x)",
                cofactor(&r1, b),
                over_x_plus_i(&two * &(&CycNumber::one() - &s), 4),
            ));
            checks.push(check("R1(a(x)) = R1(x)", cofactor(&r1, a), RatFunc::one()));
            checks.push(check(
                "R2(b(x)) = 2(1 + sqrt(3)i)/(x+i)^4 R2(x)",
                cofactor(&r2, b),
                over_x_plus_i(&two * &(&CycNumber::one() + &s), 4),
            ));
            checks.push(check("R2(a(x)) = R2(x)", cofactor(&r2, a), RatFunc::one()));
            checks.push(check(
                "R3(b(x)) = 8i/(x+i)^6 R3(x)",
                cofactor(&r3, b),
                over_x_plus_i(&int(8) * &CycNumber::i(), 6),
            ));
            checks.push(check("R3(a(x)) = -R3(x)", cofactor(&r3, a), c(int(-1))));
            let f = quotient_map(group).expect("Platonic group");
            checks.push(check("f(a(x)) = f(x)", cofactor(&f, a), RatFunc::one()));
            checks.push(check("f(b(x)) = f(x)", cofactor(&f, b), RatFunc::one()));
            let r12 = &r1 * &r2;
            checks.push(check(
                "(R1 R2)(b(x)) = 16/(x+i)^8 (R1 R2)(x)",
                cofactor(&r12, b),
                over_x_plus_i(int(16), 8),
            ));
        }
        ReducedGroup::Octahedral => {
            checks.push(check("R1(a(x)) = R1(x)", cofactor(&r1, a), RatFunc::one()));
            checks.push(check(
                "R1(b(x)) = 16/(x+i)^8 R1(x)",
                cofactor(&r1, b),
                over_x_plus_i(int(16), 8),
            ));
            checks.push(check("R2(a(x)) = R2(x)", cofactor(&r2, a), RatFunc::one()));
            checks.push(check(
                "R2(b(x)) = -64/(x+i)^12 R2(x)",
                cofactor(&r2, b),
                over_x_plus_i(int(-64), 12),
            ));
            checks.push(check(
                "R3(a(x)) = i R3(x)",
                cofactor(&r3, a),
                c(CycNumber::i()),
            ));
            checks.push(check(
                "R3(b(x)) = 8i/(x+i)^6 R3(x)",
                cofactor(&r3, b),
                over_x_plus_i(&int(8) * &CycNumber::i(), 6),
            ));
        }
        ReducedGroup::Icosahedral => {
            checks.push(check("R1(a(x)) = R1(x)", cofactor(&r1, a), RatFunc::one()));
            checks.push(check("R2(a(x)) = R2(x)", cofactor(&r2, a), RatFunc::one()));
            checks.push(check(
                "R3(a(x)) = w5 R3(x)",
                cofactor(&r3, a),
                c(CycNumber::zeta(5)),
            ));
            let t1 = cofactor(&r1, b);
            let t3 = cofactor(&r3, b);
            checks.push(check("T1^3 = T3^5", t1.pow(3), t3.pow(5)));
        }
        _ => unreachable!("non-Platonic groups rejected above"),
    }
    Ok(EquivarianceReport { group, checks })
}

/// As [`equivariance_report`], failing when any identity does not hold.
pub fn verify_equivariance(group: ReducedGroup) -> Result<EquivarianceReport> {
    let report = equivariance_report(group)?;
    if let Some(bad) = report.checks.iter().find(|c| !c.passed) {
        return Err(Error::InvariantViolation(format!(
            "{group}: identity `{}` fails (computed cofactor {})",
            bad.identity, bad.computed
        )));
    }
    Ok(report)
}

/// Runs the identity checks once per process; the families built on the
/// Platonic polynomials refuse to proceed if they fail.
pub fn platonic_selftest(group: ReducedGroup) -> Result<()> {
    static TETRA: OnceLock<Result<()>> = OnceLock::new();
    static OCTA: OnceLock<Result<()>> = OnceLock::new();
    static ICOSA: OnceLock<Result<()>> = OnceLock::new();
    let cell = match group {
        ReducedGroup::Tetrahedral => &TETRA,
        ReducedGroup::Octahedral => &OCTA,
        ReducedGroup::Icosahedral => &ICOSA,
        _ => return Ok(()),
    };
    cell.get_or_init(|| verify_equivariance(group).map(|_| ()))
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedral_identities() {
        let rep = verify_equivariance(ReducedGroup::Tetrahedral).unwrap();
        assert_eq!(rep.checks.len(), 9);
        let r3b = rep
            .checks
            .iter()
            .find(|c| c.identity.starts_with("R3(b"))
            .unwrap();
        assert!(r3b.passed);
    }

    #[test]
    fn octahedral_identities() {
        let rep = verify_equivariance(ReducedGroup::Octahedral).unwrap();
        assert_eq!(rep.checks.len(), 6);
        assert_eq!(rep.checks[0].computed, "1");
    }

    #[test]
    fn tetrahedral_third_orbit_is_r2() {
        // the generic orbit at t = 1 degenerates to R2^3
        let [_, r2, _] = platonic_polys(ReducedGroup::Tetrahedral).unwrap();
        let g = generic_orbit_poly(ReducedGroup::Tetrahedral, &CycNumber::one()).unwrap();
        assert_eq!(g, r2.pow(3));
    }

    #[test]
    fn non_platonic_rejected() {
        assert!(matches!(
            verify_equivariance(ReducedGroup::Cyclic(3)),
            Err(Error::Unsupported(_))
        ));
    }
}
