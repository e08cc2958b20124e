//! Generalized superelliptic families: for a level `n`, a reduced group `Ḡ`
//! and one exponent per `Ḡ`-orbit of branch values, the normal-form
//! equation, the lifted automorphisms, both quotient signatures and the
//! genus.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::equation::{Action, CurveEquation, Multiplier};
use super::equivariance::{generic_orbit_poly, platonic_polys, platonic_selftest};
use super::group::ReducedGroup;
use super::presentation::{AutPresentation, StatedPower};
use crate::arith::{CycNumber, ExtPoint, MoebiusMap, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::signatures::{genus_of_branch_data, riemann_hurwitz_genus, Signature};

/// Exponents attached to the orbits of branch values.
///
/// * `l0`: the exponent at `x = 0` (cyclic) or on `{0, ∞}` (dihedral);
///   zero for the other groups.
/// * `special`: the short orbits. Dihedral: `[x^m - 1, x^m + 1]`;
///   tetrahedral: `[R1 R2, R3]`; octahedral and icosahedral:
///   `[R1, R2, R3]`; empty otherwise.
/// * `orbits`: one exponent per orbit of full length. For the cyclic group
///   the first of these is the orbit `x^m = 1`; for the trivial group they
///   are the finite branch points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentData {
    #[serde(default)]
    pub l0: u64,
    #[serde(default)]
    pub special: Vec<u64>,
    pub orbits: Vec<u64>,
}

impl ExponentData {
    pub fn new(l0: u64, special: Vec<u64>, orbits: Vec<u64>) -> Self {
        Self {
            l0,
            special,
            orbits,
        }
    }

    fn generic_sum(&self) -> u64 {
        self.orbits.iter().sum()
    }
}

impl fmt::Display for ExponentData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "l0={}; special=[{}]; orbits=[{}]",
            self.l0,
            join(&self.special),
            join(&self.orbits)
        )
    }
}

/// A `Ḡ`-orbit of branch values (or of points that become cone points of
/// `X/G`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchOrbit {
    pub label: String,
    pub size: u64,
    pub stabilizer: u64,
    pub exponent: u64,
    /// Orbit of full length, carrying a modulus.
    pub generic: bool,
}

impl BranchOrbit {
    fn new(label: impl Into<String>, size: u64, stabilizer: u64, exponent: u64) -> Self {
        Self {
            label: label.into(),
            size,
            stabilizer,
            exponent,
            generic: stabilizer == 1,
        }
    }

    /// `n / gcd(n, l)`, which is 1 for an unbranched orbit.
    fn branching(&self, n: u64) -> u64 {
        n / n.gcd(&self.exponent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GSFamily {
    n: u64,
    group: ReducedGroup,
    exponents: ExponentData,
    moduli: Vec<CycNumber>,
    free_parameters: usize,
    orbits: Vec<BranchOrbit>,
    equation: CurveEquation,
    presentation: AutPresentation,
    sig_h: Signature,
    sig_g: Signature,
    genus: u64,
    warnings: Vec<String>,
}

/// Serialized form; deserializing rebuilds the family and insists on an
/// identical result.
#[derive(Deserialize)]
struct GSFamilyRepr {
    n: u64,
    group: ReducedGroup,
    exponents: ExponentData,
    moduli: Vec<CycNumber>,
    free_parameters: usize,
    orbits: Vec<BranchOrbit>,
    equation: CurveEquation,
    presentation: AutPresentation,
    sig_h: Signature,
    sig_g: Signature,
    genus: u64,
    warnings: Vec<String>,
}

impl<'de> Deserialize<'de> for GSFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GSFamilyRepr::deserialize(d)?;
        let rebuilt = build_family_with_moduli(r.n, r.group, &r.exponents, &r.moduli)
            .map_err(serde::de::Error::custom)?;
        let stored = GSFamily {
            n: r.n,
            group: r.group,
            exponents: r.exponents,
            moduli: r.moduli,
            free_parameters: r.free_parameters,
            orbits: r.orbits,
            equation: r.equation,
            presentation: r.presentation,
            sig_h: r.sig_h,
            sig_g: r.sig_g,
            genus: r.genus,
            warnings: r.warnings,
        };
        if stored != rebuilt {
            return Err(serde::de::Error::custom(
                "stored family differs from the family rebuilt from its exponent data",
            ));
        }
        Ok(rebuilt)
    }
}

impl GSFamily {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn group(&self) -> ReducedGroup {
        self.group
    }

    pub fn exponents(&self) -> &ExponentData {
        &self.exponents
    }

    /// Values used for the moduli: points for the trivial group, `a_j` for
    /// cyclic and dihedral groups, `f(a_j)` for the Platonic groups.
    pub fn moduli(&self) -> &[CycNumber] {
        &self.moduli
    }

    pub fn free_parameters(&self) -> usize {
        self.free_parameters
    }

    pub fn orbits(&self) -> &[BranchOrbit] {
        &self.orbits
    }

    pub fn equation(&self) -> &CurveEquation {
        &self.equation
    }

    pub fn presentation(&self) -> &AutPresentation {
        &self.presentation
    }

    pub fn sig_h(&self) -> &Signature {
        &self.sig_h
    }

    pub fn sig_g(&self) -> &Signature {
        &self.sig_g
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// `|G| = n·|Ḡ|`.
    pub fn group_order(&self) -> u64 {
        self.n * self.group.order()
    }

    /// Every branch value with its exponent, when the points are explicit
    /// cyclotomic numbers (trivial, cyclic and dihedral groups).
    pub fn branch_points(&self) -> Option<Vec<(ExtPoint, u64)>> {
        let n = self.n;
        let mut pts = Vec::new();
        let mut moduli = self.moduli.iter();
        let fin = |v: CycNumber| ExtPoint::Finite(v);
        match self.group {
            ReducedGroup::Trivial => {
                for o in self.orbits.iter().filter(|o| o.label != "inf") {
                    pts.push((fin(moduli.next()?.clone()), o.exponent));
                }
            }
            ReducedGroup::Cyclic(m) => {
                for o in &self.orbits {
                    match o.label.as_str() {
                        "0" => pts.push((fin(CycNumber::zero(1)), o.exponent)),
                        "inf" => pts.push((ExtPoint::Infinity, o.exponent)),
                        _ => {
                            let a = moduli.next()?;
                            for k in 0..m {
                                let z = CycNumber::zeta_pow(m as u32, k as i64);
                                pts.push((fin(a * &z), o.exponent));
                            }
                        }
                    }
                }
            }
            ReducedGroup::Dihedral(m) => {
                for o in &self.orbits {
                    match o.label.as_str() {
                        "0,inf" => {
                            pts.push((fin(CycNumber::zero(1)), o.exponent));
                            pts.push((ExtPoint::Infinity, o.exponent));
                        }
                        "x^m-1" => {
                            for k in 0..m {
                                pts.push((
                                    fin(CycNumber::zeta_pow(m as u32, k as i64)),
                                    o.exponent,
                                ));
                            }
                        }
                        "x^m+1" => {
                            for k in 0..m {
                                let z = CycNumber::zeta_pow(2 * m as u32, 2 * k as i64 + 1);
                                pts.push((fin(z), o.exponent));
                            }
                        }
                        _ => {
                            let a = moduli.next()?;
                            let ainv = a.inv()?;
                            for k in 0..m {
                                let z = CycNumber::zeta_pow(m as u32, k as i64);
                                pts.push((fin(a * &z), o.exponent));
                                pts.push((fin(&ainv * &z), o.exponent));
                            }
                        }
                    }
                }
            }
            _ => return None,
        }
        pts.retain(|(_, e)| *e % n != 0);
        Some(pts)
    }

    /// Runs [`super::apply_automorphism`] on every generator with an
    /// explicit multiplier.
    pub fn verify_automorphisms(&self) -> Result<()> {
        for (name, ok) in self.presentation.check_against(&self.equation) {
            if ok == Some(false) {
                return Err(Error::InvariantViolation(format!(
                    "generator {name} does not preserve {}",
                    self.equation
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for GSFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} [{}] genus {}: {}",
            self.group, self.n, self.exponents, self.genus, self.equation
        )
    }
}

fn constraint(group: ReducedGroup, name: &'static str, detail: String) -> Error {
    Error::Constraint {
        group: group.to_string(),
        constraint: name,
        detail,
    }
}

fn special_len(group: ReducedGroup) -> usize {
    match group {
        ReducedGroup::Trivial | ReducedGroup::Cyclic(_) => 0,
        ReducedGroup::Dihedral(_) | ReducedGroup::Tetrahedral => 2,
        ReducedGroup::Octahedral | ReducedGroup::Icosahedral => 3,
    }
}

fn check_shape(n: u64, group: ReducedGroup, data: &ExponentData) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("level {n} is below 2")));
    }
    group.validate()?;
    let want = special_len(group);
    if data.special.len() != want {
        return Err(Error::InvalidInput(format!(
            "{group} takes {want} special exponents, got {}",
            data.special.len()
        )));
    }
    if data.l0 != 0 && !matches!(group, ReducedGroup::Cyclic(_) | ReducedGroup::Dihedral(_)) {
        return Err(Error::InvalidInput(format!("{group} has no exponent l0")));
    }
    let all = std::iter::once(&data.l0)
        .chain(&data.special)
        .chain(&data.orbits);
    if let Some(bad) = all.clone().find(|&&l| l >= n) {
        return Err(Error::InvalidInput(format!(
            "exponent {bad} is outside 0..{n}"
        )));
    }
    if all.clone().all(|&l| l == 0) {
        return Err(Error::DegenerateInput("every exponent is zero".into()));
    }
    let g = all.fold(n, |g, &l| g.gcd(&l));
    if g != 1 {
        return Err(constraint(
            group,
            "gcd",
            format!("gcd of n and all exponents is {g}, not 1"),
        ));
    }
    Ok(())
}

/// The orbit list after deleting generic orbits with exponent 0, with the
/// case-specific congruences checked.
fn layout(n: u64, group: ReducedGroup, data: &ExponentData) -> Result<Vec<BranchOrbit>> {
    check_shape(n, group, data)?;
    let sigma = data.generic_sum();
    let sp = &data.special;
    let modn = |v: u64| v % n;
    let mut orbits = Vec::new();
    let (harvey, generic_size) = match group {
        ReducedGroup::Trivial => {
            for &l in data.orbits.iter().filter(|&&l| l != 0) {
                orbits.push(BranchOrbit::new("point", 1, 1, l));
            }
            let inf = modn(n - modn(sigma));
            if inf != 0 {
                orbits.push(BranchOrbit::new("inf", 1, 1, inf));
            }
            return Ok(orbits);
        }
        ReducedGroup::Cyclic(m) => {
            if data.l0 == 0 && modn(m * sigma) != 0 {
                return Err(constraint(
                    group,
                    "l0_zero_sum",
                    format!("l0 = 0 needs m*(l_1+...+l_r) = {} = 0 mod {n}", m * sigma),
                ));
            }
            orbits.push(BranchOrbit::new("0", 1, m, data.l0));
            orbits.push(BranchOrbit::new(
                "inf",
                1,
                m,
                modn(n - modn(data.l0 + m * sigma)),
            ));
            (None, m)
        }
        ReducedGroup::Dihedral(m) => {
            orbits.push(BranchOrbit::new("0,inf", 2, m, data.l0));
            orbits.push(BranchOrbit::new("x^m-1", m, 2, sp[0]));
            orbits.push(BranchOrbit::new("x^m+1", m, 2, sp[1]));
            (
                Some(2 * data.l0 + m * (sp[0] + sp[1]) + 2 * m * sigma),
                2 * m,
            )
        }
        ReducedGroup::Tetrahedral => {
            orbits.push(BranchOrbit::new("R1", 4, 3, sp[0]));
            orbits.push(BranchOrbit::new("R2", 4, 3, sp[0]));
            orbits.push(BranchOrbit::new("R3,inf", 6, 2, sp[1]));
            (Some(8 * sp[0] + 6 * sp[1] + 12 * sigma), 12)
        }
        ReducedGroup::Octahedral => {
            orbits.push(BranchOrbit::new("R1", 8, 3, sp[0]));
            orbits.push(BranchOrbit::new("R2", 12, 2, sp[1]));
            orbits.push(BranchOrbit::new("R3,inf", 6, 4, sp[2]));
            (Some(8 * sp[0] + 12 * sp[1] + 6 * sp[2] + 24 * sigma), 24)
        }
        ReducedGroup::Icosahedral => {
            orbits.push(BranchOrbit::new("R1", 20, 3, sp[0]));
            orbits.push(BranchOrbit::new("R2", 30, 2, sp[1]));
            orbits.push(BranchOrbit::new("R3,inf", 12, 5, sp[2]));
            (Some(20 * sp[0] + 30 * sp[1] + 12 * sp[2] + 60 * sigma), 60)
        }
    };
    if let Some(h) = harvey {
        if modn(h) != 0 {
            return Err(constraint(
                group,
                "harvey_sum",
                format!("weighted exponent sum {h} is not 0 mod {n}"),
            ));
        }
    }
    for (j, &l) in data.orbits.iter().enumerate() {
        if l != 0 {
            orbits.push(BranchOrbit::new(
                format!("orbit {}", j + 1),
                generic_size,
                1,
                l,
            ));
        }
    }
    Ok(orbits)
}

/// `2g - 2 = -2n + Σ |O|·(n - gcd(n, l_O))`.
fn twice_genus_minus_two(n: u64, orbits: &[BranchOrbit]) -> i64 {
    let n_i = n as i64;
    orbits
        .iter()
        .filter(|o| o.exponent % n != 0)
        .map(|o| o.size as i64 * (n_i - n.gcd(&o.exponent) as i64))
        .sum::<i64>()
        - 2 * n_i
}

/// The genus implied by the exponent data alone, or a constraint error.
/// Cheap: builds no polynomials.
pub fn family_genus(n: u64, group: ReducedGroup, data: &ExponentData) -> Result<u64> {
    let orbits = layout(n, group, data)?;
    let chi = twice_genus_minus_two(n, &orbits);
    if chi < 2 {
        return Err(constraint(
            group,
            "genus_at_least_two",
            format!("the curve has genus {}", (chi + 2) / 2),
        ));
    }
    Ok(((chi + 2) / 2) as u64)
}

/// `2g` according to the closed-form genus expressions attached to each
/// reduced group, or `None` for the trivial group.
pub fn closed_form_twice_genus(n: u64, group: ReducedGroup, data: &ExponentData) -> Option<i64> {
    let nn = |l: u64| n.gcd(&l) as i64;
    let n_i = n as i64;
    let r = data.orbits.len() as i64;
    let sum_nj: i64 = data.orbits.iter().map(|&l| nn(l)).sum();
    let sp = &data.special;
    Some(match group {
        ReducedGroup::Trivial => return None,
        ReducedGroup::Cyclic(m) => {
            let m = m as i64;
            let base = if data.l0 == 0 {
                (r * m - 2) * n_i
            } else if (data.l0 as i64 + m * data.generic_sum() as i64) % n_i == 0 {
                (r * m - 1) * n_i
            } else {
                r * m * n_i
            };
            2 + base - m * sum_nj
        }
        ReducedGroup::Dihedral(m) => {
            let m = m as i64;
            2 + 2 * m * (r + 1) * n_i - 2 * nn(data.l0) - m * (nn(sp[0]) + nn(sp[1]) + 2 * sum_nj)
        }
        ReducedGroup::Tetrahedral => {
            2 * (1 + 6 * (r + 1) * n_i - 4 * nn(sp[0]) - 3 * nn(sp[1]) - 6 * sum_nj)
        }
        ReducedGroup::Octahedral => {
            2 * (1 + 12 * (r + 1) * n_i
                - 4 * nn(sp[0])
                - 6 * nn(sp[1])
                - 3 * nn(sp[2])
                - 12 * sum_nj)
        }
        ReducedGroup::Icosahedral => {
            2 * (1 + 30 * (r + 1) * n_i
                - 10 * nn(sp[0])
                - 15 * nn(sp[1])
                - 6 * nn(sp[2])
                - 30 * sum_nj)
        }
    })
}

/// Default moduli: distinct small integers away from the special values.
fn sample_moduli(group: ReducedGroup, count: usize) -> Vec<CycNumber> {
    let start = match group {
        ReducedGroup::Trivial => 0,
        ReducedGroup::Cyclic(_) => 1,
        _ => 2,
    };
    (0..count as i64)
        .map(|k| CycNumber::from_int(start + k))
        .collect()
}

fn check_moduli(group: ReducedGroup, moduli: &[CycNumber]) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidInput(msg));
    let distinct = |vals: &[CycNumber]| {
        (0..vals.len()).all(|i| (i + 1..vals.len()).all(|j| vals[i] != vals[j]))
    };
    match group {
        ReducedGroup::Trivial => {
            if !distinct(moduli) {
                return bad("branch points must be distinct".into());
            }
        }
        ReducedGroup::Cyclic(m) => {
            if moduli.iter().any(|a| a.is_zero()) {
                return bad("a_j must be nonzero".into());
            }
            let pows: Vec<_> = moduli.iter().map(|a| a.pow(m as i64)).collect();
            if !distinct(&pows) {
                return bad("the values a_j^m must be distinct".into());
            }
        }
        ReducedGroup::Dihedral(m) => {
            let mut vals = Vec::new();
            for a in moduli {
                if a.is_zero() {
                    return bad("a_j must be nonzero".into());
                }
                let p = a.pow(m as i64);
                if p.is_one() || (-&p).is_one() {
                    return bad(format!("a_j^m = {p} collides with x^m = ±1"));
                }
                vals.push(p.inv().expect("nonzero"));
                vals.push(p);
            }
            if !distinct(&vals) {
                return bad("the values a_j^(±m) must be distinct".into());
            }
        }
        _ => {
            if moduli.iter().any(|t| t.is_zero() || t.is_one()) {
                return bad("f(a_j) must avoid 0 and 1".into());
            }
            if !distinct(moduli) {
                return bad("the values f(a_j) must be distinct".into());
            }
        }
    }
    Ok(())
}

/// `x^k - c`.
fn binomial(k: u64, c: &CycNumber) -> Poly {
    let mut coeffs = vec![CycNumber::zero(1); k as usize + 1];
    coeffs[0] = -c;
    coeffs[k as usize] = CycNumber::one();
    Poly::new(coeffs)
}

fn zeta(n: u64, k: u64) -> CycNumber {
    CycNumber::zeta_pow(n as u32, k as i64)
}

/// `c / (x + i)^k`.
fn over_x_plus_i(c: CycNumber, k: u64) -> RatFunc {
    let lin = Poly::new(vec![CycNumber::i(), CycNumber::one()]);
    RatFunc::new(Poly::constant(c), lin.pow(k as u32))
}

/// Builds the family with sample moduli.
pub fn build_family(n: u64, group: ReducedGroup, data: &ExponentData) -> Result<GSFamily> {
    let count = match group {
        ReducedGroup::Trivial => data.orbits.iter().filter(|&&l| l != 0).count(),
        _ => data.orbits.iter().filter(|&&l| l % n != 0).count(),
    };
    build_family_with_moduli(n, group, data, &sample_moduli(group, count))
}

/// Builds the family with the given moduli, one per nonzero entry of
/// `data.orbits` (see [`GSFamily::moduli`]).
pub fn build_family_with_moduli(
    n: u64,
    group: ReducedGroup,
    data: &ExponentData,
    moduli: &[CycNumber],
) -> Result<GSFamily> {
    let genus = family_genus(n, group, data)?;
    let orbits = layout(n, group, data)?;
    let generic: Vec<u64> = match group {
        ReducedGroup::Trivial => orbits
            .iter()
            .filter(|o| o.label != "inf")
            .map(|o| o.exponent)
            .collect(),
        _ => orbits
            .iter()
            .filter(|o| o.generic)
            .map(|o| o.exponent)
            .collect(),
    };
    if moduli.len() != generic.len() {
        return Err(Error::InvalidInput(format!(
            "{} moduli given for {} orbits",
            moduli.len(),
            generic.len()
        )));
    }
    check_moduli(group, moduli)?;
    platonic_selftest(group)?;

    let sigma = data.generic_sum();
    let sp = &data.special;
    let x = Poly::x();
    let mut factors: Vec<(Poly, u64)> = Vec::new();
    let mut push = |p: Poly, e: u64| {
        if !e.is_multiple_of(n) {
            factors.push((p, e));
        }
    };
    match group {
        ReducedGroup::Trivial => {
            for (a, &l) in moduli.iter().zip(&generic) {
                push(Poly::linear_root(a), l);
            }
        }
        ReducedGroup::Cyclic(m) => {
            push(x.clone(), data.l0);
            for (a, &l) in moduli.iter().zip(&generic) {
                push(binomial(m, &a.pow(m as i64)), l);
            }
        }
        ReducedGroup::Dihedral(m) => {
            push(x.clone(), data.l0);
            push(binomial(m, &CycNumber::one()), sp[0]);
            push(binomial(m, &CycNumber::from_int(-1)), sp[1]);
            for (a, &l) in moduli.iter().zip(&generic) {
                let p = a.pow(m as i64);
                push(binomial(m, &p), l);
                push(binomial(m, &p.inv().expect("nonzero")), l);
            }
        }
        _ => {
            let [r1, r2, r3] = platonic_polys(group).expect("Platonic group");
            if group == ReducedGroup::Tetrahedral {
                push(r1, sp[0]);
                push(r2, sp[0]);
                push(r3, sp[1]);
            } else {
                push(r1, sp[0]);
                push(r2, sp[1]);
                push(r3, sp[2]);
            }
            for (t, &l) in moduli.iter().zip(&generic) {
                push(generic_orbit_poly(group, t).expect("Platonic group"), l);
            }
        }
    }
    let equation = CurveEquation::new_unchecked(n, factors);

    let presentation = presentation_for(n, group, data, sigma);

    let sig_h = Signature::sphere_dropping_ones(
        orbits
            .iter()
            .flat_map(|o| std::iter::repeat_n(o.branching(n), o.size as usize)),
    );
    let sig_g =
        Signature::sphere_dropping_ones(orbits.iter().map(|o| o.stabilizer * o.branching(n)));

    // three independent genus computations must agree
    let branch: Vec<u64> = orbits
        .iter()
        .filter(|o| o.exponent % n != 0)
        .flat_map(|o| std::iter::repeat_n(o.exponent, o.size as usize))
        .collect();
    let violation = |what: &str, e: Error| {
        Error::InvariantViolation(format!("{group} n={n} [{data}]: {what}: {e}"))
    };
    let g_branch = genus_of_branch_data(n, &branch).map_err(|e| violation("branch data", e))?;
    let g_h = riemann_hurwitz_genus(n, &sig_h).map_err(|e| violation("sig_H", e))?;
    let g_g =
        riemann_hurwitz_genus(n * group.order(), &sig_g).map_err(|e| violation("sig_G", e))?;
    if g_branch != genus || g_h != genus || g_g != genus {
        return Err(Error::InvariantViolation(format!(
            "{group} n={n} [{data}]: genus {genus} from orbits, {g_branch} from branch data, \
             {g_h} from sig_H {sig_h}, {g_g} from sig_G {sig_g}"
        )));
    }

    let mut warnings = Vec::new();
    if let Some(two_g) = closed_form_twice_genus(n, group, data) {
        if two_g != 2 * genus as i64 {
            let shown = if two_g % 2 == 0 {
                (two_g / 2).to_string()
            } else {
                format!("{two_g}/2")
            };
            warnings.push(format!(
                "closed-form genus expression gives {shown}; Riemann-Hurwitz on sig_H gives {genus}"
            ));
        }
    }
    for rel in presentation.relations() {
        let word = presentation.word_text(rel);
        if rel.computed.is_none()
            && rel.word.iter().all(|&g| {
                presentation.generators()[g]
                    .action
                    .multiplier
                    .as_explicit()
                    .is_some()
            })
        {
            return Err(Error::InvariantViolation(format!(
                "{group} n={n} [{data}]: {word} is not a power of tau"
            )));
        }
        if !rel.consistent() {
            if let (StatedPower::Exact(k), Some(c)) = (&rel.stated, rel.computed) {
                warnings.push(format!(
                    "relation {word}: stated tau^{k}, composition gives tau^{c}"
                ));
            }
        }
    }
    if !presentation.tau_is_central() {
        return Err(Error::InvariantViolation(format!(
            "{group} n={n} [{data}]: tau is not central"
        )));
    }

    let free_parameters = match group {
        ReducedGroup::Trivial => orbits.len().saturating_sub(3),
        ReducedGroup::Cyclic(_) => generic.len().saturating_sub(1),
        _ => generic.len(),
    };

    let fam = GSFamily {
        n,
        group,
        exponents: data.clone(),
        moduli: moduli.to_vec(),
        free_parameters,
        orbits,
        equation,
        presentation,
        sig_h,
        sig_g,
        genus,
        warnings,
    };
    fam.verify_automorphisms()?;
    Ok(fam)
}

fn neg_mod(v: u64, n: u64) -> u64 {
    (n - v % n) % n
}

fn presentation_for(
    n: u64,
    group: ReducedGroup,
    data: &ExponentData,
    sigma: u64,
) -> AutPresentation {
    let mut pres = AutPresentation::new(n);
    let sp = &data.special;
    let gens = group.generators();
    let konst = RatFunc::constant;
    match group {
        ReducedGroup::Trivial => {}
        ReducedGroup::Cyclic(m) => {
            let a = pres.push_generator(
                "A",
                Action::new(gens[0].clone(), konst(zeta(m * n, data.l0))),
            );
            pres.push_relation(vec![a], m as u32, StatedPower::Exact(data.l0));
        }
        ReducedGroup::Dihedral(m) => {
            let a = pres.push_generator(
                "A",
                Action::new(gens[0].clone(), konst(zeta(m * n, data.l0))),
            );
            let e = 2 * data.l0 + m * (sp[0] + sp[1] + 2 * sigma);
            let mult = RatFunc::new(
                Poly::constant(zeta(2 * n, sp[0])),
                Poly::monomial(CycNumber::one(), (e / n) as usize),
            );
            let b = pres.push_generator("B", Action::new(MoebiusMap::inversion(), mult));
            pres.set_abelian(false);
            pres.push_relation(vec![a], m as u32, StatedPower::Exact(data.l0));
            pres.push_relation(vec![b], 2, StatedPower::Exact(sp[0]));
            pres.push_relation(vec![a, b], 2, StatedPower::None);
        }
        ReducedGroup::Tetrahedral => {
            let a =
                pres.push_generator("A", Action::new(gens[0].clone(), konst(zeta(2 * n, sp[1]))));
            let e = 4 * sp[0] + 3 * sp[1] + 6 * sigma;
            let k = 2 * e / n;
            let c = &CycNumber::sqrt2().pow(k as i64) * &zeta(4 * n, sp[1] + 2 * sigma);
            let b = pres.push_generator("B", Action::new(gens[1].clone(), over_x_plus_i(c, k)));
            pres.set_abelian(false);
            pres.push_relation(vec![a], 2, StatedPower::Exact(sp[1]));
            pres.push_relation(
                vec![b],
                3,
                StatedPower::Exact(neg_mod(5 * sp[0] + 3 * sp[1] + 6 * sigma, n)),
            );
            pres.push_relation(
                vec![a, b],
                3,
                StatedPower::Exact(neg_mod(3 * (sp[0] + sigma), n)),
            );
        }
        ReducedGroup::Octahedral => {
            let a =
                pres.push_generator("A", Action::new(gens[0].clone(), konst(zeta(4 * n, sp[2]))));
            let e = 4 * sp[0] + 6 * sp[1] + 3 * sp[2] + 12 * sigma;
            let k = 2 * e / n;
            let c =
                &(&CycNumber::sqrt2().pow(k as i64) * &zeta(2 * n, sp[1])) * &zeta(4 * n, sp[2]);
            let b = pres.push_generator("B", Action::new(gens[1].clone(), over_x_plus_i(c, k)));
            pres.set_abelian(false);
            pres.push_relation(vec![a], 4, StatedPower::Exact(sp[2]));
            pres.push_relation(
                vec![b],
                3,
                StatedPower::Exact(neg_mod(5 * sp[0] + 6 * sp[1] + 3 * sp[2] + 15 * sigma, n)),
            );
            pres.push_relation(
                vec![a, b],
                2,
                StatedPower::Exact(neg_mod(4 * sp[0] + 5 * sp[1] + 2 * sp[2] + 12 * sigma, n)),
            );
        }
        ReducedGroup::Icosahedral => {
            let a =
                pres.push_generator("A", Action::new(gens[0].clone(), konst(zeta(5 * n, sp[2]))));
            let b = pres.push_generator(
                "B",
                Action {
                    moebius: gens[1].clone(),
                    multiplier: Multiplier::Unconstructed {
                        description: "L(x) with L(x)^n = T1^(l1+3s) T2^(l2) T3^(l3), \
                                      T_j = R_j(b(x))/R_j(x), s = sum of orbit exponents"
                            .into(),
                    },
                },
            );
            pres.set_abelian(false);
            pres.push_relation(vec![a], 5, StatedPower::Exact(sp[2]));
            pres.push_relation(vec![b], 3, StatedPower::OneOf((0..5).collect()));
        }
    }
    pres
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superelliptic::presentation::abelian_invariants;

    fn data(l0: u64, special: &[u64], orbits: &[u64]) -> ExponentData {
        ExponentData::new(l0, special.to_vec(), orbits.to_vec())
    }

    #[test]
    fn genus_seventeen() {
        let fam = build_family(4, ReducedGroup::Cyclic(4), &data(2, &[], &[1, 1, 1])).unwrap();
        assert_eq!(fam.genus(), 17);
        assert_eq!(
            fam.sig_h().to_string(),
            "(0; 2, 2, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4)"
        );
        assert_eq!(fam.sig_g().to_string(), "(0; 4, 4, 4, 8, 8)");
        assert_eq!(abelian_invariants(fam.presentation()).unwrap(), vec![2, 8]);
        assert_eq!(fam.free_parameters(), 2);
        assert!(fam.warnings()[0].contains("gives 19"));
        fam.verify_automorphisms().unwrap();
    }

    #[test]
    fn abelian_examples() {
        let fam = build_family(3, ReducedGroup::Cyclic(2), &data(0, &[], &[1, 1, 1])).unwrap();
        assert_eq!(abelian_invariants(fam.presentation()).unwrap(), vec![6]);
        let fam = build_family(
            4,
            ReducedGroup::Cyclic(2),
            &data(0, &[], &[1, 1, 1, 1, 1, 1]),
        )
        .unwrap();
        assert_eq!(abelian_invariants(fam.presentation()).unwrap(), vec![2, 4]);
    }

    #[test]
    fn klein_four_hyperelliptic() {
        let fam = build_family(2, ReducedGroup::Dihedral(2), &data(1, &[1, 1], &[1])).unwrap();
        // branch points: 0, ∞, ±1, ±i and four generic points
        assert_eq!(fam.sig_h().len(), 10);
        assert_eq!(fam.genus(), 4);
        fam.verify_automorphisms().unwrap();
        assert!(fam.warnings().is_empty());
    }

    #[test]
    fn tetrahedral_constraint() {
        let err = build_family(3, ReducedGroup::Tetrahedral, &data(0, &[1, 0], &[])).unwrap_err();
        assert!(matches!(
            err,
            Error::Constraint {
                constraint: "harvey_sum",
                ..
            }
        ));
    }

    #[test]
    fn tetrahedral_relations_hold() {
        let fam = build_family(2, ReducedGroup::Tetrahedral, &data(0, &[1, 0], &[])).unwrap();
        assert_eq!(fam.genus(), 3);
        fam.verify_automorphisms().unwrap();
        let fam = build_family(3, ReducedGroup::Tetrahedral, &data(0, &[0, 1], &[1])).unwrap();
        fam.verify_automorphisms().unwrap();
    }

    #[test]
    fn octahedral_bolza() {
        let fam = build_family(2, ReducedGroup::Octahedral, &data(0, &[0, 0, 1], &[])).unwrap();
        assert_eq!(fam.genus(), 2);
        assert_eq!(fam.sig_g().to_string(), "(0; 2, 3, 8)");
        fam.verify_automorphisms().unwrap();
    }

    #[test]
    fn icosahedral_skips_b() {
        let fam = build_family(2, ReducedGroup::Icosahedral, &data(0, &[0, 0, 1], &[])).unwrap();
        assert_eq!(fam.genus(), 5);
        let checks = fam.presentation().check_against(fam.equation());
        assert_eq!(checks[1], ("A".to_string(), Some(true)));
        assert_eq!(checks[2].1, None);
    }

    #[test]
    fn named_errors() {
        let e = build_family(4, ReducedGroup::Cyclic(2), &data(0, &[], &[1])).unwrap_err();
        assert!(matches!(
            e,
            Error::Constraint {
                constraint: "l0_zero_sum",
                ..
            }
        ));
        let e = build_family(4, ReducedGroup::Cyclic(2), &data(2, &[], &[2])).unwrap_err();
        assert!(matches!(
            e,
            Error::Constraint {
                constraint: "gcd",
                ..
            }
        ));
        let e = build_family(2, ReducedGroup::Cyclic(2), &data(1, &[], &[1])).unwrap_err();
        assert!(matches!(
            e,
            Error::Constraint {
                constraint: "genus_at_least_two",
                ..
            }
        ));
        let e = build_family(3, ReducedGroup::Cyclic(2), &data(0, &[], &[0])).unwrap_err();
        assert!(matches!(e, Error::DegenerateInput(_)));
    }

    #[test]
    fn centrality_closure_explicit() {
        use super::super::centrality::{centrality_check, orbit_partition};
        let fam = build_family(5, ReducedGroup::Dihedral(3), &data(1, &[1, 1], &[2])).unwrap();
        let pts = fam.branch_points().unwrap();
        let points: Vec<ExtPoint> = pts.iter().map(|(p, _)| p.clone()).collect();
        let exps: Vec<u64> = pts.iter().map(|(_, e)| *e).collect();
        let part = orbit_partition(fam.group(), &points).unwrap();
        assert!(centrality_check(fam.n(), &part, &exps));
    }

    #[test]
    fn serde_round_trip() {
        let fam = build_family(4, ReducedGroup::Cyclic(4), &data(2, &[], &[1, 1, 1])).unwrap();
        let s = serde_json::to_string(&fam).unwrap();
        let back: GSFamily = serde_json::from_str(&s).unwrap();
        assert_eq!(back, fam);
        let tampered = s.replace("\"genus\":17", "\"genus\":19");
        assert!(serde_json::from_str::<GSFamily>(&tampered).is_err());
    }
}
