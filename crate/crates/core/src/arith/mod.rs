//! Exact arithmetic: rationals, cyclotomic numbers, polynomials, rational
//! functions and Möbius maps.

pub mod cyclotomic;
pub mod factored;
pub mod moebius;
pub mod poly;
pub mod ratfunc;

/// Arbitrary-precision rational numbers in lowest terms.
pub type Rational = num_rational::BigRational;

pub use cyclotomic::CycNumber;
pub use factored::FactoredRatFunc;
pub use moebius::{ExtPoint, MoebiusMap};
pub use poly::Poly;
pub use ratfunc::RatFunc;

/// `cyc_embed`: the same element written over conductor `m`.
pub fn cyc_embed(x: &CycNumber, m: u32) -> crate::Result<CycNumber> {
    x.embed(m)
}

/// `f ∘ M` in lowest terms.
pub fn ratfunc_compose(f: &RatFunc, m: &MoebiusMap) -> RatFunc {
    f.compose(m)
}

/// The Möbius map sending each `src[k]` to `dst[k]`.
pub fn moebius_from_three_points(
    src: &[ExtPoint; 3],
    dst: &[ExtPoint; 3],
) -> crate::Result<MoebiusMap> {
    MoebiusMap::from_three_points(src, dst)
}
