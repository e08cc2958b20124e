//! Exact arithmetic in cyclotomic fields, polynomials over them and
//! Möbius maps.

use gscurves::arith::{CycNumber, ExtPoint, MoebiusMap, Poly, RatFunc};

fn main() -> gscurves::Result<()> {
    let z5 = CycNumber::zeta(5);
    let golden = &(&z5 + &z5.pow(4)) + &CycNumber::one();
    println!("1 + z5 + z5^4 = {golden}");
    println!(
        "its square minus itself: {}",
        &(&golden * &golden) - &golden
    );

    // i lives in Q(z4); products with z3 land in Q(z12)
    let w = &CycNumber::i() * &CycNumber::zeta(3);
    println!("i * z3 = {w} (conductor {})", w.conductor());
    println!("sqrt(2)^2 = {}", CycNumber::sqrt2().pow(2));
    let parsed: CycNumber = "z8 + z8^7".parse()?;
    println!("z8 + z8^7 == sqrt(2): {}", parsed == CycNumber::sqrt2());

    let f = Poly::from_ints(&[-1, 0, 0, 0, 1]);
    let g = Poly::from_ints(&[-1, 0, 1]);
    println!("gcd({f}, {g}) = {}", f.gcd(&g));

    // x -> (x + i)/(x - i) sends 0, i, ∞ to -1, ∞, 1
    let i = CycNumber::i();
    let m = MoebiusMap::new(CycNumber::one(), i.clone(), CycNumber::one(), -&i)?;
    for p in [
        ExtPoint::finite(0),
        ExtPoint::Finite(i.clone()),
        ExtPoint::Infinity,
    ] {
        println!("{p} -> {}", m.apply(&p));
    }
    let r = RatFunc::from_poly(f).compose(&m);
    println!("(x^4 - 1) composed: {r}");
    Ok(())
}
