//! Harvey's admissibility test, the genus of a cyclic cover and
//! Riemann-Hurwitz for signatures.

use gscurves::census::{genus_of_tuple, ExponentTuple};
use gscurves::signatures::{
    harvey_check, is_odd_signature, riemann_hurwitz_genus, singerman_inclusions, Signature,
};

fn main() -> gscurves::Result<()> {
    for (n, orders) in [(4, vec![2, 2, 4]), (4, vec![2, 4, 4]), (6, vec![2, 3, 6])] {
        println!("harvey n={n} {orders:?}: {}", harvey_check(n, &orders)?);
    }

    // y^5 = x (x - 1) (x - 2)^3
    let t = ExponentTuple::from_finite(5, &[1, 1, 3])?;
    println!("{t} has genus {}", genus_of_tuple(&t)?);
    // ∞ is added when the finite exponents do not sum to 0 mod n
    let t = ExponentTuple::from_finite(8, &[1, 4])?;
    println!("{t} has genus {}", genus_of_tuple(&t)?);

    let sig = Signature::new(0, vec![2, 3, 8])?;
    println!(
        "{sig}: genus {} for a group of order 48",
        riemann_hurwitz_genus(48, &sig)?
    );
    println!("{sig} odd: {}", is_odd_signature(&sig));
    for inc in singerman_inclusions(&Signature::new(0, vec![2, 2, 2, 3])?) {
        println!(
            "(0; 2, 2, 2, 3) < {} with index {}",
            inc.signature, inc.index
        );
    }
    Ok(())
}
