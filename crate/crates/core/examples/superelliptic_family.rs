//! A generalized superelliptic family with reduced group C_4: equation,
//! automorphism presentation, signatures and genus.

use gscurves::superelliptic::{abelian_invariants, build_family, ExponentData, ReducedGroup};

fn main() -> gscurves::Result<()> {
    let data = ExponentData::new(2, vec![], vec![1, 1, 1]);
    let fam = build_family(4, ReducedGroup::Cyclic(4), &data)?;
    println!("{}", fam.equation());
    println!("genus {}", fam.genus());
    println!("X -> X/H: {}", fam.sig_h());
    println!("X -> X/G: {}", fam.sig_g());
    println!("{}", fam.presentation());
    println!("G = {:?}", abelian_invariants(fam.presentation())?);
    println!("free parameters: {}", fam.free_parameters());
    for o in fam.orbits() {
        println!(
            "  orbit {:>10}: size {:>2}, exponent {}",
            o.label, o.size, o.exponent
        );
    }
    for w in fam.warnings() {
        println!("warning: {w}");
    }

    // an octahedral family: the Bolza curve y^2 = x^5 - x
    let bolza = build_family(
        2,
        ReducedGroup::Octahedral,
        &ExponentData::new(0, vec![0, 0, 1], vec![]),
    )?;
    println!("{bolza}");
    println!("{}", bolza.presentation());
    Ok(())
}
