//! Level 2d curves with the exceptional shape, where a second
//! superelliptic group may exist.

use gscurves::superelliptic::{abelian_invariants, apply_automorphism};
use gscurves::uniqueness::{
    exceptional_family, exceptional_quotient_signature, is_exceptional_shape, uniqueness_verdict,
};

fn main() -> gscurves::Result<()> {
    for (d, l1, l2) in [(2, 1, 2), (2, 1, 3), (3, 1, 4)] {
        let fam = exceptional_family(d, l1, l2, &[])?;
        println!("{}", fam.equation());
        println!(
            "  genus {}, verdict: {}",
            fam.genus(),
            uniqueness_verdict(&fam)
        );
        let Some(w) = is_exceptional_shape(&fam) else {
            continue;
        };
        println!(
            "  eta is an automorphism: {}",
            apply_automorphism(&w.equation, &w.eta())
        );
        println!("  K = {:?}", abelian_invariants(&w.presentation())?);
        println!("  X/K: {}", exceptional_quotient_signature(&w)?);
        for msg in &w.warnings {
            println!("  warning: {msg}");
        }
    }
    Ok(())
}
