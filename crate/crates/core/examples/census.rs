//! The cyclic n-gonal census of a genus: signature tuples, exponent classes
//! and an explicit isomorphism between two concrete curves.

use gscurves::census::{are_isomorphic_curves, census_classes, int_point, BranchedCurve};

fn main() -> gscurves::Result<()> {
    let g = 2;
    for row in census_classes(g, None)? {
        let classes: Vec<String> = row.exponent_classes.iter().map(|e| e.to_string()).collect();
        println!("{}: {}", row.tuple, classes.join("  "));
    }

    // y^5 = x(x-1)(x-2)^3 and y^5 = x(x-1)^2(x-2)^2, ∞ unbranched
    let a = BranchedCurve::new(
        5,
        vec![int_point(0), int_point(1), int_point(2)],
        vec![1, 1, 3],
    )?;
    let b = BranchedCurve::new(
        5,
        vec![int_point(0), int_point(1), int_point(2)],
        vec![1, 2, 2],
    )?;
    match are_isomorphic_curves(&a, &b) {
        Some(w) => println!(
            "isomorphic via x -> {}, y -> y^{}; validates: {}",
            w.moebius,
            w.unit,
            w.validates(&a, &b)
        ),
        None => println!("not isomorphic"),
    }
    Ok(())
}
