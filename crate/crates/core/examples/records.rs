//! Family records as JSON: serialization, and the check that a stored
//! record still matches what the library computes.

use gscurves::record::FamilyRecord;
use gscurves::superelliptic::{build_family, ExponentData, ReducedGroup};

fn main() -> gscurves::Result<()> {
    let fam = build_family(
        3,
        ReducedGroup::Dihedral(3),
        &ExponentData::new(0, vec![1, 2], vec![]),
    )?;
    let rec = FamilyRecord::new(fam)?;
    let json = rec.to_json()?;
    println!("{json}");
    assert_eq!(FamilyRecord::from_json(&json)?, rec);

    let tampered = json.replacen("\"genus\": ", "\"genus\": 1", 1);
    match FamilyRecord::from_json(&tampered) {
        Ok(_) => println!("tampered record accepted"),
        Err(e) => println!("tampered record rejected: {e}"),
    }
    Ok(())
}
