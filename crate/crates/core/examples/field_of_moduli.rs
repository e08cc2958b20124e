//! All generalized superelliptic families of genus 3 with uniqueness and
//! field-of-moduli verdicts.

use gscurves::moduli::{census_definability_summary, definability_verdict};
use gscurves::superelliptic::gs_census;
use gscurves::uniqueness::uniqueness_verdict;

fn main() -> gscurves::Result<()> {
    let fams = gs_census(3, None)?;
    for fam in &fams {
        let u = uniqueness_verdict(fam);
        println!(
            "{:<40} {:<32} {}",
            format!("{} n={}", fam.group(), fam.n()),
            u.to_string(),
            definability_verdict(fam, &u)
        );
    }
    let summary = census_definability_summary(&fams);
    println!("\n{} families", summary.total);
    for (rule, count) in &summary.by_rule {
        println!("  {rule}: {count}");
    }
    println!("  undetermined: {}", summary.undetermined.len());
    Ok(())
}
