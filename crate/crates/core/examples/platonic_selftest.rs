//! The invariant-polynomial identities behind the A_4, S_4 and A_5 cases,
//! checked as exact rational-function identities.

use gscurves::superelliptic::{equivariance_report, ReducedGroup};

fn main() -> gscurves::Result<()> {
    for g in [
        ReducedGroup::Tetrahedral,
        ReducedGroup::Octahedral,
        ReducedGroup::Icosahedral,
    ] {
        let report = equivariance_report(g)?;
        println!("{g}:");
        for c in &report.checks {
            println!(
                "  [{}] {}",
                if c.passed { "ok" } else { "FAIL" },
                c.identity
            );
        }
    }
    Ok(())
}
