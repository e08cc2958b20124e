//! Generalized superelliptic curves: `y^n = ∏ f_k(x)^{e_k}` where
//! `τ(x, y) = (x, ω_n y)` is central in the full automorphism group.

pub mod centrality;
pub mod enumerate;
pub mod equation;
pub mod equivariance;
pub mod family;
pub mod group;
pub mod presentation;

pub use centrality::{centrality_check, orbit_partition};
pub use enumerate::{family_exponent_tuple, family_key, gs_census, FamilyKey};
pub use equation::{apply_automorphism, Action, CurveEquation, Multiplier};
pub use equivariance::{
    equivariance_report, platonic_polys, verify_equivariance, EquivarianceReport, IdentityCheck,
};
pub use family::{
    build_family, build_family_with_moduli, closed_form_twice_genus, family_genus, BranchOrbit,
    ExponentData, GSFamily,
};
pub use group::ReducedGroup;
pub use presentation::{abelian_invariants, AutPresentation, Generator, Relation, StatedPower};
