use gscurves::census::{canonical_exponent_form, units_mod, ExponentTuple};
use gscurves::moduli::definability_verdict;
use gscurves::record::FamilyRecord;
use gscurves::signatures::riemann_hurwitz_genus;
use gscurves::superelliptic::{
    build_family, centrality_check, family_key, orbit_partition, ExponentData, GSFamily,
    ReducedGroup,
};
use gscurves::uniqueness::uniqueness_verdict;
use proptest::prelude::*;
use proptest::sample::Index;

fn exponent_tuple() -> impl Strategy<Value = ExponentTuple> {
    (2u64..=20, 3usize..=6)
        .prop_flat_map(|(n, s)| (Just(n), prop::collection::vec(1..n, s - 1)))
        .prop_filter_map("last exponent vanishes or gcd > 1", |(n, mut exps)| {
            let last = (n - exps.iter().sum::<u64>() % n) % n;
            if last == 0 {
                return None;
            }
            exps.push(last);
            ExponentTuple::new(n, exps, false).ok()
        })
}

fn group() -> impl Strategy<Value = ReducedGroup> {
    prop_oneof![
        Just(ReducedGroup::Trivial),
        (2u64..=5).prop_map(ReducedGroup::Cyclic),
        (2u64..=5).prop_map(ReducedGroup::Dihedral),
        Just(ReducedGroup::Tetrahedral),
        Just(ReducedGroup::Octahedral),
    ]
}

/// Valid families with small level; invalid draws are filtered out.
fn family() -> impl Strategy<Value = GSFamily> {
    (group(), 2u64..=8)
        .prop_flat_map(|(g, n)| {
            let special = match g {
                ReducedGroup::Dihedral(_) | ReducedGroup::Tetrahedral => 2,
                ReducedGroup::Octahedral => 3,
                _ => 0,
            };
            let generic = match g {
                ReducedGroup::Trivial => 3..=5usize,
                ReducedGroup::Cyclic(_) => 1..=3,
                _ => 0..=1,
            };
            let l0 = match g {
                ReducedGroup::Cyclic(_) | ReducedGroup::Dihedral(_) => 0..n,
                _ => 0..1,
            };
            (
                Just(g),
                Just(n),
                l0,
                prop::collection::vec(0..n, special),
                prop::collection::vec(1..n, generic),
            )
        })
        .prop_filter_map("constraint violated", |(g, n, l0, sp, orb)| {
            build_family(n, g, &ExponentData::new(l0, sp, orb)).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn canonical_form_is_an_orbit_invariant(
        (t, p) in exponent_tuple().prop_flat_map(|t| {
            let ids: Vec<usize> = (0..t.len()).collect();
            (Just(t), Just(ids).prop_shuffle())
        }),
        u in any::<Index>(),
    ) {
        let units = units_mod(t.n());
        let u = units[u.index(units.len())];
        let canon = canonical_exponent_form(&t);
        prop_assert_eq!(canonical_exponent_form(&t.act(u, &p)), canon.clone());
        prop_assert_eq!(canonical_exponent_form(&canon), canon);
    }

    #[test]
    fn genus_double_entry(fam in family()) {
        let n = fam.n();
        let from_h = riemann_hurwitz_genus(n, fam.sig_h()).unwrap();
        let from_g = riemann_hurwitz_genus(n * fam.group().order(), fam.sig_g()).unwrap();
        prop_assert_eq!(from_h, fam.genus());
        prop_assert_eq!(from_g, fam.genus());
    }

    #[test]
    fn json_round_trip(fam in family()) {
        let rec = FamilyRecord::new(fam).unwrap();
        let back = FamilyRecord::from_json(&rec.to_json().unwrap()).unwrap();
        prop_assert_eq!(back, rec);
    }

    #[test]
    fn verdicts_follow_the_key(fam in family(), u in any::<Index>()) {
        // relabelling y ↦ y^u gives the same key and the same verdicts
        let n = fam.n();
        let units = units_mod(n);
        let u = units[u.index(units.len())];
        let data = fam.exponents();
        let scaled = ExponentData::new(
            u * data.l0 % n,
            data.special.iter().map(|l| u * l % n).collect(),
            data.orbits.iter().map(|l| u * l % n).collect(),
        );
        let other = build_family(n, fam.group(), &scaled).unwrap();
        prop_assert_eq!(
            family_key(n, fam.group(), data).unwrap(),
            family_key(n, fam.group(), &scaled).unwrap()
        );
        let (a, b) = (uniqueness_verdict(&fam), uniqueness_verdict(&other));
        prop_assert_eq!(a.is_unique(), b.is_unique());
        prop_assert_eq!(definability_verdict(&fam, &a), definability_verdict(&other, &b));
    }

    #[test]
    fn centrality_closure(fam in family(), k in any::<Index>()) {
        let Some(points) = fam.branch_points() else { return Ok(()) };
        let (pts, exps): (Vec<_>, Vec<u64>) = points.into_iter().unzip();
        let blocks = orbit_partition(fam.group(), &pts).unwrap();
        prop_assert!(centrality_check(fam.n(), &blocks, &exps));
        // changing one exponent inside a nontrivial block breaks it
        if let Some(block) = blocks.iter().find(|b| b.len() > 1) {
            let mut bad = exps.clone();
            let i = block[k.index(block.len())];
            bad[i] = (bad[i] + 1) % fam.n();
            prop_assert!(!centrality_check(fam.n(), &blocks, &bad));
        }
    }

    #[test]
    fn odd_level_is_unique(fam in family()) {
        if fam.n() % 2 == 1 || fam.n() == 2 {
            prop_assert!(uniqueness_verdict(&fam).is_unique());
        }
    }
}
