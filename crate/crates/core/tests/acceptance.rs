//! Acceptance criteria, one line each: `PASS`/`FAIL`, the criterion, elapsed
//! time against its limit. Runs without the libtest harness so the lines are
//! always visible; exits nonzero if anything fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use gscurves::census::{
    canonical_exponent_form, enumerate_exponents, enumerate_fg, genus_of_tuple, units_mod,
    ExponentTuple, SignatureTuple,
};
use gscurves::moduli::{census_definability_summary, definability_verdict, DefinabilityRule};
use gscurves::signatures::{harvey_check, riemann_hurwitz_genus};
use gscurves::superelliptic::{
    abelian_invariants, apply_automorphism, build_family, closed_form_twice_genus,
    equivariance_report, gs_census, ExponentData, ReducedGroup,
};
use gscurves::uniqueness::{
    exceptional_family, is_exceptional_shape, uniqueness_verdict, UniquenessVerdict,
};
use gscurves::Error;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn genus_seventeen() -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = gscurves::cli::run(
        [
            "gsc",
            "family",
            "--group",
            "cyclic:4",
            "--n",
            "4",
            "--l0",
            "2",
            "--exponents",
            "1,1,1",
        ],
        &mut out,
        &mut err,
    );
    ensure!(code == 0, "exit {code}: {}", String::from_utf8_lossy(&err));
    let v: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    ensure!(v["genus"] == 17, "genus {}", v["genus"]);
    ensure!(
        v["abelian_invariants"] == serde_json::json!([2, 8]),
        "invariants {}",
        v["abelian_invariants"]
    );
    Ok("genus 17, invariants [2, 8]".into())
}

/// Some `(l_j)` with `ord(l_j) = n_j`, `Σ l_j ≡ 0` and `gcd(n, l_j…) = 1`.
fn brute_force_exists(n: u64, orders: &[u64]) -> bool {
    let choices: Vec<Vec<u64>> = orders
        .iter()
        .map(|&o| (1..n).filter(|&l| n / n.gcd(&l) == o).collect())
        .collect();
    fn rec(n: u64, choices: &[Vec<u64>], sum: u64, g: u64) -> bool {
        match choices.split_first() {
            None => sum.is_multiple_of(n) && g == 1,
            Some((first, rest)) => first
                .iter()
                .any(|&l| rec(n, rest, (sum + l) % n, g.gcd(&l))),
        }
    }
    rec(n, &choices, 0, n)
}

fn harvey_oracle() -> Outcome {
    let mut checked = 0;
    for n in 2..=12u64 {
        let divs: Vec<u64> = (2..=n).filter(|d| n % d == 0).collect();
        for size in 3..=5 {
            let mut stack = vec![(Vec::new(), 0usize)];
            while let Some((cur, start)) = stack.pop() {
                if cur.len() == size {
                    let h = harvey_check(n, &cur).map_err(|e| e.to_string())?;
                    ensure!(
                        h == brute_force_exists(n, &cur),
                        "n = {n}, orders {cur:?}: harvey_check says {h}"
                    );
                    checked += 1;
                    continue;
                }
                for i in start..divs.len() {
                    let mut next = cur.clone();
                    next.push(divs[i]);
                    stack.push((next, i));
                }
            }
        }
    }
    Ok(format!("{checked} order multisets agree"))
}

fn genus_two_census() -> Outcome {
    let st = |n, o: &[u64]| SignatureTuple {
        n,
        orders: o.to_vec(),
    };
    let mut expected = vec![
        st(2, &[2, 2, 2, 2, 2, 2]),
        st(3, &[3, 3, 3, 3]),
        st(4, &[2, 2, 4, 4]),
        st(5, &[5, 5, 5]),
        st(6, &[2, 2, 3, 3]),
        st(6, &[3, 6, 6]),
        st(8, &[2, 8, 8]),
        st(10, &[2, 5, 10]),
    ];
    let mut got = enumerate_fg(2, None);
    got.sort();
    expected.sort();
    ensure!(got == expected, "got {got:?}");
    for t in &got {
        ensure!(
            harvey_check(t.n, &t.orders) == Ok(true),
            "{t} fails harvey_check"
        );
        let exps = enumerate_exponents(t);
        ensure!(!exps.is_empty(), "{t} has no exponent tuple");
        for e in &exps {
            ensure!(
                genus_of_tuple(e) == Ok(2),
                "{e} has genus {:?}",
                genus_of_tuple(e)
            );
        }
    }
    Ok("8 tuples".into())
}

fn equivariance() -> Outcome {
    let mut total = 0;
    for g in [
        ReducedGroup::Tetrahedral,
        ReducedGroup::Octahedral,
        ReducedGroup::Icosahedral,
    ] {
        let r = equivariance_report(g).map_err(|e| e.to_string())?;
        for c in &r.checks {
            ensure!(c.passed, "{g}: {} failed", c.identity);
        }
        total += r.checks.len();
    }
    Ok(format!("{total} identities"))
}

fn random_data(rng: &mut ChaCha8Rng, group: ReducedGroup, n: u64) -> ExponentData {
    let special = match group {
        ReducedGroup::Dihedral(_) | ReducedGroup::Tetrahedral => 2,
        ReducedGroup::Octahedral | ReducedGroup::Icosahedral => 3,
        _ => 0,
    };
    let generic = match group {
        ReducedGroup::Cyclic(_) => rng.gen_range(1..=3),
        ReducedGroup::Dihedral(_) => rng.gen_range(0..=2),
        _ => rng.gen_range(0..=1),
    };
    let l0 = match group {
        ReducedGroup::Cyclic(_) | ReducedGroup::Dihedral(_) => rng.gen_range(0..n),
        _ => 0,
    };
    ExponentData::new(
        l0,
        (0..special).map(|_| rng.gen_range(0..n)).collect(),
        (0..generic).map(|_| rng.gen_range(1..n)).collect(),
    )
}

fn genus_double_entry() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut built = 0;
    let mut warned = 0;
    let mut attempts = 0;
    let per_case = 40;
    for case in 0..5 {
        let mut count = 0;
        while count < per_case {
            attempts += 1;
            ensure!(
                attempts < 200_000,
                "could not generate enough valid families"
            );
            let group = match case {
                0 => ReducedGroup::Cyclic(rng.gen_range(2..=6)),
                1 => ReducedGroup::Dihedral(rng.gen_range(2..=6)),
                2 => ReducedGroup::Tetrahedral,
                3 => ReducedGroup::Octahedral,
                _ => ReducedGroup::Icosahedral,
            };
            let n = rng.gen_range(2..=10);
            let data = random_data(&mut rng, group, n);
            let fam = match build_family(n, group, &data) {
                Ok(f) => f,
                Err(Error::InvariantViolation(e)) => {
                    return Err(format!("{group} n={n} {data}: {e}"))
                }
                Err(_) => continue,
            };
            let gh = riemann_hurwitz_genus(n, fam.sig_h()).map_err(|e| e.to_string())?;
            let gg =
                riemann_hurwitz_genus(n * group.order(), fam.sig_g()).map_err(|e| e.to_string())?;
            ensure!(
                gh == gg && gh == fam.genus(),
                "{fam}: sig_H {gh}, sig_G {gg}"
            );
            if let Some(tw) = closed_form_twice_genus(n, group, &data) {
                if tw != 2 * gh as i64 {
                    ensure!(
                        fam.warnings()
                            .iter()
                            .any(|w| w.contains("closed-form genus")),
                        "{fam}: closed form {tw} not reported"
                    );
                    warned += 1;
                }
            }
            count += 1;
            built += 1;
        }
    }
    Ok(format!("{built} families, {warned} closed-form warnings"))
}

fn exceptional_pipeline() -> Outcome {
    let fam = exceptional_family(2, 1, 2, &[]).map_err(|e| e.to_string())?;
    let w = is_exceptional_shape(&fam).ok_or("shape did not match")?;
    ensure!(w.d == 2 && w.l1 == 1 && w.l2 == 2, "matched {w:?}");
    ensure!(
        apply_automorphism(&w.equation, &w.eta()),
        "eta is not an automorphism"
    );
    let inv = abelian_invariants(&w.presentation()).map_err(|e| e.to_string())?;
    ensure!(inv == vec![2, 4], "invariants {inv:?}");
    // y^4 = x^2 (x^2-1)(x^2-a^2)^2: ±1, ±a have order 4, 0 and ±a order 2,
    // ∞ has exponent 4 - (2 + 2 + 4) mod 4 = 0: 2g - 2 = 4(-2) + 2·3 + 3·2
    ensure!(fam.genus() == 3, "genus {}", fam.genus());
    ensure!(
        matches!(
            uniqueness_verdict(&fam),
            UniquenessVerdict::PossiblyNonUnique { .. }
        ),
        "verdict {}",
        uniqueness_verdict(&fam)
    );
    Ok("d = 2 matched, invariants [2, 4], genus 3".into())
}

fn canonicalization_orbits() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    while done < 1000 {
        let n = rng.gen_range(2..=20u64);
        let s = rng.gen_range(3..=6usize);
        let mut exps: Vec<u64> = (0..s - 1).map(|_| rng.gen_range(1..n)).collect();
        let last = (n - exps.iter().sum::<u64>() % n) % n;
        if last == 0 {
            continue;
        }
        exps.push(last);
        let Ok(t) = ExponentTuple::new(n, exps, false) else {
            continue;
        };
        let canon = canonical_exponent_form(&t);
        let units = units_mod(n);
        for _ in 0..20 {
            let u = *units.choose(&mut rng).unwrap();
            let mut perm: Vec<usize> = (0..s).collect();
            perm.shuffle(&mut rng);
            let moved = t.act(u, &perm);
            ensure!(
                canonical_exponent_form(&moved) == canon,
                "{t} moved by ({u}, {perm:?}) changes canonical form"
            );
        }
        done += 1;
    }
    Ok("1000 tuples x 20 actions".into())
}

fn definability_partition() -> Outcome {
    let mut total = 0;
    for g in [2, 3] {
        let fams = gs_census(g, None).map_err(|e| e.to_string())?;
        let summary = census_definability_summary(&fams);
        let tallied: usize = summary.by_rule.values().sum::<usize>() + summary.undetermined.len();
        ensure!(
            tallied == fams.len() && summary.total == fams.len(),
            "genus {g}: {tallied} verdicts for {} families",
            fams.len()
        );
        for fam in &fams {
            let u = uniqueness_verdict(fam);
            let v = definability_verdict(fam, &u);
            let sig = fam.sig_g();
            if sig.orbifold_genus() == 0 && sig.len() == 3 {
                ensure!(
                    v.rule() == Some(DefinabilityRule::Quasiplatonic),
                    "{fam}: {v}"
                );
            }
            if fam.n() % 2 == 1 {
                ensure!(u.is_unique(), "{fam}: {u}");
            }
        }
        total += fams.len();
    }
    Ok(format!("{total} families"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 genus-17 example via CLI", genus_seventeen, 1),
        ("2 Harvey oracle equivalence", harvey_oracle, 30),
        ("3 genus-2 census", genus_two_census, 5),
        ("4 equivariance self-test", equivariance, 10),
        ("5 genus double-entry bookkeeping", genus_double_entry, 60),
        ("6 exceptional family pipeline", exceptional_pipeline, 1),
        (
            "7 canonicalization orbit property",
            canonicalization_orbits,
            30,
        ),
        ("8 definability partition", definability_partition, 60),
    ];
    let mut failures = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over the time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{status} [{name}] {:.3}s / {limit}s: {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 8 passed", 8 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
