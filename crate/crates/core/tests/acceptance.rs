//! End-to-end acceptance checks, one line per criterion.

use std::collections::{BTreeMap, BTreeSet};
use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use corners::bijections::{
    shape_correspondence, symmetric_corner_decomposition, symmetric_to_type_b, type_b_to_symmetric,
};
use corners::chain::{
    corner_event_probability_formula, dp_formula_mismatches, evaluate_pgf, expected_corners, first_power_closed_form,
    power_expectation, pushforward_check, rising_factorial_pgf, second_power_closed_form, shifted_binomial_law,
    total_corners, ChainFamily, DpOracle, Statistic,
};
use corners::enumerator::{enumerate_shapes, extend_permutation, parent_permutation, Census, Enumerator};
use corners::sampler::{chi_square_test, monte_carlo_corner_report, sample_permutation_tableaux};
use corners::verify::drawn_pair;
use corners::{Exec, Family};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn fact(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |a, i| a * i)
}

fn signed_fact(n: usize) -> BigUint {
    (BigUint::one() << n) * fact(n)
}

fn ratio(p: &BigUint, q: &BigUint) -> BigRational {
    BigRational::new(p.clone().into(), q.clone().into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn census(e: &Enumerator, n: usize, f: Family) -> Result<Census, String> {
    e.census(n, f).map_err(|err| err.to_string())
}

fn per_k_matches(e: &Enumerator, family: Family, ns: std::ops::RangeInclusive<usize>) -> Check {
    for n in ns {
        let c = census(e, n, family)?;
        for k in corners::chain::formula_range(n, family) {
            let got = ratio(&c.corner_counts_by_k[&k], &c.cardinality);
            let want = corner_event_probability_formula(n, k, family).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("{family} n={n} k={k}: census {got} vs formula {want}"))?;
        }
    }
    Ok(())
}

fn cardinalities(e: &Enumerator) -> Check {
    for n in 1..=6 {
        let got = e.permutation(n).map_err(|e| e.to_string())?.len();
        ensure(BigUint::from(got) == fact(n), || format!("|P_{n}| = {got}"))?;
    }
    for n in 1..=8 {
        let got = e.permutation_by_extension(n).map_err(|e| e.to_string())?.len();
        ensure(BigUint::from(got) == fact(n), || format!("|P_{n}| by extension = {got}"))?;
    }
    for n in 1..=7 {
        let got = e.tree_like(n).map_err(|e| e.to_string())?.len();
        ensure(BigUint::from(got) == fact(n), || format!("|T_{n}| = {got}"))?;
    }
    for n in 1..=6 {
        let got = e.type_b(n).map_err(|e| e.to_string())?.len();
        ensure(BigUint::from(got) == signed_fact(n), || format!("|B_{n}| = {got}"))?;
    }
    for n in 1..=5 {
        let got = e.symmetric(n).map_err(|e| e.to_string())?.len();
        ensure(BigUint::from(got) == signed_fact(n), || format!("symmetric n={n}: {got}"))?;
    }
    Ok(())
}

fn tree_like_totals(e: &Enumerator) -> Check {
    for n in 2..=7 {
        let c = census(e, n, Family::TreeLike)?;
        let want = fact(n) * (n + 4) / 6u32;
        ensure(c.total_corners == want, || format!("c(T_{n}) = {} want {want}", c.total_corners))?;
        ensure(total_corners(n, Family::TreeLike).ok() == Some(want.clone()), || format!("closed form at {n}"))?;
    }
    ensure(census(e, 5, Family::TreeLike)?.total_corners == BigUint::from(180u32), || "c(T_5) != 180".into())
}

fn permutation_totals(e: &Enumerator) -> Check {
    for n in 2..=8 {
        let c = census(e, n, Family::Permutation)?;
        let mean = ratio(&c.total_corners, &c.cardinality);
        let want = expected_corners(n, Family::Permutation).map_err(|e| e.to_string())?;
        ensure(mean == want, || format!("E C at n={n}: {mean} vs {want}"))?;
        ensure(c.last_step_south_count == fact(n - 1), || format!("last step south at n={n}"))?;
        let t = if n <= 7 { Some(census(e, n, Family::TreeLike)?.total_corners) } else { None };
        if let Some(t) = t {
            ensure(t == &c.total_corners + fact(n - 1), || format!("c(T_{n}) != c(P_{n}) + (n-1)!"))?;
        }
    }
    Ok(())
}

fn type_b(e: &Enumerator) -> Check {
    per_k_matches(e, Family::TypeB, 2..=6)?;
    for n in 2..=6 {
        let c = census(e, n, Family::TypeB)?;
        ensure(c.cardinality == signed_fact(n), || format!("|B_{n}|"))?;
        let mean = ratio(&c.total_corners, &c.cardinality);
        ensure(mean == expected_corners(n, Family::TypeB).unwrap(), || format!("type-B mean at n={n}: {mean}"))?;
    }
    let two = census(e, 2, Family::TypeB)?;
    ensure(ratio(&two.total_corners, &two.cardinality) == BigRational::new(3.into(), 8.into()), || "B_2 mean".into())
}

fn symmetric(e: &Enumerator) -> Check {
    per_k_matches(e, Family::Symmetric, 2..=5)?;
    for n in 1..=5 {
        let c = census(e, n, Family::Symmetric)?;
        if n >= 2 {
            let want = signed_fact(n) * (4 * n + 13) / 12u32;
            ensure(c.total_corners == want, || format!("symmetric total at n={n}: {} vs {want}", c.total_corners))?;
        }
        let d = symmetric_corner_decomposition(n, e).map_err(|e| e.to_string())?;
        let south = (BigUint::one() << (n - 1)) * fact(n - 1);
        let west = (BigUint::one() << (n - 1)) * fact(n);
        ensure(&d.south_term >> 1u32 == south, || format!("|S_n| at n={n}"))?;
        ensure(d.west_term == west, || format!("|W_1| at n={n}"))?;
        ensure(d.sum() == c.total_corners, || format!("decomposition at n={n}"))?;
    }
    ensure(census(e, 2, Family::Symmetric)?.total_corners == BigUint::from(14u32), || "size-5 total != 14".into())
}

fn dp_oracle() -> Check {
    let oracle = DpOracle::new(200);
    let bad = dp_formula_mismatches(&oracle, 200, Exec::default()).map_err(|e| e.to_string())?;
    ensure(bad.is_empty(), || format!("{} mismatches, first {:?}", bad.len(), bad.first()))?;
    for family in [ChainFamily::Permutation, ChainFamily::TypeB] {
        for n in 0..=200 {
            let want = if family == ChainFamily::Permutation { fact(n) } else { signed_fact(n) };
            ensure(oracle.table(family).count(n).ok() == Some(want), || format!("{family:?} count at {n}"))?;
        }
    }
    Ok(())
}

fn bijections(e: &Enumerator) -> Check {
    for n in 1..=4 {
        for b in e.type_b(n).map_err(|e| e.to_string())? {
            let back = type_b_to_symmetric(&b).and_then(|s| symmetric_to_type_b(&s));
            ensure(back.as_ref() == Ok(&b), || format!("type-B round trip fails on {b:?}"))?;
        }
        for s in e.symmetric(n).map_err(|e| e.to_string())? {
            let back = symmetric_to_type_b(&s).and_then(|b| type_b_to_symmetric(&b));
            ensure(back.as_ref() == Ok(&s), || format!("symmetric round trip fails on {s:?}"))?;
        }
    }
    let (s, b) = drawn_pair();
    ensure(symmetric_to_type_b(&s).as_ref() == Ok(&b), || "drawn pair forward".into())?;
    ensure(type_b_to_symmetric(&b).as_ref() == Ok(&s), || "drawn pair backward".into())?;
    for n in 1..=6 {
        let shapes = enumerate_shapes(n + 1, Family::TreeLike);
        let targets: BTreeSet<_> = enumerate_shapes(n, Family::Permutation).into_iter().collect();
        let mut images = BTreeSet::new();
        for p in shapes {
            let c = shape_correspondence(&p).map_err(|e| e.to_string())?;
            ensure(p.corner_count() == c.permutation_path.corner_count() + c.corner_difference(), || {
                format!("shape {p}")
            })?;
            images.insert(c.permutation_path);
        }
        ensure(images == targets, || format!("shape correspondence is not onto at n={n}"))?;
    }
    Ok(())
}

fn extensions(e: &Enumerator) -> Check {
    for n in 2..=7 {
        let small = e.permutation(n - 1).map_err(|e| e.to_string())?;
        let all: BTreeSet<_> = e.permutation(n).map_err(|e| e.to_string())?.into_iter().collect();
        let mut seen = BTreeSet::new();
        let mut transitions: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        let mut parents_by_u: BTreeMap<usize, u64> = BTreeMap::new();
        for p in &small {
            let u = p.unrestricted_row_count();
            *parents_by_u.entry(u).or_default() += 1;
            let kids = extend_permutation(p);
            ensure(kids.len() == 1 << u, || format!("multiplicity at n={n}"))?;
            for c in kids {
                ensure(parent_permutation(&c).as_ref() == Ok(p), || format!("parent at n={n}"))?;
                *transitions.entry((u, c.unrestricted_row_count())).or_default() += 1;
                ensure(seen.insert(c), || format!("extension images overlap at n={n}"))?;
            }
        }
        ensure(seen == all, || format!("extension images do not cover P_{n}"))?;
        for (&u, &m) in &parents_by_u {
            for (j, p) in shifted_binomial_law(u).iter().enumerate() {
                let got = transitions.get(&(u, j)).copied().unwrap_or(0);
                let got = BigRational::new(got.into(), (BigUint::from(m) << u).into());
                ensure(&got == p, || format!("transition law u={u} j={j} at n={n}"))?;
            }
        }
        let mut stats = vec![Statistic::One, Statistic::TwoPowU];
        stats.extend((1..n).map(Statistic::CornerAt));
        for s in stats {
            let r = pushforward_check(n, s, e).map_err(|e| e.to_string())?;
            ensure(r.holds(), || format!("push-forward {r:?}"))?;
        }
    }
    Ok(())
}

fn generating_function(e: &Enumerator) -> Check {
    let oracle = DpOracle::new(8);
    for m in 0..=8 {
        let law = oracle.table(ChainFamily::Permutation).u_distribution(m).map_err(|e| e.to_string())?;
        for z in 1..=5i64 {
            let z = BigRational::from_integer(z.into());
            ensure(evaluate_pgf(&law, &z) == rising_factorial_pgf(m, &z), || format!("pgf m={m} z={z}"))?;
        }
    }
    for n in 2..=10 {
        for k in 1..=n {
            ensure(power_expectation(k - 1, n - k + 1) == first_power_closed_form(n, k), || {
                format!("first power n={n} k={k}")
            })?;
            if k < n {
                ensure(power_expectation(k - 1, n - k) == second_power_closed_form(n, k), || {
                    format!("second power n={n} k={k}")
                })?;
            }
        }
    }
    for (family, max) in [(Family::Permutation, 8), (Family::TypeB, 7)] {
        for n in 1..=max {
            let c = census(e, n, family)?;
            let law = corners::chain::u_distribution(n, family).map_err(|e| e.to_string())?;
            let hist: BTreeMap<usize, BigRational> =
                c.u_histogram.iter().map(|(&u, v)| (u, ratio(v, &c.cardinality))).collect();
            ensure(law == hist, || format!("{family} U law at n={n}"))?;
        }
    }
    Ok(())
}

fn monte_carlo() -> Check {
    let perm = monte_carlo_corner_report(50, Family::Permutation, 100_000, 2024).map_err(|e| e.to_string())?;
    ensure(perm.reference == BigRational::new(449.into(), 50.into()), || "reference 449/50".into())?;
    ensure(perm.within(3.0), || format!("permutation n=50: mean {} z {:?}", perm.mean_corners, perm.z_score))?;
    let tb = monte_carlo_corner_report(40, Family::TypeB, 100_000, 2024).map_err(|e| e.to_string())?;
    ensure(tb.within(3.0), || format!("type-B n=40: mean {} z {:?}", tb.mean_corners, tb.z_score))?;

    let again = monte_carlo_corner_report(40, Family::TypeB, 100_000, 2024).map_err(|e| e.to_string())?;
    let (a, b) = (serde_json::to_string(&tb).unwrap(), serde_json::to_string(&again).unwrap());
    ensure(a == b, || "type-B report not reproducible".into())?;

    let draws = sample_permutation_tableaux(3, 60_000, 7, Exec::default()).map_err(|e| e.to_string())?;
    let mut counts: BTreeMap<_, u64> = BTreeMap::new();
    for t in &draws {
        *counts.entry(t.clone()).or_default() += 1;
    }
    ensure(counts.len() == 6, || format!("{} distinct tableaux of size 3", counts.len()))?;
    let observed: Vec<u64> = counts.values().copied().collect();
    let sixth = BigRational::new(1.into(), 6.into());
    let chi = chi_square_test(&observed, &vec![sixth; 6]).map_err(|e| e.to_string())?;
    ensure(chi.passes(1e-3), || format!("chi-square {chi:?}"))?;
    let redraw = sample_permutation_tableaux(3, 60_000, 7, Exec::Sequential).map_err(|e| e.to_string())?;
    ensure(redraw == draws, || "tableau draws not reproducible".into())
}

fn main() -> ExitCode {
    let e = Enumerator::default();
    let criteria: Vec<Criterion> = vec![
        ("cardinalities of all four families", Box::new(|| cardinalities(&e))),
        ("tree-like corner totals n!(n+4)/6", Box::new(|| tree_like_totals(&e))),
        ("permutation corner totals and last-step-south count", Box::new(|| permutation_totals(&e))),
        ("permutation per-step corner probabilities", Box::new(|| per_k_matches(&e, Family::Permutation, 2..=8))),
        ("tree-like per-step corner probabilities", Box::new(|| per_k_matches(&e, Family::TreeLike, 2..=7))),
        ("type-B per-step probabilities, mean and cardinality", Box::new(|| type_b(&e))),
        ("symmetric totals, per-step probabilities and decomposition", Box::new(|| symmetric(&e))),
        ("chain DP equals closed forms for n <= 200", Box::new(dp_oracle)),
        ("symmetric/type-B bijection and shape correspondence", Box::new(|| bijections(&e))),
        ("extension partition, push-forward and transition law", Box::new(|| extensions(&e))),
        ("unrestricted-row generating function and laws", Box::new(|| generating_function(&e))),
        ("Monte Carlo corner means and sampler uniformity", Box::new(monte_carlo)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(panic::AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.1}s): {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
