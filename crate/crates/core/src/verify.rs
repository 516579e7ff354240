//! Identity checks grouped into suites, reported row by row.
//!
//! A row carries up to three independently computed values: the closed form,
//! the chain DP and the brute-force census. It passes when every value
//! present agrees.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bijections::{
    round_trip_witness, shape_correspondence, symmetric_corner_decomposition, symmetric_to_type_b, type_b_to_symmetric,
};
use crate::chain::{
    corner_event_probability_formula, count_tableaux, evaluate_pgf, expected_corners, factorial,
    first_power_closed_form, power_expectation, pushforward_check, rising_factorial_pgf, second_power_closed_form,
    shifted_binomial_law, total_corners, ChainFamily, ChainSpec, DpOracle, Statistic,
};
use crate::decimal::rational_to_string;
use crate::enumerator::{enumerate_shapes, extend_permutation, parent_permutation, Census, Enumerator};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::shapes::{BorderPath, Cell, Step};
use crate::tableaux::{Family, Tableau, TreeLikeTableau, TypeBTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    TreeLike,
    Permutation,
    TypeB,
    Symmetric,
    Bijection,
    Chain,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::TreeLike, Suite::Permutation, Suite::TypeB, Suite::Symmetric, Suite::Bijection, Suite::Chain];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TreeLike => "tree-like",
            Suite::Permutation => "permutation",
            Suite::TypeB => "type-b",
            Suite::Symmetric => "symmetric",
            Suite::Bijection => "bijection",
            Suite::Chain => "chain",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationRow {
    pub id: String,
    pub params: String,
    pub formula: Option<String>,
    pub dp: Option<String>,
    pub census: Option<String>,
    pub status: Status,
}

impl VerificationRow {
    fn new(id: &str, params: String, formula: Option<String>, dp: Option<String>, census: Option<String>) -> Self {
        let values: BTreeSet<&String> = [&formula, &dp, &census].into_iter().flatten().collect();
        let status = if values.len() == 1 { Status::Pass } else { Status::Fail };
        VerificationRow { id: id.into(), params, formula, dp, census, status }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub suite: Suite,
    pub max_size: usize,
    pub dp_max: usize,
    pub pass: bool,
    pub rows: Vec<VerificationRow>,
    /// Only filled on request, so that reports stay reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &VerificationRow> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest `n` enumerated, further capped by the enumeration budget.
    pub max_size: usize,
    /// Largest `n` for DP against closed forms.
    pub dp_max: usize,
    pub exec: Exec,
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_size: 6, dp_max: 60, exec: Exec::default(), timing: false }
    }
}

fn q(r: &BigRational) -> String {
    rational_to_string(r)
}

fn frac(p: &BigUint, d: &BigUint) -> String {
    q(&BigRational::new(p.clone().into(), d.clone().into()))
}

fn int(x: &BigUint) -> String {
    x.to_string()
}

struct Ctx {
    opts: VerifyOptions,
    enumerator: Enumerator,
    oracle: DpOracle,
    censuses: BTreeMap<(Family, usize), Census>,
}

impl Ctx {
    fn max(&self, family: Family) -> usize {
        self.opts.max_size.min(self.enumerator.budget.max_for(family))
    }

    fn census(&mut self, family: Family, n: usize) -> Result<&Census> {
        if !self.censuses.contains_key(&(family, n)) {
            let c = self.enumerator.census(n, family)?;
            self.censuses.insert((family, n), c);
        }
        Ok(&self.censuses[&(family, n)])
    }
}

pub fn run_suite(suite: Suite, opts: VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut ctx = Ctx {
        opts,
        enumerator: Enumerator::with_exec(opts.exec),
        oracle: DpOracle::new(opts.dp_max.max(opts.max_size).max(2)),
        censuses: BTreeMap::new(),
    };
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut rows = Vec::new();
    for s in suites {
        match s {
            Suite::TreeLike => family_rows(&mut ctx, Family::TreeLike, &mut rows)?,
            Suite::Permutation => {
                family_rows(&mut ctx, Family::Permutation, &mut rows)?;
                permutation_rows(&mut ctx, &mut rows)?;
            }
            Suite::TypeB => family_rows(&mut ctx, Family::TypeB, &mut rows)?,
            Suite::Symmetric => {
                family_rows(&mut ctx, Family::Symmetric, &mut rows)?;
                decomposition_rows(&mut ctx, &mut rows)?;
            }
            Suite::Bijection => bijection_rows(&mut ctx, &mut rows)?,
            Suite::Chain => chain_rows(&mut ctx, &mut rows)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(VerificationReport {
        suite,
        max_size: opts.max_size,
        dp_max: opts.dp_max,
        pass: rows.iter().all(VerificationRow::passed),
        rows,
        elapsed_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

fn cardinality_closed_form(n: usize, family: Family) -> BigUint {
    match family {
        Family::TreeLike | Family::Permutation => factorial(n),
        Family::TypeB | Family::Symmetric => (BigUint::one() << n) * factorial(n),
    }
}

/// Cardinality, per-step corner probability, expected and total corners.
fn family_rows(ctx: &mut Ctx, family: Family, rows: &mut Vec<VerificationRow>) -> Result<()> {
    let name = family.name();
    for n in 1..=ctx.max(family) {
        let census = ctx.census(family, n)?.clone();
        rows.push(VerificationRow::new(
            &format!("{name}-cardinality"),
            format!("n={n}"),
            Some(int(&cardinality_closed_form(n, family))),
            Some(int(&count_tableaux(n, family))),
            Some(int(&census.cardinality)),
        ));
        if n < 2 {
            continue;
        }
        let dp = ctx.oracle.corner_probabilities(n, family)?;
        for (i, d) in dp.iter().enumerate() {
            let k = i + 1;
            rows.push(VerificationRow::new(
                &format!("{name}-corner-probability"),
                format!("n={n} k={k}"),
                Some(q(&corner_event_probability_formula(n, k, family)?)),
                Some(q(d)),
                Some(frac(&census.corner_counts_by_k[&k], &census.cardinality)),
            ));
        }
        rows.push(VerificationRow::new(
            &format!("{name}-expected-corners"),
            format!("n={n}"),
            Some(q(&expected_corners(n, family)?)),
            Some(q(&dp.iter().sum())),
            Some(frac(&census.total_corners, &census.cardinality)),
        ));
        rows.push(VerificationRow::new(
            &format!("{name}-total-corners"),
            format!("n={n}"),
            Some(int(&total_corners(n, family)?)),
            None,
            Some(int(&census.total_corners)),
        ));
    }
    Ok(())
}

fn permutation_rows(ctx: &mut Ctx, rows: &mut Vec<VerificationRow>) -> Result<()> {
    for n in 2..=ctx.max(Family::Permutation) {
        let census = ctx.census(Family::Permutation, n)?.clone();
        let dp = ctx.oracle.table(ChainFamily::Permutation).step_probability(n, n, Step::South)?;
        rows.push(VerificationRow::new(
            "permutation-last-step-south",
            format!("n={n}"),
            Some(int(&factorial(n - 1))),
            Some(int(&(dp * BigRational::from_integer(factorial(n).into())).to_integer().magnitude().clone())),
            Some(int(&census.last_step_south_count)),
        ));
        if n <= ctx.max(Family::TreeLike) {
            let tree = ctx.census(Family::TreeLike, n)?.total_corners.clone();
            rows.push(VerificationRow::new(
                "tree-like-permutation-corner-relation",
                format!("n={n}"),
                Some(int(&(census.total_corners + factorial(n - 1)))),
                None,
                Some(int(&tree)),
            ));
        }
    }
    let ext_max = ctx.opts.max_size.min(ctx.enumerator.budget.permutation_extension);
    for n in 1..=ext_max {
        let c = ctx.enumerator.permutation_census_by_extension(n)?;
        rows.push(VerificationRow::new(
            "permutation-extension-cardinality",
            format!("n={n}"),
            Some(int(&factorial(n))),
            None,
            Some(int(&c.cardinality)),
        ));
    }
    Ok(())
}

fn decomposition_rows(ctx: &mut Ctx, rows: &mut Vec<VerificationRow>) -> Result<()> {
    let max = ctx.max(Family::Symmetric).min(ctx.enumerator.budget.type_b);
    for n in 1..=max {
        let d = symmetric_corner_decomposition(n, &ctx.enumerator)?;
        rows.push(VerificationRow::new(
            "symmetric-corner-decomposition",
            format!("n={n}"),
            Some(int(&(&d.twice_type_b + &d.south_closed_form + &d.west_closed_form))),
            None,
            Some(int(&d.symmetric_total)),
        ));
        rows.push(VerificationRow::new(
            "type-b-last-step-south",
            format!("n={n}"),
            Some(int(&(&d.south_closed_form >> 1u32))),
            None,
            Some(int(&(&d.south_term >> 1u32))),
        ));
        rows.push(VerificationRow::new(
            "type-b-first-step-west",
            format!("n={n}"),
            Some(int(&d.west_closed_form)),
            None,
            Some(int(&d.west_term)),
        ));
    }
    Ok(())
}

/// Worked example: a symmetric tableau of size 11 and its type-B image of size 5.
pub fn drawn_pair() -> (crate::tableaux::SymmetricTableau, TypeBTableau) {
    let cells: Vec<Cell> = [(1, 1), (1, 2), (1, 5), (1, 6), (2, 1), (2, 4), (3, 4), (4, 2), (4, 3), (5, 1), (6, 1)]
        .into_iter()
        .map(|(r, c)| Cell::new(r, c))
        .collect();
    let path = BorderPath::parse("SWSWSWSWSWSW").expect("valid path");
    let sym = TreeLikeTableau::from_cells(path, &cells).and_then(crate::tableaux::SymmetricTableau::from_tree_like);
    let bits = ["1", "00", "01", "1", ""].iter().map(|r| r.chars().map(|c| c == '1').collect()).collect();
    let b = TypeBTableau::new(BorderPath::parse("SWSWS").expect("valid path"), bits);
    (sym.expect("drawn tableau is symmetric"), b.expect("drawn tableau is type-B"))
}

fn bijection_rows(ctx: &mut Ctx, rows: &mut Vec<VerificationRow>) -> Result<()> {
    let max_b = ctx.max(Family::TypeB).min(5);
    for n in 1..=max_b {
        let all = ctx.enumerator.tableaux(n, Family::TypeB)?;
        round_trip_row("type-b-symmetric-round-trip", n, all, rows);
    }
    let max_s = ctx.max(Family::Symmetric).min(5);
    for n in 1..=max_s {
        let all = ctx.enumerator.tableaux(n, Family::Symmetric)?;
        round_trip_row("symmetric-type-b-round-trip", n, all.clone(), rows);
        let consistent =
            all.iter()
                .filter(|t| match t {
                    Tableau::Symmetric(s) => symmetric_to_type_b(s)
                        .is_ok_and(|b| crate::bijections::symmetric_path_for(b.path()) == *s.path()),
                    _ => false,
                })
                .count();
        rows.push(VerificationRow::new(
            "symmetric-path-decomposition",
            format!("n={n}"),
            Some(all.len().to_string()),
            None,
            Some(consistent.to_string()),
        ));
    }
    let (sym, b) = drawn_pair();
    let forward = symmetric_to_type_b(&sym).ok();
    let backward = type_b_to_symmetric(&b).ok();
    let ok = forward.as_ref() == Some(&b) && backward.as_ref() == Some(&sym);
    rows.push(VerificationRow::new(
        "symmetric-type-b-drawn-pair",
        "size=11".into(),
        Some(record_string(&b)),
        None,
        Some(if ok { record_string(&b) } else { forward.map_or("error".into(), |f| record_string(&f)) }),
    ));
    for n in 1..=ctx.max(Family::TreeLike) {
        let shapes = enumerate_shapes(n + 1, Family::TreeLike);
        let consistent = shapes
            .iter()
            .filter(|p| {
                shape_correspondence(p).is_ok_and(|c| {
                    c.tree_like_path.corner_count() == c.permutation_path.corner_count() + c.corner_difference()
                })
            })
            .count();
        rows.push(VerificationRow::new(
            "tree-like-permutation-shape-correspondence",
            format!("n={n}"),
            Some(shapes.len().to_string()),
            None,
            Some(consistent.to_string()),
        ));
    }
    Ok(())
}

fn record_string(b: &TypeBTableau) -> String {
    let rec = Tableau::from(b.clone()).to_record();
    format!("{} [{}]", rec.path, rec.rows.join(","))
}

fn round_trip_row(id: &str, n: usize, all: Vec<Tableau>, rows: &mut Vec<VerificationRow>) {
    let witness = all.iter().find_map(round_trip_witness);
    let census = match &witness {
        None => all.len().to_string(),
        Some(w) => format!("fails at {}", w.to_record().path),
    };
    rows.push(VerificationRow::new(id, format!("n={n}"), Some(all.len().to_string()), None, Some(census)));
}

fn chain_rows(ctx: &mut Ctx, rows: &mut Vec<VerificationRow>) -> Result<()> {
    for family in [ChainFamily::Permutation, ChainFamily::TypeB] {
        let spec = ChainSpec::new(family);
        let bad = (0..=30).filter(|&u| spec.next_u_law(u) != shifted_binomial_law(u)).count();
        rows.push(VerificationRow::new(
            "u-transition-law",
            format!("family={} u=0..30", family.family()),
            Some("0".into()),
            Some(bad.to_string()),
            None,
        ));
    }

    // observed transitions from the extension construction
    let max_ext = ctx.opts.max_size.min(7);
    for n in 1..max_ext {
        let parents = ctx.enumerator.permutation(n)?;
        let mut counts: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
        let mut per_u: BTreeMap<usize, usize> = BTreeMap::new();
        for p in &parents {
            let u = p.unrestricted_row_count();
            *per_u.entry(u).or_default() += 1;
            for c in extend_permutation(p) {
                *counts.entry((u, c.unrestricted_row_count())).or_default() += 1u32;
            }
        }
        let mut ok = true;
        for (&u, &m) in &per_u {
            let law = shifted_binomial_law(u);
            let total = BigUint::from(m) << u;
            for (j, p) in law.iter().enumerate() {
                let c = counts.get(&(u, j)).cloned().unwrap_or_default();
                ok &= BigRational::new(c.into(), total.clone().into()) == *p;
            }
        }
        rows.push(VerificationRow::new(
            "u-transition-census",
            format!("n={n}"),
            Some("matches".into()),
            None,
            Some(if ok { "matches" } else { "differs" }.into()),
        ));
    }

    for n in 1..=max_ext {
        let all = ctx.enumerator.permutation(n)?;
        let mut images: BTreeMap<_, usize> = BTreeMap::new();
        let mut multiplicity_ok = true;
        let mut parent_ok = true;
        let smaller = if n > 1 { ctx.enumerator.permutation(n - 1)? } else { Vec::new() };
        for p in &smaller {
            let kids = extend_permutation(p);
            multiplicity_ok &= kids.len() == 1 << p.unrestricted_row_count();
            for c in kids {
                parent_ok &= parent_permutation(&c).as_ref() == Ok(p);
                *images.entry(c).or_default() += 1;
            }
        }
        let partition = n == 1
            || (images.len() == all.len()
                && images.values().all(|&m| m == 1)
                && all.iter().all(|t| images.contains_key(t)));
        rows.push(VerificationRow::new(
            "extension-partition",
            format!("n={n}"),
            Some("partition, 2^U children, parent inverts".into()),
            None,
            Some(if partition && multiplicity_ok && parent_ok {
                "partition, 2^U children, parent inverts".into()
            } else {
                format!("partition={partition} multiplicity={multiplicity_ok} parent={parent_ok}")
            }),
        ));
    }

    for n in 2..=max_ext {
        let mut stats = vec![Statistic::One, Statistic::TwoPowU];
        stats.extend((1..n).map(Statistic::CornerAt));
        for s in stats {
            let r = pushforward_check(n, s, &ctx.enumerator)?;
            rows.push(VerificationRow::new(
                "measure-pushforward",
                format!("n={n} X={}", r.statistic),
                Some(q(&r.rhs)),
                None,
                Some(q(&r.lhs)),
            ));
        }
    }

    for m in 0..=8usize {
        let law = ctx.oracle.table(ChainFamily::Permutation).u_distribution(m)?;
        for z in 1..=5i64 {
            let z = BigRational::from_integer(z.into());
            rows.push(VerificationRow::new(
                "u-generating-function",
                format!("m={m} z={z}"),
                Some(q(&rising_factorial_pgf(m, &z))),
                Some(q(&evaluate_pgf(&law, &z))),
                None,
            ));
        }
    }
    for n in 2..=9usize {
        for k in 1..=n {
            rows.push(VerificationRow::new(
                "first-power-evaluation",
                format!("n={n} k={k}"),
                Some(q(&first_power_closed_form(n, k))),
                Some(q(&power_expectation(k - 1, n - k + 1))),
                None,
            ));
            if k < n {
                rows.push(VerificationRow::new(
                    "second-power-evaluation",
                    format!("n={n} k={k}"),
                    Some(q(&second_power_closed_form(n, k))),
                    Some(q(&power_expectation(k - 1, n - k))),
                    None,
                ));
            }
        }
    }

    for family in [Family::Permutation, Family::TypeB] {
        for n in 1..=ctx.max(family) {
            let census = ctx.census(family, n)?.clone();
            let law = ctx.oracle.table(ChainFamily::try_from(family)?).u_distribution(n)?;
            let from_census: BTreeMap<usize, BigRational> = census
                .u_histogram
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(&u, c)| (u, BigRational::new(c.clone().into(), census.cardinality.clone().into())))
                .collect();
            let show = |m: &BTreeMap<usize, BigRational>| {
                m.iter().map(|(u, p)| format!("{u}:{}", q(p))).collect::<Vec<_>>().join(" ")
            };
            rows.push(VerificationRow::new(
                "u-distribution",
                format!("family={family} n={n}"),
                None,
                Some(show(&law)),
                Some(show(&from_census)),
            ));
        }
    }

    for family in [ChainFamily::Permutation, ChainFamily::TypeB] {
        let table = ctx.oracle.table(family);
        let bad = (0..=ctx.opts.dp_max)
            .filter(|&n| table.count(n).ok() != Some(cardinality_closed_form(n, family.family())))
            .count();
        rows.push(VerificationRow::new(
            "chain-count",
            format!("family={} n=0..{}", family.family(), ctx.opts.dp_max),
            Some("0".into()),
            Some(bad.to_string()),
            None,
        ));
    }

    let mismatches = crate::chain::dp_formula_mismatches(&ctx.oracle, ctx.opts.dp_max, ctx.opts.exec)?;
    for family in Family::ALL {
        let bad = mismatches.iter().filter(|m| m.family == family).count();
        rows.push(VerificationRow::new(
            "dp-matches-closed-form",
            format!("family={family} n=2..{}", ctx.opts.dp_max),
            Some("0".into()),
            Some(bad.to_string()),
            None,
        ));
    }
    Ok(())
}
