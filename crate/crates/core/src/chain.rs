//! The weighted extension chain on the number of unrestricted rows.
//!
//! From a state with `u` unrestricted rows, a south step leads to `u + 1`
//! with weight 1 and a west step leads to `j` with weight `C(u, j - 1)` for
//! `j = 1..=u`. Type-B doubles the west weights and adds a west step to
//! `u + 1` of weight 1. Path weights therefore count tableaux exactly, and
//! every probability here is an exact rational.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::decimal;
use crate::enumerator::{parent_permutation, Enumerator};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::shapes::Step;
use crate::tableaux::{Family, PermutationTableau};

/// Families with a native chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainFamily {
    Permutation,
    TypeB,
}

impl ChainFamily {
    pub fn family(self) -> Family {
        match self {
            ChainFamily::Permutation => Family::Permutation,
            ChainFamily::TypeB => Family::TypeB,
        }
    }
}

impl TryFrom<Family> for ChainFamily {
    type Error = Error;

    fn try_from(family: Family) -> Result<Self> {
        match family {
            Family::Permutation => Ok(ChainFamily::Permutation),
            Family::TypeB => Ok(ChainFamily::TypeB),
            other => Err(Error::Domain(format!("{other} tableaux have no native chain"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub step: Step,
    pub to: usize,
    pub weight: BigUint,
}

fn step_index(step: Step) -> usize {
    match step {
        Step::South => 0,
        Step::West => 1,
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn ratio(p: impl Into<BigInt>, q: impl Into<BigInt>) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn big_ratio(p: &BigUint, q: &BigUint) -> BigRational {
    ratio(BigInt::from(p.clone()), BigInt::from(q.clone()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainSpec {
    pub family: ChainFamily,
}

impl ChainSpec {
    pub fn new(family: ChainFamily) -> Self {
        ChainSpec { family }
    }

    /// Outgoing transitions from `u`, south first, then west by target.
    pub fn transitions(&self, u: usize) -> Vec<Transition> {
        let mut out = vec![Transition { step: Step::South, to: u + 1, weight: BigUint::one() }];
        let factor = match self.family {
            ChainFamily::Permutation => 1u32,
            ChainFamily::TypeB => 2,
        };
        for j in 1..=u {
            out.push(Transition { step: Step::West, to: j, weight: binomial(u, j - 1) * factor });
        }
        if self.family == ChainFamily::TypeB {
            out.push(Transition { step: Step::West, to: u + 1, weight: BigUint::one() });
        }
        out
    }

    pub fn total_weight(&self, u: usize) -> BigUint {
        self.transitions(u).into_iter().map(|t| t.weight).sum()
    }

    /// Normalized law of the next state, indexed by `j` in `0..=u + 1`.
    pub fn next_u_law(&self, u: usize) -> Vec<BigRational> {
        let total = self.total_weight(u);
        let mut law = vec![BigUint::zero(); u + 2];
        for t in self.transitions(u) {
            law[t.to] += t.weight;
        }
        law.iter().map(|w| big_ratio(w, &total)).collect()
    }

    pub fn south_probability(&self, u: usize) -> BigRational {
        big_ratio(&BigUint::one(), &self.total_weight(u))
    }
}

/// `1 + Binomial(u, 1/2)` as a vector indexed by `j` in `0..=u + 1`.
pub fn shifted_binomial_law(u: usize) -> Vec<BigRational> {
    let denom = BigUint::one() << u;
    (0..=u + 1).map(|j| if j == 0 { BigRational::zero() } else { big_ratio(&binomial(u, j - 1), &denom) }).collect()
}

/// Forward and backward path weights up to a horizon.
///
/// `forward(k, u, s)` is the weight of length-`k` prefixes ending in state
/// `u` with last step `s`; `completions(r, u)` is the weight of all
/// length-`r` continuations from `u`. Both are independent of the target
/// size, so one table serves every `n` up to the horizon.
#[derive(Clone, Debug)]
pub struct ChainWeightTable {
    spec: ChainSpec,
    horizon: usize,
    forward: Vec<Vec<[BigUint; 2]>>,
    completions: Vec<Vec<BigUint>>,
    /// Like `completions(r, u)`, but the first step must be west.
    west_completions: Vec<Vec<BigUint>>,
}

impl ChainWeightTable {
    pub fn build(family: ChainFamily, horizon: usize) -> Self {
        let spec = ChainSpec::new(family);
        let transitions: Vec<Vec<Transition>> = (0..=horizon).map(|u| spec.transitions(u)).collect();

        let mut forward: Vec<Vec<[BigUint; 2]>> = Vec::with_capacity(horizon + 1);
        forward.push(Vec::new());
        if horizon >= 1 {
            let mut first = vec![[BigUint::zero(), BigUint::zero()]; 2];
            for t in &transitions[0] {
                first[t.to][step_index(t.step)] += &t.weight;
            }
            forward.push(first);
        }
        for k in 1..horizon {
            let mut next = vec![[BigUint::zero(), BigUint::zero()]; k + 2];
            for (u, [s, w]) in forward[k].iter().enumerate() {
                let mass = s + w;
                if mass.is_zero() {
                    continue;
                }
                for t in &transitions[u] {
                    next[t.to][step_index(t.step)] += &mass * &t.weight;
                }
            }
            forward.push(next);
        }

        let mut completions: Vec<Vec<BigUint>> = vec![vec![BigUint::one(); horizon + 1]];
        let mut west_completions: Vec<Vec<BigUint>> = Vec::with_capacity(horizon);
        for r in 0..horizon {
            // states reachable with r + 1 steps left
            let top = horizon - r - 1;
            let prev = &completions[r];
            let mut all = Vec::with_capacity(top + 1);
            let mut west = Vec::with_capacity(top + 1);
            for trans in transitions.iter().take(top + 1) {
                let mut a = BigUint::zero();
                let mut b = BigUint::zero();
                for t in trans {
                    let term = &t.weight * &prev[t.to];
                    if t.step == Step::West {
                        b += &term;
                    }
                    a += term;
                }
                all.push(a);
                west.push(b);
            }
            completions.push(all);
            west_completions.push(west);
        }

        ChainWeightTable { spec, horizon, forward, completions, west_completions }
    }

    pub fn spec(&self) -> ChainSpec {
        self.spec
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.horizon {
            return Err(Error::Domain(format!("table built up to {} but n = {n}", self.horizon)));
        }
        Ok(())
    }

    fn range_error(&self, n: usize, k: usize, max: usize) -> Error {
        Error::IndexOutOfRange { k, n, family: self.spec.family.family(), max }
    }

    pub fn forward(&self, k: usize, u: usize, step: Step) -> BigUint {
        self.forward.get(k).and_then(|row| row.get(u)).map(|w| w[step_index(step)].clone()).unwrap_or_default()
    }

    /// Weight of all ways to finish a size-`n` tableau from state `u` at position `k`.
    pub fn backward(&self, n: usize, k: usize, u: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        self.completions.get(n - k).and_then(|row| row.get(u)).cloned().unwrap_or_default()
    }

    pub fn count(&self, n: usize) -> Result<BigUint> {
        self.check(n)?;
        Ok(self.completions[n][0].clone())
    }

    /// `Σ_{u,s} forward(k,u,s) · backward(n,k,u)`, which must equal the count for every `k`.
    pub fn count_through(&self, n: usize, k: usize) -> Result<BigUint> {
        self.check(n)?;
        if k == 0 || k > n {
            return Err(self.range_error(n, k, n));
        }
        Ok(self.forward[k].iter().enumerate().map(|(u, [s, w])| (s + w) * &self.completions[n - k][u]).sum())
    }

    pub fn u_distribution(&self, n: usize) -> Result<BTreeMap<usize, BigRational>> {
        let total = self.count(n)?;
        if n == 0 {
            return Ok(BTreeMap::from([(0, BigRational::one())]));
        }
        Ok(self.forward[n]
            .iter()
            .enumerate()
            .filter_map(|(u, [s, w])| {
                let mass = s + w;
                (!mass.is_zero()).then(|| (u, big_ratio(&mass, &total)))
            })
            .collect())
    }

    pub fn step_probability(&self, n: usize, k: usize, step: Step) -> Result<BigRational> {
        self.check(n)?;
        if k == 0 || k > n {
            return Err(self.range_error(n, k, n));
        }
        let i = step_index(step);
        let mass: BigUint = self.forward[k].iter().enumerate().map(|(u, w)| &w[i] * &self.completions[n - k][u]).sum();
        Ok(big_ratio(&mass, &self.completions[n][0]))
    }

    /// Probability that steps `k` and `k + 1` are south then west.
    pub fn corner_probability(&self, n: usize, k: usize) -> Result<BigRational> {
        self.check(n)?;
        if k == 0 || k + 1 > n {
            return Err(self.range_error(n, k, n.saturating_sub(1)));
        }
        let west = &self.west_completions[n - k - 1];
        let mass: BigUint = self.forward[k].iter().enumerate().map(|(u, [s, _])| s * &west[u]).sum();
        Ok(big_ratio(&mass, &self.completions[n][0]))
    }

    /// Corner probabilities for `k = 1..n-1`.
    pub fn corner_probabilities(&self, n: usize) -> Result<Vec<BigRational>> {
        (1..n).map(|k| self.corner_probability(n, k)).collect()
    }
}

fn table_for(family: ChainFamily, n: usize) -> ChainWeightTable {
    ChainWeightTable::build(family, n)
}

/// `n!` for permutation and tree-like tableaux, `2^n n!` for type-B and for
/// symmetric tableaux of size `2n + 1`.
pub fn count_tableaux(n: usize, family: Family) -> BigUint {
    let chain = match family {
        Family::Permutation | Family::TreeLike => ChainFamily::Permutation,
        Family::TypeB | Family::Symmetric => ChainFamily::TypeB,
    };
    table_for(chain, n).count(n).expect("within horizon")
}

pub fn u_distribution(n: usize, family: Family) -> Result<BTreeMap<usize, BigRational>> {
    table_for(ChainFamily::try_from(family)?, n).u_distribution(n)
}

pub fn step_probability(n: usize, k: usize, family: Family, step: Step) -> Result<BigRational> {
    table_for(ChainFamily::try_from(family)?, n).step_probability(n, k, step)
}

/// Both chain tables up to a shared horizon, for bulk queries over all four families.
#[derive(Clone, Debug)]
pub struct DpOracle {
    permutation: ChainWeightTable,
    type_b: ChainWeightTable,
}

impl DpOracle {
    pub fn new(horizon: usize) -> Self {
        let mut tables = Exec::default()
            .map(vec![ChainFamily::Permutation, ChainFamily::TypeB], |f| ChainWeightTable::build(f, horizon));
        let type_b = tables.pop().expect("two tables");
        let permutation = tables.pop().expect("two tables");
        DpOracle { permutation, type_b }
    }

    pub fn horizon(&self) -> usize {
        self.permutation.horizon()
    }

    pub fn table(&self, family: ChainFamily) -> &ChainWeightTable {
        match family {
            ChainFamily::Permutation => &self.permutation,
            ChainFamily::TypeB => &self.type_b,
        }
    }

    /// Corner probabilities for every admissible `k` (index 0 is `k = 1`).
    pub fn corner_probabilities(&self, n: usize, family: Family) -> Result<Vec<BigRational>> {
        let max = family.path_length(n).saturating_sub(1);
        if max == 0 {
            return Ok(Vec::new());
        }
        match family {
            Family::Permutation => self.permutation.corner_probabilities(n),
            Family::TypeB => self.type_b.corner_probabilities(n),
            Family::TreeLike => {
                let mut out = self.permutation.corner_probabilities(n)?;
                out.push(self.permutation.step_probability(n, n, Step::South)?);
                Ok(out)
            }
            Family::Symmetric => {
                if n == 0 {
                    return Ok(vec![BigRational::one()]);
                }
                let b = &self.type_b;
                let inner = b.corner_probabilities(n)?;
                let last_south = b.step_probability(n, n, Step::South)?;
                let mut out = Vec::with_capacity(2 * n + 1);
                out.push(last_south.clone());
                out.extend(inner.iter().rev().cloned());
                out.push(b.step_probability(n, 1, Step::West)?);
                out.extend(inner.iter().cloned());
                out.push(last_south);
                Ok(out)
            }
        }
    }

    pub fn corner_probability(&self, n: usize, k: usize, family: Family) -> Result<BigRational> {
        let max = family.path_length(n).saturating_sub(1);
        if k == 0 || k > max {
            return Err(Error::IndexOutOfRange { k, n, family, max });
        }
        Ok(self.corner_probabilities(n, family)?.swap_remove(k - 1))
    }
}

/// Exact probability of a corner at step `k` under the uniform measure.
///
/// Tree-like values come from the permutation chain through the shape
/// correspondence; symmetric values come from the type-B chain through the
/// symmetric path `S · conj(B) · B · W`.
pub fn corner_event_probability_dp(n: usize, k: usize, family: Family) -> Result<BigRational> {
    DpOracle::new(n).corner_probability(n, k, family)
}

/// Steps `k` for which the closed form is stated.
pub fn formula_range(n: usize, family: Family) -> std::ops::RangeInclusive<usize> {
    match family {
        Family::Permutation | Family::TypeB => 1..=n.saturating_sub(1),
        Family::TreeLike => 1..=n,
        Family::Symmetric => 1..=2 * n + 1,
    }
}

fn require_formula_domain(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("closed forms need n >= 2, got n = {n}")));
    }
    Ok(())
}

/// The closed form for the corner probability at step `k`.
pub fn corner_event_probability_formula(n: usize, k: usize, family: Family) -> Result<BigRational> {
    require_formula_domain(n)?;
    if !formula_range(n, family).contains(&k) {
        return Err(Error::Domain(format!("k = {k} outside {:?} for {family} at n = {n}", formula_range(n, family))));
    }
    let (n, k) = (n as i64, k as i64);
    let perm = |k: i64| ratio(n - k + 1, n) - ratio((n - k) * (n - k), n * (n - 1));
    let type_b = |k: i64| ratio(n - k + 1, 2 * n) - ratio((n - k) * (n - k), 4 * n * (n - 1));
    Ok(match family {
        Family::Permutation => perm(k),
        Family::TreeLike if k == n => ratio(1, n),
        Family::TreeLike => perm(k),
        Family::TypeB => type_b(k),
        Family::Symmetric => {
            if k == 1 || k == 2 * n + 1 {
                ratio(1, 2 * n)
            } else if k <= n {
                ratio(k, 2 * n) - ratio((k - 1) * (k - 1), 4 * n * (n - 1))
            } else if k == n + 1 {
                ratio(1, 2)
            } else {
                ratio(2 * n - k + 2, 2 * n) - ratio((2 * n - k + 1) * (2 * n - k + 1), 4 * n * (n - 1))
            }
        }
    })
}

pub fn expected_corners(n: usize, family: Family) -> Result<BigRational> {
    require_formula_domain(n)?;
    let n = n as i64;
    Ok(match family {
        Family::Permutation => ratio(n + 4, 6) - ratio(1, n),
        Family::TypeB => ratio(4 * n + 7, 24) - ratio(1, 2 * n),
        Family::TreeLike => ratio(n + 4, 6),
        Family::Symmetric => ratio(4 * n + 13, 12),
    })
}

pub fn total_corners(n: usize, family: Family) -> Result<BigUint> {
    require_formula_domain(n)?;
    let total = expected_corners(n, family)? * BigRational::from_integer(count_tableaux(n, family).into());
    if !total.is_integer() {
        return Err(Error::Domain(format!("{family} corner total at n = {n} is not an integer: {total}")));
    }
    Ok(total.to_integer().to_biguint().expect("non-negative"))
}

/// `z (z + 1) ... (z + m - 1) / m!`, the generating function of `U_m`.
pub fn rising_factorial_pgf(m: usize, z: &BigRational) -> BigRational {
    let num = (0..m).fold(BigRational::one(), |acc, i| acc * (z + BigRational::from_integer(i.into())));
    num / BigRational::from_integer(factorial(m).into())
}

/// `Σ_u P(U = u) z^u`.
pub fn evaluate_pgf(law: &BTreeMap<usize, BigRational>, z: &BigRational) -> BigRational {
    law.iter().map(|(&u, p)| p * num_traits::pow(z.clone(), u)).sum()
}

/// `E_m (a^(1 + U_m))` computed from the chain law of `U_m`, permutation family.
pub fn power_expectation(m: usize, a: usize) -> BigRational {
    let law = table_for(ChainFamily::Permutation, m).u_distribution(m).expect("within horizon");
    let a = BigRational::from_integer(a.into());
    &a * evaluate_pgf(&law, &a)
}

/// `(n-k+1) (n-1)! / ((n-k)! (k-1)!)`, valid for `1 <= k <= n`.
pub fn first_power_closed_form(n: usize, k: usize) -> BigRational {
    big_ratio(&(factorial(n - 1) * (n - k + 1)), &(factorial(n - k) * factorial(k - 1)))
}

/// `(n-k) (n-2)! / ((n-k-1)! (k-1)!)`, valid for `1 <= k <= n - 1`.
pub fn second_power_closed_form(n: usize, k: usize) -> BigRational {
    big_ratio(&(factorial(n - 2) * (n - k)), &(factorial(n - k - 1) * factorial(k - 1)))
}

/// Statistics of permutation tableaux used by the push-forward identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statistic {
    One,
    TwoPowU,
    /// Indicator of a corner at step `k`.
    CornerAt(usize),
}

impl Statistic {
    pub fn eval(self, t: &PermutationTableau) -> BigUint {
        match self {
            Statistic::One => BigUint::one(),
            Statistic::TwoPowU => BigUint::one() << t.unrestricted_row_count(),
            Statistic::CornerAt(k) => BigUint::from(u32::from(t.path().has_corner_at(k))),
        }
    }

    pub fn label(self) -> String {
        match self {
            Statistic::One => "1".into(),
            Statistic::TwoPowU => "2^U".into(),
            Statistic::CornerAt(k) => format!("corner@{k}"),
        }
    }
}

/// `E_n X_{n-1}` against `(1/n) E_{n-1}(2^U X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PushforwardReport {
    pub n: usize,
    pub statistic: String,
    #[serde(with = "decimal::rational")]
    pub lhs: BigRational,
    #[serde(with = "decimal::rational")]
    pub rhs: BigRational,
}

impl PushforwardReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn pushforward_check(n: usize, statistic: Statistic, enumerator: &Enumerator) -> Result<PushforwardReport> {
    if n < 2 {
        return Err(Error::Domain("push-forward needs n >= 2".into()));
    }
    let big = enumerator.permutation(n)?;
    let small = enumerator.permutation(n - 1)?;
    let mut lhs_sum = BigUint::zero();
    for t in &big {
        lhs_sum += statistic.eval(&parent_permutation(t)?);
    }
    let rhs_sum: BigUint =
        small.iter().map(|s| (BigUint::one() << s.unrestricted_row_count()) * statistic.eval(s)).sum();
    let lhs = big_ratio(&lhs_sum, &BigUint::from(big.len()));
    let rhs = big_ratio(&rhs_sum, &(BigUint::from(small.len()) * n));
    Ok(PushforwardReport { n, statistic: statistic.label(), lhs, rhs })
}

/// A disagreement between the DP and the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub family: Family,
    pub n: usize,
    /// `None` for the row-sum check.
    pub k: Option<usize>,
    pub dp: BigRational,
    pub formula: BigRational,
}

/// Compares DP and closed forms for every family, `2 <= n <= max_n` and every
/// admissible `k`, plus the row sums against the expected-corner formulas.
pub fn dp_formula_mismatches(oracle: &DpOracle, max_n: usize, exec: Exec) -> Result<Vec<Mismatch>> {
    let jobs: Vec<(usize, Family)> = (2..=max_n).flat_map(|n| Family::ALL.into_iter().map(move |f| (n, f))).collect();
    let results = exec.map(jobs, |(n, family)| -> Result<Vec<Mismatch>> {
        let dp = oracle.corner_probabilities(n, family)?;
        let mut bad = Vec::new();
        let mut sum = BigRational::zero();
        for (i, d) in dp.iter().enumerate() {
            let k = i + 1;
            let f = corner_event_probability_formula(n, k, family)?;
            sum += &f;
            if *d != f {
                bad.push(Mismatch { family, n, k: Some(k), dp: d.clone(), formula: f });
            }
        }
        let expected = expected_corners(n, family)?;
        if sum != expected {
            bad.push(Mismatch { family, n, k: None, dp: sum, formula: expected });
        }
        Ok(bad)
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> BigRational {
        ratio(p, d)
    }

    #[test]
    fn transition_weights_sum_to_powers_of_two() {
        for u in 0..12 {
            assert_eq!(ChainSpec::new(ChainFamily::Permutation).total_weight(u), BigUint::one() << u);
            assert_eq!(ChainSpec::new(ChainFamily::TypeB).total_weight(u), BigUint::one() << (u + 1));
            for f in [ChainFamily::Permutation, ChainFamily::TypeB] {
                assert_eq!(ChainSpec::new(f).next_u_law(u), shifted_binomial_law(u));
            }
            assert_eq!(
                ChainSpec::new(ChainFamily::TypeB).south_probability(u),
                big_ratio(&BigUint::one(), &(BigUint::one() << (u + 1)))
            );
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_tableaux(8, Family::Permutation), BigUint::from(40320u32));
        assert_eq!(count_tableaux(6, Family::TypeB), BigUint::from(46080u32));
        for f in Family::ALL {
            assert_eq!(count_tableaux(0, f), BigUint::one());
        }
        let t = ChainWeightTable::build(ChainFamily::TypeB, 30);
        for n in 1..=30 {
            let c = t.count(n).unwrap();
            assert_eq!(c, (BigUint::one() << n) * factorial(n));
            for k in 1..=n {
                assert_eq!(t.count_through(n, k).unwrap(), c);
            }
        }
    }

    #[test]
    fn u_law_small() {
        let law = u_distribution(3, Family::Permutation).unwrap();
        assert_eq!(law, BTreeMap::from([(1, q(2, 6)), (2, q(3, 6)), (3, q(1, 6))]));
        let two = BigRational::from_integer(2.into());
        assert_eq!(evaluate_pgf(&law, &two), BigRational::from_integer(4.into()));
    }

    #[test]
    fn dp_examples() {
        assert_eq!(corner_event_probability_dp(2, 1, Family::Permutation).unwrap(), q(1, 2));
        assert_eq!(corner_event_probability_dp(2, 1, Family::TypeB).unwrap(), q(3, 8));
        assert!(matches!(corner_event_probability_dp(3, 3, Family::Permutation), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(corner_event_probability_dp(1, 1, Family::TreeLike).unwrap(), q(1, 1));
        let sym1: Vec<_> = DpOracle::new(1).corner_probabilities(1, Family::Symmetric).unwrap();
        assert_eq!(sym1, vec![q(1, 2); 3]);
    }

    #[test]
    fn formula_examples() {
        assert_eq!(corner_event_probability_formula(3, 2, Family::Permutation).unwrap(), q(1, 2));
        assert_eq!(corner_event_probability_formula(2, 3, Family::Symmetric).unwrap(), q(1, 2));
        assert_eq!(corner_event_probability_formula(2, 5, Family::Symmetric).unwrap(), q(1, 4));
        assert!(matches!(corner_event_probability_formula(1, 1, Family::TreeLike), Err(Error::Domain(_))));
        assert!(matches!(corner_event_probability_formula(4, 4, Family::Permutation), Err(Error::Domain(_))));
        assert_eq!(expected_corners(3, Family::Permutation).unwrap(), q(5, 6));
        assert_eq!(expected_corners(2, Family::TypeB).unwrap(), q(3, 8));
        assert_eq!(expected_corners(7, Family::TreeLike).unwrap(), q(11, 6));
        assert_eq!(total_corners(5, Family::TreeLike).unwrap(), BigUint::from(180u32));
        assert_eq!(total_corners(2, Family::Symmetric).unwrap(), BigUint::from(14u32));
        assert_eq!(total_corners(3, Family::Permutation).unwrap(), BigUint::from(5u32));
        assert!(total_corners(1, Family::TreeLike).is_err());
    }

    #[test]
    fn dp_matches_formula_to_forty() {
        let oracle = DpOracle::new(40);
        assert!(dp_formula_mismatches(&oracle, 40, Exec::Sequential).unwrap().is_empty());
    }

    #[test]
    fn power_evaluations() {
        for n in 2..=9 {
            for k in 1..=n {
                assert_eq!(power_expectation(k - 1, n - k + 1), first_power_closed_form(n, k), "n={n} k={k}");
                if k < n {
                    assert_eq!(power_expectation(k - 1, n - k), second_power_closed_form(n, k), "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn pushforward_small() {
        let e = Enumerator::default();
        for s in [Statistic::One, Statistic::TwoPowU, Statistic::CornerAt(1), Statistic::CornerAt(2)] {
            let r = pushforward_check(4, s, &e).unwrap();
            assert!(r.holds(), "{r:?}");
        }
        assert_eq!(pushforward_check(4, Statistic::One, &e).unwrap().lhs, q(1, 1));
    }

    proptest! {
        #[test]
        fn pgf_is_rising_factorial(m in 0usize..10, z in 0i64..6) {
            let law = table_for(ChainFamily::Permutation, m).u_distribution(m).unwrap();
            let z = BigRational::from_integer(z.into());
            prop_assert_eq!(evaluate_pgf(&law, &z), rising_factorial_pgf(m, &z));
        }

        #[test]
        fn step_marginals_sum_to_one(n in 1usize..25, k_seed in 0usize..100) {
            let k = 1 + k_seed % n;
            for f in [ChainFamily::Permutation, ChainFamily::TypeB] {
                let t = ChainWeightTable::build(f, n);
                let s = t.step_probability(n, k, Step::South).unwrap() + t.step_probability(n, k, Step::West).unwrap();
                prop_assert_eq!(s, BigRational::one());
            }
        }
    }
}
