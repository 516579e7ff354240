//! Exactly uniform sampling through the chain's completion weights, and a
//! seeded Monte Carlo estimate of the corner statistics.
//!
//! Randomness comes from `ChaCha8Rng` (rand_chacha 0.3). Work is split into
//! batches of [`BATCH_SIZE`] draws; batch `b` uses the generator seeded with
//! `seed` on stream `b`, so results do not depend on the worker count.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize, Serializer};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::bijections::symmetric_path_for;
use crate::chain::{binomial, expected_corners, ChainFamily, ChainSpec, ChainWeightTable, DpOracle, Transition};
use crate::decimal;
use crate::enumerator::{apply_extension, Extension};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::shapes::{BorderPath, Step};
use crate::tableaux::{Family, PermutationTableau};

pub const GENERATOR_ID: &str = "rand_chacha-0.3/ChaCha8Rng; seed_from_u64(seed), stream = batch index";
pub const BATCH_SIZE: u64 = 1000;

/// A chain run: `U_0..U_n` and the steps between them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Trajectory {
    pub family: ChainFamily,
    pub u_sequence: Vec<usize>,
    pub steps: BorderPath,
}

impl Trajectory {
    /// Border path of the tableau family the run stands for.
    pub fn path_for(&self, family: Family) -> BorderPath {
        match family {
            Family::TreeLike => self.steps.push(Step::West),
            Family::Symmetric => symmetric_path_for(&self.steps),
            _ => self.steps.clone(),
        }
    }
}

fn chain_of(family: Family) -> ChainFamily {
    match family {
        Family::Permutation | Family::TreeLike => ChainFamily::Permutation,
        Family::TypeB | Family::Symmetric => ChainFamily::TypeB,
    }
}

/// Draws trajectories of a fixed size with probability proportional to
/// the number of tableaux realizing them.
#[derive(Clone, Debug)]
pub struct Sampler {
    n: usize,
    table: ChainWeightTable,
    transitions: Vec<Vec<Transition>>,
    /// `cumulative[r][u]`: running sums over `transitions[u]` of weight times
    /// completions with `r - 1` steps left.
    cumulative: Vec<Vec<Vec<BigUint>>>,
}

impl Sampler {
    pub fn new(n: usize, family: ChainFamily) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("sampling needs n >= 1".into()));
        }
        let table = ChainWeightTable::build(family, n);
        let spec = ChainSpec::new(family);
        let transitions: Vec<Vec<Transition>> = (0..n).map(|u| spec.transitions(u)).collect();
        let mut cumulative = vec![Vec::new()];
        for r in 1..=n {
            let k = n - r;
            let per_u = (0..=k)
                .map(|u| {
                    let mut acc = BigUint::zero();
                    transitions[u]
                        .iter()
                        .map(|t| {
                            acc += &t.weight * table.backward(n, k + 1, t.to);
                            acc.clone()
                        })
                        .collect()
                })
                .collect();
            cumulative.push(per_u);
        }
        Ok(Sampler { n, table, transitions, cumulative })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &ChainWeightTable {
        &self.table
    }

    fn pick<R: Rng>(&self, r: usize, u: usize, rng: &mut R) -> &Transition {
        let cum = &self.cumulative[r][u];
        let x = rng.gen_biguint_below(cum.last().expect("at least one transition"));
        let i = cum.partition_point(|c| c <= &x);
        &self.transitions[u][i]
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> Trajectory {
        let mut u = 0;
        let mut u_sequence = vec![0];
        let mut steps = Vec::with_capacity(self.n);
        for k in 0..self.n {
            let t = self.pick(self.n - k, u, rng);
            steps.push(t.step);
            u = t.to;
            u_sequence.push(u);
        }
        let steps = BorderPath::new(steps).expect("n >= 1");
        Trajectory { family: self.table.spec().family, u_sequence, steps }
    }

    /// Probability of drawing this trajectory.
    pub fn probability(&self, trajectory: &Trajectory) -> BigRational {
        let mut weight = BigUint::one();
        for (k, step) in trajectory.steps.steps().iter().enumerate() {
            let (from, to) = (trajectory.u_sequence[k], trajectory.u_sequence[k + 1]);
            match self.transitions.get(from).and_then(|ts| ts.iter().find(|t| t.step == *step && t.to == to)) {
                Some(t) => weight *= &t.weight,
                None => return BigRational::zero(),
            }
        }
        BigRational::new(weight.into(), self.table.count(self.n).expect("within horizon").into())
    }

    /// Every trajectory with its exact probability.
    pub fn exact_law(&self) -> BTreeMap<Trajectory, BigRational> {
        let family = self.table.spec().family;
        let mut out = BTreeMap::new();
        let mut stack = vec![(vec![0usize], Vec::<Step>::new())];
        while let Some((us, steps)) = stack.pop() {
            if steps.len() == self.n {
                let t = Trajectory { family, u_sequence: us, steps: BorderPath::new(steps).expect("n >= 1") };
                let p = self.probability(&t);
                out.insert(t, p);
                continue;
            }
            for t in &self.transitions[*us.last().expect("non-empty")] {
                let mut us = us.clone();
                us.push(t.to);
                let mut steps = steps.clone();
                steps.push(t.step);
                stack.push((us, steps));
            }
        }
        out
    }

    /// Realizes a permutation tableau uniformly among those with the given trajectory.
    ///
    /// For a west step from `u` to `j`, the topmost chosen row has rank `t`
    /// among the unrestricted rows with weight `C(u - t, j - t)`, and the
    /// other `j - t` chosen rows are uniform among the unrestricted rows below it.
    pub fn realize_permutation<R: Rng>(&self, trajectory: &Trajectory, rng: &mut R) -> Result<PermutationTableau> {
        if trajectory.family != ChainFamily::Permutation {
            return Err(Error::Domain("only permutation trajectories carry a filling construction".into()));
        }
        let mut tableau = PermutationTableau::single_row();
        for (k, &step) in trajectory.steps.steps().iter().enumerate().skip(1) {
            let (u, j) = (trajectory.u_sequence[k], trajectory.u_sequence[k + 1]);
            let ext = match step {
                Step::South => Extension::Row,
                Step::West => {
                    let free = tableau.unrestricted_rows();
                    debug_assert_eq!(free.len(), u);
                    let weights: Vec<BigUint> = (1..=j).map(|t| binomial(u - t, j - t)).collect();
                    let total: BigUint = weights.iter().sum();
                    let mut x = rng.gen_biguint_below(&total);
                    let mut top = 1;
                    for (i, w) in weights.iter().enumerate() {
                        if &x < w {
                            top = i + 1;
                            break;
                        }
                        x -= w;
                    }
                    let below = &free[top..];
                    let mut chosen = vec![free[top - 1]];
                    chosen.extend(index::sample(rng, below.len(), j - top).into_iter().map(|i| below[i]));
                    chosen.sort_unstable();
                    Extension::Column(chosen)
                }
            };
            tableau = apply_extension(&tableau, &ext);
        }
        Ok(tableau)
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn sample_trajectory(n: usize, family: Family, seed: u64) -> Result<Trajectory> {
    Ok(Sampler::new(n, chain_of(family))?.sample(&mut rng_for(seed, 0)))
}

pub fn sample_permutation_tableau(n: usize, seed: u64) -> Result<PermutationTableau> {
    let sampler = Sampler::new(n, ChainFamily::Permutation)?;
    let mut rng = rng_for(seed, 0);
    let t = sampler.sample(&mut rng);
    sampler.realize_permutation(&t, &mut rng)
}

/// `n` uniform permutation tableaux from one seed, drawn batch by batch.
pub fn sample_permutation_tableaux(n: usize, count: u64, seed: u64, exec: Exec) -> Result<Vec<PermutationTableau>> {
    let sampler = Sampler::new(n, ChainFamily::Permutation)?;
    let batches: Vec<u64> = (0..count.div_ceil(BATCH_SIZE)).collect();
    let out = exec.map(batches, |b| -> Result<Vec<PermutationTableau>> {
        let mut rng = rng_for(seed, b);
        let size = BATCH_SIZE.min(count - b * BATCH_SIZE);
        (0..size)
            .map(|_| {
                let t = sampler.sample(&mut rng);
                sampler.realize_permutation(&t, &mut rng)
            })
            .collect()
    });
    Ok(out.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect())
}

/// Draws `count` trajectories, batch by batch.
pub fn sample_trajectories(n: usize, family: Family, count: u64, seed: u64, exec: Exec) -> Result<Vec<Trajectory>> {
    let sampler = Sampler::new(n, chain_of(family))?;
    let batches: Vec<u64> = (0..count.div_ceil(BATCH_SIZE)).collect();
    let out = exec.map(batches, |b| {
        let mut rng = rng_for(seed, b);
        let size = BATCH_SIZE.min(count - b * BATCH_SIZE);
        (0..size).map(|_| sampler.sample(&mut rng)).collect::<Vec<_>>()
    });
    Ok(out.into_iter().flatten().collect())
}

/// Rounds to 12 significant digits on output.
fn sig12<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round12(*x))
}

fn sig12_opt<S: Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_f64(round12(*v)),
        None => s.serialize_none(),
    }
}

fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PositionEstimate {
    pub k: usize,
    pub hits: u64,
    #[serde(serialize_with = "sig12")]
    pub frequency: f64,
    #[serde(with = "decimal::rational")]
    pub reference: BigRational,
    #[serde(serialize_with = "sig12_opt")]
    pub z_score: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct McReport {
    pub n: usize,
    pub family: Family,
    pub sample_count: u64,
    pub seed: u64,
    pub generator: String,
    #[serde(serialize_with = "sig12")]
    pub mean_corners: f64,
    #[serde(serialize_with = "sig12")]
    pub standard_error: f64,
    #[serde(with = "decimal::rational")]
    pub reference: BigRational,
    #[serde(serialize_with = "sig12")]
    pub reference_value: f64,
    /// `None` when the standard error is zero.
    #[serde(serialize_with = "sig12_opt")]
    pub z_score: Option<f64>,
    pub per_k: Vec<PositionEstimate>,
}

impl McReport {
    pub fn within(&self, standard_errors: f64) -> bool {
        match self.z_score {
            Some(z) => z.abs() <= standard_errors,
            None => self.mean_corners == self.reference_value,
        }
    }
}

#[derive(Default)]
struct Tally {
    sum: u64,
    sum_sq: u64,
    hits: Vec<u64>,
}

/// Mean corner count and per-position corner frequencies from seeded samples,
/// against the exact values.
pub fn monte_carlo_corner_report(n: usize, family: Family, sample_count: u64, seed: u64) -> Result<McReport> {
    monte_carlo_corner_report_with(n, family, sample_count, seed, Exec::default())
}

pub fn monte_carlo_corner_report_with(
    n: usize,
    family: Family,
    sample_count: u64,
    seed: u64,
    exec: Exec,
) -> Result<McReport> {
    if n < 2 {
        return Err(Error::Domain(format!("Monte Carlo needs n >= 2, got {n}")));
    }
    if sample_count < 100 {
        return Err(Error::Domain(format!("Monte Carlo needs at least 100 samples, got {sample_count}")));
    }
    let sampler = Sampler::new(n, chain_of(family))?;
    let positions = family.path_length(n) - 1;
    let batches: Vec<u64> = (0..sample_count.div_ceil(BATCH_SIZE)).collect();
    let tallies = exec.map(batches, |b| {
        let mut rng = rng_for(seed, b);
        let size = BATCH_SIZE.min(sample_count - b * BATCH_SIZE);
        let mut tally = Tally { hits: vec![0; positions], ..Tally::default() };
        for _ in 0..size {
            let path = sampler.sample(&mut rng).path_for(family);
            let corners = path.corners();
            let c = corners.len() as u64;
            tally.sum += c;
            tally.sum_sq += c * c;
            for k in corners {
                tally.hits[k - 1] += 1;
            }
        }
        tally
    });
    let mut total = Tally { hits: vec![0; positions], ..Tally::default() };
    for t in tallies {
        total.sum += t.sum;
        total.sum_sq += t.sum_sq;
        for (a, b) in total.hits.iter_mut().zip(t.hits) {
            *a += b;
        }
    }

    let count = sample_count as f64;
    let mean = total.sum as f64 / count;
    let variance = ((total.sum_sq as f64 - count * mean * mean) / (count - 1.0)).max(0.0);
    let standard_error = (variance / count).sqrt();
    let reference = expected_corners(n, family)?;
    let reference_value = to_f64(&reference);
    let z = |est: f64, target: f64, se: f64| (se > 0.0).then(|| (est - target) / se);

    let oracle = DpOracle::new(n);
    let probs = oracle.corner_probabilities(n, family)?;
    let per_k = probs
        .into_iter()
        .zip(total.hits)
        .enumerate()
        .map(|(i, (p, hits))| {
            let frequency = hits as f64 / count;
            let pf = to_f64(&p);
            PositionEstimate {
                k: i + 1,
                hits,
                frequency,
                reference: p,
                z_score: z(frequency, pf, (pf * (1.0 - pf) / count).sqrt()),
            }
        })
        .collect();

    Ok(McReport {
        n,
        family,
        sample_count,
        seed,
        generator: GENERATOR_ID.into(),
        mean_corners: mean,
        standard_error,
        z_score: z(mean, reference_value, standard_error),
        reference,
        reference_value,
        per_k,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
}

impl ChiSquareTest {
    pub fn passes(&self, significance: f64) -> bool {
        self.p_value >= significance
    }
}

/// Pearson goodness of fit of observed counts against exact cell probabilities.
pub fn chi_square_test(observed: &[u64], expected: &[BigRational]) -> Result<ChiSquareTest> {
    if observed.len() != expected.len() || observed.len() < 2 {
        return Err(Error::Domain("chi-square needs at least two matching cells".into()));
    }
    let total: u64 = observed.iter().sum();
    let statistic = observed
        .iter()
        .zip(expected)
        .map(|(&o, p)| {
            let e = to_f64(&(p * BigRational::from_integer(BigInt::from(total))));
            (o as f64 - e).powi(2) / e
        })
        .sum::<f64>();
    let degrees_of_freedom = observed.len() - 1;
    let dist = ChiSquared::new(degrees_of_freedom as f64).map_err(|e| Error::Domain(e.to_string()))?;
    Ok(ChiSquareTest { statistic, degrees_of_freedom, p_value: dist.sf(statistic) })
}
