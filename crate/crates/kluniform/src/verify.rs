//! Exhaustive cross-checks of the characterization predicates over every
//! labeled matroid on `{1, …, n}`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use kluniform_core::census::enumerate_labeled;
use kluniform_core::tutte::{tutte_by_activities, tutte_by_deletion_contraction};
use kluniform_core::uniformity::{
    almost_kl_uniform_from_tutte, is_excluded_minor_tutte, is_kl_uniform_flats, is_kl_uniform_minor,
    DefinitionalOracle,
};
use kluniform_core::{KLPair, Matroid, TuttePolynomial};

use crate::error::Result;
use crate::format::write_matroid;

/// Tutte-support test for `(k,l)`-uniformity; swappable so a broken
/// predicate can be shown to be caught.
pub type RegionPredicate = fn(&TuttePolynomial, usize, usize) -> bool;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n: usize,
    /// Every `1..=n` instead of exactly `n`.
    pub all_sizes: bool,
    pub k_max: usize,
    pub l_max: usize,
    pub seed: u64,
    pub permutations: usize,
    pub region: RegionPredicate,
}

impl VerifyConfig {
    pub fn new(n: usize, k_max: usize, l_max: usize) -> Self {
        VerifyConfig {
            n,
            all_sizes: false,
            k_max,
            l_max,
            seed: 0,
            permutations: 20,
            region: TuttePolynomial::vanishes_at_or_above,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    /// Activities against deletion-contraction.
    TutteCross,
    /// Tutte polynomial under seeded random relabelings.
    OrderInvariance,
    /// Tutte support, flats and minor search.
    Uniform,
    /// Coefficients against single-element minors.
    Almost,
    /// Coefficients against two levels of single-element minors.
    Excluded,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::TutteCross, Check::OrderInvariance, Check::Uniform, Check::Almost, Check::Excluded];

    pub fn name(self) -> &'static str {
        match self {
            Check::TutteCross => "tutte-cross",
            Check::OrderInvariance => "order-invariance",
            Check::Uniform => "uniform",
            Check::Almost => "almost",
            Check::Excluded => "excluded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub matroid: Matroid,
    pub kl: Option<KLPair>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
    pub first_failure: Option<Counterexample>,
}

impl Tally {
    fn record(&mut self, ok: bool, failure: impl FnOnce() -> Counterexample) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(failure());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.passed += other.passed;
        self.failed += other.failed;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub matroids: u64,
    pub k_max: usize,
    pub l_max: usize,
    pub tallies: [Tally; 5],
}

impl VerifyReport {
    pub fn tally(&self, check: Check) -> &Tally {
        &self.tallies[check as usize]
    }

    pub fn all_passed(&self) -> bool {
        self.tallies.iter().all(|t| t.failed == 0)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matroids {}", self.matroids)?;
        writeln!(f, "grid k=1..{} l=1..{}", self.k_max, self.l_max)?;
        for check in Check::ALL {
            let t = self.tally(check);
            writeln!(f, "{} pass={} fail={}", check.name(), t.passed, t.failed)?;
        }
        for check in Check::ALL {
            if let Some(c) = &self.tally(check).first_failure {
                match c.kl {
                    Some(kl) => writeln!(f, "first counterexample for {} at {kl}: {}", check.name(), c.detail)?,
                    None => writeln!(f, "first counterexample for {}: {}", check.name(), c.detail)?,
                }
                f.write_str(&write_matroid(&c.matroid))?;
            }
        }
        Ok(())
    }
}

/// Runs every check on the current rayon pool. Results do not depend on the
/// number of threads.
pub fn verify(config: &VerifyConfig) -> Result<VerifyReport> {
    let sizes = if config.all_sizes { 1..=config.n } else { config.n..=config.n };
    let mut corpus = Vec::new();
    for n in sizes {
        corpus.extend(enumerate_labeled(n)?);
    }
    let grid: Vec<KLPair> = (1..=config.k_max)
        .flat_map(|k| (1..=config.l_max).map(move |l| KLPair::new(k, l).expect("k, l ≥ 1")))
        .collect();

    let per_matroid: Vec<[Tally; 5]> =
        corpus.par_iter().enumerate().map(|(i, m)| check_matroid(i as u64, m, &grid, config)).collect();

    let mut tallies: [Tally; 5] = Default::default();
    for result in per_matroid {
        for (total, part) in tallies.iter_mut().zip(result) {
            total.merge(part);
        }
    }
    Ok(VerifyReport { matroids: corpus.len() as u64, k_max: config.k_max, l_max: config.l_max, tallies })
}

fn check_matroid(index: u64, m: &Matroid, grid: &[KLPair], config: &VerifyConfig) -> [Tally; 5] {
    let mut tallies: [Tally; 5] = Default::default();
    let failure = |kl: Option<KLPair>, detail: String| Counterexample { matroid: m.clone(), kl, detail };

    let t = tutte_by_activities(m);
    let dc = tutte_by_deletion_contraction(m);
    tallies[Check::TutteCross as usize].record(t == dc, || failure(None, format!("activities {t}, recursion {dc}")));

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut perm: Vec<usize> = (1..=m.n()).collect();
    let order = &mut tallies[Check::OrderInvariance as usize];
    let mut unchanged = true;
    let mut witness = String::new();
    for _ in 0..config.permutations {
        perm.shuffle(&mut rng);
        let relabeled = tutte_by_activities(&m.relabel(&perm).expect("a permutation"));
        if relabeled != t && unchanged {
            unchanged = false;
            witness = format!("permutation {perm:?} gives {relabeled}, expected {t}");
        }
    }
    order.record(unchanged, || failure(None, witness));

    let oracle = DefinitionalOracle::new(m);
    for &kl in grid {
        let (k, l) = (kl.k(), kl.l());
        let by_tutte = (config.region)(&t, k, l);
        let by_flats = is_kl_uniform_flats(m, kl);
        let by_minor = is_kl_uniform_minor(m, kl);
        tallies[Check::Uniform as usize].record(by_tutte == by_flats && by_flats == by_minor, || {
            failure(Some(kl), format!("tutte={by_tutte} flats={by_flats} minor={by_minor}"))
        });

        let almost_def = oracle.is_almost(kl);
        let almost_coeff = almost_kl_uniform_from_tutte(&t, kl);
        tallies[Check::Almost as usize]
            .record(almost_def == almost_coeff, || failure(Some(kl), format!("definition={almost_def} coefficients={almost_coeff}")));

        let excluded_def = oracle.is_excluded_minor(kl);
        let excluded_coeff = is_excluded_minor_tutte(m, kl);
        tallies[Check::Excluded as usize].record(excluded_def == excluded_coeff, || {
            failure(Some(kl), format!("definition={excluded_def} coefficients={excluded_coeff}"))
        });
    }
    tallies
}
