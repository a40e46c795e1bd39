//! Labeled matroid enumeration on tiny ground sets and `(k,l)`-uniform counts.
//!
//! `m_n(k,l)` counts labeled matroids on `{1, …, n}`. Brute force covers
//! `n ≤ 6`; beyond that counts come from a catalog of isomorphism class
//! representatives, each class contributing `n! / |Aut|` labeled matroids.

use alloc::vec::Vec;

use crate::iso::{automorphism_count, is_isomorphic};
use crate::set::k_subsets;
use crate::tutte::tutte_by_activities;
use crate::uniformity::{kl_uniform_from_tutte, KLPair};
use crate::{ElementSet, Error, Matroid, Result, TuttePolynomial};

/// Largest `n` for [`enumerate_labeled`].
pub const MAX_BRUTE_FORCE_N: usize = 6;

/// Every labeled matroid on `{1, …, n}`, ordered by rank and then by the
/// bit pattern of the basis family over the colex-ordered `r`-subsets.
pub fn enumerate_labeled(n: usize) -> Result<LabeledMatroids> {
    if n > MAX_BRUTE_FORCE_N {
        return Err(Error::UniverseTooLargeForBruteForce { n });
    }
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    Ok(LabeledMatroids { n, rank: 0, layer: RankLayer::new(n, 0), family: 0 })
}

/// Candidate `r`-subsets with their exchange tables.
#[derive(Debug)]
struct RankLayer {
    subsets: Vec<ElementSet>,
    /// `swap[i][x - 1][y - 1]`: index of `S_i - x + y`.
    swap: Vec<[[u8; MAX_BRUTE_FORCE_N]; MAX_BRUTE_FORCE_N]>,
}

impl RankLayer {
    fn new(n: usize, r: usize) -> Self {
        let subsets: Vec<ElementSet> = k_subsets(n, r).collect();
        let index_of = |s: ElementSet| subsets.iter().position(|&t| t == s).expect("same size") as u8;
        let ground = ElementSet::full(n);
        let swap = subsets
            .iter()
            .map(|&s| {
                let mut table = [[u8::MAX; MAX_BRUTE_FORCE_N]; MAX_BRUTE_FORCE_N];
                for x in s.iter() {
                    for y in (ground - s).iter() {
                        table[x - 1][y - 1] = index_of(s.without(x).with(y));
                    }
                }
                table
            })
            .collect();
        RankLayer { subsets, swap }
    }

    fn families(&self) -> u64 {
        1u64 << self.subsets.len()
    }

    /// Exchange axiom on a family given as a bitmask over `subsets`.
    fn is_matroid(&self, family: u64) -> bool {
        let mut outer = family;
        while outer != 0 {
            let i = outer.trailing_zeros() as usize;
            outer &= outer - 1;
            let si = self.subsets[i];
            let mut inner = family;
            while inner != 0 {
                let j = inner.trailing_zeros() as usize;
                inner &= inner - 1;
                if i == j {
                    continue;
                }
                let sj = self.subsets[j];
                let gain = sj - si;
                for x in (si - sj).iter() {
                    let row = &self.swap[i][x - 1];
                    if !gain.iter().any(|y| family >> row[y - 1] & 1 == 1) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Debug)]
pub struct LabeledMatroids {
    n: usize,
    rank: usize,
    layer: RankLayer,
    family: u64,
}

impl Iterator for LabeledMatroids {
    type Item = Matroid;

    fn next(&mut self) -> Option<Matroid> {
        loop {
            if self.rank > self.n {
                return None;
            }
            self.family += 1;
            if self.family >= self.layer.families() {
                self.rank += 1;
                self.family = 0;
                if self.rank <= self.n {
                    self.layer = RankLayer::new(self.n, self.rank);
                }
                continue;
            }
            if self.layer.is_matroid(self.family) {
                let bases = bits_to_sets(&self.layer.subsets, self.family);
                return Some(Matroid::from_family_unchecked(ElementSet::full(self.n), bases));
            }
        }
    }
}

fn bits_to_sets(subsets: &[ElementSet], mut family: u64) -> Vec<ElementSet> {
    let mut out = Vec::with_capacity(family.count_ones() as usize);
    while family != 0 {
        out.push(subsets[family.trailing_zeros() as usize]);
        family &= family - 1;
    }
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// One isomorphism class of matroids on `n` elements.
#[derive(Clone, Debug)]
pub struct IsoClass {
    pub representative: Matroid,
    pub tutte: TuttePolynomial,
    pub automorphisms: u64,
    /// Labeled matroids in the class, `n! / |Aut|`.
    pub orbit_size: u64,
}

impl IsoClass {
    pub fn new(representative: Matroid) -> IsoClass {
        let automorphisms = automorphism_count(&representative);
        let orbit_size = factorial(representative.n()) / automorphisms;
        let tutte = tutte_by_activities(&representative);
        IsoClass { representative, tutte, automorphisms, orbit_size }
    }
}

/// Partitions matroids into isomorphism classes, in order of first
/// appearance. Returns each class with the number of inputs that fell in it.
pub fn classify<I: IntoIterator<Item = Matroid>>(matroids: I) -> Vec<(IsoClass, u64)> {
    let mut classes: Vec<(IsoClass, u64)> = Vec::new();
    for m in matroids {
        let t = tutte_by_activities(&m);
        let hit = classes
            .iter_mut()
            .find(|(c, _)| c.tutte == t && is_isomorphic(&c.representative, &m).is_some());
        match hit {
            Some((_, count)) => *count += 1,
            None => classes.push((IsoClass::new(m), 1)),
        }
    }
    classes
}

/// Where a census count came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    BruteForce,
    Catalog,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::BruteForce => "brute_force",
            Source::Catalog => "catalog",
        }
    }
}

/// Counts of `(k,l)`-uniform matroids on `{1, …, n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CensusRecord {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    /// `m_n(k,l)`.
    pub labeled_count: u64,
    pub unlabeled_count: u64,
    pub source: Source,
}

/// Filters every labeled matroid directly; the unlabeled count comes from
/// classifying the survivors.
pub fn count_uniform_brute_force(n: usize, kl: KLPair) -> Result<CensusRecord> {
    let uniform: Vec<Matroid> =
        enumerate_labeled(n)?.filter(|m| kl_uniform_from_tutte(&tutte_by_activities(m), kl)).collect();
    let labeled_count = uniform.len() as u64;
    let unlabeled_count = classify(uniform).len() as u64;
    Ok(CensusRecord { n, k: kl.k(), l: kl.l(), labeled_count, unlabeled_count, source: Source::BruteForce })
}

/// Counts from one representative per isomorphism class.
pub fn count_uniform_from_classes(n: usize, classes: &[IsoClass], kl: KLPair, source: Source) -> Result<CensusRecord> {
    let mut labeled_count = 0u64;
    let mut unlabeled_count = 0u64;
    for c in classes.iter().filter(|c| kl_uniform_from_tutte(&c.tutte, kl)) {
        if c.representative.n() != n {
            return Err(Error::InvalidRank { rank: c.representative.rank(), n });
        }
        labeled_count = labeled_count.checked_add(c.orbit_size).expect("census count overflow");
        unlabeled_count += 1;
    }
    Ok(CensusRecord { n, k: kl.k(), l: kl.l(), labeled_count, unlabeled_count, source })
}
