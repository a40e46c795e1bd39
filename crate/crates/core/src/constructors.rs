//! Named matroids: uniform, Schubert (nested), and `τ^m(N ⊕ U_{r,s})`.

use alloc::vec::Vec;

use crate::activity::ActivityPair;
use crate::set::k_subsets;
use crate::{ElementSet, Error, Matroid, Result, MAX_ELEMENTS};

/// `U_{r,n}`: every `r`-subset of `{1, …, n}` is a basis.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if n == 0 || n > MAX_ELEMENTS || r > n {
        return Err(Error::InvalidRank { rank: r, n });
    }
    Ok(Matroid::from_family_unchecked(ElementSet::full(n), k_subsets(n, r).collect()))
}

/// A step of a monotone lattice path from `(0,0)` to `(n-d, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    North,
    East,
}

/// Defining set `I = {a_1 < … < a_d} ⊆ {1, …, n}` of a Schubert matroid.
///
/// Bases are the `d`-sets Gale-above `I`. A `d`-set `S` is drawn as the path
/// whose `i`-th step is north iff `i ∈ S`; bases are exactly the paths lying
/// between `P = E^{n-d} N^d` and `Q`, the path of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertSpec {
    n: usize,
    defining: ElementSet,
}

impl SchubertSpec {
    /// `defining` must be strictly increasing within `1..=n`.
    pub fn new(n: usize, defining: &[usize]) -> Result<SchubertSpec> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge { n });
        }
        if defining.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSchubertSet);
        }
        let defining = ElementSet::from_elements(n, defining.iter().copied())?;
        Ok(SchubertSpec { n, defining })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.defining.len()
    }

    pub fn defining_set(&self) -> ElementSet {
        self.defining
    }

    /// Path of a `d`-subset: step `i` is north iff `i` is in the set.
    pub fn path_of(&self, set: ElementSet) -> Vec<Step> {
        (1..=self.n).map(|i| if set.contains(i) { Step::North } else { Step::East }).collect()
    }

    /// `P = E^{n-d} N^d`.
    pub fn lower_path(&self) -> Vec<Step> {
        let d = self.rank();
        self.path_of(ElementSet::full(self.n) - ElementSet::full(self.n - d))
    }

    /// `Q`, the path of the defining set.
    pub fn upper_path(&self) -> Vec<Step> {
        self.path_of(self.defining)
    }

    /// Non-strict Gale dominance `a_i ≤ b_i` with matching size.
    pub fn dominates(&self, set: ElementSet) -> bool {
        set.len() == self.rank()
            && set.is_subset(ElementSet::full(self.n))
            && self.defining.iter().zip(set.iter()).all(|(a, b)| a <= b)
    }
}

/// Bases: all `d`-subsets `{b_1 < … < b_d}` with `a_i ≤ b_i`.
pub fn schubert(spec: &SchubertSpec) -> Matroid {
    let bases = k_subsets(spec.n, spec.rank()).filter(|&s| spec.dominates(s)).collect();
    Matroid::from_family_unchecked(ElementSet::full(spec.n), bases)
}

/// Steps at which two paths traverse the same lattice edge.
fn shared_edges(a: &[Step], b: &[Step], direction: Step) -> usize {
    let (mut pa, mut pb) = ((0usize, 0usize), (0usize, 0usize));
    let mut shared = 0;
    for (&sa, &sb) in a.iter().zip(b) {
        if pa == pb && sa == sb && sa == direction {
            shared += 1;
        }
        for (p, s) in [(&mut pa, sa), (&mut pb, sb)] {
            match s {
                Step::East => p.0 += 1,
                Step::North => p.1 += 1,
            }
        }
    }
    shared
}

/// Activities read off the lattice path of a basis: internal activity counts
/// north edges shared with `Q`, external activity counts east edges shared
/// with `P`.
pub fn lattice_path_activity(spec: &SchubertSpec, basis: ElementSet) -> Result<ActivityPair> {
    if !spec.dominates(basis) {
        return Err(Error::NotABasis(basis));
    }
    let path = spec.path_of(basis);
    Ok(ActivityPair {
        internal: shared_edges(&path, &spec.upper_path(), Step::North),
        external: shared_edges(&path, &spec.lower_path(), Step::East),
    })
}

/// `τ^m(N ⊕ U_{r,s})` where `N` has rank `r` on `s` elements.
///
/// With `k = r - m` and `l = s - r`, a loopless coloopless `N` with
/// `k, l ≥ 1` yields a loopless coloopless excluded minor of the
/// almost-`(k,l)`-uniform matroids. `N` occupies labels `1..=s`.
pub fn theorem4_construct(n: &Matroid, m: usize) -> Result<Matroid> {
    if !n.loops().is_empty() || !n.coloops().is_empty() {
        return Err(Error::LoopOrColoopPresent);
    }
    let (k, l) = theorem4_parameters(n, m);
    if k < 1 || l < 1 {
        return Err(Error::InvalidParameters { k, l });
    }
    let u = uniform(n.rank(), n.n())?;
    n.direct_sum(&u)?.truncate_m(m)
}

/// `(k, l) = (rank - m, |E| - rank)`, possibly non-positive.
pub fn theorem4_parameters(n: &Matroid, m: usize) -> (isize, isize) {
    let r = n.rank() as isize;
    (r - m as isize, n.n() as isize - r)
}
