//! `(k,l)`-uniformity, almost-`(k,l)`-uniformity and excluded minors.
//!
//! A matroid is `(k,l)`-uniform when it has no `U_{k,k} ⊕ U_{0,l}` minor.
//! Three independent tests are provided: the minor search itself, "every
//! corank-`k` flat has nullity `< l`", and "`t_{i,j} = 0` whenever
//! `(i,j) ≥ (k,l)`" on the Tutte polynomial. The Tutte test is the fast one
//! and the one the definitional almost/excluded predicates use internally.

use alloc::vec::Vec;
use core::fmt;

use crate::constructors::uniform;
use crate::iso::{has_minor, is_isomorphic};
use crate::tutte::tutte_by_activities;
use crate::{ElementSet, Error, Matroid, Result, TuttePolynomial};

/// A pair of positive integers `(k, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KLPair {
    k: usize,
    l: usize,
}

impl KLPair {
    pub fn new(k: usize, l: usize) -> Result<KLPair> {
        if k == 0 || l == 0 {
            return Err(Error::InvalidKLPair { k, l });
        }
        Ok(KLPair { k, l })
    }

    #[inline]
    pub fn k(self) -> usize {
        self.k
    }

    #[inline]
    pub fn l(self) -> usize {
        self.l
    }

    /// Componentwise `self ≤ other`.
    pub fn dominated_by(self, other: KLPair) -> bool {
        self.k <= other.k && self.l <= other.l
    }
}

impl fmt::Display for KLPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

/// `U_{i,i} ⊕ U_{0,j}`: `i` coloops followed by `j` loops.
pub fn coloops_and_loops(i: usize, j: usize) -> Result<Matroid> {
    match (i, j) {
        (0, 0) => Err(Error::EmptyGroundSet),
        (i, 0) => uniform(i, i),
        (0, j) => uniform(0, j),
        (i, j) => uniform(i, i)?.direct_sum(&uniform(0, j)?),
    }
}

pub fn kl_uniform_from_tutte(t: &TuttePolynomial, kl: KLPair) -> bool {
    t.vanishes_at_or_above(kl.k, kl.l)
}

pub fn almost_kl_uniform_from_tutte(t: &TuttePolynomial, kl: KLPair) -> bool {
    t.coefficient(kl.k, kl.l) <= 1 && t.vanishes_strictly_above(kl.k, kl.l)
}

/// The default `(k,l)`-uniformity test (Tutte support).
pub fn is_kl_uniform(m: &Matroid, kl: KLPair) -> bool {
    is_kl_uniform_tutte(m, kl)
}

pub fn is_kl_uniform_tutte(m: &Matroid, kl: KLPair) -> bool {
    kl_uniform_from_tutte(&tutte_by_activities(m), kl)
}

/// Every corank-`k` flat has nullity `< l`. Vacuously true when `k > rank`.
pub fn is_kl_uniform_flats(m: &Matroid, kl: KLPair) -> bool {
    if kl.k > m.rank() {
        return true;
    }
    let rank = m.rank_table();
    m.flats_of_corank(kl.k)
        .expect("corank within rank")
        .into_iter()
        .all(|f| f.len() - (rank[f.bits() as usize] as usize) < kl.l)
}

/// No minor isomorphic to `U_{k,k} ⊕ U_{0,l}`, by exhaustive search.
pub fn is_kl_uniform_minor(m: &Matroid, kl: KLPair) -> bool {
    if kl.k + kl.l > m.n() {
        return true;
    }
    let target = coloops_and_loops(kl.k, kl.l).expect("target fits in the ground set");
    !has_minor(m, &target)
}

/// `(2,1)`-uniform.
pub fn is_paving(m: &Matroid) -> bool {
    is_kl_uniform_tutte(m, KLPair { k: 2, l: 1 })
}

/// `[T(M \ v), T(M / v)]` for every element `v`. Removing the last element
/// leaves the empty matroid, whose polynomial is `1`.
#[derive(Clone, Debug)]
struct OneElementMinors {
    tuttes: Vec<[TuttePolynomial; 2]>,
}

impl OneElementMinors {
    fn new(m: &Matroid) -> Self {
        let tuttes = m
            .elements()
            .map(|v| {
                if m.n() == 1 {
                    return [TuttePolynomial::one(), TuttePolynomial::one()];
                }
                let single = ElementSet::singleton(v);
                [
                    tutte_by_activities(&m.delete(single).expect("v in ground")),
                    tutte_by_activities(&m.contract(single).expect("v in ground")),
                ]
            })
            .collect();
        OneElementMinors { tuttes }
    }

    fn almost(&self, kl: KLPair) -> bool {
        self.tuttes
            .iter()
            .all(|[del, con]| kl_uniform_from_tutte(del, kl) || kl_uniform_from_tutte(con, kl))
    }
}

/// Precomputed minors for evaluating the definitional predicates over many
/// `(k, l)` at once.
#[derive(Clone, Debug)]
pub struct DefinitionalOracle {
    own: OneElementMinors,
    /// For each element `v`: one-element minors of `M \ v` and of `M / v`.
    children: Vec<[OneElementMinors; 2]>,
}

impl DefinitionalOracle {
    /// Enough for [`DefinitionalOracle::is_almost`] only.
    pub fn shallow(m: &Matroid) -> Self {
        DefinitionalOracle { own: OneElementMinors::new(m), children: Vec::new() }
    }

    pub fn new(m: &Matroid) -> Self {
        let children = m
            .elements()
            .map(|v| {
                if m.n() == 1 {
                    let empty = OneElementMinors { tuttes: Vec::new() };
                    return [empty.clone(), empty];
                }
                let single = ElementSet::singleton(v);
                [
                    OneElementMinors::new(&m.delete(single).expect("v in ground")),
                    OneElementMinors::new(&m.contract(single).expect("v in ground")),
                ]
            })
            .collect();
        DefinitionalOracle { own: OneElementMinors::new(m), children }
    }

    /// For every `v`, `M \ v` or `M / v` is `(k,l)`-uniform.
    pub fn is_almost(&self, kl: KLPair) -> bool {
        self.own.almost(kl)
    }

    /// Not almost-`(k,l)`-uniform, while every single-element deletion and
    /// contraction is. Single-element minors suffice because the class is
    /// minor-closed.
    pub fn is_excluded_minor(&self, kl: KLPair) -> bool {
        assert!(
            self.children.len() == self.own.tuttes.len(),
            "oracle built with DefinitionalOracle::shallow"
        );
        !self.own.almost(kl) && self.children.iter().all(|[del, con]| del.almost(kl) && con.almost(kl))
    }
}

pub fn is_almost_kl_uniform_def(m: &Matroid, kl: KLPair) -> bool {
    DefinitionalOracle::shallow(m).is_almost(kl)
}

/// `t_{k,l} ≤ 1` and `t_{i,j} = 0` for `(i,j) > (k,l)`.
pub fn is_almost_kl_uniform_tutte(m: &Matroid, kl: KLPair) -> bool {
    almost_kl_uniform_from_tutte(&tutte_by_activities(m), kl)
}

pub fn is_excluded_minor_def(m: &Matroid, kl: KLPair) -> bool {
    DefinitionalOracle::new(m).is_excluded_minor(kl)
}

/// Excluded minor of the almost-`(k,l)`-uniform class, via coefficients.
///
/// Either `M ≅ U_{k+1,k+1} ⊕ U_{0,l}`, or `M ≅ U_{k,k} ⊕ U_{0,l+1}`, or:
/// some element is neither loop nor coloop; `t_{k,l} = 2` with nothing
/// strictly above; and for each such element `v` both `T(M \ v)` and
/// `T(M / v)` have `(k,l)` coefficient `1`.
pub fn is_excluded_minor_tutte(m: &Matroid, kl: KLPair) -> bool {
    let (k, l) = (kl.k, kl.l);
    if m.n() == k + l + 1 {
        for (i, j) in [(k + 1, l), (k, l + 1)] {
            let target = coloops_and_loops(i, j).expect("fits in the ground set");
            if is_isomorphic(m, &target).is_some() {
                return true;
            }
        }
    }
    let mixed = m.ground() - m.loops() - m.coloops();
    if mixed.is_empty() {
        return false;
    }
    let t = tutte_by_activities(m);
    if t.coefficient(k, l) != 2 || !t.vanishes_strictly_above(k, l) {
        return false;
    }
    mixed.iter().all(|v| {
        let single = ElementSet::singleton(v);
        let del = tutte_by_activities(&m.delete(single).expect("v in ground"));
        let con = tutte_by_activities(&m.contract(single).expect("v in ground"));
        del.coefficient(k, l) == 1 && con.coefficient(k, l) == 1
    })
}

/// The minimal `(k, l)` within bounds for which a matroid is `(k,l)`-uniform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformityProfile {
    k_max: usize,
    l_max: usize,
    minimal_pairs: Vec<KLPair>,
}

impl UniformityProfile {
    /// Pairwise incomparable, sorted by `k`.
    pub fn minimal_pairs(&self) -> &[KLPair] {
        &self.minimal_pairs
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.k_max, self.l_max)
    }

    /// Membership for pairs within the bounds.
    pub fn is_uniform(&self, kl: KLPair) -> bool {
        self.minimal_pairs.iter().any(|p| p.dominated_by(kl))
    }
}

pub fn uniformity_profile(m: &Matroid, k_max: usize, l_max: usize) -> Result<UniformityProfile> {
    KLPair::new(k_max, l_max)?;
    Ok(profile_from_tutte(&tutte_by_activities(m), k_max, l_max))
}

/// `(k,l)` is uniform iff no support point dominates it, so the uniform
/// region is an up-set and its minimal elements are a staircase.
pub fn profile_from_tutte(t: &TuttePolynomial, k_max: usize, l_max: usize) -> UniformityProfile {
    let mut minimal_pairs = Vec::new();
    // for each k, the least uniform l; it strictly decreases as k grows
    let mut best_l = l_max + 1;
    for k in 1..=k_max {
        let l = (1..best_l).find(|&l| t.vanishes_at_or_above(k, l));
        if let Some(l) = l {
            minimal_pairs.push(KLPair { k, l });
            best_l = l;
        }
    }
    UniformityProfile { k_max, l_max, minimal_pairs }
}
