//! Fundamental circuits and cocircuits, basis activities, and the Gale-smallest basis.
//!
//! Activities always use the natural order of the element labels. To study a
//! different order, relabel the matroid first.

use alloc::vec::Vec;
use core::fmt;

use crate::{ElementSet, Error, Matroid, Result};

/// `(internal activity, external activity)` of a basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActivityPair {
    pub internal: usize,
    pub external: usize,
}

impl ActivityPair {
    pub const fn new(internal: usize, external: usize) -> Self {
        ActivityPair { internal, external }
    }
}

impl fmt::Display for ActivityPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.internal, self.external)
    }
}

fn require_basis(m: &Matroid, basis: ElementSet) -> Result<()> {
    if m.is_basis(basis) {
        Ok(())
    } else {
        Err(Error::NotABasis(basis))
    }
}

/// The unique circuit inside `B ∪ {v}` for `v ∉ B`.
pub fn fundamental_circuit(m: &Matroid, basis: ElementSet, v: usize) -> Result<ElementSet> {
    require_basis(m, basis)?;
    if basis.contains(v) {
        return Err(Error::ElementInBasis { element: v });
    }
    if !m.ground().contains(v) {
        return Err(Error::ElementOutOfRange { element: v, n: m.ground().max().unwrap_or(0) });
    }
    Ok(circuit_unchecked(m, basis, v))
}

/// The unique cocircuit inside `(E - B) ∪ {v}` for `v ∈ B`.
pub fn fundamental_cocircuit(m: &Matroid, basis: ElementSet, v: usize) -> Result<ElementSet> {
    require_basis(m, basis)?;
    if !basis.contains(v) {
        return Err(Error::ElementNotInBasis { element: v });
    }
    Ok(cocircuit_unchecked(m, basis, v))
}

fn circuit_unchecked(m: &Matroid, basis: ElementSet, v: usize) -> ElementSet {
    let grown = basis.with(v);
    let mut c = ElementSet::singleton(v);
    for w in basis.iter() {
        if m.is_basis(grown.without(w)) {
            c.insert(w);
        }
    }
    c
}

fn cocircuit_unchecked(m: &Matroid, basis: ElementSet, v: usize) -> ElementSet {
    let shrunk = basis.without(v);
    let mut c = ElementSet::singleton(v);
    for w in (m.ground() - basis).iter() {
        if m.is_basis(shrunk.with(w)) {
            c.insert(w);
        }
    }
    c
}

/// Elements of `B` that are smallest in their fundamental cocircuit.
pub fn internally_active(m: &Matroid, basis: ElementSet) -> Result<ElementSet> {
    require_basis(m, basis)?;
    Ok(internally_active_unchecked(m, basis))
}

/// Elements outside `B` that are smallest in their fundamental circuit.
pub fn externally_active(m: &Matroid, basis: ElementSet) -> Result<ElementSet> {
    require_basis(m, basis)?;
    Ok(externally_active_unchecked(m, basis))
}

// v ∈ B is active iff no smaller w ∉ B gives a basis B - v + w.
fn internally_active_unchecked(m: &Matroid, basis: ElementSet) -> ElementSet {
    let outside = m.ground() - basis;
    let mut active = ElementSet::EMPTY;
    for v in basis.iter() {
        let shrunk = basis.without(v);
        let smaller = outside & ElementSet::full(v - 1);
        if !smaller.iter().any(|w| m.is_basis(shrunk.with(w))) {
            active.insert(v);
        }
    }
    active
}

// v ∉ B is active iff no smaller w ∈ B gives a basis B + v - w.
fn externally_active_unchecked(m: &Matroid, basis: ElementSet) -> ElementSet {
    let mut active = ElementSet::EMPTY;
    for v in (m.ground() - basis).iter() {
        let grown = basis.with(v);
        let smaller = basis & ElementSet::full(v - 1);
        if !smaller.iter().any(|w| m.is_basis(grown.without(w))) {
            active.insert(v);
        }
    }
    active
}

pub fn internal_activity(m: &Matroid, basis: ElementSet) -> Result<usize> {
    internally_active(m, basis).map(ElementSet::len)
}

pub fn external_activity(m: &Matroid, basis: ElementSet) -> Result<usize> {
    externally_active(m, basis).map(ElementSet::len)
}

pub fn activity_pair(m: &Matroid, basis: ElementSet) -> Result<ActivityPair> {
    require_basis(m, basis)?;
    Ok(activity_pair_unchecked(m, basis))
}

pub(crate) fn activity_pair_unchecked(m: &Matroid, basis: ElementSet) -> ActivityPair {
    ActivityPair {
        internal: internally_active_unchecked(m, basis).len(),
        external: externally_active_unchecked(m, basis).len(),
    }
}

/// Every basis with its activity pair, in colex basis order.
pub fn all_activities(m: &Matroid) -> Vec<(ElementSet, ActivityPair)> {
    m.bases().iter().map(|&b| (b, activity_pair_unchecked(m, b))).collect()
}

/// The unique basis `{a_1 < … < a_d}` with `a_i ≤ b_i` for every basis
/// `{b_1 < … < b_d}`.
///
/// Computed as the componentwise minimum over the whole family; the result
/// being a basis is a matroid axiom consequence, so failure panics.
pub fn gale_smallest_basis(m: &Matroid) -> ElementSet {
    let d = m.rank();
    let mut least = [usize::MAX; crate::MAX_ELEMENTS];
    for b in m.bases() {
        for (slot, e) in least.iter_mut().zip(b.iter()) {
            *slot = (*slot).min(e);
        }
    }
    let mut out = ElementSet::EMPTY;
    for &e in &least[..d] {
        out.insert(e);
    }
    assert!(
        out.len() == d && m.is_basis(out),
        "internal consistency: componentwise minimum {out} is not a basis"
    );
    out
}
