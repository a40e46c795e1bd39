//! Isomorphism, automorphism counting and minor containment by backtracking.
//!
//! There is no canonical form. Candidate maps are pruned by cheap invariants
//! (sizes, basis counts, per-element basis degrees, Tutte polynomial) and
//! then built one element at a time; after each assignment the multiset of
//! basis traces on the mapped prefix must agree on both sides.

use alloc::vec::Vec;
use core::fmt;

use crate::tutte::tutte_by_activities;
use crate::{ElementSet, Matroid, MAX_ELEMENTS};

/// A bijection from the ground set of one matroid onto another that carries
/// bases to bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    /// `(source, target)` pairs, sorted by source.
    mapping: Vec<(usize, usize)>,
}

impl IsoCertificate {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.mapping
    }

    pub fn image(&self, e: usize) -> Option<usize> {
        self.mapping.iter().find(|&&(s, _)| s == e).map(|&(_, t)| t)
    }

    pub fn inverse(&self) -> IsoCertificate {
        let mut mapping: Vec<_> = self.mapping.iter().map(|&(s, t)| (t, s)).collect();
        mapping.sort_unstable();
        IsoCertificate { mapping }
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &IsoCertificate) -> Option<IsoCertificate> {
        let mapping = self
            .mapping
            .iter()
            .map(|&(s, t)| other.image(t).map(|u| (s, u)))
            .collect::<Option<Vec<_>>>()?;
        Some(IsoCertificate { mapping })
    }

    /// Renames the elements of `m` through the certificate.
    pub fn apply(&self, m: &Matroid) -> Option<Matroid> {
        let mut map = [0usize; MAX_ELEMENTS + 1];
        for e in m.elements() {
            map[e] = self.image(e)?;
        }
        Some(m.map_elements(&map))
    }
}

impl fmt::Display for IsoCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, t)) in self.mapping.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}->{t}")?;
        }
        Ok(())
    }
}

fn degrees(m: &Matroid) -> [usize; MAX_ELEMENTS + 1] {
    let mut deg = [0usize; MAX_ELEMENTS + 1];
    for b in m.bases() {
        for e in b.iter() {
            deg[e] += 1;
        }
    }
    deg
}

fn sorted_degrees(m: &Matroid) -> Vec<usize> {
    let deg = degrees(m);
    let mut v: Vec<_> = m.elements().map(|e| deg[e]).collect();
    v.sort_unstable();
    v
}

fn cheap_invariants_match(a: &Matroid, b: &Matroid) -> bool {
    a.n() == b.n()
        && a.rank() == b.rank()
        && a.num_bases() == b.num_bases()
        && sorted_degrees(a) == sorted_degrees(b)
}

/// Backtracking search for basis-preserving bijections `a → b`.
struct Search<'a> {
    a: &'a Matroid,
    b: &'a Matroid,
    sources: Vec<usize>,
    deg_a: [usize; MAX_ELEMENTS + 1],
    deg_b: [usize; MAX_ELEMENTS + 1],
    map: [usize; MAX_ELEMENTS + 1],
    scratch_a: Vec<u16>,
    scratch_b: Vec<u16>,
}

impl<'a> Search<'a> {
    fn new(a: &'a Matroid, b: &'a Matroid) -> Self {
        Search {
            a,
            b,
            sources: a.elements().collect(),
            deg_a: degrees(a),
            deg_b: degrees(b),
            map: [0; MAX_ELEMENTS + 1],
            scratch_a: Vec::with_capacity(a.num_bases()),
            scratch_b: Vec::with_capacity(b.num_bases()),
        }
    }

    /// Whether the first `depth` assignments keep the traces consistent.
    fn consistent(&mut self, depth: usize) -> bool {
        let mut prefix = ElementSet::EMPTY;
        let mut image = ElementSet::EMPTY;
        for &e in &self.sources[..depth] {
            prefix.insert(e);
            image.insert(self.map[e]);
        }
        self.scratch_a.clear();
        for &basis in self.a.bases() {
            self.scratch_a.push((basis & prefix).map(&self.map).bits());
        }
        self.scratch_b.clear();
        for &basis in self.b.bases() {
            self.scratch_b.push((basis & image).bits());
        }
        self.scratch_a.sort_unstable();
        self.scratch_b.sort_unstable();
        self.scratch_a == self.scratch_b
    }

    /// Visits every complete map; `visit` returns `false` to stop early.
    fn run<F: FnMut(&[usize; MAX_ELEMENTS + 1]) -> bool>(&mut self, visit: &mut F) {
        self.extend(0, ElementSet::EMPTY, visit);
    }

    fn extend<F: FnMut(&[usize; MAX_ELEMENTS + 1]) -> bool>(
        &mut self,
        depth: usize,
        used: ElementSet,
        visit: &mut F,
    ) -> bool {
        if depth == self.sources.len() {
            return visit(&self.map);
        }
        let e = self.sources[depth];
        for f in (self.b.ground() - used).iter() {
            if self.deg_b[f] != self.deg_a[e] {
                continue;
            }
            self.map[e] = f;
            if self.consistent(depth + 1) && !self.extend(depth + 1, used.with(f), visit) {
                return false;
            }
        }
        true
    }
}

fn certificate_from(m: &Matroid, map: &[usize; MAX_ELEMENTS + 1]) -> IsoCertificate {
    IsoCertificate { mapping: m.elements().map(|e| (e, map[e])).collect() }
}

/// A relabeling of `a` onto `b`, if one exists.
pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> Option<IsoCertificate> {
    if !cheap_invariants_match(a, b) || tutte_by_activities(a) != tutte_by_activities(b) {
        return None;
    }
    let mut found = None;
    Search::new(a, b).run(&mut |map| {
        found = Some(certificate_from(a, map));
        false
    });
    found
}

/// Number of permutations of the ground set that fix the basis family.
pub fn automorphism_count(m: &Matroid) -> u64 {
    let mut count = 0u64;
    Search::new(m, m).run(&mut |_| {
        count += 1;
        true
    });
    count
}

/// How `n` sits inside `m`: `m / contracted \ deleted ≅ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub contracted: ElementSet,
    pub deleted: ElementSet,
    pub certificate: IsoCertificate,
}

/// Searches for `m / C \ D ≅ n` with `C` independent and `D` coindependent.
///
/// Every minor has such a representation, and then `|C| = r(m) - r(n)` and
/// `|D| = (|E(m)| - r(m)) - (|E(n)| - r(n))`, so only those sizes are tried.
pub fn find_minor(m: &Matroid, n: &Matroid) -> Option<MinorWitness> {
    let (r, rn) = (m.rank(), n.rank());
    let (co, con) = (m.n() - r, n.n().checked_sub(rn)?);
    if n.n() > m.n() || rn > r || con > co {
        return None;
    }
    let (c_size, d_size) = (r - rn, co - con);
    let rank = m.rank_table();
    let ground = m.ground();
    let rank_of = |s: ElementSet| rank[s.bits() as usize] as usize;
    let target_tutte = tutte_by_activities(n);

    for c in ground.subsets().filter(|s| s.len() == c_size && rank_of(*s) == c_size) {
        let rest = ground - c;
        let contracted = if c.is_empty() { m.clone() } else { m.contract(c).ok()? };
        for d in rest.subsets().filter(|s| s.len() == d_size && rank_of(ground - *s) == r) {
            let minor = if d.is_empty() { contracted.clone() } else { contracted.delete(d).ok()? };
            if !cheap_invariants_match(&minor, n) || tutte_by_activities(&minor) != target_tutte {
                continue;
            }
            if let Some(certificate) = is_isomorphic(&minor, n) {
                return Some(MinorWitness { contracted: c, deleted: d, certificate });
            }
        }
    }
    None
}

pub fn has_minor(m: &Matroid, n: &Matroid) -> bool {
    find_minor(m, n).is_some()
}
