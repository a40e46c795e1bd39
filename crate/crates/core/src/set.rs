//! Dense subsets of `{1, …, 16}` packed into a single word.

use core::fmt;
use core::ops::{BitAnd, BitOr, BitXor, Sub};

use crate::{Error, Result, MAX_ELEMENTS};

/// A subset of `{1, …, 16}`. Element `e` is stored in bit `e - 1`.
///
/// The derived `Ord` compares the packed words, which for sets of equal size
/// is the reverse-lexicographic (colex) order: `A < B` iff `max(A △ B) ∈ B`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(u16);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u16) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u16 {
        self.0
    }

    /// `{1, …, n}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 16 {
            ElementSet(u16::MAX)
        } else {
            ElementSet((1u16 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(element: usize) -> Self {
        ElementSet(1 << (element - 1))
    }

    /// Builds a set from 1-based labels, rejecting labels outside `1..=n`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Result<Self> {
        let mut set = ElementSet::EMPTY;
        for e in elements {
            if e == 0 || e > n || e > MAX_ELEMENTS {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            set.insert(e);
        }
        Ok(set)
    }

    #[inline]
    pub const fn contains(self, element: usize) -> bool {
        element >= 1 && element <= MAX_ELEMENTS && self.0 & (1 << (element - 1)) != 0
    }

    #[inline]
    pub fn insert(&mut self, element: usize) {
        self.0 |= 1 << (element - 1);
    }

    #[inline]
    pub fn remove(&mut self, element: usize) {
        self.0 &= !(1 << (element - 1));
    }

    #[inline]
    pub const fn with(self, element: usize) -> Self {
        ElementSet(self.0 | (1 << (element - 1)))
    }

    #[inline]
    pub const fn without(self, element: usize) -> Self {
        ElementSet(self.0 & !(1 << (element - 1)))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub const fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Largest element, if any.
    #[inline]
    pub const fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(16 - self.0.leading_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    #[inline]
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets { universe: self.0, next: Some(0) }
    }

    /// Image under an element map given as `map[e]` for each element `e`
    /// (index 0 unused).
    pub fn map(self, map: &[usize]) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for e in self.iter() {
            out.insert(map[e]);
        }
        out
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitXor for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitxor(self, rhs: Self) -> Self {
        ElementSet(self.0 ^ rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u16);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Submask enumeration in increasing numeric order.
#[derive(Clone, Debug)]
pub struct Subsets {
    universe: u16,
    next: Option<u16>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            // next submask in increasing order
            Some((cur.wrapping_sub(self.universe)) & self.universe)
        };
        Some(ElementSet(cur))
    }
}

/// All `r`-subsets of `{1, …, n}` in colex order.
pub fn k_subsets(n: usize, r: usize) -> impl Iterator<Item = ElementSet> {
    let limit: u32 = 1 << n;
    let mut cur: Option<u32> = if r <= n { Some((1u32 << r) - 1) } else { None };
    core::iter::from_fn(move || {
        let c = cur?;
        if c >= limit {
            return None;
        }
        cur = if c == 0 {
            None
        } else {
            // Gosper's hack
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            Some((((ripple ^ c) >> 2) / low) | ripple)
        };
        Some(ElementSet(c as u16))
    })
}

/// `C(n, r)` without overflow for the sizes used here.
pub fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn elements_are_one_based_and_sorted() {
        let s = ElementSet::from_elements(5, [4, 1, 3]).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), [1, 3, 4]);
        assert_eq!(s.min(), Some(1));
        assert_eq!(s.max(), Some(4));
        assert_eq!(alloc::format!("{s}"), "{1,3,4}");
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            ElementSet::from_elements(3, [4]),
            Err(Error::ElementOutOfRange { element: 4, n: 3 })
        );
        assert!(ElementSet::from_elements(3, [0]).is_err());
    }

    #[test]
    fn full_sixteen() {
        assert_eq!(ElementSet::full(16).len(), 16);
        assert!(ElementSet::full(16).contains(16));
    }

    #[test]
    fn subsets_enumerates_every_submask_once() {
        let s = ElementSet::from_elements(6, [2, 3, 6]).unwrap();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn k_subsets_counts_and_order() {
        for n in 0..=8 {
            for r in 0..=n {
                let v: Vec<_> = k_subsets(n, r).collect();
                assert_eq!(v.len() as u64, binomial(n, r));
                assert!(v.windows(2).all(|w| w[0] < w[1]));
                assert!(v.iter().all(|s| s.len() == r && s.is_subset(ElementSet::full(n))));
            }
        }
        assert_eq!(k_subsets(16, 8).count(), 12870);
    }
}
