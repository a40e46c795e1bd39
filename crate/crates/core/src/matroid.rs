//! Matroids given by an explicit, validated basis family.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::set::{ElementSet, Elements};
use crate::{Error, Result, MAX_ELEMENTS};

/// A matroid on a nonempty ground set `E ⊆ {1, …, 16}`.
///
/// Matroids built with [`Matroid::from_bases`] live on `{1, …, n}`. Deletion
/// and contraction keep the surviving labels, so minors generally live on a
/// proper subset; [`Matroid::compact`] relabels order-preservingly back to
/// `{1, …, |E|}`. Element order, and hence every activity, always follows
/// the labels.
#[derive(Clone)]
pub struct Matroid {
    ground: ElementSet,
    rank: usize,
    /// Sorted ascending by packed bits (colex), deduplicated.
    bases: Vec<ElementSet>,
    /// Membership bitset indexed by the packed bits of a set.
    table: Vec<u64>,
}

impl Matroid {
    /// Validates `bases` as the basis family of a matroid on `{1, …, n}`.
    ///
    /// Duplicated bases are merged. The exchange axiom is checked exhaustively.
    pub fn from_bases<I>(n: usize, bases: I) -> Result<Matroid>
    where
        I: IntoIterator<Item = ElementSet>,
    {
        if n > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge { n });
        }
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let ground = ElementSet::full(n);
        let mut list: Vec<ElementSet> = bases.into_iter().collect();
        let first = *list.first().ok_or(Error::EmptyBasisList)?;
        for &b in &list {
            if !b.is_subset(ground) {
                let element = (b - ground).min().unwrap_or(0);
                return Err(Error::ElementOutOfRange { element, n });
            }
            if b.len() != first.len() {
                return Err(Error::UnequalCardinalities { first, other: b });
            }
        }
        list.sort_unstable();
        list.dedup();
        let m = Matroid::from_sorted(ground, list);
        check_exchange(&m.bases, |s| m.is_basis(s))?;
        Ok(m)
    }

    /// Builds from a family already known to satisfy the axioms.
    pub(crate) fn from_family_unchecked(ground: ElementSet, mut bases: Vec<ElementSet>) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        Matroid::from_sorted(ground, bases)
    }

    fn from_sorted(ground: ElementSet, bases: Vec<ElementSet>) -> Matroid {
        debug_assert!(!bases.is_empty());
        let hi = ground.max().unwrap_or(0);
        let mut table = vec![0u64; (1usize << hi).div_ceil(64)];
        for b in &bases {
            let i = b.bits() as usize;
            table[i >> 6] |= 1 << (i & 63);
        }
        Matroid { ground, rank: bases[0].len(), bases, table }
    }

    #[inline]
    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    /// Size of the ground set.
    #[inline]
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bases in colex order.
    #[inline]
    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    #[inline]
    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    /// Elements in increasing order.
    #[inline]
    pub fn elements(&self) -> Elements {
        self.ground.iter()
    }

    #[inline]
    pub fn is_basis(&self, set: ElementSet) -> bool {
        let i = set.bits() as usize;
        match self.table.get(i >> 6) {
            Some(word) => word >> (i & 63) & 1 == 1,
            None => false,
        }
    }

    /// Whether the ground set is exactly `{1, …, n}`.
    pub fn is_contiguous(&self) -> bool {
        self.ground == ElementSet::full(self.n())
    }

    fn check_subset(&self, set: ElementSet) -> Result<()> {
        if set.is_subset(self.ground) {
            Ok(())
        } else {
            let element = (set - self.ground).min().unwrap_or(0);
            Err(Error::ElementOutOfRange { element, n: self.ground.max().unwrap_or(0) })
        }
    }

    /// `max |B ∩ S|` over all bases.
    pub fn rank_of(&self, set: ElementSet) -> usize {
        self.bases.iter().map(|&b| (b & set).len()).max().unwrap_or(0)
    }

    pub fn is_independent(&self, set: ElementSet) -> bool {
        self.rank_of(set) == set.len()
    }

    /// `|S| - r(S)`.
    pub fn nullity(&self, set: ElementSet) -> usize {
        set.len() - self.rank_of(set)
    }

    /// Elements whose addition does not raise the rank of `set`.
    pub fn closure(&self, set: ElementSet) -> ElementSet {
        let r = self.rank_of(set);
        let mut out = set;
        for e in (self.ground - set).iter() {
            if self.rank_of(set.with(e)) == r {
                out.insert(e);
            }
        }
        out
    }

    /// Rank of every subset of the ground set, indexed by packed bits.
    /// Entries for sets not contained in the ground set are zero.
    pub fn rank_table(&self) -> Vec<u8> {
        let hi = self.ground.max().unwrap_or(0);
        let size = 1usize << hi;
        let mut independent = vec![false; size];
        for &b in &self.bases {
            for s in b.subsets() {
                independent[s.bits() as usize] = true;
            }
        }
        let mut rank = vec![0u8; size];
        for s in self.ground.subsets() {
            let i = s.bits() as usize;
            rank[i] = if independent[i] {
                s.len() as u8
            } else {
                s.iter().map(|e| rank[s.without(e).bits() as usize]).max().unwrap_or(0)
            };
        }
        rank
    }

    /// Flats `F` with `r(F) = rank - corank`, in colex order.
    pub fn flats_of_corank(&self, corank: usize) -> Result<Vec<ElementSet>> {
        if corank > self.rank {
            return Err(Error::InvalidCorank { corank, rank: self.rank });
        }
        let target = (self.rank - corank) as u8;
        let rank = self.rank_table();
        let flats = self
            .ground
            .subsets()
            .filter(|s| {
                let r = rank[s.bits() as usize];
                r == target
                    && (self.ground - *s).iter().all(|e| rank[s.with(e).bits() as usize] > r)
            })
            .collect();
        Ok(flats)
    }

    /// Minimal dependent sets, in colex order.
    pub fn circuits(&self) -> Vec<ElementSet> {
        let rank = self.rank_table();
        self.ground
            .subsets()
            .filter(|s| {
                let len = s.len();
                len > 0
                    && rank[s.bits() as usize] as usize == len - 1
                    && s.iter().all(|e| rank[s.without(e).bits() as usize] as usize == len - 1)
            })
            .collect()
    }

    /// Circuits of the dual.
    pub fn cocircuits(&self) -> Vec<ElementSet> {
        self.dual().circuits()
    }

    /// Smallest circuit size; `None` when there is no circuit (free matroid).
    pub fn girth(&self) -> Option<usize> {
        self.circuits().iter().map(|c| c.len()).min()
    }

    /// Elements lying in no basis.
    pub fn loops(&self) -> ElementSet {
        let covered = self.bases.iter().fold(ElementSet::EMPTY, |acc, &b| acc | b);
        self.ground - covered
    }

    /// Elements lying in every basis.
    pub fn coloops(&self) -> ElementSet {
        self.bases.iter().fold(self.ground, |acc, &b| acc & b)
    }

    /// `M \ S`: the restriction to `E - S`, with its natural rank.
    pub fn delete(&self, set: ElementSet) -> Result<Matroid> {
        self.check_subset(set)?;
        let ground = self.ground - set;
        if ground.is_empty() {
            return Err(Error::GroundSetExhausted);
        }
        let r = self.bases.iter().map(|&b| (b - set).len()).max().unwrap_or(0);
        let bases = self.bases.iter().map(|&b| b - set).filter(|b| b.len() == r).collect();
        Ok(Matroid::from_family_unchecked(ground, bases))
    }

    /// `M / S`.
    pub fn contract(&self, set: ElementSet) -> Result<Matroid> {
        self.check_subset(set)?;
        let ground = self.ground - set;
        if ground.is_empty() {
            return Err(Error::GroundSetExhausted);
        }
        let r = self.rank_of(set);
        let bases = self
            .bases
            .iter()
            .filter(|&&b| (b & set).len() == r)
            .map(|&b| b - set)
            .collect();
        Ok(Matroid::from_family_unchecked(ground, bases))
    }

    /// `M | S`, the same as deleting the complement.
    pub fn restrict(&self, set: ElementSet) -> Result<Matroid> {
        self.check_subset(set)?;
        self.delete(self.ground - set)
    }

    pub fn delete_element(&self, e: usize) -> Result<Matroid> {
        self.delete(ElementSet::from_elements(MAX_ELEMENTS, [e])?)
    }

    pub fn contract_element(&self, e: usize) -> Result<Matroid> {
        self.contract(ElementSet::from_elements(MAX_ELEMENTS, [e])?)
    }

    pub fn dual(&self) -> Matroid {
        let bases = self.bases.iter().map(|&b| self.ground - b).collect();
        Matroid::from_family_unchecked(self.ground, bases)
    }

    /// The direct sum on `{1, …, n1 + n2}`; the left operand takes the smaller labels.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n1 = self.n();
        let n = n1 + other.n();
        if n > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge { n });
        }
        let left = self.compact();
        let right = other.compact();
        let mut bases = Vec::with_capacity(left.num_bases() * right.num_bases());
        for &b1 in left.bases() {
            for &b2 in right.bases() {
                bases.push(ElementSet::from_bits(b1.bits() | (b2.bits() << n1)));
            }
        }
        Ok(Matroid::from_family_unchecked(ElementSet::full(n), bases))
    }

    /// `τ(M)`: bases are the independent sets of size `rank - 1`.
    pub fn truncate(&self) -> Result<Matroid> {
        if self.rank == 0 {
            return Err(Error::RankZeroTruncation);
        }
        let mut bases = Vec::with_capacity(self.bases.len() * self.rank);
        for &b in &self.bases {
            bases.extend(b.iter().map(|x| b.without(x)));
        }
        Ok(Matroid::from_family_unchecked(self.ground, bases))
    }

    /// `τ^m(M)`; `τ^0(M) = M`.
    pub fn truncate_m(&self, depth: usize) -> Result<Matroid> {
        if depth > self.rank {
            return Err(Error::TruncationTooDeep { depth, rank: self.rank });
        }
        let mut m = self.clone();
        for _ in 0..depth {
            m = m.truncate()?;
        }
        Ok(m)
    }

    /// Applies a permutation of the ground set. `perm[i]` is the image of the
    /// `i`-th smallest element; on `{1, …, n}` that is the image of `i + 1`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Matroid> {
        if perm.len() != self.n() {
            return Err(Error::NotAPermutation);
        }
        let mut image = ElementSet::EMPTY;
        let mut map = [0usize; MAX_ELEMENTS + 1];
        for (src, &dst) in self.ground.iter().zip(perm) {
            if !self.ground.contains(dst) || image.contains(dst) {
                return Err(Error::NotAPermutation);
            }
            image.insert(dst);
            map[src] = dst;
        }
        Ok(self.map_elements(&map))
    }

    /// Renames elements through `map[e]` (index 0 unused); `map` must be
    /// injective on the ground set.
    pub(crate) fn map_elements(&self, map: &[usize]) -> Matroid {
        let ground = self.ground.map(map);
        let bases = self.bases.iter().map(|b| b.map(map)).collect();
        Matroid::from_family_unchecked(ground, bases)
    }

    /// Order-preserving relabel onto `{1, …, n}`.
    pub fn compact(&self) -> Matroid {
        if self.is_contiguous() {
            return self.clone();
        }
        let mut map = [0usize; MAX_ELEMENTS + 1];
        for (i, e) in self.ground.iter().enumerate() {
            map[e] = i + 1;
        }
        self.map_elements(&map)
    }

    /// Re-runs the exhaustive exchange-axiom check on the stored family.
    pub fn validate(&self) -> Result<()> {
        check_exchange(&self.bases, |s| self.is_basis(s))
    }
}

/// Exhaustive basis-exchange check: for all bases `B1 ≠ B2` and
/// `x ∈ B1 - B2` some `y ∈ B2 - B1` makes `B1 - x + y` a basis.
///
/// `family` must be sorted and deduplicated with equal cardinalities.
pub fn check_exchange<F>(family: &[ElementSet], is_basis: F) -> Result<()>
where
    F: Fn(ElementSet) -> bool,
{
    let universe = family.iter().fold(ElementSet::EMPTY, |acc, &b| acc | b);
    // swaps[i * 16 + x - 1] = { y : B_i - x + y is a basis }
    let mut swaps = vec![ElementSet::EMPTY; family.len() * MAX_ELEMENTS];
    for (i, &b) in family.iter().enumerate() {
        for x in b.iter() {
            let base = b.without(x);
            let mut ys = ElementSet::EMPTY;
            for y in (universe - b).iter() {
                if is_basis(base.with(y)) {
                    ys.insert(y);
                }
            }
            swaps[i * MAX_ELEMENTS + x - 1] = ys;
        }
    }
    for (i, &b1) in family.iter().enumerate() {
        for &b2 in family {
            if b1 == b2 {
                continue;
            }
            let gain = b2 - b1;
            for x in (b1 - b2).iter() {
                if (swaps[i * MAX_ELEMENTS + x - 1] & gain).is_empty() {
                    return Err(Error::ExchangeAxiomViolated { first: b1, second: b2, removed: x });
                }
            }
        }
    }
    Ok(())
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl Hash for Matroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ground.hash(state);
        self.bases.hash(state);
    }
}

impl PartialOrd for Matroid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matroid {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ground, &self.bases).cmp(&(other.ground, &other.bases))
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("ground", &self.ground)
            .field("rank", &self.rank)
            .field("bases", &self.bases)
            .finish()
    }
}
