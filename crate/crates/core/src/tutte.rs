//! Tutte polynomials, computed two independent ways.
//!
//! [`tutte_by_activities`] sums `x^inte(B) y^exte(B)` over the bases;
//! [`tutte_by_deletion_contraction`] runs the recursion
//! `T(M) = T(M \ v) + T(M / v)` on a non-loop non-coloop pivot down to
//! matroids made of loops and coloops only, whose polynomial is a monomial.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::activity::activity_pair_unchecked;
use crate::{ElementSet, Matroid};

/// A polynomial in `x, y` with positive integer coefficients, stored sparsely.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(usize, usize), u64>,
}

impl TuttePolynomial {
    pub fn zero() -> Self {
        TuttePolynomial::default()
    }

    pub fn one() -> Self {
        TuttePolynomial::monomial(0, 0)
    }

    /// `x^i y^j`.
    pub fn monomial(i: usize, j: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((i, j), 1);
        TuttePolynomial { coeffs }
    }

    /// Sums repeated exponents; zero coefficients are dropped.
    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), u64)>>(terms: I) -> Self {
        let mut p = TuttePolynomial::zero();
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    fn add_term(&mut self, exp: (usize, usize), c: u64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert(0);
        *slot = slot.checked_add(c).expect("Tutte coefficient overflow");
    }

    /// `t_{i,j}`, zero when absent.
    pub fn coefficient(&self, i: usize, j: usize) -> u64 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero terms in lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((usize, usize), u64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `T(1, 1)`, the number of bases.
    pub fn total(&self) -> u64 {
        self.coeffs.values().try_fold(0u64, |acc, &c| acc.checked_add(c)).expect("Tutte total overflow")
    }

    pub fn max_x_degree(&self) -> usize {
        self.coeffs.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn max_y_degree(&self) -> usize {
        self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn add(&self, other: &TuttePolynomial) -> TuttePolynomial {
        let mut out = self.clone();
        for (exp, c) in other.terms() {
            out.add_term(exp, c);
        }
        out
    }

    pub fn mul(&self, other: &TuttePolynomial) -> TuttePolynomial {
        let mut out = TuttePolynomial::zero();
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in other.terms() {
                let c = c1.checked_mul(c2).expect("Tutte coefficient overflow");
                out.add_term((i1 + i2, j1 + j2), c);
            }
        }
        out
    }

    /// Multiplies by `x^a y^b`.
    pub fn shift(&self, a: usize, b: usize) -> TuttePolynomial {
        TuttePolynomial { coeffs: self.coeffs.iter().map(|(&(i, j), &c)| ((i + a, j + b), c)).collect() }
    }

    /// `T(y, x)`, the polynomial of the dual matroid.
    pub fn swap_variables(&self) -> TuttePolynomial {
        TuttePolynomial { coeffs: self.coeffs.iter().map(|(&(i, j), &c)| ((j, i), c)).collect() }
    }

    /// True iff no term `x^i y^j` has `i ≥ k` and `j ≥ l`.
    pub fn vanishes_at_or_above(&self, k: usize, l: usize) -> bool {
        !self.coeffs.keys().any(|&(i, j)| i >= k && j >= l)
    }

    /// True iff no term `x^i y^j` other than `x^k y^l` has `i ≥ k` and `j ≥ l`.
    pub fn vanishes_strictly_above(&self, k: usize, l: usize) -> bool {
        !self.coeffs.keys().any(|&(i, j)| i >= k && j >= l && (i, j) != (k, l))
    }

    /// Exponent pairs of the support that no other support pair dominates.
    pub fn support_maxima(&self) -> Vec<(usize, usize)> {
        let support: Vec<_> = self.coeffs.keys().copied().collect();
        support
            .iter()
            .copied()
            .filter(|&(i, j)| !support.iter().any(|&(a, b)| (a, b) != (i, j) && a >= i && b >= j))
            .collect()
    }
}

impl fmt::Debug for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Highest `x` degree first, e.g. `x^2 + 2x + y^2 + 2y`.
impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, ((i, j), c)) in self.terms().rev().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if c != 1 || (i == 0 && j == 0) {
                write!(f, "{c}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
            match j {
                0 => {}
                1 => f.write_str("y")?,
                _ => write!(f, "y^{j}")?,
            }
        }
        Ok(())
    }
}

/// `Σ_B x^inte(B) y^exte(B)` over all bases.
pub fn tutte_by_activities(m: &Matroid) -> TuttePolynomial {
    let mut p = TuttePolynomial::zero();
    for &b in m.bases() {
        let a = activity_pair_unchecked(m, b);
        p.add_term((a.internal, a.external), 1);
    }
    p
}

/// Which non-loop non-coloop element the recursion splits on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Pivot {
    #[default]
    Smallest,
    Largest,
}

impl Pivot {
    fn choose(self, candidates: ElementSet) -> Option<usize> {
        match self {
            Pivot::Smallest => candidates.min(),
            Pivot::Largest => candidates.max(),
        }
    }
}

/// Cache for the deletion-contraction recursion, keyed by compacted matroid.
///
/// Implementations shared between threads must tolerate concurrent
/// `get`/`insert` through `&self`.
pub trait TutteMemo {
    fn get(&self, key: &Matroid) -> Option<TuttePolynomial>;
    fn insert(&self, key: Matroid, value: TuttePolynomial);
}

/// The memo that remembers nothing.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoMemo;

impl TutteMemo for NoMemo {
    fn get(&self, _: &Matroid) -> Option<TuttePolynomial> {
        None
    }

    fn insert(&self, _: Matroid, _: TuttePolynomial) {}
}

/// Deletion-contraction on the smallest non-loop non-coloop element.
pub fn tutte_by_deletion_contraction(m: &Matroid) -> TuttePolynomial {
    deletion_contraction(m, Pivot::Smallest, &NoMemo, false)
}

pub fn tutte_by_deletion_contraction_with_pivot(m: &Matroid, pivot: Pivot) -> TuttePolynomial {
    deletion_contraction(m, pivot, &NoMemo, false)
}

pub fn tutte_by_deletion_contraction_memo<C: TutteMemo + ?Sized>(m: &Matroid, memo: &C) -> TuttePolynomial {
    deletion_contraction(m, Pivot::Smallest, memo, true)
}

fn deletion_contraction<C: TutteMemo + ?Sized>(
    m: &Matroid,
    pivot: Pivot,
    memo: &C,
    use_memo: bool,
) -> TuttePolynomial {
    let loops = m.loops();
    let coloops = m.coloops();
    let Some(v) = pivot.choose(m.ground() - loops - coloops) else {
        return TuttePolynomial::monomial(coloops.len(), loops.len());
    };
    let key = if use_memo {
        let key = m.compact();
        if let Some(hit) = memo.get(&key) {
            return hit;
        }
        Some(key)
    } else {
        None
    };
    // v is neither a loop nor a coloop, so both minors keep a nonempty ground set.
    let single = ElementSet::singleton(v);
    let deleted = m.delete(single).expect("pivot lies in the ground set");
    let contracted = m.contract(single).expect("pivot lies in the ground set");
    let result = deletion_contraction(&deleted, pivot, memo, use_memo)
        .add(&deletion_contraction(&contracted, pivot, memo, use_memo));
    if let Some(key) = key {
        memo.insert(key, result.clone());
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{schubert, uniform, SchubertSpec};

    fn poly(terms: &[((usize, usize), u64)]) -> TuttePolynomial {
        TuttePolynomial::from_terms(terms.iter().copied())
    }

    fn loops_and_coloops(i: usize, j: usize) -> Matroid {
        crate::uniformity::coloops_and_loops(i, j).unwrap()
    }

    #[test]
    fn loop_coloop_matroids_are_monomials() {
        for (i, j) in [(0, 1), (1, 0), (2, 3), (4, 1)] {
            let m = loops_and_coloops(i, j);
            assert_eq!(tutte_by_activities(&m), TuttePolynomial::monomial(i, j));
            assert_eq!(tutte_by_deletion_contraction(&m), TuttePolynomial::monomial(i, j));
        }
    }

    #[test]
    fn four_parallel_pairs_is_binomial() {
        let u12 = uniform(1, 2).unwrap();
        let two = u12.direct_sum(&u12).unwrap();
        let four = two.direct_sum(&two).unwrap();
        let expected = poly(&[((4, 0), 1), ((3, 1), 4), ((2, 2), 6), ((1, 3), 4), ((0, 4), 1)]);
        assert_eq!(tutte_by_activities(&four), expected);
        assert_eq!(tutte_by_deletion_contraction(&four), expected);
        assert_eq!(expected.coefficient(2, 2), 6);
    }

    #[test]
    fn u24_polynomial() {
        // x^2 + 2x + 2y + y^2, from the six bases by hand:
        // {1,2}:(2,0) {1,3}:(1,0) {2,3}:(0,1) {1,4}:(1,0) {2,4}:(0,1) {3,4}:(0,2)
        let expected = poly(&[((2, 0), 1), ((1, 0), 2), ((0, 1), 2), ((0, 2), 1)]);
        let u24 = uniform(2, 4).unwrap();
        assert_eq!(tutte_by_activities(&u24), expected);
        assert_eq!(tutte_by_deletion_contraction(&u24), expected);
        assert_eq!(expected.coefficient(1, 0), 2);
        assert_eq!(expected.coefficient(1, 1), 0);
        assert_eq!(alloc::format!("{expected}"), "x^2 + 2x + y^2 + 2y");
    }

    #[test]
    fn u12_recursion() {
        let p = tutte_by_deletion_contraction(&uniform(1, 2).unwrap());
        assert_eq!(p, poly(&[((1, 0), 1), ((0, 1), 1)]));
    }

    #[test]
    fn sample_schubert_coefficients() {
        let m = schubert(&SchubertSpec::new(10, &[1, 2, 4, 6, 7]).unwrap());
        let p = tutte_by_deletion_contraction(&m);
        assert_eq!(p, tutte_by_activities(&m));
        assert_eq!(p.coefficient(3, 1), 1);
        assert_eq!(p.coefficient(2, 2), 1);
        assert!(p.vanishes_strictly_above(3, 1));
        assert!(p.vanishes_strictly_above(2, 2));
        assert_eq!(p.total(), m.num_bases() as u64);
    }

    #[test]
    fn region_predicates() {
        let u24 = poly(&[((2, 0), 1), ((1, 0), 2), ((0, 1), 2), ((0, 2), 1)]);
        assert!(u24.vanishes_at_or_above(1, 1));
        let x2y = TuttePolynomial::monomial(2, 1);
        assert!(!x2y.vanishes_at_or_above(2, 1));
        assert!(x2y.vanishes_strictly_above(2, 1));
        // one coordinate equal, the other larger
        assert!(!TuttePolynomial::monomial(1, 2).vanishes_strictly_above(1, 1));
        let binom = poly(&[((4, 0), 1), ((3, 1), 4), ((2, 2), 6), ((1, 3), 4), ((0, 4), 1)]);
        assert!(binom.vanishes_strictly_above(2, 2));
        assert!(!binom.vanishes_at_or_above(2, 2));
        // total on (0,0)
        assert!(!TuttePolynomial::one().vanishes_at_or_above(0, 0));
    }

    #[test]
    fn pivot_choice_does_not_matter() {
        let m = schubert(&SchubertSpec::new(8, &[1, 3, 4, 7]).unwrap());
        assert_eq!(
            tutte_by_deletion_contraction_with_pivot(&m, Pivot::Largest),
            tutte_by_deletion_contraction(&m)
        );
    }

    #[test]
    fn memo_is_transparent() {
        use core::cell::RefCell;
        struct Local(RefCell<BTreeMap<Matroid, TuttePolynomial>>);
        impl TutteMemo for Local {
            fn get(&self, key: &Matroid) -> Option<TuttePolynomial> {
                self.0.borrow().get(key).cloned()
            }
            fn insert(&self, key: Matroid, value: TuttePolynomial) {
                self.0.borrow_mut().insert(key, value);
            }
        }
        let memo = Local(RefCell::new(BTreeMap::new()));
        let m = uniform(3, 7).unwrap();
        assert_eq!(tutte_by_deletion_contraction_memo(&m, &memo), tutte_by_activities(&m));
        assert!(!memo.0.borrow().is_empty());
    }

    #[test]
    fn support_maxima_of_binomial() {
        let binom = poly(&[((4, 0), 1), ((3, 1), 4), ((1, 1), 4)]);
        assert_eq!(binom.support_maxima(), [(3, 1), (4, 0)]);
    }
}
