use std::sync::OnceLock;

use proptest::prelude::*;

use kluniform_core::activity::{activity_pair, all_activities, externally_active, internally_active};
use kluniform_core::census::enumerate_labeled;
use kluniform_core::constructors::{lattice_path_activity, schubert, uniform};
use kluniform_core::iso::{find_minor, has_minor, is_isomorphic};
use kluniform_core::tutte::{tutte_by_activities, tutte_by_deletion_contraction_with_pivot, Pivot};
use kluniform_core::uniformity::{is_excluded_minor_tutte, is_kl_uniform_flats, is_kl_uniform_tutte};
use kluniform_core::{ActivityPair, ElementSet, KLPair, Matroid, SchubertSpec};

fn corpus() -> &'static [Matroid] {
    static CORPUS: OnceLock<Vec<Matroid>> = OnceLock::new();
    CORPUS.get_or_init(|| (1..=5).flat_map(|n| enumerate_labeled(n).unwrap()).collect())
}

fn matroid() -> impl Strategy<Value = Matroid> {
    (0..corpus().len()).prop_map(|i| corpus()[i].clone())
}

fn matroid_on(min_n: usize, max_n: usize) -> impl Strategy<Value = Matroid> {
    matroid().prop_filter("ground set size", move |m| (min_n..=max_n).contains(&m.n()))
}

fn subset_of(m: &Matroid, bits: u16) -> ElementSet {
    ElementSet::from_bits(bits) & m.ground()
}

fn schubert_spec(max_n: usize) -> impl Strategy<Value = SchubertSpec> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::bits::u16::between(0, n).prop_map(move |bits| {
            let defining: Vec<usize> = (1..=n).filter(|e| bits >> (e - 1) & 1 == 1).collect();
            SchubertSpec::new(n, &defining).unwrap()
        })
    })
}

fn with_permutation() -> impl Strategy<Value = (Matroid, Vec<usize>)> {
    matroid().prop_flat_map(|m| {
        let identity: Vec<usize> = (1..=m.n()).collect();
        (Just(m), Just(identity).prop_shuffle())
    })
}

/// Activities from the circuit and cocircuit lists.
fn activity_oracle(m: &Matroid, b: ElementSet) -> ActivityPair {
    let circuits = m.circuits();
    let cocircuits = m.cocircuits();
    let outside = m.ground() - b;
    let internal = b
        .iter()
        .filter(|&v| {
            let c = cocircuits.iter().find(|c| c.is_subset(outside.with(v))).unwrap();
            ElementSet::min(*c) == Some(v)
        })
        .count();
    let external = outside
        .iter()
        .filter(|&v| {
            let c = circuits.iter().find(|c| c.is_subset(b.with(v))).unwrap();
            ElementSet::min(*c) == Some(v)
        })
        .count();
    ActivityPair::new(internal, external)
}

/// Tries every disjoint `(C, D)` and every bijection.
fn minor_oracle(m: &Matroid, n: &Matroid) -> bool {
    let ground = m.ground();
    let removed_size = m.n() - n.n();
    for removed in ground.subsets().filter(|s| s.len() == removed_size) {
        for c in removed.subsets() {
            let d = removed - c;
            let Ok(minor) = minor_of(m, c, d) else { continue };
            if permutations(n.n()).any(|p| minor.compact().relabel(&p).unwrap() == *n) {
                return true;
            }
        }
    }
    false
}

fn minor_of(m: &Matroid, c: ElementSet, d: ElementSet) -> kluniform_core::Result<Matroid> {
    let mut minor = m.clone();
    if !c.is_empty() {
        minor = minor.contract(c)?;
    }
    if !d.is_empty() {
        minor = minor.delete(d)?;
    }
    Ok(minor)
}

fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut first = true;
    std::iter::from_fn(move || {
        if first {
            first = false;
            return Some(current.clone());
        }
        let i = (1..current.len()).rev().find(|&i| current[i - 1] < current[i])?;
        let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        Some(current.clone())
    })
}

proptest! {
    #[test]
    fn circuit_meets_cocircuit_never_once(m in matroid()) {
        for c in m.circuits() {
            for d in m.cocircuits() {
                prop_assert_ne!((c & d).len(), 1);
            }
        }
    }

    #[test]
    fn dual_is_an_involution(m in matroid()) {
        prop_assert_eq!(m.dual().dual(), m.clone());
        prop_assert_eq!(m.dual().rank(), m.n() - m.rank());
    }

    #[test]
    fn duality_exchanges_delete_and_contract(m in matroid_on(2, 5), bits in any::<u16>()) {
        let s = subset_of(&m, bits);
        prop_assume!(!s.is_empty() && s != m.ground());
        prop_assert_eq!(m.delete(s).unwrap().dual(), m.dual().contract(s).unwrap());
        prop_assert_eq!(m.contract(s).unwrap().dual(), m.dual().delete(s).unwrap());
    }

    #[test]
    fn closure_is_a_closure_operator(m in matroid(), a in any::<u16>(), b in any::<u16>()) {
        let s = subset_of(&m, a);
        let t = s | subset_of(&m, b);
        let cs = m.closure(s);
        prop_assert!(s.is_subset(cs));
        prop_assert!(cs.is_subset(m.closure(t)));
        prop_assert_eq!(m.closure(cs), cs);
        prop_assert_eq!(m.rank_of(cs), m.rank_of(s));
    }

    #[test]
    fn rank_plus_nullity_is_size(m in matroid(), bits in any::<u16>()) {
        let s = subset_of(&m, bits);
        prop_assert_eq!(m.rank_of(s) + m.nullity(s), s.len());
        prop_assert!(m.rank_of(s) <= m.rank());
    }

    #[test]
    fn truncation_shifts_flats(m in matroid()) {
        prop_assume!(m.rank() >= 2);
        let t = m.truncate().unwrap();
        for k in 2..=m.rank() {
            prop_assert_eq!(m.flats_of_corank(k).unwrap(), t.flats_of_corank(k - 1).unwrap());
        }
    }

    #[test]
    fn activities_match_circuit_oracle(m in matroid()) {
        for (b, a) in all_activities(&m) {
            prop_assert_eq!(a, activity_oracle(&m, b));
        }
    }

    #[test]
    fn inactive_elements_keep_activities(m in matroid_on(2, 5), pick in any::<usize>()) {
        let b = m.bases()[pick % m.num_bases()];
        let a = activity_pair(&m, b).unwrap();
        for v in (b - internally_active(&m, b).unwrap()).iter() {
            let after = activity_pair(&m.contract(ElementSet::singleton(v)).unwrap(), b.without(v)).unwrap();
            prop_assert_eq!(after.internal, a.internal);
            prop_assert!(after.external >= a.external);
        }
        for v in (m.ground() - b - externally_active(&m, b).unwrap()).iter() {
            let after = activity_pair(&m.delete(ElementSet::singleton(v)).unwrap(), b).unwrap();
            prop_assert!(after.internal >= a.internal);
            prop_assert_eq!(after.external, a.external);
        }
    }

    #[test]
    fn direct_sum_adds_activities(a in matroid_on(1, 4), b in matroid_on(1, 4)) {
        let sum = a.direct_sum(&b).unwrap();
        let shift: Vec<usize> = (1..=16).map(|e| e + a.n()).collect();
        for &ba in a.bases() {
            for &bb in b.bases() {
                let joint = ba | shifted(bb, &shift);
                let pa = activity_pair(&a, ba).unwrap();
                let pb = activity_pair(&b, bb).unwrap();
                prop_assert_eq!(
                    activity_pair(&sum, joint).unwrap(),
                    ActivityPair::new(pa.internal + pb.internal, pa.external + pb.external)
                );
            }
        }
        prop_assert_eq!(tutte_by_activities(&sum), tutte_by_activities(&a).mul(&tutte_by_activities(&b)));
    }

    #[test]
    fn duality_swaps_tutte_variables(m in matroid()) {
        prop_assert_eq!(tutte_by_activities(&m.dual()), tutte_by_activities(&m).swap_variables());
    }

    #[test]
    fn tutte_is_order_invariant((m, perm) in with_permutation()) {
        prop_assert_eq!(tutte_by_activities(&m.relabel(&perm).unwrap()), tutte_by_activities(&m));
    }

    #[test]
    fn tutte_counts_bases_and_ignores_pivot(m in matroid()) {
        let t = tutte_by_activities(&m);
        prop_assert_eq!(t.total(), m.num_bases() as u64);
        prop_assert_eq!(tutte_by_deletion_contraction_with_pivot(&m, Pivot::Smallest), t.clone());
        prop_assert_eq!(tutte_by_deletion_contraction_with_pivot(&m, Pivot::Largest), t);
    }

    #[test]
    fn truncation_preserves_uniformity(m in matroid(), k in 1usize..4, l in 1usize..4) {
        prop_assume!(m.rank() >= 1);
        let kl = KLPair::new(k, l).unwrap();
        if is_kl_uniform_tutte(&m, kl) {
            let t = m.truncate().unwrap();
            prop_assert!(is_kl_uniform_tutte(&t, kl));
            prop_assert!(is_kl_uniform_flats(&t, kl));
        }
    }

    #[test]
    fn truncated_sum_activity_support(
        n in matroid_on(1, 4).prop_filter("rank", |m| m.rank() >= 1),
        depth in 1usize..4,
        extra in 0usize..3,
        size in 0usize..3,
    ) {
        let m = depth.min(n.rank());
        let d = n.rank() - m;
        let u_rank = m + extra;
        let u = uniform(u_rank, u_rank + size).unwrap();
        prop_assume!(n.n() + u.n() <= 10);
        let t = n.direct_sum(&u).unwrap().truncate_m(m).unwrap();
        let e = ElementSet::full(n.n());
        for (b, _) in all_activities(&t) {
            let inside = (b & e).len();
            if inside != d {
                prop_assert!(externally_active(&t, b).unwrap().is_subset(e));
            }
            if inside != d + m {
                prop_assert!(internally_active(&t, b).unwrap().is_subset(e));
            }
        }
    }

    #[test]
    fn minors_are_invariant_under_duality(m in matroid_on(1, 5), n in matroid_on(1, 3)) {
        prop_assert_eq!(has_minor(&m, &n), has_minor(&m.dual(), &n.dual()));
    }

    #[test]
    fn minor_search_matches_exhaustive_search(m in matroid_on(1, 5), n in matroid_on(1, 3)) {
        prop_assume!(n.n() <= m.n());
        let found = find_minor(&m, &n);
        prop_assert_eq!(found.is_some(), minor_oracle(&m, &n));
        if let Some(w) = found {
            let minor = minor_of(&m, w.contracted, w.deleted).unwrap();
            prop_assert_eq!(w.certificate.apply(&minor).unwrap(), n);
        }
    }

    #[test]
    fn isomorphism_is_an_equivalence((m, p) in with_permutation(), q_seed in any::<u64>()) {
        prop_assert!(is_isomorphic(&m, &m).is_some());
        let a = m.relabel(&p).unwrap();
        let mut q = p.clone();
        let shift = (q_seed as usize) % q.len();
        q.rotate_left(shift);
        let b = a.relabel(&q).unwrap();
        let ab = is_isomorphic(&m, &a).unwrap();
        prop_assert_eq!(ab.inverse().apply(&a).unwrap(), m.clone());
        let bc = is_isomorphic(&a, &b).unwrap();
        prop_assert_eq!(ab.then(&bc).unwrap().apply(&m).unwrap(), b);
    }

    #[test]
    fn excluded_minors_shift_with_coloops_and_loops(m in matroid_on(1, 5), k in 1usize..4, l in 1usize..4) {
        let kl = KLPair::new(k, l).unwrap();
        let base = is_excluded_minor_tutte(&m, kl);
        let with_coloop = m.direct_sum(&uniform(1, 1).unwrap()).unwrap();
        let with_loop = m.direct_sum(&uniform(0, 1).unwrap()).unwrap();
        prop_assert_eq!(is_excluded_minor_tutte(&with_coloop, KLPair::new(k + 1, l).unwrap()), base);
        prop_assert_eq!(is_excluded_minor_tutte(&with_loop, KLPair::new(k, l + 1).unwrap()), base);
    }

    #[test]
    fn lattice_paths_give_activities(spec in schubert_spec(10)) {
        let m = schubert(&spec);
        for &b in m.bases() {
            prop_assert_eq!(lattice_path_activity(&spec, b).unwrap(), activity_pair(&m, b).unwrap());
        }
    }
}

fn shifted(s: ElementSet, shift: &[usize]) -> ElementSet {
    s.iter().fold(ElementSet::EMPTY, |acc, e| acc.with(shift[e - 1]))
}

#[test]
fn permutations_enumerates_all() {
    assert_eq!(permutations(4).count(), 24);
}
