use std::io::Write as _;

use proptest::prelude::*;

use kluniform::catalog::{decode_revlex, encode_revlex, CatalogReader};
use kluniform::census::Census;
use kluniform::format::{parse_matroid, write_matroid};
use kluniform::verify::{verify, Check, VerifyConfig};
use kluniform_core::census::{classify, count_uniform_brute_force, enumerate_labeled};
use kluniform_core::iso::is_isomorphic;
use kluniform_core::{KLPair, TuttePolynomial};

#[test]
fn every_small_matroid_round_trips() {
    for n in 1..=6 {
        for (i, m) in enumerate_labeled(n).unwrap().enumerate() {
            let line = encode_revlex(&m);
            let back = decode_revlex(&line, i + 1).unwrap();
            assert!(is_isomorphic(&back, &m).is_some());
            assert_eq!(back, m);
            assert_eq!(parse_matroid(&write_matroid(&m)).unwrap(), m);
        }
    }
}

#[test]
fn catalog_file_reproduces_labeled_counts() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    let classes = classify(enumerate_labeled(5).unwrap());
    for (class, _) in &classes {
        writeln!(file, "{}", encode_revlex(&class.representative)).unwrap();
    }
    file.flush().unwrap();
    let catalog = Census::from_catalog(file.path()).unwrap();
    assert_eq!(catalog.classes().len(), 38);
    assert_eq!(catalog.labeled_total_from_classes(), 406);
    let brute = Census::brute_force(5).unwrap();
    for k in 1..=4 {
        for l in 1..=4 {
            let kl = KLPair::new(k, l).unwrap();
            assert_eq!(catalog.count_uniform(kl).labeled_count, brute.count_uniform(kl).labeled_count);
        }
    }
}

#[test]
fn unlabeled_totals() {
    assert_eq!(Census::brute_force(5).unwrap().classes().len(), 38);
    assert_eq!(Census::brute_force(6).unwrap().classes().len(), 98);
}

#[test]
fn pinned_census_values() {
    // U_{0,2}, U_{1,2}, U_{2,2}
    let r = count_uniform_brute_force(2, KLPair::new(1, 1).unwrap()).unwrap();
    assert_eq!((r.labeled_count, r.unlabeled_count), (3, 3));
    let census = Census::brute_force(4).unwrap();
    assert_eq!(census.count_uniform(KLPair::new(2, 1).unwrap()).labeled_count, 36);
}

#[test]
fn catalog_reader_reports_bad_lines() {
    let text = "r=2 n=4 ******\nr=2 n=4 00***0\n";
    let items: Vec<_> = CatalogReader::new(text.as_bytes()).collect();
    assert!(items[0].is_ok());
    assert!(matches!(items[1], Err(kluniform::Error::Invalid { line: 2, .. })));
}

#[test]
fn strict_dominance_canary_is_reported() {
    let mut config = VerifyConfig::new(4, 3, 3);
    config.region = TuttePolynomial::vanishes_strictly_above;
    let report = verify(&config).unwrap();
    assert!(report.tally(Check::Uniform).failed > 0);
    assert_eq!(report.tally(Check::Almost).failed, 0);
    let text = report.to_string();
    assert!(text.contains("first counterexample for uniform"), "{text}");
    assert!(text.contains("bases:"), "{text}");
}

#[test]
fn seed_controls_permutations_only() {
    let mut a = VerifyConfig::new(4, 1, 1);
    a.seed = 1;
    let mut b = a.clone();
    b.seed = 2;
    assert_eq!(verify(&a).unwrap(), verify(&b).unwrap());
}

fn records() -> Vec<kluniform_core::census::CensusRecord> {
    let census = Census::brute_force(5).unwrap();
    (1..=6).flat_map(|k| (1..=6).map(move |l| (k, l))).map(|(k, l)| census.count_uniform(KLPair::new(k, l).unwrap())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn census_is_monotone(k in 1usize..6, l in 1usize..6) {
        let all = records();
        let at = |k: usize, l: usize| all.iter().find(|r| (r.k, r.l) == (k, l)).unwrap().labeled_count;
        prop_assert!(at(k, l) <= at(k + 1, l));
        prop_assert!(at(k, l) <= at(k, l + 1));
        prop_assert!(at(k, l) >= 1);
    }
}
