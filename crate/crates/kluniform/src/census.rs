//! `m_n(k,l)` tables from brute force (`n ≤ 6`) or an isomorphism-class catalog.
//!
//! Ratios are reported as finite-`n` data; nothing here estimates limits.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use kluniform_core::census::{classify, enumerate_labeled, CensusRecord, IsoClass, Source, MAX_BRUTE_FORCE_N};
use kluniform_core::tutte::tutte_by_activities;
use kluniform_core::uniformity::kl_uniform_from_tutte;
use kluniform_core::{KLPair, Matroid, TuttePolynomial};

use crate::catalog::ingest_catalog;
use crate::error::{parse_error, Error, Result};

/// Isomorphism classes on `{1, …, n}`, plus every labeled Tutte polynomial
/// when the classes came from brute force.
#[derive(Debug)]
pub struct Census {
    n: usize,
    source: Source,
    classes: Vec<IsoClass>,
    labeled: Vec<TuttePolynomial>,
}

impl Census {
    pub fn brute_force(n: usize) -> Result<Census> {
        let all: Vec<Matroid> = enumerate_labeled(n)?.collect();
        let labeled: Vec<TuttePolynomial> = all.par_iter().map(tutte_by_activities).collect();
        let classes = classify(all).into_iter().map(|(c, _)| c).collect();
        Ok(Census { n, source: Source::BruteForce, classes, labeled })
    }

    /// One representative per class; all on the same ground set size.
    pub fn from_representatives(representatives: Vec<Matroid>) -> Result<Census> {
        let n = representatives.first().map_or(0, Matroid::n);
        if let Some(bad) = representatives.iter().find(|m| m.n() != n) {
            return Err(Error::MixedCatalog { expected: n, found: bad.n() });
        }
        let classes = representatives.into_par_iter().map(IsoClass::new).collect();
        Ok(Census { n, source: Source::Catalog, classes, labeled: Vec::new() })
    }

    pub fn from_catalog(path: &Path) -> Result<Census> {
        let representatives = ingest_catalog(path)?.collect::<Result<Vec<_>>>()?;
        Census::from_representatives(representatives)
    }

    /// A catalog when given, otherwise brute force if `n` allows it.
    pub fn load(n: usize, catalog: Option<&Path>) -> Result<Census> {
        match catalog {
            Some(path) => {
                let census = Census::from_catalog(path)?;
                if census.n != n && !census.classes.is_empty() {
                    return Err(Error::MixedCatalog { expected: n, found: census.n });
                }
                Ok(Census { n, ..census })
            }
            None if (1..=MAX_BRUTE_FORCE_N).contains(&n) => Census::brute_force(n),
            None => Err(Error::SourceUnavailable { n }),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn classes(&self) -> &[IsoClass] {
        &self.classes
    }

    /// Labeled matroids on `{1, …, n}`, summed over classes as `n!/|Aut|`.
    pub fn labeled_total_from_classes(&self) -> u64 {
        self.classes.iter().map(|c| c.orbit_size).sum()
    }

    /// Brute force counts labeled matroids one by one; a catalog sums orbit sizes.
    pub fn count_uniform(&self, kl: KLPair) -> CensusRecord {
        let from_classes = self.count_from_classes(kl);
        match self.source {
            Source::Catalog => from_classes,
            Source::BruteForce => CensusRecord {
                labeled_count: self.labeled.iter().filter(|t| kl_uniform_from_tutte(t, kl)).count() as u64,
                ..from_classes
            },
        }
    }

    pub fn count_from_classes(&self, kl: KLPair) -> CensusRecord {
        let uniform = self.classes.iter().filter(|c| kl_uniform_from_tutte(&c.tutte, kl));
        let (labeled_count, unlabeled_count) = uniform.fold((0, 0), |(l, u), c| (l + c.orbit_size, u + 1));
        CensusRecord { n: self.n, k: kl.k(), l: kl.l(), labeled_count, unlabeled_count, source: self.source }
    }
}

/// Census records keyed by `(n, k, l, source)`, persisted one per line:
/// `n=6 k=1 l=1 labeled=… unlabeled=… source=brute_force`.
#[derive(Debug, Default)]
pub struct RecordStore {
    records: BTreeMap<(usize, usize, usize, &'static str), CensusRecord>,
}

impl RecordStore {
    pub fn parse(text: &str) -> Result<RecordStore> {
        let mut store = RecordStore::default();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let record = parse_record(line).ok_or_else(|| parse_error(i + 1, "malformed census record"))?;
            store.insert(record);
        }
        Ok(store)
    }

    /// A missing file is an empty store.
    pub fn load(path: &Path) -> Result<RecordStore> {
        match std::fs::read_to_string(path) {
            Ok(text) => RecordStore::parse(&text),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(RecordStore::default()),
            Err(source) => Err(Error::Io { path: path.into(), source }),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.render()).map_err(|source| Error::Io { path: path.into(), source })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in self.records.values() {
            writeln!(
                out,
                "n={} k={} l={} labeled={} unlabeled={} source={}",
                r.n,
                r.k,
                r.l,
                r.labeled_count,
                r.unlabeled_count,
                r.source.as_str()
            )
            .expect("writing to a String");
        }
        out
    }

    pub fn get(&self, n: usize, kl: KLPair, source: Source) -> Option<CensusRecord> {
        self.records.get(&(n, kl.k(), kl.l(), source.as_str())).copied()
    }

    pub fn insert(&mut self, record: CensusRecord) {
        self.records.insert((record.n, record.k, record.l, record.source.as_str()), record);
    }

    pub fn iter(&self) -> impl Iterator<Item = &CensusRecord> {
        self.records.values()
    }
}

fn parse_record(line: &str) -> Option<CensusRecord> {
    let mut fields = line.split_whitespace();
    let mut value = |key: &str| fields.next()?.strip_prefix(key)?.strip_prefix('=').map(str::to_owned);
    let n = value("n")?.parse().ok()?;
    let k = value("k")?.parse().ok()?;
    let l = value("l")?.parse().ok()?;
    let labeled_count = value("labeled")?.parse().ok()?;
    let unlabeled_count = value("unlabeled")?.parse().ok()?;
    let source = match value("source")?.as_str() {
        "brute_force" => Source::BruteForce,
        "catalog" => Source::Catalog,
        _ => return None,
    };
    fields.next().is_none().then_some(CensusRecord { n, k, l, labeled_count, unlabeled_count, source })
}

/// First pair of records on the same `n` and source where growing `k` or `l`
/// shrinks the count.
pub fn monotonicity_violation<'a, I>(records: I) -> Option<(CensusRecord, CensusRecord)>
where
    I: IntoIterator<Item = &'a CensusRecord>,
{
    let records: Vec<&CensusRecord> = records.into_iter().collect();
    for a in &records {
        for b in &records {
            let neighbor = (b.k == a.k + 1 && b.l == a.l) || (b.k == a.k && b.l == a.l + 1);
            if a.n == b.n && a.source == b.source && neighbor && a.labeled_count > b.labeled_count {
                return Some((**a, **b));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Tsv,
    Markdown,
}

/// `m_n(k,l)` with its two neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatioRow {
    pub record: CensusRecord,
    pub next_k: u64,
    pub next_l: u64,
}

impl RatioRow {
    /// `m_n(k,l) / m_n(k+1,l)`.
    pub fn ratio_k(&self) -> f64 {
        self.record.labeled_count as f64 / self.next_k as f64
    }

    /// `m_n(k,l) / m_n(k,l+1)`.
    pub fn ratio_l(&self) -> f64 {
        self.record.labeled_count as f64 / self.next_l as f64
    }
}

/// Rows for `1 ≤ k ≤ k_max`, `1 ≤ l ≤ l_max`, using records through
/// `k_max + 1` and `l_max + 1`. `lookup` is called once per needed pair.
pub fn ratio_rows<F>(k_max: usize, l_max: usize, mut lookup: F) -> Result<Vec<RatioRow>>
where
    F: FnMut(KLPair) -> Result<CensusRecord>,
{
    let mut cache = BTreeMap::new();
    let mut get = |k: usize, l: usize| -> Result<CensusRecord> {
        if let Some(r) = cache.get(&(k, l)) {
            return Ok(*r);
        }
        let r = lookup(KLPair::new(k, l)?)?;
        cache.insert((k, l), r);
        Ok(r)
    };
    let mut rows = Vec::new();
    for k in 1..=k_max {
        for l in 1..=l_max {
            let record = get(k, l)?;
            let next_k = get(k + 1, l)?.labeled_count;
            let next_l = get(k, l + 1)?.labeled_count;
            rows.push(RatioRow { record, next_k, next_l });
        }
    }
    Ok(rows)
}

const COLUMNS: [&str; 11] =
    ["n", "k", "l", "m(k,l)", "m(k+1,l)", "m(k,l+1)", "ratio_k", "ratio_l", "unlabeled", "source", "note"];

pub fn render_table(rows: &[RatioRow], format: TableFormat) -> String {
    let mut out = String::new();
    let cells = |row: &RatioRow| -> Vec<String> {
        let r = &row.record;
        let note = if (r.k, r.l) == (1, 1) { "(1,1) lies outside the ratio question" } else { "" };
        vec![
            r.n.to_string(),
            r.k.to_string(),
            r.l.to_string(),
            r.labeled_count.to_string(),
            row.next_k.to_string(),
            row.next_l.to_string(),
            format!("{:.6}", row.ratio_k()),
            format!("{:.6}", row.ratio_l()),
            r.unlabeled_count.to_string(),
            r.source.as_str().to_string(),
            note.to_string(),
        ]
    };
    match format {
        TableFormat::Tsv => {
            out.push_str("# labeled counts m_n(k,l) on {1..n}; ratios are finite-n data\n");
            out.push_str(&COLUMNS.join("\t"));
            out.push('\n');
            for row in rows {
                out.push_str(cells(row).join("\t").trim_end());
                out.push('\n');
            }
        }
        TableFormat::Markdown => {
            out.push_str("Labeled counts m_n(k,l) on {1..n}; ratios are finite-n data.\n\n");
            writeln!(out, "| {} |", COLUMNS.join(" | ")).expect("writing to a String");
            writeln!(out, "|{}", "---|".repeat(COLUMNS.len())).expect("writing to a String");
            for row in rows {
                writeln!(out, "| {} |", cells(row).join(" | ")).expect("writing to a String");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kl(k: usize, l: usize) -> KLPair {
        KLPair::new(k, l).unwrap()
    }

    #[test]
    fn brute_force_agrees_with_classes() {
        for n in 1..=4 {
            let census = Census::brute_force(n).unwrap();
            for k in 1..=3 {
                for l in 1..=3 {
                    let brute = census.count_uniform(kl(k, l));
                    assert_eq!(brute.labeled_count, census.count_from_classes(kl(k, l)).labeled_count);
                }
            }
        }
    }

    #[test]
    fn large_pairs_count_everything() {
        let census = Census::brute_force(4).unwrap();
        assert_eq!(census.count_uniform(kl(5, 1)).labeled_count, 68);
        assert_eq!(census.count_uniform(kl(1, 5)).labeled_count, 68);
        assert_eq!(census.count_uniform(kl(5, 1)).unlabeled_count, census.classes().len() as u64);
    }

    #[test]
    fn unavailable_without_catalog() {
        assert!(matches!(Census::load(7, None), Err(Error::SourceUnavailable { n: 7 })));
    }

    #[test]
    fn records_round_trip() {
        let census = Census::brute_force(3).unwrap();
        let mut store = RecordStore::default();
        store.insert(census.count_uniform(kl(1, 1)));
        store.insert(census.count_uniform(kl(2, 1)));
        let again = RecordStore::parse(&store.render()).unwrap();
        assert_eq!(again.render(), store.render());
        assert_eq!(again.get(3, kl(2, 1), Source::BruteForce), store.get(3, kl(2, 1), Source::BruteForce));
        assert!(RecordStore::parse("n=3 k=1\n").is_err());
    }

    #[test]
    fn ratios_within_unit_interval() {
        let census = Census::brute_force(4).unwrap();
        let rows = ratio_rows(2, 2, |kl| Ok(census.count_uniform(kl))).unwrap();
        assert_eq!(rows.len(), 4);
        for row in &rows {
            assert!(row.ratio_k() > 0.0 && row.ratio_k() <= 1.0);
            assert!(row.ratio_l() > 0.0 && row.ratio_l() <= 1.0);
        }
        let tsv = render_table(&rows, TableFormat::Tsv);
        assert!(tsv.lines().nth(2).unwrap().ends_with("outside the ratio question"));
        let md = render_table(&rows, TableFormat::Markdown);
        assert_eq!(md.lines().filter(|l| l.starts_with("| 4 |")).count(), 4);
    }

    #[test]
    fn monotonicity_detects_decrease() {
        let mut a = Census::brute_force(3).unwrap().count_uniform(kl(1, 1));
        let mut b = a;
        b.k = 2;
        assert!(monotonicity_violation([&a, &b]).is_none());
        a.labeled_count = b.labeled_count + 1;
        assert!(monotonicity_violation([&a, &b]).is_some());
    }
}
