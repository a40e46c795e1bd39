//! Revlex basis strings: `r=<int> n=<int> <string>`, one matroid per line.
//!
//! The string has one character per `r`-subset of `{1, …, n}`, `*` for a
//! basis and `0` otherwise. Subsets are ordered so that `A` precedes `B`
//! iff `max(A △ B) ∈ B`, which is the colex order of [`k_subsets`].

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use kluniform_core::set::{binomial, k_subsets};
use kluniform_core::{Matroid, MAX_ELEMENTS};

use crate::error::{parse_error, Error, Result};

/// Relabels to `1..=n` first.
pub fn encode_revlex(m: &Matroid) -> String {
    let m = m.compact();
    let string: String = k_subsets(m.n(), m.rank()).map(|s| if m.is_basis(s) { '*' } else { '0' }).collect();
    format!("r={} n={} {string}", m.rank(), m.n())
}

/// Parses one catalog line; `line` only labels errors.
pub fn decode_revlex(text: &str, line: usize) -> Result<Matroid> {
    let mut parts = text.split_whitespace();
    let mut field = |prefix: &str| -> Result<usize> {
        parts
            .next()
            .and_then(|p| p.strip_prefix(prefix))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| parse_error(line, format!("expected `{prefix}<int>`")))
    };
    let r = field("r=")?;
    let n = field("n=")?;
    if n == 0 || n > MAX_ELEMENTS || r > n {
        return Err(parse_error(line, format!("unsupported r={r} n={n}")));
    }
    let string = parts.next().ok_or_else(|| parse_error(line, "missing basis string"))?;
    if parts.next().is_some() {
        return Err(parse_error(line, "trailing fields"));
    }
    let expected = binomial(n, r);
    if string.len() as u64 != expected {
        return Err(parse_error(line, format!("basis string has length {}, expected {expected}", string.len())));
    }
    let mut bases = Vec::new();
    for (c, subset) in string.chars().zip(k_subsets(n, r)) {
        match c {
            '*' => bases.push(subset),
            '0' => {}
            other => return Err(parse_error(line, format!("unexpected character {other:?}"))),
        }
    }
    Matroid::from_bases(n, bases).map_err(|source| Error::Invalid { line, source })
}

/// Streams matroids from catalog lines. Blank lines are skipped.
#[derive(Debug)]
pub struct CatalogReader<R> {
    lines: std::io::Lines<R>,
    line: usize,
}

impl<R: BufRead> CatalogReader<R> {
    pub fn new(reader: R) -> Self {
        CatalogReader { lines: reader.lines(), line: 0 }
    }
}

impl<R: BufRead> Iterator for CatalogReader<R> {
    type Item = Result<Matroid>;

    fn next(&mut self) -> Option<Result<Matroid>> {
        loop {
            self.line += 1;
            let text = match self.lines.next()? {
                Ok(text) => text,
                Err(e) => return Some(Err(parse_error(self.line, e.to_string()))),
            };
            if text.trim().is_empty() {
                continue;
            }
            return Some(decode_revlex(&text, self.line));
        }
    }
}

pub fn ingest_catalog(path: &Path) -> Result<CatalogReader<BufReader<File>>> {
    let file = File::open(path).map_err(|source| Error::Io { path: path.into(), source })?;
    Ok(CatalogReader::new(BufReader::new(file)))
}
