//! Plain-text matroid files.
//!
//! ```text
//! n=4 rank=2
//! bases:
//! 1 2
//! 1 3
//! ```
//!
//! One basis per line, labels ascending. A rank-0 matroid has no basis lines.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use kluniform_core::{ElementSet, Matroid};

use crate::error::{parse_error, Error, Result};

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let mut lines = text.lines().map(str::trim_end).enumerate().map(|(i, l)| (i + 1, l));

    let (_, header) = lines.next().ok_or_else(|| parse_error(1, "empty input"))?;
    let (n, rank) = parse_header(header).ok_or_else(|| parse_error(1, "expected `n=<int> rank=<int>`"))?;

    match lines.next() {
        Some((_, "bases:")) => {}
        Some((line, _)) => return Err(parse_error(line, "expected `bases:`")),
        None => return Err(parse_error(2, "missing `bases:`")),
    }

    let mut bases = BTreeSet::new();
    let mut trailing_blank = None;
    for (line, content) in lines {
        if content.is_empty() {
            trailing_blank.get_or_insert(line);
            continue;
        }
        if let Some(blank) = trailing_blank {
            return Err(parse_error(blank, "blank line inside basis list"));
        }
        let basis = parse_basis(content, n, rank).map_err(|message| parse_error(line, message))?;
        if !bases.insert(basis) {
            return Err(parse_error(line, format!("duplicate basis {basis}")));
        }
    }
    if rank == 0 {
        bases.insert(ElementSet::EMPTY);
    }
    if bases.is_empty() {
        return Err(kluniform_core::Error::EmptyBasisList.into());
    }
    Ok(Matroid::from_bases(n, bases)?)
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let n = parts.next()?.strip_prefix("n=")?.parse().ok()?;
    let rank = parts.next()?.strip_prefix("rank=")?.parse().ok()?;
    parts.next().is_none().then_some((n, rank))
}

fn parse_basis(content: &str, n: usize, rank: usize) -> std::result::Result<ElementSet, String> {
    let mut set = ElementSet::EMPTY;
    let mut previous = 0;
    for token in content.split_whitespace() {
        let e: usize = token.parse().map_err(|_| format!("not an element label: {token:?}"))?;
        if e == 0 || e > n {
            return Err(format!("element {e} outside 1..={n}"));
        }
        if e <= previous {
            return Err("labels must be strictly ascending".into());
        }
        previous = e;
        set.insert(e);
    }
    if set.len() != rank {
        return Err(format!("basis {set} has {} elements, rank is {rank}", set.len()));
    }
    Ok(set)
}

/// Serializes after relabeling the ground set to `1..=n`.
pub fn write_matroid(m: &Matroid) -> String {
    let m = m.compact();
    let mut out = format!("n={} rank={}\nbases:\n", m.n(), m.rank());
    if m.rank() > 0 {
        for b in m.bases() {
            let labels: Vec<String> = b.iter().map(|e| e.to_string()).collect();
            writeln!(out, "{}", labels.join(" ")).expect("writing to a String");
        }
    }
    out
}

pub fn read_matroid(path: &Path) -> Result<Matroid> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.into(), source })?;
    parse_matroid(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kluniform_core::constructors::uniform;

    #[test]
    fn round_trip_u24() {
        let u24 = uniform(2, 4).unwrap();
        let text = write_matroid(&u24);
        assert!(text.starts_with("n=4 rank=2\nbases:\n1 2\n1 3\n2 3\n"));
        assert_eq!(parse_matroid(&text).unwrap(), u24);
    }

    #[test]
    fn rank_zero_has_no_basis_lines() {
        let u03 = uniform(0, 3).unwrap();
        assert_eq!(write_matroid(&u03), "n=3 rank=0\nbases:\n");
        assert_eq!(parse_matroid("n=3 rank=0\nbases:\n").unwrap(), u03);
    }

    #[test]
    fn trailing_whitespace_is_ignored() {
        let m = parse_matroid("n=2 rank=1   \nbases:\t\n1 \n2\n\n").unwrap();
        assert_eq!(m, uniform(1, 2).unwrap());
    }

    #[test]
    fn duplicates_are_rejected() {
        let err = parse_matroid("n=2 rank=1\nbases:\n1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_matroid(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_matroid("n=2 rank=1\n1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matroid("n=2 rank=1\nbases:\n2 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matroid("n=2 rank=1\nbases:\n3\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matroid("n=2 rank=1\nbases:\n1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matroid("n=2 rank=1\nbases:\n1\n\n2\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(
            parse_matroid("n=4 rank=2\nbases:\n1 4\n2 3\n2 4\n3 4\n"),
            Err(Error::Core(kluniform_core::Error::ExchangeAxiomViolated { .. }))
        ));
        assert!(matches!(parse_matroid("n=2 rank=1\nbases:\n"), Err(Error::Core(_))));
    }

    #[test]
    fn minors_are_compacted() {
        let m = uniform(2, 4).unwrap().delete(ElementSet::singleton(2)).unwrap();
        assert_eq!(write_matroid(&m), write_matroid(&uniform(2, 3).unwrap()));
    }
}
