//! Parsers for the textual forms used on the command line and in files.
//!
//! Words are whitespace-separated residues; windows, partitions and codes
//! are comma-separated, optionally wrapped in brackets or parentheses.

use crate::affine_core::{AffinePerm, Rank, Residue};
use crate::error::{Error, Result};
use crate::kcode::KCode;
use crate::shapes::BoundedPartition;

fn strip_delims(s: &str, open: char, close: char) -> &str {
    let s = s.trim();
    s.strip_prefix(open)
        .and_then(|t| t.strip_suffix(close))
        .unwrap_or(s)
        .trim()
}

fn comma_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad {what} entry {:?}", t.trim())))
        })
        .collect()
}

pub fn parse_word(rank: Rank, s: &str) -> Result<Vec<Residue>> {
    let word: Vec<usize> = s
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
        .collect::<Result<_>>()?;
    rank.check_word(&word)?;
    Ok(word)
}

/// `[1,-6,0,15]` or `1,-6,0,15`.
pub fn parse_window(s: &str) -> Result<Vec<i64>> {
    comma_list(strip_delims(s, '[', ']'), "window")
}

pub fn parse_perm(rank: Rank, s: &str) -> Result<AffinePerm> {
    AffinePerm::from_window(rank, &parse_window(s)?)
}

/// `(3,2,2,1)` or `3,2,2,1`.
pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    comma_list(strip_delims(s, '(', ')'), "partition")
}

pub fn parse_partition(rank: Rank, s: &str) -> Result<BoundedPartition> {
    BoundedPartition::new(rank, &parse_parts(s)?)
}

pub fn parse_code(rank: Rank, s: &str) -> Result<KCode> {
    KCode::new(rank, comma_list(strip_delims(s, '(', ')'), "code")?)
}
