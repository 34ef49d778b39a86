//! Insertion of letters into k-codes.
//!
//! Right-multiplying `x = d_{A_n} ... d_{A_1}` by `a_p` pushes `p` into the
//! rows from the bottom. In row `j`:
//! - inclusion: `p - 1, p ∉ A_j`, so `p` joins `A_j` and the insertion stops;
//! - bump: `p ∉ A_j` but `p - 1 ∈ A_j`; `p - 1` is replaced by `p` and `p - 1`
//!   moves on to row `j + 1`;
//! - braid: `p, p - 1 ∈ A_j`; the row is unchanged and `p - 1` moves on.
//!
//! If `p ∈ A_j` but `p - 1 ∉ A_j` the product vanishes; this happens exactly
//! when `p` is a right descent of `x`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::affine_core::{AffinePerm, Rank, Residue};
use crate::cyclic::ResidueSet;
use crate::error::{Error, Result};
use crate::kcode::{code_descents, code_of, code_to_decomposition, CyclicDecomposition, Direction, KCode, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Inclusion,
    Bump,
    Braid,
}

/// One row visited by an insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStep {
    /// Row index, counted from 1 at the bottom.
    pub row: usize,
    pub kind: Move,
    /// The residue arriving at this row.
    pub residue: Residue,
    /// The residue passed on to the next row, if any.
    pub carried: Option<Residue>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (row, p) = (self.row, self.residue);
        match self.kind {
            Move::Inclusion => write!(f, "row={row} include p={p}"),
            Move::Bump => write!(f, "row={row} bump p={p} -> carries {}", self.carried.unwrap_or(p)),
            Move::Braid => write!(f, "row={row} braid p={p} -> carries {}", self.carried.unwrap_or(p)),
        }
    }
}

/// The rows visited by one insertion; the last step is always an inclusion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InsertionTrace {
    pub steps: Vec<TraceStep>,
}

/// Step labels on the cells `(column, row)` of a k-code diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RecordingTableau {
    rank: Rank,
    labels: BTreeMap<(Residue, usize), usize>,
}

impl RecordingTableau {
    pub fn new(rank: Rank, labels: BTreeMap<(Residue, usize), usize>) -> RecordingTableau {
        RecordingTableau { rank, labels }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn labels(&self) -> &BTreeMap<(Residue, usize), usize> {
        &self.labels
    }

    pub fn get(&self, column: Residue, row: usize) -> Option<usize> {
        self.labels.get(&(column, row)).copied()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    fn height(&self) -> usize {
        self.labels.keys().map(|&(_, r)| r).max().unwrap_or(0)
    }

    /// Labels of row `row`, left to right in the flattening cut at the
    /// smallest column with no cells.
    pub fn row_labels(&self, row: usize) -> Vec<usize> {
        let n = self.rank.n();
        let cut = (0..n)
            .find(|&c| !self.labels.contains_key(&(c, 1)))
            .unwrap_or(0);
        (1..=n)
            .map(|t| (cut + t) % n)
            .filter_map(|c| self.get(c, row))
            .collect()
    }
}

impl fmt::Display for RecordingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 1..=self.height() {
            let labels: Vec<String> = self.row_labels(row).iter().map(|l| l.to_string()).collect();
            writeln!(f, "{row}: [{}]", labels.join(","))?;
        }
        Ok(())
    }
}

/// Running state of an insertion sequence.
struct Inserter {
    rank: Rank,
    rows: Vec<ResidueSet>,
    labels: BTreeMap<(Residue, usize), usize>,
}

impl Inserter {
    fn new(code: &KCode) -> Inserter {
        let rows = code_to_decomposition(code, Direction::Decreasing, Side::Right)
            .rows()
            .to_vec();
        Inserter {
            rank: code.rank(),
            rows,
            labels: BTreeMap::new(),
        }
    }

    /// Column of the cell carrying residue `r` in row `j`.
    fn column(&self, r: Residue, j: usize) -> Residue {
        self.rank.residue(r as i64 + j as i64 - 1)
    }

    fn code(&self) -> KCode {
        let d = CyclicDecomposition::new(self.rank, self.rows.clone(), Direction::Decreasing, Side::Right)
            .expect("insertion keeps rows proper and nonempty");
        code_of(&d).expect("insertion keeps rows maximal")
    }

    fn push(&mut self, p: Residue, label: usize) -> Result<InsertionTrace> {
        let n = self.rank.n();
        if code_descents(&self.code()).contains(p) {
            return Err(Error::DescentViolation(p));
        }
        let mut steps = Vec::new();
        let mut p = p;
        for j in 1.. {
            if j > self.rows.len() {
                self.rows.push(ResidueSet::empty(self.rank));
            }
            let row = self.rows[j - 1];
            let below = (p + n - 1) % n;
            match (row.contains(p), row.contains(below)) {
                (false, false) => {
                    self.rows[j - 1] = row.with(p);
                    let col = self.column(p, j);
                    self.labels.insert((col, j), label);
                    steps.push(TraceStep { row: j, kind: Move::Inclusion, residue: p, carried: None });
                    break;
                }
                (false, true) => {
                    self.rows[j - 1] = row.without(below).with(p);
                    let (from, to) = (self.column(below, j), self.column(p, j));
                    if let Some(l) = self.labels.remove(&(from, j)) {
                        self.labels.insert((to, j), l);
                    }
                    steps.push(TraceStep { row: j, kind: Move::Bump, residue: p, carried: Some(below) });
                }
                (true, true) => {
                    steps.push(TraceStep { row: j, kind: Move::Braid, residue: p, carried: Some(below) });
                }
                (true, false) => return Err(Error::DescentViolation(p)),
            }
            p = below;
        }
        Ok(InsertionTrace { steps })
    }
}

/// Inserts `p` into `code`, giving the code of `x · a_p`.
pub fn insert(code: &KCode, p: Residue) -> Result<(KCode, InsertionTrace)> {
    let p = code.rank().check_residue(p)?;
    let mut ins = Inserter::new(code);
    let trace = ins.push(p, 0)?;
    Ok((ins.code(), trace))
}

/// Inserts the letters of a reduced word into the empty code, recording the
/// step at which each cell appeared.
pub fn insert_word(rank: Rank, word: &[usize]) -> Result<(KCode, RecordingTableau)> {
    rank.check_word(word)?;
    let mut ins = Inserter::new(&KCode::zero(rank));
    for (t, &p) in word.iter().enumerate() {
        ins.push(p, t + 1).map_err(|e| match e {
            Error::DescentViolation(_) => Error::NotReduced(t),
            e => e,
        })?;
    }
    Ok((ins.code(), RecordingTableau::new(rank, ins.labels)))
}

/// Recovers the reduced word whose insertion gives `(code, q)`.
pub fn reverse_insert(code: &KCode, q: &RecordingTableau) -> Result<Vec<Residue>> {
    let rank = code.rank();
    rank.same(q.rank())?;
    let n = rank.n();
    let total = code.size();
    let cells: Vec<(Residue, usize)> = (0..n)
        .flat_map(|c| (1..=code.entries()[c]).map(move |j| (c, j)))
        .collect();
    let mut seen = vec![false; total + 1];
    if q.labels.len() != total
        || cells.iter().any(|cell| !q.labels.contains_key(cell))
        || q.labels.values().any(|&l| l == 0 || l > total || std::mem::replace(&mut seen[l], true))
    {
        return Err(Error::NotStandard);
    }

    let mut ins = Inserter::new(code);
    let mut by_label: HashMap<usize, (Residue, usize)> = q.labels.iter().map(|(&c, &l)| (l, c)).collect();
    let mut word = Vec::with_capacity(total);
    for l in (1..=total).rev() {
        let (c, m) = by_label.remove(&l).ok_or(Error::NotStandard)?;
        let mut r = rank.residue(c as i64 - m as i64 + 1);
        if !ins.rows[m - 1].contains(r) {
            return Err(Error::NotStandard);
        }
        ins.rows[m - 1] = ins.rows[m - 1].without(r);
        for j in (1..m).rev() {
            r = (r + 1) % n;
            let below = (r + n - 1) % n;
            let row = ins.rows[j - 1];
            match (row.contains(r), row.contains(below)) {
                (true, true) => {}
                (true, false) => {
                    ins.rows[j - 1] = row.without(r).with(below);
                    let (from, to) = (ins.column(r, j), ins.column(below, j));
                    let moved = by_label
                        .iter()
                        .find(|(_, &cell)| cell == (from, j))
                        .map(|(&lab, _)| lab)
                        .ok_or(Error::NotStandard)?;
                    by_label.insert(moved, (to, j));
                }
                _ => return Err(Error::NotStandard),
            }
        }
        word.push(r);
    }
    word.reverse();
    match insert_word(rank, &word) {
        Ok((c2, q2)) if &c2 == code && &q2 == q => Ok(word),
        _ => Err(Error::NotStandard),
    }
}

/// Every reduced word of `x`, in lexicographic order.
pub fn enumerate_reduced_words(x: &AffinePerm, bound: usize) -> Result<Vec<Vec<Residue>>> {
    let len = x.length();
    if len > bound {
        return Err(Error::BoundExceeded { len, bound });
    }
    fn go(x: &AffinePerm, suffix: &mut Vec<Residue>, out: &mut Vec<Vec<Residue>>) {
        if x.is_identity() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for i in x.right_descents().iter() {
            suffix.push(i);
            go(&x.right_mul_gen(i), suffix, out);
            suffix.pop();
        }
    }
    let mut out = Vec::new();
    go(x, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// The number of reduced words of `x`.
pub fn count_reduced_words(x: &AffinePerm, bound: usize) -> Result<u128> {
    let len = x.length();
    if len > bound {
        return Err(Error::BoundExceeded { len, bound });
    }
    fn go(x: &AffinePerm, memo: &mut HashMap<AffinePerm, u128>) -> u128 {
        if x.is_identity() {
            return 1;
        }
        if let Some(&c) = memo.get(x) {
            return c;
        }
        let c = x.right_descents().iter().map(|i| go(&x.right_mul_gen(i), memo)).sum();
        memo.insert(x.clone(), c);
        c
    }
    Ok(go(x, &mut HashMap::new()))
}
