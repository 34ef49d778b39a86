//! Affine permutations of type A with window size `k + 1`.
//!
//! An affine permutation is a bijection `x` of the integers with
//! `x(i + n) = x(i) + n` (where `n = k + 1`) whose window `x(1), ..., x(n)`
//! sums to `n(n + 1)/2`. The generator `s_i` swaps `i` and `i + 1` (mod `n`);
//! a word `[w1, ..., wl]` denotes the product `s_{w1} ... s_{wl}`, and
//! products compose as functions: `(xy)(i) = x(y(i))`.

use std::collections::HashSet;
use std::fmt;

use crate::cyclic::ResidueSet;
use crate::error::{Error, Result};

/// Largest supported rank; residue sets are stored as 64-bit masks.
pub const MAX_RANK: usize = 63;

/// An element of `{0, ..., k}`; arithmetic wraps mod `k + 1`.
pub type Residue = usize;

/// The rank `k` of the affine symmetric group (window size `k + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(usize);

impl Rank {
    pub fn new(k: usize) -> Result<Rank> {
        if k == 0 || k > MAX_RANK {
            return Err(Error::BadRank { k, max: MAX_RANK });
        }
        Ok(Rank(k))
    }

    #[inline]
    pub fn k(self) -> usize {
        self.0
    }

    /// Window size `k + 1`.
    #[inline]
    pub fn n(self) -> usize {
        self.0 + 1
    }

    /// Canonical representative of `r` mod `k + 1`.
    #[inline]
    pub fn residue(self, r: i64) -> Residue {
        r.rem_euclid(self.n() as i64) as Residue
    }

    pub fn check_residue(self, r: usize) -> Result<Residue> {
        if r > self.0 {
            Err(Error::BadResidue { letter: r, n: self.n() })
        } else {
            Ok(r)
        }
    }

    pub fn check_word(self, word: &[usize]) -> Result<()> {
        word.iter().try_for_each(|&r| self.check_residue(r).map(drop))
    }

    pub(crate) fn same(self, other: Rank) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.0, other.0))
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An affine permutation, stored by its window `[x(1), ..., x(k+1)]`.
///
/// Ordering compares rank first, then windows lexicographically, which gives
/// sums of permutations a deterministic iteration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePerm {
    rank: Rank,
    window: Vec<i64>,
}

impl AffinePerm {
    pub fn identity(rank: Rank) -> AffinePerm {
        AffinePerm {
            rank,
            window: (1..=rank.n() as i64).collect(),
        }
    }

    /// The simple reflection `s_i`.
    pub fn generator(rank: Rank, i: Residue) -> Result<AffinePerm> {
        let i = rank.check_residue(i)?;
        Ok(AffinePerm::identity(rank).right_mul_gen(i))
    }

    pub fn from_window(rank: Rank, window: &[i64]) -> Result<AffinePerm> {
        let n = rank.n();
        if window.len() != n {
            return Err(Error::WrongLength {
                expected: n,
                got: window.len(),
            });
        }
        let expected = (n * (n + 1) / 2) as i64;
        let got: i64 = window.iter().sum();
        if got != expected {
            return Err(Error::BadSum { expected, got });
        }
        let mut seen = vec![usize::MAX; n];
        for (pos, &v) in window.iter().enumerate() {
            let r = rank.residue(v);
            if seen[r] != usize::MAX {
                return Err(Error::RepeatedResidueClass(seen[r] + 1, pos + 1));
            }
            seen[r] = pos;
        }
        Ok(AffinePerm {
            rank,
            window: window.to_vec(),
        })
    }

    /// The product `s_{w1} ... s_{wl}`; defined for every word, reduced or not.
    pub fn from_word(rank: Rank, word: &[usize]) -> Result<AffinePerm> {
        rank.check_word(word)?;
        Ok(word
            .iter()
            .fold(AffinePerm::identity(rank), |x, &i| x.right_mul_gen(i)))
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.rank
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.rank.k()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rank.n()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().zip(1..).all(|(&v, i)| v == i)
    }

    /// `x(i)` for any integer `i`, via the periodic extension.
    #[inline]
    pub fn value_at(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let q = (i - 1).div_euclid(n);
        let r = (i - 1).rem_euclid(n);
        self.window[r as usize] + q * n
    }

    /// `x^{-1}(v)` for any integer `v`.
    pub fn position_of(&self, v: i64) -> i64 {
        let n = self.n() as i64;
        let (pos, &w) = self
            .window
            .iter()
            .enumerate()
            .find(|(_, &w)| (w - v).rem_euclid(n) == 0)
            .expect("window covers every residue class");
        pos as i64 + 1 + (v - w)
    }

    /// The group product `self · other`.
    pub fn compose(&self, other: &AffinePerm) -> Result<AffinePerm> {
        self.rank.same(other.rank)?;
        let window = (1..=self.n() as i64)
            .map(|i| self.value_at(other.value_at(i)))
            .collect();
        Ok(AffinePerm {
            rank: self.rank,
            window,
        })
    }

    /// `x · s_i`: swaps positions `i` and `i + 1`.
    pub fn right_mul_gen(&self, i: Residue) -> AffinePerm {
        let n = self.n();
        let mut window = self.window.clone();
        if i == 0 {
            let (first, last) = (window[0], window[n - 1]);
            window[0] = last - n as i64;
            window[n - 1] = first + n as i64;
        } else {
            window.swap(i - 1, i);
        }
        AffinePerm {
            rank: self.rank,
            window,
        }
    }

    /// `s_i · x`: swaps the values `i` and `i + 1`.
    pub fn left_mul_gen(&self, i: Residue) -> AffinePerm {
        let rank = self.rank;
        let window = self
            .window
            .iter()
            .map(|&v| match rank.residue(v) {
                r if r == i => v + 1,
                r if r == (i + 1) % rank.n() => v - 1,
                _ => v,
            })
            .collect();
        AffinePerm { rank, window }
    }

    /// Right-multiplies by each letter of `word` in turn.
    pub fn right_mul_word(&self, word: &[usize]) -> AffinePerm {
        word.iter()
            .fold(self.clone(), |x, &i| x.right_mul_gen(i))
    }

    /// Left-multiplies by the product of `word`.
    pub fn left_mul_word(&self, word: &[usize]) -> AffinePerm {
        word.iter()
            .rev()
            .fold(self.clone(), |x, &i| x.left_mul_gen(i))
    }

    pub fn inverse(&self) -> AffinePerm {
        let n = self.n() as i64;
        let mut window = vec![0; self.n()];
        for (i, &v) in (1..).zip(&self.window) {
            let q = (v - 1).div_euclid(n);
            let r = (v - 1).rem_euclid(n);
            window[r as usize] = i - q * n;
        }
        AffinePerm {
            rank: self.rank,
            window,
        }
    }

    /// Coxeter length: the number of inversions `(i, j)` with `1 <= i <= k+1`,
    /// `i < j` and `x(i) > x(j)`.
    pub fn length(&self) -> usize {
        (1..=self.n() as i64)
            .map(|p| count_right_smaller(self, p))
            .sum()
    }

    #[inline]
    pub fn is_right_descent(&self, i: Residue) -> bool {
        let i = i as i64;
        self.value_at(i) > self.value_at(i + 1)
    }

    #[inline]
    pub fn is_left_descent(&self, i: Residue) -> bool {
        let i = i as i64;
        self.position_of(i) > self.position_of(i + 1)
    }

    pub fn right_descents(&self) -> ResidueSet {
        ResidueSet::from_fn(self.rank, |i| self.is_right_descent(i))
    }

    pub fn left_descents(&self) -> ResidueSet {
        ResidueSet::from_fn(self.rank, |i| self.is_left_descent(i))
    }

    /// A reduced word, found by repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self) -> Vec<Residue> {
        let mut x = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.n()).find(|&i| x.is_right_descent(i)) {
            word.push(i);
            x = x.right_mul_gen(i);
        }
        word.reverse();
        word
    }

    /// The Dynkin rotation `Ψ^m`, sending `s_i` to `s_{i+m}`:
    /// `Ψ^m(x)(j) = x(j - m) + m`.
    pub fn dynkin_rotate(&self, m: i64) -> AffinePerm {
        let window = (1..=self.n() as i64)
            .map(|j| self.value_at(j - m) + m)
            .collect();
        AffinePerm {
            rank: self.rank,
            window,
        }
    }

    /// The diagram reflection sending `s_i` to `s_{-i}`:
    /// `x ↦ (j ↦ 1 - x(1 - j))`.
    pub fn reflect(&self) -> AffinePerm {
        let window = (1..=self.n() as i64)
            .map(|j| 1 - self.value_at(1 - j))
            .collect();
        AffinePerm {
            rank: self.rank,
            window,
        }
    }

    /// `x · s_i` if it is longer than `x`, otherwise `None` (`a_i` kills it).
    #[inline]
    pub fn nil_right_gen(&self, i: Residue) -> Option<AffinePerm> {
        (!self.is_right_descent(i)).then(|| self.right_mul_gen(i))
    }

    /// `s_i · x` if it is longer than `x`, otherwise `None`.
    #[inline]
    pub fn nil_left_gen(&self, i: Residue) -> Option<AffinePerm> {
        (!self.is_left_descent(i)).then(|| self.left_mul_gen(i))
    }

    /// Right-multiplies by `word` in the nil-Coxeter monoid.
    pub fn nil_right_word(&self, word: &[usize]) -> Option<AffinePerm> {
        word.iter()
            .try_fold(self.clone(), |x, &i| x.nil_right_gen(i))
    }

    /// Left-multiplies by the product of `word` in the nil-Coxeter monoid.
    pub fn nil_left_word(&self, word: &[usize]) -> Option<AffinePerm> {
        word.iter()
            .rev()
            .try_fold(self.clone(), |x, &i| x.nil_left_gen(i))
    }

    /// The nil-Coxeter product: `self · other` when lengths add, else `None`.
    pub fn nil_product(&self, other: &AffinePerm) -> Result<Option<AffinePerm>> {
        self.rank.same(other.rank)?;
        Ok(self.nil_right_word(&other.reduced_word()))
    }
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// `true` iff the word is a reduced expression.
pub fn is_reduced(rank: Rank, word: &[usize]) -> Result<bool> {
    Ok(first_unreduced(rank, word)?.is_none())
}

/// Index of the first letter at which the running product stops growing.
pub fn first_unreduced(rank: Rank, word: &[usize]) -> Result<Option<usize>> {
    rank.check_word(word)?;
    let mut x = AffinePerm::identity(rank);
    for (pos, &i) in word.iter().enumerate() {
        match x.nil_right_gen(i) {
            Some(y) => x = y,
            None => return Ok(Some(pos)),
        }
    }
    Ok(None)
}

/// Every element of length at most `max_len`, grouped by length.
pub fn elements_by_length(rank: Rank, max_len: usize) -> Vec<Vec<AffinePerm>> {
    let mut levels = vec![vec![AffinePerm::identity(rank)]];
    for _ in 0..max_len {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for x in levels.last().unwrap() {
            for i in 0..rank.n() {
                if let Some(y) = x.nil_right_gen(i) {
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
        }
        next.sort();
        levels.push(next);
    }
    levels
}

/// `#{j < p : x(j) > x(p)}`.
pub(crate) fn count_left_greater(x: &AffinePerm, p: i64) -> usize {
    let n = x.n() as i64;
    let xp = x.value_at(p);
    (1..=n)
        .map(|r| {
            // j = r + m n with j < p and x(r) + m n > x(p)
            let hi = ceil_div(p - r, n) - 1;
            let lo = (xp - x.value_at(r)).div_euclid(n) + 1;
            (hi - lo + 1).max(0) as usize
        })
        .sum()
}

/// `#{j > p : x(j) < x(p)}`.
pub(crate) fn count_right_smaller(x: &AffinePerm, p: i64) -> usize {
    let n = x.n() as i64;
    let xp = x.value_at(p);
    (1..=n)
        .map(|r| {
            // j = r + m n with j > p and x(r) + m n < x(p)
            let lo = (p - r).div_euclid(n) + 1;
            let hi = ceil_div(xp - x.value_at(r), n) - 1;
            (hi - lo + 1).max(0) as usize
        })
        .sum()
}

#[inline]
fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}
