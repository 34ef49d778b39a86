//! Brute-force reference implementations, written directly from the
//! definitions and sharing no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

/// A window `x(1..=n)` of an affine permutation with `n = k + 1`.
pub type Win = Vec<i64>;

pub fn identity(n: usize) -> Win {
    (1..=n as i64).collect()
}

pub fn value(w: &Win, i: i64) -> i64 {
    let n = w.len() as i64;
    let r = (i - 1).rem_euclid(n);
    w[r as usize] + (i - 1 - r)
}

/// `x s_i`: exchanges the values at positions `i` and `i + 1`.
pub fn right_gen(w: &Win, i: usize) -> Win {
    let n = w.len() as i64;
    let (a, b) = (value(w, i as i64), value(w, i as i64 + 1));
    (1..=n)
        .map(|p| {
            if (p - i as i64).rem_euclid(n) == 0 {
                b + (p - i as i64)
            } else if (p - i as i64 - 1).rem_euclid(n) == 0 {
                a + (p - i as i64 - 1)
            } else {
                value(w, p)
            }
        })
        .collect()
}

/// Shi's inversion formula.
pub fn length(w: &Win) -> usize {
    let n = w.len() as i64;
    let mut l = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            l += (w[j] - w[i]).div_euclid(n).unsigned_abs() as usize;
        }
    }
    l
}

pub fn is_descent(w: &Win, i: usize) -> bool {
    value(w, i as i64) > value(w, i as i64 + 1)
}

pub fn descents(w: &Win) -> Vec<usize> {
    (0..w.len()).filter(|&i| is_descent(w, i)).collect()
}

/// Product of a word, `None` when it is not reduced.
pub fn word_product(n: usize, word: &[usize]) -> Option<Win> {
    let mut w = identity(n);
    for &i in word {
        if is_descent(&w, i) {
            return None;
        }
        w = right_gen(&w, i);
    }
    Some(w)
}

/// All elements by length, each level sorted.
pub fn bfs(n: usize, max_len: usize) -> Vec<Vec<Win>> {
    let mut levels = vec![vec![identity(n)]];
    for _ in 0..max_len {
        let mut next = HashSet::new();
        for w in levels.last().unwrap() {
            for i in 0..n {
                if !is_descent(w, i) {
                    next.insert(right_gen(w, i));
                }
            }
        }
        let mut next: Vec<Win> = next.into_iter().collect();
        next.sort();
        levels.push(next);
    }
    levels
}

pub fn reduced_words(w: &Win) -> Vec<Vec<usize>> {
    if length(w) == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in descents(w) {
        for mut v in reduced_words(&right_gen(w, i)) {
            v.push(i);
            out.push(v);
        }
    }
    out
}

pub fn inverse(w: &Win) -> Win {
    let n = w.len() as i64;
    let mut out = vec![0; w.len()];
    for p in 1..=n {
        let v = w[p as usize - 1];
        let r = (v - 1).rem_euclid(n);
        out[r as usize] = p - (v - 1 - r);
    }
    out
}

/// Inversion counts: `#{j < p : x(j) > x(p)}` and `#{j > p : x(j) < x(p)}`.
pub fn left_greater(w: &Win, p: i64) -> usize {
    let n = w.len() as i64;
    let v = value(w, p);
    (1..=n)
        .map(|j| {
            // j' ≡ j with j' < p and x(j') > v
            let mut c = 0;
            let mut jj = j - n * ((j - p).div_euclid(n) + 1);
            while value(w, jj) > v {
                c += 1;
                jj -= n;
            }
            c
        })
        .sum()
}

pub fn right_smaller(w: &Win, p: i64) -> usize {
    let n = w.len() as i64;
    let v = value(w, p);
    (1..=n)
        .map(|j| {
            let mut c = 0;
            let mut jj = j + n * ((p - j).div_euclid(n) + 1);
            while value(w, jj) < v {
                c += 1;
                jj += n;
            }
            c
        })
        .sum()
}

/// Position `p` with `x(p) = v`.
pub fn position(w: &Win, v: i64) -> i64 {
    value(&inverse(w), v)
}

/// `d_A` as a word: cut at a residue outside `A` and read downwards.
pub fn d_word(n: usize, a: &[usize]) -> Vec<usize> {
    let missing = (0..n).find(|r| !a.contains(r)).unwrap();
    (1..n)
        .map(|t| (missing + n - t) % n)
        .filter(|r| a.contains(r))
        .collect()
}

pub fn u_word(n: usize, a: &[usize]) -> Vec<usize> {
    let mut w = d_word(n, a);
    w.reverse();
    w
}

pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..n).filter(|r| m >> r & 1 == 1).collect())
        .collect()
}

/// Sparse sums keyed by window.
pub type Sum = BTreeMap<Win, i64>;

pub fn mul(n: usize, f: &Sum, g: &Sum) -> Sum {
    let mut out = Sum::new();
    for (x, a) in f {
        for (y, b) in g {
            let wx = reduced_words(x).remove(0);
            let wy = reduced_words(y).remove(0);
            let word: Vec<usize> = wx.into_iter().chain(wy).collect();
            if let Some(z) = word_product(n, &word) {
                *out.entry(z).or_default() += a * b;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn h(n: usize, i: usize) -> Sum {
    subsets(n, i)
        .iter()
        .map(|a| (word_product(n, &d_word(n, a)).unwrap(), 1))
        .collect()
}

pub fn e(n: usize, i: usize) -> Sum {
    subsets(n, i)
        .iter()
        .map(|a| (word_product(n, &u_word(n, a)).unwrap(), 1))
        .collect()
}

/// Number of ways to write `x` as `d_{A_1} ... d_{A_m}` with `|A_t| = parts[t]`.
pub fn h_coefficient(n: usize, x: &Win, parts: &[usize]) -> u64 {
    let Some((&first, rest)) = parts.split_first() else {
        return u64::from(length(x) == 0);
    };
    let lx = length(x);
    let mut total = 0;
    for a in subsets(n, first) {
        // strip d_A from the left: x = d_A y
        let w = d_word(n, &a);
        let mut y = inverse(x);
        let mut ok = true;
        for &i in &w {
            if !is_descent(&y, i) {
                ok = false;
                break;
            }
            y = right_gen(&y, i);
        }
        if ok {
            let y = inverse(&y);
            debug_assert_eq!(length(&y) + first, lx);
            total += h_coefficient(n, &y, rest);
        }
    }
    total
}

pub fn conj(parts: &[usize]) -> Vec<usize> {
    let w = parts.first().copied().unwrap_or(0);
    (0..w).map(|c| parts.iter().filter(|&&p| p > c).count()).collect()
}

pub fn hook_rows(parts: &[usize]) -> Vec<Vec<usize>> {
    let cj = conj(parts);
    parts
        .iter()
        .enumerate()
        .map(|(r, &p)| (0..p).map(|c| p - c + cj[c] - r - 1).collect())
        .collect()
}

/// The core obtained by letting the word act on the empty partition, the
/// rightmost letter first: `s_i` adds every addable cell of content `≡ i`.
pub fn core_of_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut parts: Vec<usize> = Vec::new();
    for &i in word.iter().rev() {
        let mut next = parts.clone();
        next.push(0);
        for r in 0..next.len() {
            let c = parts.get(r).copied().unwrap_or(0);
            let room = r == 0 || parts[r - 1] > c;
            if room && (c as i64 - r as i64).rem_euclid(n as i64) == i as i64 {
                next[r] = c + 1;
            }
        }
        while next.last() == Some(&0) {
            next.pop();
        }
        parts = next;
    }
    parts
}

/// Row lengths of the cells with hook at most `k`.
pub fn boundary_rows(core: &[usize], k: usize) -> Vec<usize> {
    let mut rows: Vec<usize> = hook_rows(core)
        .iter()
        .map(|r| r.iter().filter(|&&h| h <= k).count())
        .collect();
    while rows.last() == Some(&0) {
        rows.pop();
    }
    rows
}
