//! k-bounded partitions, (k+1)-cores and the maps between them.
//!
//! Partitions are stored as weakly decreasing part lists, part 0 being the
//! longest row. In the cylinder pictures that row sits at the bottom.

use std::fmt;

use crate::affine_core::{AffinePerm, Rank, Residue};
use crate::error::{Error, Result};
use crate::kcode::{rd, Direction};

fn check_parts(parts: &[usize]) -> Result<Vec<usize>> {
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
    }
    Ok(parts.iter().copied().filter(|&p| p > 0).collect())
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "({})", s.join(","))
}

/// Conjugate partition.
pub fn transpose(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (0..width).map(|c| parts.iter().take_while(|&&p| p > c).count()).collect()
}

/// Hook lengths, row by row.
pub fn hooks(parts: &[usize]) -> Vec<Vec<usize>> {
    let conj = transpose(parts);
    parts
        .iter()
        .enumerate()
        .map(|(r, &p)| (0..p).map(|c| (p - c - 1) + (conj[c] - r - 1) + 1).collect())
        .collect()
}

/// A partition with every part at most k.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundedPartition {
    rank: Rank,
    parts: Vec<usize>,
}

impl BoundedPartition {
    /// Trailing zero parts are dropped.
    pub fn new(rank: Rank, parts: &[usize]) -> Result<BoundedPartition> {
        let parts = check_parts(parts)?;
        if let Some(&p) = parts.first() {
            if p > rank.k() {
                return Err(Error::InvalidPartition(format!("part {p} exceeds k = {}", rank.k())));
            }
        }
        Ok(BoundedPartition { rank, parts })
    }

    pub fn empty(rank: Rank) -> BoundedPartition {
        BoundedPartition { rank, parts: Vec::new() }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column heights.
    pub fn columns(&self) -> Vec<usize> {
        transpose(&self.parts)
    }

    /// The partition with one more part `l`.
    pub fn with_part(&self, l: usize) -> Result<BoundedPartition> {
        let mut parts = self.parts.clone();
        parts.push(l);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        BoundedPartition::new(self.rank, &parts)
    }
}

impl fmt::Display for BoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// A partition with no hook of length k+1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CorePartition {
    rank: Rank,
    parts: Vec<usize>,
}

impl CorePartition {
    pub fn new(rank: Rank, parts: &[usize]) -> Result<CorePartition> {
        let parts = check_parts(parts)?;
        let n = rank.n();
        if hooks(&parts).iter().flatten().any(|&h| h == n) {
            return Err(Error::NotACore);
        }
        Ok(CorePartition { rank, parts })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn transpose(&self) -> CorePartition {
        CorePartition { rank: self.rank, parts: transpose(&self.parts) }
    }
}

impl fmt::Display for CorePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// `outer / inner`, with `inner` padded by zeros to the length of `outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

impl SkewShape {
    pub fn new(outer: &[usize], inner: &[usize]) -> Result<SkewShape> {
        let outer = check_parts(outer)?;
        let mut inner = check_parts(inner)?;
        if inner.len() > outer.len() || inner.iter().zip(&outer).any(|(i, o)| i > o) {
            return Err(Error::NotContained);
        }
        inner.resize(outer.len(), 0);
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        self.outer.iter().zip(&self.inner).map(|(o, i)| o - i).collect()
    }

    pub fn size(&self) -> usize {
        self.row_lengths().iter().sum()
    }

    /// Cells as `(row, column)`, both from 0.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.outer
            .iter()
            .zip(&self.inner)
            .enumerate()
            .flat_map(|(r, (&o, &i))| (i..o).map(move |c| (r, c)))
            .collect()
    }

    /// At most one cell per column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|r| self.outer[r] <= self.inner[r - 1])
    }

    /// At most one cell per row.
    pub fn is_vertical_strip(&self) -> bool {
        self.row_lengths().iter().all(|&l| l <= 1)
    }

    /// Maximal runs of rows whose cells are edge-connected, listed as row
    /// ranges from the last row to the first.
    pub fn components(&self) -> Vec<std::ops::Range<usize>> {
        let rows: Vec<usize> = (0..self.outer.len()).filter(|&r| self.outer[r] > self.inner[r]).collect();
        let mut runs: Vec<std::ops::Range<usize>> = Vec::new();
        for r in rows {
            match runs.last_mut() {
                Some(run) if run.end == r && self.inner[r - 1] < self.outer[r] => run.end = r + 1,
                _ => runs.push(r..r + 1),
            }
        }
        runs.reverse();
        runs
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.outer)?;
        write!(f, "/")?;
        let inner: Vec<usize> = self.inner.iter().copied().filter(|&p| p > 0).collect();
        write_parts(f, &inner)
    }
}

/// The (k+1)-core of a k-bounded partition: rows are filled from the last
/// one upward, each shifted right until its first cell has hook at most k.
pub fn to_core(lambda: &BoundedPartition) -> CorePartition {
    let k = lambda.rank.k();
    let parts = &lambda.parts;
    let mut mu = vec![0; parts.len()];
    for i in (0..parts.len()).rev() {
        let shift = (0..)
            .find(|&s| parts[i] + mu[i + 1..].iter().filter(|&&m| m > s).count() <= k)
            .expect("shift exists");
        mu[i] = parts[i] + shift;
    }
    CorePartition { rank: lambda.rank, parts: mu }
}

/// The k-bounded partition of a core: row lengths of its k-boundary.
pub fn from_core(mu: &CorePartition) -> BoundedPartition {
    let k = mu.rank.k();
    let parts: Vec<usize> = hooks(&mu.parts)
        .iter()
        .map(|row| row.iter().filter(|&&h| h <= k).count())
        .collect();
    BoundedPartition::new(mu.rank, &parts).expect("boundary rows are k-bounded and decreasing")
}

/// Cells of `mu` with hook at most `h`.
pub fn k_boundary(mu: &CorePartition, h: usize) -> SkewShape {
    let inner: Vec<usize> = hooks(&mu.parts)
        .iter()
        .map(|row| row.iter().filter(|&&x| x > h).count())
        .collect();
    SkewShape { outer: mu.parts.clone(), inner }
}

/// The k-bounded partitions of the connected components of the k-boundary,
/// bottom component first.
pub fn split_bounded(mu: &CorePartition) -> Vec<BoundedPartition> {
    let lambda = from_core(mu);
    k_boundary(mu, mu.rank.k())
        .components()
        .into_iter()
        .map(|run| BoundedPartition::new(mu.rank, &lambda.parts[run]).expect("subsequence of a partition"))
        .collect()
}

/// Each connected component of the k-boundary as the core it bounds.
pub fn split_components(mu: &CorePartition) -> Vec<CorePartition> {
    split_bounded(mu).iter().map(to_core).collect()
}

/// Every way of grouping consecutive components into factors. Each factor is
/// given by its k-bounded partition; groupings are listed with the finest
/// first.
pub fn factors(mu: &CorePartition) -> Vec<Vec<BoundedPartition>> {
    let comps = split_bounded(mu);
    let c = comps.len();
    if c == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // bit t of `cuts` set: a factor boundary between component t and t+1
    for cuts in (0..1u64 << (c - 1)).rev() {
        let mut groups = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        for (t, comp) in comps.iter().enumerate() {
            cur.extend_from_slice(comp.parts());
            if t + 1 == c || cuts >> t & 1 == 1 {
                cur.sort_unstable_by(|a, b| b.cmp(a));
                groups.push(BoundedPartition::new(mu.rank, &cur).expect("union of k-bounded parts"));
                cur.clear();
            }
        }
        out.push(groups);
    }
    out
}

/// `λ^(k)`: conjugation carried through the core bijection.
pub fn k_conjugate_partition(lambda: &BoundedPartition) -> BoundedPartition {
    from_core(&to_core(lambda).transpose())
}

/// Dominance order on partitions of equal size.
pub fn dominates(nu: &[usize], lambda: &[usize]) -> Result<bool> {
    let (a, b): (usize, usize) = (nu.iter().sum(), lambda.iter().sum());
    if a != b {
        return Err(Error::SizeMismatch(a, b));
    }
    let len = nu.len().max(lambda.len());
    let (mut sn, mut sl) = (0, 0);
    for i in 0..len {
        sn += nu.get(i).copied().unwrap_or(0);
        sl += lambda.get(i).copied().unwrap_or(0);
        if sn < sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A reduced word for the Grassmannian element `w_λ`.
///
/// Decreasing: cell `(r, c)` gets residue `c - r`; rows are read from the
/// last to the first, each right to left. Increasing: the same reading of
/// the down-justified k-boundary, taken column by column from the right,
/// each column top to bottom.
pub fn grassmannian_word(lambda: &BoundedPartition, direction: Direction) -> Vec<Residue> {
    let rank = lambda.rank;
    let mut word = Vec::with_capacity(lambda.size());
    match direction {
        Direction::Decreasing => {
            for (r, &p) in lambda.parts.iter().enumerate().rev() {
                for c in (0..p).rev() {
                    word.push(rank.residue(c as i64 - r as i64));
                }
            }
        }
        Direction::Increasing => {
            let heights = k_conjugate_partition(lambda).parts;
            for (c, &h) in heights.iter().enumerate().rev() {
                for r in (0..h).rev() {
                    word.push(rank.residue(c as i64 - r as i64));
                }
            }
        }
    }
    word
}

pub fn grassmannian_perm(lambda: &BoundedPartition) -> AffinePerm {
    AffinePerm::from_word(lambda.rank, &grassmannian_word(lambda, Direction::Decreasing))
        .expect("residues are in range")
}

/// For `x` with `D_R(x) ⊆ {0}`, the partition `λ` with `x = w_λ`; its column
/// heights are the first k entries of `RD(x)`.
pub fn grassmannian_partition(x: &AffinePerm) -> Option<BoundedPartition> {
    let k = x.rank().k();
    if x.right_descents().iter().any(|i| i != 0) {
        return None;
    }
    let code = rd(x);
    BoundedPartition::new(x.rank(), &transpose(&code.entries()[..k])).ok()
}

/// Whether `μ^(k)_i + ν_j ≥ k+1` for all parts: the row/column condition
/// under which `μ` and `ν` stack as separate components.
pub fn split_row_column_bound_check(mu_left: &BoundedPartition, nu_right: &BoundedPartition) -> bool {
    let conj = k_conjugate_partition(mu_left);
    match (conj.parts.last(), nu_right.parts.last()) {
        (Some(&a), Some(&b)) => a + b > mu_left.rank.k(),
        _ => true,
    }
}

/// All k-bounded partitions of `size`, in reverse lexicographic order.
pub fn bounded_partitions(rank: Rank, size: usize) -> Vec<BoundedPartition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, rank.k(), &mut Vec::new(), &mut out);
    out.into_iter().map(|parts| BoundedPartition { rank, parts }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(k: usize) -> Rank {
        Rank::new(k).unwrap()
    }

    fn bp(k: usize, p: &[usize]) -> BoundedPartition {
        BoundedPartition::new(rank(k), p).unwrap()
    }

    fn parts(v: &[BoundedPartition]) -> Vec<Vec<usize>> {
        v.iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn cores() {
        assert_eq!(to_core(&bp(3, &[3, 2, 2, 1, 1])).parts(), &[6, 3, 3, 1, 1]);
        assert_eq!(to_core(&bp(4, &[3, 2, 2, 1, 1, 1])).parts(), &[6, 3, 3, 1, 1, 1]);
        assert_eq!(to_core(&bp(2, &[1])).parts(), &[1]);
        let mu = CorePartition::new(rank(4), &[6, 3, 3, 1, 1, 1]).unwrap();
        assert_eq!(from_core(&mu).parts(), &[3, 2, 2, 1, 1, 1]);
        assert_eq!(CorePartition::new(rank(2), &[3]), Err(Error::NotACore));
    }

    #[test]
    fn boundary_components() {
        let mu = CorePartition::new(rank(4), &[6, 3, 3, 1, 1, 1]).unwrap();
        let b = k_boundary(&mu, 4);
        assert_eq!(b, k_boundary(&mu, 5));
        let sizes: Vec<usize> = b.components().iter().map(|r| b.row_lengths()[r.clone()].iter().sum()).collect();
        assert_eq!(sizes, vec![3, 4, 3]);
        assert_eq!(parts(&split_bounded(&mu)), vec![vec![1, 1, 1], vec![2, 2], vec![3]]);
        let cores: Vec<Vec<usize>> = split_components(&mu).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(cores, vec![vec![1, 1, 1], vec![2, 2], vec![3]]);
        let f = factors(&mu);
        assert_eq!(f.len(), 4);
        assert_eq!(parts(&f[0]), vec![vec![1, 1, 1], vec![2, 2], vec![3]]);
        assert_eq!(parts(&f[3]), vec![vec![3, 2, 2, 1, 1, 1]]);

        let small = CorePartition::new(rank(2), &[2]).unwrap();
        assert_eq!(split_components(&small), vec![small.clone()]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(k_conjugate_partition(&bp(3, &[3, 2, 2, 1, 1])).parts(), &[2, 2, 2, 1, 1, 1]);
        assert_eq!(k_conjugate_partition(&bp(5, &[2, 1])).parts(), &[2, 1]);
        assert_eq!(k_conjugate_partition(&bp(1, &[1])).parts(), &[1]);
    }

    #[test]
    fn dominance() {
        assert!(dominates(&[2], &[1, 1]).unwrap());
        assert!(!dominates(&[2, 2], &[3, 1]).unwrap());
        assert!(dominates(&[3, 1], &[2, 2]).unwrap());
        assert_eq!(dominates(&[3], &[1]), Err(Error::SizeMismatch(3, 1)));
    }

    #[test]
    fn grassmannian_words() {
        let l = bp(3, &[3, 2, 2, 1, 1]);
        assert_eq!(grassmannian_word(&l, Direction::Decreasing), vec![0, 1, 3, 2, 0, 3, 2, 1, 0]);
        assert_eq!(grassmannian_word(&l, Direction::Increasing), vec![1, 0, 3, 1, 2, 0, 1, 3, 0]);
        let x = grassmannian_perm(&l);
        let y = AffinePerm::from_word(rank(3), &[1, 0, 3, 1, 2, 0, 1, 3, 0]).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.length(), 9);
        assert_eq!(x.right_descents().to_vec(), vec![0]);
        assert_eq!(grassmannian_partition(&x), Some(l));
        assert_eq!(grassmannian_word(&bp(2, &[1]), Direction::Decreasing), vec![0]);
    }

    #[test]
    fn strips() {
        let s = SkewShape::new(&[3, 1], &[1]).unwrap();
        assert!(s.is_horizontal_strip());
        assert!(!s.is_vertical_strip());
        let s = SkewShape::new(&[1, 1, 1], &[1]).unwrap();
        assert!(!s.is_horizontal_strip());
        assert!(s.is_vertical_strip());
        assert_eq!(SkewShape::new(&[1], &[2]), Err(Error::NotContained));
    }

    #[test]
    fn row_column_bound() {
        // (2,2) at k=4 has 4-conjugate (2,2), so 2 + 3 >= 5
        assert!(split_row_column_bound_check(&bp(4, &[2, 2]), &bp(4, &[3])));
        assert!(!split_row_column_bound_check(&bp(4, &[2, 2]), &bp(4, &[2])));
        assert!(split_row_column_bound_check(&bp(1, &[1]), &bp(1, &[1])));
    }

    #[test]
    fn enumerates_bounded_partitions() {
        assert_eq!(bounded_partitions(rank(2), 4).len(), 3);
        assert_eq!(bounded_partitions(rank(3), 0).len(), 1);
    }
}
