//! k-codes: canonical forms of affine permutations.
//!
//! Every affine permutation has a unique lexicographically maximal
//! factorization into cyclically decreasing elements `x = d_{A_n} ... d_{A_1}`.
//! Stacking the rows `A_1, A_2, ...` as a filling of `k + 1` top-justified
//! columns gives a weak composition with at least one zero part, the k-code.
//! The same construction with increasing factors, or peeling from the left,
//! gives the four codes `RD`, `RI`, `LD` and `LI`.

use std::fmt;

use crate::affine_core::{count_left_greater, count_right_smaller, AffinePerm, Rank, Residue};
use crate::cyclic::ResidueSet;
use crate::error::{Error, Result};

/// A weak composition `(α_0, ..., α_k)` with at least one zero entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KCode {
    rank: Rank,
    entries: Vec<usize>,
}

impl KCode {
    pub fn new(rank: Rank, entries: Vec<usize>) -> Result<KCode> {
        if entries.len() != rank.n() {
            return Err(Error::InvalidKCode(format!(
                "expected {} entries, got {}",
                rank.n(),
                entries.len()
            )));
        }
        if !entries.contains(&0) {
            return Err(Error::InvalidKCode("no zero entry".into()));
        }
        Ok(KCode { rank, entries })
    }

    pub fn zero(rank: Rank) -> KCode {
        KCode {
            rank,
            entries: vec![0; rank.n()],
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Number of boxes, which equals the length of the permutation.
    pub fn size(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Number of rows in the filling.
    pub fn height(&self) -> usize {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// `(α_0, α_{-1}, ..., α_{-k})`, the code read backwards around the circle.
    pub fn reflect(&self) -> KCode {
        let n = self.rank.n();
        KCode {
            rank: self.rank,
            entries: (0..n).map(|i| self.entries[(n - i) % n]).collect(),
        }
    }
}

impl fmt::Display for KCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Decreasing,
    Increasing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

/// A product of cyclic elements.
///
/// `rows[0]` is the factor on the chosen side: for `Side::Right` the element
/// is `c_{A_n} ... c_{A_1}`, for `Side::Left` it is `c_{A_1} ... c_{A_n}`,
/// where `c` is `d` or `u` according to the direction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicDecomposition {
    rank: Rank,
    rows: Vec<ResidueSet>,
    direction: Direction,
    side: Side,
}

impl CyclicDecomposition {
    pub fn new(
        rank: Rank,
        rows: Vec<ResidueSet>,
        direction: Direction,
        side: Side,
    ) -> Result<CyclicDecomposition> {
        for r in &rows {
            rank.same(r.rank())?;
            if r.is_empty() || !r.is_proper() {
                return Err(Error::ImproperSet);
            }
        }
        Ok(CyclicDecomposition {
            rank,
            rows,
            direction,
            side,
        })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn rows(&self) -> &[ResidueSet] {
        &self.rows
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(ResidueSet::len).collect()
    }

    fn factor_word(&self, row: &ResidueSet) -> Vec<Residue> {
        match self.direction {
            Direction::Decreasing => row.d_word(),
            Direction::Increasing => row.u_word(),
        }
        .expect("rows are proper")
    }

    /// The word of the product, left to right.
    pub fn word(&self) -> Vec<Residue> {
        let mut factors: Vec<&ResidueSet> = self.rows.iter().collect();
        if self.side == Side::Right {
            factors.reverse();
        }
        factors.into_iter().flat_map(|r| self.factor_word(r)).collect()
    }

    /// The product in the nil-Coxeter monoid, `None` if it vanishes.
    pub fn element(&self) -> Option<AffinePerm> {
        AffinePerm::identity(self.rank).nil_right_word(&self.word())
    }

    /// Whether consecutive rows satisfy the shifted containment that
    /// characterizes maximal decompositions; `Err(row)` names the first row
    /// that breaks it.
    pub fn check_maximal(&self) -> std::result::Result<(), usize> {
        let shift = row_shift(self.direction, self.side);
        for (t, pair) in self.rows.windows(2).enumerate() {
            if !pair[1].is_subset(&pair[0].shift(shift)) {
                return Err(t + 2);
            }
        }
        Ok(())
    }

    pub fn is_maximal(&self) -> bool {
        self.check_maximal().is_ok()
    }
}

impl fmt::Display for CyclicDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.direction {
            Direction::Decreasing => "d",
            Direction::Increasing => "u",
        };
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{tag}{r}")?;
        }
        Ok(())
    }
}

/// `A_{t+1} ⊆ A_t + shift` in a maximal decomposition.
fn row_shift(direction: Direction, side: Side) -> i64 {
    match (direction, side) {
        (Direction::Decreasing, Side::Right) | (Direction::Increasing, Side::Left) => -1,
        (Direction::Increasing, Side::Right) | (Direction::Decreasing, Side::Left) => 1,
    }
}

/// Residue of the cell in column `i`, row `j` (rows counted from 1).
///
/// Right-decreasing and left-increasing fillings use `i - j + 1`; the other
/// two use `i + j - 1`. Row 1 of column `i` always carries residue `i`.
pub fn filling_residue(rank: Rank, i: Residue, j: usize, direction: Direction, side: Side) -> Residue {
    let s = row_shift(direction, side);
    rank.residue(i as i64 + s * (j as i64 - 1))
}

/// The k-code of a maximal decomposition.
pub fn code_of(decomp: &CyclicDecomposition) -> Result<KCode> {
    decomp.check_maximal().map_err(Error::NotMaximal)?;
    let rank = decomp.rank;
    let entries = (0..rank.n())
        .map(|i| {
            decomp
                .rows
                .iter()
                .enumerate()
                .filter(|(j, row)| {
                    row.contains(filling_residue(rank, i, j + 1, decomp.direction, decomp.side))
                })
                .count()
        })
        .collect();
    KCode::new(rank, entries)
}

/// Rows of the filling of `code`, in the given convention.
pub fn code_to_decomposition(code: &KCode, direction: Direction, side: Side) -> CyclicDecomposition {
    let rank = code.rank;
    let rows = (1..=code.height())
        .map(|j| {
            ResidueSet::from_fn(rank, |r| {
                (0..rank.n()).any(|i| {
                    code.entries[i] >= j && filling_residue(rank, i, j, direction, side) == r
                })
            })
        })
        .collect();
    CyclicDecomposition {
        rank,
        rows,
        direction,
        side,
    }
}

/// The unique permutation whose right-decreasing code is `code`.
pub fn code_to_permutation(code: &KCode) -> AffinePerm {
    let decomp = code_to_decomposition(code, Direction::Decreasing, Side::Right);
    AffinePerm::identity(code.rank).right_mul_word(&decomp.word())
}

/// Reading word of the filling: rows top to bottom, each read right to left
/// in the flattening cut at the smallest empty column.
pub fn reading_word(code: &KCode) -> Vec<Residue> {
    let cut = code.entries.iter().position(|&a| a == 0).unwrap();
    reading_word_at(code, cut)
}

/// Reading word of the flattening that places column `cut` at the far right,
/// i.e. lists columns `cut, cut - 1, ..., cut + 1` when read right to left.
///
/// Any two cuts at empty columns give words related by commutations.
pub fn reading_word_at(code: &KCode, cut: Residue) -> Vec<Residue> {
    let rank = code.rank;
    let n = rank.n();
    let mut word = Vec::with_capacity(code.size());
    for j in (1..=code.height()).rev() {
        for t in 0..n {
            let i = (cut + n - t) % n;
            if code.entries[i] >= j {
                word.push(filling_residue(rank, i, j, Direction::Decreasing, Side::Right));
            }
        }
    }
    word
}

/// `{i : α_{i-1} < α_i}`, indices read cyclically.
pub fn code_descents(code: &KCode) -> ResidueSet {
    let n = code.rank.n();
    let a = &code.entries;
    ResidueSet::from_fn(code.rank, |i| a[(i + n - 1) % n] < a[i])
}

/// The unique maximal `A` with `x = y · d_A` reduced.
///
/// Each right descent `i` starts a run `i, i+1, ...` that can be peeled off
/// while it stays a descent; the union of those runs is the answer.
pub fn max_right_set(x: &AffinePerm) -> Result<ResidueSet> {
    if x.is_identity() {
        return Err(Error::IdentityInput);
    }
    let rank = x.rank();
    let n = rank.n();
    let mut out = ResidueSet::empty(rank);
    for i in x.right_descents().iter() {
        let (mut y, mut j, mut run) = (x.clone(), i, 0);
        while run < rank.k() && y.is_right_descent(j) {
            out = out.with(j);
            y = y.right_mul_gen(j);
            j = (j + 1) % n;
            run += 1;
        }
    }
    Ok(out)
}

/// The unique maximal `A` with `x = d_A · y` reduced.
pub fn max_left_set(x: &AffinePerm) -> Result<ResidueSet> {
    if x.is_identity() {
        return Err(Error::IdentityInput);
    }
    let rank = x.rank();
    let n = rank.n();
    let mut out = ResidueSet::empty(rank);
    for j in x.left_descents().iter() {
        let (mut y, mut i, mut run) = (x.clone(), j, 0);
        while run < rank.k() && y.is_left_descent(i) {
            out = out.with(i);
            y = y.left_mul_gen(i);
            i = (i + n - 1) % n;
            run += 1;
        }
    }
    Ok(out)
}

fn decreasing_rows(x: &AffinePerm, side: Side) -> Vec<ResidueSet> {
    let mut rows = Vec::new();
    let mut y = x.clone();
    while !y.is_identity() {
        let (a, strip) = match side {
            Side::Right => {
                let a = max_right_set(&y).unwrap();
                let inv: Vec<_> = a.d_word().unwrap().into_iter().rev().collect();
                (a, y.right_mul_word(&inv))
            }
            Side::Left => {
                let a = max_left_set(&y).unwrap();
                let inv: Vec<_> = a.d_word().unwrap().into_iter().rev().collect();
                (a, y.left_mul_word(&inv))
            }
        };
        rows.push(a);
        y = strip;
    }
    rows
}

/// The maximal decomposition of `x` in the requested direction and side.
///
/// Increasing forms come from the decreasing forms of `x⁻¹`: inverting
/// `d_{A_n} ... d_{A_1}` gives `u_{A_1} ... u_{A_n}`.
pub fn canonical_decomposition(x: &AffinePerm, direction: Direction, side: Side) -> CyclicDecomposition {
    let rows = match (direction, side) {
        (Direction::Decreasing, s) => decreasing_rows(x, s),
        (Direction::Increasing, Side::Right) => decreasing_rows(&x.inverse(), Side::Left),
        (Direction::Increasing, Side::Left) => decreasing_rows(&x.inverse(), Side::Right),
    };
    CyclicDecomposition {
        rank: x.rank(),
        rows,
        direction,
        side,
    }
}

fn code_for(x: &AffinePerm, direction: Direction, side: Side) -> KCode {
    code_of(&canonical_decomposition(x, direction, side)).expect("canonical decompositions are maximal")
}

pub fn rd(x: &AffinePerm) -> KCode {
    code_for(x, Direction::Decreasing, Side::Right)
}

pub fn ri(x: &AffinePerm) -> KCode {
    code_for(x, Direction::Increasing, Side::Right)
}

pub fn ld(x: &AffinePerm) -> KCode {
    code_for(x, Direction::Decreasing, Side::Left)
}

pub fn li(x: &AffinePerm) -> KCode {
    code_for(x, Direction::Increasing, Side::Left)
}

/// Inversion-count codes computed directly from the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AffineCodeVariant {
    /// `#{j < i+1 : x(j) > x(i+1)}`
    Crd,
    /// `#{j > i : x(j) < x(i)}`
    Cri,
    /// `#{j < x⁻¹(i) : x(j) > i}`
    Cld,
    /// `#{j > x⁻¹(i+1) : x(j) < i+1}`
    Cli,
}

pub fn affine_code(x: &AffinePerm, variant: AffineCodeVariant) -> KCode {
    let entries = (0..x.n() as i64)
        .map(|i| match variant {
            AffineCodeVariant::Crd => count_left_greater(x, i + 1),
            AffineCodeVariant::Cri => count_right_smaller(x, i),
            AffineCodeVariant::Cld => count_left_greater(x, x.position_of(i)),
            AffineCodeVariant::Cli => count_right_smaller(x, x.position_of(i + 1)),
        })
        .collect();
    KCode::new(x.rank(), entries).expect("inversion codes have a zero entry")
}

/// A pair of k-codes `α ⊆ β`, compared entrywise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewKCode {
    outer: KCode,
    inner: KCode,
}

impl SkewKCode {
    pub fn new(outer: KCode, inner: KCode) -> Result<SkewKCode> {
        outer.rank.same(inner.rank)?;
        if outer.entries.iter().zip(&inner.entries).any(|(b, a)| a > b) {
            return Err(Error::NotContained);
        }
        Ok(SkewKCode { outer, inner })
    }

    pub fn outer(&self) -> &KCode {
        &self.outer
    }

    pub fn inner(&self) -> &KCode {
        &self.inner
    }

    /// At most one box in each column.
    pub fn is_horizontal_strip(&self) -> bool {
        self.outer
            .entries
            .iter()
            .zip(&self.inner.entries)
            .all(|(b, a)| b - a <= 1)
    }

    /// At most one box in each row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.outer.height()).all(|r| {
            self.outer
                .entries
                .iter()
                .zip(&self.inner.entries)
                .filter(|&(&b, &a)| a < r && r <= b)
                .count()
                <= 1
        })
    }
}

/// Rewrites `d_B d_A` as `d_{B'} d_{A'}` with `B' ⊆ A' - 1`, returning
/// `(B', A')`, or `None` when the product vanishes.
///
/// A column `c` is unbalanced when `c - 1 ∈ B` but `c ∉ A`. While one exists,
/// one of three moves applies:
/// - commutation: the bottom `i` of a component of `B` with `i, i+1 ∉ A`
///   slides down into `A`;
/// - chute: a component `[c_i, c_j]` of `A` sitting inside a component of `B`
///   that starts at `c_i - 1` trades `c_j` in `B` for `c_i - 1` in `A`;
/// - zero: a component `[p, q]` of `B` with `p` in a component `[c_i, c_j]`
///   of `A` and `c_j ∈ [p, q]` kills the product.
pub fn two_row_maximize(b: &ResidueSet, a: &ResidueSet) -> Result<Option<(ResidueSet, ResidueSet)>> {
    a.rank().same(b.rank())?;
    let rank = a.rank();
    let n = rank.n();
    let (mut b, mut a) = (*b, *a);
    let in_interval = |r: Residue, (p, q): (Residue, Residue)| (r + n - p) % n <= (q + n - p) % n;
    loop {
        let unbalanced = (0..n).any(|c| b.contains((c + n - 1) % n) && !a.contains(c));
        if !unbalanced {
            return Ok(Some((b, a)));
        }
        let b_comps = b.components()?;
        let a_comps = a.components()?;

        if let Some(&(i, _)) = b_comps
            .iter()
            .find(|&&(i, _)| !a.contains(i) && !a.contains((i + 1) % n))
        {
            b = b.without(i);
            a = a.with(i);
            continue;
        }

        let chute = a_comps.iter().find_map(|&(ci, cj)| {
            b_comps
                .iter()
                .find(|&&(p, q)| {
                    p == (ci + n - 1) % n && in_interval(ci, (p, q)) && in_interval(cj, (p, q))
                })
                .map(|&(p, _)| (p, cj))
        });
        if let Some((p, cj)) = chute {
            b = b.without(cj);
            a = a.with(p);
            continue;
        }

        let zero = a_comps.iter().any(|&(ci, cj)| {
            b_comps
                .iter()
                .any(|&(p, q)| in_interval(p, (ci, cj)) && in_interval(cj, (p, q)))
        });
        if zero {
            return Ok(None);
        }

        // No move applies; fall back to the canonical decomposition of the
        // product itself.
        let word: Vec<_> = b.d_word()?.into_iter().chain(a.d_word()?).collect();
        let Some(x) = AffinePerm::identity(rank).nil_right_word(&word) else {
            return Ok(None);
        };
        let rows = canonical_decomposition(&x, Direction::Decreasing, Side::Right).rows;
        let get = |t: usize| rows.get(t).copied().unwrap_or(ResidueSet::empty(rank));
        return Ok(Some((get(1), get(0))));
    }
}

/// The k-conjugate of an affine permutation: the element whose
/// right-decreasing code is the reflected right-increasing code of `x`.
///
/// This is an involution preserving length, and on Grassmannian elements it
/// realizes conjugation of k-bounded partitions. It coincides with the
/// diagram reflection `s_i ↦ s_{-i}`.
pub fn k_conjugate_perm(x: &AffinePerm) -> AffinePerm {
    code_to_permutation(&ri(x).reflect())
}

/// A matching `σ` with `LD(x)_i = RD(x)_{σ(i)}`, pairing equal entries in
/// increasing index order.
pub fn rd_ld_matching(x: &AffinePerm) -> Vec<usize> {
    let (r, l) = (rd(x), ld(x));
    let mut used = vec![false; r.entries.len()];
    l.entries
        .iter()
        .map(|&v| {
            let t = (0..used.len())
                .find(|&t| !used[t] && r.entries[t] == v)
                .expect("RD and LD have the same entries");
            used[t] = true;
            t
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(k: usize) -> Rank {
        Rank::new(k).unwrap()
    }

    fn set(k: usize, v: &[usize]) -> ResidueSet {
        ResidueSet::new(rank(k), v.iter().copied()).unwrap()
    }

    fn code(k: usize, v: &[usize]) -> KCode {
        KCode::new(rank(k), v.to_vec()).unwrap()
    }

    const EX35: [usize; 15] = [2, 1, 0, 3, 0, 1, 2, 1, 0, 3, 1, 2, 0, 1, 0];

    #[test]
    fn four_codes_of_worked_example() {
        let x = AffinePerm::from_word(rank(3), &EX35).unwrap();
        assert_eq!(rd(&x), code(3, &[3, 8, 4, 0]));
        assert_eq!(ri(&x), code(3, &[11, 3, 0, 1]));
        assert_eq!(ld(&x), code(3, &[4, 3, 8, 0]));
        assert_eq!(li(&x), code(3, &[3, 0, 11, 1]));
        assert_eq!(rd(&x.inverse()), li(&x));
        assert_eq!(ld(&x.inverse()), ri(&x));
        let inc = canonical_decomposition(&x, Direction::Increasing, Side::Right);
        assert_eq!(inc.shape(), vec![3, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(inc.rows()[0], set(3, &[3, 0, 1]));
        assert_eq!(inc.rows()[1], set(3, &[1, 2]));
        assert_eq!(inc.rows()[2], set(3, &[2, 3]));
        assert_eq!(inc.element(), Some(x));
    }

    #[test]
    fn affine_codes_of_worked_example() {
        let x = AffinePerm::from_window(rank(3), &[1, -6, 0, 15]).unwrap();
        assert_eq!(affine_code(&x, AffineCodeVariant::Crd), code(3, &[3, 8, 4, 0]));
        assert_eq!(affine_code(&x, AffineCodeVariant::Cri), ri(&x));
        assert_eq!(affine_code(&x, AffineCodeVariant::Cld), ld(&x));
        assert_eq!(affine_code(&x, AffineCodeVariant::Cli), li(&x));
        let s1 = AffinePerm::generator(rank(2), 1).unwrap();
        assert_eq!(affine_code(&s1, AffineCodeVariant::Crd), code(2, &[0, 1, 0]));
    }

    #[test]
    fn maximal_right_sets() {
        let x = AffinePerm::from_window(rank(7), &[-4, 1, 2, 0, 5, 14, 7, 11]).unwrap();
        assert_eq!(max_right_set(&x).unwrap(), set(7, &[6, 7, 0, 1, 2, 3, 4]));
        let d = canonical_decomposition(&x, Direction::Decreasing, Side::Right);
        assert_eq!(d.rows()[1], set(7, &[7, 0, 1, 2]));
        assert_eq!(
            max_right_set(&AffinePerm::generator(rank(3), 2).unwrap()).unwrap(),
            set(3, &[2])
        );
        assert_eq!(
            max_right_set(&AffinePerm::identity(rank(3))),
            Err(Error::IdentityInput)
        );
    }

    #[test]
    fn code_descents_and_small_codes() {
        assert_eq!(code_descents(&code(3, &[3, 8, 4, 0])).to_vec(), vec![0, 1]);
        assert_eq!(code_descents(&code(2, &[0, 1, 0])).to_vec(), vec![1]);
        assert!(code_descents(&KCode::zero(rank(4))).is_empty());
        let s1 = AffinePerm::generator(rank(2), 1).unwrap();
        assert_eq!(rd(&s1), code(2, &[0, 1, 0]));
        assert!(KCode::new(rank(2), vec![1, 1, 1]).is_err());
    }

    #[test]
    fn code_round_trips() {
        let c = code(3, &[3, 8, 4, 0]);
        assert_eq!(
            code_to_permutation(&c),
            AffinePerm::from_word(rank(3), &EX35).unwrap()
        );
        assert!(code_to_permutation(&KCode::zero(rank(3))).is_identity());
        let c = code(9, &[2, 3, 1, 0, 0, 1, 0, 0, 3, 1]);
        let want = AffinePerm::from_word(rank(9), &[9, 6, 0, 9, 7, 5, 2, 1, 0, 9, 8]).unwrap();
        assert_eq!(code_to_permutation(&c), want);
        assert_eq!(reading_word_at(&c, 6), vec![9, 6, 0, 9, 7, 5, 2, 1, 0, 9, 8]);
        assert_eq!(reading_word(&c), vec![9, 6, 0, 9, 7, 2, 1, 0, 9, 8, 5]);
        assert_eq!(AffinePerm::from_word(rank(9), &reading_word(&c)).unwrap(), want);
    }

    #[test]
    fn not_maximal_is_rejected() {
        let d = CyclicDecomposition::new(
            rank(3),
            vec![set(3, &[0]), set(3, &[0])],
            Direction::Decreasing,
            Side::Right,
        )
        .unwrap();
        assert_eq!(code_of(&d), Err(Error::NotMaximal(2)));
        let d = CyclicDecomposition::new(rank(3), vec![], Direction::Decreasing, Side::Right).unwrap();
        assert_eq!(code_of(&d).unwrap(), KCode::zero(rank(3)));
    }

    #[test]
    fn strips() {
        let z = KCode::zero(rank(3));
        let s = SkewKCode::new(z.clone(), z.clone()).unwrap();
        assert!(s.is_horizontal_strip() && s.is_vertical_strip());
        let s = SkewKCode::new(code(3, &[1, 1, 0, 0]), z.clone()).unwrap();
        assert!(s.is_horizontal_strip() && !s.is_vertical_strip());
        let s = SkewKCode::new(code(3, &[2, 0, 0, 0]), code(3, &[1, 0, 0, 0])).unwrap();
        assert!(!SkewKCode::new(code(3, &[2, 0, 0, 0]), z).unwrap().is_horizontal_strip());
        assert!(s.is_vertical_strip());
        assert_eq!(
            SkewKCode::new(code(3, &[1, 0, 0, 0]), code(3, &[0, 1, 0, 0])),
            Err(Error::NotContained)
        );
    }

    #[test]
    fn two_row_examples() {
        let b = set(9, &[0, 1, 2, 3, 4, 7, 8]);
        let a = set(9, &[2, 3, 5, 8]);
        let (b2, a2) = two_row_maximize(&b, &a).unwrap().unwrap();
        assert_eq!(a2, set(9, &[0, 1, 2, 3, 5, 7, 8]));
        assert_eq!(b2, set(9, &[1, 2, 4, 7]));
        let a = set(4, &[1, 3]);
        assert_eq!(
            two_row_maximize(&set(4, &[]), &a).unwrap(),
            Some((set(4, &[]), a))
        );
        assert_eq!(two_row_maximize(&set(2, &[0, 1]), &set(2, &[0, 1])).unwrap(), None);
    }

    #[test]
    fn conjugation_is_the_diagram_reflection() {
        let x = AffinePerm::from_word(rank(3), &EX35).unwrap();
        let c = k_conjugate_perm(&x);
        assert_eq!(c, x.reflect());
        assert_eq!(k_conjugate_perm(&c), x);
        assert_eq!(c.length(), 15);
        assert!(k_conjugate_perm(&AffinePerm::identity(rank(3))).is_identity());
    }

    #[test]
    fn rd_ld_matching_pairs_entries() {
        let x = AffinePerm::from_word(rank(3), &EX35).unwrap();
        assert_eq!(rd_ld_matching(&x), vec![2, 0, 1, 3]);
    }
}
