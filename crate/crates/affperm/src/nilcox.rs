//! The affine nil-Coxeter algebra: integer combinations of affine
//! permutations, multiplied by concatenating reduced words (and vanishing
//! when the concatenation is not reduced).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::affine_core::{AffinePerm, Rank, Residue};
use crate::cyclic::ResidueSet;
use crate::error::{Error, Result};
use crate::io::parse_window;
use crate::kcode::{canonical_decomposition, Direction, Side};
use crate::shapes::{dominates, factors, grassmannian_perm, k_conjugate_partition, to_core, BoundedPartition, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilCoxSum {
    rank: Rank,
    terms: BTreeMap<AffinePerm, BigInt>,
}

impl NilCoxSum {
    pub fn zero(rank: Rank) -> NilCoxSum {
        NilCoxSum { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: Rank) -> NilCoxSum {
        NilCoxSum::monomial(AffinePerm::identity(rank))
    }

    pub fn monomial(x: AffinePerm) -> NilCoxSum {
        let rank = x.rank();
        let mut terms = BTreeMap::new();
        terms.insert(x, BigInt::one());
        NilCoxSum { rank, terms }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<AffinePerm, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// `[x]f`.
    pub fn coefficient(&self, x: &AffinePerm) -> BigInt {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, x: AffinePerm, c: BigInt) -> Result<()> {
        self.rank.same(x.rank())?;
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(x);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &NilCoxSum) -> Result<NilCoxSum> {
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NilCoxSum) -> Result<NilCoxSum> {
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), -c)?;
        }
        Ok(out)
    }

    pub fn nil_multiply(&self, other: &NilCoxSum) -> Result<NilCoxSum> {
        self.rank.same(other.rank)?;
        let words: Vec<(Vec<Residue>, &BigInt)> =
            other.terms.iter().map(|(y, b)| (y.reduced_word(), b)).collect();
        let mut out = NilCoxSum::zero(self.rank);
        for (x, a) in &self.terms {
            for (w, b) in &words {
                if let Some(xy) = x.nil_right_word(w) {
                    out.add_term(xy, a * *b)?;
                }
            }
        }
        Ok(out)
    }

    /// Terms with `D_R(x) ⊆ {i}`.
    pub fn dominant_terms(&self, i: Residue) -> Vec<&AffinePerm> {
        self.terms
            .keys()
            .filter(|x| x.right_descents().iter().all(|d| d == i))
            .collect()
    }

    /// One term per line: `[window] coeff`.
    pub fn to_text(&self) -> String {
        self.terms.iter().map(|(x, c)| format!("{x} {c}\n")).collect()
    }

    pub fn from_text(rank: Rank, text: &str) -> Result<NilCoxSum> {
        let mut out = NilCoxSum::zero(rank);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let close = line
                .find(']')
                .ok_or_else(|| Error::Parse(format!("missing ']' in {line:?}")))?;
            let window = parse_window(&line[..=close])?;
            let coeff: BigInt = line[close + 1..]
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in {line:?}")))?;
            out.add_term(AffinePerm::from_window(rank, &window)?, coeff)?;
        }
        Ok(out)
    }

    /// `[{"window":[...],"coeff":n}, ...]`, coefficients as exact integers.
    pub fn to_json(&self) -> String {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(x, c)| {
                let coeff: serde_json::Number = c.to_string().parse().expect("integer literal");
                serde_json::json!({ "window": x.window(), "coeff": coeff })
            })
            .collect();
        serde_json::Value::Array(items).to_string()
    }

    pub fn from_json(rank: Rank, text: &str) -> Result<NilCoxSum> {
        let bad = |what: &str| Error::Parse(format!("json: {what}"));
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let items = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut out = NilCoxSum::zero(rank);
        for item in items {
            let window: Vec<i64> = item
                .get("window")
                .and_then(|w| w.as_array())
                .ok_or_else(|| bad("missing window"))?
                .iter()
                .map(|v| v.as_i64().ok_or_else(|| bad("window entries must be integers")))
                .collect::<Result<_>>()?;
            let coeff: BigInt = match item.get("coeff") {
                Some(serde_json::Value::Number(n)) => n.to_string().parse().map_err(|_| bad("coeff must be an integer"))?,
                _ => return Err(bad("missing coeff")),
            };
            out.add_term(AffinePerm::from_window(rank, &window)?, coeff)?;
        }
        Ok(out)
    }
}

impl fmt::Display for NilCoxSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(x, c)| format!("{c}*{x}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn subsets(rank: Rank, size: usize) -> Vec<ResidueSet> {
    fn go(rank: Rank, from: usize, left: usize, cur: ResidueSet, out: &mut Vec<ResidueSet>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for r in from..=rank.n() - left {
            go(rank, r + 1, left - 1, cur.with(r), out);
        }
    }
    let mut out = Vec::new();
    go(rank, 0, size, ResidueSet::empty(rank), &mut out);
    out
}

fn cyclic_sum(rank: Rank, i: usize, increasing: bool) -> Result<NilCoxSum> {
    if i > rank.k() {
        return Err(Error::IndexTooLarge { i, k: rank.k() });
    }
    let mut out = NilCoxSum::zero(rank);
    for a in subsets(rank, i) {
        let x = if increasing { a.u_element()? } else { a.d_element()? };
        out.add_term(x, BigInt::one())?;
    }
    Ok(out)
}

/// `h_i`: the sum of all cyclically decreasing elements `d_A` with `|A| = i`.
pub fn h(rank: Rank, i: usize) -> Result<NilCoxSum> {
    cyclic_sum(rank, i, false)
}

/// `e_i`: the sum of all cyclically increasing elements `u_A` with `|A| = i`.
pub fn e(rank: Rank, i: usize) -> Result<NilCoxSum> {
    cyclic_sum(rank, i, true)
}

fn product(rank: Rank, parts: &[usize], f: fn(Rank, usize) -> Result<NilCoxSum>) -> Result<NilCoxSum> {
    parts.iter().try_fold(NilCoxSum::one(rank), |acc, &p| f(rank, p)?.nil_multiply(&acc))
}

pub fn h_lambda(lambda: &BoundedPartition) -> NilCoxSum {
    product(lambda.rank(), lambda.parts(), h).expect("parts are at most k")
}

pub fn e_lambda(lambda: &BoundedPartition) -> NilCoxSum {
    product(lambda.rank(), lambda.parts(), e).expect("parts are at most k")
}

/// `ν/λ` is a horizontal strip and `ν^(k)/λ^(k)` a vertical strip.
pub fn weak_strip(lambda: &BoundedPartition, nu: &BoundedPartition) -> Result<bool> {
    lambda.rank().same(nu.rank())?;
    let skew = SkewShape::new(nu.parts(), lambda.parts())?;
    if !skew.is_horizontal_strip() {
        return Ok(false);
    }
    let (lc, nc) = (k_conjugate_partition(lambda), k_conjugate_partition(nu));
    Ok(SkewShape::new(nc.parts(), lc.parts()).is_ok_and(|s| s.is_vertical_strip()))
}

/// Every `ν ⊇ μ` with `|ν/μ| = l` forming a weak horizontal strip.
pub fn weak_strip_growths(mu: &BoundedPartition, l: usize) -> Vec<BoundedPartition> {
    let k = mu.rank().k();
    let parts = mu.parts();
    let rows = parts.len() + 1;
    let mut out = Vec::new();
    let mut nu: Vec<usize> = parts.to_vec();
    nu.push(0);
    fn go(r: usize, rest: usize, k: usize, base: &[usize], nu: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == nu.len() {
            if rest == 0 {
                out.push(nu.clone());
            }
            return;
        }
        let cap = if r == 0 { k } else { base[r - 1].min(k) };
        let here = base.get(r).copied().unwrap_or(0);
        for add in 0..=rest.min(cap.saturating_sub(here)) {
            nu[r] = here + add;
            go(r + 1, rest - add, k, base, nu, out);
        }
        nu[r] = here;
    }
    let mut raw = Vec::new();
    go(0, l, k, parts, &mut nu, &mut raw);
    debug_assert!(raw.iter().all(|v| v.len() == rows));
    for v in raw {
        let cand = BoundedPartition::new(mu.rank(), &v).expect("horizontal strip of a partition");
        if weak_strip(mu, &cand).unwrap_or(false) {
            out.push(cand);
        }
    }
    out
}

/// Memoized k-Schur functions of one rank.
#[derive(Debug, Clone)]
pub struct KSchurTable {
    rank: Rank,
    entries: HashMap<BoundedPartition, NilCoxSum>,
}

impl KSchurTable {
    pub fn new(rank: Rank) -> KSchurTable {
        KSchurTable { rank, entries: HashMap::new() }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, lambda: &BoundedPartition) -> Option<&NilCoxSum> {
        self.entries.get(lambda)
    }

    /// `s_λ^(k)`, computed by the Pieri rule
    /// `h_l s_μ = Σ_ν s_ν` with `λ = μ ∪ l` for the smallest part `l`.
    /// Every other `ν` strictly dominates `λ`, so the recursion terminates.
    pub fn k_schur(&mut self, lambda: &BoundedPartition) -> Result<NilCoxSum> {
        self.rank.same(lambda.rank())?;
        if let Some(s) = self.entries.get(lambda) {
            return Ok(s.clone());
        }
        let s = match lambda.parts().split_last() {
            None => NilCoxSum::one(self.rank),
            Some((&l, rest)) => {
                let mu = BoundedPartition::new(self.rank, rest)?;
                let s_mu = self.k_schur(&mu)?;
                let mut s = h(self.rank, l)?.nil_multiply(&s_mu)?;
                for nu in weak_strip_growths(&mu, l) {
                    if &nu != lambda {
                        debug_assert!(dominates(nu.parts(), lambda.parts()).unwrap_or(false));
                        s = s.sub(&self.k_schur(&nu)?)?;
                    }
                }
                s
            }
        };
        self.entries.insert(lambda.clone(), s.clone());
        Ok(s)
    }
}

/// Convenience wrapper around [`KSchurTable::k_schur`].
pub fn k_schur(lambda: &BoundedPartition, table: &mut KSchurTable) -> Result<NilCoxSum> {
    table.k_schur(lambda)
}

/// The unique term of `f` with `D_R(x) ⊆ {i}`.
pub fn dominant_summand(f: &NilCoxSum, i: Residue) -> Result<AffinePerm> {
    let i = f.rank().check_residue(i)?;
    match f.dominant_terms(i).as_slice() {
        [x] => Ok((*x).clone()),
        [] => Err(Error::NotFound(i)),
        _ => Err(Error::NotUnique(i)),
    }
}

/// `x ⊢ y`: `xy ≠ 0` and `D_R(xy) = D_R(y)`.
pub fn is_left_compatible(x: &AffinePerm, y: &AffinePerm) -> bool {
    match x.nil_product(y) {
        Ok(Some(xy)) => xy.right_descents() == y.right_descents(),
        _ => false,
    }
}

/// `c^λ_{μν} = Σ [x]s_μ` over `x ⊢ w_ν` with `x w_ν = w_λ`. There is at
/// most one such `x`. Brute force, straight from the definition.
pub fn lr_coefficient(
    lambda: &BoundedPartition,
    mu: &BoundedPartition,
    nu: &BoundedPartition,
    table: &mut KSchurTable,
) -> Result<BigInt> {
    let (wl, wn) = (grassmannian_perm(lambda), grassmannian_perm(nu));
    let x = wl.compose(&wn.inverse())?;
    if x.length() + wn.length() != wl.length() || !is_left_compatible(&x, &wn) {
        return Ok(BigInt::zero());
    }
    Ok(table.k_schur(mu)?.coefficient(&x))
}

/// Outcome of comparing `s_λ` with a product of factor k-Schur functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    /// The first permutation (in window order) with differing coefficients.
    Differ { x: AffinePerm, lhs: BigInt, rhs: BigInt },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupingCheck {
    pub factors: Vec<BoundedPartition>,
    pub result: Comparison,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitReport {
    /// The core of `λ` does not split.
    Trivial,
    Checked {
        /// Components of the k-boundary, bottom first.
        components: Vec<BoundedPartition>,
        /// One entry per grouping into at least two factors.
        groupings: Vec<GroupingCheck>,
    },
}

impl SplitReport {
    pub fn passed(&self) -> bool {
        match self {
            SplitReport::Trivial => true,
            SplitReport::Checked { groupings, .. } => groupings.iter().all(|g| g.result == Comparison::Equal),
        }
    }
}

fn compare(lhs: &NilCoxSum, rhs: &NilCoxSum) -> Comparison {
    let keys: std::collections::BTreeSet<&AffinePerm> = lhs.terms.keys().chain(rhs.terms.keys()).collect();
    for x in keys {
        let (a, b) = (lhs.coefficient(x), rhs.coefficient(x));
        if a != b {
            return Comparison::Differ { x: x.clone(), lhs: a, rhs: b };
        }
    }
    Comparison::Equal
}

/// Checks `s_λ = ∏ s_{μ_i}` for every grouping of the components of the
/// core of `λ` into consecutive factors.
pub fn verify_split_product(lambda: &BoundedPartition, table: &mut KSchurTable) -> Result<SplitReport> {
    let core = to_core(lambda);
    let groupings = factors(&core);
    let components = groupings.first().cloned().unwrap_or_default();
    if components.len() < 2 {
        return Ok(SplitReport::Trivial);
    }
    let s = table.k_schur(lambda)?;
    let mut checks = Vec::new();
    for fs in groupings.into_iter().filter(|g| g.len() >= 2) {
        let mut prod = NilCoxSum::one(lambda.rank());
        for f in &fs {
            prod = prod.nil_multiply(&table.k_schur(f)?)?;
        }
        checks.push(GroupingCheck { result: compare(&s, &prod), factors: fs });
    }
    Ok(SplitReport::Checked { components, groupings: checks })
}

/// `[x] h_{sh(RD(x))}`, where the shape lists the row sizes of the maximal
/// decreasing decomposition; always 1.
pub fn max_h_coefficient(x: &AffinePerm) -> BigInt {
    let parts = canonical_decomposition(x, Direction::Decreasing, Side::Right).shape();
    let lambda = BoundedPartition::new(x.rank(), &parts).expect("rows shrink and have at most k residues");
    h_lambda(&lambda).coefficient(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(k: usize) -> Rank {
        Rank::new(k).unwrap()
    }

    fn word(k: usize, w: &[usize]) -> AffinePerm {
        AffinePerm::from_word(rank(k), w).unwrap()
    }

    fn bp(k: usize, p: &[usize]) -> BoundedPartition {
        BoundedPartition::new(rank(k), p).unwrap()
    }

    fn sum(k: usize, words: &[&[usize]]) -> NilCoxSum {
        let mut s = NilCoxSum::zero(rank(k));
        for w in words {
            s.add_term(word(k, w), BigInt::one()).unwrap();
        }
        s
    }

    #[test]
    fn monoid_relations() {
        let a0 = sum(2, &[&[0]]);
        assert!(a0.nil_multiply(&a0).unwrap().is_zero());
        let a = sum(2, &[&[0], &[1]]);
        assert_eq!(a.nil_multiply(&a).unwrap(), sum(2, &[&[0, 1], &[1, 0]]));
        assert_eq!(word(2, &[0, 1, 0]), word(2, &[1, 0, 1]));
        assert_eq!(
            a0.nil_multiply(&sum(3, &[&[0]])),
            Err(Error::RankMismatch(2, 3))
        );
    }

    #[test]
    fn h_and_e() {
        assert_eq!(h(rank(2), 1).unwrap(), sum(2, &[&[0], &[1], &[2]]));
        assert_eq!(h(rank(2), 2).unwrap(), sum(2, &[&[1, 0], &[2, 1], &[0, 2]]));
        assert_eq!(e(rank(2), 2).unwrap(), sum(2, &[&[0, 1], &[1, 2], &[2, 0]]));
        assert_eq!(h(rank(2), 3), Err(Error::IndexTooLarge { i: 3, k: 2 }));
        assert_eq!(h(rank(4), 2).unwrap().len(), 10);
        let d = ResidueSet::new(rank(3), [0, 1]).unwrap().d_element().unwrap();
        assert_eq!(h(rank(3), 2).unwrap().coefficient(&d), BigInt::one());
        assert!(h(rank(3), 1).unwrap().coefficient(&d).is_zero());
    }

    #[test]
    fn strips() {
        assert!(weak_strip(&bp(2, &[1]), &bp(2, &[1])).unwrap());
        assert!(weak_strip(&bp(2, &[1]), &bp(2, &[2])).unwrap());
        assert!(!weak_strip(&bp(2, &[1]), &bp(2, &[1, 1, 1])).unwrap());
        assert_eq!(weak_strip(&bp(2, &[2]), &bp(2, &[1, 1])), Err(Error::NotContained));
    }

    #[test]
    fn small_k_schur() {
        let mut t = KSchurTable::new(rank(2));
        assert_eq!(t.k_schur(&bp(2, &[2])).unwrap(), h(rank(2), 2).unwrap());
        let h1 = h(rank(2), 1).unwrap();
        let expect = h1.nil_multiply(&h1).unwrap().sub(&h(rank(2), 2).unwrap()).unwrap();
        assert_eq!(t.k_schur(&bp(2, &[1, 1])).unwrap(), expect);
        let s = t.k_schur(&bp(2, &[2, 1])).unwrap();
        assert_eq!(dominant_summand(&s, 0).unwrap(), grassmannian_perm(&bp(2, &[2, 1])));
        assert_eq!(
            dominant_summand(&s, 1).unwrap(),
            grassmannian_perm(&bp(2, &[2, 1])).dynkin_rotate(1)
        );
    }

    #[test]
    fn dominant_of_h1() {
        let h1 = h(rank(2), 1).unwrap();
        assert_eq!(dominant_summand(&h1, 0).unwrap(), word(2, &[0]));
        let both = sum(2, &[&[0], &[1, 0]]);
        assert_eq!(dominant_summand(&both, 0), Err(Error::NotUnique(0)));
        assert_eq!(dominant_summand(&sum(2, &[&[1]]), 0), Err(Error::NotFound(0)));
    }

    #[test]
    fn compatibility() {
        let id = AffinePerm::identity(rank(2));
        assert!(is_left_compatible(&id, &word(2, &[0, 1])));
        assert!(is_left_compatible(&word(2, &[1]), &word(2, &[0])));
        assert!(!is_left_compatible(&word(2, &[0]), &word(2, &[0])));
    }

    #[test]
    fn split_example() {
        let mut t = KSchurTable::new(rank(4));
        let report = verify_split_product(&bp(4, &[3, 2, 2, 1, 1, 1]), &mut t).unwrap();
        match &report {
            SplitReport::Checked { components, groupings } => {
                let c: Vec<Vec<usize>> = components.iter().map(|p| p.parts().to_vec()).collect();
                assert_eq!(c, vec![vec![1, 1, 1], vec![2, 2], vec![3]]);
                assert_eq!(groupings.len(), 3);
            }
            SplitReport::Trivial => panic!("expected a split"),
        }
        assert!(report.passed());
        assert_eq!(verify_split_product(&bp(4, &[2, 1]), &mut t).unwrap(), SplitReport::Trivial);
    }

    #[test]
    fn serialization_round_trip() {
        let mut f = h(rank(2), 2).unwrap();
        f.add_term(word(2, &[0]), BigInt::from(-7)).unwrap();
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        f.add_term(word(2, &[1, 2, 1]), big).unwrap();
        assert_eq!(NilCoxSum::from_text(rank(2), &f.to_text()).unwrap(), f);
        assert_eq!(NilCoxSum::from_json(rank(2), &f.to_json()).unwrap(), f);
        assert!(f.to_json().contains("123456789012345678901234567890"));
    }

    #[test]
    fn lr_from_definition() {
        let mut t = KSchurTable::new(rank(4));
        let lam = bp(4, &[3, 2, 2, 1, 1, 1]);
        // s_λ = s_(3) s_(2,2,1,1,1): the coefficient of s_λ in the product is 1
        let c = lr_coefficient(&lam, &bp(4, &[3]), &bp(4, &[2, 2, 1, 1, 1]), &mut t).unwrap();
        assert_eq!(c, BigInt::one());
    }
}
