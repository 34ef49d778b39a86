//! Bounded verification suites, run by `affperm selftest`.
//!
//! Every suite enumerates elements up to the configured rank and length, so
//! the defaults finish in seconds. A length bound of 0 leaves only the
//! identity and makes the enumerative suites vacuous.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::affine_core::{elements_by_length, AffinePerm, Rank};
use crate::cyclic::{fat_move, normalize_ud, ResidueSet};
use crate::insertion::{enumerate_reduced_words, insert_word, reverse_insert};
use crate::kcode::{
    affine_code, canonical_decomposition, code_to_permutation, k_conjugate_perm, ld, li, rd, ri, two_row_maximize,
    AffineCodeVariant, Direction, KCode, Side, SkewKCode,
};
use crate::nilcox::{e, h, max_h_coefficient, verify_split_product, KSchurTable};
use crate::shapes::{
    bounded_partitions, grassmannian_partition, grassmannian_perm, grassmannian_word, k_conjugate_partition,
    BoundedPartition,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestConfig {
    pub k_max: usize,
    pub length_bound: usize,
    /// Replaces one golden value by a wrong one, to check that failures
    /// surface.
    pub inject_fault: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { k_max: 3, length_bound: 8, inject_fault: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

type Suite = fn(&SelftestConfig) -> (bool, String);

pub fn run(config: &SelftestConfig) -> Vec<CriterionOutcome> {
    let suites: [(&str, Suite); 10] = [
        ("golden examples", golden),
        ("k-code bijection", bijection),
        ("affine codes", affine_codes),
        ("reduced-word bijection", reduced_words),
        ("commutativity of h and e", commutativity),
        ("maximal h coefficient", max_h),
        ("generalized Pieri", gen_pieri),
        ("split k-Schur products", split_products),
        ("u_B d_A rewriting", ud_rewriting),
        ("k-conjugation", k_conjugation),
    ];
    suites
        .iter()
        .enumerate()
        .map(|(t, (name, f))| {
            let (passed, detail) = f(config);
            CriterionOutcome { id: t + 1, name, passed, detail }
        })
        .collect()
}

fn ranks(config: &SelftestConfig, lo: usize) -> impl Iterator<Item = Rank> {
    (lo..=config.k_max).filter_map(|k| Rank::new(k).ok())
}

fn rank(k: usize) -> Rank {
    Rank::new(k).expect("valid rank")
}

fn word(k: usize, w: &[usize]) -> AffinePerm {
    AffinePerm::from_word(rank(k), w).expect("valid word")
}

fn code(k: usize, v: &[usize]) -> KCode {
    KCode::new(rank(k), v.to_vec()).expect("valid code")
}

fn set(k: usize, v: &[usize]) -> ResidueSet {
    ResidueSet::new(rank(k), v.iter().copied()).expect("valid set")
}

fn verdict(failures: usize, checked: usize) -> (bool, String) {
    (failures == 0, format!("{failures} failures in {checked} checks"))
}

fn golden(config: &SelftestConfig) -> (bool, String) {
    let mut failed: Vec<&str> = Vec::new();
    let mut check = |ok: bool, what: &'static str| {
        if !ok {
            failed.push(what);
        }
    };

    let x = word(3, &[2, 1, 0, 3, 0, 1, 2, 1, 0, 3, 1, 2, 0, 1, 0]);
    let rd_want = if config.inject_fault { [3, 8, 4, 1] } else { [3, 8, 4, 0] };
    check(rd(&x).entries() == rd_want, "RD");
    check(ri(&x) == code(3, &[11, 3, 0, 1]), "RI");
    check(ld(&x) == code(3, &[4, 3, 8, 0]), "LD");
    check(li(&x) == code(3, &[3, 0, 11, 1]), "LI");

    let y = AffinePerm::from_window(rank(3), &[1, -6, 0, 15]).expect("valid window");
    check(affine_code(&y, AffineCodeVariant::Crd) == code(3, &[3, 8, 4, 0]), "CRD");

    let z = AffinePerm::from_window(rank(7), &[-4, 1, 2, 0, 5, 14, 7, 11]).expect("valid window");
    let rows = canonical_decomposition(&z, Direction::Decreasing, Side::Right);
    let want = [
        set(7, &[6, 7, 0, 1, 2, 3, 4]),
        set(7, &[7, 0, 1, 2]),
        set(7, &[1, 6]),
        set(7, &[0, 5]),
        set(7, &[4]),
    ];
    check(rows.rows() == want, "max decomposition");

    let two = two_row_maximize(&set(9, &[0, 1, 2, 3, 4, 7, 8]), &set(9, &[2, 3, 5, 8]));
    check(
        two == Ok(Some((set(9, &[1, 2, 4, 7]), set(9, &[0, 1, 2, 3, 5, 7, 8])))),
        "two-row reduction",
    );

    match insert_word(rank(3), &[0, 3, 1, 2, 1, 0]) {
        Ok((c, q)) => {
            check(c == code(3, &[2, 1, 3, 0]), "insertion code");
            check(q.row_labels(1) == [2, 5, 1], "recording row");
        }
        Err(_) => check(false, "insertion"),
    }

    let lambda = BoundedPartition::new(rank(3), &[3, 2, 2, 1, 1]).expect("valid partition");
    check(
        grassmannian_word(&lambda, Direction::Decreasing) == [0, 1, 3, 2, 0, 3, 2, 1, 0],
        "decreasing Grassmannian word",
    );
    check(
        grassmannian_word(&lambda, Direction::Increasing) == [1, 0, 3, 1, 2, 0, 1, 3, 0],
        "increasing Grassmannian word",
    );

    if failed.is_empty() {
        (true, "all golden values reproduced".into())
    } else {
        (false, format!("mismatched: {}", failed.join(", ")))
    }
}

/// Number of k-codes (weak compositions with k+1 parts, one of them zero) of
/// each size up to `max`.
fn code_counts(n: usize, max: usize) -> Vec<u64> {
    // compositions with n parts minus those with all parts positive
    let comps = |parts: usize, size: usize| -> u64 {
        if parts == 0 {
            return u64::from(size == 0);
        }
        binom(size + parts - 1, parts - 1)
    };
    (0..=max)
        .map(|s| comps(n, s) - if s >= n { comps(n, s - n) } else { 0 })
        .collect()
}

fn binom(a: usize, b: usize) -> u64 {
    (0..b).fold(1u64, |acc, t| acc * (a - t) as u64 / (t + 1) as u64)
}

fn bijection(config: &SelftestConfig) -> (bool, String) {
    let (mut failures, mut checked) = (0, 0);
    for r in ranks(config, 1) {
        let levels = elements_by_length(r, config.length_bound);
        let counts = code_counts(r.n(), config.length_bound);
        let mut seen = HashSet::new();
        for (len, level) in levels.iter().enumerate() {
            checked += 1;
            if level.len() as u64 != counts[len] {
                failures += 1;
            }
            for x in level {
                checked += 1;
                let c = rd(x);
                if c.size() != len || !seen.insert(c.clone()) || &code_to_permutation(&c) != x {
                    failures += 1;
                }
            }
        }
    }
    verdict(failures, checked)
}

fn affine_codes(config: &SelftestConfig) -> (bool, String) {
    let (mut failures, mut checked) = (0, 0);
    for r in ranks(config, 1) {
        for x in elements_by_length(r, config.length_bound).iter().flatten() {
            checked += 1;
            let ok = rd(x) == affine_code(x, AffineCodeVariant::Crd)
                && ri(x) == affine_code(x, AffineCodeVariant::Cri)
                && ld(x) == affine_code(x, AffineCodeVariant::Cld)
                && li(x) == affine_code(x, AffineCodeVariant::Cli);
            if !ok {
                failures += 1;
            }
        }
    }
    verdict(failures, checked)
}

fn reduced_words(config: &SelftestConfig) -> (bool, String) {
    let bound = config.length_bound.min(7);
    let (mut failures, mut checked) = (0, 0);
    for r in ranks(config, 1) {
        for x in elements_by_length(r, bound).iter().flatten() {
            let words = enumerate_reduced_words(x, bound).expect("within bound");
            let mut tableaux = HashSet::new();
            for w in &words {
                checked += 1;
                let Ok((c, q)) = insert_word(r, w) else {
                    failures += 1;
                    continue;
                };
                if c != rd(x) || reverse_insert(&c, &q).as_deref() != Ok(w.as_slice()) {
                    failures += 1;
                }
                tableaux.insert(q);
            }
            if tableaux.len() != words.len() {
                failures += 1;
            }
        }
    }
    verdict(failures, checked)
}

fn commutativity(config: &SelftestConfig) -> (bool, String) {
    let (mut failures, mut checked) = (0, 0);
    for r in ranks(config, 1) {
        for f in [h, e] {
            let gens: Vec<_> = (0..=r.k()).map(|i| f(r, i).expect("i <= k")).collect();
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    checked += 1;
                    let ab = gens[i].nil_multiply(&gens[j]).expect("same rank");
                    let ba = gens[j].nil_multiply(&gens[i]).expect("same rank");
                    if ab != ba {
                        failures += 1;
                    }
                }
            }
        }
    }
    verdict(failures, checked)
}

fn max_h(config: &SelftestConfig) -> (bool, String) {
    let (mut failures, mut checked) = (0, 0);
    for r in ranks(config, 1) {
        for x in elements_by_length(r, config.length_bound.min(7)).iter().flatten() {
            checked += 1;
            if max_h_coefficient(x) != BigInt::one() {
                failures += 1;
            }
        }
    }
    verdict(failures, checked)
}

/// Every `(x, B)` with `d_B x` reduced of length at most the bound: the RD
/// codes differ by a horizontal strip, the RI codes by a vertical strip.
fn gen_pieri(config: &SelftestConfig) -> (bool, String) {
    let (mut h_fail, mut v_fail, mut checked) = (0, 0, 0);
    for r in ranks(config, 1) {
        let n = r.n();
        for x in elements_by_length(r, config.length_bound).iter().flatten() {
            for bits in 1u64..(1 << n) - 1 {
                let b = ResidueSet::from_fn(r, |i| bits >> i & 1 == 1);
                if x.length() + b.len() > config.length_bound {
                    continue;
                }
                let Some(y) = x.nil_left_word(&b.d_word().expect("proper")) else {
                    continue;
                };
                checked += 1;
                let rd_ok = SkewKCode::new(rd(&y), rd(x)).is_ok_and(|s| s.is_horizontal_strip());
                let ri_ok = SkewKCode::new(ri(&y), ri(x)).is_ok_and(|s| s.is_vertical_strip());
                h_fail += usize::from(!rd_ok);
                v_fail += usize::from(!ri_ok);
            }
        }
    }
    (
        h_fail == 0 && v_fail == 0,
        format!("{checked} pairs: {h_fail} RD horizontal-strip failures, {v_fail} RI vertical-strip failures"),
    )
}

fn split_products(config: &SelftestConfig) -> (bool, String) {
    let (mut failures, mut split, mut checked) = (0, 0, 0);
    for r in ranks(config, 2) {
        let mut table = KSchurTable::new(r);
        for size in 1..=config.length_bound.min(8) {
            for lambda in bounded_partitions(r, size) {
                checked += 1;
                match verify_split_product(&lambda, &mut table) {
                    Ok(report) => {
                        if matches!(report, crate::nilcox::SplitReport::Checked { .. }) {
                            split += 1;
                        }
                        failures += usize::from(!report.passed());
                    }
                    Err(_) => failures += 1,
                }
            }
        }
    }
    (failures == 0, format!("{failures} failures among {split} split partitions ({checked} partitions)"))
}

fn ud_rewriting(config: &SelftestConfig) -> (bool, String) {
    let (mut failures, mut checked) = (0, 0);
    for r in ranks(config, 1) {
        let n = r.n();
        let mut intervals = vec![ResidueSet::empty(r)];
        for p in 0..n {
            for len in 1..n {
                intervals.push(ResidueSet::interval(r, p, (p + len - 1) % n).expect("proper interval"));
            }
        }
        for b in &intervals {
            for a in &intervals {
                checked += 1;
                let words: Vec<usize> = b.u_word().expect("proper").into_iter().chain(a.d_word().expect("proper")).collect();
                let direct = AffinePerm::identity(r).nil_right_word(&words);
                let Ok(form) = normalize_ud(b, a) else {
                    failures += 1;
                    continue;
                };
                let rewritten = form.product.and_then(|(a2, b2)| {
                    let w: Vec<usize> = a2.d_word().ok()?.into_iter().chain(b2.u_word().ok()?).collect();
                    AffinePerm::identity(r).nil_right_word(&w)
                });
                if direct != rewritten {
                    failures += 1;
                }
                if let Ok(Some((a1, b1))) = fat_move(b, a) {
                    checked += 1;
                    let w: Vec<usize> = a1.d_word().expect("proper").into_iter().chain(b1.u_word().expect("proper")).collect();
                    let shifted = AffinePerm::identity(r).nil_right_word(&w);
                    if direct.is_none() || shifted != direct {
                        failures += 1;
                    }
                }
            }
        }
    }
    verdict(failures, checked)
}

fn k_conjugation(config: &SelftestConfig) -> (bool, String) {
    let (mut structural, mut descents, mut grass, mut checked) = (0, 0, 0, 0);
    for r in ranks(config, 1) {
        let mut cache: HashMap<BoundedPartition, AffinePerm> = HashMap::new();
        for x in elements_by_length(r, config.length_bound).iter().flatten() {
            checked += 1;
            let c = k_conjugate_perm(x);
            if k_conjugate_perm(&c) != *x || c.length() != x.length() {
                structural += 1;
            }
            if c.right_descents() != x.right_descents() {
                descents += 1;
            }
            if let Some(lambda) = grassmannian_partition(x) {
                let want = cache
                    .entry(lambda.clone())
                    .or_insert_with(|| grassmannian_perm(&k_conjugate_partition(&lambda)));
                if &c != want {
                    grass += 1;
                }
            }
        }
    }
    (
        structural + descents + grass == 0,
        format!(
            "{checked} elements: {structural} involution/length failures, {descents} D_R changes, {grass} Grassmannian mismatches"
        ),
    )
}
