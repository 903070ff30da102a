//! Separation points, block decomposition and pattern containment for
//! d-permutations.
//!
//! A d-permutation of `[n]`, `n > 1`, is separated between `l` and `l + 1`
//! when in every row the first `l` columns take either the `l` smallest or the
//! `l` largest values. It is separable when it is a single column or separates
//! into two separable blocks. Separability is equivalent to avoiding the three
//! row-invariant patterns returned by
//! [`ClassicalPattern::separability_obstructions`].

use crate::error::{domain, Error, Result};
use crate::model::{
    is_permutation, standardize, BarredPattern, ClassicalPattern, DPermutation, PatternSpec,
    PrimaryBlockStructure,
};

/// The separation points of a d-permutation and the block structure they
/// induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationResult {
    /// Every `l` (1-based, `1 <= l < n`) at which the permutation separates.
    pub points: Vec<usize>,
    /// Present iff `points` is nonempty; shared by every point.
    pub structure: Option<PrimaryBlockStructure>,
}

pub fn separation_points(p: &DPermutation) -> Result<SeparationResult> {
    let n = p.n();
    if n < 2 {
        return domain("separation points need n >= 2");
    }
    let d = p.d();
    let mut prefix_max = vec![0u32; d];
    let mut prefix_min = vec![u32::MAX; d];
    let mut points = Vec::new();
    let mut structure = None;
    for l in 1..n {
        let mut descending = Vec::with_capacity(d);
        let mut ok = true;
        for (i, row) in p.rows().iter().enumerate() {
            let v = row[l - 1];
            prefix_max[i] = prefix_max[i].max(v);
            prefix_min[i] = prefix_min[i].min(v);
            if prefix_max[i] as usize == l {
                descending.push(false);
            } else if prefix_min[i] as usize == n - l + 1 {
                descending.push(true);
            } else {
                ok = false;
            }
        }
        if ok {
            let s = PrimaryBlockStructure::new(descending)?;
            match &structure {
                None => structure = Some(s),
                Some(prev) if *prev != s => {
                    return Err(Error::Consistency(format!(
                        "separation points induce different structures {prev} and {s}"
                    )));
                }
                Some(_) => {}
            }
            points.push(l);
        }
    }
    Ok(SeparationResult { points, structure })
}

/// The left and right blocks of `p` with respect to the separation point `l`:
/// the first `l` and last `n - l` columns, each relabeled order-isomorphically.
pub fn blocks(p: &DPermutation, l: usize) -> Result<(DPermutation, DPermutation)> {
    if !separation_points(p)?.points.contains(&l) {
        return domain(format!("{l} is not a separation point"));
    }
    Ok(split_columns(p, l))
}

fn split_columns(p: &DPermutation, l: usize) -> (DPermutation, DPermutation) {
    let left: Vec<Vec<u32>> = p.rows().iter().map(|r| r[..l].to_vec()).collect();
    let right: Vec<Vec<u32>> = p.rows().iter().map(|r| r[l..].to_vec()).collect();
    (
        DPermutation::normalize(&left).expect("column block of a d-permutation"),
        DPermutation::normalize(&right).expect("column block of a d-permutation"),
    )
}

/// Separability test. Blocks of a separable permutation are patterns in it
/// and hence separable, so recursing on any single separation point decides.
pub fn is_separable(p: &DPermutation) -> bool {
    if p.n() == 1 {
        return true;
    }
    let points = separation_points(p).expect("n >= 2").points;
    match points.first() {
        None => false,
        Some(&l) => {
            let (left, right) = split_columns(p, l);
            is_separable(&left) && is_separable(&right)
        }
    }
}

pub fn primary_block_structure(p: &DPermutation) -> Result<PrimaryBlockStructure> {
    if p.n() < 2 {
        return domain("a single column has no primary block structure");
    }
    if !is_separable(p) {
        return domain("the d-permutation is not separable");
    }
    Ok(separation_points(p)?
        .structure
        .expect("separable with n >= 2 has a separation point"))
}

/// Which row subsets a pattern occurrence may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RowPolicy {
    /// Any `d'` rows, taken in increasing order.
    #[default]
    AnyRows,
    /// Only row subsets containing row 1.
    IncludeFirstRow,
}

/// A witness of pattern containment (0-based indices into the host).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub rows: Vec<usize>,
    pub columns: Vec<usize>,
    /// Index into [`ClassicalPattern::forms`].
    pub form: usize,
}

pub fn contains_pattern(p: &DPermutation, q: &ClassicalPattern) -> Result<bool> {
    Ok(find_occurrence(p, q, RowPolicy::default())?.is_some())
}

/// First occurrence of `q` in `p` in lexicographic order of (rows, columns).
pub fn find_occurrence(
    p: &DPermutation,
    q: &ClassicalPattern,
    policy: RowPolicy,
) -> Result<Option<Occurrence>> {
    let (dq, nq) = (q.d(), q.n());
    if dq == 0 || dq > p.d() || nq > p.n() {
        return domain(format!(
            "pattern {} is {}x{} but the host is {}x{}",
            q.name(),
            dq,
            nq,
            p.d(),
            p.n()
        ));
    }
    for rows in Combinations::new(p.d(), dq) {
        if policy == RowPolicy::IncludeFirstRow && rows[0] != 0 {
            continue;
        }
        for columns in Combinations::new(p.n(), nq) {
            let sub = normalized_restriction(p, &rows, &columns);
            if let Some(form) = q.forms().iter().position(|f| f.rows() == sub.as_slice()) {
                return Ok(Some(Occurrence {
                    rows,
                    columns,
                    form,
                }));
            }
        }
    }
    Ok(None)
}

fn normalized_restriction(p: &DPermutation, rows: &[usize], columns: &[usize]) -> Vec<Vec<u32>> {
    let lead = p.row(rows[0]);
    let mut order = columns.to_vec();
    order.sort_by_key(|&j| lead[j]);
    rows.iter()
        .map(|&i| {
            let r = p.row(i);
            let vals: Vec<u32> = order.iter().map(|&j| r[j]).collect();
            standardize(&vals)
        })
        .collect()
}

/// Whether the single-row permutation `perm` avoids the barred pattern.
pub fn avoids_barred(perm: &[u32], pattern: &BarredPattern) -> Result<bool> {
    if !is_permutation(perm) {
        return domain("avoids_barred expects a permutation of 1..=n");
    }
    let reduced = pattern.reduced();
    let full = pattern.base();
    let bar = pattern.barred_position() - 1;
    for positions in Combinations::new(perm.len(), reduced.len()) {
        if !occurs_at(perm, &positions, &reduced) {
            continue;
        }
        // The barred letter must slot in between its neighbors by position.
        let lo = if bar == 0 { 0 } else { positions[bar - 1] + 1 };
        let hi = positions.get(bar).copied().unwrap_or(perm.len());
        let extends = (lo..hi).any(|x| {
            let mut merged = positions.clone();
            merged.insert(bar, x);
            occurs_at(perm, &merged, full)
        });
        if !extends {
            return Ok(false);
        }
    }
    Ok(true)
}

fn occurs_at(perm: &[u32], positions: &[usize], pattern: &[u32]) -> bool {
    let vals: Vec<u32> = positions.iter().map(|&i| perm[i]).collect();
    standardize(&vals) == pattern
}

/// Whether `p` avoids `pattern`; patterns larger than `p` are avoided
/// vacuously. Barred patterns apply to the second row of a 2-permutation.
pub fn avoids(p: &DPermutation, pattern: &PatternSpec) -> Result<bool> {
    match pattern {
        PatternSpec::Classical(q) => {
            if q.d() > p.d() || q.n() > p.n() {
                return Ok(true);
            }
            Ok(!contains_pattern(p, q)?)
        }
        PatternSpec::Barred(b) => {
            if p.d() != 2 {
                return Err(Error::Unsupported(format!(
                    "barred pattern {b} only applies to 2-permutations"
                )));
            }
            avoids_barred(p.row(1), b)
        }
    }
}

/// Default bound on the number of d-permutations a brute-force count visits.
pub const DEFAULT_MAX_WORK: u64 = 20_000_000;

/// Number of d-permutations of `[n]` avoiding every pattern in `patterns`, by
/// exhaustive enumeration.
pub fn count_class(d: usize, n: usize, patterns: &[PatternSpec], max_work: u64) -> Result<u64> {
    let required = enumeration_size(d, n);
    if !matches!(required, Some(r) if r <= u128::from(max_work)) {
        return Err(Error::Resource {
            required: required.map_or_else(|| "more than 2^128".to_string(), |r| r.to_string()),
            limit: max_work,
        });
    }
    if d != 2 {
        if let Some(b) = patterns
            .iter()
            .find(|p| matches!(p, PatternSpec::Barred(_)))
        {
            return Err(Error::Unsupported(format!(
                "barred pattern {b} only applies to 2-permutations"
            )));
        }
    }
    let mut count = 0u64;
    for p in crate::model::enumerate_dperms(d, n)? {
        let mut ok = true;
        for pattern in patterns {
            if !avoids(&p, pattern)? {
                ok = false;
                break;
            }
        }
        count += ok as u64;
    }
    Ok(count)
}

/// `(n!)^(d-1)`, or `None` on overflow.
pub fn enumeration_size(d: usize, n: usize) -> Option<u128> {
    let fact = (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))?;
    (1..d).try_fold(1u128, |acc, _| acc.checked_mul(fact))
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub(crate) struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.as_mut()?;
        let out = cur.clone();
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
