use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// A sequence of `d` permutations of `[n]` whose first row is the identity,
/// stored as a `d x n` matrix with entries in `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DPermutationRepr", into = "DPermutationRepr")]
pub struct DPermutation {
    n: usize,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct DPermutationRepr {
    d: usize,
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<DPermutationRepr> for DPermutation {
    type Error = Error;

    fn try_from(repr: DPermutationRepr) -> Result<Self> {
        let p = DPermutation::new(repr.rows)?;
        if p.d() != repr.d || p.n() != repr.n {
            return domain(format!(
                "declared shape {}x{} does not match rows {}x{}",
                repr.d,
                repr.n,
                p.d(),
                p.n()
            ));
        }
        Ok(p)
    }
}

impl From<DPermutation> for DPermutationRepr {
    fn from(p: DPermutation) -> Self {
        DPermutationRepr {
            d: p.d(),
            n: p.n,
            rows: p.rows,
        }
    }
}

impl DPermutation {
    /// Validates `rows` as a d-permutation.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return domain("a d-permutation needs at least one row");
        };
        let n = first.len();
        if n == 0 {
            return domain("a d-permutation needs at least one column");
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return domain(format!(
                    "row {} has length {}, expected {}",
                    i + 1,
                    row.len(),
                    n
                ));
            }
            if !is_permutation(row) {
                return domain(format!("row {} is not a permutation of 1..={}", i + 1, n));
            }
        }
        if first.iter().enumerate().any(|(j, &v)| v as usize != j + 1) {
            return domain("the first row must be the identity");
        }
        Ok(DPermutation { n, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        let n = rows[0].len();
        debug_assert!(DPermutation::new(rows.clone()).is_ok());
        DPermutation { n, rows }
    }

    /// The d-permutation of `[n]` whose rows are all the identity.
    pub fn identity(d: usize, n: usize) -> Result<Self> {
        if d == 0 || n == 0 {
            return domain("identity needs d >= 1 and n >= 1");
        }
        let row: Vec<u32> = (1..=n as u32).collect();
        Ok(DPermutation {
            n,
            rows: vec![row; d],
        })
    }

    /// A 2-permutation with the given second row.
    pub fn from_permutation(perm: &[u32]) -> Result<Self> {
        let id: Vec<u32> = (1..=perm.len() as u32).collect();
        DPermutation::new(vec![id, perm.to_vec()])
    }

    /// Normalizes an arbitrary matrix of distinct-per-row values: each row is
    /// relabeled order-isomorphically to `1..=n` and the columns are reordered
    /// so that the first row becomes the identity.
    pub fn normalize(rows: &[Vec<u32>]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return domain("cannot normalize an empty matrix");
        };
        let n = first.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return domain("cannot normalize a ragged or empty matrix");
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&j| first[j]);
        let out: Vec<Vec<u32>> = rows
            .iter()
            .map(|row| {
                let reordered: Vec<u32> = order.iter().map(|&j| row[j]).collect();
                standardize(&reordered)
            })
            .collect();
        DPermutation::new(out)
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.rows[i]
    }

    /// Entry in row `i`, column `j` (both 0-based).
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    /// The `j`th column (0-based) as a coordinate vector.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    /// Applies `v -> n - v + 1` to row `i`, then renormalizes so row 1 stays
    /// the identity. Geometrically a reflection along one axis.
    pub fn reflect_row(&self, i: usize) -> Self {
        let n = self.n as u32;
        let mut rows = self.rows.clone();
        for v in rows[i].iter_mut() {
            *v = n - *v + 1;
        }
        DPermutation::normalize(&rows).expect("reflection keeps rows permutations")
    }
}

impl fmt::Debug for DPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DPermutation{:?}", self.rows)
    }
}

impl fmt::Display for DPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn is_permutation(row: &[u32]) -> bool {
    let n = row.len();
    let mut seen = vec![false; n];
    for &v in row {
        let v = v as usize;
        if v == 0 || v > n || seen[v - 1] {
            return false;
        }
        seen[v - 1] = true;
    }
    true
}

/// Order-isomorphic relabeling of distinct values onto `1..=len`.
pub fn standardize(values: &[u32]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by_key(|&j| values[j]);
    let mut out = vec![0; values.len()];
    for (rank, &j) in idx.iter().enumerate() {
        out[j] = rank as u32 + 1;
    }
    out
}

/// Rearranges `perm` into its lexicographic successor; returns `false` (and
/// resets to ascending order) when `perm` was the last permutation.
pub(crate) fn next_permutation(perm: &mut [u32]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        perm.reverse();
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// All d-permutations of `[n]`, in lexicographic order of the concatenation
/// of rows `2..=d`. There are `(n!)^(d-1)` of them.
pub fn enumerate_dperms(d: usize, n: usize) -> Result<DPermutations> {
    if d == 0 || n == 0 {
        return domain(format!(
            "enumerate_dperms needs d >= 1 and n >= 1 (got d={d}, n={n})"
        ));
    }
    Ok(DPermutations {
        current: Some(DPermutation::identity(d, n)?.rows),
    })
}

/// Iterator returned by [`enumerate_dperms`].
#[derive(Debug, Clone)]
pub struct DPermutations {
    current: Option<Vec<Vec<u32>>>,
}

impl Iterator for DPermutations {
    type Item = DPermutation;

    fn next(&mut self) -> Option<DPermutation> {
        let rows = self.current.as_mut()?;
        let item = DPermutation::from_rows_unchecked(rows.clone());
        // Odometer over rows 2..=d, last row fastest.
        let mut advanced = false;
        for row in rows.iter_mut().skip(1).rev() {
            if next_permutation(row) {
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.current = None;
        }
        Some(item)
    }
}
