use crate::error::{domain, Result};
use crate::model::{enumerate_dperms, ColoredTree, DPermutation, PrimaryBlockStructure};
use crate::separability::{is_separable, separation_points};

/// Binary correspondence between axes of a `2^(d-1)`-box and primary block
/// structures of d-permutations: row `k` (1-based, `k >= 2`) is `(2,1)` iff
/// bit `k - 2` of the axis is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AxisEncoding {
    d: usize,
}

impl AxisEncoding {
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 || d > 64 {
            return domain(format!("dimension {d} out of range 1..=64"));
        }
        Ok(AxisEncoding { d })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of axes, `2^(d-1)`.
    pub fn axes(&self) -> u64 {
        PrimaryBlockStructure::count(self.d)
    }

    pub fn structure(&self, axis: u64) -> Result<PrimaryBlockStructure> {
        if axis >= self.axes() {
            return domain(format!("axis {axis} out of range 0..{}", self.axes()));
        }
        let rows = (0..self.d)
            .map(|k| k > 0 && axis >> (k - 1) & 1 == 1)
            .collect();
        PrimaryBlockStructure::new(rows)
    }

    pub fn axis(&self, s: &PrimaryBlockStructure) -> Result<u64> {
        if s.d() != self.d {
            return domain(format!("structure has {} rows, expected {}", s.d(), self.d));
        }
        Ok((1..self.d)
            .filter(|&k| s.is_descending(k))
            .map(|k| 1u64 << (k - 1))
            .sum())
    }
}

/// Places `left` before `right`. Rows ascending in `s` keep the left values
/// low; descending rows put them high.
pub fn compose(
    left: &DPermutation,
    right: &DPermutation,
    s: &PrimaryBlockStructure,
) -> Result<DPermutation> {
    let d = left.d();
    if right.d() != d || s.d() != d {
        return domain("blocks and structure must have the same dimension");
    }
    let (l, r) = (left.n() as u32, right.n() as u32);
    let rows = (0..d)
        .map(|i| {
            let (lo, hi) = if s.is_descending(i) { (r, 0) } else { (0, l) };
            left.row(i)
                .iter()
                .map(|v| v + lo)
                .chain(right.row(i).iter().map(|v| v + hi))
                .collect()
        })
        .collect();
    Ok(DPermutation::from_rows_unchecked(rows))
}

/// Maps a guillotine partition of the `2^(d-1)`-box (tree colors are axes) to
/// a separable d-permutation with one more column than the tree has vertices.
pub fn tree_to_dperm(t: &ColoredTree, d: usize) -> Result<DPermutation> {
    let enc = AxisEncoding::new(d)?;
    let colors = u32::try_from(enc.axes()).map_err(|_| {
        crate::error::Error::Unsupported(format!("{} axes do not fit tree colors", enc.axes()))
    })?;
    t.validate(colors)?;
    build(t, &enc)
}

fn build(t: &ColoredTree, enc: &AxisEncoding) -> Result<DPermutation> {
    match t.root() {
        None => DPermutation::identity(enc.d(), 1),
        Some(v) => {
            let left = build(v.left(), enc)?;
            let right = build(v.right(), enc)?;
            compose(&left, &right, &enc.structure(u64::from(v.color()))?)
        }
    }
}

/// Inverse of [`tree_to_dperm`]. Splits at the largest separation point, so
/// parallel cuts nest in the left block.
pub fn dperm_to_tree(p: &DPermutation) -> Result<ColoredTree> {
    if !is_separable(p) {
        return domain(format!("{p} is not separable"));
    }
    let enc = AxisEncoding::new(p.d())?;
    split(p, &enc)
}

fn split(p: &DPermutation, enc: &AxisEncoding) -> Result<ColoredTree> {
    if p.n() == 1 {
        return Ok(ColoredTree::empty());
    }
    let sep = separation_points(p)?;
    let l = *sep.points.last().expect("separable");
    let s = sep.structure.expect("separable");
    let (left, right) = crate::separability::blocks(p, l)?;
    let color = u32::try_from(enc.axis(&s)?).expect("axis below 2^31");
    Ok(ColoredTree::node(
        color,
        split(&left, enc)?,
        split(&right, enc)?,
    ))
}

/// The axis of the 2-column pattern formed by columns `i < j` of `p`.
pub fn pair_axis(p: &DPermutation, i: usize, j: usize) -> u64 {
    (1..p.d())
        .filter(|&k| p.entry(k, i) > p.entry(k, j))
        .map(|k| 1u64 << (k - 1))
        .sum()
}

/// Counts separable d-permutations of `[n]` in which every pair of columns
/// forms a 2-column pattern whose axis is in `allowed`, i.e. that avoid
/// every other d-permutation of `{1, 2}`. Brute force over all d-permutations.
pub fn restricted_separable_count(d: usize, allowed: &[u64], n: usize) -> Result<u64> {
    let enc = AxisEncoding::new(d)?;
    if allowed.is_empty() {
        return domain("allowed axis set is empty");
    }
    if let Some(a) = allowed.iter().find(|&&a| a >= enc.axes()) {
        return domain(format!("axis {a} out of range 0..{}", enc.axes()));
    }
    let mut ok = vec![false; enc.axes() as usize];
    for &a in allowed {
        ok[a as usize] = true;
    }
    let count = enumerate_dperms(d, n)?
        .filter(|p| {
            (0..n).all(|j| (0..j).all(|i| ok[pair_axis(p, i, j) as usize])) && is_separable(p)
        })
        .count();
    Ok(count as u64)
}
