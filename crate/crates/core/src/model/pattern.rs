use std::fmt;
use std::str::FromStr;

use super::dperm::{is_permutation, standardize};
use super::DPermutation;
use crate::error::{domain, Error, Result};

/// A multi-row pattern under the row-invariant convention: every form
/// obtained by permuting rows (then reordering columns so the first row is
/// the identity) denotes the same pattern. The stored form list is closed
/// under that operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassicalPattern {
    name: String,
    forms: Vec<DPermutation>,
}

impl ClassicalPattern {
    /// Uses `forms` verbatim; fails unless they share dimensions and are closed
    /// under row permutation.
    pub fn from_forms(name: impl Into<String>, forms: Vec<DPermutation>) -> Result<Self> {
        let Some(first) = forms.first() else {
            return domain("a pattern needs at least one form");
        };
        let (d, n) = (first.d(), first.n());
        if forms.iter().any(|f| f.d() != d || f.n() != n) {
            return domain("all forms of a pattern must have the same dimensions");
        }
        for f in &forms {
            for g in row_permutation_orbit(f) {
                if !forms.contains(&g) {
                    return domain(format!("form list is not closed: missing {g}"));
                }
            }
        }
        Ok(ClassicalPattern {
            name: name.into(),
            forms,
        })
    }

    /// The closure of a single form.
    pub fn row_invariant(name: impl Into<String>, form: DPermutation) -> Self {
        ClassicalPattern {
            name: name.into(),
            forms: row_permutation_orbit(&form),
        }
    }

    /// A single-row permutation pattern, read as the 2-permutation
    /// `(identity, perm)` and closed under row exchange (so `2413` also
    /// covers its inverse `3142`).
    pub fn one_row(perm: &[u32]) -> Result<Self> {
        let form = DPermutation::from_permutation(perm)?;
        let name: String = perm.iter().map(|v| v.to_string()).collect();
        Ok(ClassicalPattern::row_invariant(name, form))
    }

    pub fn pi1() -> Self {
        Self::from_listed(
            "pi1",
            &[
                &[&[1, 2, 3, 4], &[2, 4, 1, 3]],
                &[&[1, 2, 3, 4], &[3, 1, 4, 2]],
            ],
        )
    }

    pub fn pi2() -> Self {
        Self::from_listed(
            "pi2",
            &[
                &[&[1, 2, 3], &[2, 1, 3], &[1, 3, 2]],
                &[&[1, 2, 3], &[2, 1, 3], &[3, 1, 2]],
                &[&[1, 2, 3], &[2, 3, 1], &[1, 3, 2]],
                &[&[1, 2, 3], &[1, 3, 2], &[2, 1, 3]],
                &[&[1, 2, 3], &[1, 3, 2], &[2, 3, 1]],
                &[&[1, 2, 3], &[3, 1, 2], &[2, 1, 3]],
            ],
        )
    }

    pub fn pi3() -> Self {
        Self::from_listed(
            "pi3",
            &[
                &[&[1, 2, 3], &[2, 3, 1], &[3, 1, 2]],
                &[&[1, 2, 3], &[3, 1, 2], &[2, 3, 1]],
            ],
        )
    }

    /// The three patterns characterizing separability.
    pub fn separability_obstructions() -> [ClassicalPattern; 3] {
        [Self::pi1(), Self::pi2(), Self::pi3()]
    }

    fn from_listed(name: &str, forms: &[&[&[u32]]]) -> Self {
        let forms = forms
            .iter()
            .map(|rows| {
                DPermutation::from_rows_unchecked(rows.iter().map(|r| r.to_vec()).collect())
            })
            .collect();
        ClassicalPattern {
            name: name.to_string(),
            forms,
        }
    }

    /// Drops form `index`. Only meaningful for fault-injection self tests,
    /// since the result is no longer closed.
    pub fn without_form(&self, index: usize) -> Self {
        let mut forms = self.forms.clone();
        forms.remove(index);
        ClassicalPattern {
            name: format!("{}-without-form-{}", self.name, index + 1),
            forms,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn forms(&self) -> &[DPermutation] {
        &self.forms
    }

    /// Rows of each form.
    pub fn d(&self) -> usize {
        self.forms.first().map_or(0, DPermutation::d)
    }

    /// Columns of each form.
    pub fn n(&self) -> usize {
        self.forms.first().map_or(0, DPermutation::n)
    }
}

/// All normalized forms reachable by permuting the rows of `form`, in the
/// order first reached, starting with `form` itself.
fn row_permutation_orbit(form: &DPermutation) -> Vec<DPermutation> {
    let d = form.d();
    let mut order: Vec<u32> = (0..d as u32).collect();
    let mut out = vec![form.clone()];
    loop {
        let rows: Vec<Vec<u32>> = order
            .iter()
            .map(|&i| form.row(i as usize).to_vec())
            .collect();
        let g = DPermutation::normalize(&rows).expect("rows of a d-permutation");
        if !out.contains(&g) {
            out.push(g);
        }
        if !super::dperm::next_permutation(&mut order) {
            break;
        }
    }
    out
}

/// A single-row pattern with exactly one barred letter. A permutation avoids
/// it when every occurrence of the reduced pattern (bar deleted,
/// standardized) extends to an occurrence of the full pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BarredPattern {
    base: Vec<u32>,
    barred: usize,
}

impl BarredPattern {
    /// `barred_position` is 1-based.
    pub fn new(base: Vec<u32>, barred_position: usize) -> Result<Self> {
        if base.len() < 2 || !is_permutation(&base) {
            return domain("a barred pattern needs a permutation of length >= 2");
        }
        if barred_position == 0 || barred_position > base.len() {
            return domain(format!("barred position {barred_position} out of range"));
        }
        Ok(BarredPattern {
            base,
            barred: barred_position - 1,
        })
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    /// 1-based position of the barred letter.
    pub fn barred_position(&self) -> usize {
        self.barred + 1
    }

    /// The bar-deleted, standardized pattern.
    pub fn reduced(&self) -> Vec<u32> {
        let rest: Vec<u32> = self
            .base
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != self.barred)
            .map(|(_, &v)| v)
            .collect();
        standardize(&rest)
    }
}

impl fmt::Display for BarredPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.base.iter().enumerate() {
            if i == self.barred {
                f.write_str("~")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Either a row-invariant multi-row pattern or a one-bar single-row pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternSpec {
    Classical(ClassicalPattern),
    Barred(BarredPattern),
}

impl PatternSpec {
    pub fn name(&self) -> String {
        match self {
            PatternSpec::Classical(c) => c.name().to_string(),
            PatternSpec::Barred(b) => b.to_string(),
        }
    }
}

impl From<ClassicalPattern> for PatternSpec {
    fn from(p: ClassicalPattern) -> Self {
        PatternSpec::Classical(p)
    }
}

impl From<BarredPattern> for PatternSpec {
    fn from(p: BarredPattern) -> Self {
        PatternSpec::Barred(p)
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Parses `pi1`, `pi2`, `pi3`, digit strings such as `2413`, and barred
/// patterns with a tilde before the barred letter such as `21~354`.
impl FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pi1" => return Ok(ClassicalPattern::pi1().into()),
            "pi2" => return Ok(ClassicalPattern::pi2().into()),
            "pi3" => return Ok(ClassicalPattern::pi3().into()),
            _ => {}
        }
        let mut digits = Vec::new();
        let mut bars = Vec::new();
        for ch in s.chars() {
            match ch {
                '~' => bars.push(digits.len() + 1),
                '1'..='9' => digits.push(ch.to_digit(10).unwrap()),
                _ => return Err(Error::Parse(format!("bad pattern {s:?}"))),
            }
        }
        if digits.is_empty() {
            return Err(Error::Parse(format!("bad pattern {s:?}")));
        }
        if !is_permutation(&digits) {
            return Err(Error::Parse(format!("pattern {s:?} is not a permutation")));
        }
        match bars.as_slice() {
            [] => Ok(ClassicalPattern::one_row(&digits)?.into()),
            [pos] => Ok(BarredPattern::new(digits, *pos)?.into()),
            _ => Err(Error::Unsupported(format!(
                "pattern {s:?} has more than one barred entry"
            ))),
        }
    }
}
