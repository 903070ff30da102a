use std::fmt;

use serde::{Deserialize, Serialize};

use super::DPermutation;
use crate::error::{domain, Result};

/// The top-level block arrangement of a separable d-permutation: for each row,
/// whether the left block lies below the right one `(1,2)` or above it
/// `(2,1)`. Row 1 is always `(1,2)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimaryBlockStructure {
    descending: Vec<bool>,
}

impl PrimaryBlockStructure {
    /// `descending[i]` is `true` when row `i` is `(2,1)`.
    pub fn new(descending: Vec<bool>) -> Result<Self> {
        match descending.first() {
            None => domain("a block structure needs at least one row"),
            Some(true) => domain("row 1 of a block structure is always (1,2)"),
            Some(false) => Ok(PrimaryBlockStructure { descending }),
        }
    }

    /// The all-`(1,2)` structure.
    pub fn ascending(d: usize) -> Result<Self> {
        PrimaryBlockStructure::new(vec![false; d])
    }

    pub fn d(&self) -> usize {
        self.descending.len()
    }

    /// Whether row `i` (0-based) is `(2,1)`.
    pub fn is_descending(&self, i: usize) -> bool {
        self.descending[i]
    }

    pub fn rows(&self) -> &[bool] {
        &self.descending
    }

    /// Number of distinct structures for `d` rows.
    pub fn count(d: usize) -> u64 {
        1u64 << (d - 1)
    }

    /// The structure viewed as a d-permutation of `{1, 2}`.
    pub fn to_dperm(&self) -> DPermutation {
        let rows = self
            .descending
            .iter()
            .map(|&desc| if desc { vec![2, 1] } else { vec![1, 2] })
            .collect();
        DPermutation::from_rows_unchecked(rows)
    }

    /// Reads a structure off a d-permutation of `{1, 2}`.
    pub fn from_dperm(p: &DPermutation) -> Result<Self> {
        if p.n() != 2 {
            return domain("a block structure is a d-permutation of {1, 2}");
        }
        PrimaryBlockStructure::new(p.rows().iter().map(|r| r[0] == 2).collect())
    }
}

impl fmt::Debug for PrimaryBlockStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimaryBlockStructure({self})")
    }
}

impl fmt::Display for PrimaryBlockStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .descending
            .iter()
            .map(|&d| if d { "(2,1)" } else { "(1,2)" })
            .collect();
        f.write_str(&parts.join(","))
    }
}
