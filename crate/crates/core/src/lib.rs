//! Exact enumeration and bijections for separable d-permutations and
//! guillotine partitions of boxes.
//!
//! The crate is split by concern:
//!
//! - [`model`]: the domain values ([`DPermutation`], [`ColoredTree`],
//!   [`ColoredSchroderPath`], [`PatternSpec`]) and the exhaustive generators
//!   that feed every brute-force count.
//! - [`separability`]: separation points, block decomposition, multi-row
//!   pattern containment, barred patterns and brute-force class counting.
//! - [`series`]: exact truncated power series and every counting formula,
//!   each available through a generating function and a closed form or
//!   recurrence.
//! - [`bijections`]: invertible maps between colored trees, colored Schröder
//!   paths and separable d-permutations, the restricted-tree predicates and a
//!   planar SVG renderer.
//!
//! Counting conventions: `g_q(n)` is the number of guillotine partitions of a
//! `q`-dimensional box by `n` cuts and `s_d(n)` is the number of separable
//! d-permutations of `[n]`. They satisfy `s_d(n) = g_{2^(d-1)}(n - 1)`.

pub mod bijections;
pub mod error;
pub mod model;
pub mod separability;
pub mod series;

pub use bijections::{
    alternating_predicate, boundary_predicate, dperm_to_tree, path_to_tree, render_planar,
    restricted_separable_count, tree_to_dperm, tree_to_path, window_predicate, AxisEncoding,
};
pub use error::{Error, Result};
pub use model::{
    enumerate_colored_trees, enumerate_colored_trees_with_palette, enumerate_dperms, BarredPattern,
    ClassicalPattern, ColoredSchroderPath, ColoredTree, DPermutation, PatternSpec,
    PrimaryBlockStructure, Step,
};
pub use separability::{
    avoids, avoids_barred, blocks, contains_pattern, count_class, is_separable,
    primary_block_structure, separation_points, RowPolicy, SeparationResult,
};
pub use series::TruncatedPowerSeries;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
