//! Invertible maps between colored trees, colored Schröder paths and
//! separable d-permutations, the tree predicates that carve out restricted
//! guillotine families, and a planar renderer.

mod permutation;
mod predicates;
mod render;
mod schroder;

pub use permutation::{
    compose, dperm_to_tree, pair_axis, restricted_separable_count, tree_to_dperm, AxisEncoding,
};
pub use predicates::{alternating_predicate, boundary_predicate, window_predicate};
pub use render::render_planar;
pub use schroder::{path_to_tree, tree_to_path};
