//! Domain values and the exhaustive generators behind every brute-force count.

mod dperm;
mod path;
mod pattern;
mod structure;
mod tree;

pub use dperm::{enumerate_dperms, standardize, DPermutation, DPermutations};
pub use path::{ColoredSchroderPath, Step};
pub use pattern::{BarredPattern, ClassicalPattern, PatternSpec};
pub use structure::PrimaryBlockStructure;
pub use tree::{
    enumerate_colored_trees, enumerate_colored_trees_with_palette, ColoredTree, ColoredTrees, Node,
    Nodes,
};

pub(crate) use dperm::is_permutation;
