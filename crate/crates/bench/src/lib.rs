//! Criterion benchmarks for `guillotine-core`; see `benches/`.

use guillotine_core::{ClassicalPattern, PatternSpec};

/// The three separability obstructions as pattern specs.
pub fn obstructions() -> Vec<PatternSpec> {
    ClassicalPattern::separability_obstructions()
        .into_iter()
        .map(Into::into)
        .collect()
}
