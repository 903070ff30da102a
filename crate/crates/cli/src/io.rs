//! Text encodings used on stdin/stdout. Trees carry 1-based colors unless
//! `zero_based` is set.

use guillotine_core::{ColoredSchroderPath, ColoredTree, DPermutation};

use crate::Failure;

pub fn parse_tree(text: &str, zero_based: bool) -> Result<ColoredTree, Failure> {
    let t: ColoredTree = serde_json::from_str(text)
        .map_err(|e| Failure::Usage(format!("invalid tree JSON: {e}")))?;
    if zero_based {
        return Ok(t);
    }
    if t.nodes().any(|v| v.color() == 0) {
        return Err(Failure::Usage(
            "tree colors start at 1 (use --zero-based for 0)".into(),
        ));
    }
    Ok(t.map_colors(&|c| c - 1))
}

pub fn tree_json(t: &ColoredTree, zero_based: bool) -> String {
    let t = if zero_based {
        t.clone()
    } else {
        t.map_colors(&|c| c + 1)
    };
    serde_json::to_string(&t).expect("trees serialize")
}

pub fn parse_path(text: &str) -> Result<ColoredSchroderPath, Failure> {
    let text = text.trim();
    let text = text
        .strip_prefix('"')
        .and_then(|t| t.strip_suffix('"'))
        .unwrap_or(text);
    text.parse().map_err(|e| Failure::Usage(format!("{e}")))
}

pub fn parse_dperm(text: &str) -> Result<DPermutation, Failure> {
    serde_json::from_str(text)
        .map_err(|e| Failure::Usage(format!("invalid d-permutation JSON: {e}")))
}

pub fn dperm_json(p: &DPermutation) -> String {
    serde_json::to_string(p).expect("d-permutations serialize")
}
