use crate::error::{domain, Result};
use crate::model::{ColoredSchroderPath, ColoredTree, Step};

/// Encodes a guillotine-valid tree colored by `0..d` as a Schröder path with
/// up-steps colored by `1..d`. Inverse of [`path_to_tree`].
pub fn tree_to_path(t: &ColoredTree, d: u32) -> Result<ColoredSchroderPath> {
    if d == 0 {
        return domain("tree_to_path needs d >= 1");
    }
    t.validate(d)?;
    let mut steps = Vec::with_capacity(2 * t.size());
    encode(t, d, &mut steps);
    ColoredSchroderPath::new(steps)
}

fn encode(t: &ColoredTree, d: u32, out: &mut Vec<Step>) {
    let Some(v) = t.root() else { return };
    match v.right().root_color() {
        None if v.color() == 0 => {
            out.push(Step::Level);
            encode(v.left(), d, out);
        }
        None => {
            out.push(Step::Up(v.color()));
            encode(v.left(), d, out);
            out.push(Step::Down);
        }
        Some(b) => {
            // Validity gives color != b, so the up-step color is nonzero.
            let a = (v.color() + d - b) % d;
            out.push(Step::Up(a));
            encode(v.left(), d, out);
            out.push(Step::Down);
            encode(v.right(), d, out);
        }
    }
}

/// Decodes a colored Schröder path:
///
/// - `L Q` becomes a root of color 0 with left branch `Q`;
/// - `U_a Q D` becomes a root of color `a` with left branch `Q`;
/// - `U_a Q D R` with `R` nonempty becomes a root of color `(a + b) mod d`
///   with branches `Q` and `R`, where `b` is the root color of the tree for
///   `R`.
///
/// The result never has a right child sharing its parent's color.
pub fn path_to_tree(p: &ColoredSchroderPath, d: u32) -> Result<ColoredTree> {
    if d == 0 {
        return domain("path_to_tree needs d >= 1");
    }
    for s in p.steps() {
        if let Step::Up(c) = *s {
            if c == 0 || c >= d {
                return domain(format!("up-step color {c} out of range 1..{d}"));
            }
        }
    }
    Ok(decode(p.steps(), d))
}

fn decode(steps: &[Step], d: u32) -> ColoredTree {
    match steps.first() {
        None => ColoredTree::empty(),
        Some(Step::Level) => ColoredTree::node(0, decode(&steps[1..], d), ColoredTree::empty()),
        Some(&Step::Up(a)) => {
            let close = matching_down(steps);
            let inner = decode(&steps[1..close], d);
            let rest = &steps[close + 1..];
            if rest.is_empty() {
                ColoredTree::node(a, inner, ColoredTree::empty())
            } else {
                let right = decode(rest, d);
                let b = right.root_color().expect("nonempty remainder");
                ColoredTree::node((a + b) % d, inner, right)
            }
        }
        Some(Step::Down) => unreachable!("validated paths never start with a down-step"),
    }
}

fn matching_down(steps: &[Step]) -> usize {
    let mut height = 0i64;
    for (i, s) in steps.iter().enumerate() {
        match s {
            Step::Up(_) => height += 1,
            Step::Down => {
                height -= 1;
                if height == 0 {
                    return i;
                }
            }
            Step::Level => {}
        }
    }
    unreachable!("validated paths are balanced")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::enumerate_colored_trees;

    fn path(s: &str) -> ColoredSchroderPath {
        s.parse().unwrap()
    }

    #[test]
    fn base_cases() {
        assert_eq!(
            tree_to_path(&ColoredTree::empty(), 2).unwrap(),
            ColoredSchroderPath::empty()
        );
        assert_eq!(tree_to_path(&ColoredTree::leaf(0), 3).unwrap(), path("L"));
        assert_eq!(
            tree_to_path(&ColoredTree::leaf(2), 3).unwrap(),
            path("U2 D")
        );
        assert_eq!(path_to_tree(&path(""), 2).unwrap(), ColoredTree::empty());
    }

    #[test]
    fn decomposition_cases() {
        let chain = path_to_tree(&path("L L"), 2).unwrap();
        assert_eq!(
            chain,
            ColoredTree::node(0, ColoredTree::leaf(0), ColoredTree::empty())
        );

        let t = path_to_tree(&path("U1 D L"), 2).unwrap();
        assert_eq!(
            t,
            ColoredTree::node(1, ColoredTree::empty(), ColoredTree::leaf(0))
        );
    }

    #[test]
    fn errors() {
        assert!(path_to_tree(&path("U2 D"), 2).is_err());
        assert!(tree_to_path(&ColoredTree::leaf(3), 3).is_err());
        let invalid = ColoredTree::node(1, ColoredTree::empty(), ColoredTree::leaf(1));
        assert!(tree_to_path(&invalid, 2).is_err());
    }

    #[test]
    fn round_trip_d3() {
        for n in 0..=5 {
            for t in enumerate_colored_trees(3, n, |_| true).unwrap() {
                let p = tree_to_path(&t, 3).unwrap();
                assert_eq!(p.length(), 2 * n);
                assert_eq!(path_to_tree(&p, 3).unwrap(), t, "{t}");
            }
        }
    }
}
