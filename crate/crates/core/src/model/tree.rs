use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// A binary tree whose vertices carry integer colors. Guillotine partitions
/// of a `d`-box by `n` cuts are encoded as trees with `n` vertices colored by
/// `0..d` in which no vertex has a right child of its own color: the root is
/// the highest principal cut, the left branch partitions the part below it and
/// the right branch the part above it.
///
/// Trees are immutable and share subtrees; equality is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColoredTree(Option<Arc<Node>>);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    color: u32,
    #[serde(default)]
    left: ColoredTree,
    #[serde(default)]
    right: ColoredTree,
}

impl Node {
    pub fn color(&self) -> u32 {
        self.color
    }

    pub fn left(&self) -> &ColoredTree {
        &self.left
    }

    pub fn right(&self) -> &ColoredTree {
        &self.right
    }
}

impl ColoredTree {
    pub fn empty() -> Self {
        ColoredTree(None)
    }

    /// Builds a vertex without checking the guillotine condition.
    pub fn node(color: u32, left: ColoredTree, right: ColoredTree) -> Self {
        ColoredTree(Some(Arc::new(Node { color, left, right })))
    }

    pub fn leaf(color: u32) -> Self {
        ColoredTree::node(color, ColoredTree::empty(), ColoredTree::empty())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn root(&self) -> Option<&Node> {
        self.0.as_deref()
    }

    pub fn root_color(&self) -> Option<u32> {
        self.root().map(Node::color)
    }

    pub fn left(&self) -> Option<&ColoredTree> {
        self.root().map(Node::left)
    }

    pub fn right(&self) -> Option<&ColoredTree> {
        self.root().map(Node::right)
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        self.nodes().count()
    }

    /// Preorder traversal of the vertices.
    pub fn nodes(&self) -> Nodes<'_> {
        Nodes {
            stack: self.root().into_iter().collect(),
        }
    }

    pub fn max_color(&self) -> Option<u32> {
        self.nodes().map(Node::color).max()
    }

    /// No vertex has a right child of the same color.
    pub fn is_guillotine_valid(&self) -> bool {
        self.nodes().all(|v| v.right.root_color() != Some(v.color))
    }

    /// Checks guillotine validity and that every color is below `colors`.
    pub fn validate(&self, colors: u32) -> Result<()> {
        if let Some(c) = self.max_color() {
            if c >= colors {
                return domain(format!("color {c} out of range 0..{colors}"));
            }
        }
        if !self.is_guillotine_valid() {
            return domain("a vertex has a right child of its own color");
        }
        Ok(())
    }

    /// Applies `f` to every color.
    pub fn map_colors(&self, f: &impl Fn(u32) -> u32) -> ColoredTree {
        match self.root() {
            None => ColoredTree::empty(),
            Some(v) => ColoredTree::node(f(v.color), v.left.map_colors(f), v.right.map_colors(f)),
        }
    }
}

impl fmt::Debug for ColoredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredTree({self})")
    }
}

/// `-` for the empty tree, `c` for a leaf, `c(left,right)` otherwise.
impl fmt::Display for ColoredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root() {
            None => f.write_str("-"),
            Some(v) if v.left.is_empty() && v.right.is_empty() => write!(f, "{}", v.color),
            Some(v) => write!(f, "{}({},{})", v.color, v.left, v.right),
        }
    }
}

pub struct Nodes<'a> {
    stack: Vec<&'a Node>,
}

impl<'a> Iterator for Nodes<'a> {
    type Item = &'a Node;

    fn next(&mut self) -> Option<&'a Node> {
        let v = self.stack.pop()?;
        if let Some(r) = v.right.root() {
            self.stack.push(r);
        }
        if let Some(l) = v.left.root() {
            self.stack.push(l);
        }
        Some(v)
    }
}

/// Every guillotine-valid tree with `n` vertices colored by `0..d` accepted by
/// `filter`, each exactly once.
///
/// Order: root color, then left-subtree size, then left subtree, then right
/// subtree, with subtrees in the same order recursively.
pub fn enumerate_colored_trees<F>(d: u32, n: usize, filter: F) -> Result<ColoredTrees<F>>
where
    F: FnMut(&ColoredTree) -> bool,
{
    if d == 0 {
        return domain("enumerate_colored_trees needs d >= 1");
    }
    let palette: Vec<u32> = (0..d).collect();
    enumerate_colored_trees_with_palette(&palette, n, filter)
}

/// Like [`enumerate_colored_trees`] but with colors drawn from `palette`.
pub fn enumerate_colored_trees_with_palette<F>(
    palette: &[u32],
    n: usize,
    filter: F,
) -> Result<ColoredTrees<F>>
where
    F: FnMut(&ColoredTree) -> bool,
{
    if palette.is_empty() {
        return domain("the color palette is empty");
    }
    let mut palette = palette.to_vec();
    palette.sort_unstable();
    palette.dedup();

    let mut pools = vec![vec![ColoredTree::empty()]];
    for size in 1..n {
        let level: Vec<ColoredTree> = Level::new(&palette, &pools, size).collect();
        pools.push(level);
    }
    Ok(ColoredTrees {
        pools,
        palette,
        n,
        cursor: Cursor::default(),
        emitted_empty: false,
        filter,
    })
}

#[derive(Default, Clone, Copy)]
struct Cursor {
    color: usize,
    left_size: usize,
    left: usize,
    right: usize,
}

impl Cursor {
    fn step(
        &mut self,
        palette: &[u32],
        pools: &[Vec<ColoredTree>],
        size: usize,
    ) -> Option<ColoredTree> {
        loop {
            let &color = palette.get(self.color)?;
            if self.left_size >= size {
                *self = Cursor {
                    color: self.color + 1,
                    ..Cursor::default()
                };
                continue;
            }
            let lefts = &pools[self.left_size];
            let rights = &pools[size - 1 - self.left_size];
            if self.left >= lefts.len() {
                self.left_size += 1;
                self.left = 0;
                self.right = 0;
                continue;
            }
            if self.right >= rights.len() {
                self.left += 1;
                self.right = 0;
                continue;
            }
            let right = &rights[self.right];
            self.right += 1;
            if right.root_color() == Some(color) {
                continue;
            }
            return Some(ColoredTree::node(
                color,
                lefts[self.left].clone(),
                right.clone(),
            ));
        }
    }
}

struct Level<'a> {
    palette: &'a [u32],
    pools: &'a [Vec<ColoredTree>],
    size: usize,
    cursor: Cursor,
}

impl<'a> Level<'a> {
    fn new(palette: &'a [u32], pools: &'a [Vec<ColoredTree>], size: usize) -> Self {
        Level {
            palette,
            pools,
            size,
            cursor: Cursor::default(),
        }
    }
}

impl Iterator for Level<'_> {
    type Item = ColoredTree;

    fn next(&mut self) -> Option<ColoredTree> {
        self.cursor.step(self.palette, self.pools, self.size)
    }
}

/// Iterator returned by [`enumerate_colored_trees`].
pub struct ColoredTrees<F> {
    pools: Vec<Vec<ColoredTree>>,
    palette: Vec<u32>,
    n: usize,
    cursor: Cursor,
    emitted_empty: bool,
    filter: F,
}

impl<F: FnMut(&ColoredTree) -> bool> Iterator for ColoredTrees<F> {
    type Item = ColoredTree;

    fn next(&mut self) -> Option<ColoredTree> {
        if self.n == 0 {
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            let t = ColoredTree::empty();
            return (self.filter)(&t).then_some(t);
        }
        loop {
            let t = self.cursor.step(&self.palette, &self.pools, self.n)?;
            if (self.filter)(&t) {
                return Some(t);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Coefficients of f = 1 + x f + (d-1) x f^2 by the convolution
    /// recurrence, kept independent of the series module.
    fn guillotine_counts(d: u64, upto: usize) -> Vec<u64> {
        let mut a = vec![1u64];
        for n in 1..=upto {
            let conv: u64 = (0..n).map(|k| a[k] * a[n - 1 - k]).sum();
            a.push(a[n - 1] + (d - 1) * conv);
        }
        a
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_colored_trees(2, 2, |_| true).unwrap().count(), 6);
        assert_eq!(enumerate_colored_trees(3, 1, |_| true).unwrap().count(), 3);
        assert_eq!(enumerate_colored_trees(1, 0, |_| true).unwrap().count(), 1);
    }

    #[test]
    fn matches_guillotine_recurrence() {
        for d in 1..=4u32 {
            let expected = guillotine_counts(d as u64, 7);
            for n in 0..=7usize {
                let got = enumerate_colored_trees(d, n, |_| true).unwrap().count() as u64;
                assert_eq!(got, expected[n], "d={d} n={n}");
            }
        }
    }

    #[test]
    fn generated_trees_are_valid_and_distinct() {
        let trees: Vec<_> = enumerate_colored_trees(3, 4, |_| true).unwrap().collect();
        assert!(trees.iter().all(|t| t.size() == 4 && t.validate(3).is_ok()));
        let set: std::collections::HashSet<_> = trees.iter().cloned().collect();
        assert_eq!(set.len(), trees.len());
    }

    #[test]
    fn deterministic() {
        let a: Vec<_> = enumerate_colored_trees(2, 5, |_| true).unwrap().collect();
        let b: Vec<_> = enumerate_colored_trees(2, 5, |_| true).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn palette_restricts_colors() {
        let trees: Vec<_> = enumerate_colored_trees_with_palette(&[1, 3], 3, |_| true)
            .unwrap()
            .collect();
        assert_eq!(trees.len(), 22);
        assert!(trees
            .iter()
            .all(|t| t.nodes().all(|v| v.color() == 1 || v.color() == 3)));
    }

    #[test]
    fn json_encoding() {
        let t = ColoredTree::node(0, ColoredTree::leaf(1), ColoredTree::empty());
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"color":0,"left":{"color":1,"left":null,"right":null},"right":null}"#
        );
        assert_eq!(serde_json::from_str::<ColoredTree>(&s).unwrap(), t);
        assert_eq!(
            serde_json::to_string(&ColoredTree::empty()).unwrap(),
            "null"
        );
        assert_eq!(
            serde_json::from_str::<ColoredTree>("null").unwrap(),
            ColoredTree::empty()
        );
    }

    #[test]
    fn display() {
        let t = ColoredTree::node(0, ColoredTree::leaf(1), ColoredTree::empty());
        assert_eq!(t.to_string(), "0(1,-)");
        assert!(
            !ColoredTree::node(0, ColoredTree::empty(), ColoredTree::leaf(0)).is_guillotine_valid()
        );
    }
}
