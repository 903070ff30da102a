use crate::model::{ColoredTree, Node};

/// Tree form of the boundary restriction, where every cut must meet the
/// boundary of the box. Besides the guillotine condition it forbids a vertex
/// `u` with a vertex `v` of the same color in its right subtree whose left
/// child has a different color, and the mirror image (`v` in the left
/// subtree, right child of another color).
pub fn boundary_predicate(t: &ColoredTree) -> bool {
    t.nodes().all(|u| {
        !has_offending_descendant(u.right(), u.color(), Node::left)
            && !has_offending_descendant(u.left(), u.color(), Node::right)
    })
}

fn has_offending_descendant(sub: &ColoredTree, c: u32, child: fn(&Node) -> &ColoredTree) -> bool {
    sub.nodes()
        .any(|v| v.color() == c && child(v).root_color().is_some_and(|w| w != c))
}

/// At most `m - 1` parallel principal cuts per subbox: no chain of `m`
/// vertices of one color, each the left child of the previous.
pub fn alternating_predicate(t: &ColoredTree, m: usize) -> bool {
    fn run(t: &ColoredTree, parent: Option<u32>, len: usize, m: usize) -> bool {
        let Some(v) = t.root() else { return true };
        let len = if parent == Some(v.color()) {
            len + 1
        } else {
            1
        };
        len < m && run(v.left(), Some(v.color()), len, m) && run(v.right(), None, 0, m)
    }
    run(t, None, 0, m)
}

/// Forbids (A) a vertex whose two children share a color and (B) a vertex `p`
/// whose left child `p'` has `p`'s color and a right child colored like
/// `p`'s right child.
pub fn window_predicate(t: &ColoredTree) -> bool {
    t.nodes().all(|p| {
        let q = p.right().root_color();
        if q.is_none() {
            return true;
        }
        let Some(l) = p.left().root() else {
            return true;
        };
        l.color() != q.unwrap() && !(l.color() == p.color() && l.right().root_color() == q)
    })
}
