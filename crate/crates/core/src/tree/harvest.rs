//! Gluing products and the harvestable-form rewriting.

use super::{Color, IndexedTree, Node};
use crate::error::{Error, Result};

/// Glues the two roots into one black root.
pub fn circ_product(a: &IndexedTree, b: &IndexedTree) -> Result<IndexedTree> {
    if a.color(a.root()) != Color::Black || b.color(b.root()) != Color::Black {
        return Err(Error::RootNotBlack);
    }
    let mut root = a.to_node();
    root.children.extend(b.to_node().children);
    Ok(root.to_tree())
}

/// `h(a ∘ b)`.
pub fn circ_h(a: &IndexedTree, b: &IndexedTree) -> Result<IndexedTree> {
    harvestable_form(&circ_product(a, b)?)
}

/// Conditions (H1)-(H5), with (H4) read for black children only. The unit
/// tree counts as harvestable.
pub fn is_harvestable(tree: &IndexedTree) -> bool {
    if tree.validate().is_err() {
        return false;
    }
    let root = tree.root();
    if tree.color(root) != Color::Black {
        return false;
    }
    if tree.vertex_count() == 1 {
        return true;
    }
    // H1
    if tree.degree(root) != 1 {
        return false;
    }
    for v in 0..tree.vertex_count() {
        let deg = tree.degree(v);
        match tree.color(v) {
            // H2
            Color::White if deg < 3 => return false,
            // H3
            Color::Black if deg >= 3 => return false,
            _ => {}
        }
    }
    harvestable_edges(&tree.to_node())
}

// H4 (black child of a white parent) and H5 (black-black) need positive
// indices.
fn harvestable_edges(node: &Node) -> bool {
    node.children
        .iter()
        .all(|(k, child)| (child.color == Color::White || *k > 0) && harvestable_edges(child))
}

/// Rewrites an essentially positive tree with black root into a harvestable
/// one with the same truncated sums:
///
/// 1. contract every 0-edge with a white endpoint,
/// 2. merge the two edges at every white vertex of degree 2,
/// 3. move the children of every branched black non-root vertex onto a new
///    white vertex joined to it by a 0-edge,
/// 4. do the same at the root if it is not terminal.
///
/// Steps 1 and 2 are repeated until neither applies.
pub fn harvestable_form(tree: &IndexedTree) -> Result<IndexedTree> {
    tree.validate()
        .map_err(|e| Error::InvalidTree(Box::new(e)))?;
    if tree.color(tree.root()) != Color::Black {
        return Err(Error::RootNotBlack);
    }
    if !tree.is_essentially_positive() {
        return Err(Error::NotEssentiallyPositive);
    }
    let mut root = tree.to_node();
    loop {
        let contracted = contract(&mut root);
        let jointed = joint(&mut root);
        if !contracted && !jointed {
            break;
        }
    }
    split_branches(&mut root);
    if root.children.len() >= 2 {
        let children = std::mem::take(&mut root.children);
        root.children.push((0, Node::new(Color::White, children)));
    }
    Ok(root.to_tree())
}

fn contract(node: &mut Node) -> bool {
    let mut changed = false;
    while let Some(pos) = node
        .children
        .iter()
        .position(|(k, c)| *k == 0 && (node.color == Color::White || c.color == Color::White))
    {
        let (_, child) = node.children.remove(pos);
        if child.color == Color::Black {
            node.color = Color::Black;
        }
        node.children.extend(child.children);
        changed = true;
    }
    for (_, child) in &mut node.children {
        changed |= contract(child);
    }
    changed
}

fn joint(node: &mut Node) -> bool {
    let mut changed = false;
    for (k, child) in &mut node.children {
        while child.color == Color::White && child.children.len() == 1 {
            let (k2, grandchild) = child.children.pop().expect("one child");
            *k += k2;
            *child = grandchild;
            changed = true;
        }
        changed |= joint(child);
    }
    changed
}

fn split_branches(node: &mut Node) {
    for (_, child) in &mut node.children {
        split_branches(child);
        if child.color == Color::Black && child.children.len() >= 2 {
            let grandchildren = std::mem::take(&mut child.children);
            child
                .children
                .push((0, Node::new(Color::White, grandchildren)));
        }
    }
}
