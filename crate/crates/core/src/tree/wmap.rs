//! The word map `w` from harvestable pairs to `h^1`.

use super::harvest::{harvestable_form, is_harvestable};
use super::{Color, IndexedTree, Node};
use crate::error::{Error, Result};
use crate::word::{HElem, Index};

/// `w(X, k)` for a harvestable pair.
///
/// Walking up from the root through the black chain with edge indices
/// `k_r, ..., k_1` ends either at a leaf, giving `z_{k_1} ... z_{k_r}`, or at
/// an edge `k'` into a white vertex with stems `T_1, ..., T_s`, giving
/// `(w(T_1) sh ... sh w(T_s)) x^{k'} z_{k_1} ... z_{k_r}`.
pub fn w_word(tree: &IndexedTree) -> Result<HElem> {
    if !is_harvestable(tree) {
        return Err(Error::NotHarvestable);
    }
    let root = tree.to_node();
    Ok(match root.children.first() {
        None => HElem::one(),
        Some((k, top)) => w_stem(*k, top),
    })
}

/// `w(h(X))`.
pub fn w_of_harvested(tree: &IndexedTree) -> Result<HElem> {
    w_word(&harvestable_form(tree)?)
}

// w of the stem "black root --k-- top".
fn w_stem(k: u32, top: &Node) -> HElem {
    match top.color {
        Color::White => top
            .children
            .iter()
            .fold(HElem::one(), |acc, (l, t)| acc.shuffle(&w_stem(*l, t)))
            .right_mul_x_pow(k),
        Color::Black => {
            let z =
                HElem::z(&Index::new(vec![k]).expect("harvestable chains have positive indices"));
            match top.children.first() {
                None => z,
                Some((k2, next)) => w_stem(*k2, next).concat(&z),
            }
        }
    }
}
