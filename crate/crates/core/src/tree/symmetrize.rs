//! The symmetrization map on tree combinations.

use num_traits::{One, Zero};

use super::{Color, IndexedTree, TreeCombo};
use crate::error::{Error, Result};
use crate::series::TSeries;
use crate::symmetrizer::{bounded_tuples, shifted_binom};
use crate::Rational;

fn check_input(tree: &IndexedTree) -> Result<()> {
    tree.validate()
        .map_err(|e| Error::InvalidTree(Box::new(e)))?;
    if tree.color(tree.root()) != Color::Black {
        return Err(Error::RootNotBlack);
    }
    if !tree.is_essentially_positive() {
        return Err(Error::NotEssentiallyPositive);
    }
    Ok(())
}

/// Sum over black `v` of `(-1)^{k_P} sum_l b_P(k; l) (X_v, k + l) t^{|l|}`
/// with `P` the path from the root to `v` and `l` supported on `P`,
/// truncated at `order`.
pub fn cap_phi_hat(tree: &IndexedTree, order: usize) -> Result<TSeries<TreeCombo>> {
    check_input(tree)?;
    let mut out = TSeries::zero(order)?;
    let max_weight = (order - 1) as u32;
    for v in tree.blacks() {
        let path = tree.path_edges(tree.root(), v)?;
        let path_weight: u64 = path.iter().map(|&e| tree.edges()[e].index as u64).sum();
        let sign = if path_weight.is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
        let rerooted = tree.change_root(v)?;
        for l in bounded_tuples(path.len(), max_weight) {
            let b: num_bigint::BigInt = path
                .iter()
                .zip(&l.0)
                .map(|(&e, &le)| shifted_binom(tree.edges()[e].index, le))
                .product();
            if b.is_zero() {
                continue;
            }
            let additions: Vec<(usize, u32)> =
                path.iter().copied().zip(l.0.iter().copied()).collect();
            let term = TreeCombo::from_tree(rerooted.with_added_indices(&additions))?;
            out.add_at(
                l.weight() as usize,
                &term,
                &(&sign * Rational::from_integer(b)),
            );
        }
    }
    Ok(out)
}

/// The constant term of [`cap_phi_hat`]: `sum_v (-1)^{k_P(rt, v)} (X_v, k)`.
pub fn cap_phi(tree: &IndexedTree) -> Result<TreeCombo> {
    Ok(cap_phi_hat(tree, 1)?.constant_term().clone())
}
