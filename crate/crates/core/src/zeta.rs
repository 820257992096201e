//! Truncated multiple harmonic sums, evaluated by direct enumeration.
//!
//! These evaluators never touch the symbolic maps, so they serve as the
//! independent side of every identity the crate checks.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{neg_power_expand, TSeries};
use crate::symmetrizer::phi_hat;
use crate::tree::IndexedTree;
use crate::word::{HElem, Index};
use crate::Rational;

fn inv_pow(n: i64, k: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(n), k as usize))
}

/// `zeta_M(k) = sum_{0 < n_1 < ... < n_r < M} n_1^{-k_1} ... n_r^{-k_r}`;
/// the empty index gives 1.
pub fn zeta_index(k: &Index, m: u32) -> Rational {
    zeta_index_upto(k, m).pop().expect("m + 1 entries")
}

/// `[zeta_0(k), zeta_1(k), ..., zeta_{m_max}(k)]`.
pub fn zeta_index_upto(k: &Index, m_max: u32) -> Vec<Rational> {
    let entries = k.entries();
    let len = m_max as usize + 1;
    if entries.is_empty() {
        return vec![Rational::one(); len];
    }
    // cur[n]: sum over 0 < n_1 < ... < n_j = n
    let mut cur: Vec<Rational> = (0..len)
        .map(|n| {
            if n == 0 {
                Rational::zero()
            } else {
                inv_pow(n as i64, entries[0])
            }
        })
        .collect();
    for &kj in &entries[1..] {
        let mut next = vec![Rational::zero(); len];
        let mut prefix = Rational::zero();
        for n in 1..len {
            next[n] = &prefix * inv_pow(n as i64, kj);
            prefix += &cur[n];
        }
        cur = next;
    }
    // zeta_M sums cur[n] over n < M
    let mut out = Vec::with_capacity(len);
    let mut acc = Rational::zero();
    for c in &cur {
        out.push(acc.clone());
        acc += c;
    }
    out
}

/// For every edge, the positions (in `blacks`) of the black vertices whose
/// path from the root crosses it.
fn below_sets(tree: &IndexedTree, blacks: &[usize]) -> Result<Vec<Vec<usize>>> {
    let mut below = vec![Vec::new(); tree.edges().len()];
    for (pos, &v) in blacks.iter().enumerate() {
        for e in tree.path_edges(tree.root(), v)? {
            below[e].push(pos);
        }
    }
    Ok(below)
}

/// Calls `f` on every tuple of `parts` positive integers summing to `total`.
fn for_each_composition(
    parts: usize,
    total: u32,
    f: &mut impl FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    fn rec(
        parts: usize,
        left: u32,
        prefix: &mut Vec<u32>,
        f: &mut impl FnMut(&[u32]) -> Result<()>,
    ) -> Result<()> {
        if prefix.len() + 1 == parts {
            prefix.push(left);
            let r = f(prefix);
            prefix.pop();
            return r;
        }
        let remaining = (parts - prefix.len() - 1) as u32;
        for v in 1..=left.saturating_sub(remaining) {
            prefix.push(v);
            rec(parts, left - v, prefix, f)?;
            prefix.pop();
        }
        Ok(())
    }
    if parts == 0 {
        return if total == 0 { f(&[]) } else { Ok(()) };
    }
    if (total as usize) < parts {
        return Ok(());
    }
    rec(parts, total, &mut Vec::with_capacity(parts), f)
}

/// `zeta_M(X; k)`: the sum over positive `(m_v)` on the black vertices with
/// total `M` of `prod_e L_e^{-k_e}`, where `L_e` adds the `m_v` of the black
/// vertices below `e`.
pub fn zeta_tree(tree: &IndexedTree, m: u32) -> Result<Rational> {
    tree.validate()
        .map_err(|e| Error::InvalidTree(Box::new(e)))?;
    let blacks: Vec<usize> = tree.blacks().collect();
    let below = below_sets(tree, &blacks)?;
    let mut total = Rational::zero();
    for_each_composition(blacks.len(), m, &mut |ms| {
        let mut term = Rational::one();
        for (e, edge) in tree.edges().iter().enumerate() {
            if edge.index == 0 {
                continue;
            }
            let l: i64 = below[e].iter().map(|&p| ms[p] as i64).sum();
            term *= inv_pow(l, edge.index);
        }
        total += term;
        Ok(())
    })?;
    Ok(total)
}

/// `zeta_M(X, u; k)` modulo `t^order`: the sum over `m_v > 0` (`v != u`) with
/// `0 < sum m_v < M` and `m_u = -sum m_v` of
/// `prod_e (L_e + [u below e] t)^{-k_e}`.
pub fn zeta_tree_u(
    tree: &IndexedTree,
    u: usize,
    m: u32,
    order: usize,
) -> Result<TSeries<Rational>> {
    Ok(zeta_tree_u_upto(tree, u, m, order)?
        .pop()
        .expect("m + 1 entries"))
}

/// [`zeta_tree_u`] for every `M` in `0..=m_max`.
pub fn zeta_tree_u_upto(
    tree: &IndexedTree,
    u: usize,
    m_max: u32,
    order: usize,
) -> Result<Vec<TSeries<Rational>>> {
    tree.validate()
        .map_err(|e| Error::InvalidTree(Box::new(e)))?;
    let blacks: Vec<usize> = tree.blacks().collect();
    let u_pos = blacks
        .iter()
        .position(|&v| v == u)
        .ok_or(Error::UnknownVertex(u))?;
    let below = below_sets(tree, &blacks)?;
    let others = blacks.len() - 1;
    let mut ms = vec![0i64; blacks.len()];
    let mut out = Vec::with_capacity(m_max as usize + 1);
    let mut acc = TSeries::zero(order)?;
    for s in 0..=m_max {
        out.push(acc.clone());
        // terms with sum_{v != u} m_v = s count for every bound M > s
        if s == 0 {
            continue;
        }
        for_each_composition(others, s, &mut |part| {
            let mut it = part.iter();
            for (p, slot) in ms.iter_mut().enumerate() {
                *slot = if p == u_pos {
                    -(s as i64)
                } else {
                    *it.next().expect("one part per other vertex") as i64
                };
            }
            let mut constant = Rational::one();
            let mut series = TSeries::one(order)?;
            for (e, edge) in tree.edges().iter().enumerate() {
                if edge.index == 0 {
                    continue;
                }
                let base: i64 = below[e].iter().map(|&p| ms[p]).sum();
                if base == 0 {
                    return Err(Error::DegenerateBase { edge: e });
                }
                if below[e].contains(&u_pos) {
                    let factor =
                        neg_power_expand(&Rational::from_integer(base.into()), edge.index, order)?;
                    series = series.mul(&factor)?;
                } else {
                    constant *= inv_pow(base, edge.index);
                }
            }
            acc.add_assign_scaled(&series, &constant)
        })?;
    }
    Ok(out)
}

/// `zeta_{S^,M}(X; k)`: the sum of [`zeta_tree_u`] over the black vertices.
pub fn zeta_shat_tree(tree: &IndexedTree, m: u32, order: usize) -> Result<TSeries<Rational>> {
    Ok(zeta_shat_tree_upto(tree, m, order)?
        .pop()
        .expect("m + 1 entries"))
}

/// [`zeta_shat_tree`] for every `M` in `0..=m_max`.
pub fn zeta_shat_tree_upto(
    tree: &IndexedTree,
    m_max: u32,
    order: usize,
) -> Result<Vec<TSeries<Rational>>> {
    let mut total = vec![TSeries::zero(order)?; m_max as usize + 1];
    for u in tree.blacks() {
        for (slot, part) in total
            .iter_mut()
            .zip(zeta_tree_u_upto(tree, u, m_max, order)?)
        {
            slot.add_assign_scaled(&part, &Rational::one())?;
        }
    }
    Ok(total)
}

/// The linear map `Z_M: z_k -> zeta_M(k)` on `h^1`.
pub fn z_m_eval(a: &HElem, m: u32) -> Result<Rational> {
    Ok(z_m_eval_upto(a, m)?.pop().expect("m + 1 entries"))
}

/// [`z_m_eval`] for every `M` in `0..=m_max`.
pub fn z_m_eval_upto(a: &HElem, m_max: u32) -> Result<Vec<Rational>> {
    let mut total = vec![Rational::zero(); m_max as usize + 1];
    for (k, c) in a.z_terms()? {
        for (slot, z) in total.iter_mut().zip(zeta_index_upto(&k, m_max)) {
            *slot += &c * z;
        }
    }
    Ok(total)
}

/// [`z_m_eval`] applied coefficientwise.
pub fn z_m_series(a: &TSeries<HElem>, m: u32) -> Result<TSeries<Rational>> {
    a.try_map(|c| z_m_eval(c, m))
}

/// [`z_m_series`] for every `M` in `0..=m_max`.
pub fn z_m_series_upto(a: &TSeries<HElem>, m_max: u32) -> Result<Vec<TSeries<Rational>>> {
    let per_coeff = a
        .coeffs()
        .iter()
        .map(|c| z_m_eval_upto(c, m_max))
        .collect::<Result<Vec<_>>>()?;
    (0..=m_max as usize)
        .map(|m| TSeries::from_coeffs(per_coeff.iter().map(|v| v[m].clone()).collect()))
        .collect()
}

/// `Z_M` composed with the t-adic symmetrization map.
pub fn z_shat(a: &HElem, m: u32, order: usize) -> Result<TSeries<Rational>> {
    z_m_series(&phi_hat(a, order)?, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_tree;
    use crate::rat;

    fn q(coeffs: &[(i64, i64)]) -> TSeries<Rational> {
        TSeries::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    fn brute_force(k: &[u32], m: u32) -> Rational {
        fn rec(k: &[u32], lo: u32, m: u32) -> Rational {
            match k.split_first() {
                None => Rational::one(),
                Some((&k0, rest)) => (lo + 1..m)
                    .map(|n| inv_pow(n as i64, k0) * rec(rest, n, m))
                    .sum(),
            }
        }
        rec(k, 0, m)
    }

    #[test]
    fn index_sums() {
        assert_eq!(zeta_index(&Index::new(vec![1]).unwrap(), 3), rat(3, 2));
        assert_eq!(zeta_index(&Index::empty(), 0), rat(1, 1));
        assert_eq!(zeta_index(&Index::empty(), 5), rat(1, 1));
        assert_eq!(zeta_index(&Index::new(vec![1, 1]).unwrap(), 2), rat(0, 1));
        assert_eq!(zeta_index(&Index::new(vec![2]).unwrap(), 4), rat(49, 36));
    }

    #[test]
    fn dynamic_programme_matches_nested_loops() {
        for k in Index::all_up_to_weight(5) {
            for m in 0..9 {
                assert_eq!(
                    zeta_index(&k, m),
                    brute_force(k.entries(), m),
                    "k = {k}, M = {m}"
                );
            }
        }
    }

    #[test]
    fn cumulative_variants_agree() {
        let k = Index::new(vec![2, 1]).unwrap();
        let all = zeta_index_upto(&k, 8);
        for m in 0..=8 {
            assert_eq!(all[m as usize], zeta_index(&k, m));
        }
        let x = parse_tree("b(1:w(1:b(),2:b()))").unwrap();
        let all = zeta_shat_tree_upto(&x, 6, 3).unwrap();
        for m in 0..=6u32 {
            let direct: TSeries<Rational> = x
                .blacks()
                .map(|u| zeta_tree_u(&x, u, m, 3).unwrap())
                .fold(TSeries::zero(3).unwrap(), |a, b| a.add(&b).unwrap());
            assert_eq!(all[m as usize], direct);
        }
        let w = HElem::z_of(&[1, 2]).shuffle(&HElem::z_of(&[1]));
        let s = phi_hat(&w, 3).unwrap();
        let all = z_m_series_upto(&s, 7).unwrap();
        for m in 0..=7u32 {
            assert_eq!(all[m as usize], z_m_series(&s, m).unwrap());
        }
    }

    #[test]
    fn tree_sums() {
        assert_eq!(zeta_tree(&IndexedTree::unit(), 4).unwrap(), rat(1, 1));
        assert_eq!(
            zeta_tree(&parse_tree("b(0:w(1:b(),1:b()))").unwrap(), 3).unwrap(),
            rat(1, 1)
        );
        for k in [vec![1], vec![2, 1], vec![1, 3, 2]] {
            for m in 1..8 {
                assert_eq!(
                    zeta_tree(&IndexedTree::linear(&k), m).unwrap(),
                    zeta_index(&Index::new(k.clone()).unwrap(), m)
                );
            }
        }
    }

    #[test]
    fn single_edge_u_sums() {
        let x = IndexedTree::linear(&[1]);
        // vertex 0 is the root, vertex 1 the leaf
        assert_eq!(
            zeta_tree_u(&x, 0, 3, 3).unwrap(),
            q(&[(3, 2), (0, 1), (0, 1)])
        );
        assert_eq!(
            zeta_tree_u(&x, 1, 3, 3).unwrap(),
            q(&[(-3, 2), (-5, 4), (-9, 8)])
        );
        assert_eq!(
            zeta_shat_tree(&x, 3, 3).unwrap(),
            q(&[(0, 1), (-5, 4), (-9, 8)])
        );
        assert!(zeta_tree_u(&x, 0, 1, 3).unwrap().is_zero());
        assert_eq!(zeta_tree_u(&x, 5, 3, 3), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn unit_tree_has_no_u_terms() {
        for m in 1..5 {
            assert!(zeta_shat_tree(&IndexedTree::unit(), m, 3)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn evaluation_maps() {
        assert_eq!(z_m_eval(&HElem::z_of(&[1]), 3).unwrap(), rat(3, 2));
        assert_eq!(z_m_eval(&HElem::one(), 7).unwrap(), rat(1, 1));
        let sq = HElem::z_of(&[1]).harmonic(&HElem::z_of(&[1])).unwrap();
        assert_eq!(z_m_eval(&sq, 3).unwrap(), rat(9, 4));
        assert_eq!(
            z_shat(&HElem::z_of(&[1]), 3, 3).unwrap(),
            q(&[(0, 1), (-5, 4), (-9, 8)])
        );
        assert_eq!(z_shat(&HElem::one(), 3, 2).unwrap(), q(&[(1, 1), (0, 1)]));
        assert_eq!(z_shat(&HElem::z_of(&[2]), 4, 1).unwrap(), q(&[(49, 18)]));
        assert!(matches!(
            z_m_eval(&HElem::from_word("xy".parse().unwrap()), 3),
            Err(Error::NotInH1(_))
        ));
    }

    #[test]
    fn linear_tree_matches_word_side() {
        for k in [vec![1], vec![2], vec![1, 2], vec![2, 1, 1]] {
            let x = IndexedTree::linear(&k);
            for m in 1..7 {
                assert_eq!(
                    zeta_shat_tree(&x, m, 3).unwrap(),
                    z_shat(&HElem::z_of(&k), m, 3).unwrap(),
                    "k = {k:?}, M = {m}"
                );
            }
        }
    }
}
