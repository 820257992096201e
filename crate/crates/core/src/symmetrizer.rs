//! Tuple combinatorics and the t-adic symmetrization map on `h^1`.
//!
//! For an index `k = (k_1, ..., k_r)` the map sends `z_k` to
//!
//! ```text
//!   sum_{i=0}^{r} (-1)^{wt(k^[i])} z_{k_[i]} sh
//!       sum_{l in Z_{>=0}^{r-i}} b(k^[i]; l) z_{rev(k^[i] + l)} t^{wt(l)}
//! ```
//!
//! where `k_[i]` / `k^[i]` are the head / tail splits at `i`. The factor
//! `t^{wt(l)}` means only `l` with `wt(l) < N` survive truncation at order
//! `N`, so the truncated image is exact.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::TSeries;
use crate::word::{HElem, Index};
use crate::Rational;

/// A finite tuple of non-negative integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple(pub Vec<u32>);

impl Tuple {
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn reversed(&self) -> Tuple {
        Tuple(self.0.iter().rev().copied().collect())
    }

    /// Componentwise sum.
    pub fn checked_add(&self, other: &Tuple) -> Result<Tuple> {
        if self.depth() != other.depth() {
            return Err(Error::DepthMismatch(self.depth(), other.depth()));
        }
        Ok(Tuple(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// `(k_[i], k^[i]) = ((k_1..k_i), (k_{i+1}..k_r))`.
    pub fn split(&self, i: usize) -> Result<(Tuple, Tuple)> {
        if i > self.depth() {
            return Err(Error::SplitOutOfRange {
                pos: i,
                depth: self.depth(),
            });
        }
        let (head, tail) = self.0.split_at(i);
        Ok((Tuple(head.to_vec()), Tuple(tail.to_vec())))
    }
}

impl From<&Index> for Tuple {
    fn from(k: &Index) -> Tuple {
        Tuple(k.entries().to_vec())
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `C(k + l - 1, l)` with the convention `C(l - 1, l) = [l = 0]`.
pub fn shifted_binom(k: u32, l: u32) -> BigInt {
    if k == 0 {
        return if l == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    num_integer::binomial(BigInt::from(k + l - 1), BigInt::from(l))
}

/// `b(k; l) = prod_i C(k_i + l_i - 1, l_i)`.
pub fn b_binom(k: &Tuple, l: &Tuple) -> Result<Rational> {
    if k.depth() != l.depth() {
        return Err(Error::DepthMismatch(k.depth(), l.depth()));
    }
    let prod: BigInt =
        k.0.iter()
            .zip(&l.0)
            .map(|(&a, &b)| shifted_binom(a, b))
            .product();
    Ok(Rational::from_integer(prod))
}

/// All `l` in `Z_{>=0}^depth` with `wt(l) <= max_weight`, in lexicographic
/// order.
pub fn bounded_tuples(depth: usize, max_weight: u32) -> Vec<Tuple> {
    fn rec(depth: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Tuple>) {
        if prefix.len() == depth {
            out.push(Tuple(prefix.clone()));
            return;
        }
        for v in 0..=budget {
            prefix.push(v);
            rec(depth, budget - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(depth, max_weight, &mut Vec::with_capacity(depth), &mut out);
    out
}

fn positive_index(t: &Tuple) -> Index {
    Index::new(t.0.clone()).expect("sums of positive entries stay positive")
}

/// Image of a single `z_k`, truncated at `order`.
pub fn phi_hat_index(k: &Index, order: usize) -> Result<TSeries<HElem>> {
    let mut out = TSeries::zero(order)?;
    let k = Tuple::from(k);
    let max_weight = (order - 1) as u32;
    for i in 0..=k.depth() {
        let (head, tail) = k.split(i)?;
        let head = HElem::z(&positive_index(&head));
        let sign = if tail.weight() % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        for l in bounded_tuples(tail.depth(), max_weight) {
            let b = b_binom(&tail, &l)?;
            if b.is_zero() {
                continue;
            }
            let shifted = tail.checked_add(&l)?.reversed();
            let term = head.shuffle(&HElem::z(&positive_index(&shifted)));
            out.add_at(l.weight() as usize, &term, &(&sign * b));
        }
    }
    Ok(out)
}

/// The t-adic symmetrization map, extended linearly over the z-basis and
/// truncated at `order`.
pub fn phi_hat(a: &HElem, order: usize) -> Result<TSeries<HElem>> {
    let mut out = TSeries::zero(order)?;
    let mut cache: HashMap<Index, TSeries<HElem>> = HashMap::new();
    for (k, c) in a.z_terms()? {
        if !cache.contains_key(&k) {
            let image = phi_hat_index(&k, order)?;
            cache.insert(k.clone(), image);
        }
        out.add_assign_scaled(&cache[&k], &c)?;
    }
    Ok(out)
}

/// The t-adic map applied to a series in `h^1[[t]]`, extended
/// `Q[[t]]`-linearly.
pub fn phi_hat_series(a: &TSeries<HElem>) -> Result<TSeries<HElem>> {
    let order = a.order();
    let mut out = TSeries::zero(order)?;
    for (deg, c) in a.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let image = phi_hat(c, order - deg)?;
        for (j, term) in image.coeffs().iter().enumerate() {
            out.add_at(deg + j, term, &Rational::one());
        }
    }
    Ok(out)
}

/// The symmetrization map: the constant term of [`phi_hat`].
pub fn phi(a: &HElem) -> Result<HElem> {
    Ok(phi_hat(a, 1)?.constant_term().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn t(v: &[u32]) -> Tuple {
        Tuple(v.to_vec())
    }

    #[test]
    fn reverse() {
        assert_eq!(t(&[1, 2, 3]).reversed(), t(&[3, 2, 1]));
        assert_eq!(t(&[]).reversed(), t(&[]));
        assert_eq!(t(&[5]).reversed(), t(&[5]));
    }

    #[test]
    fn componentwise_add() {
        assert_eq!(t(&[2, 1]).checked_add(&t(&[0, 3])).unwrap(), t(&[2, 4]));
        assert_eq!(t(&[2, 1]).checked_add(&t(&[0, 0])).unwrap(), t(&[2, 1]));
        assert_eq!(
            t(&[1, 2]).checked_add(&t(&[1, 2, 3])),
            Err(Error::DepthMismatch(2, 3))
        );
    }

    #[test]
    fn b_binomials() {
        assert_eq!(b_binom(&t(&[2]), &t(&[3])).unwrap(), rat(4, 1));
        assert_eq!(b_binom(&t(&[0]), &t(&[2])).unwrap(), rat(0, 1));
        assert_eq!(b_binom(&t(&[0]), &t(&[0])).unwrap(), rat(1, 1));
        assert_eq!(b_binom(&t(&[3, 1, 4]), &t(&[0, 0, 0])).unwrap(), rat(1, 1));
        assert_eq!(b_binom(&t(&[]), &t(&[])).unwrap(), rat(1, 1));
        assert!(b_binom(&t(&[1]), &t(&[])).is_err());
    }

    #[test]
    fn splits() {
        let k = t(&[1, 2, 3]);
        assert_eq!(k.split(1).unwrap(), (t(&[1]), t(&[2, 3])));
        assert_eq!(k.split(0).unwrap(), (t(&[]), k.clone()));
        assert_eq!(k.split(3).unwrap(), (k.clone(), t(&[])));
        assert_eq!(k.split(4), Err(Error::SplitOutOfRange { pos: 4, depth: 3 }));
    }

    #[test]
    fn bounded_tuple_counts() {
        // number of l in Z^d with wt(l) <= s is C(s + d, d)
        for d in 0..4 {
            for s in 0..4u32 {
                let n = bounded_tuples(d, s).len();
                assert_eq!(n, num_integer::binomial(s as usize + d, d));
            }
        }
    }

    #[test]
    fn phi_hat_of_one() {
        let s = phi_hat(&HElem::one(), 3).unwrap();
        assert_eq!(s, TSeries::constant(HElem::one(), 3).unwrap());
    }

    #[test]
    fn phi_hat_of_z1() {
        let s = phi_hat(&HElem::z_of(&[1]), 3).unwrap();
        let expected = TSeries::from_coeffs(vec![
            HElem::zero(),
            -&HElem::z_of(&[2]),
            -&HElem::z_of(&[3]),
        ])
        .unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn phi_hat_of_z2_constant_term() {
        let s = phi_hat(&HElem::z_of(&[2]), 1).unwrap();
        assert_eq!(s.constant_term(), &HElem::z_of(&[2]).scaled(&rat(2, 1)));
    }

    #[test]
    fn phi_examples() {
        assert!(phi(&HElem::z_of(&[1])).unwrap().is_zero());
        assert_eq!(phi(&HElem::one()).unwrap(), HElem::one());
        let z2 = HElem::z_of(&[1]).right_mul_x_pow(1);
        assert_eq!(phi(&z2).unwrap(), HElem::z_of(&[2]).scaled(&rat(2, 1)));
    }

    #[test]
    fn phi_hat_rejects_outside_h1() {
        let a = HElem::from_word("xy".parse().unwrap());
        assert!(matches!(phi_hat(&a, 2), Err(Error::NotInH1(_))));
    }

    #[test]
    fn series_extension_commutes_with_t() {
        // phi_hat(t * a) = t * phi_hat(a)
        let a = &HElem::z_of(&[2, 1]) + &HElem::z_of(&[1, 1, 1]);
        let shifted = TSeries::monomial(a.clone(), 1, 4).unwrap();
        let lhs = phi_hat_series(&shifted).unwrap();
        let base = phi_hat(&a, 4).unwrap();
        let rhs = base.scale_by_series(&TSeries::t(4).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
