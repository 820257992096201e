//! Truncated power series in one indeterminate `t`.
//!
//! A [`TSeries`] of order `N` stores the coefficients of `t^0 .. t^{N-1}`;
//! nothing of degree `N` or higher is ever read or written. The coefficient
//! space is pluggable through [`Module`], so the same engine carries
//! rationals, elements of the word algebra and tree combinations.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::Rational;

/// A rational vector space the series engine can use as coefficients.
pub trait Module: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_scaled(&mut self, other: &Self, c: &Rational);
    fn to_json(&self) -> Value;

    /// Renders `self * monomial`; `monomial` is empty for the constant term.
    fn render_term(&self, monomial: &str) -> String;

    fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }
}

impl Module for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        *self += other * c;
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn render_term(&self, monomial: &str) -> String {
        if monomial.is_empty() {
            self.to_string()
        } else if self.is_one() {
            monomial.to_string()
        } else if (-self).is_one() {
            format!("-{monomial}")
        } else {
            format!("{self}*{monomial}")
        }
    }
}

impl Module for crate::HElem {
    fn zero() -> Self {
        crate::HElem::zero()
    }

    fn is_zero(&self) -> bool {
        crate::HElem::is_zero(self)
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        crate::HElem::add_scaled(self, other, c)
    }

    fn to_json(&self) -> Value {
        crate::HElem::to_json(self)
    }

    fn render_term(&self, monomial: &str) -> String {
        if monomial.is_empty() {
            self.to_string()
        } else {
            format!("({self})*{monomial}")
        }
    }
}

/// A power series in `t` truncated modulo `t^N`, where `N = order()`.
#[derive(Debug, Clone, PartialEq)]
pub struct TSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Module> TSeries<C> {
    pub fn zero(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(TSeries {
            coeffs: vec![C::zero(); order],
        })
    }

    pub fn constant(c: C, order: usize) -> Result<Self> {
        Self::monomial(c, 0, order)
    }

    /// `c * t^degree`; vanishes when `degree >= order`.
    pub fn monomial(c: C, degree: usize, order: usize) -> Result<Self> {
        let mut out = Self::zero(order)?;
        if degree < order {
            out.coeffs[degree] = c;
        }
        Ok(out)
    }

    /// Builds a series from its coefficient list; the order is its length.
    pub fn from_coeffs(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroOrder);
        }
        Ok(TSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, degree: usize) -> &C {
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign_scaled(other, &Rational::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-Rational::one())?;
        Ok(out)
    }

    /// `self += c * other`.
    pub fn add_assign_scaled(&mut self, other: &Self, c: &Rational) -> Result<()> {
        self.check_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_scaled(b, c);
        }
        Ok(())
    }

    /// Adds `c * t^degree`; a no-op for `degree >= order`.
    pub fn add_at(&mut self, degree: usize, c: &C, scale: &Rational) {
        if let Some(slot) = self.coeffs.get_mut(degree) {
            slot.add_scaled(c, scale);
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        TSeries {
            coeffs: self.coeffs.iter().map(|a| a.scaled(c)).collect(),
        }
    }

    /// Product with a rational series (the scalar ring acting on `C`).
    pub fn scale_by_series(&self, scalar: &TSeries<Rational>) -> Result<Self> {
        if self.order() != scalar.order() {
            return Err(Error::OrderMismatch(self.order(), scalar.order()));
        }
        let n = self.order();
        let mut out = Self::zero(n)?;
        for (i, s) in scalar.coeffs.iter().enumerate() {
            if Zero::is_zero(s) {
                continue;
            }
            for j in 0..n - i {
                out.coeffs[i + j].add_scaled(&self.coeffs[j], s);
            }
        }
        Ok(out)
    }

    /// Applies a linear map coefficientwise.
    pub fn map<D: Module>(&self, f: impl FnMut(&C) -> D) -> TSeries<D> {
        TSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Fallible variant of [`TSeries::map`].
    pub fn try_map<D: Module>(&self, f: impl FnMut(&C) -> Result<D>) -> Result<TSeries<D>> {
        Ok(TSeries {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Drops every coefficient of degree `>= order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut out = Self::zero(order)?;
        for (slot, c) in out.coeffs.iter_mut().zip(&self.coeffs) {
            *slot = c.clone();
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "t_order": self.order(),
            "coeffs": self.coeffs.iter().map(C::to_json).collect::<Vec<_>>(),
        })
    }
}

impl TSeries<Rational> {
    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.scale_by_series(other)
    }

    /// `t`, the indeterminate itself.
    pub fn t(order: usize) -> Result<Self> {
        Self::monomial(Rational::one(), 1, order)
    }

    pub fn one(order: usize) -> Result<Self> {
        Self::constant(Rational::one(), order)
    }
}

impl<C: Module> fmt::Display for TSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let monomial = match deg {
                0 => String::new(),
                1 => "t".to_string(),
                d => format!("t^{d}"),
            };
            parts.push(c.render_term(&monomial));
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        write!(f, "{out} + O(t^{})", self.order())
    }
}

/// The series of `(a + t)^{-k}` modulo `t^order`.
///
/// The coefficient of `t^l` is `(-1)^l C(k+l-1, l) a^{-k-l}`.
pub fn neg_power_expand(a: &Rational, k: u32, order: usize) -> Result<TSeries<Rational>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if k == 0 {
        return TSeries::one(order);
    }
    if Zero::is_zero(a) {
        return Err(Error::PoleAtZero(k));
    }
    let inv = a.recip();
    // a^{-k}
    let mut power = num_traits::pow(inv.clone(), k as usize);
    let mut coeffs = Vec::with_capacity(order);
    let mut binom = Rational::one();
    for l in 0..order {
        let sign = if l % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        coeffs.push(&sign * &binom * &power);
        // C(k+l, l+1) = C(k+l-1, l) * (k+l) / (l+1)
        binom = binom * Rational::from_integer((k as i64 + l as i64).into())
            / Rational::from_integer((l as i64 + 1).into());
        power *= &inv;
    }
    TSeries::from_coeffs(coeffs)
}
