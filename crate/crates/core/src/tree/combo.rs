use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::IndexedTree;
use crate::error::Result;
use crate::series::Module;
use crate::word::HElem;
use crate::Rational;

/// A rational linear combination of indexed trees, keyed by canonical key so
/// isomorphic trees collect into one term.
#[derive(Debug, Clone, Default)]
pub struct TreeCombo {
    terms: BTreeMap<String, (IndexedTree, Rational)>,
}

impl TreeCombo {
    pub fn zero() -> Self {
        TreeCombo::default()
    }

    pub fn from_tree(tree: IndexedTree) -> Result<Self> {
        let mut out = TreeCombo::zero();
        out.add_tree(tree, Rational::one())?;
        Ok(out)
    }

    pub fn add_tree(&mut self, tree: IndexedTree, c: Rational) -> Result<()> {
        let key = tree.canonical_key()?;
        self.add_keyed(key, tree, c);
        Ok(())
    }

    fn add_keyed(&mut self, key: String, tree: IndexedTree, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        let slot = self
            .terms
            .entry(key)
            .or_insert_with(|| (tree, <Rational as Zero>::zero()));
        slot.1 += c;
        if Zero::is_zero(&slot.1) {
            self.terms.retain(|_, (_, c)| !Zero::is_zero(c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(canonical key, representative, coefficient)` in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&str, &IndexedTree, &Rational)> {
        self.terms.iter().map(|(k, (t, c))| (k.as_str(), t, c))
    }

    pub fn coeff(&self, key: &str) -> Rational {
        self.terms
            .get(key)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(<Rational as Zero>::zero)
    }

    /// Applies `w ∘ h` term by term.
    pub fn w_of_harvested(&self) -> Result<HElem> {
        let mut out = HElem::zero();
        for (tree, c) in self.terms.values() {
            out.add_scaled(&super::w_of_harvested(tree)?, c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, (_, c))| json!({"coeff": c.to_string(), "tree": k}))
            .collect();
        json!({ "terms": terms })
    }
}

// representatives are arbitrary; only keys and coefficients count
impl PartialEq for TreeCombo {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((k1, (_, c1)), (k2, (_, c2)))| k1 == k2 && c1 == c2)
    }
}

impl Eq for TreeCombo {}

impl fmt::Display for TreeCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (key, (_, c))) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs.is_one() {
                write!(f, "[{key}]")?;
            } else {
                write!(f, "{abs}*[{key}]")?;
            }
        }
        Ok(())
    }
}

impl Module for TreeCombo {
    fn zero() -> Self {
        TreeCombo::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if Zero::is_zero(c) {
            return;
        }
        for (key, (tree, d)) in &other.terms {
            self.add_keyed(key.clone(), tree.clone(), d * c);
        }
    }

    fn to_json(&self) -> Value {
        TreeCombo::to_json(self)
    }

    fn render_term(&self, monomial: &str) -> String {
        if monomial.is_empty() {
            self.to_string()
        } else {
            format!("({self})*{monomial}")
        }
    }
}
