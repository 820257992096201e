//! Words over `{x, y}`, their rational linear combinations, and the
//! shuffle / harmonic products.
//!
//! The subspace `h^1` is spanned by the words that are empty or start with
//! `y`; every such word factors uniquely as `z_{k_1} ... z_{k_r}` with
//! `z_k = y x^{k-1}`, which is how indices are encoded.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A finite word over `{x, y}`; the empty word is the unit `1`.
///
/// Words are ordered graded-lexicographically (shorter first, then `x < y`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn in_h1(&self) -> bool {
        self.0.first().is_none_or(|&l| l == Letter::Y)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `z_{k_1} ... z_{k_r}`.
    pub fn from_index(k: &Index) -> Word {
        let mut letters = Vec::with_capacity(k.weight() as usize);
        for &entry in k.entries() {
            letters.push(Letter::Y);
            letters.extend(std::iter::repeat_n(Letter::X, entry as usize - 1));
        }
        Word(letters)
    }

    /// Inverse of [`Word::from_index`].
    pub fn z_decompose(&self) -> Result<Index> {
        if !self.in_h1() {
            return Err(Error::NotInH1(self.to_string()));
        }
        let mut entries: Vec<u32> = Vec::new();
        for &l in &self.0 {
            match l {
                Letter::Y => entries.push(1),
                Letter::X => *entries.last_mut().expect("word starts with y") += 1,
            }
        }
        Ok(Index(entries))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        s.char_indices()
            .map(|(pos, c)| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected `{c}` in word"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// A tuple of positive integers. The empty index has depth 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            let text: Vec<String> = entries.iter().map(u32::to_string).collect();
            return Err(Error::BadIndex(text.join(",")));
        }
        Ok(Index(entries))
    }

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// Empty, or last entry at least 2.
    pub fn is_admissible(&self) -> bool {
        self.0.last().is_none_or(|&k| k >= 2)
    }

    /// All indices of weight exactly `weight` (compositions), in
    /// lexicographic order.
    pub fn all_of_weight(weight: u32) -> Vec<Index> {
        fn rec(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Index>) {
            if rest == 0 {
                out.push(Index(prefix.clone()));
                return;
            }
            for first in 1..=rest {
                prefix.push(first);
                rec(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(weight, &mut Vec::new(), &mut out);
        out
    }

    /// All indices of weight at most `max_weight`, the empty index first.
    pub fn all_up_to_weight(max_weight: u32) -> Vec<Index> {
        (0..=max_weight).flat_map(Index::all_of_weight).collect()
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `z_k` as a word.
pub fn word_from_index(k: &Index) -> Word {
    Word::from_index(k)
}

/// A finite rational linear combination of words. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HElem {
    terms: BTreeMap<Word, Rational>,
}

impl HElem {
    pub fn zero() -> Self {
        HElem::default()
    }

    pub fn one() -> Self {
        HElem::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        HElem::from_term(w, Rational::one())
    }

    pub fn from_term(w: Word, c: Rational) -> Self {
        let mut out = HElem::zero();
        out.add_term(w, c);
        out
    }

    /// `z_k` for an index `k`.
    pub fn z(k: &Index) -> Self {
        HElem::from_word(Word::from_index(k))
    }

    /// Shorthand for `z_k` from raw entries. Panics on a zero entry.
    pub fn z_of(entries: &[u32]) -> Self {
        HElem::z(&Index::new(entries.to_vec()).expect("positive entries"))
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &HElem, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> HElem {
        let mut out = HElem::zero();
        out.add_scaled(self, c);
        out
    }

    /// True iff every word is empty or starts with `y`.
    pub fn in_h1(&self) -> bool {
        self.terms.keys().all(Word::in_h1)
    }

    fn check_h1(&self) -> Result<()> {
        match self.terms.keys().find(|w| !w.in_h1()) {
            Some(w) => Err(Error::NotInH1(w.to_string())),
            None => Ok(()),
        }
    }

    /// The element as a combination of z-indices.
    pub fn z_terms(&self) -> Result<Vec<(Index, Rational)>> {
        self.terms
            .iter()
            .map(|(w, c)| Ok((w.z_decompose()?, c.clone())))
            .collect()
    }

    /// Concatenation product, extended bilinearly.
    pub fn concat(&self, other: &HElem) -> HElem {
        let mut out = HElem::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Appends `x^k` to every word.
    pub fn right_mul_x_pow(&self, k: u32) -> HElem {
        if k == 0 {
            return self.clone();
        }
        let tail = Word(vec![Letter::X; k as usize]);
        HElem {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.concat(&tail), c.clone()))
                .collect(),
        }
    }

    pub fn shuffle(&self, other: &HElem) -> HElem {
        let (da, a) = self.integer_parts();
        let (db, b) = other.integer_parts();
        let mut packed: HashMap<u64, BigInt> = HashMap::new();
        let mut long: HashMap<Vec<Letter>, BigInt> = HashMap::new();
        for (u, p) in &a {
            for (v, q) in &b {
                let c = p * q;
                if u.len() + v.len() <= MAX_PACKED {
                    for (w, n) in shuffle_packed(pack(u.letters()), pack(v.letters())) {
                        *packed.entry(w).or_default() += &c * n;
                    }
                } else {
                    for (w, n) in shuffle_words(u.letters(), v.letters()) {
                        *long.entry(w).or_default() += &c * n;
                    }
                }
            }
        }
        let terms = packed
            .into_iter()
            .map(|(w, c)| (unpack(w), c))
            .chain(long.into_iter().map(|(w, c)| (Word(w), c)));
        HElem::from_integer_parts(terms, da * db)
    }

    /// Harmonic (quasi-shuffle) product on `h^1`.
    pub fn harmonic(&self, other: &HElem) -> Result<HElem> {
        self.check_h1()?;
        other.check_h1()?;
        let (da, a) = self.integer_parts();
        let (db, b) = other.integer_parts();
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (u, p) in &a {
            let ku = u.z_decompose()?;
            for (v, q) in &b {
                let kv = v.z_decompose()?;
                let c = p * q;
                for (k, n) in stuffle_indices(ku.entries(), kv.entries()) {
                    *acc.entry(k).or_default() += &c * n;
                }
            }
        }
        Ok(HElem::from_integer_parts(
            acc.into_iter()
                .map(|(k, c)| (Word::from_index(&Index(k)), c)),
            da * db,
        ))
    }

    /// A common denominator `d` and the coefficients times `d`.
    fn integer_parts(&self) -> (BigInt, Vec<(&Word, BigInt)>) {
        let d = self
            .terms
            .values()
            .fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        let parts = self
            .terms
            .iter()
            .map(|(w, c)| (w, c.numer() * (&d / c.denom())))
            .collect();
        (d, parts)
    }

    fn from_integer_parts(parts: impl Iterator<Item = (Word, BigInt)>, denom: BigInt) -> HElem {
        HElem {
            terms: parts
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (w, Rational::new(c, denom.clone())))
                .collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| json!({"coeff": c.to_string(), "word": w.to_string()}))
            .collect();
        json!({ "terms": terms })
    }
}

impl fmt::Display for HElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs}*{w}")?;
            }
        }
        Ok(())
    }
}

impl Add for &HElem {
    type Output = HElem;
    fn add(self, rhs: &HElem) -> HElem {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &HElem {
    type Output = HElem;
    fn sub(self, rhs: &HElem) -> HElem {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &HElem {
    type Output = HElem;
    fn neg(self) -> HElem {
        self.scaled(&-Rational::one())
    }
}

impl FromIterator<(Word, Rational)> for HElem {
    fn from_iter<I: IntoIterator<Item = (Word, Rational)>>(iter: I) -> Self {
        let mut out = HElem::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }
}

const MAX_PACKED: usize = 63;

/// A word of at most [`MAX_PACKED`] letters as bits below a leading 1.
fn pack(letters: &[Letter]) -> u64 {
    letters
        .iter()
        .fold(1, |acc, &l| (acc << 1) | u64::from(l == Letter::Y))
}

fn unpack(mut bits: u64) -> Word {
    let mut letters = Vec::with_capacity(63);
    while bits > 1 {
        letters.push(if bits & 1 == 1 { Letter::Y } else { Letter::X });
        bits >>= 1;
    }
    letters.reverse();
    Word(letters)
}

/// [`shuffle_words`] on packed words.
fn shuffle_packed(a: u64, b: u64) -> HashMap<u64, u64> {
    let len = |w: u64| 63 - w.leading_zeros() as usize;
    let (la, lb) = (len(a), len(b));
    // the prefix of length i of a packed word of length n
    let prefix = |w: u64, n: usize, i: usize| w >> (n - i);
    let last = |w: u64, n: usize, i: usize| (w >> (n - i)) & 1;
    let mut row: Vec<HashMap<u64, u64>> = (0..=lb)
        .map(|j| HashMap::from([(prefix(b, lb, j), 1)]))
        .collect();
    for i in 1..=la {
        let mut next: Vec<HashMap<u64, u64>> = Vec::with_capacity(lb + 1);
        next.push(HashMap::from([(prefix(a, la, i), 1)]));
        let bit_a = last(a, la, i);
        for j in 1..=lb {
            let bit_b = last(b, lb, j);
            let mut cell = HashMap::with_capacity(row[j].len() + next[j - 1].len());
            for (w, n) in &row[j] {
                *cell.entry((w << 1) | bit_a).or_insert(0) += n;
            }
            for (w, n) in &next[j - 1] {
                *cell.entry((w << 1) | bit_b).or_insert(0) += n;
            }
            next.push(cell);
        }
        row = next;
    }
    row.pop().expect("non-empty row")
}

/// Shuffle of two words as a multiset of words with multiplicities.
///
/// Dynamic programming over prefixes: the shuffle of `a[..i]` and `b[..j]`
/// ends either in `a[i-1]` or in `b[j-1]`.
fn shuffle_words(a: &[Letter], b: &[Letter]) -> HashMap<Vec<Letter>, u64> {
    if a.is_empty() || b.is_empty() {
        let mut w = a.to_vec();
        w.extend_from_slice(b);
        return HashMap::from([(w, 1)]);
    }
    // row[j] = shuffle(a[..i], b[..j]) for the current i
    let mut row: Vec<HashMap<Vec<Letter>, u64>> = (0..=b.len())
        .map(|j| HashMap::from([(b[..j].to_vec(), 1)]))
        .collect();
    for i in 1..=a.len() {
        let mut next: Vec<HashMap<Vec<Letter>, u64>> = Vec::with_capacity(b.len() + 1);
        next.push(HashMap::from([(a[..i].to_vec(), 1)]));
        for j in 1..=b.len() {
            let mut cell: HashMap<Vec<Letter>, u64> = HashMap::new();
            for (w, n) in &row[j] {
                let mut w = w.clone();
                w.push(a[i - 1]);
                *cell.entry(w).or_insert(0) += n;
            }
            for (w, n) in &next[j - 1] {
                let mut w = w.clone();
                w.push(b[j - 1]);
                *cell.entry(w).or_insert(0) += n;
            }
            next.push(cell);
        }
        row = next;
    }
    row.pop().expect("non-empty row")
}

/// Harmonic product of two z-indices as a multiset of indices.
fn stuffle_indices(a: &[u32], b: &[u32]) -> BTreeMap<Vec<u32>, u64> {
    fn rec(
        a: &[u32],
        b: &[u32],
        memo: &mut HashMap<(usize, usize), BTreeMap<Vec<u32>, u64>>,
    ) -> BTreeMap<Vec<u32>, u64> {
        if a.is_empty() || b.is_empty() {
            let mut k = a.to_vec();
            k.extend_from_slice(b);
            return BTreeMap::from([(k, 1)]);
        }
        if let Some(hit) = memo.get(&(a.len(), b.len())) {
            return hit.clone();
        }
        let mut out: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        let mut push = |head: u32, tail: BTreeMap<Vec<u32>, u64>| {
            for (k, n) in tail {
                let mut full = Vec::with_capacity(k.len() + 1);
                full.push(head);
                full.extend(k);
                *out.entry(full).or_insert(0) += n;
            }
        };
        push(a[0], rec(&a[1..], b, memo));
        push(b[0], rec(a, &b[1..], memo));
        push(a[0] + b[0], rec(&a[1..], &b[1..], memo));
        memo.insert((a.len(), b.len()), out.clone());
        out
    }
    rec(a, b, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn h(s: &str) -> HElem {
        HElem::from_word(w(s))
    }

    #[test]
    fn z_encoding() {
        assert_eq!(Word::from_index(&Index::new(vec![2]).unwrap()), w("yx"));
        assert_eq!(Word::from_index(&Index::empty()), Word::empty());
        assert_eq!(
            Word::from_index(&Index::new(vec![2, 3]).unwrap()),
            w("yxyxx")
        );
        assert_eq!(Word::empty().to_string(), "1");
    }

    #[test]
    fn z_decomposition() {
        assert_eq!(w("yxyxx").z_decompose().unwrap().entries(), &[2, 3]);
        assert_eq!(w("1").z_decompose().unwrap(), Index::empty());
        assert!(matches!(w("xy").z_decompose(), Err(Error::NotInH1(_))));
    }

    #[test]
    fn index_rejects_zero() {
        assert!(matches!(Index::new(vec![0, 1]), Err(Error::BadIndex(_))));
        assert!(Index::new(vec![1, 2]).unwrap().is_admissible());
        assert!(!Index::new(vec![2, 1]).unwrap().is_admissible());
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(
            h("y").shuffle(&h("y")),
            HElem::from_term(w("yy"), rat(2, 1))
        );
        assert_eq!(h("x").shuffle(&h("y")), &h("xy") + &h("yx"));
        let expected = &HElem::from_term(w("yyx"), rat(2, 1)) + &h("yxy");
        assert_eq!(h("yx").shuffle(&h("y")), expected);
        // z_2 sh z_1 = 2 z_{(1,2)} + z_{(2,1)}
        let expected = &HElem::z_of(&[1, 2]).scaled(&rat(2, 1)) + &HElem::z_of(&[2, 1]);
        assert_eq!(HElem::z_of(&[2]).shuffle(&HElem::z_of(&[1])), expected);
    }

    #[test]
    fn packed_shuffle_matches_vectors() {
        for (a, b) in [("", "yx"), ("yxx", "y"), ("yxyx", "xxyy"), ("yyyxx", "xyx")] {
            let (a, b) = (w(a), w(b));
            let packed: HashMap<Word, u64> = shuffle_packed(pack(a.letters()), pack(b.letters()))
                .into_iter()
                .map(|(w, n)| (unpack(w), n))
                .collect();
            let plain: HashMap<Word, u64> = shuffle_words(a.letters(), b.letters())
                .into_iter()
                .map(|(w, n)| (Word(w), n))
                .collect();
            assert_eq!(packed, plain);
        }
    }

    #[test]
    fn long_words_shuffle() {
        let long = Word::new(vec![Letter::X; 70]);
        let out = HElem::from_word(long.clone()).shuffle(&h("y"));
        assert_eq!(out.len(), 71);
        assert_eq!(out.coeff(&long.concat(&w("y"))), rat(1, 1));
    }

    #[test]
    fn shuffle_unit_is_identity() {
        let a = &h("yx").scaled(&rat(3, 2)) + &h("xy");
        assert_eq!(a.shuffle(&HElem::one()), a);
        assert_eq!(HElem::one().shuffle(&a), a);
    }

    #[test]
    fn harmonic_examples() {
        let z1 = HElem::z_of(&[1]);
        let expected = &HElem::z_of(&[1, 1]).scaled(&rat(2, 1)) + &HElem::z_of(&[2]);
        assert_eq!(z1.harmonic(&z1).unwrap(), expected);
        assert_eq!(
            HElem::one().harmonic(&HElem::z_of(&[2])).unwrap(),
            HElem::z_of(&[2])
        );
        let expected: HElem = [
            (
                Word::from_index(&Index::new(vec![1, 2]).unwrap()),
                rat(1, 1),
            ),
            (
                Word::from_index(&Index::new(vec![2, 1]).unwrap()),
                rat(1, 1),
            ),
            (Word::from_index(&Index::new(vec![3]).unwrap()), rat(1, 1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(z1.harmonic(&HElem::z_of(&[2])).unwrap(), expected);
        assert!(matches!(h("x").harmonic(&z1), Err(Error::NotInH1(_))));
    }

    #[test]
    fn right_multiplication_by_x() {
        assert_eq!(h("y").right_mul_x_pow(1), h("yx"));
        let a = &h("yy") + &h("yx");
        assert_eq!(a.right_mul_x_pow(0), a);
        assert_eq!(
            h("y").scaled(&rat(2, 1)).right_mul_x_pow(2),
            HElem::from_term(w("yxx"), rat(2, 1))
        );
    }

    #[test]
    fn rendering() {
        let a: HElem = [
            (w("yx"), rat(-3, 4)),
            (Word::empty(), rat(2, 1)),
            (w("yy"), rat(1, 1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(a.to_string(), "2 - 3/4*yx + yy");
        assert_eq!(HElem::zero().to_string(), "0");
        assert_eq!(
            a.to_json()["terms"][1],
            json!({"coeff": "-3/4", "word": "yx"})
        );
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = &h("yx") - &h("yx");
        assert!(a.is_zero());
        assert_eq!(a.len(), 0);
    }

    #[test]
    fn all_y_shuffle_counts_binomial() {
        for p in 0..5usize {
            for q in 0..5usize {
                let a = HElem::from_word(Word::new(vec![Letter::Y; p]));
                let b = HElem::from_word(Word::new(vec![Letter::Y; q]));
                let prod = a.shuffle(&b);
                let binom = num_integer::binomial(p + q, p) as i64;
                assert_eq!(
                    prod,
                    HElem::from_term(Word::new(vec![Letter::Y; p + q]), rat(binom, 1))
                );
            }
        }
    }

    #[test]
    fn indices_of_weight() {
        assert_eq!(Index::all_of_weight(0), vec![Index::empty()]);
        assert_eq!(Index::all_of_weight(4).len(), 8);
        assert_eq!(Index::all_up_to_weight(4).len(), 16);
    }
}
