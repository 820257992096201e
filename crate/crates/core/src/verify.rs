//! Named verification suites.
//!
//! Each suite enumerates a finite family of inputs, checks one identity per
//! input with exact arithmetic and reports the inputs where it fails. Inputs
//! run in parallel; reports are sorted by case key, so a run is
//! reproducible byte for byte.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::catalog;
use crate::error::{Error, Result};
use crate::series::TSeries;
use crate::symmetrizer::{bounded_tuples, phi, phi_hat, phi_hat_series, shifted_binom, Tuple};
use crate::tree::{
    cap_phi, cap_phi_hat, circ_h, circ_product, harvestable_form, is_harvestable, w_of_harvested,
    w_word, IndexedTree, Node, TreeCombo,
};
use crate::word::{HElem, Index, Letter, Word};
use crate::zeta::{
    z_m_eval_upto, z_m_series_upto, zeta_index_upto, zeta_shat_tree_upto, zeta_tree,
};
use crate::Rational;

/// Bounds shared by all suites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// Truncation order `N` of every t-series.
    pub t_order: usize,
    /// Largest `M` for truncated sums.
    pub m_max: u32,
    /// Weight bound for suites that enumerate indices.
    pub weight_max: u32,
    pub seed: u64,
    /// Number of random cases for the seeded suites.
    pub count: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            t_order: 8,
            m_max: 10,
            weight_max: 4,
            seed: 0,
            count: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        v["passed"] = Value::Bool(self.passed());
        v
    }

    /// Concatenates reports of sub-suites under a new name.
    pub fn merge(suite: &str, parts: Vec<Report>) -> Report {
        let mut failures: Vec<Failure> = parts.iter().flat_map(|r| r.failures.clone()).collect();
        failures.sort_by(|a, b| a.case.cmp(&b.case));
        Report {
            suite: suite.to_string(),
            cases: parts.iter().map(|r| r.cases).sum(),
            failures,
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite {}: {} cases, {} failures",
            self.suite,
            self.cases,
            self.failures.len()
        )?;
        for fail in &self.failures {
            write!(f, "\nFAIL {}: {}", fail.case, fail.detail)?;
        }
        Ok(())
    }
}

/// Names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "algebra",
    "bridge",
    "btt",
    "main",
    "t-btt",
    "kaneko",
    "root-change",
    "vanish",
    "harvest",
    "assoc",
    "figures",
];

pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<Report> {
    Ok(match name {
        "algebra" => Report::merge(
            "algebra",
            vec![algebra_axioms(cfg), harmonic_homomorphism(cfg)],
        ),
        "bridge" => linear_bridge(cfg),
        "btt" => btt(cfg),
        "main" => main_theorem(cfg),
        "t-btt" => t_btt(cfg),
        "kaneko" => kaneko(cfg),
        "root-change" => root_change(cfg),
        "vanish" => vanish(cfg),
        "harvest" => harvest(cfg),
        "assoc" => assoc(cfg),
        "figures" => figures(cfg),
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

/// The outcome of one check: `Ok(None)` on success, `Ok(Some(detail))` on a
/// mismatch, `Err` when an input was rejected.
type Outcome = Result<Option<String>>;

struct Case {
    key: String,
    check: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Case {
    fn new(key: impl Into<String>, check: impl Fn() -> Outcome + Send + Sync + 'static) -> Case {
        Case {
            key: key.into(),
            check: Box::new(check),
        }
    }
}

fn run_cases(suite: &str, cases: Vec<Case>) -> Report {
    let mut failures: Vec<Failure> = cases
        .par_iter()
        .filter_map(|c| {
            let detail = match (c.check)() {
                Ok(None) => return None,
                Ok(Some(d)) => d,
                Err(e) => format!("error: {e}"),
            };
            Some(Failure {
                case: c.key.clone(),
                detail,
            })
        })
        .collect();
    failures.sort_by(|a, b| a.case.cmp(&b.case));
    Report {
        suite: suite.to_string(),
        cases: cases.len(),
        failures,
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(what: &str, lhs: &T, rhs: &T) -> Option<String> {
    (lhs != rhs).then(|| format!("{what}: {lhs} != {rhs}"))
}

type TreeCheck = Arc<dyn Fn(&IndexedTree) -> Outcome + Send + Sync>;

/// A case over one tree; a failing tree is shrunk before it is reported.
fn tree_case(tree: IndexedTree, check: &TreeCheck) -> Case {
    let check = Arc::clone(check);
    Case::new(format!("tree={tree}"), move || {
        let Some(detail) = check(&tree)? else {
            return Ok(None);
        };
        let small = minimize(&tree, |t| matches!(check(t), Ok(Some(_))));
        if small.canonical_key() == tree.canonical_key() {
            Ok(Some(detail))
        } else {
            let small_detail = check(&small)?.unwrap_or_default();
            Ok(Some(format!(
                "{detail}; minimal counterexample tree={small}: {small_detail}"
            )))
        }
    })
}

/// Shrinks a failing tree: lowers edge indices one step at a time, then
/// removes leaves, as long as `fails` keeps holding.
pub fn minimize(tree: &IndexedTree, fails: impl Fn(&IndexedTree) -> bool) -> IndexedTree {
    let mut cur = tree.clone();
    'shrink: loop {
        for e in 0..cur.edges().len() {
            let k = cur.edges()[e].index;
            if k > 0 {
                let mut cand = cur.clone();
                cand.set_index(e, k - 1);
                if cand.is_essentially_positive() && fails(&cand) {
                    cur = cand;
                    continue 'shrink;
                }
            }
        }
        for cand in leaf_removals(&cur) {
            if fails(&cand) {
                cur = cand;
                continue 'shrink;
            }
        }
        return cur;
    }
}

fn leaf_removals(tree: &IndexedTree) -> Vec<IndexedTree> {
    fn rec(node: &Node, out: &mut Vec<Node>) {
        for (i, (_, child)) in node.children.iter().enumerate() {
            if child.children.is_empty() {
                let mut copy = node.clone();
                copy.children.remove(i);
                out.push(copy);
            } else {
                let mut sub = Vec::new();
                rec(child, &mut sub);
                for s in sub {
                    let mut copy = node.clone();
                    copy.children[i].1 = s;
                    out.push(copy);
                }
            }
        }
    }
    let mut nodes = Vec::new();
    rec(&tree.to_node(), &mut nodes);
    nodes
        .into_iter()
        .map(|n| n.to_tree())
        .filter(|t| t.validate().is_ok())
        .collect()
}

fn z(entries: &[u32]) -> HElem {
    HElem::z_of(entries)
}

fn shuffle_all(parts: impl IntoIterator<Item = HElem>) -> HElem {
    parts
        .into_iter()
        .fold(HElem::one(), |acc, p| acc.shuffle(&p))
}

fn sign(exponent: u64) -> Rational {
    if exponent.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// All tuples of length `len` with entries in `lo..=hi`.
fn grid(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |e| {
                    let mut v = v.clone();
                    v.push(e);
                    v
                })
            })
            .collect()
    })
}

fn random_word(rng: &mut impl Rng, max_len: usize) -> HElem {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Letter::X
            } else {
                Letter::Y
            }
        })
        .collect();
    HElem::from_word(Word::new(letters))
}

/// Commutativity, associativity and unit laws of both products, closure of
/// `h^1`, and the binomial count `y^p sh y^q`.
pub fn algebra_axioms(cfg: &RunConfig) -> Report {
    let indices = Index::all_up_to_weight(cfg.weight_max);
    let mut cases = Vec::new();
    for a in &indices {
        let za = HElem::z(a);
        cases.push(Case::new(format!("unit z{a}"), move || {
            let one = HElem::one();
            let (right, left) = (za.harmonic(&one)?, one.harmonic(&za)?);
            Ok(expect_eq("a sh 1", &za.shuffle(&one), &za)
                .or_else(|| expect_eq("1 sh a", &one.shuffle(&za), &za))
                .or_else(|| expect_eq("a * 1", &right, &za))
                .or_else(|| expect_eq("1 * a", &left, &za)))
        }));
        for b in &indices {
            let (za, zb) = (HElem::z(a), HElem::z(b));
            cases.push(Case::new(format!("commute z{a} z{b}"), move || {
                let sh = za.shuffle(&zb);
                let st = za.harmonic(&zb)?;
                if !sh.in_h1() || !st.in_h1() {
                    return Ok(Some("product left h^1".into()));
                }
                let st_swapped = zb.harmonic(&za)?;
                Ok(expect_eq("sh", &sh, &zb.shuffle(&za))
                    .or_else(|| expect_eq("*", &st, &st_swapped)))
            }));
            for c in &indices {
                let (za, zb, zc) = (HElem::z(a), HElem::z(b), HElem::z(c));
                cases.push(Case::new(format!("assoc z{a} z{b} z{c}"), move || {
                    let sh_l = za.shuffle(&zb).shuffle(&zc);
                    let sh_r = za.shuffle(&zb.shuffle(&zc));
                    let st_l = za.harmonic(&zb)?.harmonic(&zc)?;
                    let st_r = za.harmonic(&zb.harmonic(&zc)?)?;
                    Ok(expect_eq("sh", &sh_l, &sh_r).or_else(|| expect_eq("*", &st_l, &st_r)))
                }));
            }
        }
    }
    for p in 0..=4u32 {
        for q in 0..=4u32 {
            cases.push(Case::new(format!("binomial y^{p} sh y^{q}"), move || {
                let y = |n: u32| HElem::from_word(Word::new(vec![Letter::Y; n as usize]));
                // C(p + q, q)
                let c = shifted_binom(p + 1, q);
                let expected = y(p + q).scaled(&Rational::from_integer(c));
                Ok(expect_eq("count", &y(p).shuffle(&y(q)), &expected))
            }));
        }
    }
    let mut rng = catalog::rng(cfg.seed);
    for i in 0..cfg.count.unwrap_or(200) {
        let (a, b, c) = (
            random_word(&mut rng, 4),
            random_word(&mut rng, 4),
            random_word(&mut rng, 4),
        );
        let (ka, kb, kc) = (
            catalog::random_index(&mut rng, 5),
            catalog::random_index(&mut rng, 5),
            catalog::random_index(&mut rng, 5),
        );
        cases.push(Case::new(format!("random #{i:03}"), move || {
            let (za, zb, zc) = (HElem::z(&ka), HElem::z(&kb), HElem::z(&kc));
            let checks = [
                ("sh commutes", a.shuffle(&b), b.shuffle(&a)),
                (
                    "sh associates",
                    a.shuffle(&b).shuffle(&c),
                    a.shuffle(&b.shuffle(&c)),
                ),
                ("* commutes", za.harmonic(&zb)?, zb.harmonic(&za)?),
                (
                    "* associates",
                    za.harmonic(&zb)?.harmonic(&zc)?,
                    za.harmonic(&zb.harmonic(&zc)?)?,
                ),
            ];
            Ok(checks
                .into_iter()
                .find_map(|(what, l, r)| expect_eq(what, &l, &r)))
        }));
    }
    run_cases("algebra-axioms", cases)
}

/// `Z_M(a * b) = Z_M(a) Z_M(b)` for every pair of indices of weight at most
/// `weight_max` and `2 <= M <= m_max`.
pub fn harmonic_homomorphism(cfg: &RunConfig) -> Report {
    let indices = Index::all_up_to_weight(cfg.weight_max);
    let m_max = cfg.m_max;
    let mut cases = Vec::new();
    cases.push(Case::new("witness Z_3(z1 * z1)", || {
        let sq = z(&[1]).harmonic(&z(&[1]))?;
        let v = z_m_eval_upto(&sq, 3)?.pop().expect("entries");
        Ok(expect_eq("Z_3", &v, &crate::rat(9, 4)))
    }));
    for a in &indices {
        for b in &indices {
            let (a, b) = (a.clone(), b.clone());
            cases.push(Case::new(format!("Z_M(z{a} * z{b})"), move || {
                let prod = HElem::z(&a).harmonic(&HElem::z(&b))?;
                let lhs = z_m_eval_upto(&prod, m_max)?;
                let za = zeta_index_upto(&a, m_max);
                let zb = zeta_index_upto(&b, m_max);
                for m in 2..=m_max as usize {
                    let rhs = &za[m] * &zb[m];
                    if lhs[m] != rhs {
                        return Ok(Some(format!("M={m}: {} != {rhs}", lhs[m])));
                    }
                }
                Ok(None)
            }));
        }
    }
    run_cases("harmonic-homomorphism", cases)
}

/// Linear trees against indices: the tree sum equals the multiple harmonic
/// sum, and the t-adic tree sum equals `Z_M` of the symmetrized z-word.
/// Depth at most 4, entries at most 3, `M <= m_max`.
pub fn linear_bridge(cfg: &RunConfig) -> Report {
    let (m_max, order) = (cfg.m_max, cfg.t_order);
    let mut cases = Vec::new();
    for depth in 0..=4 {
        for k in grid(depth, 1, 3) {
            let index = Index::new(k.clone()).expect("positive");
            cases.push(Case::new(format!("linear k={index}"), move || {
                let x = IndexedTree::linear(&k);
                let zi = zeta_index_upto(&index, m_max);
                for m in 1..=m_max {
                    let zt = zeta_tree(&x, m)?;
                    if zt != zi[m as usize] {
                        return Ok(Some(format!("M={m}: tree sum {zt} != {}", zi[m as usize])));
                    }
                }
                // the one-vertex tree has no t-adic terms
                if k.is_empty() {
                    return Ok(None);
                }
                let lhs = zeta_shat_tree_upto(&x, m_max, order)?;
                let rhs = z_m_series_upto(&phi_hat(&w_word(&x)?, order)?, m_max)?;
                for m in 1..=m_max as usize {
                    if let Some(d) = expect_eq(&format!("M={m}, N={order}"), &lhs[m], &rhs[m]) {
                        return Ok(Some(d));
                    }
                }
                Ok(None)
            }));
        }
    }
    run_cases("bridge", cases)
}

/// `phi((z_{k_1} sh ... sh z_{k_r}) x^{k_{r+1}})` against the closed form,
/// for `r <= 3`, `k_i <= 3` and total weight at most `weight_max`.
pub fn btt(cfg: &RunConfig) -> Report {
    let mut cases = Vec::new();
    for r in 1..=3 {
        for k in grid(r + 1, 1, 3) {
            if k.iter().sum::<u32>() > cfg.weight_max {
                continue;
            }
            cases.push(Case::new(format!("k={}", Tuple(k.clone())), move || {
                let last = k[r];
                let lhs = phi(&shuffle_all(k[..r].iter().map(|&e| z(&[e]))).right_mul_x_pow(last))?;
                let mut rhs = HElem::zero();
                for i in 0..=r {
                    let rest = (0..=r).filter(|&j| j != i).map(|j| z(&[k[j]]));
                    let term = shuffle_all(rest).right_mul_x_pow(k[i]);
                    rhs.add_scaled(&term, &sign((k[i] + last) as u64));
                }
                Ok(expect_eq("phi", &lhs, &rhs))
            }));
        }
    }
    run_cases("btt", cases)
}

/// `phi^(w(h(X)))` against `w(h(Phi^(X)))` in `h^1[[t]]`, and both against
/// the t-adic tree sum through `Z_M`, over the built-in catalog.
pub fn main_theorem(cfg: &RunConfig) -> Report {
    let (m_max, order) = (cfg.m_max, cfg.t_order);
    let check: TreeCheck = Arc::new(move |x: &IndexedTree| {
        let lhs = phi_hat(&w_of_harvested(x)?, order)?;
        let rhs = cap_phi_hat(x, order)?.try_map(TreeCombo::w_of_harvested)?;
        if let Some(d) = expect_eq(&format!("symbolic, N={order}"), &lhs, &rhs) {
            return Ok(Some(d));
        }
        // the one-vertex tree has an empty summation range on the tree side
        if x.vertex_count() == 1 {
            return Ok(None);
        }
        let word_side = z_m_series_upto(&lhs, m_max)?;
        let tree_side = zeta_shat_tree_upto(x, m_max, order)?;
        for m in 1..=m_max as usize {
            if let Some(d) = expect_eq(
                &format!("Z_M, M={m}, N={order}"),
                &word_side[m],
                &tree_side[m],
            ) {
                return Ok(Some(d));
            }
        }
        Ok(None)
    });
    let cases = catalog::builtin()
        .into_iter()
        .map(|t| tree_case(t, &check))
        .collect();
    run_cases("main", cases)
}

/// The t-adic closed form for `phi^((z_{k_1} sh ... sh z_{k_r}) x^{k_{r+1}})`
/// with `r <= 2` and `k_i <= 2`.
pub fn t_btt(cfg: &RunConfig) -> Report {
    let order = cfg.t_order;
    let mut cases = Vec::new();
    for r in 1..=2 {
        for k in grid(r + 1, 1, 2) {
            cases.push(Case::new(format!("k={}", Tuple(k.clone())), move || {
                let last = k[r];
                let base = shuffle_all(k[..r].iter().map(|&e| z(&[e]))).right_mul_x_pow(last);
                let lhs = phi_hat(&base, order)?;
                let mut rhs = TSeries::constant(base, order)?;
                let max = order as u32 - 1;
                for i in 0..r {
                    for l in 0..=max {
                        for lp in 0..=max - l {
                            let c = shifted_binom(k[i], l) * shifted_binom(last, lp);
                            let rest = (0..r).filter(|&j| j != i).map(|j| z(&[k[j]]));
                            let term = shuffle_all(rest.chain([z(&[last + lp])]))
                                .right_mul_x_pow(k[i] + l);
                            let scale = sign((k[i] + last) as u64) * Rational::from_integer(c);
                            rhs.add_at((l + lp) as usize, &term, &scale);
                        }
                    }
                }
                Ok(expect_eq(&format!("phi^, N={order}"), &lhs, &rhs))
            }));
        }
    }
    run_cases("t-btt", cases)
}

/// The shuffle-reversal identities for `phi^` and `phi` over index pairs
/// with `wt(k) + wt(l) <= weight_max`.
pub fn kaneko(cfg: &RunConfig) -> Report {
    let order = cfg.t_order;
    let indices = Index::all_up_to_weight(cfg.weight_max);
    let mut cases = Vec::new();
    for k in &indices {
        for l in &indices {
            if k.weight() + l.weight() > cfg.weight_max {
                continue;
            }
            let (k, l) = (k.clone(), l.clone());
            cases.push(Case::new(format!("k={k} l={l}"), move || {
                let zk = HElem::z(&k);
                let zl = HElem::z(&l);
                let lt = Tuple::from(&l);
                let s = sign(l.weight() as u64);
                // the t-adic identity
                let lhs = phi_hat(&zk.shuffle(&zl), order)?;
                let mut arg = TSeries::zero(order)?;
                for lp in bounded_tuples(l.depth(), order as u32 - 1) {
                    let b = crate::b_binom(&lt, &lp)?;
                    if b.is_zero() {
                        continue;
                    }
                    let rev = Index::new(lt.checked_add(&lp)?.reversed().0)?;
                    arg.add_at(lp.weight() as usize, &zk.concat(&HElem::z(&rev)), &(&s * b));
                }
                let rhs = phi_hat_series(&arg)?;
                if let Some(d) = expect_eq(&format!("phi^, N={order}"), &lhs, &rhs) {
                    return Ok(Some(d));
                }
                // its constant term
                let rev = Index::new(lt.reversed().0)?;
                let lhs0 = phi(&zk.shuffle(&zl))?;
                let rhs0 = phi(&zk.concat(&HElem::z(&rev)))?.scaled(&s);
                Ok(expect_eq("phi", &lhs0, &rhs0))
            }));
        }
    }
    run_cases("kaneko", cases)
}

/// The t-adic tree sum of a harvestable pair against the root-changed tree
/// sums, over the harvestable part of the catalog.
pub fn root_change(cfg: &RunConfig) -> Report {
    let (m_max, order) = (cfg.m_max, cfg.t_order);
    let check: TreeCheck = Arc::new(move |x: &IndexedTree| {
        let lhs = zeta_shat_tree_upto(x, m_max, order)?;
        let terms = cap_phi_hat(x, order)?;
        for m in 1..=m_max {
            let rhs = terms.try_map(|combo| {
                let mut total = Rational::zero();
                for (_, t, c) in combo.terms() {
                    total += c * zeta_tree(&harvestable_form(t)?, m)?;
                }
                Ok(total)
            })?;
            if let Some(d) = expect_eq(&format!("M={m}, N={order}"), &lhs[m as usize], &rhs) {
                return Ok(Some(d));
            }
        }
        Ok(None)
    });
    let cases = catalog::builtin_harvestable()
        .into_iter()
        // the one-vertex tree has an empty summation range on the left
        .filter(|t| t.vertex_count() > 1)
        .map(|t| tree_case(t, &check))
        .collect();
    run_cases("root-change", cases)
}

/// `Phi(X) = 0` and `phi(w(h(X))) = 0` on mirror-symmetric hybrid trees.
pub fn vanish(_cfg: &RunConfig) -> Report {
    let check: TreeCheck = Arc::new(|x: &IndexedTree| {
        let cap = cap_phi(x)?;
        if !cap.is_zero() {
            return Ok(Some(format!("Phi = {cap}")));
        }
        let word = phi(&w_of_harvested(x)?)?;
        if !word.is_zero() {
            return Ok(Some(format!("phi(w(h(X))) = {word}")));
        }
        let direct = phi(&w_word(x)?)?;
        Ok((!direct.is_zero()).then(|| format!("phi(w(X)) = {direct}")))
    });
    let cases = catalog::symmetric_hybrid_family()
        .into_iter()
        .map(|t| tree_case(t, &check))
        .collect();
    run_cases("vanish", cases)
}

/// The harvestable form is harvestable and keeps both tree sums, for the
/// catalog and for every small tree (`M <= min(m_max, 8)`).
pub fn harvest(cfg: &RunConfig) -> Report {
    let (m_max, order) = (cfg.m_max.min(8), cfg.t_order);
    let check: TreeCheck = Arc::new(move |x: &IndexedTree| {
        let h = harvestable_form(x)?;
        if !is_harvestable(&h) {
            return Ok(Some(format!("h(X) = {h} is not harvestable")));
        }
        for m in 1..=m_max {
            if let Some(d) = expect_eq(
                &format!("zeta_M, M={m}"),
                &zeta_tree(x, m)?,
                &zeta_tree(&h, m)?,
            ) {
                return Ok(Some(d));
            }
        }
        let before = zeta_shat_tree_upto(x, m_max, order)?;
        let after = zeta_shat_tree_upto(&h, m_max, order)?;
        for m in 1..=m_max as usize {
            if let Some(d) = expect_eq(&format!("zeta_S^, M={m}, N={order}"), &before[m], &after[m])
            {
                return Ok(Some(d));
            }
        }
        Ok(None)
    });
    let mut trees = catalog::builtin();
    let known = catalog::keys(&trees);
    trees.extend(
        catalog::exhaustive(5, 2)
            .into_iter()
            .filter(|t| !known.contains(&t.canonical_key().expect("valid"))),
    );
    let cases = trees.into_iter().map(|t| tree_case(t, &check)).collect();
    run_cases("harvest", cases)
}

/// Associativity, commutativity and the unit law of `o` and `o_h` on seeded
/// random harvestable pairs with at most six vertices.
pub fn assoc(cfg: &RunConfig) -> Report {
    let mut rng = catalog::rng(cfg.seed);
    let mut cases = Vec::new();
    for i in 0..cfg.count.unwrap_or(100) {
        let a = catalog::random_harvestable(&mut rng, 6, 2);
        let b = catalog::random_harvestable(&mut rng, 6, 2);
        let c = catalog::random_harvestable(&mut rng, 6, 2);
        cases.push(Case::new(
            format!("triple #{i:03} {a} {b} {c}"),
            move || {
                let key = |t: IndexedTree| t.canonical_key();
                let unit = IndexedTree::unit();
                let checks = [
                    (
                        "o_h associates",
                        key(circ_h(&circ_h(&a, &b)?, &c)?)?,
                        key(circ_h(&a, &circ_h(&b, &c)?)?)?,
                    ),
                    ("o_h commutes", key(circ_h(&a, &b)?)?, key(circ_h(&b, &a)?)?),
                    ("o_h unit", key(circ_h(&a, &unit)?)?, key(a.clone())?),
                    (
                        "o associates",
                        key(circ_product(&circ_product(&a, &b)?, &c)?)?,
                        key(circ_product(&a, &circ_product(&b, &c)?)?)?,
                    ),
                    (
                        "o commutes",
                        key(circ_product(&a, &b)?)?,
                        key(circ_product(&b, &a)?)?,
                    ),
                    ("o unit", key(circ_product(&unit, &a)?)?, key(a.clone())?),
                ];
                Ok(checks
                    .into_iter()
                    .find_map(|(what, l, r)| expect_eq(what, &l, &r)))
            },
        ));
    }
    run_cases("assoc", cases)
}

/// The worked examples: `Phi` of the linear tree with three edges, term by
/// term, and the word of the hybrid tree.
pub fn figures(_cfg: &RunConfig) -> Report {
    let mut cases = Vec::new();
    for k in grid(3, 1, 2) {
        let (k1, k2, k3) = (k[0], k[1], k[2]);
        cases.push(Case::new(
            format!("Phi linear k=({k1},{k2},{k3})"),
            move || {
                let x = IndexedTree::linear(&[k1, k2, k3]);
                let mut expected = TreeCombo::zero();
                let pictured = [
                    (k1 + k2 + k3, format!("b({k1}:b({k2}:b({k3}:b())))")),
                    (k2 + k3, format!("b({k1}:b(),{k2}:b({k3}:b()))")),
                    (k3, format!("b({k3}:b(),{k2}:b({k1}:b()))")),
                    (0, format!("b({k3}:b({k2}:b({k1}:b())))")),
                ];
                for (exp, dsl) in pictured {
                    expected.add_tree(crate::dsl::parse_tree(&dsl)?, sign(exp as u64))?;
                }
                Ok(expect_eq("Phi", &cap_phi(&x)?, &expected))
            },
        ));
    }
    for k in grid(4, 1, 2) {
        for l in 0..=2 {
            let k = k.clone();
            cases.push(Case::new(
                format!("w hybrid k={} l={l}", Tuple(k.clone())),
                move || {
                    let x = catalog::hybrid(k[0], k[1], k[2], k[3], l);
                    let expected = z(&[k[0]])
                        .shuffle(&z(&[k[1]]))
                        .right_mul_x_pow(l)
                        .shuffle(&z(&[k[2]]))
                        .right_mul_x_pow(k[3]);
                    Ok(expect_eq("w", &w_word(&x)?, &expected))
                },
            ));
        }
    }
    run_cases("figures", cases)
}
