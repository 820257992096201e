use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use zf_core::catalog;
use zf_core::dsl::{format_tree, parse_tree};
use zf_core::symmetrizer::phi_hat_series;
use zf_core::tree::{cap_phi, cap_phi_hat, harvestable_form, is_harvestable, w_word, Edge};
use zf_core::zeta::{z_m_eval, zeta_index, zeta_shat_tree, zeta_tree};
use zf_core::{phi, phi_hat, rat, HElem, Index, IndexedTree, Letter, TSeries, Word};

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=4).prop_map(|bits| {
        Word::new(
            bits.into_iter()
                .map(|b| if b { Letter::Y } else { Letter::X })
                .collect(),
        )
    })
}

fn elem() -> impl Strategy<Value = HElem> {
    prop::collection::vec((word(), -3i64..=3), 0..=3)
        .prop_map(|terms| terms.into_iter().map(|(w, c)| (w, rat(c, 1))).collect())
}

fn index(max_depth: usize, max_entry: u32) -> impl Strategy<Value = Index> {
    prop::collection::vec(1..=max_entry, 0..=max_depth).prop_map(|k| Index::new(k).unwrap())
}

/// A combination of z-words, so an element of `h^1`.
fn h1_elem() -> impl Strategy<Value = HElem> {
    prop::collection::vec((index(2, 3), -2i64..=2), 0..=3).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(k, c)| (Word::from_index(&k), rat(c, 1)))
            .collect()
    })
}

fn tree(max_vertices: usize, max_index: u32) -> impl Strategy<Value = IndexedTree> {
    any::<u64>().prop_map(move |seed| {
        catalog::random_tree(&mut catalog::rng(seed), max_vertices, max_index)
    })
}

/// The same tree with vertex ids permuted, edges reordered and edge ends
/// swapped at random.
fn relabel(t: &IndexedTree, seed: u64) -> IndexedTree {
    let mut rng = catalog::rng(seed);
    let n = t.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut colors = t.colors().to_vec();
    for v in 0..n {
        colors[perm[v]] = t.color(v);
    }
    let mut edges: Vec<Edge> = t
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (perm[e.ends.0], perm[e.ends.1]);
            if rng.gen_bool(0.5) {
                Edge::new(a, b, e.index)
            } else {
                Edge::new(b, a, e.index)
            }
        })
        .collect();
    edges.shuffle(&mut rng);
    IndexedTree::new(colors, edges, perm[t.root()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shuffle_is_commutative_and_associative(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(a.shuffle(&b), b.shuffle(&a));
        prop_assert_eq!(a.shuffle(&b).shuffle(&c), a.shuffle(&b.shuffle(&c)));
    }

    #[test]
    fn shuffle_is_bilinear(a in elem(), b in elem(), c in elem(), s in -3i64..=3) {
        let lhs = a.shuffle(&(&b + &c.scaled(&rat(s, 1))));
        let rhs = &a.shuffle(&b) + &a.shuffle(&c).scaled(&rat(s, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shuffle_has_the_empty_word_as_unit(a in elem()) {
        prop_assert_eq!(a.shuffle(&HElem::one()), a);
    }

    #[test]
    fn harmonic_is_commutative_and_associative(a in h1_elem(), b in h1_elem(), c in h1_elem()) {
        prop_assert_eq!(a.harmonic(&b).unwrap(), b.harmonic(&a).unwrap());
        let left = a.harmonic(&b).unwrap().harmonic(&c).unwrap();
        let right = a.harmonic(&b.harmonic(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn z_m_is_multiplicative(k in index(3, 3), l in index(3, 3), m in 1u32..=7) {
        let prod = HElem::z(&k).harmonic(&HElem::z(&l)).unwrap();
        prop_assert_eq!(z_m_eval(&prod, m).unwrap(), zeta_index(&k, m) * zeta_index(&l, m));
    }

    #[test]
    fn phi_hat_is_linear(a in h1_elem(), b in h1_elem(), s in -3i64..=3, order in 1usize..=3) {
        let combo = &a + &b.scaled(&rat(s, 1));
        let lhs = phi_hat(&combo, order).unwrap();
        let rhs = phi_hat(&a, order).unwrap().add(&phi_hat(&b, order).unwrap().scaled(&rat(s, 1))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_hat_extends_coefficientwise(a in h1_elem(), b in h1_elem(), order in 1usize..=3) {
        // a + b t as a series
        let mut series = TSeries::constant(a.clone(), order).unwrap();
        series.add_at(1, &b, &rat(1, 1));
        let lhs = phi_hat_series(&series).unwrap();
        let mut rhs = phi_hat(&a, order).unwrap();
        if order > 1 {
            let shifted = phi_hat(&b, order - 1).unwrap();
            for (d, c) in shifted.coeffs().iter().enumerate() {
                rhs.add_at(d + 1, c, &rat(1, 1));
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncation_is_consistent(a in h1_elem(), x in tree(5, 2), n in 1usize..=3) {
        let big = 4;
        prop_assert_eq!(phi_hat(&a, big).unwrap().truncate(n).unwrap(), phi_hat(&a, n).unwrap());
        prop_assert_eq!(cap_phi_hat(&x, big).unwrap().truncate(n).unwrap(), cap_phi_hat(&x, n).unwrap());
        prop_assert_eq!(
            zeta_shat_tree(&x, 4, big).unwrap().truncate(n).unwrap(),
            zeta_shat_tree(&x, 4, n).unwrap()
        );
    }

    #[test]
    fn phi_is_the_constant_term(a in h1_elem()) {
        let full = phi_hat(&a, 2).unwrap();
        prop_assert_eq!(&phi(&a).unwrap(), full.constant_term());
    }

    #[test]
    fn canonical_key_ignores_labels(x in tree(7, 3), seed in any::<u64>()) {
        prop_assert_eq!(relabel(&x, seed).canonical_key().unwrap(), x.canonical_key().unwrap());
    }

    #[test]
    fn dsl_round_trips(x in tree(7, 3)) {
        let text = format_tree(&x);
        let back = parse_tree(&text).unwrap();
        prop_assert_eq!(back.canonical_key().unwrap(), text);
    }

    #[test]
    fn essential_positivity_is_stable(x in tree(6, 2), v in any::<prop::sample::Index>(), add in 0u32..=2) {
        let v = v.index(x.vertex_count());
        prop_assert!(x.change_root(v).unwrap().is_essentially_positive());
        let additions: Vec<(usize, u32)> = (0..x.edges().len()).map(|e| (e, add)).collect();
        prop_assert!(x.with_added_indices(&additions).is_essentially_positive());
    }

    #[test]
    fn harvestable_form_keeps_tree_sums(x in tree(6, 2), m in 1u32..=6) {
        let h = harvestable_form(&x).unwrap();
        prop_assert!(is_harvestable(&h));
        prop_assert_eq!(zeta_tree(&h, m).unwrap(), zeta_tree(&x, m).unwrap());
        prop_assert_eq!(zeta_shat_tree(&h, m, 2).unwrap(), zeta_shat_tree(&x, m, 2).unwrap());
    }

    #[test]
    fn linear_trees_are_indices(k in index(4, 3), m in 1u32..=8) {
        let x = IndexedTree::linear(k.entries());
        prop_assert_eq!(zeta_tree(&x, m).unwrap(), zeta_index(&k, m));
        prop_assert_eq!(w_word(&x).unwrap(), HElem::z(&k));
    }

    #[test]
    fn cap_phi_has_one_term_per_black_vertex_at_most(x in tree(6, 2)) {
        let combo = cap_phi(&x).unwrap();
        prop_assert!(combo.len() <= x.blacks().count());
        let n = x.blacks().count() as i64;
        for (_, _, c) in combo.terms() {
            prop_assert!(c.is_integer() && c * c <= rat(n * n, 1));
        }
    }
}
