//! Test inputs: the built-in tree families, exhaustive enumeration of small
//! trees, and seeded random trees.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dsl::parse_tree;
use crate::tree::{harvestable_form, Color, IndexedTree, Node};
use crate::word::Index;

/// Deterministic generator used by every seeded sweep.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn tree(s: &str) -> IndexedTree {
    parse_tree(s).expect("built-in catalog entries are valid")
}

/// Keeps the first tree of every isomorphism class, ordered by key.
fn dedup(trees: impl IntoIterator<Item = IndexedTree>) -> Vec<IndexedTree> {
    let mut seen = BTreeMap::new();
    for t in trees {
        let key = t.canonical_key().expect("catalog trees are valid");
        seen.entry(key).or_insert(t);
    }
    seen.into_values().collect()
}

/// Linear trees with depth `<= max_depth` and entries in `1..=max_entry`.
pub fn linear_family(max_depth: usize, max_entry: u32) -> Vec<IndexedTree> {
    let mut out = vec![IndexedTree::unit()];
    let mut layer = vec![Vec::<u32>::new()];
    for _ in 0..max_depth {
        layer = layer
            .iter()
            .flat_map(|k| {
                (1..=max_entry).map(move |e| {
                    let mut k = k.clone();
                    k.push(e);
                    k
                })
            })
            .collect();
        out.extend(layer.iter().map(|k| IndexedTree::linear(k)));
    }
    out
}

fn leaf_multisets(r: usize, values: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(r: usize, from: usize, values: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in from..values.len() {
            cur.push(values[i]);
            rec(r, i, values, cur, out);
            cur.pop();
        }
    }
    rec(r, 0, values, &mut Vec::new(), &mut out);
    out
}

fn leaves(ks: &[u32]) -> String {
    ks.iter()
        .map(|k| format!("{k}:b()"))
        .collect::<Vec<_>>()
        .join(",")
}

/// `rt --k'-- white` carrying `r` leaves, and black roots carrying `r` leaves.
pub fn star_family() -> Vec<IndexedTree> {
    let mut out = Vec::new();
    for r in 2..=3 {
        for ks in leaf_multisets(r, &[1, 2]) {
            for k in 0..=2 {
                out.push(tree(&format!("b({k}:w({}))", leaves(&ks))));
            }
            out.push(tree(&format!("b({})", leaves(&ks))));
        }
    }
    out
}

/// The hybrid tree: `rt --k4-- u`, `u --k3-- leaf`, `u --l-- u'`,
/// `u' --k1-- leaf`, `u' --k2-- leaf`, with `u`, `u'` white.
pub fn hybrid(k1: u32, k2: u32, k3: u32, k4: u32, l: u32) -> IndexedTree {
    tree(&format!("b({k4}:w({k3}:b(),{l}:w({k1}:b(),{k2}:b())))"))
}

/// Hybrid trees with `k_i in {1, 2}` and `l in {0, 1, 2}`.
pub fn hybrid_family() -> Vec<IndexedTree> {
    let mut out = Vec::new();
    for k1 in 1..=2 {
        for k2 in 1..=2 {
            for k3 in 1..=2 {
                for k4 in 1..=2 {
                    for l in 0..=2 {
                        out.push(hybrid(k1, k2, k3, k4, l));
                    }
                }
            }
        }
    }
    out
}

/// Hybrid trees that are mirror-symmetric across the `l` edge:
/// `k1 = k4`, `k2 = k3` in `{1, 2}`, `l in {1, 3}`.
pub fn symmetric_hybrid_family() -> Vec<IndexedTree> {
    let mut out = Vec::new();
    for a in 1..=2 {
        for b in 1..=2 {
            for l in [1, 3] {
                out.push(hybrid(a, b, b, a, l));
            }
        }
    }
    out
}

/// Two-level trees on which every rewriting step of the harvestable form
/// fires at least once.
pub fn composite_family() -> Vec<IndexedTree> {
    [
        "b(1:b(1:b(),2:b()))",
        "b(2:b(1:b(),1:b(),1:b()))",
        "b(1:b(1:b(1:b()),1:b()))",
        "b(1:w(2:w(1:b())))",
        "b(1:w(1:w(1:w(1:b()))))",
        "b(1:w(0:b(),1:b()))",
        "b(1:w(0:b(1:b(),1:b()),2:b()))",
        "b(1:b(),2:w(1:b(),1:b()))",
        "b(2:b(1:w(1:b(),2:b())),1:b())",
        "b(0:w(1:b(),1:w(1:b(),1:b())))",
        "b(0:w(1:b(),2:b(1:b())))",
        "b(1:w(0:w(1:b(),2:b()),1:b(1:b())))",
        "b(0:w(1:b(),1:b()),1:b())",
        "b(1:w(1:b(),0:w(0:b(),1:b())))",
        "b(1:b(1:w(1:b(),1:b())))",
        "b(2:w(1:b(1:b()),1:b()))",
        "b(1:w(1:w(1:b(),1:b()),2:b(1:b())))",
    ]
    .iter()
    .map(|s| tree(s))
    .collect()
}

/// The built-in catalog, deduplicated and ordered by canonical key. Every
/// entry has a black root, an essentially positive index and at most seven
/// vertices.
pub fn builtin() -> Vec<IndexedTree> {
    let mut all = linear_family(3, 3);
    all.extend(star_family());
    all.extend(hybrid_family());
    all.extend(symmetric_hybrid_family());
    all.extend(composite_family());
    dedup(all)
}

/// The harvestable pairs among [`builtin`] together with the harvestable
/// forms of all its entries.
pub fn builtin_harvestable() -> Vec<IndexedTree> {
    let all = builtin();
    let forms: Vec<IndexedTree> = all
        .iter()
        .map(|t| harvestable_form(t).expect("catalog entries are essentially positive"))
        .collect();
    dedup(
        all.into_iter()
            .filter(crate::tree::is_harvestable)
            .chain(forms),
    )
}

/// Unlabelled rooted tree shapes with exactly `n` vertices.
fn shapes(n: usize) -> Vec<Node> {
    let mut layer: BTreeMap<String, Node> = BTreeMap::new();
    layer.insert(Node::leaf().key(), Node::leaf());
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for shape in layer.values() {
            for grown in grow(shape) {
                next.entry(grown.key()).or_insert(grown);
            }
        }
        layer = next;
    }
    layer.into_values().collect()
}

// every way of hanging one new leaf below some vertex
fn grow(node: &Node) -> Vec<Node> {
    let mut out = Vec::new();
    let mut here = node.clone();
    here.children.push((0, Node::leaf()));
    out.push(here);
    for (i, (_, child)) in node.children.iter().enumerate() {
        for g in grow(child) {
            let mut copy = node.clone();
            copy.children[i].1 = g;
            out.push(copy);
        }
    }
    out
}

/// Every tree with a black root, at most `max_vertices` vertices and edge
/// indices in `0..=max_index` whose index is essentially positive, one per
/// isomorphism class, ordered by key.
pub fn exhaustive(max_vertices: usize, max_index: u32) -> Vec<IndexedTree> {
    let mut out = BTreeMap::new();
    for n in 1..=max_vertices {
        for shape in shapes(n) {
            let base = shape.to_tree();
            let inner: Vec<usize> = (1..n).filter(|&v| base.degree(v) >= 2).collect();
            let edges = base.edges().len();
            for mask in 0u32..(1 << inner.len()) {
                let colors: Vec<Color> = (0..n)
                    .map(|v| match inner.iter().position(|&i| i == v) {
                        Some(bit) if mask & (1 << bit) != 0 => Color::White,
                        _ => Color::Black,
                    })
                    .collect();
                let mut indices = vec![0u32; edges];
                loop {
                    let edge_list = base
                        .edges()
                        .iter()
                        .zip(&indices)
                        .map(|(e, &k)| crate::tree::Edge::new(e.ends.0, e.ends.1, k))
                        .collect();
                    let t = IndexedTree::from_raw(colors.clone(), edge_list, 0);
                    if t.is_essentially_positive() {
                        let key = t.canonical_key().expect("generated trees are valid");
                        out.entry(key).or_insert(t);
                    }
                    // next index vector in base max_index + 1
                    let mut pos = 0;
                    while pos < edges && indices[pos] == max_index {
                        indices[pos] = 0;
                        pos += 1;
                    }
                    if pos == edges {
                        break;
                    }
                    indices[pos] += 1;
                }
            }
        }
    }
    out.into_values().collect()
}

/// A random tree with a black root, `1..=max_vertices` vertices, indices in
/// `0..=max_index` and an essentially positive index.
pub fn random_tree(rng: &mut impl Rng, max_vertices: usize, max_index: u32) -> IndexedTree {
    loop {
        let n = rng.gen_range(1..=max_vertices);
        let parents: Vec<usize> = (1..n).map(|v| rng.gen_range(0..v)).collect();
        let mut degree = vec![0usize; n];
        for (i, &p) in parents.iter().enumerate() {
            degree[p] += 1;
            degree[i + 1] += 1;
        }
        let colors = (0..n)
            .map(|v| {
                if v == 0 || degree[v] == 1 || rng.gen_bool(0.5) {
                    Color::Black
                } else {
                    Color::White
                }
            })
            .collect();
        let edges = parents
            .iter()
            .enumerate()
            .map(|(i, &p)| crate::tree::Edge::new(p, i + 1, rng.gen_range(0..=max_index)))
            .collect();
        let t = IndexedTree::from_raw(colors, edges, 0);
        if t.is_essentially_positive() {
            return t;
        }
    }
}

/// A random harvestable pair with at most `max_vertices` vertices, obtained
/// as the harvestable form of a random tree.
pub fn random_harvestable(rng: &mut impl Rng, max_vertices: usize, max_index: u32) -> IndexedTree {
    loop {
        let t = random_tree(rng, max_vertices, max_index);
        let h = harvestable_form(&t).expect("random trees are essentially positive");
        if h.vertex_count() <= max_vertices {
            return h;
        }
    }
}

/// A random index with weight in `1..=max_weight`.
pub fn random_index(rng: &mut impl Rng, max_weight: u32) -> Index {
    let weight = rng.gen_range(1..=max_weight);
    let mut entries = Vec::new();
    let mut left = weight;
    while left > 0 {
        let e = rng.gen_range(1..=left);
        entries.push(e);
        left -= e;
    }
    Index::new(entries).expect("positive entries")
}

/// Canonical keys of a list of trees.
pub fn keys(trees: &[IndexedTree]) -> BTreeSet<String> {
    trees
        .iter()
        .map(|t| t.canonical_key().expect("valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::is_harvestable;

    #[test]
    fn builtin_catalog_is_well_formed() {
        let all = builtin();
        assert!(all.len() > 100);
        for t in &all {
            assert!(t.vertex_count() <= 7, "{t}");
            assert_eq!(t.color(t.root()), Color::Black);
            assert!(t.is_essentially_positive(), "{t}");
        }
        assert_eq!(keys(&all).len(), all.len());
    }

    #[test]
    fn harvestable_catalog() {
        let all = builtin_harvestable();
        assert!(all.iter().all(is_harvestable));
        assert!(all.iter().any(|t| t.vertex_count() == 7));
    }

    #[test]
    fn shape_counts() {
        // rooted unlabelled trees: 1, 1, 2, 4, 9, 20
        let counts: Vec<usize> = (1..=6).map(|n| shapes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20]);
    }

    #[test]
    fn exhaustive_small() {
        // b(), b(1:b()), and nothing else with two vertices
        let two = exhaustive(2, 1);
        assert_eq!(
            keys(&two),
            ["b()", "b(1:b())"].iter().map(|s| s.to_string()).collect()
        );
        for t in exhaustive(4, 1) {
            assert!(t.is_essentially_positive());
        }
    }

    #[test]
    fn random_trees_are_reproducible() {
        let a: Vec<String> = {
            let mut r = rng(7);
            (0..20)
                .map(|_| random_tree(&mut r, 6, 2).to_string())
                .collect()
        };
        let b: Vec<String> = {
            let mut r = rng(7);
            (0..20)
                .map(|_| random_tree(&mut r, 6, 2).to_string())
                .collect()
        };
        assert_eq!(a, b);
        let mut r = rng(1);
        for _ in 0..20 {
            let h = random_harvestable(&mut r, 6, 2);
            assert!(is_harvestable(&h) && h.vertex_count() <= 6);
        }
    }
}
