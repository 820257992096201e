//! 2-colored rooted trees with a non-negative integer on every edge.
//!
//! An [`IndexedTree`] is stored as a graph (vertex colors, an edge list and a
//! root id). Algorithms that walk away from the root use the nested [`Node`]
//! view instead, which is also what the canonical key and the text format
//! are built from.
//!
//! Trees are non-planar: two trees are the same when a root- and
//! color-preserving isomorphism matches the edge indices, and
//! [`IndexedTree::canonical_key`] is the invariant that decides it.

mod combo;
mod harvest;
mod symmetrize;
mod wmap;

pub use combo::TreeCombo;
pub use harvest::{circ_h, circ_product, harvestable_form, is_harvestable};
pub use symmetrize::{cap_phi, cap_phi_hat};
pub use wmap::{w_of_harvested, w_word};

use std::collections::VecDeque;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn as_char(self) -> char {
        match self {
            Color::Black => 'b',
            Color::White => 'w',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub ends: (usize, usize),
    pub index: u32,
}

impl Edge {
    pub fn new(a: usize, b: usize, index: u32) -> Self {
        Edge {
            ends: (a, b),
            index,
        }
    }

    pub fn other(&self, v: usize) -> usize {
        if self.ends.0 == v {
            self.ends.1
        } else {
            self.ends.0
        }
    }
}

/// A 2-colored rooted tree together with an index on its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedTree {
    colors: Vec<Color>,
    edges: Vec<Edge>,
    root: usize,
}

/// Nested view of a tree hanging from its root: each child is reached
/// through an edge carrying its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub color: Color,
    pub children: Vec<(u32, Node)>,
}

impl Node {
    pub fn leaf() -> Node {
        Node {
            color: Color::Black,
            children: Vec::new(),
        }
    }

    pub fn new(color: Color, children: Vec<(u32, Node)>) -> Node {
        Node { color, children }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(|(_, c)| c.vertex_count())
            .sum::<usize>()
    }

    /// Canonical text: children sorted by their own canonical text.
    pub fn key(&self) -> String {
        let mut parts: Vec<String> = self
            .children
            .iter()
            .map(|(k, c)| format!("{k}:{}", c.key()))
            .collect();
        parts.sort();
        format!("{}({})", self.color.as_char(), parts.join(","))
    }

    /// Graph form with vertex ids in preorder; the root gets id 0.
    pub fn to_tree(&self) -> IndexedTree {
        fn walk(node: &Node, colors: &mut Vec<Color>, edges: &mut Vec<Edge>) -> usize {
            let id = colors.len();
            colors.push(node.color);
            for (k, child) in &node.children {
                let cid = walk(child, colors, edges);
                edges.push(Edge::new(id, cid, *k));
            }
            id
        }
        let mut colors = Vec::new();
        let mut edges = Vec::new();
        walk(self, &mut colors, &mut edges);
        IndexedTree {
            colors,
            edges,
            root: 0,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut children: Vec<(String, Value)> = self
            .children
            .iter()
            .map(|(k, c)| {
                (
                    format!("{k}:{}", c.key()),
                    json!({"index": k, "node": c.to_json()}),
                )
            })
            .collect();
        children.sort_by(|a, b| a.0.cmp(&b.0));
        json!({
            "color": self.color.as_char().to_string(),
            "children": children.into_iter().map(|(_, v)| v).collect::<Vec<_>>(),
        })
    }
}

impl IndexedTree {
    /// Builds and validates a tree.
    pub fn new(colors: Vec<Color>, edges: Vec<Edge>, root: usize) -> Result<Self> {
        let tree = IndexedTree::from_raw(colors, edges, root);
        tree.validate()?;
        Ok(tree)
    }

    /// Builds a tree without checking it; see [`IndexedTree::validate`].
    pub fn from_raw(colors: Vec<Color>, edges: Vec<Edge>, root: usize) -> Self {
        IndexedTree {
            colors,
            edges,
            root,
        }
    }

    /// The single black vertex, unit of the gluing product.
    pub fn unit() -> Self {
        Node::leaf().to_tree()
    }

    /// The all-black linear tree for `(k_1, ..., k_r)`: `k_1` sits on the
    /// edge at the leaf and `k_r` on the edge at the root.
    pub fn linear(k: &[u32]) -> Self {
        let mut node = Node::leaf();
        for &ki in k {
            node = Node::new(Color::Black, vec![(ki, node)]);
        }
        node.to_tree()
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn blacks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.colors.len()).filter(|&v| self.colors[v] == Color::Black)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.ends.0 == v || e.ends.1 == v)
            .count()
    }

    /// For every vertex, its `(neighbor, edge id)` pairs.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.colors.len()];
        for (id, e) in self.edges.iter().enumerate() {
            adj[e.ends.0].push((e.ends.1, id));
            adj[e.ends.1].push((e.ends.0, id));
        }
        adj
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.colors.len() {
            return Err(Error::UnknownVertex(v));
        }
        Ok(())
    }

    /// Checks the tree axioms: a connected acyclic graph whose terminals are
    /// all black.
    pub fn validate(&self) -> Result<()> {
        let n = self.colors.len();
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        self.check_vertex(self.root)?;
        for (id, e) in self.edges.iter().enumerate() {
            self.check_vertex(e.ends.0)?;
            self.check_vertex(e.ends.1)?;
            if e.ends.0 == e.ends.1 {
                return Err(Error::SelfLoop(id));
            }
        }
        let reached = self.parents_from(self.root);
        if reached.iter().any(Option::is_none) {
            return Err(Error::NotConnected);
        }
        // connected with n - 1 edges is acyclic
        if self.edges.len() != n - 1 {
            return Err(Error::EdgeCount {
                vertices: n,
                edges: self.edges.len(),
            });
        }
        for v in 0..n {
            if self.colors[v] == Color::White && self.degree(v) == 1 {
                return Err(Error::TerminalNotBlack(v));
            }
        }
        Ok(())
    }

    /// BFS tree from `from`: `Some((parent, edge))` for reached vertices,
    /// `Some((from, usize::MAX))` for `from` itself.
    fn parents_from(&self, from: usize) -> Vec<Option<(usize, usize)>> {
        let adj = self.adjacency();
        let mut parent = vec![None; self.colors.len()];
        parent[from] = Some((from, usize::MAX));
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &adj[v] {
                if parent[w].is_none() {
                    parent[w] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Edge ids on the unique path between `from` and `to`, sorted.
    pub fn path_edges(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        let parent = self.parents_from(from);
        let mut out = Vec::new();
        let mut v = to;
        while v != from {
            let (p, e) = parent[v].ok_or(Error::NotConnected)?;
            out.push(e);
            v = p;
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Sum of indices on the path between two vertices.
    pub fn path_weight(&self, from: usize, to: usize) -> Result<u64> {
        Ok(self
            .path_edges(from, to)?
            .iter()
            .map(|&e| self.edges[e].index as u64)
            .sum())
    }

    /// True iff every path between two distinct black vertices carries a
    /// positive total index.
    pub fn is_essentially_positive(&self) -> bool {
        let adj = self.adjacency();
        for start in self.blacks() {
            // path weights from `start` by DFS
            let mut weight = vec![None; self.colors.len()];
            weight[start] = Some(0u64);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let wv = weight[v].expect("visited");
                for &(w, e) in &adj[v] {
                    if weight[w].is_none() {
                        weight[w] = Some(wv + self.edges[e].index as u64);
                        stack.push(w);
                    }
                }
            }
            if self.blacks().any(|v| v != start && weight[v] == Some(0)) {
                return false;
            }
        }
        true
    }

    /// Same tree, rooted at `v`.
    pub fn change_root(&self, v: usize) -> Result<IndexedTree> {
        self.check_vertex(v)?;
        Ok(IndexedTree {
            colors: self.colors.clone(),
            edges: self.edges.clone(),
            root: v,
        })
    }

    /// Adds `l` to the index of each listed edge.
    pub fn with_added_indices(&self, additions: &[(usize, u32)]) -> IndexedTree {
        let mut out = self.clone();
        for &(e, l) in additions {
            out.edges[e].index += l;
        }
        out
    }

    pub fn set_index(&mut self, edge: usize, index: u32) {
        self.edges[edge].index = index;
    }

    /// The nested view from the root. The tree must be connected.
    pub fn to_node(&self) -> Node {
        fn build(tree: &IndexedTree, adj: &[Vec<(usize, usize)>], v: usize, from: usize) -> Node {
            let children = adj[v]
                .iter()
                .filter(|&&(w, _)| w != from)
                .map(|&(w, e)| (tree.edges[e].index, build(tree, adj, w, v)))
                .collect();
            Node::new(tree.colors[v], children)
        }
        let adj = self.adjacency();
        build(self, &adj, self.root, usize::MAX)
    }

    /// A string that two trees share iff they are isomorphic as rooted,
    /// colored, indexed trees. It is also the tree's text format.
    pub fn canonical_key(&self) -> Result<String> {
        self.validate()
            .map_err(|e| Error::InvalidTree(Box::new(e)))?;
        Ok(self.to_node().key())
    }

    pub fn to_json(&self) -> Value {
        self.to_node().to_json()
    }
}

impl fmt::Display for IndexedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_node().key())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_tree;

    fn tree(s: &str) -> IndexedTree {
        parse_tree(s).unwrap()
    }

    #[test]
    fn non_planar_diagrams_share_a_key() {
        // the two drawings of the same tree: a three-edge stem and a two-edge
        // stem under a black root, stems listed in either order
        let a = tree("b(1:w(1:w(1:b())), 1:w(1:b()))");
        let b = tree("b(1:w(1:b()), 1:w(1:w(1:b())))");
        assert_eq!(a.canonical_key().unwrap(), b.canonical_key().unwrap());
    }

    #[test]
    fn unit_key() {
        assert_eq!(IndexedTree::unit().canonical_key().unwrap(), "b()");
    }

    #[test]
    fn relabelling_keeps_the_key() {
        let t = tree("b(2:w(1:b(),3:b(1:b())),1:b())");
        let n = t.vertex_count();
        // reverse the vertex ids
        let perm: Vec<usize> = (0..n).rev().collect();
        let mut colors = vec![Color::Black; n];
        for v in 0..n {
            colors[perm[v]] = t.color(v);
        }
        let edges = t
            .edges()
            .iter()
            .rev()
            .map(|e| Edge::new(perm[e.ends.1], perm[e.ends.0], e.index))
            .collect();
        let u = IndexedTree::new(colors, edges, perm[t.root()]).unwrap();
        assert_eq!(t.canonical_key().unwrap(), u.canonical_key().unwrap());
    }

    #[test]
    fn validation() {
        assert!(IndexedTree::linear(&[1, 2, 3]).validate().is_ok());
        let white_leaf = IndexedTree::from_raw(
            vec![Color::Black, Color::White],
            vec![Edge::new(0, 1, 1)],
            0,
        );
        assert_eq!(white_leaf.validate(), Err(Error::TerminalNotBlack(1)));
        let split = IndexedTree::from_raw(
            vec![Color::Black, Color::Black, Color::Black, Color::Black],
            vec![Edge::new(0, 1, 1), Edge::new(2, 3, 1)],
            0,
        );
        assert_eq!(split.validate(), Err(Error::NotConnected));
        let cycle = IndexedTree::from_raw(
            vec![Color::Black, Color::Black, Color::Black],
            vec![Edge::new(0, 1, 1), Edge::new(1, 2, 1), Edge::new(2, 0, 1)],
            0,
        );
        assert!(matches!(cycle.validate(), Err(Error::EdgeCount { .. })));
        let empty = IndexedTree::from_raw(vec![], vec![], 0);
        assert_eq!(empty.validate(), Err(Error::EmptyTree));
        assert!(matches!(
            white_leaf.canonical_key(),
            Err(Error::InvalidTree(_))
        ));
    }

    #[test]
    fn paths() {
        let lin = IndexedTree::linear(&[1, 2, 3]);
        // vertex 3 is the leaf in preorder numbering
        assert_eq!(lin.path_edges(3, lin.root()).unwrap(), vec![0, 1, 2]);
        assert_eq!(lin.path_edges(2, 2).unwrap(), Vec::<usize>::new());
        let star = tree("b(1:b(),2:b())");
        assert_eq!(star.path_edges(1, 2).unwrap(), vec![0, 1]);
        assert_eq!(star.path_edges(0, 9), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn essential_positivity() {
        assert!(IndexedTree::linear(&[1, 1, 2]).is_essentially_positive());
        assert!(!tree("b(0:b())").is_essentially_positive());
        assert!(!tree("b(1:b(0:b()))").is_essentially_positive());
        for l in 0..3 {
            let hybrid = tree(&format!("b(1:w(1:b(),{l}:w(1:b(),1:b())))"));
            assert!(hybrid.is_essentially_positive());
        }
        // white vertex in the middle of a zero path between two blacks
        assert!(!tree("b(0:w(0:b(),1:b()))").is_essentially_positive());
    }

    #[test]
    fn root_change() {
        let lin = IndexedTree::linear(&[1, 2]);
        assert_eq!(
            lin.change_root(lin.root())
                .unwrap()
                .canonical_key()
                .unwrap(),
            lin.canonical_key().unwrap()
        );
        let leaf = 2;
        assert_eq!(
            lin.change_root(leaf).unwrap().canonical_key().unwrap(),
            IndexedTree::linear(&[2, 1]).canonical_key().unwrap()
        );
        assert_eq!(lin.change_root(7), Err(Error::UnknownVertex(7)));
    }

    #[test]
    fn json_mirrors_structure() {
        let t = tree("b(2:b(1:b()))");
        assert_eq!(
            t.to_json(),
            json!({"color": "b", "children": [
                {"index": 2, "node": {"color": "b", "children": [
                    {"index": 1, "node": {"color": "b", "children": []}}
                ]}}
            ]})
        );
    }
}
