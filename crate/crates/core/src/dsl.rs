//! Text formats for trees and indices.
//!
//! ```text
//! node  := color "(" [edge ("," edge)*] ")"
//! edge  := nat ":" node
//! color := "b" | "w"
//! ```
//!
//! The outermost node is the root and whitespace is ignored, so the linear
//! tree for `(k_1, k_2)` is `b(k_2:b(k_1:b()))`.

use crate::error::{Error, Result};
use crate::tree::{Color, IndexedTree, Node};
use crate::word::Index;

/// Parses and validates a tree.
pub fn parse_tree(s: &str) -> Result<IndexedTree> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let node = p.node()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input after the root node"));
    }
    let tree = node.to_tree();
    tree.validate()?;
    Ok(tree)
}

/// The canonical text of a tree; [`parse_tree`] reads it back.
pub fn format_tree(tree: &IndexedTree) -> String {
    tree.to_node().key()
}

/// Parses a comma-separated list of positive integers; the empty string is
/// the empty index.
pub fn parse_index(s: &str) -> Result<Index> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Index::empty());
    }
    let entries = s
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::BadIndex(s.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Index::new(entries).map_err(|_| Error::BadIndex(s.to_string()))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn node(&mut self) -> Result<Node> {
        let color = match self.peek() {
            Some(b'b') => Color::Black,
            Some(b'w') => Color::White,
            _ => return Err(self.error("expected a color `b` or `w`")),
        };
        self.pos += 1;
        self.expect(b'(')?;
        let mut children = Vec::new();
        if self.peek() == Some(b')') {
            self.pos += 1;
            return Ok(Node::new(color, children));
        }
        loop {
            let k = self.nat()?;
            self.expect(b':')?;
            children.push((k, self.node()?));
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b')') => {
                    self.pos += 1;
                    return Ok(Node::new(color, children));
                }
                _ => return Err(self.error("expected `,` or `)`")),
            }
        }
    }

    fn nat(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an edge index"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: "edge index out of range".to_string(),
            })
    }
}
