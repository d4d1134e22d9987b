//! Labelled forests (operations with colored leaves) and their automorphism
//! groups.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::factorial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ForestTree {
    Leaf(String),
    Node { op: String, children: Vec<ForestTree> },
}

impl ForestTree {
    /// Children sorted recursively, so that isomorphic trees compare equal.
    fn canonical(&self) -> ForestTree {
        match self {
            ForestTree::Leaf(_) => self.clone(),
            ForestTree::Node { op, children } => {
                let mut c: Vec<ForestTree> = children.iter().map(ForestTree::canonical).collect();
                c.sort();
                ForestTree::Node { op: op.clone(), children: c }
            }
        }
    }

    fn aut(&self) -> BigUint {
        match self {
            ForestTree::Leaf(_) => BigUint::one(),
            ForestTree::Node { children, .. } => {
                let mut acc: BigUint = children.iter().map(ForestTree::aut).product();
                let mut canon: Vec<ForestTree> = children.iter().map(ForestTree::canonical).collect();
                canon.sort();
                acc *= multiplicity_factor(&canon);
                acc
            }
        }
    }
}

impl fmt::Display for ForestTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForestTree::Leaf(c) => f.write_str(c),
            ForestTree::Node { op, children } => {
                write!(f, "{op}(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

fn multiplicity_factor(sorted: &[ForestTree]) -> BigUint {
    let mut acc = BigUint::one();
    let mut i = 0;
    while i < sorted.len() {
        let j = (i..sorted.len()).find(|&j| sorted[j] != sorted[i]).unwrap_or(sorted.len());
        acc *= factorial((j - i) as u64);
        i = j;
    }
    acc
}

/// Order of the automorphism group of a forest. Symmetric: permutations of
/// identical subtrees at every node and of identical trees; otherwise trees
/// are rigid and only identical trees of the forest may be exchanged.
pub fn forest_aut_order(forest: &[ForestTree], symmetric: bool) -> BigUint {
    if symmetric {
        let mut canon: Vec<ForestTree> = forest.iter().map(ForestTree::canonical).collect();
        canon.sort();
        forest.iter().map(ForestTree::aut).product::<BigUint>() * multiplicity_factor(&canon)
    } else {
        let mut trees = forest.to_vec();
        trees.sort();
        multiplicity_factor(&trees)
    }
}

/// `y1(x1(a,a),b);y2(c)`: trees separated by `;`, operations are names
/// followed by a parenthesised child list, leaves are bare names.
pub fn parse_forest(text: &str) -> Result<Vec<ForestTree>> {
    let mut p = Parser { s: text.as_bytes(), i: 0 };
    let mut out = Vec::new();
    loop {
        out.push(p.tree(0)?);
        p.ws();
        match p.peek() {
            None => break,
            Some(b';') => p.i += 1,
            Some(c) => return Err(p.err(&format!("unexpected {:?}", c as char))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::MalformedForest(format!("at byte {}: {msg}", self.i))
    }

    fn name(&mut self) -> Result<String> {
        self.ws();
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_' || c == b'\'') {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected a name"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.i]).into_owned())
    }

    fn tree(&mut self, depth: usize) -> Result<ForestTree> {
        if depth > 256 {
            return Err(self.err("nesting too deep"));
        }
        let name = self.name()?;
        self.ws();
        if self.peek() != Some(b'(') {
            return Ok(ForestTree::Leaf(name));
        }
        self.i += 1;
        let mut children = Vec::new();
        loop {
            children.push(self.tree(depth + 1)?);
            self.ws();
            match self.peek() {
                Some(b',') => self.i += 1,
                Some(b')') => {
                    self.i += 1;
                    break;
                }
                _ => return Err(self.err("expected ',' or ')'")),
            }
        }
        Ok(ForestTree::Node { op: name, children })
    }
}
