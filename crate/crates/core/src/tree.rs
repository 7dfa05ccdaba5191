//! Rooted trees with payload-carrying vertices and monomial edge labels.
//!
//! GP-trees, modified GP-trees, h-trees and h-tableau-trees are all stored as
//! a [`LabeledTree`]. Vertices are kept in breadth-first order, children left
//! to right as drawn.

use std::collections::VecDeque;
use std::fmt::{self, Write};

use serde::Serialize;

use crate::filling::{Filling, PartialFilling};
use crate::monomial::Monomial;
use crate::shape::Shape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    Num(usize),
    /// The monomial level under Level 0 of a modified GP-tree.
    B,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Num(i) => write!(f, "{i}"),
            Level::B => f.write_str("B"),
        }
    }
}

impl Serialize for Level {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `x_var^exp`; `var == 0` marks the constant edges into the leaf level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeLabel {
    pub var: usize,
    pub exp: u32,
}

impl EdgeLabel {
    pub const ONE: EdgeLabel = EdgeLabel { var: 0, exp: 0 };
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exp {
            0 => f.write_str("1"),
            1 => write!(f, "x{}", self.var),
            e => write!(f, "x{}^{}", self.var, e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Diagram(Shape),
    Partial(PartialFilling),
    /// A barless tableau; `slots` are the insertion points drawn as bullets.
    Barless {
        word: Vec<usize>,
        slots: Vec<usize>,
    },
    Bullet,
    Leaf(Monomial),
}

impl Payload {
    pub fn label(&self) -> String {
        match self {
            Payload::Diagram(shape) => shape.to_string(),
            Payload::Partial(p) => p.to_string(),
            Payload::Barless { word, slots } => render_barless(word, slots),
            Payload::Bullet => "•".into(),
            Payload::Leaf(m) => m.to_string(),
        }
    }
}

/// `21` with slots `[2, 1, 0]` renders as `•2•1•`.
pub fn render_barless(word: &[usize], slots: &[usize]) -> String {
    let wide = word.iter().any(|&v| v > 9);
    let mut out = String::new();
    for pos in 0..=word.len() {
        if slots.contains(&pos) {
            out.push('•');
        } else if wide && pos > 0 && pos < word.len() {
            out.push(',');
        }
        if let Some(v) = word.get(pos) {
            write!(out, "{v}").unwrap();
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    /// Path of edge exponents from the root: `v`, `v_1`, `v_1_0`, ...
    pub id: String,
    pub level: Level,
    pub payload: Payload,
    pub parent: Option<usize>,
    /// Label of the edge from the parent.
    pub edge: Option<EdgeLabel>,
    pub children: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    pub kind: &'static str,
    nodes: Vec<Node>,
}

/// Depth-first description used while building; flattened breadth-first.
pub(crate) struct Sketch {
    pub level: Level,
    pub payload: Payload,
    pub children: Vec<(EdgeLabel, Sketch)>,
}

impl LabeledTree {
    pub(crate) fn from_sketch(kind: &'static str, root: Sketch) -> Self {
        let mut nodes: Vec<Node> = Vec::new();
        let mut queue = VecDeque::new();
        queue.push_back((root, None::<usize>, None::<EdgeLabel>, "v".to_string()));
        while let Some((sketch, parent, edge, id)) = queue.pop_front() {
            let idx = nodes.len();
            nodes.push(Node {
                id: id.clone(),
                level: sketch.level,
                payload: sketch.payload,
                parent,
                edge,
                children: Vec::new(),
            });
            if let Some(p) = parent {
                nodes[p].children.push(idx);
            }
            for (label, child) in sketch.children {
                let child_id = format!("{id}_{}", label.exp);
                queue.push_back((child, Some(idx), Some(label), child_id));
            }
        }
        Self { kind, nodes }
    }

    pub fn root(&self) -> &Node {
        &self.nodes[0]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, idx: usize) -> &Node {
        &self.nodes[idx]
    }

    pub fn leaves(&self) -> impl Iterator<Item = &Node> {
        self.nodes.iter().filter(|n| n.children.is_empty())
    }

    /// Leaf monomials, left to right.
    pub fn leaf_monomials(&self) -> Vec<Monomial> {
        self.leaves()
            .filter_map(|n| match &n.payload {
                Payload::Leaf(m) => Some(m.clone()),
                _ => None,
            })
            .collect()
    }

    /// For trees whose leaves hang under total fillings (modified GP-trees,
    /// h-tableau-trees): each leaf's parent filling with the leaf monomial.
    pub fn filling_leaf_pairs(&self) -> Vec<(Filling, Monomial)> {
        self.leaves()
            .filter_map(|leaf| {
                let Payload::Leaf(m) = &leaf.payload else {
                    return None;
                };
                let parent = &self.nodes[leaf.parent?];
                let filling = match &parent.payload {
                    Payload::Partial(p) => p.to_filling().ok()?,
                    Payload::Barless { word, .. } => Filling::one_row(word).ok()?,
                    _ => return None,
                };
                Some((filling, m.clone()))
            })
            .collect()
    }

    pub fn level(&self, level: Level) -> impl Iterator<Item = &Node> {
        self.nodes.iter().filter(move |n| n.level == level)
    }

    /// Vertex indices from the root down to `idx`.
    pub fn path_to(&self, idx: usize) -> Vec<usize> {
        let mut path = vec![idx];
        let mut cur = idx;
        while let Some(p) = self.nodes[cur].parent {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// The nearest ancestor of `idx` (or `idx` itself) at `level`.
    pub fn ancestor_at(&self, idx: usize, level: Level) -> Option<&Node> {
        self.path_to(idx)
            .into_iter()
            .map(|i| &self.nodes[i])
            .find(|n| n.level == level)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{}\" {{", self.kind).unwrap();
        writeln!(out, "  node [shape=plaintext];").unwrap();
        for n in &self.nodes {
            writeln!(out, "  \"{}\" [label=\"{}\"];", n.id, n.payload.label()).unwrap();
        }
        for n in &self.nodes {
            for &c in &n.children {
                let child = &self.nodes[c];
                let edge = child.edge.expect("non-root has an edge");
                writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [label=\"{}\"];",
                    n.id, child.id, edge
                )
                .unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    /// Indented outline, one vertex per line: `[level] edge -> label`.
    pub fn to_outline(&self) -> String {
        fn go(tree: &LabeledTree, idx: usize, depth: usize, out: &mut String) {
            let n = &tree.nodes[idx];
            let edge = n.edge.map(|e| format!("{e} -> ")).unwrap_or_default();
            writeln!(
                out,
                "{}[{}] {}{}",
                "  ".repeat(depth),
                n.level,
                edge,
                n.payload.label()
            )
            .unwrap();
            for &c in &n.children {
                go(tree, c, depth + 1, out);
            }
        }
        let mut out = String::new();
        go(self, 0, 0, &mut out);
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct JsonNode<'a> {
            id: &'a str,
            level: Level,
            label: String,
            #[serde(skip_serializing_if = "Option::is_none")]
            parent: Option<&'a str>,
            #[serde(skip_serializing_if = "Option::is_none")]
            edge: Option<String>,
            #[serde(skip_serializing_if = "Option::is_none")]
            monomial: Option<&'a Monomial>,
        }
        let nodes: Vec<JsonNode> = self
            .nodes
            .iter()
            .map(|n| JsonNode {
                id: &n.id,
                level: n.level,
                label: n.payload.label(),
                parent: n.parent.map(|p| self.nodes[p].id.as_str()),
                edge: n.edge.map(|e| e.to_string()),
                monomial: match &n.payload {
                    Payload::Leaf(m) => Some(m),
                    _ => None,
                },
            })
            .collect();
        serde_json::json!({ "kind": self.kind, "nodes": nodes })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(s: &str) -> Sketch {
        Sketch {
            level: Level::Num(1),
            payload: Payload::Leaf(Monomial::parse(s, 2).unwrap()),
            children: vec![],
        }
    }

    #[test]
    fn flattening_and_export() {
        let root = Sketch {
            level: Level::Num(2),
            payload: Payload::Bullet,
            children: vec![
                (EdgeLabel { var: 2, exp: 1 }, leaf("x2")),
                (EdgeLabel { var: 2, exp: 0 }, leaf("1")),
            ],
        };
        let t = LabeledTree::from_sketch("demo", root);
        assert_eq!(t.nodes().len(), 3);
        assert_eq!(t.root().children, vec![1, 2]);
        assert_eq!(t.node(1).id, "v_1");
        assert_eq!(t.path_to(2), vec![0, 2]);
        let leaves: Vec<String> = t.leaf_monomials().iter().map(|m| m.to_string()).collect();
        assert_eq!(leaves, ["x2", "1"]);
        assert_eq!(
            t.to_dot(),
            "digraph \"demo\" {\n  node [shape=plaintext];\n  \"v\" [label=\"•\"];\n  \"v_1\" [label=\"x2\"];\n  \"v_0\" [label=\"1\"];\n  \"v\" -> \"v_1\" [label=\"x2\"];\n  \"v\" -> \"v_0\" [label=\"1\"];\n}\n"
        );
        assert_eq!(t.to_outline(), "[2] •\n  [1] x2 -> x2\n  [1] 1 -> 1\n");
        assert_eq!(t.to_json()["nodes"][1]["parent"], "v");
    }

    #[test]
    fn labels() {
        assert_eq!(EdgeLabel { var: 3, exp: 2 }.to_string(), "x3^2");
        assert_eq!(EdgeLabel::ONE.to_string(), "1");
        assert_eq!(render_barless(&[2, 1], &[2, 1, 0]), "•2•1•");
        assert_eq!(render_barless(&[3, 2, 1], &[3]), "321•");
        assert_eq!(render_barless(&[2, 1, 3], &[3, 2, 0]), "•21•3•");
        assert_eq!(render_barless(&[3, 2, 1, 4], &[]), "3214");
    }
}
