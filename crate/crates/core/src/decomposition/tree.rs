use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_hash, CanonicalForm};
use crate::connectivity::edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::{Cut, Multigraph};
use crate::lambda::Engine;

use super::contract;
use super::tight::{find_nontrivial_tight_cut, nontrivial_tight_cuts_oracle};
use super::twocut::{find_2cut, marked_components, two_cuts_oracle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Tight,
    TwoCut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Brick,
    Brace,
    /// A 3-connected piece of the 2-cut decomposition.
    Piece,
    /// An internal node split along `cut`.
    Split,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionNode {
    pub kind: NodeKind,
    pub hash: String,
    pub graph: Multigraph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut: Option<Cut>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<DecompositionNode>,
}

impl DecompositionNode {
    fn leaf(graph: Multigraph, kind: NodeKind) -> Self {
        DecompositionNode {
            kind,
            hash: canonical_hash(&graph),
            graph,
            cut: None,
            children: Vec::new(),
        }
    }

    fn split(graph: Multigraph, cut: Cut, children: Vec<DecompositionNode>) -> Self {
        DecompositionNode {
            kind: NodeKind::Split,
            hash: canonical_hash(&graph),
            graph,
            cut: Some(cut),
            children,
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

/// Recursion trace of a decomposition. For tight mode the children of a split
/// are `G/X̄` then `G/X`; for 2-cut mode they are the marked components of
/// `X` then `X̄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTree {
    pub mode: Mode,
    pub root: DecompositionNode,
}

impl DecompositionTree {
    pub fn leaves(&self) -> Vec<&DecompositionNode> {
        let mut out = Vec::new();
        let mut stack = vec![&self.root];
        while let Some(node) = stack.pop() {
            if node.is_leaf() {
                out.push(node);
            } else {
                stack.extend(node.children.iter().rev());
            }
        }
        out
    }

    /// Sorted leaf multiset. Tight mode compares underlying simple graphs.
    pub fn leaf_forms(&self) -> Vec<CanonicalForm> {
        let mut forms: Vec<CanonicalForm> = self
            .leaves()
            .into_iter()
            .map(|leaf| match self.mode {
                Mode::Tight => canonical_form(&leaf.graph.underlying_simple()),
                Mode::TwoCut => canonical_form(&leaf.graph),
            })
            .collect();
        forms.sort();
        forms
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph decomposition {\n  node [shape=box];\n");
        let mut next = 0usize;
        fn walk(node: &DecompositionNode, id: usize, next: &mut usize, out: &mut String) {
            let kind = match node.kind {
                NodeKind::Brick => "brick",
                NodeKind::Brace => "brace",
                NodeKind::Piece => "piece",
                NodeKind::Split => "split",
            };
            let _ = writeln!(
                out,
                "  n{id} [label=\"{kind} n={} {}\"];",
                node.graph.order(),
                node.hash
            );
            for child in &node.children {
                *next += 1;
                let cid = *next;
                let cut = node
                    .cut
                    .as_ref()
                    .map(|c| {
                        c.edges()
                            .iter()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .unwrap_or_default();
                let _ = writeln!(out, "  n{id} -> n{cid} [label=\"{cut}\"];");
                walk(child, cid, next, out);
            }
        }
        walk(&self.root, 0, &mut next, &mut out);
        out.push_str("}\n");
        out
    }
}

fn require_two_connected_cubic(g: &Multigraph) -> Result<()> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    let k = edge_connectivity(g)?;
    if k < 2 {
        return Err(Error::ConnectivityTooLow {
            required: 2,
            found: k,
        });
    }
    Ok(())
}

pub fn tight_cut_decomposition(g: &Multigraph) -> Result<DecompositionTree> {
    tight_cut_decomposition_with(g, Engine::Fast, None)
}

/// Tight cut decomposition; `first` overrides the cut used at the root.
pub fn tight_cut_decomposition_with(
    g: &Multigraph,
    engine: Engine,
    first: Option<&Cut>,
) -> Result<DecompositionTree> {
    require_two_connected_cubic(g)?;
    let root = tight_rec(g.clone(), engine, first)?;
    Ok(DecompositionTree {
        mode: Mode::Tight,
        root,
    })
}

fn tight_rec(g: Multigraph, engine: Engine, first: Option<&Cut>) -> Result<DecompositionNode> {
    let cut = match first {
        Some(c) => Some(c.clone()),
        None => match engine {
            Engine::Fast => find_nontrivial_tight_cut(&g)?,
            Engine::Oracle => nontrivial_tight_cuts_oracle(&g)?.into_iter().next(),
        },
    };
    let Some(cut) = cut else {
        let kind = if g.is_bipartite() {
            NodeKind::Brace
        } else {
            NodeKind::Brick
        };
        return Ok(DecompositionNode::leaf(g, kind));
    };
    let h1 = contract(&g, &cut.complement())?.graph;
    let h2 = contract(&g, cut.shore())?.graph;
    let children = vec![tight_rec(h1, engine, None)?, tight_rec(h2, engine, None)?];
    Ok(DecompositionNode::split(g, cut, children))
}

pub fn two_cut_decomposition(g: &Multigraph) -> Result<DecompositionTree> {
    two_cut_decomposition_with(g, Engine::Fast, None)
}

/// 2-cut decomposition; `first` overrides the cut used at the root.
pub fn two_cut_decomposition_with(
    g: &Multigraph,
    engine: Engine,
    first: Option<&Cut>,
) -> Result<DecompositionTree> {
    require_two_connected_cubic(g)?;
    let root = two_rec(g.clone(), engine, first)?;
    Ok(DecompositionTree {
        mode: Mode::TwoCut,
        root,
    })
}

fn two_rec(g: Multigraph, engine: Engine, first: Option<&Cut>) -> Result<DecompositionNode> {
    let cut = match first {
        Some(c) => Some(c.clone()),
        None => match engine {
            Engine::Fast => find_2cut(&g)?,
            Engine::Oracle => two_cuts_oracle(&g)?.into_iter().next(),
        },
    };
    let Some(cut) = cut else {
        return Ok(DecompositionNode::leaf(g, NodeKind::Piece));
    };
    let (g1, g2) = marked_components(&g, &cut)?;
    let children = vec![
        two_rec(g1.graph, engine, None)?,
        two_rec(g2.graph, engine, None)?,
    ];
    Ok(DecompositionNode::split(g, cut, children))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33_splice_k4() -> Multigraph {
        Multigraph::new(
            8,
            [
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
                (6, 3),
                (7, 4),
                (0, 5),
                (6, 7),
                (7, 0),
                (0, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn k33_splice_k4_leaves() {
        let tree = tight_cut_decomposition(&k33_splice_k4()).unwrap();
        let kinds: Vec<NodeKind> = tree.leaves().iter().map(|l| l.kind).collect();
        assert_eq!(kinds, vec![NodeKind::Brick, NodeKind::Brace]);
        let orders: Vec<usize> = tree.leaves().iter().map(|l| l.graph.order()).collect();
        assert_eq!(orders, vec![4, 6]);
        let oracle = tight_cut_decomposition_with(&k33_splice_k4(), Engine::Oracle, None).unwrap();
        assert_eq!(tree.leaf_forms(), oracle.leaf_forms());
        assert!(tree.to_dot().contains("brick n=4"));
    }

    #[test]
    fn c4_pieces_are_thetas() {
        let c4 = Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]).unwrap();
        let tree = two_cut_decomposition(&c4).unwrap();
        assert_eq!(tree.leaves().len(), 2);
        assert!(tree.leaves().iter().all(|l| l.graph.order() == 2));
        let tight = tight_cut_decomposition(&c4).unwrap();
        assert_eq!(tight.leaves().len(), 1);
        assert_eq!(tight.root.kind, NodeKind::Brace);
    }
}
