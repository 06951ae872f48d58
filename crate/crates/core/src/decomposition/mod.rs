//! Tight cuts, the tight cut and 2-cut decompositions, barrier cores and
//! fragments, and the invariants read off the decompositions.

mod fragments;
mod invariants;
mod tight;
mod tree;
mod twocut;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};
use crate::matching::{check_cap, visit_perfect_matchings};

pub use fragments::{barrier_decomposition, lambda_via_barrier, BarrierDecomposition, Fragment};
pub use invariants::{
    bricks_and_braces, invariants, invariants_with, three_connected_pieces, two_cut_case,
    InvariantBundle, TwoCutCase, TwoCutCheck,
};
pub use tight::{
    find_nontrivial_tight_cut, is_separating_cut, is_separating_cut_oracle, is_tight_cut,
    is_tight_cut_bipartite, is_tight_cut_oracle, nontrivial_tight_cuts,
    nontrivial_tight_cuts_oracle,
};
pub use tree::{
    tight_cut_decomposition, tight_cut_decomposition_with, two_cut_decomposition,
    two_cut_decomposition_with, DecompositionNode, DecompositionTree, Mode, NodeKind,
};
pub use twocut::{find_2cut, marked_components, two_cuts_oracle, MarkedComponent};

/// `G/X → x`: the graph with `X` shrunk to one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contraction {
    pub graph: Multigraph,
    /// Index of the contraction vertex; always the last vertex.
    pub contraction_vertex: usize,
    /// `vertex_origin[new] = Some(old)`, `None` for the contraction vertex.
    pub vertex_origin: Vec<Option<usize>>,
    /// `edge_origin[new] = old`.
    pub edge_origin: Vec<EdgeId>,
}

impl Contraction {
    /// New index of an old vertex outside the shrunk set.
    pub fn new_index_of(&self, old: usize) -> Option<usize> {
        self.vertex_origin.iter().position(|&o| o == Some(old))
    }

    /// Old vertex for a new index, or `None` for the contraction vertex.
    pub fn old_index_of(&self, new: usize) -> Option<usize> {
        self.vertex_origin.get(new).copied().flatten()
    }
}

/// Shrinks `shrink` to a single vertex appended after the remaining vertices,
/// which keep their relative order. Edges inside `shrink` disappear.
pub fn contract(g: &Multigraph, shrink: &[usize]) -> Result<Contraction> {
    let n = g.order();
    let mut inside = vec![false; n];
    for &v in shrink {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        inside[v] = true;
    }
    let kept: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    if kept.is_empty() || kept.len() == n {
        return Err(Error::InvalidShore);
    }
    let x = kept.len();
    let mut new_index = vec![x; n];
    for (i, &v) in kept.iter().enumerate() {
        new_index[v] = i;
    }
    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    for (e, u, v) in g.edges() {
        if inside[u] && inside[v] {
            continue;
        }
        edges.push((new_index[u], new_index[v]));
        edge_origin.push(e);
    }
    let mut vertex_origin: Vec<Option<usize>> = kept.into_iter().map(Some).collect();
    vertex_origin.push(None);
    Ok(Contraction {
        graph: Multigraph::new(x + 1, edges)?,
        contraction_vertex: x,
        vertex_origin,
        edge_origin,
    })
}

/// All perfect matchings of a graph as edge bitmasks; the enumeration oracle.
#[derive(Clone, Debug)]
pub struct PmTable {
    pub masks: Vec<u128>,
}

impl PmTable {
    pub fn new(g: &Multigraph) -> Result<PmTable> {
        check_cap(g)?;
        if g.size() > 128 {
            return Err(Error::EnumerationCap {
                n: g.order(),
                cap: 85,
            });
        }
        let mut masks = Vec::new();
        visit_perfect_matchings(g, &vec![true; g.order()], &vec![true; g.size()], |m| {
            masks.push(m.iter().fold(0u128, |acc, e| acc | 1 << e.0));
            std::ops::ControlFlow::Continue(())
        });
        Ok(PmTable { masks })
    }

    pub fn edge_mask(edges: &[EdgeId]) -> u128 {
        edges.iter().fold(0u128, |acc, e| acc | 1 << e.0)
    }

    /// Every perfect matching meets the edge set exactly once.
    pub fn is_tight(&self, cut: u128) -> bool {
        self.masks.iter().all(|m| (m & cut).count_ones() == 1)
    }

    /// Every edge lies in a perfect matching meeting `cut` exactly once.
    pub fn is_separating(&self, cut: u128, size: usize) -> bool {
        let mut covered = 0u128;
        for m in &self.masks {
            if (m & cut).count_ones() == 1 {
                covered |= m;
            }
        }
        let all = if size == 128 {
            u128::MAX
        } else {
            (1u128 << size) - 1
        };
        covered == all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_contraction_gives_back_the_graph() {
        let k4 = Multigraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = contract(&k4, &[1, 2, 3]).unwrap();
        assert_eq!(c.graph.order(), 2);
        assert_eq!(c.graph.size(), 3);
        let c = contract(&k4, &[2]).unwrap();
        assert!(crate::canon::are_isomorphic(&c.graph, &k4));
        assert_eq!(c.vertex_origin, vec![Some(0), Some(1), Some(3), None]);
    }

    #[test]
    fn contraction_rejects_full_set() {
        let theta = Multigraph::new(2, [(0, 1); 3]).unwrap();
        assert_eq!(contract(&theta, &[0, 1]).unwrap_err(), Error::InvalidShore);
    }
}
