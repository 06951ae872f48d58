//! Canonical forms of multigraphs by partition refinement and exhaustive
//! individualization. Edge multiplicities take part in refinement, so two
//! multigraphs get equal forms exactly when they are isomorphic as multigraphs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::graph::Multigraph;

/// A relabeled copy of a graph that is identical for all isomorphic inputs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    /// Vertex colors in canonical order; empty when uncolored.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub colors: Vec<u32>,
    /// Sorted edge list, parallel edges repeated.
    pub edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    /// Short stable hex digest of the form.
    pub fn hash_hex(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("n={};", self.n));
        for c in &self.colors {
            h.update(format!("c{c},"));
        }
        for (u, v) in &self.edges {
            h.update(format!("{u}-{v},"));
        }
        let digest = h.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn to_graph(&self) -> Multigraph {
        Multigraph::new(self.n, self.edges.iter().copied()).expect("canonical edges are valid")
    }
}

/// Canonical labeling: `labeling[v]` is the canonical index of `v`.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub labeling: Vec<usize>,
    pub form: CanonicalForm,
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    canonical_labeling(g, None).form
}

pub fn canonical_hash(g: &Multigraph) -> String {
    canonical_form(g).hash_hex()
}

pub fn are_isomorphic(g1: &Multigraph, g2: &Multigraph) -> bool {
    g1.order() == g2.order() && g1.size() == g2.size() && canonical_form(g1) == canonical_form(g2)
}

/// Canonical labeling respecting an optional vertex coloring.
pub fn canonical_labeling(g: &Multigraph, colors: Option<&[u32]>) -> Labeling {
    let n = g.order();
    let adjacency: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut by_color: BTreeMap<(u32, usize), Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let c = colors.map_or(0, |c| c[v]);
        by_color.entry((c, adjacency[v].len())).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = by_color.into_values().collect();
    let mut search = Search {
        adjacency: &adjacency,
        best: None,
    };
    search.run(cells);
    let (edges, labeling) = search.best.unwrap_or_default();
    let mut form_colors = Vec::new();
    if let Some(c) = colors {
        form_colors = vec![0; n];
        for v in 0..n {
            form_colors[labeling[v]] = c[v];
        }
    }
    Labeling {
        labeling,
        form: CanonicalForm {
            n,
            colors: form_colors,
            edges,
        },
    }
}

type Candidate = (Vec<(usize, usize)>, Vec<usize>);

struct Search<'a> {
    adjacency: &'a [Vec<usize>],
    best: Option<Candidate>,
}

impl Search<'_> {
    fn run(&mut self, cells: Vec<Vec<usize>>) {
        let cells = refine(self.adjacency, cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(i) = target else {
            self.leaf(&cells);
            return;
        };
        for &v in &cells[i] {
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..i]);
            next.push(vec![v]);
            next.push(cells[i].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[i + 1..]);
            self.run(next);
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.adjacency.len();
        let mut labeling = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = pos;
        }
        let mut edges = Vec::new();
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            for &w in nbrs {
                let (a, b) = (labeling[v], labeling[w]);
                if a < b {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        match &self.best {
            Some((best, _)) if *best <= edges => {}
            _ => self.best = Some((edges, labeling)),
        }
    }
}

/// Equitable refinement: split cells by the multiset of neighbor cells until stable.
fn refine(adjacency: &[Vec<usize>], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = adjacency.len();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut sig: Vec<usize> = adjacency[v].iter().map(|&w| cell_of[w]).collect();
                sig.sort_unstable();
                groups.entry(sig).or_default().push(v);
            }
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_values());
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}
