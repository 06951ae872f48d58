//! Loopless multigraphs with stable edge identifiers, cuts and 2-colorings.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of an edge in its host graph's edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An undirected loopless multigraph on vertices `0..n`.
///
/// Edges keep the identifier they were created with; parallel edges are
/// distinct edges with equal endpoints. Endpoints are stored as `(min, max)`.
/// The value is immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Multigraph {
    n: usize,
    ends: Vec<(usize, usize)>,
    incidence: Vec<Vec<EdgeId>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Multigraph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Self> {
        Multigraph::new(raw.n, raw.edges)
    }
}

impl From<Multigraph> for RawGraph {
    fn from(g: Multigraph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.ends,
        }
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, edges={:?})", self.n, self.ends)
    }
}

impl Multigraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut ends = Vec::new();
        let mut incidence = vec![Vec::new(); n];
        for (i, (u, v)) in edges.into_iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop { edge: i, vertex: u });
            }
            incidence[u].push(EdgeId(i));
            incidence[v].push(EdgeId(i));
            ends.push((u.min(v), u.max(v)));
        }
        Ok(Multigraph { n, ends, incidence })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges, counting parallel edges separately.
    pub fn size(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self, e: EdgeId) -> (usize, usize) {
        self.ends[e.0]
    }

    pub fn edge_list(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, usize, usize)> + '_ {
        self.ends
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (EdgeId(i), u, v))
    }

    pub fn other_end(&self, e: EdgeId, v: usize) -> usize {
        let (a, b) = self.ends[e.0];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Edges at `v`, in increasing identifier order.
    pub fn incident(&self, v: usize) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// Neighbors of `v` with multiplicity, sorted.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incidence[v]
            .iter()
            .map(|&e| self.other_end(e, v))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn distinct_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = self.neighbors(v);
        out.dedup();
        out
    }

    pub fn edges_between(&self, u: usize, v: usize) -> Vec<EdgeId> {
        self.incidence[u]
            .iter()
            .copied()
            .filter(|&e| self.other_end(e, u) == v)
            .collect()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges_between(u, v).len()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn is_simple(&self) -> bool {
        let set: BTreeSet<_> = self.ends.iter().collect();
        set.len() == self.ends.len()
    }

    /// The simple graph on the same vertices with one edge per adjacent pair.
    pub fn underlying_simple(&self) -> Multigraph {
        let set: BTreeSet<_> = self.ends.iter().copied().collect();
        Multigraph::new(self.n, set).expect("endpoints already validated")
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components(&[], &[]).len() == 1
    }

    /// Connected components after removing the given vertices and edges.
    /// Each component is sorted; components are ordered by least vertex.
    pub fn components(
        &self,
        removed_vertices: &[usize],
        removed_edges: &[EdgeId],
    ) -> Vec<Vec<usize>> {
        let mut dead = vec![false; self.n];
        for &v in removed_vertices {
            dead[v] = true;
        }
        let mut dead_edge = vec![false; self.size()];
        for &e in removed_edges {
            dead_edge[e.0] = true;
        }
        self.components_masked(&dead, &dead_edge)
    }

    pub(crate) fn components_masked(&self, dead: &[bool], dead_edge: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = dead.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = vec![s];
            while let Some(v) = queue.pop_front() {
                for &e in &self.incidence[v] {
                    if dead_edge.get(e.0).copied().unwrap_or(false) {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `keep` (any order; output vertices follow sorted order).
    pub fn induced(&self, keep: &[usize]) -> Subgraph {
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in sorted.iter().enumerate() {
            new_index[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_origin = Vec::new();
        for (e, u, v) in self.edges() {
            if new_index[u] != usize::MAX && new_index[v] != usize::MAX {
                edges.push((new_index[u], new_index[v]));
                edge_origin.push(e);
            }
        }
        Subgraph {
            graph: Multigraph::new(sorted.len(), edges).expect("induced edges are valid"),
            vertex_origin: sorted,
            edge_origin,
        }
    }

    pub fn delete_vertices(&self, removed: &[usize]) -> Subgraph {
        let mut dead = vec![false; self.n];
        for &v in removed {
            dead[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !dead[v]).collect();
        self.induced(&keep)
    }

    /// Renames vertex `v` to `perm[v]`; edge identifiers are preserved.
    pub fn relabel(&self, perm: &[usize]) -> Result<Multigraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || hit[p] {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            hit[p] = true;
        }
        Multigraph::new(self.n, self.ends.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Same graph with the edge list sorted, for identity comparisons that ignore edge order.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.ends.clone();
        e.sort_unstable();
        e
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let k = self.n;
        let edges = self
            .ends
            .iter()
            .copied()
            .chain(other.ends.iter().map(|&(u, v)| (u + k, v + k)));
        Multigraph::new(self.n + other.n, edges).expect("shifted edges are valid")
    }

    /// Edges with exactly one end in `shore`, sorted by identifier.
    pub fn boundary(&self, shore: &[usize]) -> Vec<EdgeId> {
        let mut inside = vec![false; self.n];
        for &v in shore {
            inside[v] = true;
        }
        self.edges()
            .filter(|&(_, u, v)| inside[u] != inside[v])
            .map(|(e, _, _)| e)
            .collect()
    }

    /// The unique 2-coloring of a connected bipartite graph, or `None`.
    /// Class `A` is the one containing vertex 0.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &e in &self.incidence[v] {
                    let w = self.other_end(e, v);
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| color[v] == 0).collect();
        let b = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some(Bipartition { a, b, side: color })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Builds a cut from its shore.
    pub fn cut(&self, shore: &[usize]) -> Result<Cut> {
        Cut::new(self, shore)
    }
}

/// Result of taking a subgraph: the new graph plus maps back to the parent.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Multigraph,
    /// `vertex_origin[new] = old`.
    pub vertex_origin: Vec<usize>,
    /// `edge_origin[new] = old`.
    pub edge_origin: Vec<EdgeId>,
}

impl Subgraph {
    pub fn new_index_of(&self, old: usize) -> Option<usize> {
        self.vertex_origin.binary_search(&old).ok()
    }
}

/// Color classes of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    #[serde(skip)]
    side: Vec<u8>,
}

impl Bipartition {
    pub fn in_a(&self, v: usize) -> bool {
        self.side[v] == 0
    }

    pub fn same_class(&self, u: usize, v: usize) -> bool {
        self.side[u] == self.side[v]
    }
}

/// A cut `∂(X)` together with its shore `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cut {
    shore: Vec<usize>,
    edges: Vec<EdgeId>,
    host_order: usize,
}

impl Cut {
    pub fn new(g: &Multigraph, shore: &[usize]) -> Result<Cut> {
        let mut shore = shore.to_vec();
        shore.sort_unstable();
        shore.dedup();
        if let Some(&v) = shore.iter().find(|&&v| v >= g.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.order(),
            });
        }
        if shore.is_empty() || shore.len() == g.order() {
            return Err(Error::InvalidShore);
        }
        let edges = g.boundary(&shore);
        Ok(Cut {
            shore,
            edges,
            host_order: g.order(),
        })
    }

    /// Same cut, described by whichever shore is lexicographically smaller.
    pub fn canonical(&self) -> Cut {
        let other = self.complement();
        if other < self.shore {
            Cut {
                shore: other,
                edges: self.edges.clone(),
                host_order: self.host_order,
            }
        } else {
            self.clone()
        }
    }

    pub fn shore(&self) -> &[usize] {
        &self.shore
    }

    pub fn complement(&self) -> Vec<usize> {
        let mut inside = vec![false; self.host_order];
        for &v in &self.shore {
            inside[v] = true;
        }
        (0..self.host_order).filter(|&v| !inside[v]).collect()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.shore.len() % 2 == 1
    }

    /// Trivial when either shore has at most one vertex.
    pub fn is_trivial(&self) -> bool {
        self.shore.len() <= 1 || self.host_order - self.shore.len() <= 1
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.shore.binary_search(&v).is_ok()
    }

    /// Inside mask of the shore.
    pub fn mask(&self) -> Vec<bool> {
        let mut inside = vec![false; self.host_order];
        for &v in &self.shore {
            inside[v] = true;
        }
        inside
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> Multigraph {
        Multigraph::new(2, [(0, 1), (0, 1), (1, 0)]).unwrap()
    }

    #[test]
    fn loops_are_rejected() {
        assert_eq!(
            Multigraph::new(3, [(0, 1), (2, 2)]).unwrap_err(),
            Error::Loop { edge: 1, vertex: 2 }
        );
    }

    #[test]
    fn parallel_edges_keep_identity() {
        let g = theta();
        assert!(g.is_cubic());
        assert!(!g.is_simple());
        assert_eq!(g.edges_between(0, 1), vec![EdgeId(0), EdgeId(1), EdgeId(2)]);
        assert_eq!(g.underlying_simple().size(), 1);
    }

    #[test]
    fn path_is_not_cubic() {
        let g = Multigraph::new(2, [(0, 1)]).unwrap();
        assert!(!g.is_cubic());
    }

    #[test]
    fn cut_shores() {
        let g = theta();
        let c = g.cut(&[1]).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.complement(), vec![0]);
        assert_eq!(c.canonical().shore(), &[0]);
        assert!(c.is_trivial());
        assert_eq!(g.cut(&[]).unwrap_err(), Error::InvalidShore);
        assert_eq!(g.cut(&[0, 1]).unwrap_err(), Error::InvalidShore);
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let g = Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let s = g.delete_vertices(&[1]);
        assert_eq!(s.graph.order(), 3);
        assert_eq!(s.vertex_origin, vec![0, 2, 3]);
        assert_eq!(s.edge_origin, vec![EdgeId(2), EdgeId(3), EdgeId(4)]);
    }

    #[test]
    fn serde_round_trip() {
        let g = theta();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":2,"edges":[[0,1],[0,1],[0,1]]}"#);
        let back: Multigraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Multigraph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }
}
