//! Barriers and Tutte violators.
//!
//! A violator of an unmatchable graph comes from the Gallai–Edmonds partition,
//! computed by matchability probes: `D` holds the vertices missed by some
//! maximum matching and the violator is `N(D) - D`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::matching::{alive_without, is_matchable_without, matching_number_masked};

/// A vertex set `B` of a matchable graph with `c_odd(G - B) = |B|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Barrier {
    vertices: Vec<usize>,
}

impl Barrier {
    /// Wraps a vertex set after checking the Tutte equality.
    pub fn new(g: &Multigraph, mut vertices: Vec<usize>) -> Result<Barrier> {
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.order(),
            });
        }
        if odd_components(g, &vertices).len() != vertices.len() {
            return Err(Error::InvalidArgument(format!(
                "{vertices:?} is not a barrier"
            )));
        }
        Ok(Barrier { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Recount of `c_odd(G - B) == |B|`.
    pub fn validate(&self, g: &Multigraph) -> bool {
        odd_components(g, &self.vertices).len() == self.vertices.len()
    }
}

/// Odd components of `g - removed`, each sorted, ordered by least vertex.
pub fn odd_components(g: &Multigraph, removed: &[usize]) -> Vec<Vec<usize>> {
    g.components(removed, &[])
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .collect()
}

/// For the subgraph induced by `alive`, a set `S` with `c_odd - |S|` equal to
/// the deficiency; `None` when that subgraph is perfectly matchable.
pub fn tutte_violator_masked(g: &Multigraph, alive: &[bool]) -> Option<Vec<usize>> {
    let count = alive.iter().filter(|&&a| a).count();
    let nu = matching_number_masked(g, alive);
    if 2 * nu == count {
        return None;
    }
    let mut probe = alive.to_vec();
    let mut in_d = vec![false; g.order()];
    for v in 0..g.order() {
        if !alive[v] {
            continue;
        }
        probe[v] = false;
        in_d[v] = matching_number_masked(g, &probe) == nu;
        probe[v] = true;
    }
    let mut s: Vec<usize> = (0..g.order())
        .filter(|&v| alive[v] && !in_d[v])
        .filter(|&v| g.neighbors(v).iter().any(|&w| in_d[w]))
        .collect();
    s.sort_unstable();
    Some(s)
}

/// A Tutte violator of `g - removed`, or `None` if it is matchable.
pub fn tutte_violator(g: &Multigraph, removed: &[usize]) -> Option<Vec<usize>> {
    tutte_violator_masked(g, &alive_without(g, removed))
}

/// A barrier containing `u` and `v`, or `None` when `g - u - v` is matchable.
pub fn find_barrier_containing(g: &Multigraph, u: usize, v: usize) -> Result<Option<Barrier>> {
    if u == v {
        return Err(Error::SameVertex(u));
    }
    for x in [u, v] {
        if x >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: g.order(),
            });
        }
    }
    let Some(mut s) = tutte_violator(g, &[u, v]) else {
        return Ok(None);
    };
    s.extend([u, v]);
    Barrier::new(g, s).map(Some)
}

/// A barrier that isolates `u` in `g - B`, or `None` when `u` has three
/// distinct neighbors and `g - u - N(u)` is matchable.
pub fn barrier_isolating(g: &Multigraph, u: usize) -> Option<Barrier> {
    let nbrs = g.distinct_neighbors(u);
    if nbrs.len() < 3 {
        return Barrier::new(g, nbrs).ok();
    }
    let mut removed = nbrs.clone();
    removed.push(u);
    let mut s = tutte_violator(g, &removed)?;
    s.extend(nbrs);
    Barrier::new(g, s).ok()
}

/// The first barrier of size at least two met by a lexicographic scan of pairs.
pub fn find_nontrivial_barrier(g: &Multigraph) -> Option<Barrier> {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            if is_matchable_without(g, &[u, v]) {
                continue;
            }
            if let Ok(Some(b)) = find_barrier_containing(g, u, v) {
                return Some(b);
            }
        }
    }
    None
}

/// The distinct nontrivial barriers reached from pairs `u, v` with `g - u - v`
/// unmatchable, in order of first discovery.
pub fn barriers_from_pairs(g: &Multigraph) -> Vec<Barrier> {
    let n = g.order();
    let mut out: Vec<Barrier> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if is_matchable_without(g, &[u, v]) {
                continue;
            }
            if let Ok(Some(b)) = find_barrier_containing(g, u, v) {
                if !b.is_trivial() && !out.contains(&b) {
                    out.push(b);
                }
            }
        }
    }
    out
}

/// Every barrier of `g`, by checking all vertex subsets. Exponential.
pub fn all_barriers_exhaustive(g: &Multigraph) -> Result<Vec<Barrier>> {
    let n = g.order();
    if n > 20 {
        return Err(Error::EnumerationCap { n, cap: 20 });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if odd_components(g, &set).len() == set.len() {
            out.push(Barrier { vertices: set });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> Multigraph {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        Multigraph::new(6, e).unwrap()
    }

    fn k4() -> Multigraph {
        Multigraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k33_color_class() {
        let b = find_barrier_containing(&k33(), 0, 1).unwrap().unwrap();
        assert_eq!(b.vertices(), &[0, 1, 2]);
        assert!(b.validate(&k33()));
        assert_eq!(
            find_nontrivial_barrier(&k33()).unwrap().vertices(),
            &[0, 1, 2]
        );
    }

    #[test]
    fn k4_has_none() {
        assert!(find_barrier_containing(&k4(), 0, 1).unwrap().is_none());
        assert!(find_nontrivial_barrier(&k4()).is_none());
        assert!(barrier_isolating(&k4(), 0).is_none());
    }

    #[test]
    fn isolating_barrier_in_k33() {
        let b = barrier_isolating(&k33(), 0).unwrap();
        assert_eq!(b.vertices(), &[3, 4, 5]);
    }

    #[test]
    fn theta_isolating() {
        let theta = Multigraph::new(2, [(0, 1); 3]).unwrap();
        assert_eq!(barrier_isolating(&theta, 0).unwrap().vertices(), &[1]);
        assert!(find_nontrivial_barrier(&theta).is_none());
    }

    #[test]
    fn exhaustive_barriers_of_k4_are_trivial() {
        let all = all_barriers_exhaustive(&k4()).unwrap();
        assert!(all.iter().all(|b| b.len() <= 1));
        assert_eq!(all.len(), 5);
    }
}
