use serde::{Deserialize, Serialize};

use crate::barrier::{odd_components, Barrier};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};
use crate::lambda::{profile_unchecked, Engine};

use super::contract;

/// `G/V̄(J) → v` for one odd component `J` of `G - B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fragment {
    pub graph: Multigraph,
    pub contraction_vertex: usize,
    /// `vertex_origin[new] = Some(old)`; `None` for the contraction vertex.
    pub vertex_origin: Vec<Option<usize>>,
    /// `edge_origin[new] = old`.
    pub edge_origin: Vec<EdgeId>,
    /// The core vertex standing for `J`.
    pub core_vertex: usize,
}

/// Core and fragments of a graph with respect to a barrier.
///
/// Core vertices `0..k` stand for the odd components (the class `A`), and
/// `k..k+|B|` are the barrier vertices in increasing order (the class `B`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarrierDecomposition {
    pub barrier: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub core: Multigraph,
    /// `core_origin[k + j] = barrier[j]`; component vertices map to `None`.
    pub core_origin: Vec<Option<usize>>,
    /// `core_edge_origin[new] = old`.
    pub core_edge_origin: Vec<EdgeId>,
    pub fragments: Vec<Fragment>,
}

impl BarrierDecomposition {
    pub fn core_index_of_barrier_vertex(&self, b: usize) -> Option<usize> {
        self.barrier
            .binary_search(&b)
            .ok()
            .map(|j| self.components.len() + j)
    }

    /// Which component contains `v`, if any.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.binary_search(&v).is_ok())
    }
}

/// Shrinks every odd component of `g - B` to build the core, and builds one
/// fragment per component.
pub fn barrier_decomposition(g: &Multigraph, barrier: &Barrier) -> Result<BarrierDecomposition> {
    if barrier.is_empty() {
        return Err(Error::InvalidArgument("barrier must be nonempty".into()));
    }
    let b = barrier.vertices().to_vec();
    let all = g.components(&b, &[]);
    if all.iter().any(|c| c.len() % 2 == 0) {
        return Err(Error::InvalidArgument("G - B has an even component".into()));
    }
    let components = odd_components(g, &b);
    let k = components.len();
    let mut core_index = vec![usize::MAX; g.order()];
    for (i, comp) in components.iter().enumerate() {
        for &v in comp {
            core_index[v] = i;
        }
    }
    for (j, &v) in b.iter().enumerate() {
        core_index[v] = k + j;
    }
    let mut edges = Vec::new();
    let mut core_edge_origin = Vec::new();
    for (e, u, v) in g.edges() {
        let (cu, cv) = (core_index[u], core_index[v]);
        if cu == cv {
            continue;
        }
        edges.push((cu, cv));
        core_edge_origin.push(e);
    }
    let core = Multigraph::new(k + b.len(), edges)?;
    let mut core_origin = vec![None; k];
    core_origin.extend(b.iter().copied().map(Some));
    let mut fragments = Vec::with_capacity(k);
    for (i, comp) in components.iter().enumerate() {
        let mut inside = vec![false; g.order()];
        for &v in comp {
            inside[v] = true;
        }
        let rest: Vec<usize> = (0..g.order()).filter(|&v| !inside[v]).collect();
        let c = contract(g, &rest)?;
        fragments.push(Fragment {
            graph: c.graph,
            contraction_vertex: c.contraction_vertex,
            vertex_origin: c.vertex_origin,
            edge_origin: c.edge_origin,
            core_vertex: i,
        });
    }
    Ok(BarrierDecomposition {
        barrier: b,
        components,
        core,
        core_origin,
        core_edge_origin,
        fragments,
    })
}

/// Λ(G) recomputed from the fragments' Λ and the core's λ-matchable pairs:
/// the vertices of each `Λ(G_i) - v_i`, plus each `b ∈ B` paired in the core
/// with some `a_i` whose contraction vertex is λ-matchable in `G_i`.
pub fn lambda_via_barrier(g: &Multigraph, barrier: &Barrier) -> Result<Vec<usize>> {
    let dec = barrier_decomposition(g, barrier)?;
    let mut lambda = Vec::new();
    let mut good_a = vec![false; dec.components.len()];
    for frag in &dec.fragments {
        let p = profile_unchecked(&frag.graph, Engine::Fast);
        for &v in &p.lambda_set {
            match frag.vertex_origin[v] {
                Some(old) => lambda.push(old),
                None => good_a[frag.core_vertex] = true,
            }
        }
    }
    let core_profile = profile_unchecked(&dec.core, Engine::Fast);
    for (j, &b) in dec.barrier.iter().enumerate() {
        let cb = dec.components.len() + j;
        if (0..dec.components.len()).any(|a| good_a[a] && core_profile.contains_pair(a, cb)) {
            lambda.push(b);
        }
    }
    lambda.sort_unstable();
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::lambda_profile;

    fn k33() -> Multigraph {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        Multigraph::new(6, e).unwrap()
    }

    #[test]
    fn k33_over_a_color_class() {
        let g = k33();
        let b = Barrier::new(&g, vec![3, 4, 5]).unwrap();
        let dec = barrier_decomposition(&g, &b).unwrap();
        assert!(crate::canon::are_isomorphic(&dec.core, &g));
        assert_eq!(dec.fragments.len(), 3);
        assert!(dec
            .fragments
            .iter()
            .all(|f| f.graph.order() == 2 && f.graph.size() == 3));
        assert_eq!(lambda_via_barrier(&g, &b).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn k4_singleton_barrier() {
        let k4 = Multigraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let b = Barrier::new(&k4, vec![0]).unwrap();
        assert_eq!(
            lambda_via_barrier(&k4, &b).unwrap(),
            lambda_profile(&k4).unwrap().lambda_set
        );
    }
}
