//! λ-matchable vertices and pairs.
//!
//! A set of centers is λ-matchable when some spanning subgraph gives each
//! center degree 3 and every other vertex degree 1. In a cubic graph the
//! centers keep all their edges, so the fast path removes the centers and the
//! vertices they reach and asks the blossom engine for a perfect matching of
//! what remains. The oracle path searches spanning subgraphs directly.

use serde::{Deserialize, Serialize};

use crate::connectivity::edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, EdgeId, Multigraph};
use crate::matching::{perfect_matching_without, MatchingCertificate, MatchingKind};

/// Which computation path to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    /// Matchability probes with the blossom algorithm.
    #[default]
    Fast,
    /// Exhaustive search; exponential, for cross-checking.
    Oracle,
}

/// Edges of a spanning subgraph where `centers` have degree 3 and all other
/// vertices degree 1, via the reduction to a perfect matching.
fn centered_fast(g: &Multigraph, centers: &[usize]) -> Option<Vec<EdgeId>> {
    let n = g.order();
    let mut is_center = vec![false; n];
    for &c in centers {
        is_center[c] = true;
    }
    let mut forced = Vec::new();
    let mut hits = vec![0usize; n];
    for &c in centers {
        if g.degree(c) != 3 {
            return None;
        }
        for &e in g.incident(c) {
            let w = g.other_end(e, c);
            if is_center[w] {
                if c < w {
                    forced.push(e);
                }
            } else {
                hits[w] += 1;
                forced.push(e);
            }
        }
    }
    if hits.iter().any(|&h| h > 1) {
        return None;
    }
    let removed: Vec<usize> = (0..n).filter(|&v| is_center[v] || hits[v] == 1).collect();
    let mut m = perfect_matching_without(g, &removed)?;
    m.extend(forced);
    Some(m)
}

/// Spanning subgraph with prescribed degrees, by exhaustive branching on edges.
pub fn oracle_degree_subgraph(g: &Multigraph, target: &[usize]) -> Option<Vec<EdgeId>> {
    #[derive(Clone, Copy, PartialEq)]
    enum State {
        Open,
        In,
        Out,
    }
    fn rec(g: &Multigraph, target: &[usize], deg: &mut [usize], state: &mut [State]) -> bool {
        let Some(v) = (0..g.order()).find(|&v| deg[v] < target[v]) else {
            return true;
        };
        let need = target[v] - deg[v];
        let open: Vec<EdgeId> = g
            .incident(v)
            .iter()
            .copied()
            .filter(|e| {
                state[e.0] == State::Open && deg[g.other_end(*e, v)] < target[g.other_end(*e, v)]
            })
            .collect();
        if open.len() < need {
            return false;
        }
        let e = open[0];
        let w = g.other_end(e, v);
        state[e.0] = State::In;
        deg[v] += 1;
        deg[w] += 1;
        if rec(g, target, deg, state) {
            return true;
        }
        deg[v] -= 1;
        deg[w] -= 1;
        state[e.0] = State::Out;
        let ok = rec(g, target, deg, state);
        if !ok {
            state[e.0] = State::Open;
        }
        ok
    }
    if target.iter().zip(0..).any(|(&t, v)| t > g.degree(v)) {
        return None;
    }
    let mut deg = vec![0; g.order()];
    let mut state = vec![State::Open; g.size()];
    rec(g, target, &mut deg, &mut state).then(|| {
        (0..g.size())
            .filter(|&e| state[e] == State::In)
            .map(EdgeId)
            .collect()
    })
}

fn centered(g: &Multigraph, centers: &[usize], engine: Engine) -> Option<Vec<EdgeId>> {
    match engine {
        Engine::Fast => centered_fast(g, centers),
        Engine::Oracle => {
            let mut target = vec![1; g.order()];
            for &c in centers {
                target[c] = 3;
            }
            oracle_degree_subgraph(g, &target)
        }
    }
}

fn check_vertex(g: &Multigraph, v: usize) -> Result<()> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    Ok(())
}

/// A `v`-matching of `g`, if one exists.
pub fn find_v_matching(g: &Multigraph, v: usize) -> Result<Option<MatchingCertificate>> {
    find_v_matching_with(g, v, Engine::Fast)
}

pub fn find_v_matching_with(
    g: &Multigraph,
    v: usize,
    engine: Engine,
) -> Result<Option<MatchingCertificate>> {
    check_vertex(g, v)?;
    Ok(centered(g, &[v], engine)
        .map(|m| MatchingCertificate::new(MatchingKind::Vertex { center: v }, m)))
}

pub fn is_lambda_matchable_vertex(g: &Multigraph, v: usize) -> Result<bool> {
    Ok(find_v_matching(g, v)?.is_some())
}

fn check_pair(h: &Multigraph, a: usize, b: usize) -> Result<Bipartition> {
    check_vertex(h, a)?;
    check_vertex(h, b)?;
    let bip = h.bipartition().ok_or(Error::NotBipartite)?;
    if a == b {
        return Err(Error::SameVertex(a));
    }
    if bip.same_class(a, b) {
        return Err(Error::SameColorClass(a, b));
    }
    Ok(bip)
}

/// An `(a,b)`-matching of a bipartite `h`; `a` and `b` must lie in different classes.
pub fn find_ab_matching(h: &Multigraph, a: usize, b: usize) -> Result<Option<MatchingCertificate>> {
    find_ab_matching_with(h, a, b, Engine::Fast)
}

pub fn find_ab_matching_with(
    h: &Multigraph,
    a: usize,
    b: usize,
    engine: Engine,
) -> Result<Option<MatchingCertificate>> {
    check_pair(h, a, b)?;
    Ok(centered(h, &[a, b], engine)
        .map(|m| MatchingCertificate::new(MatchingKind::Pair { a, b }, m)))
}

pub fn is_lambda_matchable_pair(h: &Multigraph, a: usize, b: usize) -> Result<bool> {
    Ok(find_ab_matching(h, a, b)?.is_some())
}

/// ℓ(u): the number of vertices forming a λ-matchable pair with `u`.
pub fn partner_count(h: &Multigraph, u: usize) -> Result<usize> {
    check_vertex(h, u)?;
    let bip = h.bipartition().ok_or(Error::NotBipartite)?;
    let others = if bip.in_a(u) { &bip.b } else { &bip.a };
    Ok(others
        .iter()
        .filter(|&&w| centered_fast(h, &[u, w]).is_some())
        .count())
}

/// Λ, λ and, for bipartite hosts, P, ρ and ℓ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaProfile {
    pub n: usize,
    /// Λ, sorted.
    pub lambda_set: Vec<usize>,
    pub lambda: usize,
    pub bipartite: bool,
    /// P as pairs `(a, b)` with `a` in the class containing vertex 0; sorted.
    pub pairs: Vec<(usize, usize)>,
    pub rho: usize,
    /// ℓ for every vertex; empty for nonbipartite hosts.
    pub partners: Vec<usize>,
}

impl LambdaProfile {
    pub fn contains_pair(&self, u: usize, v: usize) -> bool {
        self.pairs.binary_search(&(u, v)).is_ok() || self.pairs.binary_search(&(v, u)).is_ok()
    }

    /// P as unordered pairs `(min, max)`.
    pub fn unordered_pairs(&self) -> Vec<(usize, usize)> {
        let mut p: Vec<_> = self
            .pairs
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        p.sort_unstable();
        p
    }
}

/// The profile of a connected cubic graph with κ ≥ 2.
pub fn lambda_profile(g: &Multigraph) -> Result<LambdaProfile> {
    lambda_profile_with(g, Engine::Fast)
}

pub fn lambda_profile_with(g: &Multigraph, engine: Engine) -> Result<LambdaProfile> {
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
    Ok(profile_unchecked(g, engine))
}

pub(crate) fn profile_unchecked(g: &Multigraph, engine: Engine) -> LambdaProfile {
    let n = g.order();
    let lambda_set: Vec<usize> = (0..n)
        .filter(|&v| centered(g, &[v], engine).is_some())
        .collect();
    let mut pairs = Vec::new();
    let mut partners = Vec::new();
    let bip = g.bipartition();
    if let Some(bip) = &bip {
        partners = vec![0; n];
        for &a in &bip.a {
            for &b in &bip.b {
                if centered(g, &[a, b], engine).is_some() {
                    pairs.push((a, b));
                    partners[a] += 1;
                    partners[b] += 1;
                }
            }
        }
    }
    pairs.sort_unstable();
    LambdaProfile {
        n,
        lambda: lambda_set.len(),
        lambda_set,
        bipartite: bip.is_some(),
        rho: pairs.len(),
        pairs,
        partners,
    }
}
