//! Perfect matchings: Edmonds' blossom algorithm for decisions and search,
//! depth-first enumeration as an independent oracle, and matching certificates.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};

const NONE: usize = usize::MAX;

/// Default largest order accepted by exhaustive routines.
pub const DEFAULT_MAX_N: usize = 24;

/// The enumeration cap, overridable through `CUBMATCH_MAX_N`.
pub fn enumeration_cap() -> usize {
    std::env::var("CUBMATCH_MAX_N")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

pub(crate) fn check_cap(g: &Multigraph) -> Result<()> {
    let cap = enumeration_cap();
    if g.order() > cap {
        return Err(Error::EnumerationCap { n: g.order(), cap });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MatchingKind {
    Perfect,
    /// Center has degree 3, every other vertex degree 1.
    Vertex {
        center: usize,
    },
    /// Both centers have degree 3, every other vertex degree 1.
    Pair {
        a: usize,
        b: usize,
    },
}

/// An edge set of a host graph together with the degree pattern it claims.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCertificate {
    #[serde(flatten)]
    pub kind: MatchingKind,
    pub edges: Vec<EdgeId>,
}

impl MatchingCertificate {
    pub fn new(kind: MatchingKind, mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        MatchingCertificate { kind, edges }
    }

    /// Rechecks the degree pattern against `g`.
    pub fn validate(&self, g: &Multigraph) -> bool {
        let mut deg = vec![0usize; g.order()];
        let mut seen = vec![false; g.size()];
        for &e in &self.edges {
            if e.0 >= g.size() || seen[e.0] {
                return false;
            }
            seen[e.0] = true;
            let (u, v) = g.ends(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        let want = |v: usize| match self.kind {
            MatchingKind::Perfect => 1,
            MatchingKind::Vertex { center } => {
                if v == center {
                    3
                } else {
                    1
                }
            }
            MatchingKind::Pair { a, b } => {
                if v == a || v == b {
                    3
                } else {
                    1
                }
            }
        };
        match self.kind {
            MatchingKind::Vertex { center } if center >= g.order() => return false,
            MatchingKind::Pair { a, b } if a >= g.order() || b >= g.order() || a == b => {
                return false
            }
            _ => {}
        }
        (0..g.order()).all(|v| deg[v] == want(v))
    }
}

struct Blossom<'a> {
    g: &'a Multigraph,
    alive: &'a [bool],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Multigraph, alive: &'a [bool]) -> Self {
        let n = g.order();
        Blossom {
            g,
            alive,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g
            .incident(v)
            .iter()
            .map(move |&e| self.g.other_end(e, v))
            .filter(move |&w| self.alive[w])
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let nbrs: Vec<usize> = self.neighbors(v).collect();
            for to in nbrs {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.alive[i] && self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.mate.len();
        for v in 0..n {
            if !self.alive[v] || self.mate[v] != NONE {
                continue;
            }
            let free = self.neighbors(v).find(|&w| self.mate[w] == NONE && w != v);
            if let Some(w) = free {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
        for v in 0..n {
            if !self.alive[v] || self.mate[v] != NONE {
                continue;
            }
            if let Some(mut u) = self.find_path(v) {
                while u != NONE {
                    let pv = self.parent[u];
                    let ppv = self.mate[pv];
                    self.mate[u] = pv;
                    self.mate[pv] = u;
                    u = ppv;
                }
            }
        }
        self.mate
    }
}

/// Maximum matching of the subgraph induced by the `alive` vertices, as edge ids.
pub fn maximum_matching_masked(g: &Multigraph, alive: &[bool]) -> Vec<EdgeId> {
    let mate = Blossom::new(g, alive).run();
    let mut out = Vec::new();
    for (v, &w) in mate.iter().enumerate() {
        if w != NONE && v < w {
            out.push(g.edges_between(v, w)[0]);
        }
    }
    out.sort_unstable();
    out
}

pub fn maximum_matching(g: &Multigraph) -> Vec<EdgeId> {
    maximum_matching_masked(g, &vec![true; g.order()])
}

pub(crate) fn matching_number_masked(g: &Multigraph, alive: &[bool]) -> usize {
    maximum_matching_masked(g, alive).len()
}

pub(crate) fn alive_without(g: &Multigraph, removed: &[usize]) -> Vec<bool> {
    let mut alive = vec![true; g.order()];
    for &v in removed {
        alive[v] = false;
    }
    alive
}

/// A perfect matching of `g` minus `removed`, if one exists.
pub fn perfect_matching_without(g: &Multigraph, removed: &[usize]) -> Option<Vec<EdgeId>> {
    let alive = alive_without(g, removed);
    let count = alive.iter().filter(|&&a| a).count();
    if count % 2 == 1 {
        return None;
    }
    let m = maximum_matching_masked(g, &alive);
    (2 * m.len() == count).then_some(m)
}

/// Whether `g` minus `removed` has a perfect matching.
pub fn is_matchable_without(g: &Multigraph, removed: &[usize]) -> bool {
    perfect_matching_without(g, removed).is_some()
}

pub fn has_perfect_matching(g: &Multigraph) -> bool {
    is_matchable_without(g, &[])
}

pub fn find_perfect_matching(g: &Multigraph) -> Option<MatchingCertificate> {
    perfect_matching_without(g, &[]).map(|m| MatchingCertificate::new(MatchingKind::Perfect, m))
}

/// Whether `g - u - v` has a perfect matching.
pub fn is_matchable_pair(g: &Multigraph, u: usize, v: usize) -> Result<bool> {
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
    Ok(is_matchable_without(g, &[u, v]))
}

/// Every edge lies in some perfect matching (and `g` is connected with n ≥ 2).
pub fn is_matching_covered(g: &Multigraph) -> bool {
    if g.order() < 2 || !g.is_connected() || !has_perfect_matching(g) {
        return false;
    }
    let mut done = std::collections::BTreeSet::new();
    g.edges()
        .all(|(_, u, v)| !done.insert((u, v)) || is_matchable_without(g, &[u, v]))
}

/// `g - u - v` is matchable for every pair of distinct vertices.
pub fn is_bicritical(g: &Multigraph) -> bool {
    let n = g.order();
    if n % 2 == 1 {
        return false;
    }
    (0..n).all(|u| (u + 1..n).all(|v| is_matchable_without(g, &[u, v])))
}

/// Visits every perfect matching of `g` restricted to `alive` vertices and
/// `usable` edges. Parallel edges give distinct matchings.
pub fn visit_perfect_matchings<F>(g: &Multigraph, alive: &[bool], usable: &[bool], mut f: F)
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let mut matched: Vec<bool> = alive.iter().map(|&a| !a).collect();
    let mut current = Vec::new();
    fn rec<F: FnMut(&[EdgeId]) -> ControlFlow<()>>(
        g: &Multigraph,
        usable: &[bool],
        matched: &mut [bool],
        current: &mut Vec<EdgeId>,
        f: &mut F,
    ) -> ControlFlow<()> {
        let Some(v) = matched.iter().position(|&m| !m) else {
            return f(current);
        };
        matched[v] = true;
        for &e in g.incident(v) {
            if !usable[e.0] {
                continue;
            }
            let w = g.other_end(e, v);
            if matched[w] {
                continue;
            }
            matched[w] = true;
            current.push(e);
            let flow = rec(g, usable, matched, current, f);
            current.pop();
            matched[w] = false;
            flow?;
        }
        matched[v] = false;
        ControlFlow::Continue(())
    }
    let _ = rec(g, usable, &mut matched, &mut current, &mut f);
}

/// All perfect matchings, each with sorted edge ids. Refuses graphs above the cap.
pub fn enumerate_perfect_matchings(
    g: &Multigraph,
) -> Result<impl Iterator<Item = MatchingCertificate>> {
    check_cap(g)?;
    let mut all = Vec::new();
    visit_perfect_matchings(g, &vec![true; g.order()], &vec![true; g.size()], |m| {
        all.push(MatchingCertificate::new(MatchingKind::Perfect, m.to_vec()));
        ControlFlow::Continue(())
    });
    Ok(all.into_iter())
}

pub fn count_perfect_matchings(g: &Multigraph) -> Result<u64> {
    check_cap(g)?;
    let mut count = 0u64;
    visit_perfect_matchings(g, &vec![true; g.order()], &vec![true; g.size()], |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    Ok(count)
}

/// Exhaustive matchability of `g` minus `removed`, for cross-checking.
pub fn oracle_matchable_without(g: &Multigraph, removed: &[usize]) -> bool {
    let alive = alive_without(g, removed);
    let mut found = false;
    visit_perfect_matchings(g, &alive, &vec![true; g.size()], |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Multigraph {
        Multigraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k33() -> Multigraph {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        Multigraph::new(6, e).unwrap()
    }

    fn petersen() -> Multigraph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Multigraph::new(10, e).unwrap()
    }

    #[test]
    fn counts() {
        let theta = Multigraph::new(2, [(0, 1); 3]).unwrap();
        assert_eq!(count_perfect_matchings(&theta).unwrap(), 3);
        assert_eq!(count_perfect_matchings(&k33()).unwrap(), 6);
        assert_eq!(count_perfect_matchings(&k4()).unwrap(), 3);
        assert_eq!(count_perfect_matchings(&petersen()).unwrap(), 6);
    }

    #[test]
    fn certificates_validate() {
        for g in [k4(), k33(), petersen()] {
            let m = find_perfect_matching(&g).unwrap();
            assert!(m.validate(&g));
            assert_eq!(m.edges.len(), g.order() / 2);
        }
    }

    #[test]
    fn odd_graph_has_none() {
        let g = k33().delete_vertices(&[0]).graph;
        assert!(find_perfect_matching(&g).is_none());
    }

    #[test]
    fn pairs_in_k33() {
        let g = k33();
        assert!(!is_matchable_pair(&g, 0, 1).unwrap());
        assert!(is_matchable_pair(&g, 0, 3).unwrap());
        assert_eq!(is_matchable_pair(&g, 2, 2), Err(Error::SameVertex(2)));
    }

    #[test]
    fn bicritical() {
        assert!(is_bicritical(&k4()));
        assert!(!is_bicritical(&k33()));
        assert!(is_bicritical(&petersen()));
    }

    #[test]
    fn bridge_is_not_covered() {
        // K4 with one edge subdivided, twice, joined by a bridge between the subdivision vertices
        let mut e = vec![];
        for s in [0, 5] {
            e.extend([
                (s, s + 4),
                (s + 4, s + 1),
                (s, s + 2),
                (s, s + 3),
                (s + 1, s + 2),
                (s + 1, s + 3),
                (s + 2, s + 3),
            ]);
        }
        e.push((4, 9));
        let g = Multigraph::new(10, e).unwrap();
        assert!(g.is_cubic());
        assert!(has_perfect_matching(&g));
        assert!(!is_matching_covered(&g));
        assert!(is_matching_covered(&k33()));
    }

    #[test]
    fn cap_is_enforced() {
        let big = Multigraph::new(30, (0..15).map(|i| (2 * i, 2 * i + 1))).unwrap();
        assert!(matches!(
            count_perfect_matchings(&big),
            Err(Error::EnumerationCap { .. })
        ));
    }
}
