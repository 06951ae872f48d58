//! Splicing and gluing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};

/// `(G ⊙ H)_{u,v,π}` with `π` given as pairs `(edge at u in G, edge at v in H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpliceSpec {
    pub left: Multigraph,
    pub u: usize,
    pub right: Multigraph,
    pub v: usize,
    pub pi: Vec<(EdgeId, EdgeId)>,
}

impl SpliceSpec {
    /// Pairs the edges at `u` and at `v` in increasing id order.
    pub fn identity(left: Multigraph, u: usize, right: Multigraph, v: usize) -> Result<SpliceSpec> {
        check_vertex(&left, u)?;
        check_vertex(&right, v)?;
        let pi = left
            .incident(u)
            .iter()
            .copied()
            .zip(right.incident(v).iter().copied())
            .collect();
        Ok(SpliceSpec {
            left,
            u,
            right,
            v,
            pi,
        })
    }
}

/// A splice result: `left_map[old]` and `right_map[old]` give new indices,
/// `None` for the two vertices that were removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spliced {
    pub graph: Multigraph,
    pub left_map: Vec<Option<usize>>,
    pub right_map: Vec<Option<usize>>,
    /// The splicing cut, as edge ids of `graph`.
    pub cut: Vec<EdgeId>,
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

/// One attachment for [`splice_many`]: replace `core_vertex` by `part - part_vertex`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub core_vertex: usize,
    pub part: Multigraph,
    pub part_vertex: usize,
    /// Pairs `(edge at core_vertex in core, edge at part_vertex in part)`.
    pub pi: Vec<(EdgeId, EdgeId)>,
}

impl Attachment {
    pub fn identity(
        core: &Multigraph,
        core_vertex: usize,
        part: Multigraph,
        part_vertex: usize,
    ) -> Result<Self> {
        check_vertex(core, core_vertex)?;
        check_vertex(&part, part_vertex)?;
        let pi = core
            .incident(core_vertex)
            .iter()
            .copied()
            .zip(part.incident(part_vertex).iter().copied())
            .collect();
        Ok(Attachment {
            core_vertex,
            part,
            part_vertex,
            pi,
        })
    }
}

/// Result of [`splice_many`]: `core_map[old]` for core vertices and
/// `part_maps[i][old]` for the vertices of attachment `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiSpliced {
    pub graph: Multigraph,
    pub core_map: Vec<Option<usize>>,
    pub part_maps: Vec<Vec<Option<usize>>>,
}

/// Splices several graphs into distinct, pairwise nonadjacent-or-adjacent core
/// vertices at once. Kept core vertices come first in order, then each part's
/// remaining vertices in order.
pub fn splice_many(core: &Multigraph, attachments: &[Attachment]) -> Result<MultiSpliced> {
    let n = core.order();
    let mut replaced: Vec<Option<usize>> = vec![None; n];
    for (i, att) in attachments.iter().enumerate() {
        check_vertex(core, att.core_vertex)?;
        check_vertex(&att.part, att.part_vertex)?;
        if replaced[att.core_vertex].is_some() {
            return Err(Error::InvalidArgument(format!(
                "vertex {} spliced twice",
                att.core_vertex
            )));
        }
        replaced[att.core_vertex] = Some(i);
        let (dl, dr) = (
            core.degree(att.core_vertex),
            att.part.degree(att.part_vertex),
        );
        if dl != dr {
            return Err(Error::DegreeMismatch {
                left: dl,
                right: dr,
            });
        }
        check_bijection(core, att.core_vertex, &att.part, att.part_vertex, &att.pi)?;
    }
    let mut next = 0;
    let mut core_map = vec![None; n];
    for v in 0..n {
        if replaced[v].is_none() {
            core_map[v] = Some(next);
            next += 1;
        }
    }
    let mut part_maps = Vec::with_capacity(attachments.len());
    for att in attachments {
        let mut map = vec![None; att.part.order()];
        for (w, slot) in map.iter_mut().enumerate() {
            if w != att.part_vertex {
                *slot = Some(next);
                next += 1;
            }
        }
        part_maps.push(map);
    }
    // Where each core edge-end at a replaced vertex lands: the partner edge's far end.
    let landing = |e: EdgeId, at: usize| -> usize {
        let i = replaced[at].expect("replaced vertex");
        let att = &attachments[i];
        let (_, f) = *att
            .pi
            .iter()
            .find(|(x, _)| *x == e)
            .expect("bijection covers the edge");
        part_maps[i][att.part.other_end(f, att.part_vertex)].expect("far end is kept")
    };
    let mut edges = Vec::new();
    for (e, a, b) in core.edges() {
        let na = match core_map[a] {
            Some(x) => x,
            None => landing(e, a),
        };
        let nb = match core_map[b] {
            Some(x) => x,
            None => landing(e, b),
        };
        edges.push((na, nb));
    }
    for (i, att) in attachments.iter().enumerate() {
        for (_, a, b) in att.part.edges() {
            if a == att.part_vertex || b == att.part_vertex {
                continue;
            }
            edges.push((
                part_maps[i][a].expect("kept"),
                part_maps[i][b].expect("kept"),
            ));
        }
    }
    Ok(MultiSpliced {
        graph: Multigraph::new(next, edges)?,
        core_map,
        part_maps,
    })
}

fn check_bijection(
    g: &Multigraph,
    u: usize,
    h: &Multigraph,
    v: usize,
    pi: &[(EdgeId, EdgeId)],
) -> Result<()> {
    let mut left: Vec<EdgeId> = pi.iter().map(|p| p.0).collect();
    let mut right: Vec<EdgeId> = pi.iter().map(|p| p.1).collect();
    left.sort_unstable();
    right.sort_unstable();
    let mut want_left = g.incident(u).to_vec();
    let mut want_right = h.incident(v).to_vec();
    want_left.sort_unstable();
    want_right.sort_unstable();
    if left != want_left || right != want_right {
        return Err(Error::InvalidBijection(format!(
            "expected a bijection between {want_left:?} and {want_right:?}"
        )));
    }
    Ok(())
}

/// Splices `spec.left` at `u` with `spec.right` at `v`.
pub fn splice(spec: &SpliceSpec) -> Result<Spliced> {
    check_vertex(&spec.left, spec.u)?;
    check_vertex(&spec.right, spec.v)?;
    let att = Attachment {
        core_vertex: spec.u,
        part: spec.right.clone(),
        part_vertex: spec.v,
        pi: spec.pi.clone(),
    };
    let out = splice_many(&spec.left, std::slice::from_ref(&att))?;
    let shore: Vec<usize> = out.core_map.iter().flatten().copied().collect();
    let cut = out.graph.boundary(&shore);
    Ok(Spliced {
        graph: out.graph,
        left_map: out.core_map,
        right_map: out.part_maps.into_iter().next().expect("one part"),
        cut,
    })
}

/// Splices with the identity bijection.
pub fn splice_identity(
    left: &Multigraph,
    u: usize,
    right: &Multigraph,
    v: usize,
) -> Result<Spliced> {
    splice(&SpliceSpec::identity(left.clone(), u, right.clone(), v)?)
}

/// Deletes `e1 = u1v1` from `g1` and `e2 = u2v2` from `g2` and adds `u1u2`,
/// `v1v2` (or `u1v2`, `v1u2` when `crossed`). Ends are `(min, max)` of each
/// edge; vertices of `g2` follow those of `g1`.
pub fn glue(
    g1: &Multigraph,
    e1: EdgeId,
    g2: &Multigraph,
    e2: EdgeId,
    crossed: bool,
) -> Result<Multigraph> {
    if e1.0 >= g1.size() {
        return Err(Error::NoSuchEdge(e1.0));
    }
    if e2.0 >= g2.size() {
        return Err(Error::NoSuchEdge(e2.0));
    }
    let k = g1.order();
    let (u1, v1) = g1.ends(e1);
    let (u2, v2) = g2.ends(e2);
    let (u2, v2) = (u2 + k, v2 + k);
    let mut edges: Vec<(usize, usize)> = g1
        .edges()
        .filter(|&(e, _, _)| e != e1)
        .map(|(_, a, b)| (a, b))
        .collect();
    edges.extend(
        g2.edges()
            .filter(|&(e, _, _)| e != e2)
            .map(|(_, a, b)| (a + k, b + k)),
    );
    if crossed {
        edges.extend([(u1, v2), (v1, u2)]);
    } else {
        edges.extend([(u1, u2), (v1, v2)]);
    }
    Multigraph::new(k + g2.order(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    fn k4() -> Multigraph {
        Multigraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn theta() -> Multigraph {
        Multigraph::new(2, [(0, 1); 3]).unwrap()
    }

    #[test]
    fn splice_with_theta_is_identity() {
        let s = splice_identity(&k4(), 0, &theta(), 0).unwrap();
        assert!(are_isomorphic(&s.graph, &k4()));
    }

    #[test]
    fn degree_mismatch() {
        let path = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let err = splice_identity(&k4(), 0, &path, 1).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 2 });
    }

    #[test]
    fn bad_bijection() {
        let spec = SpliceSpec {
            left: k4(),
            u: 0,
            right: k4(),
            v: 0,
            pi: vec![
                (EdgeId(0), EdgeId(0)),
                (EdgeId(0), EdgeId(1)),
                (EdgeId(2), EdgeId(2)),
            ],
        };
        assert!(matches!(splice(&spec), Err(Error::InvalidBijection(_))));
    }

    #[test]
    fn theta_glue_theta_is_c4() {
        let g = glue(&theta(), EdgeId(0), &theta(), EdgeId(0), false).unwrap();
        let c4 = Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]).unwrap();
        assert!(are_isomorphic(&g, &c4));
    }
}
