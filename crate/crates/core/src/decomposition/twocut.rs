use serde::{Deserialize, Serialize};

use crate::connectivity::two_cuts;
use crate::error::{Error, Result};
use crate::graph::{Cut, EdgeId, Multigraph};

/// One side of a 2-cut closed up by a marker edge between its two degree-2 vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedComponent {
    pub graph: Multigraph,
    /// `vertex_origin[new] = old`.
    pub vertex_origin: Vec<usize>,
    /// `edge_origin[new] = Some(old)`, `None` for the marker.
    pub edge_origin: Vec<Option<EdgeId>>,
    pub marker: EdgeId,
}

/// The first 2-cut by canonical shore.
pub fn find_2cut(g: &Multigraph) -> Result<Option<Cut>> {
    Ok(two_cuts(g)?.into_iter().next())
}

/// Every 2-cut, by checking all shores that contain vertex 0.
pub fn two_cuts_oracle(g: &Multigraph) -> Result<Vec<Cut>> {
    let n = g.order();
    if n > 26 {
        return Err(Error::EnumerationCap { n, cap: 26 });
    }
    let mut out = Vec::new();
    if n < 2 {
        return Ok(out);
    }
    for bits in 0u32..(1u32 << (n - 1)) - 1 {
        let shore: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|&v| bits >> (v - 1) & 1 == 1))
            .collect();
        if g.boundary(&shore).len() == 2 {
            out.push(Cut::new(g, &shore)?);
        }
    }
    out.sort();
    Ok(out)
}

/// The marked components of a 2-cut: first the side of `cut.shore()`, then its complement.
pub fn marked_components(g: &Multigraph, cut: &Cut) -> Result<(MarkedComponent, MarkedComponent)> {
    if cut.len() != 2 {
        return Err(Error::NotKCut(2));
    }
    let inside = cut.mask();
    let side = |shore: Vec<usize>, want: bool| -> Result<MarkedComponent> {
        let sub = g.induced(&shore);
        let ends: Vec<usize> = cut
            .edges()
            .iter()
            .map(|&e| {
                let (u, v) = g.ends(e);
                if inside[u] == want {
                    u
                } else {
                    v
                }
            })
            .map(|old| sub.new_index_of(old).expect("cut end lies in its shore"))
            .collect();
        if ends[0] == ends[1] {
            return Err(Error::InvalidArgument(
                "2-cut edges share an end; marker would be a loop".into(),
            ));
        }
        let mut edges = sub.graph.edge_list().to_vec();
        edges.push((ends[0], ends[1]));
        let mut edge_origin: Vec<Option<EdgeId>> =
            sub.edge_origin.iter().copied().map(Some).collect();
        edge_origin.push(None);
        let marker = EdgeId(edges.len() - 1);
        Ok(MarkedComponent {
            graph: Multigraph::new(shore.len(), edges)?,
            vertex_origin: sub.vertex_origin,
            edge_origin,
            marker,
        })
    };
    Ok((
        side(cut.shore().to_vec(), true)?,
        side(cut.complement(), false)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_splits_into_two_thetas() {
        let c4 = Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]).unwrap();
        let cut = find_2cut(&c4).unwrap().unwrap();
        let (a, b) = marked_components(&c4, &cut).unwrap();
        let theta = Multigraph::new(2, [(0, 1); 3]).unwrap();
        assert!(crate::canon::are_isomorphic(&a.graph, &theta));
        assert!(crate::canon::are_isomorphic(&b.graph, &theta));
        assert_eq!(a.edge_origin.last(), Some(&None));
    }
}
