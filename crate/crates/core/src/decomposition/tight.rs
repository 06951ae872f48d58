use crate::connectivity::three_cuts;
use crate::error::{Error, Result};
use crate::graph::{Cut, Multigraph};
use crate::matching::{is_matchable_without, is_matching_covered};

use super::{contract, PmTable};

fn require_odd(cut: &Cut) -> Result<()> {
    if cut.len().is_multiple_of(2) {
        return Err(Error::EvenCut(cut.len()));
    }
    Ok(())
}

/// Every perfect matching meets the cut exactly once.
///
/// A perfect matching meets an odd cut an odd number of times, so the cut fails
/// to be tight exactly when some perfect matching contains three pairwise
/// disjoint cut edges. Each such triple costs one matchability probe.
pub fn is_tight_cut(g: &Multigraph, cut: &Cut) -> Result<bool> {
    require_odd(cut)?;
    let edges = cut.edges();
    let k = edges.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let (a, b) = g.ends(edges[i]);
                let (c, d) = g.ends(edges[j]);
                let (e, f) = g.ends(edges[l]);
                let mut ends = vec![a, b, c, d, e, f];
                ends.sort_unstable();
                ends.dedup();
                if ends.len() == 6 && is_matchable_without(g, &ends) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Tightness by enumerating all perfect matchings.
pub fn is_tight_cut_oracle(g: &Multigraph, cut: &Cut) -> Result<bool> {
    require_odd(cut)?;
    let table = PmTable::new(g)?;
    Ok(table.is_tight(PmTable::edge_mask(cut.edges())))
}

/// Structural test in a bipartite host: `|X⁺| = |X⁻| + 1` and no edge joins
/// `X⁻` to `X̄⁻`, where `X⁺`, `X⁻` are the larger and smaller color-class
/// intersections of the shore.
pub fn is_tight_cut_bipartite(h: &Multigraph, cut: &Cut) -> Result<bool> {
    require_odd(cut)?;
    let bip = h.bipartition().ok_or(Error::NotBipartite)?;
    let in_a = cut.shore().iter().filter(|&&v| bip.in_a(v)).count();
    let in_b = cut.shore().len() - in_a;
    if in_a.abs_diff(in_b) != 1 {
        return Ok(false);
    }
    // X⁻ lies in the minority class of X; X̄⁻ in the other class, outside X.
    let minus_in_a = in_a < in_b;
    let inside = cut.mask();
    let bad = h.edges().any(|(_, u, v)| {
        let (x, y) = if bip.in_a(u) == minus_in_a {
            (u, v)
        } else {
            (v, u)
        };
        inside[x] && !inside[y]
    });
    Ok(!bad)
}

/// Both cut-contractions are matching covered.
pub fn is_separating_cut(g: &Multigraph, cut: &Cut) -> Result<bool> {
    let c1 = contract(g, &cut.complement())?;
    let c2 = contract(g, cut.shore())?;
    Ok(is_matching_covered(&c1.graph) && is_matching_covered(&c2.graph))
}

/// Separating by the per-edge test: each edge lies in a perfect matching that
/// meets the cut exactly once.
pub fn is_separating_cut_oracle(g: &Multigraph, cut: &Cut) -> Result<bool> {
    let table = PmTable::new(g)?;
    Ok(table.is_separating(PmTable::edge_mask(cut.edges()), g.size()))
}

/// Every nontrivial tight cut, found among 3-cuts and ordered by canonical shore.
pub fn nontrivial_tight_cuts(g: &Multigraph) -> Result<Vec<Cut>> {
    let mut out = Vec::new();
    for cut in three_cuts(g)? {
        if !cut.is_trivial() && is_tight_cut(g, &cut)? {
            out.push(cut);
        }
    }
    Ok(out)
}

/// Every nontrivial tight cut of any size, by checking all odd shores against
/// the full list of perfect matchings.
pub fn nontrivial_tight_cuts_oracle(g: &Multigraph) -> Result<Vec<Cut>> {
    let n = g.order();
    if n > 26 {
        return Err(Error::EnumerationCap { n, cap: 26 });
    }
    let table = PmTable::new(g)?;
    let mut out = Vec::new();
    if n < 6 {
        return Ok(out);
    }
    for bits in 0u32..(1u32 << (n - 1)) {
        let shore: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|&v| bits >> (v - 1) & 1 == 1))
            .collect();
        if shore.len().is_multiple_of(2) || shore.len() < 3 || n - shore.len() < 3 {
            continue;
        }
        let edges = g.boundary(&shore);
        if table.is_tight(PmTable::edge_mask(&edges)) {
            out.push(Cut::new(g, &shore)?);
        }
    }
    out.sort();
    Ok(out)
}

/// The first nontrivial tight cut by canonical shore, if any.
pub fn find_nontrivial_tight_cut(g: &Multigraph) -> Result<Option<Cut>> {
    for cut in three_cuts(g)? {
        if !cut.is_trivial() && is_tight_cut(g, &cut)? {
            return Ok(Some(cut));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Multigraph {
        Multigraph::new(
            6,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    fn k33_splice_k4() -> Multigraph {
        // K3,3 with A = {0,1,2}, B = {3,4,5}; vertex 0 replaced by the triangle 0,6,7
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
    fn prism_triangle_is_separating_not_tight() {
        let g = prism();
        let cut = Cut::new(&g, &[0, 1, 2]).unwrap();
        assert!(!is_tight_cut(&g, &cut).unwrap());
        assert!(!is_tight_cut_oracle(&g, &cut).unwrap());
        assert!(is_separating_cut(&g, &cut).unwrap());
        assert!(is_separating_cut_oracle(&g, &cut).unwrap());
        assert!(find_nontrivial_tight_cut(&g).unwrap().is_none());
    }

    #[test]
    fn splicing_cut_is_tight() {
        let g = k33_splice_k4();
        let cut = Cut::new(&g, &[0, 6, 7]).unwrap();
        assert!(is_tight_cut(&g, &cut).unwrap());
        assert!(is_tight_cut_oracle(&g, &cut).unwrap());
        let found = nontrivial_tight_cuts(&g).unwrap();
        assert_eq!(found, nontrivial_tight_cuts_oracle(&g).unwrap());
        assert_eq!(found.len(), 1);
    }

    #[test]
    fn even_cut_is_rejected() {
        let g = prism();
        let cut = Cut::new(&g, &[0, 3]).unwrap();
        assert_eq!(is_tight_cut(&g, &cut), Err(Error::EvenCut(4)));
    }

    #[test]
    fn bipartite_structural_test() {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        let k33 = Multigraph::new(6, e).unwrap();
        for v in 0..6 {
            let cut = Cut::new(&k33, &[v]).unwrap();
            assert!(is_tight_cut_bipartite(&k33, &cut).unwrap());
        }
        let cut = Cut::new(&k33, &[0, 1, 3]).unwrap();
        assert_eq!(
            is_tight_cut_bipartite(&k33, &cut).unwrap(),
            is_tight_cut_oracle(&k33, &cut).unwrap()
        );
    }
}
