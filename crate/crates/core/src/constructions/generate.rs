//! Exhaustive generation of connected cubic multigraphs.
//!
//! Order `n` is built from order `n - 2` by subdividing two edges (or one edge
//! twice) and joining the two new vertices, and from pairs of smaller graphs
//! by subdividing one edge in each and joining the new vertices with a bridge.
//! Isomorphs are removed with canonical forms. Each order is computed once per
//! process and cached.

use std::collections::BTreeSet;
use std::sync::{Mutex, OnceLock};

use crate::canon::{canonical_form, CanonicalForm};
use crate::connectivity::edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Largest order accepted by [`generate_all_cubic`].
pub const MAX_GENERATED_ORDER: usize = 16;

fn cache() -> &'static Mutex<Vec<Vec<Multigraph>>> {
    static CACHE: OnceLock<Mutex<Vec<Vec<Multigraph>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

fn extend(g: &Multigraph) -> Vec<Multigraph> {
    let n = g.order();
    let (x, y) = (n, n + 1);
    let m = g.size();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i..m {
            let mut edges = Vec::with_capacity(m + 3);
            for (e, a, b) in g.edges() {
                if e.0 == i && i == j {
                    edges.extend([(a, x), (x, y), (y, b)]);
                } else if e.0 == i {
                    edges.extend([(a, x), (x, b)]);
                } else if e.0 == j {
                    edges.extend([(a, y), (y, b)]);
                } else {
                    edges.push((a, b));
                }
            }
            edges.push((x, y));
            out.push(Multigraph::new(n + 2, edges).expect("no loops are created"));
        }
    }
    out
}

fn bridge_joins(g1: &Multigraph, g2: &Multigraph) -> Vec<Multigraph> {
    let union = g1.disjoint_union(g2);
    let n = union.order();
    let (x, y) = (n, n + 1);
    let mut out = Vec::new();
    for i in 0..g1.size() {
        for j in g1.size()..union.size() {
            let mut edges = Vec::with_capacity(union.size() + 3);
            for (e, a, b) in union.edges() {
                if e.0 == i {
                    edges.extend([(a, x), (x, b)]);
                } else if e.0 == j {
                    edges.extend([(a, y), (y, b)]);
                } else {
                    edges.push((a, b));
                }
            }
            edges.push((x, y));
            out.push(Multigraph::new(n + 2, edges).expect("no loops are created"));
        }
    }
    out
}

/// All connected cubic multigraphs of order `2 * (index + 1)`, in canonical order.
fn level(index: usize) -> Vec<Multigraph> {
    let mut levels = cache().lock().expect("cache lock");
    while levels.len() <= index {
        let next = match levels.last() {
            None => vec![Multigraph::new(2, [(0, 1); 3]).expect("valid")],
            Some(prev) => {
                let mut forms: BTreeSet<CanonicalForm> = prev
                    .iter()
                    .flat_map(extend)
                    .map(|g| canonical_form(&g))
                    .collect();
                let top = levels.len();
                // orders 2(i+1) and 2(j+1) plus the two new vertices
                for i in 0..top {
                    if top < 2 + 2 * i {
                        break;
                    }
                    let j = top - 2 - i;
                    for g1 in &levels[i] {
                        for g2 in &levels[j] {
                            forms.extend(bridge_joins(g1, g2).iter().map(canonical_form));
                        }
                    }
                }
                forms.into_iter().map(|f| f.to_graph()).collect()
            }
        };
        levels.push(next);
    }
    levels[index].clone()
}

/// Every connected cubic multigraph of order `n` with edge connectivity at
/// least `min_kappa`, one per isomorphism class, in canonical-form order.
pub fn generate_all_cubic(n: usize, min_kappa: usize) -> Result<impl Iterator<Item = Multigraph>> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "cubic graphs have positive even order, got {n}"
        )));
    }
    if n > MAX_GENERATED_ORDER {
        return Err(Error::EnumerationCap {
            n,
            cap: MAX_GENERATED_ORDER,
        });
    }
    Ok(level(n / 2 - 1)
        .into_iter()
        .filter(move |g| min_kappa == 0 || edge_connectivity(g).is_ok_and(|k| k >= min_kappa)))
}
