use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Cut, Multigraph};
use crate::lambda::Engine;

use super::tree::{tight_cut_decomposition_with, two_cut_decomposition_with, NodeKind};
use super::twocut::marked_components;

/// Counting invariants of the brick/brace list and of the 3-connected pieces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantBundle {
    /// Number of bricks.
    pub b: usize,
    /// Number of braces of order at least six.
    pub b_prime: usize,
    /// Sum of brick orders.
    pub beta: usize,
    /// Sum of `(n/2)²` over braces of order at least six.
    pub beta_prime: usize,
    /// 3-connected pieces isomorphic to Θ.
    pub theta: usize,
    /// 3-connected pieces not isomorphic to Θ.
    pub theta_bar: usize,
    /// Sum of orders of nonbipartite 3-connected pieces.
    pub n_nonbip: usize,
}

fn theta_form() -> CanonicalForm {
    canonical_form(&Multigraph::new(2, [(0, 1); 3]).expect("theta is valid"))
}

pub fn invariants(g: &Multigraph) -> Result<InvariantBundle> {
    invariants_with(g, Engine::Fast)
}

pub fn invariants_with(g: &Multigraph, engine: Engine) -> Result<InvariantBundle> {
    let mut out = InvariantBundle::default();
    let tight = tight_cut_decomposition_with(g, engine, None)?;
    for leaf in tight.leaves() {
        let n = leaf.graph.order();
        match leaf.kind {
            NodeKind::Brick => {
                out.b += 1;
                out.beta += n;
            }
            NodeKind::Brace if n >= 6 => {
                out.b_prime += 1;
                out.beta_prime += (n / 2) * (n / 2);
            }
            _ => {}
        }
    }
    let theta = theta_form();
    let pieces = two_cut_decomposition_with(g, engine, None)?;
    for leaf in pieces.leaves() {
        if canonical_form(&leaf.graph) == theta {
            out.theta += 1;
        } else {
            out.theta_bar += 1;
        }
        if !leaf.graph.is_bipartite() {
            out.n_nonbip += leaf.graph.order();
        }
    }
    Ok(out)
}

/// B*: the sorted multiset of canonical forms of the underlying simple graphs
/// of the bricks and braces.
pub fn bricks_and_braces(g: &Multigraph) -> Result<Vec<CanonicalForm>> {
    Ok(tight_cut_decomposition_with(g, Engine::Fast, None)?.leaf_forms())
}

/// The 3-connected pieces, in decomposition order.
pub fn three_connected_pieces(g: &Multigraph) -> Result<Vec<Multigraph>> {
    let tree = two_cut_decomposition_with(g, Engine::Fast, None)?;
    Ok(tree.leaves().into_iter().map(|l| l.graph.clone()).collect())
}

/// How a 2-cut relates B* of the graph to B* of its marked components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoCutCase {
    /// Neither marked component is Θ: `B*(G) = B*(G1) + B*(G2) + {C4}`.
    NeitherTheta,
    /// Exactly one is Θ: `B*(G) = B*(other) + {C4}`.
    OneTheta,
    /// Both are Θ and `G` is the doubled 4-cycle: `B*(G) = {C4}`.
    BothTheta,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCutCheck {
    pub case: TwoCutCase,
    /// The multiset identity for the case holds.
    pub bricks_and_braces: bool,
    /// b, b′, β, β′, θ, θ̄ and n_nonbip add up over the marked components.
    pub additive: bool,
}

/// Classifies a 2-cut and checks the B* identity and additivity for it.
pub fn two_cut_case(g: &Multigraph, cut: &Cut) -> Result<TwoCutCheck> {
    if cut.len() != 2 {
        return Err(Error::NotKCut(2));
    }
    let (g1, g2) = marked_components(g, cut)?;
    let theta = theta_form();
    let t1 = canonical_form(&g1.graph) == theta;
    let t2 = canonical_form(&g2.graph) == theta;
    let c4 =
        canonical_form(&Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).expect("C4 is valid"));
    let mut expected = vec![c4];
    if !t1 {
        expected.extend(bricks_and_braces(&g1.graph)?);
    }
    if !t2 {
        expected.extend(bricks_and_braces(&g2.graph)?);
    }
    expected.sort();
    let case = match (t1, t2) {
        (false, false) => TwoCutCase::NeitherTheta,
        (true, true) => TwoCutCase::BothTheta,
        _ => TwoCutCase::OneTheta,
    };
    let whole = invariants(g)?;
    let (i1, i2) = (invariants(&g1.graph)?, invariants(&g2.graph)?);
    let additive = whole.b == i1.b + i2.b
        && whole.b_prime == i1.b_prime + i2.b_prime
        && whole.beta == i1.beta + i2.beta
        && whole.beta_prime == i1.beta_prime + i2.beta_prime
        && whole.theta == i1.theta + i2.theta
        && whole.theta_bar == i1.theta_bar + i2.theta_bar
        && whole.n_nonbip == i1.n_nonbip + i2.n_nonbip;
    Ok(TwoCutCheck {
        case,
        bricks_and_braces: bricks_and_braces(g)? == expected,
        additive,
    })
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

    #[test]
    fn k33_bundle() {
        let inv = invariants(&k33()).unwrap();
        assert_eq!(
            inv,
            InvariantBundle {
                b: 0,
                b_prime: 1,
                beta: 0,
                beta_prime: 9,
                theta: 0,
                theta_bar: 1,
                n_nonbip: 0
            }
        );
        assert_eq!(invariants_with(&k33(), Engine::Oracle).unwrap(), inv);
    }

    #[test]
    fn c4_is_case_three() {
        let c4 = Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]).unwrap();
        let cut = crate::connectivity::two_cuts(&c4).unwrap().remove(0);
        let check = two_cut_case(&c4, &cut).unwrap();
        assert_eq!(check.case, TwoCutCase::BothTheta);
        assert!(check.bricks_and_braces && check.additive);
        let inv = invariants(&c4).unwrap();
        assert_eq!((inv.theta, inv.theta_bar), (2, 0));
    }
}
