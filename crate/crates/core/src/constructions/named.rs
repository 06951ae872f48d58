//! Named fixtures: small cubic graphs and the composite examples used in tests.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};

use super::ops::{glue, splice_identity, splice_many, Attachment};

/// Every name accepted by [`named`], in a stable order.
pub const NAMES: &[&str] = &[
    "Theta",
    "C4cubic",
    "K4",
    "K33",
    "C6bar",
    "Cube",
    "Petersen",
    "PentagonalPrism",
    "K33sK4",
    "K33sK33",
    "K33s2K4",
    "K33s3K4",
    "K4gK33",
    "K33gThetagK33",
    "LambdaGtBeta",
    "CubesK33",
    "CubesCube",
    "LNotKprime",
    "NprimeExample",
    "BarrierExample",
];

pub fn theta() -> Multigraph {
    Multigraph::new(2, [(0, 1); 3]).expect("valid")
}

/// The 4-cycle with alternate edges doubled.
pub fn c4_cubic() -> Multigraph {
    Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]).expect("valid")
}

pub fn k4() -> Multigraph {
    Multigraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("valid")
}

/// `K3,3` with classes `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> Multigraph {
    let edges = (0..3).flat_map(|a| (3..6).map(move |b| (a, b)));
    Multigraph::new(6, edges).expect("valid")
}

/// The triangular prism.
pub fn c6_bar() -> Multigraph {
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
    .expect("valid")
}

/// The 3-cube on bit strings of length 3.
pub fn cube() -> Multigraph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                edges.push((v, v | bit));
            }
        }
    }
    Multigraph::new(8, edges).expect("valid")
}

pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Multigraph::new(10, edges).expect("valid")
}

pub fn pentagonal_prism() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 1) % 5 + 5));
    }
    Multigraph::new(10, edges).expect("valid")
}

/// The wheel with hub 0 and rim `1..k`; spokes are edges `0..k-1`.
pub fn wheel(k: usize) -> Result<Multigraph> {
    if k < 4 {
        return Err(Error::InvalidArgument(format!(
            "a wheel needs at least 4 vertices, got {k}"
        )));
    }
    let rim = k - 1;
    let mut edges: Vec<(usize, usize)> = (1..k).map(|v| (0, v)).collect();
    edges.extend((0..rim).map(|i| (i + 1, (i + 1) % rim + 1)));
    Multigraph::new(k, edges)
}

fn k33_attach(at: &[(usize, Multigraph)]) -> Multigraph {
    let core = k33();
    let atts: Vec<Attachment> = at
        .iter()
        .map(|(v, part)| Attachment::identity(&core, *v, part.clone(), 0).expect("valid"))
        .collect();
    splice_many(&core, &atts).expect("valid").graph
}

/// `K3,3` spliced at vertex 0 with `K4`. Vertices `0,1` are the unspliced
/// vertices of the spliced class, `2,3,4` the other class and `5,6,7` the
/// triangle.
pub fn k33_splice_k4() -> Multigraph {
    splice_identity(&k33(), 0, &k4(), 0).expect("valid").graph
}

/// `K3,3 ⊙ K3,3`. Vertices `0,1` and `8,9` are the two sides' minority
/// classes, so the non-λ-matchable pairs are `{0,1} × {8,9}`.
pub fn k33_splice_k33() -> Multigraph {
    splice_identity(&k33(), 0, &k33(), 3).expect("valid").graph
}

/// `K3,3` with `K4` spliced at two vertices of one class; vertex 0 is the
/// unspliced third vertex.
pub fn k33_splice_2k4() -> Multigraph {
    k33_attach(&[(0, k4()), (1, k4())])
}

/// `K3,3` with `K4` spliced at each vertex of one class.
pub fn k33_splice_3k4() -> Multigraph {
    k33_attach(&[(0, k4()), (1, k4()), (2, k4())])
}

pub fn k4_glue_k33() -> Multigraph {
    glue(&k4(), EdgeId(0), &k33(), EdgeId(0), false).expect("valid")
}

/// `K3,3` glued to Θ, then a second `K3,3` glued at a remaining Θ edge.
pub fn k33_glue_theta_glue_k33() -> Multigraph {
    let first = glue(&k33(), EdgeId(0), &theta(), EdgeId(0), false).expect("valid");
    // edges 8 and 9 of `first` are what is left of Θ
    glue(&first, EdgeId(8), &k33(), EdgeId(0), false).expect("valid")
}

/// `K3,3 ⊙ K3,3` with `K4` spliced at each vertex of a non-λ-matchable pair
/// class; order 18.
pub fn lambda_gt_beta() -> Multigraph {
    let core = k33_splice_k33();
    let atts: Vec<Attachment> = [0, 1, 8, 9]
        .into_iter()
        .map(|v| Attachment::identity(&core, v, k4(), 0).expect("valid"))
        .collect();
    splice_many(&core, &atts).expect("valid").graph
}

pub fn cube_splice_k33() -> Multigraph {
    splice_identity(&cube(), 0, &k33(), 0).expect("valid").graph
}

pub fn cube_splice_cube() -> Multigraph {
    splice_identity(&cube(), 0, &cube(), 0)
        .expect("valid")
        .graph
}

/// Cube glued to `K3,3`: pieces are a simple brace outside `𝒦` and `K3,3`.
pub fn l_not_kprime() -> Multigraph {
    glue(&cube(), EdgeId(0), &k33(), EdgeId(0), false).expect("valid")
}

/// `K4` glued to the prism: both pieces are bricks.
pub fn nprime_example() -> Multigraph {
    glue(&k4(), EdgeId(0), &c6_bar(), EdgeId(0), false).expect("valid")
}

/// `K3,3` with `K4` and the prism spliced at two vertices of one class; the
/// other class is a barrier with fragments `K4`, prism and Θ.
pub fn barrier_example() -> Multigraph {
    k33_attach(&[(0, k4()), (1, c6_bar())])
}

/// Looks up a fixture by name. `K3,3` is accepted for `K33`.
pub fn named(name: &str) -> Result<Multigraph> {
    Ok(match name {
        "Theta" => theta(),
        "C4cubic" => c4_cubic(),
        "K4" => k4(),
        "K33" | "K3,3" => k33(),
        "C6bar" => c6_bar(),
        "Cube" => cube(),
        "Petersen" => petersen(),
        "PentagonalPrism" => pentagonal_prism(),
        "K33sK4" => k33_splice_k4(),
        "K33sK33" => k33_splice_k33(),
        "K33s2K4" => k33_splice_2k4(),
        "K33s3K4" => k33_splice_3k4(),
        "K4gK33" => k4_glue_k33(),
        "K33gThetagK33" => k33_glue_theta_glue_k33(),
        "LambdaGtBeta" => lambda_gt_beta(),
        "CubesK33" => cube_splice_k33(),
        "CubesCube" => cube_splice_cube(),
        "LNotKprime" => l_not_kprime(),
        "NprimeExample" => nprime_example(),
        "BarrierExample" => barrier_example(),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

/// A 3-connected bipartite cubic graph of order `m`: `K3,3`, the cube, and
/// beyond that repeated splicing with `K3,3`.
pub fn bipartite_catalog(m: usize) -> Result<Multigraph> {
    match m {
        6 => Ok(k33()),
        8 => Ok(cube()),
        m if m >= 10 && m % 2 == 0 => {
            Ok(splice_identity(&bipartite_catalog(m - 4)?, 0, &k33(), 0)?.graph)
        }
        _ => Err(Error::InvalidArgument(format!(
            "no 3-connected bipartite cubic graph of order {m} in the catalog"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::connectivity::edge_connectivity;
    use crate::constructions::ops::{splice, SpliceSpec};
    use crate::graph::EdgeId;

    #[test]
    fn every_name_resolves_to_a_connected_cubic_graph() {
        for name in NAMES {
            let g = named(name).unwrap();
            assert!(g.is_cubic(), "{name}");
            assert!(edge_connectivity(&g).unwrap() >= 2, "{name}");
        }
        assert_eq!(named("K3,3").unwrap(), k33());
        assert!(matches!(named("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn orders() {
        let expect = [
            ("K33sK4", 8),
            ("K33sK33", 10),
            ("K33s2K4", 10),
            ("K33s3K4", 12),
            ("K4gK33", 10),
            ("K33gThetagK33", 14),
            ("LambdaGtBeta", 18),
            ("CubesK33", 12),
            ("CubesCube", 14),
        ];
        for (name, n) in expect {
            assert_eq!(named(name).unwrap().order(), n, "{name}");
        }
    }

    #[test]
    fn wheels_splice_to_petersen_and_prism() {
        let w = wheel(6).unwrap();
        let spokes: Vec<EdgeId> = (0..5).map(EdgeId).collect();
        let with = |sigma: &dyn Fn(usize) -> usize| {
            let pi = (0..5).map(|i| (spokes[i], spokes[sigma(i)])).collect();
            splice(&SpliceSpec {
                left: w.clone(),
                u: 0,
                right: w.clone(),
                v: 0,
                pi,
            })
            .unwrap()
            .graph
        };
        assert!(are_isomorphic(&with(&|i| i), &pentagonal_prism()));
        assert!(are_isomorphic(&with(&|i| 2 * i % 5), &petersen()));
        assert!(!are_isomorphic(&petersen(), &pentagonal_prism()));
    }

    #[test]
    fn catalog_is_bipartite_and_three_connected() {
        for m in (6..=20).step_by(2) {
            let h = bipartite_catalog(m).unwrap();
            assert_eq!(h.order(), m);
            assert!(h.is_bipartite());
            assert_eq!(edge_connectivity(&h).unwrap(), 3);
        }
        assert!(bipartite_catalog(4).is_err());
    }
}
