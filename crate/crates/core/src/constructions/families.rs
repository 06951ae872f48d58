//! Generators and recognizers for the extremal families.

use std::collections::HashSet;

use crate::barrier::{barrier_isolating, barriers_from_pairs, find_nontrivial_barrier};
use crate::canon::{are_isomorphic, canonical_labeling, CanonicalForm};
use crate::connectivity::edge_connectivity;
use crate::decomposition::{
    barrier_decomposition, contract, nontrivial_tight_cuts, three_connected_pieces,
    BarrierDecomposition, Contraction,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};
use crate::lambda::{partner_count, profile_unchecked, Engine};

use super::named::{bipartite_catalog, k33, k33_splice_k4, k4};
use super::ops::{splice_identity, splice_many, Attachment, SpliceSpec};
use super::witness::{all, attachments, Family, FamilyWitness, Part, Recipe};

fn base(family: Family, name: &str, graph: Multigraph) -> FamilyWitness {
    let x = (family == Family::N).then(|| all(graph.order()));
    FamilyWitness {
        family,
        graph,
        x,
        recipe: Recipe::Base { name: name.into() },
    }
}

fn identity_part(
    core: &Multigraph,
    core_vertex: usize,
    witness: FamilyWitness,
    fragment_vertex: usize,
) -> Part {
    let pi = Attachment::identity(core, core_vertex, witness.graph.clone(), fragment_vertex)
        .expect("valid attachment")
        .pi;
    Part {
        core_vertex,
        witness,
        fragment_vertex,
        pi,
    }
}

/// Builds an attach witness whose graph is the splice result itself.
fn attach(
    family: Family,
    core: Multigraph,
    parts: Vec<Part>,
    a0: Vec<usize>,
    a1: Vec<usize>,
) -> FamilyWitness {
    let out = splice_many(&core, &attachments(&parts)).expect("valid attachments");
    let n = out.graph.order();
    let x = (family == Family::N).then(|| match a1.first() {
        None => all(n),
        Some(&a) => vec![out.core_map[a].expect("unspliced")],
    });
    FamilyWitness {
        family,
        graph: out.graph,
        x,
        recipe: Recipe::Attach {
            core,
            parts,
            a0,
            a1,
            relabel: all(n),
        },
    }
}

/// A member of `𝒦` built by `depth` splices with `K3,3`, each at the first
/// vertex with partner count 3.
pub fn gen_k(depth: usize) -> FamilyWitness {
    let mut w = base(Family::K, "K33", k33());
    for _ in 0..depth {
        let v = (0..w.graph.order())
            .find(|&v| partner_count(&w.graph, v).ok() == Some(3))
            .expect("every member of 𝒦 has a vertex with partner count 3");
        let spec = SpliceSpec::identity(w.graph.clone(), v, k33(), 0).expect("valid");
        let out = super::ops::splice(&spec).expect("valid");
        let n = out.graph.order();
        w = FamilyWitness {
            family: Family::K,
            graph: out.graph,
            x: None,
            recipe: Recipe::Splice {
                host: Box::new(w),
                host_vertex: v,
                guest: Box::new(base(Family::K, "K33", k33())),
                guest_vertex: 0,
                pi: spec.pi,
                relabel: all(n),
            },
        };
    }
    w
}

/// A member of `𝒢`: `K4` at depth 0, then `K3,3` with the previous member
/// and two copies of `K4` spliced at one class.
pub fn gen_g(depth: usize) -> FamilyWitness {
    if depth == 0 {
        return base(Family::G, "brick", k4());
    }
    let core = k33();
    let parts = vec![
        identity_part(&core, 0, gen_g(depth - 1), 0),
        identity_part(&core, 1, base(Family::G, "brick", k4()), 0),
        identity_part(&core, 2, base(Family::G, "brick", k4()), 0),
    ];
    attach(Family::G, core, parts, Vec::new(), Vec::new())
}

/// A member of `𝒩`. Depth 0 is `(K4, V)`. Odd depths splice the previous
/// member and `K4` into `K3,3` and leave the third vertex as `A1`; even
/// depths splice two copies of `K4` and the previous member at its defect.
pub fn gen_n(depth: usize) -> FamilyWitness {
    if depth == 0 {
        return base(Family::N, "brick", k4());
    }
    let core = k33();
    let prev = gen_n(depth - 1);
    if depth % 2 == 1 {
        let parts = vec![
            identity_part(&core, 0, prev, 0),
            identity_part(&core, 1, base(Family::N, "brick", k4()), 0),
        ];
        attach(Family::N, core, parts, vec![0, 1], vec![2])
    } else {
        let defect = prev.x.as_ref().expect("𝒩 witness")[0];
        let parts = vec![
            identity_part(&core, 0, base(Family::N, "brick", k4()), 0),
            identity_part(&core, 1, base(Family::N, "brick", k4()), 0),
            identity_part(&core, 2, prev, defect),
        ];
        attach(Family::N, core, parts, vec![0, 1], Vec::new())
    }
}

/// `K3,3 ⊙ K4` spliced at an unspliced vertex of the spliced class with a
/// 3-connected bipartite cubic graph of order `n - 6` at a vertex of its
/// second class.
pub fn gen_negative_family(n: usize) -> Result<Multigraph> {
    if n % 2 == 1 || n < 12 {
        return Err(Error::InvalidArgument(format!(
            "order must be even and at least 12, got {n}"
        )));
    }
    let h = bipartite_catalog(n - 6)?;
    let b = h.bipartition().expect("bipartite").b[0];
    Ok(splice_identity(&k33_splice_k4(), 0, &h, b)?.graph)
}

/// Simple cubic braces.
pub fn recognize_j(g: &Multigraph) -> bool {
    g.is_cubic()
        && g.is_simple()
        && g.is_connected()
        && g.is_bipartite()
        && nontrivial_tight_cuts(g).is_ok_and(|c| c.is_empty())
}

fn three_connected_cubic(g: &Multigraph) -> bool {
    g.is_cubic() && edge_connectivity(g).is_ok_and(|k| k >= 3)
}

fn two_connected_cubic(g: &Multigraph) -> bool {
    g.is_cubic() && edge_connectivity(g).is_ok_and(|k| k >= 2)
}

fn is_theta(g: &Multigraph) -> bool {
    g.order() == 2 && g.size() == 3
}

/// Edge bijection and relabeling that rebuild `g` from `G/X̄` spliced at its
/// contraction vertex with `G/X` at its contraction vertex.
fn splice_from_contractions(
    host: &Contraction,
    guest: &Contraction,
) -> (Vec<(EdgeId, EdgeId)>, Vec<usize>) {
    let hv = host.contraction_vertex;
    let gv = guest.contraction_vertex;
    let pi = host
        .graph
        .incident(hv)
        .iter()
        .map(|&e| {
            let old = host.edge_origin[e.0];
            let f = guest
                .graph
                .incident(gv)
                .iter()
                .copied()
                .find(|f| guest.edge_origin[f.0] == old)
                .expect("cut edge appears in both contractions");
            (e, f)
        })
        .collect();
    let mut relabel: Vec<usize> = (0..hv)
        .map(|v| host.vertex_origin[v].expect("kept"))
        .collect();
    relabel.extend(
        (0..guest.graph.order())
            .filter(|&v| v != gv)
            .map(|v| guest.vertex_origin[v].expect("kept")),
    );
    (pi, relabel)
}

fn attach_from_barrier(
    dec: &BarrierDecomposition,
    children: Vec<(usize, FamilyWitness)>,
) -> (Vec<Part>, Vec<usize>) {
    let mut parts = Vec::new();
    for (i, child) in children {
        let frag = &dec.fragments[i];
        let pi = dec
            .core
            .incident(i)
            .iter()
            .map(|&e| {
                let old = dec.core_edge_origin[e.0];
                let f = frag
                    .graph
                    .incident(frag.contraction_vertex)
                    .iter()
                    .copied()
                    .find(|f| frag.edge_origin[f.0] == old)
                    .expect("cut edge appears in the fragment");
                (e, f)
            })
            .collect();
        parts.push(Part {
            core_vertex: i,
            witness: child,
            fragment_vertex: frag.contraction_vertex,
            pi,
        });
    }
    let k = dec.components.len();
    let mut relabel = Vec::new();
    for c in 0..dec.core.order() {
        if parts.iter().any(|p| p.core_vertex == c) {
            continue;
        }
        relabel.push(if c < k {
            dec.components[c][0]
        } else {
            dec.barrier[c - k]
        });
    }
    for p in &parts {
        let frag = &dec.fragments[p.core_vertex];
        relabel.extend(
            (0..frag.graph.order())
                .filter(|&v| v != frag.contraction_vertex)
                .map(|v| frag.vertex_origin[v].expect("kept")),
        );
    }
    (parts, relabel)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Target {
    All,
    Vertex(usize),
}

/// Recognizers sharing a memo of graphs already found to be outside a family.
#[derive(Default)]
pub struct Recognizer {
    not_k: HashSet<CanonicalForm>,
    not_g: HashSet<CanonicalForm>,
    not_n: HashSet<CanonicalForm>,
}

impl Recognizer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn k(&mut self, g: &Multigraph) -> Option<FamilyWitness> {
        if !g.is_bipartite() || !three_connected_cubic(g) {
            return None;
        }
        if are_isomorphic(g, &k33()) {
            return Some(base(Family::K, "K33", g.clone()));
        }
        let key = canonical_labeling(g, None).form;
        if self.not_k.contains(&key) {
            return None;
        }
        let cuts = nontrivial_tight_cuts(g).unwrap_or_default();
        for cut in cuts {
            let shore = cut.shore().to_vec();
            let rest = cut.complement();
            for (keep, shrink) in [(&shore, &rest), (&rest, &shore)] {
                let host = contract(g, shrink).expect("proper shore");
                let guest = contract(g, keep).expect("proper shore");
                if !are_isomorphic(&guest.graph, &k33()) {
                    continue;
                }
                if partner_count(&host.graph, host.contraction_vertex).ok() != Some(3) {
                    continue;
                }
                let Some(hw) = self.k(&host.graph) else {
                    continue;
                };
                let (pi, relabel) = splice_from_contractions(&host, &guest);
                return Some(FamilyWitness {
                    family: Family::K,
                    graph: g.clone(),
                    x: None,
                    recipe: Recipe::Splice {
                        host: Box::new(hw),
                        host_vertex: host.contraction_vertex,
                        guest: Box::new(base(Family::K, "K33", guest.graph.clone())),
                        guest_vertex: guest.contraction_vertex,
                        pi,
                        relabel,
                    },
                });
            }
        }
        self.not_k.insert(key);
        None
    }

    pub fn g(&mut self, g: &Multigraph) -> Option<FamilyWitness> {
        if g.is_bipartite() || !three_connected_cubic(g) {
            return None;
        }
        if find_nontrivial_barrier(g).is_none() {
            return Some(base(Family::G, "brick", g.clone()));
        }
        let key = canonical_labeling(g, None).form;
        if self.not_g.contains(&key) {
            return None;
        }
        'barriers: for b in barriers_from_pairs(g) {
            let Ok(dec) = barrier_decomposition(g, &b) else {
                continue;
            };
            let mut children = Vec::new();
            for (i, frag) in dec.fragments.iter().enumerate() {
                match self.g(&frag.graph) {
                    Some(w) => children.push((i, w)),
                    None => continue 'barriers,
                }
            }
            let (parts, relabel) = attach_from_barrier(&dec, children);
            return Some(FamilyWitness {
                family: Family::G,
                graph: g.clone(),
                x: None,
                recipe: Recipe::Attach {
                    core: dec.core.clone(),
                    parts,
                    a0: Vec::new(),
                    a1: Vec::new(),
                    relabel,
                },
            });
        }
        self.not_g.insert(key);
        None
    }

    fn n_target(&mut self, g: &Multigraph, target: Target) -> Option<FamilyWitness> {
        if is_theta(g) || !three_connected_cubic(g) {
            return None;
        }
        if find_nontrivial_barrier(g).is_none() {
            return (target == Target::All).then(|| base(Family::N, "brick", g.clone()));
        }
        let colors: Option<Vec<u32>> = match target {
            Target::All => None,
            Target::Vertex(u) => Some((0..g.order()).map(|v| u32::from(v == u)).collect()),
        };
        let key = canonical_labeling(g, colors.as_deref()).form;
        if self.not_n.contains(&key) {
            return None;
        }
        let mut candidates = Vec::new();
        if let Target::Vertex(u) = target {
            candidates.extend(barrier_isolating(g, u).filter(|b| !b.is_trivial()));
        }
        for b in barriers_from_pairs(g) {
            if !candidates.contains(&b) {
                candidates.push(b);
            }
        }
        'barriers: for b in candidates {
            let Ok(dec) = barrier_decomposition(g, &b) else {
                continue;
            };
            let trivial: Vec<usize> = (0..dec.components.len())
                .filter(|&i| dec.components[i].len() == 1)
                .collect();
            let a1 = match (target, trivial.as_slice()) {
                (Target::All, []) => Vec::new(),
                (Target::Vertex(u), [i]) if dec.components[*i][0] == u => vec![*i],
                _ => continue,
            };
            let mut children = Vec::new();
            let mut a0 = Vec::new();
            for (i, frag) in dec.fragments.iter().enumerate() {
                if a1.contains(&i) {
                    continue;
                }
                if let Some(w) = self.n_target(&frag.graph, Target::All) {
                    a0.push(i);
                    children.push((i, w));
                } else if let Some(w) =
                    self.n_target(&frag.graph, Target::Vertex(frag.contraction_vertex))
                {
                    children.push((i, w));
                } else {
                    continue 'barriers;
                }
            }
            let profile = profile_unchecked(&dec.core, Engine::Fast);
            let k = dec.components.len();
            if !(k..dec.core.order()).all(|b| a0.iter().any(|&a| profile.contains_pair(a, b))) {
                continue;
            }
            let (parts, relabel) = attach_from_barrier(&dec, children);
            let x = match target {
                Target::All => all(g.order()),
                Target::Vertex(u) => vec![u],
            };
            return Some(FamilyWitness {
                family: Family::N,
                graph: g.clone(),
                x: Some(x),
                recipe: Recipe::Attach {
                    core: dec.core.clone(),
                    parts,
                    a0,
                    a1,
                    relabel,
                },
            });
        }
        self.not_n.insert(key);
        None
    }

    /// A witness that `(g, x) ∈ 𝒩`, where `x` is all of `V(g)` or one vertex.
    pub fn n_with(&mut self, g: &Multigraph, x: &[usize]) -> Option<FamilyWitness> {
        if x == all(g.order()).as_slice() {
            self.n_target(g, Target::All)
        } else if let [u] = x {
            (*u < g.order())
                .then(|| self.n_target(g, Target::Vertex(*u)))
                .flatten()
        } else {
            None
        }
    }

    /// A witness that `(g, V)` or some `(g, {u})` is in `𝒩`.
    pub fn n(&mut self, g: &Multigraph) -> Option<FamilyWitness> {
        if let Some(w) = self.n_target(g, Target::All) {
            return Some(w);
        }
        (0..g.order()).find_map(|u| self.n_target(g, Target::Vertex(u)))
    }

    fn pieces(g: &Multigraph) -> Option<Vec<Multigraph>> {
        if !two_connected_cubic(g) {
            return None;
        }
        three_connected_pieces(g).ok()
    }

    pub fn kprime(&mut self, g: &Multigraph) -> bool {
        g.is_bipartite()
            && Self::pieces(g)
                .is_some_and(|ps| ps.iter().all(|p| is_theta(p) || self.k(p).is_some()))
    }

    pub fn l(&mut self, g: &Multigraph) -> bool {
        g.is_bipartite()
            && Self::pieces(g).is_some_and(|ps| {
                ps.iter()
                    .all(|p| is_theta(p) || recognize_j(p) || self.k(p).is_some())
            })
    }

    pub fn gprime(&mut self, g: &Multigraph) -> bool {
        Self::pieces(g).is_some_and(|ps| ps.iter().all(|p| p.is_bipartite() || self.g(p).is_some()))
    }

    pub fn nprime(&mut self, g: &Multigraph) -> bool {
        Self::pieces(g).is_some_and(|ps| ps.iter().all(|p| self.n_target(p, Target::All).is_some()))
    }
}

pub fn recognize_k(g: &Multigraph) -> Option<FamilyWitness> {
    Recognizer::new().k(g)
}

pub fn recognize_kprime(g: &Multigraph) -> bool {
    Recognizer::new().kprime(g)
}

pub fn recognize_l(g: &Multigraph) -> bool {
    Recognizer::new().l(g)
}

pub fn recognize_g(g: &Multigraph) -> Option<FamilyWitness> {
    Recognizer::new().g(g)
}

pub fn recognize_gprime(g: &Multigraph) -> bool {
    Recognizer::new().gprime(g)
}

pub fn recognize_n(g: &Multigraph) -> Option<FamilyWitness> {
    Recognizer::new().n(g)
}

pub fn recognize_nprime(g: &Multigraph) -> bool {
    Recognizer::new().nprime(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named::*;
    use crate::decomposition::invariants;
    use crate::lambda::lambda_profile;

    #[test]
    fn generated_witnesses_validate_and_are_recognized() {
        for d in 0..=3 {
            let k = gen_k(d);
            k.validate().unwrap();
            assert_eq!(k.graph.order(), 6 + 4 * d);
            assert!(recognize_k(&k.graph).unwrap().validate().is_ok());
            let g = gen_g(d);
            g.validate().unwrap();
            assert_eq!(g.graph.order(), 4 + 8 * d);
            assert!(recognize_g(&g.graph).unwrap().validate().is_ok());
            let n = gen_n(d);
            n.validate().unwrap();
            let found = Recognizer::new()
                .n_with(&n.graph, n.x.as_ref().unwrap())
                .unwrap();
            found.validate().unwrap();
            assert_eq!(
                found.replay().unwrap().sorted_edges(),
                n.graph.sorted_edges()
            );
        }
        let orders: Vec<usize> = (0..5).map(|d| gen_n(d).graph.order()).collect();
        assert_eq!(orders, vec![4, 10, 18, 24, 32]);
    }

    #[test]
    fn k_family_examples() {
        assert!(recognize_k(&k33()).is_some());
        assert!(recognize_k(&k33_splice_k33()).is_some());
        assert!(recognize_k(&cube()).is_none());
        assert!(recognize_j(&cube()));
        assert!(!recognize_j(&c4_cubic()));
        assert!(!recognize_j(&k33_splice_k33()));
        let p = lambda_profile(&k33_splice_k33()).unwrap();
        assert_eq!(p.rho, 21);
    }

    #[test]
    fn primed_families() {
        let g = k33_glue_theta_glue_k33();
        assert!(recognize_kprime(&g) && recognize_l(&g));
        let g = l_not_kprime();
        assert!(recognize_l(&g) && !recognize_kprime(&g));
        assert!(recognize_kprime(&k33()) && recognize_l(&k33()));
        assert!(recognize_gprime(&k4_glue_k33()));
        assert!(recognize_nprime(&nprime_example()));
        assert!(!recognize_nprime(&k4_glue_k33()));
    }

    #[test]
    fn g_family_examples() {
        assert!(recognize_g(&k4()).is_some());
        let w = recognize_g(&k33_splice_3k4()).unwrap();
        w.validate().unwrap();
        assert!(recognize_g(&k33_splice_k4()).is_none());
    }

    #[test]
    fn n_family_examples() {
        let g = k33_splice_2k4();
        let w = Recognizer::new().n_with(&g, &[0]).unwrap();
        w.validate().unwrap();
        assert_eq!(lambda_profile(&g).unwrap().lambda, 9);
        let w = Recognizer::new()
            .n_with(&lambda_gt_beta(), &all(18))
            .unwrap();
        w.validate().unwrap();
        assert!(recognize_n(&k33_splice_k4()).is_none());
        assert!(recognize_n(&theta()).is_none());
    }

    #[test]
    fn negative_family_small_orders() {
        for n in [12, 14, 16] {
            let g = gen_negative_family(n).unwrap();
            assert_eq!(g.order(), n);
            assert_eq!(lambda_profile(&g).unwrap().lambda, 6);
            assert!(!g.is_bipartite());
            assert_eq!(edge_connectivity(&g).unwrap(), 3);
        }
        assert!(gen_negative_family(11).is_err());
        assert!(gen_negative_family(10).is_err());
    }

    #[test]
    fn witness_round_trips_through_json() {
        let w = gen_n(2);
        let text = serde_json::to_string(&w).unwrap();
        let back: FamilyWitness = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
        back.validate().unwrap();
        assert_eq!(invariants(&w.graph).unwrap().beta, 16);
    }
}
