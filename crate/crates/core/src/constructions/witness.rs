//! Construction recipes certifying family membership.

use serde::{Deserialize, Serialize};

use crate::barrier::find_nontrivial_barrier;
use crate::canon::are_isomorphic;
use crate::connectivity::edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};
use crate::lambda::{partner_count, profile_unchecked, Engine};

use super::named::k33;
use super::ops::{splice, splice_many, Attachment, SpliceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    J,
    K,
    Kprime,
    L,
    G,
    Gprime,
    N,
    Nprime,
}

/// A graph together with how it is built from smaller members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyWitness {
    pub family: Family,
    pub graph: Multigraph,
    /// The second coordinate of an `𝒩` pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<usize>>,
    pub recipe: Recipe,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Recipe {
    /// `K3,3` for `𝒦`; a brick for `𝒢` and `𝒩`.
    Base { name: String },
    /// `(host ⊙ guest)` at the given vertices; `relabel[v]` renames vertex
    /// `v` of the splice result to its label in `graph`.
    Splice {
        host: Box<FamilyWitness>,
        host_vertex: usize,
        guest: Box<FamilyWitness>,
        guest_vertex: usize,
        pi: Vec<(EdgeId, EdgeId)>,
        relabel: Vec<usize>,
    },
    /// A bipartite core spliced at vertices of one class.
    Attach {
        core: Multigraph,
        parts: Vec<Part>,
        #[serde(default)]
        a0: Vec<usize>,
        #[serde(default)]
        a1: Vec<usize>,
        relabel: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Part {
    pub core_vertex: usize,
    pub witness: FamilyWitness,
    pub fragment_vertex: usize,
    pub pi: Vec<(EdgeId, EdgeId)>,
}

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

fn is_three_connected_cubic(g: &Multigraph) -> bool {
    g.is_cubic() && edge_connectivity(g).is_ok_and(|k| k >= 3)
}

fn is_brick(g: &Multigraph) -> bool {
    is_three_connected_cubic(g) && !g.is_bipartite() && find_nontrivial_barrier(g).is_none()
}

fn check_relabel(replayed: &Multigraph, relabel: &[usize], graph: &Multigraph) -> Result<()> {
    let renamed = replayed.relabel(relabel)?;
    if renamed.sorted_edges() != graph.sorted_edges() || renamed.order() != graph.order() {
        return fail("replaying the recipe does not reproduce the graph");
    }
    Ok(())
}

impl FamilyWitness {
    /// Rebuilds the graph from the recipe, relabeled to match `self.graph`.
    pub fn replay(&self) -> Result<Multigraph> {
        match &self.recipe {
            Recipe::Base { .. } => Ok(self.graph.clone()),
            Recipe::Splice {
                host,
                host_vertex,
                guest,
                guest_vertex,
                pi,
                relabel,
            } => {
                let out = splice(&SpliceSpec {
                    left: host.replay()?,
                    u: *host_vertex,
                    right: guest.replay()?,
                    v: *guest_vertex,
                    pi: pi.clone(),
                })?;
                out.graph.relabel(relabel)
            }
            Recipe::Attach {
                core,
                parts,
                relabel,
                ..
            } => {
                let mut atts = attachments(parts);
                for (att, p) in atts.iter_mut().zip(parts) {
                    att.part = p.witness.replay()?;
                }
                splice_many(core, &atts)?.graph.relabel(relabel)
            }
        }
    }

    /// Checks every condition of the family definition, recursively.
    pub fn validate(&self) -> Result<()> {
        match (&self.recipe, self.family) {
            (Recipe::Base { name }, Family::K) => {
                if name != "K33" || !are_isomorphic(&self.graph, &k33()) {
                    return fail("base of 𝒦 must be K3,3");
                }
                Ok(())
            }
            (Recipe::Base { name }, Family::G | Family::N) => {
                if name != "brick" || !is_brick(&self.graph) {
                    return fail("base must be a cubic brick");
                }
                if self.family == Family::N
                    && self.x.as_deref() != Some(&all(self.graph.order())[..])
                {
                    return fail("a brick pairs with its whole vertex set");
                }
                Ok(())
            }
            (
                Recipe::Splice {
                    host,
                    host_vertex,
                    guest,
                    guest_vertex,
                    pi,
                    relabel,
                },
                Family::K,
            ) => {
                if host.family != Family::K || guest.family != Family::K {
                    return fail("operands of a 𝒦 splice must be 𝒦 witnesses");
                }
                host.validate()?;
                guest.validate()?;
                if !matches!(guest.recipe, Recipe::Base { .. }) {
                    return fail("the guest of a 𝒦 splice must be K3,3");
                }
                if partner_count(&host.graph, *host_vertex)? != 3 {
                    return fail("𝒦 splices need partner count 3 at the host vertex");
                }
                let out = splice(&SpliceSpec {
                    left: host.graph.clone(),
                    u: *host_vertex,
                    right: guest.graph.clone(),
                    v: *guest_vertex,
                    pi: pi.clone(),
                })?;
                check_relabel(&out.graph, relabel, &self.graph)
            }
            (
                Recipe::Attach {
                    core,
                    parts,
                    a0,
                    a1,
                    relabel,
                },
                Family::G | Family::N,
            ) => self.validate_attach(core, parts, a0, a1, relabel),
            _ => fail(format!(
                "no recipe of this shape for family {:?}",
                self.family
            )),
        }
    }

    fn validate_attach(
        &self,
        core: &Multigraph,
        parts: &[Part],
        a0: &[usize],
        a1: &[usize],
        relabel: &[usize],
    ) -> Result<()> {
        let bip = core.bipartition().ok_or(Error::NotBipartite)?;
        if !is_three_connected_cubic(core) {
            return fail("the core must be a 3-connected cubic graph");
        }
        let n_core = core.order();
        let mut spliced = vec![false; n_core];
        for p in parts {
            if p.core_vertex >= n_core || spliced[p.core_vertex] {
                return fail("parts must sit at distinct core vertices");
            }
            spliced[p.core_vertex] = true;
            if p.witness.family != self.family {
                return fail("parts must be witnesses of the same family");
            }
            p.witness.validate()?;
        }
        let mut class: Vec<usize> = (0..n_core).filter(|&v| spliced[v]).collect();
        class.extend_from_slice(a1);
        class.sort_unstable();
        let side = match class.first() {
            Some(&v) if bip.in_a(v) => &bip.a,
            Some(_) => &bip.b,
            None => return fail("nothing spliced"),
        };
        if &class != side {
            return fail("spliced vertices and A1 must form one color class");
        }
        let out = splice_many(core, &attachments(parts))?;
        check_relabel(&out.graph, relabel, &self.graph)?;
        if self.family == Family::G {
            if !a0.is_empty() || !a1.is_empty() {
                return fail("𝒢 recipes carry no A0 or A1");
            }
            return Ok(());
        }
        if are_isomorphic(core, &super::named::theta()) {
            return fail("the core of an 𝒩 recipe must differ from Θ");
        }
        if a1.len() > 1 || a1.iter().any(|v| spliced[*v] || a0.contains(v)) {
            return fail("A1 must be at most one unspliced vertex");
        }
        for p in parts {
            let child_all = all(p.witness.graph.order());
            let want = if a0.contains(&p.core_vertex) {
                child_all
            } else {
                vec![p.fragment_vertex]
            };
            if p.witness.x.as_ref() != Some(&want) {
                return fail("part pairs do not match A0");
            }
        }
        if a0.iter().any(|v| !spliced[*v]) {
            return fail("A0 must be spliced");
        }
        let profile = profile_unchecked(core, Engine::Fast);
        let other: &Vec<usize> = if side == &bip.a { &bip.b } else { &bip.a };
        if !other
            .iter()
            .all(|&b| a0.iter().any(|&a| profile.contains_pair(a, b)))
        {
            return fail("A0 does not cover B through λ-matchable pairs");
        }
        let want_x = match a1.first() {
            None => all(self.graph.order()),
            Some(&a) => vec![relabel[out.core_map[a].expect("unspliced")]],
        };
        if self.x.as_ref() != Some(&want_x) {
            return fail("X does not match A1");
        }
        Ok(())
    }
}

pub(crate) fn all(n: usize) -> Vec<usize> {
    (0..n).collect()
}

pub(crate) fn attachments(parts: &[Part]) -> Vec<Attachment> {
    parts
        .iter()
        .map(|p| Attachment {
            core_vertex: p.core_vertex,
            part: p.witness.graph.clone(),
            part_vertex: p.fragment_vertex,
            pi: p.pi.clone(),
        })
        .collect()
}
