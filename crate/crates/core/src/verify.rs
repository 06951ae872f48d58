//! Checkers for the lower bounds on λ and ρ, their equality cases, and the
//! composition formulas across tight cuts, 2-cuts and barriers.
//!
//! Every checker returns a [`TheoremRecord`]; a failed bound is reported, not
//! raised. Preconditions that make a theorem inapplicable are errors.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::barrier::{all_barriers_exhaustive, barriers_from_pairs, Barrier};
use crate::canon::canonical_hash;
use crate::connectivity::{edge_connectivity, three_cuts, two_cuts};
use crate::constructions::{
    gen_g, gen_k, gen_n, gen_negative_family, generate_all_cubic, recognize_j, recognize_k,
    Recognizer,
};
use crate::decomposition::{
    contract, invariants, invariants_with, is_separating_cut, is_separating_cut_oracle,
    is_tight_cut, is_tight_cut_oracle, lambda_via_barrier, marked_components,
    nontrivial_tight_cuts, nontrivial_tight_cuts_oracle, tight_cut_decomposition_with,
    two_cut_case, two_cut_decomposition_with, InvariantBundle,
};
use crate::error::{Error, Result};
use crate::graph::{Cut, Multigraph};
use crate::lambda::{lambda_profile, lambda_profile_with, partner_count, Engine, LambdaProfile};

/// Outcome of one theorem on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRecord {
    pub theorem: String,
    pub values: BTreeMap<String, i64>,
    pub bound_holds: bool,
    pub equality_holds: bool,
    pub membership_agrees: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl TheoremRecord {
    fn new(theorem: &str) -> Self {
        TheoremRecord {
            theorem: theorem.to_string(),
            values: BTreeMap::new(),
            bound_holds: true,
            equality_holds: false,
            membership_agrees: true,
            oracle_agrees: None,
            failures: Vec::new(),
        }
    }

    fn set(&mut self, key: &str, value: usize) {
        self.values.insert(key.to_string(), value as i64);
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.bound_holds = false;
            self.failures.push(what.into());
        }
    }

    pub fn green(&self) -> bool {
        self.bound_holds && self.membership_agrees && self.oracle_agrees != Some(false)
    }
}

/// All records for one graph, identified by canonical hash.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub n: usize,
    pub records: Vec<TheoremRecord>,
    pub green: bool,
}

fn require_two_connected_cubic(g: &Multigraph) -> Result<usize> {
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
    Ok(k)
}

/// `λ ≥ β`, and the equality characterization: for 3-connected nonbipartite
/// graphs `λ = β ⇔ β = n ⇔ G ∈ 𝒢`, otherwise `λ = β ⇔ β = n_nonbip ⇔ G ∈ 𝒢′`.
pub fn check_lambda_bounds(g: &Multigraph) -> Result<TheoremRecord> {
    check_lambda_bounds_with(g, &mut Recognizer::new())
}

pub fn check_lambda_bounds_with(g: &Multigraph, rec: &mut Recognizer) -> Result<TheoremRecord> {
    let kappa = require_two_connected_cubic(g)?;
    let p = lambda_profile(g)?;
    let inv = invariants(g)?;
    let n = g.order();
    let mut r = TheoremRecord::new("lambda_lower_bound");
    r.set("n", n);
    r.set("lambda", p.lambda);
    r.set("beta", inv.beta);
    r.set("n_nonbip", inv.n_nonbip);
    r.require(p.lambda >= inv.beta, "lambda < beta");
    if g.is_bipartite() {
        r.require(
            p.lambda == 0 && inv.beta == 0,
            "bipartite graph with lambda or beta nonzero",
        );
    }
    let tight = p.lambda == inv.beta;
    r.equality_holds = tight;
    let (second, member) = if kappa >= 3 && !g.is_bipartite() {
        (inv.beta == n, rec.g(g).is_some())
    } else {
        (inv.beta == inv.n_nonbip, rec.gprime(g))
    };
    r.membership_agrees = tight == second && second == member;
    if !r.membership_agrees {
        r.failures.push(format!(
            "lambda=beta: {tight}, second condition: {second}, family: {member}"
        ));
    }
    let full = p.lambda == n;
    let in_nprime = rec.nprime(g);
    if full != in_nprime {
        r.membership_agrees = false;
        r.failures
            .push(format!("lambda=n: {full}, N' membership: {in_nprime}"));
    }
    Ok(r)
}

/// `ρ ≥ β′ + 3b′ − 3θ̄ + θ ≥ 3n − 9θ̄ − 5θ`, with the first equality exactly
/// on `ℒ` and both exactly on `𝒦′`.
pub fn check_rho_bounds(h: &Multigraph) -> Result<TheoremRecord> {
    check_rho_bounds_with(h, &mut Recognizer::new())
}

pub fn check_rho_bounds_with(h: &Multigraph, rec: &mut Recognizer) -> Result<TheoremRecord> {
    if !h.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    require_two_connected_cubic(h)?;
    let p = lambda_profile(h)?;
    let inv = invariants(h)?;
    let n = h.order() as i64;
    let (rho, bp, b1) = (p.rho as i64, inv.beta_prime as i64, inv.b_prime as i64);
    let (th, tb) = (inv.theta as i64, inv.theta_bar as i64);
    let mid = bp + 3 * b1 - 3 * tb + th;
    let low = 3 * n - 9 * tb - 5 * th;
    let mut r = TheoremRecord::new("rho_lower_bound");
    r.values.insert("rho".into(), rho);
    r.values.insert("middle".into(), mid);
    r.values.insert("lower".into(), low);
    r.values.insert("n".into(), n);
    r.values.insert("theta".into(), th);
    r.values.insert("theta_bar".into(), tb);
    r.require(rho >= mid, "rho below the brace bound");
    r.require(mid >= low, "brace bound below the order bound");
    let first = rho == mid;
    let both = first && mid == low;
    r.equality_holds = first;
    let in_l = rec.l(h);
    let in_kprime = rec.kprime(h);
    r.membership_agrees = first == in_l && both == in_kprime;
    if !r.membership_agrees {
        r.failures.push(format!(
            "first equality {first} vs L {in_l}; both {both} vs K' {in_kprime}"
        ));
    }
    if inv.theta == 0 && inv.theta_bar == 1 {
        let three = recognize_j(h) || recognize_k(h).is_some();
        if first != three {
            r.membership_agrees = false;
            r.failures.push(format!(
                "3-connected: first equality {first} vs J ∪ K {three}"
            ));
        }
    }
    Ok(r)
}

fn pair_set(
    p: &LambdaProfile,
    origin: impl Fn(usize) -> Option<usize>,
) -> BTreeSet<(usize, usize)> {
    p.pairs
        .iter()
        .filter_map(|&(a, b)| Some((origin(a)?, origin(b)?)))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

/// The tight-cut set and count formulas for `P(H)` over every nontrivial tight
/// cut, and `P(H) = P(H1) ⊍ P(H2)` over every 2-cut.
pub fn check_pair_composition(h: &Multigraph) -> Result<TheoremRecord> {
    if !h.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    require_two_connected_cubic(h)?;
    let whole = lambda_profile(h)?;
    let direct: BTreeSet<(usize, usize)> = whole.unordered_pairs().into_iter().collect();
    let mut r = TheoremRecord::new("pair_composition");
    r.set("rho", whole.rho);
    let cuts = nontrivial_tight_cuts(h)?;
    r.set("tight_cuts", cuts.len());
    for cut in &cuts {
        let h1 = contract(h, &cut.complement())?;
        let h2 = contract(h, cut.shore())?;
        let (xb, x) = (h1.contraction_vertex, h2.contraction_vertex);
        let p1 = lambda_profile(&h1.graph)?;
        let p2 = lambda_profile(&h2.graph)?;
        let mut formula = pair_set(&p1, |v| h1.vertex_origin[v]);
        let second = pair_set(&p2, |v| h2.vertex_origin[v]);
        let overlap = formula.intersection(&second).count();
        formula.extend(second);
        let partners = |p: &LambdaProfile, c: usize| -> Vec<usize> {
            p.unordered_pairs()
                .into_iter()
                .filter_map(|(a, b)| {
                    if a == c {
                        Some(b)
                    } else if b == c {
                        Some(a)
                    } else {
                        None
                    }
                })
                .collect()
        };
        let w1 = partners(&p1, xb);
        let u2 = partners(&p2, x);
        for &w in &w1 {
            for &u in &u2 {
                let (a, b) = (
                    h1.vertex_origin[w].expect("kept"),
                    h2.vertex_origin[u].expect("kept"),
                );
                formula.insert((a.min(b), a.max(b)));
            }
        }
        r.require(
            overlap == 0,
            format!("overlapping parts for tight cut {:?}", cut.shore()),
        );
        r.require(
            formula == direct,
            format!("set formula fails for tight cut {:?}", cut.shore()),
        );
        let (l1, l2) = (partner_count(&h1.graph, xb)?, partner_count(&h2.graph, x)?);
        let count = p1.rho + p2.rho + l1 * l2 - l1 - l2;
        r.require(
            count == whole.rho,
            format!(
                "count formula gives {count} for tight cut {:?}",
                cut.shore()
            ),
        );
    }
    let cuts2 = two_cuts(h)?;
    r.set("two_cuts", cuts2.len());
    for cut in &cuts2 {
        let (g1, g2) = marked_components(h, cut)?;
        let p1 = pair_set(&lambda_profile(&g1.graph)?, |v| Some(g1.vertex_origin[v]));
        let p2 = pair_set(&lambda_profile(&g2.graph)?, |v| Some(g2.vertex_origin[v]));
        let mut union = p1.clone();
        union.extend(p2.iter().copied());
        let disjoint = p1.len() + p2.len() == union.len();
        r.require(
            disjoint && union == direct,
            format!("2-cut additivity fails for {:?}", cut.shore()),
        );
    }
    r.equality_holds = r.bound_holds;
    Ok(r)
}

fn barriers_to_check(g: &Multigraph) -> Result<Vec<Barrier>> {
    if g.order() <= 14 {
        Ok(all_barriers_exhaustive(g)?
            .into_iter()
            .filter(|b| !b.is_empty())
            .collect())
    } else {
        Ok(barriers_from_pairs(g))
    }
}

/// Λ across separating 3-cuts (one direction), across 2-cuts (exactly), and
/// through the barrier formula for every nonempty barrier of a 3-connected graph.
pub fn check_vertex_composition(g: &Multigraph) -> Result<TheoremRecord> {
    let kappa = require_two_connected_cubic(g)?;
    let whole = lambda_profile(g)?;
    let lambda: BTreeSet<usize> = whole.lambda_set.iter().copied().collect();
    let mut r = TheoremRecord::new("vertex_composition");
    r.set("lambda", whole.lambda);
    let mut separating = 0;
    for cut in three_cuts(g)? {
        if cut.is_trivial() || !is_separating_cut(g, &cut)? {
            continue;
        }
        separating += 1;
        for shrink in [cut.complement(), cut.shore().to_vec()] {
            let c = contract(g, &shrink)?;
            let p = lambda_profile(&c.graph)?;
            for v in p.lambda_set {
                if let Some(old) = c.vertex_origin[v] {
                    r.require(
                        lambda.contains(&old),
                        format!("vertex {old} lost across separating cut"),
                    );
                }
            }
        }
    }
    r.set("separating_cuts", separating);
    let cuts2 = two_cuts(g)?;
    r.set("two_cuts", cuts2.len());
    for cut in &cuts2 {
        let (g1, g2) = marked_components(g, cut)?;
        let mut union = BTreeSet::new();
        for m in [&g1, &g2] {
            for v in lambda_profile(&m.graph)?.lambda_set {
                union.insert(m.vertex_origin[v]);
            }
        }
        r.require(
            union == lambda,
            format!("2-cut additivity of Λ fails for {:?}", cut.shore()),
        );
    }
    if kappa >= 3 && g.order() > 2 {
        let barriers = barriers_to_check(g)?;
        r.set("barriers", barriers.len());
        for b in &barriers {
            let formula = lambda_via_barrier(g, b)?;
            r.require(
                formula == whole.lambda_set,
                format!("barrier formula fails for {:?}", b.vertices()),
            );
        }
    }
    r.equality_holds = r.bound_holds;
    Ok(r)
}

/// B* and the counting invariants across every 2-cut.
pub fn check_two_cut_invariants(g: &Multigraph) -> Result<TheoremRecord> {
    require_two_connected_cubic(g)?;
    let mut r = TheoremRecord::new("two_cut_invariants");
    let cuts = two_cuts(g)?;
    r.set("two_cuts", cuts.len());
    for cut in &cuts {
        let check = two_cut_case(g, cut)?;
        r.require(
            check.bricks_and_braces,
            format!("B* identity fails for {:?}", cut.shore()),
        );
        r.require(
            check.additive,
            format!("invariants not additive over {:?}", cut.shore()),
        );
    }
    r.equality_holds = r.bound_holds;
    Ok(r)
}

/// Leaf multisets do not depend on the first cut chosen.
pub fn check_decomposition_uniqueness(g: &Multigraph) -> Result<TheoremRecord> {
    require_two_connected_cubic(g)?;
    let mut r = TheoremRecord::new("decomposition_uniqueness");
    let tight = nontrivial_tight_cuts(g)?;
    r.set("tight_first_cuts", tight.len());
    if tight.len() >= 2 {
        let base = tight_cut_decomposition_with(g, Engine::Fast, None)?.leaf_forms();
        for cut in &tight {
            let forms = tight_cut_decomposition_with(g, Engine::Fast, Some(cut))?.leaf_forms();
            r.require(
                forms == base,
                format!("tight leaves differ starting at {:?}", cut.shore()),
            );
        }
    }
    let cuts2 = two_cuts(g)?;
    r.set("two_cut_first_cuts", cuts2.len());
    if cuts2.len() >= 2 {
        let base = two_cut_decomposition_with(g, Engine::Fast, None)?.leaf_forms();
        for cut in &cuts2 {
            let forms = two_cut_decomposition_with(g, Engine::Fast, Some(cut))?.leaf_forms();
            r.require(
                forms == base,
                format!("pieces differ starting at {:?}", cut.shore()),
            );
        }
    }
    r.equality_holds = r.bound_holds;
    Ok(r)
}

/// Fast path against the enumeration oracle: tight and separating decisions,
/// λ/ρ profiles and every invariant.
pub fn check_oracle_agreement(g: &Multigraph) -> Result<TheoremRecord> {
    require_two_connected_cubic(g)?;
    let mut r = TheoremRecord::new("oracle_agreement");
    let mut agree = true;
    let canon = |cs: Vec<Cut>| -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = cs.iter().map(|c| c.canonical().shore().to_vec()).collect();
        v.sort();
        v
    };
    let fast_cuts = canon(nontrivial_tight_cuts(g)?);
    let oracle_cuts = canon(nontrivial_tight_cuts_oracle(g)?);
    if fast_cuts != oracle_cuts {
        agree = false;
        r.failures.push("nontrivial tight cut lists differ".into());
    }
    r.set("tight_cuts", fast_cuts.len());
    for cut in three_cuts(g)? {
        if is_tight_cut(g, &cut)? != is_tight_cut_oracle(g, &cut)? {
            agree = false;
            r.failures
                .push(format!("tightness differs on {:?}", cut.shore()));
        }
        if is_separating_cut(g, &cut)? != is_separating_cut_oracle(g, &cut)? {
            agree = false;
            r.failures
                .push(format!("separation differs on {:?}", cut.shore()));
        }
    }
    let fast = lambda_profile_with(g, Engine::Fast)?;
    if fast != lambda_profile_with(g, Engine::Oracle)? {
        agree = false;
        r.failures.push("λ/ρ profiles differ".into());
    }
    r.set("lambda", fast.lambda);
    r.set("rho", fast.rho);
    let inv: InvariantBundle = invariants_with(g, Engine::Fast)?;
    if inv != invariants_with(g, Engine::Oracle)? {
        agree = false;
        r.failures.push("invariant bundles differ".into());
    }
    r.oracle_agrees = Some(agree);
    r.equality_holds = agree;
    Ok(r)
}

/// `pq − p − q ≥ 3` for `p, q ≥ 3`, with equality exactly at `p = q = 3`.
pub fn check_technical_inequality(p: u64, q: u64) -> Result<bool> {
    if p < 3 || q < 3 {
        return Err(Error::InvalidArgument(format!(
            "need p, q >= 3, got {p}, {q}"
        )));
    }
    let value = p * q - p - q;
    Ok(value >= 3 && ((value == 3) == (p == 3 && q == 3)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Run the enumeration oracle on graphs up to this order.
    pub oracle_max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { oracle_max_n: 12 }
    }
}

/// Runs every applicable checker on one 2-connected cubic graph.
pub fn verify_graph(g: &Multigraph, opts: &VerifyOptions) -> Result<VerificationReport> {
    verify_graph_with(g, opts, &mut Recognizer::new())
}

fn verify_graph_with(
    g: &Multigraph,
    opts: &VerifyOptions,
    rec: &mut Recognizer,
) -> Result<VerificationReport> {
    let mut records = vec![check_lambda_bounds_with(g, rec)?];
    if g.is_bipartite() {
        records.push(check_rho_bounds_with(g, rec)?);
        records.push(check_pair_composition(g)?);
    }
    records.push(check_vertex_composition(g)?);
    records.push(check_two_cut_invariants(g)?);
    records.push(check_decomposition_uniqueness(g)?);
    if g.order() <= opts.oracle_max_n {
        records.push(check_oracle_agreement(g)?);
    }
    let green = records.iter().all(TheoremRecord::green);
    Ok(VerificationReport {
        id: canonical_hash(g),
        n: g.order(),
        records,
        green,
    })
}

/// Which graphs to verify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Corpus {
    /// Every connected cubic multigraph of even order `2..=max_n` with edge
    /// connectivity at least `min_kappa` (at least 2).
    Exhaustive {
        max_n: usize,
        min_kappa: usize,
    },
    /// Generated members of `𝒦`, `𝒢`, `𝒩` up to `depth`, and the negative
    /// family for orders 12 to 20.
    Families {
        depth: usize,
    },
    Graphs(Vec<Multigraph>),
}

impl Corpus {
    pub fn graphs(&self) -> Result<Vec<Multigraph>> {
        match self {
            Corpus::Exhaustive { max_n, min_kappa } => {
                let mut out = Vec::new();
                for n in (2..=*max_n).step_by(2) {
                    out.extend(generate_all_cubic(n, (*min_kappa).max(2))?);
                }
                Ok(out)
            }
            Corpus::Families { depth } => {
                let mut out = Vec::new();
                for d in 0..=*depth {
                    out.push(gen_k(d).graph);
                    out.push(gen_g(d).graph);
                    out.push(gen_n(d).graph);
                }
                for n in (12..=20).step_by(2) {
                    out.push(gen_negative_family(n)?);
                }
                Ok(out)
            }
            Corpus::Graphs(gs) => Ok(gs.clone()),
        }
    }
}

/// Verifies every graph of the corpus in parallel; reports are sorted by id.
pub fn run_corpus(corpus: &Corpus, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let graphs = corpus.graphs()?;
    let mut reports = graphs
        .par_iter()
        .map_init(Recognizer::new, |rec, g| verify_graph_with(g, opts, rec))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.id.cmp(&b.id).then(a.n.cmp(&b.n)));
    Ok(reports)
}

/// Aggregate counts over a report stream.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub graphs: usize,
    pub green: usize,
    pub red: usize,
    /// Failing record count per theorem.
    pub failures: BTreeMap<String, usize>,
}

pub fn summarize(reports: &[VerificationReport]) -> CorpusSummary {
    let mut s = CorpusSummary {
        graphs: reports.len(),
        ..Default::default()
    };
    for r in reports {
        if r.green {
            s.green += 1;
        } else {
            s.red += 1;
        }
        for rec in r.records.iter().filter(|x| !x.green()) {
            *s.failures.entry(rec.theorem.clone()).or_default() += 1;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    #[test]
    fn technical_inequality() {
        assert!(check_technical_inequality(3, 3).unwrap());
        assert!(check_technical_inequality(3, 4).unwrap());
        assert!(check_technical_inequality(4, 4).unwrap());
        assert!(check_technical_inequality(2, 5).is_err());
    }

    #[test]
    fn k33_splice_k4_lambda_record() {
        let r = check_lambda_bounds(&k33_splice_k4()).unwrap();
        assert_eq!(r.values["lambda"], 6);
        assert_eq!(r.values["beta"], 4);
        assert!(!r.equality_holds && r.green());
    }

    #[test]
    fn k4_glue_k33_records() {
        let g = k4_glue_k33();
        let r = check_lambda_bounds(&g).unwrap();
        assert_eq!(
            (r.values["lambda"], r.values["beta"], r.values["n_nonbip"]),
            (4, 4, 4)
        );
        assert!(r.equality_holds && r.green());
        assert!(check_vertex_composition(&g).unwrap().green());
    }

    #[test]
    fn rho_records() {
        let r = check_rho_bounds(&k33()).unwrap();
        assert_eq!(
            (r.values["rho"], r.values["middle"], r.values["lower"]),
            (9, 9, 9)
        );
        let r = check_rho_bounds(&k33_glue_theta_glue_k33()).unwrap();
        assert_eq!(
            (r.values["rho"], r.values["middle"], r.values["lower"]),
            (19, 19, 19)
        );
        assert!(r.green());
        assert!(check_rho_bounds(&k4()).is_err());
    }

    #[test]
    fn pair_composition_examples() {
        for g in [
            k33_splice_k33(),
            cube_splice_k33(),
            k33_glue_theta_glue_k33(),
        ] {
            let r = check_pair_composition(&g).unwrap();
            assert!(r.green(), "{:?}", r.failures);
        }
        assert_eq!(
            check_pair_composition(&cube_splice_k33()).unwrap().values["rho"],
            30
        );
    }

    #[test]
    fn report_is_green_on_fixtures() {
        for name in [
            "K4", "K33", "C4cubic", "K33sK4", "K4gK33", "Petersen", "CubesK33",
        ] {
            let rep = verify_graph(&named(name).unwrap(), &VerifyOptions::default()).unwrap();
            assert!(rep.green, "{name}: {:?}", rep.records);
        }
    }
}
