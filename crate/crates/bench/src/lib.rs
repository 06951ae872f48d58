//! Benchmark fixtures.

use cubmatch::constructions::{
    gen_g, gen_k, gen_negative_family, k33_splice_k33, lambda_gt_beta, petersen,
};
use cubmatch::Multigraph;

/// Named graphs of increasing order, each at least 2-connected.
pub fn fixtures() -> Vec<(String, Multigraph)> {
    let mut out = vec![
        ("petersen".to_string(), petersen()),
        ("k33_splice_k33".to_string(), k33_splice_k33()),
        ("lambda_gt_beta".to_string(), lambda_gt_beta()),
    ];
    for d in 1..=3 {
        out.push((format!("gen_k_{d}"), gen_k(d).graph));
        out.push((format!("gen_g_{d}"), gen_g(d).graph));
    }
    for n in [20, 40] {
        out.push((
            format!("negative_{n}"),
            gen_negative_family(n).expect("even order at least 12"),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_are_cubic() {
        for (name, g) in super::fixtures() {
            assert!(g.is_cubic(), "{name}");
        }
    }
}
