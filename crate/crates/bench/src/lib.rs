//! Shared workloads for the pipeline benchmarks.

use fanocheck::corpus::{gen_direct_sum, gen_pn};
use fanocheck::lattice_polytope::FanoPolytope;

/// Projective spaces `P^1..=P^max_dim`.
pub fn projective_spaces(max_dim: usize) -> Vec<(String, FanoPolytope)> {
    (1..=max_dim)
        .map(|n| (format!("P{n}"), gen_pn(n).expect("valid dimension")))
        .collect()
}

/// `(P^1)^k`, whose anticanonical polytope is the `k`-cube.
pub fn product_of_lines(k: usize) -> FanoPolytope {
    let line = gen_pn(1).expect("valid dimension");
    (1..k).fold(line.clone(), |acc, _| {
        gen_direct_sum(&acc, &line).expect("direct sum of smooth polytopes")
    })
}
