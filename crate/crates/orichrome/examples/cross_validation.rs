//! Three-way cross-validation on random multigraphs: census coefficients
//! against polynomial coefficients, and the decisive verdict against the
//! brute-force oracle.
//!
//! Run with: cargo run --example cross_validation

use orichrome::criteria::{cross_check, Caps};
use orichrome::graph::Multigraph;

/// Tiny deterministic linear congruential generator; the corpus is fixed
/// across runs.
struct Lcg(u64);

impl Lcg {
    fn next_below(&mut self, bound: u64) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 33) % bound
    }
}

fn main() {
    let caps = Caps::default();
    let mut rng = Lcg(0x5EED);
    let mut agreements = 0u32;
    let mut colorable = 0u32;
    let mut with_loops = 0u32;

    for round in 0..40 {
        let n = 2 + rng.next_below(5) as usize;
        let m = rng.next_below(11) as usize;
        let edges: Vec<(usize, usize)> = (0..m)
            .map(|_| {
                let u = rng.next_below(n as u64) as usize;
                // mostly proper edges, with the occasional loop kept in
                let v = if rng.next_below(12) == 0 {
                    u
                } else {
                    (u + 1 + rng.next_below(n as u64 - 1) as usize) % n
                };
                (u, v)
            })
            .collect();
        let graph = Multigraph::new(n, edges).unwrap();
        let k = 2 + (round % 3);

        let report = cross_check(&graph, k, &caps).unwrap();
        assert!(
            report.ok(),
            "engines disagree on {:?} at k={k}",
            graph.edges()
        );
        agreements += 1;
        if report.verdict.colorable {
            colorable += 1;
        }
        if graph.edges().iter().any(|(u, v)| u == v) {
            with_loops += 1;
        }

        if round < 6 {
            println!(
                "n={n} m={m:>2} k={k}: classes={:<3} poly terms={:<3} colorable={} (census = polynomial: {})",
                report.census_classes,
                report.polynomial_terms,
                report.verdict.colorable,
                if report.coefficients_match { "OK" } else { "FAIL" },
            );
        }
    }

    println!("...");
    println!(
        "{agreements} graphs cross-checked, {colorable} colorable, {with_loops} contained loops"
    );
    println!("census = polynomial and verdict = oracle everywhere");
}
