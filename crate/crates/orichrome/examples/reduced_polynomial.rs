//! The polynomial engine: edge-difference factors, maximal exponent
//! reduction, and the reduced graph polynomial whose coefficients mirror
//! the orientation census.
//!
//! Run with: cargo run --example reduced_polynomial

use orichrome::graph::Multigraph;
use orichrome::poly::{
    expanded_graph_polynomial, factor_list, reduce_exponent, reduced_graph_polynomial, Polynomial,
};

fn main() {
    println!("--- exponent rewriting ---");
    // scheme x^j -> x^i sends e to the least value >= i congruent mod j - i
    for (e, i, j) in [(5, 0, 3), (7, 1, 5), (0, 0, 3)] {
        println!(
            "scheme x^{j} -> x^{i}: {e} |-> {}",
            reduce_exponent(e, i, j).unwrap()
        );
    }

    println!("\n--- the canonical cancellation ---");
    // x^q - x collapses to 0 under x^q -> x^1: reduction implements the
    // field identity a^q = a at the level of formal polynomials
    let q = 5;
    let fermat = Polynomial::from_terms(1, [(vec![q], 1), (vec![1], -1)]).unwrap();
    println!(
        "x^{q} - x reduced by x^{q} -> x^1: {}",
        fermat.reduce(1, q).unwrap().to_text().trim()
    );

    println!("\n--- K3 ---");
    let triangle = Multigraph::complete(3);
    println!("factors: {:?}", factor_list(&triangle));
    let expanded = expanded_graph_polynomial(&triangle).unwrap();
    println!("expanded product ({} terms):", expanded.term_count());
    print!("{}", expanded.to_text());
    let reduced = reduced_graph_polynomial(&triangle, 3).unwrap();
    println!("reduced modulo 3 ({} terms):", reduced.term_count());
    print!("{}", reduced.to_text());
    println!(
        "sum over all coefficients (value at the all-ones point): {}",
        reduced.as_polynomial().evaluate_int(&[1, 1, 1]).unwrap()
    );

    println!("\n--- a loop kills everything ---");
    let looped = Multigraph::parse_edge_list("2 2\n1 2\n2 2").unwrap();
    let dead = reduced_graph_polynomial(&looped, 3).unwrap();
    println!("graph with a loop, k=3: {}", dead.to_text().trim());

    println!("\n--- incremental reduction is exact ---");
    // reducing after every factor multiplication equals reducing the full
    // expansion once; the former keeps at most k^n live terms
    let square = Multigraph::cycle(4);
    let incremental = reduced_graph_polynomial(&square, 2).unwrap();
    let at_once = expanded_graph_polynomial(&square)
        .unwrap()
        .reduce(0, 2)
        .unwrap();
    println!(
        "C4 mod 2, both routes agree: {}",
        *incremental.as_polynomial() == at_once
    );
    print!("{}", incremental.to_text());

    println!("\n--- JSON dump ---");
    println!(
        "{}",
        serde_json::to_string_pretty(&incremental.dump()).unwrap()
    );
}
