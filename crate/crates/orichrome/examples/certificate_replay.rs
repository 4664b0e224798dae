//! From an unbalanced orientation class to an explicit coloring
//! certificate over a finite field, and the converse for an uncolorable
//! graph.
//!
//! The chain: a nonzero class coefficient c picks a prime p dividing
//! neither c nor k; the least t with p^t = 1 (mod k) gives a field order
//! q = p^t; over GF(q) the reduced polynomial keeps a coefficient, hence
//! survives as a function; and restricting the variables to the k-th
//! roots of unity turns any nonvanishing point into a proper k-coloring.
//!
//! Run with: cargo run --example certificate_replay

use orichrome::criteria::select_prime_power;
use orichrome::field::{Field, FieldElement};
use orichrome::graph::Multigraph;
use orichrome::poly::{expanded_graph_polynomial, reduced_graph_polynomial};

fn palette_certificate(
    graph: &Multigraph,
    field: &Field,
    colors: &[FieldElement],
) -> Option<Vec<FieldElement>> {
    let edge_product = expanded_graph_polynomial(graph).unwrap();
    let n = graph.vertex_count();
    let mut picks = vec![0usize; n];
    loop {
        let point: Vec<FieldElement> = picks.iter().map(|&i| colors[i].clone()).collect();
        if !field
            .evaluate_polynomial(&edge_product, &point)
            .unwrap()
            .is_zero()
        {
            return Some(point);
        }
        let mut v = 0;
        loop {
            if v == n {
                return None;
            }
            picks[v] += 1;
            if picks[v] < colors.len() {
                break;
            }
            picks[v] = 0;
            v += 1;
        }
    }
}

fn main() {
    let k = 3;

    println!("=== positive direction: the triangle ===");
    let triangle = Multigraph::complete(3);
    let reduced = reduced_graph_polynomial(&triangle, k).unwrap();
    let (class, coefficient) = reduced.terms().next().expect("triangle has a witness");
    println!("witness class {class:?} with coefficient {coefficient}");

    let choice = select_prime_power(coefficient, k).unwrap();
    println!(
        "prime power: p = {}, t = {}, q = {} (q = 1 mod {k}, p divides neither {coefficient} nor {k})",
        choice.p, choice.t, choice.q
    );

    let field = Field::new(choice.p, choice.t).unwrap();
    println!("field: {field}");
    println!(
        "reduced polynomial identically zero over the field: {}",
        field.is_identically_zero(reduced.as_polynomial()).unwrap()
    );

    let colors = field.color_set(k).unwrap();
    let rendered: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
    println!("palette (k-th roots of unity): {{{}}}", rendered.join(", "));

    let point = palette_certificate(&triangle, &field, &colors)
        .expect("a nonvanishing palette assignment certifies the coloring");
    let names: Vec<String> = point.iter().map(|c| c.to_string()).collect();
    println!("certificate: vertex colors [{}]", names.join(", "));
    for &(u, v) in triangle.edges() {
        assert_ne!(point[u], point[v]);
    }
    println!("every edge sees two distinct palette values: proper 3-coloring\n");

    println!("=== negative direction: K4 ===");
    let k4 = Multigraph::complete(4);
    let reduced4 = reduced_graph_polynomial(&k4, k).unwrap();
    println!(
        "reduced polynomial of K4 at k = {k}: {} terms (total cancellation)",
        reduced4.term_count()
    );
    let choice4 = select_prime_power(1, k).unwrap();
    let field4 = Field::new(choice4.p, choice4.t).unwrap();
    println!(
        "identically zero over {}: {}",
        field4,
        field4
            .is_identically_zero(reduced4.as_polynomial())
            .unwrap()
    );
    let colors4 = field4.color_set(k).unwrap();
    println!(
        "palette assignment with nonvanishing edge product exists: {}",
        palette_certificate(&k4, &field4, &colors4).is_some()
    );
    println!("K4 admits no 3-coloring, and the field sees it");
}
