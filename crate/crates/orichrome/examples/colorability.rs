//! Colorability verdicts: the decisive census test, the one-sided
//! conditions, divisibility profiles, and the odd-k parity criterion.
//!
//! Run with: cargo run --example colorability

use orichrome::census::ClassTable;
use orichrome::criteria::{
    decide_colorable, find_coloring, necessary_profile, odd_k_parity, DEFAULT_PROFILE_MODULI,
};
use orichrome::graph::Multigraph;

fn inspect(name: &str, graph: &Multigraph, k: u32) {
    println!("--- {name}, k = {k} ---");
    let verdict = decide_colorable(graph, k).unwrap();
    println!(
        "colorable: {} (engine: {})",
        verdict.colorable, verdict.engine
    );
    if let Some(w) = &verdict.witness {
        println!(
            "witness: class {} with subclass difference {}",
            w.class, w.coefficient
        );
    }
    match find_coloring(graph, k) {
        Some(colors) => println!("oracle coloring: {colors:?}"),
        None => println!("oracle: no proper coloring"),
    }

    let table = ClassTable::build(graph, k).unwrap();
    let profile = necessary_profile(&table, DEFAULT_PROFILE_MODULI);
    let satisfied: Vec<u64> = profile
        .rows
        .iter()
        .filter(|r| r.satisfied)
        .map(|r| r.l)
        .collect();
    println!("profile satisfied at l in {satisfied:?}");
    if k % 2 == 1 {
        println!(
            "some class of odd cardinality: {}",
            odd_k_parity(&table).unwrap()
        );
    }
    println!();
}

fn main() {
    inspect("triangle", &Multigraph::complete(3), 3);
    inspect("K4", &Multigraph::complete(4), 3);
    inspect("C5, two colors", &Multigraph::cycle(5), 2);
    inspect("C4, two colors", &Multigraph::cycle(4), 2);
    inspect(
        "parallel pair",
        &Multigraph::parse_edge_list("2 2\n1 2\n1 2").unwrap(),
        2,
    );
    inspect("loop", &Multigraph::parse_edge_list("1 1\n1 1").unwrap(), 3);

    // with one color, only edgeless graphs survive
    inspect("two isolated vertices", &Multigraph::empty(2), 1);

    // the even cycle pins down the coprimality caveat: C4 is 2-colorable
    // yet the l = 2 row fails, because gcd(2, k) = 2
    let square = Multigraph::cycle(4);
    let table = ClassTable::build(&square, 2).unwrap();
    let row = &necessary_profile(&table, &[2]).rows[0];
    println!(
        "C4 at k=2, l=2: satisfied={}, coprime_to_k={} (necessity only binds coprime moduli)",
        row.satisfied, row.coprime_to_k
    );
}
