//! Graph ingestion: the plain edge-list format, the DIMACS `.col` subset,
//! format sniffing, and the canonical round trip.
//!
//! Run with: cargo run --example parse_formats

use orichrome::graph::{sniff_format, Multigraph};

fn main() {
    let edge_list = "\
# a triangle with a pendant vertex
4 4
1 2
1 3
2 3
3 4
";
    let dimacs = "\
c the same graph, DIMACS style
p edge 4 4
e 1 2
e 1 3
e 2 3
e 3 4
";

    println!("--- edge list ---\n{edge_list}");
    let a = Multigraph::parse_edge_list(edge_list).unwrap();
    println!(
        "parsed: {} vertices, {} edges",
        a.vertex_count(),
        a.edge_count()
    );

    println!("\n--- DIMACS ---\n{dimacs}");
    let b = Multigraph::parse_dimacs(dimacs).unwrap();
    println!(
        "parsed: {} vertices, {} edges",
        b.vertex_count(),
        b.edge_count()
    );
    println!("identical graphs: {}", a == b);
    println!(
        "sniffed formats: {:?} / {:?}",
        sniff_format(edge_list),
        sniff_format(dimacs)
    );

    // the stored edge order is the reference orientation, so the canonical
    // text reproduces the graph exactly
    println!("\n--- canonical text ---");
    let canonical = a.to_canonical_text();
    print!("{canonical}");
    assert_eq!(Multigraph::parse_edge_list(&canonical).unwrap(), a);
    println!("round trip: exact");

    // loops and parallel edges are first-class
    let multi = Multigraph::parse_edge_list("2 3\n1 1\n1 2\n1 2").unwrap();
    println!(
        "\nmultigraph with a loop and parallel edges: edges = {:?}",
        multi.edges()
    );

    // parse errors carry the offending line
    let broken = "3 2\n1 2\n1 9\n";
    println!(
        "\nbroken input rejects with: {}",
        Multigraph::parse_edge_list(broken).unwrap_err()
    );
}
