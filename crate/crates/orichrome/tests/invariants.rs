//! Cross-module invariants that tie the field machinery to the oracle.

use orichrome::census::ClassTable;
use orichrome::criteria::{
    find_coloring, necessary_profile, select_prime_power, DEFAULT_PROFILE_MODULI,
};
use orichrome::field::{Field, FieldElement};
use orichrome::graph::Multigraph;
use orichrome::poly::expanded_graph_polynomial;

fn four_vertex_family() -> Vec<Multigraph> {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    (0u32..64)
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            Multigraph::new(4, edges).unwrap()
        })
        .collect()
}

/// Some assignment of k-th roots of unity makes the edge product
/// nonvanishing exactly when a proper k-coloring exists: distinct palette
/// values per edge are what a nonzero product certifies.
#[test]
fn colorability_bridge_over_selected_fields() {
    for k in [2u32, 3] {
        let choice = select_prime_power(1, k).unwrap();
        let field = Field::new(choice.p, choice.t).unwrap();
        assert_eq!(field.order() % k as u64, 1);
        let colors = field.color_set(k).unwrap();

        let mut graphs = four_vertex_family();
        graphs.push(Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap());
        graphs.push(Multigraph::new(3, vec![(0, 1), (1, 1)]).unwrap());
        graphs.push(Multigraph::cycle(3));

        for graph in &graphs {
            let oracle = find_coloring(graph, k).is_some();
            let witnessed = palette_witness_exists(graph, &field, &colors);
            assert_eq!(
                oracle,
                witnessed,
                "bridge failed for k={k}, edges={:?}",
                graph.edges()
            );
        }
    }
}

fn palette_witness_exists(graph: &Multigraph, field: &Field, colors: &[FieldElement]) -> bool {
    let product = expanded_graph_polynomial(graph).unwrap();
    let n = graph.vertex_count();
    let mut picks = vec![0usize; n];
    loop {
        let point: Vec<FieldElement> = picks.iter().map(|&i| colors[i].clone()).collect();
        if !field
            .evaluate_polynomial(&product, &point)
            .unwrap()
            .is_zero()
        {
            return true;
        }
        let mut v = 0;
        loop {
            if v == n {
                return false;
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

/// Colorability forces every coprime profile row: whenever the oracle
/// colors the graph, each prime l coprime to k has a class with subclass
/// cardinalities distinct modulo l.
#[test]
fn coprime_profile_rows_satisfied_when_colorable() {
    let mut graphs = four_vertex_family();
    graphs.push(Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap());
    graphs.push(Multigraph::cycle(6));

    for graph in &graphs {
        for k in 1..=4u32 {
            if find_coloring(graph, k).is_none() {
                continue;
            }
            let table = ClassTable::build(graph, k).unwrap();
            let profile = necessary_profile(&table, DEFAULT_PROFILE_MODULI);
            for row in &profile.rows {
                if row.coprime_to_k {
                    assert!(
                        row.satisfied,
                        "k={k}, l={}, edges={:?}: colorable but coprime row unsatisfied",
                        row.l,
                        graph.edges()
                    );
                }
            }
        }
    }
}
