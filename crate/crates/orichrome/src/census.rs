//! Exhaustive orientation census: classify all `2^m` orientations of a
//! multigraph by their out-degree residues modulo `k`, split each class
//! into its two agreement-parity subclasses, and tally cardinalities.
//!
//! Two orientations land in the same class when their out-degree functions
//! agree at every vertex modulo `k`; within a class, the even-parity and
//! odd-parity orientations form the pair of adjacent subclasses. The signed
//! difference `agree - disagree` of a class equals the integer coefficient
//! of the matching monomial in the reduced graph polynomial, which is the
//! identity the whole artifact hinges on and which the test suite checks
//! engine-against-engine.
//!
//! Enumeration walks flip masks `0..2^m` (bit `e` = edge `e` reversed) with
//! incremental out-degree updates. Tallies are additive, so any partition
//! of the mask range merges to the identical table; [`ClassTable::build_parallel`]
//! exploits that and is byte-for-byte equivalent to the sequential build.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Multigraph, Orientation};

/// Largest edge count enumerated by default; `2^24` orientations keep every
/// tally comfortably inside native integers and desk-scale runtimes.
pub const DEFAULT_EDGE_CAP: u32 = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("modulus must be at least 1")]
    InvalidModulus,
    #[error("graph has {edges} edges, enumeration cap is {cap}; use the polynomial engine")]
    EdgeCapExceeded { edges: usize, cap: u32 },
}

/// Out-degree vector reduced componentwise modulo `k`; the key of an
/// orientation equivalence class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ResidueVector(Vec<u32>);

impl ResidueVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ResidueVector(entries)
    }

    /// The class key of one orientation: out-degrees reduced modulo `k`.
    pub fn of(orientation: &Orientation<'_>, k: u32) -> Self {
        assert!(k >= 1, "modulus must be at least 1");
        ResidueVector(orientation.out_degrees().iter().map(|&d| d % k).collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u32>> for ResidueVector {
    fn from(entries: Vec<u32>) -> Self {
        ResidueVector(entries)
    }
}

impl fmt::Display for ResidueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Cardinalities of the two adjacent subclasses of one class: orientations
/// agreeing with the reference (even flip parity) and disagreeing (odd).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubclassSizes {
    pub agree: u64,
    pub disagree: u64,
}

impl SubclassSizes {
    pub fn total(&self) -> u64 {
        self.agree + self.disagree
    }

    /// `agree - disagree`: the census-side value of the class coefficient.
    pub fn difference(&self) -> i64 {
        self.agree as i64 - self.disagree as i64
    }
}

/// The census of one multigraph at one modulus: every nonempty orientation
/// class with its adjacent-subclass cardinalities.
///
/// Immutable once built; iteration is lexicographic on residue vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTable {
    k: u32,
    vertices: usize,
    edges: usize,
    classes: BTreeMap<ResidueVector, SubclassSizes>,
}

impl ClassTable {
    /// Enumerates all orientations sequentially, with the default edge cap.
    pub fn build(graph: &Multigraph, k: u32) -> Result<Self, CensusError> {
        Self::build_capped(graph, k, DEFAULT_EDGE_CAP)
    }

    /// Enumerates all orientations sequentially under an explicit edge cap.
    pub fn build_capped(graph: &Multigraph, k: u32, edge_cap: u32) -> Result<Self, CensusError> {
        Self::check(graph, k, edge_cap)?;
        let total = 1u64 << graph.edge_count();
        let tally = tally_range(graph, k, 0, total);
        Ok(Self::assemble(graph, k, [tally]))
    }

    /// Same table as [`ClassTable::build`], computed by `threads` workers
    /// over disjoint mask ranges. Merging is additive, so the result is
    /// identical to the sequential build down to the serialized bytes.
    pub fn build_parallel(graph: &Multigraph, k: u32, threads: usize) -> Result<Self, CensusError> {
        Self::check(graph, k, DEFAULT_EDGE_CAP)?;
        let threads = threads.max(1) as u64;
        let total = 1u64 << graph.edge_count();
        let chunk = total.div_ceil(threads);
        let tallies = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for worker in 0..threads {
                let lo = (worker * chunk).min(total);
                let hi = ((worker + 1) * chunk).min(total);
                handles.push(scope.spawn(move || tally_range(graph, k, lo, hi)));
            }
            handles
                .into_iter()
                .map(|h| h.join().expect("census worker panicked"))
                .collect::<Vec<_>>()
        });
        Ok(Self::assemble(graph, k, tallies))
    }

    fn check(graph: &Multigraph, k: u32, edge_cap: u32) -> Result<(), CensusError> {
        if k == 0 {
            return Err(CensusError::InvalidModulus);
        }
        let edges = graph.edge_count();
        if edges as u32 > edge_cap || edges >= 63 {
            return Err(CensusError::EdgeCapExceeded {
                edges,
                cap: edge_cap.min(62),
            });
        }
        Ok(())
    }

    fn assemble(
        graph: &Multigraph,
        k: u32,
        tallies: impl IntoIterator<Item = HashMap<Vec<u32>, SubclassSizes>>,
    ) -> Self {
        let mut classes: BTreeMap<ResidueVector, SubclassSizes> = BTreeMap::new();
        for tally in tallies {
            for (key, sizes) in tally {
                let slot = classes.entry(ResidueVector(key)).or_default();
                slot.agree += sizes.agree;
                slot.disagree += sizes.disagree;
            }
        }
        ClassTable {
            k,
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            classes,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Classes in lexicographic residue order.
    pub fn iter(&self) -> impl Iterator<Item = (&ResidueVector, &SubclassSizes)> {
        self.classes.iter()
    }

    pub fn get(&self, class: &ResidueVector) -> Option<SubclassSizes> {
        self.classes.get(class).copied()
    }

    /// Total orientations tallied; always `2^m`.
    pub fn total_orientations(&self) -> u64 {
        self.classes.values().map(SubclassSizes::total).sum()
    }

    /// Signed subclass difference per class: `agree - disagree`, zero
    /// entries kept.
    ///
    /// Class by class, this is the coefficient table of the reduced graph
    /// polynomial (same graph, same `k`), including the cancelled classes.
    pub fn coefficients(&self) -> BTreeMap<ResidueVector, i64> {
        self.classes
            .iter()
            .map(|(class, sizes)| (class.clone(), sizes.difference()))
            .collect()
    }

    /// As [`ClassTable::coefficients`] but with the zero entries dropped,
    /// matching the sparse polynomial representation.
    pub fn nonzero_coefficients(&self) -> BTreeMap<ResidueVector, i64> {
        self.classes
            .iter()
            .filter_map(|(class, sizes)| {
                let d = sizes.difference();
                (d != 0).then(|| (class.clone(), d))
            })
            .collect()
    }

    /// Deterministic text listing: one row per class in lexicographic
    /// residue order.
    pub fn to_text(&self) -> String {
        use fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "k={} vertices={} edges={} orientations={} classes={}",
            self.k,
            self.vertices,
            self.edges,
            self.total_orientations(),
            self.class_count()
        );
        for (class, sizes) in self.iter() {
            let _ = writeln!(
                out,
                "{class} agree={} disagree={} diff={}",
                sizes.agree,
                sizes.disagree,
                sizes.difference()
            );
        }
        out
    }

    /// Serializable dump; `dump.restore()` round-trips.
    pub fn dump(&self) -> ClassTableDump {
        ClassTableDump {
            k: self.k,
            vertices: self.vertices,
            edges: self.edges,
            rows: self
                .iter()
                .map(|(class, sizes)| ClassRow {
                    class: class.entries().to_vec(),
                    agree: sizes.agree,
                    disagree: sizes.disagree,
                    difference: sizes.difference(),
                })
                .collect(),
        }
    }
}

/// Flat serializable form of a [`ClassTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTableDump {
    pub k: u32,
    pub vertices: usize,
    pub edges: usize,
    pub rows: Vec<ClassRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub class: Vec<u32>,
    pub agree: u64,
    pub disagree: u64,
    pub difference: i64,
}

impl ClassTableDump {
    pub fn restore(&self) -> ClassTable {
        ClassTable {
            k: self.k,
            vertices: self.vertices,
            edges: self.edges,
            classes: self
                .rows
                .iter()
                .map(|row| {
                    (
                        ResidueVector::new(row.class.clone()),
                        SubclassSizes {
                            agree: row.agree,
                            disagree: row.disagree,
                        },
                    )
                })
                .collect(),
        }
    }
}

/// Tallies the orientations with flip masks in `[lo, hi)`.
///
/// Walks masks in increasing order, updating out-degrees only on the bits
/// that change between consecutive masks (amortized O(1) per mask).
fn tally_range(graph: &Multigraph, k: u32, lo: u64, hi: u64) -> HashMap<Vec<u32>, SubclassSizes> {
    let mut tally: HashMap<Vec<u32>, SubclassSizes> = HashMap::new();
    if lo >= hi {
        return tally;
    }
    let edges = graph.edges();
    let n = graph.vertex_count();

    // State for the current mask, seeded from `lo`.
    let mut out_degrees = vec![0u32; n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        if u == v || lo & (1 << e) == 0 {
            out_degrees[u] += 1;
        } else {
            out_degrees[v] += 1;
        }
    }
    let mut residues: Vec<u32> = out_degrees.iter().map(|&d| d % k).collect();
    let mut odd_parity = lo.count_ones() % 2 == 1;

    let mut mask = lo;
    loop {
        let slot = match tally.get_mut(&residues) {
            Some(slot) => slot,
            None => tally.entry(residues.clone()).or_default(),
        };
        if odd_parity {
            slot.disagree += 1;
        } else {
            slot.agree += 1;
        }

        mask += 1;
        if mask >= hi {
            break;
        }
        let mut changed = mask ^ (mask - 1);
        while changed != 0 {
            let e = changed.trailing_zeros() as usize;
            changed &= changed - 1;
            odd_parity = !odd_parity;
            let (u, v) = edges[e];
            if u == v {
                continue; // a loop keeps its out-degree under both orientations
            }
            let (from, to) = if mask & (1 << e) != 0 { (u, v) } else { (v, u) };
            out_degrees[from] -= 1;
            out_degrees[to] += 1;
            residues[from] = out_degrees[from] % k;
            residues[to] = out_degrees[to] % k;
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::reduced_graph_polynomial;
    use proptest::prelude::*;

    fn rv(entries: &[u32]) -> ResidueVector {
        ResidueVector::new(entries.to_vec())
    }

    fn sizes(agree: u64, disagree: u64) -> SubclassSizes {
        SubclassSizes { agree, disagree }
    }

    /// Exact cross-engine comparison: nonzero census differences must be the
    /// polynomial's term table, and cancelled classes must be absent there.
    fn assert_matches_polynomial(graph: &Multigraph, k: u32) {
        let table = ClassTable::build(graph, k).unwrap();
        let poly = reduced_graph_polynomial(graph, k).unwrap();
        let census: Vec<(Vec<u32>, i64)> = table
            .nonzero_coefficients()
            .into_iter()
            .map(|(class, diff)| (class.entries().to_vec(), diff))
            .collect();
        let terms: Vec<(Vec<u32>, i64)> = poly.terms().map(|(e, c)| (e.clone(), c)).collect();
        assert_eq!(census, terms, "census/polynomial mismatch for k={k}");
    }

    #[test]
    fn residue_class_examples() {
        let k3 = Multigraph::complete(3);
        assert_eq!(
            ResidueVector::of(&k3.reference_orientation(), 3),
            rv(&[2, 1, 0])
        );

        // cyclic orientation 1->2, 2->3, 3->1: flip only the (1,3) edge
        let cyclic = k3.orientation(vec![false, true, false]).unwrap();
        assert_eq!(ResidueVector::of(&cyclic, 3), rv(&[1, 1, 1]));

        let c4 = Multigraph::cycle(4);
        assert_eq!(
            ResidueVector::of(&c4.reference_orientation(), 2),
            rv(&[1, 1, 1, 1])
        );
    }

    #[test]
    fn single_edge_table() {
        let g = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let table = ClassTable::build(&g, 2).unwrap();
        assert_eq!(table.class_count(), 2);
        assert_eq!(table.get(&rv(&[1, 0])), Some(sizes(1, 0)));
        assert_eq!(table.get(&rv(&[0, 1])), Some(sizes(0, 1)));
        let coeffs = table.coefficients();
        assert_eq!(coeffs[&rv(&[1, 0])], 1);
        assert_eq!(coeffs[&rv(&[0, 1])], -1);
    }

    #[test]
    fn k3_table_mod_3() {
        let table = ClassTable::build(&Multigraph::complete(3), 3).unwrap();
        assert_eq!(table.class_count(), 7);
        assert_eq!(table.get(&rv(&[1, 1, 1])), Some(sizes(1, 1)));
        let coeffs = table.coefficients();
        assert_eq!(coeffs[&rv(&[1, 1, 1])], 0);
        for (class, coeff) in [
            (rv(&[2, 1, 0]), 1),
            (rv(&[2, 0, 1]), -1),
            (rv(&[1, 0, 2]), 1),
            (rv(&[1, 2, 0]), -1),
            (rv(&[0, 2, 1]), 1),
            (rv(&[0, 1, 2]), -1),
        ] {
            assert_eq!(coeffs[&class], coeff, "class {class}");
        }
    }

    #[test]
    fn c4_table_mod_2() {
        let table = ClassTable::build(&Multigraph::cycle(4), 2).unwrap();
        assert_eq!(table.class_count(), 8);
        for (_, s) in table.iter() {
            assert_eq!(s.total(), 2);
        }
        // both directed cycles agree with the reference (0 and 4 flips)
        assert_eq!(table.get(&rv(&[1, 1, 1, 1])), Some(sizes(2, 0)));
        // hand-traced: masks 0001 and 1110 land in (0,0,1,1), both odd
        assert_eq!(table.get(&rv(&[0, 0, 1, 1])), Some(sizes(0, 2)));
    }

    #[test]
    fn loop_classes_balance() {
        let g = Multigraph::parse_edge_list("1 1\n1 1").unwrap();
        for k in 1..=4 {
            let table = ClassTable::build(&g, k).unwrap();
            assert_eq!(table.class_count(), 1);
            assert_eq!(table.get(&rv(&[1 % k])), Some(sizes(1, 1)));
        }
    }

    #[test]
    fn empty_graph_single_class() {
        for k in 1..=3 {
            let table = ClassTable::build(&Multigraph::empty(2), k).unwrap();
            assert_eq!(table.class_count(), 1);
            assert_eq!(table.get(&rv(&[0, 0])), Some(sizes(1, 0)));
        }
    }

    #[test]
    fn modulus_one_single_class() {
        let g = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let table = ClassTable::build(&g, 1).unwrap();
        assert_eq!(table.class_count(), 1);
        assert_eq!(table.get(&rv(&[0, 0])), Some(sizes(1, 1)));
    }

    #[test]
    fn modulus_zero_rejected() {
        let g = Multigraph::empty(1);
        assert_eq!(ClassTable::build(&g, 0), Err(CensusError::InvalidModulus));
    }

    #[test]
    fn edge_cap_enforced() {
        let g = Multigraph::new(2, vec![(0, 1); 5]).unwrap();
        assert_eq!(
            ClassTable::build_capped(&g, 2, 4),
            Err(CensusError::EdgeCapExceeded { edges: 5, cap: 4 })
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = Multigraph::complete(4);
        let sequential = ClassTable::build(&g, 3).unwrap();
        for threads in [1, 2, 3, 5, 8] {
            let parallel = ClassTable::build_parallel(&g, 3, threads).unwrap();
            assert_eq!(parallel, sequential);
            assert_eq!(parallel.to_text(), sequential.to_text());
        }
    }

    #[test]
    fn text_listing_shape() {
        let g = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let text = ClassTable::build(&g, 2).unwrap().to_text();
        assert_eq!(
            text,
            "k=2 vertices=2 edges=1 orientations=2 classes=2\n\
             (0,1) agree=0 disagree=1 diff=-1\n\
             (1,0) agree=1 disagree=0 diff=1\n"
        );
    }

    #[test]
    fn dump_round_trip() {
        let table = ClassTable::build(&Multigraph::cycle(4), 2).unwrap();
        let json = serde_json::to_string(&table.dump()).unwrap();
        let back: ClassTableDump = serde_json::from_str(&json).unwrap();
        assert_eq!(back.restore(), table);
    }

    #[test]
    fn census_matches_polynomial_on_small_graphs() {
        let graphs = [
            Multigraph::new(2, vec![(0, 1)]).unwrap(),
            Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap(),
            Multigraph::complete(3),
            Multigraph::complete(4),
            Multigraph::cycle(4),
            Multigraph::cycle(5),
            Multigraph::parse_edge_list("3 4\n1 2\n2 3\n2 2\n1 3").unwrap(),
        ];
        for g in &graphs {
            for k in 1..=5 {
                assert_matches_polynomial(g, k);
            }
        }
    }

    #[test]
    fn reversal_negates_coefficients() {
        let g = Multigraph::complete(3);
        let h = g.with_edge_reversed(1);
        for k in [2, 3] {
            let a = ClassTable::build(&g, k).unwrap().coefficients();
            let b = ClassTable::build(&h, k).unwrap().coefficients();
            assert_eq!(a.len(), b.len());
            for (class, coeff) in &a {
                assert_eq!(b[class], -coeff);
            }
        }
    }

    proptest! {
        #[test]
        fn mass_conservation(
            n in 1usize..5,
            raw_edges in proptest::collection::vec((0usize..5, 0usize..5), 0..9),
            k in 1u32..5,
        ) {
            let edges: Vec<_> =
                raw_edges.into_iter().map(|(u, v)| (u % n, v % n)).collect();
            let m = edges.len();
            let g = Multigraph::new(n, edges).unwrap();
            let table = ClassTable::build(&g, k).unwrap();
            prop_assert_eq!(table.total_orientations(), 1u64 << m);
        }

        #[test]
        fn cross_engine_identity(
            n in 1usize..5,
            raw_edges in proptest::collection::vec((0usize..5, 0usize..5), 0..9),
            k in 1u32..6,
        ) {
            let edges: Vec<_> =
                raw_edges.into_iter().map(|(u, v)| (u % n, v % n)).collect();
            let g = Multigraph::new(n, edges).unwrap();
            assert_matches_polynomial(&g, k);
        }

        #[test]
        fn partition_independence(
            raw_edges in proptest::collection::vec((0usize..4, 0usize..4), 0..8),
            k in 1u32..4,
            threads in 1usize..7,
        ) {
            let edges: Vec<_> =
                raw_edges.into_iter().map(|(u, v)| (u % 4, v % 4)).collect();
            let g = Multigraph::new(4, edges).unwrap();
            let sequential = ClassTable::build(&g, k).unwrap();
            let parallel = ClassTable::build_parallel(&g, k, threads).unwrap();
            prop_assert_eq!(sequential, parallel);
        }

        #[test]
        fn loop_annihilation(
            raw_edges in proptest::collection::vec((0usize..4, 0usize..4), 0..6),
            loop_vertex in 0usize..4,
            k in 1u32..4,
        ) {
            let mut edges: Vec<_> =
                raw_edges.into_iter().map(|(u, v)| (u % 4, v % 4)).collect();
            edges.push((loop_vertex, loop_vertex));
            let g = Multigraph::new(4, edges).unwrap();
            let table = ClassTable::build(&g, k).unwrap();
            for (_, s) in table.iter() {
                prop_assert_eq!(s.agree, s.disagree);
            }
        }

        #[test]
        fn relabeling_equivariance(
            raw_edges in proptest::collection::vec((0usize..4, 0usize..4), 0..7),
            k in 1u32..4,
            seed in 0usize..24,
        ) {
            let edges: Vec<_> =
                raw_edges.into_iter().map(|(u, v)| (u % 4, v % 4)).collect();
            let g = Multigraph::new(4, edges).unwrap();

            // seed picks one of the 24 permutations of 4 elements
            let mut perm = vec![0, 1, 2, 3];
            let mut s = seed;
            for i in (1..4).rev() {
                perm.swap(i, s % (i + 1));
                s /= i + 1;
            }
            let h = g.relabeled(&perm).unwrap();

            let table_g = ClassTable::build(&g, k).unwrap();
            let table_h = ClassTable::build(&h, k).unwrap();
            prop_assert_eq!(table_g.class_count(), table_h.class_count());
            for (class, s_g) in table_g.iter() {
                let mut permuted = vec![0u32; 4];
                for (i, &r) in class.entries().iter().enumerate() {
                    permuted[perm[i]] = r;
                }
                prop_assert_eq!(table_h.get(&ResidueVector::new(permuted)), Some(*s_g));
            }
        }
    }
}
