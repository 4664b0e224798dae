//! Colorability verdicts built on the census and polynomial engines, the
//! prime-power selection behind the finite-field certificates, and an
//! independent brute-force coloring oracle for cross-validation.
//!
//! The decisive test: a multigraph is k-colorable exactly when some
//! orientation class has adjacent subclasses of different cardinalities,
//! equivalently when the reduced graph polynomial has a nonzero integer
//! coefficient. The one-sided conditions are also exposed on their own:
//! [`sufficient_witness`] (any unbalanced class suffices), and
//! [`necessary_profile`] (for every l >= 2 coprime to k, colorability
//! forces some class with subclass cardinalities distinct modulo l).
//! For odd k the l = 2 row collapses to [`odd_k_parity`]: some class with
//! an odd number of orientations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::census::{CensusError, ClassTable, ResidueVector, DEFAULT_EDGE_CAP};
use crate::field::is_prime;
use crate::graph::Multigraph;
use crate::poly::{
    reduced_graph_polynomial_capped, PolyError, ReducedPolynomial, DEFAULT_TERM_CAP,
};

/// Moduli probed by default in divisibility profiles: the primes up to 13.
/// Composite moduli add nothing (divisibility by a composite reduces to its
/// prime factors), so primes keep the profile short.
pub const DEFAULT_PROFILE_MODULI: &[u64] = &[2, 3, 5, 7, 11, 13];

/// Assignment-count ceiling for the exhaustive coloring counter.
pub const DEFAULT_ORACLE_CAP: u64 = 1 << 26;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("modulus must be at least 1")]
    InvalidModulus,
    #[error("the parity criterion needs an odd modulus, got {0}")]
    EvenModulus(u32),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("graph exceeds both engines: {edges} edges over census cap, {projected} projected terms over polynomial cap")]
    EnginesUnavailable { edges: usize, projected: u128 },
    #[error("counting needs {assignments} assignments, cap is {cap}")]
    OracleBoundExceeded { assignments: u128, cap: u64 },
    #[error("{p}^{t} does not fit in 64 bits")]
    PrimePowerOverflow { p: u64, t: u32 },
}

/// Resource limits shared by the verdict entry points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest edge count the census enumerates (`2^m` orientations).
    pub census_edges: u32,
    /// Largest projected term count (`k^n`) for the polynomial engine.
    pub poly_terms: u64,
    /// Largest point count (`q^n`) for exhaustive field evaluation.
    pub field_eval_points: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            census_edges: DEFAULT_EDGE_CAP,
            poly_terms: DEFAULT_TERM_CAP,
            field_eval_points: crate::field::DEFAULT_EVAL_CAP,
        }
    }
}

/// Which engine produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Census,
    Polynomial,
}

impl std::fmt::Display for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Engine::Census => write!(f, "census"),
            Engine::Polynomial => write!(f, "polynomial"),
        }
    }
}

/// An unbalanced orientation class certifying colorability.
///
/// `coefficient` is the signed subclass difference; the cardinalities
/// themselves are known only when the census engine produced the witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub class: ResidueVector,
    pub coefficient: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disagree: Option<u64>,
}

/// Outcome of the decisive colorability test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub colorable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub engine: Engine,
}

/// One row of a divisibility profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub l: u64,
    pub coprime_to_k: bool,
    pub satisfied: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ResidueVector>,
}

/// Divisibility profile over a list of moduli l.
///
/// Satisfaction of every row with `coprime_to_k` and `l != 1` is necessary
/// for k-colorability; rows with `gcd(l, k) > 1` are informational only
/// (an even cycle at k = 2 shows the coprimality requirement is real).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LProfile {
    pub k: u32,
    pub rows: Vec<ProfileRow>,
}

/// A prime power q = p^t with q ≡ 1 (mod k) and p foreign to both k and a
/// designated coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePowerChoice {
    pub p: u64,
    pub t: u32,
    pub q: u64,
}

/// Lexicographically first class whose adjacent subclasses differ in
/// cardinality, if any.
pub fn sufficient_witness(table: &ClassTable) -> Option<Witness> {
    table.iter().find_map(|(class, sizes)| {
        (sizes.agree != sizes.disagree).then(|| Witness {
            class: class.clone(),
            coefficient: sizes.difference(),
            agree: Some(sizes.agree),
            disagree: Some(sizes.disagree),
        })
    })
}

/// Evaluates the profile row for every modulus in `ls` (each at least 2).
pub fn necessary_profile(table: &ClassTable, ls: &[u64]) -> LProfile {
    necessary_profile_from_coefficients(table.modulus(), &table.coefficients(), ls)
}

/// Profile computed from a class-coefficient table alone.
///
/// Cardinalities distinct modulo l is the same condition as the signed
/// difference being nonzero modulo l, so the polynomial engine's
/// coefficients carry exactly the information the profile needs.
pub fn necessary_profile_from_coefficients(
    k: u32,
    coefficients: &BTreeMap<ResidueVector, i64>,
    ls: &[u64],
) -> LProfile {
    let rows = ls
        .iter()
        .map(|&l| {
            assert!(l >= 2, "profile moduli must be at least 2");
            let witness = coefficients
                .iter()
                .find_map(|(class, &c)| (c.rem_euclid(l as i64) != 0).then(|| class.clone()));
            ProfileRow {
                l,
                coprime_to_k: gcd(l, k as u64) == 1,
                satisfied: witness.is_some(),
                witness,
            }
        })
        .collect();
    LProfile { k, rows }
}

/// The odd-k criterion: true iff some orientation class has odd
/// cardinality. For odd k this is equivalent to k-colorability; even k is
/// rejected because the l = 2 row is then outside the coprime regime.
pub fn odd_k_parity(table: &ClassTable) -> Result<bool, CriteriaError> {
    let k = table.modulus();
    if k.is_multiple_of(2) {
        return Err(CriteriaError::EvenModulus(k));
    }
    Ok(table.iter().any(|(_, sizes)| sizes.total() % 2 == 1))
}

/// Decides k-colorability with the default caps.
pub fn decide_colorable(graph: &Multigraph, k: u32) -> Result<Verdict, CriteriaError> {
    decide_colorable_capped(graph, k, &Caps::default())
}

/// Decides k-colorability: census when the edge count permits, otherwise
/// the polynomial engine. Colorable iff some class coefficient is nonzero.
pub fn decide_colorable_capped(
    graph: &Multigraph,
    k: u32,
    caps: &Caps,
) -> Result<Verdict, CriteriaError> {
    if k == 0 {
        return Err(CriteriaError::InvalidModulus);
    }
    if graph.edge_count() as u32 <= caps.census_edges {
        let table = ClassTable::build_capped(graph, k, caps.census_edges)?;
        let witness = sufficient_witness(&table);
        return Ok(Verdict {
            colorable: witness.is_some(),
            witness,
            engine: Engine::Census,
        });
    }
    let projected = (k as u128).saturating_pow(graph.vertex_count() as u32);
    if projected <= caps.poly_terms as u128 {
        let poly = reduced_graph_polynomial_capped(graph, k, caps.poly_terms)?;
        let witness = poly.terms().next().map(|(exponents, coefficient)| Witness {
            class: ResidueVector::new(exponents.clone()),
            coefficient,
            agree: None,
            disagree: None,
        });
        return Ok(Verdict {
            colorable: witness.is_some(),
            witness,
            engine: Engine::Polynomial,
        });
    }
    Err(CriteriaError::EnginesUnavailable {
        edges: graph.edge_count(),
        projected,
    })
}

/// Picks the smallest prime `p` dividing neither `coefficient` nor `k`,
/// then the least `t >= 1` with `p^t ≡ 1 (mod k)`; such a `t` exists and
/// is at most `k` (two of the k+1 powers `1, p, ..., p^k` collide mod k).
pub fn select_prime_power(coefficient: i64, k: u32) -> Result<PrimePowerChoice, CriteriaError> {
    assert!(
        coefficient != 0,
        "prime-power selection needs a nonzero coefficient"
    );
    assert!(k >= 1, "modulus must be at least 1");
    let c = coefficient.unsigned_abs();
    let mut p = 2u64;
    loop {
        if is_prime(p) && !c.is_multiple_of(p) && !(k as u64).is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    let modulus = k as u64;
    let target = 1 % modulus;
    let mut power = p % modulus;
    let mut t = 1u32;
    while power != target {
        power = power * p % modulus;
        t += 1;
        debug_assert!(t <= k, "pigeonhole bound violated");
    }
    let q = (p as u128).pow(t);
    if q > u64::MAX as u128 {
        return Err(CriteriaError::PrimePowerOverflow { p, t });
    }
    Ok(PrimePowerChoice { p, t, q: q as u64 })
}

/// Neighbors of each vertex among vertices with index at most its own;
/// loops appear as self-entries and poison every color choice.
fn lower_adjacency(graph: &Multigraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); graph.vertex_count()];
    for &(u, v) in graph.edges() {
        let (lo, hi) = if u <= v { (u, v) } else { (v, u) };
        adj[hi].push(lo);
    }
    adj
}

/// Brute-force oracle: the lexicographically first proper coloring with
/// colors `0..k`, or `None` when no proper coloring exists.
///
/// Deterministic by construction: vertices in index order, colors tried in
/// ascending order. Vertex 0 only tries color 0, which is sound for
/// existence (renaming colors keeps colorings proper) and is where the
/// lexicographically first coloring starts anyway.
pub fn find_coloring(graph: &Multigraph, k: u32) -> Option<Vec<u32>> {
    if k == 0 {
        return None;
    }
    let adj = lower_adjacency(graph);
    let mut colors = vec![0u32; graph.vertex_count()];
    fn assign(vertex: usize, adj: &[Vec<usize>], colors: &mut Vec<u32>, k: u32) -> bool {
        if vertex == adj.len() {
            return true;
        }
        let limit = if vertex == 0 { 1 } else { k };
        for color in 0..limit {
            colors[vertex] = color;
            let ok = adj[vertex].iter().all(|&u| {
                if u == vertex {
                    false
                } else {
                    colors[u] != color
                }
            });
            if ok && assign(vertex + 1, adj, colors, k) {
                return true;
            }
        }
        false
    }
    assign(0, &adj, &mut colors, k).then_some(colors)
}

/// Exact number of proper colorings by exhaustive backtracking, no
/// symmetry breaking.
pub fn count_colorings(graph: &Multigraph, k: u32) -> Result<u64, CriteriaError> {
    let assignments = (k as u128).saturating_pow(graph.vertex_count() as u32);
    if assignments > DEFAULT_ORACLE_CAP as u128 {
        return Err(CriteriaError::OracleBoundExceeded {
            assignments,
            cap: DEFAULT_ORACLE_CAP,
        });
    }
    if k == 0 {
        return Ok(0);
    }
    let adj = lower_adjacency(graph);
    fn count(vertex: usize, adj: &[Vec<usize>], colors: &mut Vec<u32>, k: u32) -> u64 {
        if vertex == adj.len() {
            return 1;
        }
        let mut total = 0;
        for color in 0..k {
            colors[vertex] = color;
            let ok = adj[vertex].iter().all(|&u| {
                if u == vertex {
                    false
                } else {
                    colors[u] != color
                }
            });
            if ok {
                total += count(vertex + 1, adj, colors, k);
            }
        }
        total
    }
    let mut colors = vec![0u32; graph.vertex_count()];
    Ok(count(0, &adj, &mut colors, k))
}

/// Side-by-side run of both engines and the oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub k: u32,
    /// Census subclass differences equal the polynomial coefficients,
    /// class by class, with cancelled classes absent from the polynomial.
    pub coefficients_match: bool,
    pub verdict: Verdict,
    pub oracle_colorable: bool,
    pub verdict_matches_oracle: bool,
    pub census_classes: usize,
    pub polynomial_terms: usize,
}

impl CrossCheckReport {
    pub fn ok(&self) -> bool {
        self.coefficients_match && self.verdict_matches_oracle
    }
}

/// Computes census coefficients, polynomial coefficients, and the oracle
/// verdict, and reports whether everything agrees. Any disagreement is a
/// correctness failure in one of the engines, never a property of the
/// input graph.
pub fn cross_check(
    graph: &Multigraph,
    k: u32,
    caps: &Caps,
) -> Result<CrossCheckReport, CriteriaError> {
    if k == 0 {
        return Err(CriteriaError::InvalidModulus);
    }
    let table = ClassTable::build_capped(graph, k, caps.census_edges)?;
    let poly = reduced_graph_polynomial_capped(graph, k, caps.poly_terms)?;
    let coefficients_match = census_matches_polynomial(&table, &poly);

    let witness = sufficient_witness(&table);
    let verdict = Verdict {
        colorable: witness.is_some(),
        witness,
        engine: Engine::Census,
    };
    let oracle_colorable = find_coloring(graph, k).is_some();
    Ok(CrossCheckReport {
        k,
        coefficients_match,
        verdict_matches_oracle: verdict.colorable == oracle_colorable,
        verdict,
        oracle_colorable,
        census_classes: table.class_count(),
        polynomial_terms: poly.term_count(),
    })
}

/// Exact class-by-class comparison of the two coefficient tables.
pub fn census_matches_polynomial(table: &ClassTable, poly: &ReducedPolynomial) -> bool {
    let census = table.nonzero_coefficients();
    let polynomial: BTreeMap<ResidueVector, i64> = poly
        .terms()
        .map(|(exponents, coefficient)| (ResidueVector::new(exponents.clone()), coefficient))
        .collect();
    census == polynomial
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
