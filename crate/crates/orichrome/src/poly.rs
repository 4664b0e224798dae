//! Exact sparse multivariate polynomial arithmetic with exponent-reduction
//! schemes.
//!
//! The centerpiece is [`reduced_graph_polynomial`]: the product of one
//! `(x_u - x_v)` factor per edge, with exponents rewritten modulo `k` after
//! every factor multiplication. Reducing incrementally is sound because the
//! scheme `x^k -> x^0` maps exponents through plain mod-k arithmetic, which
//! commutes with exponent addition; it keeps the live term count below
//! `k^n` instead of `2^m`.
//!
//! Coefficients are exact `i64` values and every coefficient operation is
//! checked; an overflow is a hard [`PolyError::CoefficientOverflow`], never
//! a wrap. Term storage is a `BTreeMap` keyed by exponent vectors, so all
//! iteration and serialized output is in lexicographic order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Multigraph;

/// Exponent vector of a monomial, one entry per variable.
pub type Exponents = Vec<u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("coefficient arithmetic overflowed i64")]
    CoefficientOverflow,
    #[error("projected term count {projected} exceeds cap {cap}")]
    TermCapExceeded { projected: u128, cap: u64 },
    #[error("reduction scheme needs i < j, got i={i}, j={j}")]
    InvalidScheme { i: u32, j: u32 },
    #[error("exponent {exponent} is below the scheme floor {floor}")]
    ExponentBelowFloor { exponent: u32, floor: u32 },
    #[error("modulus must be at least 1")]
    InvalidModulus,
    #[error("expected {expected} variables, got {got}")]
    VariableCountMismatch { expected: usize, got: usize },
}

/// Default cap on the projected term count of a reduced graph polynomial.
pub const DEFAULT_TERM_CAP: u64 = 1 << 20;

/// Rewrites one exponent under the maximal-reduction scheme `x^j -> x^i`:
/// the least integer `>= i` congruent to `e` modulo `j - i`.
///
/// Only defined for `e >= i`. Applying the formula below the floor would
/// raise the exponent (scheme `x^q -> x^1` would send 0 to `q - 1`), which
/// breaks evaluation at zero, so that domain is rejected.
pub fn reduce_exponent(e: u32, i: u32, j: u32) -> Result<u32, PolyError> {
    if i >= j {
        return Err(PolyError::InvalidScheme { i, j });
    }
    if e < i {
        return Err(PolyError::ExponentBelowFloor {
            exponent: e,
            floor: i,
        });
    }
    Ok(i + (e - i) % (j - i))
}

/// A sparse multivariate polynomial with exact integer coefficients.
///
/// Only nonzero coefficients are stored. Term order is lexicographic on the
/// exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    variables: usize,
    terms: BTreeMap<Exponents, i64>,
}

impl Polynomial {
    /// The zero polynomial in `variables` variables.
    pub fn zero(variables: usize) -> Self {
        Polynomial {
            variables,
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(variables: usize, value: i64) -> Self {
        let mut p = Polynomial::zero(variables);
        if value != 0 {
            p.terms.insert(vec![0; variables], value);
        }
        p
    }

    /// A single monomial `coefficient * x^exponents`.
    pub fn monomial(exponents: Exponents, coefficient: i64) -> Self {
        let mut p = Polynomial::zero(exponents.len());
        if coefficient != 0 {
            p.terms.insert(exponents, coefficient);
        }
        p
    }

    /// Builds a polynomial from raw terms, combining like monomials and
    /// dropping zero results.
    pub fn from_terms(
        variables: usize,
        terms: impl IntoIterator<Item = (Exponents, i64)>,
    ) -> Result<Self, PolyError> {
        let mut p = Polynomial::zero(variables);
        for (exponents, coefficient) in terms {
            if exponents.len() != variables {
                return Err(PolyError::VariableCountMismatch {
                    expected: variables,
                    got: exponents.len(),
                });
            }
            p.add_term(exponents, coefficient)?;
        }
        Ok(p)
    }

    /// The monomial `x_1 x_2 ... x_n`.
    pub fn all_variables_product(variables: usize) -> Self {
        Polynomial::monomial(vec![1; variables], 1)
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Largest exponent of any single variable, 0 for constants.
    pub fn max_exponent(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Sum of absolute coefficient values.
    pub fn coefficient_norm(&self) -> u128 {
        self.terms.values().map(|c| c.unsigned_abs() as u128).sum()
    }

    fn add_term(&mut self, exponents: Exponents, coefficient: i64) -> Result<(), PolyError> {
        if coefficient == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot
                    .get()
                    .checked_add(coefficient)
                    .ok_or(PolyError::CoefficientOverflow)?;
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// Exact sum.
    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_variables(other)?;
        let mut out = self.clone();
        for (exponents, coefficient) in other.terms() {
            out.add_term(exponents.clone(), coefficient)?;
        }
        Ok(out)
    }

    /// Exact product, no exponent reduction.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_variables(other)?;
        let mut out = Polynomial::zero(self.variables);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let exponents: Exponents = ea.iter().zip(eb).map(|(&a, &b)| a + b).collect();
                let coefficient = ca.checked_mul(cb).ok_or(PolyError::CoefficientOverflow)?;
                out.add_term(exponents, coefficient)?;
            }
        }
        Ok(out)
    }

    /// Maximal reduction under the scheme `x^j -> x^i` applied to every
    /// monomial, with like terms combined afterwards.
    ///
    /// Exponent 0 passes through untouched; any other exponent must be at
    /// least `i` (see [`reduce_exponent`]).
    pub fn reduce(&self, i: u32, j: u32) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero(self.variables);
        for (exponents, coefficient) in self.terms() {
            let reduced: Exponents = exponents
                .iter()
                .map(|&e| {
                    if e == 0 {
                        Ok(0)
                    } else {
                        reduce_exponent(e, i, j)
                    }
                })
                .collect::<Result<_, _>>()?;
            out.add_term(reduced, coefficient)?;
        }
        Ok(out)
    }

    /// The formal substitution `x_i <- x_i^m`: every exponent multiplied by
    /// `m`, coefficients untouched. Formal (non)zero-ness is preserved.
    pub fn raise_exponents(&self, m: u32) -> Polynomial {
        assert!(m >= 1, "substitution power must be positive");
        let terms = self
            .terms
            .iter()
            .map(|(exponents, &coefficient)| {
                let raised = exponents
                    .iter()
                    .map(|&e| e.checked_mul(m).expect("exponent overflow"))
                    .collect();
                (raised, coefficient)
            })
            .collect();
        Polynomial {
            variables: self.variables,
            terms,
        }
    }

    /// Evaluates over the integers with checked arithmetic.
    pub fn evaluate_int(&self, point: &[i64]) -> Result<i64, PolyError> {
        if point.len() != self.variables {
            return Err(PolyError::VariableCountMismatch {
                expected: self.variables,
                got: point.len(),
            });
        }
        let mut total: i64 = 0;
        for (exponents, coefficient) in self.terms() {
            let mut value = coefficient;
            for (&base, &e) in point.iter().zip(exponents) {
                for _ in 0..e {
                    value = value
                        .checked_mul(base)
                        .ok_or(PolyError::CoefficientOverflow)?;
                }
            }
            total = total
                .checked_add(value)
                .ok_or(PolyError::CoefficientOverflow)?;
        }
        Ok(total)
    }

    /// Every coefficient reduced into `[0, l)`.
    ///
    /// Zero residues are kept: a stored term whose coefficient vanishes
    /// modulo `l` is exactly what the divisibility profiles look for.
    pub fn coefficients_mod(&self, l: i64) -> BTreeMap<Exponents, i64> {
        assert!(l >= 2, "residue modulus must be at least 2");
        self.terms
            .iter()
            .map(|(exponents, &coefficient)| (exponents.clone(), coefficient.rem_euclid(l)))
            .collect()
    }

    /// Multiplies by the factor `(x_plus - x_minus)`, rewriting exponents
    /// modulo `k` on the fly. Both indices may coincide (a loop factor),
    /// in which case everything cancels.
    fn mul_edge_factor_mod(
        &self,
        plus: usize,
        minus: usize,
        k: u32,
    ) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero(self.variables);
        for (exponents, coefficient) in self.terms() {
            let mut bumped = exponents.clone();
            bumped[plus] = (bumped[plus] + 1) % k;
            out.add_term(bumped, coefficient)?;
            let mut bumped = exponents.clone();
            bumped[minus] = (bumped[minus] + 1) % k;
            out.add_term(
                bumped,
                coefficient
                    .checked_neg()
                    .ok_or(PolyError::CoefficientOverflow)?,
            )?;
        }
        Ok(out)
    }

    /// Deterministic text dump: one `coef * x1^e1 ... xn^en` line per term
    /// in lexicographic exponent order, or `0` for the zero polynomial.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0\n".to_string();
        }
        let mut out = String::new();
        for (exponents, coefficient) in self.terms() {
            let _ = write!(out, "{coefficient} *");
            for (index, &e) in exponents.iter().enumerate() {
                let _ = write!(out, " x{}^{}", index + 1, e);
            }
            out.push('\n');
        }
        out
    }

    /// Serializable dump; `dump.restore()` round-trips.
    pub fn dump(&self) -> PolynomialDump {
        PolynomialDump {
            variables: self.variables,
            reduction_modulus: None,
            terms: self
                .terms()
                .map(|(exponents, coefficient)| TermDump {
                    exponents: exponents.clone(),
                    coefficient,
                })
                .collect(),
        }
    }

    fn check_variables(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.variables != other.variables {
            return Err(PolyError::VariableCountMismatch {
                expected: self.variables,
                got: other.variables,
            });
        }
        Ok(())
    }
}

/// A graph's edge-difference product with all exponents rewritten into
/// `[0, k)`.
///
/// Invariants: no stored coefficient is zero, every exponent is below `k`,
/// and the sum of absolute coefficients is at most `2^m` for a graph with
/// `m` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedPolynomial {
    modulus: u32,
    poly: Polynomial,
}

impl ReducedPolynomial {
    /// The exponent modulus `k`.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.poly
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, i64)> {
        self.poly.terms()
    }

    pub fn term_count(&self) -> usize {
        self.poly.term_count()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn to_text(&self) -> String {
        self.poly.to_text()
    }

    pub fn dump(&self) -> PolynomialDump {
        let mut dump = self.poly.dump();
        dump.reduction_modulus = Some(self.modulus);
        dump
    }
}

/// One `(x_u - x_v)` pair per edge, in edge order, 0-based. A loop yields
/// `(u, u)`, the formally zero factor.
pub fn factor_list(graph: &Multigraph) -> Vec<(usize, usize)> {
    graph.edges().to_vec()
}

/// The fully expanded edge-difference product, no exponent reduction.
///
/// Term count can reach `2^m`; meant for desk-scale graphs and for feeding
/// the finite-field evaluators.
pub fn expanded_graph_polynomial(graph: &Multigraph) -> Result<Polynomial, PolyError> {
    let n = graph.vertex_count();
    let mut poly = Polynomial::constant(n, 1);
    for &(u, v) in graph.edges() {
        let mut factor = Polynomial::zero(n);
        let mut plus = vec![0u32; n];
        plus[u] += 1;
        factor.add_term(plus, 1)?;
        let mut minus = vec![0u32; n];
        minus[v] += 1;
        factor.add_term(minus, -1)?;
        poly = poly.mul(&factor)?;
    }
    Ok(poly)
}

/// Computes the reduced graph polynomial with the default term cap.
pub fn reduced_graph_polynomial(
    graph: &Multigraph,
    k: u32,
) -> Result<ReducedPolynomial, PolyError> {
    reduced_graph_polynomial_capped(graph, k, DEFAULT_TERM_CAP)
}

/// Computes the reduced graph polynomial, failing upfront if the projected
/// term count `k^n` exceeds `term_cap`.
pub fn reduced_graph_polynomial_capped(
    graph: &Multigraph,
    k: u32,
    term_cap: u64,
) -> Result<ReducedPolynomial, PolyError> {
    if k == 0 {
        return Err(PolyError::InvalidModulus);
    }
    let projected = (k as u128).checked_pow(graph.vertex_count() as u32);
    match projected {
        Some(count) if count <= term_cap as u128 => {}
        _ => {
            return Err(PolyError::TermCapExceeded {
                projected: projected.unwrap_or(u128::MAX),
                cap: term_cap,
            })
        }
    }
    let mut poly = Polynomial::constant(graph.vertex_count(), 1);
    for &(plus, minus) in &factor_list(graph) {
        poly = poly.mul_edge_factor_mod(plus, minus, k)?;
    }
    Ok(ReducedPolynomial { modulus: k, poly })
}

/// Flat serializable form of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDump {
    pub variables: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction_modulus: Option<u32>,
    pub terms: Vec<TermDump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDump {
    pub exponents: Exponents,
    pub coefficient: i64,
}

impl PolynomialDump {
    pub fn restore(&self) -> Result<Polynomial, PolyError> {
        Polynomial::from_terms(
            self.variables,
            self.terms
                .iter()
                .map(|t| (t.exponents.clone(), t.coefficient)),
        )
    }
}
