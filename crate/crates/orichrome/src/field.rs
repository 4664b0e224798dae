//! Construction of GF(p^t) and the finite-field side of the colorability
//! machinery: field arithmetic, the k-element color set of k-th roots of
//! unity, and identically-zero testing of integer polynomials over a field.
//!
//! Elements are polynomials of degree below `t` over the prime field,
//! reduced modulo a fixed monic irreducible modulus. The modulus is the
//! lexicographically smallest irreducible candidate (coefficient tuple
//! compared leading-first, constant term last), found by exhaustive search
//! with trial division, so two fields of the same order are literally the
//! same field and results are bit-reproducible across runs.
//!
//! A polynomial over a finite field can vanish at every point without
//! having zero coefficients (`x^q - x` is the standard example), and the
//! two notions coincide once every per-variable degree stays below `q`.
//! Both tests are provided: the exhaustive [`Field::is_identically_zero`]
//! and the coefficient-wise [`Field::degree_bounded_zero_test`].

use std::fmt;

use thiserror::Error;

use crate::poly::Polynomial;

/// Largest field order constructed by default.
pub const DEFAULT_ORDER_BOUND: u64 = 1 << 16;

/// Default bound on `q^n`, the number of points visited by the exhaustive
/// zero test.
pub const DEFAULT_EVAL_CAP: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("field order {p}^{t} exceeds the bound {bound}")]
    OrderBoundExceeded { p: u64, t: u32, bound: u64 },
    #[error("element does not belong to this field")]
    ForeignElement,
    #[error("zero has no multiplicative inverse")]
    ZeroInversion,
    #[error("{k} does not divide q - 1 = {qm1}")]
    ColorCountNotDivisor { k: u32, qm1: u64 },
    #[error("per-variable degree {degree} exceeds q - 1 = {max}")]
    DegreeTooLarge { degree: u32, max: u64 },
    #[error("evaluation needs {points} points, cap is {cap}")]
    EvalCapExceeded { points: u128, cap: u64 },
    #[error("point has {got} coordinates, polynomial has {expected} variables")]
    PointLengthMismatch { expected: usize, got: usize },
}

/// An element of a specific GF(p^t): its coefficient vector (ascending
/// degree, length `t`) plus the order of the owning field.
///
/// Elements are only created through [`Field`] methods; the stored order
/// lets every operation reject elements from a different field.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    order: u64,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    /// Polynomial in the generator symbol `g`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (power, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match (power, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "g")?,
                (1, _) => write!(f, "{c}g")?,
                (_, 1) => write!(f, "g^{power}")?,
                (_, _) => write!(f, "{c}g^{power}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// GF(p^t) with its fixed irreducible modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
    t: u32,
    q: u64,
    modulus: Vec<u64>,
}

impl Field {
    /// Constructs GF(p^t) under the default order bound.
    ///
    /// Primality is checked by trial division and the modulus is the
    /// lexicographically smallest monic irreducible polynomial of degree
    /// `t`, so the construction is fully deterministic.
    pub fn new(p: u64, t: u32) -> Result<Self, FieldError> {
        Self::new_bounded(p, t, DEFAULT_ORDER_BOUND)
    }

    pub fn new_bounded(p: u64, t: u32, bound: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if t == 0 {
            return Err(FieldError::InvalidDegree);
        }
        let q = (p as u128).checked_pow(t);
        let q = match q {
            Some(q) if q <= bound as u128 => q as u64,
            _ => return Err(FieldError::OrderBoundExceeded { p, t, bound }),
        };
        let modulus = smallest_irreducible(p, t);
        Ok(Field { p, t, q, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.t
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients in ascending degree, length `t + 1`, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            order: self.q,
            coeffs: vec![0; self.t as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.element_at(1)
    }

    /// The element whose base-p digit expansion is `index`; indices
    /// `0..order()` enumerate the whole field.
    pub fn element_at(&self, index: u64) -> FieldElement {
        debug_assert!(index < self.q);
        let mut coeffs = vec![0u64; self.t as usize];
        let mut rest = index;
        for c in coeffs.iter_mut() {
            *c = rest % self.p;
            rest /= self.p;
        }
        FieldElement {
            order: self.q,
            coeffs,
        }
    }

    /// Inverse of [`Field::element_at`].
    pub fn index_of(&self, element: &FieldElement) -> Result<u64, FieldError> {
        self.check(element)?;
        Ok(element
            .coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.p + c))
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.element_at(i))
    }

    /// Builds an element from ascending-degree coefficients (at most `t`,
    /// shorter vectors are zero-padded); coefficients reduced modulo p.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.t as usize {
            return Err(FieldError::ForeignElement);
        }
        let mut padded = vec![0u64; self.t as usize];
        for (slot, &c) in padded.iter_mut().zip(coeffs) {
            *slot = c % self.p;
        }
        Ok(FieldElement {
            order: self.q,
            coeffs: padded,
        })
    }

    /// Embeds an integer through the prime subfield.
    pub fn from_int(&self, value: i64) -> FieldElement {
        let mut coeffs = vec![0u64; self.t as usize];
        coeffs[0] = value.rem_euclid(self.p as i64) as u64;
        FieldElement {
            order: self.q,
            coeffs,
        }
    }

    fn check(&self, element: &FieldElement) -> Result<(), FieldError> {
        if element.order != self.q
            || element.coeffs.len() != self.t as usize
            || element.coeffs.iter().any(|&c| c >= self.p)
        {
            return Err(FieldError::ForeignElement);
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        Ok(FieldElement {
            order: self.q,
            coeffs,
        })
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        Ok(FieldElement {
            order: self.q,
            coeffs,
        })
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.add(a, &self.neg(b)?)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(FieldElement {
            order: self.q,
            coeffs: self.mul_raw(&a.coeffs, &b.coeffs),
        })
    }

    /// Square-and-multiply exponentiation; `a^0 = 1` by convention.
    pub fn pow(&self, a: &FieldElement, mut exponent: u64) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        let mut base = a.coeffs.clone();
        let mut acc = self.one().coeffs;
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = self.mul_raw(&acc, &base);
            }
            base = self.mul_raw(&base, &base);
            exponent >>= 1;
        }
        Ok(FieldElement {
            order: self.q,
            coeffs: acc,
        })
    }

    /// Multiplicative inverse via `a^(q-2)`.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        if a.is_zero() {
            return Err(FieldError::ZeroInversion);
        }
        self.pow(a, self.q - 2)
    }

    /// Product of coefficient vectors reduced modulo the field modulus.
    fn mul_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let t = self.t as usize;
        let mut wide = vec![0u64; 2 * t - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                wide[i + j] = (wide[i + j] + x * y) % self.p;
            }
        }
        // the modulus is monic, so each leading coefficient eliminates directly
        for d in (t..wide.len()).rev() {
            let c = wide[d];
            if c == 0 {
                continue;
            }
            wide[d] = 0;
            for (offset, &m) in self.modulus.iter().enumerate().take(self.t as usize) {
                let idx = d - t + offset;
                wide[idx] = (wide[idx] + c * (self.p - m)) % self.p;
            }
        }
        wide.truncate(t);
        wide
    }

    /// The k-th roots of unity `{ x^m : x != 0 }` with `m = (q-1)/k`,
    /// sorted by element index. Requires `k` to divide `q - 1`; the result
    /// then has exactly `k` elements.
    pub fn color_set(&self, k: u32) -> Result<Vec<FieldElement>, FieldError> {
        let qm1 = self.q - 1;
        if k == 0 || !qm1.is_multiple_of(k as u64) {
            return Err(FieldError::ColorCountNotDivisor { k, qm1 });
        }
        let m = qm1 / k as u64;
        let mut indices = std::collections::BTreeSet::new();
        for x in self.elements().skip(1) {
            let power = self.pow(&x, m)?;
            indices.insert(self.index_of(&power)?);
        }
        Ok(indices.into_iter().map(|i| self.element_at(i)).collect())
    }

    /// Evaluates an integer-coefficient polynomial at a point of this
    /// field, coefficients entering through the prime subfield.
    pub fn evaluate_polynomial(
        &self,
        poly: &Polynomial,
        point: &[FieldElement],
    ) -> Result<FieldElement, FieldError> {
        if point.len() != poly.variables() {
            return Err(FieldError::PointLengthMismatch {
                expected: poly.variables(),
                got: point.len(),
            });
        }
        for coordinate in point {
            self.check(coordinate)?;
        }
        let mut total = self.zero();
        for (exponents, coefficient) in poly.terms() {
            let mut value = self.from_int(coefficient);
            for (coordinate, &e) in point.iter().zip(exponents) {
                if e > 0 {
                    value = self.mul(&value, &self.pow(coordinate, e as u64)?)?;
                }
            }
            total = self.add(&total, &value)?;
        }
        Ok(total)
    }

    /// Exhaustive zero test: evaluates at all `q^n` points (subject to the
    /// default cap) and reports whether every value is zero.
    pub fn is_identically_zero(&self, poly: &Polynomial) -> Result<bool, FieldError> {
        self.is_identically_zero_capped(poly, DEFAULT_EVAL_CAP)
    }

    pub fn is_identically_zero_capped(
        &self,
        poly: &Polynomial,
        cap: u64,
    ) -> Result<bool, FieldError> {
        let n = poly.variables();
        let points = (self.q as u128).checked_pow(n as u32);
        match points {
            Some(count) if count <= cap as u128 => {}
            _ => {
                return Err(FieldError::EvalCapExceeded {
                    points: points.unwrap_or(u128::MAX),
                    cap,
                })
            }
        }
        let mut indices = vec![0u64; n];
        let mut point: Vec<FieldElement> = vec![self.element_at(0); n];
        loop {
            if !self.evaluate_polynomial(poly, &point)?.is_zero() {
                return Ok(false);
            }
            // odometer step over all q^n assignments
            let mut position = 0;
            loop {
                if position == n {
                    return Ok(true);
                }
                indices[position] += 1;
                if indices[position] < self.q {
                    point[position] = self.element_at(indices[position]);
                    break;
                }
                indices[position] = 0;
                point[position] = self.element_at(0);
                position += 1;
            }
        }
    }

    /// Coefficient-wise zero test, valid when every per-variable degree is
    /// at most `q - 1`: on that class a polynomial vanishes everywhere iff
    /// all its coefficients vanish in the field.
    pub fn degree_bounded_zero_test(&self, poly: &Polynomial) -> Result<bool, FieldError> {
        let degree = poly.max_exponent();
        if degree as u64 > self.q - 1 {
            return Err(FieldError::DegreeTooLarge {
                degree,
                max: self.q - 1,
            });
        }
        Ok(poly.terms().all(|(_, c)| c.rem_euclid(self.p as i64) == 0))
    }
}

impl fmt::Display for Field {
    /// `GF(p^t), modulus = [c0, c1, ..., ct]` (ascending degree).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t == 1 {
            write!(f, "GF({})", self.p)?;
        } else {
            write!(f, "GF({}^{})", self.p, self.t)?;
        }
        write!(f, ", modulus = {:?}", self.modulus)
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest monic irreducible of degree `t` over GF(p), comparing
/// coefficient tuples leading-first (constant term last).
fn smallest_irreducible(p: u64, t: u32) -> Vec<u64> {
    let t = t as usize;
    let candidates = (p as u128).pow(t as u32);
    let mut candidate = 0u128;
    loop {
        debug_assert!(candidate < candidates, "no irreducible of degree {t} found");
        // digit i of the counter is the coefficient of degree i, so counting
        // upward enumerates (c_{t-1}, ..., c_0) in lexicographic order
        let mut coeffs = vec![0u64; t + 1];
        coeffs[t] = 1;
        let mut rest = candidate;
        for slot in coeffs.iter_mut().take(t) {
            *slot = (rest % p as u128) as u64;
            rest /= p as u128;
        }
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
        candidate += 1;
    }
}

/// Trial division by every monic polynomial of degree `1..=t/2`.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let t = poly.len() - 1;
    for d in 1..=t / 2 {
        let count = (p as u128).pow(d as u32);
        let mut candidate = 0u128;
        while candidate < count {
            let mut divisor = vec![0u64; d + 1];
            divisor[d] = 1;
            let mut rest = candidate;
            for slot in divisor.iter_mut().take(d) {
                *slot = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            if divides(&divisor, poly, p) {
                return false;
            }
            candidate += 1;
        }
    }
    true
}

/// Whether monic `divisor` divides `poly` over GF(p).
fn divides(divisor: &[u64], poly: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        let deg = rem.len() - 1;
        if lead != 0 {
            for (offset, &m) in divisor.iter().enumerate().take(d) {
                let idx = deg - d + offset;
                rem[idx] = (rem[idx] + lead * (p - m)) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use proptest::prelude::*;

    fn poly(variables: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(variables, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    #[test]
    fn modulus_selection() {
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]); // g^2 + g + 1
        assert_eq!(Field::new(7, 1).unwrap().modulus(), &[0, 1]); // the prime field
        assert_eq!(Field::new(5, 2).unwrap().modulus(), &[2, 0, 1]); // g^2 + 2
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]); // g^3 + g + 1
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]); // g^2 + 1
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(6, 1), Err(FieldError::NotPrime(6)));
        assert_eq!(Field::new(1, 1), Err(FieldError::NotPrime(1)));
        assert_eq!(Field::new(2, 0), Err(FieldError::InvalidDegree));
        assert_eq!(
            Field::new(2, 17),
            Err(FieldError::OrderBoundExceeded {
                p: 2,
                t: 17,
                bound: DEFAULT_ORDER_BOUND
            })
        );
    }

    #[test]
    fn gf4_generator_square() {
        let f = Field::new(2, 2).unwrap();
        let g = f.element(&[0, 1]).unwrap();
        let expected = f.element(&[1, 1]).unwrap(); // g^2 = g + 1
        assert_eq!(f.mul(&g, &g).unwrap(), expected);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::new(7, 1).unwrap();
        let three = f.from_int(3);
        let five = f.from_int(5);
        assert_eq!(f.mul(&three, &five).unwrap(), f.one());
        assert_eq!(f.inv(&three).unwrap(), five);
        assert_eq!(f.add(&three, &f.zero()).unwrap(), three);
        assert_eq!(f.from_int(-1), f.from_int(6));
    }

    #[test]
    fn pow_conventions() {
        let f = Field::new(5, 1).unwrap();
        for a in f.elements() {
            assert_eq!(f.pow(&a, f.order()).unwrap(), a); // a^q = a
        }
        assert_eq!(f.pow(&f.from_int(3), 0).unwrap(), f.one());
    }

    #[test]
    fn zero_inversion_rejected() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(f.inv(&f.zero()), Err(FieldError::ZeroInversion));
    }

    #[test]
    fn mixed_fields_rejected() {
        let gf4 = Field::new(2, 2).unwrap();
        let gf9 = Field::new(3, 2).unwrap();
        let foreign = gf9.element(&[1, 2]).unwrap();
        assert_eq!(gf4.add(&foreign, &foreign), Err(FieldError::ForeignElement));
        assert_eq!(
            gf4.mul(&gf4.one(), &foreign),
            Err(FieldError::ForeignElement)
        );
    }

    #[test]
    fn color_set_examples() {
        let gf4 = Field::new(2, 2).unwrap();
        let colors = gf4.color_set(3).unwrap();
        assert_eq!(colors.len(), 3);
        assert!(colors.iter().all(|c| !c.is_zero()));

        let gf7 = Field::new(7, 1).unwrap();
        let squares = gf7.color_set(3).unwrap();
        assert_eq!(
            squares,
            vec![gf7.from_int(1), gf7.from_int(2), gf7.from_int(4)]
        );
        let cubes = gf7.color_set(2).unwrap();
        assert_eq!(cubes, vec![gf7.from_int(1), gf7.from_int(6)]);

        assert_eq!(
            gf7.color_set(4),
            Err(FieldError::ColorCountNotDivisor { k: 4, qm1: 6 })
        );
    }

    #[test]
    fn color_set_is_roots_of_unity() {
        for (p, t) in [(2, 2), (3, 1), (3, 2), (5, 1), (7, 1), (2, 3)] {
            let f = Field::new(p, t).unwrap();
            let qm1 = f.order() - 1;
            for k in 1..=qm1 as u32 {
                if !qm1.is_multiple_of(k as u64) {
                    continue;
                }
                let colors = f.color_set(k).unwrap();
                assert_eq!(colors.len(), k as usize, "q={} k={k}", f.order());
                let roots: Vec<FieldElement> = f
                    .elements()
                    .skip(1)
                    .filter(|x| f.pow(x, k as u64).unwrap() == f.one())
                    .collect();
                assert_eq!(colors, roots);
            }
        }
    }

    #[test]
    fn identically_zero_examples() {
        let gf2 = Field::new(2, 1).unwrap();
        let fermat = poly(1, &[(&[2], 1), (&[1], 1)]); // x^2 + x
        assert!(gf2.is_identically_zero(&fermat).unwrap());
        assert!(!gf2
            .is_identically_zero(&Polynomial::constant(1, 1))
            .unwrap());

        let edge = crate::poly::reduced_graph_polynomial(
            &crate::graph::Multigraph::new(2, vec![(0, 1)]).unwrap(),
            2,
        )
        .unwrap();
        let gf3 = Field::new(3, 1).unwrap();
        assert!(!gf3.is_identically_zero(edge.as_polynomial()).unwrap());
    }

    #[test]
    fn degree_bounded_zero_test_examples() {
        let gf2 = Field::new(2, 1).unwrap();
        assert!(!gf2
            .degree_bounded_zero_test(&poly(1, &[(&[1], 1), (&[0], 1)]))
            .unwrap());
        assert!(gf2
            .degree_bounded_zero_test(&poly(1, &[(&[1], 2)]))
            .unwrap());
        let gf5 = Field::new(5, 1).unwrap();
        assert!(gf5
            .degree_bounded_zero_test(&poly(2, &[(&[1, 1], 5)]))
            .unwrap());
        assert_eq!(
            gf2.degree_bounded_zero_test(&poly(1, &[(&[2], 1)])),
            Err(FieldError::DegreeTooLarge { degree: 2, max: 1 })
        );
    }

    #[test]
    fn eval_cap_enforced() {
        let f = Field::new(2, 1).unwrap();
        let p = Polynomial::constant(40, 1);
        assert!(matches!(
            f.is_identically_zero(&p),
            Err(FieldError::EvalCapExceeded { .. })
        ));
    }

    #[test]
    fn display_formats() {
        let gf4 = Field::new(2, 2).unwrap();
        assert_eq!(gf4.to_string(), "GF(2^2), modulus = [1, 1, 1]");
        assert_eq!(gf4.element(&[1, 1]).unwrap().to_string(), "g + 1");
        assert_eq!(gf4.zero().to_string(), "0");
        let gf7 = Field::new(7, 1).unwrap();
        assert_eq!(gf7.to_string(), "GF(7), modulus = [0, 1]");
        assert_eq!(gf7.from_int(5).to_string(), "5");
    }

    #[test]
    fn field_axioms_gf4() {
        let f = Field::new(2, 2).unwrap();
        let all: Vec<FieldElement> = f.elements().collect();
        for a in &all {
            for b in &all {
                assert_eq!(f.add(a, b).unwrap(), f.add(b, a).unwrap());
                assert_eq!(f.mul(a, b).unwrap(), f.mul(b, a).unwrap());
                for c in &all {
                    let left = f.mul(a, &f.add(b, c).unwrap()).unwrap();
                    let right = f.add(&f.mul(a, b).unwrap(), &f.mul(a, c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
            assert_eq!(&f.add(a, &f.zero()).unwrap(), a);
            assert_eq!(&f.mul(a, &f.one()).unwrap(), a);
            if !a.is_zero() {
                assert_eq!(f.mul(a, &f.inv(a).unwrap()).unwrap(), f.one());
            }
        }
    }

    proptest! {
        #[test]
        fn zero_tests_agree_on_degree_bounded_polynomials(
            field_pick in 0usize..5,
            terms in proptest::collection::vec(
                (proptest::collection::vec(0u32..3, 2), -4i64..5),
                0..6,
            ),
        ) {
            let (p, t) = [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)][field_pick];
            let f = Field::new(p, t).unwrap();
            // clamp exponents below q so the bounded test's precondition holds
            let qm1 = (f.order() - 1) as u32;
            let poly = Polynomial::from_terms(
                2,
                terms.into_iter().map(|(e, c)| {
                    (e.into_iter().map(|x| x.min(qm1)).collect::<Vec<u32>>(), c)
                }),
            )
            .unwrap();
            prop_assert_eq!(
                f.degree_bounded_zero_test(&poly).unwrap(),
                f.is_identically_zero(&poly).unwrap()
            );
        }
    }
}
