//! PBW normal forms `X1^n1 ... X6^n6 k1^m k2^n` for the augmented positive
//! Borel part, with multiplication by straightening.

mod convert;
mod roots;
mod solve;
mod straighten;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::coefficients::{
    write_combination, Coefficient, LaurentPoly, RationalPoint, Ring, Scalar,
};
use crate::error::Result;

pub use convert::{
    basis_of_degree, basis_of_weight, free_to_pbw, free_to_pbw_by_solve, graded_dimension,
    pbw_to_free, pbw_to_free_scaled,
};
pub use roots::{root_vector, DEGREES, ROOT_WEIGHTS};
pub use straighten::{multiply, straighten_pair, Straightener};

/// `(e1-degree, e2-degree)`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Weight {
    pub p: i64,
    pub q: i64,
}

impl Weight {
    pub const fn new(p: i64, q: i64) -> Self {
        Weight { p, q }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.p + o.p, self.q + o.q)
    }
}

/// The scalar `c` with `k1^m k2^n u = c u k1^m k2^n` for `u` of weight `w`.
pub fn k_move_scalar(w: Weight, m: i64, n: i64) -> LaurentPoly {
    let (p, q) = (w.p, w.q);
    let re = m * (-p + 3 * q) + n * (-3 * p + 6 * q);
    let se = m * (-2 * p + 3 * q) + n * (-3 * p + 3 * q);
    LaurentPoly::rs(re as i32, se as i32)
}

/// Exponents of `X1..X6` followed by those of `k1, k2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial {
    pub x: [u32; 6],
    pub k: [i32; 2],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        x: [0; 6],
        k: [0; 2],
    };

    /// `X_i` for `i` in `1..=6`.
    pub fn root(i: usize) -> Monomial {
        let mut x = [0; 6];
        x[i - 1] = 1;
        Monomial { x, k: [0; 2] }
    }

    pub fn group_like(m: i32, n: i32) -> Monomial {
        Monomial {
            x: [0; 6],
            k: [m, n],
        }
    }

    /// Total number of `e` letters.
    pub fn degree(&self) -> u32 {
        self.x.iter().zip(DEGREES).map(|(n, d)| n * d).sum()
    }

    pub fn weight(&self) -> Weight {
        self.x
            .iter()
            .zip(ROOT_WEIGHTS)
            .fold(Weight::default(), |acc, (&n, w)| {
                acc + Weight::new(w.p * n as i64, w.q * n as i64)
            })
    }

    pub fn x_part(&self) -> Monomial {
        Monomial {
            x: self.x,
            k: [0; 2],
        }
    }

    pub fn is_group_like(&self) -> bool {
        self.x == [0; 6]
    }

    /// Root indices `1..=6` in PBW order, with multiplicity.
    pub fn letters(&self) -> Vec<usize> {
        (0..6)
            .flat_map(|i| std::iter::repeat_n(i + 1, self.x[i] as usize))
            .collect()
    }
}

impl Ord for Monomial {
    /// Degree, then lexicographic in `X1..X6`, then the `k` exponents.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.x, self.k).cmp(&(other.degree(), other.x, other.k))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &n) in self.x.iter().enumerate() {
            match n {
                0 => {}
                1 => parts.push(format!("X{}", i + 1)),
                _ => parts.push(format!("X{}^{}", i + 1, n)),
            }
        }
        for (i, &n) in self.k.iter().enumerate() {
            match n {
                0 => {}
                1 => parts.push(format!("k{}", i + 1)),
                _ => parts.push(format!("k{}^{}", i + 1, n)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

/// Linear combination of PBW monomials with coefficients in `C`.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<C> {
    terms: BTreeMap<Monomial, C>,
}

pub type AlgebraElement = Element<Scalar>;

impl<C: Ring> Default for Element<C> {
    fn default() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Ring> Element<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE, C::ring_one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut x = Self::zero();
        x.add_term(m, c);
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(it: I) -> Self {
        let mut x = Self::zero();
        for (m, c) in it {
            x.add_term(m, c);
        }
        x
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.ring_is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().ring_is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::ring_zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (*m, x.mul_ref(c))))
    }

    pub fn map_coefficients<D: Ring>(&self, f: impl Fn(&C) -> D) -> Element<D> {
        Element::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn weights(&self) -> std::collections::BTreeSet<Weight> {
        self.terms.keys().map(Monomial::weight).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }
}

impl AlgebraElement {
    pub fn scalar(c: impl Into<Scalar>) -> Self {
        Self::monomial(Monomial::ONE, c.into())
    }

    /// `X_i` for `i` in `1..=6`.
    pub fn root(i: usize) -> Self {
        Self::monomial(Monomial::root(i), Scalar::one())
    }

    pub fn e1() -> Self {
        Self::root(6)
    }

    pub fn e2() -> Self {
        Self::root(1)
    }

    pub fn group_like(m: i32, n: i32) -> Self {
        Self::monomial(Monomial::group_like(m, n), Scalar::one())
    }

    pub fn evaluate(&self, pt: &RationalPoint) -> Result<Element<BigRational>> {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c.evaluate(pt)?);
        }
        Ok(out)
    }
}

impl<C: Ring> Add for &Element<C> {
    type Output = Element<C>;
    fn add(self, rhs: &Element<C>) -> Element<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<C: Ring> Sub for &Element<C> {
    type Output = Element<C>;
    fn sub(self, rhs: &Element<C>) -> Element<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.neg_ref());
        }
        out
    }
}

impl<C: Ring> Neg for &Element<C> {
    type Output = Element<C>;
    fn neg(self) -> Element<C> {
        self.map_coefficients(C::neg_ref)
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        multiply(self, rhs)
    }
}

impl<C: Ring + Coefficient> fmt::Display for Element<C> {
    /// Largest monomial first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms.iter().rev().map(|(m, c)| (m.to_string(), c)))
    }
}

impl<C: Ring + fmt::Debug> fmt::Debug for Element<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct PbwTerm {
    monomial: String,
    x: [u32; 6],
    k: [i32; 2],
    coeff: Scalar,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<PbwTerm> = self
            .terms
            .iter()
            .map(|(m, c)| PbwTerm {
                monomial: m.to_string(),
                x: m.x,
                k: m.k,
                coeff: c.clone(),
            })
            .collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<PbwTerm>::deserialize(de)?;
        Ok(Element::from_terms(
            v.into_iter()
                .map(|t| (Monomial { x: t.x, k: t.k }, t.coeff)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_scalars() {
        assert_eq!(
            k_move_scalar(Weight::new(1, 0), 1, 0),
            LaurentPoly::rs(-1, -2)
        );
        assert_eq!(
            k_move_scalar(Weight::new(0, 1), 0, 1),
            LaurentPoly::rs(6, 3)
        );
        assert_eq!(
            k_move_scalar(Weight::new(0, 1), 1, 0),
            LaurentPoly::rs(3, 3)
        );
        assert_eq!(
            k_move_scalar(Weight::new(1, 0), 0, 1),
            LaurentPoly::rs(-3, -3)
        );
        assert!(k_move_scalar(Weight::default(), 5, -7).is_one());
        let (a, b) = (Weight::new(2, 1), Weight::new(1, 3));
        assert_eq!(
            k_move_scalar(a + b, 2, -1),
            &k_move_scalar(a, 2, -1) * &k_move_scalar(b, 2, -1)
        );
    }

    #[test]
    fn monomial_weights_and_text() {
        assert_eq!(Monomial::root(6).weight(), Weight::new(1, 0));
        assert_eq!(Monomial::root(3).weight(), Weight::new(3, 2));
        let m = Monomial {
            x: [2, 0, 0, 0, 0, 1],
            k: [5, 0],
        };
        assert_eq!(m.weight(), Weight::new(1, 2));
        assert_eq!(m.to_string(), "X1^2*X6*k1^5");
        assert_eq!(m.letters(), [1, 1, 6]);
        assert_eq!(Monomial::ONE.to_string(), "1");
    }
}
