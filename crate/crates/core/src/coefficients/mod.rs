//! Exact Laurent polynomials over the integers in a fixed set of commuting
//! unit variables.
//!
//! Everything in the kernel is a module over `Z[r^±1, s^±1]`; the extra
//! variables `l1, l2, g1, g2` carry the formal unit scalars of candidate
//! endomorphisms. Values are immutable in practice and cheap to clone for
//! the small polynomials that occur here.

mod point;
mod scalar;
pub(crate) mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use point::RationalPoint;
pub use scalar::{Scalar, DENOMINATOR_FACTORS};
pub(crate) use text::{Lexer, Token};

use crate::error::{Error, Result};

pub const NVARS: usize = 6;

/// The declared variable universe. Unused variables simply carry exponent 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    R,
    S,
    Lambda1,
    Lambda2,
    Gamma1,
    Gamma2,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::R,
        Var::S,
        Var::Lambda1,
        Var::Lambda2,
        Var::Gamma1,
        Var::Gamma2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::R => "r",
            Var::S => "s",
            Var::Lambda1 => "l1",
            Var::Lambda2 => "l2",
            Var::Gamma1 => "g1",
            Var::Gamma2 => "g2",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

/// Exponent vector, one entry per [`Var`]; negative entries allowed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents(pub [i32; NVARS]);

impl Exponents {
    pub const ZERO: Exponents = Exponents([0; NVARS]);

    pub fn var(v: Var, e: i32) -> Self {
        let mut out = [0; NVARS];
        out[v.index()] = e;
        Exponents(out)
    }

    /// `r^a s^b`
    pub fn rs(a: i32, b: i32) -> Self {
        let mut out = [0; NVARS];
        out[0] = a;
        out[1] = b;
        Exponents(out)
    }

    pub fn get(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Exponents) -> Exponents {
        let mut out = self.0;
        for (o, e) in out.iter_mut().zip(other.0.iter()) {
            *o += e;
        }
        Exponents(out)
    }

    pub fn sub(&self, other: &Exponents) -> Exponents {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i32) -> Exponents {
        Exponents(self.0.map(|e| e * k))
    }

    fn meet(&self, other: &Exponents) -> Exponents {
        let mut out = self.0;
        for (o, e) in out.iter_mut().zip(other.0.iter()) {
            *o = (*o).min(*e);
        }
        Exponents(out)
    }

    fn dominates(&self, other: &Exponents) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }
}

/// Minimal commutative ring interface shared by the symbolic coefficients and
/// their numeric specializations.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, Exponents::ZERO)
    }

    /// `coef * prod v_i^{e_i}`; a zero coefficient gives the zero polynomial.
    pub fn monomial(coef: impl Into<BigInt>, exps: Exponents) -> Self {
        let coef = coef.into();
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exps, coef);
        }
        LaurentPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(1, Exponents::var(v, 1))
    }

    /// `r^a s^b`
    pub fn rs(a: i32, b: i32) -> Self {
        Self::monomial(1, Exponents::rs(a, b))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &Exponents) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// The single term, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&Exponents, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The integer value, if this is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.as_monomial() {
            Some((e, c)) if e.is_zero() => Some(c.clone()),
            None if self.is_zero() => Some(BigInt::zero()),
            _ => None,
        }
    }

    /// Units of `Z[v^±1]` are exactly `±monomial`.
    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some_and(|(_, c)| c.abs().is_one())
    }

    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        let (e, c) = self.as_monomial()?;
        if c.abs().is_one() {
            Some(LaurentPoly::monomial(c.clone(), e.scale(-1)))
        } else {
            None
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        if let Some((e, c)) = self.as_monomial() {
            return LaurentPoly::monomial(
                num_traits::pow(c.clone(), n as usize),
                e.scale(n as i32),
            );
        }
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents require a unit.
    pub fn powi(&self, n: i32) -> Option<LaurentPoly> {
        if n >= 0 {
            Some(self.pow(n as u32))
        } else {
            Some(self.unit_inverse()?.pow(n.unsigned_abs()))
        }
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiply by the monomial `prod v^shift`.
    pub fn shift(&self, shift: &Exponents) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(shift), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, exps: Exponents, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn min_exponents(&self) -> Exponents {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(e) => *e,
            None => return Exponents::ZERO,
        };
        it.fold(first, |acc, e| acc.meet(e))
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None` when the
    /// division does not come out even.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if let Some(inv) = divisor.unit_inverse() {
            return Some(self * &inv);
        }
        if let Some((de, dc)) = divisor.as_monomial() {
            let mut terms = BTreeMap::new();
            for (e, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                terms.insert(e.sub(de), q);
            }
            return Some(LaurentPoly { terms });
        }
        // Clear monomial denominators; the Laurent quotient exists iff the
        // polynomial quotient of the shifted parts does, because a shifted
        // divisor has no monomial factor.
        let a_shift = self.min_exponents();
        let b_shift = divisor.min_exponents();
        let mut rem = self.shift(&a_shift.scale(-1));
        let b = divisor.shift(&b_shift.scale(-1));
        let (b_lead_e, b_lead_c) = b.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
        let mut quot = LaurentPoly::zero();
        while let Some((le, lc)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            if !le.dominates(&b_lead_e) {
                return None;
            }
            let (qc, r) = lc.div_rem(&b_lead_c);
            if !r.is_zero() {
                return None;
            }
            let qe = le.sub(&b_lead_e);
            for (e, c) in &b.terms {
                rem.add_term(e.add(&qe), -(c * &qc));
            }
            quot.add_term(qe, qc);
        }
        Some(quot.shift(&a_shift.sub(&b_shift)))
    }

    /// Exact rational value at `pt`.
    pub fn evaluate(&self, pt: &RationalPoint) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for v in Var::ALL {
                let k = e.get(v);
                if k == 0 {
                    continue;
                }
                let x = pt
                    .get(v)
                    .ok_or_else(|| Error::UnassignedVariable(v.name().to_string()))?;
                t *= num_traits::pow::Pow::pow(x, k);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute each variable by a Laurent polynomial value (units where a
    /// negative exponent occurs).
    pub fn substitute(&self, f: impl Fn(Var) -> Option<LaurentPoly>) -> Option<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut t = LaurentPoly::constant(c.clone());
            for v in Var::ALL {
                let k = e.get(v);
                if k == 0 {
                    continue;
                }
                let val = match f(v) {
                    Some(val) => val,
                    None => LaurentPoly::var(v),
                };
                t = &t * &val.powi(k)?;
            }
            acc += &t;
        }
        Some(acc)
    }

    /// Whether any term mentions `v`.
    pub fn mentions(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e.get(v) != 0)
    }
}

impl Ring for LaurentPoly {
    fn ring_zero() -> Self {
        LaurentPoly::zero()
    }
    fn ring_one() -> Self {
        LaurentPoly::one()
    }
    fn ring_is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Ring for BigRational {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // monomial fast path, the overwhelmingly common case
        if let Some((e, c)) = rhs.as_monomial() {
            return LaurentPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|(e2, c2)| (e2.add(e), c2 * c))
                    .collect(),
            };
        }
        if let Some((e, c)) = self.as_monomial() {
            return LaurentPoly {
                terms: rhs
                    .terms
                    .iter()
                    .map(|(e2, c2)| (e2.add(e), c2 * c))
                    .collect(),
            };
        }
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl<'a> MulAssign<&'a LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &'a LaurentPoly) {
        *self = &*self * rhs;
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &Exponents) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let k = e.get(v);
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{}", v.name())?;
        } else {
            write!(f, "{}^{}", v.name(), k)?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    /// Terms in decreasing lexicographic exponent order, e.g. `-3*r^2*s^-1 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if e.is_zero() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

/// Printing hooks for coefficients of linear combinations.
pub trait Coefficient: fmt::Display + Sized {
    /// `(true, -c)` when `c` should print with a leading minus sign.
    fn split_sign(&self) -> (bool, Self);
    /// Whether the text needs parentheses inside a product.
    fn is_compound(&self) -> bool;
    fn is_unity(&self) -> bool;
}

impl Coefficient for LaurentPoly {
    fn split_sign(&self) -> (bool, Self) {
        match self.as_monomial() {
            Some((_, k)) if k.is_negative() => (true, -self),
            _ => (false, self.clone()),
        }
    }
    fn is_compound(&self) -> bool {
        self.len() > 1
    }
    fn is_unity(&self) -> bool {
        self.is_one()
    }
}

impl Coefficient for Scalar {
    fn split_sign(&self) -> (bool, Self) {
        self.sign_split()
    }
    fn is_compound(&self) -> bool {
        Scalar::is_compound(self)
    }
    fn is_unity(&self) -> bool {
        self.is_one()
    }
}

impl Coefficient for BigRational {
    fn split_sign(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }
    fn is_compound(&self) -> bool {
        !self.is_integer()
    }
    fn is_unity(&self) -> bool {
        self.is_one()
    }
}

/// Writes `c1*b1 + c2*b2 + ...`, parenthesizing compound coefficients and
/// dropping unit coefficients. A basis label of `"1"` prints the bare scalar.
pub fn write_combination<'a, C, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    C: Coefficient + 'a,
    I: IntoIterator<Item = (String, &'a C)>,
{
    let mut first = true;
    for (basis, c) in terms {
        let (neg, mag) = c.split_sign();
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        let scalar = if mag.is_compound() {
            format!("({mag})")
        } else {
            mag.to_string()
        };
        match (basis == "1", mag.is_unity()) {
            (true, _) => write!(f, "{mag}")?,
            (false, true) => write!(f, "{basis}")?,
            (false, false) => write!(f, "{scalar}*{basis}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        text::parse_poly(s)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: BTreeMap<String, i32>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let list: Vec<TermJson> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| TermJson {
                coeff: c.to_string(),
                exps: Var::ALL
                    .iter()
                    .filter(|v| e.get(**v) != 0)
                    .map(|v| (v.name().to_string(), e.get(*v)))
                    .collect(),
            })
            .collect();
        list.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let list = Vec::<TermJson>::deserialize(de)?;
        let mut out = LaurentPoly::zero();
        for t in list {
            let coef: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            let mut e = [0; NVARS];
            for (name, k) in t.exps {
                let v = Var::from_name(&name)
                    .ok_or_else(|| D::Error::custom(format!("unknown variable {name}")))?;
                e[v.index()] = k;
            }
            out.add_term(Exponents(e), coef);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn monomial_examples() {
        let m = LaurentPoly::monomial(1, Exponents::rs(-1, -2));
        assert_eq!(m.to_string(), "r^-1*s^-2");
        assert!(LaurentPoly::monomial(0, Exponents::rs(3, 4)).is_zero());
        assert_eq!(LaurentPoly::constant(-1).to_string(), "-1");
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&p("r^-3 + s^-3") * &p("r^3*s^3"), p("s^3 + r^3"));
        assert_eq!(&p("1 + r") * &p("1 - r"), p("1 - r^2"));
        assert_eq!(
            &p("r + s") * &p("r^2 + s^2"),
            p("r^3 + r*s^2 + r^2*s + s^3")
        );
    }

    #[test]
    fn display_order() {
        assert_eq!(p("1 - 3*r^2*s^-1").to_string(), "-3*r^2*s^-1 + 1");
    }

    #[test]
    fn cancellation_is_canonical() {
        let a = p("r^2 - 7*s + r*s^-4");
        assert!((&a + &(-&a)).is_empty());
    }

    #[test]
    fn exact_division() {
        let a = p("r + s");
        let b = p("r^2 - r*s + s^2");
        let prod = &(&a * &b) * &p("-2*r^-5*s^3");
        assert_eq!(prod.div_exact(&a).unwrap(), &b * &p("-2*r^-5*s^3"));
        assert_eq!(prod.div_exact(&b).unwrap(), &a * &p("-2*r^-5*s^3"));
        assert!(p("r^2 + s^2").div_exact(&a).is_none());
        assert!(p("3*r + 6").div_exact(&p("2")).is_none());
        assert_eq!(p("3*r + 6").div_exact(&p("3")).unwrap(), p("r + 2"));
    }

    #[test]
    fn units() {
        assert!(p("-r^-2*s").is_unit());
        assert!(!p("2*r").is_unit());
        assert_eq!(p("-r^-2*s").unit_inverse().unwrap(), p("-r^2*s^-1"));
        assert!(p("r + s").powi(-1).is_none());
    }

    #[test]
    fn evaluation() {
        let pt = RationalPoint::rs(q(2), q(3));
        let v = p("r^-1*s^-2").evaluate(&pt).unwrap();
        assert_eq!(v, BigRational::new(1.into(), 18.into()));
        assert!(LaurentPoly::zero().evaluate(&pt).unwrap().is_zero());
        let nongeneric = RationalPoint::rs(q(1), q(-1));
        assert!(p("r^3 + s^3").evaluate(&nongeneric).unwrap() == q(0));
        assert!(!nongeneric.is_generic(4));
        assert!(p("l1").evaluate(&pt).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = p("-3*r^2*s^-1 + 1 + g1*l2^-1");
        let js = serde_json::to_string(&a).unwrap();
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn monomial_equality_is_exponent_equality() {
        for a in -3..=3 {
            for b in -3..=3 {
                for c in -3..=3 {
                    for d in -3..=3 {
                        let eq = LaurentPoly::rs(a, b) == LaurentPoly::rs(c, d);
                        assert_eq!(eq, (a, b) == (c, d));
                    }
                }
            }
        }
    }
}
