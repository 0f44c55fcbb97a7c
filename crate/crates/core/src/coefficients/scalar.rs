//! Laurent polynomials localized at a fixed set of binary forms.
//!
//! Straightening root vectors produces structure constants such as
//! `r(r-s)(r^2+rs+s^2)/(r+s)`. Every allowed denominator is a factor of some
//! `r^n - s^n`, hence nonzero whenever `r^m s^n = 1` forces `m = n = 0`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{LaurentPoly, RationalPoint, Ring, Var};
use crate::error::{Error, Result};

/// Irreducible denominators admitted by [`Scalar`].
pub const DENOMINATOR_FACTORS: [&str; 5] = [
    "r - s",
    "r + s",
    "r^2 + s^2",
    "r^2 + r*s + s^2",
    "r^2 - r*s + s^2",
];

const NF: usize = DENOMINATOR_FACTORS.len();

fn factors() -> &'static [LaurentPoly; NF] {
    static F: OnceLock<[LaurentPoly; NF]> = OnceLock::new();
    F.get_or_init(|| DENOMINATOR_FACTORS.map(|s| s.parse().expect("factor")))
}

/// `num / prod f_i^den_i`, reduced so that no `f_i` with `den_i > 0` divides
/// `num`. The representation is canonical, so derived equality is equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    num: LaurentPoly,
    den: [u32; NF],
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator_exponents(&self) -> [u32; NF] {
        self.den
    }

    pub fn denominator(&self) -> LaurentPoly {
        self.den
            .iter()
            .zip(factors())
            .fold(LaurentPoly::one(), |acc, (&e, f)| &acc * &f.pow(e))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.is_polynomial()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == [0; NF]
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// `num / den`, provided `den` is a unit times a product of the admitted
    /// factors after cancelling what divides `num`.
    pub fn ratio(num: &LaurentPoly, den: &LaurentPoly) -> Option<Scalar> {
        if den.is_zero() {
            return None;
        }
        let mut num = num.clone();
        let mut den = den.clone();
        let mut exps = [0u32; NF];
        for (i, f) in factors().iter().enumerate() {
            while let Some(d) = den.div_exact(f) {
                den = d;
                match num.div_exact(f) {
                    Some(n) => num = n,
                    None => exps[i] += 1,
                }
            }
        }
        let inv = den.unit_inverse()?;
        Some(Scalar::reduced(&num * &inv, exps))
    }

    fn reduced(mut num: LaurentPoly, mut den: [u32; NF]) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        for (i, f) in factors().iter().enumerate() {
            while den[i] > 0 {
                match num.div_exact(f) {
                    Some(n) => {
                        num = n;
                        den[i] -= 1;
                    }
                    None => break,
                }
            }
        }
        Scalar { num, den }
    }

    fn lift_to(&self, den: &[u32; NF]) -> LaurentPoly {
        let mut n = self.num.clone();
        for (i, f) in factors().iter().enumerate() {
            let e = den[i] - self.den[i];
            if e > 0 {
                n = &n * &f.pow(e);
            }
        }
        n
    }

    pub fn is_unit(&self) -> bool {
        self.is_polynomial() && self.num.is_unit()
    }

    /// Inverse of a nonzero scalar whose numerator is a unit or a product of
    /// admitted factors.
    pub fn inverse(&self) -> Option<Scalar> {
        let den = self.denominator();
        Scalar::ratio(&den, &self.num)
    }

    pub fn pow(&self, n: u32) -> Scalar {
        (0..n).fold(Scalar::one(), |acc, _| &acc * self)
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.num.mentions(v)
    }

    pub fn evaluate(&self, pt: &RationalPoint) -> Result<BigRational> {
        let d = self.denominator().evaluate(pt)?;
        if d.is_zero() {
            return Err(Error::Invalid(format!(
                "denominator of {self} vanishes at {pt}"
            )));
        }
        Ok(self.num.evaluate(pt)? / d)
    }

    /// Substitution into the numerator. The denominator only involves `r, s`,
    /// so `f` must leave those alone.
    pub fn substitute_units(&self, f: impl Fn(Var) -> Option<LaurentPoly>) -> Option<Scalar> {
        if f(Var::R).is_some() || f(Var::S).is_some() {
            return None;
        }
        Some(Scalar::reduced(self.num.substitute(f)?, self.den))
    }

    /// `(is_negative, magnitude)` split used when printing sums.
    pub(crate) fn sign_split(&self) -> (bool, Scalar) {
        match self.num.as_monomial() {
            Some((_, k)) if k.is_negative() => (true, -self),
            _ => (false, self.clone()),
        }
    }

    /// Whether printing needs parentheses inside a product.
    pub(crate) fn is_compound(&self) -> bool {
        self.num.len() > 1 || !self.is_polynomial()
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(num: LaurentPoly) -> Self {
        Scalar { num, den: [0; NF] }
    }
}

impl From<&LaurentPoly> for Scalar {
    fn from(num: &LaurentPoly) -> Self {
        num.clone().into()
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c).into()
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.den == rhs.den && self.is_polynomial() {
            return Scalar::from(&self.num + &rhs.num);
        }
        let den: [u32; NF] = std::array::from_fn(|i| self.den[i].max(rhs.den[i]));
        Scalar::reduced(&self.lift_to(&den) + &rhs.lift_to(&den), den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let num = &self.num * &rhs.num;
        if self.is_polynomial() && rhs.is_polynomial() {
            return Scalar::from(num);
        }
        let den = std::array::from_fn(|i| self.den[i] + rhs.den[i]);
        Scalar::reduced(num, den)
    }
}

impl Mul<&LaurentPoly> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &LaurentPoly) -> Scalar {
        self * &Scalar::from(rhs)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl Ring for Scalar {
    fn ring_zero() -> Self {
        Scalar::zero()
    }
    fn ring_one() -> Self {
        Scalar::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
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

impl fmt::Display for Scalar {
    /// `r*(r - s)/(r + s)` style; polynomials print as themselves.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/")?;
        let parts: Vec<String> = self
            .den
            .iter()
            .zip(DENOMINATOR_FACTORS)
            .filter(|(e, _)| **e > 0)
            .map(|(&e, s)| {
                if e == 1 {
                    format!("({s})")
                } else {
                    format!("({s})^{e}")
                }
            })
            .collect();
        if parts.len() == 1 {
            write!(f, "{}", parts[0])
        } else {
            write!(f, "({})", parts.join("*"))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl std::str::FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        super::text::parse_scalar(s)
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarJson {
    num: LaurentPoly,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    den: Vec<(String, u32)>,
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarJson {
            num: self.num.clone(),
            den: self
                .den
                .iter()
                .zip(DENOMINATOR_FACTORS)
                .filter(|(e, _)| **e > 0)
                .map(|(&e, s)| (s.to_string(), e))
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ScalarJson::deserialize(de)?;
        let mut den = [0u32; NF];
        for (name, e) in j.den {
            let i = DENOMINATOR_FACTORS
                .iter()
                .position(|s| *s == name)
                .ok_or_else(|| D::Error::custom(format!("unknown denominator factor {name}")))?;
            den[i] += e;
        }
        Ok(Scalar::reduced(j.num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ratio_cancels_and_rejects() {
        let x = Scalar::ratio(&p("r^3 - s^3"), &p("r^2 - s^2")).unwrap();
        assert_eq!(x.numerator(), &p("r^2 + r*s + s^2"));
        assert_eq!(x.denominator(), p("r + s"));
        assert!(Scalar::ratio(&p("1"), &p("r + 2*s")).is_none());
        assert_eq!(
            Scalar::ratio(&p("r + s"), &p("r^2*(r + s)")).unwrap(),
            Scalar::from(p("r^-2"))
        );
    }

    #[test]
    fn field_operations() {
        let a = Scalar::ratio(&p("1"), &p("r + s")).unwrap();
        let b = Scalar::ratio(&p("1"), &p("r - s")).unwrap();
        let sum = &a + &b;
        assert_eq!(sum, Scalar::ratio(&p("2*r"), &p("r^2 - s^2")).unwrap());
        assert_eq!(&a * &Scalar::from(p("r + s")), Scalar::one());
        assert!((&sum - &sum).is_zero());
        assert_eq!(a.inverse().unwrap(), Scalar::from(p("r + s")));
    }

    #[test]
    fn text_and_json() {
        let x = Scalar::ratio(&p("r*(r - s)*(r^2 + r*s + s^2)"), &p("r + s")).unwrap();
        let text = x.to_string();
        assert_eq!(text.parse::<Scalar>().unwrap(), x);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), x);
        let pt: RationalPoint = "r=2,s=3".parse().unwrap();
        assert_eq!(
            x.evaluate(&pt).unwrap(),
            BigRational::new((-38).into(), 5.into())
        );
    }
}
