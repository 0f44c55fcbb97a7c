use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::{Var, NVARS};
use crate::error::{Error, Result};

/// An assignment of nonzero rationals to (some of) the variables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPoint {
    values: [Option<BigRational>; NVARS],
}

impl RationalPoint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rs(r: BigRational, s: BigRational) -> Self {
        let mut pt = Self::new();
        pt.set(Var::R, r).expect("nonzero r");
        pt.set(Var::S, s).expect("nonzero s");
        pt
    }

    pub fn set(&mut self, v: Var, value: BigRational) -> Result<()> {
        if value.is_zero() {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("variable {} must be nonzero", v.name()),
            });
        }
        self.values[v.index()] = Some(value);
        Ok(())
    }

    pub fn get(&self, v: Var) -> Option<&BigRational> {
        self.values[v.index()].as_ref()
    }

    /// Random point with `r, s` drawn from small nonzero fractions, rejecting
    /// points with `r^m s^n = 1` for `|m|, |n| <= bound`.
    pub fn random_generic<R: Rng>(rng: &mut R, bound: i32) -> Self {
        loop {
            let mut draw = || {
                let num: i64 = loop {
                    let n = rng.gen_range(-9i64..=9);
                    if n != 0 {
                        break n;
                    }
                };
                let den: i64 = rng.gen_range(1i64..=7);
                BigRational::new(num.into(), den.into())
            };
            let pt = RationalPoint::rs(draw(), draw());
            if pt.is_generic(bound) {
                return pt;
            }
        }
    }

    /// No relation `r^m s^n = 1` with `0 < max(|m|,|n|) <= bound`.
    ///
    /// With `bound >= 6` this also keeps away from the zeros of `r+s`,
    /// `r^2+s^2` and `r^2 +- rs + s^2`.
    pub fn is_generic(&self, bound: i32) -> bool {
        let (Some(r), Some(s)) = (self.get(Var::R), self.get(Var::S)) else {
            return false;
        };
        for m in -bound..=bound {
            for n in -bound..=bound {
                if m == 0 && n == 0 {
                    continue;
                }
                let v = num_traits::pow::Pow::pow(r, m) * num_traits::pow::Pow::pow(s, n);
                if v.is_one() {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            if let Some(x) = self.get(v) {
                if !first {
                    write!(f, ",")?;
                }
                first = false;
                write!(f, "{}={}", v.name(), x)?;
            }
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl FromStr for RationalPoint {
    type Err = Error;

    /// `r=2,s=-3/5`
    fn from_str(s: &str) -> Result<Self> {
        let mut pt = RationalPoint::new();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            let (name, val) = part.split_once('=').ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("expected var=value, got {part:?}"),
            })?;
            let v = Var::from_name(name.trim()).ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown variable {:?}", name.trim()),
            })?;
            let x = parse_rational(val).ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("bad rational {:?}", val.trim()),
            })?;
            pt.set(v, x)?;
        }
        Ok(pt)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_point() {
        let pt: RationalPoint = "r=2, s=-3/5".parse().unwrap();
        assert_eq!(
            pt.get(Var::R).unwrap(),
            &BigRational::from_integer(2.into())
        );
        assert_eq!(
            pt.get(Var::S).unwrap(),
            &BigRational::new((-3).into(), 5.into())
        );
        assert!("r=0".parse::<RationalPoint>().is_err());
        assert!("q=1".parse::<RationalPoint>().is_err());
    }

    #[test]
    fn genericity() {
        let pt: RationalPoint = "r=2,s=3".parse().unwrap();
        assert!(pt.is_generic(6));
        let pt: RationalPoint = "r=2,s=1/4".parse().unwrap();
        assert!(!pt.is_generic(2));
    }
}
