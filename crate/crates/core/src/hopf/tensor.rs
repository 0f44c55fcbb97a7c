use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::coefficients::{write_combination, Scalar};
use crate::pbw::{multiply, AlgebraElement, Monomial};

/// Linear combination of `N`-fold tensors of PBW monomials. Products are
/// taken slotwise with no sign twist.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Tensor<const N: usize> {
    terms: BTreeMap<[Monomial; N], Scalar>,
}

pub type TensorElement = Tensor<2>;

impl<const N: usize> Tensor<N> {
    pub fn zero() -> Self {
        Tensor {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::pure([Monomial::ONE; N], Scalar::one())
    }

    pub fn pure(key: [Monomial; N], c: Scalar) -> Self {
        let mut t = Self::zero();
        t.add_term(key, c);
        t
    }

    pub fn add_term(&mut self, key: [Monomial; N], c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Monomial; N], &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (k, x) in &self.terms {
            out.add_term(*k, x * c);
        }
        out
    }

    /// `c * a_1 (x) ... (x) a_N` expanded in the monomial basis.
    pub fn from_factors(c: &Scalar, factors: [&AlgebraElement; N]) -> Self {
        let mut acc: Vec<([Monomial; N], Scalar)> = vec![([Monomial::ONE; N], c.clone())];
        for (slot, f) in factors.iter().enumerate() {
            let mut next = Vec::new();
            for (key, x) in &acc {
                for (m, y) in f.terms() {
                    let mut k = *key;
                    k[slot] = *m;
                    next.push((k, x * y));
                }
            }
            acc = next;
        }
        let mut out = Self::zero();
        for (k, c) in acc {
            out.add_term(k, c);
        }
        out
    }

    /// Replaces slot `slot` of every term by `f` of its monomial.
    pub fn map_slot(&self, slot: usize, f: impl Fn(&Monomial) -> AlgebraElement) -> Self {
        let mut out = Self::zero();
        for (key, c) in &self.terms {
            for (m, d) in f(&key[slot]).terms() {
                let mut k = *key;
                k[slot] = *m;
                out.add_term(k, c * d);
            }
        }
        out
    }

    /// Slotwise product, each slot normalized by PBW multiplication.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let prods: Vec<AlgebraElement> = (0..N)
                    .map(|i| {
                        multiply(
                            &AlgebraElement::monomial(ka[i], Scalar::one()),
                            &AlgebraElement::monomial(kb[i], Scalar::one()),
                        )
                    })
                    .collect();
                let refs: [&AlgebraElement; N] = std::array::from_fn(|i| &prods[i]);
                let t = Self::from_factors(&(ca * cb), refs);
                for (k, c) in t.terms {
                    out.add_term(k, c);
                }
            }
        }
        out
    }

    /// Right multiplication by the group-like `k1^m k2^n` in every slot, which
    /// only shifts exponents.
    pub fn times_group_like(&self, k: [i32; 2]) -> Self {
        let mut out = Self::zero();
        for (key, c) in &self.terms {
            let key = key.map(|m| Monomial {
                x: m.x,
                k: [m.k[0] + k[0], m.k[1] + k[1]],
            });
            out.add_term(key, c.clone());
        }
        out
    }
}

impl<const N: usize> Add for &Tensor<N> {
    type Output = Tensor<N>;
    fn add(self, rhs: &Tensor<N>) -> Tensor<N> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<const N: usize> Sub for &Tensor<N> {
    type Output = Tensor<N>;
    fn sub(self, rhs: &Tensor<N>) -> Tensor<N> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl<const N: usize> Mul for &Tensor<N> {
    type Output = Tensor<N>;
    fn mul(self, rhs: &Tensor<N>) -> Tensor<N> {
        self.multiply(rhs)
    }
}

/// `(a (x) b)(c (x) d) = ac (x) bd`.
pub fn tensor_multiply(t1: &TensorElement, t2: &TensorElement) -> TensorElement {
    t1.multiply(t2)
}

impl<const N: usize> fmt::Display for Tensor<N> {
    /// Terms as `c*(x (x) y)`, largest key first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(
            f,
            self.terms.iter().rev().map(|(k, c)| {
                let parts: Vec<String> = k.iter().map(Monomial::to_string).collect();
                (format!("({})", parts.join(" (x) ")), c)
            }),
        )
    }
}

impl<const N: usize> fmt::Debug for Tensor<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTerm {
    left: String,
    right: String,
    coeff: Scalar,
}

impl Serialize for TensorElement {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TensorTerm> = self
            .terms
            .iter()
            .map(|([l, r], c)| TensorTerm {
                left: l.to_string(),
                right: r.to_string(),
                coeff: c.clone(),
            })
            .collect();
        v.serialize(ser)
    }
}
