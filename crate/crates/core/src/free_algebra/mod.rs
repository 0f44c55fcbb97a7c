//! Free associative algebra on `e1, e2` over the Laurent coefficients, and
//! the rewriting machinery that presents the positive part as a quotient.

mod critical;
mod rewrite;
mod serre;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::coefficients::{write_combination, LaurentPoly};
use crate::error::{Error, Result};

pub use critical::{
    complete, confluence_check, critical_pairs, irreducible_count, AmbiguityKind, ConfluenceReport,
    CriticalPair, PairVerdict,
};
pub use rewrite::{nf_reduce, NormalForm, RewriteRule, RewriteSystem};
pub use serre::{
    braided_serre, default_system, serre_relations, serre_system, serre_variant, serre_variants,
    SerreVariant,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    E1,
    E2,
}

impl Letter {
    pub fn name(self) -> &'static str {
        match self {
            Letter::E1 => "e1",
            Letter::E2 => "e2",
        }
    }

    /// `(1,0)` for `e1`, `(0,1)` for `e2`.
    pub fn weight(self) -> (u32, u32) {
        match self {
            Letter::E1 => (1, 0),
            Letter::E2 => (0, 1),
        }
    }
}

/// A word over `{e1, e2}`, ordered degree-lexicographically with `e2 > e1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn weight(&self) -> (u32, u32) {
        self.0.iter().fold((0, 0), |(p, q), l| {
            let (a, b) = l.weight();
            (p + a, q + b)
        })
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Positions where `pat` occurs as a contiguous subword.
    pub fn occurrences<'a>(&'a self, pat: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = pat.len();
        (0..=self.len().saturating_sub(n))
            .filter(move |&i| n <= self.len() && self.0[i..i + n] == pat.0[..])
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.occurrences(pat).next().is_some()
    }

    /// Replace `len` letters at `at` by `mid`.
    pub fn splice(&self, at: usize, len: usize, mid: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - len + mid.len());
        v.extend_from_slice(&self.0[..at]);
        v.extend_from_slice(&mid.0);
        v.extend_from_slice(&self.0[at + len..]);
        Word(v)
    }

    pub fn all_of_length(n: usize) -> impl Iterator<Item = Word> {
        (0u64..1 << n).map(move |bits| {
            Word(
                (0..n)
                    .map(|i| {
                        if bits >> (n - 1 - i) & 1 == 1 {
                            Letter::E2
                        } else {
                            Letter::E1
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let names: Vec<_> = self.0.iter().map(|l| l.name()).collect();
        write!(f, "{}", names.join("*"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    /// `e2*e1*e1`, or `1` for the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word::empty());
        }
        s.split('*')
            .map(|t| match t.trim() {
                "e1" => Ok(Letter::E1),
                "e2" => Ok(Letter::E2),
                other => Err(Error::Parse {
                    pos: 0,
                    msg: format!("expected e1 or e2, found {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Finite linear combination of words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreeElement {
    terms: BTreeMap<Word, LaurentPoly>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty(), LaurentPoly::one())
    }

    pub fn word(w: Word, c: LaurentPoly) -> Self {
        let mut x = Self::zero();
        x.add_term(w, c);
        x
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(Word::letter(l), LaurentPoly::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, LaurentPoly)>>(it: I) -> Self {
        let mut x = Self::zero();
        for (w, c) in it {
            x.add_term(w, c);
        }
        x
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, LaurentPoly> {
        self.terms
    }

    pub fn coefficient(&self, w: &Word) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&Word, &LaurentPoly)> {
        self.terms.iter().next_back()
    }

    pub fn pop_leading(&mut self) -> Option<(Word, LaurentPoly)> {
        self.terms.pop_last()
    }

    pub fn add_term(&mut self, w: Word, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn scale(&self, c: &LaurentPoly) -> FreeElement {
        if c.is_zero() {
            return FreeElement::zero();
        }
        FreeElement {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// `u * self * v` for words `u`, `v`.
    pub fn sandwich(&self, u: &Word, v: &Word) -> FreeElement {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (u.concat(w).concat(v), c.clone()))
                .collect(),
        }
    }

    /// Every coefficient divided exactly by `d`, if possible.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<FreeElement> {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            terms.insert(w.clone(), c.div_exact(d)?);
        }
        Some(FreeElement { terms })
    }

    /// Weights of all words present.
    pub fn weights(&self) -> std::collections::BTreeSet<(u32, u32)> {
        self.terms.keys().map(Word::weight).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weights().len() <= 1
    }

    pub fn pow(&self, n: u32) -> FreeElement {
        (0..n).fold(FreeElement::one(), |acc, _| &acc * self)
    }
}

impl Add for &FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        FreeElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &FreeElement {
    type Output = FreeElement;
    fn mul(self, rhs: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

impl fmt::Display for FreeElement {
    /// Largest word first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms.iter().rev().map(|(w, c)| (w.to_string(), c)))
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeElement({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct FreeTerm {
    word: Word,
    coeff: LaurentPoly,
}

impl Serialize for FreeElement {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<FreeTerm> = self
            .terms
            .iter()
            .map(|(w, c)| FreeTerm {
                word: w.clone(),
                coeff: c.clone(),
            })
            .collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for FreeElement {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<FreeTerm>::deserialize(de)?;
        Ok(FreeElement::from_terms(
            v.into_iter().map(|t| (t.word, t.coeff)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn deglex_order() {
        assert!(w("e2*e2*e1") > w("e2*e1*e2"));
        assert!(w("e2*e1*e2") > w("e1*e2*e2"));
        assert!(w("e1*e1*e1*e1") > w("e2*e2*e2"));
        assert!(w("e1") > Word::empty());
    }

    #[test]
    fn word_text_round_trip() {
        for n in 0..5 {
            for x in Word::all_of_length(n) {
                assert_eq!(w(&x.to_string()), x);
            }
        }
        assert_eq!(Word::all_of_length(4).count(), 16);
    }

    #[test]
    fn occurrences_and_splice() {
        let x = w("e2*e2*e1*e2*e1");
        let pat = w("e2*e1");
        assert_eq!(x.occurrences(&pat).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(x.splice(1, 2, &w("e1")), w("e2*e1*e2*e1"));
    }

    #[test]
    fn element_arithmetic() {
        let e1 = FreeElement::letter(Letter::E1);
        let e2 = FreeElement::letter(Letter::E2);
        let s3: LaurentPoly = "s^3".parse().unwrap();
        let x2 = &(&e1 * &e2) - &(&e2 * &e1).scale(&s3);
        assert_eq!(x2.to_string(), "-s^3*e2*e1 + e1*e2");
        assert!((&x2 - &x2).is_zero());
        let json = serde_json::to_string(&x2).unwrap();
        let back: FreeElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x2);
    }
}
