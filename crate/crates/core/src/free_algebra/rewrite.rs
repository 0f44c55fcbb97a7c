use std::fmt;

use serde::Serialize;

use super::{FreeElement, Word};
use crate::coefficients::LaurentPoly;
use crate::error::{Error, Result};

/// Hard cap on rewrite steps in one reduction. Every step replaces a word by
/// strictly smaller ones under a well-order, so hitting the cap means a rule
/// set that is not order-decreasing slipped through validation.
pub const STEP_BUDGET: usize = 20_000_000;

/// `lead * lhs -> rhs`, with every word of `rhs` strictly below `lhs`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct RewriteRule {
    pub lhs: Word,
    pub lead: LaurentPoly,
    pub rhs: FreeElement,
}

impl RewriteRule {
    pub fn new(lhs: Word, lead: LaurentPoly, rhs: FreeElement) -> Result<Self> {
        if lead.is_zero() {
            return Err(Error::Invalid(format!(
                "rule for {lhs} has zero leading coefficient"
            )));
        }
        if let Some((top, _)) = rhs.leading() {
            if top >= &lhs {
                return Err(Error::Invalid(format!(
                    "rule {lhs} -> ... is not order-decreasing ({top} on the right)"
                )));
            }
        }
        let mut rule = RewriteRule { lhs, lead, rhs };
        rule.normalize_unit();
        Ok(rule)
    }

    /// Orients `rel = 0` towards its largest word. Returns `None` for zero.
    pub fn from_relation(rel: &FreeElement) -> Option<Self> {
        let (lhs, lead) = rel.leading()?;
        let (lhs, lead) = (lhs.clone(), lead.clone());
        let mut rhs = -rel;
        rhs.add_term(lhs.clone(), lead.clone());
        let mut rule = RewriteRule { lhs, lead, rhs };
        rule.normalize_unit();
        Some(rule)
    }

    /// The relation `lead * lhs - rhs`.
    pub fn relation(&self) -> FreeElement {
        let mut rel = -&self.rhs;
        rel.add_term(self.lhs.clone(), self.lead.clone());
        rel
    }

    fn normalize_unit(&mut self) {
        if let Some(inv) = self.lead.unit_inverse() {
            self.rhs = self.rhs.scale(&inv);
            self.lead = LaurentPoly::one();
        }
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lead.is_one() {
            write!(f, "{} -> {}", self.lhs, self.rhs)
        } else {
            write!(f, "({})*{} -> {}", self.lead, self.lhs, self.rhs)
        }
    }
}

impl fmt::Debug for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RewriteRule({self})")
    }
}

#[derive(Clone, Default, PartialEq, Eq, Debug, Serialize)]
pub struct RewriteSystem {
    rules: Vec<RewriteRule>,
}

impl RewriteSystem {
    pub fn new(rules: Vec<RewriteRule>) -> Result<Self> {
        let mut sys = RewriteSystem::default();
        for r in rules {
            sys.push(r)?;
        }
        Ok(sys)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn push(&mut self, rule: RewriteRule) -> Result<()> {
        if self.rules.iter().any(|r| r.lhs == rule.lhs) {
            return Err(Error::Invalid(format!(
                "duplicate left-hand side {}",
                rule.lhs
            )));
        }
        self.rules.push(rule);
        Ok(())
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn lhs_words(&self) -> Vec<&Word> {
        self.rules.iter().map(|r| &r.lhs).collect()
    }

    /// Leftmost occurrence of any left-hand side; ties go to the earlier rule.
    pub fn find_redex(&self, w: &Word) -> Option<(usize, &RewriteRule)> {
        let letters = w.letters();
        for i in 0..letters.len() {
            for r in &self.rules {
                if letters[i..].starts_with(r.lhs.letters()) {
                    return Some((i, r));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }
}

/// A reduced representative up to a nonzero scalar: `scale * x == elem`
/// modulo the ideal, with `elem` irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    pub scale: LaurentPoly,
    pub elem: FreeElement,
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    /// Equality of `elem / scale` as fractions.
    pub fn equivalent(&self, other: &NormalForm) -> bool {
        self.elem.scale(&other.scale) == other.elem.scale(&self.scale)
    }

    /// `elem / scale` when it has Laurent coefficients.
    pub fn to_element(&self) -> Option<FreeElement> {
        self.elem.div_exact(&self.scale)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale.is_one() {
            write!(f, "{}", self.elem)
        } else {
            write!(f, "({})^-1*({})", self.scale, self.elem)
        }
    }
}

/// Normal form of `x` under leftmost-first reduction of the largest word.
///
/// Rules with a non-unit leading coefficient are applied fraction-free: when
/// the current coefficient is not divisible by the lead, the whole state is
/// multiplied by it and the factor is recorded in `scale`.
pub fn nf_reduce(x: &FreeElement, sys: &RewriteSystem) -> NormalForm {
    reduce_scaled(LaurentPoly::one(), x.clone(), sys)
}

pub(crate) fn reduce_scaled(scale: LaurentPoly, x: FreeElement, sys: &RewriteSystem) -> NormalForm {
    let mut scale = scale;
    let mut todo = x;
    let mut done = FreeElement::zero();
    let mut factors: Vec<LaurentPoly> = Vec::new();
    let mut steps = 0usize;
    while let Some((w, c)) = todo.pop_leading() {
        let Some((at, rule)) = sys.find_redex(&w) else {
            done.add_term(w, c);
            continue;
        };
        steps += 1;
        assert!(
            steps <= STEP_BUDGET,
            "reduction exceeded {STEP_BUDGET} steps"
        );
        let coef = if rule.lead.is_one() {
            c
        } else if let Some(q) = c.div_exact(&rule.lead) {
            q
        } else {
            todo = todo.scale(&rule.lead);
            done = done.scale(&rule.lead);
            scale = &scale * &rule.lead;
            factors.push(rule.lead.clone());
            c
        };
        let prefix = Word(w.letters()[..at].to_vec());
        let suffix = Word(w.letters()[at + rule.lhs.len()..].to_vec());
        for (v, d) in rule.rhs.terms() {
            todo.add_term(prefix.concat(v).concat(&suffix), &coef * d);
        }
    }
    for f in factors.iter().rev() {
        if let (Some(s), Some(e)) = (scale.div_exact(f), done.div_exact(f)) {
            scale = s;
            done = e;
        }
    }
    if let Some(inv) = scale.unit_inverse() {
        done = done.scale(&inv);
        scale = LaurentPoly::one();
    }
    NormalForm { scale, elem: done }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::Letter;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_increasing_rule() {
        let rhs = FreeElement::word(w("e2*e1"), LaurentPoly::one());
        assert!(RewriteRule::new(w("e1*e2"), LaurentPoly::one(), rhs).is_err());
    }

    #[test]
    fn non_unit_lead_is_fraction_free() {
        let lead: LaurentPoly = "r + s".parse().unwrap();
        let rule =
            RewriteRule::new(w("e2*e1"), lead.clone(), FreeElement::letter(Letter::E1)).unwrap();
        let sys = RewriteSystem::new(vec![rule]).unwrap();
        let nf = nf_reduce(&FreeElement::word(w("e2*e1*e1"), LaurentPoly::one()), &sys);
        assert_eq!(nf.scale, lead);
        assert_eq!(nf.elem, FreeElement::word(w("e1*e1"), LaurentPoly::one()));
        assert!(nf.to_element().is_none());
        let twice = nf_reduce(&FreeElement::word(w("e2*e1"), lead.clone()), &sys);
        assert_eq!(twice.to_element().unwrap(), FreeElement::letter(Letter::E1));
    }
}
