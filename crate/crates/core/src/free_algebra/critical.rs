use std::collections::HashSet;

use serde::Serialize;

use super::rewrite::reduce_scaled;
use super::{FreeElement, NormalForm, RewriteRule, RewriteSystem, Word};
use crate::coefficients::{Exponents, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AmbiguityKind {
    /// A proper suffix of the first left-hand side is a prefix of the second.
    Overlap,
    /// The second left-hand side sits inside the first.
    Inclusion,
}

/// An ambiguously reducible word together with its two one-step reductions,
/// each kept as a fraction over the lead of the rule used.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalPair {
    pub overlap: Word,
    pub rules: (usize, usize),
    /// Overlap length for [`AmbiguityKind::Overlap`], position otherwise.
    pub offset: usize,
    pub kind: AmbiguityKind,
    pub left: NormalForm,
    pub right: NormalForm,
}

pub fn critical_pairs(sys: &RewriteSystem) -> Vec<CriticalPair> {
    let rules = sys.rules();
    let mut out = Vec::new();
    for (i, a) in rules.iter().enumerate() {
        for (j, b) in rules.iter().enumerate() {
            let (la, lb) = (a.lhs.letters(), b.lhs.letters());
            for k in 1..la.len().min(lb.len()) {
                if la[la.len() - k..] != lb[..k] {
                    continue;
                }
                let tail = Word(lb[k..].to_vec());
                let head = Word(la[..la.len() - k].to_vec());
                out.push(CriticalPair {
                    overlap: a.lhs.concat(&tail),
                    rules: (i, j),
                    offset: k,
                    kind: AmbiguityKind::Overlap,
                    left: one_step(a, &Word::empty(), &tail),
                    right: one_step(b, &head, &Word::empty()),
                });
            }
            if i == j {
                continue;
            }
            for at in a.lhs.occurrences(&b.lhs) {
                let head = Word(la[..at].to_vec());
                let tail = Word(la[at + lb.len()..].to_vec());
                out.push(CriticalPair {
                    overlap: a.lhs.clone(),
                    rules: (i, j),
                    offset: at,
                    kind: AmbiguityKind::Inclusion,
                    left: one_step(a, &Word::empty(), &Word::empty()),
                    right: one_step(b, &head, &tail),
                });
            }
        }
    }
    out
}

fn one_step(rule: &RewriteRule, head: &Word, tail: &Word) -> NormalForm {
    NormalForm {
        scale: rule.lead.clone(),
        elem: rule.rhs.sandwich(head, tail),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairVerdict {
    pub overlap: Word,
    pub rules: (usize, usize),
    pub kind: AmbiguityKind,
    pub resolved: bool,
    /// `scale_r * nf(left) - scale_l * nf(right)`; zero when resolved.
    pub remainder: FreeElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceReport {
    pub rules: usize,
    pub pairs: Vec<PairVerdict>,
    pub confluent: bool,
}

fn resolve(pair: &CriticalPair, sys: &RewriteSystem) -> FreeElement {
    let l = reduce_scaled(pair.left.scale.clone(), pair.left.elem.clone(), sys);
    let r = reduce_scaled(pair.right.scale.clone(), pair.right.elem.clone(), sys);
    &l.elem.scale(&r.scale) - &r.elem.scale(&l.scale)
}

pub fn confluence_check(sys: &RewriteSystem) -> ConfluenceReport {
    let pairs: Vec<PairVerdict> = critical_pairs(sys)
        .iter()
        .map(|p| {
            let remainder = resolve(p, sys);
            PairVerdict {
                overlap: p.overlap.clone(),
                rules: p.rules,
                kind: p.kind,
                resolved: remainder.is_zero(),
                remainder,
            }
        })
        .collect();
    let confluent = pairs.iter().all(|p| p.resolved);
    ConfluenceReport {
        rules: sys.len(),
        pairs,
        confluent,
    }
}

/// Knuth-Bendix style completion: unresolved critical pairs with overlap
/// length at most `max_degree` become new rules until none remain.
pub fn complete(sys: &RewriteSystem, max_degree: usize) -> RewriteSystem {
    let mut sys = sys.clone();
    let mut seen: HashSet<(Word, Word, usize, AmbiguityKind)> = HashSet::new();
    loop {
        let mut pending: Vec<CriticalPair> = critical_pairs(&sys)
            .into_iter()
            .filter(|p| p.overlap.len() <= max_degree)
            .filter(|p| {
                let key = (
                    sys.rules()[p.rules.0].lhs.clone(),
                    sys.rules()[p.rules.1].lhs.clone(),
                    p.offset,
                    p.kind,
                );
                seen.insert(key)
            })
            .collect();
        if pending.is_empty() {
            return sys;
        }
        pending.sort_by(|a, b| a.overlap.cmp(&b.overlap));
        for p in &pending {
            let rem = resolve(p, &sys);
            if rem.is_zero() {
                continue;
            }
            let rule = RewriteRule::from_relation(&strip_content(&rem)).expect("nonzero remainder");
            sys.push(rule).expect("new leading word is irreducible");
        }
    }
}

/// Divides out the monomial and integer content, then trial-divides by the
/// small binary forms that occur in the Serre coefficients.
fn strip_content(x: &FreeElement) -> FreeElement {
    let mut low: Option<Exponents> = None;
    let mut g = num_bigint::BigInt::from(0);
    for (_, c) in x.terms() {
        for (e, k) in c.terms() {
            low = Some(match low {
                None => *e,
                Some(m) => Exponents(std::array::from_fn(|i| m.0[i].min(e.0[i]))),
            });
            g = num_integer::Integer::gcd(&g, k);
        }
    }
    let Some(low) = low else {
        return x.clone();
    };
    let mut unit = LaurentPoly::monomial(g, low);
    if let Some((_, c)) = x.leading() {
        if c.terms().next_back().is_some_and(|(_, k)| k < &0.into()) {
            unit = -unit;
        }
    }
    let mut y = x.div_exact(&unit).expect("content divides");
    for f in [
        "r + s",
        "r - s",
        "r^2 + s^2",
        "r^2 + r*s + s^2",
        "r^2 - r*s + s^2",
    ] {
        let f: LaurentPoly = f.parse().expect("factor");
        while let Some(z) = y.div_exact(&f) {
            y = z;
        }
    }
    y
}

/// Words of length `n` containing no left-hand side, by enumeration.
pub fn irreducible_count(sys: &RewriteSystem, n: usize) -> usize {
    Word::all_of_length(n)
        .filter(|w| sys.is_irreducible(w))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::{default_system, serre_system, serre_variant};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn raw_serre_pair() {
        let sys = serre_system(serre_variant("corrected").unwrap().as_ref());
        let pairs = critical_pairs(&sys);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].overlap, w("e2*e2*e1*e1*e1*e1"));
        let one = RewriteSystem::new(vec![sys.rules()[0].clone()]).unwrap();
        assert!(critical_pairs(&one).is_empty());
        assert!(critical_pairs(&RewriteSystem::empty()).is_empty());
        assert!(confluence_check(&RewriteSystem::empty()).confluent);
    }

    #[test]
    fn engineered_non_confluent() {
        let sys = RewriteSystem::new(vec![
            RewriteRule::new(w("e1*e2"), LaurentPoly::one(), FreeElement::zero()).unwrap(),
            RewriteRule::new(w("e2*e1"), LaurentPoly::one(), FreeElement::one()).unwrap(),
        ])
        .unwrap();
        let report = confluence_check(&sys);
        assert!(!report.confluent);
        let bad = report.pairs.iter().find(|p| !p.resolved).unwrap();
        assert_eq!(bad.overlap, w("e1*e2*e1"));
        assert_eq!(bad.remainder.weights().len(), 1);
    }

    #[test]
    fn counts_by_enumeration() {
        let sys = serre_system(serre_variant("corrected").unwrap().as_ref());
        let raw: Vec<_> = (0..=8).map(|n| irreducible_count(&sys, n)).collect();
        assert_eq!(raw, [1, 2, 4, 7, 12, 19, 30, 46, 70]);
    }

    #[test]
    fn completed_system() {
        let sys = default_system();
        assert_eq!(sys.len(), 6);
        assert!(confluence_check(sys).confluent);
        let counts: Vec<_> = (0..=8).map(|n| irreducible_count(sys, n)).collect();
        assert_eq!(counts, [1, 2, 4, 7, 12, 19, 29, 42, 60]);
    }
}
