use std::sync::OnceLock;

use super::critical::complete;
use super::{FreeElement, Letter, RewriteRule, RewriteSystem, Word};
use crate::coefficients::LaurentPoly;

/// Longest possible overlap between two rules of the completed system.
pub const COMPLETION_DEGREE: usize = 15;

/// A reading of the degree-5 Serre relation. The variants differ only in the
/// coefficient of `e1^2*e2*e1^2`.
pub trait SerreVariant: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn middle_coefficient(&self) -> LaurentPoly;
}

struct Corrected;

impl SerreVariant for Corrected {
    fn name(&self) -> &'static str {
        "corrected"
    }
    fn summary(&self) -> &'static str {
        "rs(r^2+s^2)(r^2+rs+s^2), the braided-adjoint coefficient"
    }
    fn middle_coefficient(&self) -> LaurentPoly {
        poly("r*s*(r^2 + s^2)*(r^2 + r*s + s^2)")
    }
}

struct Stated;

impl SerreVariant for Stated {
    fn name(&self) -> &'static str {
        "stated"
    }
    fn summary(&self) -> &'static str {
        "rs(r^2+rs+s^2), as printed"
    }
    fn middle_coefficient(&self) -> LaurentPoly {
        poly("r*s*(r^2 + r*s + s^2)")
    }
}

pub fn serre_variants() -> Vec<Box<dyn SerreVariant>> {
    vec![Box::new(Corrected), Box::new(Stated)]
}

pub fn serre_variant(name: &str) -> Option<Box<dyn SerreVariant>> {
    serre_variants().into_iter().find(|v| v.name() == name)
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().expect("built-in coefficient")
}

fn word(letters: &[Letter]) -> Word {
    Word(letters.to_vec())
}

/// The degree-3 and degree-5 quantum Serre relations, each `= 0`.
pub fn serre_relations(v: &dyn SerreVariant) -> [FreeElement; 2] {
    use Letter::{E1, E2};
    let rel3 = FreeElement::from_terms([
        (word(&[E2, E2, E1]), LaurentPoly::one()),
        (word(&[E2, E1, E2]), -poly("r^-3 + s^-3")),
        (word(&[E1, E2, E2]), poly("r^-3*s^-3")),
    ]);
    let rel5 = FreeElement::from_terms([
        (word(&[E1, E1, E1, E1, E2]), LaurentPoly::one()),
        (word(&[E1, E1, E1, E2, E1]), -poly("(r + s)*(r^2 + s^2)")),
        (word(&[E1, E1, E2, E1, E1]), v.middle_coefficient()),
        (
            word(&[E1, E2, E1, E1, E1]),
            -poly("r^3*s^3*(r + s)*(r^2 + s^2)"),
        ),
        (word(&[E2, E1, E1, E1, E1]), poly("r^6*s^6")),
    ]);
    [rel3, rel5]
}

/// The two Serre relations oriented towards their largest words.
pub fn serre_system(v: &dyn SerreVariant) -> RewriteSystem {
    let rules = serre_relations(v)
        .iter()
        .map(|rel| RewriteRule::from_relation(rel).expect("nonzero relation"))
        .collect();
    RewriteSystem::new(rules).expect("distinct left-hand sides")
}

/// The completed (confluent) system for the corrected relations.
pub fn default_system() -> &'static RewriteSystem {
    static SYSTEM: OnceLock<RewriteSystem> = OnceLock::new();
    SYSTEM.get_or_init(|| complete(&serre_system(&Corrected), COMPLETION_DEGREE))
}

/// `(ad x)^n (y)` with `ad x (u) = x u - chi(x, wt u) u x` for the braiding
/// `chi(e1,e1) = r s^-1`, `chi(e1,e2) = s^3`, `chi(e2,e1) = r^-3`,
/// `chi(e2,e2) = r^3 s^-3`. Returns the degree-3 and degree-5 elements.
pub fn braided_serre() -> [FreeElement; 2] {
    let chi = |x: Letter, (p, q): (u32, u32)| -> LaurentPoly {
        let (a, b) = match x {
            Letter::E1 => (LaurentPoly::rs(1, -1), LaurentPoly::rs(0, 3)),
            Letter::E2 => (LaurentPoly::rs(-3, 0), LaurentPoly::rs(3, -3)),
        };
        &a.pow(p) * &b.pow(q)
    };
    let ad = |x: Letter, n: usize, y: Letter| {
        let gx = FreeElement::letter(x);
        let mut u = FreeElement::letter(y);
        let mut wt = Word::letter(y).weight();
        for _ in 0..n {
            u = &(&gx * &u) - &(&u * &gx).scale(&chi(x, wt));
            let (a, b) = x.weight();
            wt = (wt.0 + a, wt.1 + b);
        }
        u
    };
    [ad(Letter::E2, 2, Letter::E1), ad(Letter::E1, 4, Letter::E2)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::nf_reduce;

    #[test]
    fn registry_lookup() {
        let names: Vec<_> = serre_variants().iter().map(|v| v.name()).collect();
        assert_eq!(names, ["corrected", "stated"]);
        assert!(serre_variant("stated").is_some());
        assert!(serre_variant("other").is_none());
    }

    #[test]
    fn braided_adjoint_matches_corrected_relations() {
        let [b3, b5] = braided_serre();
        let [r3, r5] = serre_relations(&Corrected);
        assert_eq!(b3, r3);
        assert_eq!(b5, r5);
        let [_, stated5] = serre_relations(&Stated);
        assert_ne!(b5, stated5);
    }

    #[test]
    fn raw_rules() {
        let sys = serre_system(&Corrected);
        let lhs: Vec<String> = sys.rules().iter().map(|r| r.lhs.to_string()).collect();
        assert_eq!(lhs, ["e2*e2*e1", "e2*e1*e1*e1*e1"]);
        assert_eq!(sys.rules()[1].rhs.len(), 4);
        assert!(sys.rules().iter().all(|r| r.lead.is_one()));
        for r in sys.rules() {
            assert_eq!(r.rhs.weights(), [r.lhs.weight()].into());
        }
        let nf = nf_reduce(
            &FreeElement::word(sys.rules()[0].lhs.clone(), LaurentPoly::one()),
            &sys,
        );
        assert_eq!(
            nf.to_element().unwrap().to_string(),
            "(s^-3 + r^-3)*e2*e1*e2 - r^-3*s^-3*e1*e2*e2"
        );
    }
}
