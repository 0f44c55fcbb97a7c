use std::sync::OnceLock;

use super::Weight;
use crate::coefficients::LaurentPoly;
use crate::error::{Error, Result};
use crate::free_algebra::{FreeElement, Letter};

/// Weights of `X1..X6`.
pub const ROOT_WEIGHTS: [Weight; 6] = [
    Weight::new(0, 1),
    Weight::new(1, 1),
    Weight::new(3, 2),
    Weight::new(2, 1),
    Weight::new(3, 1),
    Weight::new(1, 0),
];

/// Word lengths of `X1..X6`.
pub const DEGREES: [u32; 6] = [1, 2, 5, 3, 4, 1];

/// `a*b - c*b*a`
fn bracket(a: &FreeElement, b: &FreeElement, c: LaurentPoly) -> FreeElement {
    &(a * b) - &(b * a).scale(&c)
}

fn expansions() -> &'static [FreeElement; 6] {
    static ROOTS: OnceLock<[FreeElement; 6]> = OnceLock::new();
    ROOTS.get_or_init(|| {
        let e1 = FreeElement::letter(Letter::E1);
        let e2 = FreeElement::letter(Letter::E2);
        let x2 = bracket(&e1, &e2, LaurentPoly::rs(0, 3));
        let x4 = bracket(&e1, &x2, LaurentPoly::rs(1, 2));
        let x5 = bracket(&e1, &x4, LaurentPoly::rs(2, 1));
        let x3 = bracket(&x4, &x2, LaurentPoly::rs(2, 1));
        [e2, x2, x3, x4, x5, e1]
    })
}

/// Expansion of `X_i` (`i` in `1..=6`) in the free algebra.
pub fn root_vector(i: usize) -> Result<FreeElement> {
    if !(1..=6).contains(&i) {
        return Err(Error::IndexOutOfRange(i));
    }
    Ok(expansions()[i - 1].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansions_match_weights() {
        for i in 1..=6 {
            let x = root_vector(i).unwrap();
            let w = ROOT_WEIGHTS[i - 1];
            assert_eq!(x.weights(), [(w.p as u32, w.q as u32)].into());
            assert_eq!(x.leading().unwrap().0.len() as u32, DEGREES[i - 1]);
        }
        assert_eq!(root_vector(6).unwrap().to_string(), "e1");
        assert_eq!(root_vector(2).unwrap().to_string(), "-s^3*e2*e1 + e1*e2");
        assert_eq!(root_vector(3).unwrap().len(), 8);
        assert!(root_vector(0).is_err());
        assert!(root_vector(7).is_err());
    }
}
