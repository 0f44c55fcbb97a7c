use std::collections::BTreeSet;

use super::solve::solve_fraction_free;
use super::straighten::Straightener;
use super::{AlgebraElement, Monomial, Weight, DEGREES, ROOT_WEIGHTS};
use crate::coefficients::{LaurentPoly, Scalar};
use crate::error::{Error, Result};
use crate::free_algebra::{default_system, nf_reduce, FreeElement, Letter, NormalForm, Word};

pub(crate) type XVec = [u32; 6];

fn enumerate(target: &[i64], costs: &dyn Fn(usize) -> Vec<i64>) -> Vec<XVec> {
    fn go(
        i: usize,
        rest: Vec<i64>,
        cur: &mut XVec,
        costs: &dyn Fn(usize) -> Vec<i64>,
        out: &mut Vec<XVec>,
    ) {
        if i == 6 {
            if rest.iter().all(|&r| r == 0) {
                out.push(*cur);
            }
            return;
        }
        let c = costs(i);
        let mut rest = rest;
        cur[i] = 0;
        loop {
            go(i + 1, rest.clone(), cur, costs, out);
            if rest.iter().zip(&c).any(|(r, c)| r < c) {
                break;
            }
            for (r, c) in rest.iter_mut().zip(&c) {
                *r -= c;
            }
            cur[i] += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, target.to_vec(), &mut [0; 6], costs, &mut out);
    out.sort();
    out
}

/// X-exponent vectors of the given weight.
pub fn basis_of_weight(w: Weight) -> Vec<XVec> {
    if w.p < 0 || w.q < 0 {
        return Vec::new();
    }
    enumerate(&[w.p, w.q], &|i| vec![ROOT_WEIGHTS[i].p, ROOT_WEIGHTS[i].q])
}

/// X-exponent vectors with `n` letters in total.
pub fn basis_of_degree(n: u32) -> Vec<XVec> {
    enumerate(&[n as i64], &|i| vec![DEGREES[i] as i64])
}

/// Number of PBW monomials (without `k`) of total degree `n`.
pub fn graded_dimension(n: u32) -> usize {
    basis_of_degree(n).len()
}

pub(crate) fn x_to_free(x: &XVec) -> FreeElement {
    let mut out = FreeElement::one();
    for (i, &n) in x.iter().enumerate() {
        let root = super::root_vector(i + 1).expect("index in range");
        for _ in 0..n {
            out = &out * &root;
        }
    }
    out
}

/// Expansion in the free algebra. Fails on any nonzero `k` exponent and on
/// coefficients that are not Laurent polynomials; see [`pbw_to_free_scaled`].
pub fn pbw_to_free(x: &AlgebraElement) -> Result<FreeElement> {
    let nf = pbw_to_free_scaled(x)?;
    if !nf.scale.is_one() {
        return Err(Error::Invalid(format!(
            "coefficients of {x} have denominator {}",
            nf.scale
        )));
    }
    Ok(nf.elem)
}

/// `d * x` expanded in the free algebra, with `d` the common denominator of
/// the coefficients of `x`.
pub fn pbw_to_free_scaled(x: &AlgebraElement) -> Result<NormalForm> {
    if x.terms().any(|(m, _)| m.k != [0, 0]) {
        return Err(Error::NonzeroKExponent);
    }
    let mut den = [0u32; 5];
    for (_, c) in x.terms() {
        for (d, e) in den.iter_mut().zip(c.denominator_exponents()) {
            *d = (*d).max(e);
        }
    }
    let mut scale = Scalar::one();
    for (i, f) in crate::coefficients::DENOMINATOR_FACTORS.iter().enumerate() {
        let f: Scalar = f.parse().expect("factor");
        scale = &scale * &f.pow(den[i]);
    }
    let mut out = FreeElement::zero();
    for (m, c) in x.terms() {
        let cleared = &scale * c;
        let c = cleared.as_poly().expect("common denominator clears");
        out = &out + &x_to_free(&m.x).scale(c);
    }
    Ok(NormalForm {
        scale: scale.as_poly().expect("product of factors").clone(),
        elem: out,
    })
}

/// PBW form of a free-algebra element, via the homomorphism `e1 -> X6`,
/// `e2 -> X1`.
pub fn free_to_pbw(f: &FreeElement) -> AlgebraElement {
    let st = Straightener::symbolic();
    let mut out = AlgebraElement::zero();
    for (w, c) in f.terms() {
        for (x, d) in st.word_product(w) {
            out.add_term(Monomial { x, k: [0, 0] }, &Scalar::from(c) * &d);
        }
    }
    out
}

/// Coordinates of `target` in the images of `cands`, found by reducing
/// everything to rewriting normal form and solving exactly. `None` when the
/// system has no unique solution in the localized coefficient ring.
pub(crate) fn solve_in_basis(target: &FreeElement, cands: &[XVec]) -> Option<Vec<(XVec, Scalar)>> {
    let sys = default_system();
    let nt = nf_reduce(target, sys);
    if nt.is_zero() {
        return Some(Vec::new());
    }
    let ncs: Vec<NormalForm> = cands
        .iter()
        .map(|x| nf_reduce(&x_to_free(x), sys))
        .collect();
    let words: BTreeSet<&Word> = ncs
        .iter()
        .chain(std::iter::once(&nt))
        .flat_map(|n| n.elem.terms().map(|(w, _)| w))
        .collect();
    let all: LaurentPoly = ncs
        .iter()
        .fold(LaurentPoly::one(), |acc, n| &acc * &n.scale);
    let col_scale: Vec<LaurentPoly> = (0..ncs.len())
        .map(|m| {
            ncs.iter()
                .enumerate()
                .filter(|&(i, _)| i != m)
                .fold(nt.scale.clone(), |acc, (_, n)| &acc * &n.scale)
        })
        .collect();
    let a: Vec<Vec<LaurentPoly>> = words
        .iter()
        .map(|w| {
            ncs.iter()
                .zip(&col_scale)
                .map(|(n, s)| &n.elem.coefficient(w) * s)
                .collect()
        })
        .collect();
    let b: Vec<LaurentPoly> = words
        .iter()
        .map(|w| &nt.elem.coefficient(w) * &all)
        .collect();
    let (num, d) = solve_fraction_free(&a, &b)?;
    let mut out = Vec::new();
    for (x, n) in cands.iter().zip(num) {
        if !n.is_zero() {
            out.push((*x, Scalar::ratio(&n, &d)?));
        }
    }
    Some(out)
}

/// PBW form by linear algebra against the rewriting normal form; an
/// independent route to [`free_to_pbw`].
pub fn free_to_pbw_by_solve(f: &FreeElement) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (p, q) in f.weights() {
        let part = FreeElement::from_terms(
            f.terms()
                .filter(|(w, _)| w.weight() == (p, q))
                .map(|(w, c)| (w.clone(), c.clone())),
        );
        let cands = basis_of_weight(Weight::new(p as i64, q as i64));
        let coords = solve_in_basis(&part, &cands).ok_or_else(|| {
            Error::Invalid(format!("no unique PBW expansion in weight ({p},{q})"))
        })?;
        for (x, c) in coords {
            out.add_term(Monomial { x, k: [0, 0] }, c);
        }
    }
    Ok(out)
}

pub(crate) fn letter_root(l: Letter) -> usize {
    match l {
        Letter::E1 => 6,
        Letter::E2 => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Coefficients of `1/((1-t)^2 (1-t^2)(1-t^3)(1-t^4)(1-t^5))`.
    fn series(n: usize) -> Vec<usize> {
        let mut c = vec![0usize; n + 1];
        c[0] = 1;
        for d in [1, 1, 2, 3, 4, 5] {
            for i in d..=n {
                c[i] += c[i - d];
            }
        }
        c
    }

    #[test]
    fn dimensions_match_generating_function() {
        let gf = series(12);
        for n in 0..=12 {
            assert_eq!(graded_dimension(n as u32), gf[n]);
        }
        assert_eq!(gf[..9], [1, 2, 4, 7, 12, 19, 29, 42, 60]);
    }

    #[test]
    fn weight_basis() {
        assert_eq!(
            basis_of_weight(Weight::new(1, 1)),
            vec![[0, 1, 0, 0, 0, 0], [1, 0, 0, 0, 0, 1]]
        );
        assert!(basis_of_weight(Weight::new(-1, 0)).is_empty());
    }

    #[test]
    fn conversions() {
        let x1x6 = AlgebraElement::monomial(
            Monomial {
                x: [1, 0, 0, 0, 0, 1],
                k: [0, 0],
            },
            Scalar::one(),
        );
        assert_eq!(pbw_to_free(&x1x6).unwrap().to_string(), "e2*e1");
        assert_eq!(
            pbw_to_free(&AlgebraElement::one()).unwrap(),
            FreeElement::one()
        );
        assert!(pbw_to_free(&AlgebraElement::group_like(1, 0)).is_err());
        let e1e2: FreeElement = FreeElement::word("e1*e2".parse().unwrap(), LaurentPoly::one());
        let expect = &AlgebraElement::root(2) + &x1x6.scale(&LaurentPoly::rs(0, 3).into());
        assert_eq!(free_to_pbw(&e1e2), expect);
        assert_eq!(free_to_pbw_by_solve(&e1e2).unwrap(), expect);
    }
}
