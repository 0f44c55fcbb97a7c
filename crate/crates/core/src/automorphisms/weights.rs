use super::Sigma;
use crate::free_algebra::Letter;
use crate::pbw::{basis_of_degree, k_move_scalar, Monomial, Weight};

/// PBW exponent vectors `beta` of e-degree at most `degree_bound` that may
/// occur in `theta(e_target)` when `theta(k_l) = lambda_l k_sigma(l)`: moving
/// `k_sigma(l)` past `X^beta` must cost what moving `k_l` past `e_target`
/// costs, for `l = 1, 2`. Monomial equality stands in for genericity.
pub fn solve_weight_equations(sigma: Sigma, target: Letter, degree_bound: u32) -> Vec<[u32; 6]> {
    let (p, q) = target.weight();
    let tw = Weight::new(p as i64, q as i64);
    let unit = |l: usize| if l == 1 { (1, 0) } else { (0, 1) };
    let mut out = Vec::new();
    for n in 0..=degree_bound {
        for x in basis_of_degree(n) {
            let w = Monomial { x, k: [0, 0] }.weight();
            let ok = (1..=2).all(|l| {
                let (m, n) = unit(sigma.apply(l));
                let (m0, n0) = unit(l);
                k_move_scalar(w, m, n) == k_move_scalar(tw, m0, n0)
            });
            if ok {
                out.push(x);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_forced() {
        for bound in 1..=6 {
            assert_eq!(
                solve_weight_equations(Sigma::Identity, Letter::E1, bound),
                [[0, 0, 0, 0, 0, 1]]
            );
            assert_eq!(
                solve_weight_equations(Sigma::Identity, Letter::E2, bound),
                [[1, 0, 0, 0, 0, 0]]
            );
            assert!(solve_weight_equations(Sigma::Swap, Letter::E1, bound).is_empty());
            assert!(solve_weight_equations(Sigma::Swap, Letter::E2, bound).is_empty());
        }
    }
}
