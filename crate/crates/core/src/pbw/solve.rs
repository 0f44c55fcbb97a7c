//! Fraction-free linear solving over the Laurent ring.

use crate::coefficients::LaurentPoly;

/// Solves `a * c = b` (rows are equations) when the solution is unique.
///
/// Returns numerators `n` and a common denominator `d` with `c = n / d`.
/// `None` means the columns are dependent or the system is inconsistent.
/// Bareiss elimination keeps every intermediate entry in the ring; all
/// divisions below are exact by construction and asserted.
pub fn solve_fraction_free(
    a: &[Vec<LaurentPoly>],
    b: &[LaurentPoly],
) -> Option<(Vec<LaurentPoly>, LaurentPoly)> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<LaurentPoly>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut prev = LaurentPoly::one();
    for k in 0..cols {
        let pivot = (k..rows)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| m[i][k].len())?;
        m.swap(k, pivot);
        for i in k + 1..rows {
            for j in k + 1..=cols {
                let v = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    if (cols..rows).any(|i| !m[i][cols].is_zero()) {
        return None;
    }
    let d = if cols == 0 {
        LaurentPoly::one()
    } else {
        m[cols - 1][cols - 1].clone()
    };
    let mut num = vec![LaurentPoly::zero(); cols];
    for i in (0..cols).rev() {
        let mut acc = &m[i][cols] * &d;
        for j in i + 1..cols {
            acc -= &(&m[i][j] * &num[j]);
        }
        num[i] = acc
            .div_exact(&m[i][i])
            .expect("back substitution divides exactly");
    }
    Some((num, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn solves_overdetermined() {
        let a = vec![
            vec![p("r"), p("1")],
            vec![p("1"), p("s")],
            vec![p("r + 1"), p("s + 1")],
        ];
        let b = vec![p("r^2 + 2"), p("r + 2*s"), p("r^2 + r + 2*s + 2")];
        let (n, d) = solve_fraction_free(&a, &b).unwrap();
        assert_eq!(n[0].div_exact(&d).unwrap(), p("r"));
        assert_eq!(n[1].div_exact(&d).unwrap(), p("2"));
    }

    #[test]
    fn detects_inconsistency_and_dependence() {
        let a = vec![vec![p("1")], vec![p("1")]];
        assert!(solve_fraction_free(&a, &[p("1"), p("2")]).is_none());
        let a = vec![vec![p("1"), p("2")], vec![p("r"), p("2*r")]];
        assert!(solve_fraction_free(&a, &[p("1"), p("r")]).is_none());
    }
}
