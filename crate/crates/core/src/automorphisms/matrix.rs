use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("matrix must be square and nonempty".into()));
        }
        Ok(IntMatrix { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn determinant(&self) -> i128 {
        det(&self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect::<Vec<_>>())
    }

    /// Adjugate, so that `M * adj(M) = det(M) I`.
    pub fn adjugate(&self) -> Vec<Vec<i128>> {
        let n = self.n();
        if n == 1 {
            return vec![vec![1]];
        }
        let mut adj = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<Vec<i128>> = (0..n)
                    .filter(|&r| r != i)
                    .map(|r| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| self.rows[r][c] as i128)
                            .collect()
                    })
                    .collect();
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj[j][i] = sign * det(&minor);
            }
        }
        adj
    }

    /// All `n x n` matrices with entries in `0..=max`, row-major order.
    pub fn all_nonneg(n: usize, max: i64) -> impl Iterator<Item = IntMatrix> {
        let cells = n * n;
        let base = (max + 1) as u64;
        (0..base.pow(cells as u32)).map(move |mut code| {
            let mut rows = vec![vec![0; n]; n];
            for k in 0..cells {
                rows[k / n][k % n] = (code % base) as i64;
                code /= base;
            }
            IntMatrix { rows }
        })
    }
}

/// Fraction-free (Bareiss) determinant.
fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a.last().map_or(1, |r| r[n - 1])
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        IntMatrix::new(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.rows
    }
}

impl std::str::FromStr for IntMatrix {
    type Err = Error;

    /// JSON rows, e.g. `[[0,1],[1,0]]`.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = serde_json::from_str(s).map_err(|e| Error::Parse {
            pos: e.column().saturating_sub(1),
            msg: format!("matrix: {e}"),
        })?;
        IntMatrix::new(rows)
    }
}

/// `sigma` as the images of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &s)| s == i + 1)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, `id` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let mut seen = vec![false; self.0.len()];
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start + 1 {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.0[i] - 1;
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Rejection {
    NegativeEntry,
    NotUnimodular {
        det: i128,
    },
    NegativeEntryInInverse,
    /// Both `M` and `M^-1` are nonnegative yet `M` is no permutation matrix.
    NotPermutation,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NegativeEntry => write!(f, "matrix has a negative entry"),
            Rejection::NotUnimodular { det } => write!(f, "not unimodular (det = {det})"),
            Rejection::NegativeEntryInInverse => write!(f, "inverse has a negative entry"),
            Rejection::NotPermutation => write!(f, "not a permutation matrix"),
        }
    }
}

/// `sigma` with `M = (delta_{i, sigma(j)})` when `M` and `M^-1` are both
/// nonnegative integer matrices.
pub fn gl_nonneg_permutation(m: &IntMatrix) -> std::result::Result<Permutation, Rejection> {
    let n = m.n();
    if m.rows().iter().flatten().any(|&x| x < 0) {
        return Err(Rejection::NegativeEntry);
    }
    let d = m.determinant();
    if d.abs() != 1 {
        return Err(Rejection::NotUnimodular { det: d });
    }
    if m.adjugate().iter().flatten().any(|&x| x * d < 0) {
        return Err(Rejection::NegativeEntryInInverse);
    }
    let mut sigma = Vec::with_capacity(n);
    for j in 0..n {
        let ones: Vec<usize> = (0..n).filter(|&i| m.get(i, j) != 0).collect();
        match ones.as_slice() {
            [i] if m.get(*i, j) == 1 => sigma.push(i + 1),
            _ => return Err(Rejection::NotPermutation),
        }
    }
    Ok(Permutation(sigma))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> IntMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            gl_nonneg_permutation(&m("[[1,0],[0,1]]"))
                .unwrap()
                .to_string(),
            "id"
        );
        assert_eq!(
            gl_nonneg_permutation(&m("[[0,1],[1,0]]"))
                .unwrap()
                .to_string(),
            "(1 2)"
        );
        assert_eq!(
            gl_nonneg_permutation(&m("[[1,1],[0,1]]")),
            Err(Rejection::NegativeEntryInInverse)
        );
        assert_eq!(
            gl_nonneg_permutation(&m("[[2,0],[0,1]]")),
            Err(Rejection::NotUnimodular { det: 2 })
        );
        let p = gl_nonneg_permutation(&m("[[0,0,1],[1,0,0],[0,1,0]]")).unwrap();
        assert_eq!(p.0, [2, 3, 1]);
        assert_eq!(p.to_string(), "(1 2 3)");
        assert!("[[1,2]]".parse::<IntMatrix>().is_err());
        assert!("[[1,".parse::<IntMatrix>().is_err());
    }

    #[test]
    fn exhaustive_small() {
        let accepted: Vec<_> = IntMatrix::all_nonneg(2, 3)
            .filter(|m| gl_nonneg_permutation(m).is_ok())
            .collect();
        assert_eq!(accepted.len(), 2);
        assert_eq!(IntMatrix::all_nonneg(2, 3).count(), 256);
    }

    #[test]
    fn determinants() {
        assert_eq!(m("[[2,1],[3,2]]").determinant(), 1);
        assert_eq!(m("[[0,1,0],[1,0,0],[0,0,1]]").determinant(), -1);
        assert_eq!(m("[[1,2],[2,4]]").determinant(), 0);
        assert_eq!(m("[[5]]").determinant(), 5);
    }
}
