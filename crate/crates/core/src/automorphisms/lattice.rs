use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free_algebra::{serre_relations, serre_variant, Letter};

/// Names of the `k`-exponents of the images of `e1` (`a, b`) and `e2` (`c, d`).
pub const SYMBOLS: [char; 4] = ['a', 'b', 'c', 'd'];

/// `constant + sum coeffs[i] * SYMBOLS[i]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExponentForm {
    pub constant: i64,
    pub coeffs: [i64; 4],
}

impl ExponentForm {
    pub fn symbol(i: usize) -> Self {
        let mut coeffs = [0; 4];
        coeffs[i] = 1;
        ExponentForm {
            constant: 0,
            coeffs,
        }
    }

    pub fn constant(c: i64) -> Self {
        ExponentForm {
            constant: c,
            coeffs: [0; 4],
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        ExponentForm {
            constant: self.constant * k,
            coeffs: self.coeffs.map(|c| c * k),
        }
    }

    pub fn eval(&self, v: &[i64; 4]) -> i64 {
        self.constant + self.coeffs.iter().zip(v).map(|(c, x)| c * x).sum::<i64>()
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.coeffs == [0; 4]
    }
}

impl Add for ExponentForm {
    type Output = ExponentForm;
    fn add(self, o: ExponentForm) -> ExponentForm {
        ExponentForm {
            constant: self.constant + o.constant,
            coeffs: std::array::from_fn(|i| self.coeffs[i] + o.coeffs[i]),
        }
    }
}

impl Sub for ExponentForm {
    type Output = ExponentForm;
    fn sub(self, o: ExponentForm) -> ExponentForm {
        self + (-o)
    }
}

impl Neg for ExponentForm {
    type Output = ExponentForm;
    fn neg(self) -> ExponentForm {
        self.scale(-1)
    }
}

impl fmt::Display for ExponentForm {
    /// `6a + 18b - c`, constant last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, k: i64, sym: Option<char>| -> fmt::Result {
            if k == 0 {
                return Ok(());
            }
            let sign = match (first, k < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            match (k.abs(), sym) {
                (1, Some(s)) => write!(f, "{sign}{s}"),
                (n, Some(s)) => write!(f, "{sign}{n}{s}"),
                (n, None) => write!(f, "{sign}{n}"),
            }
        };
        for (k, s) in self.coeffs.iter().zip(SYMBOLS) {
            put(f, *k, Some(s))?;
        }
        put(f, self.constant, None)?;
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for ExponentForm {
    type Err = Error;

    /// Sums of `[int]symbol` and integer terms, e.g. `-6a - 6b + 2`.
    fn from_str(src: &str) -> Result<Self> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in exponent form {src:?}"),
        };
        if s.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = ExponentForm::default();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            rest = tail;
            let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
            let sym = &term[digits.len()..];
            let k: i64 = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| bad("bad integer"))?
            };
            let k = if neg { -k } else { k };
            match sym {
                "" if !digits.is_empty() => out.constant += k,
                _ => {
                    let mut chars = sym.chars();
                    let i = match (chars.next(), chars.next()) {
                        (Some(c), None) => SYMBOLS.iter().position(|&x| x == c),
                        _ => None,
                    }
                    .ok_or_else(|| bad("unknown symbol"))?;
                    out.coeffs[i] += k;
                }
            }
        }
        Ok(out)
    }
}

impl Serialize for ExponentForm {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

/// Scalar picked up when a product of factors `k^(u_i) e_(l_i)` is rewritten
/// as `r^r s^s k^k * e_(l_1) ... e_(l_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScalarForms {
    pub r: ExponentForm,
    pub s: ExponentForm,
    pub k: [ExponentForm; 2],
}

/// Factors are `k1^(u[0]) k2^(u[1])` followed by an optional letter. Moving
/// `k^u` left past a prefix of weight `(p,q)` costs the inverse of the
/// commutation scalar.
pub fn word_scalar_forms(factors: &[([ExponentForm; 2], Option<Letter>)]) -> ScalarForms {
    let mut out = ScalarForms {
        r: ExponentForm::default(),
        s: ExponentForm::default(),
        k: [ExponentForm::default(); 2],
    };
    let (mut p, mut q) = (0i64, 0i64);
    for (u, l) in factors {
        out.r = out.r - u[0].scale(-p + 3 * q) - u[1].scale(-3 * p + 6 * q);
        out.s = out.s - u[0].scale(-2 * p + 3 * q) - u[1].scale(-3 * p + 3 * q);
        out.k = [out.k[0] + u[0], out.k[1] + u[1]];
        if let Some(l) = l {
            let (a, b) = l.weight();
            p += a as i64;
            q += b as i64;
        }
    }
    out
}

/// `k1^a k2^b` for `e1`, `k1^c k2^d` for `e2`.
pub(crate) fn letter_exponents(l: Letter) -> [ExponentForm; 2] {
    match l {
        Letter::E1 => [ExponentForm::symbol(0), ExponentForm::symbol(1)],
        Letter::E2 => [ExponentForm::symbol(2), ExponentForm::symbol(3)],
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearEquation {
    pub relation: String,
    /// Word whose scalar is compared with the reference word's.
    pub word: String,
    pub reference: String,
    /// `"r"` or `"s"`.
    pub base: &'static str,
    pub lhs: ExponentForm,
    pub rhs: ExponentForm,
}

impl LinearEquation {
    pub fn form(&self) -> ExponentForm {
        self.lhs - self.rhs
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstraintLattice {
    pub equations: Vec<LinearEquation>,
    /// Hermite normal form basis of the integer solutions.
    pub basis: Vec<[i64; 4]>,
    pub rank: usize,
}

impl ConstraintLattice {
    /// The solution set of a homogeneous integer system is saturated, so
    /// membership is just satisfying every equation.
    pub fn contains(&self, v: &[i64; 4]) -> bool {
        self.equations.iter().all(|e| e.form().eval(v) == 0)
    }

    /// Whether `vectors` generate the same lattice as [`Self::basis`].
    pub fn same_lattice(&self, vectors: &[[i64; 4]]) -> bool {
        let rows: Vec<Vec<i64>> = vectors.iter().map(|v| v.to_vec()).collect();
        let basis: Vec<Vec<i64>> = self.basis.iter().map(|v| v.to_vec()).collect();
        hermite_normal_form(&rows) == basis
    }
}

/// Applies `e1 -> k1^a k2^b e1`, `e2 -> k1^c k2^d e2` to both Serre relations,
/// equates the `r`- and `s`-exponents of every term with those of the second
/// term, and solves the resulting integer system.
pub fn derive_exponent_constraints() -> ConstraintLattice {
    let variant = serre_variant("corrected").expect("registered");
    let mut equations = Vec::new();
    let [rel3, rel5] = serre_relations(variant.as_ref());
    for (name, rel) in [("degree-5 Serre", rel5), ("degree-3 Serre", rel3)] {
        // e2^2*e1 first for degree 3, e1^4*e2 first for degree 5.
        let mut terms: Vec<_> = rel.terms().map(|(w, _)| w.clone()).collect();
        if terms.len() == 3 {
            terms.reverse();
        }
        let forms: Vec<ScalarForms> = terms
            .iter()
            .map(|w| {
                let f: Vec<_> = w
                    .letters()
                    .iter()
                    .map(|&l| (letter_exponents(l), Some(l)))
                    .collect();
                word_scalar_forms(&f)
            })
            .collect();
        for base in ["r", "s"] {
            for j in (0..terms.len()).filter(|&j| j != 1) {
                let pick = |f: &ScalarForms| if base == "r" { f.r } else { f.s };
                equations.push(LinearEquation {
                    relation: name.to_string(),
                    word: terms[j].to_string(),
                    reference: terms[1].to_string(),
                    base,
                    lhs: pick(&forms[j]),
                    rhs: pick(&forms[1]),
                });
            }
        }
    }
    let rows: Vec<Vec<i64>> = equations.iter().map(|e| e.form().coeffs.to_vec()).collect();
    let basis: Vec<[i64; 4]> = integer_kernel(&rows, 4)
        .into_iter()
        .map(|v| v.try_into().expect("length 4"))
        .collect();
    ConstraintLattice {
        rank: basis.len(),
        equations,
        basis,
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Row Hermite normal form of the lattice spanned by `rows`: positive
/// pivots, entries above each pivot reduced into `[0, pivot)`, zero rows
/// dropped.
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        for i in r + 1..m.len() {
            if m[i][col] == 0 {
                continue;
            }
            let (g, x, y) = ext_gcd(m[r][col], m[i][col]);
            let (a, b) = (m[r][col] / g, m[i][col] / g);
            let (top, bot) = (m[r].clone(), m[i].clone());
            for c in 0..ncols {
                m[r][c] = x * top[c] + y * bot[c];
                m[i][c] = -b * top[c] + a * bot[c];
            }
        }
        if r < m.len() && m[r][col] != 0 {
            if m[r][col] < 0 {
                m[r].iter_mut().for_each(|v| *v = -*v);
            }
            for i in 0..r {
                let f = m[i][col].div_euclid(m[r][col]);
                if f != 0 {
                    let pivot = m[r].clone();
                    for c in 0..ncols {
                        m[i][c] -= f * pivot[c];
                    }
                }
            }
            r += 1;
        }
    }
    m.truncate(r);
    m
}

/// Basis (in Hermite normal form) of `{v in Z^n : rows . v = 0}`, by
/// unimodular column operations.
pub fn integer_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = rows.to_vec();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut pivot_col = 0;
    for row in 0..a.len() {
        if pivot_col == n {
            break;
        }
        for j in pivot_col + 1..n {
            if a[row][j] == 0 {
                continue;
            }
            let (g, x, y) = ext_gcd(a[row][pivot_col], a[row][j]);
            let (p, q) = (a[row][pivot_col] / g, a[row][j] / g);
            let col_op = |m: &mut Vec<Vec<i64>>| {
                for r in m.iter_mut() {
                    let (ci, cj) = (r[pivot_col], r[j]);
                    r[pivot_col] = x * ci + y * cj;
                    r[j] = -q * ci + p * cj;
                }
            };
            col_op(&mut a);
            col_op(&mut u);
        }
        if a[row][pivot_col] != 0 {
            pivot_col += 1;
        }
    }
    let kernel: Vec<Vec<i64>> = (pivot_col..n)
        .map(|j| u.iter().map(|r| r[j]).collect())
        .collect();
    hermite_normal_form(&kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> ExponentForm {
        s.parse().unwrap()
    }

    #[test]
    fn forms_parse_and_print() {
        assert_eq!(f("6a+18b+4c+12d").to_string(), "6a + 18b + 4c + 12d");
        assert_eq!(f("-6a - 6b").to_string(), "-6a - 6b");
        assert_eq!(f("-c").coeffs, [0, 0, -1, 0]);
        assert_eq!(f("0").to_string(), "0");
        assert_eq!(f("a + 2").eval(&[3, 0, 0, 0]), 5);
        assert!("2x".parse::<ExponentForm>().is_err());
    }

    #[test]
    fn serre_word_scalars() {
        let a = letter_exponents(Letter::E1);
        let c = letter_exponents(Letter::E2);
        let w = [
            (a, Some(Letter::E1)),
            (a, Some(Letter::E1)),
            (a, Some(Letter::E1)),
            (c, Some(Letter::E2)),
            (a, Some(Letter::E1)),
        ];
        let s = word_scalar_forms(&w);
        assert_eq!(s.r, f("3a + 12b + 3c + 9d"));
        assert_eq!(s.s, f("9a + 15b + 6c + 9d"));
        assert_eq!(s.k, [f("4a + c"), f("4b + d")]);
    }

    #[test]
    fn kernel_and_hnf() {
        assert_eq!(
            hermite_normal_form(&[vec![2, 4], vec![3, 5]]),
            [vec![1, 1], vec![0, 2]]
        );
        let k = integer_kernel(&[vec![2, 4, 6]], 3);
        assert_eq!(k, [vec![1, 1, -1], vec![0, 3, -2]]);
        for v in &k {
            assert_eq!(2 * v[0] + 4 * v[1] + 6 * v[2], 0);
        }
        assert!(integer_kernel(&[vec![1, 0], vec![0, 1]], 2).is_empty());
        assert_eq!(integer_kernel(&[], 2), [vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn constraint_lattice() {
        let lat = derive_exponent_constraints();
        assert_eq!(lat.equations.len(), 12);
        assert_eq!(lat.rank, 2);
        assert!(lat.same_lattice(&[[-3, 1, 3, 0], [-1, 0, 0, 1]]));
        assert!(lat.contains(&[-3, 1, 3, 0]));
        assert!(lat.contains(&[-1, 0, 0, 1]));
        assert!(!lat.contains(&[1, 0, 0, 0]));
        for e in &lat.equations {
            let ok = |v: [i64; 4]| e.form().eval(&v) == 0;
            assert!(ok([1, 0, 0, -1]) && ok([0, 1, 3, -3]));
        }
    }
}
