//! Audit of printed commutation identities against kernel products.
//!
//! Every printed identity is stored as data. Its derived counterpart comes
//! from weight bookkeeping, and the derived version is itself checked against
//! PBW multiplication at every point of a box. A printed identity is
//! `MatchAfterCorrection` only when a specific, registered correction turns
//! it into the derived one.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::exponent_box;
use super::lattice::{
    derive_exponent_constraints, letter_exponents, word_scalar_forms, ExponentForm, ScalarForms,
};
use crate::coefficients::{LaurentPoly, Scalar};
use crate::free_algebra::Letter;
use crate::pbw::{
    basis_of_degree, k_move_scalar, multiply, AlgebraElement, Monomial, Weight, ROOT_WEIGHTS,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum IdentityStatus {
    Match,
    MatchAfterCorrection {
        description: String,
    },
    Mismatch {
        detail: String,
    },
    /// The printed identity is inconsistent before any scalar is compared,
    /// e.g. its two sides have different letter content.
    Uninterpretable {
        reason: String,
    },
}

impl IdentityStatus {
    pub fn label(&self) -> &'static str {
        match self {
            IdentityStatus::Match => "match",
            IdentityStatus::MatchAfterCorrection { .. } => "match after correction",
            IdentityStatus::Mismatch { .. } => "mismatch",
            IdentityStatus::Uninterpretable { .. } => "uninterpretable",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityAudit {
    pub group: &'static str,
    pub label: String,
    pub printed: String,
    pub derived: String,
    #[serde(flatten)]
    pub status: IdentityStatus,
    /// Box points at which the derived identity was compared with PBW
    /// multiplication; `0` when the identity has no direct kernel meaning.
    pub kernel_points: usize,
    pub kernel_agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub box_k: i32,
    pub beta_degree: u32,
    pub audits: Vec<IdentityAudit>,
    /// Every derived identity agrees with the kernel.
    pub kernel_consistent: bool,
    /// Every identity is a match, a corrected match, or flagged uninterpretable.
    pub all_accounted: bool,
}

impl LemmaReport {
    pub fn count(&self, label: &str) -> usize {
        self.audits
            .iter()
            .filter(|a| a.status.label() == label)
            .count()
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut group = "";
        for a in &self.audits {
            if a.group != group {
                group = a.group;
                writeln!(f, "== {group}")?;
            }
            let kernel = match (a.kernel_points, a.kernel_agrees) {
                (0, _) => "no kernel check".to_string(),
                (n, true) => format!("kernel ok at {n} points"),
                (n, false) => format!("KERNEL DISAGREES ({n} points)"),
            };
            writeln!(f, "  {}: {} [{kernel}]", a.label, a.status.label())?;
            writeln!(f, "    printed: {}", a.printed)?;
            writeln!(f, "    derived: {}", a.derived)?;
            match &a.status {
                IdentityStatus::MatchAfterCorrection { description } => {
                    writeln!(f, "    correction: {description}")?
                }
                IdentityStatus::Mismatch { detail } => writeln!(f, "    detail: {detail}")?,
                IdentityStatus::Uninterpretable { reason } => writeln!(f, "    reason: {reason}")?,
                IdentityStatus::Match => {}
            }
        }
        write!(
            f,
            "{} identities: {} match, {} corrected, {} mismatch, {} uninterpretable; kernel {}",
            self.audits.len(),
            self.count("match"),
            self.count("match after correction"),
            self.count("mismatch"),
            self.count("uninterpretable"),
            if self.kernel_consistent {
                "consistent"
            } else {
                "INCONSISTENT"
            }
        )
    }
}

fn classify<T: PartialEq + fmt::Display>(
    printed: &T,
    correction: Option<(&str, &T)>,
    derived: &T,
) -> IdentityStatus {
    if printed == derived {
        return IdentityStatus::Match;
    }
    match correction {
        Some((description, fixed)) if fixed == derived => IdentityStatus::MatchAfterCorrection {
            description: description.to_string(),
        },
        _ => IdentityStatus::Mismatch {
            detail: format!("printed {printed}, derived {derived}"),
        },
    }
}

fn form(s: &str) -> ExponentForm {
    s.parse().expect("built-in exponent form")
}

struct Forms(ScalarForms);

impl PartialEq for Forms {
    fn eq(&self, o: &Forms) -> bool {
        self.0 == o.0
    }
}

impl fmt::Display for Forms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.0;
        write!(f, "r^({}) s^({}) k1^({}) k2^({})", s.r, s.s, s.k[0], s.k[1])
    }
}

fn forms(r: &str, s: &str, k1: &str, k2: &str) -> Forms {
    Forms(ScalarForms {
        r: form(r),
        s: form(s),
        k: [form(k1), form(k2)],
    })
}

type Factors = Vec<([ExponentForm; 2], Option<Letter>)>;

/// `A` is `k1^a k2^b e1`, `C` is `k1^c k2^d e2`, `K` is a bare `k1^a k2^b`.
fn factors(code: &str) -> Factors {
    code.chars()
        .map(|ch| match ch {
            'A' => (letter_exponents(Letter::E1), Some(Letter::E1)),
            'C' => (letter_exponents(Letter::E2), Some(Letter::E2)),
            'K' => (letter_exponents(Letter::E1), None),
            _ => unreachable!("factor code"),
        })
        .collect()
}

fn letters(code: &str) -> Vec<Letter> {
    code.chars()
        .map(|ch| if ch == '1' { Letter::E1 } else { Letter::E2 })
        .collect()
}

fn factor_text(fs: &Factors) -> String {
    fs.iter()
        .map(|(u, l)| {
            let k = format!("k1^({}) k2^({})", u[0], u[1]);
            match l {
                Some(l) => format!("({k} {})", l.name()),
                None => format!("({k})"),
            }
        })
        .collect::<Vec<_>>()
        .join("")
}

fn word_text(ls: &[Letter]) -> String {
    ls.iter().map(|l| l.name()).collect::<Vec<_>>().join("*")
}

fn word_element(ls: &[Letter]) -> AlgebraElement {
    ls.iter().fold(AlgebraElement::one(), |acc, &l| {
        let g = match l {
            Letter::E1 => AlgebraElement::e1(),
            Letter::E2 => AlgebraElement::e2(),
        };
        multiply(&acc, &g)
    })
}

fn unit_power(re: i64, se: i64) -> Scalar {
    Scalar::from(LaurentPoly::rs(re as i32, se as i32))
}

/// Compares `prod k^(u_i) e_(l_i)` with `r^R s^S k^K w` at every box point.
fn kernel_check_word(fs: &Factors, derived: &ScalarForms, rhs: &[Letter], k: i32) -> (usize, bool) {
    let w = word_element(rhs);
    let points = exponent_box(k);
    let ok = points.par_iter().all(|v| {
        let v = v.map(i64::from);
        let mut lhs = AlgebraElement::one();
        for (u, l) in fs {
            lhs = multiply(
                &lhs,
                &AlgebraElement::group_like(u[0].eval(&v) as i32, u[1].eval(&v) as i32),
            );
            if let Some(l) = l {
                lhs = multiply(&lhs, &word_element(&[*l]));
            }
        }
        let kk =
            AlgebraElement::group_like(derived.k[0].eval(&v) as i32, derived.k[1].eval(&v) as i32);
        let rhs = multiply(&kk, &w).scale(&unit_power(derived.r.eval(&v), derived.s.eval(&v)));
        lhs == rhs
    });
    (points.len(), ok)
}

struct WordIdentity {
    label: &'static str,
    /// Printed left side, in the factor code of [`factors`].
    lhs: &'static str,
    /// Printed right-hand word, `1` for `e1` and `2` for `e2`.
    rhs: &'static str,
    printed: [&'static str; 4],
    correction: Option<(&'static str, [&'static str; 4])>,
    /// Reading of an inconsistent left side that restores its letter content.
    reading: Option<&'static str>,
}

const DEGREE_5_GROUP: &str = "degree-5 Serre word reorderings";
const DEGREE_3_GROUP: &str = "degree-3 Serre word reorderings";

fn word_identities() -> Vec<(&'static str, WordIdentity)> {
    let same_k5 = ["4a + c", "4b + d"];
    let same_k3 = ["a + 2c", "b + 2d"];
    let w = |label, lhs, rhs, r, s, k: [&'static str; 2]| WordIdentity {
        label,
        lhs,
        rhs,
        printed: [r, s, k[0], k[1]],
        correction: None,
        reading: None,
    };
    vec![
        (
            DEGREE_5_GROUP,
            WordIdentity {
                correction: Some((
                    "k-exponents are 4a + c, 4b + d (four copies of k1^a k2^b), as printed for the other four words",
                    ["6a + 18b + 4c + 12d", "12a + 18b + 8c + 12d", "4a + c", "4b + d"],
                )),
                ..w("e1^4*e2", "AAAAC", "11112", "6a + 18b + 4c + 12d", "12a + 18b + 8c + 12d", ["a + c", "b + d"])
            },
        ),
        (
            DEGREE_5_GROUP,
            w("e1^3*e2*e1", "AAACA", "11121", "3a + 12b + 3c + 9d", "9a + 15b + 6c + 9d", same_k5),
        ),
        (
            DEGREE_5_GROUP,
            w("e1^2*e2*e1^2", "AACAA", "11211", "6b + 2c + 6d", "6a + 12b + 4c + 6d", same_k5),
        ),
        (
            DEGREE_5_GROUP,
            w("e1*e2*e1^3", "ACAAA", "12111", "-3a + c + 3d", "3a + 9b + 2c + 3d", same_k5),
        ),
        (
            DEGREE_5_GROUP,
            WordIdentity {
                reading: Some("CAAAA"),
                ..w("e2*e1^4", "CKKKK", "21111", "-6a - 6b", "6b", same_k5)
            },
        ),
        (
            DEGREE_3_GROUP,
            w("e2^2*e1", "CCA", "221", "-6a - 12b - 3c - 6d", "-6a - 6b - 3c - 3d", same_k3),
        ),
        (
            DEGREE_3_GROUP,
            w("e2*e1*e2", "CAC", "212", "-3a - 6b - 2c - 3d", "-3a - 3b - c", same_k3),
        ),
        (
            DEGREE_3_GROUP,
            WordIdentity {
                reading: Some("ACC"),
                ..w("e1*e2^2", "AACC", "122", "-c + 6d", "c + 3d", same_k3)
            },
        ),
    ]
}

fn audit_word(group: &'static str, id: &WordIdentity, k: i32) -> IdentityAudit {
    let printed_lhs = factors(id.lhs);
    let rhs = letters(id.rhs);
    let [r, s, k1, k2] = id.printed;
    let printed = forms(r, s, k1, k2);
    let correction = id
        .correction
        .map(|(d, [r, s, k1, k2])| (d, forms(r, s, k1, k2)));
    let lhs_letters: Vec<Letter> = printed_lhs.iter().filter_map(|(_, l)| *l).collect();
    let consistent = lhs_letters == rhs;
    let used = match (consistent, id.reading) {
        (true, _) => printed_lhs.clone(),
        (false, Some(code)) => factors(code),
        (false, None) => {
            return IdentityAudit {
                group,
                label: id.label.to_string(),
                printed: format!(
                    "{} = {printed} {}",
                    factor_text(&printed_lhs),
                    word_text(&rhs)
                ),
                derived: String::new(),
                status: IdentityStatus::Uninterpretable {
                    reason: "left and right sides have different letters".into(),
                },
                kernel_points: 0,
                kernel_agrees: true,
            }
        }
    };
    let derived = Forms(word_scalar_forms(&used));
    let status = if consistent {
        classify(
            &printed,
            correction.as_ref().map(|(d, f)| (*d, f)),
            &derived,
        )
    } else {
        let under = match classify(&printed, None, &derived) {
            IdentityStatus::Match => "the printed scalar is then correct".to_string(),
            IdentityStatus::Mismatch { detail } => {
                format!("the printed scalar still differs: {detail}")
            }
            _ => unreachable!("classify without correction"),
        };
        IdentityStatus::Uninterpretable {
            reason: format!(
                "left side has letters {} but the right side is {}; read as {}, {under}",
                word_text(&lhs_letters),
                word_text(&rhs),
                factor_text(&used)
            ),
        }
    };
    let (kernel_points, kernel_agrees) = kernel_check_word(&used, &derived.0, &rhs, k);
    IdentityAudit {
        group,
        label: id.label.to_string(),
        printed: format!(
            "{} = {printed} {}",
            factor_text(&printed_lhs),
            word_text(&rhs)
        ),
        derived: format!("{} = {derived} {}", factor_text(&used), word_text(&rhs)),
        status,
        kernel_points,
        kernel_agrees,
    }
}

/// Exponent of `r` (or `s`) picked up per unit of `beta_j` when `k_g` passes
/// `X^beta` left to right: `[generator][root]`.
#[derive(Clone, Copy, PartialEq, Eq)]
struct BetaForms {
    r: [[i64; 6]; 2],
    s: [[i64; 6]; 2],
}

fn linear(coeffs: &[i64; 6]) -> String {
    let mut f = String::new();
    for (j, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = match (f.is_empty(), c < 0) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let n = if c.abs() == 1 {
            String::new()
        } else {
            c.abs().to_string()
        };
        f.push_str(&format!("{sign}{n}b{}", j + 1));
    }
    if f.is_empty() {
        "0".into()
    } else {
        f
    }
}

impl fmt::Display for BetaForms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r^(x({}) + y({})) s^(x({}) + y({}))",
            linear(&self.r[0]),
            linear(&self.r[1]),
            linear(&self.s[0]),
            linear(&self.s[1])
        )
    }
}

fn derived_beta_forms() -> BetaForms {
    let per = |g: usize, base: usize| -> [i64; 6] {
        std::array::from_fn(|j| {
            let (m, n) = if g == 0 { (1, 0) } else { (0, 1) };
            let c = k_move_scalar(ROOT_WEIGHTS[j], m, n);
            let (e, _) = c.as_monomial().expect("monomial");
            e.0[base] as i64
        })
    };
    BetaForms {
        r: [per(0, 0), per(1, 0)],
        s: [per(0, 1), per(1, 1)],
    }
}

const L1: [i64; 6] = [-3, -2, -3, -1, 0, 1];
const L2: [i64; 6] = [-6, -3, -3, 0, 3, 3];
const M1: [i64; 6] = [-3, -1, 0, 1, 3, 2];
const M2: [i64; 6] = [-3, 0, 3, 3, 6, 3];

fn neg(v: [i64; 6]) -> [i64; 6] {
    v.map(|x| -x)
}

fn kernel_check_k_past_beta(forms: &BetaForms, beta_degree: u32, k: i32) -> (usize, bool) {
    let mut cases = Vec::new();
    for n in 0..=beta_degree {
        for beta in basis_of_degree(n) {
            for x in -k..=k {
                for y in -k..=k {
                    cases.push((beta, x, y));
                }
            }
        }
    }
    let ok = cases.par_iter().all(|&(beta, x, y)| {
        let xb = AlgebraElement::monomial(Monomial { x: beta, k: [0, 0] }, Scalar::one());
        let lhs = multiply(&AlgebraElement::group_like(x, y), &xb);
        let dot = |v: &[i64; 6]| v.iter().zip(beta).map(|(c, b)| c * b as i64).sum::<i64>();
        let (x, y) = (x as i64, y as i64);
        let re = x * dot(&forms.r[0]) + y * dot(&forms.r[1]);
        let se = x * dot(&forms.s[0]) + y * dot(&forms.s[1]);
        let rhs = AlgebraElement::monomial(
            Monomial {
                x: beta,
                k: [x as i32, y as i32],
            },
            unit_power(re, se),
        );
        lhs == rhs
    });
    (cases.len(), ok)
}

const K_GROUP: &str = "k1^x k2^y moved past a PBW monomial X^beta";

fn audit_k_past_beta(beta_degree: u32, k: i32) -> Vec<IdentityAudit> {
    let derived = derived_beta_forms();
    let printed = BetaForms {
        r: [neg(L1), neg(L2)],
        s: [neg(L1).map(|c| 2 * c), neg(L2).map(|c| 2 * c)],
    };
    let corrected = BetaForms {
        r: printed.r,
        s: [neg(M1), neg(M2)],
    };
    let (points, agrees) = kernel_check_k_past_beta(&derived, beta_degree, k);
    let r_only = |b: &BetaForms| format!("r^(x({}) + y({}))", linear(&b.r[0]), linear(&b.r[1]));
    let s_only = |b: &BetaForms| format!("s^(x({}) + y({}))", linear(&b.s[0]), linear(&b.s[1]));
    vec![
        IdentityAudit {
            group: K_GROUP,
            label: "r-exponent".into(),
            printed: r_only(&printed),
            derived: r_only(&derived),
            status: classify(&r_only(&printed), None, &r_only(&derived)),
            kernel_points: points,
            kernel_agrees: agrees,
        },
        IdentityAudit {
            group: K_GROUP,
            label: "s-exponent".into(),
            printed: s_only(&printed),
            derived: s_only(&derived),
            status: classify(
                &s_only(&printed),
                Some((
                    "the s-exponent is -(x M1 + y M2) with M1 = -3b1 - b2 + b4 + 3b5 + 2b6 and \
                     M2 = -3b1 + 3b3 + 3b4 + 6b5 + 3b6, the s-forms used by the later beta \
                     identities; the printed (s^-2)^(x L1 + y L2) reuses the r-form",
                    &s_only(&corrected),
                )),
                &s_only(&derived),
            ),
            kernel_points: points,
            kernel_agrees: agrees,
        },
    ]
}

const KE_GROUP: &str = "k-e commutation constants";

#[derive(PartialEq)]
struct RsPower(i64, i64);

impl fmt::Display for RsPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r^{} s^{}", self.0, self.1)
    }
}

fn audit_k_e() -> Vec<IdentityAudit> {
    let fix = "r^-3 s^-3, the constant used in the very next equation for theta(k2) theta(e1)";
    let cases = [
        ("k1*e1", [1, 0], Letter::E1, RsPower(-1, -2), None),
        (
            "k2*e1 (generator list)",
            [0, 1],
            Letter::E1,
            RsPower(-1, -1),
            Some((fix, RsPower(-3, -3))),
        ),
        (
            "k2*e1 (image equation)",
            [0, 1],
            Letter::E1,
            RsPower(-3, -3),
            None,
        ),
        ("k2*e2", [0, 1], Letter::E2, RsPower(6, 3), None),
    ];
    cases
        .into_iter()
        .map(|(label, [m, n], l, printed, correction)| {
            let (p, q) = l.weight();
            let c = k_move_scalar(Weight::new(p as i64, q as i64), m, n);
            let (e, _) = c.as_monomial().expect("monomial");
            let derived = RsPower(e.0[0] as i64, e.0[1] as i64);
            let kg = AlgebraElement::group_like(m as i32, n as i32);
            let el = word_element(&[l]);
            let agrees = multiply(&kg, &el) == multiply(&el, &kg).scale(&Scalar::from(c.clone()));
            IdentityAudit {
                group: KE_GROUP,
                label: label.into(),
                printed: printed.to_string(),
                derived: derived.to_string(),
                status: classify(
                    &printed,
                    correction.as_ref().map(|(d, c)| (*d, c)),
                    &derived,
                ),
                kernel_points: 1,
                kernel_agrees: agrees,
            }
        })
        .collect()
}

const BETA_GROUP: &str = "beta identities for a monomial of theta(e_l)";

#[derive(PartialEq)]
struct BetaEquation([i64; 6], i64);

impl fmt::Display for BetaEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", linear(&self.0), self.1)
    }
}

/// With `theta(k_l) = lambda_l k_l`, moving `k_g` past a monomial `X^beta` of
/// `theta(e_l)` must cost what moving it past `e_l` costs.
fn audit_beta_identities(beta_degree: u32, k: i32) -> Vec<IdentityAudit> {
    let derived = derived_beta_forms();
    let m1_fix = "the coefficient of b6 is 2 (X6 = e1 has s-weight -2 under k1)";
    let printed = [
        (Letter::E1, "k1, r", L1, 1, None),
        (Letter::E1, "k1, s", [-3, -1, 0, 1, 3, 1], 2, Some(m1_fix)),
        (Letter::E1, "k2, r", L2, 3, None),
        (Letter::E1, "k2, s", M2, 3, None),
        (Letter::E2, "k1, r", L1, -3, None),
        (Letter::E2, "k1, s", [-3, -1, 0, 1, 3, 1], -3, Some(m1_fix)),
        (Letter::E2, "k2, r", L2, -6, None),
        (Letter::E2, "k2, s", M2, -3, None),
    ];
    let (points, agrees) = kernel_check_k_past_beta(&derived, beta_degree, k.min(1));
    printed
        .into_iter()
        .enumerate()
        .map(|(i, (l, label, coeffs, rhs, fix))| {
            let (g, base) = (i % 4 / 2, i % 2);
            let row = if base == 0 {
                derived.r[g]
            } else {
                derived.s[g]
            };
            let (p, q) = l.weight();
            let (m, n) = if g == 0 { (1, 0) } else { (0, 1) };
            let c = k_move_scalar(Weight::new(p as i64, q as i64), m, n);
            let target = c.as_monomial().expect("monomial").0 .0[base] as i64;
            let derived_eq = BetaEquation(neg(row), -target);
            let printed_eq = BetaEquation(coeffs, rhs);
            let corrected = fix.map(|d| (d, BetaEquation(M1, rhs)));
            IdentityAudit {
                group: BETA_GROUP,
                label: format!("theta({}), {label}", l.name()),
                printed: printed_eq.to_string(),
                derived: derived_eq.to_string(),
                status: classify(
                    &printed_eq,
                    corrected.as_ref().map(|(d, e)| (*d, e)),
                    &derived_eq,
                ),
                kernel_points: points,
                kernel_agrees: agrees,
            }
        })
        .collect()
}

const SYSTEM_GROUP: &str = "Serre exponent system";

fn audit_exponent_system() -> Vec<IdentityAudit> {
    let printed = [
        ("6a+18b+4c+12d", "3a+12b+3c+9d"),
        ("6b+2c+6d", "3a+12b+3c+9d"),
        ("-3a+c+3d", "3a+12b+3c+9d"),
        ("-6a-6b", "3a+12b+3c+9d"),
        ("12a+18b+8c+12d", "9a+15b+6c+9d"),
        ("6a+12b+4c+6d", "9a+15b+6c+9d"),
        ("3a+9b+2c+3d", "9a+15b+6c+9d"),
        ("6b", "9a+15b+6c+9d"),
        ("-6a-12b-3c-6d", "-3a-6b-2c-3d"),
        ("-c", "-3a-6b-2c-3d"),
        ("-6a-6b-3c-3d", "-3a-3b-c"),
        ("c+3d", "-3a-3b-c"),
    ];
    let lattice = derive_exponent_constraints();
    let mut out = Vec::new();
    for (i, (l, r)) in printed.iter().enumerate() {
        let p = format!("{} = {}", form(l), form(r));
        let (d, label) = match lattice.equations.get(i) {
            Some(e) => (
                format!("{} = {}", e.lhs, e.rhs),
                format!("{}, {} vs {} ({})", e.relation, e.word, e.reference, e.base),
            ),
            None => (String::new(), format!("equation {}", i + 1)),
        };
        out.push(IdentityAudit {
            group: SYSTEM_GROUP,
            label,
            status: classify(&p, None, &d),
            printed: p,
            derived: d,
            kernel_points: 0,
            kernel_agrees: true,
        });
    }
    out
}

/// Audits the printed commutation identities. Word reorderings are checked
/// at every `(a,b,c,d)` in `[-box_k, box_k]^4`; `k`-moves past PBW monomials
/// at every `beta` of degree at most `beta_degree` and `(x,y)` in
/// `[-box_k, box_k]^2`.
pub fn verify_commutation_lemmas(box_k: i32, beta_degree: u32) -> LemmaReport {
    let mut audits = audit_k_e();
    audits.extend(audit_k_past_beta(beta_degree, box_k));
    audits.extend(audit_beta_identities(beta_degree, box_k));
    audits.extend(
        word_identities()
            .iter()
            .map(|(g, id)| audit_word(g, id, box_k)),
    );
    audits.extend(audit_exponent_system());
    LemmaReport {
        box_k,
        beta_degree,
        kernel_consistent: audits.iter().all(|a| a.kernel_agrees),
        all_accounted: audits
            .iter()
            .all(|a| !matches!(a.status, IdentityStatus::Mismatch { .. })),
        audits,
    }
}
