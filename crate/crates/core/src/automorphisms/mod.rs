//! Candidate endomorphisms `k_l -> lambda_l k_sigma(l)`,
//! `e_l -> gamma_l k1^. k2^. e_sigma(l)` and the checks that classify them.

mod lattice;
mod lemmas;
mod matrix;
mod weights;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coefficients::{LaurentPoly, Scalar, Var};
use crate::error::{Error, Result};
use crate::free_algebra::{serre_relations, serre_variant, Letter};
use crate::hopf::{coproduct, TensorElement};
use crate::pbw::{k_move_scalar, multiply, root_vector, AlgebraElement, Monomial, Weight};

pub use lattice::{
    derive_exponent_constraints, hermite_normal_form, integer_kernel, word_scalar_forms,
    ConstraintLattice, ExponentForm, LinearEquation, ScalarForms,
};
pub use lemmas::{verify_commutation_lemmas, IdentityAudit, IdentityStatus, LemmaReport};
pub use matrix::{gl_nonneg_permutation, IntMatrix, Permutation, Rejection};
pub use weights::solve_weight_equations;

/// A permutation of `{1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sigma {
    Identity,
    Swap,
}

impl Sigma {
    pub fn apply(self, l: usize) -> usize {
        match self {
            Sigma::Identity => l,
            Sigma::Swap => 3 - l,
        }
    }

    pub fn letter(self, l: Letter) -> Letter {
        match (self, l) {
            (Sigma::Identity, l) => l,
            (Sigma::Swap, Letter::E1) => Letter::E2,
            (Sigma::Swap, Letter::E2) => Letter::E1,
        }
    }
}

impl Serialize for Sigma {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        [self.apply(1), self.apply(2)].serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Sigma {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match <[usize; 2]>::deserialize(de)? {
            [1, 2] => Ok(Sigma::Identity),
            [2, 1] => Ok(Sigma::Swap),
            other => Err(D::Error::custom(format!(
                "not a permutation of {{1,2}}: {other:?}"
            ))),
        }
    }
}

/// Generator images of a candidate endomorphism. The scalars are nonzero
/// integer multiples of Laurent monomials, so `0` cannot be represented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoParams {
    pub sigma: Sigma,
    pub lambda: [LaurentPoly; 2],
    pub gamma: [LaurentPoly; 2],
    pub exp1: [i32; 2],
    pub exp2: [i32; 2],
}

fn check_scalar(c: &LaurentPoly) -> Result<()> {
    if c.as_monomial().is_some() {
        Ok(())
    } else {
        Err(Error::Invalid(format!(
            "endomorphism scalar {c} must be a nonzero monomial"
        )))
    }
}

impl EndoParams {
    pub fn new(
        sigma: Sigma,
        lambda: [LaurentPoly; 2],
        gamma: [LaurentPoly; 2],
        exp1: [i32; 2],
        exp2: [i32; 2],
    ) -> Result<Self> {
        for c in lambda.iter().chain(&gamma) {
            check_scalar(c)?;
        }
        Ok(EndoParams {
            sigma,
            lambda,
            gamma,
            exp1,
            exp2,
        })
    }

    pub fn identity() -> Self {
        Self::new(
            Sigma::Identity,
            [LaurentPoly::one(), LaurentPoly::one()],
            [LaurentPoly::one(), LaurentPoly::one()],
            [0, 0],
            [0, 0],
        )
        .expect("units")
    }

    /// `sigma`, exponents `(a,b,c,d)`, and the formal units `l1, l2, g1, g2`.
    pub fn formal(sigma: Sigma, [a, b, c, d]: [i32; 4]) -> Self {
        Self::new(
            sigma,
            [
                LaurentPoly::var(Var::Lambda1),
                LaurentPoly::var(Var::Lambda2),
            ],
            [LaurentPoly::var(Var::Gamma1), LaurentPoly::var(Var::Gamma2)],
            [a, b],
            [c, d],
        )
        .expect("units")
    }

    pub fn exponents(&self) -> [i32; 4] {
        [self.exp1[0], self.exp1[1], self.exp2[0], self.exp2[1]]
    }

    fn exp(&self, l: Letter) -> [i32; 2] {
        match l {
            Letter::E1 => self.exp1,
            Letter::E2 => self.exp2,
        }
    }

    fn gamma_of(&self, l: Letter) -> &LaurentPoly {
        match l {
            Letter::E1 => &self.gamma[0],
            Letter::E2 => &self.gamma[1],
        }
    }
}

fn letter_element(l: Letter) -> AlgebraElement {
    match l {
        Letter::E1 => AlgebraElement::e1(),
        Letter::E2 => AlgebraElement::e2(),
    }
}

fn power(c: &LaurentPoly, n: i32) -> Result<LaurentPoly> {
    c.powi(n).ok_or_else(|| Error::NotAUnit(c.to_string()))
}

/// `theta` as an algebra map, with the images of the root vectors cached.
pub struct Endo<'a> {
    params: &'a EndoParams,
    roots: Vec<AlgebraElement>,
}

impl<'a> Endo<'a> {
    pub fn new(params: &'a EndoParams) -> Self {
        let roots = (1..=6)
            .map(|i| {
                let mut out = AlgebraElement::zero();
                for (w, c) in root_vector(i).expect("index in range").terms() {
                    let mut t = AlgebraElement::one();
                    for &l in w.letters() {
                        t = multiply(&t, &letter_image(params, l));
                    }
                    out = &out + &t.scale(&Scalar::from(c));
                }
                out
            })
            .collect();
        Endo { params, roots }
    }

    /// `theta(k1^m k2^n) = lambda1^m lambda2^n k_sigma(1)^m k_sigma(2)^n`.
    pub fn group_like(&self, [m, n]: [i32; 2]) -> Result<AlgebraElement> {
        let p = self.params;
        let c = &power(&p.lambda[0], m)? * &power(&p.lambda[1], n)?;
        let k = match p.sigma {
            Sigma::Identity => [m, n],
            Sigma::Swap => [n, m],
        };
        Ok(AlgebraElement::group_like(k[0], k[1]).scale(&c.into()))
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Result<AlgebraElement> {
        let mut out = self.group_like(m.k)?;
        for i in (0..6).rev() {
            for _ in 0..m.x[i] {
                out = multiply(&self.roots[i], &out);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (m, c) in x.terms() {
            out = &out + &self.apply_monomial(m)?.scale(c);
        }
        Ok(out)
    }

    pub fn apply_word(&self, word: &[Gen]) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::one();
        for g in word {
            let img = match *g {
                Gen::E(l) => letter_image(self.params, l),
                Gen::K(k) => self.group_like(k)?,
            };
            out = multiply(&out, &img);
        }
        Ok(out)
    }
}

fn letter_image(p: &EndoParams, l: Letter) -> AlgebraElement {
    let [m, n] = p.exp(l);
    let e = multiply(
        &AlgebraElement::group_like(m, n),
        &letter_element(p.sigma.letter(l)),
    );
    e.scale(&p.gamma_of(l).into())
}

/// Multiplicative extension of the generator images, applied to the PBW
/// expansion of `x`. Fails only when a negative `k` power meets a scalar that
/// is not a unit.
pub fn apply_endo(p: &EndoParams, x: &AlgebraElement) -> Result<AlgebraElement> {
    Endo::new(p).apply(x)
}

/// A generator in an unnormalized word: `e_l` or `k1^m k2^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    E(Letter),
    K([i32; 2]),
}

/// A defining relation `sum c_i w_i = 0` kept as unnormalized words.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(Scalar, Vec<Gen>)>,
}

/// `k1 k2 = k2 k1`, the four `k`-`e` commutations and the two Serre relations.
pub fn defining_relations() -> Vec<Relation> {
    let k1 = Gen::K([1, 0]);
    let k2 = Gen::K([0, 1]);
    let mut out = vec![Relation {
        name: "k1*k2 = k2*k1".into(),
        terms: vec![
            (Scalar::one(), vec![k1, k2]),
            (Scalar::from(-1), vec![k2, k1]),
        ],
    }];
    for (kname, k, kv) in [("k1", k1, [1, 0]), ("k2", k2, [0, 1])] {
        for l in [Letter::E1, Letter::E2] {
            let (p, q) = l.weight();
            let c = k_move_scalar(Weight::new(p as i64, q as i64), kv[0], kv[1]);
            out.push(Relation {
                name: format!("{kname}*{0} = {c}*{0}*{kname}", l.name()),
                terms: vec![
                    (Scalar::one(), vec![k, Gen::E(l)]),
                    (-Scalar::from(c), vec![Gen::E(l), k]),
                ],
            });
        }
    }
    let variant = serre_variant("corrected").expect("registered");
    for (name, rel) in ["degree-3 Serre", "degree-5 Serre"]
        .iter()
        .zip(serre_relations(variant.as_ref()))
    {
        out.push(Relation {
            name: name.to_string(),
            terms: rel
                .terms()
                .map(|(w, c)| {
                    (
                        Scalar::from(c),
                        w.letters().iter().map(|&l| Gen::E(l)).collect(),
                    )
                })
                .collect(),
        });
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    /// Normal form of the image when it is not zero, or the error met.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EndoReport {
    pub exponents: [i32; 4],
    pub verdicts: Vec<Verdict>,
    pub all_hold: bool,
}

impl EndoReport {
    fn new(p: &EndoParams, verdicts: Vec<Verdict>) -> Self {
        EndoReport {
            exponents: p.exponents(),
            all_hold: verdicts.iter().all(|v| v.holds),
            verdicts,
        }
    }
}

fn verdict(name: String, r: Result<Option<String>>) -> Verdict {
    match r {
        Ok(res) => Verdict {
            name,
            holds: res.is_none(),
            residual: res,
        },
        Err(e) => Verdict {
            name,
            holds: false,
            residual: Some(e.to_string()),
        },
    }
}

/// Whether `theta` sends every defining relation to zero.
pub fn check_relations(p: &EndoParams) -> EndoReport {
    let endo = Endo::new(p);
    let verdicts = defining_relations()
        .into_iter()
        .map(|rel| {
            let image = rel
                .terms
                .iter()
                .try_fold(AlgebraElement::zero(), |acc, (c, w)| {
                    Ok::<_, Error>(&acc + &endo.apply_word(w)?.scale(c))
                });
            verdict(
                rel.name,
                image.map(|x| (!x.is_zero()).then(|| x.to_string())),
            )
        })
        .collect();
    EndoReport::new(p, verdicts)
}

fn theta_tensor(endo: &Endo, t: &TensorElement) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for ([a, b], c) in t.terms() {
        let x = endo.apply_monomial(a)?;
        let y = endo.apply_monomial(b)?;
        out = &out + &TensorElement::from_factors(c, [&x, &y]);
    }
    Ok(out)
}

/// `Delta(theta(g)) = (theta (x) theta)(Delta(g))` for `g` in `k1, k2, e1, e2`.
pub fn check_hopf_compat(p: &EndoParams) -> EndoReport {
    let endo = Endo::new(p);
    let gens = [
        ("k1", AlgebraElement::group_like(1, 0)),
        ("k2", AlgebraElement::group_like(0, 1)),
        ("e1", AlgebraElement::e1()),
        ("e2", AlgebraElement::e2()),
    ];
    let verdicts = gens
        .iter()
        .map(|(name, g)| {
            let r = (|| {
                let lhs = coproduct(&endo.apply(g)?);
                let rhs = theta_tensor(&endo, &coproduct(g))?;
                let d = &lhs - &rhs;
                Ok((!d.is_zero()).then(|| d.to_string()))
            })();
            verdict(name.to_string(), r)
        })
        .collect();
    EndoReport::new(p, verdicts)
}

fn require_identity(p: &EndoParams) -> Result<()> {
    match p.sigma {
        Sigma::Identity => Ok(()),
        Sigma::Swap => Err(Error::Invalid(
            "sigma = (1 2) admits no automorphism; composition is defined for sigma = id".into(),
        )),
    }
}

/// Parameters of `p o q`.
pub fn compose(p: &EndoParams, q: &EndoParams) -> Result<EndoParams> {
    require_identity(p)?;
    require_identity(q)?;
    let twist = |e: [i32; 2]| -> Result<LaurentPoly> {
        Ok(&power(&p.lambda[0], e[0])? * &power(&p.lambda[1], e[1])?)
    };
    let g1 = &(&q.gamma[0] * &twist(q.exp1)?) * &p.gamma[0];
    let g2 = &(&q.gamma[1] * &twist(q.exp2)?) * &p.gamma[1];
    EndoParams::new(
        Sigma::Identity,
        [&p.lambda[0] * &q.lambda[0], &p.lambda[1] * &q.lambda[1]],
        [g1, g2],
        [p.exp1[0] + q.exp1[0], p.exp1[1] + q.exp1[1]],
        [p.exp2[0] + q.exp2[0], p.exp2[1] + q.exp2[1]],
    )
}

/// Parameters of the two-sided inverse.
pub fn invert(p: &EndoParams) -> Result<EndoParams> {
    require_identity(p)?;
    let inv = |c: &LaurentPoly| {
        c.unit_inverse()
            .ok_or_else(|| Error::NotAUnit(c.to_string()))
    };
    let twist = |e: [i32; 2]| -> Result<LaurentPoly> {
        Ok(&power(&p.lambda[0], e[0])? * &power(&p.lambda[1], e[1])?)
    };
    EndoParams::new(
        Sigma::Identity,
        [inv(&p.lambda[0])?, inv(&p.lambda[1])?],
        [
            &inv(&p.gamma[0])? * &twist(p.exp1)?,
            &inv(&p.gamma[1])? * &twist(p.exp2)?,
        ],
        [-p.exp1[0], -p.exp1[1]],
        [-p.exp2[0], -p.exp2[1]],
    )
}

/// Every `(a,b,c,d)` in `[-k, k]^4`, in lexicographic order.
pub fn exponent_box(k: i32) -> Vec<[i32; 4]> {
    let r = -k..=k;
    let mut out = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// `(exponents, check_relations passes)` over the box, formal scalars.
pub fn scan_relations(k: i32) -> Vec<([i32; 4], bool)> {
    exponent_box(k)
        .into_par_iter()
        .map(|e| {
            (
                e,
                check_relations(&EndoParams::formal(Sigma::Identity, e)).all_hold,
            )
        })
        .collect()
}

/// One row of the Hopf rigidity scan.
#[derive(Clone, Debug, Serialize)]
pub struct RigidityRow {
    pub exponents: [i32; 4],
    /// `true` when `lambda_l` is the formal unit, `false` when it is `1`.
    pub formal_lambda: [bool; 2],
    pub hopf: bool,
}

/// `check_hopf_compat` over the lattice points of the box, with each
/// `lambda_l` either `1` or formal and `gamma` formal.
pub fn scan_hopf_rigidity(k: i32, lattice: &ConstraintLattice) -> Vec<RigidityRow> {
    let mut cases = Vec::new();
    for e in exponent_box(k) {
        if !lattice.contains(&e.map(i64::from)) {
            continue;
        }
        for f1 in [false, true] {
            for f2 in [false, true] {
                cases.push((e, [f1, f2]));
            }
        }
    }
    cases
        .into_par_iter()
        .map(|(e, f)| {
            let mut p = EndoParams::formal(Sigma::Identity, e);
            for (l, formal) in f.iter().enumerate() {
                if !formal {
                    p.lambda[l] = LaurentPoly::one();
                }
            }
            RigidityRow {
                exponents: e,
                formal_lambda: f,
                hopf: check_hopf_compat(&p).all_hold,
            }
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct ParamsJson {
    sigma: Sigma,
    lambda: [String; 2],
    gamma: [String; 2],
    exp1: [i32; 2],
    exp2: [i32; 2],
}

impl Serialize for EndoParams {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ParamsJson {
            sigma: self.sigma,
            lambda: self.lambda.clone().map(|c| c.to_string()),
            gamma: self.gamma.clone().map(|c| c.to_string()),
            exp1: self.exp1,
            exp2: self.exp2,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for EndoParams {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ParamsJson::deserialize(de)?;
        let parse = |s: &String| s.parse::<LaurentPoly>().map_err(D::Error::custom);
        EndoParams::new(
            j.sigma,
            [parse(&j.lambda[0])?, parse(&j.lambda[1])?],
            [parse(&j.gamma[0])?, parse(&j.gamma[1])?],
            j.exp1,
            j.exp2,
        )
        .map_err(D::Error::custom)
    }
}

impl fmt::Display for EndoParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_string(self).map_err(|_| fmt::Error)?;
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names_failing(r: &EndoReport) -> Vec<String> {
        r.verdicts
            .iter()
            .filter(|v| !v.holds)
            .map(|v| v.name.clone())
            .collect()
    }

    #[test]
    fn identity_and_simple_images() {
        let id = EndoParams::identity();
        let x = &AlgebraElement::root(3) + &AlgebraElement::group_like(1, -1);
        assert_eq!(apply_endo(&id, &x).unwrap(), x);
        let p = EndoParams::formal(Sigma::Identity, [2, -1, 0, 0]);
        let img = apply_endo(&p, &AlgebraElement::e1()).unwrap();
        let want = multiply(&AlgebraElement::group_like(2, -1), &AlgebraElement::e1())
            .scale(&LaurentPoly::var(Var::Gamma1).into());
        assert_eq!(img, want);
        let k = apply_endo(&p, &AlgebraElement::group_like(1, 0)).unwrap();
        assert_eq!(
            k,
            AlgebraElement::group_like(1, 0).scale(&LaurentPoly::var(Var::Lambda1).into())
        );
    }

    #[test]
    fn relation_checks() {
        assert!(check_relations(&EndoParams::formal(Sigma::Identity, [-3, 1, 3, 0])).all_hold);
        let bad = check_relations(&EndoParams::formal(Sigma::Identity, [1, 0, 0, 0]));
        assert_eq!(names_failing(&bad), ["degree-3 Serre", "degree-5 Serre"]);
        let swap = check_relations(&EndoParams::formal(Sigma::Swap, [0, 0, 0, 0]));
        assert!(names_failing(&swap).iter().any(|n| n.starts_with("k1*e1")));
        assert_eq!(defining_relations().len(), 7);
    }

    #[test]
    fn hopf_compatibility() {
        let mut p = EndoParams::formal(Sigma::Identity, [0, 0, 0, 0]);
        p.lambda = [LaurentPoly::one(), LaurentPoly::one()];
        assert!(check_hopf_compat(&p).all_hold);
        p.lambda[0] = LaurentPoly::constant(2);
        let r = check_hopf_compat(&p);
        assert!(names_failing(&r).contains(&"k1".to_string()));
        let mut q = EndoParams::formal(Sigma::Identity, [-3, 1, 3, 0]);
        q.lambda = [LaurentPoly::one(), LaurentPoly::one()];
        assert_eq!(names_failing(&check_hopf_compat(&q)), ["e1", "e2"]);
    }

    #[test]
    fn group_operations() {
        let p = EndoParams::formal(Sigma::Identity, [-3, 1, 3, 0]);
        assert_eq!(compose(&p, &EndoParams::identity()).unwrap(), p);
        let inv = invert(&p).unwrap();
        assert_eq!(inv.exponents(), [3, -1, -3, 0]);
        assert_eq!(
            inv.gamma[0],
            "g1^-1*l1^-3*l2".parse::<LaurentPoly>().unwrap()
        );
        let id = compose(&p, &inv).unwrap();
        assert_eq!(id, EndoParams::identity());
        let q = EndoParams::new(
            Sigma::Identity,
            ["r".parse().unwrap(), "l2^2".parse().unwrap()],
            ["g2".parse().unwrap(), "-s".parse().unwrap()],
            [-1, 0],
            [0, 1],
        )
        .unwrap();
        let pq = compose(&p, &q).unwrap();
        for g in [
            AlgebraElement::e1(),
            AlgebraElement::e2(),
            AlgebraElement::group_like(-1, 1),
        ] {
            let direct = apply_endo(&pq, &g).unwrap();
            let nested = apply_endo(&p, &apply_endo(&q, &g).unwrap()).unwrap();
            assert_eq!(direct, nested);
        }
        assert!(compose(&EndoParams::formal(Sigma::Swap, [0; 4]), &p).is_err());
    }

    #[test]
    fn params_json() {
        let p = EndoParams::formal(Sigma::Identity, [-3, 1, 3, 0]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"sigma":[1,2],"lambda":["l1","l2"],"gamma":["g1","g2"],"exp1":[-3,1],"exp2":[3,0]}"#
        );
        assert_eq!(serde_json::from_str::<EndoParams>(&s).unwrap(), p);
        assert!(serde_json::from_str::<EndoParams>(&s.replace("\"g1\"", "\"0\"")).is_err());
    }
}
