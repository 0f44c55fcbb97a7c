//! Coproduct, counit and antipode, extended from generator values through the
//! PBW expansion, together with bounded-degree axiom checks.

mod tensor;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::coefficients::Scalar;
use crate::free_algebra::Letter;
use crate::pbw::{basis_of_degree, multiply, root_vector, AlgebraElement, Monomial};

pub use tensor::{tensor_multiply, Tensor, TensorElement};

type XVec = [u32; 6];

/// Exponents of the group-like `K_l` with `Delta(e_l) = e_l (x) 1 + K_l (x) e_l`.
pub fn structure_group_like(l: Letter) -> [i32; 2] {
    match l {
        Letter::E1 => [2, -1],
        Letter::E2 => [-3, 2],
    }
}

fn letter_element(l: Letter) -> AlgebraElement {
    match l {
        Letter::E1 => AlgebraElement::e1(),
        Letter::E2 => AlgebraElement::e2(),
    }
}

fn gk(k: [i32; 2]) -> AlgebraElement {
    AlgebraElement::group_like(k[0], k[1])
}

fn letter_delta(l: Letter) -> TensorElement {
    let e = letter_element(l);
    let one = AlgebraElement::one();
    let g = gk(structure_group_like(l));
    &TensorElement::from_factors(&Scalar::one(), [&e, &one])
        + &TensorElement::from_factors(&Scalar::one(), [&g, &e])
}

fn root_delta(i: usize) -> TensorElement {
    let mut out = TensorElement::zero();
    for (w, c) in root_vector(i).expect("index in range").terms() {
        let mut t = TensorElement::one();
        for &l in w.letters() {
            t = t.multiply(&letter_delta(l));
        }
        out = &out + &t.scale(&Scalar::from(c));
    }
    out
}

fn split_last(x: &XVec) -> Option<(XVec, usize)> {
    let j = (0..6).rev().find(|&t| x[t] > 0)?;
    let mut head = *x;
    head[j] -= 1;
    Some((head, j + 1))
}

fn x_delta(x: &XVec) -> TensorElement {
    static CACHE: OnceLock<RwLock<HashMap<XVec, TensorElement>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("cache lock").get(x) {
        return t.clone();
    }
    let t = match split_last(x) {
        None => TensorElement::one(),
        Some((head, j)) => {
            static ROOTS: OnceLock<Vec<TensorElement>> = OnceLock::new();
            let roots = ROOTS.get_or_init(|| (1..=6).map(root_delta).collect());
            x_delta(&head).multiply(&roots[j - 1])
        }
    };
    cache.write().expect("cache lock").insert(*x, t.clone());
    t
}

/// `Delta(X^x k) = Delta(X^x) (k (x) k)`.
pub fn coproduct_monomial(m: &Monomial) -> TensorElement {
    x_delta(&m.x).times_group_like(m.k)
}

/// The algebra map with `Delta(e1) = e1 (x) 1 + k1^2 k2^-1 (x) e1`,
/// `Delta(e2) = e2 (x) 1 + k1^-3 k2^2 (x) e2`, `Delta(k) = k (x) k`.
pub fn coproduct(x: &AlgebraElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in x.terms() {
        out = &out + &coproduct_monomial(m).scale(c);
    }
    out
}

/// `epsilon(e_l) = 0`, `epsilon(k_l) = 1`.
pub fn counit(x: &AlgebraElement) -> Scalar {
    let mut out = Scalar::zero();
    for (m, c) in x.terms() {
        if m.is_group_like() {
            out += c;
        }
    }
    out
}

pub fn counit_monomial(m: &Monomial) -> Scalar {
    if m.is_group_like() {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// A choice of antipode values on `e1`, `e2`; `S(k) = k^-1` throughout.
pub trait AntipodeRule: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// `S(e_l)` in PBW form.
    fn image(&self, l: Letter) -> AlgebraElement;
}

struct FromAxiom;

impl AntipodeRule for FromAxiom {
    fn name(&self) -> &'static str {
        "axiom"
    }
    fn summary(&self) -> &'static str {
        "S(e_l) = -K_l^-1 e_l, the unique solution of m(S (x) id)Delta(e_l) = 0"
    }
    fn image(&self, l: Letter) -> AlgebraElement {
        let [m, n] = structure_group_like(l);
        -&multiply(&gk([-m, -n]), &letter_element(l))
    }
}

struct Printed;

impl AntipodeRule for Printed {
    fn name(&self) -> &'static str {
        "printed"
    }
    fn summary(&self) -> &'static str {
        "S(e_l) = -K_l e_l, as printed alongside the coproduct"
    }
    fn image(&self, l: Letter) -> AlgebraElement {
        -&multiply(&gk(structure_group_like(l)), &letter_element(l))
    }
}

pub fn antipode_rules() -> Vec<Box<dyn AntipodeRule>> {
    vec![Box::new(FromAxiom), Box::new(Printed)]
}

pub fn antipode_rule(name: &str) -> Option<Box<dyn AntipodeRule>> {
    antipode_rules().into_iter().find(|r| r.name() == name)
}

/// The anti-homomorphism determined by an [`AntipodeRule`], memoized on
/// `X`-monomials.
pub struct Antipode {
    rule: Box<dyn AntipodeRule>,
    roots: Vec<AlgebraElement>,
    cache: RwLock<HashMap<XVec, AlgebraElement>>,
}

impl Antipode {
    pub fn new(rule: Box<dyn AntipodeRule>) -> Self {
        let e = [rule.image(Letter::E1), rule.image(Letter::E2)];
        let roots = (1..=6)
            .map(|i| {
                let mut out = AlgebraElement::zero();
                for (w, c) in root_vector(i).expect("index in range").terms() {
                    let mut t = AlgebraElement::one();
                    for l in w.letters() {
                        let s = match l {
                            Letter::E1 => &e[0],
                            Letter::E2 => &e[1],
                        };
                        t = multiply(s, &t);
                    }
                    out = &out + &t.scale(&Scalar::from(c));
                }
                out
            })
            .collect();
        Antipode {
            rule,
            roots,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn rule(&self) -> &dyn AntipodeRule {
        self.rule.as_ref()
    }

    fn x_image(&self, x: &XVec) -> AlgebraElement {
        if let Some(s) = self.cache.read().expect("cache lock").get(x) {
            return s.clone();
        }
        let s = match split_last(x) {
            None => AlgebraElement::one(),
            Some((head, j)) => multiply(&self.roots[j - 1], &self.x_image(&head)),
        };
        self.cache
            .write()
            .expect("cache lock")
            .insert(*x, s.clone());
        s
    }

    /// `S(X^x k) = k^-1 S(X^x)`.
    pub fn apply_monomial(&self, m: &Monomial) -> AlgebraElement {
        multiply(&gk([-m.k[0], -m.k[1]]), &self.x_image(&m.x))
    }

    pub fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in x.terms() {
            out = &out + &self.apply_monomial(m).scale(c);
        }
        out
    }
}

fn default_antipode() -> &'static Antipode {
    static S: OnceLock<Antipode> = OnceLock::new();
    S.get_or_init(|| Antipode::new(Box::new(FromAxiom)))
}

/// The antipode with the axiom-derived values on `e1`, `e2`.
pub fn antipode(x: &AlgebraElement) -> AlgebraElement {
    default_antipode().apply(x)
}

/// `(Delta (x) id)` applied to a two-fold tensor.
pub fn delta_left(t: &TensorElement) -> Tensor<3> {
    let mut out = Tensor::<3>::zero();
    for ([a, b], c) in t.terms() {
        for ([x, y], d) in coproduct_monomial(a).terms() {
            out.add_term([*x, *y, *b], c * d);
        }
    }
    out
}

/// `(id (x) Delta)` applied to a two-fold tensor.
pub fn delta_right(t: &TensorElement) -> Tensor<3> {
    let mut out = Tensor::<3>::zero();
    for ([a, b], c) in t.terms() {
        for ([x, y], d) in coproduct_monomial(b).terms() {
            out.add_term([*a, *x, *y], c * d);
        }
    }
    out
}

/// `(epsilon (x) id)` when `left`, else `(id (x) epsilon)`.
pub fn counit_contract(t: &TensorElement, left: bool) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for ([a, b], c) in t.terms() {
        let (gone, kept) = if left { (a, b) } else { (b, a) };
        let e = counit_monomial(gone);
        if !e.is_zero() {
            out.add_term(*kept, c * &e);
        }
    }
    out
}

/// `m (S (x) id)` when `left`, else `m (id (x) S)`.
pub fn antipode_contract(s: &Antipode, t: &TensorElement, left: bool) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for ([a, b], c) in t.terms() {
        let (x, y) = if left {
            (
                s.apply_monomial(a),
                AlgebraElement::monomial(*b, Scalar::one()),
            )
        } else {
            (
                AlgebraElement::monomial(*a, Scalar::one()),
                s.apply_monomial(b),
            )
        };
        out = &out + &multiply(&x, &y).scale(c);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub input: String,
    /// Difference of the two sides.
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomTally {
    pub axiom: &'static str,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfReport {
    pub max_degree: u32,
    pub antipode: &'static str,
    pub tallies: Vec<AxiomTally>,
    pub failures: Vec<AxiomFailure>,
    pub all_pass: bool,
}

#[derive(Clone, Debug)]
pub struct AxiomOptions {
    pub max_degree: u32,
    /// `k` exponents range over `[-k_range, k_range]`.
    pub k_range: i32,
    pub antipode: String,
    pub seed: u64,
    /// Random pairs for the multiplicativity checks.
    pub sample_pairs: usize,
}

impl Default for AxiomOptions {
    fn default() -> Self {
        AxiomOptions {
            max_degree: 3,
            k_range: 1,
            antipode: "axiom".into(),
            seed: 0,
            sample_pairs: 24,
        }
    }
}

/// PBW monomials of e-degree at most `max_degree` with `k` exponents in
/// `[-k_range, k_range]`.
pub fn test_monomials(max_degree: u32, k_range: i32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for n in 0..=max_degree {
        for x in basis_of_degree(n) {
            for a in -k_range..=k_range {
                for b in -k_range..=k_range {
                    out.push(Monomial { x, k: [a, b] });
                }
            }
        }
    }
    out
}

const AXIOMS: [&str; 9] = [
    "coassociativity",
    "left counit",
    "right counit",
    "left antipode",
    "right antipode",
    "coproduct multiplicative",
    "counit multiplicative",
    "antipode anti-multiplicative",
    "unit",
];

fn single_checks(s: &Antipode, m: &Monomial) -> Vec<(&'static str, Option<String>)> {
    let x = AlgebraElement::monomial(*m, Scalar::one());
    let d = coproduct_monomial(m);
    let diff3 = |a: Tensor<3>, b: Tensor<3>| {
        let r = &a - &b;
        (!r.is_zero()).then(|| r.to_string())
    };
    let diff = |a: AlgebraElement, b: &AlgebraElement| {
        let r = &a - b;
        (!r.is_zero()).then(|| r.to_string())
    };
    let eps = AlgebraElement::scalar(counit_monomial(m));
    vec![
        ("coassociativity", diff3(delta_left(&d), delta_right(&d))),
        ("left counit", diff(counit_contract(&d, true), &x)),
        ("right counit", diff(counit_contract(&d, false), &x)),
        ("left antipode", diff(antipode_contract(s, &d, true), &eps)),
        (
            "right antipode",
            diff(antipode_contract(s, &d, false), &eps),
        ),
    ]
}

fn pair_checks(s: &Antipode, a: &Monomial, b: &Monomial) -> Vec<(&'static str, Option<String>)> {
    let x = AlgebraElement::monomial(*a, Scalar::one());
    let y = AlgebraElement::monomial(*b, Scalar::one());
    let xy = multiply(&x, &y);
    let dl = coproduct(&xy);
    let dr = coproduct_monomial(a).multiply(&coproduct_monomial(b));
    let t = &dl - &dr;
    let el = counit(&xy);
    let er = &counit_monomial(a) * &counit_monomial(b);
    let sl = s.apply(&xy);
    let sr = multiply(&s.apply_monomial(b), &s.apply_monomial(a));
    let u = &sl - &sr;
    vec![
        (
            "coproduct multiplicative",
            (!t.is_zero()).then(|| t.to_string()),
        ),
        (
            "counit multiplicative",
            (el != er).then(|| (&el - &er).to_string()),
        ),
        (
            "antipode anti-multiplicative",
            (!u.is_zero()).then(|| u.to_string()),
        ),
    ]
}

/// Checks every Hopf axiom on the test monomials and the multiplicativity of
/// the structure maps on seeded random pairs, all symbolically.
pub fn check_hopf_axioms_with(opts: &AxiomOptions) -> crate::Result<HopfReport> {
    let rule = antipode_rule(&opts.antipode).ok_or_else(|| {
        crate::Error::Invalid(format!("unknown antipode rule {:?}", opts.antipode))
    })?;
    let s = Antipode::new(rule);
    let monos = test_monomials(opts.max_degree, opts.k_range);
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let small = test_monomials(opts.max_degree.div_ceil(2), opts.k_range);
    let pairs: Vec<(Monomial, Monomial)> = (0..opts.sample_pairs)
        .map(|_| {
            (
                small[rng.gen_range(0..small.len())],
                small[rng.gen_range(0..small.len())],
            )
        })
        .collect();
    let mut results: Vec<(String, Vec<(&'static str, Option<String>)>)> = monos
        .par_iter()
        .map(|m| (m.to_string(), single_checks(&s, m)))
        .collect();
    results.extend(
        pairs
            .par_iter()
            .map(|(a, b)| (format!("{a} , {b}"), pair_checks(&s, a, b)))
            .collect::<Vec<_>>(),
    );
    let one = AlgebraElement::one();
    let unit_ok =
        coproduct(&one) == TensorElement::one() && counit(&one).is_one() && s.apply(&one) == one;
    results.push((
        "1".into(),
        vec![("unit", (!unit_ok).then(|| "structure maps move 1".into()))],
    ));

    let mut tallies: Vec<AxiomTally> = AXIOMS
        .iter()
        .map(|a| AxiomTally {
            axiom: a,
            checked: 0,
            failed: 0,
        })
        .collect();
    let mut failures = Vec::new();
    for (input, checks) in results {
        for (axiom, res) in checks {
            let t = tallies
                .iter_mut()
                .find(|t| t.axiom == axiom)
                .expect("known axiom");
            t.checked += 1;
            if let Some(residual) = res {
                t.failed += 1;
                failures.push(AxiomFailure {
                    axiom,
                    input: input.clone(),
                    residual,
                });
            }
        }
    }
    Ok(HopfReport {
        max_degree: opts.max_degree,
        antipode: s.rule().name(),
        all_pass: failures.is_empty(),
        tallies,
        failures,
    })
}

pub fn check_hopf_axioms(max_degree: u32) -> HopfReport {
    check_hopf_axioms_with(&AxiomOptions {
        max_degree,
        ..AxiomOptions::default()
    })
    .expect("built-in antipode rule")
}

/// One row per generator on which a registered antipode rule violates the
/// antipode axiom.
#[derive(Clone, Debug, Serialize)]
pub struct AntipodeErratum {
    pub rule: &'static str,
    pub generator: &'static str,
    pub image: String,
    pub axiom_image: String,
    /// `m(S (x) id)Delta(g) - epsilon(g) 1`.
    pub left_residual: String,
    pub right_residual: String,
}

pub fn antipode_errata() -> Vec<AntipodeErratum> {
    let axiom = default_antipode();
    let gens: [(&str, AlgebraElement); 4] = [
        ("e1", AlgebraElement::e1()),
        ("e2", AlgebraElement::e2()),
        ("k1", AlgebraElement::group_like(1, 0)),
        ("k2", AlgebraElement::group_like(0, 1)),
    ];
    let mut out = Vec::new();
    for rule in antipode_rules() {
        let s = Antipode::new(rule);
        for (name, g) in &gens {
            let d = coproduct(g);
            let eps = AlgebraElement::scalar(counit(g));
            let l = &antipode_contract(&s, &d, true) - &eps;
            let r = &antipode_contract(&s, &d, false) - &eps;
            if l.is_zero() && r.is_zero() {
                continue;
            }
            out.push(AntipodeErratum {
                rule: s.rule().name(),
                generator: name,
                image: s.apply(g).to_string(),
                axiom_image: axiom.apply(g).to_string(),
                left_residual: l.to_string(),
                right_residual: r.to_string(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::LaurentPoly;

    fn mono(x: XVec, k: [i32; 2]) -> AlgebraElement {
        AlgebraElement::monomial(Monomial { x, k }, Scalar::one())
    }

    #[test]
    fn generator_values() {
        let e1 = AlgebraElement::e1();
        assert_eq!(
            coproduct(&e1).to_string(),
            "(X6 (x) 1) + (k1^2*k2^-1 (x) X6)"
        );
        let k1 = AlgebraElement::group_like(1, 0);
        assert_eq!(coproduct(&k1).to_string(), "(k1 (x) k1)");
        assert_eq!(coproduct(&AlgebraElement::one()), TensorElement::one());
        assert!(counit(&e1).is_zero());
        assert!(counit(&AlgebraElement::group_like(3, -2)).is_one());
        let x = &AlgebraElement::scalar(LaurentPoly::constant(5)) + &AlgebraElement::root(2);
        assert_eq!(counit(&x), Scalar::from(5));
        assert_eq!(antipode(&k1), AlgebraElement::group_like(-1, 0));
        let s1 = multiply(&AlgebraElement::group_like(-2, 1), &e1);
        assert_eq!(antipode(&e1), -&s1);
    }

    #[test]
    fn tensor_products() {
        let e1 = AlgebraElement::e1();
        let one = AlgebraElement::one();
        let g = AlgebraElement::group_like(2, -1);
        let a = TensorElement::from_factors(&Scalar::one(), [&e1, &one]);
        let b = TensorElement::from_factors(&Scalar::one(), [&g, &e1]);
        let eg = multiply(&e1, &g);
        assert_eq!(
            tensor_multiply(&a, &b),
            TensorElement::from_factors(&Scalar::one(), [&eg, &e1])
        );
        assert_eq!(tensor_multiply(&TensorElement::one(), &b), b);
        let k1 = mono([0; 6], [1, 0]);
        let k2 = mono([0; 6], [0, 1]);
        let k12 = mono([0; 6], [1, 1]);
        assert_eq!(
            tensor_multiply(
                &TensorElement::from_factors(&Scalar::one(), [&k1, &k1]),
                &TensorElement::from_factors(&Scalar::one(), [&k2, &k2])
            ),
            TensorElement::from_factors(&Scalar::one(), [&k12, &k12])
        );
    }

    #[test]
    fn consequences_on_generators() {
        let s = default_antipode();
        for g in [
            AlgebraElement::e1(),
            AlgebraElement::e2(),
            AlgebraElement::group_like(1, 0),
            AlgebraElement::group_like(0, 1),
        ] {
            assert_eq!(counit(&antipode(&g)), counit(&g));
            let lhs = coproduct(&antipode(&g));
            let mut rhs = TensorElement::zero();
            for ([a, b], c) in coproduct(&g).terms() {
                let t =
                    TensorElement::from_factors(c, [&s.apply_monomial(b), &s.apply_monomial(a)]);
                rhs = &rhs + &t;
            }
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn weight_bigrading() {
        let x = mono([1, 0, 0, 1, 0, 1], [0, 0]);
        let w = x.leading().unwrap().0.weight();
        for ([a, b], _) in coproduct(&x).terms() {
            assert_eq!(a.weight() + b.weight(), w);
        }
    }

    #[test]
    fn low_degree_axioms() {
        let r = check_hopf_axioms(2);
        assert!(r.all_pass, "{:?}", r.failures.first());
        let printed = check_hopf_axioms_with(&AxiomOptions {
            max_degree: 1,
            antipode: "printed".into(),
            ..AxiomOptions::default()
        })
        .unwrap();
        assert!(!printed.all_pass);
        assert!(printed
            .failures
            .iter()
            .any(|f| f.axiom == "left antipode" && f.input == "X6"));
        let errata = antipode_errata();
        assert!(errata.iter().all(|e| e.rule == "printed"));
        let gens: Vec<_> = errata.iter().map(|e| e.generator).collect();
        assert_eq!(gens, ["e1", "e2"]);
    }
}
