use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;

use super::convert::{basis_of_weight, letter_root, solve_in_basis, XVec};
use super::{k_move_scalar, root_vector, AlgebraElement, Element, Monomial, ROOT_WEIGHTS};
use crate::coefficients::{RationalPoint, Ring, Scalar, Var};
use crate::error::{Error, Result};
use crate::free_algebra::Word;

/// Guards the straightening recursion; each level strictly lowers the
/// inversion structure, so real depths stay tiny.
const DEPTH_LIMIT: usize = 4096;

type Table<C> = BTreeMap<(usize, usize), Vec<(XVec, C)>>;

fn compute_pair(i: usize, j: usize) -> Vec<(XVec, Scalar)> {
    let target = &root_vector(j).expect("root") * &root_vector(i).expect("root");
    let cands = basis_of_weight(ROOT_WEIGHTS[i - 1] + ROOT_WEIGHTS[j - 1]);
    solve_in_basis(&target, &cands)
        .unwrap_or_else(|| panic!("straightening X{j}*X{i} has no solution"))
}

fn symbolic_table() -> &'static Table<Scalar> {
    static TABLE: OnceLock<Table<Scalar>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = BTreeMap::new();
        for j in 1..=6 {
            for i in 1..j {
                t.insert((i, j), compute_pair(i, j));
            }
        }
        t
    })
}

/// PBW form of `X_j * X_i` for `1 <= i < j <= 6`.
pub fn straighten_pair(i: usize, j: usize) -> Result<AlgebraElement> {
    if !(1 <= i && i < j && j <= 6) {
        return Err(Error::Invalid(format!(
            "need 1 <= i < j <= 6, got ({i},{j})"
        )));
    }
    Ok(Element::from_terms(
        symbolic_table()[&(i, j)]
            .iter()
            .map(|(x, c)| (Monomial { x: *x, k: [0, 0] }, c.clone())),
    ))
}

/// Multiplication of PBW elements over a coefficient ring `C`, driven by the
/// straightening table pushed through `lift`.
pub struct Straightener<C> {
    table: Table<C>,
    lift: Box<dyn Fn(&Scalar) -> C + Send + Sync>,
    cache: RwLock<HashMap<(XVec, usize), Arc<Vec<(XVec, C)>>>>,
}

impl<C: Ring + 'static> Straightener<C> {
    pub fn new(lift: impl Fn(&Scalar) -> C + Send + Sync + 'static) -> Self {
        let table = symbolic_table()
            .iter()
            .map(|(k, v)| (*k, v.iter().map(|(x, c)| (*x, lift(c))).collect()))
            .collect();
        Straightener {
            table,
            lift: Box::new(lift),
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// `X^x * X_i` in PBW form.
    fn times_root(&self, x: XVec, i: usize, depth: usize) -> Arc<Vec<(XVec, C)>> {
        assert!(depth < DEPTH_LIMIT, "straightening recursion too deep");
        if let Some(hit) = self.cache.read().expect("cache lock").get(&(x, i)) {
            return hit.clone();
        }
        let last = (0..6).rev().find(|&t| x[t] > 0).map(|t| t + 1);
        let out: Vec<(XVec, C)> = match last {
            Some(j) if j > i => {
                let mut head = x;
                head[j - 1] -= 1;
                let mut acc: BTreeMap<XVec, C> = BTreeMap::new();
                for (m, c) in &self.table[&(i, j)] {
                    for (y, d) in self.x_product_at(head, m, depth + 1) {
                        add(&mut acc, y, c.mul_ref(&d));
                    }
                }
                acc.into_iter().collect()
            }
            _ => {
                let mut y = x;
                y[i - 1] += 1;
                vec![(y, C::ring_one())]
            }
        };
        let out = Arc::new(out);
        self.cache
            .write()
            .expect("cache lock")
            .insert((x, i), out.clone());
        out
    }

    fn times_roots(
        &self,
        start: XVec,
        roots: impl IntoIterator<Item = usize>,
        depth: usize,
    ) -> BTreeMap<XVec, C> {
        let mut acc: BTreeMap<XVec, C> = BTreeMap::new();
        acc.insert(start, C::ring_one());
        for i in roots {
            let mut next = BTreeMap::new();
            for (y, c) in &acc {
                for (z, d) in self.times_root(*y, i, depth).iter() {
                    add(&mut next, *z, c.mul_ref(d));
                }
            }
            acc = next;
        }
        acc
    }

    fn x_product_at(&self, a: XVec, b: &XVec, depth: usize) -> BTreeMap<XVec, C> {
        let letters = Monomial { x: *b, k: [0, 0] }.letters();
        self.times_roots(a, letters, depth)
    }

    /// `X^a * X^b` in PBW form.
    pub fn x_product(&self, a: XVec, b: XVec) -> BTreeMap<XVec, C> {
        self.x_product_at(a, &b, 0)
    }

    /// Image of a word under `e1 -> X6`, `e2 -> X1`.
    pub fn word_product(&self, w: &Word) -> BTreeMap<XVec, C> {
        self.times_roots([0; 6], w.letters().iter().map(|&l| letter_root(l)), 0)
    }

    pub fn multiply(&self, x: &Element<C>, y: &Element<C>) -> Element<C> {
        let mut out = Element::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                let shift =
                    (self.lift)(&k_move_scalar(m2.weight(), m1.k[0] as i64, m1.k[1] as i64).into());
                let c = c1.mul_ref(c2).mul_ref(&shift);
                let k = [m1.k[0] + m2.k[0], m1.k[1] + m2.k[1]];
                for (z, d) in self.x_product(m1.x, m2.x) {
                    out.add_term(Monomial { x: z, k }, c.mul_ref(&d));
                }
            }
        }
        out
    }
}

fn add<C: Ring>(acc: &mut BTreeMap<XVec, C>, x: XVec, c: C) {
    if c.ring_is_zero() {
        return;
    }
    match acc.entry(x) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            o.get_mut().add_assign_ref(&c);
            if o.get().ring_is_zero() {
                o.remove();
            }
        }
    }
}

impl Straightener<Scalar> {
    pub fn symbolic() -> &'static Straightener<Scalar> {
        static S: OnceLock<Straightener<Scalar>> = OnceLock::new();
        S.get_or_init(|| Straightener::new(Scalar::clone))
    }
}

impl Straightener<BigRational> {
    /// Structure constants specialized at `pt`, which must assign `r` and `s`.
    pub fn at_point(pt: &RationalPoint) -> Result<Self> {
        for v in [Var::R, Var::S] {
            if pt.get(v).is_none() {
                return Err(Error::UnassignedVariable(v.name().into()));
            }
        }
        let pt = pt.clone();
        Ok(Straightener::new(move |c: &Scalar| {
            c.evaluate(&pt)
                .expect("structure constants only involve r and s")
        }))
    }
}

/// Product in canonical PBW form.
pub fn multiply(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    Straightener::symbolic().multiply(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::LaurentPoly;

    fn m(x: XVec) -> AlgebraElement {
        AlgebraElement::monomial(Monomial { x, k: [0, 0] }, Scalar::one())
    }

    #[test]
    fn table_examples() {
        assert_eq!(
            straighten_pair(1, 2).unwrap(),
            m([1, 1, 0, 0, 0, 0]).scale(&LaurentPoly::rs(3, 0).into())
        );
        assert_eq!(
            straighten_pair(1, 6).unwrap(),
            &AlgebraElement::root(2) + &m([1, 0, 0, 0, 0, 1]).scale(&LaurentPoly::rs(0, 3).into())
        );
        assert_eq!(
            straighten_pair(4, 6).unwrap(),
            &AlgebraElement::root(5) + &m([0, 0, 0, 1, 0, 1]).scale(&LaurentPoly::rs(2, 1).into())
        );
        let x5x2 = straighten_pair(2, 5).unwrap();
        let frac = Scalar::ratio(
            &"r*(r - s)*(r^2 + r*s + s^2)".parse().unwrap(),
            &"r + s".parse().unwrap(),
        );
        assert_eq!(
            x5x2,
            &m([0, 1, 0, 0, 1, 0]).scale(&LaurentPoly::rs(3, 3).into())
                + &m([0, 0, 0, 2, 0, 0]).scale(&frac.unwrap())
        );
        assert!(straighten_pair(2, 2).is_err());
        assert!(straighten_pair(3, 7).is_err());
    }

    #[test]
    fn generator_products() {
        let e1 = AlgebraElement::e1();
        let k1 = AlgebraElement::group_like(1, 0);
        assert_eq!(
            multiply(&k1, &e1),
            AlgebraElement::monomial(
                Monomial {
                    x: [0, 0, 0, 0, 0, 1],
                    k: [1, 0]
                },
                LaurentPoly::rs(-1, -2).into()
            )
        );
        assert_eq!(multiply(&AlgebraElement::one(), &e1), e1);
        let inv = AlgebraElement::group_like(-1, 0);
        assert_eq!(multiply(&k1, &inv), AlgebraElement::one());
    }
}
