//! Acceptance suite: one pass/fail line per criterion.
//!
//! Lines go straight to stderr so they show up without `--nocapture`. All
//! criteria run inside one test so the wall-clock limits are not skewed by
//! the harness running them in parallel.

use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use g2hopf::automorphisms::{
    check_relations, derive_exponent_constraints, exponent_box, gl_nonneg_permutation,
    scan_hopf_rigidity, solve_weight_equations, verify_commutation_lemmas, EndoParams, IntMatrix,
    Sigma,
};
use g2hopf::free_algebra::{
    confluence_check, default_system, irreducible_count, nf_reduce, Letter, NormalForm, Word,
};
use g2hopf::hopf::{antipode_errata, check_hopf_axioms_with, AxiomOptions};
use g2hopf::pbw::{
    basis_of_degree, free_to_pbw, graded_dimension, multiply, pbw_to_free, pbw_to_free_scaled,
    AlgebraElement, Monomial, Straightener,
};
use g2hopf::{LaurentPoly, RationalPoint, Scalar};

const DIMS: [usize; 9] = [1, 2, 4, 7, 12, 19, 29, 42, 60];
const SEED: u64 = 0x6a2;

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Coefficients of `1/((1-t)^2 (1-t^2)(1-t^3)(1-t^4)(1-t^5))` up to `t^n`.
fn generating_function(n: usize) -> Vec<usize> {
    let mut series = vec![0usize; n + 1];
    series[0] = 1;
    for d in [1, 1, 2, 3, 4, 5] {
        for i in d..=n {
            series[i] += series[i - d];
        }
    }
    series
}

/// Words of length `n` over `{1, 2}` avoiding every left-hand side, by plain
/// substring search on strings.
fn brute_force_count(n: usize) -> usize {
    let spell = |w: &Word| -> String {
        w.letters()
            .iter()
            .map(|l| if *l == Letter::E1 { '1' } else { '2' })
            .collect()
    };
    let lhs: Vec<String> = default_system()
        .lhs_words()
        .into_iter()
        .map(spell)
        .collect();
    (0..1u32 << n)
        .filter(|bits| {
            let s: String = (0..n)
                .map(|i| if bits >> i & 1 == 0 { '1' } else { '2' })
                .collect();
            !lhs.iter().any(|l| s.contains(l.as_str()))
        })
        .count()
}

fn criterion_1() -> Verdict {
    let report = confluence_check(default_system());
    ensure(report.confluent, || {
        format!(
            "{} unresolved critical pairs",
            report.pairs.iter().filter(|p| !p.resolved).count()
        )
    })?;
    let series = generating_function(8);
    ensure(series == DIMS, || {
        format!("generating function gives {series:?}")
    })?;
    for n in 0..=8 {
        let brute = brute_force_count(n);
        let kernel = irreducible_count(default_system(), n);
        let pbw = graded_dimension(n as u32);
        ensure(
            brute == DIMS[n] && kernel == DIMS[n] && pbw == DIMS[n],
            || {
                format!("n={n}: brute force {brute}, irreducible_count {kernel}, graded_dimension {pbw}")
            },
        )?;
    }
    Ok(format!(
        "{} critical pairs resolved; dims {:?}",
        report.pairs.len(),
        DIMS
    ))
}

fn random_scalar(rng: &mut StdRng) -> Scalar {
    let mut c = LaurentPoly::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let t = LaurentPoly::rs(rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        c = &c + &(&t * &LaurentPoly::constant(rng.gen_range(1..=3)));
    }
    c.into()
}

/// Random element of e-degree at most `max_degree`, with `k` exponents in
/// `[-k, k]`.
fn random_element(rng: &mut StdRng, max_degree: u32, k: i32) -> AlgebraElement {
    let mut x = AlgebraElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let deg = rng.gen_range(0..=max_degree);
        let basis = basis_of_degree(deg);
        let m = Monomial {
            x: basis[rng.gen_range(0..basis.len())],
            k: [rng.gen_range(-k..=k), rng.gen_range(-k..=k)],
        };
        x = &x + &AlgebraElement::monomial(m, random_scalar(rng));
    }
    x
}

fn criterion_2() -> Verdict {
    let mut monomials = 0;
    for d in 0..=5 {
        for x in basis_of_degree(d) {
            let m = AlgebraElement::monomial(Monomial { x, k: [0, 0] }, Scalar::one());
            let f = pbw_to_free(&m).map_err(|e| format!("{m}: {e}"))?;
            let back = free_to_pbw(&f);
            ensure(back == m, || format!("{m} -> {f} -> {back}"))?;
            monomials += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    let pairs = 200;
    for _ in 0..pairs {
        let x = random_element(&mut rng, 3, 0);
        let y = random_element(&mut rng, 3, 0);
        let fx = pbw_to_free(&x).map_err(|e| format!("{x}: {e}"))?;
        let fy = pbw_to_free(&y).map_err(|e| format!("{y}: {e}"))?;
        let direct = nf_reduce(&(&fx * &fy), default_system());
        // scale * (x*y) == elem, and t * elem reduces to e.
        let prod = pbw_to_free_scaled(&multiply(&x, &y)).map_err(|e| e.to_string())?;
        let red = nf_reduce(&prod.elem, default_system());
        let via_pbw = NormalForm {
            scale: &red.scale * &prod.scale,
            elem: red.elem,
        };
        ensure(via_pbw.equivalent(&direct), || {
            format!("({x})*({y}): pbw {via_pbw}, free {direct}")
        })?;
    }
    Ok(format!(
        "{monomials} monomials round trip; {pairs} products agree"
    ))
}

fn criterion_3() -> Verdict {
    let report = check_hopf_axioms_with(&AxiomOptions {
        max_degree: 3,
        k_range: 1,
        ..AxiomOptions::default()
    })
    .map_err(|e| e.to_string())?;
    ensure(report.all_pass, || {
        let f = &report.failures[0];
        format!(
            "{} failures, first {} on {}",
            report.failures.len(),
            f.axiom,
            f.input
        )
    })?;
    let checks: usize = report.tallies.iter().map(|t| t.checked).sum();
    let errata = antipode_errata();
    ensure(
        errata
            .iter()
            .any(|e| e.rule == "printed" && e.generator == "e1"),
        || "printed S(e1) not reported".into(),
    )?;
    ensure(errata.iter().all(|e| e.rule != "axiom"), || {
        "axiom antipode has errata".into()
    })?;
    Ok(format!(
        "{checks} axiom checks pass; {} errata for the printed antipode",
        errata.len()
    ))
}

fn criterion_4() -> Verdict {
    let mut holds = 0;
    for e in exponent_box(2) {
        let [a, b, c, d] = e;
        let expected = c == 3 * b && a + 3 * b + d == 0;
        let got = check_relations(&EndoParams::formal(Sigma::Identity, e)).all_hold;
        ensure(got == expected, || {
            format!("{e:?}: relations {got}, constraint {expected}")
        })?;
        holds += got as usize;
    }
    let lattice = derive_exponent_constraints();
    ensure(lattice.rank == 2, || format!("rank {}", lattice.rank))?;
    ensure(
        lattice.same_lattice(&[[1, 0, 0, -1], [0, 1, 3, -3]]),
        || format!("basis {:?}", lattice.basis),
    )?;
    for e in exponent_box(2) {
        let [a, b, c, d] = e.map(i64::from);
        let expected = c == 3 * b && a + 3 * b + d == 0;
        ensure(lattice.contains(&[a, b, c, d]) == expected, || {
            format!("lattice membership of {e:?}")
        })?;
    }
    Ok(format!(
        "625 tuples, {holds} satisfy the relations; derived lattice rank 2 equal"
    ))
}

fn criterion_5() -> Verdict {
    let x6 = [0, 0, 0, 0, 0, 1];
    let x1 = [1, 0, 0, 0, 0, 0];
    for bound in 1..=6 {
        for (sigma, target, expected) in [
            (Sigma::Identity, Letter::E1, vec![x6]),
            (Sigma::Identity, Letter::E2, vec![x1]),
            (Sigma::Swap, Letter::E1, vec![]),
            (Sigma::Swap, Letter::E2, vec![]),
        ] {
            let got = solve_weight_equations(sigma, target, bound);
            ensure(got == expected, || {
                format!("{sigma:?} {target:?} bound {bound}: {got:?}")
            })?;
        }
    }
    Ok("X6 and X1 forced for id, no solutions for swap, bounds 1..6".into())
}

fn criterion_6() -> Verdict {
    let lattice = derive_exponent_constraints();
    let rows = scan_hopf_rigidity(2, &lattice);
    for row in &rows {
        let expected = row.exponents == [0; 4] && row.formal_lambda == [false, false];
        ensure(row.hopf == expected, || {
            format!(
                "{:?} formal lambda {:?}: hopf {}",
                row.exponents, row.formal_lambda, row.hopf
            )
        })?;
    }
    let survivors = rows.iter().filter(|r| r.hopf).count();
    ensure(survivors == 1, || format!("{survivors} survivors"))?;
    Ok(format!(
        "{} cases, only a=b=c=d=0 with lambda=1 survives (gamma formal)",
        rows.len()
    ))
}

fn criterion_7() -> Verdict {
    let mut accepted = Vec::new();
    let mut total = 0;
    for m in IntMatrix::all_nonneg(2, 3) {
        total += 1;
        if gl_nonneg_permutation(&m).is_ok() {
            accepted.push(m.rows().to_vec());
        }
    }
    let expected = vec![vec![vec![0, 1], vec![1, 0]], vec![vec![1, 0], vec![0, 1]]];
    accepted.sort();
    ensure(total == 256, || format!("{total} matrices enumerated"))?;
    ensure(accepted == expected, || format!("accepted {accepted:?}"))?;
    Ok("256 matrices, exactly the two permutation matrices accepted".into())
}

fn criterion_8() -> Verdict {
    let report = verify_commutation_lemmas(2, 4);
    ensure(report.kernel_consistent, || {
        "derived identity disagrees with the kernel".into()
    })?;
    ensure(report.count("mismatch") == 0, || {
        format!("{} mismatches", report.count("mismatch"))
    })?;
    ensure(report.all_accounted, || "identity left unaccounted".into())?;
    let flagged = report.count("uninterpretable");
    ensure(flagged == 2, || {
        format!("{flagged} identities flagged uninterpretable")
    })?;
    Ok(format!(
        "{} identities: {} match, {} corrected, {flagged} flagged; kernel consistent",
        report.audits.len(),
        report.count("match"),
        report.count("match after correction"),
    ))
}

fn criterion_9() -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED + 9);
    let points: Vec<RationalPoint> = (0..5)
        .map(|_| RationalPoint::random_generic(&mut rng, 6))
        .collect();
    let zero = BigRational::from_integer(BigInt::from(0));
    for pt in &points {
        for v in [g2hopf::Var::R, g2hopf::Var::S] {
            ensure(pt.get(v) != Some(&zero), || {
                format!("zero coordinate at {pt}")
            })?;
        }
    }
    let numeric: Vec<Straightener<BigRational>> = points
        .iter()
        .map(Straightener::at_point)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let products = 100;
    for _ in 0..products {
        let dx = rng.gen_range(0..=4);
        let x = random_element(&mut rng, dx, 2);
        let y = random_element(&mut rng, 4 - dx, 2);
        let xy = multiply(&x, &y);
        for (pt, st) in points.iter().zip(&numeric) {
            let ev = |z: &AlgebraElement| z.evaluate(pt).map_err(|e| e.to_string());
            let late = ev(&xy)?;
            let early = st.multiply(&ev(&x)?, &ev(&y)?);
            ensure(late == early, || format!("({x})*({y}) at {pt}"))?;
        }
    }
    Ok(format!(
        "{products} products at {} points agree",
        points.len()
    ))
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, u64, fn() -> Verdict); 9] = [
        (1, "confluence and basis certificate", 10, criterion_1),
        (
            2,
            "PBW round trip and multiplication oracle",
            60,
            criterion_2,
        ),
        (3, "Hopf axioms and antipode errata", 60, criterion_3),
        (4, "exponent constraint equivalence", 120, criterion_4),
        (5, "weight equations force the generators", 5, criterion_5),
        (6, "Hopf rigidity", 60, criterion_6),
        (
            7,
            "nonnegative GL_2 matrices are permutations",
            1,
            criterion_7,
        ),
        (8, "commutation identity audit", 120, criterion_8),
        (9, "specialize vs multiply", 60, criterion_9),
    ];
    let mut failed = Vec::new();
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let pass = verdict.is_ok() && in_time;
        let detail = match &verdict {
            Ok(d) | Err(d) => d.as_str(),
        };
        let line = format!(
            "criterion {n}: {} {name}: {detail} ({:.2}s, limit {limit}s{})",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if in_time { "" } else { ", over time" },
        );
        let _ = writeln!(std::io::stderr(), "{line}");
        if !pass {
            failed.push(line);
        }
    }
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
