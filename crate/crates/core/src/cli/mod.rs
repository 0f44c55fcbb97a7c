//! Command-line front end. Each subcommand is a [`Command`] in the registry
//! returned by [`commands`]; [`run`] parses global flags, dispatches, and
//! maps results to exit codes (0 pass, 1 check failed, 2 usage or input
//! error).

mod parse;

use std::fmt;

use clap::{Arg, ArgAction, ArgMatches};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::automorphisms::{
    check_hopf_compat, check_relations, compose, derive_exponent_constraints,
    gl_nonneg_permutation, invert, verify_commutation_lemmas, EndoParams, IntMatrix,
};
use crate::coefficients::{write_combination, RationalPoint};
use crate::error::{Error, Result};
use crate::free_algebra::{confluence_check, default_system, irreducible_count};
use crate::hopf::{
    antipode_errata, antipode_rule, check_hopf_axioms_with, coproduct, counit, Antipode,
    AxiomOptions, TensorElement,
};
use crate::pbw::{graded_dimension, multiply, straighten_pair, AlgebraElement};
use crate::Scalar;

pub use parse::parse_element;

/// Settings shared by all subcommands.
pub struct Context {
    pub json: bool,
    /// Specialize printed coefficients at this point.
    pub eval: Option<RationalPoint>,
    pub seed: u64,
}

/// Result of a subcommand: text and JSON renderings plus the check verdict.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

impl Outcome {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Outcome {
            text: text.into(),
            json,
            passed: true,
        }
    }

    fn verdict(mut self, passed: bool) -> Self {
        self.passed = passed;
        self
    }
}

pub trait Command: Send + Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn args(&self) -> Vec<Arg> {
        Vec::new()
    }
    fn run(&self, m: &ArgMatches, ctx: &Context) -> Result<Outcome>;
}

/// A command given by plain functions.
struct Simple {
    name: &'static str,
    about: &'static str,
    args: fn() -> Vec<Arg>,
    run: fn(&ArgMatches, &Context) -> Result<Outcome>,
}

impl Command for Simple {
    fn name(&self) -> &'static str {
        self.name
    }
    fn about(&self) -> &'static str {
        self.about
    }
    fn args(&self) -> Vec<Arg> {
        (self.args)()
    }
    fn run(&self, m: &ArgMatches, ctx: &Context) -> Result<Outcome> {
        (self.run)(m, ctx)
    }
}

fn none() -> Vec<Arg> {
    Vec::new()
}

fn positional(name: &'static str, help: &'static str) -> Arg {
    Arg::new(name)
        .required(true)
        .allow_hyphen_values(true)
        .help(help)
}

fn expr_arg() -> Vec<Arg> {
    vec![positional(
        "EXPR",
        "element expression, e.g. \"e1*e2 - s^3*e2*e1\"",
    )]
}

fn str_arg<'a>(m: &'a ArgMatches, name: &str) -> &'a str {
    m.get_one::<String>(name)
        .map(String::as_str)
        .expect("required argument")
}

fn num_arg<T: Clone + Send + Sync + 'static>(m: &ArgMatches, name: &str) -> T {
    m.get_one::<T>(name).cloned().expect("defaulted argument")
}

/// `c1*b1 + ...` over evaluated coefficients.
struct Combination(Vec<(String, BigRational)>);

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.0.iter().map(|(b, c)| (b.clone(), c)))
    }
}

fn rational_json(c: &BigRational) -> Value {
    Value::String(c.to_string())
}

fn render_element(x: &AlgebraElement, ctx: &Context) -> Result<(String, Value)> {
    match &ctx.eval {
        None => Ok((
            x.to_string(),
            serde_json::to_value(x).expect("serializable"),
        )),
        Some(pt) => {
            let y = x.evaluate(pt)?;
            let terms: Vec<Value> = y
                .terms()
                .map(|(m, c)| json!({"monomial": m.to_string(), "x": m.x, "k": m.k, "coeff": rational_json(c)}))
                .collect();
            Ok((y.to_string(), Value::Array(terms)))
        }
    }
}

fn render_tensor(t: &TensorElement, ctx: &Context) -> Result<(String, Value)> {
    match &ctx.eval {
        None => Ok((
            t.to_string(),
            serde_json::to_value(t).expect("serializable"),
        )),
        Some(pt) => {
            let mut terms = Vec::new();
            let mut json = Vec::new();
            for ([a, b], c) in t.terms().collect::<Vec<_>>().into_iter().rev() {
                let v = c.evaluate(pt)?;
                if v.is_zero() {
                    continue;
                }
                json.push(json!({"left": a.to_string(), "right": b.to_string(), "coeff": rational_json(&v)}));
                terms.push((format!("({a} (x) {b})"), v));
            }
            Ok((Combination(terms).to_string(), Value::Array(json)))
        }
    }
}

fn render_scalar(c: &Scalar, ctx: &Context) -> Result<(String, Value)> {
    match &ctx.eval {
        None => Ok((
            c.to_string(),
            serde_json::to_value(c).expect("serializable"),
        )),
        Some(pt) => {
            let v = c.evaluate(pt)?;
            Ok((v.to_string(), rational_json(&v)))
        }
    }
}

fn element_outcome(x: &AlgebraElement, ctx: &Context) -> Result<Outcome> {
    let (text, json) = render_element(x, ctx)?;
    Ok(Outcome::ok(text, json))
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Inline JSON (starting with `{`) or a path to a JSON file.
fn load_params(arg: &str) -> Result<EndoParams> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Error::Invalid(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        pos: e.column().saturating_sub(1),
        msg: format!("parameters: {e}"),
    })
}

fn normalize(m: &ArgMatches, ctx: &Context) -> Result<Outcome> {
    element_outcome(&parse_element(str_arg(m, "EXPR"))?, ctx)
}

fn mul(m: &ArgMatches, ctx: &Context) -> Result<Outcome> {
    let x = parse_element(str_arg(m, "LEFT"))?;
    let y = parse_element(str_arg(m, "RIGHT"))?;
    element_outcome(&multiply(&x, &y), ctx)
}

fn comm_table(_: &ArgMatches, ctx: &Context) -> Result<Outcome> {
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for j in 2..=6 {
        for i in 1..j {
            let (text, value) = render_element(&straighten_pair(i, j)?, ctx)?;
            lines.push(format!("X{j}*X{i} = {text}"));
            rows.push(json!({"left": format!("X{j}"), "right": format!("X{i}"), "product": value}));
        }
    }
    Ok(Outcome::ok(lines.join("\n"), Value::Array(rows)))
}

fn delta(m: &ArgMatches, ctx: &Context) -> Result<Outcome> {
    let (text, json) = render_tensor(&coproduct(&parse_element(str_arg(m, "EXPR"))?), ctx)?;
    Ok(Outcome::ok(text, json))
}

fn antipode_args() -> Vec<Arg> {
    let mut a = expr_arg();
    a.push(
        Arg::new("rule")
            .long("rule")
            .default_value("axiom")
            .help("antipode values on e1, e2: axiom or printed"),
    );
    a
}

fn antipode_cmd(m: &ArgMatches, ctx: &Context) -> Result<Outcome> {
    let name = str_arg(m, "rule");
    let rule = antipode_rule(name)
        .ok_or_else(|| Error::Invalid(format!("unknown antipode rule {name:?}")))?;
    element_outcome(
        &Antipode::new(rule).apply(&parse_element(str_arg(m, "EXPR"))?),
        ctx,
    )
}

fn counit_cmd(m: &ArgMatches, ctx: &Context) -> Result<Outcome> {
    let (text, json) = render_scalar(&counit(&parse_element(str_arg(m, "EXPR"))?), ctx)?;
    Ok(Outcome::ok(text, json))
}

fn hopf_axiom_args() -> Vec<Arg> {
    vec![
        Arg::new("max-degree")
            .long("max-degree")
            .value_parser(clap::value_parser!(u32))
            .default_value("3"),
        Arg::new("k-range")
            .long("k-range")
            .value_parser(clap::value_parser!(i32))
            .default_value("1"),
        Arg::new("antipode").long("antipode").default_value("axiom"),
        Arg::new("pairs")
            .long("pairs")
            .value_parser(clap::value_parser!(usize))
            .default_value("24")
            .help("random pairs for the multiplicativity checks"),
    ]
}

fn check_hopf_axioms_cmd(m: &ArgMatches, ctx: &Context) -> Result<Outcome> {
    let opts = AxiomOptions {
        max_degree: num_arg(m, "max-degree"),
        k_range: num_arg(m, "k-range"),
        antipode: str_arg(m, "antipode").to_string(),
        seed: ctx.seed,
        sample_pairs: num_arg(m, "pairs"),
    };
    let report = check_hopf_axioms_with(&opts)?;
    let errata = antipode_errata();
    let mut text = Vec::new();
    for t in &report.tallies {
        text.push(format!(
            "{}: {} checked, {} failed",
            t.axiom, t.checked, t.failed
        ));
    }
    for f in report.failures.iter().take(10) {
        text.push(format!(
            "FAIL {} on {}: residual {}",
            f.axiom, f.input, f.residual
        ));
    }
    for e in &errata {
        text.push(format!(
            "antipode erratum ({} rule): S({}) = {}, axiom gives {}",
            e.rule, e.generator, e.image, e.axiom_image
        ));
    }
    text.push(
        if report.all_pass {
            "all axioms hold"
        } else {
            "axioms FAIL"
        }
        .to_string(),
    );
    let json = json!({"report": to_json(&report), "antipode_errata": to_json(&errata)});
    Ok(Outcome::ok(text.join("\n"), json).verdict(report.all_pass))
}

fn params_arg() -> Vec<Arg> {
    vec![positional(
        "PARAMS",
        "endomorphism parameters: a JSON file or inline JSON",
    )]
}

fn report_text(title: &str, r: &crate::automorphisms::EndoReport) -> String {
    let mut lines = vec![format!("{title} for (a,b,c,d) = {:?}", r.exponents)];
    for v in &r.verdicts {
        match &v.residual {
            None => lines.push(format!("  {}: holds", v.name)),
            Some(res) => lines.push(format!("  {}: FAILS, residual {res}", v.name)),
        }
    }
    lines.join("\n")
}

fn check_endo(m: &ArgMatches, _: &Context) -> Result<Outcome> {
    let r = check_relations(&load_params(str_arg(m, "PARAMS"))?);
    Ok(Outcome::ok(report_text("defining relations", &r), to_json(&r)).verdict(r.all_hold))
}

fn check_hopf_aut(m: &ArgMatches, _: &Context) -> Result<Outcome> {
    let p = load_params(str_arg(m, "PARAMS"))?;
    let rel = check_relations(&p);
    let hopf = check_hopf_compat(&p);
    let text = format!(
        "{}\n{}\n{}",
        report_text("defining relations", &rel),
        report_text("coproduct compatibility", &hopf),
        if rel.all_hold && hopf.all_hold {
            "Hopf automorphism"
        } else {
            "not a Hopf automorphism"
        }
    );
    let json = json!({"relations": to_json(&rel), "coproduct": to_json(&hopf)});
    Ok(Outcome::ok(text, json).verdict(rel.all_hold && hopf.all_hold))
}

fn solve_constraints(_: &ArgMatches, _: &Context) -> Result<Outcome> {
    let lat = derive_exponent_constraints();
    let expected = lat.same_lattice(&[[-3, 1, 3, 0], [-1, 0, 0, 1]]);
    let mut lines = vec![format!("{} equations", lat.equations.len())];
    for e in &lat.equations {
        lines.push(format!(
            "  {} = {}    [{}: {} vs {}, {}]",
            e.lhs, e.rhs, e.relation, e.word, e.reference, e.base
        ));
    }
    lines.push(format!("rank {}", lat.rank));
    for b in &lat.basis {
        lines.push(format!("  basis vector (a,b,c,d) = {b:?}"));
    }
    lines.push(format!(
        "equal to {{c = 3b, a + 3b + d = 0}}: {}",
        if expected { "yes" } else { "no" }
    ));
    let mut json = to_json(&lat);
    json["matches_c_eq_3b_and_a_plus_3b_plus_d_eq_0"] = Value::Bool(expected);
    Ok(Outcome::ok(lines.join("\n"), json).verdict(expected))
}

fn lemma_args() -> Vec<Arg> {
    vec![
        Arg::new("box")
            .long("box")
            .value_parser(clap::value_parser!(i32).range(0..=4))
            .default_value("2")
            .help("exponents range over [-K, K]"),
        Arg::new("beta-degree")
            .long("beta-degree")
            .value_parser(clap::value_parser!(u32).range(0..=6))
            .default_value("4")
            .help("largest e-degree of the PBW monomials X^beta"),
    ]
}

fn verify_lemmas(m: &ArgMatches, _: &Context) -> Result<Outcome> {
    let r = verify_commutation_lemmas(num_arg(m, "box"), num_arg(m, "beta-degree"));
    let ok = r.kernel_consistent && r.all_accounted;
    Ok(Outcome::ok(r.to_string(), to_json(&r)).verdict(ok))
}

fn confluence(_: &ArgMatches, _: &Context) -> Result<Outcome> {
    let sys = default_system();
    let r = confluence_check(sys);
    let unresolved = r.pairs.iter().filter(|p| !p.resolved).count();
    let mut lines: Vec<String> = sys.rules().iter().map(|rule| format!("  {rule}")).collect();
    lines.insert(0, format!("{} rules", r.rules));
    lines.push(format!(
        "{} critical pairs, {unresolved} unresolved",
        r.pairs.len()
    ));
    lines.push(
        if r.confluent {
            "confluent"
        } else {
            "NOT confluent"
        }
        .to_string(),
    );
    Ok(Outcome::ok(lines.join("\n"), to_json(&r)).verdict(r.confluent))
}

fn dims_args() -> Vec<Arg> {
    vec![Arg::new("max")
        .long("max")
        .value_parser(clap::value_parser!(u32).range(0..=40))
        .default_value("8")]
}

/// Word enumeration costs `2^n`; beyond this only the PBW count is given.
const ENUMERATION_LIMIT: u32 = 16;

fn dims(m: &ArgMatches, _: &Context) -> Result<Outcome> {
    let max: u32 = num_arg(m, "max");
    let d: Vec<usize> = (0..=max).map(graded_dimension).collect();
    let words: Option<Vec<usize>> = (max <= ENUMERATION_LIMIT).then(|| {
        (0..=max)
            .map(|n| irreducible_count(default_system(), n as usize))
            .collect()
    });
    let agree = words.as_ref().is_none_or(|w| w == &d);
    let text = d.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let json = json!({"pbw": d, "irreducible_words": words, "agree": agree});
    Ok(Outcome::ok(text, json).verdict(agree))
}

fn gl_perm_check(m: &ArgMatches, _: &Context) -> Result<Outcome> {
    let mat: IntMatrix = str_arg(m, "MATRIX").parse()?;
    Ok(match gl_nonneg_permutation(&mat) {
        Ok(p) => Outcome::ok(
            format!("permutation: {p}"),
            json!({"permutation": p.0, "cycles": p.to_string()}),
        ),
        Err(r) => {
            Outcome::ok(format!("rejected: {r}"), json!({"rejected": to_json(&r)})).verdict(false)
        }
    })
}

fn params_outcome(p: &EndoParams) -> Outcome {
    Outcome::ok(p.to_string(), to_json(p))
}

fn compose_cmd(m: &ArgMatches, _: &Context) -> Result<Outcome> {
    let p = load_params(str_arg(m, "P"))?;
    let q = load_params(str_arg(m, "Q"))?;
    Ok(params_outcome(&compose(&p, &q)?))
}

fn invert_cmd(m: &ArgMatches, _: &Context) -> Result<Outcome> {
    Ok(params_outcome(&invert(&load_params(str_arg(m, "P"))?)?))
}

/// The subcommand registry, in help order.
pub fn commands() -> Vec<Box<dyn Command>> {
    let c = |name, about, args, run| -> Box<dyn Command> {
        Box::new(Simple {
            name,
            about,
            args,
            run,
        })
    };
    vec![
        c(
            "normalize",
            "PBW normal form of an expression",
            expr_arg,
            normalize,
        ),
        c(
            "mul",
            "product of two expressions",
            || {
                vec![
                    positional("LEFT", "left factor"),
                    positional("RIGHT", "right factor"),
                ]
            },
            mul,
        ),
        c(
            "comm-table",
            "straightening table X_j*X_i for i < j",
            none,
            comm_table,
        ),
        c("delta", "coproduct", expr_arg, delta),
        c("antipode", "antipode", antipode_args, antipode_cmd),
        c("counit", "counit", expr_arg, counit_cmd),
        c(
            "check-hopf-axioms",
            "coassociativity, counit, antipode and multiplicativity on PBW monomials",
            hopf_axiom_args,
            check_hopf_axioms_cmd,
        ),
        c(
            "check-endo",
            "images of the defining relations under an endomorphism",
            params_arg,
            check_endo,
        ),
        c(
            "solve-constraints",
            "integer lattice of admissible k-exponents",
            none,
            solve_constraints,
        ),
        c(
            "check-hopf-aut",
            "defining relations and coproduct compatibility of an endomorphism",
            params_arg,
            check_hopf_aut,
        ),
        c(
            "verify-lemmas",
            "audit of printed commutation identities",
            lemma_args,
            verify_lemmas,
        ),
        c(
            "confluence",
            "critical pairs of the completed rewriting system",
            none,
            confluence,
        ),
        c(
            "dims",
            "graded dimensions of the positive part",
            dims_args,
            dims,
        ),
        c(
            "gl-perm-check",
            "whether M and its inverse are nonnegative, giving the permutation",
            || vec![positional("MATRIX", "JSON rows, e.g. \"[[0,1],[1,0]]\"")],
            gl_perm_check,
        ),
        c(
            "compose",
            "parameters of P o Q",
            || vec![positional("P", "parameters"), positional("Q", "parameters")],
            compose_cmd,
        ),
        c(
            "invert",
            "parameters of the inverse",
            || vec![positional("P", "parameters")],
            invert_cmd,
        ),
    ]
}

fn root_command(registry: &[Box<dyn Command>]) -> clap::Command {
    let mut root = clap::Command::new("g2hopf")
        .about("Exact computations in the two-parameter augmented quantum Borel algebra of type G2")
        .subcommand_required(true)
        .arg(
            Arg::new("json")
                .long("json")
                .global(true)
                .action(ArgAction::SetTrue)
                .help("machine-readable output"),
        )
        .arg(
            Arg::new("eval")
                .long("eval")
                .global(true)
                .value_name("r=Q,s=Q")
                .help("specialize coefficients at a rational point"),
        )
        .arg(
            Arg::new("seed")
                .long("seed")
                .global(true)
                .value_parser(clap::value_parser!(u64))
                .default_value("0"),
        )
        .arg(
            Arg::new("threads")
                .long("threads")
                .global(true)
                .value_parser(clap::value_parser!(usize))
                .help("worker threads for the parallel scans"),
        );
    for cmd in registry {
        root = root.subcommand(
            clap::Command::new(cmd.name())
                .about(cmd.about())
                .args(cmd.args()),
        );
    }
    root
}

/// Captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn usage(stderr: String) -> Output {
    Output {
        code: 2,
        stdout: String::new(),
        stderr,
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let registry = commands();
    let matches = match root_command(&registry).try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => usage(text),
            };
        }
    };
    if let Some(&n) = matches.get_one::<usize>("threads") {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let eval = match matches
        .get_one::<String>("eval")
        .map(|s| s.parse::<RationalPoint>())
    {
        None => None,
        Some(Ok(pt)) => Some(pt),
        Some(Err(e)) => return usage(format!("error: --eval: {e}\n")),
    };
    let ctx = Context {
        json: matches.get_flag("json"),
        eval,
        seed: num_arg(&matches, "seed"),
    };
    let (name, sub) = matches.subcommand().expect("subcommand required");
    let cmd = registry
        .iter()
        .find(|c| c.name() == name)
        .expect("registered");
    match cmd.run(sub, &ctx) {
        Ok(out) => Output {
            code: if out.passed { 0 } else { 1 },
            stdout: if ctx.json {
                serde_json::to_string_pretty(&out.json).expect("serializable") + "\n"
            } else {
                out.text + "\n"
            },
            stderr: String::new(),
        },
        Err(e) => usage(format!("error: {e}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Output {
        run(std::iter::once("g2hopf").chain(args.iter().copied()))
    }

    #[test]
    fn registry_names_are_unique() {
        let names: Vec<_> = commands().iter().map(|c| c.name()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert_eq!(names.len(), 16);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(&["dims", "--max", "3"]).stdout, "1 2 4 7\n");
        assert_eq!(
            go(&["gl-perm-check", "[[0,1],[1,0]]"]).stdout,
            "permutation: (1 2)\n"
        );
        assert_eq!(go(&["gl-perm-check", "[[1,1],[0,1]]"]).code, 1);
        assert_eq!(go(&["frobnicate"]).code, 2);
        assert_eq!(go(&["normalize", "e1^-1"]).code, 2);
        assert_eq!(go(&["normalize", "e1", "--eval", "r=0"]).code, 2);
        assert_eq!(go(&["--help"]).code, 0);
    }

    #[test]
    fn element_commands() {
        assert_eq!(go(&["normalize", "e1*e2 - s^3*e2*e1"]).stdout, "X2\n");
        assert_eq!(go(&["counit", "3 + e1"]).stdout, "3\n");
        assert_eq!(
            go(&["normalize", "r*e1 + s", "--eval", "r=2,s=1/3"]).stdout,
            "2*X6 + 1/3\n"
        );
        let j: Value = serde_json::from_str(&go(&["--json", "delta", "k1"]).stdout).unwrap();
        assert_eq!(j[0]["left"], "k1");
        assert_eq!(go(&["antipode", "k1"]).stdout, "k1^-1\n");
    }
}
