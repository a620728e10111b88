//! One pass/fail line per acceptance criterion. Exits non-zero on any failure.

use std::time::{Duration, Instant};

use lgm_appendix::{cubic_chain, run_appendix};
use lgm_arith::{constant_term_naive, constant_terms, parse_laurent, ratio, RationalFunction, VariableSet};
use lgm_cli::{check_examples, regenerate, same_polynomial, Construction, CORPUS};
use lgm_periods::{
    calibration, check_period_condition, main_period, projective_ci_iseries, Method, ModelSpec,
};
use lgm_transform::{run_extremal_variant, run_main_theorem, Options, PipelineTrace};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const CORPUS_LIMIT: Duration = Duration::from_secs(30);
const GRASSMANNIAN_PERIOD_LIMIT: Duration = Duration::from_secs(300);
const PROJECTIVE_LIMIT: Duration = Duration::from_secs(60);
const FULL_ORDER: usize = 8;
const REDUCED_ORDER: usize = 6;
const KERNEL_CASES: u32 = 256;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn corpus_traces(verify: bool) -> Result<Vec<(&'static str, PipelineTrace)>, String> {
    let opts = Options {
        verify,
        deform: false,
    };
    let mut out = Vec::new();
    for r in CORPUS {
        let t = match r.construction {
            Construction::Main => run_main_theorem(r.k, r.degrees, opts),
            Construction::Extremal => run_extremal_variant(r.k, opts),
            Construction::Appendix(_) => continue,
        };
        out.push((r.id, t.map_err(|e| format!("{}: {e}", r.id))?));
    }
    Ok(out)
}

fn corpus_exactness() -> Outcome {
    let start = Instant::now();
    let records: Vec<_> = CORPUS.iter().collect();
    let results = check_examples(&records, false);
    let bad: Vec<_> = results.iter().filter(|r| !r.pass).map(|r| r.id.clone()).collect();
    ensure(bad.is_empty(), || format!("mismatched: {}", bad.join(", ")))?;
    within(start, CORPUS_LIMIT, "corpus")?;
    Ok(format!("{} examples in {:?}", results.len(), start.elapsed()))
}

fn step_soundness() -> Outcome {
    let mut steps = 0;
    for (id, trace) in corpus_traces(false)? {
        for (i, s) in trace.steps.iter().enumerate() {
            let at = || format!("{id} step {i}");
            ensure(s.checks.all(), || format!("{}: {:?}", at(), s.checks))?;
            let out = s.after.vars();
            let one = RationalFunction::one(out);
            let fb = s
                .before
                .assemble(s.block.arrows.iter())
                .and_then(|f| Ok(f.substitute(&s.bindings, out)?))
                .map_err(|e| format!("{}: {e}", at()))?;
            ensure(fb.equals(&one).unwrap_or(false), || format!("{}: pulled block is not 1", at()))?;
            let pulled = s
                .before
                .superpotential()
                .and_then(|f| Ok(f.substitute(&s.bindings, out)?))
                .map_err(|e| format!("{}: {e}", at()))?;
            let rest = s.after.superpotential().map_err(|e| format!("{}: {e}", at()))?;
            let shifted = rest.add(&one).map_err(|e| e.to_string())?;
            ensure(pulled.equals(&shifted).unwrap_or(false), || {
                format!("{}: pulled superpotential is not F' + 1", at())
            })?;
            let laurent = s.after.superpotential_laurent().map_err(|e| e.to_string())?;
            ensure(laurent.is_some(), || format!("{}: F' is not Laurent", at()))?;
            steps += 1;
        }
    }
    Ok(format!("{steps} steps"))
}

fn order_for(f: &lgm_arith::LaurentPolynomial) -> usize {
    if f.vars().len() >= 5 {
        REDUCED_ORDER
    } else {
        FULL_ORDER
    }
}

fn grassmannian_periods() -> Outcome {
    let start = Instant::now();
    let quadric = run_main_theorem(2, &[1], Options::default()).map_err(|e| e.to_string())?.result;
    let want = [1, 0, 0, 12, 0, 0, 540];
    for (j, w) in want.iter().enumerate() {
        ensure(constant_term_naive(&quadric, j as u32) == ratio(*w, 1), || {
            format!("quadric threefold oracle at t^{j}")
        })?;
    }
    let g24 = run_main_theorem(2, &[], Options::default()).map_err(|e| e.to_string())?.result;
    ensure(constant_term_naive(&g24, 4) == ratio(48, 1), || "G(2,4) oracle at t^4".into())?;

    let cases: [(usize, &[usize]); 5] =
        [(2, &[1]), (2, &[]), (3, &[1, 1, 1]), (4, &[1, 1, 1, 1]), (3, &[2, 1])];
    let mut orders = Vec::new();
    for (k, d) in cases {
        let spec = ModelSpec::grassmannian(k, d).map_err(|e| e.to_string())?;
        let f = run_main_theorem(k, d, Options::default()).map_err(|e| e.to_string())?.result;
        let n = order_for(&f);
        let r = check_period_condition(&spec, Method::Main, Some(n)).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{spec}: mismatches at {:?}", r.mismatches))?;
        ensure(r.period.coeff(0) == ratio(1, 1), || format!("{spec}: phi_0"))?;
        orders.push(format!("{spec} to t^{n}"));
    }
    within(start, GRASSMANNIAN_PERIOD_LIMIT, "grassmannian periods")?;
    Ok(orders.join("; "))
}

fn factorial(n: usize) -> lgm_arith::BigInt {
    (1..=n).fold(lgm_arith::BigInt::from(1), |a, i| a * i)
}

fn projective_periods() -> Outcome {
    let start = Instant::now();
    for (n, d) in [(4usize, 3usize), (3, 2)] {
        let spec = ModelSpec::projective(n, &[d]).map_err(|e| e.to_string())?;
        let d0 = n + 1 - d;
        let r = check_period_condition(&spec, Method::Main, Some(FULL_ORDER))
            .map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{spec}: mismatches at {:?}", r.mismatches))?;
        let s = projective_ci_iseries(&spec, FULL_ORDER).map_err(|e| e.to_string())?;
        for j in 0..=FULL_ORDER {
            let want = if j % d0 == 0 {
                let m = j / d0;
                let num = factorial(d0 * m) * factorial(d * m);
                let den = int_pow(factorial(m), n + 1);
                lgm_arith::BigRational::new(num, den)
            } else {
                ratio(0, 1)
            };
            ensure(r.period.coeff(j) == want && s.coeff(j) == want, || {
                format!("{spec}: closed product at t^{j}")
            })?;
        }
    }
    let cubic = ModelSpec::projective(4, &[3]).map_err(|e| e.to_string())?;
    let r = check_period_condition(&cubic, Method::Main, Some(4)).map_err(|e| e.to_string())?;
    ensure(
        r.period.coeff(2) == ratio(12, 1) && r.period.coeff(4) == ratio(540, 1),
        || "cubic threefold 12, 540".into(),
    )?;
    within(start, PROJECTIVE_LIMIT, "projective periods")?;
    Ok(format!("P^4 [3] and P^3 [2] to t^{FULL_ORDER}"))
}

fn int_pow(b: lgm_arith::BigInt, e: usize) -> lgm_arith::BigInt {
    (0..e).fold(lgm_arith::BigInt::from(1), |a, _| a * &b)
}

fn cross_method() -> Outcome {
    for (k, d) in [(2usize, &[3usize][..]), (4, &[1, 1, 1, 1])] {
        let main = run_main_theorem(k, d, Options::default()).map_err(|e| e.to_string())?.result;
        let app = run_appendix(k, d, None).map_err(|e| e.to_string())?.result;
        let (a, b) = (main_period(&main, REDUCED_ORDER), main_period(&app, REDUCED_ORDER));
        ensure(a == b, || format!("k={k} {d:?}: main {a} vs appendix {b}"))?;
    }
    let chain = cubic_chain().map_err(|e| e.to_string())?;
    let main = run_main_theorem(2, &[3], Options::default()).map_err(|e| e.to_string())?.result;
    ensure(same_polynomial(&chain.h, &main), || {
        format!("cubic chain gave {}, main gave {}", chain.h.to_text(), main.to_text())
    })?;
    Ok(format!("periods agree to t^{REDUCED_ORDER}; cubic chain exact"))
}

fn random_laurent() -> impl Strategy<Value = String> {
    let term = (-3i64..=3, -2i32..=2, -2i32..=2, -2i32..=2).prop_filter("nonzero", |t| t.0 != 0);
    prop::collection::vec(term, 1..=6).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, a, b, d)| {
                let mut s = format!("({c})");
                for (v, e) in [("x", a), ("y", b), ("z", d)] {
                    if e != 0 {
                        s.push_str(&format!("*{v}^({e})"));
                    }
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    })
}

fn property_suites() -> Outcome {
    let mut steps = 0;
    for (id, trace) in corpus_traces(true)? {
        for rep in &trace.reports {
            ensure(rep.is_ok(), || format!("{id}: {:?}", rep.first()))?;
        }
        ensure(trace.verified(), || format!("{id}: trace not verified"))?;
        steps += trace.reports.len();
    }

    for r in CORPUS {
        let f = regenerate(r, false)?;
        let l = r.degrees.len();
        ensure(f.vars().len() == 2 * r.k - l, || {
            format!("{}: {} variables, want {}", r.id, f.vars().len(), 2 * r.k - l)
        })?;
        let index = r.k + 2 - r.degrees.iter().sum::<usize>();
        let n = if f.vars().len() >= 5 { 4 } else { REDUCED_ORDER };
        let phi = constant_terms(&f, n as u32);
        for (j, c) in phi.iter().enumerate() {
            ensure(j % index == 0 || *c == ratio(0, 1), || {
                format!("{}: phi_{j} = {c} with index {index}", r.id)
            })?;
        }
    }

    let mut runner = TestRunner::new(Config {
        cases: KERNEL_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    let vars = VariableSet::new(["x", "y", "z"]).map_err(|e| e.to_string())?;
    runner
        .run(&(random_laurent(), 0u32..=6), |(text, j)| {
            let f = parse_laurent(&text, &vars).expect("generated text parses");
            let fast = constant_terms(&f, j);
            for (i, c) in fast.iter().enumerate() {
                prop_assert_eq!(c, &constant_term_naive(&f, i as u32), "f = {} at j = {}", text, i);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(format!(
        "{steps} verified triplets; divisibility and 2k-l variables on {} examples; {KERNEL_CASES} kernel cases",
        CORPUS.len()
    ))
}

fn calibration_report() -> Outcome {
    let c = calibration().map_err(|e| format!("calibration failed: {e}"))?;
    let reading = serde_json::to_value(c.reading).map_err(|e| e.to_string())?;
    let reading = reading.as_str().unwrap_or("?").to_string();
    let oracles: [(&[usize], usize, i64); 3] = [(&[], 4, 48), (&[1], 3, 12), (&[1], 6, 540)];
    for (d, e, v) in oracles {
        let p = c
            .points
            .iter()
            .find(|p| p.spec.degrees == d && p.exponent == e)
            .ok_or_else(|| format!("no calibration point {d:?} t^{e}"))?;
        ensure(p.oracle == ratio(v, 1), || format!("oracle {d:?} t^{e} = {}", p.oracle))?;
        let chosen = p
            .candidates
            .iter()
            .find(|(r, _)| *r == c.reading)
            .map(|(_, s)| s.clone())
            .unwrap_or_default();
        ensure(chosen == v.to_string(), || format!("reading gives {chosen} at {d:?} t^{e}"))?;
    }
    Ok(format!("reading {reading}, {} oracle points", c.points.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("corpus exactness", corpus_exactness),
        ("step soundness", step_soundness),
        ("grassmannian period condition", grassmannian_periods),
        ("projective period condition", projective_periods),
        ("cross-method agreement", cross_method),
        ("property suites", property_suites),
        ("i-series calibration", calibration_report),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("criterion {}: pass ({name}: {detail}) [{:?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL ({name}: {why})", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 7 criteria pass");
}
