//! The subcommands, returning their output and exit code.

use std::fmt::Write as _;
use std::path::PathBuf;

use lgm_appendix::{run_appendix, AppendixError, NefPartition};
use lgm_arith::{newton_polytope, origin_in_interior, LaurentPolynomial};
use lgm_periods::{
    build_mirror, calibration, compare_with_iseries, iseries, Ambient, Method, ModelSpec,
    PeriodError, PeriodReport,
};
use lgm_transform::{run_main_theorem, Options, TransformError};
use serde_json::{json, Value};

use crate::corpus::{check_examples, find, ExampleRecord, CORPUS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Default)]
pub struct Global {
    pub format: Format,
    pub dump_pipeline: Option<PathBuf>,
    pub terms: Option<usize>,
    pub strict_verify: bool,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verification(String),
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Verification(m) | CliError::Internal(m) => m,
        }
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: 0 }
    }
}

fn classify_transform(e: TransformError, strict: bool) -> CliError {
    let msg = e.to_string();
    match e {
        TransformError::InvalidInput(_) | TransformError::Quiver(_) => CliError::Usage(msg),
        TransformError::Inapplicable { .. } if strict => CliError::Verification(msg),
        _ => CliError::Internal(msg),
    }
}

fn classify_appendix(e: AppendixError) -> CliError {
    let msg = e.to_string();
    match e {
        AppendixError::InvalidInput(_)
        | AppendixError::NotFano { .. }
        | AppendixError::InvalidPartition(_) => CliError::Usage(msg),
        _ => CliError::Internal(msg),
    }
}

fn classify_period(e: PeriodError, strict: bool) -> CliError {
    let msg = e.to_string();
    match e {
        PeriodError::InvalidSpec(_)
        | PeriodError::NotFano { .. }
        | PeriodError::MethodNotApplicable { .. } => CliError::Usage(msg),
        PeriodError::Transform(t) => classify_transform(t, strict),
        PeriodError::Appendix(a) => classify_appendix(a),
        _ => CliError::Internal(msg),
    }
}

/// Where the variety lives: `G(2, k+2)` or `P^n`.
#[derive(Clone, Copy, Debug)]
pub enum AmbientArg {
    Grassmannian(usize),
    Projective(usize),
}

pub fn model_spec(ambient: AmbientArg, degrees: &[usize]) -> Result<ModelSpec, CliError> {
    let a = match ambient {
        AmbientArg::Grassmannian(k) if k < 2 => {
            return Err(CliError::Usage(format!("k={k}, need k >= 2")))
        }
        AmbientArg::Grassmannian(k) => Ambient::Grassmannian { k },
        AmbientArg::Projective(n) => Ambient::Projective { n },
    };
    ModelSpec::new(a, degrees).map_err(|e| classify_period(e, false))
}

fn write_dump(g: &Global, value: Value) -> Result<(), CliError> {
    if let Some(path) = &g.dump_pipeline {
        let text = serde_json::to_string_pretty(&value).expect("json");
        std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

/// Builds the mirror, honoring `--strict-verify` and `--dump-pipeline`.
pub fn construct(
    spec: &ModelSpec,
    method: Method,
    partition: Option<&str>,
    g: &Global,
) -> Result<LaurentPolynomial, CliError> {
    if partition.is_some() && method != Method::Appendix {
        return Err(CliError::Usage("--partition needs --method appendix".into()));
    }
    match (spec.ambient, method) {
        (Ambient::Grassmannian { k }, Method::Main) => {
            let opts = Options {
                verify: g.strict_verify,
                deform: false,
            };
            let trace = run_main_theorem(k, &spec.degrees, opts)
                .map_err(|e| classify_transform(e, g.strict_verify))?;
            write_dump(g, serde_json::to_value(&trace).expect("json"))?;
            if g.strict_verify && !trace.verified() {
                let bad: Vec<String> = trace
                    .reports
                    .iter()
                    .flat_map(|r| r.violations.iter().map(|v| format!("{}: {}", v.condition, v.detail)))
                    .collect();
                return Err(CliError::Verification(format!(
                    "post-conditions fail: {}",
                    bad.join("; ")
                )));
            }
            Ok(trace.result)
        }
        (Ambient::Grassmannian { k }, Method::Appendix) => {
            let p = partition
                .map(NefPartition::from_json)
                .transpose()
                .map_err(classify_appendix)?;
            let trace = run_appendix(k, &spec.degrees, p.as_ref()).map_err(classify_appendix)?;
            write_dump(g, serde_json::to_value(&trace).expect("json"))?;
            Ok(trace.result)
        }
        _ => {
            let f = build_mirror(spec, method).map_err(|e| classify_period(e, g.strict_verify))?;
            write_dump(
                g,
                json!({"spec": spec, "method": method, "result": f.to_text()}),
            )?;
            Ok(f)
        }
    }
}

pub fn cmd_generate(
    spec: &ModelSpec,
    method: Method,
    partition: Option<&str>,
    g: &Global,
) -> Result<Outcome, CliError> {
    let f = construct(spec, method, partition, g)?;
    let output = match g.format {
        Format::Text => format!("{}\n", f.to_text()),
        Format::Json => json!({
            "spec": spec,
            "method": method,
            "variables": f.vars().names(),
            "mirror": f.to_text(),
            "terms": f.to_json()["terms"],
        })
        .to_string(),
    };
    Ok(Outcome::ok(output))
}

pub fn cmd_iseries(spec: &ModelSpec, show_calibration: bool, g: &Global) -> Result<Outcome, CliError> {
    let n = g.terms.unwrap_or(8);
    let s = iseries(spec, n).map_err(|e| classify_period(e, false))?;
    let cal = match spec.ambient {
        Ambient::Grassmannian { .. } => Some(calibration().map_err(|e| classify_period(e, false))?),
        Ambient::Projective { .. } => None,
    };
    let output = match g.format {
        Format::Text => {
            let mut out = format!("{spec}\n{s}\n");
            if let Some(c) = cal {
                let _ = writeln!(out, "reading: {}", json!(c.reading).as_str().unwrap_or(""));
                if show_calibration {
                    for p in &c.points {
                        let _ = writeln!(
                            out,
                            "  {} t^{}: oracle {} | {}",
                            p.spec,
                            p.exponent,
                            p.oracle,
                            p.candidates
                                .iter()
                                .map(|(r, v)| format!("{}={v}", json!(r).as_str().unwrap_or("")))
                                .collect::<Vec<_>>()
                                .join(", ")
                        );
                    }
                }
            }
            out
        }
        Format::Json => {
            let mut v = json!({"spec": spec, "terms": n, "series": s});
            if let Some(c) = cal {
                v["reading"] = json!(c.reading);
                if show_calibration {
                    v["calibration"] = serde_json::to_value(c).expect("json");
                }
            }
            v.to_string()
        }
    };
    Ok(Outcome::ok(output))
}

fn render_report(r: &PeriodReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} via {}", r.spec, r.method.name());
    let _ = writeln!(out, "period:  {}", r.period);
    let _ = writeln!(out, "iseries: {}", r.iseries);
    if let Some(a) = &r.alpha {
        let _ = writeln!(out, "alpha: {a}");
    }
    if !r.mismatches.is_empty() {
        let _ = writeln!(out, "mismatches at t^{:?}", r.mismatches);
    }
    let _ = writeln!(out, "verdict: {}", if r.passed() { "pass" } else { "fail" });
    out
}

fn report(spec: &ModelSpec, method: Method, g: &Global) -> Result<PeriodReport, CliError> {
    let f = construct(spec, method, None, g)?;
    compare_with_iseries(spec, method, f, g.terms).map_err(|e| classify_period(e, g.strict_verify))
}

pub fn cmd_period_check(spec: &ModelSpec, method: Method, g: &Global) -> Result<Outcome, CliError> {
    let r = report(spec, method, g)?;
    let output = match g.format {
        Format::Text => render_report(&r),
        Format::Json => serde_json::to_string(&r).expect("json"),
    };
    Ok(Outcome {
        output,
        code: if r.passed() { 0 } else { 1 },
    })
}

pub fn cmd_compare_methods(spec: &ModelSpec, g: &Global) -> Result<Outcome, CliError> {
    let dumpless = Global {
        dump_pipeline: None,
        ..g.clone()
    };
    let main = report(spec, Method::Main, g)?;
    let app = report(spec, Method::Appendix, &dumpless)?;
    let n = main.terms.min(app.terms);
    let agree = main.period.truncate(n) == app.period.truncate(n);
    let ok = agree && main.passed() && app.passed();
    let output = match g.format {
        Format::Text => format!(
            "{}{}periods agree up to t^{n}: {}\n",
            render_report(&main),
            render_report(&app),
            if agree { "yes" } else { "no" }
        ),
        Format::Json => json!({
            "spec": spec,
            "terms": n,
            "main": main,
            "appendix": app,
            "agree": agree,
        })
        .to_string(),
    };
    Ok(Outcome {
        output,
        code: if ok { 0 } else { 1 },
    })
}

pub fn cmd_newton(spec: &ModelSpec, method: Method, g: &Global) -> Result<Outcome, CliError> {
    let f = construct(spec, method, None, g)?;
    let p = newton_polytope(&f).map_err(|e| CliError::Internal(e.to_string()))?;
    let interior = origin_in_interior(&f);
    let output = match g.format {
        Format::Text => {
            let mut out = format!(
                "variables: {}\nvertices: {}\norigin in interior: {interior}\n",
                f.vars().names().join(", "),
                p.vertices.len()
            );
            for v in &p.vertices {
                let _ = writeln!(out, "  {v:?}");
            }
            out
        }
        Format::Json => json!({
            "spec": spec,
            "method": method,
            "variables": f.vars().names(),
            "vertices": p.vertices,
            "origin_in_interior": interior,
        })
        .to_string(),
    };
    Ok(Outcome::ok(output))
}

pub fn cmd_examples(id: Option<&str>, g: &Global) -> Result<Outcome, CliError> {
    let records: Vec<&ExampleRecord> = match id {
        Some(id) => vec![find(id).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown example `{id}`; known: {}",
                CORPUS.iter().map(|r| r.id).collect::<Vec<_>>().join(", ")
            ))
        })?],
        None => CORPUS.iter().collect(),
    };
    let results = check_examples(&records, g.strict_verify);
    let all = results.iter().all(|r| r.pass);
    let output = match g.format {
        Format::Text => {
            let mut out = String::new();
            for r in &results {
                if r.pass {
                    let _ = writeln!(out, "{}: pass", r.id);
                } else if let Some(e) = &r.error {
                    let _ = writeln!(out, "{}: FAIL ({e})", r.id);
                } else {
                    let _ = writeln!(out, "{}: FAIL\n  got:      {}\n  expected: {}", r.id, r.got, r.expected);
                }
            }
            let passed = results.iter().filter(|r| r.pass).count();
            let _ = writeln!(out, "{passed}/{} examples pass", results.len());
            out
        }
        Format::Json => serde_json::to_string(&results).expect("json"),
    };
    Ok(Outcome {
        output,
        code: if all { 0 } else { 1 },
    })
}
