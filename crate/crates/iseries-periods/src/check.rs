//! Mirrors by each construction and the period condition.

use lgm_appendix::run_appendix;
use lgm_arith::{constant_terms, BigRational, LaurentPolynomial};
use lgm_transform::{closed_form, run_main_theorem, ClosedFormMode, Options};
use serde::{Serialize, Serializer};

use crate::error::{PeriodError, Result};
use crate::iseries::{grassmannian_iseries, projective_ci_iseries};
use crate::projective::projective_ci_lg;
use crate::series::Series;
use crate::spec::{Ambient, ModelSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Block-by-block elimination on the ladder quiver.
    Main,
    /// Torus chart of a nef-partition.
    Appendix,
    /// Explicit formulas: hyperplane sections, or projective space.
    ClosedForm,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Main => "main",
            Method::Appendix => "appendix",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "main" => Ok(Method::Main),
            "appendix" => Ok(Method::Appendix),
            "closed-form" => Ok(Method::ClosedForm),
            _ => Err(format!("unknown method `{s}`")),
        }
    }
}

/// The constant terms of `f^0, ..., f^n_terms`.
pub fn main_period(f: &LaurentPolynomial, n_terms: usize) -> Series {
    Series::new(constant_terms(f, n_terms as u32))
}

/// Default truncation by number of variables.
pub fn default_terms(n_vars: usize) -> usize {
    match n_vars {
        0..=4 => 8,
        5..=6 => 6,
        _ => 4,
    }
}

fn not_applicable(method: Method, spec: &ModelSpec) -> PeriodError {
    PeriodError::MethodNotApplicable {
        method: method.name().into(),
        spec: spec.to_string(),
    }
}

/// The Laurent mirror of `spec` built by `method`.
pub fn build_mirror(spec: &ModelSpec, method: Method) -> Result<LaurentPolynomial> {
    spec.validate()?;
    match (spec.ambient, method) {
        (Ambient::Grassmannian { k }, Method::Main) => {
            Ok(run_main_theorem(k, &spec.degrees, Options::default())?.result)
        }
        (Ambient::Grassmannian { k }, Method::Appendix) => {
            Ok(run_appendix(k, &spec.degrees, None)?.result)
        }
        (Ambient::Grassmannian { k }, Method::ClosedForm) => {
            let l = spec.degrees.len();
            if spec.degrees.iter().any(|&d| d != 1) || l == 0 {
                return Err(not_applicable(method, spec));
            }
            let mode = match l {
                l if l < k => ClosedFormMode::Hyperplanes,
                l if l == k => ClosedFormMode::Index2,
                _ => ClosedFormMode::Index1,
            };
            Ok(closed_form(mode, k, l)?)
        }
        (Ambient::Projective { .. }, Method::ClosedForm | Method::Main) => projective_ci_lg(spec),
        (Ambient::Projective { .. }, Method::Appendix) => Err(not_applicable(method, spec)),
    }
}

/// The I-series matching `spec`'s ambient.
pub fn iseries(spec: &ModelSpec, n_terms: usize) -> Result<Series> {
    match spec.ambient {
        Ambient::Grassmannian { .. } => grassmannian_iseries(spec, n_terms),
        Ambient::Projective { .. } => projective_ci_iseries(spec, n_terms),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct PeriodReport {
    pub spec: ModelSpec,
    pub method: Method,
    #[serde(serialize_with = "as_text")]
    pub mirror: LaurentPolynomial,
    pub terms: usize,
    pub period: Series,
    pub iseries: Series,
    /// For index 1, the shift `f -> f - alpha` that matches the `t^1`
    /// coefficients; the I-series is compared after `exp(alpha t)`.
    #[serde(serialize_with = "opt_string")]
    pub alpha: Option<BigRational>,
    pub mismatches: Vec<usize>,
    pub verdict: Verdict,
}

fn as_text<S: Serializer>(p: &LaurentPolynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_text())
}

fn opt_string<S: Serializer>(
    v: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_some(&x.to_string()),
        None => s.serialize_none(),
    }
}

impl PeriodReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Compares the main period of the mirror of `spec` with its I-series up
/// to `t^n_terms` (by default from the number of variables).
pub fn check_period_condition(
    spec: &ModelSpec,
    method: Method,
    n_terms: Option<usize>,
) -> Result<PeriodReport> {
    let mirror = build_mirror(spec, method)?;
    compare_with_iseries(spec, method, mirror, n_terms)
}

/// The period comparison for an already constructed `mirror` of `spec`.
pub fn compare_with_iseries(
    spec: &ModelSpec,
    method: Method,
    mirror: LaurentPolynomial,
    n_terms: Option<usize>,
) -> Result<PeriodReport> {
    spec.validate()?;
    let terms = n_terms.unwrap_or_else(|| default_terms(mirror.vars().len()));
    let period = main_period(&mirror, terms);
    let mut target = iseries(spec, terms)?;
    let mut alpha = None;
    if spec.index() == 1 && terms >= 1 {
        let a = period.coeff(1) - target.coeff(1);
        target = target.shift(&a);
        alpha = Some(a);
    }
    let mismatches = period.mismatches(&target);
    let verdict = if mismatches.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(PeriodReport {
        spec: spec.clone(),
        method,
        mirror,
        terms,
        period,
        iseries: target,
        alpha,
        mismatches,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_terms_by_variable_count() {
        assert_eq!(default_terms(3), 8);
        assert_eq!(default_terms(6), 6);
        assert_eq!(default_terms(7), 4);
    }

    #[test]
    fn methods_parse() {
        assert_eq!("closed-form".parse::<Method>().unwrap(), Method::ClosedForm);
        assert!("other".parse::<Method>().is_err());
    }

    #[test]
    fn appendix_does_not_apply_to_projective_space() {
        let s = ModelSpec::projective(4, &[3]).unwrap();
        assert!(build_mirror(&s, Method::Appendix).is_err());
    }
}
