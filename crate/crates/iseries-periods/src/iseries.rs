//! Regularized I-series of complete intersections.

use std::sync::OnceLock;

use lgm_arith::{constant_terms, parse_laurent, BigInt, BigRational, VariableSet};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{PeriodError, Result};
use crate::series::Series;
use crate::spec::{Ambient, ModelSpec};

/// `gamma(r) = 1 + 1/2 + ... + 1/r`.
pub fn harmonic_gamma(r: u64) -> BigRational {
    (1..=r)
        .map(|i| BigRational::new(BigInt::one(), BigInt::from(i)))
        .sum()
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn binomial(n: u64, r: u64) -> BigInt {
    factorial(n) / (factorial(r) * factorial(n - r))
}

/// The ways of reading the Grassmannian I-series formula that calibration
/// chooses between.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// Prefactor `prod_{i=0..l} (d_0 d_i)!`, bracket constant `-2`.
    IndexPrefactorMinusTwo,
    /// Prefactor `prod_{i=0..l} (d_0 d_i)!`, bracket constant `+2`.
    IndexPrefactorPlusTwo,
    /// Prefactor `prod_{i=0..l} (d_i d)!`, bracket constant `-2`.
    DegreePrefactorMinusTwo,
    /// Prefactor `prod_{i=0..l} (d_i d)!`, bracket constant `+2`.
    DegreePrefactorPlusTwo,
}

impl Reading {
    pub const ALL: [Reading; 4] = [
        Reading::IndexPrefactorMinusTwo,
        Reading::IndexPrefactorPlusTwo,
        Reading::DegreePrefactorMinusTwo,
        Reading::DegreePrefactorPlusTwo,
    ];

    fn bracket_constant(self) -> i64 {
        match self {
            Reading::IndexPrefactorMinusTwo | Reading::DegreePrefactorMinusTwo => -2,
            _ => 2,
        }
    }

    fn degree_prefactor(self) -> bool {
        matches!(
            self,
            Reading::DegreePrefactorMinusTwo | Reading::DegreePrefactorPlusTwo
        )
    }
}

/// Raw coefficient of `t^{d_0 d}` under `reading`, before normalizing the
/// constant term to 1.
fn raw_coefficient(reading: Reading, k: usize, degrees: &[usize], d0: u64, d: u64) -> BigRational {
    let kk = (k + 2) as u32;
    let mut all = vec![d0];
    all.extend(degrees.iter().map(|&x| x as u64));
    let prefactor: BigInt = if reading.degree_prefactor() {
        all.iter().map(|&di| factorial(di * d)).product()
    } else {
        all.iter().map(|&di| factorial(d0 * di)).product()
    };
    let c = BigRational::from_integer(BigInt::from(reading.bracket_constant()));
    let kq = BigRational::from_integer(BigInt::from(k as i64 + 2));
    let mut bracket = BigRational::zero();
    for r in 0..=d {
        let b = BigRational::from_integer(num_traits::pow(binomial(d, r), kk as usize));
        let diff = BigRational::from_integer(BigInt::from(d as i64 - 2 * r as i64));
        let g = harmonic_gamma(r) - harmonic_gamma(d - r);
        bracket += b * (&kq * diff * g + &c);
    }
    let sign = if d % 2 == 0 { 1 } else { -1 };
    let den = num_traits::pow(factorial(d), kk as usize) * BigInt::from(2 * sign);
    BigRational::from_integer(prefactor) * bracket / BigRational::from_integer(den)
}

/// The Grassmannian I-series under `reading`, scaled so that the constant
/// term is 1.
pub fn grassmannian_iseries_with(
    reading: Reading,
    k: usize,
    degrees: &[usize],
    n_terms: usize,
) -> Result<Series> {
    let spec = ModelSpec::grassmannian(k, degrees)?;
    let d0 = spec.index() as u64;
    let scale = raw_coefficient(reading, k, degrees, d0, 0);
    let mut c = vec![BigRational::zero(); n_terms + 1];
    let mut d = 0u64;
    while (d0 * d) as usize <= n_terms {
        c[(d0 * d) as usize] = raw_coefficient(reading, k, degrees, d0, d) / &scale;
        d += 1;
    }
    Ok(Series::new(c))
}

/// One oracle value used in calibration.
#[derive(Clone, Debug, Serialize)]
pub struct CalibrationPoint {
    pub spec: ModelSpec,
    /// Text of the Laurent polynomial whose constant terms are the oracle.
    pub oracle_polynomial: String,
    pub exponent: usize,
    #[serde(serialize_with = "as_string")]
    pub oracle: BigRational,
    pub candidates: Vec<(Reading, String)>,
}

fn as_string<S: serde::Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct CalibrationReport {
    pub reading: Reading,
    pub points: Vec<CalibrationPoint>,
}

/// Oracles: the anticanonical superpotential of G(2,4) and the mirror of the
/// quadric threefold, both written out as Laurent polynomials.
const ORACLES: [(usize, &[usize], &str, &str, usize); 2] = [
    (
        2,
        &[],
        "a_1_1, a_1_2, a_2_1, a_2_2",
        "a_1_1 + a_2_1/a_1_1 + a_1_2/a_1_1 + a_2_2/a_2_1 + a_2_2/a_1_2 + 1/a_2_2",
        8,
    ),
    (
        2,
        &[1],
        "a_1_1, a_1_2, a_2_1",
        "a_1_2/a_1_1 + 1/a_2_1 + a_2_1/a_1_1 + 1/a_1_2 + a_1_1",
        6,
    ),
];

/// Compares each reading with brute-force constant terms of the oracle
/// polynomials and keeps the one that reproduces all of them.
pub fn calibrate() -> Result<CalibrationReport> {
    let mut points = Vec::new();
    let mut good: Vec<Reading> = Reading::ALL.to_vec();
    for (k, degrees, names, text, order) in ORACLES {
        let vars = VariableSet::new(names.split(", "))?;
        let f = parse_laurent(text, &vars)?;
        let oracle = constant_terms(&f, order as u32);
        let spec = ModelSpec::grassmannian(k, degrees)?;
        let series: Vec<(Reading, Series)> = Reading::ALL
            .iter()
            .map(|&r| Ok((r, grassmannian_iseries_with(r, k, degrees, order)?)))
            .collect::<Result<_>>()?;
        for (r, s) in &series {
            if !s.mismatches(&Series::new(oracle.clone())).is_empty() {
                good.retain(|g| g != r);
            }
        }
        for j in (1..=order).filter(|&j| !oracle[j].is_zero()) {
            points.push(CalibrationPoint {
                spec: spec.clone(),
                oracle_polynomial: text.to_string(),
                exponent: j,
                oracle: oracle[j].clone(),
                candidates: series.iter().map(|(r, s)| (*r, s.coeff(j).to_string())).collect(),
            });
        }
    }
    match good.as_slice() {
        [reading] => Ok(CalibrationReport {
            reading: *reading,
            points,
        }),
        [] => Err(PeriodError::Calibration(
            "no reading reproduces the constant-term oracles".into(),
        )),
        many => Err(PeriodError::Calibration(format!(
            "readings {many:?} all reproduce the oracles"
        ))),
    }
}

/// The calibration result, computed once.
pub fn calibration() -> Result<&'static CalibrationReport> {
    static CELL: OnceLock<std::result::Result<CalibrationReport, String>> = OnceLock::new();
    CELL.get_or_init(|| calibrate().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| PeriodError::Calibration(e.clone()))
}

/// Regularized I-series of a complete intersection in G(2, k+2) up to
/// `t^n_terms`, using the calibrated reading.
pub fn grassmannian_iseries(spec: &ModelSpec, n_terms: usize) -> Result<Series> {
    let Ambient::Grassmannian { k } = spec.ambient else {
        return Err(PeriodError::InvalidSpec(format!("{spec} is not in a Grassmannian")));
    };
    let reading = calibration()?.reading;
    grassmannian_iseries_with(reading, k, &spec.degrees, n_terms)
}

/// `sum_j (d_0 j)! prod (d_i j)! / (j!)^{n+1} t^{d_0 j}` for a complete
/// intersection in P^n.
pub fn projective_ci_iseries(spec: &ModelSpec, n_terms: usize) -> Result<Series> {
    spec.validate()?;
    let Ambient::Projective { n } = spec.ambient else {
        return Err(PeriodError::InvalidSpec(format!("{spec} is not in a projective space")));
    };
    let d0 = spec.index() as u64;
    let mut c = vec![BigRational::zero(); n_terms + 1];
    let mut j = 0u64;
    while (d0 * j) as usize <= n_terms {
        let num: BigInt = factorial(d0 * j)
            * spec
                .degrees
                .iter()
                .map(|&d| factorial(d as u64 * j))
                .product::<BigInt>();
        let den = num_traits::pow(factorial(j), n + 1);
        c[(d0 * j) as usize] = BigRational::new(num, den);
        j += 1;
    }
    Ok(Series::new(c))
}
