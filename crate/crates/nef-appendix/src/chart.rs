//! Givental's superpotential on the torus of P(2, k+2) and its torus chart
//! on the subvariety `F_1 = ... = F_l = 1`.

use lgm_arith::{Bindings, LaurentPolynomial, Monomial, RationalFunction, VariableSet};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{AppendixError, Result};
use crate::linalg::{from_ints, inverse};
use crate::matrix::{build_weight_matrix, column_label, WeightMatrix};
use crate::partition::{f_columns, NefPartition};

/// Coordinates of the torus `D = 1`: the columns outside `e`, in order.
pub fn coordinate_vars(k: usize, e: &[usize]) -> Result<VariableSet> {
    let names: Vec<String> = (1..=3 * k)
        .filter(|c| !e.contains(c))
        .map(|c| column_label(k, c))
        .collect();
    Ok(VariableSet::new(names)?)
}

fn chart_label(k: usize, c: usize) -> String {
    let label = column_label(k, c);
    match label.strip_prefix('x') {
        Some(rest) => format!("y{rest}"),
        None => format!("y_{label}"),
    }
}

/// The monomial of every column over the coordinates of `D = 1`; columns in
/// `e` are solved for from the relations.
pub fn column_terms(d: &WeightMatrix, e: &[usize]) -> Result<(VariableSet, Vec<LaurentPolynomial>)> {
    let k = d.k();
    let vars = coordinate_vars(k, e)?;
    let coords: Vec<usize> = (1..=3 * k).filter(|c| !e.contains(c)).collect();
    let inv = inverse(&from_ints(&d.submatrix(e))).ok_or_else(|| {
        AppendixError::InvalidPartition("the columns of E are not a basis".into())
    })?;
    let rest = from_ints(&d.submatrix(&coords));
    let one = lgm_arith::rat(1);
    let mut terms = Vec::with_capacity(3 * k);
    for c in 1..=3 * k {
        let mut exps = vec![0i32; coords.len()];
        if let Some(pos) = e.iter().position(|&x| x == c) {
            // log u_E = -D_E^{-1} D_rest log u_rest
            for (j, x) in exps.iter_mut().enumerate() {
                let v: lgm_arith::BigRational = (0..k).map(|r| &inv[pos][r] * &rest[r][j]).sum();
                if !v.is_integer() {
                    return Err(AppendixError::InvalidPartition(
                        "E gives fractional exponents".into(),
                    ));
                }
                *x = -v.to_integer().to_i32().expect("small exponent");
            }
        } else {
            exps[coords.iter().position(|&x| x == c).unwrap()] = 1;
        }
        terms.push(LaurentPolynomial::monomial(&vars, Monomial::new(exps), one.clone()));
    }
    Ok((vars, terms))
}

/// The superpotential of G(2, k+2) in the variables `x_{i,j}` together with
/// the polynomials `f_1, ..., f_{k+1}`.
pub fn appendix_x_change(k: usize) -> Result<(LaurentPolynomial, Vec<LaurentPolynomial>)> {
    let d = build_weight_matrix(k)?;
    let e: Vec<usize> = (k + 1..=2 * k).collect();
    let (vars, terms) = column_terms(&d, &e)?;
    let sum = |cols: &[usize]| {
        cols.iter()
            .fold(LaurentPolynomial::zero(&vars), |acc, &c| &acc + &terms[c - 1])
    };
    let all: Vec<usize> = (1..=3 * k).collect();
    let fs = (1..=k + 1).map(|j| sum(&f_columns(k, j))).collect();
    Ok((sum(&all), fs))
}

/// Pulls `w - sum F_m` back along `u_{s_m} = 1/(1 + sum y)`,
/// `u_i = y_i/(1 + sum y)` for `i` in `E_m \ s_m`. Since each `F_m` pulls
/// back to 1, this is the chart of `w` shifted by `-l`.
pub fn torus_chart_substitute(
    w: &LaurentPolynomial,
    d: &WeightMatrix,
    p: &NefPartition,
) -> Result<LaurentPolynomial> {
    p.validate(d, None)?;
    let k = d.k();
    let vars = coordinate_vars(k, &p.e)?;
    let w = w.embed(&vars)?;
    let mut out_names = Vec::new();
    for c in (1..=3 * k).filter(|c| !p.e.contains(c)) {
        if p.sm.contains(&c) {
            continue;
        }
        if p.em.iter().flatten().any(|&x| x == c) {
            out_names.push(chart_label(k, c));
        } else {
            out_names.push(column_label(k, c));
        }
    }
    let out = VariableSet::new(out_names)?;

    let mut shifted = w;
    let mut b = Bindings::new();
    for (m, set) in p.em.iter().enumerate() {
        let free = p.free_part(m);
        let mut denom = RationalFunction::one(&out);
        for &c in &free {
            denom = denom.add(&RationalFunction::var(&out, &chart_label(k, c))?)?;
        }
        b.insert(column_label(k, p.sm[m]), denom.inv()?);
        for &c in &free {
            let y = RationalFunction::var(&out, &chart_label(k, c))?;
            b.insert(column_label(k, c), y.div(&denom)?);
        }
        for &c in set {
            shifted = &shifted - &LaurentPolynomial::var(&vars, &column_label(k, c))?;
        }
    }
    let pulled = RationalFunction::from_laurent(shifted).substitute(&b, &out)?;
    pulled
        .to_laurent()
        .ok_or_else(|| AppendixError::NotLaurent(pulled.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixTrace {
    pub k: usize,
    pub degrees: Vec<usize>,
    pub matrix: WeightMatrix,
    pub partition: NefPartition,
    #[serde(serialize_with = "as_text")]
    pub superpotential: LaurentPolynomial,
    #[serde(serialize_with = "as_text")]
    pub result: LaurentPolynomial,
}

fn as_text<S: serde::Serializer>(
    p: &LaurentPolynomial,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_text())
}

/// The Laurent mirror of the complete intersection of the given degrees in
/// G(2, k+2) from a nef-partition, by default [`NefPartition::default_for`].
pub fn run_appendix(
    k: usize,
    degrees: &[usize],
    partition: Option<&NefPartition>,
) -> Result<AppendixTrace> {
    if k < 2 {
        return Err(AppendixError::InvalidInput(format!("k={k}, need k >= 2")));
    }
    if degrees.iter().any(|d| d.is_zero()) {
        return Err(AppendixError::InvalidInput("degrees must be positive".into()));
    }
    let sum: usize = degrees.iter().sum();
    if sum > k + 1 {
        return Err(AppendixError::NotFano { sum, max: k + 1 });
    }
    let d = build_weight_matrix(k)?;
    let p = match partition {
        Some(p) => p.clone(),
        None => NefPartition::default_for(k, degrees)?,
    };
    p.validate(&d, Some(degrees))?;
    let (_, terms) = column_terms(&d, &p.e)?;
    let w = terms[1..]
        .iter()
        .fold(terms[0].clone(), |acc, t| &acc + t);
    let result = torus_chart_substitute(&w, &d, &p)?;
    let expected = 2 * k - degrees.len();
    if result.vars().len() != expected {
        return Err(AppendixError::InvalidPartition(format!(
            "mirror has {} variables, expected {expected}",
            result.vars().len()
        )));
    }
    Ok(AppendixTrace {
        k,
        degrees: degrees.to_vec(),
        matrix: d,
        partition: p,
        superpotential: w,
        result,
    })
}
