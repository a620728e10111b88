//! Laurent mirrors of complete intersections in projective space.

use lgm_arith::{LaurentPolynomial, RationalFunction, VariableSet};

use crate::error::{PeriodError, Result};
use crate::spec::{Ambient, ModelSpec};

/// `prod_i (x_{i,1} + ... + x_{i,d_i-1} + 1)^{d_i} / (prod x * prod y)
///  + y_1 + ... + y_{d_0-1}` in `n - l` variables.
pub fn projective_ci_lg(spec: &ModelSpec) -> Result<LaurentPolynomial> {
    spec.validate()?;
    if !matches!(spec.ambient, Ambient::Projective { .. }) {
        return Err(PeriodError::InvalidSpec(format!("{spec} is not in a projective space")));
    }
    let d0 = spec.index() as usize;
    let mut names = Vec::new();
    for (i, &d) in spec.degrees.iter().enumerate() {
        names.extend((1..d).map(|j| format!("x_{}_{j}", i + 1)));
    }
    names.extend((1..d0).map(|j| format!("y_{j}")));
    let vars = VariableSet::new(names.clone())?;

    let one = RationalFunction::one(&vars);
    let mut top = one.clone();
    for (i, &d) in spec.degrees.iter().enumerate() {
        let mut s = one.clone();
        for j in 1..d {
            s = s.add(&RationalFunction::var(&vars, &format!("x_{}_{j}", i + 1))?)?;
        }
        top = top.mul(&s.pow(d as i64)?)?;
    }
    let mut den = one;
    for name in &names {
        den = den.mul(&RationalFunction::var(&vars, name)?)?;
    }
    let mut f = top.div(&den)?;
    for j in 1..d0 {
        f = f.add(&RationalFunction::var(&vars, &format!("y_{j}"))?)?;
    }
    Ok(f.to_laurent().expect("denominator is a monomial"))
}
