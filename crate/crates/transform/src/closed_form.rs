//! Closed-form mirrors for complete intersections of hyperplanes.

use lgm_arith::{LaurentPolynomial, RationalFunction, VariableSet};
use lgm_quiver::{var_name, sorted_names};
use serde::Serialize;

use crate::error::{Result, TransformError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFormMode {
    /// `l` hyperplanes, `1 <= l <= k-1`.
    Hyperplanes,
    /// `k` hyperplanes.
    Index2,
    /// `k+1` hyperplanes.
    Index1,
}

struct Ctx {
    vars: VariableSet,
}

impl Ctx {
    fn new(names: Vec<String>) -> Result<Self> {
        Ok(Ctx {
            vars: VariableSet::new(sorted_names(names))?,
        })
    }

    fn a(&self, i: usize, j: usize) -> Result<RationalFunction> {
        Ok(RationalFunction::var(&self.vars, &var_name(i, j))?)
    }

    fn one(&self) -> RationalFunction {
        RationalFunction::one(&self.vars)
    }

    fn zero(&self) -> RationalFunction {
        RationalFunction::zero(&self.vars)
    }

    /// `sum_{t=lo}^{hi} a_{t,1}`.
    fn col_sum(&self, lo: usize, hi: usize) -> Result<RationalFunction> {
        let mut s = self.zero();
        for t in lo..=hi {
            s = s.add(&self.a(t, 1)?)?;
        }
        Ok(s)
    }
}

fn finish(f: RationalFunction) -> Result<LaurentPolynomial> {
    f.to_laurent()
        .ok_or_else(|| TransformError::NotLaurent(f.to_string()))
}

fn hyperplanes(k: usize, l: usize) -> Result<LaurentPolynomial> {
    let mut names: Vec<String> = (1..=k).map(|i| var_name(i, 1)).collect();
    names.extend((l..k).map(|i| var_name(i, 2)));
    let c = Ctx::new(names)?;
    let mut f = c.zero();
    for i in 1..l {
        let mut term = c.a(l, 2)?;
        for j in i + 1..l {
            term = term.mul(&c.col_sum(j, l)?)?;
        }
        for j in i..l {
            term = term.div(&c.a(j, 1)?)?;
        }
        f = f.add(&term)?;
    }
    for i in l..k {
        f = f.add(&c.a(i, 2)?.div(&c.a(i, 1)?)?)?;
    }
    f = f.add(&c.a(k, 1)?.inv()?)?;
    for i in l..k.saturating_sub(1) {
        f = f.add(&c.a(i + 1, 1)?.div(&c.a(i, 1)?)?)?;
        f = f.add(&c.a(i + 1, 2)?.div(&c.a(i, 2)?)?)?;
    }
    f = f.add(&c.a(k, 1)?.div(&c.a(k - 1, 1)?)?)?;
    f = f.add(&c.a(k - 1, 2)?.inv()?)?;
    f = f.add(&c.col_sum(1, l)?)?;
    finish(f)
}

fn index2(k: usize) -> Result<LaurentPolynomial> {
    let c = Ctx::new((1..=k).map(|i| var_name(i, 1)).collect())?;
    let mut f = c.zero();
    for i in 1..k {
        let mut term = c.one();
        for j in i + 1..k {
            term = term.mul(&c.col_sum(j, k)?)?;
        }
        for j in i..k {
            term = term.div(&c.a(j, 1)?)?;
        }
        f = f.add(&term)?;
    }
    f = f.add(&c.a(k, 1)?.inv()?)?;
    f = f.add(&c.col_sum(1, k)?)?;
    finish(f)
}

fn index1(k: usize) -> Result<LaurentPolynomial> {
    let c = Ctx::new((2..=k).map(|i| var_name(i, 1)).collect())?;
    // T_j = 1 + a_{k-1} + ... + a_j
    let t = |j: usize| -> Result<RationalFunction> {
        Ok(c.one().add(&if j <= k - 1 { c.col_sum(j, k - 1)? } else { c.zero() })?)
    };
    let mut first = c.a(k, 1)?;
    for j in 2..k {
        first = first.mul(&t(j)?)?.div(&c.a(j, 1)?)?;
    }
    for i in 2..k {
        let mut term = c.one();
        for j in i + 1..k {
            term = term.mul(&t(j)?)?;
        }
        for j in i..k {
            term = term.div(&c.a(j, 1)?)?;
        }
        first = first.add(&term)?;
    }
    first = first.add(&c.one())?;
    let second = t(2)?.add(&c.a(k, 1)?.inv()?)?;
    finish(first.mul(&second)?)
}

/// The closed-form mirror over the variables the elimination leaves.
pub fn closed_form(mode: ClosedFormMode, k: usize, l: usize) -> Result<LaurentPolynomial> {
    if k < 2 {
        return Err(TransformError::InvalidInput(format!("k={k}")));
    }
    match mode {
        ClosedFormMode::Hyperplanes => {
            if l < 1 || l >= k {
                return Err(TransformError::InvalidInput(format!(
                    "{l} hyperplanes need 1 <= l <= k-1 = {}",
                    k - 1
                )));
            }
            hyperplanes(k, l)
        }
        ClosedFormMode::Index2 => index2(k),
        ClosedFormMode::Index1 => index1(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lgm_arith::parse_laurent;

    #[test]
    fn two_hyperplanes_in_g25() {
        let f = closed_form(ClosedFormMode::Hyperplanes, 3, 2).unwrap();
        let want = parse_laurent(
            "a_2_2/a_1_1 + a_2_2/a_2_1 + 1/a_3_1 + a_3_1/a_2_1 + 1/a_2_2 + a_2_1 + a_1_1",
            f.vars(),
        )
        .unwrap();
        assert_eq!(f, want);
    }

    #[test]
    fn index_two_k4() {
        let f = closed_form(ClosedFormMode::Index2, 4, 0).unwrap();
        let want = parse_laurent(
            "(a_4_1+a_3_1)*(a_4_1+a_3_1+a_2_1)/(a_3_1*a_2_1*a_1_1) + (a_4_1+a_3_1)/(a_3_1*a_2_1) \
             + 1/a_3_1 + 1/a_4_1 + a_4_1 + a_3_1 + a_2_1 + a_1_1",
            f.vars(),
        )
        .unwrap();
        assert_eq!(f, want);
    }

    #[test]
    fn index_one_k3() {
        let f = closed_form(ClosedFormMode::Index1, 3, 0).unwrap();
        assert_eq!(f.vars().names(), ["a_2_1", "a_3_1"]);
        assert!(f.has_positive_coefficients());
    }

    #[test]
    fn hyperplane_range_checked() {
        assert!(closed_form(ClosedFormMode::Hyperplanes, 3, 3).is_err());
        assert!(closed_form(ClosedFormMode::Hyperplanes, 3, 0).is_err());
    }
}
