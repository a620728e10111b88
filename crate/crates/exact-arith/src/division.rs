//! Exact division in the Laurent polynomial ring.
//!
//! Ordinary leading-term division, with the quotient's support confined to the
//! box `[min(num) - min(den), max(num) - max(den)]` in every coordinate. Every
//! step strictly lowers the leading monomial of the remainder, and a candidate
//! quotient term outside the box proves indivisibility, so the loop ends.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{ArithError, Result};
use crate::laurent::LaurentPolynomial;
use crate::monomial::Monomial;

pub(crate) fn exact_divide(
    num: &LaurentPolynomial,
    den: &LaurentPolynomial,
) -> Result<Option<LaurentPolynomial>> {
    if den.vars() != num.vars() {
        return Err(ArithError::Alignment {
            left: num.vars().to_string(),
            right: den.vars().to_string(),
        });
    }
    if den.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    let vars = num.vars();
    if num.is_zero() {
        return Ok(Some(LaurentPolynomial::zero(vars)));
    }
    if let Some((m, c)) = den.as_monomial() {
        return Ok(Some(num.mul_term(&m.inv(), &c.recip())));
    }
    if num == den {
        return Ok(Some(LaurentPolynomial::one(vars)));
    }
    if num.len() < 2 {
        // A monomial times a non-monomial has at least two terms.
        return Ok(None);
    }
    let (nlo, nhi) = num.exponent_bounds().unwrap();
    let (dlo, dhi) = den.exponent_bounds().unwrap();
    let qlo: Vec<i32> = nlo.iter().zip(&dlo).map(|(a, b)| a - b).collect();
    let qhi: Vec<i32> = nhi.iter().zip(&dhi).map(|(a, b)| a - b).collect();
    if qlo.iter().zip(&qhi).any(|(l, h)| l > h) {
        return Ok(None);
    }
    let in_box = |m: &Monomial| {
        m.exps()
            .iter()
            .enumerate()
            .all(|(i, &e)| qlo[i] <= e && e <= qhi[i])
    };

    let (lm_d, lc_d) = den.leading_term().unwrap();
    let (tm_d, _) = den.trailing_term().unwrap();
    {
        // The lowest terms must divide as well.
        let (tm_n, _) = num.trailing_term().unwrap();
        if !in_box(&tm_n.div(tm_d)) {
            return Ok(None);
        }
    }
    let lc_inv = lc_d.recip();
    let mut rem: BTreeMap<Monomial, BigRational> = num.terms_map().clone();
    let mut quo: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    while let Some((lm_r, lc_r)) = rem.iter().next_back() {
        let tm = lm_r.div(lm_d);
        if !in_box(&tm) {
            return Ok(None);
        }
        let tc = lc_r * &lc_inv;
        for (m, c) in den.terms_map() {
            let key = m.mul(&tm);
            let delta = c * &tc;
            match rem.get_mut(&key) {
                Some(v) => {
                    *v -= delta;
                    if v.is_zero() {
                        rem.remove(&key);
                    }
                }
                None => {
                    rem.insert(key, -delta);
                }
            }
        }
        quo.insert(tm, tc);
    }
    Ok(Some(LaurentPolynomial::from_map(vars, quo)))
}
