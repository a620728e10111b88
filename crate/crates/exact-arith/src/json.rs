//! JSON form: `{"variables":[...],"terms":[{"coeff":"p/q","exps":[...]}]}`
//! with terms in canonical order.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{ArithError, Result};
use crate::laurent::LaurentPolynomial;
use crate::monomial::Monomial;
use crate::vars::VariableSet;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<i32>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct LaurentJson {
    pub variables: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl From<&LaurentPolynomial> for LaurentJson {
    fn from(p: &LaurentPolynomial) -> Self {
        LaurentJson {
            variables: p.vars().names().to_vec(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    exps: m.exps().to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&LaurentJson> for LaurentPolynomial {
    type Error = ArithError;

    fn try_from(j: &LaurentJson) -> Result<Self> {
        let vars = VariableSet::new(j.variables.iter().cloned())?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.exps.len() != vars.len() {
                return Err(ArithError::Parse {
                    pos: 0,
                    msg: format!("term has {} exponents, expected {}", t.exps.len(), vars.len()),
                });
            }
            let c: BigRational = t.coeff.parse().map_err(|_| ArithError::Parse {
                pos: 0,
                msg: format!("bad coefficient `{}`", t.coeff),
            })?;
            terms.push((Monomial::new(t.exps.clone()), c));
        }
        Ok(LaurentPolynomial::from_terms(&vars, terms))
    }
}

impl LaurentPolynomial {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(LaurentJson::from(self)).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: LaurentJson = serde_json::from_str(s).map_err(|e| ArithError::Parse {
            pos: e.column(),
            msg: e.to_string(),
        })?;
        LaurentPolynomial::try_from(&j)
    }
}
