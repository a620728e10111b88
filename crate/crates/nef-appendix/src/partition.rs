//! Nef-partitions of the columns of the weight matrix.

use std::collections::BTreeSet;

use lgm_arith::{rat, BigRational};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{AppendixError, Result};
use crate::linalg::{det, from_ints, inverse, mul_vec};
use crate::matrix::{x_column, WeightMatrix};

/// Column indices are 1-based. `e` indexes a basis of the class lattice,
/// `em[m]` the divisors summing to the m-th hypersurface class, and `sm[m]`
/// the element of `em[m]` eliminated by `F_m = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NefPartition {
    #[serde(rename = "E")]
    pub e: Vec<usize>,
    #[serde(rename = "Em")]
    pub em: Vec<Vec<usize>>,
    #[serde(rename = "sm")]
    pub sm: Vec<usize>,
}

/// Columns of the polynomial `f_j`: `x_{1,1}`, `x_{1,j} + x_{2,j}`, `x_{2,k+1}`.
pub(crate) fn f_columns(k: usize, j: usize) -> Vec<usize> {
    [x_column(k, 1, j), x_column(k, 2, j)]
        .into_iter()
        .flatten()
        .collect()
}

impl NefPartition {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AppendixError::InvalidPartition(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("partition serializes")
    }

    pub fn l(&self) -> usize {
        self.em.len()
    }

    /// `E` on the `M` columns and `E_m` made of consecutive `f_j`, with
    /// `s_m` the smallest column of `E_m`.
    pub fn default_for(k: usize, degrees: &[usize]) -> Result<Self> {
        let total: usize = degrees.iter().sum();
        if degrees.contains(&0) || total > k + 1 {
            return Err(AppendixError::InvalidPartition(format!(
                "degrees {degrees:?} do not fit into k+1={} polynomials",
                k + 1
            )));
        }
        let mut next = 1;
        let mut em = Vec::new();
        for &d in degrees {
            let mut cols: Vec<usize> = (next..next + d).flat_map(|j| f_columns(k, j)).collect();
            cols.sort_unstable();
            em.push(cols);
            next += d;
        }
        let sm = em.iter().map(|c| c[0]).collect();
        Ok(NefPartition {
            e: (k + 1..=2 * k).collect(),
            em,
            sm,
        })
    }

    /// `E_m` without `s_m`.
    pub fn free_part(&self, m: usize) -> Vec<usize> {
        self.em[m]
            .iter()
            .copied()
            .filter(|&c| c != self.sm[m])
            .collect()
    }

    /// Checks the partition against `d`; with `degrees`, also that the
    /// m-th class is `degrees[m]` times the hyperplane class.
    pub fn validate(&self, d: &WeightMatrix, degrees: Option<&[usize]>) -> Result<()> {
        let bad = |s: String| Err(AppendixError::InvalidPartition(s));
        let k = d.k();
        let n = d.n_cols();
        if self.em.len() != self.sm.len() {
            return bad(format!("{} sets E_m but {} elements s_m", self.em.len(), self.sm.len()));
        }
        let mut seen = BTreeSet::new();
        for &c in self.e.iter().chain(self.em.iter().flatten()) {
            if c == 0 || c > n {
                return bad(format!("column {c} outside 1..={n}"));
            }
            if !seen.insert(c) {
                return bad(format!("column {c} is used twice"));
            }
        }
        for (m, set) in self.em.iter().enumerate() {
            if !set.contains(&self.sm[m]) {
                return bad(format!("s_{} = {} is not in E_{}", m + 1, self.sm[m], m + 1));
            }
        }
        if self.e.len() != k {
            return bad(format!("E has {} columns, need {k}", self.e.len()));
        }
        let de = from_ints(&d.submatrix(&self.e));
        if det(&de).abs() != rat(1) {
            return bad("the columns of E are not a basis".into());
        }
        let inv = inverse(&de).expect("unimodular");
        for (m, set) in self.em.iter().enumerate() {
            let class: Vec<i64> = (0..k)
                .map(|r| set.iter().map(|&c| d.rows()[r][c - 1]).sum())
                .collect();
            let coords = mul_vec(&inv, &from_ints(&[class.clone()])[0]);
            if coords.iter().any(|x: &BigRational| x.is_negative()) {
                return bad(format!("L_{} is not a nonnegative combination of E", m + 1));
            }
            if let Some(ds) = degrees {
                let want = vec![ds.get(m).copied().unwrap_or(0) as i64; k];
                if class != want {
                    return bad(format!(
                        "L_{} = {class:?}, expected {want:?} for degree {:?}",
                        m + 1,
                        ds.get(m)
                    ));
                }
            }
        }
        if let Some(ds) = degrees {
            if ds.len() != self.l() {
                return bad(format!("{} sets E_m for {} degrees", self.l(), ds.len()));
            }
        }
        Ok(())
    }
}
