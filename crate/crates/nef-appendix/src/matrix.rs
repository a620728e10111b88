//! The weight matrix of P(2, k+2).
//!
//! Columns are the 3k toric divisors in the order `x_{1,1..k}`, then
//! `M_k, ..., M_1`, then `x_{2,2..k+1}`; rows are relations among them.

use lgm_arith::rat;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{AppendixError, Result};
use crate::linalg::{det, from_ints};

/// Name of the coordinate attached to column `c` (1-based).
pub fn column_label(k: usize, c: usize) -> String {
    if c <= k {
        format!("x_1_{c}")
    } else if c <= 2 * k {
        format!("m_{}", 2 * k + 1 - c)
    } else {
        format!("x_2_{}", c - 2 * k + 1)
    }
}

/// Column of `x_{i,j}`, or `None` outside `x_{1,1..k}`, `x_{2,2..k+1}`.
pub(crate) fn x_column(k: usize, i: usize, j: usize) -> Option<usize> {
    match i {
        1 if (1..=k).contains(&j) => Some(j),
        2 if (2..=k + 1).contains(&j) => Some(2 * k + j - 1),
        _ => None,
    }
}

/// Column of the monomial `M_i`.
pub(crate) fn m_column(k: usize, i: usize) -> usize {
    2 * k + 1 - i
}

/// Exponent vector of the term of column `c` over `x_{1,1..k}, x_{2,2..k+1}`.
pub(crate) fn ray(k: usize, c: usize) -> Vec<i64> {
    let mut v = vec![0; 2 * k];
    if c <= k {
        v[c - 1] = 1;
    } else if c <= 2 * k {
        let i = 2 * k + 1 - c;
        for j in 1..=i {
            v[j - 1] = -1;
        }
        for j in (i + 1).max(2)..=k + 1 {
            v[k + j - 2] = -1;
        }
    } else {
        v[c - k - 1] = 1;
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightMatrix {
    k: usize,
    rows: Vec<Vec<i64>>,
}

impl WeightMatrix {
    /// Wraps `rows` after checking that they span the relation lattice.
    pub fn from_rows(k: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        let d = WeightMatrix { k, rows };
        d.validate()?;
        Ok(d)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn n_cols(&self) -> usize {
        3 * self.k
    }

    /// Column `c` (1-based), the class of that divisor.
    pub fn column(&self, c: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[c - 1]).collect()
    }

    /// Square submatrix on the given columns.
    pub(crate) fn submatrix(&self, cols: &[usize]) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c - 1]).collect())
            .collect()
    }

    /// Checks that the rows are 0/1 relations among the column monomials and
    /// form a basis of all such relations.
    pub fn validate(&self) -> Result<()> {
        let k = self.k;
        let fail = |reason: String| AppendixError::WeightMatrix { k, reason };
        if self.rows.len() != k || self.rows.iter().any(|r| r.len() != 3 * k) {
            return Err(fail(format!("expected a {k} x {} matrix", 3 * k)));
        }
        if self.rows.iter().flatten().any(|&x| x != 0 && x != 1) {
            return Err(fail("entries must be 0 or 1".into()));
        }
        for (r, row) in self.rows.iter().enumerate() {
            let mut sum = vec![0i64; 2 * k];
            for (c, &e) in row.iter().enumerate() {
                for (s, x) in sum.iter_mut().zip(ray(k, c + 1)) {
                    *s += e * x;
                }
            }
            if sum.iter().any(|&x| x != 0) {
                return Err(fail(format!("row {} is not a relation", r + 1)));
            }
        }
        // The relation lattice has rank 3k - 2k = k; a unimodular k x k minor
        // makes the rows a basis of it.
        let ms: Vec<usize> = (k + 1..=2 * k).collect();
        let dm = det(&from_ints(&self.submatrix(&ms)));
        if dm.abs() != rat(1) {
            return Err(fail(format!("minor on the M columns is {dm}, not a unit")));
        }
        Ok(())
    }
}

/// Row `i` has ones on `x_{1,j}` for `j <= i`, on `M_i`, and on `x_{2,j}` for
/// `j > i`: the relation `M_i * prod x_{1,j} * prod x_{2,j} = 1`.
pub fn build_weight_matrix(k: usize) -> Result<WeightMatrix> {
    if k < 2 {
        return Err(AppendixError::InvalidInput(format!("k={k}, need k >= 2")));
    }
    let mut rows = vec![vec![0i64; 3 * k]; k];
    for (idx, row) in rows.iter_mut().enumerate() {
        let i = idx + 1;
        for j in 1..=i {
            row[j - 1] = 1;
        }
        row[m_column(k, i) - 1] = 1;
        for j in (i + 1).max(2)..=k + 1 {
            row[x_column(k, 2, j).unwrap() - 1] = 1;
        }
    }
    WeightMatrix::from_rows(k, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_follow_column_blocks() {
        let names: Vec<String> = (1..=6).map(|c| column_label(2, c)).collect();
        assert_eq!(names, ["x_1_1", "x_1_2", "m_2", "m_1", "x_2_2", "x_2_3"]);
    }

    #[test]
    fn rows_sum_to_k_plus_2() {
        for k in 2..=6 {
            let d = build_weight_matrix(k).unwrap();
            assert!(d.rows().iter().all(|r| r.iter().sum::<i64>() == k as i64 + 2));
        }
    }

    #[test]
    fn non_relation_is_rejected() {
        let mut rows = build_weight_matrix(2).unwrap().rows().to_vec();
        rows[0][0] = 0;
        assert!(WeightMatrix::from_rows(2, rows).is_err());
    }

    #[test]
    fn dependent_rows_are_rejected() {
        let row = build_weight_matrix(2).unwrap().rows()[0].clone();
        assert!(WeightMatrix::from_rows(2, vec![row.clone(), row]).is_err());
    }

    #[test]
    fn small_k_is_rejected() {
        assert!(build_weight_matrix(1).is_err());
    }
}
