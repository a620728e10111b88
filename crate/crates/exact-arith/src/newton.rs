//! Newton polytopes of Laurent polynomials.
//!
//! Vertex tests reduce to exact linear feasibility problems
//! `A x = b, x >= 0`, decided by a phase-one simplex over the rationals with
//! Bland's rule (no cycling, no floating point).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{ArithError, Result};
use crate::laurent::LaurentPolynomial;

/// A lattice polytope given by its vertices, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub vertices: Vec<Vec<i64>>,
}

impl Polytope {
    pub fn dimension_of_ambient(&self) -> usize {
        self.vertices.first().map_or(0, Vec::len)
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Whether `A x = b` has a solution with `x >= 0`.
pub fn lp_feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    // Tableau rows: [A | I | b] with rows negated so that b >= 0.
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row = vec![BigRational::zero(); width];
        let flip = b[i].is_negative();
        for j in 0..n {
            row[j] = if flip { -a[i][j].clone() } else { a[i][j].clone() };
        }
        row[n + i] = BigRational::one();
        row[width - 1] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    // Objective: minimize the sum of artificials, written as reduced costs.
    let mut obj = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        let enter = (0..n + m).find(|&j| obj[j].is_negative());
        let Some(enter) = enter else { break };
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &best {
                    None => true,
                    Some(bv) => ratio < *bv || (ratio == *bv && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(r) = leave else { break };
        let piv = t[r][enter].clone();
        for v in t[r].iter_mut() {
            *v /= &piv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (x, p) in obj.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        basis[r] = enter;
    }
    obj[width - 1].is_zero()
}

/// Whether `p` is a convex combination of `points`.
pub fn in_convex_hull(p: &[i64], points: &[Vec<i64>]) -> bool {
    if points.is_empty() {
        return false;
    }
    let d = p.len();
    let mut a = vec![vec![BigRational::zero(); points.len()]; d + 1];
    let mut b = vec![BigRational::zero(); d + 1];
    for (j, pt) in points.iter().enumerate() {
        for i in 0..d {
            a[i][j] = q(pt[i]);
        }
        a[d][j] = BigRational::one();
    }
    for i in 0..d {
        b[i] = q(p[i]);
    }
    b[d] = BigRational::one();
    lp_feasible(&a, &b)
}

/// Exponent vectors of the support of `f`, in canonical term order.
pub fn support(f: &LaurentPolynomial) -> Vec<Vec<i64>> {
    f.terms()
        .map(|(m, _)| m.exps().iter().map(|&e| e as i64).collect())
        .collect()
}

/// Vertices of the convex hull of the support of `f`.
pub fn newton_polytope(f: &LaurentPolynomial) -> Result<Polytope> {
    if f.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let pts = support(f);
    let mut vertices = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let others: Vec<Vec<i64>> = pts
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        if !in_convex_hull(p, &others) {
            vertices.push(p.clone());
        }
    }
    vertices.sort();
    Ok(Polytope { vertices })
}

fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot[c];
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether the origin lies in the interior of the Newton polytope of `f`:
/// the support spans the whole space and the origin is a strictly positive
/// combination of all support points.
pub fn origin_in_interior(f: &LaurentPolynomial) -> bool {
    let pts = support(f);
    let d = f.vars().len();
    if pts.is_empty() || rank(&pts) < d {
        return false;
    }
    // sum (1 + mu_i) p_i = 0 with mu >= 0.
    let mut a = vec![vec![BigRational::zero(); pts.len()]; d];
    let mut b = vec![BigRational::zero(); d];
    for (j, p) in pts.iter().enumerate() {
        for i in 0..d {
            a[i][j] = q(p[i]);
            b[i] -= q(p[i]);
        }
    }
    lp_feasible(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_laurent, VariableSet};

    #[test]
    fn triangle() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        let f = parse_laurent("x + y + x^-1*y^-1", &v).unwrap();
        let p = newton_polytope(&f).unwrap();
        assert_eq!(p.vertices, vec![vec![-1, -1], vec![0, 1], vec![1, 0]]);
        assert!(origin_in_interior(&f));
    }

    #[test]
    fn interior_point_is_not_a_vertex() {
        let v = VariableSet::new(["a", "b"]).unwrap();
        let f = parse_laurent("a^-1 + b^-1 + a + b + 7", &v).unwrap();
        let p = newton_polytope(&f).unwrap();
        assert_eq!(p.vertices, vec![vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn edge_midpoint_is_not_a_vertex() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        let f = parse_laurent("x^2 + x*y + y^2 + x^-1*y^-1", &v).unwrap();
        assert_eq!(newton_polytope(&f).unwrap().vertices.len(), 3);
    }

    #[test]
    fn zero_has_no_polytope() {
        let v = VariableSet::new(["x"]).unwrap();
        assert!(newton_polytope(&LaurentPolynomial::zero(&v)).is_err());
    }

    #[test]
    fn origin_on_boundary() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        let f = parse_laurent("x + y + 1", &v).unwrap();
        assert!(!origin_in_interior(&f));
    }
}
