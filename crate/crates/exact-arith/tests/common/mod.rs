// Independent oracles shared by the integration tests.
#![allow(dead_code)]

use lgm_arith::{BigRational, LaurentPolynomial, VariableSet};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Constant term of `f^j` by enumerating every ordered choice of `j` terms.
pub fn brute_force_constant_term(f: &LaurentPolynomial, j: u32) -> BigRational {
    let terms: Vec<(Vec<i64>, BigRational)> = f
        .terms()
        .map(|(m, c)| (m.exps().iter().map(|&e| e as i64).collect(), c.clone()))
        .collect();
    let n = f.vars().len();
    let mut total = BigRational::zero();
    let t = terms.len();
    if j == 0 {
        return BigRational::one();
    }
    if t == 0 {
        return total;
    }
    let mut idx = vec![0usize; j as usize];
    loop {
        let mut e = vec![0i64; n];
        let mut c = BigRational::one();
        for &i in &idx {
            for (k, x) in terms[i].0.iter().enumerate() {
                e[k] += x;
            }
            c *= &terms[i].1;
        }
        if e.iter().all(|&x| x == 0) {
            total += c;
        }
        let mut p = 0;
        loop {
            if p == idx.len() {
                return total;
            }
            idx[p] += 1;
            if idx[p] < t {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

/// 2D convex hull vertices (monotone chain, collinear points dropped).
pub fn hull_2d(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut pts: Vec<(i64, i64)> = points.iter().map(|p| (p[0], p[1])).collect();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts.iter().map(|&(a, b)| vec![a, b]).collect();
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let mut v: Vec<Vec<i64>> = lower.into_iter().map(|(a, b)| vec![a, b]).collect();
    v.sort();
    v
}

/// Whether some Laurent polynomial `q` with `q * den = num` exists, decided
/// by solving for the coefficients of `q` over the exponent box by Gaussian
/// elimination.
pub fn quotient_exists(num: &LaurentPolynomial, den: &LaurentPolynomial) -> bool {
    if num.is_zero() {
        return true;
    }
    let (nlo, nhi) = num.exponent_bounds().unwrap();
    let (dlo, dhi) = den.exponent_bounds().unwrap();
    let n = nlo.len();
    let lo: Vec<i32> = (0..n).map(|i| nlo[i] - dlo[i]).collect();
    let hi: Vec<i32> = (0..n).map(|i| nhi[i] - dhi[i]).collect();
    if (0..n).any(|i| lo[i] > hi[i]) {
        return false;
    }
    // Enumerate candidate monomials.
    let mut cands: Vec<Vec<i32>> = vec![vec![]];
    for i in 0..n {
        let mut next = Vec::new();
        for c in &cands {
            for e in lo[i]..=hi[i] {
                let mut d = c.clone();
                d.push(e);
                next.push(d);
            }
        }
        cands = next;
    }
    // Rows indexed by product exponents.
    let mut rows: HashMap<Vec<i32>, Vec<BigRational>> = HashMap::new();
    let m = cands.len();
    for (j, q) in cands.iter().enumerate() {
        for (dm, dc) in den.terms() {
            let e: Vec<i32> = q.iter().zip(dm.exps()).map(|(a, b)| a + b).collect();
            rows.entry(e).or_insert_with(|| vec![BigRational::zero(); m + 1])[j] += dc;
        }
    }
    for (nm, nc) in num.terms() {
        match rows.get_mut(&nm.exps().to_vec()) {
            Some(r) => r[m] = nc.clone(),
            None => return false,
        }
    }
    let mut mat: Vec<Vec<BigRational>> = rows.into_values().collect();
    // Row reduce and look for 0 = nonzero.
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..mat.len()).find(|&i| !mat[i][c].is_zero()) else { continue };
        mat.swap(r, p);
        let piv = mat[r].clone();
        for i in 0..mat.len() {
            if i != r && !mat[i][c].is_zero() {
                let f = &mat[i][c] / &piv[c];
                for (x, y) in mat[i].iter_mut().zip(&piv) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    mat.iter().all(|row| !(row[..m].iter().all(|x| x.is_zero()) && !row[m].is_zero()))
}

pub fn vars(names: &[&str]) -> VariableSet {
    VariableSet::new(names.iter().copied()).unwrap()
}
