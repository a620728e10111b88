//! Constant terms of powers of a Laurent polynomial.
//!
//! Coefficients are cleared to integers first. Exponent vectors are packed
//! into a single `i128` with a balanced mixed radix, which keeps packing
//! additive, so multiplying monomials is one integer addition. A monomial of
//! `f^m` is dropped as soon as no product of the remaining `j - m` factors can
//! cancel it, judged by the per-coordinate exponent range of `f`.
//! The final step pairs `f^ceil(j/2)` with `f^floor(j/2)` on opposite
//! exponents instead of forming `f^j`.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::laurent::LaurentPolynomial;

type Packed = HashMap<i128, BigInt>;

struct Kernel {
    /// Integer terms of `scale * f`.
    base: Packed,
    scale: BigInt,
    lo: Vec<i64>,
    hi: Vec<i64>,
    stride: Vec<i128>,
    /// Largest total power the kernel will be asked about.
    target: u32,
}

impl Kernel {
    /// `None` when the exponents of `f^target` do not fit the packing.
    fn new(f: &LaurentPolynomial, target: u32) -> Option<Kernel> {
        let n = f.vars().len();
        let (lo, hi) = f.exponent_bounds()?;
        let lo: Vec<i64> = lo.into_iter().map(i64::from).collect();
        let hi: Vec<i64> = hi.into_iter().map(i64::from).collect();
        let t = target.max(1) as i64;
        let bound: Vec<i64> = (0..n).map(|c| t * lo[c].abs().max(hi[c].abs())).collect();
        // Balanced radix: coordinate `c` lives in `[-bound[c], bound[c]]`.
        let mut stride = Vec::with_capacity(n);
        let mut acc: i128 = 1;
        for &b in &bound {
            stride.push(acc);
            acc = acc.checked_mul(2 * b as i128 + 1)?;
            if acc > i128::MAX / 4 {
                return None;
            }
        }
        let mut scale = BigInt::one();
        for (_, c) in f.terms() {
            scale = scale.lcm(c.denom());
        }
        let mut kernel = Kernel {
            base: HashMap::new(),
            scale: scale.clone(),
            lo,
            hi,
            stride,
            target,
        };
        for (m, c) in f.terms() {
            let e: Vec<i64> = m.exps().iter().map(|&x| x as i64).collect();
            let key = kernel.pack(&e);
            let v = (c * BigRational::from_integer(scale.clone())).to_integer();
            kernel.base.insert(key, v);
        }
        Some(kernel)
    }

    fn pack(&self, e: &[i64]) -> i128 {
        e.iter().zip(&self.stride).map(|(&x, &s)| x as i128 * s).sum()
    }

    fn unpack(&self, mut key: i128) -> Vec<i64> {
        let mut out = vec![0i64; self.stride.len()];
        for c in (0..self.stride.len()).rev() {
            let s = self.stride[c];
            // Balanced digit: round to nearest multiple of the stride.
            let q = if key >= 0 {
                (key + s / 2) / s
            } else {
                -((-key + s / 2) / s)
            };
            let q = if s == 1 { key } else { q };
            out[c] = q as i64;
            key -= q * s;
        }
        out
    }

    /// Whether `remaining` more factors of `f` could cancel exponent `e`.
    fn reachable(&self, e: &[i64], remaining: u32) -> bool {
        let r = remaining as i64;
        e.iter()
            .enumerate()
            .all(|(c, &x)| r * self.lo[c] <= -x && -x <= r * self.hi[c])
    }

    fn prune(&self, p: Packed, remaining: u32) -> Packed {
        p.into_iter()
            .filter(|(k, v)| !v.is_zero() && self.reachable(&self.unpack(*k), remaining))
            .collect()
    }

    /// Product of two packed polynomials keeping only monomials reachable
    /// with `remaining` more factors.
    fn mul(&self, a: &Packed, b: &Packed, remaining: u32) -> Packed {
        let (a, b) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut out: Packed = HashMap::with_capacity(b.len().max(16));
        let mut rejected: HashSet<i128> = HashSet::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let k = ka + kb;
                if let Some(v) = out.get_mut(&k) {
                    *v += ca * cb;
                    continue;
                }
                if rejected.contains(&k) {
                    continue;
                }
                if self.reachable(&self.unpack(k), remaining) {
                    out.insert(k, ca * cb);
                } else {
                    rejected.insert(k);
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn one() -> Packed {
        let mut p = HashMap::new();
        p.insert(0i128, BigInt::one());
        p
    }

    /// `f^e` by binary powering, pruned against `self.target`.
    fn power(&self, e: u32) -> Packed {
        let mut result = Self::one();
        let mut result_pow = 0u32;
        let mut base = self.prune(self.base.clone(), self.target - 1);
        let mut base_pow = 1u32;
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                result_pow += base_pow;
                result = self.mul(&result, &base, self.target - result_pow);
            }
            k >>= 1;
            if k > 0 {
                base_pow *= 2;
                base = self.mul(&base, &base, self.target.saturating_sub(base_pow));
            }
        }
        result
    }

    fn pair(a: &Packed, b: &Packed) -> BigInt {
        let (a, b) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut s = BigInt::zero();
        for (k, v) in a {
            if let Some(w) = b.get(&(-k)) {
                s += v * w;
            }
        }
        s
    }

    fn unscale(&self, v: BigInt, j: u32) -> BigRational {
        BigRational::new(v, num_traits::pow(self.scale.clone(), j as usize))
    }
}

/// The constant term of `f^j`.
pub fn constant_term(f: &LaurentPolynomial, j: u32) -> BigRational {
    if j == 0 {
        return BigRational::one();
    }
    if f.is_zero() {
        return BigRational::zero();
    }
    let kernel = match Kernel::new(f, j) {
        Some(k) => k,
        None => return constant_term_naive(f, j),
    };
    let a = (j + 1) / 2;
    let b = j / 2;
    let pa = kernel.power(a);
    let v = if a == b {
        Kernel::pair(&pa, &pa)
    } else if b == 0 {
        pa.get(&0).cloned().unwrap_or_default()
    } else {
        let pb = kernel.power(b);
        Kernel::pair(&pa, &pb)
    };
    kernel.unscale(v, j)
}

/// Constant terms of `f^0, ..., f^n`. Powers are built incrementally and
/// each `f^j` is read off as a pairing of two stored half powers.
pub fn constant_terms(f: &LaurentPolynomial, n: u32) -> Vec<BigRational> {
    let mut out = vec![BigRational::one()];
    if n == 0 {
        return out;
    }
    if f.is_zero() {
        out.extend((1..=n).map(|_| BigRational::zero()));
        return out;
    }
    let kernel = match Kernel::new(f, n) {
        Some(k) => k,
        None => return (0..=n).map(|j| constant_term_naive(f, j)).collect(),
    };
    let half = (n + 1) / 2;
    let mut powers: Vec<Packed> = vec![Kernel::one()];
    for m in 1..=half {
        let next = kernel.mul(&powers[m as usize - 1], &kernel.base, n - m);
        powers.push(next);
    }
    for j in 1..=n {
        let a = ((j + 1) / 2) as usize;
        let b = (j / 2) as usize;
        let v = Kernel::pair(&powers[a], &powers[b]);
        out.push(kernel.unscale(v, j));
    }
    out
}

/// Reference implementation: expand `f^j` and read the constant term.
pub fn constant_term_naive(f: &LaurentPolynomial, j: u32) -> BigRational {
    f.pow(j).constant_term()
}
