use std::fmt;

use lgm_arith::{BigInt, BigRational};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

/// Power series in `t` truncated after `t^order`; entry `j` is the
/// coefficient of `t^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coefficients: Vec<BigRational>,
}

impl Series {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        assert!(!coefficients.is_empty(), "a series keeps at least t^0");
        Series { coefficients }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Series::new(values.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// Coefficient of `t^j`, zero past the truncation.
    pub fn coeff(&self, j: usize) -> BigRational {
        self.coefficients.get(j).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::new((0..=order).map(|j| self.coeff(j)).collect())
    }

    /// Exponents where `self` and `other` differ up to the shorter order.
    pub fn mismatches(&self, other: &Series) -> Vec<usize> {
        let n = self.order().min(other.order());
        (0..=n).filter(|&j| self.coeff(j) != other.coeff(j)).collect()
    }

    /// Multiplies the unregularized series `sum c_j t^j / j!` by
    /// `exp(alpha t)`. On main periods this is `f -> f + alpha`:
    /// `c'_j = sum_i binom(j, i) alpha^(j-i) c_i`.
    pub fn shift(&self, alpha: &BigRational) -> Series {
        let n = self.order();
        let mut out = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut s = BigRational::zero();
            let mut binom = BigInt::one();
            for i in (0..=j).rev() {
                // binom(j, i) alpha^(j-i) c_i, walking i downward from j.
                let e = j - i;
                s += BigRational::from_integer(binom.clone()) * num_traits::pow(alpha.clone(), e) * &self.coefficients[i];
                binom = binom * BigInt::from(i) / BigInt::from(e + 1);
            }
            out.push(s);
        }
        Series::new(out)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coefficients.iter().map(|c| c.to_string()).collect()
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}
