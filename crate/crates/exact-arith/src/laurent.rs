//! Sparse multivariate Laurent polynomials with exact rational coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{ArithError, Result};
use crate::monomial::Monomial;
use crate::vars::VariableSet;

/// A Laurent polynomial over `vars`. Zero coefficients are never stored, so
/// structural equality is mathematical equality (given equal variable sets).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    vars: VariableSet,
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl LaurentPolynomial {
    pub fn zero(vars: &VariableSet) -> Self {
        LaurentPolynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VariableSet) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn constant(vars: &VariableSet, c: BigRational) -> Self {
        Self::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn from_int(vars: &VariableSet, c: i64) -> Self {
        Self::constant(vars, rat(c))
    }

    pub fn monomial(vars: &VariableSet, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.len(), vars.len(), "monomial length does not match variable set");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPolynomial {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn var(vars: &VariableSet, name: &str) -> Result<Self> {
        let i = vars
            .position(name)
            .ok_or_else(|| ArithError::UnknownVariable(name.to_string()))?;
        Ok(Self::monomial(vars, Monomial::var(vars.len(), i), BigRational::one()))
    }

    /// `name^e` as a monomial.
    pub fn var_pow(vars: &VariableSet, name: &str, e: i32) -> Result<Self> {
        let i = vars
            .position(name)
            .ok_or_else(|| ArithError::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[i] = e;
        Ok(Self::monomial(vars, Monomial::new(exps), BigRational::one()))
    }

    /// Sums repeated monomials and drops zeros.
    pub fn from_terms<I>(vars: &VariableSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "monomial length does not match variable set");
            *acc.entry(m).or_insert_with(BigRational::zero) += c;
        }
        LaurentPolynomial {
            vars: vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }

    /// The value if the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The single term of a monomial polynomial.
    pub fn as_monomial(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn trailing_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(ArithError::Alignment {
                left: self.vars.to_string(),
                right: other.vars.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let (big, small) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(LaurentPolynomial {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        if let Some((m, c)) = other.as_monomial() {
            return Ok(self.mul_term(m, c));
        }
        if let Some((m, c)) = self.as_monomial() {
            return Ok(other.mul_term(m, c));
        }
        let mut acc: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                *acc.entry(ma.mul(mb)).or_insert_with(BigRational::zero) += c;
            }
        }
        Ok(LaurentPolynomial {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Multiplication by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        self.mul_term(m, &BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.mul_term(&Monomial::one(self.vars.len()), c)
    }

    pub fn neg_ref(&self) -> Self {
        LaurentPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    /// Nonnegative power by binary exponentiation.
    pub fn pow(&self, mut e: u32) -> Self {
        if let Some((m, c)) = self.as_monomial() {
            return Self::monomial(&self.vars, m.pow(e as i32), num_traits::pow(c.clone(), e as usize));
        }
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power; negative exponents are only defined for monomials.
    pub fn pow_int(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        match self.as_monomial() {
            Some((m, c)) => Ok(Self::monomial(
                &self.vars,
                m.pow(e as i32),
                num_traits::pow(c.recip(), (-e) as usize),
            )),
            None if self.is_zero() => Err(ArithError::DivisionByZero),
            None => Err(ArithError::Unsupported(format!(
                "negative power {e} of a non-monomial"
            ))),
        }
    }

    /// Per-variable minimum and maximum exponent over the support.
    pub fn exponent_bounds(&self) -> Option<(Vec<i32>, Vec<i32>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.exps().to_vec();
        let mut hi = lo.clone();
        for m in it {
            for (i, &e) in m.exps().iter().enumerate() {
                lo[i] = lo[i].min(e);
                hi[i] = hi[i].max(e);
            }
        }
        Some((lo, hi))
    }

    /// The largest monomial dividing every term (componentwise minimum).
    pub fn monomial_content(&self) -> Monomial {
        match self.exponent_bounds() {
            Some((lo, _)) => Monomial::new(lo),
            None => Monomial::one(self.vars.len()),
        }
    }

    /// Whether any term has a nonzero exponent in `name`.
    pub fn depends_on(&self, name: &str) -> bool {
        match self.vars.position(name) {
            Some(i) => self.terms.keys().any(|m| m.get(i) != 0),
            None => false,
        }
    }

    /// Names of variables that occur with nonzero exponent, in set order.
    pub fn used_variables(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.get(i) != 0))
            .map(|i| self.vars.name(i).to_string())
            .collect()
    }

    /// Re-expresses the polynomial over `target`. Fails if a variable that
    /// actually occurs is missing from `target`.
    pub fn embed(&self, target: &VariableSet) -> Result<Self> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, n) in self.vars.names().iter().enumerate() {
            match target.position(n) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|m| m.get(i) != 0) {
                        return Err(ArithError::UnknownVariable(n.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; target.len()];
                for (i, &x) in m.exps().iter().enumerate() {
                    if let Some(j) = map[i] {
                        e[j] = x;
                    }
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Ok(LaurentPolynomial {
            vars: target.clone(),
            terms,
        })
    }

    /// Drops variables that do not occur.
    pub fn compact(&self) -> Self {
        let used = self.used_variables();
        self.embed(&VariableSet::new(used).unwrap()).unwrap()
    }

    /// Renames variables (names not in `map` are kept).
    pub fn rename(&self, map: &HashMap<String, String>) -> Result<Self> {
        let names: Vec<String> = self
            .vars
            .names()
            .iter()
            .map(|n| map.get(n).cloned().unwrap_or_else(|| n.clone()))
            .collect();
        let vars = VariableSet::new(names)?;
        Ok(LaurentPolynomial {
            vars,
            terms: self.terms.clone(),
        })
    }

    /// Degree of every term under integer weights on the variables.
    pub fn weighted_degrees(&self, weights: &[i64]) -> Vec<i64> {
        self.terms
            .keys()
            .map(|m| m.exps().iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum())
            .collect()
    }

    /// Whether all coefficients are integers.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Exact quotient `self / den`, or `None` when `den` does not divide
    /// `self` in the Laurent polynomial ring.
    pub fn exact_divide(&self, den: &Self) -> Result<Option<Self>> {
        crate::division::exact_divide(self, den)
    }

    pub(crate) fn terms_map(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub(crate) fn from_map(vars: &VariableSet, terms: BTreeMap<Monomial, BigRational>) -> Self {
        LaurentPolynomial {
            vars: vars.clone(),
            terms,
        }
    }

    /// Canonical text of one term.
    fn fmt_term(&self, m: &Monomial, c: &BigRational) -> String {
        let mut factors = Vec::new();
        for pass in [true, false] {
            for (i, &e) in m.exps().iter().enumerate() {
                if (pass && e > 0) || (!pass && e < 0) {
                    if e == 1 {
                        factors.push(self.vars.name(i).to_string());
                    } else {
                        factors.push(format!("{}^{}", self.vars.name(i), e));
                    }
                }
            }
        }
        if factors.is_empty() {
            return c.to_string();
        }
        let body = factors.join("*");
        if c.is_one() {
            body
        } else if (-c).is_one() {
            format!("-{body}")
        } else {
            format!("{c}*{body}")
        }
    }

    /// Canonical text form; see the crate docs for the grammar.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms()
            .map(|(m, c)| self.fmt_term(m, c))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Whether every coefficient is positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.vars, self.to_text())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a LaurentPolynomial> for &'a LaurentPolynomial {
            type Output = LaurentPolynomial;
            /// Panics when the variable sets differ; use the `checked_` form
            /// to get an error instead.
            fn $method(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
                self.$checked(rhs).expect("variable sets must match")
            }
        }
        impl $tr<LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.neg_ref()
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.neg_ref()
    }
}
