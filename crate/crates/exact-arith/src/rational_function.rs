//! Quotients of Laurent polynomials with lazy normalization.
//!
//! Only the monomial content of the denominator is moved into the numerator
//! and the denominator is made monic; no polynomial gcd is ever computed.
//! Whenever a quotient is built, one exact-division probe decides whether it
//! is in fact a Laurent polynomial, in which case the denominator becomes 1;
//! a second probe cancels a numerator that divides the denominator.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{ArithError, Result};
use crate::laurent::LaurentPolynomial;
use crate::monomial::Monomial;
use crate::vars::VariableSet;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

/// Variable bindings for [`RationalFunction::substitute`], keyed by the name
/// of the variable being replaced.
pub type Bindings = BTreeMap<String, RationalFunction>;

impl RationalFunction {
    /// Builds `num / den`, normalizes it and probes for Laurent-ness.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.vars() != num.vars() {
            return Err(ArithError::Alignment {
                left: num.vars().to_string(),
                right: den.vars().to_string(),
            });
        }
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let vars = num.vars().clone();
        if num.is_zero() {
            return Ok(Self::from_laurent(LaurentPolynomial::zero(&vars)));
        }
        let content = den.monomial_content();
        let (_, lc) = den.leading_term().unwrap();
        let scale = lc.recip();
        let shift = content.inv();
        let den = den.mul_term(&shift, &scale);
        let num = num.mul_term(&shift, &scale);
        if den.is_one() {
            return Ok(Self::from_laurent(num));
        }
        if let Some(q) = num.exact_divide(&den)? {
            return Ok(Self::from_laurent(q));
        }
        // num = c m p with p | den gives c m / (den / p).
        if num.len() > 1 && num.len() <= den.len() {
            let m = num.monomial_content();
            let (_, c) = num.leading_term().unwrap();
            let c = c.clone();
            let p = num.mul_term(&m.inv(), &c.recip());
            if let Some(q) = den.exact_divide(&p)? {
                let top = LaurentPolynomial::monomial(&vars, m, c);
                return Self::new(top, q);
            }
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_laurent(p: LaurentPolynomial) -> Self {
        let den = LaurentPolynomial::one(p.vars());
        RationalFunction { num: p, den }
    }

    pub fn zero(vars: &VariableSet) -> Self {
        Self::from_laurent(LaurentPolynomial::zero(vars))
    }

    pub fn one(vars: &VariableSet) -> Self {
        Self::from_laurent(LaurentPolynomial::one(vars))
    }

    pub fn from_int(vars: &VariableSet, c: i64) -> Self {
        Self::from_laurent(LaurentPolynomial::from_int(vars, c))
    }

    pub fn var(vars: &VariableSet, name: &str) -> Result<Self> {
        Ok(Self::from_laurent(LaurentPolynomial::var(vars, name)?))
    }

    pub fn vars(&self) -> &VariableSet {
        self.num.vars()
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial equal to `self`, if there is one.
    pub fn to_laurent(&self) -> Option<LaurentPolynomial> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.exact_divide(&self.den).ok().flatten()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (n1, d1, n2, d2) = (&self.num, &self.den, &other.num, &other.den);
        if d1 == d2 {
            if d1.is_one() {
                return Ok(Self::from_laurent(n1.checked_add(n2)?));
            }
            return Self::new(n1.checked_add(n2)?, d1.clone());
        }
        if d2.is_one() {
            return Self::new(n1.checked_add(&n2.checked_mul(d1)?)?, d1.clone());
        }
        if d1.is_one() {
            return Self::new(n2.checked_add(&n1.checked_mul(d2)?)?, d2.clone());
        }
        if let Some(q) = d1.exact_divide(d2)? {
            return Self::new(n1.checked_add(&n2.checked_mul(&q)?)?, d1.clone());
        }
        if let Some(q) = d2.exact_divide(d1)? {
            return Self::new(n2.checked_add(&n1.checked_mul(&q)?)?, d2.clone());
        }
        Self::new(
            n1.checked_mul(d2)?.checked_add(&n2.checked_mul(d1)?)?,
            d1.checked_mul(d2)?,
        )
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self::from_laurent(self.num.checked_mul(&other.num)?));
        }
        let mut n1 = self.num.clone();
        let mut d1 = self.den.clone();
        let mut n2 = other.num.clone();
        let mut d2 = other.den.clone();
        if !d2.is_one() {
            if let Some(q) = n1.exact_divide(&d2)? {
                n1 = q;
                d2 = LaurentPolynomial::one(d2.vars());
            }
        }
        if !d1.is_one() {
            if let Some(q) = n2.exact_divide(&d1)? {
                n2 = q;
                d1 = LaurentPolynomial::one(d1.vars());
            }
        }
        Self::new(n1.checked_mul(&n2)?, d1.checked_mul(&d2)?)
    }

    pub fn mul_laurent(&self, p: &LaurentPolynomial) -> Result<Self> {
        self.mul(&Self::from_laurent(p.clone()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = e as u32;
        if self.den.is_one() {
            return Ok(Self::from_laurent(self.num.pow(e)));
        }
        Ok(RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Value equality by cross multiplication.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        if self.den == other.den {
            return Ok(self.num == other.num);
        }
        Ok(self.num.checked_mul(&other.den)? == other.num.checked_mul(&self.den)?)
    }

    pub fn embed(&self, target: &VariableSet) -> Result<Self> {
        Ok(RationalFunction {
            num: self.num.embed(target)?,
            den: self.den.embed(target)?,
        })
    }

    /// Whether the value depends on `name` (checked on the stored parts).
    pub fn depends_on(&self, name: &str) -> bool {
        self.num.depends_on(name) || self.den.depends_on(name)
    }

    /// Replaces variables by rational functions over `out`. Variables without
    /// a binding are carried over by name and must exist in `out`.
    pub fn substitute(&self, bindings: &Bindings, out: &VariableSet) -> Result<Self> {
        let plan = SubstitutionPlan::new(self.vars(), bindings, out)?;
        let n = plan.apply(&self.num)?;
        if self.den.is_one() {
            return Ok(n);
        }
        let d = plan.apply(&self.den)?;
        n.div(&d)
    }

    /// Substitution from a list of pairs; a name bound twice to different
    /// values is a conflict.
    pub fn substitute_pairs(
        &self,
        pairs: &[(String, RationalFunction)],
        out: &VariableSet,
    ) -> Result<Self> {
        self.substitute(&bindings_from_pairs(pairs)?, out)
    }
}

pub fn bindings_from_pairs(pairs: &[(String, RationalFunction)]) -> Result<Bindings> {
    let mut map = Bindings::new();
    for (k, v) in pairs {
        if let Some(prev) = map.get(k) {
            if !prev.equals(v)? {
                return Err(ArithError::BindingConflict(k.clone()));
            }
        }
        map.insert(k.clone(), v.clone());
    }
    Ok(map)
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.vars(), self)
    }
}

enum Image {
    /// `c * m`: handled inside the term product.
    Monomial(Monomial, BigRational),
    /// `num / den` with at least one non-monomial part.
    General {
        num: LaurentPolynomial,
        den: LaurentPolynomial,
    },
}

impl Image {
    fn power(cache: &mut Vec<LaurentPolynomial>, base: &LaurentPolynomial, e: usize) -> LaurentPolynomial {
        while cache.len() <= e {
            let next = match cache.last() {
                None => LaurentPolynomial::one(base.vars()),
                Some(p) => p * base,
            };
            cache.push(next);
        }
        cache[e].clone()
    }
}

struct SubstitutionPlan {
    out: VariableSet,
    images: Vec<Image>,
}

impl SubstitutionPlan {
    fn new(src: &VariableSet, bindings: &Bindings, out: &VariableSet) -> Result<Self> {
        for k in bindings.keys() {
            if !src.contains(k) {
                return Err(ArithError::UnknownVariable(k.clone()));
            }
        }
        let mut images = Vec::with_capacity(src.len());
        for name in src.names() {
            let image = match bindings.get(name) {
                Some(rf) => {
                    let rf = rf.embed(out)?;
                    let (n, d) = (rf.num, rf.den);
                    match (d.is_one(), n.as_monomial()) {
                        (true, Some((m, c))) => Image::Monomial(m.clone(), c.clone()),
                        _ if n.is_zero() => Image::Monomial(Monomial::one(out.len()), BigRational::from_integer(0.into())),
                        _ => Image::General {
                            num: n,
                            den: d,
                        },
                    }
                }
                None => {
                    let j = out
                        .position(name)
                        .ok_or_else(|| ArithError::UnknownVariable(name.clone()))?;
                    Image::Monomial(Monomial::var(out.len(), j), BigRational::one())
                }
            };
            images.push(image);
        }
        Ok(SubstitutionPlan {
            out: out.clone(),
            images,
        })
    }

    fn apply(&self, p: &LaurentPolynomial) -> Result<RationalFunction> {
        let out = &self.out;
        if p.is_zero() {
            return Ok(RationalFunction::zero(out));
        }
        let (lo, hi) = p.exponent_bounds().unwrap();
        let inverts_general = self.images.iter().enumerate().any(|(i, img)| {
            matches!(img, Image::General { num, .. } if lo[i] < 0 && num.as_monomial().is_none())
        });
        if inverts_general {
            return self.apply_termwise(p);
        }
        let mut caches: HashMap<usize, (Vec<LaurentPolynomial>, Vec<LaurentPolynomial>)> = HashMap::new();
        let mut terms: Vec<(Monomial, BigRational)> = Vec::new();
        for (m, c) in p.terms() {
            let mut mono = Monomial::one(out.len());
            let mut coeff = c.clone();
            let mut factors: Vec<LaurentPolynomial> = Vec::new();
            for (i, &e) in m.exps().iter().enumerate() {
                match &self.images[i] {
                    Image::Monomial(mm, cc) => {
                        if e == 0 {
                            continue;
                        }
                        if num_traits::Zero::is_zero(cc) {
                            if e < 0 {
                                return Err(ArithError::DivisionByZero);
                            }
                            coeff = BigRational::from_integer(0.into());
                            continue;
                        }
                        mono = mono.mul(&mm.pow(e));
                        coeff *= pow_signed(cc, e);
                    }
                    Image::General { num, den, .. } => {
                        let (np, dp) = caches.entry(i).or_default();
                        let a = (e - lo[i]) as usize;
                        let b = (hi[i] - e) as usize;
                        if a > 0 {
                            factors.push(Image::power(np, num, a));
                        }
                        if b > 0 && !den.is_one() {
                            factors.push(Image::power(dp, den, b));
                        }
                    }
                }
            }
            if num_traits::Zero::is_zero(&coeff) {
                continue;
            }
            let mut t = LaurentPolynomial::monomial(out, mono, coeff);
            factors.sort_by_key(|f| f.len());
            for f in &factors {
                t = &t * f;
            }
            terms.extend(t.terms().map(|(m, c)| (m.clone(), c.clone())));
        }
        let s = LaurentPolynomial::from_terms(out, terms);
        // Global factor  prod num^lo / den^hi  over the general images.
        let mut gnum = LaurentPolynomial::one(out);
        let mut gden = LaurentPolynomial::one(out);
        for (i, img) in self.images.iter().enumerate() {
            if let Image::General { num, den, .. } = img {
                let (l, h) = (lo[i], hi[i]);
                if l > 0 {
                    gnum = &gnum * &num.pow(l as u32);
                } else if l < 0 {
                    gden = &gden * &num.pow((-l) as u32);
                }
                if !den.is_one() {
                    if h > 0 {
                        gden = &gden * &den.pow(h as u32);
                    } else if h < 0 {
                        gnum = &gnum * &den.pow((-h) as u32);
                    }
                }
            }
        }
        if gden.is_one() {
            return Ok(RationalFunction::from_laurent(&s * &gnum));
        }
        RationalFunction::new(&s * &gnum, gden)
    }
}

impl SubstitutionPlan {
    /// Evaluates term by term and groups equal denominators, so numerators of
    /// images raised to negative powers are never multiplied together.
    fn apply_termwise(&self, p: &LaurentPolynomial) -> Result<RationalFunction> {
        let out = &self.out;
        let mut powers: HashMap<(usize, i32), RationalFunction> = HashMap::new();
        let mut groups: Vec<(LaurentPolynomial, LaurentPolynomial)> = Vec::new();
        for (m, c) in p.terms() {
            let mut mono = Monomial::one(out.len());
            let mut coeff = c.clone();
            let mut t = RationalFunction::one(out);
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &self.images[i] {
                    Image::Monomial(mm, cc) => {
                        if num_traits::Zero::is_zero(cc) {
                            if e < 0 {
                                return Err(ArithError::DivisionByZero);
                            }
                            coeff = BigRational::from_integer(0.into());
                            continue;
                        }
                        mono = mono.mul(&mm.pow(e));
                        coeff *= pow_signed(cc, e);
                    }
                    Image::General { num, den } => {
                        let f = match powers.get(&(i, e)) {
                            Some(f) => f.clone(),
                            None => {
                                let base = RationalFunction::new(num.clone(), den.clone())?;
                                let f = base.pow(e as i64)?;
                                powers.insert((i, e), f.clone());
                                f
                            }
                        };
                        t = t.mul(&f)?;
                    }
                }
            }
            if num_traits::Zero::is_zero(&coeff) {
                continue;
            }
            let n = t.num.mul_term(&mono, &coeff);
            match groups.iter_mut().find(|(d, _)| *d == t.den) {
                Some((_, acc)) => *acc = acc.checked_add(&n)?,
                None => groups.push((t.den, n)),
            }
        }
        let mut total = RationalFunction::zero(out);
        for (d, n) in groups {
            total = total.add(&RationalFunction::new(n, d)?)?;
        }
        Ok(total)
    }
}

fn pow_signed(c: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(c.clone(), e as usize)
    } else {
        num_traits::pow(c.recip(), (-e) as usize)
    }
}
