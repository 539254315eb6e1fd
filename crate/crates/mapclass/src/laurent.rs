//! Exact bivariate Laurent polynomials in `q` and `t`.
//!
//! Exponents are rationals kept in lowest terms (the rescaled braid
//! representations live in an extension `q^{1/d}, t^{1/d}` whose degree `d`
//! depends on the strand count, so a single engine with rational exponents
//! serves every rank). Coefficients are arbitrary-precision integers, and
//! every value is kept in a canonical normal form: terms sorted by
//! `(q-exponent, t-exponent)`, no repeated exponent pairs, no zero terms.
//! Equality of normal forms is the equality test underlying every
//! word-problem decision in this crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational exponent, always in lowest terms with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Exponent(Ratio<i64>);

impl Exponent {
    /// Builds `num/den` reduced to lowest terms. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Exponent(Ratio::new(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        Exponent(Ratio::from_integer(n))
    }

    pub fn zero() -> Self {
        Exponent(Ratio::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// Scales the exponent by an integer (used for monomial powers).
    pub fn scale(&self, k: i64) -> Self {
        Exponent(self.0 * Ratio::from_integer(k))
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 + rhs.0)
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 - rhs.0)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent(-self.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "({}/{})", self.numer(), self.denom())
        }
    }
}

/// A single term `coeff * q^qexp * t^texp`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial {
    pub coeff: BigInt,
    pub qexp: Exponent,
    pub texp: Exponent,
}

impl Monomial {
    pub fn new(coeff: impl Into<BigInt>, qexp: Exponent, texp: Exponent) -> Self {
        Monomial { coeff: coeff.into(), qexp, texp }
    }

    pub fn one() -> Self {
        Monomial::new(1, Exponent::zero(), Exponent::zero())
    }

    /// Units of the coefficient ring are exactly `±1`.
    pub fn is_unit(&self) -> bool {
        self.coeff == BigInt::one() || self.coeff == -BigInt::one()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            coeff: &self.coeff * &other.coeff,
            qexp: self.qexp + other.qexp,
            texp: self.texp + other.texp,
        }
    }

    /// Exact `k`-th power; negative `k` requires a unit coefficient.
    pub fn pow(&self, k: i64) -> Result<Monomial> {
        if k < 0 && !self.is_unit() {
            return Err(Error::NonUnitPower);
        }
        let coeff = if self.coeff == BigInt::one() {
            BigInt::one()
        } else if self.coeff == -BigInt::one() {
            if k % 2 == 0 { BigInt::one() } else { -BigInt::one() }
        } else {
            num_traits::pow::pow(self.coeff.clone(), k as usize)
        };
        Ok(Monomial { coeff, qexp: self.qexp.scale(k), texp: self.texp.scale(k) })
    }

    /// Multiplicative inverse of a unit monomial.
    pub fn inverse(&self) -> Result<Monomial> {
        self.pow(-1)
    }

    fn key(&self) -> (Exponent, Exponent) {
        (self.qexp, self.texp)
    }
}

/// Normalized sum of monomials; the scalar ring of every matrix in this crate.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: Vec<Monomial>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::from(Monomial::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::from(Monomial::new(c, Exponent::zero(), Exponent::zero()))
    }

    /// The variable `q`.
    pub fn q() -> Self {
        LaurentPoly::from(Monomial::new(1, Exponent::from_int(1), Exponent::zero()))
    }

    /// The variable `t`.
    pub fn t() -> Self {
        LaurentPoly::from(Monomial::new(1, Exponent::zero(), Exponent::from_int(1)))
    }

    pub fn q_pow(e: Exponent) -> Self {
        LaurentPoly::from(Monomial::new(1, e, Exponent::zero()))
    }

    pub fn t_pow(e: Exponent) -> Self {
        LaurentPoly::from(Monomial::new(1, Exponent::zero(), e))
    }

    /// Normalizes an arbitrary term list: sort, merge, drop zeros.
    pub fn from_terms(terms: Vec<Monomial>) -> Self {
        let mut map: BTreeMap<(Exponent, Exponent), BigInt> = BTreeMap::new();
        for m in terms {
            if !m.coeff.is_zero() {
                *map.entry(m.key()).or_insert_with(BigInt::zero) += m.coeff;
            }
        }
        LaurentPoly {
            terms: map
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((q, t), c)| Monomial { coeff: c, qexp: q, texp: t })
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && {
            let m = &self.terms[0];
            m.coeff.is_one() && m.qexp.is_zero() && m.texp.is_zero()
        }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    /// Multiplies every term by a monomial (unit scaling is the common case).
    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        if m.coeff.is_zero() {
            return LaurentPoly::zero();
        }
        let terms = self.terms.iter().map(|x| x.mul(m)).collect();
        // a monomial multiple preserves order and distinctness
        LaurentPoly { terms }
    }

    /// Exact division: `Some(self / den)` when `den` divides `self`, else `None`.
    ///
    /// Lead-term elimination in the `(q, t)` lexicographic order. Division by
    /// a general polynomial is only ever needed when clearing the pivot at the
    /// end of matrix inversion; a `None` there signals a non-unit input matrix.
    pub fn div_exact(&self, den: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!den.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let den_lead = den.terms.last().expect("nonzero");
        let den_trail = den.terms.first().expect("nonzero");
        let trail_bound = (
            self.terms[0].qexp - den_trail.qexp,
            self.terms[0].texp - den_trail.texp,
        );
        let mut rem = self.clone();
        let mut quot: Vec<Monomial> = Vec::new();
        while !rem.is_zero() {
            let lead = rem.terms.last().expect("nonzero");
            let qk = (lead.qexp - den_lead.qexp, lead.texp - den_lead.texp);
            if qk < trail_bound {
                return None;
            }
            let (quo, r) = lead.coeff.div_rem(&den_lead.coeff);
            if !r.is_zero() {
                return None;
            }
            let qm = Monomial { coeff: quo, qexp: qk.0, texp: qk.1 };
            rem = &rem - &den.mul_monomial(&qm);
            quot.push(qm);
        }
        Some(LaurentPoly::from_terms(quot))
    }

    /// GCD of all coefficients (zero for the zero polynomial).
    pub(crate) fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for m in &self.terms {
            g = g.gcd(&m.coeff);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise minimum of the exponent pairs over all terms.
    pub(crate) fn min_exponents(&self) -> Option<(Exponent, Exponent)> {
        let mut it = self.terms.iter();
        let first = it.next()?;
        let mut qmin = first.qexp;
        let mut tmin = first.texp;
        for m in it {
            if m.qexp < qmin {
                qmin = m.qexp;
            }
            if m.texp < tmin {
                tmin = m.texp;
            }
        }
        Some((qmin, tmin))
    }

    /// Divides all coefficients by `d`, which must divide each exactly.
    pub(crate) fn div_int_exact(&self, d: &BigInt) -> LaurentPoly {
        debug_assert!(!d.is_zero());
        let terms = self
            .terms
            .iter()
            .map(|m| {
                let (q, r) = m.coeff.div_rem(d);
                debug_assert!(r.is_zero());
                Monomial { coeff: q, qexp: m.qexp, texp: m.texp }
            })
            .collect();
        LaurentPoly { terms }
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        if m.coeff.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { terms: vec![m] }
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        // merge of two sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let a = &self.terms[i];
            let b = &rhs.terms[j];
            match a.key().cmp(&b.key()) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(Monomial { coeff: c, qexp: a.qexp, texp: a.texp });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        LaurentPoly { terms: out }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|m| Monomial { coeff: -&m.coeff, qexp: m.qexp, texp: m.texp })
                .collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            return self.mul_monomial(&rhs.terms[0]);
        }
        if self.terms.len() == 1 {
            return rhs.mul_monomial(&self.terms[0]);
        }
        let mut map: BTreeMap<(Exponent, Exponent), BigInt> = BTreeMap::new();
        for a in &self.terms {
            for b in &rhs.terms {
                let key = (a.qexp + b.qexp, a.texp + b.texp);
                let prod = &a.coeff * &b.coeff;
                *map.entry(key).or_insert_with(BigInt::zero) += prod;
            }
        }
        LaurentPoly {
            terms: map
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((q, t), c)| Monomial { coeff: c, qexp: q, texp: t })
                .collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Canonical text form: terms joined by `" + "`, each `c*q^(a/b)*t^(e/f)`
/// with factors of exponent zero dropped and unit exponents omitted.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for m in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", m.coeff)?;
            for (var, e) in [("q", m.qexp), ("t", m.texp)] {
                if !e.is_zero() {
                    if e.is_one() {
                        write!(f, "*{var}")?;
                    } else {
                        write!(f, "*{var}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
