//! Exact Laurent polynomials in one variable with integer coefficients, and
//! 2x2 matrices over them.
//!
//! The operator impls (`+`, `-`, `*`) panic on `i64` coefficient overflow;
//! the `checked_*` methods report it as [`Error::Overflow`] instead. Nothing
//! ever wraps.

mod mat2;
mod text;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

pub use mat2::{BracketVector, Mat2};

/// A Laurent polynomial `sum c_k X^k`, `c_k` in `i64`, `k` in `i32`.
///
/// Stored as a sparse exponent -> coefficient map that never holds a zero
/// coefficient, so structural equality is polynomial equality and the zero
/// polynomial is the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// The variable itself, `X^1`.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// The loop value `delta = -A^-2 - A^2`.
    pub fn delta() -> Self {
        Self::from_terms([(-2, -1), (2, -1)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents. Panics on overflow.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        Self::try_from_terms(terms).expect("coefficient overflow")
    }

    pub fn try_from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Result<Self> {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: i32, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(coeff).ok_or(Error::Overflow)?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// The single term `(exp, coeff)` if this is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(i32, i64)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let terms = self
            .terms()
            .map(|(e, c)| c.checked_neg().map(|c| (e, c)).ok_or(Error::Overflow))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self { terms })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let e = e1.checked_add(e2).ok_or(Error::Overflow)?;
                let c = c1.checked_mul(c2).ok_or(Error::Overflow)?;
                out.add_term(e, c)?;
            }
        }
        Ok(out)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        self.checked_mul(&Self::constant(k))
    }

    /// `self^n` for `n >= 0`. Negative powers are an error; use
    /// [`invert_monomial`](Self::invert_monomial) for units.
    pub fn checked_pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::NegativeExponent(n));
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut n = n as u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Panicking form of [`checked_pow`](Self::checked_pow).
    pub fn pow(&self, n: u32) -> Self {
        self.checked_pow(n as i64).expect("coefficient overflow")
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: i32) -> Result<Self> {
        let terms = self
            .terms()
            .map(|(e, c)| e.checked_add(k).map(|e| (e, c)).ok_or(Error::Overflow))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self { terms })
    }

    /// The inverse of `±X^k`, which is `±X^-k`.
    pub fn invert_monomial(&self) -> Result<Self> {
        match self.as_monomial() {
            Some((e, c)) if c == 1 || c == -1 => {
                let e = e.checked_neg().ok_or(Error::Overflow)?;
                Ok(Self::monomial(c, e))
            }
            _ => Err(Error::NotUnitMonomial(self.to_string())),
        }
    }

    /// The substitution `X -> X^-1`.
    pub fn conjugate(&self) -> Self {
        Self {
            terms: self.terms().map(|(e, c)| (-e, c)).collect(),
        }
    }

    /// Substitutes `X -> X^k`.
    pub fn substitute_power(&self, k: i32) -> Result<Self> {
        let terms = self
            .terms()
            .map(|(e, c)| e.checked_mul(k).map(|e| (e, c)).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Self::try_from_terms(terms)
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no
    /// remainder in `Z[X, X^-1]`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let Some(dmax) = divisor.max_degree() else {
            return Err(Error::InexactDivision);
        };
        let dlead = divisor.coeff(dmax);
        let dmin = divisor.min_degree().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let floor = match self.min_degree() {
            Some(m) => m - dmin,
            None => return Ok(Self::zero()),
        };
        while let Some(rmax) = rem.max_degree() {
            let rlead = rem.coeff(rmax);
            let qe = rmax - dmax;
            if qe < floor || rlead % dlead != 0 {
                return Err(Error::InexactDivision);
            }
            let term = Self::monomial(rlead / dlead, qe);
            rem = rem.checked_sub(&divisor.checked_mul(&term)?)?;
            quot.add_term(qe, rlead / dlead)?;
        }
        Ok(quot)
    }

    /// Renders with the given variable name, terms ascending by exponent,
    /// e.g. `-A^-14 - A^-6 - 2A^-2`.
    pub fn render(&self, var: &str) -> String {
        text::render(self, var)
    }

    /// Parses the [`render`](Self::render) grammar (plus whitespace and an
    /// optional `*` between coefficient and variable).
    pub fn parse(input: &str, var: &str) -> Result<Self> {
        text::parse(input, var)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("A"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.render("A"))
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, "A")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("coefficient overflow")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.checked_neg().expect("coefficient overflow")
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c).expect("coefficient overflow");
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}
