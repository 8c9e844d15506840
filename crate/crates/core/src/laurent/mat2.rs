use std::fmt;

use super::LaurentPoly;
use crate::error::{Error, Result};

/// A pair `(f, g)`: the coefficients of a tangle's bracket in the basis
/// `{<0>, <inf>}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketVector {
    pub f: LaurentPoly,
    pub g: LaurentPoly,
}

impl BracketVector {
    pub fn new(f: LaurentPoly, g: LaurentPoly) -> Self {
        Self { f, g }
    }

    /// `br(0) = (1, 0)`.
    pub fn zero_tangle() -> Self {
        Self::new(LaurentPoly::one(), LaurentPoly::zero())
    }

    /// `br(inf) = (0, 1)`.
    pub fn infinity_tangle() -> Self {
        Self::new(LaurentPoly::zero(), LaurentPoly::one())
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.f.conjugate(), self.g.conjugate())
    }
}

impl fmt::Display for BracketVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f, self.g)
    }
}

/// Row-major 2x2 matrix `[[a, b], [c, d]]` over Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    pub c: LaurentPoly,
    pub d: LaurentPoly,
}

fn mono(c: i64, e: i32) -> LaurentPoly {
    LaurentPoly::monomial(c, e)
}

impl Mat2 {
    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one())
    }

    /// Adding a `+1` twist to a tangle: `br(T + 1) = M+ . br(T)`.
    pub fn m_plus() -> Self {
        Self::new(mono(1, 1), LaurentPoly::zero(), mono(1, -1), mono(-1, -3))
    }

    /// `M+^-1 = [[A^-1, 0], [A, -A^3]]`, so `br(T - 1) = M+^-1 . br(T)`.
    pub fn m_plus_inv() -> Self {
        Self::new(mono(1, -1), LaurentPoly::zero(), mono(1, 1), mono(-1, 3))
    }

    /// Vertical sum with the tangle `1`: `br(T * 1) = M* . br(T)`.
    pub fn m_star() -> Self {
        Self::new(mono(-1, 3), mono(1, 1), LaurentPoly::zero(), mono(1, -1))
    }

    /// `Omega = M+^2 M* M+^2`, the action of `T -> ((T+2)*1)+2` on bracket vectors.
    pub fn omega() -> Self {
        let m2 = Self::m_plus().mul(&Self::m_plus());
        m2.mul(&Self::m_star()).mul(&m2)
    }

    pub fn omega_inv() -> Self {
        Self::omega().inverse().expect("Omega has unit determinant")
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let e = |x: &LaurentPoly, y: &LaurentPoly, z: &LaurentPoly, w: &LaurentPoly| {
            x.checked_mul(y)?.checked_add(&z.checked_mul(w)?)
        };
        Ok(Self::new(
            e(&self.a, &rhs.a, &self.b, &rhs.c)?,
            e(&self.a, &rhs.b, &self.b, &rhs.d)?,
            e(&self.c, &rhs.a, &self.d, &rhs.c)?,
            e(&self.c, &rhs.b, &self.d, &rhs.d)?,
        ))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("coefficient overflow")
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    pub fn det(&self) -> LaurentPoly {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Exact inverse; the determinant must be `±A^k`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        let inv = det.invert_monomial().map_err(|_| Error::NotInvertible(det.to_string()))?;
        Ok(Self::new(&self.d * &inv, -(&self.b * &inv), -(&self.c * &inv), &self.a * &inv))
    }

    /// `self^n`; negative `n` goes through the inverse.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.checked_mul(&base)?;
        }
        Ok(acc)
    }

    pub fn apply(&self, v: &BracketVector) -> BracketVector {
        BracketVector::new(&self.a * &v.f + &self.b * &v.g, &self.c * &v.f + &self.d * &v.g)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn m_plus_inverse_and_det() {
        assert_eq!(Mat2::m_plus().det(), p("-A^-2"));
        assert_eq!(Mat2::m_plus().inverse().unwrap(), Mat2::m_plus_inv());
        assert_eq!(Mat2::m_plus().mul(&Mat2::m_plus_inv()), Mat2::identity());
    }

    #[test]
    fn omega_entries() {
        let om = Mat2::omega();
        assert_eq!(om.a, p("-A^-1 + A^3 - A^7"));
        assert_eq!(om.b, p("A^-3"));
        assert_eq!(om.c, p("-A^-11 + 2A^-7 - 2A^-3 + 2A - A^5"));
        assert_eq!(om.d, p("A^-13 - A^-9 + A^-5"));
        assert_eq!(om.det(), p("-A^-6"));
        assert_eq!(Mat2::omega_inv().a, p("-A^-7 + A^-3 - A"));
        assert_eq!(om.mul(&Mat2::omega_inv()), Mat2::identity());
    }

    #[test]
    fn non_invertible() {
        let m = Mat2::new(p("1 + A"), p("0"), p("0"), p("1"));
        assert!(matches!(m.inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn pow_negative() {
        assert_eq!(Mat2::m_plus().pow(-3).unwrap(), Mat2::m_plus_inv().pow(3).unwrap());
        assert_eq!(Mat2::m_plus().pow(0).unwrap(), Mat2::identity());
    }

    #[test]
    fn apply_twist() {
        let v = Mat2::m_plus().pow(2).unwrap().apply(&BracketVector::zero_tangle());
        assert_eq!(v, BracketVector::new(p("A^2"), p("1 - A^-4")));
    }
}
