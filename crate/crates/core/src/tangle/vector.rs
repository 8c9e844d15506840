use super::TangleExpr;
use crate::error::Result;
use crate::laurent::{BracketVector, LaurentPoly, Mat2};

/// `br(n)` in closed form: `f = A^n`, `g = sum_{k<n} (-1)^k A^(n-2-4k)`,
/// which is `M+^n` applied to `(1, 0)`.
fn integer_vector(n: i64) -> Result<BracketVector> {
    if n < 0 {
        return Ok(integer_vector(n.checked_neg().ok_or(crate::Error::Overflow)?)?.conjugate());
    }
    let e = i32::try_from(n).map_err(|_| crate::Error::Overflow)?;
    let mut g = Vec::with_capacity(n as usize);
    for k in 0..e {
        let exp = e.checked_sub(2).and_then(|x| x.checked_sub(k.checked_mul(4)?)).ok_or(crate::Error::Overflow)?;
        g.push((exp, if k % 2 == 0 { 1 } else { -1 }));
    }
    Ok(BracketVector::new(LaurentPoly::monomial(1, e), LaurentPoly::try_from_terms(g)?))
}

fn sum_vectors(t: &BracketVector, u: &BracketVector) -> Result<BracketVector> {
    let delta = LaurentPoly::delta();
    let f = t.f.checked_mul(&u.f)?;
    let g = t.f.checked_mul(&u.g)?.checked_add(&t.g.checked_mul(&u.f)?)?.checked_add(&delta.checked_mul(&t.g)?.checked_mul(&u.g)?)?;
    Ok(BracketVector::new(f, g))
}

fn vsum_vectors(t: &BracketVector, u: &BracketVector) -> Result<BracketVector> {
    let delta = LaurentPoly::delta();
    let f = t.f.checked_mul(&u.g)?.checked_add(&t.g.checked_mul(&u.f)?)?.checked_add(&delta.checked_mul(&t.f)?.checked_mul(&u.f)?)?;
    let g = t.g.checked_mul(&u.g)?;
    Ok(BracketVector::new(f, g))
}

fn inverse_vector(t: &BracketVector) -> BracketVector {
    BracketVector::new(t.g.conjugate(), t.f.conjugate())
}

/// `br(T) = (f, g)` with `<T> = f <0> + g <inf>`, evaluated on the tree.
pub fn bracket_vector(t: &TangleExpr) -> Result<BracketVector> {
    use TangleExpr::*;
    Ok(match t {
        Int(n) => integer_vector(*n)?,
        Infinity => BracketVector::infinity_tangle(),
        Sum(a, b) => sum_vectors(&bracket_vector(a)?, &bracket_vector(b)?)?,
        VSum(a, b) => vsum_vectors(&bracket_vector(a)?, &bracket_vector(b)?)?,
        Prod(a, b) => sum_vectors(&inverse_vector(&bracket_vector(a)?), &bracket_vector(b)?)?,
        Inv(a) => inverse_vector(&bracket_vector(a)?),
        Mirror(a) => bracket_vector(a)?.conjugate(),
        Omega(a) => Mat2::omega().apply(&bracket_vector(a)?),
        OmegaBar(a) => Mat2::omega_inv().apply(&bracket_vector(a)?),
    })
}

/// Brackets of the numerator and denominator closures: `(delta f + g, f + delta g)`.
pub fn closure_brackets(t: &TangleExpr) -> Result<(LaurentPoly, LaurentPoly)> {
    let v = bracket_vector(t)?;
    let delta = LaurentPoly::delta();
    Ok((delta.checked_mul(&v.f)?.checked_add(&v.g)?, v.f.checked_add(&delta.checked_mul(&v.g)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::parse_tangle;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn br(s: &str) -> BracketVector {
        bracket_vector(&parse_tangle(s).unwrap()).unwrap()
    }

    #[test]
    fn small_integers() {
        assert_eq!(br("0"), BracketVector::zero_tangle());
        assert_eq!(br("inf"), BracketVector::infinity_tangle());
        assert_eq!(br("1"), BracketVector::new(p("A"), p("A^-1")));
        assert_eq!(br("2"), BracketVector::new(p("A^2"), p("1 - A^-4")));
        assert_eq!(br("-1"), BracketVector::new(p("A^-1"), p("A")));
    }

    #[test]
    fn integer_closed_form_matches_matrix_power() {
        for n in -7..=7 {
            let m = Mat2::m_plus().pow(n).unwrap().apply(&BracketVector::zero_tangle());
            assert_eq!(integer_vector(n).unwrap(), m, "n = {n}");
        }
    }

    #[test]
    fn twisted_infinity() {
        assert_eq!(br("inf - 2"), BracketVector::new(p("0"), p("A^6")));
        assert_eq!(br("inf + 2"), BracketVector::new(p("0"), p("A^-6")));
        assert_eq!(br("(inf - 2)^w"), BracketVector::new(p("A^3"), p("A - A^-3 + A^-7")));
        assert_eq!(br("(inf - 2)^w"), br("3"));
        assert_eq!(br("((inf-2+2)*1)+2"), br("3"));
        assert_eq!(br("inf * 1"), br("1"));
        assert_eq!(br("0^w^wb"), BracketVector::zero_tangle());
    }

    #[test]
    fn product_and_inverse() {
        assert_eq!(br("5 . 1 . 2"), br("(inf - 2)^w^w"));
        assert_eq!(br("2 . 0"), br("2^-1"));
        assert_eq!(br("2^-1^-1"), br("2"));
        assert_eq!(br("3 + -3"), br("0"));
    }

    #[test]
    fn closures() {
        let delta = LaurentPoly::delta();
        assert_eq!(closure_brackets(&parse_tangle("0").unwrap()).unwrap(), (delta.clone(), LaurentPoly::one()));
        assert_eq!(closure_brackets(&parse_tangle("inf * 1").unwrap()).unwrap().0, p("-A^3"));
        let (_, d2) = closure_brackets(&parse_tangle("2").unwrap()).unwrap();
        assert_eq!(d2, p("A^2") + &delta * p("1 - A^-4"));
        assert_eq!(d2, p("A^-6"));
    }
}
