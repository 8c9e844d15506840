//! Kauffman bracket by state sum, the writhe-normalized bracket, and the
//! Jones polynomial.

use std::fmt;

use crate::diagram::fragment::Fragment;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::statesum::{self, Connectivity};

pub use crate::statesum::DEFAULT_CAP;

/// `<d>`, summed over all `2^n` smoothing states. Fails with
/// [`Error::CapExceeded`] above [`DEFAULT_CAP`] crossings.
pub fn kauffman_bracket(d: &Diagram) -> Result<LaurentPoly> {
    kauffman_bracket_capped(d, DEFAULT_CAP)
}

pub fn kauffman_bracket_capped(d: &Diagram, cap: usize) -> Result<LaurentPoly> {
    if d.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let w = Fragment::from_diagram(d).wiring()?;
    let hist = statesum::tally(&w, cap)?;
    hist.polynomial(Connectivity::Closed, w.free_loops, -1)
}

/// `(-A)^(-3w)`.
pub fn writhe_factor(writhe: i64) -> Result<LaurentPoly> {
    let e = writhe.checked_mul(-3).and_then(|e| i32::try_from(e).ok()).ok_or(Error::Overflow)?;
    let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(LaurentPoly::monomial(sign, e))
}

/// `(-A)^(-3 w(d)) <d>`, invariant under all three Reidemeister moves.
pub fn normalized_bracket(d: &Diagram) -> Result<LaurentPoly> {
    normalized_bracket_capped(d, DEFAULT_CAP)
}

pub fn normalized_bracket_capped(d: &Diagram, cap: usize) -> Result<LaurentPoly> {
    writhe_factor(d.writhe())?.checked_mul(&kauffman_bracket_capped(d, cap)?)
}

pub fn jones(d: &Diagram) -> Result<JonesPoly> {
    jones_capped(d, DEFAULT_CAP)
}

pub fn jones_capped(d: &Diagram, cap: usize) -> Result<JonesPoly> {
    Ok(JonesPoly::from_normalized_bracket(&normalized_bracket_capped(d, cap)?))
}

/// Jones polynomial, stored as a Laurent polynomial in `q = t^(1/4)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JonesPoly {
    q: LaurentPoly,
}

impl JonesPoly {
    /// Substitutes `A = t^(-1/4)`, i.e. `A^k -> q^-k`.
    pub fn from_normalized_bracket(x: &LaurentPoly) -> Self {
        Self { q: x.conjugate() }
    }

    pub fn from_q_poly(q: LaurentPoly) -> Self {
        Self { q }
    }

    /// The 2-component unlink value `-t^(-1/2) - t^(1/2)`.
    pub fn unlink2() -> Self {
        Self::from_q_poly(LaurentPoly::from_terms([(-2, -1), (2, -1)]))
    }

    pub fn q_poly(&self) -> &LaurentPoly {
        &self.q
    }

    /// Multiplies by `t^k`.
    pub fn times_t_power(&self, k: i32) -> Result<Self> {
        Ok(Self { q: self.q.shift(4 * k)? })
    }
}

fn t_power(q_exp: i32) -> String {
    let (mut num, mut den) = (q_exp, 4);
    while den > 1 && num % 2 == 0 {
        num /= 2;
        den /= 2;
    }
    match (num, den) {
        (1, 1) => "t".to_string(),
        (n, 1) => format!("t^{n}"),
        (n, d) => format!("t^{n}/{d}"),
    }
}

/// Terms in descending powers of `t`, with quarter-integer exponents
/// written in lowest terms: `-t^4 + t^3 + t`, `-t^1/2 - t^-1/2`.
impl fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.q.terms().rev().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                f.write_str(&t_power(e))?;
            } else {
                write!(f, "{mag}{}", t_power(e))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Handedness;
    use crate::fixtures;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn trefoil_values() {
        let r = fixtures::right_trefoil();
        assert_eq!(kauffman_bracket(&r).unwrap(), p("A^-7 - A^-3 - A^5"));
        assert_eq!(normalized_bracket(&r).unwrap(), p("-A^-16 + A^-12 + A^-4"));
        assert_eq!(jones(&r).unwrap().to_string(), "-t^4 + t^3 + t");
        let l = fixtures::left_trefoil();
        assert_eq!(kauffman_bracket(&l).unwrap(), p("A^7 - A^3 - A^-5"));
    }

    #[test]
    fn unknots_and_unlinks() {
        assert_eq!(kauffman_bracket(&Diagram::unknot()).unwrap(), LaurentPoly::one());
        assert_eq!(jones(&Diagram::unknot()).unwrap().to_string(), "1");
        assert_eq!(jones(&Diagram::unlink(2)).unwrap(), JonesPoly::unlink2());
        assert_eq!(JonesPoly::unlink2().to_string(), "-t^1/2 - t^-1/2");
        assert_eq!(kauffman_bracket(&Diagram::unlink(0)), Err(Error::EmptyDiagram));
    }

    #[test]
    fn curl_factors() {
        let right = Diagram::unknot().disjoint_union(&fixtures::right_trefoil()).add_curl(1, Handedness::Right).unwrap();
        let base = kauffman_bracket(&Diagram::unknot().disjoint_union(&fixtures::right_trefoil())).unwrap();
        assert_eq!(kauffman_bracket(&right).unwrap(), p("-A^3") * &base);
        let c = Diagram::parse("X[1,1,2,2] components: (1 2)").unwrap();
        assert_eq!(kauffman_bracket(&c).unwrap(), p("-A^3"));
        assert_eq!(normalized_bracket(&c).unwrap(), LaurentPoly::one());
        let c = Diagram::parse("X[1,2,2,1] components: (1 2)").unwrap();
        assert_eq!(kauffman_bracket(&c).unwrap(), p("-A^-3"));
    }

    #[test]
    fn cap_is_enforced() {
        let r = fixtures::right_trefoil();
        assert_eq!(kauffman_bracket_capped(&r, 2), Err(Error::CapExceeded { crossings: 3, cap: 2 }));
    }

    #[test]
    fn jones_rendering() {
        let j = JonesPoly::from_q_poly(LaurentPoly::from_terms([(3, 2), (-6, -1), (0, 4), (-4, 1)]));
        assert_eq!(j.to_string(), "2t^3/4 + 4 + t^-1 - t^-3/2");
        assert_eq!(JonesPoly::unlink2().times_t_power(6).unwrap().to_string(), "-t^13/2 - t^11/2");
    }

    #[test]
    fn writhe_factor_sign() {
        assert_eq!(writhe_factor(1).unwrap(), p("-A^-3"));
        assert_eq!(writhe_factor(-2).unwrap(), p("A^6"));
    }
}
