//! Rewriting tangle expressions and building their diagrams.

use super::{TangleDiagram, TangleExpr};
use crate::diagram::fragment::Fragment;
use crate::error::Result;

/// Replaces every `T^w` by `((T + 2) * 1) + 2` and every `T^wb` by
/// `((T - 2) * -1) - 2`, recursively.
pub fn omega_rewrite(t: &TangleExpr) -> TangleExpr {
    use TangleExpr::*;
    match t {
        Int(_) | Infinity => t.clone(),
        Sum(a, b) => omega_rewrite(a).sum(omega_rewrite(b)),
        VSum(a, b) => omega_rewrite(a).vsum(omega_rewrite(b)),
        Prod(a, b) => omega_rewrite(a).prod(omega_rewrite(b)),
        Inv(a) => omega_rewrite(a).inv(),
        Mirror(a) => omega_rewrite(a).mirror(),
        Omega(a) => omega_rewrite(a).sum(Int(2)).vsum(Int(1)).sum(Int(2)),
        OmegaBar(a) => omega_rewrite(a).minus(Int(2)).vsum(Int(-1)).minus(Int(2)),
    }
}

fn flatten_sum(t: TangleExpr, out: &mut Vec<TangleExpr>) {
    match t {
        TangleExpr::Sum(a, b) => {
            flatten_sum(*a, out);
            flatten_sum(*b, out);
        }
        t => out.push(t),
    }
}

fn flatten_vsum(t: TangleExpr, out: &mut Vec<TangleExpr>) {
    match t {
        TangleExpr::VSum(a, b) => {
            flatten_vsum(*a, out);
            flatten_vsum(*b, out);
        }
        t => out.push(t),
    }
}

/// `T + 0 = T`, and neighbouring twists merge (`m + n` is the twist
/// `m + n`, cancelling opposite crossings).
fn make_sum(a: TangleExpr, b: TangleExpr) -> TangleExpr {
    let mut parts = Vec::new();
    flatten_sum(a, &mut parts);
    flatten_sum(b, &mut parts);
    let mut merged: Vec<TangleExpr> = Vec::new();
    for p in parts {
        match (merged.last_mut(), p) {
            (_, TangleExpr::Int(0)) => {}
            (Some(TangleExpr::Int(m)), TangleExpr::Int(n)) => match m.checked_add(n) {
                Some(0) => {
                    merged.pop();
                }
                Some(s) => *m = s,
                None => merged.push(TangleExpr::Int(n)),
            },
            (_, p) => merged.push(p),
        }
    }
    merged.into_iter().reduce(TangleExpr::sum).unwrap_or(TangleExpr::Int(0))
}

/// `T * inf = T`, and a vertical `1` next to a vertical `-1` cancels.
fn make_vsum(a: TangleExpr, b: TangleExpr) -> TangleExpr {
    let mut parts = Vec::new();
    flatten_vsum(a, &mut parts);
    flatten_vsum(b, &mut parts);
    let mut merged: Vec<TangleExpr> = Vec::new();
    for p in parts {
        match (merged.last(), &p) {
            (_, TangleExpr::Infinity) => {}
            (Some(TangleExpr::Int(m)), TangleExpr::Int(n)) if m.abs() == 1 && *m == -n => {
                merged.pop();
            }
            _ => merged.push(p),
        }
    }
    merged.into_iter().reduce(TangleExpr::vsum).unwrap_or(TangleExpr::Infinity)
}

fn mirror_simple(t: TangleExpr) -> TangleExpr {
    use TangleExpr::*;
    match t {
        Int(n) => n.checked_neg().map(Int).unwrap_or_else(|| Int(n).mirror()),
        Infinity => Infinity,
        Sum(a, b) => Sum(Box::new(mirror_simple(*a)), Box::new(mirror_simple(*b))),
        VSum(a, b) => VSum(Box::new(mirror_simple(*a)), Box::new(mirror_simple(*b))),
        other => other.mirror(),
    }
}

/// Reflection in the NW-SE diagonal: it swaps `0` and `inf`, fixes the
/// one-crossing tangles and turns horizontal sums into vertical ones.
fn invert_simple(t: TangleExpr) -> TangleExpr {
    use TangleExpr::*;
    match t {
        Int(0) => Infinity,
        Infinity => Int(0),
        Int(n) if n.abs() == 1 => Int(n),
        Int(n) => {
            let unit = Int(n.signum());
            (1..n.unsigned_abs()).fold(unit.clone(), |acc, _| acc.vsum(unit.clone()))
        }
        Sum(a, b) => make_vsum(invert_simple(*a), invert_simple(*b)),
        VSum(a, b) => make_sum(invert_simple(*a), invert_simple(*b)),
        other => other.inv(),
    }
}

/// An equivalent expression built only from integers, `inf`, `+` and `*`,
/// with cancelling twists removed. The result describes an isotopic tangle
/// (the removed twists are Reidemeister II pairs), so bracket vectors agree.
pub fn simplify(t: &TangleExpr) -> TangleExpr {
    use TangleExpr::*;
    match t {
        Int(_) | Infinity => t.clone(),
        Sum(a, b) => make_sum(simplify(a), simplify(b)),
        VSum(a, b) => make_vsum(simplify(a), simplify(b)),
        Prod(a, b) => make_sum(invert_simple(simplify(a)), simplify(b)),
        Inv(a) => invert_simple(simplify(a)),
        Mirror(a) => mirror_simple(simplify(a)),
        Omega(a) => simplify(&a.as_ref().clone().sum(Int(2)).vsum(Int(1)).sum(Int(2))),
        OmegaBar(a) => simplify(&a.as_ref().clone().minus(Int(2)).vsum(Int(-1)).minus(Int(2))),
    }
}

fn twist(n: i64) -> Result<Fragment> {
    let mut f = Fragment::zero();
    for _ in 0..n.unsigned_abs() {
        f = f.sum(&Fragment::one())?;
    }
    Ok(if n < 0 { f.mirror() } else { f })
}

fn build(t: &TangleExpr) -> Result<Fragment> {
    use TangleExpr::*;
    match t {
        Int(n) => twist(*n),
        Infinity => Ok(Fragment::infinity()),
        Sum(a, b) => build(a)?.sum(&build(b)?),
        VSum(a, b) => build(a)?.vsum(&build(b)?),
        Prod(a, b) => build(a)?.reflect().sum(&build(b)?),
        Inv(a) => Ok(build(a)?.reflect()),
        Mirror(a) => Ok(build(a)?.mirror()),
        Omega(_) | OmegaBar(_) => build(&omega_rewrite(t)),
    }
}

/// A diagram of `t` after [`simplify`]; this is the compact form used to
/// build larger links.
pub fn compile_tangle(t: &TangleExpr) -> Result<TangleDiagram> {
    Ok(TangleDiagram { fragment: build(&simplify(t))? })
}

/// A diagram of `t` built node by node: `|n|` crossings per integer,
/// inverses as reflected pieces, twisting operations via their rewrite.
pub fn compile_tangle_unsimplified(t: &TangleExpr) -> Result<TangleDiagram> {
    Ok(TangleDiagram { fragment: build(t)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{BracketVector, LaurentPoly};
    use crate::tangle::{bracket_vector, parse_tangle, tangle_bracket_statesum};
    use crate::DEFAULT_CAP;

    fn t(s: &str) -> TangleExpr {
        parse_tangle(s).unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn oracle(td: &TangleDiagram) -> BracketVector {
        tangle_bracket_statesum(td, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn rewrite_shapes() {
        assert_eq!(omega_rewrite(&t("(inf - 2)^w")), t("(((inf - 2) + 2) * 1) + 2"));
        assert_eq!(omega_rewrite(&t("3^wb")), t("((3 - 2) * -1) - 2"));
        assert_eq!(omega_rewrite(&t("(inf - 2)^w")).to_string(), "(inf - 2 + 2) * 1 + 2");
    }

    #[test]
    fn simplified_sizes() {
        assert_eq!(simplify(&t("(inf - 2)^w")), t("3"));
        assert_eq!(simplify(&t("(-1)^w")), t("1 * 1 + 2"));
        assert_eq!(simplify(&t("(inf + 2)^wb")), t("-3"));
        assert_eq!(compile_tangle(&t("(inf - 2)^w^w")).unwrap().num_crossings(), 8);
        assert_eq!(compile_tangle(&t("3")).unwrap().num_crossings(), 3);
    }

    #[test]
    fn basic_diagrams() {
        let inf = compile_tangle(&t("inf")).unwrap();
        assert_eq!(inf.num_crossings(), 0);
        assert_eq!(oracle(&inf), BracketVector::infinity_tangle());
        assert_eq!(oracle(&compile_tangle(&t("1")).unwrap()), BracketVector::new(p("A"), p("A^-1")));
        assert_eq!(oracle(&compile_tangle(&t("2")).unwrap()), BracketVector::new(p("A^2"), p("1 - A^-4")));
        assert_eq!(oracle(&compile_tangle_unsimplified(&t("inf - 2")).unwrap()), BracketVector::new(p("0"), p("A^6")));
    }

    #[test]
    fn both_compilers_agree_with_vectors() {
        for s in ["(inf - 2)^w", "-1^w", "5 . 1 . 2", "(2 * -1)^-1 + 3", "-(1 + inf * 2)^wb", "2 . 0", "(1 . 1)^-1"] {
            let e = t(s);
            let want = bracket_vector(&e).unwrap();
            assert_eq!(oracle(&compile_tangle(&e).unwrap()), want, "{s}");
            assert_eq!(oracle(&compile_tangle_unsimplified(&e).unwrap()), want, "{s} (unsimplified)");
        }
    }

    #[test]
    fn closures_match_formula() {
        let e = t("2");
        let td = compile_tangle(&e).unwrap();
        let (n, d) = crate::tangle::closure_brackets(&e).unwrap();
        assert_eq!(crate::kauffman_bracket(&td.numerator().unwrap()).unwrap(), n);
        assert_eq!(crate::kauffman_bracket(&td.denominator().unwrap()).unwrap(), d);
    }
}
