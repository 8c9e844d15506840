//! The doubled Hopf pattern `H(T, U)`: two parallel strands running twice
//! through a Hopf clasp, with tangle slots `T` and `U`. Its bracket is the
//! bilinear form `br(T)^t M br(U)`, which the twisting pair
//! `(T^w, U^wb)` preserves. This gives links with the Jones polynomial of
//! the 2-component unlink.

use std::collections::BTreeSet;

use crate::bracket::{kauffman_bracket_capped, writhe_factor, JonesPoly};
use crate::diagram::fragment::{Fragment, Node};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::laurent::{BracketVector, LaurentPoly, Mat2};
use crate::tangle::{bracket_vector, compile_tangle, TangleExpr};

/// The symmetric form `M = [[h00, h01], [h01, h11]]` with
/// `h_ij = <H(i, j)>` for `i, j` in `{0, inf}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfForm {
    pub h00: LaurentPoly,
    pub h01: LaurentPoly,
    pub h11: LaurentPoly,
}

impl HopfForm {
    pub fn new() -> Self {
        let delta = LaurentPoly::delta();
        let h00 = LaurentPoly::from_terms([(-14, -1), (-6, -1), (-2, -2), (2, -2), (6, -1), (14, -1)]);
        let h01 = &delta * &delta;
        assert_eq!(h01, LaurentPoly::from_terms([(-4, 1), (0, 2), (4, 1)]));
        assert_eq!(h00.conjugate(), h00);
        Self { h00, h01, h11: delta }
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::new(self.h00.clone(), self.h01.clone(), self.h01.clone(), self.h11.clone())
    }

    /// `h00 fT fU + h01 (fT gU + gT fU) + h11 gT gU`.
    pub fn eval(&self, t: &BracketVector, u: &BracketVector) -> Result<LaurentPoly> {
        let ff = t.f.checked_mul(&u.f)?;
        let cross = t.f.checked_mul(&u.g)?.checked_add(&t.g.checked_mul(&u.f)?)?;
        let gg = t.g.checked_mul(&u.g)?;
        self.h00.checked_mul(&ff)?.checked_add(&self.h01.checked_mul(&cross)?)?.checked_add(&self.h11.checked_mul(&gg)?)
    }
}

impl Default for HopfForm {
    fn default() -> Self {
        Self::new()
    }
}

/// `<H(T, U)>` from the bracket vectors of the two tangles.
pub fn hopf_bracket(t: &TangleExpr, u: &TangleExpr) -> Result<LaurentPoly> {
    HopfForm::new().eval(&bracket_vector(t)?, &bracket_vector(u)?)
}

/// `H(T, U)^w = H(T^w, U^wb)`.
pub fn omega_transform(t: &TangleExpr, u: &TangleExpr) -> (TangleExpr, TangleExpr) {
    (t.clone().omega(), u.clone().omega_bar())
}

// Crossings of the template. Band 1 (strands o1, i1) passes over at P,
// band 2 (o2, i2) at Q.
const P_OO: u32 = 0;
const P_OI: u32 = 1;
const P_IO: u32 = 2;
const P_II: u32 = 3;
const Q_OO: u32 = 4;
const Q_OI: u32 = 5;
const Q_IO: u32 = 6;
const Q_II: u32 = 7;

fn template() -> Fragment {
    // slots: a = 0 under in, b = 1 over out, c = 2 under out, d = 3 over in
    let s = |k, i| Node::Slot(k, i);
    let tp = |p| Node::Port(p);
    let up = |p| Node::Port(4 + p);
    let (nw, ne, sw, se) = (0, 1, 2, 3);
    let links = [
        // o1
        (tp(se), s(Q_OO, 0)),
        (s(Q_OO, 2), s(Q_OI, 0)),
        (s(Q_OI, 2), s(P_OI, 3)),
        (s(P_OI, 1), s(P_OO, 3)),
        (s(P_OO, 1), tp(sw)),
        // i1
        (tp(ne), s(Q_IO, 0)),
        (s(Q_IO, 2), s(Q_II, 0)),
        (s(Q_II, 2), s(P_II, 3)),
        (s(P_II, 1), s(P_IO, 3)),
        (s(P_IO, 1), tp(nw)),
        // o2
        (up(se), s(P_OO, 0)),
        (s(P_OO, 2), s(P_IO, 0)),
        (s(P_IO, 2), s(Q_IO, 3)),
        (s(Q_IO, 1), s(Q_OO, 3)),
        (s(Q_OO, 1), up(sw)),
        // i2
        (up(ne), s(P_OI, 0)),
        (s(P_OI, 2), s(P_II, 0)),
        (s(P_II, 2), s(Q_II, 3)),
        (s(Q_II, 1), s(Q_OI, 3)),
        (s(Q_OI, 1), up(nw)),
    ];
    Fragment::from_links(8, &links)
}

/// The diagram `H(T, U)`: the 8-crossing template with the compiled
/// tangles spliced into its slots.
pub fn compile_h(t: &TangleExpr, u: &TangleExpr) -> Result<Diagram> {
    let mut f = template();
    f.splice(&compile_tangle(t)?.fragment, [0, 1, 2, 3].map(Node::Port))?;
    f.splice(&compile_tangle(u)?.fragment, [4, 5, 6, 7].map(Node::Port))?;
    f.to_diagram()
}

/// The tangle pair `(-1)^w`, `(inf + 2)^wb`.
pub fn thistlethwaite_tangles() -> (TangleExpr, TangleExpr) {
    omega_transform(&TangleExpr::Int(-1), &TangleExpr::Infinity.sum(TangleExpr::Int(2)))
}

/// Thistlethwaite's link, a nontrivial 2-component link whose Jones
/// polynomial is that of the unlink, as `H((-1)^w, (inf + 2)^wb)`.
pub fn thistlethwaite() -> Result<Diagram> {
    let (t, u) = thistlethwaite_tangles();
    compile_h(&t, &u)
}

/// `T_0 = inf - 2`, `T_{n+1} = T_n^w`.
pub fn family_tangle(n: usize) -> TangleExpr {
    let mut t = TangleExpr::Infinity.minus(TangleExpr::Int(2));
    for _ in 0..n {
        t = t.omega();
    }
    t
}

/// Outcome of comparing the state sum of a compiled diagram with the
/// tangle calculus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleStatus {
    NotRun,
    Agrees,
    Skipped { crossings: usize, cap: usize },
}

/// What is known about a claim that is not checked here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Unverified,
}

/// `S(n) = H(T_n, -T_n)`.
#[derive(Clone, Debug)]
pub struct SFamilyEntry {
    pub n: usize,
    pub t: TangleExpr,
    pub u: TangleExpr,
    pub diagram: Diagram,
    /// Bracket from the bilinear form.
    pub bracket: LaurentPoly,
    /// Writhes over both relative orientations of the two components.
    pub writhes: BTreeSet<i64>,
    /// Jones polynomial for each orientation, keyed like `writhes`.
    pub jones: Vec<(i64, JonesPoly)>,
    pub oracle: OracleStatus,
    /// Non-triviality and pairwise distinctness of the family need a finer
    /// invariant than the bracket.
    pub distinct_nontrivial: Claim,
}

pub fn s_family(n: usize) -> Result<SFamilyEntry> {
    let t = family_tangle(n);
    let u = t.clone().mirror();
    let diagram = compile_h(&t, &u)?;
    let bracket = hopf_bracket(&t, &u)?;
    let mut writhes = BTreeSet::new();
    let mut jones = Vec::new();
    for d in [diagram.clone(), diagram.reverse_component(1)?] {
        let w = d.writhe();
        if writhes.insert(w) {
            let x = writhe_factor(w)?.checked_mul(&bracket)?;
            jones.push((w, JonesPoly::from_normalized_bracket(&x)));
        }
    }
    Ok(SFamilyEntry { n, t, u, diagram, bracket, writhes, jones, oracle: OracleStatus::NotRun, distinct_nontrivial: Claim::Unverified })
}

impl SFamilyEntry {
    /// Runs the state sum on the compiled diagram when it fits under `cap`.
    pub fn run_oracle(&mut self, cap: usize) -> Result<&OracleStatus> {
        self.oracle = check_oracle(&self.diagram, &self.bracket, cap)?;
        Ok(&self.oracle)
    }
}

/// Compares `<d>` by state sum with `expected`; above the cap nothing is run.
pub fn check_oracle(d: &Diagram, expected: &LaurentPoly, cap: usize) -> Result<OracleStatus> {
    let n = d.num_crossings();
    if n > cap {
        return Ok(OracleStatus::Skipped { crossings: n, cap });
    }
    let got = kauffman_bracket_capped(d, cap)?;
    if &got != expected {
        return Err(Error::OracleMismatch { state_sum: got.to_string(), calculus: expected.to_string() });
    }
    Ok(OracleStatus::Agrees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{jones, kauffman_bracket};

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn t(s: &str) -> TangleExpr {
        s.parse().unwrap()
    }

    #[test]
    fn template_base_cases() {
        let form = HopfForm::new();
        let h = compile_h(&t("0"), &t("0")).unwrap();
        assert_eq!(h.num_crossings(), 8);
        assert_eq!(h.num_components(), 4);
        assert_eq!(kauffman_bracket(&h).unwrap(), form.h00);
        let h = compile_h(&t("0"), &t("inf")).unwrap();
        assert_eq!(h.num_components(), 3);
        assert_eq!(kauffman_bracket(&h).unwrap(), form.h01);
        let h = compile_h(&t("inf"), &t("inf")).unwrap();
        assert_eq!(h.num_components(), 2);
        assert_eq!(h.writhe(), 0);
        assert_eq!(kauffman_bracket(&h).unwrap(), LaurentPoly::delta());
        let h = compile_h(&t("inf"), &t("0")).unwrap();
        assert_eq!(kauffman_bracket(&h).unwrap(), form.h01);
    }

    #[test]
    fn form_values() {
        let form = HopfForm::new();
        assert_eq!(form.h00, p("-A^-14 - A^-6 - 2A^-2 - 2A^2 - A^6 - A^14"));
        assert_eq!(hopf_bracket(&t("0"), &t("0")).unwrap(), form.h00);
        assert_eq!(hopf_bracket(&t("inf"), &t("inf")).unwrap(), LaurentPoly::delta());
        assert_eq!(hopf_bracket(&t("inf - 2"), &t("inf + 2")).unwrap(), LaurentPoly::delta());
    }

    #[test]
    fn form_is_omega_invariant() {
        let m = HopfForm::new().matrix();
        let lhs = Mat2::omega().transpose().mul(&m).mul(&Mat2::omega_inv());
        assert_eq!(lhs, m);
    }

    #[test]
    fn small_h_diagrams_match_form() {
        for (a, b) in [("1", "0"), ("2", "-1"), ("inf + 1", "1 * 1"), ("-2", "3"), ("(-1)^w", "inf")] {
            let d = compile_h(&t(a), &t(b)).unwrap();
            assert_eq!(kauffman_bracket(&d).unwrap(), hopf_bracket(&t(a), &t(b)).unwrap(), "H({a}, {b})");
        }
    }

    #[test]
    fn thistlethwaite_link() {
        let d = thistlethwaite().unwrap();
        assert_eq!(d.num_crossings(), 15);
        assert_eq!(d.num_components(), 2);
        assert_eq!(d.writhe(), -3);
        let expected = p("A^-11 + A^-7");
        let (tt, uu) = thistlethwaite_tangles();
        assert_eq!(hopf_bracket(&tt, &uu).unwrap(), expected);
        assert_eq!(p("-A^-9") * LaurentPoly::delta(), expected);
        assert_eq!(kauffman_bracket(&d).unwrap(), expected);
        assert_eq!(jones(&d).unwrap(), JonesPoly::unlink2());
    }

    #[test]
    fn family_small_cases() {
        let u = JonesPoly::unlink2();
        for n in 0..=3 {
            let e = s_family(n).unwrap();
            assert_eq!(e.u, TangleExpr::Mirror(Box::new(e.t.clone())));
            assert_eq!(e.bracket, LaurentPoly::delta(), "n = {n}");
            if n % 2 == 0 {
                assert_eq!(e.writhes, BTreeSet::from([0]));
                assert_eq!(e.jones, vec![(0, u.clone())]);
            } else {
                assert_eq!(e.writhes, BTreeSet::from([-8, 8]));
                for (w, j) in &e.jones {
                    assert_eq!(j, &u.times_t_power(if *w > 0 { 6 } else { -6 }).unwrap());
                }
            }
        }
        assert_eq!(s_family(0).unwrap().diagram.num_crossings(), 12);
        assert_eq!(s_family(1).unwrap().diagram.num_crossings(), 14);
        assert_eq!(s_family(3).unwrap().diagram.num_crossings(), 34);
    }

    #[test]
    fn oracle_skips_above_cap() {
        let mut e = s_family(1).unwrap();
        assert_eq!(e.run_oracle(14).unwrap(), &OracleStatus::Agrees);
        assert_eq!(e.run_oracle(10).unwrap(), &OracleStatus::Skipped { crossings: 14, cap: 10 });
        assert_eq!(e.distinct_nontrivial, Claim::Unverified);
    }
}
