//! Shared generators and property suites. Runs are reproducible: the RNG
//! seed is fixed unless `BRACKET_SEED` is set.
#![allow(dead_code)]

use knotcalc::bracket::{jones, kauffman_bracket};
use knotcalc::tangle::{compile_tangle, compile_tangle_unsimplified, tangle_bracket_statesum};
use knotcalc::{bracket_vector, hopf_bracket, omega_transform, Diagram, Handedness, LaurentPoly, TangleExpr, DEFAULT_CAP};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

pub const DEFAULT_SEED: u64 = 0x6b6e_6f74;

pub fn seed() -> u64 {
    std::env::var("BRACKET_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, rng_seed: RngSeed::Fixed(seed()), failure_persistence: None, ..Config::default() };
    TestRunner::new(config)
}

/// Runs `test` on `cases` generated values; the error names the failing input.
pub fn check<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

pub fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

pub fn arb_tangle(depth: u32) -> impl Strategy<Value = TangleExpr> {
    let leaf = prop_oneof![(-3i64..=3).prop_map(TangleExpr::Int), Just(TangleExpr::Infinity)];
    leaf.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.sum(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.vsum(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.prod(b)),
            inner.clone().prop_map(TangleExpr::inv),
            inner.clone().prop_map(TangleExpr::mirror),
            inner.clone().prop_map(TangleExpr::omega),
            inner.prop_map(TangleExpr::omega_bar),
        ]
    })
}

/// Tangles whose compact diagram has at most `max` crossings.
pub fn small_tangle(depth: u32, max: usize) -> impl Strategy<Value = TangleExpr> {
    arb_tangle(depth).prop_filter("too many crossings", move |t| compile_tangle(t).map(|d| d.num_crossings() <= max).unwrap_or(false))
}

/// Closures of random tangles, reoriented, mirrored and curled at random.
pub fn arb_diagram(max_crossings: usize) -> impl Strategy<Value = Diagram> {
    let max = max_crossings.saturating_sub(2).max(1);
    (small_tangle(3, max), any::<bool>(), any::<bool>(), any::<u64>(), 0usize..3).prop_filter_map("closure failed", |(t, num, mirror, bits, curls)| {
        let td = compile_tangle(&t).ok()?;
        let mut d = if num { td.numerator().ok()? } else { td.denominator().ok()? };
        if mirror {
            d = d.mirror();
        }
        for i in 0..d.num_components() {
            if bits >> i & 1 == 1 {
                d = d.reverse_component(i).ok()?;
            }
        }
        for c in 0..curls {
            let edges: Vec<u32> = d.edges().collect();
            if edges.is_empty() {
                break;
            }
            let e = edges[(bits >> (8 + 8 * c)) as usize % edges.len()];
            let hand = if bits >> (40 + c) & 1 == 1 { Handedness::Right } else { Handedness::Left };
            d = d.add_curl(e, hand).ok()?;
        }
        Some(d)
    })
}

/// Diagrams with at least one crossing.
pub fn arb_crossed_diagram(max_crossings: usize) -> impl Strategy<Value = Diagram> {
    arb_diagram(max_crossings).prop_filter("no crossings", |d| d.num_crossings() > 0)
}

pub fn arb_knot(max_crossings: usize) -> impl Strategy<Value = Diagram> {
    arb_diagram(max_crossings).prop_filter("not a knot", |d| d.num_components() == 1 && d.free_loops() == 0)
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

pub fn mirror_conjugates(cases: u32) -> Result<(), String> {
    check(cases, arb_diagram(12), |d| {
        let b = ok(kauffman_bracket(&d))?;
        prop_assert_eq!(ok(kauffman_bracket(&d.mirror()))?, b.conjugate());
        prop_assert_eq!(d.mirror().writhe(), -d.writhe());
        Ok(())
    })
}

pub fn curl_factors(cases: u32) -> Result<(), String> {
    check(cases, (arb_diagram(10), any::<prop::sample::Index>(), any::<bool>()), |(d, idx, right)| {
        let edges: Vec<u32> = d.edges().collect();
        prop_assume!(!edges.is_empty());
        let e = edges[idx.index(edges.len())];
        let (hand, factor, dw) = if right { (Handedness::Right, p("-A^3"), 1) } else { (Handedness::Left, p("-A^-3"), -1) };
        let c = ok(d.add_curl(e, hand))?;
        prop_assert_eq!(c.writhe(), d.writhe() + dw);
        prop_assert_eq!(ok(kauffman_bracket(&c))?, factor * ok(kauffman_bracket(&d))?);
        prop_assert_eq!(ok(jones(&c))?, ok(jones(&d))?);
        Ok(())
    })
}

pub fn circle_factor(cases: u32) -> Result<(), String> {
    check(cases, arb_diagram(12), |d| {
        let b = ok(kauffman_bracket(&d))?;
        prop_assert_eq!(ok(kauffman_bracket(&d.add_disjoint_circle()))?, LaurentPoly::delta() * b);
        Ok(())
    })
}

/// `A <switched> - A^-1 <original> = (A^2 - A^-2) <B-smoothed>`.
pub fn switching_formula(cases: u32) -> Result<(), String> {
    check(cases, (arb_crossed_diagram(12), any::<prop::sample::Index>()), |(d, idx)| {
        let k = idx.index(d.num_crossings());
        let switched = ok(kauffman_bracket(&ok(d.switch_crossing(k))?))?;
        let original = ok(kauffman_bracket(&d))?;
        let smoothed = ok(kauffman_bracket(&ok(d.smooth_crossing(k, false))?))?;
        prop_assert_eq!(p("A") * switched - p("A^-1") * original, p("A^2 - A^-2") * smoothed);
        Ok(())
    })
}

pub fn union_multiplicative(cases: u32) -> Result<(), String> {
    check(cases, (arb_diagram(8), arb_diagram(8)), |(a, b)| {
        let u = a.disjoint_union(&b);
        prop_assert_eq!(u.num_components(), a.num_components() + b.num_components());
        let want = LaurentPoly::delta() * ok(kauffman_bracket(&a))? * ok(kauffman_bracket(&b))?;
        prop_assert_eq!(ok(kauffman_bracket(&u))?, want);
        Ok(())
    })
}

/// Tangle calculus against the state sum of compiled diagrams (at most 20
/// crossings, expression depth at most 5).
pub fn vector_matches_statesum(cases: u32) -> Result<(), String> {
    check(cases, small_tangle(5, 20), |t| {
        let want = ok(bracket_vector(&t))?;
        let td = ok(compile_tangle(&t))?;
        prop_assert_eq!(ok(tangle_bracket_statesum(&td, DEFAULT_CAP))?, want.clone(), "compact diagram of {}", t);
        let raw = ok(compile_tangle_unsimplified(&t))?;
        if raw.num_crossings() <= 20 {
            prop_assert_eq!(ok(tangle_bracket_statesum(&raw, DEFAULT_CAP))?, want, "direct diagram of {}", t);
        }
        Ok(())
    })
}

pub fn omega_preserves_form(cases: u32) -> Result<(), String> {
    check(cases, (arb_tangle(4), arb_tangle(4)), |(t, u)| {
        let (tw, uw) = omega_transform(&t, &u);
        let before = ok(hopf_bracket(&t, &u))?;
        prop_assert_eq!(ok(hopf_bracket(&tw, &uw))?, before.clone());
        prop_assert_eq!(ok(hopf_bracket(&u, &t))?, before);
        Ok(())
    })
}
