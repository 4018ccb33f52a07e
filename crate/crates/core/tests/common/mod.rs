#![allow(dead_code)]

use proptest::prelude::*;
use vircalc::action::ModuleParams;
use vircalc::{BiPoly, Rational, UniPoly};

pub fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

pub fn bipoly(s_max: u32, t_max: u32, terms: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0..=s_max, 0..=t_max), rational()), 0..=terms)
        .prop_map(BiPoly::from_terms)
}

pub fn nonzero_bipoly(s_max: u32, t_max: u32, terms: usize) -> impl Strategy<Value = BiPoly> {
    bipoly(s_max, t_max, terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn unipoly(t_max: u32, terms: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec((0..=t_max, rational()), 0..=terms).prop_map(UniPoly::from_terms)
}

pub fn nonzero_unipoly(t_max: u32, terms: usize) -> impl Strategy<Value = UniPoly> {
    unipoly(t_max, terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn h_poly() -> impl Strategy<Value = UniPoly> {
    prop::sample::select(vec!["5", "t", "t + 1", "t^2", "t^3 - t", "2*t^2 - t + 3"])
        .prop_map(|s| s.parse().unwrap())
}

/// `Φ` parameters over the grid values of `b`, plus `Θ`.
pub fn params() -> impl Strategy<Value = ModuleParams> {
    let b = prop::sample::select(vec!["-1", "0", "1", "2", "1/2", "-3"]);
    let alpha = prop::sample::select(vec!["0", "1", "-2", "1/2"]);
    (b, nonzero_rational(), alpha, h_poly(), prop::bool::weighted(0.15)).prop_map(|(b, l, a, h, theta)| {
        if theta {
            ModuleParams::theta(l, h).unwrap()
        } else {
            ModuleParams::phi(r(b), l, r(a), h).unwrap()
        }
    })
}

pub fn phi_with_b(b: &'static str) -> impl Strategy<Value = ModuleParams> {
    let alpha = prop::sample::select(vec!["0", "1", "-2", "1/2"]);
    (alpha, h_poly()).prop_map(move |(a, h)| ModuleParams::phi(r(b), r("1"), r(a), h).unwrap())
}
