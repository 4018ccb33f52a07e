mod common;

use common::*;
use proptest::prelude::*;
use vircalc::action::ModuleParams;
use vircalc::submod::Bounds;
use vircalc::virsub::{
    finite_degree_profile, minimal_pair, minimal_pair_by_search, psi_gens_oracle, psi_member,
};
use vircalc::{BiPoly, UniPoly};

fn h_branch() -> impl Strategy<Value = ModuleParams> {
    let b = prop::sample::select(vec!["0", "1", "2", "-1"]);
    let alpha = prop::sample::select(vec!["0", "1", "-2"]);
    (b, alpha, h_poly()).prop_map(|(b, a, h)| {
        let a = if b == "-1" { "0" } else { a };
        ModuleParams::phi(r(b), r("1"), r(a), h).unwrap()
    })
}

fn f_branch() -> impl Strategy<Value = ModuleParams> {
    let alpha = prop::sample::select(vec!["1", "-2", "1/2"]);
    (alpha, h_poly()).prop_map(|(a, h)| ModuleParams::phi(r("-1"), r("1"), r(a), h).unwrap())
}

proptest! {
    #[test]
    fn minimal_pair_is_the_cone_minimum(k in 2u32..=6, w in 0u32..=60) {
        prop_assert_eq!(minimal_pair(k, w).unwrap(), minimal_pair_by_search(k, w));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generators_match_closure(p in h_branch(), f in nonzero_bipoly(2, 3, 3)) {
        let rep = psi_gens_oracle(&p, &f, Bounds::square(6, 4)).unwrap();
        prop_assert!(rep.agrees(), "{:?}", rep);
    }

    #[test]
    fn monomial_generators_match_closure(p in f_branch(), n in 0u32..=2, q in nonzero_unipoly(2, 3)) {
        let f = BiPoly::from_uni_at(&q, n);
        let rep = psi_gens_oracle(&p, &f, Bounds::square(6, 4)).unwrap();
        prop_assert!(rep.agrees(), "{:?}", rep);
    }

    #[test]
    fn degree_profile_stays_in_seed_support(
        b in prop::sample::select(vec!["0", "2"]),
        h in prop::sample::select(vec!["5", "-2", "1/3"]),
        seed in nonzero_bipoly(3, 4, 4),
    ) {
        let p = ModuleParams::phi(r(b), r("1"), r("0"), h.parse().unwrap()).unwrap();
        let support: std::collections::BTreeSet<u32> = seed.terms().map(|((_, c), _)| c).collect();
        prop_assert!(finite_degree_profile(&p, &seed, Bounds::square(6, 3)).unwrap().is_subset(&support));
    }

    #[test]
    fn linear_h_contains_one(alpha in prop::sample::select(vec!["1", "-2", "1/2"]), c in rational()) {
        let h = &UniPoly::t() + &UniPoly::constant(c);
        let p = ModuleParams::phi(r("-1"), r("1"), r(alpha), h).unwrap();
        prop_assert!(psi_member(&p, &UniPoly::t(), &BiPoly::one(), 8).unwrap());
    }
}
