mod common;

use common::*;
use proptest::prelude::*;
use vircalc::action::{act_l, ModuleParams};
use vircalc::submod::Bounds;
use vircalc::tensor::{
    default_samples, extract_invariants, reach_one_tensor, reach_one_tensor_blind, slot_apply,
    stored_invariants, tensor_act_l, vandermonde_extract, TensorElem, TensorParams,
};
use vircalc::Rational;

fn slot() -> impl Strategy<Value = (ModuleParams, &'static str)> {
    let alpha = prop::sample::select(vec!["1", "-2", "1/2"]);
    let h = prop::sample::select(vec!["t", "t + 1", "2*t - 3"]);
    (alpha, h).prop_map(|(a, h)| (ModuleParams::phi(r("-1"), r("1"), r(a), h.parse().unwrap()).unwrap(), h))
}

fn tensor_params(n: usize) -> impl Strategy<Value = TensorParams> {
    let lambdas = ["1", "2", "1/3", "-1", "3"];
    (prop::collection::vec(slot(), n), 0..lambdas.len()).prop_map(move |(slots, start)| {
        let slots = slots
            .into_iter()
            .enumerate()
            .map(|(k, (p, _))| {
                ModuleParams::phi(r("-1"), r(lambdas[(start + k) % lambdas.len()]), p.alpha().clone(), p.h().clone())
                    .unwrap()
            })
            .collect();
        TensorParams::new(slots).unwrap()
    })
}

fn elem(n: usize, max_exp: u32, terms: usize) -> impl Strategy<Value = TensorElem> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, 2 * n), nonzero_rational()), 1..=terms)
        .prop_map(TensorElem::from_terms)
        .prop_filter("nonzero", |u| !u.is_zero())
}

fn setup(max_n: usize, max_exp: u32) -> impl Strategy<Value = (TensorParams, TensorElem)> {
    (1..=max_n).prop_flat_map(move |n| (tensor_params(n), elem(n, max_exp, 4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn brackets_hold((tp, u) in setup(3, 2), a in -2i64..=2, b in -2i64..=2) {
        let lhs = tensor_act_l(&tp, a, &tensor_act_l(&tp, b, &u).unwrap()).unwrap()
            - tensor_act_l(&tp, b, &tensor_act_l(&tp, a, &u).unwrap()).unwrap();
        let rhs = tensor_act_l(&tp, a + b, &u).unwrap().scale(&Rational::from_int(b - a));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn one_slot_is_the_module_action(tp in tensor_params(1), f in bipoly(3, 3, 4), m in -3i64..=3) {
        let lhs = tensor_act_l(&tp, m, &TensorElem::pure(std::slice::from_ref(&f))).unwrap();
        prop_assert_eq!(lhs, TensorElem::pure(&[act_l(&tp.slots()[0], m, &f)]));
    }

    #[test]
    fn extraction_recovers_components((tp, u) in setup(3, 2)) {
        let jmax = 4;
        let comps = vandermonde_extract(&tp, &default_samples(&tp, &u, jmax).unwrap(), jmax).unwrap();
        for k in 1..=tp.len() {
            for j in 0..=jmax {
                prop_assert_eq!(comps.get(k, j), Some(&slot_apply(&tp, k, j, &u).unwrap()));
            }
        }
    }

    #[test]
    fn invariants_are_recovered((p, _) in slot()) {
        prop_assert_eq!(extract_invariants(&p).unwrap(), stored_invariants(&p).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn guided_and_blind_probes_agree(tp in tensor_params(2), u in elem(2, 2, 3)) {
        let bounds = Bounds::square(6, 3);
        let guided = reach_one_tensor(&tp, &u, bounds, 8).unwrap().outcome.reached();
        prop_assert!(guided);
        prop_assert_eq!(reach_one_tensor_blind(&tp, &u, bounds).unwrap(), guided);
    }
}
