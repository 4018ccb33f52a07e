mod common;

use common::*;
use proptest::prelude::*;
use vircalc::action::{act_l, op_s, op_t};
use vircalc::submod::{canonical_cyclic, equal_submodules, is_contained, member, oracle_check, Bounds};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generator_is_a_member(p in params(), f in nonzero_bipoly(3, 4, 4)) {
        let c = canonical_cyclic(&p, &f);
        prop_assume!(c.is_ok());
        let c = c.unwrap();
        prop_assert!(member(&p, &c, &f));
    }

    #[test]
    fn members_are_stable(p in params(), f in nonzero_bipoly(3, 4, 4), m in -3i64..=3, j in 0u32..=4) {
        let c = canonical_cyclic(&p, &f);
        prop_assume!(c.is_ok());
        let c = c.unwrap();
        prop_assert!(member(&p, &c, &act_l(&p, m, &f)));
        prop_assert!(member(&p, &c, &op_s(&p, j, &f)));
        prop_assert!(member(&p, &c, &op_t(&p, j, &f)));
    }

    #[test]
    fn scaling_keeps_the_submodule(p in params(), f in nonzero_bipoly(3, 4, 4), c in nonzero_rational()) {
        let a = canonical_cyclic(&p, &f);
        prop_assume!(a.is_ok());
        let a = a.unwrap();
        let b = canonical_cyclic(&p, &f.scale(&c)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(equal_submodules(&p, &a, &b));
    }

    #[test]
    fn images_generate_smaller_submodules(p in params(), f in nonzero_bipoly(3, 4, 4), m in -3i64..=3) {
        let outer = canonical_cyclic(&p, &f);
        prop_assume!(outer.is_ok());
        let outer = outer.unwrap();
        let g = act_l(&p, m, &f);
        prop_assume!(!g.is_zero());
        let inner = canonical_cyclic(&p, &g).unwrap();
        prop_assert!(is_contained(&p, &inner, &outer));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn canonical_form_matches_closure(p in params(), f in nonzero_bipoly(2, 3, 3)) {
        let rep = oracle_check(&p, &f, Bounds::square(5, 3));
        prop_assume!(rep.is_ok());
        let rep = rep.unwrap();
        prop_assert!(rep.agrees(), "{:?}", rep);
    }
}
