mod common;

use common::*;
use proptest::prelude::*;
use vircalc::action::{bracket_check, expand_check, op_s, op_t, s_range, special, StructureConstants};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn brackets_hold(p in params(), f in bipoly(3, 3, 4), n in -3i64..=3, m in -3i64..=3) {
        let v = bracket_check(&p, n, m, &f, &StructureConstants::default());
        prop_assert!(v.holds(), "{:?}", v.first_failure());
    }

    #[test]
    fn wrong_constant_is_caught(p in params(), f in nonzero_bipoly(3, 3, 4), n in -3i64..=3, m in -3i64..=3) {
        let broken = StructureConstants { ll_offset: r("1") };
        let v = bracket_check(&p, n, m, &f, &broken);
        // the offset only shows when L_{n+m} f is nonzero, which it always is for f != 0
        prop_assert!(!v.holds());
    }

    #[test]
    fn expansion_holds(p in params(), f in bipoly(4, 3, 5), m in -4i64..=4) {
        prop_assert!(expand_check(&p, m, &f).holds());
    }

    #[test]
    fn specialized_forms_agree(p in params(), f in bipoly(6, 3, 5), j in 0u32..=7) {
        prop_assert_eq!(special::ops(&p, j, &f), (op_s(&p, j, &f), op_t(&p, j, &f)));
    }

    #[test]
    fn operators_vanish_beyond_range(p in params(), f in bipoly(4, 3, 5), extra in 1u32..4) {
        let j = s_range(&f) + extra;
        prop_assert!(op_s(&p, j, &f).is_zero());
        prop_assert!(op_t(&p, j, &f).is_zero());
    }
}
