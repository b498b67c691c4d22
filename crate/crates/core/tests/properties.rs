use proptest::prelude::*;

use ufo7::rank1::{primitive_roots, rank1_dim, rank1_oracle, Rank1Params};
use ufo7::simple::{check_top_is_simple, is_submodule, maximal_submodule, report_from};
use ufo7::verma::build_verma;
use ufo7::weights::{classify, conditions, shapovalov, shift, WeightParams};
use ufo7::CycNum;

fn root() -> impl Strategy<Value = CycNum> {
    (0i64..12).prop_map(CycNum::zeta_pow)
}

fn nonzero() -> impl Strategy<Value = CycNum> {
    prop_oneof![
        root(),
        ((-5i64..=5), (1i64..=5), (0i64..12)).prop_filter_map("nonzero", |(n, d, k)| {
            (n != 0).then(|| CycNum::frac(n, d) * CycNum::zeta_pow(k))
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn shapovalov_vanishes_on_the_conditions(l1 in nonzero(), l2 in nonzero()) {
        let sh = shapovalov(&l1, &l2).unwrap();
        prop_assert_eq!(num_traits::Zero::is_zero(&sh), conditions(&l1, &l2).iter().any(|&c| c));
    }

    #[test]
    fn every_root_pair_classifies(l1 in root(), l2 in root()) {
        prop_assert!(classify(&l1, &l2).is_ok());
    }

    #[test]
    fn shifts_compose(l1 in nonzero(), l2 in nonzero(), a in -12i64..12, b in -12i64..12, c in -12i64..12, d in -12i64..12) {
        let (x1, x2) = shift(&l1, &l2, a, b);
        prop_assert_eq!(shift(&x1, &x2, c, d), shift(&l1, &l2, a + c, b + d));
        prop_assert_eq!(shift(&l1, &l2, 12, 0), (l1.clone(), l2.clone()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rank1_bounds(k in 0usize..5, i in 0usize..4, lam in nonzero()) {
        let n = [2, 3, 4, 6, 12][k];
        let qs = primitive_roots(n);
        let q = qs[i % qs.len()].clone();
        let p = Rank1Params::new(n, q, lam).unwrap();
        let d = rank1_dim(&p);
        prop_assert!((1..=n as usize).contains(&d));
        prop_assert_eq!(d, rank1_oracle(&p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn simple_report_shape(l1 in root(), l2 in root()) {
        let m = build_verma(&WeightParams::from_lambdas(l1, l2).unwrap());
        let n = maximal_submodule(&m);
        prop_assert!(is_submodule(&m, &n));
        prop_assert!(check_top_is_simple(&m, &n));
        let r = report_from(&m, &n).unwrap();
        prop_assert_eq!(r.dim, r.graded_dims.values().sum::<usize>());
        prop_assert_eq!(r.dim + n.dim(), 144);
        prop_assert_eq!(r.graded_dims.get(&ufo7::algebra::Degree::ZERO), Some(&1));
        prop_assert_eq!(r.graded_dims.get(&r.max_degree), Some(&1));
    }
}
