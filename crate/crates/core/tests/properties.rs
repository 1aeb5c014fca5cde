mod common;

use common::{dup_case, dup_collapse_laws, nullity_case, spectrum_gap};
use hedge_iep::covers::nullity_bound_check;
use hedge_iep::lambda::sample_region;
use hedge_iep::numeric::{cluster_multiplicities, DEFAULT_CLUSTER_TOL};
use hedge_iep::pth::{gap_vector, ph_construct, ph_spectrum, random_splits};
use hedge_iep::scalar::rat;
use hedge_iep::tree::RootedTree;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn duplication_and_collapse_laws(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let case = dup_case(&mut rng, 12);
        let (law, inverse, restored) = dup_collapse_laws(&case);
        prop_assert!(law < 1e-8, "duplication gap {law:e}");
        prop_assert!(inverse < 1e-8, "collapse gap {inverse:e}");
        prop_assert!(restored);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn nullity_bound_holds(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = nullity_case(&mut rng);
        prop_assert!(nullity_bound_check(&c.t, &c.subtrees, &c.a, 1e-8).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn level_formula_matches_eigensolve(seed in any::<u64>(), region in 1u8..=12, height in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = RootedTree::random_lush(height, 40, &mut rng);
        let lam = sample_region(region, &mut rng);
        let c = lam.build_c(height + 1).unwrap();
        let w = ph_construct(&c, &t, &random_splits(&t, &mut rng)).unwrap();
        let direct = cluster_multiplicities(&w.eigenvalues().unwrap(), DEFAULT_CLUSTER_TOL);
        let formula = ph_spectrum(&c, &t.profile().unwrap(), DEFAULT_CLUSTER_TOL).unwrap();
        prop_assert_eq!(direct.total(), t.n());
        prop_assert!(spectrum_gap(direct.expanded(), formula.expanded()) < 1e-8);
    }

    #[test]
    fn gap_vector_ignores_positive_affine_maps(
        raw in proptest::collection::btree_set(-500i64..500, 2..10),
        num in 1i64..50,
        den in 1i64..50,
        shift in -100i64..100,
    ) {
        let xs: Vec<BigRational> = raw.iter().map(|&v| rat(v, 7)).collect();
        let ys: Vec<BigRational> = xs.iter().map(|x| x * rat(num, den) + rat(shift, 3)).collect();
        let g = gap_vector(&xs).unwrap();
        prop_assert_eq!(&g, &gap_vector(&ys).unwrap());
        prop_assert_eq!(g.iter().fold(rat(0, 1), |s, x| s + x), rat(1, 1));
    }
}
