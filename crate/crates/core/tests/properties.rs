use bca::completions::{canonical_completion, is_maximal_completion};
use bca::families::random_preorder;
use bca::index::{index_general, index_total};
use bca::metrics::{top_difference_direct, top_difference_fast};
use bca::solver::{bca_bruteforce, bca_duality, condition_star, Verdict};
use bca::{Limits, Preorder, RelationDocument, SubsetMask};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn preorder(max_n: usize) -> impl Strategy<Value = Preorder> {
    (1..=max_n, 0.0f64..0.5, any::<u64>()).prop_map(|(n, density, seed)| {
        random_preorder(n, density, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
    })
}

fn pair_on_same_ground(max_n: usize) -> impl Strategy<Value = (Preorder, Preorder)> {
    (1..=max_n, 0.0f64..0.5, 0.0f64..0.5, any::<u64>()).prop_map(|(n, a, b, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (
            random_preorder(n, a, &mut rng).unwrap(),
            random_preorder(n, b, &mut rng).unwrap(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn maximum_elements_are_maximal(p in preorder(9), bits in any::<u64>()) {
        let menu = SubsetMask(bits & p.full_set().bits());
        prop_assume!(!menu.is_empty());
        let big = p.maximal_elements(menu).unwrap();
        let small = p.maximum_elements(menu).unwrap();
        prop_assert!(small.is_subset(big));
        prop_assert!(!big.is_empty());
        prop_assert!(big.is_subset(menu));
    }

    #[test]
    fn layers_and_classes_partition_the_ground(p in preorder(12)) {
        for parts in [p.layers(), p.classes()] {
            let mut union = 0u64;
            for part in &parts {
                prop_assert!(!part.is_empty());
                prop_assert_eq!(union & part.bits(), 0);
                union |= part.bits();
            }
            prop_assert_eq!(union, p.full_set().bits());
        }
        prop_assert!(p.layers().len() <= p.classes().len());
    }

    #[test]
    fn documents_round_trip(p in preorder(12)) {
        for doc in [RelationDocument::full(p.as_relation()), RelationDocument::compact(&p)] {
            let back = RelationDocument::from_json(&doc.to_json()).unwrap();
            prop_assert_eq!(&back, &doc);
            prop_assert_eq!(back.to_preorder().unwrap(), p.clone());
        }
    }

    #[test]
    fn restriction_is_the_induced_preorder(p in preorder(10), bits in any::<u64>()) {
        let y = SubsetMask(bits & p.full_set().bits());
        prop_assume!(!y.is_empty());
        let sub = p.restrict(y).unwrap();
        let members: Vec<usize> = y.iter().collect();
        prop_assert_eq!(sub.len(), members.len());
        for (a, &i) in members.iter().enumerate() {
            prop_assert_eq!(sub.ground().label(a), p.ground().label(i));
            for (b, &j) in members.iter().enumerate() {
                prop_assert_eq!(sub.weakly(a, b), p.weakly(i, j));
            }
        }
    }

    #[test]
    fn converse_and_strict_part(p in preorder(10)) {
        prop_assert_eq!(p.converse().converse(), p.clone());
        let strict = p.asymmetric_part();
        for i in 0..p.len() {
            prop_assert!(!strict.holds(i, i));
            for j in 0..p.len() {
                prop_assert_eq!(strict.holds(i, j), p.strictly(i, j));
                prop_assert_eq!(p.converse().weakly(i, j), p.weakly(j, i));
            }
        }
    }

    #[test]
    fn fast_metric_equals_the_menu_sweep((p, q) in pair_on_same_ground(9)) {
        let limits = Limits::default();
        prop_assert_eq!(
            top_difference_fast(&p, &q).unwrap(),
            top_difference_direct(&p, &q, &limits).unwrap()
        );
    }

    #[test]
    fn canonical_completion_is_a_maximal_completion(p in preorder(7)) {
        let c = canonical_completion(&p);
        prop_assert!(p.is_completed_by(&c).unwrap());
        prop_assert!(is_maximal_completion(&c, &p, &Limits::default()).unwrap());
        prop_assert_eq!(c.blocks().to_vec(), p.layers());
    }

    #[test]
    fn index_lies_between_its_bounds(p in preorder(10)) {
        let n = p.len() as u32;
        let v = index_general(&p, &Limits::default()).unwrap().to_u128().unwrap();
        prop_assert!(2 * ((1u128 << n) - 1) <= v);
        prop_assert!(v <= n as u128 * (1u128 << n));
        prop_assert!(index_total(&canonical_completion(&p)).to_u128().unwrap() <= v);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solvers_agree(p in preorder(6)) {
        let limits = Limits::default();
        let brute = bca_bruteforce(&p, &limits).unwrap();
        let dual = bca_duality(&p, &limits).unwrap();
        prop_assert_eq!(&brute.bca_set, &dual.bca_set);
        prop_assert_eq!(brute.distance, dual.distance);
        for t in &brute.bca_set {
            prop_assert!(p.is_completed_by(t).unwrap());
        }
        if condition_star(&p, &limits).unwrap().verdict == Verdict::Strict {
            prop_assert_eq!(&brute.bca_set, &vec![canonical_completion(&p)]);
        }
    }
}
