mod common;

use bca::completions::{
    canonical_completion, count_completions, enumerate_completions, enumerate_preorders,
    is_maximal_completion, CompletionFilter,
};
use bca::index::{f_layers, index_general, index_total, psi, BigCount, DyadicRational};
use bca::solver::{
    bca_bruteforce, bca_canonical, bca_duality, condition_star, covering_radius, CanonicalOutcome,
    Verdict,
};
use bca::{GroundSet, Limits, Preorder, TotalPreorder};
use common::{all_preorders, all_total_preorders, bca_oracle, index_oracle, random_preorder};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn completions(p: &Preorder) -> Vec<TotalPreorder> {
    enumerate_completions(p, CompletionFilter::All, &Limits::default())
        .unwrap()
        .collect()
}

#[test]
fn preorder_enumeration_matches_the_oracle() {
    let limits = Limits::default();
    for n in 1..=4 {
        let mut mine = enumerate_preorders(GroundSet::indexed("x", n).unwrap(), &limits).unwrap();
        let mut theirs = all_preorders(n);
        let key = |p: &Preorder| p.as_relation().rows().to_vec();
        mine.sort_by_key(key);
        theirs.sort_by_key(key);
        assert_eq!(mine, theirs);
    }
}

#[test]
fn completion_stream_matches_a_filter_of_all_total_preorders() {
    for p in all_preorders(4) {
        let mut want: Vec<_> = all_total_preorders(p.ground())
            .into_iter()
            .filter(|t| p.is_completed_by(t).unwrap())
            .collect();
        want.sort();
        let mut got = completions(&p);
        got.sort();
        assert_eq!(got, want);
        assert_eq!(
            count_completions(&p, &Limits::default()).unwrap(),
            want.len() as u128
        );
        // Deterministic order.
        assert_eq!(completions(&p), completions(&p));
    }
}

#[test]
fn maximal_and_strict_filters() {
    let limits = Limits::default();
    for p in all_preorders(4) {
        let all = completions(&p);
        let mut pairwise: Vec<_> = all
            .iter()
            .filter(|t| !all.iter().any(|o| o != *t && t.is_contained_in(o)))
            .cloned()
            .collect();
        pairwise.sort();
        let mut maximal: Vec<_> = enumerate_completions(&p, CompletionFilter::Maximal, &limits)
            .unwrap()
            .collect();
        maximal.sort();
        assert_eq!(maximal, pairwise);
        for t in &maximal {
            assert!(is_maximal_completion(t, &p, &limits).unwrap());
        }
        assert!(maximal.contains(&canonical_completion(&p)));

        let strict: Vec<_> = enumerate_completions(&p, CompletionFilter::Strict, &limits)
            .unwrap()
            .collect();
        let expected_strict: Vec<_> = all
            .iter()
            .filter(|t| {
                let q = t.to_preorder();
                (0..4).all(|i| {
                    (0..4).all(|j| p.comparable(i, j) || i == j || !q.indifferent_pair(i, j))
                })
            })
            .cloned()
            .collect();
        assert_eq!(strict.len(), expected_strict.len());
        if p.is_antisymmetric() {
            assert!(strict.iter().all(TotalPreorder::is_linear));
        }
    }
}

#[test]
fn solvers_agree_with_the_oracle_on_every_preorder_of_four() {
    let limits = Limits::default();
    for n in 1..=4 {
        for p in all_preorders(n) {
            let (d, set) = bca_oracle(&p);
            let brute = bca_bruteforce(&p, &limits).unwrap();
            let dual = bca_duality(&p, &limits).unwrap();
            assert_eq!((brute.distance, &brute.bca_set), (d, &set), "{p:?}");
            assert_eq!((dual.distance, &dual.bca_set), (d, &set), "{p:?}");
            assert!(dual.indices.windows(2).all(|w| w[0] == w[1]));
            assert_eq!(dual.indices[0], index_general(&p, &limits).unwrap());
            for t in &set {
                assert!(is_maximal_completion(t, &p, &limits).unwrap());
            }
        }
    }
}

#[test]
fn solvers_agree_on_random_preorders_of_five() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let p = random_preorder(5, &mut rng);
        let brute = bca_bruteforce(&p, &limits).unwrap();
        let dual = bca_duality(&p, &limits).unwrap();
        assert_eq!(brute.bca_set, dual.bca_set);
        assert_eq!(brute.distance, dual.distance);
    }
}

#[test]
fn index_of_a_preorder_is_the_best_completion_index() {
    let limits = Limits::default();
    for p in all_preorders(4) {
        let want = completions(&p).iter().map(index_oracle).max().unwrap();
        assert_eq!(index_general(&p, &limits).unwrap(), BigCount::from(want));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..40 {
        let p = random_preorder(5, &mut rng);
        let want = completions(&p).iter().map(index_oracle).max().unwrap();
        assert_eq!(index_general(&p, &limits).unwrap(), BigCount::from(want));
    }
}

#[test]
fn index_bounds() {
    let limits = Limits::default();
    for n in 1..=4 {
        let lo = 2 * ((1u128 << n) - 1);
        let hi = n as u128 * (1u128 << n);
        for p in all_preorders(n) {
            let v = index_general(&p, &limits).unwrap().to_u128().unwrap();
            assert!(lo <= v && v <= hi);
        }
    }
}

#[test]
fn index_identities_on_complete_preorders() {
    for n in 1..=5 {
        let g = GroundSet::indexed("x", n).unwrap();
        for t in all_total_preorders(&g) {
            let i = index_total(&t);
            assert_eq!(i, BigCount::from(index_oracle(&t)));
            assert_eq!(psi(&t).double(n as u32).to_integer().unwrap(), i.0);
            assert_eq!(psi(&t), f_layers(&t.block_sizes()).unwrap());
        }
    }
}

#[test]
fn layer_split_identity() {
    fn tuples(total: usize) -> Vec<Vec<usize>> {
        if total == 0 {
            return vec![vec![]];
        }
        (1..=total)
            .flat_map(|first| {
                tuples(total - first).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }
    for total in 1..=6 {
        for sizes in tuples(total) {
            for k in 1..sizes.len() {
                let head: usize = sizes[..k].iter().sum();
                let whole = f_layers(&sizes).unwrap();
                let split = f_layers(&sizes[..k]).unwrap()
                    + f_layers(&sizes[k..]).unwrap().halve(head as u32);
                assert_eq!(whole, split, "{sizes:?} at {k}");
            }
        }
    }
    assert_eq!(
        f_layers(&[1, 1, 1]).unwrap(),
        DyadicRational::new(7u32.into(), 2)
    );
}

#[test]
fn index_grows_with_coarsening() {
    let g = GroundSet::indexed("x", 4).unwrap();
    let ts = all_total_preorders(&g);
    for a in &ts {
        for b in &ts {
            if a.is_contained_in(b) {
                assert!(index_total(a) <= index_total(b));
            }
        }
    }
}

#[test]
fn canonical_completion_is_optimal_when_the_condition_holds() {
    let limits = Limits::default();
    for n in 1..=4 {
        for p in all_preorders(n) {
            let c = condition_star(&p, &limits).unwrap();
            let brute = bca_bruteforce(&p, &limits).unwrap();
            let canonical = canonical_completion(&p);
            match c.verdict {
                Verdict::Strict => assert_eq!(brute.bca_set, vec![canonical]),
                Verdict::Weak => assert!(brute.bca_set.contains(&canonical)),
                Verdict::Fails => {}
            }
            match bca_canonical(&p, &limits).unwrap() {
                CanonicalOutcome::Applies { report, .. } => {
                    assert_eq!(report.exhaustive, c.verdict == Verdict::Strict);
                    assert_eq!(report.distance, brute.distance);
                }
                CanonicalOutcome::NotApplicable(r) => assert_eq!(r.verdict, Verdict::Fails),
            }
        }
    }
}

#[test]
fn covering_radius_matches_the_oracle() {
    let limits = Limits::default();
    let mut frozen = Vec::new();
    for n in 1..=4 {
        let want = all_preorders(n)
            .iter()
            .map(|p| bca_oracle(p).0)
            .max()
            .unwrap();
        let got = covering_radius(GroundSet::indexed("x", n).unwrap(), &limits).unwrap();
        assert_eq!(got.radius, want);
        assert_eq!(bca_oracle(&got.witness).0, want);
        frozen.push(got.radius);
    }
    assert_eq!(frozen, vec![0, 0, 1, 4]);
}
