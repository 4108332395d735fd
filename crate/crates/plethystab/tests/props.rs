//! Randomized algebraic properties, kept lean: the exhaustive ranges live in
//! the sweep module; these probe the same laws at random points.

use plethystab::{
    coeff as monomial_coeff, dominance_leq, enumerate_ssyt, from_gt, h_plethysm_poly,
    partitions_of, to_gt, IntSeq, Partition,
};
use proptest::prelude::*;

fn arb_partition(max_weight: i64) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|w| {
        let all = partitions_of(w, (w as usize).max(1));
        prop::sample::select(all)
    })
}

fn same_weight_triple(max_weight: i64) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1..=max_weight).prop_flat_map(|w| {
        let all = partitions_of(w, w as usize);
        (
            prop::sample::select(all.clone()),
            prop::sample::select(all.clone()),
            prop::sample::select(all),
        )
    })
}

fn reference_partition_count(n: i64, max_len: usize) -> u64 {
    // Independent of the generator under test: P(n, k) partitions of n into
    // at most k parts, via P(n, k) = P(n, k-1) + P(n-k, k).
    fn p(n: i64, k: usize, memo: &mut std::collections::HashMap<(i64, usize), u64>) -> u64 {
        if n == 0 {
            return 1;
        }
        if n < 0 || k == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&(n, k)) {
            return v;
        }
        let v = p(n, k - 1, memo) + p(n - k as i64, k, memo);
        memo.insert((n, k), v);
        v
    }
    p(n, max_len, &mut std::collections::HashMap::new())
}

proptest! {
    #[test]
    fn dominance_is_a_partial_order((a, b, c) in same_weight_triple(8)) {
        prop_assert!(dominance_leq(&a, &a).unwrap());
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &c).unwrap() {
            prop_assert!(dominance_leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn dominance_rejects_weight_mismatch(a in arb_partition(6), b in arb_partition(6)) {
        let comparable = a.weight() == b.weight();
        prop_assert_eq!(dominance_leq(&a, &b).is_ok(), comparable);
    }

    #[test]
    fn scaling_distributes_over_addition(
        a in prop::collection::vec(-6i64..=6, 0..6),
        b in prop::collection::vec(-6i64..=6, 0..6),
        k in -4i64..=4,
    ) {
        let a = IntSeq::new(a);
        let b = IntSeq::new(b);
        let lhs = a.add(&b).scale(k);
        let rhs = a.scale(k).add(&b.scale(k));
        prop_assert_eq!(lhs.entries(), rhs.entries());
    }

    #[test]
    fn padding_preserves_sum_and_norm_is_prefix_total(
        a in prop::collection::vec(0i64..=6, 0..6),
        extra in 0usize..4,
    ) {
        let a = IntSeq::new(a);
        let padded = a.pad(a.len() + extra).unwrap();
        prop_assert_eq!(a.sum(), padded.sum());
        let prefix_total: i128 = padded.cumulative().entries().iter().map(|&e| e as i128).sum();
        prop_assert_eq!(padded.seq_norm(), prefix_total);
    }

    #[test]
    fn partition_generator_is_complete_and_strictly_ordered(
        n in 0i64..=10,
        max_len in 0usize..=5,
    ) {
        let all = partitions_of(n, max_len);
        prop_assert_eq!(all.len() as u64, reference_partition_count(n, max_len));
        for p in &all {
            prop_assert_eq!(p.weight(), n as i128);
            prop_assert!(p.nonzero_len() <= max_len);
        }
        for w in all.windows(2) {
            // Listed first-part-descending; Partition's lexicographic order
            // must strictly decrease.
            prop_assert!(w[0] > w[1]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pattern_roundtrip_at_random_points(
        tableaux in (1usize..=4, 1i64..=6).prop_flat_map(|(n, w)| {
            let shapes = partitions_of(w, n);
            prop::sample::select(shapes).prop_map(move |s| enumerate_ssyt(&s, n))
        }),
        index in any::<prop::sample::Index>(),
    ) {
        if tableaux.is_empty() {
            return Ok(());
        }
        let t = &tableaux[index.index(tableaux.len())];
        let pattern = to_gt(t);
        prop_assert!(pattern.validate().is_ok());
        prop_assert_eq!(&from_gt(&pattern).unwrap(), t);
    }

    #[test]
    fn h_plethysm_polynomials_are_symmetric(
        lambda in arb_partition(3),
        mu in arb_partition(3),
        perm in prop::sample::select(vec![
            vec![0usize, 2, 1], vec![1, 0, 2], vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0],
        ]),
    ) {
        let poly = h_plethysm_poly(&lambda.as_seq(), &mu, 3).unwrap();
        for (exp, c) in poly.terms() {
            let permuted: Vec<i64> = perm.iter().map(|&i| exp[i]).collect();
            prop_assert_eq!(
                &monomial_coeff(&poly, &IntSeq::new(permuted)),
                c,
                "exponent {:?} under {:?}",
                exp,
                perm
            );
        }
    }
}
