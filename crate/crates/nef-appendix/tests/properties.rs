use lgm_appendix::{build_weight_matrix, run_appendix, NefPartition};
use proptest::prelude::*;

/// Columns of `f_j` for the weight matrix of P(2, k+2).
fn f_columns(k: usize, j: usize) -> Vec<usize> {
    match j {
        1 => vec![1],
        j if j == k + 1 => vec![3 * k],
        j => vec![j, 2 * k + j - 1],
    }
}

/// A shuffled choice of the polynomials `f_j`, cut into groups of the given
/// sizes, with the distinguished column picked by `pick`.
fn partition_strategy() -> impl Strategy<Value = (usize, Vec<usize>, NefPartition)> {
    (2usize..=4)
        .prop_flat_map(|k| {
            let order = Just((1..=k + 1).collect::<Vec<_>>()).prop_shuffle();
            let sizes = prop::collection::vec(1usize..=3, 0..=3);
            (Just(k), order, sizes, prop::collection::vec(any::<usize>(), 3))
        })
        .prop_filter_map("degrees must fit", |(k, order, sizes, pick)| {
            if sizes.iter().sum::<usize>() > k + 1 {
                return None;
            }
            let mut em = Vec::new();
            let mut sm = Vec::new();
            let mut next = 0;
            for (m, &d) in sizes.iter().enumerate() {
                let mut cols: Vec<usize> =
                    order[next..next + d].iter().flat_map(|&j| f_columns(k, j)).collect();
                cols.sort_unstable();
                sm.push(cols[pick[m] % cols.len()]);
                em.push(cols);
                next += d;
            }
            let p = NefPartition {
                e: (k + 1..=2 * k).collect(),
                em,
                sm,
            };
            Some((k, sizes, p))
        })
}

proptest! {
    #[test]
    fn valid_partitions_give_laurent_mirrors((k, degrees, p) in partition_strategy()) {
        let d = build_weight_matrix(k).unwrap();
        p.validate(&d, Some(&degrees)).unwrap();
        let t = run_appendix(k, &degrees, Some(&p)).unwrap();
        prop_assert_eq!(t.result.vars().len(), 2 * k - degrees.len());
        prop_assert!(t.result.has_positive_coefficients());
    }
}
