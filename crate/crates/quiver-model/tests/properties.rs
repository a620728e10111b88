use std::collections::BTreeSet;

use lgm_quiver::{
    build_lambda_start, build_mwgamma_weighting, build_quiver, history_after_start,
    select_blocks, Arrow, BlockHistory, Triplet,
};
use proptest::prelude::*;

fn degrees_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (2usize..8).prop_flat_map(|k| {
        proptest::collection::vec(1usize..=k + 1, 0..=k + 1).prop_map(move |mut d| {
            let mut sum = 0;
            d.retain(|&x| {
                if sum + x <= k + 1 {
                    sum += x;
                    true
                } else {
                    false
                }
            });
            (k, d)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn selected_blocks_are_disjoint_and_admissible((k, degrees) in degrees_strategy()) {
        let sel = select_blocks(k, &degrees).unwrap();
        prop_assert_eq!(sel.blocks.len(), degrees.len());
        let extremal = Arrow::new((k, 2), (k, 3));
        let mut used = BTreeSet::new();
        let mut q = build_quiver(k).unwrap();
        for (b, d) in sel.blocks.iter().zip(&sel.sorted.degrees) {
            prop_assert_eq!(b.size, *d);
            prop_assert!(!b.arrows.contains(&extremal));
            for a in &b.arrows {
                prop_assert!(used.insert(*a), "arrow {} used twice", a);
            }
            q = q.remove(&b.arrows).unwrap();
        }
        prop_assert!(q.contains(&extremal));
    }

    #[test]
    fn assembly_is_additive_over_partitions(k in 2usize..6, mask in any::<u64>()) {
        let t = Triplet::initial(k).unwrap();
        let all: Vec<Arrow> = t.quiver().arrows().iter().copied().collect();
        let (left, right): (Vec<(usize, Arrow)>, Vec<(usize, Arrow)>) =
            all.iter().copied().enumerate().partition(|(i, _)| mask >> i & 1 == 1);
        let full = t.superpotential().unwrap();
        let sum = match (left.is_empty(), right.is_empty()) {
            (true, _) => t.assemble(right.iter().map(|(_, a)| a)).unwrap(),
            (_, true) => t.assemble(left.iter().map(|(_, a)| a)).unwrap(),
            _ => t
                .assemble(left.iter().map(|(_, a)| a))
                .unwrap()
                .add(&t.assemble(right.iter().map(|(_, a)| a)).unwrap())
                .unwrap(),
        };
        prop_assert!(sum.equals(&full).unwrap());
    }

    #[test]
    fn start_weighting_matches_history_weighting(k in 2usize..10, s in 1usize..10) {
        prop_assume!(s <= k);
        let a = build_lambda_start(s, k).unwrap();
        let b = build_mwgamma_weighting(&history_after_start(s), s, k).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn literal_empty_history_at_row_two_is_not_a_history() {
    assert!(BlockHistory::new([], [], 2).validate(2).is_err());
}
