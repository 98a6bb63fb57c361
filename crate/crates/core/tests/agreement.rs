mod common;

use common::{ari_by_pairs, set_partitions};
use kselect::evaluate::{centiles, mean_ari};
use kselect::{adjusted_rand_index, rand_index, summarize};
use proptest::prelude::*;

#[test]
fn ari_agrees_with_pair_enumeration_on_all_small_partitions() {
    for n in 2..=6 {
        let parts = set_partitions(n);
        for a in &parts {
            for b in &parts {
                let got = adjusted_rand_index(a, b).unwrap();
                let want = ari_by_pairs(a, b);
                assert!((got - want).abs() < 1e-12, "{a:?} {b:?}: {got} vs {want}");
            }
        }
    }
    assert_eq!(set_partitions(6).len(), 203);
}

#[test]
fn crossed_halves_give_minus_one_half() {
    assert_eq!(adjusted_rand_index(&[1, 1, 2, 2], &[1, 2, 1, 2]).unwrap(), -0.5);
}

#[test]
fn summaries_match_a_sorted_list() {
    let v = [7.0, 1.0, 4.0, 9.0, 3.0, 3.0, 8.0];
    let mut sorted = v.to_vec();
    sorted.sort_by(f64::total_cmp);
    let s = summarize(&v).unwrap();
    assert_eq!(s.median, sorted[3]);
    // h = 0.6 and 5.4 on the sorted positions
    assert!((s.p10 - (sorted[0] + 0.6 * (sorted[1] - sorted[0]))).abs() < 1e-12);
    assert!((s.p90 - (sorted[5] + 0.4 * (sorted[6] - sorted[5]))).abs() < 1e-12);
    let single = summarize(&[42.0]).unwrap();
    assert_eq!((single.p10, single.median, single.p90), (42.0, 42.0, 42.0));
    assert_eq!(centiles(&v, &[0.0, 100.0]).unwrap(), vec![1.0, 9.0]);
}

fn labels() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    (2usize..40).prop_flat_map(|n| (prop::collection::vec(0usize..5, n), prop::collection::vec(0usize..5, n)))
}

proptest! {
    #[test]
    fn relabelling_either_side_changes_nothing((a, b) in labels(), shift in 1usize..50) {
        let ra: Vec<usize> = a.iter().map(|&l| (4 - l) * 3 + shift).collect();
        let rb: Vec<usize> = b.iter().map(|&l| (l + shift) % 5 + 10).collect();
        let ari = adjusted_rand_index(&a, &b).unwrap();
        prop_assert_eq!(ari, adjusted_rand_index(&ra, &b).unwrap());
        prop_assert_eq!(ari, adjusted_rand_index(&a, &rb).unwrap());
        prop_assert_eq!(rand_index(&a, &b).unwrap(), rand_index(&ra, &rb).unwrap());
    }

    #[test]
    fn permuting_points_changes_nothing((a, b) in labels(), rot in 0usize..40) {
        let n = a.len();
        let pa: Vec<usize> = (0..n).map(|i| a[(i + rot) % n]).collect();
        let pb: Vec<usize> = (0..n).map(|i| b[(i + rot) % n]).collect();
        let ari = adjusted_rand_index(&a, &b).unwrap();
        prop_assert_eq!(ari, adjusted_rand_index(&pa, &pb).unwrap());
        prop_assert_eq!(rand_index(&a, &b).unwrap(), rand_index(&pa, &pb).unwrap());
        prop_assert!(ari <= 1.0);
    }

    #[test]
    fn symmetric_and_self_agreement((a, b) in labels()) {
        prop_assert_eq!(adjusted_rand_index(&a, &b).unwrap(), adjusted_rand_index(&b, &a).unwrap());
        prop_assert_eq!(adjusted_rand_index(&a, &a).unwrap(), 1.0);
        prop_assert_eq!(mean_ari(&a, &[b.clone(), b.clone()]).unwrap(), adjusted_rand_index(&a, &b).unwrap());
    }
}
