use proptest::prelude::*;

use approxquasi::edit::{factor_coverage, p_ed_table, p_lev_table, precompute_special};
use approxquasi::hamming::{factor_coverage_all, k_restricted_covers, k_restricted_seeds, prefix_coverage};
use approxquasi::lcpk::{pref_k, Kangaroo};
use approxquasi::oracle::{brute_restricted_min_k, Variant};
use approxquasi::restricted::restricted_seeds_ed;
use approxquasi::text::pad_for_seed;
use approxquasi::{Metric, PenaltyMatrix, Symbol, Text, WILDCARD};

fn text(max_len: usize, sigma: u32) -> impl Strategy<Value = Text> {
    prop::collection::vec(0..sigma, 0..=max_len).prop_map(move |s| Text::new(s, sigma as usize).unwrap())
}

/// Text where roughly one symbol in five is the wildcard.
fn partial_word(max_len: usize) -> impl Strategy<Value = Text> {
    prop::collection::vec(prop_oneof![4 => 0..3u32, 1 => Just(WILDCARD)], 0..=max_len)
        .prop_map(|s: Vec<Symbol>| Text::new(s, 3).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coverage_grows_with_k(t in text(20, 3)) {
        let low = factor_coverage_all(&t, 0);
        let high = factor_coverage_all(&t, 1);
        for (a, b, c) in low.iter() {
            prop_assert!(c <= high.get(a, b));
            prop_assert!(high.get(a, b) <= t.len());
        }
    }

    #[test]
    fn prefix_rows_match_factor_table(t in partial_word(20), k in 0usize..3) {
        let prefix = prefix_coverage(&t, &pref_k(&t, k)).unwrap();
        let factor = factor_coverage_all(&t, k);
        for len in 1..=t.len() {
            prop_assert_eq!(prefix[len], factor.get(0, len - 1));
        }
    }

    #[test]
    fn kangaroo_prefix_table(t in partial_word(24), k in 0usize..4) {
        prop_assert_eq!(Kangaroo::new(&t).pref_k(k), pref_k(&t, k));
    }

    #[test]
    fn levenshtein_routes_agree(t in text(12, 3), k in 0usize..3) {
        let waves = p_lev_table(&t, k).unwrap();
        let p = PenaltyMatrix::unit(t.sigma());
        let idx = precompute_special(&t, &p).unwrap();
        let special = p_ed_table(&t, k as i64, &idx, &p).unwrap();
        prop_assert_eq!(&waves, &special);
        prop_assert_eq!(factor_coverage(&t, Metric::Levenshtein, k as i64).unwrap(), waves.factor_coverage());
    }

    #[test]
    fn covers_are_seeds(t in text(14, 2), k in 0usize..2) {
        let covers = k_restricted_covers(&t, k);
        let seeds = k_restricted_seeds(&t, k);
        for e in &seeds.entries {
            if let Some(c) = covers.get(&e.factor).and_then(|c| c.threshold) {
                prop_assert!(e.threshold.is_some_and(|s| s <= c));
            }
        }
    }

    #[test]
    fn hamming_seed_thresholds(t in text(8, 2), k in 0usize..3) {
        let fast = k_restricted_seeds(&t, k);
        let brute = brute_restricted_min_k(&t, Metric::Hamming, Variant::Seed);
        for e in &fast.entries {
            let expected = brute.get(&e.factor).unwrap().threshold.filter(|&x| x <= k as i64);
            prop_assert_eq!(e.threshold, expected);
        }
    }

    #[test]
    fn padding_shape(t in text(10, 3)) {
        let p = pad_for_seed(&t);
        let n = t.len();
        prop_assert_eq!(p.len(), 3 * n);
        prop_assert!(p.symbols()[..n].iter().chain(&p.symbols()[2 * n..]).all(|&x| x == WILDCARD));
        prop_assert_eq!(&p.symbols()[n..2 * n], t.symbols());
    }

    #[test]
    fn seed_thresholds_with_wildcards(t in partial_word(8)) {
        let p = PenaltyMatrix::unit(3);
        let fast = restricted_seeds_ed(&t, &p).unwrap();
        let brute = brute_restricted_min_k(&t, Metric::Edit(&p), Variant::Seed);
        prop_assert_eq!(fast, brute);
    }
}
