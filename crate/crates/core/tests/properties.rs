//! Property tests for the structural invariants.

use proptest::prelude::*;
use shades::asympt::{dml_ratio, log_binomial};
use shades::extremal::{max_t_intersecting, SearchBudget, Witness};
use shades::families::{frankl_card, frankl_family, is_t_intersecting, FranklIndex};
use shades::setkit::{
    binomial, covered_colourings_count, enumerate_k_subsets, parse_family, shade_family,
    write_family, Count, KSubset, SetFamily,
};

fn ksubset_strategy(n: u32) -> impl Strategy<Value = KSubset> {
    (0u64..(1 << n)).prop_map(move |mask| KSubset::new(mask, n).unwrap())
}

proptest! {
    #[test]
    fn canonical_form_is_permutation_invariant(
        n in 2u32..=10,
        seed in any::<u64>(),
    ) {
        let k = 1 + (seed % u64::from(n)) as u32;
        let all = enumerate_k_subsets(n, k).unwrap();
        // Pseudo-random subset of members plus a duplicate, shuffled crudely.
        let mut picked: Vec<u64> = all
            .members()
            .iter()
            .enumerate()
            .filter(|(i, _)| (seed >> (i % 48)) & 1 == 1)
            .map(|(_, &m)| m)
            .collect();
        if let Some(&first) = picked.first() {
            picked.push(first);
        }
        picked.reverse();
        let a = SetFamily::new(n, k, picked.clone()).unwrap();
        let mid = picked.len() / 2;
        picked.rotate_left(mid);
        let b = SetFamily::new(n, k, picked).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn shade_and_m_shade_size_laws(n in 1u32..=12, mask_bits in any::<u64>()) {
        let mask = mask_bits & ((1 << n) - 1);
        let x = KSubset::new(mask, n).unwrap();
        if x.card() < n {
            prop_assert_eq!(x.shade().unwrap().len() as u32, n - x.card());
        }
        for m in x.card()..=n {
            let size = x.m_shade(m).unwrap().len();
            prop_assert_eq!(
                Count::from(size),
                binomial(u64::from(n - x.card()), i64::from(m - x.card()))
            );
        }
    }

    #[test]
    fn m_shade_family_is_monotone(n in 2u32..=9, seed in any::<u64>()) {
        let k = 1 + (seed % u64::from(n / 2 + 1)) as u32;
        let all = enumerate_k_subsets(n, k).unwrap();
        let small: Vec<u64> = all
            .members()
            .iter()
            .enumerate()
            .filter(|(i, _)| (seed >> (i % 32)) & 1 == 1)
            .map(|(_, &m)| m)
            .collect();
        let sub = SetFamily::new(n, k, small.clone()).unwrap();
        let sup = all;
        for m in k..=n {
            let shade_sub = sub.m_shade(m).unwrap();
            let shade_sup = sup.m_shade(m).unwrap();
            prop_assert!(shade_sub
                .members()
                .iter()
                .all(|x| shade_sup.contains_mask(*x)));
        }
    }

    #[test]
    fn shade_family_union_matches_per_member(n in 2u32..=8, seed in any::<u64>()) {
        let members: Vec<KSubset> = (0u64..(1 << n))
            .filter(|m| m.count_ones() < n && (seed >> (m % 37)) & 1 == 1)
            .map(|m| KSubset::new(m, n).unwrap())
            .collect();
        let union = shade_family(&members).unwrap();
        for x in &members {
            for y in x.shade().unwrap().iter() {
                prop_assert!(union.contains(&y));
            }
        }
        for y in &union {
            prop_assert!(members
                .iter()
                .any(|x| x.is_subset_of(y) && y.card() == x.card() + 1));
        }
    }

    #[test]
    fn covered_colourings_respect_shade_bound(m in 2u32..=5, seed in any::<u64>()) {
        let n = 2 * m;
        let k = 1 + (seed % u64::from(m)) as u32;
        let all = enumerate_k_subsets(n, k).unwrap();
        let members: Vec<u64> = all
            .members()
            .iter()
            .enumerate()
            .filter(|(i, _)| (seed >> (i % 53)) & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let fam = SetFamily::new(n, k, members).unwrap();
        let covered = covered_colourings_count(&fam).unwrap();
        let bound = Count::from(2 * fam.m_shade(m).unwrap().len() as u64);
        prop_assert!(covered <= bound);
    }

    #[test]
    fn frankl_card_matches_enumeration(n in 1u32..=11, seed in any::<u64>()) {
        let t = 1 + (seed % u64::from(n)) as u32;
        let k = t + (seed >> 8) as u32 % (n - t + 1);
        let i = (seed >> 16) as u32 % ((n - t) / 2 + 1);
        let idx = FranklIndex::new(n, k, t, i).unwrap();
        prop_assert_eq!(
            frankl_card(idx),
            Count::from(frankl_family(idx).unwrap().len())
        );
    }

    #[test]
    fn family_text_round_trips(n in 1u32..=10, seed in any::<u64>()) {
        let k = (seed % u64::from(n + 1)) as u32;
        let all = enumerate_k_subsets(n, k).unwrap();
        let members: Vec<u64> = all
            .members()
            .iter()
            .enumerate()
            .filter(|(i, _)| (seed >> (i % 41)) & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let fam = SetFamily::new(n, k, members).unwrap();
        prop_assert_eq!(parse_family(&write_family(&fam)).unwrap(), fam);
    }

    #[test]
    fn dml_ratio_is_symmetric(n in 1u64..=2000, j_raw in any::<i64>()) {
        let j = j_raw.rem_euclid(n as i64 + 1);
        prop_assert_eq!(dml_ratio(n, j).unwrap(), dml_ratio(n, -j).unwrap());
    }

    #[test]
    fn log_binomial_exponentiates_to_pascal(n in 0u64..=60, seed in any::<u64>()) {
        let k = seed % (n + 1);
        use num_traits::ToPrimitive;
        let exact = binomial(n, k as i64).to_f64().unwrap();
        let got = log_binomial(n, k).unwrap().exp();
        prop_assert!((got / exact - 1.0).abs() < 1e-12);
    }
}

#[test]
fn max_witnesses_revalidate_exhaustively() {
    // Every optimal witness re-checks: the family is t-intersecting and its
    // size is the reported value.
    let budget = SearchBudget::default();
    for n in 1..=6u32 {
        for t in 1..=n {
            for k in t..=n {
                let r = max_t_intersecting(n, k, t, &budget).unwrap();
                let fam = match &r.witness_a {
                    Witness::Uniform(f) => f,
                    Witness::Mixed { .. } => unreachable!(),
                };
                assert!(is_t_intersecting(fam, t));
                assert_eq!(Count::from(fam.len()), r.value);
            }
        }
    }
}
