//! Randomized invariants over the public API.

use proptest::collection::vec;
use proptest::prelude::*;

use oddprime::coprime::{bertrand_prime, coprime_matching, is_prime, reorder_power_of_two};
use oddprime::{
    build_family, gcd, label_family, rn_sequence, verify_labeling, FamilySpec, Graph, Labeling,
};

proptest! {
    /// Deleting edges never invalidates a valid labeling.
    #[test]
    fn edge_deletion_monotonicity(n in 2..=50usize, mask in any::<u64>()) {
        let g = build_family(&FamilySpec::MaximalPrimeGraph { n }).unwrap();
        let seq = rn_sequence(n).unwrap();
        let ell = Labeling::new(seq.into_iter().enumerate().map(|(i, l)| (i + 1, l)));
        prop_assert!(verify_labeling(&g, &ell).unwrap().is_valid);
        let mut i = 0u32;
        let sub = g.spanning_subgraph(|_, _| {
            i = i.wrapping_add(1);
            mask & (1 << (i % 64)) != 0
        });
        prop_assert!(verify_labeling(&sub, &ell).unwrap().is_valid);
    }

    /// Graph JSON serialization is lossless.
    #[test]
    fn graph_round_trip(n in 1..=12usize, raw_edges in vec((1..=12usize, 1..=12usize), 0..30)) {
        let edges: Vec<(usize, usize)> = raw_edges
            .into_iter()
            .filter(|&(u, v)| u != v && u <= n && v <= n)
            .collect();
        let g = Graph::new(n, edges).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(g, back);
    }

    /// Labeling JSON serialization is lossless.
    #[test]
    fn labeling_round_trip(labels in vec((1..=40usize, 1..=99u64), 0..20)) {
        let ell = Labeling::new(labels);
        let s = serde_json::to_string(&ell).unwrap();
        let back: Labeling = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(ell, back);
    }

    /// The reordered run is a permutation ending at the target with
    /// power-of-two steps throughout.
    #[test]
    fn reorder_invariants(m_half in 0..100u64, count in 1..=64usize, pick in any::<prop::sample::Index>()) {
        let m = 2 * m_half + 1;
        let target = m + 2 * pick.index(count) as u64;
        let out = reorder_power_of_two(m, count, target).unwrap();
        let mut sorted = out.clone();
        sorted.sort_unstable();
        let expect: Vec<u64> = (0..count as u64).map(|i| m + 2 * i).collect();
        prop_assert_eq!(sorted, expect);
        prop_assert_eq!(*out.last().unwrap(), target);
        for w in out.windows(2) {
            prop_assert!(w[0].abs_diff(w[1]).is_power_of_two());
        }
    }

    /// The matcher pairs every odd 1..2n-1 with a coprime partner, onto.
    #[test]
    fn coprime_matching_invariants(n in 1..=40usize, j in 1..=5u64) {
        let a = 2 * n as u64 * j + 1;
        let h = coprime_matching(n, a, 2).unwrap();
        prop_assert_eq!(h.pairs.len(), n);
        let mut images: Vec<u64> = h.pairs.iter().map(|&(_, s)| s).collect();
        for (i, &(d, s)) in h.pairs.iter().enumerate() {
            prop_assert_eq!(d, 2 * i as u64 + 1);
            prop_assert_eq!(gcd(d, s), 1);
        }
        images.sort_unstable();
        let expect: Vec<u64> = (0..n as u64).map(|i| a + 2 * i).collect();
        prop_assert_eq!(images, expect);
    }

    /// Bertrand primes land strictly inside (t, 2t) and are maximal there.
    #[test]
    fn bertrand_invariants(t in 2..=5000u64) {
        let p = bertrand_prime(t);
        prop_assert!(is_prime(p));
        prop_assert!(t < p && p < 2 * t);
        prop_assert!(((p + 1)..2 * t).all(|q| !is_prime(q)));
    }

    /// Constructive labelers stay sound across a random slice of the
    /// parameter space.
    #[test]
    fn random_family_instances_label_validly(seed in any::<u8>()) {
        let spec = match seed % 8 {
            0 => FamilySpec::Snake { k: 3 + (seed as usize / 8) % 6, n: 2 + (seed as usize / 48) % 4 },
            1 => FamilySpec::Book { n: 1 + (seed as usize / 8) % 6, k: 3 + (seed as usize / 48) % 5 },
            2 => FamilySpec::GeneralizedPetersen { n: 3 + (seed as usize / 8) % 28, k: 1 },
            3 => FamilySpec::CycleChain { k: 3 + (seed as usize / 8) % 6, n: 1 + (seed as usize / 48) % 5 },
            4 => FamilySpec::TToedCaterpillar { n: 1 + (seed as usize / 8) % 8, t: (seed as usize / 64) % 4 },
            5 => FamilySpec::Firecracker { n: 2 + (seed as usize / 8) % 7, k: 3 + (seed as usize / 56) % 4 },
            6 => FamilySpec::StackedPrism { k: [3, 4, 5, 6, 8][(seed as usize / 8) % 5], n: 1 + (seed as usize / 40) % 6 },
            _ => FamilySpec::PerfectBinaryTree { levels: 1 + (seed as usize / 8) % 6 },
        };
        let g = build_family(&spec).unwrap();
        let ell = label_family(&spec).unwrap();
        prop_assert!(verify_labeling(&g, &ell).unwrap().is_valid, "{:?}", spec);
    }
}
