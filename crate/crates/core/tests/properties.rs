//! Property-based tests: algebraic invariants checked on randomly drawn
//! shapes, class types, ring elements and group elements.

use proptest::prelude::*;
use std::collections::HashSet;

use reflecta_core::classify::quasi_bruteforce_r1;
use reflecta_core::cyclotomic::CycloInt;
use reflecta_core::group::{class_size_full, p_part, GroupElement, GroupKey};
use reflecta_core::mn::{character_value, character_value_spec, CycleSpec};
use reflecta_core::necklace::necklace_of;
use reflecta_core::partition::{multipartition_count, MultiPartition, Partition};
use reflecta_core::ribbon::remove_border_strips;

/// A random cyclotomic integer of the given order, as a small sum of
/// scaled roots of unity.
fn cyclo_of_order(order: usize) -> impl Strategy<Value = CycloInt> {
    prop::collection::vec(-5i64..=5, order).prop_map(move |coeffs| {
        coeffs
            .iter()
            .enumerate()
            .fold(CycloInt::zero(order), |acc, (k, &c)| {
                &acc + &CycloInt::root_of_unity(order, k).scale(c)
            })
    })
}

/// Three random cyclotomic integers sharing one order.
fn cyclo_triple() -> impl Strategy<Value = (CycloInt, CycloInt, CycloInt)> {
    (1usize..=12).prop_flat_map(|ord| {
        (
            cyclo_of_order(ord),
            cyclo_of_order(ord),
            cyclo_of_order(ord),
        )
    })
}

/// A random partition of size at most 8.
fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=4, 0..=4).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    })
}

/// A random multipartition drawn uniformly from `Y(r,n)`, `r ≤ 3`, `n ≤ 5`.
fn multipartition() -> impl Strategy<Value = MultiPartition> {
    (1usize..=3, 0usize..=5, any::<prop::sample::Index>()).prop_map(|(r, n, idx)| {
        let all = MultiPartition::enumerate(r, n);
        all[idx.index(all.len())].clone()
    })
}

/// A shape together with a class type of the same group.
fn shape_and_type() -> impl Strategy<Value = (MultiPartition, MultiPartition)> {
    (
        1usize..=3,
        1usize..=5,
        any::<prop::sample::Index>(),
        any::<prop::sample::Index>(),
    )
        .prop_map(|(r, n, i, j)| {
            let all = MultiPartition::enumerate(r, n);
            (all[i.index(all.len())].clone(), all[j.index(all.len())].clone())
        })
}

/// A random element of `G(r,1,n)` with `r ≤ 3`, `n ≤ 4`, plus a partner
/// for conjugation.
fn element_pair() -> impl Strategy<Value = (GroupElement, GroupElement)> {
    (1usize..=3, 1usize..=4).prop_flat_map(|(r, n)| {
        let colors = prop::collection::vec(0..r, n);
        let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        (colors.clone(), perm.clone(), colors, perm)
            .prop_map(move |(c1, p1, c2, p2)| {
                (GroupElement::new(r, c1, p1), GroupElement::new(r, c2, p2))
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, ..ProptestConfig::default() })]

    #[test]
    fn prop_cyclotomic_ring_axioms((a, b, c) in cyclo_triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &CycloInt::one(a.order()), a.clone());
    }

    #[test]
    fn prop_cyclotomic_conjugation((a, b, _) in cyclo_triple()) {
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        // Numerical embedding is a ring map.
        let lhs = (&a * &b).to_complex();
        let rhs = a.to_complex() * b.to_complex();
        prop_assert!((lhs - rhs).norm() < 1e-6);
    }

    #[test]
    fn prop_serde_roundtrips(lambda in multipartition(), (a, _, _) in cyclo_triple()) {
        let json = serde_json::to_string(&lambda).unwrap();
        prop_assert_eq!(serde_json::from_str::<MultiPartition>(&json).unwrap(), lambda);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<CycloInt>(&json).unwrap(), a);
    }

    #[test]
    fn prop_partition_conjugate_involution(mu in partition()) {
        prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
        prop_assert_eq!(mu.conjugate().size(), mu.size());
    }

    #[test]
    fn prop_border_strip_soundness(shape in partition(), len in 1usize..=6) {
        let removals = remove_border_strips(&shape, len);
        let mut seen = HashSet::new();
        for removal in &removals {
            prop_assert!(shape.contains(&removal.remaining));
            prop_assert_eq!(removal.remaining.size() + len, shape.size());
            prop_assert!(removal.height < len);
            prop_assert!(seen.insert(removal.remaining.clone()), "duplicate remainder");
        }
    }

    #[test]
    fn prop_mn_cycle_order_independent(
        (lambda, class_type) in shape_and_type(),
        seed in any::<prop::sample::Index>(),
    ) {
        prop_assume!(lambda.total() == class_type.total());
        let canonical = CycleSpec::from_type(&class_type);
        let mut cycles = canonical.cycles().to_vec();
        // A deterministic pseudo-shuffle driven by the seed.
        let k = cycles.len();
        if k > 1 {
            cycles.rotate_left(seed.index(k));
            cycles.swap(0, seed.index(k));
        }
        let shuffled = CycleSpec::from_cycles(cycles);
        prop_assert_eq!(
            character_value_spec(&lambda, &canonical),
            character_value_spec(&lambda, &shuffled)
        );
    }

    #[test]
    fn prop_conjugation_preserves_type((g, h) in element_pair()) {
        let conjugated = g.conjugated_by(&h);
        prop_assert_eq!(conjugated.type_of(), g.type_of());
        prop_assert_eq!(conjugated.order(), g.order());
        prop_assert_eq!(
            conjugated.color_sum() % g.r(),
            g.color_sum() % g.r()
        );
    }

    #[test]
    fn prop_enumeration_counts(r in 1usize..=4, n in 0usize..=6) {
        let all = MultiPartition::enumerate(r, n);
        prop_assert_eq!(all.len() as u128, multipartition_count(r, n));
        let distinct: HashSet<_> = all.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), all.len());
        prop_assert!(all.iter().all(|l| l.r() == r && l.total() == n));
        // Enumeration is deterministic.
        prop_assert_eq!(MultiPartition::enumerate(r, n), all);
    }

    #[test]
    fn prop_p_part_decomposition(x in 1u128..=1_000_000, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let part = p_part(x, p);
        prop_assert_eq!(x % part, 0);
        prop_assert!(!(x / part).is_multiple_of(p as u128));
    }

    #[test]
    fn prop_necklace_canonical_is_minimal_rotation(
        (r, q) in prop::sample::select(vec![(2usize, 2usize), (3, 3), (4, 2), (4, 4), (6, 3)]),
        n in 1usize..=4,
        idx in any::<prop::sample::Index>(),
    ) {
        let all = MultiPartition::enumerate(r, n);
        let lambda = &all[idx.index(all.len())];
        let necklace = necklace_of(lambda, q).unwrap();
        let canonical = necklace.canonical();
        prop_assert_eq!(canonical.canonical(), canonical.clone());
        for t in 0..q {
            prop_assert!(canonical <= necklace.rotated(t));
        }
        prop_assert_eq!(necklace.stabilizer_order() * necklace.orbit_size(), q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn prop_verdicts_invariant_under_slot_rotation(
        r in 2usize..=3,
        n in 2usize..=4,
        shift in 1usize..=2,
        idx in any::<prop::sample::Index>(),
        pidx in any::<prop::sample::Index>(),
    ) {
        // Rotating every component by the same offset multiplies the
        // character by a linear character, which never vanishes; the
        // verdict must not move.
        let key = GroupKey::new(r, 1, n).unwrap();
        let all = MultiPartition::enumerate(r, n);
        let lambda = &all[idx.index(all.len())];
        let primes = key.primes();
        let p = primes[pidx.index(primes.len())];
        let rotated = MultiPartition::new(
            (0..r).map(|j| lambda.component((j + shift) % r).clone()).collect(),
        );
        let original = quasi_bruteforce_r1(&key, lambda, p).unwrap();
        let moved = quasi_bruteforce_r1(&key, &rotated, p).unwrap();
        prop_assert_eq!(original.quasi, moved.quasi);
        prop_assert_eq!(original.degree, moved.degree);
    }

    #[test]
    fn prop_class_sizes_partition_the_group(r in 1usize..=3, n in 1usize..=5) {
        let key = GroupKey::new(r, 1, n).unwrap();
        let total: u128 = MultiPartition::enumerate(r, n)
            .iter()
            .map(class_size_full)
            .sum();
        prop_assert_eq!(total, key.order());
    }

    #[test]
    fn prop_character_values_bounded_by_degree((lambda, class_type) in shape_and_type()) {
        prop_assume!(lambda.total() == class_type.total());
        // Any character value is a sum of deg-many roots of unity.
        let value = character_value(&lambda, &class_type).to_complex();
        let degree = reflecta_core::mn::degree(&lambda) as f64;
        prop_assert!(value.norm() <= degree + 1e-6);
    }
}
