use std::collections::HashSet;

use belyi::perm::{
    all_permutations, centralizer_order, conjugacy_class, factorial, group_order, is_transitive, orbit, Permutation,
};
use belyi::passports::enumerate_partitions;
use num_bigint::BigUint;
use proptest::prelude::*;

fn perm(d: usize) -> impl Strategy<Value = Permutation> {
    Just((0..d as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn perms_of_same_degree(max: usize, count: usize) -> impl Strategy<Value = Vec<Permutation>> {
    (1..=max).prop_flat_map(move |d| prop::collection::vec(perm(d), count))
}

/// The group generated by `gens`, by closing under multiplication.
fn closure(gens: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(gens[0].degree());
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = p.compose(g).unwrap();
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_and_composition(ps in perms_of_same_degree(9, 3)) {
        let (a, b, c) = (&ps[0], &ps[1], &ps[2]);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        let left = a.compose(b).unwrap().compose(c).unwrap();
        let right = a.compose(&b.compose(c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn conjugation_keeps_cycle_type(ps in perms_of_same_degree(12, 2)) {
        prop_assert_eq!(ps[0].conjugate(&ps[1]).unwrap().cycle_type(), ps[0].cycle_type());
    }

    #[test]
    fn order_and_parity(p in (1usize..=10).prop_flat_map(perm)) {
        let mut q = p.clone();
        for _ in 1..p.order() {
            prop_assert!(!q.is_identity());
            q = q.compose(&p).unwrap();
        }
        prop_assert!(q.is_identity());
        let transpositions: usize = p.cycles().iter().map(|c| c.len() - 1).sum();
        prop_assert_eq!(p.is_even(), transpositions.is_multiple_of(2));
    }

    #[test]
    fn schreier_sims_matches_closure(ps in perms_of_same_degree(6, 2)) {
        let n = closure(&ps).len();
        prop_assert_eq!(group_order(&ps).unwrap(), BigUint::from(n));
    }

    #[test]
    fn orbit_stabilizer(ps in perms_of_same_degree(6, 2)) {
        let d = ps[0].degree();
        let mut images = HashSet::new();
        for g in all_permutations(d) {
            images.insert((ps[0].conjugate(&g).unwrap(), ps[1].conjugate(&g).unwrap()));
        }
        let c = centralizer_order(&ps).unwrap();
        prop_assert_eq!(BigUint::from(images.len()) * c, factorial(d));
    }

    #[test]
    fn transitivity_is_a_full_orbit(ps in perms_of_same_degree(8, 2)) {
        let d = ps[0].degree();
        prop_assert_eq!(is_transitive(&ps, d), orbit(&ps, 0, d).len() == d);
    }

    #[test]
    fn text_round_trip(p in (1usize..=9).prop_flat_map(perm)) {
        let q = Permutation::parse_cycles(&p.to_string(), p.degree()).unwrap();
        prop_assert_eq!(q, p);
    }
}

#[test]
fn class_sizes_sum_to_factorial() {
    for d in 1..=6 {
        let mut total = BigUint::from(0u32);
        for ct in enumerate_partitions(d).unwrap() {
            let class = conjugacy_class(&ct);
            assert_eq!(BigUint::from(class.len()), ct.class_size(), "{ct}");
            assert!(class.iter().all(|p| p.cycle_type() == ct));
            total += ct.class_size();
        }
        assert_eq!(total, factorial(d));
    }
}

#[test]
fn symmetric_and_alternating_orders() {
    let s = Permutation::from_cycles(7, &[vec![1, 2, 3, 4, 5, 6, 7]]).unwrap();
    let t = Permutation::from_cycles(7, &[vec![1, 2]]).unwrap();
    assert_eq!(group_order(&[s.clone(), t]).unwrap(), factorial(7));
    let r = Permutation::from_cycles(7, &[vec![1, 2, 3]]).unwrap();
    assert_eq!(group_order(&[s, r]).unwrap(), factorial(7) / BigUint::from(2u32));
}

#[test]
fn bad_images_are_rejected() {
    assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
}
