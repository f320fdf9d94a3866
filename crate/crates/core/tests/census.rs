use std::collections::BTreeMap;

use belyi::census::{enumerate_classes, passport_report, verify_fermat4, BelyiTriple, MonodromyTag};
use belyi::passports::{enumerate_partitions, rh_genus, RamificationType};
use belyi::perm::{all_permutations, centralizer_order, factorial, is_transitive, Permutation};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn ty(s: &str) -> RamificationType {
    s.parse().unwrap()
}

fn random_perm(d: usize, rng: &mut StdRng) -> Permutation {
    let mut v: Vec<u32> = (0..d as u32).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

/// Class counts per ramification type by brute force: every transitive pair
/// in S_d x S_d, grouped by testing conjugacy against each representative.
fn naive_counts(d: usize) -> BTreeMap<String, usize> {
    let perms = all_permutations(d);
    let mut reps: BTreeMap<String, Vec<(Permutation, Permutation)>> = BTreeMap::new();
    for s0 in &perms {
        for s1 in &perms {
            if !is_transitive(&[s0.clone(), s1.clone()], d) {
                continue;
            }
            let sinf = s0.compose(s1).unwrap().inverse();
            let key = RamificationType::new(s0.cycle_type(), s1.cycle_type(), sinf.cycle_type())
                .unwrap()
                .to_string();
            let list = reps.entry(key).or_default();
            let known = list.iter().any(|(r0, r1)| {
                perms
                    .iter()
                    .any(|g| s0.conjugate(g).unwrap() == *r0 && s1.conjugate(g).unwrap() == *r1)
            });
            if !known {
                list.push((s0.clone(), s1.clone()));
            }
        }
    }
    reps.into_iter().map(|(k, v)| (k, v.len())).collect()
}

#[test]
fn class_counts_match_naive_conjugacy_up_to_degree_five() {
    for d in 1..=5 {
        let naive = naive_counts(d);
        let parts = enumerate_partitions(d).unwrap();
        let mut fast = BTreeMap::new();
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    let l = RamificationType::new(a.clone(), b.clone(), c.clone()).unwrap();
                    let n = enumerate_classes(&l).unwrap().len();
                    if n > 0 {
                        fast.insert(l.to_string(), n);
                    }
                }
            }
        }
        assert_eq!(fast, naive, "degree {d}");
    }
}

#[test]
fn seven_cycle_census() {
    let entry = &passport_report(7, 3).unwrap()[0];
    assert_eq!(entry.class_count, 30);
    assert_eq!(entry.cyclic_count(), 5);
    let mut orders: BTreeMap<u64, usize> = BTreeMap::new();
    for c in &entry.classes {
        *orders.entry(c.monodromy_order.to_u64_digits()[0]).or_default() += 1;
        if c.monodromy_tag != MonodromyTag::Cyclic {
            assert_eq!(c.automorphism_count, BigUint::from(1u32));
        }
    }
    assert_eq!(orders, BTreeMap::from([(7, 5), (168, 2), (2520, 23)]));
}

#[test]
fn seven_cycle_mass_regression() {
    let entry = &passport_report(7, 3).unwrap()[0];
    let (n, d) = entry.mass();
    assert_eq!((n, d), (BigUint::from(180u32), BigUint::from(7u32)));
}

#[test]
fn seven_cycle_class_count_by_brute_force() {
    // classes = orbits of S_7 on pairs of 7-cycles with 7-cycle product;
    // Σ |orbit| = number of such pairs, and |orbit| = 7!/|centralizer|
    let sigma0 = Permutation::parse_cycles("(1 2 3 4 5 6 7)", 7).unwrap();
    let sevens: Vec<Permutation> = all_permutations(7)
        .into_iter()
        .filter(|p| p.cycle_type().parts() == [7])
        .collect();
    let pairs_with_fixed_sigma0 = sevens
        .iter()
        .filter(|s1| sigma0.compose(s1).unwrap().cycle_type().parts() == [7])
        .count();
    let classes = enumerate_classes(&ty("7/7/7")).unwrap();
    let orbit_total: BigUint = classes
        .iter()
        .map(|t| factorial(7) / centralizer_order(&t.generators()).unwrap())
        .sum();
    assert_eq!(orbit_total, BigUint::from(pairs_with_fixed_sigma0 * sevens.len()));
}

#[test]
fn representatives_satisfy_triple_invariants() {
    let mut rng = StdRng::seed_from_u64(7);
    for d in 1..=7 {
        for g in 0..=3 {
            for entry in passport_report(d, g).unwrap() {
                for c in &entry.classes {
                    let t = &c.triple;
                    let prod = t.sigma0().compose(&t.sigma1().compose(t.sigma_inf()).unwrap()).unwrap();
                    assert!(prod.is_identity());
                    assert!(is_transitive(&t.generators(), d));
                    assert_eq!(t.ramification_type(), entry.lambda);
                    assert_eq!(Some(t.genus()), rh_genus(&entry.lambda));
                    let cycles =
                        t.sigma0().cycle_count() + t.sigma1().cycle_count() + t.sigma_inf().cycle_count();
                    assert_eq!(d as i64 - cycles as i64, 2 * g as i64 - 2);

                    assert_eq!(&t.canonical(), t);
                    for _ in 0..3 {
                        let h = random_perm(d, &mut rng);
                        assert_eq!(&t.conjugate(&h).unwrap().canonical(), t);
                    }
                }
            }
        }
    }
}

#[test]
fn fermat_quartic_certificate() {
    let cert = verify_fermat4().unwrap();
    assert_eq!(cert.belyi_degree, Some(8));
    assert_eq!(cert.lower_bound, 7);
    assert_eq!(cert.family_bound, 16);
    assert_eq!(cert.passport.noncyclic_count(), 25);
    assert_eq!(cert.aut_order, 96);
    let json = cert.to_json().to_string();
    assert!(json.contains("\"belyi_degree\":8"));
}

#[test]
fn triple_from_pair_round_trip() {
    let s0 = Permutation::parse_cycles("(1 2 3 4 5 6 7)", 7).unwrap();
    let s1 = Permutation::parse_cycles("(1 3 5 7 2 4 6)", 7).unwrap();
    let t = BelyiTriple::from_pair(s0, s1).unwrap();
    assert_eq!(t.genus(), 3);
    assert_eq!(t.ramification_type(), ty("7/7/7"));
}
