use belyi::polysolve::{
    buchberger, is_empty_variety, is_reduced, parse_expression, reduce, verify_groebner, Limits, MonomialOrder,
    MultiPoly, PolynomialSystem, Verdict,
};
use num_rational::BigRational;
use proptest::prelude::*;

const ORDERS: [MonomialOrder; 3] = [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex];

fn polys(text: &[&str], names: &[&str]) -> Vec<MultiPoly> {
    text.iter().map(|t| parse_expression(t, names).unwrap()).collect()
}

fn small_limits() -> Limits {
    Limits {
        max_steps: 3000,
        max_degree: 20,
        max_basis: 300,
    }
}

fn poly(arity: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, arity), -3i64..=3), 1..4).prop_map(move |terms| {
        let mut p = MultiPoly::zero(arity);
        for (e, c) in terms {
            p.add_term(e, BigRational::from_integer(c.into()));
        }
        p
    })
}

fn system(arity: usize) -> impl Strategy<Value = Vec<MultiPoly>> {
    prop::collection::vec(poly(arity), 1..4).prop_filter("nonzero", |v| v.iter().any(|p| !p.is_zero()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn orders_agree_on_emptiness(gens in system(3)) {
        let verdicts: Vec<Verdict> = ORDERS
            .iter()
            .map(|&o| is_empty_variety(&gens, o, small_limits()).unwrap().0)
            .filter(|v| !matches!(v, Verdict::Unknown(_)))
            .collect();
        for v in &verdicts {
            prop_assert_eq!(v, &verdicts[0]);
        }
    }

    #[test]
    fn bases_are_certified_and_contain_the_generators(gens in system(3)) {
        for order in ORDERS {
            if let Ok(gb) = buchberger(&gens, order, small_limits()).unwrap() {
                prop_assert!(verify_groebner(&gb.basis, order));
                prop_assert!(is_reduced(&gb.basis, order));
                for g in &gens {
                    prop_assert!(reduce(g, &gb.basis, order).unwrap().is_zero());
                }
                // a reduced basis is its own reduced basis
                let again = buchberger(&gb.basis, order, small_limits()).unwrap().unwrap();
                prop_assert_eq!(&again.basis, &gb.basis);
            }
        }
    }

    #[test]
    fn ideal_membership_of_combinations(gens in system(2), m in poly(2), n in poly(2)) {
        let combo = &(&m * &gens[0]) + &(&n * gens.last().unwrap());
        if let Ok(gb) = buchberger(&gens, MonomialOrder::GrevLex, small_limits()).unwrap() {
            prop_assert!(reduce(&combo, &gb.basis, MonomialOrder::GrevLex).unwrap().is_zero());
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(gens in system(2)) {
        let mut rev = gens.clone();
        rev.reverse();
        let a = buchberger(&gens, MonomialOrder::GrLex, small_limits()).unwrap();
        let b = buchberger(&rev, MonomialOrder::GrLex, small_limits()).unwrap();
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert_eq!(a.basis, b.basis);
        }
    }
}

#[test]
fn lex_basis_of_a_curve_intersection() {
    // x^2 + y^2 = 5, x = 2y meet at (±2, ±1): lex basis {x - 2y, y^2 - 1}
    let names = ["x", "y"];
    let gens = polys(&["x^2 + y^2 - 5", "x - 2y"], &names);
    let gb = buchberger(&gens, MonomialOrder::Lex, Limits::default()).unwrap().unwrap();
    assert_eq!(gb.basis, polys(&["y^2 - 1", "x - 2y"], &names));
}

#[test]
fn inconsistent_and_consistent_systems() {
    let names = ["x", "y", "z"];
    let empty = polys(&["x*y - 1", "x*z", "z - 1"], &names);
    let nonempty = polys(&["x*y - 1", "y - z", "z^2 - 4"], &names);
    for order in ORDERS {
        assert_eq!(is_empty_variety(&empty, order, Limits::default()).unwrap().0, Verdict::Empty);
        assert_eq!(is_empty_variety(&nonempty, order, Limits::default()).unwrap().0, Verdict::Nonempty);
    }
}

#[test]
fn limits_give_unknown_with_counters() {
    let names = ["x", "y", "z", "w"];
    let gens = polys(&["x + y + z + w", "x*y + y*z + z*w + w*x", "x*y*z + y*z*w + z*w*x + w*x*y", "x*y*z*w - 1"], &names);
    let limits = Limits {
        max_steps: 3,
        ..Limits::default()
    };
    match is_empty_variety(&gens, MonomialOrder::GrevLex, limits).unwrap().0 {
        Verdict::Unknown(why) => {
            assert_eq!(why.stats.pairs_reduced, 3);
            assert!(why.stats.pending_pairs > 0);
        }
        other => panic!("expected Unknown, got {other:?}"),
    }
}

#[test]
fn system_text_round_trip() {
    let names = ["a", "b"];
    let sys = PolynomialSystem::new(
        vec!["a".into(), "b".into()],
        polys(&["a^2 - 3/2*b", "a*b + 7"], &names),
    )
    .unwrap();
    let back = PolynomialSystem::parse(&sys.to_text()).unwrap();
    assert_eq!(back.variables, sys.variables);
    assert_eq!(back.equations, sys.equations);
}
