use proptest::prelude::*;

use pawncgt::kernel::{format_value, make, parse_value_expr, recognize, Dyadic, Game, OutcomeClass};

fn game(birthday: u32) -> BoxedStrategy<Game> {
    if birthday == 0 {
        return Just(Game::zero()).boxed();
    }
    let options = prop::collection::vec(prop_oneof![game(birthday - 1), game(birthday.saturating_sub(2))], 0..=2);
    (options.clone(), options).prop_map(|(l, r)| make(l, r)).boxed()
}

fn small() -> BoxedStrategy<Game> {
    prop_oneof![game(2), game(3), game(4)].boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn birthday_is_bounded(a in game(4)) {
        prop_assert!(a.birthday() <= 4);
    }

    #[test]
    fn order_axioms(a in small(), b in small(), c in small()) {
        prop_assert!(a.leq(a));
        if a.leq(b) && b.leq(a) {
            prop_assert_eq!(a.canonical(), b.canonical());
        }
        if a.leq(b) && b.leq(c) {
            prop_assert!(a.leq(c));
        }
    }

    #[test]
    fn group_laws(a in small(), b in small(), c in small()) {
        prop_assert!(a.add(b).eq(b.add(a)));
        prop_assert!(a.add(b).add(c).eq(a.add(b.add(c))));
        prop_assert_eq!(a.neg().neg(), a);
        prop_assert!(a.add(a.neg()).eq(Game::zero()));
        prop_assert!(a.add(Game::zero()).eq(a));
    }

    #[test]
    fn canonical_form(a in small(), x in small()) {
        let c = a.canonical();
        prop_assert!(c.eq(a));
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonical(), c);
        prop_assert!(c.add(x).eq(a.add(x)));
        prop_assert!(c.birthday() <= a.birthday());
    }

    #[test]
    fn outcome_matches_order(a in small()) {
        let zero = Game::zero();
        let class = a.outcome();
        prop_assert_eq!(class == OutcomeClass::SecondPlayerWins, a.eq(zero));
        prop_assert_eq!(class == OutcomeClass::FirstPlayerWins, a.fuzzy(zero));
        prop_assert_eq!(class == OutcomeClass::LeftWinsAlways, a.gt(zero));
        prop_assert_eq!(class == OutcomeClass::RightWinsAlways, a.lt(zero));
    }

    #[test]
    fn names_round_trip(a in small()) {
        let text = format_value(a);
        prop_assert!(parse_value_expr(&text).unwrap().eq(a), "{}", text);
        if let Some(named) = recognize(a).to_game() {
            prop_assert!(named.eq(a));
        }
    }

    #[test]
    fn dyadic_numbers_add_exactly(p in -64i64..64, q in -64i64..64, e in 0u32..4, f in 0u32..4) {
        let x = Dyadic::new(p, e);
        let y = Dyadic::new(q, f);
        let sum = Game::number(x).add(Game::number(y)).canonical();
        prop_assert_eq!(sum.number_value(), Some(x + y));
        prop_assert_eq!(Game::number(x).leq(Game::number(y)), x <= y);
    }
}

#[test]
fn catalog_identities() {
    let g = |s: &str| parse_value_expr(s).unwrap();
    let pairs = [
        ("{0|0}", "*"),
        ("{0,*|*}", "^"),
        ("{0|^}", "2.^*"),
        ("{0,*|0}", "^*"),
        ("{0|^*}", "2.^"),
        ("{0,*|1}", "1/2"),
        ("{0,*|1/2}", "1/4"),
        ("{{2|1}|{1|0}}", "1"),
        ("* + *", "0"),
        ("^ + v", "0"),
    ];
    for (a, b) in pairs {
        assert!(g(a).eq(g(b)), "{a} = {b}");
    }
    assert!(g("^").fuzzy(g("*")));
    assert!(g("2.^").gt(g("*")));
    let tiny = g("Tiny(1)");
    assert!(tiny.gt(Game::zero()));
    for k in 1..=64 {
        assert!(tiny.lt(Game::number(Dyadic::new(k, 5))));
    }
}
