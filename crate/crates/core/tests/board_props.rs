use proptest::prelude::*;

use pawncgt::analysis::{gen_random, FuzzParams};
use pawncgt::board::{parse_fen, render_fen, Board};
use pawncgt::kernel::Game;
use pawncgt::valuation::{component_value, game_of, ValuationOptions};

fn params() -> impl Strategy<Value = FuzzParams> {
    (5usize..=9, 1usize..=3, 1usize..=5).prop_map(|(height, max_files, max_pawns)| FuzzParams { height, width: 8, max_files, max_pawns })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn fen_round_trips(p in params(), seed in any::<u64>()) {
        let b = gen_random(&p, seed);
        let text = render_fen(&b);
        prop_assert_eq!(parse_fen(&text).unwrap(), b.clone());
        prop_assert_eq!(render_fen(&parse_fen(&text).unwrap()), text);
    }

    #[test]
    fn mirror_negates(p in params(), seed in any::<u64>()) {
        let b = gen_random(&p, seed);
        prop_assert_eq!(b.mirror().mirror(), b.clone());
        let v = game_of(&b, None).unwrap();
        let m = game_of(&b.mirror(), None).unwrap();
        prop_assert!(m.eq(v.neg()));
    }

    #[test]
    fn shifting_files_keeps_the_value(p in params(), seed in any::<u64>(), shift in 0u8..4) {
        let b = gen_random(&p, seed);
        for c in b.decompose() {
            let w = c.board.width();
            let wide = Board::empty(w + 4, b.height()).embed(&c.board, shift);
            prop_assert!(game_of(&wide, None).unwrap().eq(game_of(&c.board, None).unwrap()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, max_global_rejects: 20_000, ..ProptestConfig::default() })]

    // The whole board stops at the first promotion, so only promotion-free sums add up.
    #[test]
    fn components_sum_to_the_board(p in params(), seed in any::<u64>()) {
        let b = gen_random(&p, seed);
        let opts = ValuationOptions::default();
        let values: Vec<_> = b.decompose().iter().map(|c| component_value(c, opts).unwrap()).collect();
        prop_assume!(values.iter().all(|v| !v.offscale_reached()));
        let sum = values.iter().fold(Game::zero(), |acc, v| acc.add(v.game));
        prop_assert!(game_of(&b, None).unwrap().eq(sum));
    }
}
