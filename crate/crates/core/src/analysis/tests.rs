use super::*;
use crate::board::{parse_fen, Cell};
use crate::kernel::parse_value_expr;

const D1: &str = "8/p1p1p3/2P1P3/8/p3P3/P1P2Kp1/2P3Pk/8";
const D5: &str = "8/1p5p/p7/4k3/4Pp2/5K1P/PP6/8";
const D6: &str = "8/3p4/1p3p2/7p/2pPP3/2P2k1b/P1P2pNP/5K1Q";
const D7: &str = "8/2p4p/p4p2/2p5/2p3PP/2P2p2/PP3Pk1/4KR2";

fn report(fen: &str, offset: Option<&str>) -> AnalysisReport {
    analyze(&parse_fen(fen).unwrap(), offset, &AnalysisOptions::default()).unwrap()
}

fn names(moves: &[Move]) -> Vec<String> {
    moves.iter().map(|m| m.to_string()).collect()
}

#[test]
fn outcome_to_winners() {
    assert_eq!(winners(OutcomeClass::FirstPlayerWins), (Side::White, Side::Black));
    assert_eq!(winners(OutcomeClass::SecondPlayerWins), (Side::Black, Side::White));
    assert_eq!(verdict_text(Side::Black, Side::White), "second player wins");
}

#[test]
fn diagram_five_report() {
    let r = report(D5, None);
    let spans: Vec<_> = r.components.iter().map(|c| (c.label(), format_value(c.value.game))).collect();
    assert_eq!(spans, [("a-b".into(), "^".into()), ("e-f".into(), "0".into()), ("h".into(), "2.v*".to_string())]);
    assert_eq!(r.total_name, "v*");
    assert_eq!(r.verdict(), "first player wins");
    assert!(names(&r.white_moves).contains(&"h3-h4".to_string()));
    assert!(names(&r.black_moves).contains(&"a6-a5".to_string()));
    assert!(!r.mzz);
}

#[test]
fn diagram_seven_only_move() {
    let r = report(D7, None);
    assert!(r.total.eq(parse_value_expr("-1/4").unwrap()));
    assert_eq!(names(&r.black_moves), ["a6-a5"]);
    assert!(r.white_moves.is_empty());
}

#[test]
fn offset_shifts_the_total() {
    let r = report(D1, Some("-3"));
    assert!(r.mzz);
    assert!(r.white_moves.is_empty() && r.black_moves.is_empty());
    let r = report(D1, Some("-4"));
    assert_eq!(r.verdict(), "Black wins either way");
    assert!(r.white_moves.is_empty());
    assert!(matches!(analyze(&parse_fen(D1).unwrap(), Some("1/3"), &AnalysisOptions::default()), Err(AnalysisError::Offset(_))));
}

#[test]
fn winning_moves_are_sound() {
    let board = parse_fen(D5).unwrap();
    let opts = AnalysisOptions::default();
    for mv in winning_moves(&board, Side::White, None, &opts).unwrap() {
        let (after, _) = crate::board::play(&board, mv);
        let r = analyze(&after, None, &opts).unwrap();
        assert_eq!(r.black_to_move, Side::White, "{mv}");
    }
}

#[test]
fn document_round_trips() {
    let r = report(D6, None);
    let doc = r.to_document();
    let text = serde_json::to_string(&doc).unwrap();
    let back: ReportDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(back, doc);
    assert!(doc.mzz);
    for c in &doc.components {
        parse_value_expr(&c.value).unwrap();
    }
    assert!(parse_value_expr(&doc.total).unwrap().is_zero());
}

#[test]
fn oracle_verdicts() {
    let d1 = oracle_outcome(&parse_fen(D1).unwrap(), true, DEFAULT_ORACLE_BUDGET).unwrap();
    assert_eq!((d1.white_to_move, d1.black_to_move), (Side::White, Side::White));
    let d6 = oracle_outcome(&parse_fen(D6).unwrap(), true, DEFAULT_ORACLE_BUDGET).unwrap();
    assert_eq!((d6.white_to_move, d6.black_to_move), (Side::Black, Side::White));
    assert!(d6.depth > 0 && d6.nodes > 0);
    assert_eq!(oracle_outcome(&parse_fen(D6).unwrap(), true, 10), Err(OracleError::BudgetExceeded(10)));
}

#[test]
fn blocked_pair_cross_check() {
    let e_file = parse_fen("8/8/4p3/8/8/4P3/8/8").unwrap();
    let c = cross_check(&e_file, &AnalysisOptions::default()).unwrap();
    assert!(c.agree() && !c.flagged);
    assert_eq!(c.predicted, (Side::Black, Side::White));
}

#[test]
fn random_boards_are_reproducible() {
    let p = FuzzParams::default();
    assert_eq!(gen_random(&p, 1), gen_random(&p, 1));
    for seed in 0..200 {
        let b = gen_random(&p, seed);
        let files: Vec<u8> = (0..8).filter(|&f| b.file_has_pawn(f)).collect();
        assert!(files.last().unwrap() - files[0] < 3);
        for (sq, side) in b.pawns() {
            assert_ne!(sq.rank, b.promotion_rank(side));
        }
        assert!(b.squares().all(|s| !matches!(b.get(s), Cell::Wall(_))));
    }
}

#[test]
fn fuzz_is_deterministic_across_exec_modes() {
    let p = FuzzParams::default();
    let seq = AnalysisOptions { exec: Exec::Sequential, ..Default::default() };
    let a = fuzz(&p, 3, 40, &seq);
    let b = fuzz(&p, 3, 40, &AnalysisOptions::default());
    assert_eq!(a, b);
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(a.unflagged_disagreements(), 0);
}

#[test]
fn short_single_files_show_star_two() {
    let p = FuzzParams { height: 6, width: 8, max_files: 1, max_pawns: 3 };
    let s = fuzz(&p, 11, 150, &AnalysisOptions::default());
    assert!(s.values.contains_key("*2"), "{:?}", s.values);
}
