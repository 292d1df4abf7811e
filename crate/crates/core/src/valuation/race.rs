//! Promotion races in which the defender may pass.
//!
//! The racer must move every turn. The defender may answer with any legal
//! move or with a pass, and wins the race outright by promoting first.

use rustc_hash::FxHashMap as HashMap;

use super::EpRule;
use crate::board::{Board, EpState, Move, Side};

/// A forced promotion and one line that achieves it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaceVerdict {
    pub racer: Side,
    /// Racer moves needed against best defence.
    pub moves: u16,
    /// The racer's moves when the defender only passes.
    pub witness: Vec<Move>,
}

type Key = (Board, EpState, Side);

#[derive(Default)]
pub(super) struct RaceTable {
    attack: HashMap<Key, Option<(u16, Move)>>,
    defend: HashMap<Key, Option<u16>>,
}

fn ordered(mut moves: Vec<Move>) -> Vec<Move> {
    moves.sort_by_key(|m| !m.is_capture());
    moves
}

impl RaceTable {
    /// Racer to move: fewest racer moves to a forced promotion.
    pub(super) fn attack(&mut self, board: &Board, ep: EpState, racer: Side, rule: EpRule) -> Option<u16> {
        let key = (board.clone(), ep, racer);
        if let Some(hit) = self.attack.get(&key) {
            return hit.map(|(n, _)| n);
        }
        let mut best: Option<(u16, Move)> = None;
        for mv in ordered(rule.moves(board, racer, ep)) {
            let (next, next_ep) = rule.play(board, mv);
            let cost = if next.promoted() == Some(racer) {
                Some(1)
            } else {
                self.defend(&next, next_ep, racer, rule).map(|n| n + 1)
            };
            if let Some(c) = cost {
                if best.is_none_or(|(b, _)| c < b) {
                    best = Some((c, mv));
                }
            }
        }
        self.attack.insert(key, best);
        best.map(|(n, _)| n)
    }

    /// Defender to move: the longest delay available, or `None` if some
    /// reply stops the racer or promotes first.
    fn defend(&mut self, board: &Board, ep: EpState, racer: Side, rule: EpRule) -> Option<u16> {
        let key = (board.clone(), ep, racer);
        if let Some(hit) = self.defend.get(&key) {
            return *hit;
        }
        let result = self.defend_uncached(board, ep, racer, rule);
        self.defend.insert(key, result);
        result
    }

    fn defend_uncached(&mut self, board: &Board, ep: EpState, racer: Side, rule: EpRule) -> Option<u16> {
        let defender = racer.opponent();
        let mut worst = self.attack(board, None, racer, rule)?;
        for mv in rule.moves(board, defender, ep) {
            let (next, next_ep) = rule.play(board, mv);
            if next.promoted() == Some(defender) {
                return None;
            }
            worst = worst.max(self.attack(&next, next_ep, racer, rule)?);
        }
        Some(worst)
    }

    /// Read the principal line out of the table. `attack` must already
    /// have succeeded from this position.
    pub(super) fn verdict(&mut self, board: &Board, ep: EpState, racer: Side, rule: EpRule) -> RaceVerdict {
        let moves = self.attack(board, ep, racer, rule).expect("race must be won");
        let mut witness = Vec::new();
        let (mut b, mut e) = (board.clone(), ep);
        loop {
            self.attack(&b, e, racer, rule);
            let (_, mv) = self.attack[&(b.clone(), e, racer)].expect("witness leaves the won region");
            witness.push(mv);
            let (next, _) = rule.play(&b, mv);
            if next.promoted() == Some(racer) {
                break;
            }
            b = next;
            e = None;
        }
        RaceVerdict { racer, moves, witness }
    }
}
