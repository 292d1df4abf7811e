//! Brute-force solver for the whole-board pawn game.
//!
//! No decomposition and no admissibility pruning: the side to move picks
//! any legal move, promoting wins on the spot and having no move loses.

use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::board::{legal_moves, play, Board, EpState, Side};

pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle search exceeded {0} nodes")]
    BudgetExceeded(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub white_to_move: Side,
    pub black_to_move: Side,
    /// Distinct positions searched.
    pub nodes: u64,
    /// Longest line, in plies.
    pub depth: u32,
}

// Walls never change during a search, so pawns alone identify a position.
fn pawn_bits(board: &Board) -> Box<[u64]> {
    let mut bits = vec![0u64; (2 * board.width() * board.height()).div_ceil(64)];
    for (sq, side) in board.pawns() {
        let i = 2 * (sq.rank as usize * board.width() + sq.file as usize) + (side == Side::Black) as usize;
        bits[i / 64] |= 1 << (i % 64);
    }
    bits.into_boxed_slice()
}

type Key = (Box<[u64]>, EpState, Side);

pub struct Oracle {
    en_passant: bool,
    budget: u64,
    memo: FxHashMap<Key, (bool, u32)>,
}

impl Oracle {
    pub fn new(en_passant: bool, budget: u64) -> Oracle {
        Oracle { en_passant, budget, memo: FxHashMap::default() }
    }

    pub fn nodes(&self) -> u64 {
        self.memo.len() as u64
    }

    /// Winner of `board` with `mover` to play.
    pub fn winner(&mut self, board: &Board, mover: Side) -> Result<Side, OracleError> {
        let (wins, _) = self.solve(board, None, mover)?;
        Ok(if wins { mover } else { mover.opponent() })
    }

    // (mover wins, plies to the end of the principal line)
    fn solve(&mut self, board: &Board, ep: EpState, mover: Side) -> Result<(bool, u32), OracleError> {
        let key = (pawn_bits(board), ep, mover);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(*hit);
        }
        if self.memo.len() as u64 >= self.budget {
            return Err(OracleError::BudgetExceeded(self.budget));
        }
        let mut result = (false, 0);
        for mv in legal_moves(board, mover, ep) {
            let (next, next_ep) = play(board, mv);
            if next.promoted() == Some(mover) {
                result = (true, 1);
                break;
            }
            let next_ep = if self.en_passant { next_ep } else { None };
            let (they_win, plies) = self.solve(&next, next_ep, mover.opponent())?;
            if !they_win {
                result = (true, plies + 1);
                break;
            }
            result.1 = result.1.max(plies + 1);
        }
        self.memo.insert(key, result);
        Ok(result)
    }
}

/// Solve `board` for both movers.
pub fn oracle_outcome(board: &Board, en_passant: bool, budget: u64) -> Result<OracleVerdict, OracleError> {
    let mut oracle = Oracle::new(en_passant, budget);
    let white_to_move = oracle.winner(board, Side::White)?;
    let black_to_move = oracle.winner(board, Side::Black)?;
    let depth = [Side::White, Side::Black].iter().map(|&s| oracle.memo[&(pawn_bits(board), None, s)].1).max().unwrap_or(0);
    Ok(OracleVerdict { white_to_move, black_to_move, nodes: oracle.nodes(), depth })
}
