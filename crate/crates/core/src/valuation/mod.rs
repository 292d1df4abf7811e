//! Turning a pawn component into a canonical game value.
//!
//! Options are the moves that do not let the opponent force a promotion.
//! A position with a promoted pawn is terminal and worth `±offscale`, a
//! number large enough to swamp every tempo count on the board.

mod race;

use rustc_hash::FxHashMap as HashMap;

use thiserror::Error;

use crate::board::{legal_moves, play, Board, Component, EpState, Move, Side};
use crate::kernel::{make, recognize, Dyadic, Game, ValueName};

pub use race::RaceVerdict;

/// How double steps and en passant captures are modelled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum EpRule {
    /// A double step beside an enemy pawn may be taken en passant by the
    /// very next move of the component.
    #[default]
    Standard,
    /// En passant captures do not exist.
    Off,
}

impl EpRule {
    pub fn moves(self, board: &Board, side: Side, ep: EpState) -> Vec<Move> {
        legal_moves(board, side, self.filter(ep))
    }

    pub fn play(self, board: &Board, mv: Move) -> (Board, EpState) {
        let (next, ep) = play(board, mv);
        (next, self.filter(ep))
    }

    fn filter(self, ep: EpState) -> EpState {
        if self == EpRule::Standard {
            ep
        } else {
            None
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValuationOptions {
    /// Value of a promotion, in tempo moves.
    pub offscale: i64,
    pub ep_rule: EpRule,
    /// Maximum number of distinct positions valued per component.
    pub node_budget: usize,
}

impl Default for ValuationOptions {
    fn default() -> Self {
        ValuationOptions { offscale: 1000, ep_rule: EpRule::Standard, node_budget: 2_000_000 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValuationError {
    #[error("component exceeds the node budget of {0} positions")]
    BudgetExceeded(usize),
}

/// Which sides' promotions survive in a canonical value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Offscale {
    pub white: bool,
    pub black: bool,
}

impl Offscale {
    pub fn any(&self) -> bool {
        self.white || self.black
    }

    /// Scan every subposition of `g` for numbers of promotion magnitude.
    pub fn detect(g: Game, offscale: i64) -> Offscale {
        let threshold = Dyadic::integer(offscale / 2);
        let mut found = Offscale::default();
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![g];
        while let Some(h) = stack.pop() {
            if !seen.insert(h) {
                continue;
            }
            match h.number_value() {
                Some(q) if q >= threshold => found.white = true,
                Some(q) if -q >= threshold => found.black = true,
                Some(_) => {}
                None => stack.extend(h.left().iter().chain(h.right()).copied()),
            }
        }
        found
    }
}

/// The value of one component together with its diagnostics.
#[derive(Clone, Debug)]
pub struct SubgameValue {
    pub game: Game,
    pub name: ValueName,
    /// Promotions that survive canonicalization, by side.
    pub offscale: Offscale,
    /// Some reachable position is worth something different with and
    /// without its en passant right, so the right's expiry matters.
    pub ep_sensitive: bool,
}

impl SubgameValue {
    pub fn offscale_reached(&self) -> bool {
        self.offscale.any()
    }
}

type PositionKey = (Board, EpState);

/// Memoizing evaluator for positions of one component.
pub struct Valuer {
    options: ValuationOptions,
    games: HashMap<PositionKey, Game>,
    races: race::RaceTable,
    ep_mismatch: bool,
}

impl Valuer {
    pub fn new(options: ValuationOptions) -> Self {
        Valuer { options, games: HashMap::default(), races: race::RaceTable::default(), ep_mismatch: false }
    }

    pub fn options(&self) -> &ValuationOptions {
        &self.options
    }

    /// Number of positions valued so far.
    pub fn positions(&self) -> usize {
        self.games.len()
    }

    pub(crate) fn play(&self, board: &Board, mv: Move) -> (Board, EpState) {
        self.options.ep_rule.play(board, mv)
    }

    /// Whether `racer`, to move, can promote against any defence, the
    /// defender being allowed to pass at every turn.
    pub fn can_force_promotion(&mut self, board: &Board, racer: Side, ep: EpState) -> Option<RaceVerdict> {
        let rule = self.options.ep_rule;
        let ep = rule.filter(ep);
        self.races.attack(board, ep, racer, rule)?;
        Some(self.races.verdict(board, ep, racer, rule))
    }

    /// Legal moves that do not hand the opponent a forced promotion.
    /// Promoting moves are always kept.
    pub fn admissible_moves(&mut self, board: &Board, side: Side, ep: EpState) -> Vec<Move> {
        let rule = self.options.ep_rule;
        let ep = rule.filter(ep);
        let mut out = Vec::new();
        for mv in rule.moves(board, side, ep) {
            let (next, next_ep) = rule.play(board, mv);
            if next.promoted() == Some(side) || self.races.attack(&next, next_ep, side.opponent(), rule).is_none() {
                out.push(mv);
            }
        }
        out
    }

    /// Canonical value of the position, White as Left.
    pub fn game_of(&mut self, board: &Board, ep: EpState) -> Result<Game, ValuationError> {
        let ep = self.options.ep_rule.filter(ep);
        let key = (board.clone(), ep);
        if let Some(g) = self.games.get(&key) {
            return Ok(*g);
        }
        let g = match board.promoted() {
            Some(Side::White) => Game::integer(self.options.offscale),
            Some(Side::Black) => Game::integer(-self.options.offscale),
            None => {
                let mut left = Vec::new();
                for mv in self.admissible_moves(board, Side::White, ep) {
                    let (next, next_ep) = self.play(board, mv);
                    left.push(self.game_of(&next, next_ep)?);
                }
                let mut right = Vec::new();
                for mv in self.admissible_moves(board, Side::Black, ep) {
                    let (next, next_ep) = self.play(board, mv);
                    right.push(self.game_of(&next, next_ep)?);
                }
                make(left, right).canonical()
            }
        };
        if ep.is_some() && !self.game_of(board, None)?.eq(g) {
            self.ep_mismatch = true;
        }
        if self.games.len() >= self.options.node_budget {
            return Err(ValuationError::BudgetExceeded(self.options.node_budget));
        }
        self.games.insert(key, g);
        Ok(g)
    }

    /// Whether any position valued so far depends on its en passant right.
    pub fn ep_mismatch(&self) -> bool {
        self.ep_mismatch
    }

    /// Value a whole component board from its quiet starting position.
    pub fn value(&mut self, board: &Board) -> Result<SubgameValue, ValuationError> {
        let game = self.game_of(board, None)?;
        Ok(SubgameValue {
            game,
            name: recognize(game),
            offscale: Offscale::detect(game, self.options.offscale),
            ep_sensitive: self.ep_mismatch,
        })
    }
}

pub fn component_value(component: &Component, options: ValuationOptions) -> Result<SubgameValue, ValuationError> {
    Valuer::new(options).value(&component.board)
}

/// True when some position reachable in the component is worth something
/// different with and without its en passant right.
pub fn ep_sensitivity_check(component: &Component, options: ValuationOptions) -> Result<bool, ValuationError> {
    let mut valuer = Valuer::new(ValuationOptions { ep_rule: EpRule::Standard, ..options });
    valuer.game_of(&component.board, None)?;
    Ok(valuer.ep_mismatch())
}

/// [`Valuer::game_of`] with default options.
pub fn game_of(board: &Board, ep: EpState) -> Result<Game, ValuationError> {
    Valuer::new(ValuationOptions::default()).game_of(board, ep)
}

/// [`Valuer::can_force_promotion`] with default options.
pub fn can_force_promotion(board: &Board, racer: Side, ep: EpState) -> Option<RaceVerdict> {
    Valuer::new(ValuationOptions::default()).can_force_promotion(board, racer, ep)
}

/// [`Valuer::admissible_moves`] with default options.
pub fn admissible_moves(board: &Board, side: Side, ep: EpState) -> Vec<Move> {
    Valuer::new(ValuationOptions::default()).admissible_moves(board, side, ep)
}
