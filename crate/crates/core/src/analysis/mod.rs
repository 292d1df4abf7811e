//! Whole-position analysis: decompose, value, sum and decide.

mod fuzz;
mod oracle;
mod report;

use thiserror::Error;

use crate::board::{Board, Component, Move, Side};
use crate::exec::Exec;
use crate::kernel::{format_value, parse_value_expr, Game, OutcomeClass, ParseError};
use crate::valuation::{EpRule, SubgameValue, ValuationError, ValuationOptions, Valuer};

pub use fuzz::{fuzz, gen_random, FuzzCase, FuzzParams, FuzzSummary};
pub use oracle::{oracle_outcome, Oracle, OracleError, OracleVerdict, DEFAULT_ORACLE_BUDGET};
pub use report::{ComponentDocument, ReportDocument};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("offset: {0}")]
    Offset(#[from] ParseError),
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub valuation: ValuationOptions,
    pub oracle_budget: u64,
    pub exec: Exec,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { valuation: ValuationOptions::default(), oracle_budget: DEFAULT_ORACLE_BUDGET, exec: Exec::default() }
    }
}

#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub component: Component,
    pub value: SubgameValue,
}

impl ComponentReport {
    pub fn label(&self) -> String {
        self.component.label()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    /// A promotion survives in the canonical value of this span.
    Offscale { span: String, side: Side },
    /// The span's value depends on en passant.
    EnPassant { span: String },
    /// A stop of this span is at least half the promotion value.
    StopMagnitude { span: String },
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::Offscale { span, side } => write!(f, "{span}: {side} promotion survives in the value"),
            Warning::EnPassant { span } => write!(f, "{span}: value depends on en passant"),
            Warning::StopMagnitude { span } => write!(f, "{span}: stops reach half the promotion value"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub board: Board,
    pub components: Vec<ComponentReport>,
    pub offset: Game,
    pub total: Game,
    /// The total's name, or the sum of the component names when the total
    /// has none.
    pub total_name: String,
    pub white_to_move: Side,
    pub black_to_move: Side,
    pub mzz: bool,
    pub white_moves: Vec<Move>,
    pub black_moves: Vec<Move>,
    pub warnings: Vec<Warning>,
}

impl AnalysisReport {
    pub fn winner(&self, mover: Side) -> Side {
        match mover {
            Side::White => self.white_to_move,
            Side::Black => self.black_to_move,
        }
    }

    pub fn winning_moves(&self, side: Side) -> &[Move] {
        match side {
            Side::White => &self.white_moves,
            Side::Black => &self.black_moves,
        }
    }

    /// Whether the prediction may legitimately differ from the oracle:
    /// some value depends on en passant, or both sides have promotions
    /// surviving, in which case tempo counting cannot settle who promotes
    /// first.
    pub fn is_flagged(&self) -> bool {
        let promotes = |side| self.warnings.iter().any(|w| matches!(w, Warning::Offscale { side: s, .. } if *s == side));
        let ep = self.warnings.iter().any(|w| matches!(w, Warning::EnPassant { .. }));
        ep || (promotes(Side::White) && promotes(Side::Black))
    }

    pub fn verdict(&self) -> &'static str {
        verdict_text(self.white_to_move, self.black_to_move)
    }

    pub fn to_document(&self) -> ReportDocument {
        ReportDocument::from(self)
    }
}

pub fn verdict_text(white_to_move: Side, black_to_move: Side) -> &'static str {
    match (white_to_move, black_to_move) {
        (Side::White, Side::White) => "White wins either way",
        (Side::Black, Side::Black) => "Black wins either way",
        (Side::White, Side::Black) => "first player wins",
        (Side::Black, Side::White) => "second player wins",
    }
}

/// Winners with White and with Black to move, read off the outcome class.
pub fn winners(outcome: OutcomeClass) -> (Side, Side) {
    match outcome {
        OutcomeClass::LeftWinsAlways => (Side::White, Side::White),
        OutcomeClass::RightWinsAlways => (Side::Black, Side::Black),
        OutcomeClass::SecondPlayerWins => (Side::Black, Side::White),
        OutcomeClass::FirstPlayerWins => (Side::White, Side::Black),
    }
}

struct Valued {
    component: Component,
    valuer: Valuer,
    value: SubgameValue,
}

fn value_components(board: &Board, opts: &AnalysisOptions) -> Result<Vec<Valued>, ValuationError> {
    opts.exec
        .map(board.decompose(), |component| {
            let mut valuer = Valuer::new(opts.valuation);
            let value = valuer.value(&component.board)?;
            Ok(Valued { component, valuer, value })
        })
        .into_iter()
        .collect()
}

fn total_name(total: Game, parts: &[Valued], offset: Game) -> String {
    let name = crate::kernel::recognize(total);
    if name.is_named() {
        return name.to_string();
    }
    let mut terms: Vec<String> = parts.iter().map(|p| p.value.game).chain([offset]).filter(|g| !g.is_zero()).map(format_value).collect();
    if terms.is_empty() {
        terms.push("0".into());
    }
    terms.join(" + ")
}

/// Analyze a position. `offset` is an optional value expression for any
/// chunk the pawn model cannot see.
pub fn analyze(board: &Board, offset: Option<&str>, opts: &AnalysisOptions) -> Result<AnalysisReport, AnalysisError> {
    let offset = match offset {
        Some(text) => parse_value_expr(text)?,
        None => Game::zero(),
    };
    let mut parts = value_components(board, opts)?;
    let total = parts.iter().fold(offset.canonical(), |acc, p| acc.add(p.value.game).canonical());
    let (white_to_move, black_to_move) = winners(total.outcome());

    let mut white_moves = Vec::new();
    let mut black_moves = Vec::new();
    for side in [Side::White, Side::Black] {
        for part in parts.iter_mut() {
            let rest = total.sub(part.value.game).canonical();
            for mv in part.valuer.admissible_moves(&part.component.board, side, None) {
                let (next, ep) = part.valuer.play(&part.component.board, mv);
                let after = rest.add(part.valuer.game_of(&next, ep)?);
                let good = match side {
                    Side::White => after.geq(Game::zero()),
                    Side::Black => after.leq(Game::zero()),
                };
                if good {
                    let global = part.component.globalize(mv);
                    match side {
                        Side::White => white_moves.push(global),
                        Side::Black => black_moves.push(global),
                    }
                }
            }
        }
    }
    white_moves.sort_by_key(Move::sort_key);
    black_moves.sort_by_key(Move::sort_key);

    let mut warnings = Vec::new();
    let half = crate::kernel::Dyadic::integer(opts.valuation.offscale / 2);
    for part in &parts {
        let span = part.component.label();
        let v = &part.value;
        if v.offscale.white {
            warnings.push(Warning::Offscale { span: span.clone(), side: Side::White });
        }
        if v.offscale.black {
            warnings.push(Warning::Offscale { span: span.clone(), side: Side::Black });
        }
        if v.ep_sensitive {
            warnings.push(Warning::EnPassant { span: span.clone() });
        }
        let (l, r) = v.game.stops();
        if l.abs() >= half || r.abs() >= half {
            warnings.push(Warning::StopMagnitude { span });
        }
    }

    let name = total_name(total, &parts, offset);
    Ok(AnalysisReport {
        board: board.clone(),
        components: parts.into_iter().map(|p| ComponentReport { component: p.component, value: p.value }).collect(),
        offset,
        total,
        total_name: name,
        white_to_move,
        black_to_move,
        mzz: total.is_zero(),
        white_moves,
        black_moves,
        warnings,
    })
}

/// Moves for `side` that keep the total on its side of zero.
pub fn winning_moves(board: &Board, side: Side, offset: Option<&str>, opts: &AnalysisOptions) -> Result<Vec<Move>, AnalysisError> {
    Ok(analyze(board, offset, opts)?.winning_moves(side).to_vec())
}

/// Both engines' predictions for one board.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub report: AnalysisReport,
    pub predicted: (Side, Side),
    pub oracle: OracleVerdict,
    pub flagged: bool,
}

impl CrossCheck {
    pub fn agree(&self) -> bool {
        self.predicted == (self.oracle.white_to_move, self.oracle.black_to_move)
    }
}

pub fn cross_check(board: &Board, opts: &AnalysisOptions) -> Result<CrossCheck, AnalysisError> {
    let report = analyze(board, None, opts)?;
    let oracle = oracle_outcome(board, opts.valuation.ep_rule == EpRule::Standard, opts.oracle_budget)?;
    Ok(CrossCheck { predicted: (report.white_to_move, report.black_to_move), oracle, flagged: report.is_flagged(), report })
}

#[cfg(test)]
mod tests;
