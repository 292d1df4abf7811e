//! Seeded random boards and the cross-check harness built on them.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{cross_check, AnalysisOptions};
use crate::board::{render_fen, Board, Cell, Side, Square};
use crate::kernel::format_value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzParams {
    pub height: usize,
    pub width: usize,
    /// Pawns occupy at most this many adjacent files.
    pub max_files: usize,
    pub max_pawns: usize,
}

impl Default for FuzzParams {
    fn default() -> Self {
        FuzzParams { height: 8, width: 8, max_files: 3, max_pawns: 6 }
    }
}

/// A random board: up to `max_pawns` pawns of random colour on a run of up
/// to `max_files` files, never on a promotion rank.
pub fn gen_random(params: &FuzzParams, seed: u64) -> Board {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = params.width.max(1);
    let files = rng.gen_range(1..=params.max_files.clamp(1, width));
    let first = rng.gen_range(0..=width - files);
    let pawns = rng.gen_range(1..=params.max_pawns.max(1));
    let ranks = 1..params.height as u8 - 1;
    let mut board = Board::empty(width, params.height);
    for _ in 0..pawns {
        let sq = Square::new((first + rng.gen_range(0..files)) as u8, rng.gen_range(ranks.clone()));
        if board.get(sq) == Cell::Empty {
            let side = if rng.gen_bool(0.5) { Side::White } else { Side::Black };
            board.set(sq, Cell::Pawn(side));
        }
    }
    board
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzCase {
    pub index: usize,
    /// Pass to [`gen_random`] with the same params to rebuild the board.
    pub seed: u64,
    pub fen: String,
    pub predicted: (Side, Side),
    pub oracle: Option<(Side, Side)>,
    pub flagged: bool,
    pub error: Option<String>,
}

impl FuzzCase {
    pub fn agree(&self) -> bool {
        self.oracle == Some(self.predicted)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub params: FuzzParams,
    pub seed: u64,
    pub count: usize,
    pub agreed: usize,
    pub flagged: Vec<FuzzCase>,
    pub disagreements: Vec<FuzzCase>,
    pub errors: Vec<FuzzCase>,
    /// Component values seen, with counts.
    pub values: BTreeMap<String, usize>,
}

impl FuzzSummary {
    /// Disagreements the analysis did not warn about.
    pub fn unflagged_disagreements(&self) -> usize {
        self.disagreements.iter().filter(|c| !c.flagged).count()
    }

    pub fn flag_rate(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.flagged.len() as f64 / self.count as f64
        }
    }
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        writeln!(f, "fuzz seed {} count {} board {}x{} max-files {} max-pawns {}", self.seed, self.count, p.width, p.height, p.max_files, p.max_pawns)?;
        writeln!(f, "agreed: {}", self.agreed)?;
        writeln!(f, "flagged: {} ({:.1}%)", self.flagged.len(), 100.0 * self.flag_rate())?;
        writeln!(f, "disagreements: {} ({} unflagged)", self.disagreements.len(), self.unflagged_disagreements())?;
        writeln!(f, "errors: {}", self.errors.len())?;
        let list = |f: &mut fmt::Formatter<'_>, label: &str, cases: &[FuzzCase]| -> fmt::Result {
            for c in cases {
                write!(f, "  {label} #{} seed {} {}", c.index, c.seed, c.fen)?;
                match (&c.oracle, &c.error) {
                    (_, Some(e)) => writeln!(f, " error: {e}")?,
                    (Some(o), None) => writeln!(f, " predicted {}/{} oracle {}/{}", c.predicted.0, c.predicted.1, o.0, o.1)?,
                    (None, None) => writeln!(f)?,
                }
            }
            Ok(())
        };
        list(f, "disagree", &self.disagreements)?;
        list(f, "flagged", &self.flagged)?;
        list(f, "error", &self.errors)?;
        writeln!(f, "values:")?;
        for (v, n) in &self.values {
            writeln!(f, "  {v}: {n}")?;
        }
        Ok(())
    }
}

struct Outcome {
    case: FuzzCase,
    values: Vec<String>,
}

fn run_case(params: &FuzzParams, index: usize, seed: u64, opts: &AnalysisOptions) -> Outcome {
    let board = gen_random(params, seed);
    let fen = render_fen(&board);
    let mut case = FuzzCase { index, seed, fen, predicted: (Side::White, Side::White), oracle: None, flagged: false, error: None };
    let mut values = Vec::new();
    match cross_check(&board, opts) {
        Ok(check) => {
            case.predicted = check.predicted;
            case.oracle = Some((check.oracle.white_to_move, check.oracle.black_to_move));
            case.flagged = check.flagged;
            values = check.report.components.iter().map(|c| format_value(c.value.game)).collect();
        }
        Err(e) => case.error = Some(e.to_string()),
    }
    Outcome { case, values }
}

/// Cross-check `count` random boards. Case seeds come from one generator
/// seeded with `seed`, so every case can be replayed on its own.
pub fn fuzz(params: &FuzzParams, seed: u64, count: usize, opts: &AnalysisOptions) -> FuzzSummary {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<(usize, u64)> = (0..count).map(|i| (i, master.next_u64())).collect();
    let outcomes = opts.exec.map(seeds, |(i, s)| run_case(params, i, s, opts));

    let mut summary = FuzzSummary { params: *params, seed, count, agreed: 0, flagged: Vec::new(), disagreements: Vec::new(), errors: Vec::new(), values: BTreeMap::new() };
    for o in outcomes {
        for v in o.values {
            *summary.values.entry(v).or_default() += 1;
        }
        let case = o.case;
        if case.error.is_some() {
            summary.errors.push(case);
            continue;
        }
        if case.agree() {
            summary.agreed += 1;
        } else {
            summary.disagreements.push(case.clone());
        }
        if case.flagged {
            summary.flagged.push(case);
        }
    }
    summary
}
