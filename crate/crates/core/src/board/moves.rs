//! Pawn move generation, including the double step and en passant.

use std::fmt;

use super::{Board, BoardError, Cell, Side, Square};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum MoveKind {
    Push1,
    Push2,
    Capture,
    EnPassant,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Move {
    pub from: Square,
    pub to: Square,
    pub kind: MoveKind,
    pub mover: Side,
}

impl Move {
    pub fn shifted(self, files: u8) -> Move {
        Move {
            from: Square::new(self.from.file + files, self.from.rank),
            to: Square::new(self.to.file + files, self.to.rank),
            ..self
        }
    }

    /// Report order: origin file, then origin rank, then kind, then target.
    pub fn sort_key(&self) -> (u8, u8, MoveKind, u8) {
        (self.from.file, self.from.rank, self.kind, self.to.file)
    }

    pub fn is_capture(&self) -> bool {
        matches!(self.kind, MoveKind::Capture | MoveKind::EnPassant)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MoveKind::Push1 | MoveKind::Push2 => write!(f, "{}-{}", self.from, self.to),
            MoveKind::Capture => write!(f, "{}x{}", self.from, self.to),
            MoveKind::EnPassant => write!(f, "{}x{}ep", self.from, self.to),
        }
    }
}

/// Right to capture en passant, granted by the double step just played.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct EnPassant {
    /// The square the double-stepping pawn skipped.
    pub target: Square,
    pub capturer: Side,
}

pub type EpState = Option<EnPassant>;

fn forward(side: Side) -> i32 {
    match side {
        Side::White => 1,
        Side::Black => -1,
    }
}

/// All legal pawn moves for `side`, in file, rank, kind order. Walls never
/// move and are never captured; en passant only as granted by `ep`.
pub fn legal_moves(board: &Board, side: Side, ep: EpState) -> Vec<Move> {
    let mut out = Vec::new();
    if board.promoted().is_some() {
        return out;
    }
    let dir = forward(side);
    for (from, owner) in board.pawns() {
        if owner != side {
            continue;
        }
        let (f, r) = (from.file as i32, from.rank as i32);
        let r1 = r + dir;
        if !board.contains(f, r1) {
            continue;
        }
        let one = Square::new(f as u8, r1 as u8);
        if board.get(one) == Cell::Empty {
            out.push(Move { from, to: one, kind: MoveKind::Push1, mover: side });
            let r2 = r + 2 * dir;
            if from.rank == board.initial_rank(side) && board.contains(f, r2) {
                let two = Square::new(f as u8, r2 as u8);
                if board.get(two) == Cell::Empty {
                    out.push(Move { from, to: two, kind: MoveKind::Push2, mover: side });
                }
            }
        }
        for df in [-1, 1] {
            if !board.contains(f + df, r1) {
                continue;
            }
            let to = Square::new((f + df) as u8, r1 as u8);
            match board.get(to) {
                Cell::Pawn(other) if other != side => {
                    out.push(Move { from, to, kind: MoveKind::Capture, mover: side });
                }
                Cell::Empty => {
                    if let Some(e) = ep {
                        if e.capturer == side && e.target == to {
                            out.push(Move { from, to, kind: MoveKind::EnPassant, mover: side });
                        }
                    }
                }
                _ => {}
            }
        }
    }
    out
}

/// Play a move known to be legal, returning the new board and the en
/// passant right it creates.
pub fn play(board: &Board, mv: Move) -> (Board, EpState) {
    let mut next = board.clone();
    next.set(mv.from, Cell::Empty);
    next.set(mv.to, Cell::Pawn(mv.mover));
    let mut ep = None;
    match mv.kind {
        MoveKind::EnPassant => {
            next.set(Square::new(mv.to.file, mv.from.rank), Cell::Empty);
        }
        MoveKind::Push2 => {
            let enemy = Cell::Pawn(mv.mover.opponent());
            let (f, r) = (mv.to.file as i32, mv.to.rank as i32);
            let adjacent = [-1, 1].iter().any(|df| board.contains(f + df, r) && next.get(Square::new((f + df) as u8, r as u8)) == enemy);
            if adjacent {
                let skipped = (mv.from.rank as i32 + mv.to.rank as i32) / 2;
                ep = Some(EnPassant { target: Square::new(mv.from.file, skipped as u8), capturer: mv.mover.opponent() });
            }
        }
        _ => {}
    }
    (next, ep)
}

/// Checked version of [`play`].
pub fn apply_move(board: &Board, ep: EpState, mv: Move) -> Result<(Board, EpState), BoardError> {
    if !legal_moves(board, mv.mover, ep).contains(&mv) {
        return Err(BoardError::IllegalMove(mv.to_string()));
    }
    Ok(play(board, mv))
}
