//! Pawn positions on rectangular boards of any height and up to 26 files.

mod fen;
mod moves;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use fen::{parse_fen, render_fen};
pub use moves::{apply_move, legal_moves, play, EnPassant, EpState, Move, MoveKind};

pub const MAX_WIDTH: usize = 26;
pub const MIN_HEIGHT: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    White,
    Black,
}

impl Side {
    pub fn opponent(self) -> Side {
        match self {
            Side::White => Side::Black,
            Side::Black => Side::White,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::White => "White",
            Side::Black => "Black",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Cell {
    Empty,
    Pawn(Side),
    /// Any other piece. It never moves and cannot be captured.
    Wall(u8),
}

/// Zero-based file and rank; rank 0 is the bottom row.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Square {
    pub file: u8,
    pub rank: u8,
}

impl Square {
    pub fn new(file: u8, rank: u8) -> Self {
        Square { file, rank }
    }

    /// Parse algebraic names such as `a2` or `c12`.
    pub fn parse(s: &str) -> Option<Square> {
        let mut chars = s.chars();
        let f = chars.next()?;
        if !f.is_ascii_lowercase() {
            return None;
        }
        let rank: u8 = chars.as_str().parse().ok()?;
        if rank == 0 {
            return None;
        }
        Some(Square::new(f as u8 - b'a', rank - 1))
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", (b'a' + self.file) as char, self.rank as u32 + 1)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoardError {
    #[error("empty board description")]
    Empty,
    #[error("row {row} has width {found}, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("board width {0} exceeds {MAX_WIDTH}")]
    TooWide(usize),
    #[error("board width must be positive")]
    ZeroWidth,
    #[error("board height {0} is below {MIN_HEIGHT}")]
    TooShort(usize),
    #[error("board height {0} exceeds 255")]
    TooTall(usize),
    #[error("{side} pawn on its promotion rank at {square}")]
    PawnOnPromotionRank { side: Side, square: Square },
    #[error("illegal character {ch:?} at offset {pos}")]
    IllegalChar { ch: char, pos: usize },
    #[error("illegal move {0}")]
    IllegalMove(String),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Board {
    width: u8,
    height: u8,
    cells: Vec<Cell>,
}

impl Board {
    /// An empty board. Panics on dimensions outside the supported range.
    pub fn empty(width: usize, height: usize) -> Board {
        assert!((1..=MAX_WIDTH).contains(&width), "width out of range");
        assert!(height >= MIN_HEIGHT && height <= u8::MAX as usize, "height out of range");
        Board { width: width as u8, height: height as u8, cells: vec![Cell::Empty; width * height] }
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn height(&self) -> usize {
        self.height as usize
    }

    fn index(&self, sq: Square) -> usize {
        sq.rank as usize * self.width as usize + sq.file as usize
    }

    pub fn contains(&self, file: i32, rank: i32) -> bool {
        file >= 0 && rank >= 0 && (file as usize) < self.width() && (rank as usize) < self.height()
    }

    pub fn get(&self, sq: Square) -> Cell {
        self.cells[self.index(sq)]
    }

    pub fn set(&mut self, sq: Square, cell: Cell) {
        let i = self.index(sq);
        self.cells[i] = cell;
    }

    pub fn with(mut self, sq: Square, cell: Cell) -> Board {
        self.set(sq, cell);
        self
    }

    /// Rank a pawn of `side` promotes on.
    pub fn promotion_rank(&self, side: Side) -> u8 {
        match side {
            Side::White => self.height - 1,
            Side::Black => 0,
        }
    }

    /// Rank from which a pawn of `side` may advance two squares.
    pub fn initial_rank(&self, side: Side) -> u8 {
        match side {
            Side::White => 1,
            Side::Black => self.height - 2,
        }
    }

    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        (0..self.width).flat_map(move |f| (0..self.height).map(move |r| Square::new(f, r)))
    }

    /// Pawns in file-then-rank order.
    pub fn pawns(&self) -> impl Iterator<Item = (Square, Side)> + '_ {
        self.squares().filter_map(move |sq| match self.get(sq) {
            Cell::Pawn(side) => Some((sq, side)),
            _ => None,
        })
    }

    pub fn pawn_count(&self) -> usize {
        self.cells.iter().filter(|c| matches!(c, Cell::Pawn(_))).count()
    }

    pub fn file_has_pawn(&self, file: u8) -> bool {
        (0..self.height).any(|r| matches!(self.get(Square::new(file, r)), Cell::Pawn(_)))
    }

    /// The side that has a pawn standing on its promotion rank, if any.
    pub fn promoted(&self) -> Option<Side> {
        let top = self.height - 1;
        for f in 0..self.width {
            if self.get(Square::new(f, top)) == Cell::Pawn(Side::White) {
                return Some(Side::White);
            }
            if self.get(Square::new(f, 0)) == Cell::Pawn(Side::Black) {
                return Some(Side::Black);
            }
        }
        None
    }

    /// Files `first..=last` as a board of their own.
    pub fn restrict(&self, first: u8, last: u8) -> Board {
        let mut out = Board::empty((last - first + 1) as usize, self.height());
        for f in first..=last {
            for r in 0..self.height {
                out.set(Square::new(f - first, r), self.get(Square::new(f, r)));
            }
        }
        out
    }

    /// Copy of `self` with `other` written into files starting at `first`.
    pub fn embed(&self, other: &Board, first: u8) -> Board {
        assert_eq!(self.height, other.height);
        let mut out = self.clone();
        for sq in other.squares() {
            out.set(Square::new(sq.file + first, sq.rank), other.get(sq));
        }
        out
    }

    /// Colors swapped and ranks reflected; walls keep their letters.
    pub fn mirror(&self) -> Board {
        let mut out = self.clone();
        for sq in self.squares() {
            let cell = match self.get(sq) {
                Cell::Pawn(side) => Cell::Pawn(side.opponent()),
                other => other,
            };
            out.set(Square::new(sq.file, self.height - 1 - sq.rank), cell);
        }
        out
    }

    /// Maximal runs of files that contain at least one pawn.
    pub fn decompose(&self) -> Vec<Component> {
        let mut out = Vec::new();
        let mut f = 0u8;
        while f < self.width {
            if !self.file_has_pawn(f) {
                f += 1;
                continue;
            }
            let first = f;
            while f + 1 < self.width && self.file_has_pawn(f + 1) {
                f += 1;
            }
            out.push(Component { first_file: first, last_file: f, board: self.restrict(first, f) });
            f += 1;
        }
        out
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_fen(self))
    }
}

/// An independent subgame: a maximal run of pawn-bearing files.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Component {
    pub first_file: u8,
    pub last_file: u8,
    /// The files of the span, re-indexed from file `a`.
    pub board: Board,
}

impl Component {
    /// Spans are written `a-c`, or just `h` for a single file.
    pub fn label(&self) -> String {
        span_label(self.first_file, self.last_file)
    }

    /// Translate a move from component coordinates to the full board.
    pub fn globalize(&self, mv: Move) -> Move {
        mv.shifted(self.first_file)
    }
}

pub fn span_label(first: u8, last: u8) -> String {
    let a = (b'a' + first) as char;
    if first == last {
        a.to_string()
    } else {
        format!("{a}-{}", (b'a' + last) as char)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposes_diagram_one() {
        let b = parse_fen("8/p1p1p3/2P1P3/8/p3P3/P1P2Kp1/2P3Pk/8").unwrap();
        let spans: Vec<_> = b.decompose().iter().map(|c| c.label()).collect();
        assert_eq!(spans, ["a", "c", "e", "g"]);
        assert_eq!(b.pawn_count(), 12);
    }

    #[test]
    fn decomposes_diagram_four() {
        let b = parse_fen("8/6p1/3p3p/p7/1p2p1PP/8/PP1PP3/8").unwrap();
        let spans: Vec<_> = b.decompose().iter().map(|c| c.label()).collect();
        assert_eq!(spans, ["a-b", "d-e", "g-h"]);
    }

    #[test]
    fn empty_board_has_no_components() {
        assert!(Board::empty(8, 8).decompose().is_empty());
    }

    #[test]
    fn mirror_is_an_involution() {
        let b = parse_fen("8/8/1p2p3/7p/1P6/4P3/7P/8").unwrap();
        assert_eq!(b.mirror().mirror(), b);
        let h = b.decompose().pop().unwrap().board;
        assert_eq!(render_fen(&h.mirror()), "1/p/1/1/P/1/1/1");
    }

    #[test]
    fn squares_parse() {
        assert_eq!(Square::parse("a2"), Some(Square::new(0, 1)));
        assert_eq!(Square::parse("c12").unwrap().to_string(), "c12");
        assert_eq!(Square::parse("a0"), None);
    }
}
