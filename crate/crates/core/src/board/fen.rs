use super::{Board, BoardError, Cell, Side, Square, MAX_WIDTH, MIN_HEIGHT};

/// Parse the placement part of a FEN string, extended to any height and up
/// to 26 files. Digit runs are empty squares, `P`/`p` are pawns and every
/// other ASCII letter is a wall.
pub fn parse_fen(text: &str) -> Result<Board, BoardError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(BoardError::Empty);
    }
    let mut rows: Vec<Vec<Cell>> = Vec::new();
    let mut offset = 0;
    for row_text in text.split('/') {
        let mut row = Vec::new();
        let mut run = 0usize;
        for (i, ch) in row_text.char_indices() {
            let pos = offset + i;
            if let Some(d) = ch.to_digit(10) {
                run = run * 10 + d as usize;
                if run > MAX_WIDTH {
                    return Err(BoardError::TooWide(run));
                }
                continue;
            }
            row.extend(std::iter::repeat_n(Cell::Empty, run));
            run = 0;
            let cell = match ch {
                'P' => Cell::Pawn(Side::White),
                'p' => Cell::Pawn(Side::Black),
                c if c.is_ascii_alphabetic() => Cell::Wall(c as u8),
                c => return Err(BoardError::IllegalChar { ch: c, pos }),
            };
            row.push(cell);
        }
        row.extend(std::iter::repeat_n(Cell::Empty, run));
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(BoardError::Ragged { row: rows.len() + 1, expected: first.len(), found: row.len() });
            }
        }
        rows.push(row);
        offset += row_text.len() + 1;
    }
    let width = rows[0].len();
    if width == 0 {
        return Err(BoardError::ZeroWidth);
    }
    if width > MAX_WIDTH {
        return Err(BoardError::TooWide(width));
    }
    if rows.len() < MIN_HEIGHT {
        return Err(BoardError::TooShort(rows.len()));
    }
    if rows.len() > u8::MAX as usize {
        return Err(BoardError::TooTall(rows.len()));
    }
    let height = rows.len();
    let mut board = Board::empty(width, height);
    for (i, row) in rows.into_iter().enumerate() {
        let rank = (height - 1 - i) as u8;
        for (f, cell) in row.into_iter().enumerate() {
            board.set(Square::new(f as u8, rank), cell);
        }
    }
    for (sq, side) in board.pawns() {
        if sq.rank == board.promotion_rank(side) {
            return Err(BoardError::PawnOnPromotionRank { side, square: sq });
        }
    }
    Ok(board)
}

pub fn render_fen(board: &Board) -> String {
    let mut rows = Vec::with_capacity(board.height());
    for rank in (0..board.height() as u8).rev() {
        let mut row = String::new();
        let mut run = 0;
        for file in 0..board.width() as u8 {
            let ch = match board.get(Square::new(file, rank)) {
                Cell::Empty => {
                    run += 1;
                    continue;
                }
                Cell::Pawn(Side::White) => 'P',
                Cell::Pawn(Side::Black) => 'p',
                Cell::Wall(c) => c as char,
            };
            if run > 0 {
                row.push_str(&run.to_string());
                run = 0;
            }
            row.push(ch);
        }
        if run > 0 {
            row.push_str(&run.to_string());
        }
        rows.push(row);
    }
    rows.join("/")
}
