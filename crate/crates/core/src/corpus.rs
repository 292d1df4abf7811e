//! The diagrams shipped with the crate and their expected values.

use std::sync::OnceLock;

use serde::Deserialize;

use crate::board::{parse_fen, Board, Component, Side};

const CORPUS: &str = include_str!("../data/corpus.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct CorpusComponent {
    /// Files such as `a-c`, or `h` for a single file.
    pub span: String,
    /// Expected value as a value expression.
    pub value: String,
}

impl CorpusComponent {
    pub fn files(&self) -> (u8, u8) {
        let file = |s: &str| s.as_bytes()[0] - b'a';
        match self.span.split_once('-') {
            Some((a, b)) => (file(a), file(b)),
            None => (file(&self.span), file(&self.span)),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub title: String,
    pub fen: String,
    pub total: Option<String>,
    /// Winners with White to move and with Black to move.
    pub winners: Option<[Side; 2]>,
    pub components: Vec<CorpusComponent>,
}

impl CorpusEntry {
    pub fn board(&self) -> Board {
        parse_fen(&self.fen).expect("corpus FEN is valid")
    }

    /// The span of `c` cut out of the board as a standalone component.
    pub fn component(&self, c: &CorpusComponent) -> Component {
        let (first, last) = c.files();
        Component { first_file: first, last_file: last, board: self.board().restrict(first, last) }
    }
}

#[derive(Deserialize)]
struct CorpusFile {
    diagram: Vec<CorpusEntry>,
}

pub fn corpus() -> &'static [CorpusEntry] {
    static ENTRIES: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| toml::from_str::<CorpusFile>(CORPUS).expect("corpus parses").diagram)
}

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    corpus().iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_all_diagrams() {
        assert_eq!(corpus().len(), 11);
        let d6 = find("d6").unwrap();
        assert_eq!(d6.components[0].files(), (0, 2));
        assert_eq!(d6.components[2].files(), (7, 7));
        assert_eq!(d6.winners, Some([Side::Black, Side::White]));
        for e in corpus() {
            e.board();
            for c in &e.components {
                crate::kernel::parse_value_expr(&c.value).unwrap();
            }
        }
    }
}
