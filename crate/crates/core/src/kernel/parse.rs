//! Recursive-descent parser for value expressions.
//!
//! ```text
//! expr := term (('+'|'-') term)*
//! term := atom | '{' list (bars list)+ '}'
//! list := (expr (',' expr)*)?
//! bars := '|'+ | '‖'
//!
//! More bars bind more loosely: `{2|1||0}` is `{{2|1}|0}`.
//! atom := integer | integer '/' pow2 | '*' digits? | '^' '*'? | 'v' '*'?
//!       | digits '.' ('^'|'v') '*'? | 'Tiny(' expr ')' | 'Miny(' expr ')' | '-' atom
//! ```

use thiserror::Error;

use super::dyadic::Dyadic;
use super::game::{make, Game};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("non-dyadic fraction at {pos}: denominator {denominator} is not a power of two")]
    NonDyadic { pos: usize, denominator: u64 },
}

/// Parse a value expression into its canonical game.
pub fn parse_value_expr(text: &str) -> Result<Game, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(g.canonical())
}

// Split at the loosest separator, which must be unique.
fn nest(lists: &[Vec<Game>], bars: &[usize]) -> Result<Vec<Game>, String> {
    let Some(&top) = bars.iter().max() else {
        return Ok(lists[0].clone());
    };
    let at: Vec<usize> = (0..bars.len()).filter(|&i| bars[i] == top).collect();
    if at.len() > 1 {
        return Err(format!("ambiguous use of {top} bars"));
    }
    let i = at[0];
    let left = nest(&lists[..=i], &bars[..i])?;
    let right = nest(&lists[i + 1..], &bars[i + 1..])?;
    Ok(vec![make(left, right)])
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Game, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc.add(t).canonical();
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = acc.sub(t).canonical();
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Game, ParseError> {
        if self.eat(b'{') {
            let start = self.pos;
            let mut lists = vec![self.list()?];
            let mut bars = Vec::new();
            while let Some(n) = self.bars() {
                bars.push(n);
                lists.push(self.list()?);
            }
            self.expect(b'}')?;
            if bars.is_empty() {
                return Err(self.error("expected '|'"));
            }
            return nest(&lists, &bars).map(|mut g| g.pop().expect("nest yields a game")).map_err(|msg| ParseError::Syntax { pos: start, msg });
        }
        self.atom()
    }

    fn bars(&mut self) -> Option<usize> {
        if self.keyword("‖") {
            return Some(2);
        }
        let mut n = 0;
        while self.src.get(self.pos) == Some(&b'|') {
            self.pos += 1;
            n += 1;
        }
        (n > 0).then_some(n)
    }

    fn list(&mut self) -> Result<Vec<Game>, ParseError> {
        let mut items = Vec::new();
        if matches!(self.peek(), Some(b'|' | b'}')) || self.src[self.pos..].starts_with("‖".as_bytes()) {
            return Ok(items);
        }
        loop {
            items.push(self.expr()?);
            if !self.eat(b',') {
                return Ok(items);
            }
        }
    }

    fn digits(&mut self) -> Option<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn optional_star(&mut self, g: Game) -> Game {
        if self.src.get(self.pos) == Some(&b'*') {
            self.pos += 1;
            g.add(Game::star()).canonical()
        } else {
            g
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn atom(&mut self) -> Result<Game, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'-') => {
                self.pos += 1;
                // '-' applies to braces too, not only to atoms
                Ok(self.term()?.neg())
            }
            Some(b'*') => {
                self.pos += 1;
                let k = match self.src.get(self.pos) {
                    Some(c) if c.is_ascii_digit() => self.digits().unwrap_or(1),
                    _ => 1,
                };
                let k = u32::try_from(k).map_err(|_| self.error("nimber too large"))?;
                Ok(Game::nimber(k))
            }
            Some(b'^') => {
                self.pos += 1;
                Ok(self.optional_star(Game::up()))
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(self.optional_star(Game::up().neg()))
            }
            Some(b'T') | Some(b'M') => {
                let tiny = if self.keyword("Tiny(") {
                    true
                } else if self.keyword("Miny(") {
                    false
                } else {
                    return Err(self.error("unknown identifier"));
                };
                let q = self.expr()?;
                self.expect(b')')?;
                Ok(if tiny { Game::tiny(q) } else { Game::miny(q) })
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits().ok_or_else(|| self.error("expected digits"))?;
                let n = i64::try_from(n).map_err(|_| self.error("integer too large"))?;
                if self.src.get(self.pos) == Some(&b'.') {
                    self.pos += 1;
                    let ups = i32::try_from(n).map_err(|_| self.error("multiple too large"))?;
                    let ups = match self.src.get(self.pos) {
                        Some(b'^') => ups,
                        Some(b'v') => -ups,
                        _ => return Err(self.error("expected '^' or 'v' after '.'")),
                    };
                    self.pos += 1;
                    let star = self.src.get(self.pos) == Some(&b'*');
                    if star {
                        self.pos += 1;
                    }
                    return Ok(Game::up_multiple(ups, star));
                }
                if self.eat(b'/') {
                    let den_pos = {
                        self.skip_ws();
                        self.pos
                    };
                    let den = self.digits().ok_or_else(|| self.error("expected denominator"))?;
                    if den == 0 || !den.is_power_of_two() {
                        return Err(ParseError::NonDyadic { pos: den_pos, denominator: den });
                    }
                    return Ok(Game::number(Dyadic::new(n, den.trailing_zeros())));
                }
                Ok(Game::integer(n))
            }
            Some(_) => {
                self.pos = start;
                Err(self.error("unexpected character"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{format_value, OutcomeClass};

    fn p(s: &str) -> Game {
        parse_value_expr(s).unwrap()
    }

    #[test]
    fn numbers_and_brackets() {
        assert!(p("{0,*|1}").eq(p("1/2")));
        assert_eq!(p("3/4 - 1/4"), p("1/2"));
        assert_eq!(p("-2"), Game::integer(-2));
        assert_eq!(p("{{2|1}|0}").stops(), (Dyadic::integer(1), Dyadic::ZERO));
    }

    #[test]
    fn stacked_bars() {
        assert_eq!(p("{2|1||0}"), p("{{2|1}|0}"));
        assert_eq!(p("{2|1‖0}"), p("{{2|1}|0}"));
        assert_eq!(p("{0||0|-1}"), p("Tiny(1)"));
        assert_eq!(p("{2|1||1|0}"), p("1"));
        assert_eq!(p("{4|2|||0||-1|-2}"), p("{{4|2}|{0|{-1|-2}}}"));
        assert!(matches!(parse_value_expr("{1|0|-1}"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn infinitesimals() {
        assert_eq!(p("^ + v"), Game::zero());
        assert_eq!(format_value(p("^ + *")), "^*");
        assert_eq!(p("3.^*"), Game::up_multiple(3, true));
        assert_eq!(p("2.v"), Game::up_multiple(-2, false));
        assert_eq!(p("*2 + *2"), Game::zero());
        assert_eq!(p("Tiny(1) + v").outcome(), OutcomeClass::RightWinsAlways);
        assert_eq!(p("-{1|0}"), p("{0|-1}"));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_value_expr("1/3"), Err(ParseError::NonDyadic { denominator: 3, .. })));
        assert!(matches!(parse_value_expr("{0|"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_value_expr("1 +"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_value_expr("x"), Err(ParseError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_value_expr("1 2"), Err(ParseError::Syntax { pos: 2, .. })));
    }
}
