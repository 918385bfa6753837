//! Position notation.
//!
//! ```text
//! sum   := term ('+' term)*
//! term  := '0' | '*' | '*' INT | '*:' dyadic | 'g' color* | '{' list '|' list '}'
//! list  := (sum (',' sum)*)?
//! color := 'B' | 'R'
//! ```
//!
//! `g` followed by colors is a literal Sprig (green ground edge, then the
//! red-blue edges from the ground up), `*:x` is the Sprig of value `x`, `*n`
//! a nim-heap and braces an explicit game. Whitespace is ignored.

use std::fmt;

use thiserror::Error;

use crate::game::{Arena, Game, GameError};
use crate::numbers::{Color, ColorString, Dyadic, NumberError};
use crate::sprigs::{Sprig, SprigSum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("bad number at byte {offset}: {source}")]
    Number { offset: usize, source: NumberError },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Number { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{0}` is not a sum of sprigs and stars; only the game-tree oracle can evaluate it")]
pub struct NotClassifiable(pub String);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Zero,
    Star,
    NimHeap(usize),
    /// A literal sprig, written by its colors.
    Colors(ColorString),
    /// A sprig written by value.
    Sprig(Dyadic),
    Braces {
        left: Vec<Expr>,
        right: Vec<Expr>,
    },
}

impl Term {
    pub fn game(&self, arena: &Arena) -> Result<Game, GameError> {
        match self {
            Term::Zero => Ok(Game::ZERO),
            Term::Star => Ok(Game::STAR),
            Term::NimHeap(n) => arena.nim_heap(*n),
            Term::Colors(colors) => Sprig::from_colors(colors).literal_game(arena),
            Term::Sprig(x) => Sprig::new(x.clone()).literal_game(arena),
            Term::Braces { left, right } => {
                let lefts = left.iter().map(|e| e.game(arena)).collect::<Result<Vec<_>, _>>()?;
                let rights = right.iter().map(|e| e.game(arena)).collect::<Result<Vec<_>, _>>()?;
                arena.make_game(lefts, rights)
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => f.write_str("0"),
            Term::Star => f.write_str("*"),
            Term::NimHeap(n) => write!(f, "*{n}"),
            Term::Colors(colors) => write!(f, "g{colors}"),
            Term::Sprig(x) => write!(f, "*:{x}"),
            Term::Braces { left, right } => {
                let join = |side: &[Expr]| side.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
                write!(f, "{{{}|{}}}", join(left), join(right))
            }
        }
    }
}

/// A disjunctive sum of terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr(pub Vec<Term>);

impl Expr {
    pub fn terms(&self) -> &[Term] {
        &self.0
    }

    /// The literal game: every term as written, nothing cancelled.
    pub fn game(&self, arena: &Arena) -> Result<Game, GameError> {
        let games = self.0.iter().map(|t| t.game(arena)).collect::<Result<Vec<_>, _>>()?;
        arena.sum_all(games)
    }

    /// The sprig sum, if every term is a sprig, a star or 0.
    pub fn sprig_sum(&self) -> Option<SprigSum> {
        let mut sum = SprigSum::zero();
        for term in &self.0 {
            match term {
                Term::Zero | Term::NimHeap(0) => {}
                Term::Star | Term::NimHeap(1) => sum.push_star(),
                Term::Colors(colors) => sum.push(Sprig::from_colors(colors)),
                Term::Sprig(x) => sum.push(Sprig::new(x.clone())),
                Term::NimHeap(_) | Term::Braces { .. } => return None,
            }
        }
        Some(sum)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A parsed position: the expression as written, and its sprig sum when it
/// has one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position {
    expr: Expr,
    sprigs: Option<SprigSum>,
}

impl Position {
    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    pub fn is_sprig_sum(&self) -> bool {
        self.sprigs.is_some()
    }

    pub fn sprig_sum(&self) -> Result<&SprigSum, NotClassifiable> {
        self.sprigs.as_ref().ok_or_else(|| NotClassifiable(self.expr.to_string()))
    }

    pub fn game(&self, arena: &Arena) -> Result<Game, GameError> {
        self.expr.game(arena)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.expr.fmt(f)
    }
}

pub fn parse_position(text: &str) -> Result<Position, ParseError> {
    let mut parser = Parser { text, pos: 0 };
    let expr = parser.sum()?;
    parser.skip_ws();
    if parser.pos < text.len() {
        return Err(parser.error("expected `+` or end of input"));
    }
    let sprigs = expr.sprig_sum();
    Ok(Position { expr, sprigs })
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> char {
        let c = self.text[self.pos..].chars().next().expect("bump after peek");
        self.pos += c.len_utf8();
        c
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, message: &str) -> ParseError {
        let found = match self.text[self.pos..].chars().next() {
            Some(c) => format!("found `{c}`"),
            None => "found end of input".to_string(),
        };
        ParseError::Syntax { offset: self.pos, message: format!("{message}, {found}") }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        while self.eat('+') {
            terms.push(self.term()?);
        }
        Ok(Expr(terms))
    }

    fn digits(&mut self) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            out.push(self.bump());
        }
        out
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some('0') => {
                self.bump();
                Ok(Term::Zero)
            }
            Some('g') => {
                self.bump();
                let mut colors = ColorString::default();
                while let Some(c @ ('B' | 'R')) = self.peek() {
                    self.bump();
                    colors.push(Color::from_letter(c).expect("matched B or R"));
                }
                Ok(Term::Colors(colors))
            }
            Some('*') => {
                self.bump();
                match self.peek() {
                    Some(':') => {
                        self.bump();
                        self.dyadic().map(Term::Sprig)
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let start = self.pos;
                        let digits = self.digits();
                        let n = digits.parse::<usize>().map_err(|_| ParseError::Syntax {
                            offset: start,
                            message: format!("nim-heap size `{digits}` is too large"),
                        })?;
                        Ok(Term::NimHeap(n))
                    }
                    _ => Ok(Term::Star),
                }
            }
            Some('{') => {
                self.bump();
                let left = self.option_list('|')?;
                let right = self.option_list('}')?;
                Ok(Term::Braces { left, right })
            }
            _ => Err(self.error("expected a term (`0`, `*`, `*n`, `*:x`, `g...` or `{...|...}`)")),
        }
    }

    fn option_list(&mut self, close: char) -> Result<Vec<Expr>, ParseError> {
        let mut options = Vec::new();
        if self.eat(close) {
            return Ok(options);
        }
        loop {
            options.push(self.sum()?);
            if self.eat(close) {
                return Ok(options);
            }
            if !self.eat(',') {
                return Err(self.error(&format!("expected `,` or `{close}`")));
            }
        }
    }

    fn dyadic(&mut self) -> Result<Dyadic, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let mut text = String::new();
        if let Some(sign @ ('-' | '+')) = self.peek() {
            self.bump();
            text.push(sign);
        }
        let numerator = self.digits();
        if numerator.is_empty() {
            return Err(self.error("expected a number after `*:`"));
        }
        text.push_str(&numerator);
        if self.eat('/') {
            let denominator = self.digits();
            if denominator.is_empty() {
                return Err(self.error("expected a denominator"));
            }
            text.push('/');
            text.push_str(&denominator);
        }
        text.parse().map_err(|source| ParseError::Number { offset: start, source })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    fn sprigs(text: &str) -> SprigSum {
        parse_position(text).unwrap().sprig_sum().unwrap().clone()
    }

    #[test]
    fn sprig_sum_examples() {
        assert_eq!(sprigs("gBR + gR + *"), SprigSum::new([d("1/2")], [d("1")], true).unwrap());
        assert_eq!(sprigs("*:3/4 + *:-3/4"), SprigSum::new([d("3/4")], [d("3/4")], false).unwrap());
        assert_eq!(sprigs("g"), SprigSum::star());
        assert_eq!(sprigs("0"), SprigSum::zero());
        assert_eq!(sprigs("* + *"), SprigSum::zero());
        assert_eq!(sprigs(" g B R+*:  -1/2 "), SprigSum::new([d("1/2")], [d("1/2")], false).unwrap());
        assert_eq!(sprigs("*1 + *0"), SprigSum::star());
    }

    #[test]
    fn oracle_only_positions() {
        let p = parse_position("*2 + gB").unwrap();
        assert!(!p.is_sprig_sum());
        assert!(p.sprig_sum().is_err());
        let p = parse_position("{0,*|0}").unwrap();
        assert!(!p.is_sprig_sum());
        let arena = Arena::new();
        let g = p.game(&arena).unwrap();
        assert_eq!(g, arena.make_game([Game::ZERO, Game::STAR], [Game::ZERO]).unwrap());
        let p = parse_position("{|}").unwrap();
        assert_eq!(p.game(&arena).unwrap(), Game::ZERO);
        let p = parse_position("{ *:-1 | }").unwrap();
        assert_eq!(arena.render(p.game(&arena).unwrap()), "{{0|0,*}|}");
    }

    #[test]
    fn literal_game_keeps_every_term() {
        let arena = Arena::new();
        let p = parse_position("* + *").unwrap();
        assert_eq!(p.game(&arena).unwrap(), arena.sum(Game::STAR, Game::STAR).unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        let err = parse_position("gB + x").unwrap_err();
        assert_eq!(err.offset(), 5);
        let err = parse_position("gL").unwrap_err();
        assert_eq!(err.offset(), 1);
        let err = parse_position("*:1/3").unwrap_err();
        assert!(matches!(err, ParseError::Number { offset: 2, source: NumberError::NotDyadic(_) }));
        assert!(parse_position("").is_err());
        assert!(parse_position("gB +").is_err());
        assert!(parse_position("*:").is_err());
        assert!(parse_position("*:1/").is_err());
        assert!(parse_position("{0|0").is_err());
        assert!(parse_position("{0 0|}").is_err());
    }

    #[test]
    fn rendered_sums_reparse() {
        let s = SprigSum::new([d("1/2"), d("3")], [d("1"), d("1/2")], true).unwrap();
        assert_eq!(sprigs(&s.to_string()), s);
        assert_eq!(sprigs(&SprigSum::zero().to_string()), SprigSum::zero());
    }
}
