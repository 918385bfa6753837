//! Exact dyadic rationals, red-blue color strings and the simplicity rule.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::game::{Arena, Game, GameError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberError {
    #[error("`{0}` is not a number")]
    Syntax(String),
    #[error("`{0}` is not a dyadic rational (denominator must be a power of two)")]
    NotDyadic(String),
    #[error("empty interval: {lo} is not below {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("invalid color `{0}` (expected B or R)")]
    InvalidColor(char),
}

/// A dyadic rational `numerator / 2^exponent` in lowest terms: either the
/// exponent is 0 or the numerator is odd.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dyadic {
    numerator: BigInt,
    exponent: u32,
}

impl Dyadic {
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Dyadic {
        let mut numerator = numerator.into();
        let mut exponent = exponent;
        if numerator.is_zero() {
            exponent = 0;
        }
        while exponent > 0 && numerator.is_even() {
            numerator >>= 1u32;
            exponent -= 1;
        }
        Dyadic { numerator, exponent }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Dyadic {
        Dyadic { numerator: n.into(), exponent: 0 }
    }

    pub fn zero() -> Dyadic {
        Dyadic::from_integer(0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exponent == 0
    }

    pub fn is_positive(&self) -> bool {
        self.numerator.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic { numerator: self.numerator.abs(), exponent: self.exponent }
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        self.numerator.div_floor(&(BigInt::one() << self.exponent))
    }

    /// Numerator over the common denominator `2^exponent`.
    fn scaled_to(&self, exponent: u32) -> BigInt {
        debug_assert!(exponent >= self.exponent);
        &self.numerator << (exponent - self.exponent)
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator.to_f64().unwrap_or(f64::NAN) / 2f64.powi(self.exponent as i32)
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_integer(n)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exponent = self.exponent.max(other.exponent);
        self.scaled_to(exponent).cmp(&other.scaled_to(exponent))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let exponent = self.exponent.max(rhs.exponent);
        Dyadic::new(self.scaled_to(exponent) + rhs.scaled_to(exponent), exponent)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        &self - &rhs
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic { numerator: -&self.numerator, exponent: self.exponent }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        -&self
    }
}

/// Integers print as `n`, everything else as `p/d` with a decimal
/// denominator, e.g. `-3/4`.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, BigInt::one() << self.exponent)
        }
    }
}

fn parse_integer(text: &str, whole: &str) -> Result<BigInt, NumberError> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(NumberError::Syntax(whole.to_string()));
    }
    text.parse::<BigInt>().map_err(|_| NumberError::Syntax(whole.to_string()))
}

impl FromStr for Dyadic {
    type Err = NumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        match text.split_once('/') {
            None => Ok(Dyadic::from_integer(parse_integer(text, s)?)),
            Some((numerator, denominator)) => {
                let numerator = parse_integer(numerator, s)?;
                if denominator.starts_with(['+', '-']) {
                    return Err(NumberError::Syntax(s.to_string()));
                }
                let denominator = parse_integer(denominator, s)?;
                if !denominator.is_positive() {
                    return Err(NumberError::NotDyadic(s.to_string()));
                }
                let exponent = denominator.trailing_zeros().unwrap_or(0);
                if denominator != BigInt::one() << exponent {
                    return Err(NumberError::NotDyadic(s.to_string()));
                }
                let exponent = u32::try_from(exponent).map_err(|_| NumberError::Syntax(s.to_string()))?;
                Ok(Dyadic::new(numerator, exponent))
            }
        }
    }
}

/// The number of least birthday strictly between `lo` and `hi`; `None`
/// stands for −∞ on the left and +∞ on the right.
pub fn simplest_between(lo: Option<&Dyadic>, hi: Option<&Dyadic>) -> Result<Dyadic, NumberError> {
    if let (Some(lo), Some(hi)) = (lo, hi) {
        if lo >= hi {
            return Err(NumberError::EmptyInterval { lo: lo.to_string(), hi: hi.to_string() });
        }
    }
    let zero = Dyadic::zero();
    let above_zero = lo.is_some_and(|lo| *lo >= zero);
    let below_zero = hi.is_some_and(|hi| *hi <= zero);
    if below_zero {
        let flipped = simplest_between(hi.map(|h| -h).as_ref(), lo.map(|l| -l).as_ref())?;
        return Ok(-flipped);
    }
    if !above_zero {
        return Ok(zero);
    }
    let lo = lo.expect("lower bound is finite here");
    let integer = Dyadic::from_integer(lo.floor() + 1);
    match hi {
        Some(hi) if integer >= *hi => {}
        _ => return Ok(integer),
    }
    let hi = hi.expect("upper bound is finite here");
    let mut exponent = 1u32;
    loop {
        let candidate = Dyadic::new(lo.scaled_floor(exponent) + 1, exponent);
        if candidate < *hi {
            return Ok(candidate);
        }
        exponent += 1;
    }
}

impl Dyadic {
    /// `floor(self * 2^exponent)`.
    fn scaled_floor(&self, exponent: u32) -> BigInt {
        if exponent >= self.exponent {
            self.scaled_to(exponent)
        } else {
            self.numerator.div_floor(&(BigInt::one() << (self.exponent - exponent)))
        }
    }
}

/// Canonical Left and Right option values of a number, where they exist.
pub fn number_options(x: &Dyadic) -> (Option<Dyadic>, Option<Dyadic>) {
    if x.is_zero() {
        return (None, None);
    }
    if x.is_integer() {
        let one = Dyadic::from_integer(1);
        return if x.is_positive() { (Some(x - &one), None) } else { (None, Some(x + &one)) };
    }
    let step = Dyadic::new(1, x.exponent);
    (Some(x - &step), Some(x + &step))
}

/// The canonical-form game of a number.
pub fn number_to_game(arena: &Arena, x: &Dyadic) -> Result<Game, GameError> {
    let (left, right) = number_options(x);
    let left = left.map(|l| number_to_game(arena, &l)).transpose()?;
    let right = right.map(|r| number_to_game(arena, &r)).transpose()?;
    arena.make_game(left, right)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Blue => 'B',
            Color::Red => 'R',
        }
    }

    pub fn from_letter(c: char) -> Result<Color, NumberError> {
        match c {
            'B' => Ok(Color::Blue),
            'R' => Ok(Color::Red),
            other => Err(NumberError::InvalidColor(other)),
        }
    }

    pub fn swapped(self) -> Color {
        match self {
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
        }
    }
}

/// The red-blue part of a Hackenbush string, edge nearest the ground first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorString(Vec<Color>);

impl ColorString {
    pub fn new(colors: Vec<Color>) -> ColorString {
        ColorString(colors)
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, color: Color) {
        self.0.push(color);
    }

    pub fn swapped(&self) -> ColorString {
        ColorString(self.0.iter().map(|c| c.swapped()).collect())
    }

    /// Every string of exactly `len` edges, in lexicographic order (B < R).
    pub fn all_of_length(len: usize) -> Vec<ColorString> {
        (0u64..1 << len)
            .map(|bits| {
                ColorString(
                    (0..len).map(|i| if bits >> (len - 1 - i) & 1 == 0 { Color::Blue } else { Color::Red }).collect(),
                )
            })
            .collect()
    }

    /// Every string of at most `max_len` edges, shortest first.
    pub fn all_up_to(max_len: usize) -> Vec<ColorString> {
        (0..=max_len).flat_map(ColorString::all_of_length).collect()
    }
}

impl fmt::Display for ColorString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{}", c.letter())?;
        }
        Ok(())
    }
}

impl FromStr for ColorString {
    type Err = NumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars().map(Color::from_letter).collect::<Result<Vec<_>, _>>().map(ColorString)
    }
}

/// Normal-play value of a red-blue string, folded from the ground up.
pub fn string_to_value(s: &ColorString) -> Dyadic {
    let mut lo: Option<Dyadic> = None;
    let mut hi: Option<Dyadic> = None;
    let mut value = Dyadic::zero();
    for color in s.colors() {
        match color {
            Color::Blue => lo = Some(value),
            Color::Red => hi = Some(value),
        }
        value = simplest_between(lo.as_ref(), hi.as_ref()).expect("fold keeps lo < hi");
    }
    value
}

/// The unique string whose value is `x` (its sign expansion, Blue for +).
pub fn value_to_string(x: &Dyadic) -> ColorString {
    let mut lo: Option<Dyadic> = None;
    let mut hi: Option<Dyadic> = None;
    let mut value = Dyadic::zero();
    let mut colors = Vec::new();
    while value != *x {
        if *x > value {
            colors.push(Color::Blue);
            lo = Some(value);
        } else {
            colors.push(Color::Red);
            hi = Some(value);
        }
        value = simplest_between(lo.as_ref(), hi.as_ref()).expect("fold keeps lo < hi");
    }
    ColorString(colors)
}

/// The literal game tree of a red-blue string: cutting edge `i` leaves the
/// first `i` edges.
pub fn string_game(arena: &Arena, s: &ColorString) -> Result<Game, GameError> {
    let mut prefixes = vec![Game::ZERO];
    for k in 1..=s.len() {
        let colors = &s.colors()[..k];
        let side = |want: Color| {
            colors.iter().enumerate().filter(move |(_, &c)| c == want).map(|(i, _)| prefixes[i]).collect::<Vec<_>>()
        };
        let game = arena.make_game(side(Color::Blue), side(Color::Red))?;
        prefixes.push(game);
    }
    Ok(prefixes[s.len()])
}
