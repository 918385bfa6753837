//! The misère monoid of sums of Sprigs.
//!
//! Generated by `α` (the star) and one `κ` per positive dyadic `p/2^q`
//! (the sprig `∗:p/2^q`, with `κ⁻¹` for `∗:-p/2^q`), subject only to
//! `α² = e` and `κ·κ⁻¹ = e`. Words are stored additively as exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::game::Outcome;
use crate::numbers::{Dyadic, NumberError};
use crate::sprigs::{Sprig, SprigSum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("malformed monoid factor `{0}`")]
    Factor(String),
    #[error("generator index must be a positive dyadic, got {0}")]
    NonPositive(Dyadic),
    #[error(transparent)]
    Number(#[from] NumberError),
}

/// A reduced word `α^δ · Π κ_x^{n_x}` with `δ ∈ {0,1}` and every stored
/// exponent nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonoidWord {
    alpha: bool,
    kappa: BTreeMap<Dyadic, i64>,
}

impl MonoidWord {
    /// The identity `e`.
    pub fn identity() -> MonoidWord {
        MonoidWord::default()
    }

    pub fn alpha() -> MonoidWord {
        MonoidWord { alpha: true, ..MonoidWord::default() }
    }

    /// `κ_x^exponent` for a positive dyadic `x`.
    pub fn kappa(x: Dyadic, exponent: i64) -> Result<MonoidWord, WordError> {
        if !x.is_positive() {
            return Err(WordError::NonPositive(x));
        }
        let mut word = MonoidWord::identity();
        if exponent != 0 {
            word.kappa.insert(x, exponent);
        }
        Ok(word)
    }

    pub fn has_alpha(&self) -> bool {
        self.alpha
    }

    pub fn exponent(&self, x: &Dyadic) -> i64 {
        self.kappa.get(x).copied().unwrap_or(0)
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Dyadic, i64)> {
        self.kappa.iter().map(|(x, &n)| (x, n))
    }

    pub fn is_identity(&self) -> bool {
        !self.alpha && self.kappa.is_empty()
    }

    pub fn multiply(&self, other: &MonoidWord) -> MonoidWord {
        let mut word = self.clone();
        word.alpha ^= other.alpha;
        for (x, &n) in &other.kappa {
            let entry = word.kappa.entry(x.clone()).or_insert(0);
            *entry += n;
            if *entry == 0 {
                word.kappa.remove(x);
            }
        }
        word
    }

    /// The reduced sum this word stands for.
    pub fn to_sum(&self) -> SprigSum {
        let mut sum = SprigSum::zero();
        for (x, &n) in &self.kappa {
            let value = if n > 0 { x.clone() } else { -x };
            for _ in 0..n.unsigned_abs() {
                sum.push(Sprig::new(value.clone()));
            }
        }
        sum.with_star(self.alpha)
    }

    /// Misère outcome of the sums in this class; only `α` is a P-position.
    pub fn outcome(&self) -> Outcome {
        self.to_sum().misere_outcome()
    }
}

/// The word of a sum: `δ` from the star parity, and `n_x` = multiplicity of
/// `x` in `X` minus multiplicity in `Y`.
pub fn to_word(sum: &SprigSum) -> MonoidWord {
    let mut word = MonoidWord { alpha: sum.has_star(), ..MonoidWord::default() };
    for x in sum.left_values() {
        *word.kappa.entry(x).or_insert(0) += 1;
    }
    for y in sum.right_values() {
        *word.kappa.entry(y).or_insert(0) -= 1;
    }
    word.kappa.retain(|_, n| *n != 0);
    word
}

pub fn multiply(a: &MonoidWord, b: &MonoidWord) -> MonoidWord {
    a.multiply(b)
}

pub fn word_outcome(w: &MonoidWord) -> Outcome {
    w.outcome()
}

/// Equal reduced words: the underlying sums are indistinguishable among
/// dicots, and unequal words are distinguishable.
pub fn words_equal(a: &MonoidWord, b: &MonoidWord) -> bool {
    a == b
}

/// `e`, or factors joined by `.`: `a` first, then `k[x]^n` by ascending `x`,
/// e.g. `a.k[1/2]^-1.k[3/4]^2`.
impl fmt::Display for MonoidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("e");
        }
        let mut factors = Vec::new();
        if self.alpha {
            factors.push("a".to_string());
        }
        for (x, &n) in &self.kappa {
            factors.push(if n == 1 { format!("k[{x}]") } else { format!("k[{x}]^{n}") });
        }
        f.write_str(&factors.join("."))
    }
}

impl FromStr for MonoidWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut word = MonoidWord::identity();
        for factor in s.trim().split('.') {
            let factor = factor.trim();
            let next = match factor {
                "e" | "1" => MonoidWord::identity(),
                "a" => MonoidWord::alpha(),
                _ => {
                    let rest = factor.strip_prefix("k[").ok_or_else(|| WordError::Factor(factor.to_string()))?;
                    let (index, power) = rest.split_once(']').ok_or_else(|| WordError::Factor(factor.to_string()))?;
                    let x: Dyadic = index.parse()?;
                    let exponent = match power {
                        "" => 1,
                        _ => power
                            .strip_prefix('^')
                            .and_then(|p| p.parse::<i64>().ok())
                            .ok_or_else(|| WordError::Factor(factor.to_string()))?,
                    };
                    MonoidWord::kappa(x, exponent)?
                }
            };
            word = word.multiply(&next);
        }
        Ok(word)
    }
}
