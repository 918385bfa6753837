//! Sums of Hackenbush Sprigs.
//!
//! A Sprig is a string whose ground edge is green and whose other edges are
//! blue or red. Its canonical form is `∗:x`, where `x` is the value of the
//! red-blue part. A sum of Sprigs is kept as two multisets of positive
//! numbers, `X` for the sprigs `∗:x` and `Y` for the sprigs `∗:-y`, plus a
//! parity bit for loose `∗` components (two stars cancel among dicots).
//!
//! The outcome of any such sum is decided by two statistics of its reduced
//! form `(X∖Y, Y∖X)`: the advantage `Δ = |X| − |Y|` and the edge
//! `ε = min(X′) − min(Y′)` (zero when either side is empty).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use thiserror::Error;

use crate::game::{Arena, Convention, Game, GameError, Outcome, Player};
use crate::numbers::{number_options, number_to_game, string_to_value, value_to_string, Color, ColorString, Dyadic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SprigError {
    #[error("sprig multisets hold strictly positive values, got {0}")]
    NonPositive(Dyadic),
}

/// The Sprig `∗:value`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sprig {
    value: Dyadic,
}

impl Sprig {
    pub fn new(value: Dyadic) -> Sprig {
        Sprig { value }
    }

    /// The sprig whose red-blue part is `colors`.
    pub fn from_colors(colors: &ColorString) -> Sprig {
        Sprig { value: string_to_value(colors) }
    }

    pub fn value(&self) -> &Dyadic {
        &self.value
    }

    pub fn colors(&self) -> ColorString {
        value_to_string(&self.value)
    }

    /// `∗ : x` with `x` in canonical form.
    pub fn game(&self, arena: &Arena) -> Result<Game, GameError> {
        let x = number_to_game(arena, &self.value)?;
        arena.ordinal_sum(Game::STAR, x)
    }

    /// The Hackenbush position itself: green ground edge plus the colored
    /// edges, with every cut available.
    pub fn literal_game(&self, arena: &Arena) -> Result<Game, GameError> {
        literal_sprig_game(arena, &self.colors())
    }
}

/// Literal game tree of a Sprig. Cutting the green edge leaves 0; cutting
/// colored edge `i` leaves the green edge and the first `i` colored edges.
pub fn literal_sprig_game(arena: &Arena, colors: &ColorString) -> Result<Game, GameError> {
    let mut prefixes = vec![Game::STAR];
    for k in 1..=colors.len() {
        let edges = &colors.colors()[..k];
        let side = |want: Color| {
            std::iter::once(Game::ZERO)
                .chain(edges.iter().enumerate().filter(|(_, &c)| c == want).map(|(i, _)| prefixes[i]))
                .collect::<Vec<_>>()
        };
        let game = arena.make_game(side(Color::Blue), side(Color::Red))?;
        prefixes.push(game);
    }
    Ok(prefixes[colors.len()])
}

type Multiset = BTreeMap<Dyadic, usize>;

fn multiset_len(m: &Multiset) -> usize {
    m.values().sum()
}

fn multiset_insert(m: &mut Multiset, x: Dyadic, count: usize) {
    if count > 0 {
        *m.entry(x).or_insert(0) += count;
    }
}

fn multiset_remove_one(m: &mut Multiset, x: &Dyadic) {
    if let Some(count) = m.get_mut(x) {
        *count -= 1;
        if *count == 0 {
            m.remove(x);
        }
    }
}

fn multiset_difference(a: &Multiset, b: &Multiset) -> Multiset {
    a.iter()
        .filter_map(|(x, &n)| {
            let left = n.saturating_sub(b.get(x).copied().unwrap_or(0));
            (left > 0).then(|| (x.clone(), left))
        })
        .collect()
}

fn expand(m: &Multiset) -> impl Iterator<Item = &Dyadic> {
    m.iter().flat_map(|(x, &n)| std::iter::repeat_n(x, n))
}

/// Normal-play comparison of a game with 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormalSign {
    Positive,
    Zero,
    Fuzzy,
    Negative,
}

impl NormalSign {
    /// Positive ↦ L, zero ↦ P, fuzzy ↦ N, negative ↦ R.
    pub fn outcome(self) -> Outcome {
        match self {
            NormalSign::Positive => Outcome::L,
            NormalSign::Zero => Outcome::P,
            NormalSign::Fuzzy => Outcome::N,
            NormalSign::Negative => Outcome::R,
        }
    }

    pub fn from_comparisons(geq_zero: bool, leq_zero: bool) -> NormalSign {
        match (geq_zero, leq_zero) {
            (true, true) => NormalSign::Zero,
            (true, false) => NormalSign::Positive,
            (false, true) => NormalSign::Negative,
            (false, false) => NormalSign::Fuzzy,
        }
    }
}

impl fmt::Display for NormalSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormalSign::Positive => "> 0",
            NormalSign::Zero => "= 0",
            NormalSign::Fuzzy => "|| 0",
            NormalSign::Negative => "< 0",
        })
    }
}

/// A disjunctive sum `Σ ∗:x + Σ ∗:-y (+ ∗)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SprigSum {
    left: Multiset,
    right: Multiset,
    star: bool,
}

impl SprigSum {
    pub fn zero() -> SprigSum {
        SprigSum::default()
    }

    pub fn star() -> SprigSum {
        SprigSum { star: true, ..SprigSum::default() }
    }

    /// `xs` are the values of Left's sprigs `∗:x`, `ys` the magnitudes of
    /// Right's sprigs `∗:-y`.
    pub fn new(
        xs: impl IntoIterator<Item = Dyadic>,
        ys: impl IntoIterator<Item = Dyadic>,
        star: bool,
    ) -> Result<SprigSum, SprigError> {
        let mut sum = SprigSum { star, ..SprigSum::default() };
        for x in xs {
            if !x.is_positive() {
                return Err(SprigError::NonPositive(x));
            }
            multiset_insert(&mut sum.left, x, 1);
        }
        for y in ys {
            if !y.is_positive() {
                return Err(SprigError::NonPositive(y));
            }
            multiset_insert(&mut sum.right, y, 1);
        }
        Ok(sum)
    }

    /// Collects sprigs of any sign plus `stars` loose stars; zero-valued
    /// sprigs are stars.
    pub fn from_sprigs(sprigs: impl IntoIterator<Item = Sprig>, stars: usize) -> SprigSum {
        let mut sum = SprigSum { star: stars % 2 == 1, ..SprigSum::default() };
        for s in sprigs {
            sum.push(s);
        }
        sum
    }

    pub fn push(&mut self, sprig: Sprig) {
        let value = sprig.value;
        if value.is_zero() {
            self.star = !self.star;
        } else if value.is_positive() {
            multiset_insert(&mut self.left, value, 1);
        } else {
            multiset_insert(&mut self.right, -value, 1);
        }
    }

    pub fn push_star(&mut self) {
        self.star = !self.star;
    }

    pub fn has_star(&self) -> bool {
        self.star
    }

    pub fn with_star(&self, star: bool) -> SprigSum {
        SprigSum { star, ..self.clone() }
    }

    pub fn toggled_star(&self) -> SprigSum {
        self.with_star(!self.star)
    }

    /// `X`, ascending, with multiplicity.
    pub fn left_values(&self) -> Vec<Dyadic> {
        expand(&self.left).cloned().collect()
    }

    /// `Y` (positive magnitudes), ascending, with multiplicity.
    pub fn right_values(&self) -> Vec<Dyadic> {
        expand(&self.right).cloned().collect()
    }

    /// Left's sprigs ascending, then Right's sprigs by ascending magnitude.
    pub fn sprigs(&self) -> Vec<Sprig> {
        expand(&self.left).map(|x| Sprig::new(x.clone())).chain(expand(&self.right).map(|y| Sprig::new(-y))).collect()
    }

    pub fn sprig_count(&self) -> usize {
        multiset_len(&self.left) + multiset_len(&self.right)
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty() && !self.star
    }

    /// Cancels conjugate pairs: `(X∖Y, Y∖X)` with the star parity kept.
    pub fn reduce(&self) -> SprigSum {
        SprigSum {
            left: multiset_difference(&self.left, &self.right),
            right: multiset_difference(&self.right, &self.left),
            star: self.star,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.left.keys().all(|x| !self.right.contains_key(x))
    }

    /// `Δ = |X| − |Y|`.
    pub fn advantage(&self) -> i64 {
        multiset_len(&self.left) as i64 - multiset_len(&self.right) as i64
    }

    /// `ε = min(X′) − min(Y′)` on the reduced form, or 0 if either is empty.
    pub fn edge(&self) -> Dyadic {
        let reduced = self.reduce();
        match (reduced.left.keys().next(), reduced.right.keys().next()) {
            (Some(x), Some(y)) => x - y,
            _ => Dyadic::zero(),
        }
    }

    pub fn conjugate(&self) -> SprigSum {
        SprigSum { left: self.right.clone(), right: self.left.clone(), star: self.star }
    }

    /// Misère outcome from `Δ` and `ε`.
    pub fn misere_outcome(&self) -> Outcome {
        let delta = self.advantage();
        if !self.star {
            return match delta {
                d if d > 0 => Outcome::L,
                d if d < 0 => Outcome::R,
                _ => Outcome::N,
            };
        }
        self.edge_table(delta, &self.edge())
    }

    /// The four-way split shared by misère `G + ∗` and normal-play `G`.
    fn edge_table(&self, delta: i64, epsilon: &Dyadic) -> Outcome {
        match delta {
            d if d > 1 => Outcome::L,
            d if d < -1 => Outcome::R,
            1 if epsilon.is_positive() => Outcome::L,
            1 => Outcome::N,
            -1 if epsilon.is_negative() => Outcome::R,
            -1 => Outcome::N,
            _ if epsilon.is_positive() => Outcome::L,
            _ if epsilon.is_negative() => Outcome::R,
            _ => {
                debug_assert!(self.reduce().sprig_count() == 0, "Δ = ε = 0 forces X = Y");
                Outcome::P
            }
        }
    }

    /// Normal-play comparison with 0.
    pub fn normal_sign(&self) -> NormalSign {
        let delta = self.advantage();
        if self.star {
            return match delta {
                d if d >= 1 => NormalSign::Positive,
                0 => NormalSign::Fuzzy,
                _ => NormalSign::Negative,
            };
        }
        match self.edge_table(delta, &self.edge()) {
            Outcome::L => NormalSign::Positive,
            Outcome::P => NormalSign::Zero,
            Outcome::N => NormalSign::Fuzzy,
            Outcome::R => NormalSign::Negative,
        }
    }

    pub fn normal_outcome(&self) -> Outcome {
        self.normal_sign().outcome()
    }

    pub fn outcome(&self, convention: Convention) -> Outcome {
        match convention {
            Convention::Normal => self.normal_outcome(),
            Convention::Misere => self.misere_outcome(),
        }
    }

    /// `o⁺(G) = o⁻(G + ∗)` and `o⁺(G + ∗) = o⁻(G)`, on the closed forms.
    pub fn star_toggle_check(&self) -> bool {
        let flipped = self.toggled_star();
        self.normal_outcome() == flipped.misere_outcome() && flipped.normal_outcome() == self.misere_outcome()
    }

    /// Sum of canonical sprig games `∗:x`, plus `∗` if the parity is odd.
    pub fn canonical_game(&self, arena: &Arena) -> Result<Game, GameError> {
        let mut games = self.sprigs().iter().map(|s| s.game(arena)).collect::<Result<Vec<_>, _>>()?;
        if self.star {
            games.push(Game::STAR);
        }
        arena.sum_all(games)
    }

    /// Sum of the literal Hackenbush sprigs, plus `∗` if the parity is odd.
    pub fn literal_game(&self, arena: &Arena) -> Result<Game, GameError> {
        let mut games = self.sprigs().iter().map(|s| s.literal_game(arena)).collect::<Result<Vec<_>, _>>()?;
        if self.star {
            games.push(Game::STAR);
        }
        arena.sum_all(games)
    }

    /// The canonical moves for `player`: the star to 0, any sprig to 0, or a
    /// sprig `∗:v` to `∗:v'` for the canonical option `v'` of `v`. One move
    /// per distinct sprig value.
    pub fn moves(&self, player: Player) -> Vec<SprigMove> {
        let mut moves = Vec::new();
        if self.star {
            moves.push(SprigMove { kind: MoveKind::StarToZero, result: self.with_star(false) });
        }
        let signed: Vec<Dyadic> = self.left.keys().cloned().chain(self.right.keys().map(|y| -y)).collect();
        for value in signed {
            let mut cleared = self.clone();
            cleared.remove_sprig(&value);
            moves.push(SprigMove { kind: MoveKind::Clear(value.clone()), result: cleared });

            let (left, right) = number_options(&value);
            let option = match player {
                Player::Left => left,
                Player::Right => right,
            };
            if let Some(to) = option {
                let mut trimmed = self.clone();
                trimmed.remove_sprig(&value);
                trimmed.push(Sprig::new(to.clone()));
                moves.push(SprigMove { kind: MoveKind::Trim { from: value, to }, result: trimmed });
            }
        }
        moves
    }

    fn remove_sprig(&mut self, value: &Dyadic) {
        if value.is_positive() {
            multiset_remove_one(&mut self.left, value);
        } else {
            multiset_remove_one(&mut self.right, &-value);
        }
    }

    /// A misère move for `player`, or `None` if `player` has no move.
    ///
    /// Winning moves are preferred in the order the outcome arguments use
    /// them: clearing the star, clearing an opposing sprig, clearing one's own
    /// sprig, then trimming a sprig. Ties go to the smallest magnitude, Left's
    /// sprigs first. Without a winning move the mover clears the opponent's
    /// largest reduced sprig.
    pub fn best_move(&self, player: Player) -> Option<SprigMove> {
        let moves = self.moves(player);
        let winning = moves
            .iter()
            .filter(|m| m.result.misere_outcome().wins_moving_second(player))
            .min_by(|a, b| a.preference(player).cmp(&b.preference(player)));
        if let Some(m) = winning {
            return Some(m.clone());
        }
        let reduced = self.reduce();
        let opposing = match player {
            Player::Left => reduced.right.keys().next_back().map(|y| -y),
            Player::Right => reduced.left.keys().next_back().cloned(),
        };
        if let Some(target) = opposing {
            return moves.into_iter().find(|m| m.kind == MoveKind::Clear(target.clone()));
        }
        moves.into_iter().min_by(|a, b| a.preference(player).cmp(&b.preference(player)))
    }
}

/// Every sum (without star) of at most `max_sprigs` sprigs whose red-blue
/// parts are nonempty strings of at most `max_len` edges, as multisets.
pub fn sprig_family(max_sprigs: usize, max_len: usize) -> Vec<SprigSum> {
    let sprigs: Vec<Sprig> =
        ColorString::all_up_to(max_len).iter().filter(|s| !s.is_empty()).map(Sprig::from_colors).collect();
    let mut family = Vec::new();
    for k in 0..=max_sprigs {
        for picks in crate::universe::index_multisets(sprigs.len(), k) {
            family.push(SprigSum::from_sprigs(picks.iter().map(|&i| sprigs[i].clone()), 0));
        }
    }
    family
}

impl Add for &SprigSum {
    type Output = SprigSum;

    fn add(self, rhs: &SprigSum) -> SprigSum {
        let mut sum = self.clone();
        for (x, &n) in &rhs.left {
            multiset_insert(&mut sum.left, x.clone(), n);
        }
        for (y, &n) in &rhs.right {
            multiset_insert(&mut sum.right, y.clone(), n);
        }
        sum.star = sum.star != rhs.star;
        sum
    }
}

impl Add for SprigSum {
    type Output = SprigSum;

    fn add(self, rhs: SprigSum) -> SprigSum {
        &self + &rhs
    }
}

/// Position notation: `*:1/2 + *:-1 + *`, or `0` for the empty sum.
impl fmt::Display for SprigSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self.sprigs().iter().map(|s| format!("*:{}", s.value())).collect();
        if self.star {
            terms.push("*".to_string());
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// The loose `∗` is taken.
    StarToZero,
    /// The green edge of the sprig with this (signed) value is cut.
    Clear(Dyadic),
    /// The sprig `∗:from` becomes `∗:to`.
    Trim { from: Dyadic, to: Dyadic },
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::StarToZero => f.write_str("* -> 0"),
            MoveKind::Clear(v) => write!(f, "*:{v} -> 0"),
            MoveKind::Trim { from, to } if to.is_zero() => write!(f, "*:{from} -> *"),
            MoveKind::Trim { from, to } => write!(f, "*:{from} -> *:{to}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SprigMove {
    pub kind: MoveKind,
    pub result: SprigSum,
}

impl SprigMove {
    fn preference(&self, player: Player) -> (u8, Dyadic, bool) {
        let owned_by_mover = |v: &Dyadic| match player {
            Player::Left => v.is_positive(),
            Player::Right => v.is_negative(),
        };
        match &self.kind {
            MoveKind::StarToZero => (0, Dyadic::zero(), false),
            MoveKind::Clear(v) if !owned_by_mover(v) => (1, v.abs(), v.is_negative()),
            MoveKind::Clear(v) => (2, v.abs(), v.is_negative()),
            MoveKind::Trim { from, .. } => (3, from.abs(), from.is_negative()),
        }
    }
}

impl fmt::Display for SprigMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (leaves {})", self.kind, self.result)
    }
}
