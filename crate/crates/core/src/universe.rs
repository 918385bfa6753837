//! Bounded universes of misère contexts.
//!
//! Indistinguishability modulo a universe quantifies over infinitely many
//! games. Here it is checked over finite, explicitly enumerated context sets:
//! a witness is a proof of distinguishability, while the absence of one only
//! means "indistinguishable over these contexts".

use rustc_hash::FxHashSet;
use thiserror::Error;

use crate::game::{Arena, Convention, Game, GameError, Outcome};
use crate::numbers::ColorString;
use crate::sprigs::literal_sprig_game;

/// Largest birthday [`enumerate_dicots`] accepts by default.
pub const DEFAULT_DICOT_CAP: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniverseError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("dicot enumeration beyond birthday {cap} is disabled (asked for {requested})")]
    BirthdayCap { requested: u32, cap: u32 },
}

/// One context game with a label in position notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    pub game: Game,
    pub label: String,
}

/// A finite set of context games, kept in a fixed enumeration order.
#[derive(Clone, Debug, Default)]
pub struct ContextSet {
    descriptor: String,
    dicot: bool,
    members: Vec<Context>,
    seen: FxHashSet<Game>,
}

impl ContextSet {
    pub fn new(descriptor: impl Into<String>, dicot: bool) -> ContextSet {
        ContextSet { descriptor: descriptor.into(), dicot, ..ContextSet::default() }
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    /// Whether every member is claimed to be a dicot.
    pub fn is_dicot_universe(&self) -> bool {
        self.dicot
    }

    pub fn members(&self) -> &[Context] {
        &self.members
    }

    pub fn games(&self) -> impl Iterator<Item = Game> + '_ {
        self.members.iter().map(|c| c.game)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Adds `game` unless an identical tree is already present.
    pub fn insert(&mut self, game: Game, label: impl Into<String>) -> bool {
        if !self.seen.insert(game) {
            return false;
        }
        self.members.push(Context { game, label: label.into() });
        true
    }

    /// Union, keeping this set's members first.
    pub fn union(mut self, other: &ContextSet) -> ContextSet {
        for c in &other.members {
            self.insert(c.game, c.label.clone());
        }
        self.descriptor = format!("{} ∪ {}", self.descriptor, other.descriptor);
        self.dicot &= other.dicot;
        self
    }

    pub fn label_of(&self, game: Game) -> Option<&str> {
        self.members.iter().find(|c| c.game == game).map(|c| c.label.as_str())
    }
}

/// True iff every subposition has options for both players or for neither.
pub fn is_dicot(arena: &Arena, g: Game) -> bool {
    arena.subpositions(g).into_iter().all(|p| arena.left_options(p).is_empty() == arena.right_options(p).is_empty())
}

/// All dicot trees born by day `birthday`, with the default cap.
pub fn enumerate_dicots(arena: &Arena, birthday: u32) -> Result<ContextSet, UniverseError> {
    enumerate_dicots_capped(arena, birthday, DEFAULT_DICOT_CAP)
}

/// All dicot trees born by day `birthday`: each day adds every `{A | B}` with
/// `A`, `B` subsets of the previous day's dicots, both empty or both not.
pub fn enumerate_dicots_capped(arena: &Arena, birthday: u32, cap: u32) -> Result<ContextSet, UniverseError> {
    let mut set = ContextSet::new(format!("dicots born by day {birthday}"), true);
    for g in dicot_games(arena, birthday, cap)? {
        let label = arena.render(g);
        set.insert(g, label);
    }
    Ok(set)
}

/// The games of [`enumerate_dicots_capped`] in the same order, unlabelled.
pub fn dicot_games(arena: &Arena, birthday: u32, cap: u32) -> Result<Vec<Game>, UniverseError> {
    if birthday > cap {
        return Err(UniverseError::BirthdayCap { requested: birthday, cap });
    }
    let mut all = vec![Game::ZERO];
    let mut seen: FxHashSet<Game> = all.iter().copied().collect();
    for _ in 0..birthday {
        let subsets = nonempty_subsets(&all);
        for lefts in &subsets {
            for rights in &subsets {
                let g = arena.make_game(lefts.iter().copied(), rights.iter().copied())?;
                if seen.insert(g) {
                    all.push(g);
                }
            }
        }
    }
    Ok(all)
}

fn nonempty_subsets(items: &[Game]) -> Vec<Vec<Game>> {
    let n = items.len();
    (1u64..1 << n).map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| items[i]).collect()).collect()
}

/// All sums of at most `max_sprigs` literal sprigs whose red-blue parts have
/// at most `max_len` edges (a bare green edge counts as a sprig), each also
/// with an extra `∗` when `with_star` is set.
pub fn sprig_contexts(
    arena: &Arena,
    max_sprigs: usize,
    max_len: usize,
    with_star: bool,
) -> Result<ContextSet, UniverseError> {
    let descriptor =
        format!("sums of ≤{max_sprigs} sprigs of length ≤{max_len}{}", if with_star { ", each ± ∗" } else { "" });
    let mut set = ContextSet::new(descriptor, true);
    let strings = ColorString::all_up_to(max_len);
    let games = strings.iter().map(|s| literal_sprig_game(arena, s)).collect::<Result<Vec<_>, _>>()?;
    let labels: Vec<String> = strings.iter().map(|s| format!("g{s}")).collect();
    let stars: &[bool] = if with_star { &[false, true] } else { &[false] };
    for k in 0..=max_sprigs {
        for picks in index_multisets(strings.len(), k) {
            let base = arena.sum_all(picks.iter().map(|&i| games[i]))?;
            for &star in stars {
                let mut terms: Vec<&str> = picks.iter().map(|&i| labels[i].as_str()).collect();
                let game = if star {
                    terms.push("*");
                    arena.sum(base, Game::STAR)?
                } else {
                    base
                };
                let label = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                set.insert(game, label);
            }
        }
    }
    Ok(set)
}

/// Sprig contexts of the given size, each ± ∗, together with all dicots born
/// by `dicot_birthday`.
pub fn verification_contexts(
    arena: &Arena,
    max_sprigs: usize,
    max_len: usize,
    dicot_birthday: u32,
) -> Result<ContextSet, UniverseError> {
    let sprigs = sprig_contexts(arena, max_sprigs, max_len, true)?;
    let dicots = enumerate_dicots(arena, dicot_birthday)?;
    Ok(sprigs.union(&dicots))
}

/// All ≤3-sprig sums of length ≤3, ± ∗, plus dicots born by day 2.
pub fn default_contexts(arena: &Arena) -> Result<ContextSet, UniverseError> {
    verification_contexts(arena, 3, 3, 2)
}

fn misere(arena: &Arena, g: Game, x: Game) -> Result<Outcome, GameError> {
    Ok(arena.outcome(arena.sum(g, x)?, Convention::Misere))
}

/// The first context `X` with `o⁻(g + X) ≠ o⁻(h + X)`.
pub fn distinguish(arena: &Arena, g: Game, h: Game, ctx: &ContextSet) -> Result<Option<Context>, GameError> {
    if g == h {
        return Ok(None);
    }
    for c in ctx.members() {
        if misere(arena, g, c.game)? != misere(arena, h, c.game)? {
            return Ok(Some(c.clone()));
        }
    }
    Ok(None)
}

/// True iff `o⁻(g + X) = o⁻(X)` for every `X` in `ctx`.
pub fn verify_equiv_zero(arena: &Arena, g: Game, ctx: &ContextSet) -> Result<bool, GameError> {
    Ok(distinguish(arena, g, Game::ZERO, ctx)?.is_none())
}

/// True iff `H + H̄` is a misère next-player win for `g` and every follower
/// `H` of `g`.
pub fn check_ngame_hypothesis(arena: &Arena, g: Game) -> Result<bool, GameError> {
    for h in arena.subpositions(g) {
        let pair = arena.sum(h, arena.conjugate(h)?)?;
        if arena.outcome(pair, Convention::Misere) != Outcome::N {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The first context `X` where `o⁻(g + X) ≥ o⁻(h + X)` fails, i.e. where the
/// outcome for `g` is below or incomparable to the outcome for `h`.
pub fn refute_geq(arena: &Arena, g: Game, h: Game, ctx: &ContextSet) -> Result<Option<Context>, GameError> {
    if g == h {
        return Ok(None);
    }
    for c in ctx.members() {
        let (og, oh) = (misere(arena, g, c.game)?, misere(arena, h, c.game)?);
        if matches!(og.partial_cmp(&oh), None | Some(std::cmp::Ordering::Less)) {
            return Ok(Some(c.clone()));
        }
    }
    Ok(None)
}

/// All non-decreasing index sequences of length `k` over `0..n`, in
/// lexicographic order.
pub fn index_multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, k: usize, from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in from..n {
            current.push(i);
            extend(n, k, i, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}
