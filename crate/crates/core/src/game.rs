//! Interned partizan game trees.
//!
//! Every game lives in an [`Arena`] and is referred to by a small copyable
//! handle, [`Game`]. Option sets are stored sorted by handle and
//! duplicate-free, so two structurally identical trees always intern to the
//! same handle and structural equality is handle equality.
//!
//! The arena also owns the memo tables for disjunctive sums, ordinal sums,
//! conjugates, outcomes (one table per play convention), normal-play
//! comparisons and normal-play canonical forms. All of it sits behind one
//! mutex, so an `Arena` can be shared between threads and behaves as a single
//! logical map.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Mutex, MutexGuard};

use hashbrown::HashTable;
use rustc_hash::{FxHashMap, FxHasher};
use thiserror::Error;

/// Default cap on the number of interned nodes in one arena.
pub const DEFAULT_NODE_BUDGET: usize = 10_000_000;

/// Handle to an interned game. Only meaningful together with the arena that
/// produced it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Game(u32);

impl Game {
    /// The game `0 = {·|·}`. Every arena interns it first.
    pub const ZERO: Game = Game(0);
    /// The game `∗ = {0|0}`. Every arena interns it second.
    pub const STAR: Game = Game(1);

    pub fn id(self) -> u32 {
        self.0
    }

    fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("node budget exceeded: more than {budget} interned games")]
    NodeBudgetExceeded { budget: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    Normal,
    Misere,
}

impl Convention {
    fn slot(self) -> usize {
        match self {
            Convention::Normal => 0,
            Convention::Misere => 1,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Normal => "normal",
            Convention::Misere => "misere",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Left => "Left",
            Player::Right => "Right",
        })
    }
}

/// Outcome class of a position.
///
/// Ordered from Left's point of view: `R < N`, `R < P`, `N < L`, `P < L`,
/// with `N` and `P` incomparable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Left wins whoever moves first.
    L,
    /// Right wins whoever moves first.
    R,
    /// The player to move wins.
    N,
    /// The player who just moved wins.
    P,
}

impl Outcome {
    pub fn from_first_player_wins(left_first_wins: bool, right_first_wins: bool) -> Outcome {
        match (left_first_wins, right_first_wins) {
            (true, true) => Outcome::N,
            (false, false) => Outcome::P,
            (true, false) => Outcome::L,
            (false, true) => Outcome::R,
        }
    }

    /// Whether `player` wins when moving first.
    pub fn wins_moving_first(self, player: Player) -> bool {
        match player {
            Player::Left => matches!(self, Outcome::L | Outcome::N),
            Player::Right => matches!(self, Outcome::R | Outcome::N),
        }
    }

    /// Whether `player` wins when the opponent moves first.
    pub fn wins_moving_second(self, player: Player) -> bool {
        match player {
            Player::Left => matches!(self, Outcome::L | Outcome::P),
            Player::Right => matches!(self, Outcome::R | Outcome::P),
        }
    }

    /// Swap the roles of Left and Right.
    pub fn conjugate(self) -> Outcome {
        match self {
            Outcome::L => Outcome::R,
            Outcome::R => Outcome::L,
            other => other,
        }
    }

    fn rank(self) -> u8 {
        match self {
            Outcome::R => 0,
            Outcome::N | Outcome::P => 1,
            Outcome::L => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Outcome::L => "L",
            Outcome::R => "R",
            Outcome::N => "N",
            Outcome::P => "P",
        }
    }
}

impl PartialOrd for Outcome {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        match self.rank().cmp(&other.rank()) {
            Ordering::Equal => None,
            ord => Some(ord),
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug)]
struct Node {
    start: usize,
    lefts: u32,
    rights: u32,
    birthday: u32,
    hash: u64,
}

const OUTCOME_KNOWN: u8 = 1;
const OUTCOME_LEFT_WINS: u8 = 2;
const OUTCOME_RIGHT_WINS: u8 = 4;

struct Store {
    pool: Vec<Game>,
    nodes: Vec<Node>,
    table: HashTable<Game>,
    budget: usize,
    outcomes: [Vec<u8>; 2],
    conjugates: FxHashMap<Game, Game>,
    sums: FxHashMap<(Game, Game), Game>,
    ordinals: FxHashMap<(Game, Game), Game>,
    geq: FxHashMap<(Game, Game), bool>,
    canonical: FxHashMap<Game, Game>,
}

fn hash_options(lefts: &[Game], rights: &[Game]) -> u64 {
    let mut hasher = FxHasher::default();
    lefts.len().hash(&mut hasher);
    lefts.hash(&mut hasher);
    rights.hash(&mut hasher);
    hasher.finish()
}

fn normalize(options: &mut Vec<Game>) {
    options.sort_unstable();
    options.dedup();
}

impl Store {
    fn new(budget: usize) -> Store {
        let mut store = Store {
            pool: Vec::new(),
            nodes: Vec::new(),
            table: HashTable::new(),
            budget: budget.max(2),
            outcomes: [Vec::new(), Vec::new()],
            conjugates: FxHashMap::default(),
            sums: FxHashMap::default(),
            ordinals: FxHashMap::default(),
            geq: FxHashMap::default(),
            canonical: FxHashMap::default(),
        };
        let zero = store.intern(Vec::new(), Vec::new()).expect("budget admits 0");
        let star = store.intern(vec![zero], vec![zero]).expect("budget admits *");
        debug_assert_eq!((zero, star), (Game::ZERO, Game::STAR));
        store
    }

    fn lefts(&self, g: Game) -> &[Game] {
        let node = &self.nodes[g.index()];
        &self.pool[node.start..node.start + node.lefts as usize]
    }

    fn rights(&self, g: Game) -> &[Game] {
        let node = &self.nodes[g.index()];
        let start = node.start + node.lefts as usize;
        &self.pool[start..start + node.rights as usize]
    }

    fn options(&self, g: Game, player: Player) -> &[Game] {
        match player {
            Player::Left => self.lefts(g),
            Player::Right => self.rights(g),
        }
    }

    fn intern(&mut self, mut lefts: Vec<Game>, mut rights: Vec<Game>) -> Result<Game, GameError> {
        normalize(&mut lefts);
        normalize(&mut rights);
        let hash = hash_options(&lefts, &rights);
        let found =
            self.table.find(hash, |&g| self.lefts(g) == lefts.as_slice() && self.rights(g) == rights.as_slice());
        if let Some(&g) = found {
            return Ok(g);
        }
        if self.nodes.len() >= self.budget {
            return Err(GameError::NodeBudgetExceeded { budget: self.budget });
        }
        let birthday = lefts.iter().chain(&rights).map(|g| self.nodes[g.index()].birthday + 1).max().unwrap_or(0);
        let game = Game(self.nodes.len() as u32);
        self.nodes.push(Node {
            start: self.pool.len(),
            lefts: lefts.len() as u32,
            rights: rights.len() as u32,
            birthday,
            hash,
        });
        self.pool.extend_from_slice(&lefts);
        self.pool.extend_from_slice(&rights);
        let nodes = &self.nodes;
        self.table.insert_unique(hash, game, |g| nodes[g.index()].hash);
        Ok(game)
    }

    fn conjugate(&mut self, g: Game) -> Result<Game, GameError> {
        if let Some(&c) = self.conjugates.get(&g) {
            return Ok(c);
        }
        let lefts = self.rights(g).to_vec();
        let rights = self.lefts(g).to_vec();
        let new_lefts = lefts.into_iter().map(|o| self.conjugate(o)).collect::<Result<Vec<_>, _>>()?;
        let new_rights = rights.into_iter().map(|o| self.conjugate(o)).collect::<Result<Vec<_>, _>>()?;
        let c = self.intern(new_lefts, new_rights)?;
        self.conjugates.insert(g, c);
        self.conjugates.insert(c, g);
        Ok(c)
    }

    fn sum(&mut self, g: Game, h: Game) -> Result<Game, GameError> {
        if g == Game::ZERO {
            return Ok(h);
        }
        if h == Game::ZERO {
            return Ok(g);
        }
        let key = if g <= h { (g, h) } else { (h, g) };
        if let Some(&s) = self.sums.get(&key) {
            return Ok(s);
        }
        let mut sides = [Vec::new(), Vec::new()];
        for (side, player) in [Player::Left, Player::Right].into_iter().enumerate() {
            let from_g = self.options(g, player).to_vec();
            let from_h = self.options(h, player).to_vec();
            for o in from_g {
                let s = self.sum(o, h)?;
                sides[side].push(s);
            }
            for o in from_h {
                let s = self.sum(g, o)?;
                sides[side].push(s);
            }
        }
        let [lefts, rights] = sides;
        let s = self.intern(lefts, rights)?;
        self.sums.insert(key, s);
        Ok(s)
    }

    fn ordinal_sum(&mut self, base: Game, dependent: Game) -> Result<Game, GameError> {
        if dependent == Game::ZERO {
            return Ok(base);
        }
        if let Some(&s) = self.ordinals.get(&(base, dependent)) {
            return Ok(s);
        }
        let mut sides = [Vec::new(), Vec::new()];
        for (side, player) in [Player::Left, Player::Right].into_iter().enumerate() {
            sides[side].extend_from_slice(self.options(base, player));
            let from_dependent = self.options(dependent, player).to_vec();
            for o in from_dependent {
                let s = self.ordinal_sum(base, o)?;
                sides[side].push(s);
            }
        }
        let [lefts, rights] = sides;
        let s = self.intern(lefts, rights)?;
        self.ordinals.insert((base, dependent), s);
        Ok(s)
    }

    /// Returns (Left wins moving first, Right wins moving first).
    fn first_player_wins(&mut self, g: Game, convention: Convention) -> (bool, bool) {
        let slot = convention.slot();
        if self.outcomes[slot].len() < self.nodes.len() {
            self.outcomes[slot].resize(self.nodes.len(), 0);
        }
        let cached = self.outcomes[slot][g.index()];
        if cached & OUTCOME_KNOWN != 0 {
            return (cached & OUTCOME_LEFT_WINS != 0, cached & OUTCOME_RIGHT_WINS != 0);
        }
        let node = self.nodes[g.index()];
        let stuck_wins = convention == Convention::Misere;

        let left = if node.lefts == 0 {
            stuck_wins
        } else {
            (0..node.lefts as usize).any(|i| {
                let option = self.pool[node.start + i];
                !self.first_player_wins(option, convention).1
            })
        };
        let right = if node.rights == 0 {
            stuck_wins
        } else {
            let offset = node.start + node.lefts as usize;
            (0..node.rights as usize).any(|i| {
                let option = self.pool[offset + i];
                !self.first_player_wins(option, convention).0
            })
        };

        let mut bits = OUTCOME_KNOWN;
        if left {
            bits |= OUTCOME_LEFT_WINS;
        }
        if right {
            bits |= OUTCOME_RIGHT_WINS;
        }
        self.outcomes[slot][g.index()] = bits;
        (left, right)
    }

    /// Normal-play `g ≥ h`: no right option of g is ≤ h and no left option
    /// of h is ≥ g.
    fn geq(&mut self, g: Game, h: Game) -> bool {
        if g == h {
            return true;
        }
        if let Some(&answer) = self.geq.get(&(g, h)) {
            return answer;
        }
        let g_node = self.nodes[g.index()];
        let h_node = self.nodes[h.index()];
        let g_rights = g_node.start + g_node.lefts as usize;
        let refuted = (0..g_node.rights as usize).any(|i| {
            let gr = self.pool[g_rights + i];
            self.geq(h, gr)
        }) || (0..h_node.lefts as usize).any(|i| {
            let hl = self.pool[h_node.start + i];
            self.geq(hl, g)
        });
        self.geq.insert((g, h), !refuted);
        !refuted
    }

    fn canonical_form(&mut self, g: Game) -> Result<Game, GameError> {
        if let Some(&c) = self.canonical.get(&g) {
            return Ok(c);
        }
        let raw_lefts = self.lefts(g).to_vec();
        let raw_rights = self.rights(g).to_vec();
        let mut lefts = raw_lefts.into_iter().map(|o| self.canonical_form(o)).collect::<Result<Vec<_>, _>>()?;
        let mut rights = raw_rights.into_iter().map(|o| self.canonical_form(o)).collect::<Result<Vec<_>, _>>()?;
        normalize(&mut lefts);
        normalize(&mut rights);

        loop {
            // Distinct canonical forms are never equal, so `≥` between two
            // different handles is strict here.
            let dominated: Vec<Game> =
                lefts.iter().copied().filter(|&a| lefts.iter().any(|&b| b != a && self.geq(b, a))).collect();
            lefts.retain(|a| !dominated.contains(a));
            let dominated: Vec<Game> =
                rights.iter().copied().filter(|&a| rights.iter().any(|&b| b != a && self.geq(a, b))).collect();
            rights.retain(|a| !dominated.contains(a));

            // Reversibility is tested against the original g, which has the
            // same value as the partially simplified game.
            let mut changed = false;
            if let Some((i, bypass)) = self.find_reversible(g, &lefts, Player::Left) {
                lefts.swap_remove(i);
                lefts.extend(bypass);
                changed = true;
            } else if let Some((i, bypass)) = self.find_reversible(g, &rights, Player::Right) {
                rights.swap_remove(i);
                rights.extend(bypass);
                changed = true;
            }
            normalize(&mut lefts);
            normalize(&mut rights);
            if !changed {
                break;
            }
        }

        let c = self.intern(lefts, rights)?;
        self.canonical.insert(g, c);
        self.canonical.insert(c, c);
        Ok(c)
    }

    /// Finds an option of `player` that reverses through some counter-move,
    /// returning its index and the replacement options.
    fn find_reversible(&mut self, g: Game, options: &[Game], player: Player) -> Option<(usize, Vec<Game>)> {
        for (i, &a) in options.iter().enumerate() {
            let replies = self.options(a, player.opponent()).to_vec();
            for reply in replies {
                let reverses = match player {
                    Player::Left => self.geq(g, reply),
                    Player::Right => self.geq(reply, g),
                };
                if reverses {
                    return Some((i, self.options(reply, player).to_vec()));
                }
            }
        }
        None
    }
}

/// Owner of interned games and their memo tables.
pub struct Arena {
    store: Mutex<Store>,
}

impl Default for Arena {
    fn default() -> Self {
        Arena::new()
    }
}

impl fmt::Debug for Arena {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let store = self.lock();
        f.debug_struct("Arena").field("nodes", &store.nodes.len()).field("budget", &store.budget).finish()
    }
}

impl Arena {
    pub fn new() -> Arena {
        Arena::with_node_budget(DEFAULT_NODE_BUDGET)
    }

    pub fn with_node_budget(budget: usize) -> Arena {
        Arena { store: Mutex::new(Store::new(budget)) }
    }

    fn lock(&self) -> MutexGuard<'_, Store> {
        self.store.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
    }

    pub fn node_budget(&self) -> usize {
        self.lock().budget
    }

    /// Number of interned games.
    pub fn len(&self) -> usize {
        self.lock().nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn zero(&self) -> Game {
        Game::ZERO
    }

    pub fn star(&self) -> Game {
        Game::STAR
    }

    /// Interns `{lefts | rights}`. Order and duplicates in the inputs are
    /// irrelevant.
    pub fn make_game(
        &self,
        lefts: impl IntoIterator<Item = Game>,
        rights: impl IntoIterator<Item = Game>,
    ) -> Result<Game, GameError> {
        self.lock().intern(lefts.into_iter().collect(), rights.into_iter().collect())
    }

    pub fn left_options(&self, g: Game) -> Vec<Game> {
        self.lock().lefts(g).to_vec()
    }

    pub fn right_options(&self, g: Game) -> Vec<Game> {
        self.lock().rights(g).to_vec()
    }

    pub fn options(&self, g: Game, player: Player) -> Vec<Game> {
        self.lock().options(g, player).to_vec()
    }

    /// Height of the game tree.
    pub fn birthday(&self, g: Game) -> u32 {
        self.lock().nodes[g.index()].birthday
    }

    /// `g` together with every position reachable from it, in breadth-first
    /// order starting at `g`.
    pub fn subpositions(&self, g: Game) -> Vec<Game> {
        let store = self.lock();
        let mut seen = rustc_hash::FxHashSet::default();
        let mut order = vec![g];
        seen.insert(g);
        let mut next = 0;
        while next < order.len() {
            let current = order[next];
            next += 1;
            for &o in store.lefts(current).iter().chain(store.rights(current)) {
                if seen.insert(o) {
                    order.push(o);
                }
            }
        }
        order
    }

    /// The conjugate `Ḡ`: Left and Right exchanged throughout.
    pub fn conjugate(&self, g: Game) -> Result<Game, GameError> {
        self.lock().conjugate(g)
    }

    /// Disjunctive sum `g + h`.
    pub fn sum(&self, g: Game, h: Game) -> Result<Game, GameError> {
        self.lock().sum(g, h)
    }

    /// Disjunctive sum of any number of games; the empty sum is 0.
    pub fn sum_all(&self, games: impl IntoIterator<Item = Game>) -> Result<Game, GameError> {
        let mut store = self.lock();
        let mut total = Game::ZERO;
        for g in games {
            total = store.sum(total, g)?;
        }
        Ok(total)
    }

    /// Ordinal sum `base : dependent`.
    pub fn ordinal_sum(&self, base: Game, dependent: Game) -> Result<Game, GameError> {
        self.lock().ordinal_sum(base, dependent)
    }

    /// The nim-heap `∗n`.
    pub fn nim_heap(&self, n: usize) -> Result<Game, GameError> {
        let mut store = self.lock();
        let mut heaps = vec![Game::ZERO];
        for _ in 0..n {
            let next = store.intern(heaps.clone(), heaps.clone())?;
            heaps.push(next);
        }
        Ok(heaps[n])
    }

    pub fn outcome(&self, g: Game, convention: Convention) -> Outcome {
        let (left, right) = self.lock().first_player_wins(g, convention);
        Outcome::from_first_player_wins(left, right)
    }

    /// Normal-play `g ≥ h`.
    pub fn normal_geq(&self, g: Game, h: Game) -> bool {
        self.lock().geq(g, h)
    }

    /// Normal-play equality of values.
    pub fn normal_eq(&self, g: Game, h: Game) -> bool {
        let mut store = self.lock();
        store.geq(g, h) && store.geq(h, g)
    }

    /// Unique normal-play canonical form: dominated options removed and
    /// reversible options bypassed until neither applies.
    pub fn normal_canonical_form(&self, g: Game) -> Result<Game, GameError> {
        self.lock().canonical_form(g)
    }

    /// Brace notation, e.g. `{0,*|0}`; `0` and `*` are printed by name.
    pub fn render(&self, g: Game) -> String {
        let store = self.lock();
        let mut out = String::new();
        render_into(&store, g, &mut out);
        out
    }
}

fn render_into(store: &Store, g: Game, out: &mut String) {
    if g == Game::ZERO {
        out.push('0');
        return;
    }
    if g == Game::STAR {
        out.push('*');
        return;
    }
    out.push('{');
    for (i, &o) in store.lefts(g).iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        render_into(store, o, out);
    }
    out.push('|');
    for (i, &o) in store.rights(g).iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        render_into(store, o, out);
    }
    out.push('}');
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(arena: &Arena) -> Game {
        arena.make_game([Game::ZERO], []).unwrap()
    }

    #[test]
    fn zero_and_star_are_preinterned() {
        let arena = Arena::new();
        assert_eq!(arena.make_game([], []).unwrap(), arena.zero());
        assert_eq!(arena.make_game([Game::ZERO], [Game::ZERO]).unwrap(), arena.star());
        assert_eq!(arena.len(), 2);
    }

    #[test]
    fn make_game_is_idempotent() {
        let arena = Arena::new();
        let a = arena.make_game([Game::STAR, Game::ZERO, Game::ZERO], [Game::ZERO]).unwrap();
        let b = arena.make_game([Game::ZERO, Game::STAR], [Game::ZERO, Game::ZERO]).unwrap();
        assert_eq!(a, b);
        assert_eq!(arena.left_options(a), vec![Game::ZERO, Game::STAR]);
    }

    #[test]
    fn conjugate_examples() {
        let arena = Arena::new();
        assert_eq!(arena.conjugate(Game::ZERO).unwrap(), Game::ZERO);
        assert_eq!(arena.conjugate(Game::STAR).unwrap(), Game::STAR);
        let one = one(&arena);
        let minus_one = arena.make_game([], [Game::ZERO]).unwrap();
        assert_eq!(arena.conjugate(one).unwrap(), minus_one);
        assert_eq!(arena.conjugate(minus_one).unwrap(), one);
    }

    #[test]
    fn sum_examples() {
        let arena = Arena::new();
        let one = one(&arena);
        assert_eq!(arena.sum(Game::ZERO, one).unwrap(), one);
        let star_star = arena.sum(Game::STAR, Game::STAR).unwrap();
        assert_eq!(star_star, arena.make_game([Game::STAR], [Game::STAR]).unwrap());
        assert_eq!(arena.outcome(star_star, Convention::Normal), Outcome::P);
    }

    #[test]
    fn ordinal_sum_examples() {
        let arena = Arena::new();
        let one = one(&arena);
        assert_eq!(arena.ordinal_sum(one, Game::ZERO).unwrap(), one);
        assert_eq!(arena.ordinal_sum(Game::STAR, Game::STAR).unwrap(), arena.nim_heap(2).unwrap());
        let star_one = arena.ordinal_sum(Game::STAR, one).unwrap();
        assert_eq!(star_one, arena.make_game([Game::ZERO, Game::STAR], [Game::ZERO]).unwrap());
    }

    #[test]
    fn nim_heaps() {
        let arena = Arena::new();
        assert_eq!(arena.nim_heap(0).unwrap(), Game::ZERO);
        assert_eq!(arena.nim_heap(1).unwrap(), Game::STAR);
        let mut heap = Game::ZERO;
        for n in 1..6 {
            heap = arena.ordinal_sum(Game::STAR, heap).unwrap();
            assert_eq!(heap, arena.nim_heap(n).unwrap());
        }
        assert_eq!(arena.outcome(arena.nim_heap(2).unwrap(), Convention::Misere), Outcome::N);
    }

    #[test]
    fn outcome_examples() {
        let arena = Arena::new();
        assert_eq!(arena.outcome(Game::ZERO, Convention::Normal), Outcome::P);
        assert_eq!(arena.outcome(Game::ZERO, Convention::Misere), Outcome::N);
        assert_eq!(arena.outcome(Game::STAR, Convention::Normal), Outcome::N);
        assert_eq!(arena.outcome(Game::STAR, Convention::Misere), Outcome::P);
        let one = one(&arena);
        assert_eq!(arena.outcome(one, Convention::Normal), Outcome::L);
        // Misère: Left moving first must take the only edge and leave Right stuck.
        assert_eq!(arena.outcome(one, Convention::Misere), Outcome::R);
    }

    #[test]
    fn outcome_partial_order() {
        use Outcome::*;
        assert!(L > P && L > N && P > R && N > R && L > R);
        assert_eq!(N.partial_cmp(&P), None);
        assert!(N.partial_cmp(&P).is_none() && P.partial_cmp(&N).is_none());
        assert!(L >= L);
    }

    #[test]
    fn normal_geq_examples() {
        let arena = Arena::new();
        let one = one(&arena);
        assert!(arena.normal_geq(one, one));
        assert!(arena.normal_geq(one, Game::ZERO));
        assert!(!arena.normal_geq(Game::ZERO, one));
        assert!(!arena.normal_geq(Game::STAR, Game::ZERO));
        assert!(!arena.normal_geq(Game::ZERO, Game::STAR));
        let star_star = arena.sum(Game::STAR, Game::STAR).unwrap();
        assert!(arena.normal_eq(star_star, Game::ZERO));
    }

    #[test]
    fn canonical_form_examples() {
        let arena = Arena::new();
        let heap2 = arena.make_game([Game::ZERO, Game::STAR], [Game::ZERO, Game::STAR]).unwrap();
        assert_eq!(arena.normal_canonical_form(heap2).unwrap(), heap2);
        assert_eq!(arena.normal_canonical_form(arena.sum(Game::STAR, Game::STAR).unwrap()).unwrap(), Game::ZERO);

        // Literal tree of the blue-red string "BR": {0 | {0|·}} is already 1/2.
        let one = one(&arena);
        let half = arena.make_game([Game::ZERO], [one]).unwrap();
        assert_eq!(arena.normal_canonical_form(half).unwrap(), half);

        // {-1 | 1} = 0 by the simplicity rule.
        let minus_one = arena.conjugate(one).unwrap();
        let g = arena.make_game([minus_one], [one]).unwrap();
        assert_eq!(arena.normal_canonical_form(g).unwrap(), Game::ZERO);
    }

    #[test]
    fn budget_is_enforced() {
        let arena = Arena::with_node_budget(4);
        assert!(arena.nim_heap(2).is_ok());
        assert!(arena.nim_heap(3).is_ok());
        assert_eq!(arena.nim_heap(4), Err(GameError::NodeBudgetExceeded { budget: 4 }));
    }

    #[test]
    fn render_brace_notation() {
        let arena = Arena::new();
        let g = arena.make_game([Game::ZERO, Game::STAR], [Game::ZERO]).unwrap();
        assert_eq!(arena.render(g), "{0,*|0}");
        assert_eq!(arena.render(arena.make_game([], [g]).unwrap()), "{|{0,*|0}}");
    }
}
