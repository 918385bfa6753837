//! Verification sweeps: each suite checks a family of claims about Sprigs
//! against the brute-force game-tree oracle, exhaustively over bounded
//! families, or by random sampling with a fixed seed.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{Arena, Convention, Game, Outcome, Player};
use crate::monoid::{to_word, word_outcome};
use crate::numbers::{number_to_game, string_to_value, Color, ColorString};
use crate::sprigs::{literal_sprig_game, sprig_family, NormalSign, Sprig, SprigSum};
use crate::universe::{
    check_ngame_hypothesis, dicot_games, distinguish, enumerate_dicots, refute_geq, verification_contexts,
    verify_equiv_zero, ContextSet, UniverseError,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    StarColon,
    EquivZero,
    Ordering,
    Canonical,
    Outcomes,
    Toggle,
    Monoid,
    Advise,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::StarColon,
        Suite::EquivZero,
        Suite::Ordering,
        Suite::Canonical,
        Suite::Outcomes,
        Suite::Toggle,
        Suite::Monoid,
        Suite::Advise,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::StarColon => "starcolon",
            Suite::EquivZero => "equivzero",
            Suite::Ordering => "ordering",
            Suite::Canonical => "canonical",
            Suite::Outcomes => "outcomes",
            Suite::Toggle => "toggle",
            Suite::Monoid => "monoid",
            Suite::Advise => "advise",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Sizes of the swept families.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Sprigs per position in the outcome family.
    pub family_sprigs: usize,
    /// Longest color string in the outcome family.
    pub family_len: usize,
    /// Sprigs per position for the closed-form star toggle sweep.
    pub toggle_sprigs: usize,
    /// Longest color string for single-sprig claims.
    pub claim_len: usize,
    pub ctx_sprigs: usize,
    pub ctx_len: usize,
    pub ctx_birthday: u32,
    /// Dicots born by this day feed the ordinal-sum outcome identity.
    pub dicot_birthday: u32,
    /// Random games born by day 3 for the ordinal-sum outcome identity.
    pub random_games: usize,
    pub monoid_samples: usize,
    pub monoid_pairs: usize,
    pub advise_sprigs: usize,
    pub advise_len: usize,
    pub seed: u64,
    /// Adds the false claim `∗ ≡ 0` to the equivzero suite.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            family_sprigs: 3,
            family_len: 4,
            toggle_sprigs: 4,
            claim_len: 3,
            ctx_sprigs: 3,
            ctx_len: 3,
            ctx_birthday: 2,
            dicot_birthday: 3,
            random_games: 10_000,
            monoid_samples: 1_000,
            monoid_pairs: 100,
            advise_sprigs: 3,
            advise_len: 3,
            seed: 0x5EED,
            inject_fault: false,
        }
    }
}

/// One claim checked over one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub claim: String,
    pub family: String,
    pub checked: u64,
    pub failed: u64,
    /// The first failing instance, in position notation.
    pub witness: Option<String>,
}

impl Check {
    fn new(claim: impl Into<String>, family: impl Into<String>) -> Check {
        Check { claim: claim.into(), family: family.into(), checked: 0, failed: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn checked(&self) -> u64 {
        self.checks.iter().map(|c| c.checked).sum()
    }
}

pub fn run_suite(arena: &Arena, suite: Suite, config: &VerifyConfig) -> Result<SuiteReport, UniverseError> {
    let checks = match suite {
        Suite::StarColon => star_colon(arena, config)?,
        Suite::EquivZero => equiv_zero(arena, config)?,
        Suite::Ordering => ordering(arena, config)?,
        Suite::Canonical => canonical(arena, config)?,
        Suite::Outcomes => outcomes(arena, config)?,
        Suite::Toggle => toggle(arena, config)?,
        Suite::Monoid => monoid(arena, config)?,
        Suite::Advise => advise(arena, config)?,
    };
    Ok(SuiteReport { suite, checks })
}

fn contexts(arena: &Arena, config: &VerifyConfig) -> Result<ContextSet, UniverseError> {
    verification_contexts(arena, config.ctx_sprigs, config.ctx_len, config.ctx_birthday)
}

/// Every game born by day 2, as `{A | B}` over subsets of the day-1 games.
pub fn games_born_by_day_two(arena: &Arena) -> Result<Vec<Game>, UniverseError> {
    let day_one = [Game::ZERO, arena.make_game([Game::ZERO], [])?, arena.make_game([], [Game::ZERO])?, Game::STAR];
    let subsets: Vec<Vec<Game>> =
        (0u32..16).map(|mask| (0..4).filter(|i| mask >> i & 1 == 1).map(|i| day_one[i]).collect()).collect();
    let mut games = Vec::with_capacity(256);
    for lefts in &subsets {
        for rights in &subsets {
            games.push(arena.make_game(lefts.iter().copied(), rights.iter().copied())?);
        }
    }
    Ok(games)
}

/// `count` games born by day 3: each side is a random set of at most eight
/// games born by day 2.
pub fn random_games_born_by_day_three(arena: &Arena, count: usize, seed: u64) -> Result<Vec<Game>, UniverseError> {
    let pool = games_born_by_day_two(arena)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut games = Vec::with_capacity(count);
    for _ in 0..count {
        let mut side = || {
            let k = rng.gen_range(0..=8);
            sample(&mut rng, pool.len(), k).into_iter().map(|i| pool[i]).collect::<Vec<_>>()
        };
        let (lefts, rights) = (side(), side());
        games.push(arena.make_game(lefts, rights)?);
    }
    Ok(games)
}

fn star_colon(arena: &Arena, config: &VerifyConfig) -> Result<Vec<Check>, UniverseError> {
    let claim = "o⁻(∗:G) = o⁺(G)";
    let identity = |g: Game| -> Result<bool, UniverseError> {
        let colon = arena.ordinal_sum(Game::STAR, g)?;
        Ok(arena.outcome(colon, Convention::Misere) == arena.outcome(g, Convention::Normal))
    };
    let mut checks = Vec::new();

    let mut all = Check::new(claim, "all games born by day 2");
    for g in games_born_by_day_two(arena)? {
        all.record(identity(g)?, || arena.render(g));
    }
    checks.push(all);

    let mut random =
        Check::new(claim, format!("{} random games born by day 3, seed {}", config.random_games, config.seed));
    for g in random_games_born_by_day_three(arena, config.random_games, config.seed)? {
        random.record(identity(g)?, || arena.render(g));
    }
    checks.push(random);

    let mut dicots = Check::new(claim, format!("dicots born by day {}", config.dicot_birthday));
    for g in dicot_games(arena, config.dicot_birthday, config.dicot_birthday.max(3))? {
        dicots.record(identity(g)?, || arena.render(g));
    }
    checks.push(dicots);

    let mut single = Check::new("o⁻(∗:x) is L, P, R by the sign of x", "sprigs of length ≤ 6");
    for s in ColorString::all_up_to(6) {
        let x = string_to_value(&s);
        let expected = if x.is_positive() {
            Outcome::L
        } else if x.is_negative() {
            Outcome::R
        } else {
            Outcome::P
        };
        let literal = literal_sprig_game(arena, &s)?;
        let canonical = Sprig::new(x).game(arena)?;
        let ok = arena.outcome(literal, Convention::Misere) == expected
            && arena.outcome(canonical, Convention::Misere) == expected;
        single.record(ok, || format!("g{s}"));
    }
    checks.push(single);
    Ok(checks)
}

fn equiv_zero(arena: &Arena, config: &VerifyConfig) -> Result<Vec<Check>, UniverseError> {
    let ctx = contexts(arena, config)?;
    let mut checks = Vec::new();

    let mut pairs = Check::new("∗:x + ∗:x̄ ≡ 0", format!("x of length ≤ {}; {}", config.claim_len, ctx.descriptor()));
    for s in ColorString::all_up_to(config.claim_len) {
        let literal = arena.sum(literal_sprig_game(arena, &s)?, literal_sprig_game(arena, &s.swapped())?)?;
        let sprig = Sprig::from_colors(&s);
        let conjugate = Sprig::new(-sprig.value().clone());
        let canonical = arena.sum(sprig.game(arena)?, conjugate.game(arena)?)?;
        for g in [literal, canonical] {
            let witness = distinguish(arena, g, Game::ZERO, &ctx)?;
            pairs.record(witness.is_none(), || {
                format!("g{s} + g{} against {}", s.swapped(), witness.map(|c| c.label).unwrap_or_default())
            });
        }
    }
    checks.push(pairs);

    let dicots = enumerate_dicots(arena, config.ctx_birthday.min(2))?;
    let mut stars = Check::new("∗ + ∗ ≡ 0", dicots.descriptor().to_string());
    let witness = distinguish(arena, arena.sum(Game::STAR, Game::STAR)?, Game::ZERO, &dicots)?;
    stars.record(witness.is_none(), || witness.map(|c| c.label).unwrap_or_default());
    checks.push(stars);

    let mut hypothesis = Check::new("H + H̄ ∈ N⁻ for G and all its followers", "sprigs of length ≤ 4");
    for s in ColorString::all_up_to(4) {
        for g in [literal_sprig_game(arena, &s)?, Sprig::from_colors(&s).game(arena)?] {
            hypothesis.record(check_ngame_hypothesis(arena, g)?, || format!("g{s}"));
        }
    }
    checks.push(hypothesis);

    let mut followers = Check::new(
        "G + Ḡ ≡ 0 whenever H + H̄ ∈ N⁻ for G and its followers",
        format!("dicots born by day 2 meeting the hypothesis; {}", ctx.descriptor()),
    );
    for c in enumerate_dicots(arena, 2)?.members() {
        if check_ngame_hypothesis(arena, c.game)? {
            let g = arena.sum(c.game, arena.conjugate(c.game)?)?;
            followers.record(verify_equiv_zero(arena, g, &ctx)?, || c.label.clone());
        }
    }
    checks.push(followers);

    if config.inject_fault {
        let mut fault = Check::new("∗ ≡ 0 (injected fault)", ctx.descriptor().to_string());
        let witness = distinguish(arena, Game::STAR, Game::ZERO, &ctx)?;
        fault.record(witness.is_none(), || witness.map(|c| c.label).unwrap_or_default());
        checks.push(fault);
    }
    Ok(checks)
}

fn ordering(arena: &Arena, config: &VerifyConfig) -> Result<Vec<Check>, UniverseError> {
    let ctx = contexts(arena, config)?;
    let strings = ColorString::all_up_to(config.claim_len);
    let mut checks = Vec::new();

    let mut strict = Check::new(
        "∗:x ⋗ ∗:y for x > y, with ∗:x̄ + ∗ and ∗:ȳ + ∗ distinguishing",
        format!("x, y of length ≤ {}; {}", config.claim_len, ctx.descriptor()),
    );
    for s in &strings {
        for t in &strings {
            if string_to_value(s) <= string_to_value(t) {
                continue;
            }
            let (gx, gy) = (literal_sprig_game(arena, s)?, literal_sprig_game(arena, t)?);
            let refuted = refute_geq(arena, gx, gy, &ctx)?;
            let separated = distinguish(arena, gx, gy, &ctx)?;
            let mut ok = refuted.is_none() && separated.is_some();
            for bar in [s.swapped(), t.swapped()] {
                let witness = arena.sum(literal_sprig_game(arena, &bar)?, Game::STAR)?;
                ok &= misere_differs(arena, gx, gy, witness)?;
            }
            strict.record(ok, || format!("g{s} vs g{t}"));
        }
    }
    checks.push(strict);

    let mut extension = Check::new(
        "∗:x:y ⋗ ∗:x for y > 0, with ∗:x̄ + ∗ distinguishing",
        format!("x, y of length ≤ 2; {}", ctx.descriptor()),
    );
    for x in ColorString::all_up_to(2) {
        for y in ColorString::all_up_to(2) {
            if !string_to_value(&y).is_positive() {
                continue;
            }
            let mut xy = x.clone();
            for &c in y.colors() {
                xy.push(c);
            }
            let (longer, shorter) = (literal_sprig_game(arena, &xy)?, literal_sprig_game(arena, &x)?);
            let witness = arena.sum(literal_sprig_game(arena, &x.swapped())?, Game::STAR)?;
            let ok =
                refute_geq(arena, longer, shorter, &ctx)?.is_none() && misere_differs(arena, longer, shorter, witness)?;
            extension.record(ok, || format!("g{xy} vs g{x}"));
        }
    }
    checks.push(extension);

    let mut colon = Check::new(
        "G:H ≥ G when G has options for both players and H ≥ 0",
        format!("G dicots born by day 2, H games born by day 2; {}", ctx.descriptor()),
    );
    let bases: Vec<Game> = enumerate_dicots(arena, 2)?.games().filter(|&g| g != Game::ZERO).collect();
    let dependents: Vec<Game> =
        games_born_by_day_two(arena)?.into_iter().filter(|&h| arena.normal_geq(h, Game::ZERO)).collect();
    for &g in &bases {
        for &h in &dependents {
            let gh = arena.ordinal_sum(g, h)?;
            let refuted = refute_geq(arena, gh, g, &ctx)?;
            colon.record(refuted.is_none(), || {
                format!(
                    "G = {}, H = {}, context {}",
                    arena.render(g),
                    arena.render(h),
                    refuted.map(|c| c.label).unwrap_or_default()
                )
            });
        }
    }
    checks.push(colon);
    Ok(checks)
}

fn misere_differs(arena: &Arena, g: Game, h: Game, x: Game) -> Result<bool, UniverseError> {
    let og = arena.outcome(arena.sum(g, x)?, Convention::Misere);
    let oh = arena.outcome(arena.sum(h, x)?, Convention::Misere);
    Ok(og != oh)
}

fn canonical(arena: &Arena, config: &VerifyConfig) -> Result<Vec<Check>, UniverseError> {
    let ctx = contexts(arena, config)?;
    let mut checks = Vec::new();
    let mut misere = Check::new(
        "a sprig is indistinguishable from ∗:x",
        format!("strings of length ≤ {}; {}", config.claim_len, ctx.descriptor()),
    );
    let mut normal = Check::new(
        "the normal-play canonical form of a sprig is ∗:x",
        format!("strings of length ≤ {}", config.claim_len),
    );
    let mut incomparable =
        Check::new("∗ + 0 ∈ P⁻ and ∗ + ∗:x ∈ N⁻ for x ≠ 0", format!("strings of length ≤ {}", config.claim_len));
    for s in ColorString::all_up_to(config.claim_len) {
        let x = string_to_value(&s);
        let literal = literal_sprig_game(arena, &s)?;
        let colon = arena.ordinal_sum(Game::STAR, number_to_game(arena, &x)?)?;
        let witness = distinguish(arena, literal, colon, &ctx)?;
        misere.record(witness.is_none(), || format!("g{s} against {}", witness.map(|c| c.label).unwrap_or_default()));
        normal.record(arena.normal_canonical_form(literal)? == colon, || format!("g{s}"));
        if !x.is_zero() {
            let ok = arena.outcome(Game::STAR, Convention::Misere) == Outcome::P
                && arena.outcome(arena.sum(Game::STAR, literal)?, Convention::Misere) == Outcome::N;
            incomparable.record(ok, || format!("g{s}"));
        }
    }
    checks.extend([misere, normal, incomparable]);
    Ok(checks)
}

fn signed_family(config: &VerifyConfig) -> Vec<SprigSum> {
    sprig_family(config.family_sprigs, config.family_len)
        .into_iter()
        .flat_map(|g| [g.clone(), g.with_star(true)])
        .collect()
}

fn outcomes(arena: &Arena, config: &VerifyConfig) -> Result<Vec<Check>, UniverseError> {
    let family = format!("≤ {} sprigs of length ≤ {}, ± ∗", config.family_sprigs, config.family_len);
    let mut misere = Check::new("closed-form misère outcome matches the oracle", family.clone());
    let mut only_star = Check::new("the only misère P-positions reduce to ∗", family.clone());
    let mut sign = Check::new("closed-form normal sign matches comparisons with 0", family.clone());
    let mut normal = Check::new("closed-form normal outcome matches the oracle", family.clone());
    let mut balanced = Check::new("Δ = ε = 0 without ∗ means X = Y", family);
    for g in signed_family(config) {
        let literal = g.literal_game(arena)?;
        let oracle = arena.outcome(literal, Convention::Misere);
        misere.record(g.misere_outcome() == oracle, || g.to_string());
        only_star.record(oracle != Outcome::P || g.reduce() == SprigSum::star(), || g.to_string());
        let compared =
            NormalSign::from_comparisons(arena.normal_geq(literal, Game::ZERO), arena.normal_geq(Game::ZERO, literal));
        sign.record(g.normal_sign() == compared, || g.to_string());
        normal.record(g.normal_outcome() == arena.outcome(literal, Convention::Normal), || g.to_string());
        if !g.has_star() && g.advantage() == 0 && g.edge().is_zero() {
            balanced.record(g.left_values() == g.right_values(), || g.to_string());
        }
    }
    Ok(vec![misere, only_star, sign, normal, balanced])
}

fn toggle(arena: &Arena, config: &VerifyConfig) -> Result<Vec<Check>, UniverseError> {
    let mut closed = Check::new(
        "o⁺(G) = o⁻(G + ∗) and o⁺(G + ∗) = o⁻(G), closed forms",
        format!("≤ {} sprigs of length ≤ {}, ± ∗", config.toggle_sprigs, config.family_len),
    );
    for g in sprig_family(config.toggle_sprigs, config.family_len) {
        for g in [g.clone(), g.with_star(true)] {
            closed.record(g.star_toggle_check(), || g.to_string());
        }
    }
    let mut oracle = Check::new(
        "o⁺(G) = o⁻(G + ∗) and o⁺(G + ∗) = o⁻(G), oracle",
        format!("≤ {} sprigs of length ≤ {}", config.family_sprigs, config.family_len),
    );
    for g in sprig_family(config.family_sprigs, config.family_len) {
        let plain = g.literal_game(arena)?;
        let starred = arena.sum(plain, Game::STAR)?;
        let ok = arena.outcome(plain, Convention::Normal) == arena.outcome(starred, Convention::Misere)
            && arena.outcome(starred, Convention::Normal) == arena.outcome(plain, Convention::Misere);
        oracle.record(ok, || g.to_string());
    }
    Ok(vec![closed, oracle])
}

/// A random sum of at most `max_sprigs` sprigs of length ≤ `max_len` (bare
/// green edges included) plus up to two stars.
pub fn random_sum(rng: &mut impl Rng, max_sprigs: usize, max_len: usize) -> SprigSum {
    let count = rng.gen_range(0..=max_sprigs);
    let sprigs = (0..count).map(|_| Sprig::from_colors(&random_string(rng, max_len)));
    SprigSum::from_sprigs(sprigs.collect::<Vec<_>>(), rng.gen_range(0..=2))
}

fn random_string(rng: &mut impl Rng, max_len: usize) -> ColorString {
    let len = rng.gen_range(0..=max_len);
    let mut s = ColorString::default();
    for _ in 0..len {
        s.push(if rng.gen_bool(0.5) { Color::Blue } else { Color::Red });
    }
    s
}

fn monoid(arena: &Arena, config: &VerifyConfig) -> Result<Vec<Check>, UniverseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let family = format!("{} random sums of ≤ 4 sprigs of length ≤ 4, seed {}", config.monoid_samples, config.seed);
    let mut reduction = Check::new("to_word(G) = to_word(reduce(G))", family.clone());
    let mut homomorphism = Check::new("to_word(G + H) = to_word(G)·to_word(H)", family.clone());
    let mut lookup = Check::new("word outcome matches the closed form and the oracle", family);
    for _ in 0..config.monoid_samples {
        let g = random_sum(&mut rng, 4, 4);
        let h = random_sum(&mut rng, 4, 4);
        reduction.record(to_word(&g) == to_word(&g.reduce()), || g.to_string());
        homomorphism.record(to_word(&(&g + &h)) == to_word(&g).multiply(&to_word(&h)), || format!("{g} and {h}"));
        let oracle = arena.outcome(g.literal_game(arena)?, Convention::Misere);
        let word = word_outcome(&to_word(&g));
        lookup.record(word == g.misere_outcome() && word == oracle, || g.to_string());
    }

    let ctx = contexts(arena, config)?;
    let mut equal = Check::new(
        "equal words are not distinguished",
        format!("{} random pairs; {}", config.monoid_pairs, ctx.descriptor()),
    );
    for _ in 0..config.monoid_pairs {
        let g = random_sum(&mut rng, 1, 2);
        let z = Sprig::from_colors(&random_string(&mut rng, 2));
        let mut h = g.clone();
        h.push(z.clone());
        h.push(Sprig::new(-z.value().clone()));
        let gg = g.literal_game(arena)?;
        let mut hg = h.literal_game(arena)?;
        if rng.gen_bool(0.5) {
            hg = arena.sum_all([hg, Game::STAR, Game::STAR])?;
        }
        let same = to_word(&g) == to_word(&h);
        let witness = distinguish(arena, gg, hg, &ctx)?;
        equal.record(same && witness.is_none(), || {
            format!("{g} vs {h} against {}", witness.map(|c| c.label).unwrap_or_default())
        });
    }
    Ok(vec![reduction, homomorphism, lookup, equal])
}

fn advise(arena: &Arena, config: &VerifyConfig) -> Result<Vec<Check>, UniverseError> {
    let family = format!("≤ {} sprigs of length ≤ {}, ± ∗, both movers", config.advise_sprigs, config.advise_len);
    let mut optimal = Check::new("the advised move is oracle-optimal", family.clone());
    let mut closed = Check::new("a winning move exists iff the closed form says the mover wins", family);
    for g in sprig_family(config.advise_sprigs, config.advise_len) {
        for g in [g.clone(), g.with_star(true)] {
            let parent = g.literal_game(arena)?;
            for mover in [Player::Left, Player::Right] {
                let children = arena.options(parent, mover);
                let can_win = children.iter().any(|&c| arena.outcome(c, Convention::Misere).wins_moving_second(mover));
                let ok = match g.best_move(mover) {
                    None => children.is_empty(),
                    Some(m) => {
                        let child = m.result.literal_game(arena)?;
                        arena.outcome(child, Convention::Misere).wins_moving_second(mover) == can_win
                    }
                };
                optimal.record(ok, || format!("{g}, {mover:?} to move"));
                let predicted = g.misere_outcome().wins_moving_first(mover);
                let wins = children.is_empty() || can_win;
                closed.record(predicted == wins, || format!("{g}, {mover:?} to move"));
            }
        }
    }
    Ok(vec![optimal, closed])
}
