//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sprig_core::monoid::{to_word, word_outcome};
use sprig_core::numbers::{number_to_game, string_to_value};
use sprig_core::sprigs::{literal_sprig_game, NormalSign, Sprig, SprigSum};
use sprig_core::universe::{
    default_contexts, dicot_games, distinguish, is_dicot, refute_geq, verify_equiv_zero, ContextSet,
};
use sprig_core::{Arena, Color, ColorString, Convention, Game, Outcome, Player};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn(&Arena) -> Verdict);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn nonempty_strings(max_len: usize) -> Vec<ColorString> {
    ColorString::all_up_to(max_len).into_iter().filter(|s| !s.is_empty()).collect()
}

/// A position as the strings of its sprigs plus a star flag.
#[derive(Clone)]
struct Position {
    strings: Vec<ColorString>,
    star: bool,
}

impl Position {
    fn sum(&self) -> SprigSum {
        SprigSum::from_sprigs(self.strings.iter().map(Sprig::from_colors), usize::from(self.star))
    }

    /// The Hackenbush tree, built straight from the color strings.
    fn literal(&self, arena: &Arena) -> Game {
        let mut games: Vec<Game> = self.strings.iter().map(|s| literal_sprig_game(arena, s).unwrap()).collect();
        if self.star {
            games.push(Game::STAR);
        }
        arena.sum_all(games).unwrap()
    }

    fn label(&self) -> String {
        let mut terms: Vec<String> = self.strings.iter().map(|s| format!("g{s}")).collect();
        if self.star {
            terms.push("*".into());
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Multisets of at most `k` sprigs over nonempty strings of length ≤ `len`.
fn family(k: usize, len: usize, star: bool) -> Vec<Position> {
    let strings = nonempty_strings(len);
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(vec![], 0)];
    while let Some((picks, from)) = stack.pop() {
        out.push(Position { strings: picks.iter().map(|&i| strings[i].clone()).collect(), star });
        if picks.len() < k {
            for i in from..strings.len() {
                let mut next = picks.clone();
                next.push(i);
                stack.push((next, i));
            }
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn check_family_size(positions: &[Position]) -> Result<(), String> {
    // 30 nonempty strings of length ≤ 4; multisets of size ≤ 3.
    let expected: usize = (0..=3).map(|k| binomial(30 + k - 1, k)).sum();
    ensure(positions.len() == expected && expected == 5456, || {
        format!("family has {} positions, expected {expected}", positions.len())
    })
}

fn criterion_1(arena: &Arena) -> Verdict {
    let positions = family(3, 4, false);
    check_family_size(&positions)?;
    for p in &positions {
        let oracle = arena.outcome(p.literal(arena), Convention::Misere);
        let closed = p.sum().misere_outcome();
        ensure(closed == oracle, || format!("{}: closed {closed}, oracle {oracle}", p.label()))?;
    }
    Ok(format!("{} positions", positions.len()))
}

fn criterion_2(arena: &Arena) -> Verdict {
    let positions = family(3, 4, true);
    check_family_size(&positions)?;
    let mut p_positions = 0;
    for p in &positions {
        let oracle = arena.outcome(p.literal(arena), Convention::Misere);
        let sum = p.sum();
        let closed = sum.misere_outcome();
        ensure(closed == oracle, || format!("{}: closed {closed}, oracle {oracle}", p.label()))?;
        if oracle == Outcome::P {
            p_positions += 1;
            ensure(sum.reduce() == SprigSum::star(), || format!("{} is P but does not reduce to *", p.label()))?;
        } else {
            ensure(sum.reduce() != SprigSum::star(), || format!("{} reduces to * but is {oracle}", p.label()))?;
        }
    }
    for p in family(3, 4, false) {
        let oracle = arena.outcome(p.literal(arena), Convention::Misere);
        ensure(oracle != Outcome::P, || format!("{} is P without a star", p.label()))?;
    }
    Ok(format!("{} positions, {p_positions} P-positions, all reducing to *", positions.len()))
}

fn criterion_3(arena: &Arena) -> Verdict {
    let mut count = 0;
    for star in [false, true] {
        for p in family(3, 4, star) {
            let g = p.literal(arena);
            let sum = p.sum();
            let compared =
                NormalSign::from_comparisons(arena.normal_geq(g, Game::ZERO), arena.normal_geq(Game::ZERO, g));
            ensure(sum.normal_sign() == compared, || {
                format!("{}: closed {}, comparisons {}", p.label(), sum.normal_sign(), compared)
            })?;
            let oracle = arena.outcome(g, Convention::Normal);
            ensure(sum.normal_outcome() == oracle, || {
                format!("{}: closed {}, oracle {oracle}", p.label(), sum.normal_outcome())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} positions"))
}

fn criterion_4(arena: &Arena) -> Verdict {
    let mut count = 0;
    for star in [false, true] {
        for p in family(3, 4, star) {
            let sum = p.sum();
            let toggled = sum.toggled_star();
            ensure(sum.normal_outcome() == toggled.misere_outcome(), || format!("{}: o+(G) != o-(G+*)", p.label()))?;
            ensure(toggled.normal_outcome() == sum.misere_outcome(), || format!("{}: o+(G+*) != o-(G)", p.label()))?;
            let g = p.literal(arena);
            let g_star = arena.sum(g, Game::STAR).unwrap();
            ensure(arena.outcome(g, Convention::Normal) == arena.outcome(g_star, Convention::Misere), || {
                format!("{}: oracle o+(G) != o-(G+*)", p.label())
            })?;
            ensure(arena.outcome(g_star, Convention::Normal) == arena.outcome(g, Convention::Misere), || {
                format!("{}: oracle o+(G+*) != o-(G)", p.label())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} positions, closed forms and oracle"))
}

/// The 256 games `{A | B}` with `A`, `B` subsets of `{0, 1, -1, *}`.
fn games_by_day_two(arena: &Arena) -> Vec<Game> {
    let one = arena.make_game([Game::ZERO], []).unwrap();
    let minus_one = arena.make_game([], [Game::ZERO]).unwrap();
    let day_one = [Game::ZERO, one, minus_one, Game::STAR];
    let subset = |mask: usize| (0..4).filter(move |i| mask >> i & 1 == 1).map(move |i| day_one[i]);
    let mut games = Vec::new();
    for l in 0..16 {
        for r in 0..16 {
            games.push(arena.make_game(subset(l), subset(r)).unwrap());
        }
    }
    games
}

fn criterion_5(_: &Arena) -> Verdict {
    // A dedicated arena: the day-3 dicots alone are about a million trees.
    let arena = Arena::new();
    let identity = |g: Game| {
        let colon = arena.ordinal_sum(Game::STAR, g).unwrap();
        arena.outcome(colon, Convention::Misere) == arena.outcome(g, Convention::Normal)
    };
    let day_two = games_by_day_two(&arena);
    let mut distinct = day_two.clone();
    distinct.sort();
    distinct.dedup();
    ensure(distinct.len() == 256, || format!("{} distinct games born by day 2", distinct.len()))?;
    for &g in &day_two {
        ensure(identity(g), || format!("fails for {}", arena.render(g)))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(20_120_301);
    let samples = 10_000;
    for _ in 0..samples {
        let mut side = || -> Vec<Game> { day_two.iter().copied().filter(|_| rng.gen_bool(0.05)).collect() };
        let (l, r) = (side(), side());
        let g = arena.make_game(l, r).unwrap();
        ensure(arena.birthday(g) <= 3, || "sample born after day 3".into())?;
        ensure(identity(g), || format!("fails for {}", arena.render(g)))?;
    }

    let dicots = dicot_games(&arena, 3, 3).map_err(|e| e.to_string())?;
    ensure(dicots.len() == 1_046_530, || format!("{} dicots born by day 3", dicots.len()))?;
    for &g in &dicots {
        ensure(identity(g), || format!("fails for {}", arena.render(g)))?;
    }
    Ok(format!("256 games born by day 2, {samples} random games born by day 3, {} dicots born by day 3", dicots.len()))
}

fn contexts(arena: &Arena) -> Result<ContextSet, String> {
    let ctx = default_contexts(arena).map_err(|e| e.to_string())?;
    ensure(ctx.is_dicot_universe() && ctx.games().all(|g| is_dicot(arena, g)), || {
        "a default context is not a dicot".into()
    })?;
    Ok(ctx)
}

fn sprig(arena: &Arena, s: &ColorString) -> Game {
    literal_sprig_game(arena, s).unwrap()
}

fn criterion_6(arena: &Arena) -> Verdict {
    let ctx = contexts(arena)?;
    let strings = ColorString::all_up_to(3);
    for s in &strings {
        let literal = arena.sum(sprig(arena, s), sprig(arena, &s.swapped())).unwrap();
        let x = string_to_value(s);
        let canonical =
            arena.sum(Sprig::new(x.clone()).game(arena).unwrap(), Sprig::new(-x).game(arena).unwrap()).unwrap();
        for g in [literal, canonical] {
            let ok = verify_equiv_zero(arena, g, &ctx).unwrap();
            ensure(ok, || format!("g{s} + g{} is distinguished from 0", s.swapped()))?;
        }
    }
    Ok(format!("{} values of x, {} contexts, no witness", strings.len(), ctx.len()))
}

fn criterion_7(arena: &Arena) -> Verdict {
    let ctx = contexts(arena)?;
    let strings = ColorString::all_up_to(3);
    let outcome_with = |g: Game, x: Game| arena.outcome(arena.sum(g, x).unwrap(), Convention::Misere);
    let mut pairs = 0;
    let mut extensions = 0;
    for s in &strings {
        for t in &strings {
            if string_to_value(s) <= string_to_value(t) {
                continue;
            }
            pairs += 1;
            let (gx, gy) = (sprig(arena, s), sprig(arena, t));
            let refuted = refute_geq(arena, gx, gy, &ctx).unwrap();
            ensure(refuted.is_none(), || format!("g{s} >= g{t} refuted by {}", refuted.clone().unwrap().label))?;
            ensure(distinguish(arena, gx, gy, &ctx).unwrap().is_some(), || format!("g{s}, g{t} not distinguished"))?;
            for bar in [s.swapped(), t.swapped()] {
                let w = arena.sum(sprig(arena, &bar), Game::STAR).unwrap();
                ensure(outcome_with(gx, w) != outcome_with(gy, w), || format!("g{bar} + * fails on g{s}, g{t}"))?;
            }
            // s = t:y with y > 0: the witness built from the shorter string.
            let extends =
                s.len() > t.len() && s.colors()[..t.len()] == *t.colors() && s.colors()[t.len()] == Color::Blue;
            if extends {
                extensions += 1;
                let w = arena.sum(sprig(arena, &t.swapped()), Game::STAR).unwrap();
                ensure(outcome_with(gx, w) == Outcome::L && outcome_with(gy, w) == Outcome::P, || {
                    format!("g{} + * does not separate g{s} from g{t} as L vs P", t.swapped())
                })?;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs ({extensions} extensions by a positive string), {} contexts", ctx.len()))
}

fn criterion_8(arena: &Arena) -> Verdict {
    let ctx = contexts(arena)?;
    let strings = ColorString::all_up_to(3);
    for s in &strings {
        let literal = sprig(arena, s);
        let x = string_to_value(s);
        let colon = arena.ordinal_sum(Game::STAR, number_to_game(arena, &x).unwrap()).unwrap();
        ensure(Sprig::from_colors(s).game(arena).unwrap() == colon, || format!("sprig game of g{s}"))?;
        let witness = distinguish(arena, literal, colon, &ctx).unwrap();
        ensure(witness.is_none(), || format!("g{s} distinguished from *:{x} by {}", witness.clone().unwrap().label))?;
        let canonical = arena.normal_canonical_form(literal).unwrap();
        ensure(canonical == colon, || {
            format!("normal canonical form of g{s} is {}, not {}", arena.render(canonical), arena.render(colon))
        })?;
    }
    Ok(format!("{} strings, {} contexts", strings.len(), ctx.len()))
}

fn random_position(rng: &mut ChaCha8Rng, max_sprigs: usize, max_len: usize) -> Position {
    let count = rng.gen_range(0..=max_sprigs);
    let strings = (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            ColorString::new((0..len).map(|_| if rng.gen_bool(0.5) { Color::Blue } else { Color::Red }).collect())
        })
        .collect();
    Position { strings, star: rng.gen_bool(0.5) }
}

fn criterion_9(arena: &Arena) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let samples = 1_000;
    for _ in 0..samples {
        let (p, q) = (random_position(&mut rng, 4, 4), random_position(&mut rng, 4, 4));
        let (g, h) = (p.sum(), q.sum());
        ensure(to_word(&g) == to_word(&g.reduce()), || format!("{}: word changes under reduction", p.label()))?;
        ensure(to_word(&(&g + &h)) == to_word(&g).multiply(&to_word(&h)), || {
            format!("{} and {}: not a homomorphism", p.label(), q.label())
        })?;
        let oracle = arena.outcome(p.literal(arena), Convention::Misere);
        let word = word_outcome(&to_word(&g));
        ensure(word == g.misere_outcome() && word == oracle, || {
            format!("{}: word {word}, closed {}, oracle {oracle}", p.label(), g.misere_outcome())
        })?;
    }

    let ctx = contexts(arena)?;
    let pairs = 100;
    for _ in 0..pairs {
        let p = random_position(&mut rng, 1, 2);
        let z = random_position(&mut rng, 1, 2).strings.pop().unwrap_or_default();
        let mut q = p.clone();
        q.strings.push(z.clone());
        q.strings.push(z.swapped());
        let (gp, mut gq) = (p.literal(arena), q.literal(arena));
        if rng.gen_bool(0.5) {
            gq = arena.sum_all([gq, Game::STAR, Game::STAR]).unwrap();
        }
        ensure(to_word(&p.sum()) == to_word(&q.sum()), || format!("{} and {}: words differ", p.label(), q.label()))?;
        let witness = distinguish(arena, gp, gq, &ctx).unwrap();
        ensure(witness.is_none(), || {
            format!("{} and {} distinguished by {}", p.label(), q.label(), witness.clone().unwrap().label)
        })?;
        let flipped = arena.sum(gp, Game::STAR).unwrap();
        ensure(to_word(&p.sum()) != to_word(&p.sum().toggled_star()), || "star parity ignored".into())?;
        ensure(distinguish(arena, gp, flipped, &ctx).unwrap().is_some(), || {
            format!("{} and {} + * not distinguished", p.label(), p.label())
        })?;
    }
    Ok(format!("{samples} random sums, {pairs} equal-word pairs over {} contexts", ctx.len()))
}

fn criterion_10(arena: &Arena) -> Verdict {
    let mut count = 0;
    for star in [false, true] {
        for p in family(3, 3, star) {
            let parent = p.literal(arena);
            let sum = p.sum();
            for mover in [Player::Left, Player::Right] {
                count += 1;
                let children = arena.options(parent, mover);
                let winning: Vec<Game> = children
                    .iter()
                    .copied()
                    .filter(|&c| arena.outcome(c, Convention::Misere).wins_moving_second(mover))
                    .collect();
                let optimal = if winning.is_empty() { children.clone() } else { winning };
                let label = || format!("{}, {mover:?} to move", p.label());
                match sum.best_move(mover) {
                    None => ensure(children.is_empty(), || format!("{}: no move advised", label()))?,
                    Some(m) => {
                        let child = m.result.literal_game(arena).unwrap();
                        ensure(children.contains(&child), || format!("{}: {} is not a legal move", label(), m.kind))?;
                        ensure(optimal.contains(&child), || format!("{}: {} is not optimal", label(), m.kind))?;
                    }
                }
            }
        }
    }
    Ok(format!("{count} position/mover pairs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("misère outcomes without star match the oracle", criterion_1),
        ("misère outcomes with star match the oracle; only * is P", criterion_2),
        ("normal-play sign and outcome match the oracle", criterion_3),
        ("star toggle swaps conventions", criterion_4),
        ("o⁻(∗:G) = o⁺(G)", criterion_5),
        ("∗:x + ∗:x̄ ≡ 0 over the default contexts", criterion_6),
        ("∗:x strictly above ∗:y for x > y", criterion_7),
        ("sprigs are ∗:x in both conventions", criterion_8),
        ("monoid words are coherent", criterion_9),
        ("advised moves are optimal", criterion_10),
    ];
    let arena = Arena::new();
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run(&arena);
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {reason} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
