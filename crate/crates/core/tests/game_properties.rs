use proptest::prelude::*;
use sprig_core::{Arena, Convention, Game, Outcome};

/// A game tree as nested option lists, possibly with repeats.
#[derive(Clone, Debug)]
struct Tree(Vec<Tree>, Vec<Tree>);

fn tree(depth: u32) -> impl Strategy<Value = Tree> {
    let leaf = Just(Tree(vec![], vec![]));
    leaf.prop_recursive(depth, 48, 3, |inner| {
        (prop::collection::vec(inner.clone(), 0..3), prop::collection::vec(inner, 0..3)).prop_map(|(l, r)| Tree(l, r))
    })
}

fn build(arena: &Arena, t: &Tree, reversed: bool) -> Game {
    let side = |opts: &[Tree]| {
        let mut games: Vec<Game> = opts.iter().map(|o| build(arena, o, reversed)).collect();
        if reversed {
            games.reverse();
            games.extend(games.clone());
        }
        games
    };
    arena.make_game(side(&t.0), side(&t.1)).unwrap()
}

fn both() -> [Convention; 2] {
    [Convention::Normal, Convention::Misere]
}

proptest! {
    #[test]
    fn interning_ignores_order_and_repeats(t in tree(4)) {
        let arena = Arena::new();
        prop_assert_eq!(build(&arena, &t, false), build(&arena, &t, true));
    }

    #[test]
    fn conjugate_swaps_outcomes(t in tree(4)) {
        let arena = Arena::new();
        let g = build(&arena, &t, false);
        let bar = arena.conjugate(g).unwrap();
        prop_assert_eq!(arena.conjugate(bar).unwrap(), g);
        for c in both() {
            prop_assert_eq!(arena.outcome(bar, c), arena.outcome(g, c).conjugate());
        }
    }

    #[test]
    fn canonical_form_is_equal_and_idempotent(t in tree(4)) {
        let arena = Arena::new();
        let g = build(&arena, &t, false);
        let k = arena.normal_canonical_form(g).unwrap();
        prop_assert!(arena.normal_eq(g, k));
        prop_assert_eq!(arena.normal_canonical_form(k).unwrap(), k);
        prop_assert!(arena.birthday(k) <= arena.birthday(g));
    }

    #[test]
    fn sums_associate_and_commute_on_outcomes(a in tree(3), b in tree(3), c in tree(2)) {
        let arena = Arena::new();
        let (g, h, k) = (build(&arena, &a, false), build(&arena, &b, false), build(&arena, &c, false));
        let left = arena.sum(arena.sum(g, h).unwrap(), k).unwrap();
        let right = arena.sum(g, arena.sum(h, k).unwrap()).unwrap();
        for conv in both() {
            prop_assert_eq!(arena.outcome(left, conv), arena.outcome(right, conv));
        }
        prop_assert_eq!(arena.sum(g, h).unwrap(), arena.sum(h, g).unwrap());
    }

    #[test]
    fn comparison_matches_the_difference_game(a in tree(3), b in tree(3)) {
        let arena = Arena::new();
        let (g, h) = (build(&arena, &a, false), build(&arena, &b, false));
        let difference = arena.sum(g, arena.conjugate(h).unwrap()).unwrap();
        let right_first_loses = !arena.outcome(difference, Convention::Normal).wins_moving_first(sprig_core::Player::Right);
        prop_assert_eq!(arena.normal_geq(g, h), right_first_loses);
    }

    #[test]
    fn zero_is_the_sum_identity(t in tree(4)) {
        let arena = Arena::new();
        let g = build(&arena, &t, false);
        prop_assert_eq!(arena.sum(g, Game::ZERO).unwrap(), g);
        prop_assert_eq!(arena.ordinal_sum(g, Game::ZERO).unwrap(), g);
    }

    #[test]
    fn colon_star_reads_normal_play(t in tree(4)) {
        let arena = Arena::new();
        let g = build(&arena, &t, false);
        let colon = arena.ordinal_sum(Game::STAR, g).unwrap();
        prop_assert_eq!(arena.outcome(colon, Convention::Misere), arena.outcome(g, Convention::Normal));
    }
}

#[test]
fn canonical_forms_of_two_hundred_random_games() {
    use proptest::strategy::ValueTree;
    let arena = Arena::new();
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strategy = tree(4);
    for _ in 0..200 {
        let g = build(&arena, &strategy.new_tree(&mut runner).unwrap().current(), false);
        let k = arena.normal_canonical_form(g).unwrap();
        assert_eq!(arena.normal_canonical_form(k).unwrap(), k);
    }
}

#[test]
fn every_game_born_by_day_two() {
    let arena = Arena::new();
    for g in sprig_core::verify::games_born_by_day_two(&arena).unwrap() {
        let bar = arena.conjugate(g).unwrap();
        for c in both() {
            assert_eq!(arena.outcome(bar, c), arena.outcome(g, c).conjugate());
        }
        let k = arena.normal_canonical_form(g).unwrap();
        assert!(arena.normal_eq(g, k));
        assert_eq!(arena.normal_canonical_form(k).unwrap(), k);
    }
}

#[test]
fn nim_heaps_are_iterated_colon_stars() {
    let arena = Arena::new();
    let mut heap = Game::ZERO;
    for n in 0..6 {
        assert_eq!(arena.nim_heap(n).unwrap(), heap);
        heap = arena.ordinal_sum(Game::STAR, heap).unwrap();
    }
    assert_eq!(arena.outcome(arena.nim_heap(2).unwrap(), Convention::Misere), Outcome::N);
}

#[test]
fn outcome_order() {
    use Outcome::*;
    assert!(P < L && N < L && R < P && R < N);
    assert!(P.partial_cmp(&N).is_none());
}
