use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sprig_core::game::DEFAULT_NODE_BUDGET;
use sprig_core::monoid::to_word;
use sprig_core::notation::{parse_position, ParseError, Position, Term};
use sprig_core::numbers::string_to_value;
use sprig_core::sprigs::{MoveKind, SprigSum};
use sprig_core::universe::{distinguish, refute_geq, verification_contexts, Context, UniverseError};
use sprig_core::verify::{run_suite, Suite, SuiteReport, VerifyConfig};
use sprig_core::{Arena, Convention, Dyadic, Game, GameError, Player};

/// Exact solver for Hackenbush Sprigs under misère and normal play.
#[derive(Parser, Debug)]
#[command(name = "sprigs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: GlobalOptions,
}

#[derive(Args, Debug)]
struct GlobalOptions {
    /// Play convention.
    #[arg(long, global = true, value_enum, default_value_t = ConventionArg::Misere)]
    convention: ConventionArg,
    /// How outcomes are computed; with `both`, a disagreement is an error.
    #[arg(long, global = true, value_enum, default_value_t = Method::Both)]
    method: Method,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Most interned game trees the oracle may create.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    max_nodes: usize,
    /// Sprigs per context sum.
    #[arg(long, global = true, default_value_t = 3)]
    ctx_sprigs: usize,
    /// Longest color string in a context sprig.
    #[arg(long, global = true, default_value_t = 3)]
    ctx_len: usize,
    /// Dicot contexts born by this day are included.
    #[arg(long, global = true, default_value_t = 2)]
    ctx_birthday: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Outcome of a position.
    Outcome { position: Vec<String> },
    /// Reduced form, advantage, edge and monoid word of a sprig sum.
    Reduce { position: Vec<String> },
    /// A misère move for the given player.
    Advise {
        #[arg(long, value_enum, default_value_t = MoverArg::Left)]
        mover: MoverArg,
        position: Vec<String>,
    },
    /// Run a verification suite.
    Verify {
        /// starcolon, equivzero, ordering, canonical, outcomes, toggle, monoid, advise or all.
        suite: String,
        /// Add the false claim `* ≡ 0` to the equivzero suite.
        #[arg(long)]
        inject_fault: bool,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
        /// Random games born by day 3 for the starcolon suite.
        #[arg(long, default_value_t = VerifyConfig::default().random_games)]
        random_games: usize,
    },
    /// Search the contexts for one telling two positions apart: `G -- H`.
    Distinguish {
        #[arg(required = true)]
        first: Vec<String>,
        #[arg(last = true, required = true)]
        second: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    Misere,
    Normal,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::Misere => Convention::Misere,
            ConventionArg::Normal => Convention::Normal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Oracle,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MoverArg {
    Left,
    Right,
}

impl From<MoverArg> for Player {
    fn from(m: MoverArg) -> Player {
        match m {
            MoverArg::Left => Player::Left,
            MoverArg::Right => Player::Right,
        }
    }
}

#[derive(Debug)]
enum Failure {
    /// A check failed or the two evaluation methods disagree.
    Verification(String),
    Usage(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Failure {
        Failure::Budget(e.to_string())
    }
}

impl From<UniverseError> for Failure {
    fn from(e: UniverseError) -> Failure {
        Failure::Budget(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let opts = &cli.options;
    let arena = Arena::with_node_budget(opts.max_nodes);
    match &cli.command {
        Command::Outcome { position } => outcome(&arena, opts, &parse(position)?),
        Command::Reduce { position } => reduce(opts, &parse(position)?),
        Command::Advise { mover, position } => advise(opts, &parse(position)?, (*mover).into()),
        Command::Verify { suite, inject_fault, seed, random_games } => {
            let config = VerifyConfig {
                ctx_sprigs: opts.ctx_sprigs,
                ctx_len: opts.ctx_len,
                ctx_birthday: opts.ctx_birthday,
                seed: *seed,
                random_games: *random_games,
                inject_fault: *inject_fault,
                ..VerifyConfig::default()
            };
            verify(&arena, opts, suite, &config)
        }
        Command::Distinguish { first, second } => compare(&arena, opts, &parse(first)?, &parse(second)?),
    }
}

fn parse(words: &[String]) -> Result<Position, Failure> {
    let text = words.join(" ");
    if text.trim().is_empty() {
        return Err(Failure::Usage("missing position".into()));
    }
    parse_position(&text).map_err(|e| Failure::Usage(describe_parse_error(&text, &e)))
}

fn describe_parse_error(text: &str, e: &ParseError) -> String {
    let column = text[..e.offset().min(text.len())].chars().count();
    format!("{e}\n  {text}\n  {}^", " ".repeat(column))
}

fn emit(opts: &GlobalOptions, value: &Value, text: &[(&str, String)]) {
    match opts.format {
        Format::Json => println!("{value}"),
        Format::Text => {
            for (key, line) in text {
                println!("{key}: {line}");
            }
        }
    }
}

fn sprig_sum(position: &Position) -> Result<&SprigSum, Failure> {
    position.sprig_sum().map_err(|e| Failure::Usage(e.to_string()))
}

fn outcome(arena: &Arena, opts: &GlobalOptions, position: &Position) -> Result<(), Failure> {
    let convention: Convention = opts.convention.into();
    let sum = position.sprig_sum().ok();
    let (method, result) = match (opts.method, sum) {
        (Method::Closed, None) => return Err(sprig_sum(position).unwrap_err()),
        (Method::Closed, Some(s)) => (Method::Closed, s.outcome(convention)),
        (Method::Oracle, _) | (Method::Both, None) => {
            (Method::Oracle, arena.outcome(position.game(arena)?, convention))
        }
        (Method::Both, Some(s)) => {
            let closed = s.outcome(convention);
            let oracle = arena.outcome(position.game(arena)?, convention);
            if closed != oracle {
                return Err(Failure::Verification(format!(
                    "closed form gives {closed} but the oracle gives {oracle} for {position}"
                )));
            }
            (Method::Both, closed)
        }
    };
    let stats = sum.map(|s| (s.advantage(), s.edge().to_string(), to_word(s).to_string()));
    let value = json!({
        "position": position.to_string(),
        "convention": convention.to_string(),
        "method": method.name(),
        "outcome": result.symbol(),
        "delta": stats.as_ref().map(|s| s.0),
        "epsilon": stats.as_ref().map(|s| s.1.clone()),
        "word": stats.as_ref().map(|s| s.2.clone()),
    });
    let mut text = vec![
        ("position", position.to_string()),
        ("convention", convention.to_string()),
        ("method", method.name().to_string()),
        ("outcome", result.symbol().to_string()),
    ];
    if let Some((delta, epsilon, word)) = stats {
        text.extend([("delta", delta.to_string()), ("epsilon", epsilon), ("word", word)]);
    }
    emit(opts, &value, &text);
    Ok(())
}

fn multiset(values: &[Dyadic]) -> String {
    let items: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn reduce(opts: &GlobalOptions, position: &Position) -> Result<(), Failure> {
    let sum = sprig_sum(position)?;
    let convention: Convention = opts.convention.into();
    let reduced = sum.reduce();
    let (left, right) = (reduced.left_values(), reduced.right_values());
    let word = to_word(sum).to_string();
    let value = json!({
        "position": position.to_string(),
        "convention": convention.to_string(),
        "method": Method::Closed.name(),
        "outcome": sum.outcome(convention).symbol(),
        "delta": sum.advantage(),
        "epsilon": sum.edge().to_string(),
        "word": word,
        "reduced": reduced.to_string(),
        "left": left.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "right": right.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "star": u8::from(reduced.has_star()),
    });
    let text = [
        ("position", position.to_string()),
        ("reduced", reduced.to_string()),
        ("X'", multiset(&left)),
        ("Y'", multiset(&right)),
        ("star", u8::from(reduced.has_star()).to_string()),
        ("delta", sum.advantage().to_string()),
        ("epsilon", sum.edge().to_string()),
        ("word", word),
    ];
    emit(opts, &value, &text);
    Ok(())
}

/// 1-based index of the first term of `position` the move acts on.
fn term_index(position: &Position, kind: &MoveKind) -> Option<usize> {
    let matches = |term: &Term| match (kind, term) {
        (MoveKind::StarToZero, Term::Star | Term::NimHeap(1)) => true,
        (MoveKind::Clear(v) | MoveKind::Trim { from: v, .. }, Term::Colors(c)) => string_to_value(c) == *v,
        (MoveKind::Clear(v) | MoveKind::Trim { from: v, .. }, Term::Sprig(x)) => x == v,
        _ => false,
    };
    position.expr().terms().iter().position(matches).map(|i| i + 1)
}

fn advise(opts: &GlobalOptions, position: &Position, mover: Player) -> Result<(), Failure> {
    if matches!(opts.convention, ConventionArg::Normal) {
        return Err(Failure::Usage("advise plays misère only".into()));
    }
    let sum = sprig_sum(position)?;
    let outcome = sum.misere_outcome();
    let wins = outcome.wins_moving_first(mover);
    let best = sum.best_move(mover);
    let mover_name = match mover {
        Player::Left => "left",
        Player::Right => "right",
    };
    let term = best.as_ref().and_then(|m| term_index(position, &m.kind));
    let value = json!({
        "position": position.to_string(),
        "convention": Convention::Misere.to_string(),
        "method": Method::Closed.name(),
        "outcome": outcome.symbol(),
        "delta": sum.advantage(),
        "epsilon": sum.edge().to_string(),
        "word": to_word(sum).to_string(),
        "mover": mover_name,
        "mover_wins": wins,
        "move": best.as_ref().map(|m| m.kind.to_string()),
        "term": term,
        "result": best.as_ref().map(|m| m.result.to_string()),
    });
    let mut text = vec![
        ("position", position.to_string()),
        ("outcome", outcome.symbol().to_string()),
        ("mover", mover_name.to_string()),
        ("mover wins", wins.to_string()),
    ];
    match &best {
        None => text.push(("move", "none (no moves available)".to_string())),
        Some(m) => {
            let label = if wins { "move" } else { "best try" };
            let on = term.map(|t| format!(" on term {t}")).unwrap_or_default();
            text.push((label, format!("{}{on}", m.kind)));
            text.push(("result", m.result.to_string()));
        }
    }
    emit(opts, &value, &text);
    Ok(())
}

fn verify(arena: &Arena, opts: &GlobalOptions, suite: &str, config: &VerifyConfig) -> Result<(), Failure> {
    let suites: Vec<Suite> =
        if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse().map_err(Failure::Usage)?] };
    let reports = suites.into_iter().map(|s| run_suite(arena, s, config)).collect::<Result<Vec<_>, _>>()?;
    match opts.format {
        Format::Json => {
            let value: Vec<Value> = reports.iter().map(report_json).collect();
            println!("{}", Value::Array(value));
        }
        Format::Text => {
            for report in &reports {
                for check in &report.checks {
                    let status = if check.passed() { "PASS" } else { "FAIL" };
                    println!(
                        "{status} [{}] {} ({}): {} checked, {} failed",
                        report.suite, check.claim, check.family, check.checked, check.failed
                    );
                    if let Some(w) = &check.witness {
                        println!("     witness: {w}");
                    }
                }
            }
        }
    }
    if reports.iter().all(SuiteReport::passed) {
        Ok(())
    } else {
        Err(Failure::Verification("verification failed".into()))
    }
}

fn report_json(report: &SuiteReport) -> Value {
    json!({
        "suite": report.suite.name(),
        "passed": report.passed(),
        "checks": report.checks.iter().map(|c| json!({
            "claim": c.claim,
            "family": c.family,
            "checked": c.checked,
            "failed": c.failed,
            "witness": c.witness,
        })).collect::<Vec<_>>(),
    })
}

fn compare(arena: &Arena, opts: &GlobalOptions, g: &Position, h: &Position) -> Result<(), Failure> {
    let ctx = verification_contexts(arena, opts.ctx_sprigs, opts.ctx_len, opts.ctx_birthday)?;
    let (gg, hg) = (g.game(arena)?, h.game(arena)?);
    let witness = distinguish(arena, gg, hg, &ctx)?;
    let g_not_geq = refute_geq(arena, gg, hg, &ctx)?;
    let h_not_geq = refute_geq(arena, hg, gg, &ctx)?;
    let context = witness.as_ref().map_or(Game::ZERO, |c| c.game);
    let misere = |x| -> Result<String, Failure> {
        Ok(arena.outcome(arena.sum(x, context)?, Convention::Misere).symbol().to_string())
    };
    let (og, oh) = (misere(gg)?, misere(hg)?);
    let value = json!({
        "first": g.to_string(),
        "second": h.to_string(),
        "contexts": ctx.len(),
        "descriptor": ctx.descriptor(),
        "witness": witness.as_ref().map(|c| c.label.clone()),
        "first_outcome": witness.as_ref().map(|_| og.clone()),
        "second_outcome": witness.as_ref().map(|_| oh.clone()),
        "first_geq_second": g_not_geq.is_none(),
        "second_geq_first": h_not_geq.is_none(),
    });
    let verdict = match &witness {
        Some(c) => format!("distinguished by {} (G + X is {og}, H + X is {oh})", c.label),
        None => format!("indistinguishable over {} contexts", ctx.len()),
    };
    let holds = |refuted: &Option<Context>| match refuted {
        None => "holds over the contexts".to_string(),
        Some(c) => format!("refuted by {}", c.label),
    };
    let text = [
        ("G", g.to_string()),
        ("H", h.to_string()),
        ("contexts", ctx.descriptor().to_string()),
        ("verdict", verdict),
        ("G >= H", holds(&g_not_geq)),
        ("H >= G", holds(&h_not_geq)),
    ];
    emit(opts, &value, &text);
    Ok(())
}
