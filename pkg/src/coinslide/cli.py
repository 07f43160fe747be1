"""Command-line interface.

Positions are written "<left strap>|<right strap>" where a strap is
"x,y" (two coins), "r" (one coin), or "-" (empty); the right strap's
squares are numbered from its own edge.  Moves use the same grammar the
interactive loop accepts:

    <left|right> slide <left|right|lone> <to>
    <left|right> push <depth>
    <left|right> remove            (variant B only)

Exit codes: 0 success, 1 I/O or bind failure, 2 usage, 3 verification
or consistency failure.
"""

from __future__ import annotations

import json
import random
import sys

import click

from . import verify as verify_mod
from .core import (
    GameError,
    ParseError,
    Push,
    RemoveLeft,
    SlideLeft,
    SlideLone,
    SlideRight,
    StrapMove,
    Two,
    Variant,
    apply as apply_move,
)
from .grundy import classify, grundy_bruteforce
from .sumgame import (
    Outcome,
    Side,
    SumMove,
    SumState,
    engine_move,
    engine_selfplay,
    format_sum,
    outcome,
    parse_sum,
    random_sum_state,
    successors,
    sum_grundy,
    winning_moves,
)

# above this the full oracle table is too large to build casually
ORACLE_LIMIT = 1200


@click.group()
@click.option(
    "--variant",
    type=click.Choice(["A", "B"]),
    default="A",
    envvar="COINSLIDE_VARIANT",
    show_default=True,
    help="Edge-removal rule variant (also via COINSLIDE_VARIANT).",
)
@click.pass_context
def main(ctx, variant):
    """Two-coin sliding strip game: values, strategy, verification, play."""
    ctx.obj = Variant(variant)


@main.command()
@click.argument("x", type=click.IntRange(min=0))
@click.argument("y", type=click.IntRange(min=0))
@click.pass_obj
def grundy(variant, x, y):
    """Grundy value of the two-coin strap (X, Y) with oracle cross-check."""
    if x >= y:
        raise click.UsageError("coins must sit on distinct squares given in ascending order")
    cls = classify(x, y)
    families = ",".join(str(f) for f in cls.families)
    if y > ORACLE_LIMIT:
        click.echo(f"G={cls.n} families={families} oracle=skipped")
        return
    oracle = grundy_bruteforce(Two(x, y), variant)
    if oracle != cls.n:
        click.echo(f"G={cls.n} families={families} oracle={oracle} MISMATCH")
        sys.exit(3)
    click.echo(f"G={cls.n} families={families} oracle={oracle} OK")


@main.command()
@click.option("--max", "bound", type=click.IntRange(min=1), default=40, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write to a file instead of stdout.")
def table(bound, fmt, output):
    """Emit the closed-form value table for all x < y <= MAX."""
    rows = []
    for x in range(bound):
        for y in range(x + 1, bound + 1):
            cls = classify(x, y)
            rows.append((x, y, cls.n, cls.families))
    if fmt == "csv":
        lines = ["x,y,grundy,families"]
        lines.extend(
            f"{x},{y},{n},{'+'.join(str(f) for f in fams)}" for x, y, n, fams in rows
        )
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(
            [
                {"x": x, "y": y, "grundy": n, "families": list(fams)}
                for x, y, n, fams in rows
            ],
            indent=2,
        ) + "\n"
    if output is None:
        click.echo(text, nl=False)
        return
    try:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"cannot write {output}: {exc}", err=True)
        sys.exit(1)


@main.command()
@click.option("--max", "value_bound", type=click.IntRange(min=0),
              default=verify_mod.DEFAULT_VALUE_BOUND, show_default=True,
              help="Bound for the value checks (theorem-2, n-positions).")
@click.option("--mex-max", type=click.IntRange(min=0),
              default=verify_mod.DEFAULT_MEX_BOUND, show_default=True)
@click.option("--m-max", type=click.IntRange(min=0),
              default=verify_mod.DEFAULT_M_MAX, show_default=True)
@click.option("--lemma-max-y", type=click.IntRange(min=0),
              default=verify_mod.DEFAULT_LEMMA_MAX_Y, show_default=True)
@click.option("--lemma", type=click.Choice(["1", "2"]), default=None,
              help="Run only the named lemma's checks.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
@click.option("--timings", is_flag=True, help="Include elapsed times (output no longer byte-stable).")
def verify(value_bound, mex_max, m_max, lemma_max_y, lemma, fmt, timings):
    """Run the verification suite; exit 3 if any check fails."""
    if lemma == "1":
        reports = verify_mod.check_lemma1(m_max, lemma_max_y)
    elif lemma == "2":
        reports = [verify_mod.check_lemma2(m_max)]
    else:
        reports = verify_mod.run_all(
            value_bound=value_bound,
            mex_bound=mex_max,
            m_max=m_max,
            lemma_max_y=lemma_max_y,
        )
    if fmt == "json":
        click.echo(json.dumps([r.to_dict(timings) for r in reports], indent=2))
    else:
        for report in reports:
            click.echo(report.to_text(timings))
            click.echo("")
        tally = {"pass": 0, "pass-with-notes": 0, "fail": 0}
        for report in reports:
            tally[report.status] += 1
        click.echo(
            f"{len(reports)} checks: {tally['pass']} pass, "
            f"{tally['pass-with-notes']} pass-with-notes, {tally['fail']} fail"
        )
    if any(r.status == "fail" for r in reports):
        sys.exit(3)


def _move_text(move: StrapMove) -> str:
    match move:
        case SlideLeft(to=to):
            return f"slide left {to}"
        case SlideRight(to=to):
            return f"slide right {to}"
        case SlideLone(to=to):
            return f"slide lone {to}"
        case Push(depth=depth):
            return f"push {depth}"
        case RemoveLeft():
            return "remove"
    raise TypeError(f"not a move: {move!r}")


def _sum_move_text(move: SumMove) -> str:
    return f"{move.side.value} {_move_text(move.move)}"


def _parse_position_arg(text: str) -> SumState:
    try:
        return parse_sum(text)
    except ParseError as exc:
        raise click.UsageError(str(exc)) from None


@main.command(name="best-move")
@click.argument("position")
@click.pass_obj
def best_move(variant, position):
    """Outcome and all winning moves for POSITION (e.g. "0,1|1,2")."""
    state = _parse_position_arg(position)
    if outcome(state, variant) is Outcome.P:
        click.echo("P-position; no winning move")
        return
    moves = winning_moves(state, variant)
    first, first_state = moves[0]
    click.echo(f"N-position; winning: {_sum_move_text(first)} → {format_sum(first_state)}")
    for move, result in moves[1:]:
        click.echo(f"also: {_sum_move_text(move)} → {format_sum(result)}")


def _parse_human_int(token: str, usage: str) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise ValueError(f"squares and depths are integers; {usage}") from None


def _parse_human_move(text: str) -> SumMove:
    tokens = text.split()
    usage = 'try "left push 2", "right slide right 1", or "left remove"'
    if len(tokens) < 2:
        raise ValueError(usage)
    sides = {"left": Side.LEFT, "right": Side.RIGHT}
    if tokens[0] not in sides:
        raise ValueError(f"unknown strap {tokens[0]!r}; {usage}")
    side = sides[tokens[0]]
    kind = tokens[1]
    if kind == "push" and len(tokens) == 3:
        return SumMove(side, Push(_parse_human_int(tokens[2], usage)))
    if kind == "slide" and len(tokens) == 4:
        coins = {"left": SlideLeft, "right": SlideRight, "lone": SlideLone}
        if tokens[2] not in coins:
            raise ValueError(f"unknown coin {tokens[2]!r}; {usage}")
        return SumMove(side, coins[tokens[2]](_parse_human_int(tokens[3], usage)))
    if kind == "remove" and len(tokens) == 2:
        return SumMove(side, RemoveLeft())
    raise ValueError(usage)


def _apply_sum_move(state: SumState, move: SumMove, variant: Variant) -> SumState:
    if move.side is Side.LEFT:
        return SumState(apply_move(state.left, move.move, variant), state.right)
    return SumState(state.left, apply_move(state.right, move.move, variant))


@main.command()
@click.argument("position")
@click.option("--first", type=click.Choice(["human", "engine"]), default="human",
              show_default=True, help="Who moves first.")
@click.pass_obj
def play(variant, position, first):
    """Play POSITION against the engine in a terminal loop.

    Moves: "<left|right> slide <left|right|lone> <to>", "<left|right>
    push <depth>", "<left|right> remove" (variant B).  "quit" resigns.
    """
    state = _parse_position_arg(position)
    mover = first
    while True:
        if not successors(state, variant):
            # the player to move has no move and loses
            winner = "engine" if mover == "human" else "human"
            click.echo("Game over: you win!" if winner == "human" else "Game over: engine wins.")
            return
        click.echo(f"Position: {format_sum(state)}")
        if mover == "human":
            raw = click.prompt("your move", prompt_suffix="> ")
            if raw.strip() in ("quit", "exit"):
                click.echo("Game over: engine wins.")
                return
            try:
                move = _parse_human_move(raw)
                state = _apply_sum_move(state, move, variant)
            except ValueError as exc:
                click.echo(f"invalid move: {exc}")
                continue
            except GameError as exc:
                click.echo(f"illegal move: {exc}")
                continue
            mover = "engine"
        else:
            move, state = engine_move(state, variant)
            click.echo(f"engine: {_sum_move_text(move)} → {format_sum(state)}")
            mover = "human"


@main.command()
@click.option("--games", type=click.IntRange(min=1), default=500, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), default=7, show_default=True)
@click.option("--max", "bound", type=click.IntRange(min=1), default=40, show_default=True)
@click.pass_obj
def selfplay(variant, games, seed, bound):
    """Engine vs engine from random N-position starts; the first player must always win."""
    rng = random.Random(seed)
    first_wins = 0
    for _ in range(games):
        while True:
            state = random_sum_state(rng, bound, two_coins_only=True)
            if sum_grundy(state, variant) != 0:
                break
        if engine_selfplay(state, variant) == "first":
            first_wins += 1
    click.echo(f"N-positions: {first_wins}/{games} first-player wins")
    if first_wins != games:
        sys.exit(3)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=click.IntRange(1, 65535), default=8000, show_default=True)
@click.option("--static", "static_dir", type=click.Path(exists=True, file_okay=False),
              default=None, help="Also serve a built web UI from this directory.")
@click.pass_obj
def serve(variant, host, port, static_dir):
    """Run the JSON API server until interrupted."""
    import uvicorn

    from .service import create_app

    app = create_app(static_dir, variant)
    try:
        uvicorn.run(app, host=host, port=port, log_level="warning")
    except OSError as exc:
        click.echo(f"cannot bind {host}:{port}: {exc}", err=True)
        sys.exit(1)
