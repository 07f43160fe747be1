"""Stateless JSON HTTP facade over the engine.

Every endpoint is a pure function of the request body; the client owns
all game state.  Error bodies are always {"error": {"code", "message"}}
with a stable machine-readable code:

* 400 malformed-request, invalid-variant, too-many-coins, negative-coin,
  duplicate-coin, unsorted-coins
* 422 out-of-range-target, target-occupied-or-jump, push-too-shallow,
  push-too-deep, wrong-variant, wrong-move-kind
* 409 game-over (engine move requested with no legal move available)

Positions travel as {"left": [..], "right": [..]} coin lists (0 to 2
ascending distinct squares each).  The right strap physically extends in
the opposite direction; its squares are numbered from its own edge, so
no coordinate arithmetic happens here and mirroring is purely a client
rendering concern.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__, core
from .core import Empty, IllegalMoveError, One, Push, RemoveLeft, SlideLeft, SlideLone, SlideRight, StrapMove, StrapState, Two, Variant
from .grundy import grundy_closed_form
from .sumgame import Side, SumState, engine_move, outcome, successors, sum_grundy, winning_moves


class _ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        self.status = status
        self.code = code
        self.message = message


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error": {"code": code, "message": message}}
    )


def _parse_coins(raw, label: str) -> StrapState:
    if not isinstance(raw, list):
        raise _ApiError(400, "malformed-request", f"{label} must be a list of squares")
    if len(raw) > 2:
        raise _ApiError(400, "too-many-coins", f"{label} holds at most two coins")
    squares = []
    for entry in raw:
        if isinstance(entry, bool) or not isinstance(entry, int):
            raise _ApiError(400, "malformed-request", f"{label} squares must be integers")
        if entry < 0:
            raise _ApiError(400, "negative-coin", f"{label} squares must be nonnegative")
        squares.append(entry)
    if len(squares) == 2:
        if squares[0] == squares[1]:
            raise _ApiError(400, "duplicate-coin", f"{label} coins must sit on distinct squares")
        if squares[0] > squares[1]:
            raise _ApiError(400, "unsorted-coins", f"{label} squares must be ascending")
        return Two(squares[0], squares[1])
    if len(squares) == 1:
        return One(squares[0])
    return Empty()


def _parse_position(body: dict) -> SumState:
    raw = body.get("position")
    if not isinstance(raw, dict):
        raise _ApiError(400, "malformed-request", "body needs a position object")
    for key in raw:
        if key not in ("left", "right"):
            raise _ApiError(400, "malformed-request", f"unknown position field {key!r}")
    return SumState(
        _parse_coins(raw.get("left", []), "left strap"),
        _parse_coins(raw.get("right", []), "right strap"),
    )


def _parse_variant(body: dict, default: Variant) -> Variant:
    raw = body.get("variant")
    if raw is None:
        return default
    if raw not in ("A", "B"):
        raise _ApiError(400, "invalid-variant", 'variant must be "A" or "B"')
    return Variant(raw)


def _parse_side(raw) -> Side:
    if raw == "left":
        return Side.LEFT
    if raw == "right":
        return Side.RIGHT
    raise _ApiError(400, "malformed-request", 'move strap must be "left" or "right"')


def _require_int(value, label: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _ApiError(400, "malformed-request", f"move {label} must be an integer")
    return value


def _parse_move(body: dict) -> tuple[Side, StrapMove]:
    raw = body.get("move")
    if not isinstance(raw, dict):
        raise _ApiError(400, "malformed-request", "body needs a move object")
    side = _parse_side(raw.get("strap"))
    kind = raw.get("kind")
    if kind == "slide":
        to = _require_int(raw.get("to"), "to")
        coin = raw.get("coin")
        if coin == "left":
            return side, SlideLeft(to)
        if coin == "right":
            return side, SlideRight(to)
        if coin == "lone":
            return side, SlideLone(to)
        raise _ApiError(400, "malformed-request", 'slide coin must be "left", "right", or "lone"')
    if kind == "push":
        return side, Push(_require_int(raw.get("depth"), "depth"))
    if kind == "remove":
        return side, RemoveLeft()
    raise _ApiError(400, "malformed-request", 'move kind must be "slide", "push", or "remove"')


def _move_json(side: Side, move: StrapMove) -> dict:
    out: dict = {"strap": side.value}
    match move:
        case SlideLeft(to=to):
            out |= {"kind": "slide", "coin": "left", "to": to}
        case SlideRight(to=to):
            out |= {"kind": "slide", "coin": "right", "to": to}
        case SlideLone(to=to):
            out |= {"kind": "slide", "coin": "lone", "to": to}
        case Push(depth=depth):
            out |= {"kind": "push", "depth": depth}
        case RemoveLeft():
            out |= {"kind": "remove"}
    return out


def _position_json(state: SumState) -> dict:
    return {
        "left": list(core.coins(state.left)),
        "right": list(core.coins(state.right)),
    }


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise _ApiError(400, "malformed-request", "body must be valid JSON") from None
    if not isinstance(body, dict):
        raise _ApiError(400, "malformed-request", "body must be a JSON object")
    return body


def create_app(static_dir: str | None = None, default_variant: Variant = Variant.A) -> FastAPI:
    app = FastAPI(title="coinslide", openapi_url=None, docs_url=None, redoc_url=None)

    @app.exception_handler(_ApiError)
    async def _on_api_error(_request, exc: _ApiError):
        return _error_response(exc.status, exc.code, exc.message)

    @app.post("/api/analyze")
    async def analyze(request: Request):
        body = await _json_body(request)
        state = _parse_position(body)
        variant = _parse_variant(body, default_variant)
        left = grundy_closed_form(state.left, variant)
        right = grundy_closed_form(state.right, variant)
        return {
            "grundyLeft": left,
            "grundyRight": right,
            "nimSum": left ^ right,
            "outcome": outcome(state, variant).value,
            "winningMoves": [
                _move_json(m.side, m.move) | {"position": _position_json(result)}
                for m, result in winning_moves(state, variant)
            ],
        }

    @app.post("/api/apply")
    async def apply_move(request: Request):
        body = await _json_body(request)
        state = _parse_position(body)
        variant = _parse_variant(body, default_variant)
        side, move = _parse_move(body)
        strap = state.left if side is Side.LEFT else state.right
        try:
            result = core.apply(strap, move, variant)
        except IllegalMoveError as exc:
            return _error_response(422, exc.code, str(exc))
        after = (
            SumState(result, state.right)
            if side is Side.LEFT
            else SumState(state.left, result)
        )
        return {"position": _position_json(after)}

    @app.post("/api/engine-move")
    async def engine(request: Request):
        body = await _json_body(request)
        state = _parse_position(body)
        variant = _parse_variant(body, default_variant)
        if not successors(state, variant):
            return _error_response(409, "game-over", "no legal moves remain")
        before = sum_grundy(state, variant)
        move, after = engine_move(state, variant)
        return {
            "move": _move_json(move.side, move.move),
            "position": _position_json(after),
            "rationale": {
                "nimSumBefore": before,
                "nimSumAfter": sum_grundy(after, variant),
            },
        }

    @app.get("/api/health")
    async def health():
        return {"status": "ok", "version": __version__}

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
