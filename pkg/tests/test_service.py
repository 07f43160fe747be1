import pytest
from fastapi.testclient import TestClient

from coinslide import __version__
from coinslide.core import Variant
from coinslide.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_analyze_example(client):
    r = client.post("/api/analyze", json={"position": {"left": [0, 1], "right": [1, 2]}})
    assert r.status_code == 200
    assert r.json() == {
        "grundyLeft": 1,
        "grundyRight": 3,
        "nimSum": 2,
        "outcome": "N",
        "winningMoves": [
            {
                "strap": "right",
                "kind": "push",
                "depth": 1,
                "position": {"left": [0, 1], "right": [0, 1]},
            }
        ],
    }


def test_analyze_terminal(client):
    r = client.post("/api/analyze", json={"position": {"left": [], "right": []}})
    assert r.status_code == 200
    body = r.json()
    assert body["nimSum"] == 0
    assert body["outcome"] == "P"
    assert body["winningMoves"] == []


def test_analyze_single_coin_values(client):
    r = client.post("/api/analyze", json={"position": {"left": [5], "right": []}})
    assert r.json()["grundyLeft"] == 5
    r = client.post(
        "/api/analyze", json={"position": {"left": [5], "right": []}, "variant": "B"}
    )
    assert r.json()["grundyLeft"] == 0


@pytest.mark.parametrize(
    "position,code",
    [
        ({"left": [2, 2], "right": []}, "duplicate-coin"),
        ({"left": [], "right": [3, 1]}, "unsorted-coins"),
        ({"left": [-1], "right": []}, "negative-coin"),
        ({"left": [1, 2, 3], "right": []}, "too-many-coins"),
        ({"left": ["a"], "right": []}, "malformed-request"),
        ({"left": [True], "right": []}, "malformed-request"),
        ({"left": 5, "right": []}, "malformed-request"),
        ({"left": [], "middle": []}, "malformed-request"),
    ],
)
def test_analyze_rejects_positions(client, position, code):
    r = client.post("/api/analyze", json={"position": position})
    assert r.status_code == 400
    assert r.json()["error"]["code"] == code


def test_analyze_rejects_bad_variant(client):
    r = client.post(
        "/api/analyze", json={"position": {"left": [], "right": []}, "variant": "C"}
    )
    assert r.status_code == 400
    assert r.json()["error"]["code"] == "invalid-variant"


def test_analyze_rejects_non_json(client):
    r = client.post("/api/analyze", content=b"not json", headers={"content-type": "application/json"})
    assert r.status_code == 400
    assert r.json()["error"]["code"] == "malformed-request"
    r = client.post("/api/analyze", json=[1, 2])
    assert r.status_code == 400


def test_apply_slide(client):
    r = client.post(
        "/api/apply",
        json={
            "position": {"left": [1, 3], "right": []},
            "move": {"strap": "left", "kind": "slide", "coin": "right", "to": 2},
        },
    )
    assert r.status_code == 200
    assert r.json() == {"position": {"left": [1, 2], "right": []}}


def test_apply_push_over_edge(client):
    r = client.post(
        "/api/apply",
        json={
            "position": {"left": [2, 4], "right": []},
            "move": {"strap": "left", "kind": "push", "depth": 3},
        },
    )
    assert r.json() == {"position": {"left": [0], "right": []}}


def test_apply_remove_variant_b(client):
    r = client.post(
        "/api/apply",
        json={
            "position": {"left": [2, 4], "right": []},
            "move": {"strap": "left", "kind": "remove"},
            "variant": "B",
        },
    )
    assert r.json() == {"position": {"left": [4], "right": []}}


@pytest.mark.parametrize(
    "move,code",
    [
        ({"strap": "left", "kind": "slide", "coin": "right", "to": 1}, "target-occupied-or-jump"),
        ({"strap": "left", "kind": "slide", "coin": "right", "to": 9}, "out-of-range-target"),
        ({"strap": "left", "kind": "push", "depth": 9}, "push-too-deep"),
        ({"strap": "left", "kind": "push", "depth": 0}, "push-too-shallow"),
        ({"strap": "left", "kind": "remove"}, "wrong-variant"),
        ({"strap": "left", "kind": "slide", "coin": "lone", "to": 0}, "wrong-move-kind"),
    ],
)
def test_apply_rejects_illegal_moves(client, move, code):
    r = client.post("/api/apply", json={"position": {"left": [1, 3], "right": []}, "move": move})
    assert r.status_code == 422
    assert r.json()["error"]["code"] == code


@pytest.mark.parametrize(
    "move",
    [
        {"strap": "middle", "kind": "push", "depth": 1},
        {"strap": "left", "kind": "teleport"},
        {"strap": "left", "kind": "slide", "coin": "top", "to": 1},
        {"strap": "left", "kind": "slide", "coin": "left", "to": "x"},
        {"strap": "left", "kind": "push", "depth": None},
        {"strap": "left", "kind": "push"},
        "push",
    ],
)
def test_apply_rejects_malformed_moves(client, move):
    r = client.post("/api/apply", json={"position": {"left": [1, 3], "right": []}, "move": move})
    assert r.status_code == 400
    assert r.json()["error"]["code"] == "malformed-request"


def test_engine_move_example(client):
    r = client.post("/api/engine-move", json={"position": {"left": [0, 1], "right": [1, 2]}})
    assert r.status_code == 200
    assert r.json() == {
        "move": {"strap": "right", "kind": "push", "depth": 1},
        "position": {"left": [0, 1], "right": [0, 1]},
        "rationale": {"nimSumBefore": 2, "nimSumAfter": 0},
    }


def test_engine_move_game_over(client):
    r = client.post("/api/engine-move", json={"position": {"left": [], "right": []}})
    assert r.status_code == 409
    assert r.json()["error"]["code"] == "game-over"


def test_engine_move_p_position_best_effort(client):
    r = client.post("/api/engine-move", json={"position": {"left": [0, 2], "right": [0, 2]}})
    assert r.status_code == 200
    body = r.json()
    assert body["rationale"]["nimSumBefore"] == 0
    assert body["rationale"]["nimSumAfter"] != 0


def test_statelessness(client):
    payload = {"position": {"left": [3, 7], "right": [2, 9]}}
    first = client.post("/api/analyze", json=payload)
    second = client.post("/api/analyze", json=payload)
    assert first.json() == second.json()


def test_analyze_apply_consistency(client):
    """Playing any advertised winning move leaves the opponent a P-position."""
    r = client.post("/api/analyze", json={"position": {"left": [1, 4], "right": [0, 3]}})
    moves = r.json()["winningMoves"]
    assert moves  # nim-sum 5 ^ 3 = 6, an N-position
    for move in moves:
        after = move["position"]
        again = client.post("/api/analyze", json={"position": after})
        assert again.json()["outcome"] == "P", move


def test_health(client):
    r = client.get("/api/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok", "version": __version__}


def test_unknown_route_and_method(client):
    assert client.get("/api/missing").status_code == 404
    assert client.get("/api/analyze").status_code == 405


def test_default_variant_override():
    app = create_app(default_variant=Variant.B)
    client = TestClient(app)
    r = client.post(
        "/api/apply",
        json={
            "position": {"left": [2, 4], "right": []},
            "move": {"strap": "left", "kind": "remove"},
        },
    )
    assert r.json() == {"position": {"left": [4], "right": []}}
