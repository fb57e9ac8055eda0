"""Open-source program games: SLANG strategy programs, base-game matches,
the repeated meta-game, labeling, metrics and replicator dynamics.

Records come back as plain dicts with the same layout as the JSON files the
command-line tool writes.
"""

import json as _json

from . import _core

__all__ = [
    "check_program",
    "play_match",
    "meta_game",
    "metrics",
    "transform",
    "label",
    "tournament",
    "integrate",
    "fixed_points",
    "flow_field",
    "run_cli",
]

check_program = _core.check_program
transform = _core.transform
integrate = _core.integrate
run_cli = _core.run_cli


def play_match(source_a, source_b, game="ipd", rounds=10, seed=0, fallback="", board_size=3):
    return _json.loads(_core.play_match(source_a, source_b, game, rounds, seed, fallback, board_size))


def meta_game(sources_a, sources_b, meta_rounds=10, game="ipd", rounds=10, seed=0):
    """Scripted providers: side X submits sources_x[k-1] at meta-round k."""
    return _json.loads(_core.meta_game(list(sources_a), list(sources_b), meta_rounds, game, rounds, seed))


def metrics(source, game="ipd"):
    return _json.loads(_core.metrics(source, game))


def label(source, rounds=10, seed=0):
    return _json.loads(_core.label(source, rounds, seed))


def tournament(types, game="ipd", rounds=10, seed=0, repetitions=1, jobs=1):
    """`types` maps a tag to its source (or is a list of (tag, source))."""
    pairs = list(types.items()) if isinstance(types, dict) else list(types)
    return _json.loads(_core.tournament(pairs, game, rounds, seed, repetitions, jobs))


def fixed_points(matrix, tol=1e-9):
    return _json.loads(_core.fixed_points([list(map(float, r)) for r in matrix], tol))


def flow_field(matrix, resolution=10):
    return _json.loads(_core.flow_field([list(map(float, r)) for r in matrix], resolution))
