"""The JSON game-file format consumed and produced by the command line.

A game document looks like::

    {
      "actions_1": ["x", "y", "z"],
      "actions_2": ["x", "y", "z"],
      "payoffs": [[["7", "7"], ["9", "4"], ["0", "8"]], ...]
    }

Each payoff entry is a two-element array whose values are strings ``"p"`` or
``"p/q"`` (plain JSON integers are also accepted).  Parsing rejects malformed
fractions, zero denominators and dimension mismatches with messages naming
the offending position.
"""

from __future__ import annotations

import json

from .game import Game, GameError
from .rational import format_rational, parse_rational

__all__ = ["GameFormatError", "loads", "load", "dumps", "dump"]


class GameFormatError(GameError):
    """The input document does not conform to the game-file format."""


def _parse_actions(doc, key):
    value = doc.get(key)
    if not isinstance(value, list) or not value:
        raise GameFormatError(f"{key}: expected a non-empty list of strings")
    for k, label in enumerate(value):
        if not isinstance(label, str) or not label:
            raise GameFormatError(f"{key}[{k}]: expected a non-empty string")
    if len(set(value)) != len(value):
        raise GameFormatError(f"{key}: action labels must be distinct")
    return tuple(value)


def _parse_entry(entry, where):
    if isinstance(entry, bool) or isinstance(entry, float):
        raise GameFormatError(f"{where}: expected an integer or 'p/q' string")
    if isinstance(entry, int):
        return parse_rational(str(entry))
    if isinstance(entry, str):
        try:
            return parse_rational(entry)
        except ValueError as exc:
            raise GameFormatError(f"{where}: {exc}") from None
    raise GameFormatError(f"{where}: expected an integer or 'p/q' string")


def loads(text: str) -> Game:
    """Parse a game document from a JSON string."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GameFormatError("top level: expected an object")
    actions1 = _parse_actions(doc, "actions_1")
    actions2 = _parse_actions(doc, "actions_2")
    payoffs = doc.get("payoffs")
    if not isinstance(payoffs, list):
        raise GameFormatError("payoffs: expected a list of rows")
    if len(payoffs) != len(actions1):
        raise GameFormatError(
            f"payoffs: has {len(payoffs)} rows, expected {len(actions1)} (one per actions_1 entry)"
        )
    rows = []
    for i, row in enumerate(payoffs):
        if not isinstance(row, list):
            raise GameFormatError(f"payoffs[{i}]: expected a list of cells")
        if len(row) != len(actions2):
            raise GameFormatError(
                f"payoffs[{i}]: has {len(row)} cells, expected {len(actions2)} (one per actions_2 entry)"
            )
        cells = []
        for j, cell in enumerate(row):
            if not isinstance(cell, list) or len(cell) != 2:
                raise GameFormatError(f"payoffs[{i}][{j}]: expected a 2-element array")
            cells.append(
                (
                    _parse_entry(cell[0], f"payoffs[{i}][{j}][0]"),
                    _parse_entry(cell[1], f"payoffs[{i}][{j}][1]"),
                )
            )
        rows.append(tuple(cells))
    return Game(actions1, actions2, tuple(rows))


def load(path) -> Game:
    with open(path, "r", encoding="utf-8") as handle:
        return loads(handle.read())


def dumps(game: Game) -> str:
    """Serialize a game to the canonical document text (stable byte-for-byte)."""
    doc = {
        "actions_1": list(game.actions1),
        "actions_2": list(game.actions2),
        "payoffs": [
            [[format_rational(cell[0]), format_rational(cell[1])] for cell in row]
            for row in game.payoffs
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def dump(game: Game, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(game))
