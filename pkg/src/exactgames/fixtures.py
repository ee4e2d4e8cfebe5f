"""Built-in benchmark games: the worked examples and the classic 2x2 games,
with their known exact solutions for the benchmark command."""

from __future__ import annotations

from .game import Game, symmetric_game
from .rational import rat

__all__ = [
    "figure1",
    "figure3",
    "figure3_ordinal",
    "figure4",
    "figure5",
    "remark_2x3",
    "example_small_base",
    "example_small_params",
    "example_small_extended",
    "classic_games",
    "CLASSIC_EXPECTATIONS",
    "all_fixture_games",
]


def figure1() -> Game:
    """Symmetric 3x3 game where the mutual-maximin payoff beats the unique
    mixed equilibrium payoff."""
    return symmetric_game(
        [[7, 9, 0], [4, 8, 7], [8, 4, 3]],
        actions=("x", "y", "z"),
    )


def figure3() -> Game:
    """Symmetric ordinal 3x3 game (entries 1..9) lifted to a rational game."""
    return symmetric_game(
        [[1, 2, 7], [9, 5, 3], [8, 4, 6]],
        actions=("x", "y", "z"),
    )


def figure3_ordinal():
    """Player 1's matrix of the ordinal illustration, for the census module."""
    return ((1, 2, 7), (9, 5, 3), (8, 4, 6))


def figure4() -> Game:
    """5x5 game with two pure equilibria and a coordination problem."""
    cells = [
        [(3, 12), (3, 2), (2, 1), (7, 5), (2, 6)],
        [(1, 2), (4, 2), (0, 0), (3, 0), (2, 0)],
        [(4, 3), (0, 0), (3, 5), (9, 1), (1, 4)],
        [(2, 4), (4, 3), (1, 5), (0, 6), (1, 1)],
        [(0, 5), (3, 7), (0, 3), (0, 8), (3, 6)],
    ]
    return Game.create(cells, ("x", "y", "z", "v", "w"), ("x", "y", "z", "v", "w"))


def figure5() -> Game:
    """Harsanyi's unprofitable 2x2 game."""
    cells = [[(3, 1), (0, 2)], [(1, 4), (2, 0)]]
    return Game.create(cells, ("x", "y"), ("x", "y"))


def remark_2x3() -> Game:
    """2x3 game whose maximin profile strictly beats the unique equilibrium."""
    cells = [[(1, 1), (0, 0), (2, 0)], [(3, 3), (1, 3), (0, 4)]]
    return Game.create(cells, ("T", "B"), ("L", "M", "R"))


def example_small_base() -> Game:
    """2x2 base game of the worked 5x5 extension construction."""
    cells = [[(4, 1), (0, 0)], [(1, 4), (1, 2)]]
    return Game.create(cells, ("A", "B"), ("X", "Y"))


def example_small_params():
    """Parameter choices used in the worked extension (same for both players)."""
    return {"l": rat(-2), "rho": rat(0), "n": rat(2), "h": rat(3), "H": rat(5)}


def example_small_extended() -> Game:
    """The printed 5x5 extension of the worked example, entry for entry."""
    cells = [
        [(4, 1), (0, 0), (1, 5), (1, -2), (1, 5)],
        [(1, 4), (1, 2), (1, 5), (1, -2), (1, 5)],
        [(5, 1), (5, 1), (2, 2), (0, -2), (5, 1)],
        [(-2, 1), (-2, 1), (-2, 0), (-2, -2), (-2, 1)],
        [(5, 1), (5, 1), (1, 5), (1, -2), (3, 3)],
    ]
    return Game.create(
        cells, ("A", "B", "R", "T", "MU1"), ("X", "Y", "C", "D", "MU2")
    )


def _game_2x2(cells, a1=("T", "B"), a2=("L", "R")) -> Game:
    return Game.create(cells, a1, a2)


def classic_games():
    """The seven classic 2x2 benchmark games, in a fixed order."""
    return [
        ("Prisoner's Dilemma", _game_2x2([[(3, 3), (0, 4)], [(4, 0), (1, 1)]])),
        ("Chicken (Hawk-Dove)", _game_2x2([[(0, 0), (4, 1)], [(1, 4), (2, 2)]])),
        ("Assurance (Stag Hunt)", _game_2x2([[(4, 4), (1, 3)], [(3, 1), (2, 2)]])),
        ("Battle of the Sexes", _game_2x2([[(2, 1), (0, 0)], [(0, 0), (1, 2)]])),
        ("Harmony", _game_2x2([[(4, 4), (3, 2)], [(2, 3), (1, 1)]])),
        ("Matching Pennies", _game_2x2([[(1, -1), (-1, 1)], [(-1, 1), (1, -1)]])),
        ("Coordination", _game_2x2([[(4, 4), (0, 0)], [(0, 0), (2, 2)]])),
    ]


def _vec(p, q):
    """A profile in top/left probability notation: p = P(top), q = P(left)."""
    return ((rat(p), 1 - rat(p)), (rat(q), 1 - rat(q)))


# Expected benchmark columns: equilibria as (profile, payoffs) lists, plus the
# maximin and minimax pairs with their payoffs.  Profiles use (p, q) = the
# probabilities of the first row / first column.
CLASSIC_EXPECTATIONS = {
    "Prisoner's Dilemma": {
        "equilibria": [(_vec(0, 0), (rat(1), rat(1)))],
        "maximin": (_vec(0, 0), (rat(1), rat(1))),
        "minimax": (_vec(0, 0), (rat(1), rat(1))),
    },
    "Chicken (Hawk-Dove)": {
        "equilibria": [
            (_vec(1, 0), (rat(4), rat(1))),
            (_vec(0, 1), (rat(1), rat(4))),
            (_vec("2/3", "2/3"), (rat("4/3"), rat("4/3"))),
        ],
        "maximin": (_vec(0, 0), (rat(2), rat(2))),
        "minimax": (_vec(1, 1), (rat(0), rat(0))),
    },
    "Assurance (Stag Hunt)": {
        "equilibria": [
            (_vec(1, 1), (rat(4), rat(4))),
            (_vec(0, 0), (rat(2), rat(2))),
            (_vec("1/2", "1/2"), (rat("5/2"), rat("5/2"))),
        ],
        "maximin": (_vec(0, 0), (rat(2), rat(2))),
        "minimax": (_vec(0, 0), (rat(2), rat(2))),
    },
    "Battle of the Sexes": {
        "equilibria": [
            (_vec(1, 1), (rat(2), rat(1))),
            (_vec(0, 0), (rat(1), rat(2))),
            (_vec("2/3", "1/3"), (rat("2/3"), rat("2/3"))),
        ],
        "maximin": (_vec("1/3", "2/3"), (rat("2/3"), rat("2/3"))),
        "minimax": (_vec("2/3", "1/3"), (rat("2/3"), rat("2/3"))),
    },
    "Harmony": {
        "equilibria": [(_vec(1, 1), (rat(4), rat(4)))],
        "maximin": (_vec(1, 1), (rat(4), rat(4))),
        "minimax": (_vec(0, 0), (rat(1), rat(1))),
    },
    "Matching Pennies": {
        "equilibria": [(_vec("1/2", "1/2"), (rat(0), rat(0)))],
        "maximin": (_vec("1/2", "1/2"), (rat(0), rat(0))),
        "minimax": (_vec("1/2", "1/2"), (rat(0), rat(0))),
    },
    "Coordination": {
        "equilibria": [
            (_vec(1, 1), (rat(4), rat(4))),
            (_vec(0, 0), (rat(2), rat(2))),
            (_vec("1/3", "1/3"), (rat("4/3"), rat("4/3"))),
        ],
        "maximin": (_vec("1/3", "1/3"), (rat("4/3"), rat("4/3"))),
        "minimax": (_vec("1/3", "1/3"), (rat("4/3"), rat("4/3"))),
    },
}


def all_fixture_games():
    """Every built-in game, keyed by a short name."""
    games = {
        "figure1": figure1(),
        "figure3": figure3(),
        "figure4": figure4(),
        "figure5": figure5(),
        "remark_2x3": remark_2x3(),
        "example_small_base": example_small_base(),
        "example_small_extended": example_small_extended(),
    }
    for name, game in classic_games():
        games[name] = game
    return games
