"""Finite two-player games with exact rational payoffs.

The types here are immutable and hashable: a :class:`Game` is a pair of
ordered action lists plus an ``m x n`` matrix of payoff pairs, and a
:class:`MixedStrategy` is an exact probability vector owned by one player.
All operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .rational import Rational, rat, ZERO, ONE

__all__ = [
    "GameError",
    "GameStructureError",
    "Game",
    "MixedStrategy",
    "Profile",
    "PayoffVector",
    "PayoffRelation",
    "expected_payoff",
    "pure_best_responses",
    "pareto_compare",
    "weakly_dominates",
    "dominates",
    "strictly_dominates",
    "relative_payoff_game",
    "is_symmetric",
    "symmetric_game",
]


class GameError(Exception):
    """Base class for errors raised by this package."""


class GameStructureError(GameError):
    """A structural precondition was violated (sizes, labels, ownership)."""


@dataclass(frozen=True)
class PayoffVector:
    u1: Rational
    u2: Rational

    def astuple(self):
        return (self.u1, self.u2)


class PayoffRelation(Enum):
    """Strongest Pareto relation of one payoff vector against another."""

    EQUAL = "equal"
    STRICT_DOMINATES = "strict_dominates"
    DOMINATES = "dominates"
    STRICTLY_DOMINATED = "strictly_dominated"
    DOMINATED = "dominated"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Game:
    """A finite two-player normal-form game with rational payoffs.

    ``payoffs[i][j]`` is the ``(u1, u2)`` pair when player 1 plays action
    ``i`` and player 2 plays action ``j``.
    """

    actions1: tuple
    actions2: tuple
    payoffs: tuple

    def __post_init__(self):
        if not self.actions1 or not self.actions2:
            raise GameStructureError("each player needs at least one action")
        if len(set(self.actions1)) != len(self.actions1):
            raise GameStructureError("player 1 action labels are not distinct")
        if len(set(self.actions2)) != len(self.actions2):
            raise GameStructureError("player 2 action labels are not distinct")
        if len(self.payoffs) != len(self.actions1):
            raise GameStructureError(
                f"payoff matrix has {len(self.payoffs)} rows, expected {len(self.actions1)}"
            )
        for i, row in enumerate(self.payoffs):
            if len(row) != len(self.actions2):
                raise GameStructureError(
                    f"payoff row {i} has {len(row)} entries, expected {len(self.actions2)}"
                )

    @staticmethod
    def create(payoffs, actions1=None, actions2=None) -> "Game":
        """Build a game from any nested payoff pairs, coercing values to rationals."""
        rows = tuple(
            tuple((rat(cell[0]), rat(cell[1])) for cell in row) for row in payoffs
        )
        m = len(rows)
        n = len(rows[0]) if rows else 0
        if actions1 is None:
            actions1 = tuple(f"r{i + 1}" for i in range(m))
        if actions2 is None:
            actions2 = tuple(f"c{j + 1}" for j in range(n))
        return Game(tuple(actions1), tuple(actions2), rows)

    @property
    def m(self) -> int:
        return len(self.actions1)

    @property
    def n(self) -> int:
        return len(self.actions2)

    def u1(self, i: int, j: int) -> Rational:
        return self.payoffs[i][j][0]

    def u2(self, i: int, j: int) -> Rational:
        return self.payoffs[i][j][1]

    def payoff_matrix(self, player: int):
        """Player's payoffs as a list of lists, rows = player 1's actions."""
        k = _player_index(player)
        return [[cell[k] for cell in row] for row in self.payoffs]

    def max_payoff(self, player: int) -> Rational:
        k = _player_index(player)
        return max(cell[k] for row in self.payoffs for cell in row)

    def actions(self, player: int):
        return self.actions1 if player == 1 else self.actions2

    def size(self, player: int) -> int:
        return self.m if player == 1 else self.n


def _player_index(player: int) -> int:
    if player not in (1, 2):
        raise GameStructureError(f"player must be 1 or 2, got {player!r}")
    return player - 1


@dataclass(frozen=True)
class MixedStrategy:
    """An exact probability vector over one player's actions."""

    owner: int
    weights: tuple

    def __post_init__(self):
        _player_index(self.owner)
        if not self.weights:
            raise GameStructureError("strategy needs at least one weight")
        if any(w < 0 for w in self.weights):
            raise GameStructureError("strategy weights must be nonnegative")
        if sum(self.weights, ZERO) != 1:
            raise GameStructureError("strategy weights must sum to exactly 1")

    @staticmethod
    def from_weights(owner: int, weights) -> "MixedStrategy":
        return MixedStrategy(owner, tuple(rat(w) for w in weights))

    @staticmethod
    def pure(owner: int, index: int, size: int) -> "MixedStrategy":
        if not 0 <= index < size:
            raise GameStructureError(f"pure action index {index} out of range")
        return MixedStrategy(owner, tuple(ONE if k == index else ZERO for k in range(size)))

    @staticmethod
    def uniform(owner: int, size: int) -> "MixedStrategy":
        w = Rational(1, size)
        return MixedStrategy(owner, tuple(w for _ in range(size)))

    def support(self):
        """Indices carrying positive weight (never empty)."""
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    @property
    def is_pure(self) -> bool:
        return len(self.support()) == 1


@dataclass(frozen=True)
class Profile:
    s1: MixedStrategy
    s2: MixedStrategy

    def __post_init__(self):
        if self.s1.owner != 1 or self.s2.owner != 2:
            raise GameStructureError("profile strategies must be owned by players 1 and 2")


def _check_sized(g: Game, s: MixedStrategy):
    if len(s.weights) != g.size(s.owner):
        raise GameStructureError(
            f"strategy of player {s.owner} has {len(s.weights)} weights, "
            f"game expects {g.size(s.owner)}"
        )


def expected_payoff(g: Game, p: Profile) -> PayoffVector:
    """Bilinear extension of the payoff functions, computed exactly."""
    _check_sized(g, p.s1)
    _check_sized(g, p.s2)
    total1 = ZERO
    total2 = ZERO
    for i, wi in enumerate(p.s1.weights):
        if wi == 0:
            continue
        row = g.payoffs[i]
        for j, wj in enumerate(p.s2.weights):
            if wj == 0:
                continue
            w = wi * wj
            total1 += w * row[j][0]
            total2 += w * row[j][1]
    return PayoffVector(total1, total2)


def payoff_against(g: Game, player: int, own_action: int, opp: MixedStrategy):
    """Expected payoff of one pure action against an opponent mixture."""
    if opp.owner == player:
        raise GameStructureError("opponent strategy owned by the wrong player")
    _check_sized(g, opp)
    total = ZERO
    if player == 1:
        row = g.payoffs[own_action]
        for j, wj in enumerate(opp.weights):
            if wj != 0:
                total += wj * row[j][0]
    else:
        for i, wi in enumerate(opp.weights):
            if wi != 0:
                total += wi * g.payoffs[i][own_action][1]
    return total


def pure_best_responses(g: Game, player: int, opp: MixedStrategy):
    """Indices of the player's pure actions maximizing payoff against ``opp``."""
    size = g.size(player)
    values = [payoff_against(g, player, a, opp) for a in range(size)]
    best = max(values)
    return {a for a, v in enumerate(values) if v == best}


def weakly_dominates(a: PayoffVector, b: PayoffVector) -> bool:
    return a.u1 >= b.u1 and a.u2 >= b.u2


def dominates(a: PayoffVector, b: PayoffVector) -> bool:
    return weakly_dominates(a, b) and (a.u1 > b.u1 or a.u2 > b.u2)


def strictly_dominates(a: PayoffVector, b: PayoffVector) -> bool:
    return a.u1 > b.u1 and a.u2 > b.u2


def pareto_compare(a: PayoffVector, b: PayoffVector) -> PayoffRelation:
    """Strongest componentwise relation between two payoff vectors."""
    if a.u1 == b.u1 and a.u2 == b.u2:
        return PayoffRelation.EQUAL
    if strictly_dominates(a, b):
        return PayoffRelation.STRICT_DOMINATES
    if dominates(a, b):
        return PayoffRelation.DOMINATES
    if strictly_dominates(b, a):
        return PayoffRelation.STRICTLY_DOMINATED
    if dominates(b, a):
        return PayoffRelation.DOMINATED
    return PayoffRelation.INCOMPARABLE


def relative_payoff_game(g: Game) -> Game:
    """The zero-sum game of payoff differences ``(u1 - u2, u2 - u1)``."""
    rows = tuple(
        tuple((cell[0] - cell[1], cell[1] - cell[0]) for cell in row) for row in g.payoffs
    )
    return Game(g.actions1, g.actions2, rows)


def is_symmetric(g: Game) -> bool:
    """True when ``u2(i, j) == u1(j, i)`` everywhere (requires a square game)."""
    if g.m != g.n:
        return False
    return all(
        g.u2(i, j) == g.u1(j, i) for i in range(g.m) for j in range(g.n)
    )


def symmetric_game(matrix, actions=None) -> Game:
    """Build a symmetric game from player 1's payoff matrix (player 2 gets the transpose)."""
    m = len(matrix)
    rows = []
    for i in range(m):
        if len(matrix[i]) != m:
            raise GameStructureError("symmetric game needs a square matrix")
        rows.append(tuple((rat(matrix[i][j]), rat(matrix[j][i])) for j in range(m)))
    return Game.create(rows, actions, actions)
