"""Decision rules as strategies, induced meta-games between rules, and the
population-payoff conditions comparing them.

A rule ("nash", "maximin", "minimax", "relative_maximin", a best response to
another rule, or a pinned pure action) resolves to one exact strategy per
player.  Rules whose solution set has several vertices resolve to the
centroid by default; the resolution note records whichever policy applied.
The induced game between k rules is the k x k game of expected payoffs of
the resolved strategies against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .game import (
    Game,
    GameError,
    GameStructureError,
    MixedStrategy,
    PayoffVector,
    Profile,
    expected_payoff,
    is_symmetric,
    pure_best_responses,
    relative_payoff_game,
)
from .rational import Rational, ONE, ZERO
from .solvers import maximin_face, minimax_face, nash_equilibria

__all__ = [
    "RuleSpec",
    "ResolvedRule",
    "RuleSet",
    "resolve_rules",
    "induced_rule_game",
    "LinearExpr",
    "EvoReport",
    "evo_conditions",
    "pairwise_beats",
    "coordination_failure_payoff",
]


@dataclass(frozen=True)
class RuleSpec:
    """A rule name plus an optional display name.

    ``kind`` is one of ``nash``, ``maximin``, ``minimax``,
    ``relative_maximin``, ``br:<other spec>`` or ``pure:<action label>``.
    """

    kind: str
    name: str = ""

    @property
    def label(self) -> str:
        return self.name or self.kind

    @staticmethod
    def parse(text: str, name: str = "") -> "RuleSpec":
        return RuleSpec(text.strip(), name)


@dataclass(frozen=True)
class ResolvedRule:
    spec: RuleSpec
    strategies: tuple          # one MixedStrategy per player
    note: str = ""             # records the selection policy that applied


@dataclass(frozen=True)
class RuleSet:
    game: Game
    rules: tuple               # ResolvedRule, in caller order

    def strategy(self, index: int, player: int) -> MixedStrategy:
        return self.rules[index].strategies[player - 1]


def _centroid(vertices):
    k = len(vertices)
    if k == 1:
        return vertices[0], "unique vertex"
    owner = vertices[0].owner
    size = len(vertices[0].weights)
    inv = Rational(1, k)
    weights = tuple(
        sum((v.weights[i] for v in vertices), ZERO) * inv for i in range(size)
    )
    return MixedStrategy(owner, weights), f"centroid of {k} vertices"


def _resolve_one(g: Game, spec: RuleSpec, player: int) -> tuple:
    kind = spec.kind
    if kind == "maximin":
        return _centroid(maximin_face(g, player).vertices)
    if kind == "minimax":
        return _centroid(minimax_face(g, player).vertices)
    if kind == "relative_maximin":
        face = maximin_face(relative_payoff_game(g), player)
        strategy, note = _centroid(face.vertices)
        return strategy, f"maximin of the relative-payoff game; {note}"
    if kind == "nash":
        eq = nash_equilibria(g)
        own = sorted(
            {
                (p.s1 if player == 1 else p.s2).weights
                for p in eq.extreme_equilibria
            }
        )
        if len(own) == 1:
            return MixedStrategy(player, own[0]), "unique equilibrium strategy"
        return _centroid([MixedStrategy(player, w) for w in own])
    if kind.startswith("pure:"):
        label = kind[len("pure:"):]
        actions = g.actions(player)
        if label not in actions:
            raise GameStructureError(f"unknown action {label!r} for player {player}")
        return (
            MixedStrategy.pure(player, actions.index(label), g.size(player)),
            "pinned pure action",
        )
    if kind.startswith("br:"):
        target = RuleSpec(kind[len("br:"):])
        opponent = 2 if player == 1 else 1
        opp_strategy, _ = _resolve_one(g, target, opponent)
        replies = pure_best_responses(g, player, opp_strategy)
        chosen = min(replies)  # deterministic tie-break: lowest action index
        note = "best reply to " + target.kind
        if len(replies) > 1:
            note += f"; tie over {sorted(replies)} broken by lowest index"
        return MixedStrategy.pure(player, chosen, g.size(player)), note
    raise GameError(f"unknown rule kind {kind!r}")


def resolve_rules(g: Game, specs) -> RuleSet:
    """Resolve every rule to one strategy per player."""
    resolved = []
    for spec in specs:
        if isinstance(spec, str):
            spec = RuleSpec.parse(spec)
        s1, note1 = _resolve_one(g, spec, 1)
        s2, note2 = _resolve_one(g, spec, 2)
        note = note1 if note1 == note2 else f"p1: {note1}; p2: {note2}"
        resolved.append(ResolvedRule(spec, (s1, s2), note))
    return RuleSet(g, tuple(resolved))


def induced_rule_game(g: Game, rules: RuleSet) -> Game:
    """The k x k meta-game whose cell (r, r') pays what rule r earns against
    rule r' in the base game."""
    if rules.game != g:
        raise GameStructureError("rule set was resolved for a different game")
    k = len(rules.rules)
    labels = []
    for idx, rule in enumerate(rules.rules):
        label = rule.spec.label
        while label in labels:
            label = f"{label}_{idx}"
        labels.append(label)
    cells = []
    for r in rules.rules:
        row = []
        for c in rules.rules:
            pay = expected_payoff(g, Profile(r.strategies[0], c.strategies[1]))
            row.append((pay.u1, pay.u2))
        cells.append(tuple(row))
    return Game(tuple(labels), tuple(labels), tuple(cells))


@dataclass(frozen=True)
class LinearExpr:
    """A linear expression ``const + sum(coeff * symbol)`` over rationals."""

    const: Rational
    terms: tuple               # (symbol, coeff) pairs

    def evaluate(self, **values) -> Rational:
        total = self.const
        for symbol, coeff in self.terms:
            total += coeff * values[symbol]
        return total

    def __str__(self):
        parts = [str(self.const)]
        for symbol, coeff in self.terms:
            parts.append(f"({coeff})*{symbol}")
        return " + ".join(parts)


@dataclass(frozen=True)
class EvoReport:
    """The four payoff conditions for a two-rule population, the expected
    returns as expressions in the mutual-interaction rates, and the
    stability verdicts in the induced 2x2 game."""

    rule_m: str
    rule_n: str
    cond_a: bool
    cond_b: bool
    cond_c: bool
    cond_d: bool
    compared: dict
    expected_m: LinearExpr
    expected_n: LinearExpr
    ess_m: bool
    ess_n: bool
    pairwise_beats: tuple


def evo_conditions(g: Game, rule_pair) -> EvoReport:
    """Evaluate the population-payoff comparison of two rules on a symmetric
    game: (a) mutual play beats mutual play, (b) the first rule earns at
    least the second in the mixed match, (c) mutual play beats the second's
    mixed-match earnings, (d) the second is indifferent between opponents."""
    if not is_symmetric(g):
        raise GameStructureError("rule comparison requires a symmetric base game")
    rules = resolve_rules(g, list(rule_pair))
    m_rule, n_rule = rules.rules
    m1, m2 = m_rule.strategies
    n1, n2 = n_rule.strategies

    u_mm = expected_payoff(g, Profile(m1, m2)).u1
    u_nn = expected_payoff(g, Profile(n1, n2)).u1
    mixed = expected_payoff(g, Profile(m1, n2))
    u_mn, u_nm = mixed.u1, mixed.u2  # u2(M, N) == u1(N, M) in a symmetric game

    compared = {
        "u(M,M)": u_mm,
        "u(N,N)": u_nn,
        "u1(M,N)": u_mn,
        "u2(M,N)": u_nm,
    }
    expected_m = LinearExpr(u_mn, (("alpha", u_mm - u_mn),))
    expected_n = LinearExpr(u_nm, (("beta", u_nn - u_nm),))

    # two-strategy stability test in the induced game
    ess_m = u_mm > u_nm or (u_mm == u_nm and u_mn > u_nn)
    ess_n = u_nn > u_mn or (u_nn == u_mn and u_nm > u_mm)

    beats = (
        (False, u_mn > u_nm),
        (u_nm > u_mn, False),
    )
    return EvoReport(
        rule_m=m_rule.spec.label,
        rule_n=n_rule.spec.label,
        cond_a=u_mm > u_nn,
        cond_b=u_mn >= u_nm,
        cond_c=u_mm > u_nm,
        cond_d=u_nn == u_mn,
        compared=compared,
        expected_m=expected_m,
        expected_n=expected_n,
        ess_m=ess_m,
        ess_n=ess_n,
        pairwise_beats=beats,
    )


def pairwise_beats(g: Game, a: int, b: int) -> bool:
    """Finite-population advantage of pure action ``a`` over ``b`` in a
    symmetric game: strictly more against b than b earns against a."""
    if not is_symmetric(g):
        raise GameStructureError("pairwise comparison requires a symmetric game")
    return g.u1(a, b) > g.u1(b, a)


def coordination_failure_payoff(g: Game) -> PayoffVector:
    """Expected payoff when each player independently mixes uniformly over
    their pure-equilibrium actions (requires at least two pure equilibria)."""
    eq = nash_equilibria(g)
    pure_cells = []
    for p in eq.extreme_equilibria:
        if p.s1.is_pure and p.s2.is_pure:
            pure_cells.append((p.s1.support()[0], p.s2.support()[0]))
    if len(pure_cells) < 2:
        raise GameStructureError("needs at least two pure equilibria")
    rows = sorted({i for i, _ in pure_cells})
    cols = sorted({j for _, j in pure_cells})
    wr = Rational(1, len(rows))
    wc = Rational(1, len(cols))
    s1 = MixedStrategy(1, tuple(wr if i in rows else ZERO for i in range(g.m)))
    s2 = MixedStrategy(2, tuple(wc if j in cols else ZERO for j in range(g.n)))
    return expected_payoff(g, Profile(s1, s2))
