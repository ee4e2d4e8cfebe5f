"""Constructive finite extensions of a game.

Two constructions are provided.  The maximin extension appends three actions
per player so that the extended game keeps its security levels, acquires a
unique equilibrium on the new actions, and gains a maximin profile whose
payoff strictly beats that equilibrium.  The equilibrium extension appends
one action per player so that the maximin sets stay untouched while a new
strict equilibrium strictly beats every maximin profile.  Both constructors
verify their guarantees on the built game and return the verdicts as a
certificate; nothing is assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .game import Game, GameError, Profile, expected_payoff, strictly_dominates
from .rational import Rational, rat, ZERO
from .solvers import maximin_face, nash_equilibria, security_level

__all__ = [
    "ExtensionParamError",
    "ExtensionParams",
    "canonical_params",
    "CertificateClause",
    "ExtensionCertificate",
    "ExtensionResult",
    "maximin_extension",
    "equilibrium_extension",
    "restrict_game",
]


class ExtensionParamError(GameError):
    """Extension parameters violate their required ordering."""


@dataclass(frozen=True)
class ExtensionParams:
    """Per-player payoff levels ``l < rho < v < n < h < H`` used by the
    maximin extension; ``H`` must also exceed every original payoff."""

    l: tuple
    rho: tuple
    n: tuple
    h: tuple
    H: tuple

    def validate(self, g: Game, values=None):
        values = values or (security_level(g, 1), security_level(g, 2))
        for i in (0, 1):
            chain = (self.l[i], self.rho[i], values[i], self.n[i], self.h[i], self.H[i])
            if not all(a < b for a, b in zip(chain, chain[1:])):
                raise ExtensionParamError(
                    f"player {i + 1} levels must satisfy l < rho < v < n < h < H, got "
                    f"l={self.l[i]} rho={self.rho[i]} v={values[i]} n={self.n[i]} "
                    f"h={self.h[i]} H={self.H[i]}"
                )
            if self.H[i] <= g.max_payoff(i + 1):
                raise ExtensionParamError(
                    f"player {i + 1} bonus H={self.H[i]} must exceed the largest "
                    f"original payoff {g.max_payoff(i + 1)}"
                )
        return values


def canonical_params(g: Game, values=None) -> ExtensionParams:
    """The deterministic parameter rule: ``l = v - 2``, ``rho = v - 1``,
    ``n = v + 1``, ``h = v + 2`` and ``H = max(h, best payoff) + 1``."""
    if values is None:
        values = (security_level(g, 1), security_level(g, 2))
    v1, v2 = values
    h = (v1 + 2, v2 + 2)
    return ExtensionParams(
        l=(v1 - 2, v2 - 2),
        rho=(v1 - 1, v2 - 1),
        n=(v1 + 1, v2 + 1),
        h=h,
        H=(max(h[0], g.max_payoff(1)) + 1, max(h[1], g.max_payoff(2)) + 1),
    )


@dataclass(frozen=True)
class CertificateClause:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ExtensionCertificate:
    clauses: tuple

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def clause(self, name: str) -> CertificateClause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)


@dataclass(frozen=True)
class ExtensionResult:
    extended: Game
    new_actions_1: tuple
    new_actions_2: tuple
    certificate: ExtensionCertificate


def _fresh_labels(existing, wanted):
    """The requested labels, suffixed with a counter when they collide."""
    taken = set(existing)
    out = []
    for label in wanted:
        candidate = label
        counter = 2
        while candidate in taken:
            candidate = f"{label}_{counter}"
            counter += 1
        taken.add(candidate)
        out.append(candidate)
    return tuple(out)


def restrict_game(g: Game, rows, cols) -> Game:
    """The subgame on the given action index lists (used for round-trips)."""
    return Game(
        tuple(g.actions1[i] for i in rows),
        tuple(g.actions2[j] for j in cols),
        tuple(tuple(g.payoffs[i][j] for j in cols) for i in rows),
    )


def maximin_extension(g: Game, params: ExtensionParams | None = None) -> ExtensionResult:
    """Append rows ``R, T, MU1`` and columns ``C, D, MU2``.

    ``R``/``C`` carry a large bonus against old actions and meet at the new
    unique equilibrium ``(R, C)`` with payoff ``(n1, n2)``; ``T``/``D`` are
    punishment actions that pin the security levels; ``MU1``/``MU2`` are new
    maximin actions meeting at ``(h1, h2)``, strictly above the equilibrium.
    """
    values = (security_level(g, 1), security_level(g, 2))
    if params is None:
        params = canonical_params(g, values)
    params.validate(g, values)
    v1, v2 = values
    l1, l2 = params.l
    r1, r2 = params.rho
    n1, n2 = params.n
    h1, h2 = params.h
    H1, H2 = params.H

    new_rows = _fresh_labels(g.actions1, ("R", "T", "MU1"))
    new_cols = _fresh_labels(g.actions2, ("C", "D", "MU2"))
    m, n = g.m, g.n

    cells = [
        [g.payoffs[i][j] for j in range(n)] + [(v1, H2), (v1, l2), (v1, H2)]
        for i in range(m)
    ]
    cells.append([(H1, v2)] * n + [(n1, n2), (r1, l2), (H1, v2)])   # R
    cells.append([(l1, v2)] * n + [(l1, r2), (l1, l2), (l1, v2)])   # T
    cells.append([(H1, v2)] * n + [(v1, H2), (v1, l2), (h1, h2)])   # MU1

    extended = Game(
        g.actions1 + new_rows,
        g.actions2 + new_cols,
        tuple(tuple(row) for row in cells),
    )

    i_r, i_mu1 = m, m + 2
    j_c, j_d, j_mu2 = n, n + 1, n + 2

    clauses = []
    ev1 = security_level(extended, 1)
    ev2 = security_level(extended, 2)
    clauses.append(
        CertificateClause(
            "security-levels-unchanged",
            ev1 == v1 and ev2 == v2,
            f"({ev1}, {ev2}) vs ({v1}, {v2})",
        )
    )

    mu1_worst = min(extended.u1(i_mu1, j) for j in range(extended.n))
    mu2_worst = min(extended.u2(i, j_mu2) for i in range(extended.m))
    clauses.append(
        CertificateClause(
            "new-actions-are-maximin",
            mu1_worst == ev1 and mu2_worst == ev2,
            f"worst cases ({mu1_worst}, {mu2_worst})",
        )
    )

    eq = nash_equilibria(extended)
    only_rc = (
        len(eq.extreme_equilibria) == 1
        and eq.extreme_equilibria[0].s1.support() == (i_r,)
        and eq.extreme_equilibria[0].s2.support() == (j_c,)
        and extended.payoffs[i_r][j_c] == (n1, n2)
    )
    clauses.append(
        CertificateClause(
            "unique-equilibrium-on-new-pair",
            only_rc,
            f"{len(eq.extreme_equilibria)} extreme equilibria found",
        )
    )

    top = extended.payoffs[i_mu1][j_mu2]
    clauses.append(
        CertificateClause(
            "maximin-pair-strictly-beats-equilibrium",
            top == (h1, h2) and h1 > n1 and h2 > n2,
            f"({top[0]}, {top[1]}) vs ({n1}, {n2})",
        )
    )

    clauses.append(
        CertificateClause(
            "equilibrium-actions-do-not-weakly-dominate",
            extended.u1(i_mu1, j_d) > extended.u1(i_r, j_d)
            and extended.u2(m + 1, j_mu2) > extended.u2(m + 1, j_c),
        )
    )

    return ExtensionResult(extended, new_rows, new_cols, ExtensionCertificate(tuple(clauses)))


def equilibrium_extension(
    g: Game,
    bonus: tuple | None = None,
    low: tuple | None = None,
) -> ExtensionResult:
    """Append one row ``r`` and one column ``c``.

    Old rows get ``(v1, l2)`` against ``c``, the new row gets ``(l1, v2)``
    against old columns, and ``(r, c)`` pays ``(K1, K2)`` with each ``K``
    above every original payoff.  Defaults: ``K_i = max payoff + 1`` and
    ``l_i = v_i - 1``.
    """
    v1 = security_level(g, 1)
    v2 = security_level(g, 2)
    k1, k2 = bonus if bonus is not None else (g.max_payoff(1) + 1, g.max_payoff(2) + 1)
    l1, l2 = low if low is not None else (v1 - 1, v2 - 1)
    k1, k2, l1, l2 = rat(k1), rat(k2), rat(l1), rat(l2)
    if k1 <= g.max_payoff(1) or k2 <= g.max_payoff(2):
        raise ExtensionParamError("bonus payoffs must exceed every original payoff")
    if l1 >= v1 or l2 >= v2:
        raise ExtensionParamError("low payoffs must sit below the security levels")

    new_row = _fresh_labels(g.actions1, ("r",))
    new_col = _fresh_labels(g.actions2, ("c",))
    m, n = g.m, g.n
    cells = [
        [g.payoffs[i][j] for j in range(n)] + [(v1, l2)] for i in range(m)
    ]
    cells.append([(l1, v2)] * n + [(k1, k2)])
    extended = Game(
        g.actions1 + new_row,
        g.actions2 + new_col,
        tuple(tuple(row) for row in cells),
    )

    clauses = []
    base_face1 = maximin_face(g, 1, v1)
    base_face2 = maximin_face(g, 2, v2)
    ext_face1 = maximin_face(extended, 1)
    ext_face2 = maximin_face(extended, 2)
    same1 = sorted(s.weights + (ZERO,) for s in base_face1.vertices) == sorted(
        s.weights for s in ext_face1.vertices
    )
    same2 = sorted(s.weights + (ZERO,) for s in base_face2.vertices) == sorted(
        s.weights for s in ext_face2.vertices
    )
    clauses.append(
        CertificateClause(
            "maximin-faces-unchanged",
            same1 and same2 and ext_face1.value == v1 and ext_face2.value == v2,
            f"vertex counts {len(ext_face1.vertices)}/{len(base_face1.vertices)} and "
            f"{len(ext_face2.vertices)}/{len(base_face2.vertices)}",
        )
    )

    # (r, c) strict: r uniquely best against c, c uniquely best against r
    col_c = [extended.u1(i, n) for i in range(extended.m)]
    row_r = [extended.u2(m, j) for j in range(extended.n)]
    strict = (
        all(col_c[i] < k1 for i in range(m))
        and all(row_r[j] < k2 for j in range(n))
    )
    clauses.append(CertificateClause("new-pair-is-strict-equilibrium", strict))

    bonus_pay = expected_payoff(
        extended,
        Profile(
            _pure(extended, 1, m),
            _pure(extended, 2, n),
        ),
    )
    dominated_all = all(
        strictly_dominates(
            bonus_pay,
            expected_payoff(g, Profile(m1, m2)),
        )
        for m1 in base_face1.vertices
        for m2 in base_face2.vertices
    )
    clauses.append(
        CertificateClause(
            "new-equilibrium-strictly-beats-every-maximin-pair",
            dominated_all,
            f"bonus payoff ({bonus_pay.u1}, {bonus_pay.u2})",
        )
    )

    return ExtensionResult(extended, new_row, new_col, ExtensionCertificate(tuple(clauses)))


def _pure(g: Game, player: int, index: int):
    from .game import MixedStrategy

    return MixedStrategy.pure(player, index, g.size(player))
