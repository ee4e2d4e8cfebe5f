"""Security levels, maximin/minimax faces, and exact Nash-equilibrium
enumeration for two-player games.

Everything is computed in exact rational arithmetic.  Values come from a
small simplex solve; optimal strategy sets are returned as the complete
vertex sets of their polytopes, found by tight-constraint enumeration.
Nash equilibria are enumerated by supports (equal sizes first); when the
game shows any sign of degeneracy the enumeration falls back to pairing
vertices of the two best-response polytopes, which stays complete for
degenerate games.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .game import Game, GameStructureError, MixedStrategy, Profile
from .linalg import max_sum_lp, polytope_vertices, solve_system
from .rational import Rational, ONE, ZERO

__all__ = [
    "SolverError",
    "SolutionFace",
    "NashComponent",
    "EquilibriumSet",
    "security_level",
    "maximin_face",
    "minimax_face",
    "nash_equilibria",
    "nash_guarantee",
    "is_equilibrium",
]


class SolverError(AssertionError):
    """An internal exact invariant failed; indicates a bug, never bad input."""


@dataclass(frozen=True)
class SolutionFace:
    """The full vertex set of one player's optimal-strategy polytope.

    For ``kind == "maximin"`` the value is the player's own security level;
    for ``kind == "minimax"`` it is the cap enforced on the opponent, which
    equals the opponent's security level.
    """

    player: int
    kind: str
    value: Rational
    vertices: tuple


@dataclass(frozen=True)
class NashComponent:
    """A maximal product set of equilibrium strategies (all cross-pairings
    of the listed vertices are equilibria)."""

    p1_vertices: tuple
    p2_vertices: tuple


@dataclass(frozen=True)
class EquilibriumSet:
    extreme_equilibria: tuple
    components: tuple
    degenerate: bool


def _own_matrix(g: Game, player: int):
    """Payoffs oriented rows = the player's own actions, cols = opponent's."""
    if player == 1:
        return g.payoff_matrix(1)
    b = g.payoff_matrix(2)
    return [[b[i][j] for i in range(g.m)] for j in range(g.n)]


def _matrix_game_value(matrix):
    """Value of the zero-sum game where the row player maximizes ``matrix``."""
    shift = ONE - min(min(row) for row in matrix)
    shifted = [[v + shift for v in row] for row in matrix]
    opt = max_sum_lp(shifted)
    return ONE / opt - shift


def security_level(g: Game, player: int) -> Rational:
    """Highest payoff the player can guarantee against any opponent behaviour.

    The primal maximin optimum is asserted against the dual minimax optimum
    computed from a second, independent solve (the two coincide exactly by
    the minimax theorem; a mismatch means a solver bug).
    """
    own = _own_matrix(g, player)
    primal = _matrix_game_value(own)
    opp_view = [[-own[a][b] for a in range(len(own))] for b in range(len(own[0]))]
    dual = -_matrix_game_value(opp_view)
    if primal != dual:
        raise SolverError(
            f"maximin/minimax value mismatch for player {player}: {primal} vs {dual}"
        )
    return primal


def _simplex_face_vertices(own, sense, bound):
    """Vertices of ``{s in simplex : s @ own[:, b] (sense) bound for all b}``."""
    dim = len(own)
    ncols = len(own[0])
    eqs = [([ONE] * dim, ONE)]
    ineqs = [
        (tuple(-ONE if a == i else ZERO for a in range(dim)), ZERO) for i in range(dim)
    ]
    for b in range(ncols):
        col = [own[a][b] for a in range(dim)]
        if sense == ">=":
            ineqs.append((tuple(-c for c in col), -bound))
        else:
            ineqs.append((tuple(col), bound))
    return polytope_vertices(dim, eqs, ineqs)


def maximin_face(g: Game, player: int, value: Rational | None = None) -> SolutionFace:
    """All extreme optimal strategies guaranteeing the security level."""
    v = security_level(g, player) if value is None else value
    own = _own_matrix(g, player)
    verts = _simplex_face_vertices(own, ">=", v)
    if not verts:
        raise SolverError(f"empty maximin face for player {player}")
    for w in verts:
        worst = min(
            sum((w[a] * own[a][b] for a in range(len(own)) if w[a] != 0), ZERO)
            for b in range(len(own[0]))
        )
        if worst != v:
            raise SolverError("maximin vertex does not attain the security level")
    vertices = tuple(MixedStrategy(player, w) for w in verts)
    return SolutionFace(player, "maximin", v, vertices)


def minimax_face(g: Game, player: int, value: Rational | None = None) -> SolutionFace:
    """All extreme strategies of the player that cap the opponent's best reply
    at the opponent's security level."""
    opponent = 2 if player == 1 else 1
    v = security_level(g, opponent) if value is None else value
    # rows = this player's actions, cols = opponent's actions, entries =
    # the OPPONENT's payoff.
    if player == 1:
        b = g.payoff_matrix(2)
        capped = b
    else:
        a = g.payoff_matrix(1)
        capped = [[a[i][j] for i in range(g.m)] for j in range(g.n)]
    verts = _simplex_face_vertices(capped, "<=", v)
    if not verts:
        raise SolverError(f"empty minimax face for player {player}")
    for w in verts:
        best = max(
            sum((w[a] * capped[a][b] for a in range(len(capped)) if w[a] != 0), ZERO)
            for b in range(len(capped[0]))
        )
        if best != v:
            raise SolverError("minimax vertex does not enforce the cap exactly")
    vertices = tuple(MixedStrategy(player, w) for w in verts)
    return SolutionFace(player, "minimax", v, vertices)


def nash_guarantee(g: Game, player: int, s: MixedStrategy) -> Rational:
    """Worst-case payoff of a strategy over the opponent's pure actions."""
    if s.owner != player:
        raise GameStructureError("strategy owned by the wrong player")
    own = _own_matrix(g, player)
    if len(s.weights) != len(own):
        raise GameStructureError("strategy does not fit the game")
    return min(
        sum((s.weights[a] * own[a][b] for a in range(len(own)) if s.weights[a] != 0), ZERO)
        for b in range(len(own[0]))
    )


# ---------------------------------------------------------------------------
# Nash equilibrium enumeration


def _mutual_best_response(a_mat, b_mat, x, y):
    m, n = len(a_mat), len(b_mat[0])
    against_y = [
        sum((a_mat[i][j] * y[j] for j in range(n) if y[j] != 0), ZERO) for i in range(m)
    ]
    against_x = [
        sum((b_mat[i][j] * x[i] for i in range(m) if x[i] != 0), ZERO) for j in range(n)
    ]
    val1 = sum((x[i] * against_y[i] for i in range(m) if x[i] != 0), ZERO)
    val2 = sum((y[j] * against_x[j] for j in range(n) if y[j] != 0), ZERO)
    return val1 == max(against_y) and val2 == max(against_x)


def is_equilibrium(g: Game, s1: MixedStrategy, s2: MixedStrategy) -> bool:
    """Exact mutual-best-response test."""
    return _mutual_best_response(
        g.payoff_matrix(1), g.payoff_matrix(2), s1.weights, s2.weights
    )


def _iterated_strict_dominance(a_mat, b_mat):
    """Indices surviving iterated elimination of pure strategies strictly
    dominated by pure strategies (preserves the equilibrium set exactly)."""
    rows = list(range(len(a_mat)))
    cols = list(range(len(b_mat[0])))
    changed = True
    while changed:
        changed = False
        for r in rows:
            if any(
                all(a_mat[r2][c] > a_mat[r][c] for c in cols) for r2 in rows if r2 != r
            ):
                rows.remove(r)
                changed = True
                break
        if changed:
            continue
        for c in cols:
            if any(
                all(b_mat[r][c2] > b_mat[r][c] for r in rows) for c2 in cols if c2 != c
            ):
                cols.remove(c)
                changed = True
                break
    return rows, cols


def _indifference_solution(p_mat, ind, sup):
    """Solve for a distribution over ``sup`` equalizing rows ``ind`` of p_mat.

    Returns ``(status, dist, level, tie)``: status "ok" (dist is full-length
    with zeros off-support, level is the common payoff, tie reports an
    outside row achieving the same level), "none", "zero" (a support weight
    solved to 0), or "under" (system underdetermined).
    """
    k = len(sup)
    rows = [[ONE] * k + [ZERO]]
    rhs = [ONE]
    for a in ind:
        rows.append([p_mat[a][b] for b in sup] + [-ONE])
        rhs.append(ZERO)
    status, sol = solve_system(rows, rhs)
    if status == "underdetermined":
        return ("under", None, None, False)
    if status == "inconsistent":
        return ("none", None, None, False)
    dist_sup = sol[:k]
    level = sol[k]
    if any(v < 0 for v in dist_sup):
        return ("none", None, None, False)
    if any(v == 0 for v in dist_sup):
        return ("zero", None, None, False)
    width = len(p_mat[0])
    full = [ZERO] * width
    for b, v in zip(sup, dist_sup):
        full[b] = v
    tie = False
    ind_set = set(ind)
    for a in range(len(p_mat)):
        if a in ind_set:
            continue
        payoff = sum((p_mat[a][b] * full[b] for b in sup), ZERO)
        if payoff > level:
            return ("none", None, None, False)
        if payoff == level:
            tie = True
    return ("ok", tuple(full), level, tie)


def _equal_support_enumeration(a_mat, b_mat):
    """Fast path: sweep equal-size support pairs (complete when nondegenerate)."""
    m, n = len(a_mat), len(a_mat[0])
    bt = [[b_mat[i][j] for i in range(m)] for j in range(n)]
    found = []
    degenerate = False
    for k in range(1, min(m, n) + 1):
        for s1 in combinations(range(m), k):
            for s2 in combinations(range(n), k):
                status_y, y, _, tie_y = _indifference_solution(a_mat, s1, s2)
                if status_y in ("under", "zero"):
                    degenerate = True
                    continue
                if status_y == "none":
                    continue
                status_x, x, _, tie_x = _indifference_solution(bt, s2, s1)
                if status_x in ("under", "zero"):
                    degenerate = True
                    continue
                if status_x == "none":
                    continue
                if tie_y or tie_x:
                    degenerate = True
                found.append((x, y))
    if not found:
        # every nondegenerate game has an equal-support equilibrium
        degenerate = True
    return found, degenerate


def _best_response_polytope_vertices(rows_mat):
    """Nonzero vertices of ``{z >= 0 : rows_mat @ z <= 1}`` with all entries
    of rows_mat positive; returned with their tight-row index sets."""
    nrows = len(rows_mat)
    dim = len(rows_mat[0])
    ineqs = [
        (tuple(-ONE if i == k else ZERO for i in range(dim)), ZERO) for k in range(dim)
    ]
    for r in range(nrows):
        ineqs.append((tuple(rows_mat[r]), ONE))
    out = []
    for vert in polytope_vertices(dim, [], ineqs):
        if all(v == 0 for v in vert):
            continue
        support = frozenset(i for i, v in enumerate(vert) if v > 0)
        tight = frozenset(
            r
            for r in range(nrows)
            if sum((rows_mat[r][i] * vert[i] for i in support), ZERO) == 1
        )
        out.append((vert, support, tight))
    return out


def _vertex_pair_enumeration(a_mat, b_mat):
    """Complete enumeration of extreme equilibria via the two best-response
    polytopes; sound for degenerate games."""
    m, n = len(a_mat), len(a_mat[0])
    shift_a = ONE - min(min(row) for row in a_mat)
    shift_b = ONE - min(min(row) for row in b_mat)
    a_pos = [[a_mat[i][j] + shift_a for j in range(n)] for i in range(m)]
    bt_pos = [[b_mat[i][j] + shift_b for i in range(m)] for j in range(n)]
    q_verts = _best_response_polytope_vertices(a_pos)  # y-space, rows = p1 actions
    p_verts = _best_response_polytope_vertices(bt_pos)  # x-space, rows = p2 actions
    found = []
    for x, supp_x, tight_x in p_verts:
        sum_x = sum(x, ZERO)
        for y, supp_y, tight_y in q_verts:
            if supp_x <= tight_y and supp_y <= tight_x:
                sum_y = sum(y, ZERO)
                found.append(
                    (
                        tuple(v / sum_x for v in x),
                        tuple(v / sum_y for v in y),
                    )
                )
    return found


def _maximal_product_groups(edge, nx, ny):
    """Maximal bicliques of the equilibrium relation, as (x-ids, y-ids) pairs."""
    base = []
    for j in range(ny):
        ext = frozenset(i for i in range(nx) if edge[i][j])
        if ext:
            base.append(ext)
    extents = set(base)
    work = list(base)
    while work:
        current = work.pop()
        for other in base:
            meet = current & other
            if meet and meet not in extents:
                extents.add(meet)
                work.append(meet)
    groups = set()
    for ext in extents:
        intent = tuple(j for j in range(ny) if all(edge[i][j] for i in ext))
        groups.add((tuple(sorted(ext)), intent))
    return sorted(groups)


def nash_equilibria(g: Game) -> EquilibriumSet:
    """All extreme Nash equilibria, grouped into maximal Nash subsets.

    Strictly dominated pure strategies are removed first (this preserves the
    equilibrium set).  Equal-size support enumeration covers nondegenerate
    games; any degeneracy signal (underdetermined or boundary indifference
    system, an unused pure best reply, or no equal-support equilibrium)
    switches to best-response-polytope vertex pairing.  Every returned
    profile is re-verified by the mutual-best-response test.
    """
    a_full = g.payoff_matrix(1)
    b_full = g.payoff_matrix(2)
    rows, cols = _iterated_strict_dominance(a_full, b_full)
    a_red = [[a_full[i][j] for j in cols] for i in rows]
    b_red = [[b_full[i][j] for j in cols] for i in rows]
    found, degenerate = _equal_support_enumeration(a_red, b_red)
    if degenerate:
        found = _vertex_pair_enumeration(a_red, b_red)

    profiles = set()
    for x_red, y_red in found:
        x = [ZERO] * g.m
        for idx, i in enumerate(rows):
            x[i] = x_red[idx]
        y = [ZERO] * g.n
        for idx, j in enumerate(cols):
            y[j] = y_red[idx]
        profiles.add((tuple(x), tuple(y)))
    if not profiles:
        raise SolverError("no equilibrium found; existence is guaranteed")
    for x, y in profiles:
        if not _mutual_best_response(a_full, b_full, x, y):
            raise SolverError("enumerated profile failed the best-response test")

    ordered = sorted(profiles)
    xs = sorted({x for x, _ in ordered})
    ys = sorted({y for _, y in ordered})
    x_id = {x: i for i, x in enumerate(xs)}
    y_id = {y: j for j, y in enumerate(ys)}
    edge = [[False] * len(ys) for _ in xs]
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            edge[i][j] = _mutual_best_response(a_full, b_full, x, y)
    for x, y in ordered:
        if not edge[x_id[x]][y_id[y]]:
            raise SolverError("equilibrium missing from the interchange relation")
    groups = _maximal_product_groups(edge, len(xs), len(ys))
    if any(len(gx) > 1 or len(gy) > 1 for gx, gy in groups):
        degenerate = True

    extremes = tuple(
        Profile(MixedStrategy(1, x), MixedStrategy(2, y)) for x, y in ordered
    )
    components = tuple(
        NashComponent(
            tuple(MixedStrategy(1, xs[i]) for i in gx),
            tuple(MixedStrategy(2, ys[j]) for j in gy),
        )
        for gx, gy in groups
    )
    return EquilibriumSet(extremes, components, degenerate)
