"""Census of strict symmetric 3x3 ordinal games.

A census game is player 1's payoff matrix, a 3x3 arrangement of the numbers
1..9 (player 2's matrix is the transpose).  Only pure strategies matter
here.  The census walks all 9! labeled games and divides by 6 at the end:
relabeling rows and columns simultaneously acts freely (all entries are
distinct), so every unlabeled game is counted exactly six times.  The walk
is a plain data-parallel fold over disjoint permutation blocks, and counts
merge by addition, so any worker count gives identical output.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations
from multiprocessing import get_context

from .game import GameError
from .rational import Rational, decimal_string

__all__ = [
    "PredicateUndefinedError",
    "OrdinalGame3",
    "PureRecord",
    "pure_analysis",
    "table2_predicates",
    "STAT_NAMES",
    "CensusReport",
    "run_census",
    "TOTAL_LABELED",
    "TOTAL_GAMES",
]

TOTAL_LABELED = 362_880  # 9!
TOTAL_GAMES = 60_480     # 9! / 6

STAT_NAMES = (
    "Maximin weakly dominates all NE pay-offs",
    "Maximin strictly dominates all NE pay-offs",
    "Minimax weakly dominates all NE pay-offs",
    "Minimax strictly dominates all NE pay-offs",
    "Some NE strictly dominates maximin profile",
    "Maximin guarantee weakly greater than all NE guarantees",
    "Maximin guarantee strictly greater than all NE guarantees",
    "Minimax guarantee weakly greater than all NE guarantees",
    "Minimax guarantee strictly greater than all NE guarantees",
)

COLUMN_NAMES = ("1 NE", "2 NE", "3 NE", "has NE")


class PredicateUndefinedError(GameError):
    """Raised when a statistic conditioned on pure equilibria is requested
    for a game that has none."""


@dataclass(frozen=True)
class OrdinalGame3:
    """Player 1's payoffs; entries must be a permutation of 1..9."""

    a: tuple

    def __post_init__(self):
        flat = [x for row in self.a for x in row]
        if len(self.a) != 3 or any(len(row) != 3 for row in self.a):
            raise GameError("ordinal game must be 3x3")
        if sorted(flat) != list(range(1, 10)):
            raise GameError("entries must be a permutation of 1..9")


@dataclass(frozen=True)
class PureRecord:
    """Pure-strategy facts of one census game."""

    pure_equilibria: tuple       # cells (i, j)
    equilibrium_payoffs: tuple   # (u1, u2) per cell
    maximin_row: int
    maximin_guarantee: int
    maximin_payoff: int          # diagonal payoff of the mutual maximin profile
    minimax_row: int
    minimax_guarantee: int
    minimax_payoff: int
    row_guarantees: tuple        # per-row worst case (the row minimum)


def pure_analysis(g: OrdinalGame3) -> PureRecord:
    """Pure equilibria, the unique pure maximin and minimax rows, and the
    guarantee of every row.

    A cell ``(i, j)`` is a pure equilibrium when ``a[i][j]`` tops its column
    and ``a[j][i]`` tops column ``i`` (the transpose game's best-response
    condition).  Row minima and column maxima are distinct entries, so the
    maximin row (best row minimum) and minimax row (lowest cap on the
    opponent, the column maximum) are unique.
    """
    a = g.a
    colmax = tuple(max(a[0][j], a[1][j], a[2][j]) for j in range(3))
    rowmin = tuple(min(row) for row in a)
    ne = tuple(
        (i, j)
        for i in range(3)
        for j in range(3)
        if a[i][j] == colmax[j] and a[j][i] == colmax[i]
    )
    m = max(range(3), key=lambda i: rowmin[i])
    mm = min(range(3), key=lambda i: colmax[i])
    return PureRecord(
        pure_equilibria=ne,
        equilibrium_payoffs=tuple((a[i][j], a[j][i]) for i, j in ne),
        maximin_row=m,
        maximin_guarantee=rowmin[m],
        maximin_payoff=a[m][m],
        minimax_row=mm,
        minimax_guarantee=rowmin[mm],
        minimax_payoff=a[mm][mm],
        row_guarantees=rowmin,
    )


def table2_predicates(g: OrdinalGame3) -> dict:
    """The nine per-game statistics, keyed by ``STAT_NAMES``.

    Defined only for games with at least one pure equilibrium.
    """
    rec = pure_analysis(g)
    if not rec.pure_equilibria:
        raise PredicateUndefinedError("statistics are conditioned on a pure equilibrium")
    flags = _predicate_flags(rec)
    return dict(zip(STAT_NAMES, flags))


def _predicate_flags(rec: PureRecord):
    d = rec.maximin_payoff
    c = rec.minimax_payoff
    gm = rec.maximin_guarantee
    gmm = rec.minimax_guarantee
    pays = rec.equilibrium_payoffs
    strategies = set()
    for i, j in rec.pure_equilibria:
        strategies.add(i)
        strategies.add(j)
    guarantees = [rec.row_guarantees[s] for s in strategies]
    return (
        all(d >= p and d >= q for p, q in pays),
        all(d > p and d > q for p, q in pays),
        all(c >= p and c >= q for p, q in pays),
        all(c > p and c > q for p, q in pays),
        any(p > d and q > d for p, q in pays),
        all(gm >= x for x in guarantees),
        all(gm > x for x in guarantees),
        all(gmm >= x for x in guarantees),
        all(gmm > x for x in guarantees),
    )


@dataclass(frozen=True)
class CensusReport:
    """Exact counts over the 60,480-game census.

    ``ne_counts[k]`` is the number of games with exactly ``k`` pure
    equilibria; ``stat_counts[name]`` maps each statistic to its counts per
    column (exactly 1, 2, 3 equilibria, and any).  Shares are exact
    rationals; the tables render them at two decimals, half-up.
    """

    total_games: int
    ne_counts: tuple
    stat_counts: dict

    @property
    def column_bases(self):
        has_ne = self.ne_counts[1] + self.ne_counts[2] + self.ne_counts[3]
        return (self.ne_counts[1], self.ne_counts[2], self.ne_counts[3], has_ne)

    def ne_share(self, k: int) -> Rational:
        return Rational(100 * self.ne_counts[k], self.total_games)

    def stat_share(self, name: str, column: int) -> Rational:
        return Rational(100 * self.stat_counts[name][column], self.column_bases[column])

    def table1_rows(self):
        """(count, share) per pure-equilibrium count 0..3."""
        return [
            (k, self.ne_counts[k], decimal_string(self.ne_share(k), 2))
            for k in range(len(self.ne_counts))
        ]

    def table2_rows(self):
        """(statistic, share per column) rendered at two decimals."""
        return [
            (
                name,
                tuple(decimal_string(self.stat_share(name, col), 2) for col in range(4)),
            )
            for name in STAT_NAMES
        ]


def _scan_block(first_value: int):
    """Fold one block (all labeled games whose top-left entry is fixed)."""
    ne_hist = [0, 0, 0, 0]
    stats = [[0, 0, 0, 0] for _ in STAT_NAMES]
    rest = [x for x in range(1, 10) if x != first_value]
    for p in permutations(rest):
        a0 = first_value
        a1, a2, a3, a4, a5, a6, a7, a8 = p
        # column maxima and row minima, unrolled for speed
        c0 = a0 if a0 > a3 else a3
        if a6 > c0:
            c0 = a6
        c1 = a1 if a1 > a4 else a4
        if a7 > c1:
            c1 = a7
        c2 = a2 if a2 > a5 else a5
        if a8 > c2:
            c2 = a8
        a = (a0, a1, a2, a3, a4, a5, a6, a7, a8)
        ne = []
        # (i, j) is pure NE iff a[3i+j] == colmax[j] and a[3j+i] == colmax[i];
        # each column holds at most one equilibrium (its unique maximum)
        cmax = (c0, c1, c2)
        for j in range(3):
            cj = cmax[j]
            i = 0 if a[j] == cj else (1 if a[3 + j] == cj else 2)
            if a[3 * j + i] == cmax[i]:
                ne.append((i, j))
        k = len(ne)
        ne_hist[k] += 1
        if k == 0:
            continue
        r0 = a0 if a0 < a1 else a1
        if a2 < r0:
            r0 = a2
        r1 = a3 if a3 < a4 else a4
        if a5 < r1:
            r1 = a5
        r2 = a6 if a6 < a7 else a7
        if a8 < r2:
            r2 = a8
        rowmin = (r0, r1, r2)
        m = 0 if r0 > r1 and r0 > r2 else (1 if r1 > r2 else 2)
        mm = 0 if c0 < c1 and c0 < c2 else (1 if c1 < c2 else 2)
        d = a[4 * m]
        c = a[4 * mm]
        gm = rowmin[m]
        gmm = rowmin[mm]
        pays = [(a[3 * i + j], a[3 * j + i]) for i, j in ne]
        strategies = set()
        for i, j in ne:
            strategies.add(i)
            strategies.add(j)
        guarantees = [rowmin[s] for s in strategies]
        flags = (
            all(d >= p and d >= q for p, q in pays),
            all(d > p and d > q for p, q in pays),
            all(c >= p and c >= q for p, q in pays),
            all(c > p and c > q for p, q in pays),
            any(p > d and q > d for p, q in pays),
            True,  # the maximin guarantee is the best guarantee by definition
            all(gm > x for x in guarantees),
            all(gmm >= x for x in guarantees),
            all(gmm > x for x in guarantees),
        )
        col = k - 1
        for r, flag in enumerate(flags):
            if flag:
                row = stats[r]
                row[col] += 1
                row[3] += 1
    return ne_hist, stats


def _merge(blocks):
    ne_hist = [0, 0, 0, 0]
    stats = [[0, 0, 0, 0] for _ in STAT_NAMES]
    for hist, block_stats in blocks:
        for k in range(4):
            ne_hist[k] += hist[k]
        for r in range(len(STAT_NAMES)):
            for c in range(4):
                stats[r][c] += block_stats[r][c]
    return ne_hist, stats


def run_census(threads: int = 1) -> CensusReport:
    """Walk all 362,880 labeled games and reduce to the 60,480 distinct ones.

    ``threads`` selects worker processes; the block partition and the
    additive merge make the result identical for every worker count.
    """
    firsts = list(range(1, 10))
    if threads > 1:
        ctx = get_context("fork" if os.name == "posix" else "spawn")
        with ctx.Pool(processes=min(threads, len(firsts))) as pool:
            blocks = pool.map(_scan_block, firsts)
    else:
        blocks = [_scan_block(v) for v in firsts]
    ne_hist, stats = _merge(blocks)
    if sum(ne_hist) != TOTAL_LABELED:
        raise AssertionError("census walk lost games")
    if any(x % 6 for x in ne_hist) or any(x % 6 for row in stats for x in row):
        raise AssertionError("labeled counts must be divisible by the orbit size 6")
    return CensusReport(
        total_games=TOTAL_GAMES,
        ne_counts=tuple(x // 6 for x in ne_hist),
        stat_counts={
            name: tuple(x // 6 for x in stats[r]) for r, name in enumerate(STAT_NAMES)
        },
    )
