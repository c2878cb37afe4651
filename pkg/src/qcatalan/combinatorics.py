"""Lattice-path and tableau models.

Rational Dyck paths (N/E words staying weakly above the diagonal of an
m x n rectangle), the area statistic, the square-case bijection to two-row
standard Young tableaux, and the coarea / bounce / major-index statistics
whose distributions over all paths reproduce the q-Catalan polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from qcatalan.laurent import LaurentPoly
from qcatalan.qseries import q_catalan

N_STEP = "N"
E_STEP = "E"


@dataclass(frozen=True)
class DyckPath:
    """N/E word from (0,0) to (m,n) staying weakly above y = n*x/m."""

    steps: tuple[str, ...]
    m: int
    n: int

    def __post_init__(self):
        if len(self.steps) != self.m + self.n:
            raise ValueError("step count must be m + n")
        x = y = 0
        for s in self.steps:
            if s == N_STEP:
                y += 1
            elif s == E_STEP:
                x += 1
                if self.m * y < self.n * x:
                    raise ValueError("path dips below the diagonal")
            else:
                raise ValueError(f"bad step {s!r}")
        if x != self.m or y != self.n:
            raise ValueError("step multiset must be m East and n North")

    def word(self) -> str:
        return "".join(self.steps)


@dataclass(frozen=True)
class TwoRowSYT:
    """Standard Young tableau of shape (n, n) as two increasing rows."""

    row1: tuple[int, ...]
    row2: tuple[int, ...]

    def __post_init__(self):
        n = len(self.row1)
        if len(self.row2) != n:
            raise ValueError("rows must have equal length")
        if sorted(self.row1 + self.row2) != list(range(1, 2 * n + 1)):
            raise ValueError("entries must be exactly 1..2n")
        if any(self.row1[j] >= self.row2[j] for j in range(n)):
            raise ValueError("columns must increase downward")

    @property
    def n(self) -> int:
        return len(self.row1)


@dataclass(frozen=True)
class RankTableau:
    row1: tuple[int, ...]
    row2: tuple[int, ...]


def enumerate_paths(m: int, n: int):
    """All Dyck paths of the m x n rectangle, lexicographic with N < E."""
    if m < 1 or n < 1:
        raise ValueError("enumerate_paths needs m, n >= 1")
    word: list[str] = []

    def rec(x, y):
        if x == m and y == n:
            yield DyckPath(tuple(word), m, n)
            return
        if y < n:
            word.append(N_STEP)
            yield from rec(x, y + 1)
            word.pop()
        if x < m and m * y >= n * (x + 1):
            word.append(E_STEP)
            yield from rec(x + 1, y)
            word.pop()

    yield from rec(0, 0)


def area(d: DyckPath) -> int:
    """Lattice cells lying fully below the path and fully above the diagonal."""
    total = 0
    y = 0
    x = 0
    for s in d.steps:
        if s == N_STEP:
            y += 1
        else:
            # cells (x, j) for j up to the path height, above the diagonal
            lowest = -(-d.n * (x + 1) // d.m)  # ceil(n(x+1)/m)
            if y > lowest:
                total += y - lowest
            x += 1
    return total


def path_to_syt(d: DyckPath) -> TwoRowSYT:
    """Square-case bijection: step index i joins row 1 on N, row 2 on E."""
    if d.m != d.n:
        raise ValueError("tableau conversion needs the square case m = n")
    row1 = tuple(i for i, s in enumerate(d.steps, start=1) if s == N_STEP)
    row2 = tuple(i for i, s in enumerate(d.steps, start=1) if s == E_STEP)
    return TwoRowSYT(row1, row2)


def coarea(t: TwoRowSYT) -> int:
    """Sum of the first-row entries minus n(n+1)/2."""
    n = t.n
    return sum(t.row1) - n * (n + 1) // 2


def rank_tableau(t: TwoRowSYT) -> RankTableau:
    """Ranks: r(1) = 0; copy from the predecessor along row 1; one more
    than the entry directly above for row-2 cells."""
    n = t.n
    col1 = {v: j for j, v in enumerate(t.row1)}
    col2 = {v: j for j, v in enumerate(t.row2)}
    rank = {}
    for v in range(1, 2 * n + 1):
        if v == 1:
            rank[v] = 0
        elif v in col1:
            rank[v] = rank[v - 1]
        else:
            rank[v] = rank[t.row1[col2[v]]] + 1
    return RankTableau(
        tuple(rank[v] for v in t.row1), tuple(rank[v] for v in t.row2)
    )


def bounce(t: TwoRowSYT) -> int:
    """Sum of the first-row ranks."""
    return sum(rank_tableau(t).row1)


def maj(t: TwoRowSYT) -> int:
    """Major index: sum of entries i whose successor sits strictly left."""
    n = t.n
    col = {}
    for j, v in enumerate(t.row1):
        col[v] = j
    for j, v in enumerate(t.row2):
        col[v] = j
    return sum(i for i in range(1, 2 * n) if col[i + 1] < col[i])


def path_maj(d: DyckPath) -> int:
    """Square-case path major index, defined through the tableau model."""
    return maj(path_to_syt(d))


def statistic_polynomial(n: int, stat: str) -> LaurentPoly:
    """Distribution of a statistic over all square-case paths.

    stat is 'maj' or 'coarea_plus_bounce'; both distributions equal the
    q-Catalan polynomial.
    """
    if n < 1:
        raise ValueError("statistic_polynomial needs n >= 1")
    counts: dict[int, int] = {}
    for d in enumerate_paths(n, n):
        t = path_to_syt(d)
        if stat == "maj":
            v = maj(t)
        elif stat == "coarea_plus_bounce":
            v = coarea(t) + bounce(t)
        else:
            raise ValueError(f"unknown statistic {stat!r}")
        counts[v] = counts.get(v, 0) + 1
    return LaurentPoly(counts)


def area_polynomial(m: int, n: int) -> LaurentPoly:
    counts: dict[int, int] = {}
    for d in enumerate_paths(m, n):
        v = area(d)
        counts[v] = counts.get(v, 0) + 1
    return LaurentPoly(counts)


def figure_table(n: int) -> str:
    """Plain-text reproduction of the tableau/statistics tables.

    One block per path in enumeration order: the tableau, its rank
    tableau, and the coarea / bounce / maj values, followed by the two
    distribution lines.
    """
    if not 1 <= n <= 6:
        raise ValueError("figure table supports 1 <= n <= 6")
    lines = []
    paths = list(enumerate_paths(n, n))
    lines.append(f"two-row tableaux for the {n} x {n} square ({len(paths)} paths)")
    lines.append("")
    for d in paths:
        t = path_to_syt(d)
        r = rank_tableau(t)
        lines.append(f"path    : {d.word()}")
        lines.append(
            "tableau : "
            + " ".join(map(str, t.row1))
            + " / "
            + " ".join(map(str, t.row2))
        )
        lines.append(
            "ranks   : "
            + " ".join(map(str, r.row1))
            + " / "
            + " ".join(map(str, r.row2))
        )
        cb = coarea(t) + bounce(t)
        lines.append(
            f"coarea={coarea(t)}  bounce={bounce(t)}  maj={maj(t)}"
            f"  q^(coarea+bounce)=q^{cb}"
        )
        lines.append("")
    dist_cb = statistic_polynomial(n, "coarea_plus_bounce")
    dist_maj = statistic_polynomial(n, "maj")
    cn = q_catalan(n)
    lines.append(f"coarea+bounce distribution : {dist_cb}")
    lines.append(f"maj distribution           : {dist_maj}")
    lines.append(f"q-Catalan polynomial       : {cn}")
    return "\n".join(lines) + "\n"
