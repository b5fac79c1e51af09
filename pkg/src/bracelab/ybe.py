"""Involutive non-degenerate set-theoretic solutions of the Yang-Baxter equation.

A solution on ``X = {0..n-1}`` is stored as two tables:
``lambda_maps[x][y] = lambda_x(y)`` and ``rho_maps[y][x] = rho_y(x)``, so that
``r(x, y) = (lambda_maps[x][y], rho_maps[y][x])``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import FiniteBrace, Table
from .errors import (
    BraidViolated,
    NotBijective,
    NotInvolutive,
    QuotientIllDefined,
    TableShapeError,
    ValidationError,
)


@dataclass(frozen=True)
class Solution:
    lambda_maps: Table
    rho_maps: Table
    checked: bool = field(default=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.lambda_maps)

    def r(self, x: int, y: int) -> tuple[int, int]:
        return self.lambda_maps[x][y], self.rho_maps[y][x]

    def __repr__(self) -> str:
        flag = "" if self.checked else " unchecked"
        return f"<Solution size={self.size}{flag}>"


@dataclass(frozen=True)
class RetractionStep:
    classes: tuple[tuple[int, ...], ...]
    projection: tuple[int, ...]
    quotient: Solution


def _as_square(maps: Sequence[Sequence[int]], size: int, which: str) -> np.ndarray:
    try:
        arr = np.array([list(row) for row in maps], dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise TableShapeError(f"{which} maps are not a rectangular integer table") from exc
    if arr.shape != (size, size):
        raise TableShapeError(f"{which} maps must have shape ({size}, {size}), got {arr.shape}")
    if arr.min() < 0 or arr.max() >= size:
        raise TableShapeError(f"{which} maps have entries outside 0..{size - 1}")
    return arr


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    return None if hits.size == 0 else tuple(int(v) for v in hits[0])


def validate_solution(
    size: int,
    lambda_maps: Sequence[Sequence[int]],
    rho_maps: Sequence[Sequence[int]],
) -> Solution:
    """Check non-degeneracy, involutivity and the braid relation, in that order."""
    if size < 1:
        raise ValidationError("a solution needs at least one point")
    L = _as_square(lambda_maps, size, "lambda")
    R = _as_square(rho_maps, size, "rho")
    ident = np.arange(size)
    for which, arr in (("lambda", L), ("rho", R)):
        for x in range(size):
            if not np.array_equal(np.sort(arr[x]), ident):
                raise NotBijective(which, x)

    X, Y = np.meshgrid(ident, ident, indexing="ij")
    u, v = L[X, Y], R[Y, X]
    w = _first((L[u, v] != X) | (R[v, u] != Y))
    if w is not None:
        raise NotInvolutive((w[0], w[1]))

    def r12(a, b, c):
        return L[a, b], R[b, a], c

    def r23(a, b, c):
        return a, L[b, c], R[c, b]

    grid = np.meshgrid(ident, ident, ident, indexing="ij")
    lhs = r12(*r23(*r12(*grid)))
    rhs = r23(*r12(*r23(*grid)))
    bad = (lhs[0] != rhs[0]) | (lhs[1] != rhs[1]) | (lhs[2] != rhs[2])
    w = _first(bad)
    if w is not None:
        raise BraidViolated((w[0], w[1], w[2]))

    return Solution(_freeze(L), _freeze(R), checked=True)


def _freeze(arr: np.ndarray) -> Table:
    return tuple(tuple(int(v) for v in row) for row in arr)


def twist(size: int) -> Solution:
    ident = tuple(range(size))
    return validate_solution(size, [ident] * size, [ident] * size)


def associated_solution(A: FiniteBrace) -> Solution:
    """``r(a, b) = (lambda_a(b), lambda^{-1}_{lambda_a(b)}(a))``."""
    lam, inv = A.lambda_table, A.inv_table
    rho = [[0] * A.order for _ in A.elements]
    for a in A.elements:
        for b in A.elements:
            rho[b][a] = lam[inv[lam[a][b]]][a]
    return validate_solution(A.order, lam, rho)


def is_twist(s: Solution) -> bool:
    ident = tuple(range(s.size))
    return all(row == ident for row in s.lambda_maps) and all(row == ident for row in s.rho_maps)


def has_diagonal_fixed_points(s: Solution) -> bool:
    return all(s.r(x, x) == (x, x) for x in range(s.size))


def retract(s: Solution) -> RetractionStep:
    """Identify points with equal lambda and rho maps.

    Classes are labelled by their least member and listed in that order.
    """
    groups: dict[tuple[tuple[int, ...], tuple[int, ...]], list[int]] = {}
    for x in range(s.size):
        groups.setdefault((s.lambda_maps[x], s.rho_maps[x]), []).append(x)
    classes = tuple(sorted(tuple(g) for g in groups.values()))
    projection = [0] * s.size
    for c, members in enumerate(classes):
        for x in members:
            projection[x] = c

    k = len(classes)
    lam = [[-1] * k for _ in range(k)]
    rho = [[-1] * k for _ in range(k)]
    for x in range(s.size):
        cx = projection[x]
        for y in range(s.size):
            cy = projection[y]
            lx, ry = s.r(x, y)
            for table, i, j, val in ((lam, cx, cy, projection[lx]), (rho, cy, cx, projection[ry])):
                if table[i][j] == -1:
                    table[i][j] = val
                elif table[i][j] != val:
                    raise QuotientIllDefined(f"retraction depends on representatives at (x,y)=({x},{y})")
    return RetractionStep(classes, tuple(projection), validate_solution(k, lam, rho))


def retraction_series(s: Solution) -> list[Solution]:
    """``[s, Ret(s), Ret^2(s), ...]`` up to the first step that does not shrink."""
    chain = [s]
    while chain[-1].size > 1:
        nxt = retract(chain[-1]).quotient
        if nxt.size == chain[-1].size:
            break
        chain.append(nxt)
    return chain


def multipermutation_level_solution(s: Solution) -> int | None:
    chain = retraction_series(s)
    if chain[-1].size != 1:
        return None
    return len(chain) - 1
