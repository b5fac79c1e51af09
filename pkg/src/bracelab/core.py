"""Finite left braces given by Cayley tables.

Elements are the indices ``0..n-1`` and ``0`` is the identity of both groups.
A :class:`FiniteBrace` should only be obtained through :func:`validate_brace`
or through constructions that preserve the axioms (direct sums, quotients,
the enumerators).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .config import caps
from .errors import BraceAxiomViolated, NotAbelian, NotAGroup, TableShapeError

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteBrace:
    add_table: Table
    mul_table: Table
    name: str | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.add_table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def lam(self, a: int, b: int) -> int:
        """The lambda action ``-a + ab``."""
        return self.lambda_table[a][b]

    def star(self, a: int, b: int) -> int:
        """``ab - a - b``, i.e. ``lam(a, b) - b``."""
        return self.star_table[a][b]

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.add_table)

    @cached_property
    def inv_table(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.mul_table)

    @cached_property
    def lambda_table(self) -> Table:
        add, neg = self.add_table, self.neg_table
        return tuple(tuple(add[neg[a]][ab] for ab in self.mul_table[a]) for a in self.elements)

    @cached_property
    def star_table(self) -> Table:
        add, neg = self.add_table, self.neg_table
        return tuple(
            tuple(add[lab][neg[b]] for b, lab in enumerate(self.lambda_table[a]))
            for a in self.elements
        )

    def is_abelian(self) -> bool:
        return self.add_table == self.mul_table

    def renamed(self, name: str | None) -> FiniteBrace:
        return FiniteBrace(self.add_table, self.mul_table, name)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<FiniteBrace{label} order={self.order}>"


def is_abelian(A: FiniteBrace) -> bool:
    return A.is_abelian()


def _as_array(table: Sequence[Sequence[int]], which: str) -> np.ndarray:
    try:
        arr = np.array([list(row) for row in table], dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise TableShapeError(f"{which} table is not a rectangular integer table") from exc
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise TableShapeError(f"{which} table must be a non-empty square table, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise TableShapeError(f"{which} table has entries outside 0..{n - 1}")
    return arr


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(v) for v in hits[0])


def _magma_closure(T: np.ndarray, members: np.ndarray) -> np.ndarray:
    members = members.copy()
    while True:
        idx = np.flatnonzero(members)
        produced = np.zeros_like(members)
        produced[T[np.ix_(idx, idx)].ravel()] = True
        grown = members | produced
        if grown.sum() == members.sum():
            return members
        members = grown


def generators(T: np.ndarray) -> list[int]:
    """Greedy generating set of the magma ``T`` (smallest indices first)."""
    n = T.shape[0]
    span = np.zeros(n, dtype=bool)
    span[0] = True
    gens = []
    for x in range(n):
        if not span[x]:
            gens.append(x)
            span[x] = True
            span = _magma_closure(T, span)
    return gens


def _associativity_witness(T: np.ndarray, exhaustive: bool) -> tuple[int, int, int] | None:
    n = T.shape[0]
    if exhaustive:
        for a in range(n):
            w = _first(T[T[a]] != T[a][T])
            if w is not None:
                return (a, w[0], w[1])
        return None
    # Light's test: checking the middle slot against a generating set suffices.
    for g in generators(T):
        w = _first(T[T[:, g]] != T[:, T[g]])
        if w is not None:
            return (w[0], g, w[1])
    return None


def _check_group(T: np.ndarray, which: str, exhaustive: bool) -> None:
    n = T.shape[0]
    ident = np.arange(n)
    w = _first((T[0] != ident) | (T[:, 0] != ident))
    if w is not None:
        raise NotAGroup(which, w, "0 is not a two-sided identity")
    two_sided = (T == 0) & (T.T == 0)
    missing = np.flatnonzero(~two_sided.any(axis=1))
    if missing.size:
        raise NotAGroup(which, (int(missing[0]),), "element has no inverse")
    w = _associativity_witness(T, exhaustive)
    if w is not None:
        raise NotAGroup(which, w, "not associative")


def _brace_axiom_witness(add: np.ndarray, mul: np.ndarray, exhaustive: bool) -> tuple[int, int, int] | None:
    n = add.shape[0]
    neg = np.argmax(add == 0, axis=1)
    if exhaustive:
        for a in range(n):
            row = mul[a]
            lhs = row[add]
            rhs = add[add[row[:, None], row[None, :]], neg[a]]
            w = _first(lhs != rhs)
            if w is not None:
                return (a, w[0], w[1])
        return None
    gens = generators(add)
    for a in range(n):
        lam = add[neg[a], mul[a]]
        for g in gens:
            bad = np.flatnonzero(lam[add[:, g]] != add[lam, lam[g]])
            if bad.size:
                return (a, int(bad[0]), g)
    return None


def validate_brace(
    add_table: Sequence[Sequence[int]],
    mul_table: Sequence[Sequence[int]],
    name: str | None = None,
    exhaustive_cap: int | None = None,
) -> FiniteBrace:
    """Check every brace axiom and return the validated brace.

    Raises the first failure found, in this order: shape, additive group
    (identity, inverses, associativity, commutativity), multiplicative group,
    brace axiom. Witnesses are lexicographically first among the triples the
    check looks at. Above ``exhaustive_cap`` the associativity and brace-axiom
    checks only range over a generating set, so witnesses then contain a
    generator in the middle (associativity) or last (brace axiom) slot.
    """
    add = _as_array(add_table, "add")
    mul = _as_array(mul_table, "mul")
    if add.shape != mul.shape:
        raise TableShapeError(f"table shapes differ: {add.shape} vs {mul.shape}")
    cap = caps().validate_exhaustive if exhaustive_cap is None else exhaustive_cap
    exhaustive = add.shape[0] <= cap

    _check_group(add, "add", exhaustive)
    w = _first(add != add.T)
    if w is not None:
        raise NotAbelian((w[0], w[1]))
    _check_group(mul, "mul", exhaustive)
    w = _brace_axiom_witness(add, mul, exhaustive)
    if w is not None:
        raise BraceAxiomViolated(w)
    return FiniteBrace(_freeze(add), _freeze(mul), name)


def _freeze(arr: np.ndarray) -> Table:
    return tuple(tuple(int(v) for v in row) for row in arr)


def direct_sum(A: FiniteBrace, B: FiniteBrace, name: str | None = None) -> FiniteBrace:
    """Componentwise brace on pairs; ``(i, j)`` is stored at index ``i*|B| + j``."""
    m = B.order

    def combine(ta: Table, tb: Table) -> Table:
        return tuple(
            tuple(ta[i][k] * m + tb[j][l] for k in A.elements for l in B.elements)
            for i in A.elements
            for j in B.elements
        )

    if name is None and A.name and B.name:
        name = f"{A.name}+{B.name}"
    return FiniteBrace(combine(A.add_table, B.add_table), combine(A.mul_table, B.mul_table), name)


def pair_index(B: FiniteBrace, i: int, j: int) -> int:
    """Index of ``(i, j)`` in ``direct_sum(A, B)``."""
    return i * B.order + j


def split_index(B: FiniteBrace, x: int) -> tuple[int, int]:
    return divmod(x, B.order)
