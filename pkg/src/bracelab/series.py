"""Left/right series, nil conditions, annihilators and the socle series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import FiniteBrace
from .substructure import quotient, star_span


@dataclass(frozen=True)
class SeriesChain:
    """A chain of element sets, cut at the first repeated term.

    Left and right chains descend from ``A``; the socle chain ascends from
    ``{0}``. The repeated term is stored only once.
    """

    kind: str
    terms: tuple[frozenset[int], ...]
    stabilized: bool = True

    @property
    def terminal(self) -> frozenset[int]:
        return self.terms[-1]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class NilpotencyReport:
    left_nilpotent: bool
    left_class: int | None
    right_nilpotent: bool
    right_class: int | None
    centrally_nilpotent: bool
    multipermutation_level: int | None


def _descending(A: FiniteBrace, kind: str) -> SeriesChain:
    whole = frozenset(A.elements)
    terms = [whole]
    while True:
        last = terms[-1]
        nxt = star_span(A, whole, last) if kind == "left" else star_span(A, last, whole)
        if nxt == last:
            break
        terms.append(nxt)
    return SeriesChain(kind, tuple(terms))


def left_series(A: FiniteBrace) -> SeriesChain:
    """``A^1 = A`` and ``A^(k+1) = A * A^k``."""
    return _descending(A, "left")


def right_series(A: FiniteBrace) -> SeriesChain:
    """``A^(1) = A`` and ``A^(k+1) = A^(k) * A``."""
    return _descending(A, "right")


def nilpotency_class(chain: SeriesChain) -> int | None:
    """Smallest ``k`` with ``k``-th term ``{0}`` (1-based), or None."""
    if chain.terminal != frozenset({0}):
        return None
    return len(chain.terms)


def is_m_right_nil(A: FiniteBrace, m: int) -> bool:
    """Every left-normed product ``(..((a*a)*a)..)*a`` with ``m`` factors vanishes."""
    if m < 1:
        raise ValueError("m must be at least 1")
    st = A.star_table
    for a in A.elements:
        x = a
        for _ in range(m - 1):
            x = st[x][a]
        if x != 0:
            return False
    return True


def is_m_left_nil(A: FiniteBrace, m: int) -> bool:
    """Every right-normed product ``a*(a*(..*(a*a)..))`` with ``m`` factors vanishes."""
    if m < 1:
        raise ValueError("m must be at least 1")
    st = A.star_table
    for a in A.elements:
        x = a
        for _ in range(m - 1):
            x = st[a][x]
        if x != 0:
            return False
    return True


def left_annihilator(A: FiniteBrace, S: Iterable[int]) -> frozenset[int]:
    S = list(S)
    st = A.star_table
    return frozenset(a for a in A.elements if all(st[a][x] == 0 for x in S))


def annihilator(A: FiniteBrace, S: Iterable[int]) -> frozenset[int]:
    S = list(S)
    add, mul = A.add_table, A.mul_table
    return frozenset(
        a for a in A.elements
        if all(mul[a][x] == add[a][x] == mul[x][a] for x in S)
    )


def socle(A: FiniteBrace) -> frozenset[int]:
    return left_annihilator(A, A.elements)


def centre(A: FiniteBrace) -> frozenset[int]:
    return annihilator(A, A.elements)


def socle_series(A: FiniteBrace) -> SeriesChain:
    """``Soc_0 = {0}`` and ``Soc_(k+1)/Soc_k = Soc(A/Soc_k)``."""
    terms = [frozenset({0})]
    while True:
        q = quotient(A, terms[-1])
        nxt = q.lift(socle(q.brace))
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return SeriesChain("socle", tuple(terms))


def multipermutation_level(A: FiniteBrace) -> int | None:
    """Smallest ``k`` with ``Soc_k(A) = A``; the order-1 brace has level 0."""
    chain = socle_series(A)
    if len(chain.terminal) != A.order:
        return None
    return len(chain.terms) - 1


def nilpotency_report(A: FiniteBrace) -> NilpotencyReport:
    left_class = nilpotency_class(left_series(A))
    right_class = nilpotency_class(right_series(A))
    level = multipermutation_level(A)
    if (right_class is None) != (level is None):
        raise RuntimeError(
            f"inconsistent analysis of {A!r}: right class {right_class}, multipermutation level {level}"
        )
    return NilpotencyReport(
        left_nilpotent=left_class is not None,
        left_class=left_class,
        right_nilpotent=right_class is not None,
        right_class=right_class,
        centrally_nilpotent=left_class is not None and right_class is not None,
        multipermutation_level=level,
    )
