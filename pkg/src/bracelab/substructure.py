"""Subbraces, ideals, quotients and generated substructures.

Element subsets are handled internally as Python int bitmasks (bit ``i`` set
means element ``i`` is present) and handed back as frozensets or as
:class:`SubBrace` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .config import caps
from .core import FiniteBrace, Table
from .errors import NotAnIdeal, NotASubbrace, OrderCapExceeded


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def format_set(elements: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(elements)) + "}"


@dataclass(frozen=True)
class SubBrace:
    owner: FiniteBrace
    mask: int

    @property
    def members(self) -> tuple[int, ...]:
        return from_mask(self.mask)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self):
        return iter(self.members)

    def __str__(self) -> str:
        return format_set(self.members)


@dataclass(frozen=True)
class IdealReport:
    """``witness`` is ``(a, b, a*b)`` with one of ``a, b`` in the subbrace
    and the star product outside it."""

    is_ideal: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.is_ideal


@dataclass(frozen=True)
class DedekindReport:
    is_dedekind: bool
    witness: SubBrace | None = None
    ideal_report: IdealReport | None = None

    def __bool__(self) -> bool:
        return self.is_dedekind


def _span_mask(tables: Iterable[Table], seed_mask: int) -> int:
    """Smallest mask containing ``seed_mask | {0}`` closed under every table.

    A finite subset of a group closed under the product is a subgroup, so
    closing under the group laws alone also gives closure under inverses.
    """
    tables = list(tables)
    mask = seed_mask | 1
    frontier = from_mask(mask)
    while frontier:
        current = from_mask(mask)
        new = 0
        for x in frontier:
            for T in tables:
                row = T[x]
                for y in current:
                    z = row[y]
                    if not mask >> z & 1:
                        new |= 1 << z
                    z = T[y][x]
                    if not mask >> z & 1:
                        new |= 1 << z
        mask |= new
        frontier = from_mask(new)
    return mask


def additive_span(A: FiniteBrace, seed: Iterable[int]) -> frozenset[int]:
    return frozenset(from_mask(_span_mask([A.add_table], to_mask(seed))))


def multiplicative_span(A: FiniteBrace, seed: Iterable[int]) -> frozenset[int]:
    return frozenset(from_mask(_span_mask([A.mul_table], to_mask(seed))))


def _closure_mask(A: FiniteBrace, seed_mask: int) -> int:
    # Alternate the two group closures until neither adds anything.
    mask = seed_mask | 1
    while True:
        grown = _span_mask([A.mul_table], _span_mask([A.add_table], mask))
        if grown == mask:
            return mask
        mask = grown


def closure(A: FiniteBrace, seed: Iterable[int]) -> SubBrace:
    """The subbrace generated by ``seed``."""
    return SubBrace(A, _closure_mask(A, to_mask(seed)))


def _is_closed(T: Table, members: tuple[int, ...], mask: int) -> bool:
    for x in members:
        row = T[x]
        for y in members:
            if not mask >> row[y] & 1:
                return False
    return True


def is_subbrace(A: FiniteBrace, elements: Iterable[int]) -> bool:
    members = tuple(sorted(set(elements)))
    if not members or members[0] != 0:
        return False
    mask = to_mask(members)
    return _is_closed(A.add_table, members, mask) and _is_closed(A.mul_table, members, mask)


def subbrace(A: FiniteBrace, elements: Iterable[int]) -> SubBrace:
    """Wrap ``elements`` as a SubBrace, raising NotASubbrace if not closed."""
    elements = list(elements)
    if any(not 0 <= x < A.order for x in elements):
        raise NotASubbrace(f"{format_set(elements)} has elements outside 0..{A.order - 1}")
    if not is_subbrace(A, elements):
        raise NotASubbrace(f"{format_set(elements)} is not a subbrace")
    return SubBrace(A, to_mask(elements))


def _as_subbrace(A: FiniteBrace, S: SubBrace | Iterable[int]) -> SubBrace:
    if isinstance(S, SubBrace):
        if S.owner != A:
            raise NotASubbrace("subbrace belongs to a different brace")
        return S
    return subbrace(A, S)


def _check_cap(A: FiniteBrace, cap: int | None) -> None:
    cap = caps().subbraces if cap is None else cap
    if A.order > cap:
        raise OrderCapExceeded(A.order, cap, "subbrace enumeration")


def additive_subgroups(A: FiniteBrace) -> list[int]:
    """Masks of all subgroups of ``(A, +)``."""
    found = {1}
    todo = [1]
    full = (1 << A.order) - 1
    while todo:
        H = todo.pop()
        rest = full & ~H
        for x in from_mask(rest):
            K = _span_mask([A.add_table], H | 1 << x)
            if K not in found:
                found.add(K)
                todo.append(K)
    return sorted(found)


def _subbraces_lattice(A: FiniteBrace) -> set[int]:
    out = set()
    for H in additive_subgroups(A):
        if _is_closed(A.mul_table, from_mask(H), H):
            out.add(H)
    return out


def _subbraces_closure(A: FiniteBrace) -> set[int]:
    start = _closure_mask(A, 0)
    found = {start}
    todo = [start]
    full = (1 << A.order) - 1
    while todo:
        S = todo.pop()
        for x in from_mask(full & ~S):
            T = _closure_mask(A, S | 1 << x)
            if T not in found:
                found.add(T)
                todo.append(T)
    return found


def enumerate_subbraces(A: FiniteBrace, strategy: str = "lattice", cap: int | None = None) -> list[SubBrace]:
    """All subbraces of ``A``, ascending by size then lexicographically.

    ``strategy="lattice"`` filters the additive subgroup lattice by
    multiplicative closure; ``strategy="closure"`` grows subbraces one
    generator at a time from ``{0}``. Both return the same list.
    """
    _check_cap(A, cap)
    if strategy == "lattice":
        masks = _subbraces_lattice(A)
    elif strategy == "closure":
        masks = _subbraces_closure(A)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return sorted((SubBrace(A, m) for m in masks), key=SubBrace.sort_key)


def is_ideal(A: FiniteBrace, S: SubBrace | Iterable[int]) -> IdealReport:
    S = _as_subbrace(A, S)
    mask = S.mask
    st = A.star_table
    for a in A.elements:
        a_in = a in S
        row = st[a]
        for b in A.elements:
            if (a_in or mask >> b & 1) and not mask >> row[b] & 1:
                return IdealReport(False, (a, b, row[b]))
    return IdealReport(True)


def is_dedekind(A: FiniteBrace, cap: int | None = None) -> DedekindReport:
    for S in enumerate_subbraces(A, cap=cap):
        report = is_ideal(A, S)
        if not report:
            return DedekindReport(False, S, report)
    return DedekindReport(True)


def star_span(A: FiniteBrace, X: Iterable[int], Y: Iterable[int]) -> frozenset[int]:
    Y = list(Y)
    st = A.star_table
    return additive_span(A, {st[x][y] for x in X for y in Y})


@dataclass(frozen=True)
class Quotient:
    brace: FiniteBrace
    projection: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]

    def lift(self, elements: Iterable[int]) -> frozenset[int]:
        """Preimage of a set of quotient elements."""
        wanted = set(elements)
        return frozenset(a for a, c in enumerate(self.projection) if c in wanted)


def quotient(A: FiniteBrace, I: SubBrace | Iterable[int], name: str | None = None) -> Quotient:
    """Quotient brace ``A/I`` with cosets labelled by their least element."""
    I = _as_subbrace(A, I)
    report = is_ideal(A, I)
    if not report:
        raise NotAnIdeal(f"{I} is not an ideal: star{report.witness[:2]} = {report.witness[2]}")
    projection = [-1] * A.order
    cosets = []
    for a in A.elements:
        if projection[a] >= 0:
            continue
        coset = tuple(sorted(A.add(a, i) for i in I.members))
        for x in coset:
            projection[x] = len(cosets)
        cosets.append(coset)
    reps = [c[0] for c in cosets]

    def induced(T: Table) -> Table:
        return tuple(tuple(projection[T[x][y]] for y in reps) for x in reps)

    q = FiniteBrace(induced(A.add_table), induced(A.mul_table), name)
    return Quotient(q, tuple(projection), tuple(cosets))
