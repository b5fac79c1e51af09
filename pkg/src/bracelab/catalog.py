"""Standard constructions and the built-in catalog of named braces."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .core import FiniteBrace, Table, direct_sum, validate_brace


def abelian_group_table(factors: Sequence[int]) -> Table:
    """Addition table of ``Z/f1 x ... x Z/fk`` in mixed radix (first factor most significant)."""
    factors = list(factors) or [1]
    coords = list(product(*(range(f) for f in factors)))
    index = {c: i for i, c in enumerate(coords)}
    return tuple(
        tuple(index[tuple((x + y) % f for x, y, f in zip(a, b, factors))] for b in coords)
        for a in coords
    )


def cyclic_table(n: int) -> Table:
    return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))


def trivial_brace(add_table: Table, name: str | None = None) -> FiniteBrace:
    return validate_brace(add_table, add_table, name)


def negation_brace(n: int) -> FiniteBrace:
    """``a.b = a + (-1)^a b`` on ``Z/n`` for even ``n``."""
    if n % 2:
        raise ValueError("the negation brace needs an even modulus")
    mul = [[(a + (-b if a % 2 else b)) % n for b in range(n)] for a in range(n)]
    return validate_brace(cyclic_table(n), mul, f"neg-Z{n}")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    brace: FiniteBrace
    provenance: str  # built-in | enumerated | loaded


class Catalog:
    def __init__(self, entries: Sequence[CatalogEntry] = ()):
        self._entries: dict[str, CatalogEntry] = {}
        for e in entries:
            self.add(e)

    def add(self, entry: CatalogEntry) -> None:
        if entry.name in self._entries:
            raise ValueError(f"duplicate catalog name {entry.name!r}")
        self._entries[entry.name] = entry

    def __getitem__(self, name: str) -> FiniteBrace:
        return self._entries[name].brace

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def names(self) -> list[str]:
        return list(self._entries)

    def braces(self) -> list[FiniteBrace]:
        return [e.brace for e in self]


@lru_cache(maxsize=None)
def _builtin_braces() -> tuple[FiniteBrace, ...]:
    out = [trivial_brace(cyclic_table(n), f"trivial-Z{n}") for n in range(1, 9)]
    out.append(trivial_brace(abelian_group_table([2, 2]), "trivial-Klein"))
    out.append(trivial_brace(abelian_group_table([2, 4]), "trivial-Z2xZ4"))
    out.append(trivial_brace(abelian_group_table([2, 2, 2]), "trivial-Z2^3"))
    negs = {n: negation_brace(n) for n in (4, 6, 8)}
    out.extend(negs.values())
    z2 = out[1]
    sums = [
        (z2, z2),
        (negs[4], z2),
        (negs[6], z2),
        (negs[4], negs[4]),
        (negs[4], negs[6]),
    ]
    for a, b in sums:
        s = direct_sum(a, b)
        out.append(validate_brace(s.add_table, s.mul_table, s.name))
    return tuple(out)


def builtin_catalog() -> Catalog:
    return Catalog([CatalogEntry(b.name, b, "built-in") for b in _builtin_braces()])
