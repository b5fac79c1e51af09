"""Enumerate all left braces of a given small order, up to table identity.

For every abelian group of order ``n`` (one canonical table per isomorphism
type) we list every multiplication table that makes it a left brace. Two
independent searches are provided and must agree:

``tables``  fills the multiplication table cell by cell, pruning with the
            Latin-square property, associativity and the brace axiom.
``lambda``  assigns an additive automorphism ``lambda_a`` to every element and
            propagates ``lambda_{a + lambda_a(b)} = lambda_a lambda_b``.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .catalog import Catalog, CatalogEntry, abelian_group_table
from .config import caps
from .core import FiniteBrace, Table, validate_brace
from .errors import OrderCapExceeded

STRATEGIES = ("tables", "lambda")


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(e: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = e if largest is None else largest
    if e == 0:
        yield ()
        return
    for first in range(min(e, largest), 0, -1):
        for rest in _partitions(e - first, first):
            yield (first,) + rest


def abelian_group_types(n: int) -> list[tuple[int, ...]]:
    """Cyclic factor orders (prime powers, ascending) of each abelian group of order ``n``."""
    if n == 1:
        return [(1,)]
    per_prime = [
        [[p**k for k in part] for part in _partitions(e)]
        for p, e in sorted(_factorize(n).items())
    ]
    return [tuple(sorted(sum(choice, []))) for choice in product(*per_prime)]


def group_label(factors: tuple[int, ...]) -> str:
    return "x".join(f"Z{f}" for f in factors)


def _automorphisms(factors: tuple[int, ...]) -> list[tuple[int, ...]]:
    coords = list(product(*(range(f) for f in factors)))
    index = {c: i for i, c in enumerate(coords)}
    k = len(factors)
    # the image of the i-th unit vector must be killed by the i-th factor order
    candidates = [
        [c for c in coords if all((factors[i] * x) % f == 0 for x, f in zip(c, factors))]
        for i in range(k)
    ]
    auts = []
    for images in product(*candidates):
        perm = tuple(
            index[tuple(sum(ci * img[j] for ci, img in zip(c, images)) % factors[j] for j in range(k))]
            for c in coords
        )
        if len(set(perm)) == len(perm):
            auts.append(perm)
    return sorted(auts)


def _lambda_strategy(factors: tuple[int, ...]) -> list[Table]:
    add = abelian_group_table(factors)
    n = len(add)
    auts = _automorphisms(factors)
    ident = tuple(range(n))
    found: list[Table] = []

    def propagate(lam: list) -> bool:
        changed = True
        while changed:
            changed = False
            known = [a for a in range(n) if lam[a] is not None]
            for a in known:
                la = lam[a]
                for b in known:
                    lb = lam[b]
                    c = add[a][la[b]]
                    need = tuple(la[x] for x in lb)
                    if lam[c] is None:
                        lam[c] = need
                        changed = True
                    elif lam[c] != need:
                        return False
                if changed:
                    break
        return True

    def search(lam: list) -> None:
        try:
            a = lam.index(None)
        except ValueError:
            found.append(tuple(tuple(add[x][lam[x][y]] for y in range(n)) for x in range(n)))
            return
        for phi in auts:
            trial = list(lam)
            trial[a] = phi
            if propagate(trial):
                search(trial)

    start: list = [None] * n
    start[0] = ident
    search(start)
    return found


def _tables_strategy(factors: tuple[int, ...]) -> list[Table]:
    add = abelian_group_table(factors)
    n = len(add)
    neg = [row.index(0) for row in add]
    M: list[list[int | None]] = [[None] * n for _ in range(n)]
    for x in range(n):
        M[0][x] = x
        M[x][0] = x
    row_used = [{x} for x in range(n)]
    col_used = [{x} for x in range(n)]
    row_used[0] = set(range(n))
    cells = [(a, b) for a in range(1, n) for b in range(1, n)]
    found: list[Table] = []

    def brace_ok(a: int, b: int) -> bool:
        Ma = M[a]
        for c in range(n):
            # (a, b, c): M[a][b+c] = M[a][b] + M[a][c] - a
            mc, md = Ma[c], Ma[add[b][c]]
            if mc is not None and md is not None and md != add[add[Ma[b]][mc]][neg[a]]:
                return False
            # (a, b - c, c) with b as the sum
            e = add[b][neg[c]]
            me = Ma[e]
            if mc is not None and me is not None and Ma[b] != add[add[me][mc]][neg[a]]:
                return False
        return True

    def assoc_ok(a: int, b: int) -> bool:
        v = M[a][b]
        for z in range(n):
            # cell as (x, y)
            q, s = M[v][z], M[b][z]
            if q is not None and s is not None:
                t = M[a][s]
                if t is not None and t != q:
                    return False
        for x in range(n):
            # cell as (y, z)
            t, p = M[x][v], M[x][a]
            if t is not None and p is not None:
                q = M[p][b]
                if q is not None and q != t:
                    return False
        for x in range(n):
            for y in range(n):
                if M[x][y] == a:
                    # cell as (xy, z) with z = b
                    s = M[y][b]
                    if s is not None:
                        t = M[x][s]
                        if t is not None and t != v:
                            return False
                if M[x][y] == b:
                    # cell as (x', yz) with x' = a, (y, z) = (x, y)
                    p = M[a][x]
                    if p is not None:
                        q = M[p][y]
                        if q is not None and q != v:
                            return False
        return True

    def search(k: int) -> None:
        if k == len(cells):
            found.append(tuple(tuple(row) for row in M))  # type: ignore[arg-type]
            return
        a, b = cells[k]
        for v in range(n):
            if v in row_used[a] or v in col_used[b]:
                continue
            M[a][b] = v
            row_used[a].add(v)
            col_used[b].add(v)
            if brace_ok(a, b) and assoc_ok(a, b):
                search(k + 1)
            row_used[a].discard(v)
            col_used[b].discard(v)
            M[a][b] = None

    search(0)
    return found


def enumerate_braces(n: int, strategy: str = "lambda", cap: int | None = None) -> list[FiniteBrace]:
    """Every left brace of order ``n`` on the canonical abelian group tables.

    Results are grouped by additive group (in :func:`abelian_group_types`
    order) and sorted by multiplication table within a group. Each result is
    re-validated before it is returned.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if n < 1:
        raise ValueError("order must be positive")
    limits = caps()
    if cap is None:
        cap = limits.enumerate_tables if strategy == "tables" else limits.enumerate_lambda
    if n > cap:
        raise OrderCapExceeded(n, cap, f"{strategy} enumeration")

    search = _tables_strategy if strategy == "tables" else _lambda_strategy
    out = []
    for factors in abelian_group_types(n):
        add = abelian_group_table(factors)
        for i, mul in enumerate(sorted(search(factors))):
            out.append(validate_brace(add, mul, f"enum-{group_label(factors)}-{i}"))
    return out


def enumerated_catalog(orders, strategy: str = "lambda") -> Catalog:
    return Catalog([
        CatalogEntry(b.name, b, "enumerated")
        for n in orders
        for b in enumerate_braces(n, strategy)
    ])
