"""The two left braces with additive group the integers.

An element ``n*a`` of ``<a>_+ = Z`` is represented by the Python int ``n``, so
arithmetic is exact at any size. The abelian brace has ``n.m = n + m``; the
non-abelian one has ``n.m = (-1)^n m + n``.

Everything here is closed-form: socle-series membership and the ideal test
for ``kZ`` are decided by a parity case split, never by search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import FiniteBrace
from .errors import ContextMismatch
from .series import socle_series
from .substructure import IdealReport


def _sign(n: int) -> int:
    return -1 if n & 1 else 1


def z_mul(n: int, m: int) -> int:
    return _sign(n) * m + n


def z_inv(n: int) -> int:
    # odd elements are involutions, even ones invert additively
    return n if n & 1 else -n


def z_lambda(n: int, m: int) -> int:
    return _sign(n) * m


def z_star(n: int, m: int) -> int:
    """``(n a) * (m a)``: 0 for even ``n`` and ``-2m`` for odd ``n``."""
    return (_sign(n) - 1) * m


@dataclass(frozen=True)
class Membership:
    member: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.member


def z_socle_membership(n: int) -> Membership:
    """``n a`` lies in the socle iff ``(-1)^n - 1 = 0``, i.e. ``n`` is even."""
    if _sign(n) - 1 == 0:
        return Membership(True)
    return Membership(False, (n, 1, z_star(n, 1)))


def z_socle_series_membership(n: int, level: int) -> Membership:
    """Membership of ``n a`` in ``Soc_level`` of the non-abelian brace.

    ``Soc_1 = 2Z``. For ``Soc_2``: ``n * x = ((-1)^n - 1) x`` is always even,
    so every element is in ``Soc_2``, and the series stops there.
    """
    if level < 0:
        raise ValueError("level must be non-negative")
    if level == 0:
        return Membership(n == 0)
    if level == 1:
        return z_socle_membership(n)
    return Membership(True)


def z_subgroup_ideal_check(k: int) -> IdealReport:
    """Decide whether ``kZ`` is an ideal of the non-abelian brace.

    ``x * (km) = ((-1)^x - 1) km`` always lies in ``kZ``. ``(kn) * m`` is 0 when
    ``kn`` is even and ``-2m`` otherwise, so for odd ``k`` the subgroup is an
    ideal exactly when ``k`` divides 2, i.e. ``k = 1``. The witness for odd
    ``k >= 3`` is ``(ka) * a = -2a``.
    """
    if k < 0:
        raise ValueError("k must be non-negative; kZ = (-k)Z")
    if k % 2 == 0 or k == 1:
        return IdealReport(True)
    return IdealReport(False, (k, 1, z_star(k, 1)))


@dataclass(frozen=True)
class ZDedekindReport:
    is_dedekind: bool
    witness_k: int | None = None
    ideal_report: IdealReport | None = None

    def __bool__(self) -> bool:
        return self.is_dedekind


def z_is_dedekind(non_abelian: bool = True) -> ZDedekindReport:
    # Every subbrace is some kZ; the abelian brace has no non-ideal ones.
    if not non_abelian:
        return ZDedekindReport(True)
    return ZDedekindReport(False, 3, z_subgroup_ideal_check(3))


@dataclass(frozen=True)
class ZBrace:
    """Either brace on the integers, selected by ``non_abelian``."""

    non_abelian: bool = True

    def add(self, n: int, m: int) -> int:
        return n + m

    def neg(self, n: int) -> int:
        return -n

    def mul(self, n: int, m: int) -> int:
        return z_mul(n, m) if self.non_abelian else n + m

    def inv(self, n: int) -> int:
        return z_inv(n) if self.non_abelian else -n

    def lam(self, n: int, m: int) -> int:
        return z_lambda(n, m) if self.non_abelian else m

    def star(self, n: int, m: int) -> int:
        return z_star(n, m) if self.non_abelian else 0

    def in_socle(self, n: int) -> bool:
        return bool(z_socle_membership(n)) if self.non_abelian else True

    def in_socle_series(self, n: int, level: int) -> bool:
        if not self.non_abelian:
            return level >= 1 or n == 0
        return bool(z_socle_series_membership(n, level))

    @property
    def multipermutation_level(self) -> int:
        return 2 if self.non_abelian else 1

    def socle_series_index(self, level: int) -> int | None:
        """Index of ``Soc_level`` in the whole brace; None when infinite."""
        if level == 0:
            return None
        if self.non_abelian and level == 1:
            return 2
        return 1


@dataclass(frozen=True)
class HybridElement:
    z: int
    f: int
    owner: HybridBrace = field(repr=False)

    def pair(self) -> tuple[int, int]:
        return (self.z, self.f)


class HybridBrace:
    """Direct sum of a brace on the integers and a finite brace.

    Elements are bound to the HybridBrace that made them; combining elements
    of different hybrids raises ContextMismatch.
    """

    def __init__(self, finite: FiniteBrace, zpart: ZBrace | None = None):
        self.finite = finite
        self.zpart = ZBrace() if zpart is None else zpart
        self._finite_series = socle_series(finite).terms

    def element(self, z: int, f: int) -> HybridElement:
        if not 0 <= f < self.finite.order:
            raise ValueError(f"finite component {f} outside 0..{self.finite.order - 1}")
        return HybridElement(z, f, self)

    def _own(self, *xs: HybridElement) -> None:
        for x in xs:
            if x.owner is not self:
                raise ContextMismatch("element belongs to a different hybrid brace")

    def add(self, x: HybridElement, y: HybridElement) -> HybridElement:
        self._own(x, y)
        return HybridElement(self.zpart.add(x.z, y.z), self.finite.add(x.f, y.f), self)

    def neg(self, x: HybridElement) -> HybridElement:
        self._own(x)
        return HybridElement(-x.z, self.finite.neg(x.f), self)

    def mul(self, x: HybridElement, y: HybridElement) -> HybridElement:
        self._own(x, y)
        return HybridElement(self.zpart.mul(x.z, y.z), self.finite.mul(x.f, y.f), self)

    def inv(self, x: HybridElement) -> HybridElement:
        self._own(x)
        return HybridElement(self.zpart.inv(x.z), self.finite.inv(x.f), self)

    def star(self, x: HybridElement, y: HybridElement) -> HybridElement:
        self._own(x, y)
        return HybridElement(self.zpart.star(x.z, y.z), self.finite.star(x.f, y.f), self)

    def lam(self, x: HybridElement, y: HybridElement) -> HybridElement:
        self._own(x, y)
        return HybridElement(self.zpart.lam(x.z, y.z), self.finite.lam(x.f, y.f), self)

    def _finite_term(self, level: int) -> frozenset[int]:
        terms = self._finite_series
        return terms[min(level, len(terms) - 1)]

    def in_socle_series(self, x: HybridElement, level: int) -> bool:
        """Socle series of a direct sum is the direct sum of the socle series."""
        self._own(x)
        return self.zpart.in_socle_series(x.z, level) and x.f in self._finite_term(level)

    def in_socle(self, x: HybridElement) -> bool:
        return self.in_socle_series(x, 1)

    def soc2_over_soc_order(self) -> int:
        """Order of ``Soc_2/Soc``; always finite, hence a periodic group."""
        zq = self.zpart.socle_series_index(1) // self.zpart.socle_series_index(2)
        fq = len(self._finite_term(2)) // len(self._finite_term(1))
        return zq * fq
