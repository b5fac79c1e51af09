"""One-shot analysis of a finite brace, rendered as ``key: value`` text or JSON."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .config import caps
from .core import FiniteBrace
from .series import (
    centre,
    is_m_left_nil,
    is_m_right_nil,
    left_series,
    nilpotency_class,
    right_series,
    socle,
    socle_series,
)
from .substructure import format_set, is_dedekind
from .ybe import (
    associated_solution,
    has_diagonal_fixed_points,
    is_twist,
    retraction_series,
)


@dataclass(frozen=True)
class AnalysisReport:
    name: str | None
    order: int
    abelian: bool
    dedekind: bool | None  # None when the order exceeds the subbrace cap
    dedekind_witness: tuple[int, ...] | None
    dedekind_star_witness: tuple[int, int, int] | None
    socle: tuple[int, ...]
    centre: tuple[int, ...]
    socle_series: tuple[tuple[int, ...], ...]
    mpl: int | None
    left_series: tuple[tuple[int, ...], ...]
    left_class: int | None
    right_series: tuple[tuple[int, ...], ...]
    right_class: int | None
    centrally_nilpotent: bool
    right_nil_2: bool
    right_nil_3: bool
    left_nil_2: bool
    left_nil_3: bool
    solution_twist: bool
    solution_diagonal_fixed: bool
    retraction_sizes: tuple[int, ...]
    solution_level: int | None

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        for key, value in self.to_dict().items():
            lines.append(f"{key}: {_render(key, value)}")
        return "\n".join(lines) + "\n"


def _render(key: str, value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if key in ("socle_series", "left_series", "right_series"):
        return "[" + ", ".join(format_set(t) for t in value) + "]"
    if key in ("socle", "centre", "dedekind_witness"):
        return format_set(value)
    if key == "dedekind_star_witness":
        a, b, c = value
        return f"star({a},{b})={c}"
    if key == "retraction_sizes":
        return " ".join(str(v) for v in value)
    return str(value)


def _sorted_terms(chain) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(t)) for t in chain.terms)


def analyze(A: FiniteBrace, subbrace_cap: int | None = None) -> AnalysisReport:
    cap = caps().subbraces if subbrace_cap is None else subbrace_cap
    if A.order <= cap:
        ded = is_dedekind(A, cap=cap)
        dedekind = ded.is_dedekind
        witness = ded.witness.members if ded.witness is not None else None
        star_witness = ded.ideal_report.witness if ded.ideal_report is not None else None
    else:
        dedekind, witness, star_witness = None, None, None

    soc = socle_series(A)
    left, right = left_series(A), right_series(A)
    left_class, right_class = nilpotency_class(left), nilpotency_class(right)
    mpl = len(soc.terms) - 1 if len(soc.terminal) == A.order else None

    sol = associated_solution(A)
    chain = retraction_series(sol)
    sol_level = len(chain) - 1 if chain[-1].size == 1 else None

    return AnalysisReport(
        name=A.name,
        order=A.order,
        abelian=A.is_abelian(),
        dedekind=dedekind,
        dedekind_witness=witness,
        dedekind_star_witness=star_witness,
        socle=tuple(sorted(socle(A))),
        centre=tuple(sorted(centre(A))),
        socle_series=_sorted_terms(soc),
        mpl=mpl,
        left_series=_sorted_terms(left),
        left_class=left_class,
        right_series=_sorted_terms(right),
        right_class=right_class,
        centrally_nilpotent=left_class is not None and right_class is not None,
        right_nil_2=is_m_right_nil(A, 2),
        right_nil_3=is_m_right_nil(A, 3),
        left_nil_2=is_m_left_nil(A, 2),
        left_nil_3=is_m_left_nil(A, 3),
        solution_twist=is_twist(sol),
        solution_diagonal_fixed=has_diagonal_fixed_points(sol),
        retraction_sizes=tuple(s.size for s in chain),
        solution_level=sol_level,
    )
