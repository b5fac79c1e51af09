"""Line-oriented text formats for braces and solutions.

Brace file::

    # optional comments
    format: 1
    order: 4
    name: neg-Z4          (optional)
    labels: e a b c       (optional; defaults to 0..n-1)
    section: add
    <n rows of n labels>
    section: mul
    <n rows of n labels>

Solution file: ``size: n``, then ``section: lambda`` (row ``x`` lists
``lambda_x(0..n-1)``) and ``section: rho`` (row ``y`` lists ``rho_y(0..n-1)``).

Custom labels are normalised to indices on load, moving the additive
identity to index 0. Files are always written with decimal indices.
"""

from __future__ import annotations

from pathlib import Path

from .core import FiniteBrace, validate_brace
from .errors import ParseError
from .ybe import Solution, validate_solution

FORMAT_VERSION = "1"
_HEADER_KEYS = {"format", "order", "size", "name", "labels"}


def _parse(text: str, count_key: str, sections: tuple[str, str]):
    header: dict[str, tuple[int, str]] = {}
    rows: dict[str, list[tuple[int, list[str]]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if sep and key.strip() in _HEADER_KEYS | {"section"}:
            key, value = key.strip(), value.strip()
            if key == "section":
                if value not in sections:
                    raise ParseError(lineno, f"unknown section {value!r}")
                if value in rows:
                    raise ParseError(lineno, f"duplicate section {value!r}")
                current = value
                rows[current] = []
            elif current is not None:
                raise ParseError(lineno, f"header key {key!r} after a section started")
            elif key in header:
                raise ParseError(lineno, f"duplicate header key {key!r}")
            else:
                header[key] = (lineno, value)
            continue
        if current is None:
            raise ParseError(lineno, "table row before any section marker")
        rows[current].append((lineno, line.split()))

    if "format" in header and header["format"][1] != FORMAT_VERSION:
        raise ParseError(header["format"][0], f"unsupported format version {header['format'][1]!r}")
    if count_key not in header:
        raise ParseError(1, f"missing '{count_key}:' header")
    lineno, value = header[count_key]
    try:
        n = int(value)
    except ValueError:
        raise ParseError(lineno, f"{count_key} must be an integer, got {value!r}") from None
    if n < 1:
        raise ParseError(lineno, f"{count_key} must be positive")

    if "labels" in header:
        lineno, value = header["labels"]
        labels = value.split()
        if len(labels) != n or len(set(labels)) != n:
            raise ParseError(lineno, f"labels line must list {n} distinct labels")
    else:
        labels = [str(i) for i in range(n)]
    index = {lab: i for i, lab in enumerate(labels)}

    tables = []
    last_line = len(text.splitlines())
    for sec in sections:
        if sec not in rows:
            raise ParseError(last_line, f"missing section {sec!r}")
        body = rows[sec]
        if len(body) != n:
            where = body[n][0] if len(body) > n else (body[-1][0] if body else last_line)
            raise ParseError(where, f"section {sec!r} needs {n} rows, found {len(body)}")
        table = []
        for lineno, cells in body:
            if len(cells) != n:
                raise ParseError(lineno, f"row has {len(cells)} entries, expected {n}")
            try:
                table.append([index[c] for c in cells])
            except KeyError as exc:
                raise ParseError(lineno, f"unknown label {exc.args[0]!r}") from None
        tables.append(table)
    name = header["name"][1] if "name" in header else None
    return n, name, tables


def _move_to_front(tables: list[list[list[int]]], e: int) -> list[list[list[int]]]:
    """Relabel by the transposition ``(0 e)`` so that ``e`` becomes index 0."""
    if e == 0:
        return tables
    n = len(tables[0])
    swap = list(range(n))
    swap[0], swap[e] = e, 0
    return [[[swap[t[swap[a]][swap[b]]] for b in range(n)] for a in range(n)] for t in tables]


def _additive_identity(add: list[list[int]]) -> int:
    n = len(add)
    for e in range(n):
        if all(add[e][x] == x for x in range(n)):
            return e
    return 0  # no identity at all; validation will report it


def parse_brace(text: str) -> FiniteBrace:
    _, name, (add, mul) = _parse(text, "order", ("add", "mul"))
    add, mul = _move_to_front([add, mul], _additive_identity(add))
    return validate_brace(add, mul, name)


def format_brace(brace: FiniteBrace) -> str:
    lines = [f"format: {FORMAT_VERSION}", f"order: {brace.order}"]
    if brace.name:
        lines.append(f"name: {brace.name}")
    for sec, table in (("add", brace.add_table), ("mul", brace.mul_table)):
        lines.append(f"section: {sec}")
        lines.extend(" ".join(str(v) for v in row) for row in table)
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> Solution:
    n, _, (lam, rho) = _parse(text, "size", ("lambda", "rho"))
    return validate_solution(n, lam, rho)


def format_solution(s: Solution) -> str:
    lines = [f"format: {FORMAT_VERSION}", f"size: {s.size}"]
    for sec, table in (("lambda", s.lambda_maps), ("rho", s.rho_maps)):
        lines.append(f"section: {sec}")
        lines.extend(" ".join(str(v) for v in row) for row in table)
    return "\n".join(lines) + "\n"


def load_brace(path: str | Path) -> FiniteBrace:
    return parse_brace(Path(path).read_text(encoding="utf-8"))


def save_brace(brace: FiniteBrace, path: str | Path) -> None:
    Path(path).write_text(format_brace(brace), encoding="utf-8")


def load_solution(path: str | Path) -> Solution:
    return parse_solution(Path(path).read_text(encoding="utf-8"))


def save_solution(s: Solution, path: str | Path) -> None:
    Path(path).write_text(format_solution(s), encoding="utf-8")


def detect_kind(text: str) -> str:
    """``"brace"`` or ``"solution"``, from the first ``order:``/``size:`` header."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        key = raw.split("#", 1)[0].partition(":")[0].strip()
        if key == "order":
            return "brace"
        if key == "size":
            return "solution"
        if key == "section":
            break
    raise ParseError(1, "cannot tell brace from solution: no 'order:' or 'size:' header")
