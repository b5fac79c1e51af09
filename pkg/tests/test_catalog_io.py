import pytest

from bracelab.catalog import Catalog, CatalogEntry, abelian_group_table, builtin_catalog, cyclic_table
from bracelab.enumeration import (
    _automorphisms,
    abelian_group_types,
    enumerate_braces,
    enumerated_catalog,
)
from bracelab.errors import NotAGroup, NotBijective, OrderCapExceeded, ParseError, ValidationError
from bracelab.formats import (
    detect_kind,
    format_brace,
    load_brace,
    load_solution,
    parse_brace,
    parse_solution,
    save_brace,
    save_solution,
)
from bracelab.substructure import is_dedekind
from bracelab.ybe import associated_solution, twist

from oracles import brute_brace_ok


def test_brace_roundtrip(B4, tmp_path):
    path = tmp_path / "b4.brace"
    save_brace(B4, path)
    assert load_brace(path) == B4
    assert load_brace(path).name == "neg-Z4"


def test_roundtrip_every_catalog_entry(catalog, tmp_path):
    for entry in catalog:
        path = tmp_path / f"{entry.name}.brace"
        save_brace(entry.brace, path)
        back = load_brace(path)
        assert back.add_table == entry.brace.add_table
        assert back.mul_table == entry.brace.mul_table
        assert back.name == entry.name
        s = associated_solution(entry.brace)
        spath = tmp_path / f"{entry.name}.sol"
        save_solution(s, spath)
        assert load_solution(spath) == s


def test_short_row_is_parse_error(B4):
    text = format_brace(B4).splitlines()
    i = text.index("section: add") + 2
    text[i] = "1 2 3"
    with pytest.raises(ParseError) as exc:
        parse_brace("\n".join(text))
    assert exc.value.line == i + 1


def test_swapped_entries_give_validation_error(B4):
    mul = [list(r) for r in B4.mul_table]
    mul[1][1], mul[1][2] = mul[1][2], mul[1][1]
    lines = ["order: 4", "section: add"]
    lines += [" ".join(map(str, r)) for r in B4.add_table]
    lines += ["section: mul"] + [" ".join(map(str, r)) for r in mul]
    with pytest.raises(ValidationError) as exc:
        parse_brace("\n".join(lines))
    assert isinstance(exc.value, NotAGroup)
    w = exc.value.witness
    if len(w) == 3:
        x, y, z = w
        assert mul[mul[x][y]][z] != mul[x][mul[y][z]]
    else:
        # no two-sided inverse
        x = w[0]
        assert not any(mul[x][y] == 0 == mul[y][x] for y in range(4))


def test_labels_are_normalised():
    # Z/3 with labels; the identity is written second
    text = """
    # custom labels
    order: 3
    labels: a e b
    section: add
    b a e
    a e b
    e b a
    section: mul
    b a e
    a e b
    e b a
    """
    A = parse_brace(text)
    assert A.order == 3 and A.is_abelian()
    assert A.add_table[0] == (0, 1, 2)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_brace("section: add\n0\n")
    with pytest.raises(ParseError):
        parse_brace("order: two\n")
    with pytest.raises(ParseError):
        parse_brace("order: 1\nsection: add\n0\n")
    with pytest.raises(ParseError):
        parse_brace("order: 1\nsection: add\nx\nsection: mul\n0\n")
    with pytest.raises(ParseError):
        parse_brace("format: 9\norder: 1\nsection: add\n0\nsection: mul\n0\n")


def test_solution_roundtrip(B4, tmp_path):
    for s in (twist(3), associated_solution(B4)):
        path = tmp_path / "s.sol"
        save_solution(s, path)
        assert load_solution(path) == s


def test_non_bijective_solution_file():
    text = "size: 2\nsection: lambda\n0 0\n0 1\nsection: rho\n0 1\n0 1\n"
    with pytest.raises(NotBijective):
        parse_solution(text)


def test_detect_kind():
    assert detect_kind("# x\norder: 2\n") == "brace"
    assert detect_kind("size: 2\n") == "solution"
    with pytest.raises(ParseError):
        detect_kind("section: add\n")


def test_builtin_catalog(catalog):
    assert "trivial-Z2" in catalog
    assert is_dedekind(catalog["neg-Z4"])
    rep = is_dedekind(catalog["neg-Z6"])
    assert not rep and rep.witness.members == (0, 3)
    for entry in catalog:
        assert entry.provenance == "built-in"
        assert brute_brace_ok(entry.brace.add_table, entry.brace.mul_table) or entry.brace.order > 12
    assert len(set(catalog.names())) == len(catalog)


def test_catalog_rejects_duplicates(B4):
    cat = Catalog([CatalogEntry("x", B4, "loaded")])
    with pytest.raises(ValueError):
        cat.add(CatalogEntry("x", B4, "loaded"))


def test_group_types():
    assert abelian_group_types(1) == [(1,)]
    assert abelian_group_types(4) == [(4,), (2, 2)]
    assert abelian_group_types(8) == [(8,), (2, 4), (2, 2, 2)]
    assert abelian_group_types(12) == [(3, 4), (2, 2, 3)]


def test_automorphism_counts():
    # |Aut| of Z4, Z2^2, Z2^3, Z2xZ4, Z6
    assert len(_automorphisms((4,))) == 2
    assert len(_automorphisms((2, 2))) == 6
    assert len(_automorphisms((2, 2, 2))) == 168
    assert len(_automorphisms((2, 4))) == 8
    assert len(_automorphisms((2, 3))) == 2


def test_enumerate_small_orders(catalog):
    one = enumerate_braces(1, "tables")
    assert len(one) == 1 and one[0].order == 1
    for strategy in ("tables", "lambda"):
        two = enumerate_braces(2, strategy)
        assert len(two) == 1 and two[0].is_abelian()
    four = enumerate_braces(4, "tables")
    assert four == enumerate_braces(4, "lambda")
    for name in ("trivial-Z4", "trivial-Klein", "neg-Z4"):
        assert catalog[name] in four


@pytest.mark.parametrize("n", range(1, 7))
def test_strategies_agree(n):
    a = enumerate_braces(n, "tables")
    b = enumerate_braces(n, "lambda")
    assert a == b
    assert len(set(a)) == len(a)


def test_strategies_agree_at_order_8():
    assert enumerate_braces(8, "tables", cap=8) == enumerate_braces(8, "lambda")


def test_enumeration_against_exhaustive_search():
    # order 3: all 3x3 tables with identity row/column, filtered by the oracle
    from itertools import product
    add = cyclic_table(3)
    found = []
    for cells in product(range(3), repeat=4):
        mul = [[0, 1, 2], [1, cells[0], cells[1]], [2, cells[2], cells[3]]]
        if brute_brace_ok(add, mul):
            found.append(tuple(map(tuple, mul)))
    assert sorted(found) == [b.mul_table for b in enumerate_braces(3, "tables")]


def test_enumeration_caps(monkeypatch):
    with pytest.raises(OrderCapExceeded):
        enumerate_braces(7, "tables")
    with pytest.raises(OrderCapExceeded):
        enumerate_braces(9, "lambda")
    with pytest.raises(ValueError):
        enumerate_braces(4, "magic")
    monkeypatch.setenv("BRACELAB_CAP", "3")
    with pytest.raises(OrderCapExceeded):
        enumerate_braces(4, "lambda")


def test_enumerated_catalog():
    cat = enumerated_catalog(range(1, 5))
    assert all(e.provenance == "enumerated" for e in cat)
    assert len(cat) == 1 + 1 + 1 + 6


def test_group_tables_match_catalog(catalog):
    assert catalog["trivial-Klein"].add_table == abelian_group_table([2, 2])
