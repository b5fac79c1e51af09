import pytest

from bracelab.catalog import builtin_catalog, cyclic_table, negation_brace, trivial_brace
from bracelab.enumeration import enumerate_braces

# test_acceptance.py records one line per criterion here; printed at the end.
ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        terminalreporter.write_line(f"criterion {key}: {ACCEPTANCE_RESULTS[key]}")


@pytest.fixture(scope="session")
def B4():
    return negation_brace(4)


@pytest.fixture(scope="session")
def B6():
    return negation_brace(6)


@pytest.fixture(scope="session")
def Z2():
    return trivial_brace(cyclic_table(2), "trivial-Z2")


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


@pytest.fixture(scope="session")
def small_braces(catalog):
    """Catalog braces of order <= 16 plus every enumerated brace of order <= 6."""
    out = [b for b in catalog.braces() if b.order <= 16]
    for n in range(1, 7):
        out.extend(enumerate_braces(n, "lambda"))
    return out
