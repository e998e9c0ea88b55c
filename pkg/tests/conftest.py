from types import SimpleNamespace

import pytest

from schubsing.rootsys import build_root_system
from schubsing.weyl import from_word


@pytest.fixture(scope="session")
def b2():
    """The B2 worked example: a short, b long, w = r_a r_b r_a."""
    rs = build_root_system("B2")
    a, b = rs.simple_roots
    R = rs.root
    return SimpleNamespace(
        rs=rs,
        a=a,
        b=b,
        ab=R((1, 1)),
        a2b=R((2, 1)),
        w=from_word(rs, [1, 2, 1]),
        ra=from_word(rs, [1]),
        rb=from_word(rs, [2]),
        rarb=from_word(rs, [1, 2]),
        rbra=from_word(rs, [2, 1]),
        e=from_word(rs, []),
    )


def roots(rs, *coords):
    return frozenset(rs.root(c) for c in coords)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
