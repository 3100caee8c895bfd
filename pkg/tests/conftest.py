import random

import pytest

from krlie.charalg import irrep_character
from krlie.rootdata import parse_group

# every (group, involution) pair with a complete generator table
RING_SPECS = [
    ("U2", "conj"), ("U3", "conj"), ("U4", "conj"),
    ("U2", "symp"), ("U4", "symp"),
    ("SU2", "trivial"), ("SU3", "trivial"), ("SU4", "trivial"),
    ("C1", "trivial"), ("C2", "trivial"), ("G2", "trivial"),
]


def spec_id(p):
    return f"{p[0]}-{p[1]}"


@pytest.fixture(params=RING_SPECS, ids=spec_id)
def ring_spec(request):
    return parse_group(*request.param)


@pytest.fixture
def rng():
    return random.Random(20240611)


def irreps_up_to(spec, max_dim, max_level=8):
    """Highest weights reachable by adding fundamentals while the dimension stays small."""
    seen = {spec.zero}
    todo = [(spec.zero, 0)]
    while todo:
        w, lvl = todo.pop()
        if lvl == max_level:
            continue
        for f in spec.fundamentals:
            v = tuple(a + b for a, b in zip(w, f))
            if v not in seen and irrep_character(spec, v).dim <= max_dim:
                seen.add(v)
                todo.append((v, lvl + 1))
    return sorted(seen)


# (criterion, ok, detail) rows filled in by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
