import pytest

from krlie.errors import UnsupportedGroup
from krlie.rootdata import Family, build_group, parse_group
from krlie.verify import random_checks, verify_suite


def test_suite_passes(ring_spec):
    checks = verify_suite(ring_spec)
    assert checks
    failed = [c for c in checks if not c.ok]
    assert not failed, failed


@pytest.mark.parametrize("group,inv", [("SU5", "trivial"), ("U5", "conj"), ("U6", "symp"), ("C3", "trivial")])
def test_suite_passes_larger(group, inv):
    assert all(c.ok for c in verify_suite(parse_group(group, inv)))


def test_random_checks(ring_spec):
    checks = random_checks(ring_spec, seed=3, samples=20)
    assert all(c.ok for c in checks), [c for c in checks if not c.ok]


def test_torus_suite():
    checks = verify_suite(parse_group("T2", "conj"))
    assert checks and all(c.ok for c in checks)


def test_finite_group_rejected():
    with pytest.raises(UnsupportedGroup):
        verify_suite(build_group(Family.FINITE, finite=("C3",)))
