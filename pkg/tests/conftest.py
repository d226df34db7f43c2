import pytest

from coxfact import groups

# The acceptance fleet: every family with brute force in reach.
FLEET = (
    [groups.symmetric(n) for n in range(2, 7)]
    + [groups.gr1n(2, n) for n in (1, 2, 3)]
    + [groups.gr1n(3, 2), groups.gr1n(4, 2), groups.gr1n(2, 4)]
    + [groups.grrn(2, 3), groups.grrn(3, 3), groups.grrn(2, 4)]
    + [groups.dihedral(r) for r in range(2, 9)]
    + [groups.cyclic(r) for r in range(2, 11)]
)

# Small groups of each family with |W| <= 2000, for structural checks.
SMALL = (
    [groups.symmetric(n) for n in range(2, 7)]
    + [groups.gr1n(r, n) for r, n in [(2, 1), (5, 1), (2, 2), (3, 2), (5, 2), (2, 3), (3, 3), (4, 3), (2, 4), (3, 4)]]
    + [groups.grrn(r, n) for r, n in [(2, 3), (3, 3), (4, 3), (5, 3), (2, 4), (3, 4), (2, 5)]]
    + [groups.dihedral(r) for r in (3, 4, 5, 6, 12)]
    + [groups.cyclic(r) for r in (2, 3, 7, 12)]
)


def spec_id(spec):
    return spec.name


@pytest.fixture(params=FLEET, ids=spec_id)
def fleet_spec(request):
    return request.param
