"""Shared corpus matroids and brute-force oracles."""

from itertools import combinations

import pytest

from schubmat import from_bases, minimal, panhandle, uniform
from schubmat.matroids import Matroid


def matroid_from_nonbases(n, r, nonbases):
    nonbases = [frozenset(b) for b in nonbases]
    bases = [b for b in combinations(range(1, n + 1), r) if frozenset(b) not in nonbases]
    return from_bases(n, r, bases)


FANO_LINES = [
    {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6},
]

NON_PAPPUS_LINES = [
    {1, 2, 3}, {4, 5, 6}, {1, 5, 7}, {1, 6, 8},
    {2, 4, 7}, {2, 6, 9}, {3, 4, 8}, {3, 5, 9},
]

VAMOS_CIRCUIT_HYPERPLANES = [
    {1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}, {1, 2, 7, 8}, {3, 4, 7, 8},
]


@pytest.fixture(scope="session")
def fano() -> Matroid:
    return matroid_from_nonbases(7, 3, FANO_LINES)


@pytest.fixture(scope="session")
def non_pappus() -> Matroid:
    return matroid_from_nonbases(9, 3, NON_PAPPUS_LINES)


@pytest.fixture(scope="session")
def vamos() -> Matroid:
    return matroid_from_nonbases(8, 4, VAMOS_CIRCUIT_HYPERPLANES)


def family_corpus(max_n):
    """All uniform, minimal, and panhandle matroids with ground set up to max_n."""
    out = []
    for n in range(2, max_n + 1):
        for r in range(1, n):
            out.append(("U", r, n, uniform(r, n)))
            out.append(("T", r, n, minimal(r, n)))
            for s in range(r, n):
                out.append((f"Pan_s{s}", r, n, panhandle(r, s, n)))
    return out


# independent oracle: beta as a Tutte polynomial coefficient

def tutte_polynomial(m: Matroid) -> dict:
    """Corank-nullity subset expansion; returns {(i, j): coeff of x^i y^j}."""
    from math import comb

    poly: dict[tuple[int, int], int] = {}
    ground = list(range(1, m.n + 1))
    for k in range(m.n + 1):
        for subset in combinations(ground, k):
            a = m.r - m.rank_of(subset)
            b = k - m.rank_of(subset)
            # expand (x-1)^a (y-1)^b
            for i in range(a + 1):
                for j in range(b + 1):
                    c = comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
                    poly[(i, j)] = poly.get((i, j), 0) + c
    return {k: v for k, v in poly.items() if v}


def beta_via_tutte(m: Matroid) -> int:
    return tutte_polynomial(m).get((1, 0), 0)
