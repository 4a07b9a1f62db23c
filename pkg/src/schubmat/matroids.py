"""Matroids given by explicit bases on the 1-indexed ground set [n].

Constructors (uniform, minimal, Schubert, lattice-path, panhandle, rational
matrix realization), structural queries (dual, minors, circuits, rank,
connectivity), the beta invariant, paving classification, and direct sums.

Everything is desk-scale brute force over bases and subsets; n stays small
for every result we care about, and auditability wins over asymptotics.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import (
    BadStepString,
    DependentContraction,
    ElementOutOfRange,
    EmptyBases,
    ExchangeAxiomViolated,
    OverlappingSets,
    PathsCross,
    RankDeficient,
    WrongBasisSize,
)

Basis = tuple[int, ...]


class Matroid:
    """Immutable matroid with ground set [n], rank r, and an explicit basis set."""

    __slots__ = ("n", "r", "bases", "_basis_sets", "_hash")

    def __init__(self, n: int, r: int, bases):
        self.n = n
        self.r = r
        self.bases = frozenset(tuple(sorted(b)) for b in bases)
        self._basis_sets = [frozenset(b) for b in sorted(self.bases)]
        self._hash = hash((n, r, self.bases))

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.n == other.n
            and self.r == other.r
            and self.bases == other.bases
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Matroid(n={self.n}, r={self.r}, |bases|={len(self.bases)})"

    def is_independent(self, subset) -> bool:
        s = frozenset(subset)
        return any(s <= b for b in self._basis_sets)

    def rank_of(self, subset) -> int:
        s = frozenset(subset)
        return max(len(s & b) for b in self._basis_sets)

    def loops(self) -> frozenset:
        in_some = frozenset().union(*self._basis_sets)
        return frozenset(range(1, self.n + 1)) - in_some

    def coloops(self) -> frozenset:
        return frozenset.intersection(*self._basis_sets)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "bases": [list(b) for b in sorted(self.bases)],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "Matroid":
        return from_bases(
            int(data["n"]),
            int(data["r"]),
            [tuple(int(e) for e in b) for b in data["bases"]],
        )


def validate_exchange(m: Matroid) -> None:
    """Exhaustively check the basis-exchange axiom; raise with a witness on failure."""
    sets = m._basis_sets
    lookup = set(sets)
    for b1 in sets:
        for b2 in sets:
            for x in b1 - b2:
                if not any(b1 - {x} | {y} in lookup for y in b2 - b1):
                    raise ExchangeAxiomViolated(b1, b2, x)


def from_bases(n: int, r: int, bases) -> Matroid:
    """Build a validated matroid from an explicit basis list."""
    bases = [tuple(sorted(set(b))) for b in bases]
    if not bases:
        raise EmptyBases("a matroid needs at least one basis")
    for b in bases:
        if len(b) != r:
            raise WrongBasisSize(f"basis {b} does not have {r} elements")
        if b and (b[0] < 1 or b[-1] > n):
            raise ElementOutOfRange(f"basis {b} not inside [{n}]")
    m = Matroid(n, r, bases)
    validate_exchange(m)
    return m


def _make(n: int, r: int, bases) -> Matroid:
    # internal constructor for operations whose output is a matroid by theory
    return Matroid(n, r, bases)


# ---------------------------------------------------------------------------
# constructors


def lattice_path_matroid(upper: str, lower: str) -> Matroid:
    """Lattice path matroid M[P,Q] for step strings over {N,E}.

    Bases are the sets {b_1 < ... < b_r} with p_i <= b_i <= q_i where p_i, q_i
    are the positions of the i-th north step of the upper and lower path.
    """
    for path in (upper, lower):
        if set(path) - {"N", "E"}:
            raise BadStepString(f"steps must be N or E: {path!r}")
    if len(upper) != len(lower) or upper.count("N") != lower.count("N"):
        raise BadStepString("paths must share endpoints")
    n = len(upper)
    r = upper.count("N")
    ups, lows = 0, 0
    for i in range(n):
        ups += upper[i] == "N"
        lows += lower[i] == "N"
        if ups < lows:
            raise PathsCross(f"upper path dips below lower path at step {i + 1}")
    p = [i + 1 for i, s in enumerate(upper) if s == "N"]
    q = [i + 1 for i, s in enumerate(lower) if s == "N"]
    bases = [
        b
        for b in combinations(range(1, n + 1), r)
        if all(p[i] <= b[i] <= q[i] for i in range(r))
    ]
    return from_bases(n, r, bases)


def schubert_matroid(n: int, indices) -> Matroid:
    """SM_I: upper path N^r E^(n-r), lower path with north steps at I."""
    indices = sorted(set(indices))
    if indices and (indices[0] < 1 or indices[-1] > n):
        raise ElementOutOfRange(f"index set {indices} not inside [{n}]")
    r = len(indices)
    upper = "N" * r + "E" * (n - r)
    lower = "".join("N" if i in set(indices) else "E" for i in range(1, n + 1))
    return lattice_path_matroid(upper, lower)


def uniform(r: int, n: int) -> Matroid:
    """U_{r,n} = SM_{ {n-r+1, ..., n} }."""
    return schubert_matroid(n, range(n - r + 1, n + 1))


def minimal(r: int, n: int) -> Matroid:
    """T_{r,n} = SM_{ {2, ..., r, n} }: the connected matroid with r(n-r)+1 bases."""
    return schubert_matroid(n, list(range(2, r + 1)) + [n])


def panhandle(r: int, s: int, n: int) -> Matroid:
    """Pan_{r,s,n} = SM_{ {s-r+2, ..., s, n} }; Pan_{r,r,n} = T_{r,n}, Pan_{r,n-1,n} = U_{r,n}."""
    return schubert_matroid(n, list(range(s - r + 2, s + 1)) + [n])


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free Gaussian elimination."""
    rows = [row[:] for row in rows]
    k = len(rows)
    det = Fraction(1)
    for col in range(k):
        pivot = next((i for i in range(col, k) if rows[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for i in range(col + 1, k):
            factor = rows[i][col] * inv
            for j in range(col, k):
                rows[i][j] -= factor * rows[col][j]
    return det


def matrix_rank(entries: list[list[Fraction]]) -> int:
    """Exact row rank over the rationals."""
    rows = [list(map(Fraction, row)) for row in entries]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col] != 0:
                factor = rows[i][col] / rows[rank][col]
                for j in range(col, ncols):
                    rows[i][j] -= factor * rows[rank][j]
        rank += 1
        col += 1
    return rank


def from_rational_matrix(entries, r: int) -> Matroid:
    """Matroid of the column vectors of an exact rational r x n matrix.

    Bases are the column subsets with non-zero r x r minor.
    """
    rows = [[Fraction(e) for e in row] for row in entries]
    if len(rows) != r:
        raise RankDeficient(f"matrix has {len(rows)} rows, expected r={r}")
    n = len(rows[0])
    if matrix_rank(rows) < r:
        raise RankDeficient("matrix rank is smaller than r")
    bases = []
    for cols in combinations(range(n), r):
        minor = [[rows[i][j] for j in cols] for i in range(r)]
        if _det(minor) != 0:
            bases.append(tuple(c + 1 for c in cols))
    return from_bases(n, r, bases)


# ---------------------------------------------------------------------------
# structural operations


def dual(m: Matroid) -> Matroid:
    ground = frozenset(range(1, m.n + 1))
    return _make(m.n, m.n - m.r, [tuple(sorted(ground - set(b))) for b in m.bases])


def minor(m: Matroid, delete=(), contract=()) -> Matroid:
    """Delete and contract, relabelling the remaining ground set to [m] in order.

    Loops created by contraction stay in the ground set.
    """
    delete, contract = frozenset(delete), frozenset(contract)
    if delete & contract:
        raise OverlappingSets(f"{sorted(delete & contract)} in both sets")
    if not m.is_independent(contract):
        raise DependentContraction(f"{sorted(contract)} is dependent")
    remaining = [e for e in range(1, m.n + 1) if e not in delete | contract]
    relabel = {e: i + 1 for i, e in enumerate(remaining)}
    # contract first: bases containing the contract set, minus it
    contracted = [set(b) - contract for b in m._basis_sets if contract <= set(b)]
    # then delete: independent subsets of the remaining ground set of maximal size
    keep = set(remaining)
    new_rank = max(len(b & keep) for b in contracted)
    new_bases = {
        tuple(sorted(relabel[e] for e in i_set))
        for b in contracted
        for i_set in combinations(sorted(b & keep), new_rank)
    }
    # i_set above ranges over subsets of a contracted basis restricted to the
    # kept elements; only maximal ones are independent sets of full size
    new_bases = {b for b in new_bases if len(b) == new_rank}
    return _make(len(remaining), new_rank, new_bases)


def restriction(m: Matroid, subset) -> Matroid:
    """M restricted to subset (delete everything else)."""
    ground = frozenset(range(1, m.n + 1))
    return minor(m, delete=ground - frozenset(subset))


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    bases = [
        b1 + tuple(e + m1.n for e in b2) for b1 in m1.bases for b2 in m2.bases
    ]
    return _make(m1.n + m2.n, m1.r + m2.r, bases)


def circuits(m: Matroid) -> frozenset:
    """All minimal dependent sets (each has at most r+1 elements)."""
    found = []
    for k in range(1, m.r + 2):
        for subset in combinations(range(1, m.n + 1), k):
            s = frozenset(subset)
            if m.is_independent(s):
                continue
            if any(c <= s for c in found):
                continue
            # minimality: every proper subset obtained by dropping one element
            if all(m.is_independent(s - {e}) for e in s):
                found.append(s)
    return frozenset(found)


def connected_components(m: Matroid) -> tuple[tuple[int, ...], ...]:
    """Partition of [n]: i ~ j iff some circuit of M or M* contains both."""
    parent = list(range(m.n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    for c in circuits(m) | circuits(dual(m)):
        elems = sorted(c)
        for e in elems[1:]:
            union(elems[0], e)
    groups: dict[int, list[int]] = {}
    for e in range(1, m.n + 1):
        groups.setdefault(find(e), []).append(e)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


@dataclass(frozen=True)
class Classification:
    """Derived structural facts about a matroid."""

    components: tuple[tuple[int, ...], ...]
    kappa: int
    loops: frozenset
    coloops: frozenset
    is_paving: bool
    is_sparse_paving: bool
    nonbasis_count: int
    is_minimal: bool
    is_uniform: bool


def _is_paving(m: Matroid) -> bool:
    return all(len(c) >= m.r for c in circuits(m))


def classify(m: Matroid) -> Classification:
    components = connected_components(m)
    nonbasis_count = comb(m.n, m.r) - len(m.bases)
    kappa = len(components)
    return Classification(
        components=components,
        kappa=kappa,
        loops=m.loops(),
        coloops=m.coloops(),
        is_paving=_is_paving(m),
        is_sparse_paving=_is_paving(m) and _is_paving(dual(m)),
        nonbasis_count=nonbasis_count,
        is_minimal=(kappa == 1 and len(m.bases) == m.r * (m.n - m.r) + 1),
        is_uniform=(nonbasis_count == 0),
    )


def beta(m: Matroid) -> int:
    """Crapo's beta invariant by deletion-contraction on the smallest eligible element."""
    memo: dict[Matroid, int] = {}

    def go(mat: Matroid) -> int:
        if mat.n == 1:
            return 1 if mat.r == 1 else 0
        cached = memo.get(mat)
        if cached is not None:
            return cached
        loops, coloops = mat.loops(), mat.coloops()
        if loops or coloops:
            value = 0
        else:
            i = 1  # smallest index is always eligible here
            value = go(minor(mat, contract=[i])) + go(minor(mat, delete=[i]))
        memo[mat] = value
        return value

    return go(m)


@lru_cache(maxsize=None)
def _named(kind: str, *args) -> Matroid:
    return {"uniform": uniform, "minimal": minimal, "panhandle": panhandle}[kind](*args)
