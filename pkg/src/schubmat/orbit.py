"""Schubert coefficients of matroids.

The class of a connected sparse paving matroid agrees with the uniform one
except at the hook complement, where the coefficient drops to the beta
invariant; minimal matroids contribute a single hook-complement cycle;
direct sums multiply after box-shifting each factor into the joint ambient.
Connected matroids outside these families raise UnsupportedMatroid.
"""

from dataclasses import dataclass
from functools import lru_cache

from .chow import Ambient, ChowClass, box_shift, product, sigma, sigma1_power_degree
from .errors import InvalidDimensions, NotConnected, NotSparsePaving, UnsupportedMatroid
from .matroids import Classification, Matroid, beta, classify, restriction
from .partitions import (
    binomial,
    complement_in_rectangle,
    hook_complement,
    normalize,
    partitions_in_rectangle,
    schur_at_ones,
)
from .polytope import DESK_SCALE_LIMIT, VolumeReport, ehrhart_report

METHOD_UNIFORM = "Uniform-Klyachko"
METHOD_MINIMAL = "Minimal-Lemma"
METHOD_SPARSE_PAVING = "SparsePaving-Theorem1"
METHOD_DIRECT_SUM = "DirectSum-Theorem4.1"
METHOD_POINT = "Degenerate-Point"


@dataclass(frozen=True)
class ScResult:
    """A computed orbit class together with how each component was handled."""

    matroid_summary: Classification
    chow_class: ChowClass
    methods: tuple[str, ...]  # one per connected component, ground-set order
    k_used: int | None  # subdivision facet count, connected sparse paving only
    beta_value: int

    def to_json_dict(self) -> dict:
        data = self.chow_class.to_json_dict()
        data["method"] = list(self.methods)
        data["kappa"] = self.matroid_summary.kappa
        data["k"] = self.k_used
        data["beta"] = str(self.beta_value)
        return data


@lru_cache(maxsize=None)
def sc_uniform(r: int, n: int) -> ChowClass:
    """Klyachko's alternating sum for the uniform matroid U_{r,n}."""
    if r < 1 or r >= n:
        raise InvalidDimensions(f"need 1 <= r <= n-1, got r={r}, n={n}")
    ambient = Ambient(r, n)
    weight = (r - 1) * (n - r - 1)
    terms = {}
    for lam in partitions_in_rectangle(ambient.rect, weight):
        comp = complement_in_rectangle(lam, ambient.rect)
        d = sum(
            (-1) ** i * binomial(n, i) * schur_at_ones(comp, r - i)
            for i in range(r + 1)
        )
        assert d >= 0, f"negative Klyachko coefficient d_{lam}(U_{r},{n}) = {d}"
        if d:
            terms[lam] = d
    return ChowClass(ambient, terms)


def sc_minimal(r: int, n: int) -> ChowClass:
    """The minimal matroid T_{r,n} contributes the single cycle at the hook complement."""
    if r < 1 or r >= n:
        raise InvalidDimensions(f"need 1 <= r <= n-1, got r={r}, n={n}")
    return sigma(Ambient(r, n), hook_complement(r, n))


def sc_sparse_paving(m: Matroid, summary: Classification | None = None) -> ChowClass:
    """Uniform coefficients with the hook-complement one replaced by beta(M)."""
    summary = summary or classify(m)
    if summary.kappa != 1:
        raise NotConnected(f"kappa = {summary.kappa}")
    if not summary.is_sparse_paving:
        raise NotSparsePaving(f"{m!r} is not sparse paving")
    r, n = m.r, m.n
    k = summary.nonbasis_count
    hc = hook_complement(r, n)
    coeff = binomial(n - 2, r - 1) - k
    independent_beta = beta(m)
    assert coeff == independent_beta, (
        f"subdivision count disagrees with beta: {coeff} != {independent_beta}"
    )
    assert coeff >= 0
    terms = dict(sc_uniform(r, n).terms)
    terms[hc] = coeff
    return ChowClass(Ambient(r, n), terms)


def sc_direct_sum(parts: list[ChowClass]) -> ChowClass:
    """Fold classes of direct summands into the joint ambient and multiply."""
    if not parts:
        raise ValueError("need at least one part")
    acc = parts[0]
    for nxt in parts[1:]:
        a1, a2 = acc.ambient, nxt.ambient
        target = Ambient(a1.r + a2.r, a1.n + a2.n)
        left = box_shift(acc, target, a2.n - a2.r)
        right = box_shift(nxt, target, a1.n - a1.r)
        acc = product(left, right)
    return acc


def _component_class(comp: Matroid) -> tuple[ChowClass, str, int | None]:
    if comp.n == 1:
        return sigma(Ambient(comp.r, 1), ()), METHOD_POINT, None
    summary = classify(comp)
    if summary.is_sparse_paving and summary.kappa == 1:
        return sc_sparse_paving(comp, summary), METHOD_SPARSE_PAVING, summary.nonbasis_count
    if summary.is_minimal:
        return sc_minimal(comp.r, comp.n), METHOD_MINIMAL, None
    raise UnsupportedMatroid(
        comp,
        f"connected component on {comp.n} elements of rank {comp.r} is neither "
        "sparse paving nor minimal; no formula is implemented",
    )


def sc(m: Matroid) -> ScResult:
    """Orbit class of an arbitrary supported matroid, by connected components."""
    summary = classify(m)
    parts, methods = [], []
    k_used = None
    for component in summary.components:
        comp = restriction(m, component) if summary.kappa > 1 else m
        cls, method, k = _component_class(comp)
        parts.append(cls)
        methods.append(method)
        if summary.kappa == 1:
            k_used = k
    combined = sc_direct_sum(parts)
    # homogeneity: every term has size r(n-r) - (n - kappa)
    expected = m.r * (m.n - m.r) - (m.n - summary.kappa)
    assert all(sum(lam) == expected for lam in combined.terms), "inhomogeneous class"
    return ScResult(
        matroid_summary=summary,
        chow_class=combined,
        methods=tuple(methods),
        k_used=k_used,
        beta_value=beta(m),
    )


@dataclass(frozen=True)
class VolumeVerdict:
    """Result of checking deg(Sc(M) * sigma_1^s) against the polytope volume."""

    sc_result: ScResult
    volume_report: VolumeReport
    degree: int
    volume: int

    @property
    def ok(self) -> bool:
        return self.degree == self.volume


def verify_volume_relation(m: Matroid, limit: int = DESK_SCALE_LIMIT) -> VolumeVerdict:
    """Check the degree-volume identity with s = n - kappa, both sides exact."""
    result = sc(m)
    s = m.n - result.matroid_summary.kappa
    degree = sigma1_power_degree(result.chow_class, s)
    report = ehrhart_report(m, limit)
    return VolumeVerdict(
        sc_result=result, volume_report=report, degree=degree,
        volume=report.normalized_volume,
    )


def hook_complement_coefficient(result: ScResult, n: int, r: int) -> int:
    """Coefficient of sigma_{h^c}; zero when the class sits in a different degree."""
    if r < 1 or r >= n:
        return 0
    return result.chow_class.coefficient(normalize(hook_complement(r, n)))
