"""Orbit-class engine: Klyachko, minimal lemma, sparse paving, direct sums."""

import random
from itertools import combinations
from math import comb

import pytest

from schubmat import (
    Ambient,
    beta,
    classify,
    direct_sum,
    from_bases,
    minimal,
    panhandle,
    sc,
    sc_direct_sum,
    sc_minimal,
    sc_sparse_paving,
    sc_uniform,
    uniform,
    verify_volume_relation,
)
from schubmat.errors import InvalidDimensions, NotConnected, NotSparsePaving, UnsupportedMatroid
from schubmat.orbit import METHOD_MINIMAL, METHOD_POINT, METHOD_SPARSE_PAVING
from schubmat.partitions import hook_complement
from conftest import family_corpus, matroid_from_nonbases


def test_sc_uniform_examples():
    assert sc_uniform(2, 4).terms == {(1,): 2}
    assert sc_uniform(2, 5).terms == {(2,): 3, (1, 1): 1}
    assert sc_uniform(3, 7).coefficient((3, 3)) == 10  # = beta(U_{3,7})


def test_sc_uniform_rejects_degenerate():
    with pytest.raises(InvalidDimensions):
        sc_uniform(0, 3)
    with pytest.raises(InvalidDimensions):
        sc_uniform(3, 3)


def test_sc_uniform_hook_complement_is_beta():
    for n in range(2, 9):
        for r in range(1, n):
            assert sc_uniform(r, n).coefficient(hook_complement(r, n)) == comb(
                n - 2, r - 1
            )


def test_sc_minimal_examples():
    assert sc_minimal(2, 5).terms == {(2,): 1}
    assert sc_minimal(3, 7).terms == {(3, 3): 1}
    assert sc_minimal(1, 2).terms == {(): 1}


def test_sc_sparse_paving_golden(fano, vamos):
    assert sc_sparse_paving(fano).terms == {
        (4, 2): 6, (4, 1, 1): 3, (3, 3): 3, (3, 2, 1): 8, (2, 2, 2): 1,
    }
    assert sc_sparse_paving(vamos).terms == {
        (4, 4, 1): 4, (4, 3, 2): 20, (4, 3, 1, 1): 12, (4, 2, 2, 1): 12,
        (3, 3, 3): 15, (3, 3, 2, 1): 20, (3, 2, 2, 2): 4,
    }
    assert sc_sparse_paving(panhandle(2, 3, 5)).terms == {(1, 1): 1, (2,): 2}


def test_sc_sparse_paving_errors():
    with pytest.raises(NotSparsePaving):
        sc_sparse_paving(minimal(2, 5))
    with pytest.raises(NotConnected):
        sc_sparse_paving(matroid_from_nonbases(4, 2, [{1, 2}, {3, 4}]))


def test_sc_direct_sum_golden_example():
    combined = sc_direct_sum([sc_uniform(2, 4), sc_uniform(2, 5)])
    assert combined.ambient == Ambient(4, 9)
    assert combined.terms == {
        (4, 3, 3, 3): 2, (4, 4, 3, 2): 8, (4, 4, 4, 1): 6, (5, 3, 3, 2): 8,
        (5, 4, 2, 2): 8, (5, 4, 3, 1): 14, (5, 4, 4): 6, (5, 5, 2, 1): 8,
        (5, 5, 3): 6,
    }


def test_sc_direct_sum_disconnected_hook_vanishes():
    combined = sc_direct_sum([sc_uniform(1, 2), sc_uniform(1, 2)])
    assert combined.coefficient(hook_complement(2, 4)) == 0


def test_sc_direct_sum_single_part_and_associativity():
    single = sc_direct_sum([sc_uniform(2, 5)])
    assert single.terms == sc_uniform(2, 5).terms
    parts = [sc_uniform(1, 2), sc_uniform(2, 4), sc_uniform(2, 5)]
    left = sc_direct_sum([sc_direct_sum(parts[:2]), parts[2]])
    right = sc_direct_sum([parts[0], sc_direct_sum(parts[1:])])
    assert left.terms == right.terms


def test_dispatcher_t24_both_branches_agree():
    t24 = matroid_from_nonbases(4, 2, [{3, 4}])
    result = sc(t24)
    assert result.methods == (METHOD_SPARSE_PAVING,)
    assert result.k_used == 1
    assert result.chow_class.terms == sc_minimal(2, 4).terms == {(1,): 1}


def test_dispatcher_non_pappus(non_pappus):
    result = sc(non_pappus)
    assert result.chow_class.terms == {
        (6, 4): 15, (6, 3, 1): 15, (6, 2, 2): 6, (5, 5): 13,
        (5, 4, 1): 24, (5, 3, 2): 15, (4, 4, 2): 6, (4, 3, 3): 3,
    }
    assert result.k_used == 8
    assert result.beta_value == 13


def test_dispatcher_unsupported():
    with pytest.raises(UnsupportedMatroid) as err:
        sc(panhandle(2, 3, 6))
    assert err.value.component.n == 6
    c = classify(panhandle(2, 3, 6))
    assert not c.is_sparse_paving and not c.is_minimal and c.kappa == 1


def test_dispatcher_degenerate_points():
    from schubmat.matroids import Matroid

    loop = Matroid(1, 0, [()])
    coloop = from_bases(1, 1, [(1,)])
    for point in (loop, coloop):
        result = sc(point)
        assert result.methods == (METHOD_POINT,)
        assert result.chow_class.terms == {(): 1}
    with_loop = direct_sum(uniform(2, 4), loop)
    result = sc(with_loop)
    assert result.methods == (METHOD_SPARSE_PAVING, METHOD_POINT)
    # the loop widens the rectangle: 2 sigma_(1) box-shifts to 2 sigma_(2,1)
    assert result.chow_class.ambient == Ambient(2, 5)
    assert result.chow_class.terms == {(2, 1): 2}


def test_dispatcher_mixed_components():
    m = direct_sum(minimal(2, 5), uniform(2, 4))
    result = sc(m)
    assert result.methods == (METHOD_MINIMAL, METHOD_SPARSE_PAVING)
    assert result.chow_class.terms == sc_direct_sum(
        [sc_minimal(2, 5), sc_uniform(2, 4)]
    ).terms


def test_homogeneity_and_hook_coefficient_on_corpus(fano):
    corpus = [m for _, _, _, m in family_corpus(7)] + [fano]
    for m in corpus:
        try:
            result = sc(m)
        except UnsupportedMatroid:
            continue
        summary = result.matroid_summary
        expected = m.r * (m.n - m.r) - (m.n - summary.kappa)
        assert all(sum(lam) == expected for lam in result.chow_class.terms)
        hc = hook_complement(m.r, m.n) if 1 <= m.r < m.n else ()
        coeff = result.chow_class.coefficient(hc) if sum(hc) == expected else 0
        assert coeff == result.beta_value == beta(m)
        assert all(c >= 0 for c in result.chow_class.terms.values())


def test_sc_relabeling_invariance(fano):
    rng = random.Random(23)
    perm = list(range(1, 8))
    rng.shuffle(perm)
    mapping = {i + 1: perm[i] for i in range(7)}
    relabeled = from_bases(
        7, 3, [tuple(sorted(mapping[e] for e in b)) for b in fano.bases]
    )
    assert sc(relabeled).chow_class.terms == sc(fano).chow_class.terms


def test_verify_volume_relation_examples(fano):
    v = verify_volume_relation(minimal(3, 7))
    assert v.degree == v.volume == 10 and v.ok
    v = verify_volume_relation(uniform(2, 4))
    assert v.degree == v.volume == 4 and v.ok
    assert verify_volume_relation(fano).ok


def test_verify_volume_relation_propagates_errors():
    from schubmat.errors import DeskScaleExceeded

    with pytest.raises(UnsupportedMatroid):
        verify_volume_relation(panhandle(2, 3, 6))
    with pytest.raises(DeskScaleExceeded):
        verify_volume_relation(uniform(3, 9))


def test_verify_volume_relation_corpus_small():
    for _, _, n, m in family_corpus(6):
        try:
            assert verify_volume_relation(m).ok
        except UnsupportedMatroid:
            continue
