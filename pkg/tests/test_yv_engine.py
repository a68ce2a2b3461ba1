"""The bilinear recursion engine against the reference table and invariants."""
import pytest

from yvlab.errors import IndexOutOfRange
from yvlab.polycore import Poly, X
from yvlab.yv_engine import (YvSequenceCache, stride_offset, triangular, yv_coefficient,
                             yv_compute, yv_compute_negative, yv_expand)

# the classical opening of the sequence, in compressed form
GOLDEN = {
    0: (0, (1,)),
    1: (1, (1,)),
    2: (0, (-1, 1)),                              # x^3 - 1
    3: (0, (-5, -5, 1)),                          # x^6 - 5x^3 - 5
    4: (1, (-175, 0, -15, 1)),                    # x^10 - 15x^7 - 175x
    5: (0, (6125, -12250, -1225, 175, -35, 1)),   # x^15 - ... + 6125
}


def test_golden_table(cache1):
    for n, (delta, coeffs) in GOLDEN.items():
        p = cache1.get(n)
        assert (p.delta, p.coeffs) == (delta, coeffs)


def test_compute_entry_points(cache1):
    assert yv_compute(2, cache=cache1).coeffs == (-1, 1)
    assert yv_compute(0, cache=cache1).coeffs == (1,)
    with pytest.raises(ValueError):
        yv_compute(-1)
    with pytest.raises(ValueError):
        YvSequenceCache(0)


def test_negative_indices(cache1):
    assert yv_compute_negative(-1, cache=cache1).coeffs == (1,)
    assert yv_compute_negative(-2, cache=cache1).coeffs == (1,)
    assert yv_compute_negative(-3, cache=cache1).coeffs == (-1, 1)
    with pytest.raises(ValueError):
        yv_compute_negative(0)


def test_negative_index_symmetry(cache1):
    for n in range(12):
        pos = cache1.get(n)
        neg = cache1.get(-n - 1)
        assert neg.coeffs == pos.coeffs and neg.delta == pos.delta
        assert neg.degree == pos.degree  # d_{-n-1} = d_n


def test_expand(cache1):
    assert yv_expand(cache1.get(1)) == X
    assert yv_expand(cache1.get(2)) == Poly((-1, 0, 0, 1))
    t4 = yv_expand(cache1.get(4))
    assert t4 == Poly((0, -175, 0, 0, 0, 0, 0, -15, 0, 0, 1))
    assert [e for e, c in enumerate(t4.coeffs) if c] == [1, 7, 10]  # t_1(4) = 0


def test_coefficient_access(cache1):
    assert yv_coefficient(5, 0, cache=cache1) == 6125
    assert yv_coefficient(4, 0, cache=cache1) == -175
    assert yv_coefficient(3, 1, cache=cache1) == -5
    with pytest.raises(IndexOutOfRange):
        yv_coefficient(3, 3, cache=cache1)
    with pytest.raises(IndexOutOfRange):
        cache1.get(5).coefficient(-1)
    with pytest.raises(ValueError):
        yv_coefficient(-2, 0, cache=cache1)


def test_structural_invariants(cache1):
    cache1.up_to(25)
    for n in range(26):
        p = cache1.get(n)
        d = triangular(n)
        assert p.delta == (1 if n % 3 == 1 else 0)
        assert len(p.coeffs) == (d - p.delta) // 3 + 1
        assert p.coeffs[-1] == 1
        assert yv_expand(p).degree == d


@pytest.mark.parametrize("a", [1, -4])
def test_bilinear_identity_on_expanded_polys(a):
    cache = YvSequenceCache(a)
    for n in range(1, 12):
        t = yv_expand(cache.get(n))
        rhs = X * t * t + (t * t.derivative(2) - t.derivative() ** 2).scaled(a)
        assert rhs == yv_expand(cache.get(n + 1)) * yv_expand(cache.get(n - 1))
        assert rhs.try_exact_div(yv_expand(cache.get(n - 1))) is not None


@pytest.mark.parametrize("a", [-4, 2, 3])
def test_parameter_scaling(a, cache1):
    cache = YvSequenceCache(a)
    for n in range(11):
        ref = cache1.get(n)
        got = cache.get(n)
        d, delta = triangular(n), stride_offset(n)
        for j, c in enumerate(ref.coeffs):
            assert got.coeffs[j] == a ** ((d - 3 * j - delta) // 3) * c
