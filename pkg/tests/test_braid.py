import random
from fractions import Fraction
from math import comb

import pytest

from qclifford.braid import (BWM, Compose, Embedded, ResourceCap, Sum, TensorVector,
                             operator_json, pack, unpack, verify_antisymmetrizers,
                             verify_contraction, verify_rmatrix)
from qclifford.linalg import rank
from qclifford.scalar import SYMBOLIC, EvalPoint, SpecializedField, qnum

f = SYMBOLIC
q, c = f.q, f.c
SPEC = SpecializedField(EvalPoint(Fraction(5, 3), 2))
B3, B4 = BWM(3), BWM(4)


def cols_equal(a, b, N, k):
    return all(a.column(key, f.one) == b.column(key, f.one) for key in range(N ** k))


def test_pack_order():
    assert pack((1, 2), 3) == 1
    assert pack((2, 1), 3) == 3
    assert unpack(pack((3, 1, 2), 4), 4, 3) == (3, 1, 2)
    with pytest.raises(IndexError):
        pack((4,), 3)


def test_rhat_corner():
    for b in (B3, B4):
        assert b.R.column_tuples((1, 1), f.one) == {(1, 1): q ** 2}


def test_metric_entries():
    assert [B3.C(i, 4 - i) for i in (1, 2, 3)] == [1 / q, f.one, q]
    assert B3.C(1, 1) == f.zero


def test_metric_norm():
    total = sum((B3.C(i, j) ** 2 for i in range(1, 4) for j in range(1, 4)), f.zero)
    assert total == q ** 2 + 1 + q ** -2
    for N in (4, 5, 6):
        b = BWM(N)
        total = sum((b.C(i, j) ** 2 for i in range(1, N + 1) for j in range(1, N + 1)),
                    f.zero)
        assert total == q ** (2 - 2 * N) * (q ** (2 * N) - 1) * (q ** (2 * N - 4) + 1) \
            / (q ** 2 - q ** -2)


def test_b_minus_zero_is_identity():
    assert cols_equal(B3.b_minus(0), B3.identity(1), 3, 1)


def test_b_minus_one():
    for b in (B3, B4):
        N = b.N
        want = Sum([(None, b.identity(2)), (-q ** -2, b.R),
                    (-q ** -2 * f.qp * f.qm / (1 + q ** (2 * N - 4)), b.K)])
        assert cols_equal(b.b_minus(1), want, N, 2)


def test_b_minus_one_kills_symmetric_part():
    b = BWM(3, SPEC)
    plus = b.projectors()[0]
    rng = random.Random(5)
    for _ in range(5):
        v = {key: SPEC(rng.randint(-4, 4)) for key in range(9)}
        w = plus._apply(v)
        assert w and not b.b_minus(1)._apply(w)


def test_a2_is_p_minus():
    minus = B3.projectors()[1]
    assert cols_equal(B3.antisymmetrizer(2), minus, 3, 2)
    rec = Sum([(1 / qnum(2), Compose([Embedded(B3.antisymmetrizer(1), 1, 2),
                                      B3.b_minus(1)]))])
    assert cols_equal(rec, minus, 3, 2)


@pytest.mark.parametrize("N", [3, 4])
def test_antisymmetrizer_rank(N):
    b = BWM(N, SPEC)
    for k in range(N + 1):
        cols = [b.antisymmetrizer(k).column(key, SPEC.one) for key in range(N ** k)]
        assert rank(cols) == comb(N, k)


def test_k_kills_a3():
    A3 = B3.antisymmetrizer(3)
    K12 = B3.local("K", 1, 3)
    rng = random.Random(2)
    for _ in range(5):
        v = {rng.randrange(27): f(rng.randint(1, 5)) for _ in range(4)}
        assert not K12._apply(A3._apply(v))


def test_antisymmetrizer_range():
    with pytest.raises(ValueError):
        B3.antisymmetrizer(4)
    with pytest.raises(ValueError):
        B3.antisymmetrizer(-1)


def test_pairing_values():
    assert B4.g(1, 2) == f.zero
    assert B3.g(1, 3) == c ** 2 * q
    for N in (3, 4, 5):
        b = BWM(N)
        total = sum((b.C(i, j) * b.g(i, j) for i in range(1, N + 1)
                     for j in range(1, N + 1)), f.zero)
        assert total == c ** 2 / q * (q ** (2 * N) - 1) / (q - 1 / q)


def test_contract_examples():
    e = lambda *idx: TensorVector.basis(3, idx, f.one)
    assert not B3.contract(e(1, 2), e(3))
    out = B3.contract(e(1), e(3))
    assert out.k == 0 and out.entries == {0: c ** 2 * q}


def test_wedge_coords():
    E = B3.exterior_algebra()
    e = lambda *idx: TensorVector.basis(3, idx, f.one)
    assert not B3.wedge_coords(e(1, 1))
    assert B3.wedge_coords(e(2, 1)) == -q ** 2 * E.monomial(0b011)
    x = E.monomial(0b101)
    assert B3.wedge_coords(B3.wedge_lift(x)) == x


def test_operator_json_shape():
    doc = operator_json(B3.antisymmetrizer(2), f)
    assert doc["k"] == 2 and doc["N"] == 3
    rows = [(r, col) for r, col, _ in doc["entries"]]
    assert rows == sorted(rows)


def test_resource_cap(monkeypatch):
    monkeypatch.setenv("QCLIFFORD_MAX_DIM", "10")
    with pytest.raises(ResourceCap):
        B3.antisymmetrizer(3).columns(f.one)


def test_shape_mismatch():
    with pytest.raises(ValueError):
        B3.R.apply(TensorVector.basis(3, (1,), f.one))


@pytest.mark.parametrize("N", [3, 4])
def test_suites_symbolic(N):
    b = BWM(N)
    for rep in (verify_rmatrix(b), verify_antisymmetrizers(b), verify_contraction(b, 30)):
        assert rep.passed, rep.failures
