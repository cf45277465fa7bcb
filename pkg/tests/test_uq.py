from fractions import Fraction

import pytest

from qclifford.clifford import CliffordAlgebra, phi
from qclifford.linalg import Matrix
from qclifford.scalar import SYMBOLIC, EvalPoint, SpecializedField
from qclifford.uq import (CartanData, Generator, SpinModule, UqEmbedding, generators,
                          lambda_exponent, span_saturation, t1, verify_adjoint,
                          verify_lambda, verify_pirels, verify_spin, verify_t1,
                          verify_uq_relations)

f = SYMBOLIC
q, c, s = f.q, f.c, f.s
SPEC = SpecializedField(EvalPoint(Fraction(5, 3), 2))
EMB = {N: UqEmbedding(CliffordAlgebra(N)) for N in (3, 4, 5, 6)}
G = Generator.parse


def unit(N, entries):
    m = Matrix.zeros(N, N, f)
    for (r, col), v in entries.items():
        m[r - 1, col - 1] = f(v)
    return m


def test_generator_parse():
    assert G("EKinv3") == Generator("EKinv", 3)
    assert str(G("Kinv1")) == "Kinv1"
    with pytest.raises(ValueError):
        G("X1")
    with pytest.raises(ValueError):
        Generator("E", 0)


def test_cartan_shapes():
    assert CartanData(5).aij(1, 2) == -1 and CartanData(5).aij(2, 1) == -2
    assert CartanData(6).aij(3, 1) == -1 and CartanData(6).aij(3, 2) == 0
    assert CartanData(4).aij(1, 2) == 0
    for N in (3, 4, 5, 6, 7, 8):
        assert CartanData(N).symmetrizable()
        assert verify_lambda(N).passed


def test_pi_k1_n3():
    alg = EMB[3].alg
    want = q * (alg.one() + (q ** -2 - 1) / (c ** 2 * f.qp * q ** 2) * alg.monomial(0b101))
    assert EMB[3].pi(G("K1")) == want


def test_pi_f1_n3():
    alg = EMB[3].alg
    assert EMB[3].pi(G("F1")) == s / (q * c ** 2 * f.qp) * alg.monomial(0b011)


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_k_inverse(N):
    emb = EMB[N]
    for i in range(1, N // 2 + 1):
        assert emb.pi(G("K%d" % i)) * emb.pi(G("Kinv%d" % i)) == emb.alg.one()


def test_e_squares_vanish_n6():
    emb = EMB[6]
    for i in (1, 2, 3):
        e = emb.pi(G("E%d" % i))
        assert not e * e


def test_commutator_n3():
    emb = EMB[3]
    E, F, K, Ki = (emb.pi(G(x)) for x in ("E1", "F1", "K1", "Kinv1"))
    assert E * F - F * E == (K - Ki) / (q - 1 / q)


def test_f_gamma_cases():
    emb = EMB[5]
    g = emb.alg.gen
    F1, F2 = emb.pi(G("F1")), emb.pi(G("F2"))
    assert F1 * g(2) - q ** -2 * g(2) * F1 == g(1)
    # k = n for odd N picks up the s factor instead
    assert F2 * g(3) - g(3) * F2 == s * g(2)
    emb = EMB[4]
    g = emb.alg.gen
    F2 = emb.pi(G("F2"))
    assert F2 * g(3) - q ** -2 * g(3) * F2 == g(1)


def test_adjoint_highest_weight():
    for N in (3, 4, 5, 6):
        emb = EMB[N]
        gN = emb.alg.gen(N)
        for i in range(1, N // 2 + 1):
            assert not emb.ad(G("E%d" % i), gN)
            want = q ** lambda_exponent(N, i, N)
            assert emb.ad(G("K%d" % i), gN) == want * gN
        assert lambda_exponent(N, 1, N) == 2


def test_lambda_nn_at_n4():
    # both K's of D_2 scale gamma_4 by q^2
    assert lambda_exponent(4, 2, 4) == 2


def test_ad_f1_n4():
    emb = EMB[4]
    assert emb.ad(G("F1"), emb.alg.gen(2)) == emb.alg.gen(1)
    assert emb.ad_matrix(G("F1")) == unit(4, {(1, 2): 1, (3, 4): -1})


def test_t1_matrices():
    assert t1(G("F1"), 3, f) == unit(3, {(1, 2): s, (2, 3): -s / q})
    assert t1(G("F1"), 3, f, fn_lead_exp=2) == unit(3, {(1, 2): q ** 2 * s, (2, 3): -s / q})
    assert t1(G("K2"), 4, f) == unit(4, {(1, 1): q ** -2, (2, 2): q ** -2, (3, 3): q ** 2,
                                         (4, 4): q ** 2})
    assert t1(G("F1"), 4, f) == unit(4, {(1, 2): 1, (3, 4): -1})


def test_q2_lead_breaks_the_commutator():
    rep = verify_t1(3, f, fn_lead_exp=2)
    assert not rep.passed
    assert verify_t1(3, f).passed


def test_spin_f1_entry():
    emb = EMB[3]
    for nu in (1, -1):
        mod = SpinModule(emb, nu)
        m = mod.matrix(G("F1"))
        assert m[1, 0] == nu / (q * c * s)
        assert mod.coords(phi(emb.alg, nu)) == [f.one, f.zero]


@pytest.mark.parametrize("N,dim", [(3, 2), (4, 2), (5, 4), (6, 4)])
def test_spin_dimensions(N, dim):
    for nu in (1, -1):
        assert SpinModule(EMB[N], nu).dim == dim


def test_spin_nu_checked():
    with pytest.raises(ValueError):
        SpinModule(EMB[3], 0)


def test_saturation_full_matrix_algebra():
    emb = UqEmbedding(CliffordAlgebra(5, SPEC))
    mod = SpinModule(emb, 1)
    mats = [mod.matrix(g) for g in generators(2, ("E", "F", "K"))]
    assert span_saturation(mats, SPEC) == 16


@pytest.mark.parametrize("N", [3, 4, 5])
def test_uq_suites(N):
    emb = EMB[N]
    for rep in (verify_uq_relations(emb), verify_pirels(emb), verify_adjoint(emb),
                verify_spin(emb), verify_t1(N, f)):
        assert rep.passed, rep.failures


def test_unknown_generator_kind():
    with pytest.raises(ValueError):
        Generator("X", 1)
