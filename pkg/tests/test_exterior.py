import random

import pytest

from qclifford.braid import BWM
from qclifford.clifford import CliffordAlgebra
from qclifford.exterior import (FockModule, degree_dim, exterior_algebra, graded_part,
                                random_element, verify_fock, wedge)
from qclifford.scalar import SYMBOLIC

f = SYMBOLIC
q, c = f.q, f.c
A3 = CliffordAlgebra(3)
F3 = FockModule(A3)
E3 = F3.ext


def test_wedge_basics():
    g = E3.gen
    assert not wedge(g(1), g(1))
    assert wedge(g(3), g(1)) == -wedge(g(1), g(3))
    with pytest.raises(ValueError):
        wedge(A3.gen(1), A3.gen(2))


def test_degree_dims():
    assert degree_dim(4, 2) == 6
    E4 = exterior_algebra(4, f)
    x = E4.gen(1) + E4.rewrite([2, 3])
    assert graded_part(x, 2) == E4.rewrite([2, 3])


def test_gamma_on_vacuum():
    for i in (1, 2, 3):
        assert F3.fock_act(i, F3.vacuum()) == E3.gen(i)


def test_gamma1_on_gamma3():
    assert F3.fock_act(1, E3.gen(3)) == E3.monomial(0b101) + c ** 2 * q * E3.one()


@pytest.mark.parametrize("N", [3, 4, 5])
def test_metric_contraction_on_vacuum(N):
    alg = CliffordAlgebra(N)
    fock = FockModule(alg)
    b = fock.bwm
    total = fock.ext.zero_element()
    for i in range(1, N + 1):
        ip = alg.prime(i)
        total = total + b.C(i, ip) * fock.fock_act(i, fock.fock_act(ip, fock.vacuum()))
    assert total == c ** 2 / q * (q ** (2 * N) - 1) / (q - 1 / q) * fock.ext.one()


def test_unit_acts_trivially():
    rho = E3.rewrite([1, 3]) + 2 * E3.gen(2)
    assert F3.act(A3.one(), rho) == rho


def test_p_plus_relations_act_by_zero():
    plus = F3.bwm.projectors()[0]
    for i in range(1, 4):
        for j in range(1, 4):
            for rho in E3.basis():
                acc = E3.zero_element()
                for (k, l), v in plus.column_tuples((i, j), f.one).items():
                    acc = acc + v * F3.act(A3.rewrite([k, l]), rho)
                assert not acc


def test_exterior_has_no_fock_action():
    with pytest.raises(ValueError):
        FockModule(CliffordAlgebra(3, c=0))


def test_module_property_small():
    rng = random.Random(9)
    for _ in range(20):
        x, y = random_element(A3, rng, 2), random_element(A3, rng, 2)
        rho = E3.monomial(rng.randrange(8))
        assert F3.act(x * y, rho) == F3.act(x, F3.act(y, rho))


@pytest.mark.parametrize("N", [3, 4])
def test_fock_suite(N):
    rep = verify_fock(CliffordAlgebra(N), instances=40)
    assert rep.passed, rep.failures


def test_shared_bwm():
    b = BWM(3)
    fock = FockModule(A3, b)
    assert fock.bwm is b
