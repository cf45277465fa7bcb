import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qclifford.clifford import (INHOMOGENEOUS, CliffordAlgebra, CliffordElement,
                                NotInIdeal, algebra_from_tags, centralizer_solve,
                                coords_in_ideal, degree, ideal_basis, phi, rho,
                                rho_square_factor, scale_auto, tau, verify_associativity,
                                verify_basis_closure, verify_cl0_commutative,
                                verify_defining_relations, verify_rescaling, verify_tau,
                                z0, z1, z_central)
from qclifford.scalar import SYMBOLIC, EvalPoint, SpecializedField

f = SYMBOLIC
q, c, s = f.q, f.c, f.s
SPEC = SpecializedField(EvalPoint(Fraction(5, 3), 2))

A3, A4, A5 = CliffordAlgebra(3), CliffordAlgebra(4), CliffordAlgebra(5)


# normal form oracles

def test_rewrite_31():
    assert A3.rewrite([3, 1]) == -A3.monomial(0b101) + c ** 2 * q ** 2 * f.qp * A3.one()


def test_rewrite_22():
    assert A3.rewrite([2, 2]) == (q - 1 / q) * A3.monomial(0b101) + c ** 2 * A3.one()


def test_rewrite_21_even():
    assert A4.rewrite([2, 1]) == -q ** 2 * A4.monomial(0b11)


def test_square_vanishes():
    assert not A4.rewrite([1, 1])


def test_exterior_rewrite():
    E3 = CliffordAlgebra(3, c=0)
    assert E3.rewrite([3, 1]) == -E3.monomial(0b101)
    # the middle generator does not square to zero at c = 0
    assert E3.rewrite([2, 2]) == (q - 1 / q) * E3.monomial(0b101)
    assert not E3.rewrite([1, 1])


def test_unit_and_nilpotent():
    x = A3.monomial(0b101) + 3 * A3.gen(2)
    assert A3.one() * x == x
    assert not A3.monomial(0b101) * A3.gen(3)


def test_bad_index():
    with pytest.raises(IndexError):
        A3.gen(4)
    with pytest.raises(IndexError):
        A3.rewrite([0])


def test_mixing_algebras_rejected():
    with pytest.raises(ValueError):
        A3.gen(1) * CliffordAlgebra(3, c=0).gen(1)


# gradings and tau

def test_degrees():
    assert degree(A4.rewrite([1, 2]), 0) == 0
    assert degree(A4.gen(1), 1) == 1
    assert degree(A4.gen(4), 1) == -1
    assert degree(A4.gen(1) + A4.gen(2), 1) == INHOMOGENEOUS


def test_tau():
    assert tau(A4.gen(1)) == A4.gen(4)
    assert tau(A4.rewrite([1, 2])) == A4.rewrite([3, 4])
    rng = random.Random(3)
    for _ in range(10):
        x = A5.monomial(rng.randrange(32))
        assert tau(tau(x)) == x


def test_scale_auto_needs_balanced_factors():
    with pytest.raises(ValueError):
        scale_auto(A4.gen(1), [2, 1, 1, 1])
    x = A4.rewrite([1, 4])
    assert scale_auto(x, [2, 1, 1, Fraction(1, 2)]) == x


# ideals and central elements

def test_phi_eigen():
    for nu in (1, -1):
        assert A3.gen(2) * phi(A3, nu) == nu * c * phi(A3, nu)


def test_rho_square():
    for eta in (1, -1):
        r = rho(A5, eta)
        assert r * r == 2 * eta * c ** 5 * q ** 6 * f.qp ** 2 * r
        assert rho_square_factor(A5, eta) == 2 * eta * c ** 5 * q ** 6 * f.qp ** 2


def test_ideal_basis_size_and_coords():
    assert len(ideal_basis(A4)) == 4
    assert coords_in_ideal(phi(A3, 1)) == [f.one, f.zero]


def test_not_in_ideal():
    with pytest.raises(NotInIdeal):
        coords_in_ideal(A3.one())


def test_z1_closed_form():
    assert z1(A3) == (A3.gen(2) + A3.monomial(0b111) / (q * c ** 2)) / c


def test_z_squares():
    assert z0(A4) * z0(A4) == A4.one()
    assert z1(A3) * z1(A3) == A3.one()
    with pytest.raises(ValueError):
        z1(A4)
    with pytest.raises(ValueError):
        z0(A3)


def test_z1_on_ideals():
    for eta in (1, -1):
        ph = phi(A3, eta)
        assert z1(A3) * ph == eta * ph


def test_centralizer_even():
    sols = centralizer_solve(A4, [1, 1], 0)
    assert len(sols) == 1
    z = z_central(A4, [1, 1], 0)
    m = min(z.terms)
    assert sols[0] == (sols[0].terms[m] / z.terms[m]) * z
    assert centralizer_solve(A4, [3, Fraction(1, 2)], 1) == []


# suites

@pytest.mark.parametrize("N", [3, 4])
def test_defining_relations_symbolic(N):
    assert verify_defining_relations(CliffordAlgebra(N)).passed


def test_defining_relations_exterior():
    rep = verify_defining_relations(CliffordAlgebra(4, c=0))
    assert rep.passed


@pytest.mark.parametrize("N", [5, 6])
def test_defining_relations_specialized(N):
    assert verify_defining_relations(CliffordAlgebra(N, SPEC)).passed


@pytest.mark.parametrize("N", [3, 4, 5])
def test_structure_suites(N):
    alg = CliffordAlgebra(N)
    for rep in (verify_basis_closure(alg), verify_tau(alg), verify_rescaling(alg),
                verify_cl0_commutative(alg)):
        assert rep.passed, rep.failures


# JSON

def test_json_round_trip():
    x = A4.rewrite([4, 2, 1]) + s * A4.gen(3)
    assert CliffordElement.from_json(x.to_json()) == x
    y = CliffordAlgebra(4, SPEC).rewrite([3, 1, 2])
    assert CliffordElement.from_json(y.to_json()) == y


def test_json_mask_is_gamma1_first():
    assert A4.monomial(0b0101).to_json()["terms"][0]["mask"] == "1010"


def test_algebra_from_tags():
    assert algebra_from_tags(3, "zero").c_mode == "zero"
    with pytest.raises(ValueError):
        algebra_from_tags(3, "symbolic", "5/3")


# properties

words = st.lists(st.integers(1, 4), max_size=3)


@settings(max_examples=50, deadline=None)
@given(words, words, words)
def test_associativity_property(a, b, w):
    x, y, z = A4.rewrite(a), A4.rewrite(b), A4.rewrite(w)
    assert (x * y) * z == x * (y * z)


@settings(max_examples=50, deadline=None)
@given(words, words)
def test_rewrite_is_multiplicative(a, b):
    assert A4.rewrite(a + b) == A4.rewrite(a) * A4.rewrite(b)


@settings(max_examples=30, deadline=None)
@given(words, words)
def test_tau_reverses_products(a, b):
    x, y = A4.rewrite(a), A4.rewrite(b)
    assert tau(x * y) == tau(y) * tau(x)


def test_tau_is_not_multiplicative():
    x, y = A4.gen(1), A4.gen(2)
    assert tau(x * y) != tau(x) * tau(y)


def test_associativity_triples():
    rng = random.Random(0)
    triples = [tuple(rng.randrange(32) for _ in range(3)) for _ in range(100)]
    assert verify_associativity(A5, triples).passed
