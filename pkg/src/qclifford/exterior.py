"""The q-exterior algebra and the Fock-type action of Cl on it.

Exterior elements are Clifford elements of the c = 0 algebra.  The action
gamma_i |> rho_m = gamma_i ^ rho_m + (1+q^{2N-4})/(1+q^{2N-4m}) <gamma_i, rho_m>
computes the contraction on tensor representatives and reads the result
back through the antisymmetrizer.
"""

from __future__ import annotations

import random
from itertools import combinations

from .braid import BWM, TensorVector, pack
from .clifford import CliffordAlgebra, CliffordElement, mask_indices
from .linalg import Echelon, add_into
from .report import Report


def exterior_algebra(N, field):
    return CliffordAlgebra(N, field, c=0)


def wedge(x, y):
    if x.algebra.c_mode != "zero" or y.algebra.c_mode != "zero":
        raise ValueError("wedge needs elements of the exterior algebra (c = 0)")
    return x * y


def graded_part(x, m):
    return CliffordElement(x.algebra, {k: v for k, v in x.terms.items()
                                       if bin(k).count("1") == m})


def degree_dim(N, m):
    return len(list(combinations(range(N), m)))


class FockModule:
    """The representation of Cl_q^N(c^2) on Lambda_q(N)."""

    def __init__(self, alg, bwm=None):
        if alg.c_mode == "zero":
            raise ValueError("the Fock action is defined for the Clifford algebra with c != 0")
        self.alg = alg
        self.N = alg.N
        self.field = alg.field
        self.bwm = bwm or BWM(alg.N, alg.field, c=alg.c)
        self.ext = self.bwm.exterior_algebra()
        self._gamma = {}

    def _coeff(self, m):
        f, N = self.field, self.N
        return (1 + f.qpow(2 * N - 4)) / (1 + f.qpow(2 * N - 4 * m))

    def _gen_on_mask(self, i, mask):
        key = (i, mask)
        hit = self._gamma.get(key)
        if hit is not None:
            return hit
        ext, N = self.ext, self.N
        f = self.field
        out = dict(ext.mono_product(1 << (i - 1), mask))
        m = bin(mask).count("1")
        if m:
            rho = TensorVector(N, m, {pack(mask_indices(mask), N): f.one})
            ei = TensorVector(N, 1, {i - 1: f.one})
            ctr = self.bwm.contract(ei, rho)
            coords = self.bwm.wedge_coords(ctr)
            add_into(out, coords.terms, self._coeff(m))
        self._gamma[key] = out
        return out

    def fock_act(self, i, rho):
        """gamma_i |> rho, graded part by graded part."""
        self.alg._check_index(i)
        self._check(rho)
        acc = {}
        for mask, v in rho.terms.items():
            add_into(acc, self._gen_on_mask(i, mask), v)
        return CliffordElement(self.ext, acc)

    def _check(self, rho):
        if not self.ext.same(rho.algebra):
            raise ValueError("expected an element of the exterior algebra with N=%d" % self.N)

    def act(self, x, rho):
        """x |> rho for a normal-form Clifford element x."""
        if not self.alg.same(x.algebra):
            raise ValueError("element belongs to a different Clifford algebra")
        self._check(rho)
        acc = {}
        for mask, coeff in x.terms.items():
            vec = dict(rho.terms)
            for i in reversed(mask_indices(mask)):
                nxt = {}
                for m, v in vec.items():
                    add_into(nxt, self._gen_on_mask(i, m), v)
                vec = nxt
                if not vec:
                    break
            add_into(acc, vec, coeff)
        return CliffordElement(self.ext, acc)

    def vacuum(self):
        return self.ext.one()

    def gamma_matrix(self, i):
        """Gamma_i on the monomial basis of Lambda_q(N), as {mask: column}."""
        return {mask: self._gen_on_mask(i, mask) for mask in range(1 << self.N)}


def random_element(alg, rng, terms=3, spread=3):
    f = alg.field
    out = {}
    for _ in range(terms):
        out[rng.randrange(1 << alg.N)] = f(rng.randint(-spread, spread) or 1)
    return CliffordElement(alg, out)


def verify_fock(alg, instances=200, seed=0):
    fock = FockModule(alg)
    N, f = alg.N, alg.field
    rep = Report("fock N=%d" % N)
    ext, bwm = fock.ext, fock.bwm
    # the exterior engine and the antisymmetrizer quotient agree
    coords_ok = True
    for k in range(0, N + 1):
        for word in _words(N, k):
            t = TensorVector(N, k, {pack(word, N): f.one})
            if bwm.wedge_coords(t) != ext.rewrite(word):
                coords_ok = False
    rep.add("wedge_coords agrees with the c=0 rewrite (all words up to %d legs)"
            % min(N, 3), coords_ok)
    # operator-level defining relations on every graded piece
    pplus = bwm.projectors()[0]
    basis = ext.basis()
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            col = pplus.column_tuples((i, j), f.one)
            ok = True
            for rho in basis:
                acc = ext.zero_element()
                for (k, l), v in col.items():
                    acc = acc + v * fock.fock_act(k, fock.fock_act(l, rho))
                if acc:
                    ok = False
                    break
            rep.add("P+ (%d,%d) on Lambda" % (i, j), ok)
    from .clifford import c_relation_value
    value = c_relation_value(alg)
    ok = True
    for rho in basis:
        acc = ext.zero_element()
        for i in range(1, N + 1):
            ip = alg.prime(i)
            acc = acc + bwm.C(i, ip) * fock.fock_act(i, fock.fock_act(ip, rho))
        if acc != value * rho:
            ok = False
    rep.add("C^ij Gamma_i Gamma_j = c^2 (q^2N-1)/(q^2-1)", ok)
    # module property
    rng = random.Random(seed)
    failures = 0
    for _ in range(instances):
        x, y = random_element(alg, rng, 2), random_element(alg, rng, 2)
        rho = ext.monomial(rng.randrange(1 << N))
        if fock.act(x * y, rho) != fock.act(x, fock.act(y, rho)):
            failures += 1
    rep.add("act(xy) = act(x) act(y) (%d instances)" % instances, failures == 0,
            "%d failures" % failures if failures else "")
    # faithfulness and triangularity
    ech = Echelon()
    tri = True
    for mask in range(1 << N):
        img = fock.act(alg.monomial(mask), fock.vacuum())
        ech.add(img.terms)
        top = bin(mask).count("1")
        if img.coeff(mask) != f.one:
            tri = False
        for m in img.terms:
            if m != mask and bin(m).count("1") >= top:
                tri = False
    rep.add("faithful: 2^N independent images of 1", len(ech) == 1 << N,
            "rank %d" % len(ech))
    rep.add("triangular: top term gamma^I, rest of lower degree", tri)
    return rep


def _words(N, k):
    if k > 3:
        return
    if k == 0:
        yield ()
        return
    for w in _words(N, k - 1):
        for i in range(1, N + 1):
            yield w + (i,)
