"""U_q(so_N): Cartan data, the embedding pi into Cl, adjoint action,
the vector representation T_1 and the spin representations on minimal
left ideals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .clifford import (CliffordElement, coords_in_ideal, ideal_basis, phi, subset_masks,
                       z0, z1)
from .linalg import Echelon, Matrix, add_into
from .report import Report
from .scalar import qbinom, qbinom_base_q

KINDS = ("E", "F", "K", "Kinv", "EKinv")


@dataclass(frozen=True)
class Generator:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("unknown generator kind %r" % self.kind)
        if self.index < 1:
            raise ValueError("generator index must be >= 1")

    @property
    def name(self):
        return "%s%d" % (self.kind, self.index)

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"(EKinv|Kinv|E|F|K)(\d+)", text)
        if not m:
            raise ValueError("bad generator name %r" % text)
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return self.name


def generators(n, kinds=KINDS):
    return [Generator(k, i) for k in kinds for i in range(1, n + 1)]


class CartanData:
    """B_n for odd N, D_n for even N (node n attached to n-2)."""

    def __init__(self, N):
        if N < 3:
            raise ValueError("N must be >= 3")
        self.N = N
        self.n, self.eps = divmod(N, 2)
        n = self.n
        self.d = [2] * (n - 1) + [2 - self.eps]
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        if self.eps:
            for i in range(n - 1):
                a[i][i + 1] = a[i + 1][i] = -1
            if n >= 2:
                a[n - 1][n - 2] = -2
        else:
            for i in range(n - 2):
                a[i][i + 1] = a[i + 1][i] = -1
            if n >= 3:
                a[n - 1][n - 3] = a[n - 3][n - 1] = -1
        self.a = a

    def aij(self, i, j):
        return self.a[i - 1][j - 1]

    def di(self, i):
        return self.d[i - 1]

    def symmetrizable(self):
        n = self.n
        return all(self.d[i] * self.a[i][j] == self.d[j] * self.a[j][i]
                   for i in range(n) for j in range(n))


def lambda_exponent(N, i, j):
    """Exponent e with lambda_{i,j} = q^e."""
    n, eps = divmod(N, 2)
    ip = N + 1 - i
    if i <= n - 1:
        return -2 * (j == i) + 2 * (j == i + 1) - 2 * (j == ip - 1) + 2 * (j == ip)
    if i == n and eps:
        return -2 * (j == n) + 2 * (j == n + 2)
    if i == n:
        return -2 * (j == n - 1) - 2 * (j == n) + 2 * (j == n + 1) + 2 * (j == n + 2)
    raise ValueError("lambda index i=%d outside 1..%d" % (i, n))


def lambda_table(N):
    n = N // 2
    return [[lambda_exponent(N, i, j) for j in range(1, N + 1)] for i in range(1, n + 1)]


def verify_lambda(N):
    rep = Report("uq.lambda N=%d" % N)
    cd = CartanData(N)
    n = cd.n
    rep.add("d_i a_ij symmetric", cd.symmetrizable())
    for i in range(1, n + 1):
        rep.add("lambda_%d,j lambda_%d,j' = 1" % (i, i),
                all(lambda_exponent(N, i, j) + lambda_exponent(N, i, N + 1 - j) == 0
                    for j in range(1, N + 1)))
        for j in range(1, n + 1):
            if j < n:
                e = lambda_exponent(N, i, j + 1) + lambda_exponent(N, i, N + 1 - j)
            else:
                e = lambda_exponent(N, i, n + 1) + lambda_exponent(N, i, n + 2)
            rep.add("q_%d^a_%d%d from lambda" % (i, i, j), e == cd.di(i) * cd.aij(i, j),
                    "exponent %d vs %d" % (e, cd.di(i) * cd.aij(i, j)))
    return rep


# ---------------------------------------------------------------------------
# the embedding pi
# ---------------------------------------------------------------------------

class UqEmbedding:
    """pi : U_q(so_N) -> Cl_q^N(c^2), with the adjoint action."""

    def __init__(self, alg):
        if alg.c_mode == "zero":
            raise ValueError("pi needs c != 0")
        self.alg = alg
        self.N, self.n, self.eps = alg.N, alg.n, alg.eps
        self.field = alg.field
        self.cartan = CartanData(alg.N)
        self._pi = {}
        self._tilde = {}

    def lam(self, i, j):
        return self.field.qpow(lambda_exponent(self.N, i, j))

    def _nested(self, jmax, factor, core):
        """sum over j_1<..<j_l<=jmax of prod_r factor(l, r, j_r) * gamma_J core gamma_J'."""
        alg = self.alg
        acc = {}
        for l in range(jmax + 1):
            for js in combinations(range(1, jmax + 1), l):
                coeff = self.field.one
                for r, j in enumerate(js, start=1):
                    coeff = coeff * factor(l, r, j)
                if not coeff:
                    continue
                word = list(js) + list(core) + [alg.prime(j) for j in reversed(js)]
                add_into(acc, alg.rewrite(word).terms, coeff)
        return CliffordElement(alg, acc)

    def tilde(self, g):
        """The nested sum of pi(g) without its scalar prefactor (g not of kind E)."""
        if g in self._tilde:
            return self._tilde[g]
        f, N, n, alg = self.field, self.N, self.n, self.alg
        i = g.index
        if not 1 <= i <= n:
            raise ValueError("generator index %d outside 1..%d" % (i, n))
        base = alg.c2 * f.qp

        def denom(j):
            return base * f.qpow(N + 1 - 2 * j)

        if g.kind in ("K", "Kinv"):
            inv = g.kind == "Kinv"
            jmax = i + 1 if i <= n - 1 else n

            def kfac(l, r, j):
                lam = self.lam(i, j)
                if inv:
                    lam = 1 / lam
                return (lam - f.qpow(4 * l - 4 * r)) / denom(j)
            out = self._nested(jmax, kfac, ())
        elif g.kind in ("EKinv", "F"):
            def efac(l, r, j):
                return (1 - f.qpow(4 * r)) / denom(j)
            if i <= n - 1:
                core = (i + 1, alg.prime(i)) if g.kind == "EKinv" else (i, alg.prime(i) - 1)
                out = self._nested(i - 1, efac, core)
            elif self.eps:
                core = (n + 1, n + 2) if g.kind == "EKinv" else (n, n + 1)
                out = self._nested(n - 1, efac, core)
            else:
                core = (n + 1, n + 2) if g.kind == "EKinv" else (n - 1, n)
                out = self._nested(n - 2, efac, core)
        else:
            raise ValueError("tilde is not defined for %s" % g)
        self._tilde[g] = out
        return out

    def prefactor(self, g):
        f, N, n = self.field, self.N, self.n
        i = g.index
        base = self.alg.c2 * f.qp
        if g.kind == "K":
            return f.qpow(2 - self.eps) if i == n else f.one
        if g.kind == "Kinv":
            return f.qpow(-2 + self.eps) if i == n else f.one
        if i <= n - 1:
            return f.qpow(2 * i + 1 - N) / base
        if self.eps:
            return f.s / base if g.kind == "EKinv" else f.s / (f.q * base)
        return 1 / (f.q * base)

    def pi(self, g):
        if isinstance(g, str):
            g = Generator.parse(g)
        hit = self._pi.get(g)
        if hit is not None:
            return hit
        if not 1 <= g.index <= self.n:
            raise ValueError("generator index %d outside 1..%d" % (g.index, self.n))
        if g.kind == "E":
            out = self.pi(Generator("EKinv", g.index)) * self.pi(Generator("K", g.index))
        else:
            out = self.prefactor(g) * self.tilde(g)
        self._pi[g] = out
        return out

    # -- adjoint action ---------------------------------------------------
    def ad(self, g, v):
        if isinstance(g, str):
            g = Generator.parse(g)
        i = g.index
        K = self.pi(Generator("K", i))
        Ki = self.pi(Generator("Kinv", i))
        if g.kind == "K":
            return K * v * Ki
        if g.kind == "Kinv":
            return Ki * v * K
        if g.kind in ("EKinv", "F"):
            x = self.pi(g)
            return x * v - Ki * v * K * x
        return self.ad(Generator("EKinv", i), self.ad(Generator("K", i), v))

    def ad_matrix(self, g):
        """Matrix of ad(g) on V = span(gamma_j); ValueError if V is not invariant."""
        alg, N = self.alg, self.N
        cols = []
        for j in range(1, N + 1):
            img = self.ad(g, alg.gen(j))
            col = {}
            for m, v in img.terms.items():
                if bin(m).count("1") != 1:
                    raise ValueError("ad(%s) maps gamma_%d outside V" % (g, j))
                col[m.bit_length() - 1] = v
            cols.append(col)
        return Matrix.from_columns(cols, N, self.field)


# ---------------------------------------------------------------------------
# the vector representation
# ---------------------------------------------------------------------------

def _unit(N, k, l, field, coeff=None):
    m = Matrix.zeros(N, N, field)
    m[k - 1, l - 1] = field.one if coeff is None else coeff
    return m


def _D(N, j, field, power=1):
    m = Matrix.identity(N, field)
    m[j - 1, j - 1] = field.qpow(2 * power)
    return m


def t1(g, N, field, fn_lead_exp=0):
    """T_1(g) as an N x N matrix; column j is the image of gamma_j.

    For odd N the F_n entry at (n, n+1) is s q^fn_lead_exp.  The default
    exponent 0 is what the adjoint action produces and what the relations
    force; exponent 2 gives a variant that violates [E_n, F_n].
    """
    if isinstance(g, str):
        g = Generator.parse(g)
    f = field
    n, eps = divmod(N, 2)
    i = g.index
    if not 1 <= i <= n:
        raise ValueError("generator index %d outside 1..%d" % (i, n))
    ip = N + 1 - i
    E = lambda k, l, c=None: _unit(N, k, l, f, c)  # noqa: E731
    if g.kind == "E":
        return t1(Generator("EKinv", i), N, f, fn_lead_exp) * t1(Generator("K", i), N, f)
    if g.kind == "Kinv":
        return t1(Generator("K", i), N, f).inverse()
    if i <= n - 1:
        if g.kind == "EKinv":
            return E(i + 1, i, f.qpow(2)) - E(ip, ip - 1, f.qpow(2))
        if g.kind == "F":
            return E(i, i + 1) - E(ip - 1, ip)
        return _D(N, i, f, -1) * _D(N, i + 1, f) * _D(N, ip - 1, f, -1) * _D(N, ip, f)
    if eps:
        if g.kind == "EKinv":
            return f.s * (E(n + 1, n, f.qpow(2)) - E(n + 2, n + 1, f.q))
        if g.kind == "F":
            lead = f.qpow(fn_lead_exp)
            return f.s * (E(n, n + 1, lead) - E(n + 1, n + 2, f.qpow(-1)))
        return _D(N, n, f, -1) * _D(N, n + 2, f)
    if g.kind == "EKinv":
        return E(n + 1, n - 1, f.qpow(2)) - E(n + 2, n, f.qpow(2))
    if g.kind == "F":
        return E(n - 1, n + 1) - E(n, n + 2)
    return _D(N, n - 1, f, -1) * _D(N, n, f, -1) * _D(N, n + 1, f) * _D(N, n + 2, f)


# ---------------------------------------------------------------------------
# relations of U_q(so_N) in any representation
# ---------------------------------------------------------------------------

def serre_coefficients(m, d, field, reading="standard", rank=None):
    """Coefficients c_r of E_i^{m-r} E_j E_i^r, r = 0..m."""
    f = field
    qi = f.qpow(d)
    binom = qbinom if d == 2 else qbinom_base_q
    out = []
    for r in range(m + 1):
        e = r * (m - r) if reading == "standard" else r * (rank - r)
        out.append((-1) ** r * qi ** e * binom(m, r, f))
    return out


def check_relations(rep_of, one, N, field, report, prefix=""):
    """All presentation relations for the map rep_of(Generator) -> element."""
    cd = CartanData(N)
    f, n = field, cd.n
    E = {i: rep_of(Generator("E", i)) for i in range(1, n + 1)}
    F = {i: rep_of(Generator("F", i)) for i in range(1, n + 1)}
    K = {i: rep_of(Generator("K", i)) for i in range(1, n + 1)}
    Ki = {i: rep_of(Generator("Kinv", i)) for i in range(1, n + 1)}

    def zero(x):
        return not x

    for i in range(1, n + 1):
        report.add(prefix + "K%d K%d^-1 = 1" % (i, i), zero(K[i] * Ki[i] - one))
        report.add(prefix + "K%d^-1 K%d = 1" % (i, i), zero(Ki[i] * K[i] - one))
        for j in range(1, n + 1):
            qa = f.qpow(cd.di(i) * cd.aij(i, j))
            if i < j:
                report.add(prefix + "K%d K%d = K%d K%d" % (i, j, j, i),
                           zero(K[i] * K[j] - K[j] * K[i]))
            report.add(prefix + "K%d E%d K%d^-1" % (i, j, i),
                       zero(K[i] * E[j] * Ki[i] - qa * E[j]))
            report.add(prefix + "K%d F%d K%d^-1" % (i, j, i),
                       zero(K[i] * F[j] * Ki[i] - (1 / qa) * F[j]))
            lhs = E[i] * F[j] - F[j] * E[i]
            if i == j:
                qi = f.qpow(cd.di(i))
                lhs = lhs - (1 / (qi - 1 / qi)) * (K[i] - Ki[i])
            report.add(prefix + "[E%d,F%d]" % (i, j), zero(lhs))
    serre = {"standard": True, "rank": True}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            m = 1 - cd.aij(i, j)
            for reading in ("standard", "rank"):
                coeffs = serre_coefficients(m, cd.di(i), f, reading, rank=n)
                for name, X in (("E", E), ("F", F)):
                    total = None
                    for r, cr in enumerate(coeffs):
                        term = _power(X[i], m - r, one) * X[j] * _power(X[i], r, one)
                        term = cr * term
                        total = term if total is None else total + term
                    ok = zero(total)
                    key = prefix + "Serre %s (%d,%d) %s" % (name, i, j, reading)
                    if reading == "standard":
                        report.add(key, ok)
                    else:
                        serre["rank"] = serre["rank"] and ok
                        report.note("%s: %s" % (key, "holds" if ok else "fails"))
    return report


def _power(x, e, one):
    out = one
    for _ in range(e):
        out = out * x
    return out


def verify_uq_relations(emb):
    rep = Report("uq.pi-relations N=%d" % emb.N)
    check_relations(emb.pi, emb.alg.one(), emb.N, emb.field, rep)
    for i in range(1, emb.n + 1):
        Ei = emb.pi(Generator("E", i))
        rep.add("pi(E%d)^2 = 0" % i, not (Ei * Ei))
    return rep


def verify_t1(N, field, fn_lead_exp=0):
    rep = Report("uq.t1 N=%d%s" % (N, " (F_n lead q^%d)" % fn_lead_exp if fn_lead_exp else ""))
    check_relations(lambda g: t1(g, N, field, fn_lead_exp), Matrix.identity(N, field), N, field, rep)
    return rep


# ---------------------------------------------------------------------------
# commutation identities between pi(U_q) and the generators
# ---------------------------------------------------------------------------

def pirels_cases(N, kind, k):
    """[(j, factor_exponent or ('s', ...), extra)] for every j.

    Each entry: (j, coeff of gamma_j X, (coeff, index) of the extra term or None),
    coefficients given as callables of the field.
    """
    n, eps = divmod(N, 2)
    kp = N + 1 - k
    out = []
    for j in range(1, N + 1):
        if kind == "EKinv" and k <= n - 1:
            if j in (k + 1, kp):
                out.append((j, lambda f: f.qpow(-2), None))
            elif j == k:
                out.append((j, lambda f: f.qpow(2), (lambda f: f.qpow(2), j + 1)))
            elif j == kp - 1:
                out.append((j, lambda f: f.qpow(2), (lambda f: -f.qpow(2), j + 1)))
            else:
                out.append((j, lambda f: f.one, None))
        elif kind == "F" and k <= n - 1:
            if j in (k, kp - 1):
                out.append((j, lambda f: f.qpow(2), None))
            elif j == k + 1:
                out.append((j, lambda f: f.qpow(-2), (lambda f: f.one, j - 1)))
            elif j == kp:
                out.append((j, lambda f: f.qpow(-2), (lambda f: -f.one, j - 1)))
            else:
                out.append((j, lambda f: f.one, None))
        elif kind == "EKinv":
            if j not in (n - 1, n, n + 1, n + 2):
                out.append((j, lambda f: f.one, None))
            elif eps:
                if j == n - 1:
                    out.append((j, lambda f: f.one, None))
                elif j == n:
                    out.append((j, lambda f: f.qpow(2), (lambda f: f.qpow(2) * f.s, j + 1)))
                elif j == n + 1:
                    out.append((j, lambda f: f.one, (lambda f: -f.q * f.s, j + 1)))
                else:
                    out.append((j, lambda f: f.qpow(-2), None))
            else:
                if j == n - 1:
                    out.append((j, lambda f: f.qpow(2), (lambda f: f.qpow(2), j + 2)))
                elif j == n:
                    out.append((j, lambda f: f.qpow(2), (lambda f: -f.qpow(2), j + 2)))
                else:
                    out.append((j, lambda f: f.qpow(-2), None))
        elif kind == "F":
            if j not in (n - 1, n, n + 1, n + 2):
                out.append((j, lambda f: f.one, None))
            elif eps:
                if j == n - 1:
                    out.append((j, lambda f: f.one, None))
                elif j == n:
                    out.append((j, lambda f: f.qpow(2), None))
                elif j == n + 1:
                    out.append((j, lambda f: f.one, (lambda f: f.s, j - 1)))
                else:
                    out.append((j, lambda f: f.qpow(-2), (lambda f: -f.s / f.q, j - 1)))
            else:
                if j in (n - 1, n):
                    out.append((j, lambda f: f.qpow(2), None))
                elif j == n + 1:
                    out.append((j, lambda f: f.qpow(-2), (lambda f: f.one, j - 2)))
                else:
                    out.append((j, lambda f: f.qpow(-2), (lambda f: -f.one, j - 2)))
        else:
            raise ValueError(kind)
    return out


def verify_pirels(emb, use_tilde=False):
    """Every commutation identity between X in pi(U_q) and gamma_j, with pi(g) (or the bare nested sums)."""
    rep = Report("uq.pirels N=%d" % emb.N)
    alg, f, N, n = emb.alg, emb.field, emb.N, emb.n

    def X(g):
        return emb.tilde(g) if use_tilde else emb.pi(g)

    for i in range(1, n + 1):
        for kind in ("K", "Kinv"):
            x = X(Generator(kind, i))
            for j in range(1, N + 1):
                lam = emb.lam(i, j)
                if kind == "Kinv":
                    lam = 1 / lam
                g = alg.gen(j)
                rep.add("%s%d gamma_%d" % (kind, i, j), x * g == lam * (g * x))
    for kind in ("EKinv", "F"):
        for k in range(1, n + 1):
            x = X(Generator(kind, k))
            for j, fac, extra in pirels_cases(N, kind, k):
                g = alg.gen(j)
                rhs = fac(f) * (g * x)
                if extra is not None:
                    rhs = rhs + extra[0](f) * alg.gen(extra[1])
                lhs = x * g
                rep.add("%s%d gamma_%d" % (kind, k, j), lhs == rhs,
                        "" if lhs == rhs else (lhs - rhs).pretty())
    # E-type nested sums are tau-images of the F-type ones
    from .clifford import tau
    for i in range(1, n + 1):
        e = emb.pi(Generator("EKinv", i))
        fl = emb.pi(Generator("F", i))
        factor = f.q if (emb.eps and i == n) else f.one
        rep.add("pi(EKinv%d) = q^(eps delta_in) tau(pi(F%d))" % (i, i), e == factor * tau(fl))
    return rep


# ---------------------------------------------------------------------------
# adjoint action vs T_1
# ---------------------------------------------------------------------------

def verify_adjoint(emb):
    rep = Report("uq.adjoint N=%d" % emb.N)
    N, n, f = emb.N, emb.n, emb.field
    mats = {}
    invariant = True
    for g in generators(n):
        try:
            mats[g] = emb.ad_matrix(g)
        except ValueError as exc:
            invariant = False
            rep.add("ad(%s) V in V" % g, False, str(exc))
    rep.add("V invariant under ad", invariant)
    if not invariant:
        return rep
    check_relations(lambda g: mats[g], Matrix.identity(N, f), N, f, rep, prefix="ad: ")
    mismatches = []
    for g in generators(n):
        if mats[g] != t1(g, N, f):
            mismatches.append(g.name)
    rep.add("ad matrices equal T1 entrywise", not mismatches,
            "differ for %s; change of basis candidate" % ",".join(mismatches)
            if mismatches else "")
    gN = emb.alg.gen(N)
    for i in range(1, n + 1):
        lam = emb.lam(i, N)
        rep.add("ad(K%d) gamma_N = lambda_%d,N gamma_N" % (i, i),
                emb.ad(Generator("K", i), gN) == lam * gN)
        rep.add("ad(E%d) gamma_N = 0" % i, not emb.ad(Generator("E", i), gN))
        simplified = f.qpow(2 if i == 1 else 0)
        if lam == simplified:
            rep.add("lambda_%d,N = q^(2 delta_i1)" % i, True)
        else:
            rep.note("lambda_%d,N = %s differs from q^(2 delta_i1) at N=%d"
                     % (i, f.to_scalar(lam), N))
    return rep


# ---------------------------------------------------------------------------
# spin representations
# ---------------------------------------------------------------------------

class SpinModule:
    """Left multiplication by pi(U_q) on I^nu (odd N) or Cl^{nu}phi^1 (even N)."""

    def __init__(self, emb, nu):
        alg = emb.alg
        if nu not in (1, -1):
            raise ValueError("nu must be +1 or -1")
        self.emb, self.alg, self.nu = emb, alg, nu
        if alg.eps:
            self.masks = subset_masks(alg.n)
            self.basis = ideal_basis(alg, nu)
            self.phi = phi(alg, nu)
        else:
            parity = 0 if nu == 1 else 1
            self.masks = [m for m in subset_masks(alg.n) if bin(m).count("1") % 2 == parity]
            self.phi = phi(alg, 1)
            self.basis = [alg.monomial(m) * self.phi for m in self.masks]
        self.dim = len(self.basis)
        self._mats = {}

    @property
    def label(self):
        return "spin:%+d" % self.nu

    def coords(self, x):
        return coords_in_ideal(x, self.nu if self.alg.eps else 1, self.basis)

    def matrix_of(self, element):
        cols = []
        for b in self.basis:
            vec = self.coords(element * b)
            cols.append({r: v for r, v in enumerate(vec) if v})
        return Matrix.from_columns(cols, self.dim, self.alg.field)

    def matrix(self, g):
        if isinstance(g, str):
            g = Generator.parse(g)
        hit = self._mats.get(g)
        if hit is None:
            hit = self._mats[g] = self.matrix_of(self.emb.pi(g))
        return hit

    def highest_weight_index(self):
        """Position of the expected highest weight vector in the basis."""
        if self.alg.eps or self.nu == 1:
            return self.masks.index(0)
        return self.masks.index(1 << (self.alg.n - 1))

    def expected_hw_eigenvalue(self, i):
        f, n = self.alg.field, self.alg.n
        if self.alg.eps:
            return f.qpow(1 if i == n else 0)
        if self.nu == 1:
            return f.qpow(2 if i == n else 0)
        return f.qpow(2 if i == n - 1 else 0)


def spin_rep(emb, nu, g):
    return SpinModule(emb, nu).matrix(g)


def weights(mats_K):
    """Diagonals of the commuting K matrices, one tuple per basis vector."""
    for m in mats_K:
        if not m.is_diagonal():
            raise ValueError("K matrix is not diagonal on this basis")
    dim = mats_K[0].nrows
    return [tuple(m[r, r] for m in mats_K) for r in range(dim)]


def highest_weight_vectors(mats_EKinv):
    dim = mats_EKinv[0].ncols
    return [c for c in range(dim) if all(not m.column(c) for m in mats_EKinv)]


def span_saturation(mats, field):
    """Dimension of the algebra generated by the matrices (with identity)."""
    dim = mats[0].nrows
    ech = Echelon()
    ident = Matrix.identity(dim, field)
    frontier = [ident]
    ech.add(ident.as_vector())
    while frontier and len(ech) < dim * dim:
        nxt = []
        for x in frontier:
            for m in mats:
                y = m * x
                if not ech.contains(y.as_vector()):
                    ech.add(y.as_vector())
                    nxt.append(y)
        frontier = nxt
    return len(ech)


def verify_spin(emb, irreducibility=None):
    alg, f, n, N = emb.alg, emb.field, emb.n, emb.N
    rep = Report("uq.spin N=%d" % N)
    for nu in (1, -1):
        mod = SpinModule(emb, nu)
        tag = "nu=%+d " % nu
        want = 1 << n if alg.eps else 1 << (n - 1)
        rep.add(tag + "dimension %d" % want, mod.dim == want, "dim %d" % mod.dim)
        ks = [mod.matrix(Generator("K", i)) for i in range(1, n + 1)]
        es = [mod.matrix(Generator("EKinv", i)) for i in range(1, n + 1)]
        try:
            wts = weights(ks)
            rep.add(tag + "K diagonal", True)
        except ValueError as exc:
            rep.add(tag + "K diagonal", False, str(exc))
            continue
        hw = highest_weight_vectors(es)
        idx = mod.highest_weight_index()
        rep.add(tag + "unique highest weight vector", hw == [idx], "found %s" % hw)
        rep.add(tag + "highest weight eigenvalues",
                all(wts[idx][i - 1] == mod.expected_hw_eigenvalue(i) for i in range(1, n + 1)))
        check_relations(mod.matrix, Matrix.identity(mod.dim, f), N, f, rep, prefix=tag)
        for g in generators(n, ("E", "F")):
            m = mod.matrix(g)
            p = Matrix.identity(mod.dim, f)
            for _ in range(mod.dim):
                p = p * m
            rep.add(tag + "%s nilpotent" % g, not p)
        if alg.eps:
            zm = mod.matrix_of(z1(alg))
            rep.add(tag + "z1 acts by nu", zm == nu * Matrix.identity(mod.dim, f))
        else:
            zm = mod.matrix_of(z0(alg))
            rep.add(tag + "z0 acts by nu", zm == nu * Matrix.identity(mod.dim, f))
        run_irr = irreducibility if irreducibility is not None else f.mode == "specialized"
        if run_irr:
            mats = [mod.matrix(g) for g in generators(n, ("E", "F", "K"))]
            d = span_saturation(mats, f)
            rep.add(tag + "span saturation %d" % (mod.dim ** 2), d == mod.dim ** 2, "dim %d" % d)
    return rep


def rep_matrix_json(N, module, generator, basis_tag, matrix, field):
    return {"N": N, "module": module, "generator": str(generator), "basis": basis_tag,
            "entries": [[r, c, field.to_scalar(v).to_json()] for r, c, v in matrix.entries()]}
