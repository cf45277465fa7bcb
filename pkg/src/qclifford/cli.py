"""Command line front end: normal forms, verification suites and exports.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .braid import BWM, ResourceCap, operator_json, verify_antisymmetrizers, \
    verify_contraction, verify_rmatrix
from .clifford import (CliffordAlgebra, algebra_from_tags, verify_associativity,
                       verify_basis_closure, verify_center, verify_cl0_commutative,
                       verify_defining_relations, verify_ideals, verify_phi,
                       verify_rescaling, verify_semisimple, verify_tau, verify_z_elements,
                       z0, z1)
from .exterior import verify_fock
from .report import Report
from .uq import (KINDS, SpinModule, UqEmbedding, generators, rep_matrix_json, t1,
                 verify_adjoint, verify_lambda, verify_pirels, verify_spin, verify_t1,
                 verify_uq_relations)

OK, FAILED, USAGE, CAPPED = 0, 1, 2, 3

SUITES = ("clifford", "bwm", "fock", "pi", "pirels", "adjoint", "spin", "center", "ideals")

# largest N per suite: (symbolic q, rational q)
CAPS = {
    "clifford": (6, 7),
    "bwm": (4, 6),
    "fock": (4, 5),
    "pi": (7, 8),
    "pirels": (7, 8),
    "adjoint": (7, 8),
    "spin": (6, 8),
    "center": (6, 8),
    "ideals": (6, 8),
}

EXPORTS = ("spinrep", "t1", "rhat", "antisym", "z-elements", "pi-images")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

def _rational(text, what):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError("%s must be 'symbolic' or a rational p/q, got %r" % (what, text)) \
            from None


def parse_tags(c, q):
    """Normalize --c/--q into (c_tag, q_tag) strings."""
    q_tag = "symbolic" if q in (None, "symbolic") else str(_rational(q, "--q"))
    if q_tag != "symbolic" and Fraction(q_tag) in (0, 1, -1):
        raise UsageError("--q must avoid 0 and +-1")
    if c is None:
        c_tag = "symbolic" if q_tag == "symbolic" else "1"
    elif c in ("symbolic", "0", "zero"):
        c_tag = "zero" if c in ("0", "zero") else "symbolic"
    else:
        val = _rational(c, "--c")
        c_tag = "zero" if val == 0 else str(val)
    if q_tag != "symbolic" and c_tag == "symbolic":
        raise UsageError("a rational --q needs a rational --c")
    return c_tag, q_tag


def build_algebra(N, c_tag, q_tag):
    return algebra_from_tags(N, c_tag, q_tag)


def check_N(N):
    if not 3 <= N <= 16:
        raise UsageError("--N must lie in 3..16, got %d" % N)


def check_cap(suite, N, q_tag):
    sym, rat = CAPS[suite]
    cap = sym if q_tag == "symbolic" else rat
    if N > cap:
        hint = " (rerun with a rational --q, e.g. --q 5/3 --c 2)" if q_tag == "symbolic" \
            and rat > sym else ""
        raise ResourceCap("suite %s is capped at N=%d for %s q%s"
                          % (suite, cap, "symbolic" if q_tag == "symbolic" else "rational",
                             hint))


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def _nonzero_c(alg, suite):
    if alg.c_mode == "zero":
        raise UsageError("suite %s needs c != 0" % suite)


def run_suite(suite, N, c_tag, q_tag, seed=0):
    """Run one suite and return its reports (picklable work item)."""
    import random
    alg = build_algebra(N, c_tag, q_tag)
    out = []
    if suite == "clifford":
        rng = random.Random(seed)
        triples = [tuple(rng.randrange(1 << N) for _ in range(3)) for _ in range(500)]
        out += [verify_defining_relations(alg), verify_basis_closure(alg),
                verify_associativity(alg, triples), verify_tau(alg)]
        if alg.c_mode != "zero":
            out += [verify_rescaling(alg), verify_cl0_commutative(alg)]
    elif suite == "bwm":
        bwm = BWM(N, alg.field, c=alg.c)
        out += [verify_rmatrix(bwm), verify_antisymmetrizers(bwm, seed=seed),
                verify_contraction(bwm, instances=100 if N <= 4 else 20, seed=seed)]
    elif suite == "fock":
        _nonzero_c(alg, suite)
        out.append(verify_fock(alg, seed=seed))
    elif suite == "pi":
        _nonzero_c(alg, suite)
        out += [verify_lambda(N), verify_uq_relations(UqEmbedding(alg))]
    elif suite == "pirels":
        _nonzero_c(alg, suite)
        out.append(verify_pirels(UqEmbedding(alg)))
    elif suite == "adjoint":
        _nonzero_c(alg, suite)
        out += [verify_adjoint(UqEmbedding(alg)), verify_t1(N, alg.field)]
    elif suite == "spin":
        _nonzero_c(alg, suite)
        out.append(verify_spin(UqEmbedding(alg)))
    elif suite == "center":
        _nonzero_c(alg, suite)
        out += [verify_z_elements(alg), verify_center(alg, seed=seed)]
    elif suite == "ideals":
        _nonzero_c(alg, suite)
        out += [verify_phi(alg), verify_ideals(alg)]
        if alg.eps:
            out.append(verify_semisimple(alg))
    else:
        raise UsageError("unknown suite %r" % suite)
    return out


def _work(item):
    return run_suite(*item)


def cmd_verify(args):
    N = args.N
    check_N(N)
    c_tag, q_tag = parse_tags(args.c, args.q)
    suite = args.suite_flag or args.suite or "all"
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in SUITES:
            raise UsageError("unknown suite %r (choose from %s, all)"
                             % (name, ", ".join(SUITES)))
        check_cap(name, N, q_tag)
    items = [(name, N, c_tag, q_tag) for name in names]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_work, items))
    else:
        results = [_work(it) for it in items]
    reports = sorted((r for rs in results for r in rs), key=lambda r: r.name)
    passed = all(r.passed for r in reports)
    if args.format == "json":
        doc = {"N": N, "c": c_tag, "q": q_tag, "suite": suite, "passed": passed,
               "reports": [r.to_json() for r in reports]}
        emit(args, dumps(doc))
    else:
        lines = []
        for r in reports:
            lines.append(("PASS " if r.passed else "FAIL ") + r.summary())
            for chk in sorted(r.failures, key=lambda c: c.key):
                lines.append("    failed: %s %s" % (chk.key, chk.detail))
            for n in sorted(r.notes):
                lines.append("    note: %s" % n)
        lines.append("overall: %s" % ("PASS" if passed else "FAIL"))
        emit(args, "\n".join(lines) + "\n")
    return OK if passed else FAILED


# ---------------------------------------------------------------------------
# normal form
# ---------------------------------------------------------------------------

def cmd_nf(args):
    N = args.N
    check_N(N)
    c_tag, q_tag = parse_tags(args.c, args.q)
    alg = build_algebra(N, c_tag, q_tag)
    word = []
    for w in args.word:
        try:
            i = int(w)
        except ValueError:
            raise UsageError("word letters must be integers, got %r" % w) from None
        if not 1 <= i <= N:
            raise UsageError("index %d outside 1..%d" % (i, N))
        word.append(i)
    x = alg.rewrite(word)
    if args.format == "json":
        emit(args, dumps(x.to_json()))
    else:
        emit(args, x.pretty() + "\n")
    return OK


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def _nu(text):
    if text in (None, "+1", "1", "+"):
        return 1
    if text in ("-1", "-"):
        return -1
    raise UsageError("--nu must be +1 or -1, got %r" % text)


def _matrix_pretty(title, matrix, field):
    lines = [title]
    for r in range(matrix.nrows):
        lines.append("  [" + ", ".join(str(field.to_scalar(matrix[r, c]))
                                       for c in range(matrix.ncols)) + "]")
    return "\n".join(lines)


def cmd_export(args):
    N = args.N
    check_N(N)
    c_tag, q_tag = parse_tags(args.c, args.q)
    kind = args.kind
    alg = build_algebra(N, c_tag, q_tag)
    f = alg.field
    n = alg.n
    pretty = []
    if kind == "spinrep":
        _nonzero_c(alg, kind)
        check_cap("spin", N, q_tag)
        nu = _nu(args.nu)
        mod = SpinModule(UqEmbedding(alg), nu)
        basis = "ideal" if alg.eps else "ideal-parity"
        mats = []
        for g in generators(n, KINDS):
            m = mod.matrix(g)
            mats.append(rep_matrix_json(N, mod.label, g, basis, m, f))
            pretty.append(_matrix_pretty("%s on %s" % (g, mod.label), m, f))
        doc = {"N": N, "c": c_tag, "q": q_tag, "module": mod.label, "dim": mod.dim,
               "basis_masks": list(mod.masks), "matrices": mats}
    elif kind == "t1":
        mats = []
        for g in generators(n, KINDS):
            m = t1(g, N, f)
            mats.append(rep_matrix_json(N, "vector", g, "gamma", m, f))
            pretty.append(_matrix_pretty("T1(%s)" % g, m, f))
        doc = {"N": N, "q": q_tag, "module": "vector", "dim": N, "matrices": mats}
    elif kind in ("rhat", "antisym"):
        bwm = BWM(N, f, c=alg.c)
        if kind == "rhat":
            op = bwm.R
        else:
            if args.k is None:
                raise UsageError("export antisym needs --k")
            if not 0 <= args.k <= N:
                raise UsageError("--k must lie in 0..%d" % N)
            op = bwm.antisymmetrizer(args.k)
        doc = operator_json(op, f)
        doc.update({"q": q_tag, "kind": kind})
        pretty = ["%d %d %s" % (r, c, v) for r, c, v in
                  ((r, c, f.to_scalar(v)) for r, c, v in op.entries(f.one))]
    elif kind == "z-elements":
        _nonzero_c(alg, kind)
        name, z = ("z1", z1(alg)) if alg.eps else ("z0", z0(alg))
        doc = {name: z.to_json()}
        pretty = ["%s = %s" % (name, z.pretty())]
    elif kind == "pi-images":
        _nonzero_c(alg, kind)
        emb = UqEmbedding(alg)
        doc = {"N": N, "c": c_tag, "q": q_tag, "images": {}}
        for g in generators(n, KINDS):
            x = emb.pi(g)
            doc["images"][g.name] = x.to_json()
            pretty.append("pi(%s) = %s" % (g, x.pretty()))
    else:
        raise UsageError("unknown export %r" % kind)
    if args.format == "json":
        emit(args, dumps(doc))
    else:
        emit(args, "\n".join(pretty) + "\n")
    return OK


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------

def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, required=True, help="dimension of V (3..16)")
    common.add_argument("--c", default=None, help="symbolic | 0 | p/q")
    common.add_argument("--q", default=None, help="symbolic | p/q")
    common.add_argument("--out", default=None, help="write output to this file")
    common.add_argument("--format", choices=("json", "pretty"), default="json")

    p = argparse.ArgumentParser(prog="qclifford",
                                description="Exact FRT-Clifford and U_q(so_N) computations.")
    p.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = p.add_subparsers(dest="command", required=True)

    nf = sub.add_parser("nf", parents=[common], help="normal form of a word in the generators")
    nf.add_argument("word", nargs="*", help="generator indices, leftmost first")
    nf.set_defaults(func=cmd_nf)

    ver = sub.add_parser("verify", parents=[common], help="run identity suites")
    ver.add_argument("suite", nargs="?", default=None, help="%s or all" % ", ".join(SUITES))
    ver.add_argument("--suite", dest="suite_flag", default=None)
    ver.add_argument("--jobs", type=int, default=1, help="worker processes")
    ver.set_defaults(func=cmd_verify)

    ex = sub.add_parser("export", parents=[common], help="export matrices and elements")
    ex.add_argument("kind", choices=EXPORTS)
    ex.add_argument("--nu", default=None, help="+1 or -1 (spinrep)")
    ex.add_argument("--k", type=int, default=None, help="number of legs (antisym)")
    ex.set_defaults(func=cmd_export)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE
    except ResourceCap as exc:
        print("resource cap: %s" % exc, file=sys.stderr)
        return CAPPED
    except (ValueError, IndexError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
