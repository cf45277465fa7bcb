"""Exact linear algebra over any of the coefficient fields.

Vectors are sparse dicts ``key -> coefficient``; keys are any hashables with
a total order (ints, tuples).  Nothing here looks at the coefficient type
beyond ``+ - * /`` and truthiness, so Scalars, mpq and QuadNumbers all work.
"""

from __future__ import annotations


def add_into(acc, vec, factor=None):
    """acc += factor * vec, dropping cancelled entries."""
    for key, v in vec.items():
        if factor is not None:
            v = v * factor
        old = acc.get(key)
        if old is None:
            if v:
                acc[key] = v
        else:
            new = old + v
            if new:
                acc[key] = new
            else:
                del acc[key]
    return acc


def scale(vec, factor):
    if not factor:
        return {}
    return {k: v * factor for k, v in vec.items()}


def combine(pairs):
    """Sum of coeff * vec over (coeff, vec) pairs."""
    acc = {}
    for coeff, vec in pairs:
        add_into(acc, vec, coeff)
    return acc


class Echelon:
    """Incrementally built reduced basis of a span.

    Optionally tracks, for every stored row, which combination of the
    inserted vectors produced it (``track=True``); ``nullspace`` uses this.
    """

    def __init__(self, track=False):
        self.rows = {}        # pivot key -> row with row[pivot] == 1
        self.combos = {}      # pivot key -> combination of input labels
        self.track = track

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec, combo=None):
        # stored rows vanish at every other pivot, so a single pass suffices
        vec = dict(vec)
        for key in [k for k in vec if k in self.rows]:
            f = vec[key]
            add_into(vec, self.rows[key], -f)
            if combo is not None:
                add_into(combo, self.combos[key], -f)
        return vec

    def add(self, vec, label=None):
        """Insert ``vec``; returns the residual combination if dependent."""
        combo = {label: 1} if self.track else None
        res = self.reduce(vec, combo)
        if not res:
            return combo if self.track else False
        pivot = min(res)
        inv = 1 / res[pivot]
        row = {k: v * inv for k, v in res.items()}
        # keep the basis fully reduced in the pivot columns
        for other_pivot, other in self.rows.items():
            f = other.get(pivot)
            if f:
                add_into(other, row, -f)
                if self.track:
                    add_into(self.combos[other_pivot], scale(combo, inv), -f)
        self.rows[pivot] = row
        if self.track:
            self.combos[pivot] = scale(combo, inv)
        return None if self.track else True

    def contains(self, vec):
        return not self.reduce(vec)


def rank(vectors):
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def nullspace(columns):
    """Basis of {lam : sum_j lam_j * columns[j] = 0}; columns is a list."""
    ech = Echelon(track=True)
    basis = []
    for j, col in enumerate(columns):
        dep = ech.add(col, label=j)
        if dep is not None:
            basis.append(dep)
    return basis


class InconsistentSystem(ValueError):
    def __init__(self, residual):
        super().__init__("vector not in span; residual has %d entries" % len(residual))
        self.residual = residual


def solve(columns, target):
    """lam with sum_j lam_j columns[j] == target (columns independent)."""
    ech = Echelon(track=True)
    for j, col in enumerate(columns):
        if ech.add(col, label=j) is not None:
            raise ValueError("columns are linearly dependent")
    combo = {}
    residual = ech.reduce(target, combo)
    if residual:
        raise InconsistentSystem(residual)
    # reduce(target) subtracts; the solution is the negated bookkeeping
    return {j: -v for j, v in combo.items() if v}


class Matrix:
    """Dense exact matrix; rows of field elements."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows, field):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        self.field = field

    @classmethod
    def zeros(cls, n, m, field):
        return cls([[field.zero] * m for _ in range(n)], field)

    @classmethod
    def identity(cls, n, field):
        m = cls.zeros(n, n, field)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, columns, n, field):
        """columns[j] is a sparse dict row-index -> value."""
        m = cls.zeros(n, len(columns), field)
        for j, col in enumerate(columns):
            for i, v in col.items():
                m.rows[i][j] = v
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, v):
        i, j = ij
        self.rows[i][j] = v

    def _check(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def __add__(self, other):
        self._check(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.field)

    def __sub__(self, other):
        self._check(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.field)

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows], self.field)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in product")
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                nz = [(k, a) for k, a in enumerate(r) if a]
                row = []
                for col in cols:
                    acc = self.field.zero
                    for k, a in nz:
                        b = col[k]
                        if b:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return Matrix(out, self.field)
        return Matrix([[a * other for a in r] for r in self.rows], self.field)

    def __rmul__(self, scalar):
        return Matrix([[scalar * a for a in r] for r in self.rows], self.field)

    def __bool__(self):
        return any(a for r in self.rows for a in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return not (self - other)

    __hash__ = None

    def column(self, j):
        return {i: self.rows[i][j] for i in range(self.nrows) if self.rows[i][j]}

    def entries(self):
        """Nonzero entries as (row, col, value), row-major."""
        return [(i, j, v) for i, r in enumerate(self.rows) for j, v in enumerate(r) if v]

    def as_vector(self):
        return {(i, j): v for i, j, v in self.entries()}

    def is_diagonal(self):
        return all(not v for i, j, v in self.entries() if i != j)

    def inverse(self):
        n = self.nrows
        cols = [self.column(j) for j in range(n)]
        inv_cols = [solve(cols, {i: self.field.one}) for i in range(n)]
        return Matrix.from_columns(inv_cols, n, self.field)

    def __repr__(self):
        return "Matrix(%dx%d)" % (self.nrows, self.ncols)
