"""Exact dense matrices over the rationals.

Entries are :class:`fractions.Fraction`, so every identity checked on these
matrices (``L M L == L``, the Penrose equations, ...) is an exact equality.
"""

import csv
import io
import json
from fractions import Fraction

import numpy as np

from .graph import Graph

ZERO = Fraction(0)
ONE = Fraction(1)


class SingularMatrixError(ArithmeticError):
    def __init__(self, msg, rank=None):
        super().__init__(msg)
        self.rank = rank


class RationalMatrix:
    """Immutable dense ``rows x cols`` matrix of Fractions."""

    __slots__ = ("rows", "cols", "_d")

    def __init__(self, data):
        d = tuple(tuple(Fraction(x) for x in row) for row in data)
        if not d or not d[0]:
            raise ValueError("matrix must have at least one row and one column")
        if any(len(r) != len(d[0]) for r in d):
            raise ValueError("ragged rows")
        self._d = d
        self.rows = len(d)
        self.cols = len(d[0])

    @classmethod
    def _wrap(cls, d):
        m = cls.__new__(cls)
        m._d = d
        m.rows = len(d)
        m.cols = len(d[0])
        return m

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._wrap(tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n):
        return cls._wrap(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def ones(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._wrap(tuple((ONE,) * cols for _ in range(rows)))

    @classmethod
    def from_blocks(cls, blocks):
        """Assemble ``[[A, B], [C, D]]``-style nested lists of matrices."""
        out = []
        for brow in blocks:
            h = brow[0].rows
            if any(b.rows != h for b in brow):
                raise ValueError("blocks in a block row differ in height")
            for i in range(h):
                out.append(sum((b._d[i] for b in brow), ()))
        return cls(out)

    # -- access --------------------------------------------------------------

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._d[i][j]

    def tolist(self):
        return [list(r) for r in self._d]

    def row(self, i):
        return self._d[i]

    def diagonal(self):
        return [self._d[i][i] for i in range(min(self.rows, self.cols))]

    def block(self, r0, r1, c0, c1):
        return RationalMatrix._wrap(tuple(r[c0:c1] for r in self._d[r0:r1]))

    def row_sums(self):
        return [sum(r, ZERO) for r in self._d]

    def trace(self):
        return sum(self.diagonal(), ZERO)

    @property
    def T(self):
        return RationalMatrix._wrap(tuple(zip(*self._d)))

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        return self.is_square() and all(
            self._d[i][j] == self._d[j][i] for i in range(self.rows) for j in range(i))

    def is_zero(self):
        return all(x == 0 for r in self._d for x in r)

    # -- arithmetic ----------------------------------------------------------

    def _check_same(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return None

    def __add__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return RationalMatrix._wrap(tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._d, other._d)))

    def __sub__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return RationalMatrix._wrap(tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._d, other._d)))

    def __neg__(self):
        return RationalMatrix._wrap(tuple(tuple(-a for a in r) for r in self._d))

    def __mul__(self, c):
        if isinstance(c, RationalMatrix):
            return NotImplemented
        c = Fraction(c)
        return RationalMatrix._wrap(tuple(tuple(a * c for a in r) for r in self._d))

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (ONE / Fraction(c))

    def __matmul__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = tuple(zip(*other._d))
        return RationalMatrix._wrap(tuple(
            tuple(sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in cols)
            for r in self._d))

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._d == other._d

    __hash__ = None

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._d)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"

    # -- conversion ----------------------------------------------------------

    def to_numpy(self):
        """Nearest-double rendering of every entry."""
        return np.array([[float(x) for x in r] for r in self._d], dtype=float)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in self._d:
            w.writerow([format_rational(x) for x in r])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text):
        return cls([[Fraction(x) for x in row] for row in csv.reader(io.StringIO(text)) if row])

    def to_json(self):
        return json.dumps([[{"num": str(x.numerator), "den": str(x.denominator)} for x in r]
                           for r in self._d])

    @classmethod
    def from_json(cls, text):
        return cls([[Fraction(int(e["num"]), int(e["den"])) for e in r] for r in json.loads(text)])


def format_rational(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def as_matrix(a):
    return a if isinstance(a, RationalMatrix) else RationalMatrix(a)


# -- elimination -------------------------------------------------------------

def _full_pivot(a, k, n):
    best = None
    for i in range(k, n):
        for j in range(k, n):
            x = a[i][j]
            if x and (best is None or abs(x) > best[0]):
                best = (abs(x), i, j)
    return best


def invert(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan elimination with full pivoting.

    The pivot is the entry of largest absolute value in the remaining
    submatrix, first in row-major order on ties.
    """
    m = as_matrix(m)
    if not m.is_square():
        raise ValueError(f"cannot invert a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    a = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m._d)]
    colperm = list(range(n))
    for k in range(n):
        piv = _full_pivot(a, k, n)
        if piv is None:
            raise SingularMatrixError(f"matrix is singular (rank {k} < {n})", rank=k)
        _, pi, pj = piv
        a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for r in a:
                r[k], r[pj] = r[pj], r[k]
            colperm[k], colperm[pj] = colperm[pj], colperm[k]
        p = a[k][k]
        a[k] = [x / p for x in a[k]]
        rk = a[k]
        for i in range(n):
            f = a[i][k]
            if i != k and f:
                a[i] = [x - f * y for x, y in zip(a[i], rk)]
    # column swaps on the left permute rows of the inverse
    inv = [None] * n
    for k in range(n):
        inv[colperm[k]] = tuple(a[k][n:])
    return RationalMatrix._wrap(tuple(inv))


def rref(m: RationalMatrix):
    """Reduced row echelon form and pivot column list."""
    a = [list(r) for r in as_matrix(m)._d]
    rows, cols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(rows):
            f = a[i][c]
            if i != r and f:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return RationalMatrix(a), pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


# -- generalized inverses ----------------------------------------------------

def pinv_rank_factorization(a: RationalMatrix) -> RationalMatrix:
    """Moore-Penrose inverse of any rational matrix via A = F G (full rank).

    ``A^+ = G^T (G G^T)^{-1} (F^T F)^{-1} F^T``.
    """
    a = as_matrix(a)
    red, piv = rref(a)
    if not piv:
        return RationalMatrix.zeros(a.cols, a.rows)
    g = red.block(0, len(piv), 0, a.cols)
    f = RationalMatrix([[a[i, j] for j in piv] for i in range(a.rows)])
    return g.T @ invert(g @ g.T) @ invert(f.T @ f) @ f.T


def pinv_scalar_plus_ones(a, b, size) -> RationalMatrix:
    """Moore-Penrose inverse of ``a I + b J`` (order ``size``) in closed form.

    ``aI + bJ`` acts as ``a`` on the complement of the all-ones vector and as
    ``a + b size`` on it; each nonzero eigenvalue is inverted, zeros stay zero.
    """
    a, b = Fraction(a), Fraction(b)
    top = a + b * size
    inv_a = ONE / a if a else ZERO
    inv_top = ONE / top if top else ZERO
    eye, jay = RationalMatrix.identity(size), RationalMatrix.ones(size)
    return inv_a * eye + ((inv_top - inv_a) / size) * jay


def zero_row_sum_pinv(s: RationalMatrix) -> RationalMatrix:
    """``(S + J/k)^{-1} - J/k`` for symmetric S with zero row sums and kernel span(1)."""
    k = s.rows
    jk = RationalMatrix.ones(k) / k
    return invert(s + jk) - jk


def block_pinv(s: RationalMatrix) -> RationalMatrix:
    """Pseudoinverse of a Schur-complement block.

    Symmetric zero-row-sum blocks use the J-shift; if the shift is singular
    (kernel larger than the ones vector) or the block is not of that kind,
    the exact rank-factorization route is used.
    """
    if s.is_zero():
        return RationalMatrix.zeros(s.cols, s.rows)
    if s.is_symmetric() and all(x == 0 for x in s.row_sums()):
        try:
            return zero_row_sum_pinv(s)
        except SingularMatrixError:
            pass
    return pinv_rank_factorization(s)


def is_moore_penrose(p: RationalMatrix, w: RationalMatrix) -> bool:
    pw, wp = p @ w, w @ p
    return p @ w @ p == p and w @ p @ w == w and pw.T == pw and wp.T == wp


# -- graph matrices ----------------------------------------------------------

def laplacian(g: Graph) -> RationalMatrix:
    n = g.n
    rows = [[ZERO] * n for _ in range(n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = -ONE
        rows[u][u] += 1
        rows[v][v] += 1
    return RationalMatrix(rows)


def laplacian_pinv(g: Graph) -> RationalMatrix:
    """Exact L^+ = (L + J/n)^{-1} - J/n of a connected graph."""
    g.require_connected()
    return zero_row_sum_pinv(laplacian(g))


def _split(l, split):
    n = l.rows
    if not l.is_square() or not 0 < split < n:
        raise ValueError(f"split must satisfy 0 < split < {n}, got {split}")
    return (l.block(0, split, 0, split), l.block(0, split, split, n),
            l.block(split, n, 0, split), l.block(split, n, split, n))


def one_inverse_block_zero(l: RationalMatrix, split: int) -> RationalMatrix:
    """{1}-inverse ``diag(L1^{-1}, S^+)`` with ``S = L3 - L2^T L1^{-1} L2``.

    Valid when every column of the lower-left block ``L2^T`` is either the
    all ``-1`` vector or zero.
    """
    l1, l2, l2t, l3 = _split(l, split)
    for j in range(l2t.cols):
        col = {l2t[i, j] for i in range(l2t.rows)}
        if col != {ZERO} and col != {-ONE}:
            raise ValueError(f"column {j} of the lower-left block is neither -1 nor 0")
    l1inv = invert(l1)
    s = l3 - l2t @ l1inv @ l2
    k = l.rows - split
    return RationalMatrix.from_blocks([
        [l1inv, RationalMatrix.zeros(split, k)],
        [RationalMatrix.zeros(k, split), block_pinv(s)],
    ])


def one_inverse_schur(l: RationalMatrix, split: int) -> RationalMatrix:
    """{1}-inverse built from the Schur complement ``M = L1 - L2 L3^{-1} L2^T``.

    Requires the trailing block ``L3`` to be nonsingular.
    """
    l1, l2, l2t, l3 = _split(l, split)
    l3inv = invert(l3)
    mp = block_pinv(l1 - l2 @ l3inv @ l2t)
    upper_right = -(mp @ l2 @ l3inv)
    lower_left = -(l3inv @ l2t @ mp)
    lower_right = l3inv + l3inv @ l2t @ mp @ l2 @ l3inv
    return RationalMatrix.from_blocks([[mp, upper_right], [lower_left, lower_right]])


def resistance_from_inverse(m: RationalMatrix) -> RationalMatrix:
    """``r_ij = m_ii + m_jj - m_ij - m_ji`` for any {1}-inverse (or L^+) m."""
    n = m.rows
    return RationalMatrix._wrap(tuple(
        tuple(m[i, i] + m[j, j] - m[i, j] - m[j, i] for j in range(n)) for i in range(n)))
