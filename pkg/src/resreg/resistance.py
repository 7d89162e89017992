"""Resistance distance matrices, closed forms, and (pseudo) resistance regularity."""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .graph import Graph, GraphError
from .linalg import (
    RationalMatrix,
    format_rational,
    laplacian_pinv,
    resistance_from_inverse,
)

RESISTANCE_REGULAR = "ResistanceRegular"
PSEUDO_RESISTANCE_REGULAR = "PseudoResistanceRegular"
NEITHER = "Neither"


def resistance_matrix(g: Graph) -> RationalMatrix:
    """Exact R(G) from the Laplacian pseudoinverse."""
    return resistance_from_inverse(laplacian_pinv(g))


# -- closed forms ------------------------------------------------------------

def cycle_resistance(n, i, j) -> Fraction:
    """Resistance between vertices i, j of C_n: d (n - d) / n with d the cycle distance."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    d = abs(i - j) % n
    d = min(d, n - d)
    return Fraction((n - d) * d, n)


def double_graph_resistance(g: Graph, r: Optional[RationalMatrix] = None) -> RationalMatrix:
    """R(D2G) from R(G) and the degrees of G (vertex v' at index v + n)."""
    g.require_connected(min_order=2)
    r = resistance_matrix(g) if r is None else r
    n, deg = g.n, g.degrees()
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for x in range(2 * n):
        a = x % n
        for y in range(2 * n):
            b = y % n
            if x == y:
                continue
            if a == b:
                out[x][y] = Fraction(1, deg[a])
            else:
                out[x][y] = (r[a, b] + Fraction(1, deg[a]) + Fraction(1, deg[b])) / 4
    return RationalMatrix(out)


def lexicographic_k2_resistance(g: Graph, r: Optional[RationalMatrix] = None) -> RationalMatrix:
    """R(G[K2]) from R(G) and the degrees of G (vertex (v, a) at index v + a n)."""
    g.require_connected()
    r = resistance_matrix(g) if g.n > 1 and r is None else r
    n, deg = g.n, g.degrees()
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for x in range(2 * n):
        a = x % n
        for y in range(2 * n):
            b = y % n
            if x == y:
                continue
            if a == b:
                out[x][y] = Fraction(1, deg[a] + 1)
            else:
                out[x][y] = r[a, b] / 4 + Fraction(1, 4 * deg[a] + 4) + Fraction(1, 4 * deg[b] + 4)
    return RationalMatrix(out)


def complete_bipartite_resistance(n) -> RationalMatrix:
    """R(K_{n,n}) = [[2/n (J - I), (2n-1)/n^2 J], [(2n-1)/n^2 J, 2/n (J - I)]]."""
    if n < 1:
        raise GraphError("K_{n,n} needs n >= 1")
    jay, eye = RationalMatrix.ones(n), RationalMatrix.identity(n)
    inner = Fraction(2, n) * (jay - eye)
    cross = Fraction(2 * n - 1, n * n) * jay
    return RationalMatrix.from_blocks([[inner, cross], [cross, inner]])


def complete_resistance(n) -> RationalMatrix:
    """R(K_n) = (2/n)(J - I)."""
    return Fraction(2, n) * (RationalMatrix.ones(n) - RationalMatrix.identity(n))


# -- classification ----------------------------------------------------------

@dataclass(frozen=True)
class ClassLabel:
    kind: str
    k: Optional[Fraction] = None
    # resistance regular graphs are pseudo regular with the same constant
    pseudo_also: Optional[Fraction] = None

    def to_dict(self):
        return {"kind": self.kind, "k": None if self.k is None else format_rational(self.k)}

    def __str__(self):
        return self.kind if self.k is None else f"{self.kind}({self.k})"


@dataclass(frozen=True)
class ResistanceProfile:
    R: RationalMatrix
    rdeg: tuple
    second: tuple
    avg: tuple
    kf: Fraction
    s_sum: Fraction
    label: ClassLabel

    @property
    def n(self):
        return self.R.rows

    @property
    def resistance_regular(self) -> bool:
        return self.label.kind == RESISTANCE_REGULAR

    @property
    def pseudo_regular(self) -> bool:
        return self.label.kind in (RESISTANCE_REGULAR, PSEUDO_RESISTANCE_REGULAR)

    def to_dict(self):
        return {
            "n": self.n,
            "label": self.label.to_dict(),
            "row_sums": [format_rational(x) for x in self.rdeg],
            "kirchhoff": format_rational(self.kf),
            "s_sum": format_rational(self.s_sum),
        }


def classify_degrees(rdeg, avg) -> ClassLabel:
    if len(set(rdeg)) == 1:
        return ClassLabel(RESISTANCE_REGULAR, rdeg[0], pseudo_also=avg[0])
    if len(set(avg)) == 1:
        return ClassLabel(PSEUDO_RESISTANCE_REGULAR, avg[0])
    return ClassLabel(NEITHER)


def profile(g: Graph, r: Optional[RationalMatrix] = None) -> ResistanceProfile:
    """All exact resistance quantities of a connected graph on >= 2 vertices."""
    g.require_connected(min_order=2)
    r = resistance_matrix(g) if r is None else r
    n = r.rows
    rdeg = tuple(r.row_sums())
    second = tuple(sum((r[i, j] * rdeg[j] for j in range(n)), Fraction(0)) for i in range(n))
    avg = tuple(t / s for t, s in zip(second, rdeg))
    kf = sum(rdeg, Fraction(0)) / 2
    s_sum = sum((x * x for row in r.tolist() for x in row), Fraction(0))
    # column sums equal row sums, so sum T_i == sum R_i^2 exactly
    if sum(second) != sum(x * x for x in rdeg):
        raise ArithmeticError(f"{g.name}: sum of second resistance degrees != sum R_i^2")
    return ResistanceProfile(r, rdeg, second, avg, kf, s_sum, classify_degrees(rdeg, avg))


def classify(g: Graph) -> ClassLabel:
    return profile(g).label


class DiagTest(NamedTuple):
    holds: bool
    witness: Optional[tuple]  # (argmin, argmax, min value, max value) when not holding


def diag_pinv_test(g: Graph) -> DiagTest:
    """Resistance regularity via equality of the diagonal of L^+."""
    d = laplacian_pinv(g).diagonal()
    lo = min(range(len(d)), key=d.__getitem__)
    hi = max(range(len(d)), key=d.__getitem__)
    if d[lo] == d[hi]:
        return DiagTest(True, None)
    return DiagTest(False, (lo, hi, d[lo], d[hi]))
