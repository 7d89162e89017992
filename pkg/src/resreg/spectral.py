"""Resistance spectra, energies, spectral bounds and closed-form spectra.

Exact quantities (row sums, Kirchhoff index, S(G) = trace R^2, ...) come
from :mod:`resreg.resistance`; only eigenvalues are floating point.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .eigen import jacobi_eigh
from .graph import Graph, GraphError
from .linalg import format_rational, laplacian
from .resistance import ResistanceProfile, profile

DEFAULT_GROUP_TOL = 1e-9
DEFAULT_BOUND_TOL = 1e-8
INVARIANT_TOL = 1e-8


class SpectralError(ArithmeticError):
    """A spectral identity that must hold failed beyond tolerance."""


def _close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


def group_eigenvalues(values, tol=DEFAULT_GROUP_TOL):
    """Merge a descending list into (representative, multiplicity) pairs.

    A value joins the current group while it stays within
    ``tol * max(1, |first|)`` of the group's first member.
    """
    groups = []
    for x in values:
        if groups and abs(groups[-1][0] - x) < tol * max(1.0, abs(groups[-1][0])):
            groups[-1][1] += 1
        else:
            groups.append([float(x), 1])
    return [tuple(g) for g in groups]


@dataclass(frozen=True)
class Spectrum:
    values: tuple
    groups: tuple
    energy: float
    radius: float

    @property
    def distinct(self):
        return [v for v, _ in self.groups]

    def sum_squares(self):
        return float(np.sum(np.square(self.values)))

    def to_dict(self):
        return {"groups": [[v, m] for v, m in self.groups],
                "energy": self.energy, "radius": self.radius}


def make_spectrum(values, tol=DEFAULT_GROUP_TOL) -> Spectrum:
    vals = tuple(sorted((float(v) for v in values), reverse=True))
    return Spectrum(
        values=vals,
        groups=tuple(group_eigenvalues(vals, tol)),
        energy=float(np.sum(np.abs(vals))),
        radius=float(max(abs(vals[0]), abs(vals[-1]))),
    )


def _check_resistance_spectrum(sp: Spectrum, prof: ResistanceProfile, name):
    scale = max(1.0, sp.radius)
    if abs(sum(sp.values)) > INVARIANT_TOL * scale:
        raise SpectralError(f"{name}: eigenvalues sum to {sum(sp.values):.3e}, not 0")
    if not _close(sp.sum_squares(), float(prof.s_sum), INVARIANT_TOL):
        raise SpectralError(f"{name}: sum of squared eigenvalues {sp.sum_squares()!r} "
                            f"!= trace R^2 = {prof.s_sum}")
    if sum(1 for v in sp.values if v > 0) != 1 or sp.groups[0][1] != 1 or sp.groups[1][0] >= 0:
        raise SpectralError(f"{name}: expected exactly one positive resistance eigenvalue")
    if not _close(sp.energy, 2 * sp.radius, INVARIANT_TOL):
        raise SpectralError(f"{name}: energy {sp.energy!r} != 2 * radius {2 * sp.radius!r}")


def r_spectrum(g: Graph, tol=DEFAULT_GROUP_TOL, prof: Optional[ResistanceProfile] = None) -> Spectrum:
    """Spectrum of R(G); raises SpectralError if a resistance-spectrum identity fails."""
    prof = profile(g) if prof is None else prof
    sp = make_spectrum(jacobi_eigh(prof.R.to_numpy())[0], tol)
    _check_resistance_spectrum(sp, prof, g.name)
    return sp


# -- Laplacian eigenvectors --------------------------------------------------

@dataclass(frozen=True)
class LaplacianEigen:
    gammas: np.ndarray  # descending; last one pinned to 0
    vectors: np.ndarray  # column k belongs to gammas[k]


def laplacian_eigen(g: Graph) -> LaplacianEigen:
    g.require_connected()
    w, v = jacobi_eigh(laplacian(g).to_numpy())
    w[-1] = 0.0
    v[:, -1] = 1.0 / math.sqrt(g.n)
    return LaplacianEigen(w, v)


class EigenConditionResult(NamedTuple):
    holds: bool
    spread: float
    values: np.ndarray


def eigencondition_regularity_test(g: Graph, tol=DEFAULT_GROUP_TOL) -> EigenConditionResult:
    """Resistance regularity from Laplacian eigenpairs.

    For each vertex i computes
    ``(sum_{j ~ i} sum_{k<n} s_ik s_jk / gamma_k + 1 - 1/n) / deg(i)``,
    which equals the i-th diagonal entry of L^+; the graph is resistance
    regular iff these agree.  Eigenvector signs and ordering within
    eigenspaces do not affect the sums.
    """
    g.require_connected(min_order=2)
    le = laplacian_eigen(g)
    s = le.vectors[:, :-1]
    lpinv = (s / le.gammas[:-1]) @ s.T
    n = g.n
    adj = g.neighbors()
    q = np.array([(lpinv[i, adj[i]].sum() + 1.0 - 1.0 / n) / len(adj[i]) for i in range(n)])
    spread = float(q.max() - q.min())
    return EigenConditionResult(spread < tol, spread, q)


# -- bounds ------------------------------------------------------------------

@dataclass
class BoundEntry:
    id: str
    lhs: float
    rhs: float
    holds: bool
    equality: bool
    condition_label: str
    condition_holds: bool
    extra: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        """Equality flag agrees with the stated equality condition."""
        return self.equality == self.condition_holds

    def to_dict(self):
        d = {"id": self.id, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds,
             "equality": self.equality, "condition": self.condition_label,
             "condition_holds": self.condition_holds}
        d.update(self.extra)
        return d


@dataclass
class BoundsReport:
    graph: str
    entries: list

    def __getitem__(self, bound_id) -> BoundEntry:
        for e in self.entries:
            if e.id == bound_id:
                return e
        raise KeyError(bound_id)

    def violations(self):
        return [e.id for e in self.entries if not e.holds]

    def mismatches(self):
        return [e.id for e in self.entries if not e.consistent]

    def to_dict(self):
        return {"graph": self.graph, "bounds": [e.to_dict() for e in self.entries]}


BOUND_IDS = (
    "KF_LOWER", "ROWSUM_LOWER", "WEIGHTED_ROWSUM_UPPER", "TI_LOWER", "ALPHA_ENERGY_UPPER",
    "AVG_DEG_UPPER", "AVG_DEG_LOWER", "ENERGY_ROWSUM_LOWER", "ENERGY_KF_LOWER",
    "KF_SPECTRAL_UPPER",
)

RR = "resistance regular"
PRR = "pseudo resistance regular"
COMPLETE = "complete graph"


def _pair_products(avg):
    """min and max of sqrt(avg_i avg_j) over i != j, from the two smallest/largest."""
    s = sorted(avg)
    return math.sqrt(s[0] * s[1]), math.sqrt(s[-1] * s[-2])


def bounds_report(g: Graph, tol=DEFAULT_BOUND_TOL, prof=None, spectrum=None) -> BoundsReport:
    """Evaluate every spectral radius / energy / Kirchhoff bound, all as lhs <= rhs."""
    g.require_connected(min_order=2)
    prof = profile(g) if prof is None else prof
    sp = r_spectrum(g, prof=prof) if spectrum is None else spectrum
    n = g.n
    rho, energy = sp.radius, sp.energy
    sum_r2 = sum(x * x for x in prof.rdeg)
    sum_t2 = sum(x * x for x in prof.second)
    alpha2 = sum_t2 / sum_r2
    alpha = math.sqrt(alpha2)
    s = prof.s_sum
    avg_lo, avg_hi = _pair_products(prof.avg)
    rr, prr, complete = prof.resistance_regular, prof.pseudo_regular, g.is_complete()

    alpha_rhs = alpha + math.sqrt(max(0.0, float((n - 1) * (s - alpha2))))
    # alternative reading with S(G) - alpha in place of S(G) - alpha^2, reported only
    literal_rhs = alpha + math.sqrt(max(0.0, (n - 1) * (float(s) - alpha)))

    rows = [
        ("KF_LOWER", float(2 * prof.kf / n), rho, RR, rr),
        ("ROWSUM_LOWER", math.sqrt(sum_r2 / n), rho, RR, rr),
        ("WEIGHTED_ROWSUM_UPPER", rho, float(max(prof.avg)), RR, rr),
        ("TI_LOWER", alpha, rho, PRR, prr),
        ("ALPHA_ENERGY_UPPER", energy, alpha_rhs, COMPLETE, complete),
        ("AVG_DEG_UPPER", rho, avg_hi, PRR, prr),
        ("AVG_DEG_LOWER", avg_lo, rho, PRR, prr),
        ("ENERGY_ROWSUM_LOWER", 2 * math.sqrt(sum_r2 / n), energy, RR, rr),
        ("ENERGY_KF_LOWER", float(4 * prof.kf / n), energy, RR, rr),
        ("KF_SPECTRAL_UPPER", float(prof.kf), math.sqrt(n * (n - 1) * sp.sum_squares()) / 2,
         COMPLETE, complete),
    ]
    entries = []
    for bid, lhs, rhs, cond, cond_ok in rows:
        slack = tol * max(1.0, abs(rhs))
        entries.append(BoundEntry(bid, float(lhs), float(rhs), lhs <= rhs + slack,
                                  abs(lhs - rhs) <= slack, cond, cond_ok))
    entries[4].extra["literal_rhs"] = literal_rhs
    return BoundsReport(g.name, entries)


# -- Q polynomial ------------------------------------------------------------

class QPolynomialCheck(NamedTuple):
    coefficients: np.ndarray  # highest degree first
    max_abs_deviation: float
    k: Fraction
    roots: tuple


def q_polynomial_check(g: Graph, tol=DEFAULT_GROUP_TOL, prof=None, spectrum=None) -> QPolynomialCheck:
    """Evaluate Q(x) = n prod_{i>=2} (x - rho_i) / (k - rho_i) at R and compare with J."""
    prof = profile(g) if prof is None else prof
    if not prof.resistance_regular:
        raise GraphError(f"{g.name} is not resistance regular")
    sp = r_spectrum(g, tol, prof) if spectrum is None else spectrum
    n = g.n
    k = float(prof.label.k)
    roots = tuple(sp.distinct[1:])
    scale = n / np.prod([k - r for r in roots])
    coeffs = scale * np.poly(roots) if roots else np.array([float(n)])
    r = prof.R.to_numpy()
    q = np.eye(n) * scale
    for root in roots:
        q = q @ (r - root * np.eye(n))
    dev = float(np.abs(q - np.ones((n, n))).max())
    return QPolynomialCheck(coeffs, dev, prof.label.k, roots)


# -- closed-form spectra -----------------------------------------------------

def _regular_resistance_regular(g: Graph, prof=None):
    g.require_connected(min_order=2)
    r = g.regularity()
    if r is None:
        raise GraphError(f"{g.name} is not regular")
    prof = profile(g) if prof is None else prof
    if not prof.resistance_regular:
        raise GraphError(f"{g.name} is not resistance regular")
    return r, prof


def double_graph_spectrum(g: Graph, tol=DEFAULT_GROUP_TOL, prof=None) -> Spectrum:
    """Spec_R(D2G) for an r-regular, resistance regular G."""
    r, prof = _regular_resistance_regular(g, prof)
    rho = r_spectrum(g, tol, prof).values
    vals = [rho[0] / 2 + g.n / r] + [x / 2 for x in rho[1:]] + [-1.0 / r] * g.n
    return make_spectrum(vals, tol)


def lexicographic_k2_spectrum(g: Graph, tol=DEFAULT_GROUP_TOL, prof=None) -> Spectrum:
    """Spec_R(G[K2]) for an r-regular, resistance regular G."""
    r, prof = _regular_resistance_regular(g, prof)
    rho = r_spectrum(g, tol, prof).values
    vals = [rho[0] / 2 + g.n / (r + 1)] + [x / 2 for x in rho[1:]] + [-1.0 / (r + 1)] * g.n
    return make_spectrum(vals, tol)


def complete_cartesian_k2_spectrum_exact(n):
    """Exact Spec_R(K_n x K_2) as (eigenvalue, multiplicity) pairs, descending."""
    if n < 2:
        raise GraphError(f"K_n x K_2 needs n >= 2, got {n}")
    top = Fraction(5 * n * n + 2 * n - 4, n * (n + 2))
    mult = {}
    # at n = 2 the values -2/n and -1 coincide
    for v, m in ((top, 1), (Fraction(-2, n), n - 1), (Fraction(-1), 1), (Fraction(-2, n + 2), n - 1)):
        mult[v] = mult.get(v, 0) + m
    return sorted(mult.items(), key=lambda p: -p[0])


def complete_cartesian_k2_spectrum(n, tol=DEFAULT_GROUP_TOL) -> Spectrum:
    vals = [float(v) for v, mult in complete_cartesian_k2_spectrum_exact(n) for _ in range(mult)]
    return make_spectrum(vals, tol)


def spectra_match(a: Spectrum, b: Spectrum) -> float:
    """Largest elementwise gap between two sorted spectra (inf if sizes differ)."""
    if len(a.values) != len(b.values):
        return math.inf
    return float(np.abs(np.array(a.values) - np.array(b.values)).max())


# -- energy identities -------------------------------------------------------

@dataclass
class EnergyIdentities:
    graph: str
    energy: float
    twice_radius: float
    kf: Fraction
    two_k: Optional[float] = None
    nk_over_2: Optional[Fraction] = None
    rowsum_lower: float = 0.0
    kf_lower: float = 0.0
    avg_lower: float = 0.0
    avg_upper: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {
            "graph": self.graph, "energy": self.energy, "twice_radius": self.twice_radius,
            "kirchhoff": format_rational(self.kf), "two_k": self.two_k,
            "nk_over_2": None if self.nk_over_2 is None else format_rational(self.nk_over_2),
            "energy_bounds": [self.rowsum_lower, self.kf_lower, self.avg_lower, self.avg_upper],
            "failures": self.failures,
        }


def energy_identities(g: Graph, tol=DEFAULT_BOUND_TOL, prof=None, spectrum=None) -> EnergyIdentities:
    g.require_connected(min_order=2)
    prof = profile(g) if prof is None else prof
    sp = r_spectrum(g, prof=prof) if spectrum is None else spectrum
    n = g.n
    avg_lo, avg_hi = _pair_products(prof.avg)
    rec = EnergyIdentities(
        graph=g.name, energy=sp.energy, twice_radius=2 * sp.radius, kf=prof.kf,
        rowsum_lower=2 * math.sqrt(sum(x * x for x in prof.rdeg) / n),
        kf_lower=float(4 * prof.kf / n), avg_lower=2 * avg_lo, avg_upper=2 * avg_hi)
    if not _close(rec.energy, rec.twice_radius, tol):
        rec.failures.append("ENERGY_TWICE_RADIUS")
    if prof.resistance_regular:
        k = prof.label.k
        rec.two_k = float(2 * k)
        rec.nk_over_2 = n * k / 2
        if not _close(rec.energy, rec.two_k, tol):
            rec.failures.append("ENERGY_TWO_K")
        if rec.nk_over_2 != prof.kf:
            rec.failures.append("KF_NK_OVER_2")
    slack = tol * max(1.0, rec.energy)
    for name, lo, hi in (("ENERGY_ROWSUM_LOWER", rec.rowsum_lower, rec.energy),
                         ("ENERGY_KF_LOWER", rec.kf_lower, rec.energy),
                         ("ENERGY_AVG_LOWER", rec.avg_lower, rec.energy),
                         ("ENERGY_AVG_UPPER", rec.energy, rec.avg_upper)):
        if lo > hi + slack:
            rec.failures.append(name)
    return rec
