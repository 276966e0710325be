"""Strongly regular graph parameter algebra.

Exact eigen-data for srg(n, k, e, d) tuples, the complementary
equienergy condition, its three-way classification (conference versus
the square / odd-square vertex-count cases), the orthogonal-array and
related parameterizations, and a vectorized enumeration of all
parameter tuples equienergetic with their complements.

Everything downstream of the integer scan is re-verified in exact surd
arithmetic; nothing is decided in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

import numpy as np

from .exact import ExactValue, Surd, exact_sum
from .spectra import Spectrum

__all__ = [
    "InfeasibleParams",
    "SrgParams",
    "SrgEigenData",
    "EquienClass",
    "NotEquien",
    "Conference",
    "CaseB",
    "CaseC",
    "eigen_data",
    "spectrum_of",
    "complement_params",
    "is_primitive",
    "is_conference",
    "oa_params",
    "equien_condition",
    "classify",
    "family_params",
    "energy_closed",
    "smith_params",
    "negative_latin_square_params",
    "latin_square_params",
    "steiner_params",
    "enumerate_equien",
    "imprimitive_equien",
    "imprimitive_energy",
    "gp_spectrum",
    "two_fields_srg",
]

ENUMERATION_CAP = 10 ** 6


class InfeasibleParams(ValueError):
    pass


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    e: int
    d: int

    def __post_init__(self):
        if not 0 < self.k < self.n - 1:
            raise InfeasibleParams(f"need 0 < k < n - 1, got {self}")
        if self.e < 0 or self.d < 0:
            raise InfeasibleParams(f"negative common-neighbor count in {self}")
        if self.e > self.k - 1 or self.d > self.k:
            raise InfeasibleParams(f"common-neighbor counts exceed degree in {self}")

    def identity_holds(self) -> bool:
        """The counting identity k(k - e - 1) = d(n - k - 1)."""
        return self.k * (self.k - self.e - 1) == self.d * (self.n - self.k - 1)

    def __str__(self):
        return f"srg({self.n},{self.k},{self.e},{self.d})"


@dataclass(frozen=True)
class SrgEigenData:
    alpha: int
    r: Surd
    s: Surd
    m_r: Fraction
    m_s: Fraction
    conference: bool


def eigen_data(p: SrgParams) -> SrgEigenData:
    """Exact nontrivial eigenvalues and multiplicities of an srg tuple.

    Raises InfeasibleParams when the counting identity fails, or when the
    multiplicities come out negative or non-integral outside the
    conference case (irrational eigenvalues with equal multiplicities).
    """
    if not p.identity_holds():
        raise InfeasibleParams(f"counting identity fails for {p}")
    ed = p.e - p.d
    alpha = ed * ed + 4 * (p.k - p.d)
    if alpha <= 0:
        raise InfeasibleParams(f"nonpositive discriminant for {p}")
    root = Surd(0, 1, alpha)
    r = (root + ed) / 2
    s = (Surd(ed) - root) / 2
    a = isqrt(alpha)
    is_square = a * a == alpha
    t = 2 * p.k + (p.n - 1) * ed
    if is_square:
        m_r = Fraction(p.n - 1, 2) - Fraction(t, 2 * a)
        m_s = Fraction(p.n - 1, 2) + Fraction(t, 2 * a)
        conference = False
        if m_r.denominator != 1 or m_s.denominator != 1 or m_r < 0 or m_s < 0:
            raise InfeasibleParams(f"non-integral or negative multiplicities for {p}")
    else:
        if t != 0:
            raise InfeasibleParams(
                f"irrational eigenvalues with unbalanced multiplicities for {p}"
            )
        m_r = m_s = Fraction(p.n - 1, 2)
        conference = True
        if m_r.denominator != 1:
            raise InfeasibleParams(f"odd vertex count required for conference {p}")
    return SrgEigenData(alpha=alpha, r=r, s=s, m_r=m_r, m_s=m_s, conference=conference)


def spectrum_of(p: SrgParams) -> Spectrum:
    data = eigen_data(p)
    return Spectrum.from_values([
        (Surd(p.k), 1),
        (data.r, int(data.m_r)),
        (data.s, int(data.m_s)),
    ])


def complement_params(p: SrgParams) -> SrgParams:
    nk = p.n - p.k - 1
    ne = p.n - 2 - 2 * p.k + p.d
    nd = p.n - 2 * p.k + p.e
    if ne < 0 or nd < 0:
        raise InfeasibleParams(f"complement of {p} has negative parameters")
    return SrgParams(p.n, nk, ne, nd)


def is_conference(p: SrgParams) -> bool:
    return p.n == 4 * p.d + 1 and p.k == 2 * p.d and p.e == p.d - 1


def is_primitive(p: SrgParams) -> bool:
    """Both the graph and its complement connected: d >= 1 and d < k on each side."""
    if p.d < 1 or p.d >= p.k:
        return False
    try:
        q = complement_params(p)
    except InfeasibleParams:
        return False
    return q.d >= 1 and q.d < q.k


def oa_params(p: SrgParams) -> Optional[tuple[int, int]]:
    """Invert srg(n^2, m(n-1), m^2 - 3m + n, m(m-1)) exactly, or None."""
    root = isqrt(p.n)
    if root * root != p.n or root < 2:
        return None
    if p.k % (root - 1) != 0:
        return None
    m = p.k // (root - 1)
    if p.e != m * m - 3 * m + root or p.d != m * (m - 1):
        return None
    return (root, m)


def equien_condition(p: SrgParams) -> bool:
    """Exact test of n == 2k(sqrt(alpha) + 1)/(sqrt(alpha) - (e - d)) + 1.

    Evaluated in surd arithmetic, then cross-checked against the
    discrepancy route m_r - m_s == 2k + 1 - n; disagreement between the
    two algebraic routes is an internal error.
    """
    data = eigen_data(p)
    root = Surd(0, 1, data.alpha)
    denom = root - (p.e - p.d)
    rhs = (root + 1) * (2 * p.k) / denom + 1
    via_condition = rhs == Surd(p.n)

    t = 2 * p.k + (p.n - 1) * (p.e - p.d)
    delta = Surd(-t) / root
    via_delta = delta == Surd(2 * p.k + 1 - p.n)
    if via_condition != via_delta:
        raise AssertionError(f"equienergy routes disagree on {p}")
    return via_condition


# -- classification --------------------------------------------------------------


@dataclass(frozen=True)
class NotEquien:
    reason: str = ""


@dataclass(frozen=True)
class Conference:
    d: int


@dataclass(frozen=True)
class CaseB:
    """Even e - d = 2h; vertex count 4*l^2 and sqrt(alpha) = 2*l."""

    h: int
    l: int

    def __post_init__(self):
        if self.l in {self.h, -self.h, self.h + 1, -(self.h + 1)}:
            raise InfeasibleParams(f"excluded l for CaseB(h={self.h}): {self.l}")


@dataclass(frozen=True)
class CaseC:
    """Odd e - d = 2h - 1 with h != 0; vertex count (2*l+1)^2 and sqrt(alpha) = 2*l + 1."""

    h: int
    l: int

    def __post_init__(self):
        if self.h == 0:
            raise InfeasibleParams("CaseC requires h != 0")
        if self.l in {self.h, -self.h, -(self.h + 1), self.h - 1}:
            raise InfeasibleParams(f"excluded l for CaseC(h={self.h}): {self.l}")


EquienClass = Union[NotEquien, Conference, CaseB, CaseC]


def classify(p: SrgParams) -> EquienClass:
    """Trichotomy of equienergetic primitive parameter tuples.

    Conference whenever e - d == -1 (the tuple is then forced to
    (4d+1, 2d, d-1, d), even if alpha happens to be a perfect square);
    otherwise recover (h, l) from e - d and sqrt(alpha) and re-verify
    the n, k, d closed forms before accepting.
    """
    if not equien_condition(p):
        return NotEquien("condition fails")
    ed = p.e - p.d
    if ed == -1:
        if not is_conference(p):
            return NotEquien("e - d = -1 but not conference shaped")
        return Conference(d=p.d)
    data = eigen_data(p)
    a = isqrt(data.alpha)
    if a * a != data.alpha:
        return NotEquien("irrational discriminant outside the conference case")
    try:
        if ed % 2 == 0:
            if a % 2 != 0:
                return NotEquien("even e - d needs an even discriminant root")
            l, h = a // 2, ed // 2
            cls: EquienClass = CaseB(h=h, l=l)
        else:
            if a % 2 != 1:
                return NotEquien("odd e - d needs an odd discriminant root")
            l, h = (a - 1) // 2, (ed + 1) // 2
            cls = CaseC(h=h, l=l)
        if family_params(cls) != p:
            return NotEquien("recovered (h, l) does not reproduce the tuple")
    except InfeasibleParams as exc:
        return NotEquien(str(exc))
    return cls


def family_params(cls: EquienClass) -> SrgParams:
    """The parameter tuple of a classification outcome (inverse of classify)."""
    if isinstance(cls, Conference):
        if cls.d < 1:
            raise InfeasibleParams("conference tuples need d >= 1")
        return SrgParams(4 * cls.d + 1, 2 * cls.d, cls.d - 1, cls.d)
    if isinstance(cls, CaseB):
        h, l = cls.h, cls.l
        d = (l - h) * (l - h - 1)
        k = (l - h) * (2 * l - 1)
        return SrgParams(4 * l * l, k, d + 2 * h, d)
    if isinstance(cls, CaseC):
        h, l = cls.h, cls.l
        d = (l - h) * (l - h + 1)
        k = 2 * l * (l - h + 1)
        return SrgParams((2 * l + 1) ** 2, k, d + 2 * h - 1, d)
    raise InfeasibleParams("NotEquien has no parameter tuple")


def energy_closed(p: SrgParams) -> ExactValue:
    """E = k + m_r * r + m_s * |s|, exactly."""
    data = eigen_data(p)
    return exact_sum([(Surd(p.k), 1)]) \
        + ExactValue.from_surd(data.r).scaled(data.m_r) \
        + ExactValue.from_surd(abs(data.s)).scaled(data.m_s)


# -- families from the wider catalog ---------------------------------------------------


def smith_params(r: int, s: int) -> Optional[SrgParams]:
    """Parameter system with prescribed integer eigenvalues r > 0 > s <= -2.

    Returns the tuple only when all four entries come out as positive
    integers (and form a valid parameter set); otherwise None.
    """
    if r <= 0 or s > -2:
        raise ValueError("need r > 0 and s <= -2")
    rs = r - s
    denom_v = rs * rs - r * r * (r + 1) ** 2
    denom_k = rs + r * (r + 1)
    if denom_v == 0 or denom_k == 0:
        return None
    v = Fraction(2 * rs * rs * ((2 * r + 1) * rs - 3 * r * (r + 1)), denom_v)
    k = Fraction(-s * ((2 * r + 1) * rs - r * (r + 1)), denom_k)
    e = Fraction(-r * (s + 1) * (rs - r * (r + 3)), denom_k)
    d = Fraction(-s * (r + 1) * (rs - r * (r + 1)), denom_k)
    values = (v, k, e, d)
    if any(x.denominator != 1 or x <= 0 for x in values):
        return None
    try:
        p = SrgParams(int(v), int(k), int(e), int(d))
    except InfeasibleParams:
        return None
    return p


def negative_latin_square_params(n: int, m: int) -> SrgParams:
    """srg(n^2, m(n+1), m^2 + 3m - n, m(m+1)); raises when not admissible."""
    e = m * m + 3 * m - n
    if e < 0:
        raise InfeasibleParams(f"negative e = {e} for NL({n},{m})")
    p = SrgParams(n * n, m * (n + 1), e, m * (m + 1))
    if not p.identity_holds():
        raise InfeasibleParams(f"counting identity fails for NL({n},{m})")
    return p


def latin_square_params(m: int, n: int) -> SrgParams:
    """srg(n^2, m(n-1), (m-1)(m-2) + n - 2, m(m-1))."""
    return SrgParams(n * n, m * (n - 1), (m - 1) * (m - 2) + n - 2, m * (m - 1))


def steiner_params(m: int, n: int) -> SrgParams:
    """Block-graph tuple of a Steiner system S(2, m, mn + m - n)."""
    t = m * n + m - n
    num = t * (t - 1)
    den = m * (m - 1)
    if num % den != 0:
        raise InfeasibleParams(f"non-integral vertex count for Steiner(m={m}, n={n})")
    return SrgParams(num // den, m * n, (m - 1) ** 2 + n - 1, m * m)


# -- enumeration -----------------------------------------------------------------------


def _primitive_feasible_scan(n: int):
    """Vectorized scan of one vertex count: all primitive feasible (k, e, d).

    For each k the identity k(k - e - 1) = d(n - k - 1) makes e integral
    exactly when d is a multiple of k / gcd(k, n - 1), so only those d
    are generated.  Returns integer arrays (k, d, e) after the
    primitivity masks.
    """
    if n < 5:
        return None
    ks = np.arange(1, n - 1, dtype=np.int64)
    g = np.gcd(ks, n - 1)
    step = ks // g
    counts = g  # number of admissible d <= k
    total = int(counts.sum())
    if total == 0:
        return None
    k_flat = np.repeat(ks, counts)
    step_flat = np.repeat(step, counts)
    offsets = np.concatenate(([0], np.cumsum(counts)[:-1]))
    t_flat = np.arange(total, dtype=np.int64) - np.repeat(offsets, counts) + 1
    d_flat = step_flat * t_flat

    x = d_flat * (n - 1 - k_flat)
    e_flat = k_flat - 1 - x // k_flat
    mask = (
        (d_flat >= 1)
        & (d_flat < k_flat)
        & (e_flat >= 0)
        & (n - 2 - 2 * k_flat + d_flat >= 0)             # complement e
        & (n - 2 * k_flat + e_flat >= 1)                 # complement d
        & (n - k_flat - 1 > n - 2 * k_flat + e_flat)     # complement d < complement k
    )
    if not mask.any():
        return None
    return k_flat[mask], d_flat[mask], e_flat[mask]


def _equien_scan(n: int) -> list[SrgParams]:
    """Integer pre-filter for one n; survivors still get the exact treatment."""
    scan = _primitive_feasible_scan(n)
    if scan is None:
        return []
    k, d, e = scan
    ed = e - d
    conference = (ed == -1) & (k == 2 * d) & (n == 4 * d + 1)

    alpha = ed * ed + 4 * (k - d)
    a = np.sqrt(alpha.astype(np.float64)).astype(np.int64)
    a = np.where(a * a > alpha, a - 1, a)
    a = np.where((a + 1) * (a + 1) <= alpha, a + 1, a)
    issq = a * a == alpha
    t = 2 * k + (n - 1) * ed
    with np.errstate(divide="ignore", invalid="ignore"):
        num_r = (n - 1) * a - t
        num_s = (n - 1) * a + t
    safe_a = np.where(a == 0, 1, a)
    integral = issq & (num_r % (2 * safe_a) == 0) & (num_r >= 0) & (num_s >= 0)
    equien_int = integral & (-t == (2 * k + 1 - n) * a)

    hits = conference | equien_int
    out = []
    for kk, dd, ee in zip(k[hits].tolist(), d[hits].tolist(), e[hits].tolist()):
        out.append(SrgParams(n, kk, ee, dd))
    return out


def enumerate_equien(n_max: int) -> list[tuple[SrgParams, EquienClass]]:
    """All primitive feasible tuples with n <= n_max equienergetic with
    their complements, classified; asserts that every non-conference
    entry carries orthogonal-array parameters."""
    if n_max > ENUMERATION_CAP:
        raise ValueError(f"n_max above the {ENUMERATION_CAP} cap")
    results: list[tuple[SrgParams, EquienClass]] = []
    for n in range(2, n_max + 1):
        for p in _equien_scan(n):
            if not is_primitive(p):
                continue
            if not equien_condition(p):
                continue
            cls = classify(p)
            if isinstance(cls, NotEquien):
                raise AssertionError(f"scan produced unclassifiable tuple {p}: {cls.reason}")
            if not isinstance(cls, Conference) and oa_params(p) is None:
                raise AssertionError(f"non-conference entry without OA parameters: {p}")
            results.append((p, cls))
    results.sort(key=lambda pc: (pc[0].n, pc[0].k, pc[0].d))
    return results


def imprimitive_equien(a: int, m: int) -> bool:
    """Complete multipartite K_{a x m}: equienergetic with complement iff a == m."""
    if a < 2 or m < 2:
        raise ValueError("need a, m >= 2")
    return a == m


def imprimitive_energy(a: int, m: int) -> int:
    """E(K_{a x m}) = 2m(a - 1)."""
    return 2 * m * (a - 1)


# -- generalized Paley spectra -----------------------------------------------------------


def _least_t(k: int, p: int, bound: int) -> Optional[int]:
    for j in range(1, bound + 1):
        if (pow(p, j, k) + 1) % k == 0:
            return j
    return None


@dataclass(frozen=True)
class GpReport:
    spectrum: Spectrum
    equien: bool
    s: int
    t: int


def gp_spectrum(k: int, q: int, p: Optional[int] = None, m: Optional[int] = None,
                t: Optional[int] = None) -> GpReport:
    """Closed-form spectrum of a semiprimitive power-residue Cayley graph.

    Requires k > 2, q = p^m with m even, k dividing p^t + 1 for the least
    such t (which must divide m/2), and k != p^(m/2) + 1.  The graph is
    equienergetic and non-isospectral with its complement exactly when
    s = m / (2t) is odd.
    """
    from .fields import prime_power_decompose

    decomp = prime_power_decompose(q)
    if decomp is None:
        raise ValueError(f"{q} is not a prime power")
    p0, m0 = decomp
    if p is not None and p != p0:
        raise ValueError(f"q = {q} has characteristic {p0}, not {p}")
    if m is not None and m != m0:
        raise ValueError(f"q = {q} = {p0}^{m0}, not degree {m}")
    p, m = p0, m0
    if k <= 2:
        raise ValueError("need k > 2 (quadratic residues are the classical case)")
    if m % 2 != 0:
        raise ValueError(f"semiprimitivity needs even extension degree, got {m}")
    t0 = _least_t(k, p, m)
    if t0 is None or (m // 2) % t0 != 0:
        raise ValueError(f"(k={k}, q={q}) is not semiprimitive")
    if t is not None and t != t0:
        raise ValueError(f"least exponent with k | p^t + 1 is {t0}, not {t}")
    t = t0
    sqrt_q = p ** (m // 2)
    if k == sqrt_q + 1:
        raise ValueError(f"k = sqrt(q) + 1 = {k} is excluded")
    if (q - 1) % k != 0:
        raise ValueError(f"k = {k} must divide q - 1")

    s = (m // 2) // t
    sign = 1 if s % 2 == 1 else -1
    deg = (q - 1) // k
    lam1 = Fraction(sign * (k - 1) * sqrt_q - 1, k)
    lam2 = Fraction(-(sign * sqrt_q + 1), k)
    if lam1.denominator != 1 or lam2.denominator != 1:
        raise AssertionError(f"non-integral spectrum for (k={k}, q={q})")
    spectrum = Spectrum.from_values([
        (Surd(deg), 1),
        (Surd(lam1), deg),
        (Surd(lam2), (k - 1) * deg),
    ])
    return GpReport(spectrum=spectrum, equien=(s % 2 == 1), s=s, t=t)


def two_fields_srg(q: int) -> SrgParams:
    """Unitary Cayley graph of a product of two equal fields of order q."""
    if q < 3:
        raise ValueError("need q >= 3")
    return SrgParams(q * q, (q - 1) ** 2, (q - 2) ** 2, (q - 1) * (q - 2))
