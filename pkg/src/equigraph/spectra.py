"""Spectrum model, discrepancy invariants and the equienergy criterion.

A regular graph and its loopless complement are equienergetic exactly
when ``n == 2k + 1 - Delta`` where ``Delta`` is the spectral
discrepancy: the sum of ``|1 + x| - |x|`` over the spectrum with one
copy of the degree removed.  Everything here is decided in exact
arithmetic whenever the eigenvalues are exact; certified floating
entries are admitted only when their intervals stay clear of the
branch-relevant region ``(-1, 0)`` and its endpoints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Optional, Union

from .exact import ExactValue, Surd, exact_sum, format_surd, parse_surd

__all__ = [
    "UncertifiableBranch",
    "Eig",
    "Spectrum",
    "Approximate",
    "DiscrepancyBreakdown",
    "EquienReport",
    "SpectrumFlags",
    "delta_of",
    "discrepancy",
    "energy",
    "complement_spectrum",
    "check_equienergetic",
    "classify_spectrum",
    "spectra_match",
]

APPROX_RADIUS_CAP = 1e-6
MERGE_THRESHOLD = 1e-9


class UncertifiableBranch(Exception):
    """A floating eigenvalue interval cannot be assigned a branch of delta."""


@dataclass(frozen=True)
class Eig:
    """A real eigenvalue, known exactly or within +-radius."""

    exact: Optional[Surd]
    value: float
    radius: float

    @classmethod
    def from_exact(cls, x: Union[Surd, int, Fraction]) -> "Eig":
        s = x if isinstance(x, Surd) else Surd(x)
        return cls(exact=s, value=float(s), radius=0.0)

    @classmethod
    def from_approx(cls, value: float, radius: float) -> "Eig":
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        return cls(exact=None, value=float(value), radius=float(radius))

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def lo(self) -> float:
        return self.value - self.radius

    @property
    def hi(self) -> float:
        return self.value + self.radius

    def __str__(self) -> str:
        if self.exact is not None:
            return format_surd(self.exact)
        return f"{self.value!r}(+-{self.radius:g})"


def _cmp_eig(x: Eig, y: Eig) -> int:
    """Descending canonical order: larger value first, exact before approx."""
    if x.exact is not None and y.exact is not None:
        return -x.exact.compare(y.exact)
    if x.value != y.value:
        return -1 if x.value > y.value else 1
    if x.is_exact != y.is_exact:
        return -1 if x.is_exact else 1
    if x.radius != y.radius:
        return -1 if x.radius < y.radius else 1
    return 0


class Spectrum:
    """Multiset of eigenvalues with multiplicities, sorted descending."""

    __slots__ = ("entries", "n", "principal")

    def __init__(self, entries: Iterable[tuple[Eig, int]], n: Optional[int] = None,
                 principal: int = 0):
        merged: list[tuple[Eig, int]] = []
        for eig, mult in entries:
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            for i, (other, m) in enumerate(merged):
                if eig.exact is not None and other.exact is not None and eig.exact == other.exact:
                    merged[i] = (other, m + mult)
                    break
            else:
                merged.append((eig, mult))
        merged.sort(key=cmp_to_key(lambda p, q: _cmp_eig(p[0], q[0])))
        total = sum(m for _, m in merged)
        if n is None:
            n = total
        elif n != total:
            raise ValueError(f"multiplicities sum to {total}, expected n={n}")
        if merged and not 0 <= principal < len(merged):
            raise ValueError("principal index out of range")
        self.entries = tuple(merged)
        self.n = n
        self.principal = principal

    @classmethod
    def from_values(cls, values: Iterable[tuple[Union[Surd, int, Fraction], int]]) -> "Spectrum":
        return cls([(Eig.from_exact(v), m) for v, m in values])

    @property
    def is_exact(self) -> bool:
        return all(e.is_exact for e, _ in self.entries)

    @property
    def principal_eig(self) -> Eig:
        return self.entries[self.principal][0]

    def multiplicity_of(self, value: Union[Surd, int, Fraction]) -> int:
        target = value if isinstance(value, Surd) else Surd(value)
        for eig, m in self.entries:
            if eig.exact is not None and eig.exact == target:
                return m
        return 0

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        if self.n != other.n or len(self.entries) != len(other.entries):
            return False
        for (e1, m1), (e2, m2) in zip(self.entries, other.entries):
            if m1 != m2:
                return False
            if (e1.exact is None) != (e2.exact is None):
                return False
            if e1.exact is not None:
                if e1.exact != e2.exact:
                    return False
            elif (e1.value, e1.radius) != (e2.value, e2.radius):
                return False
        return True

    def __hash__(self):
        return hash((self.n, self.entries))

    def __repr__(self):
        inner = ", ".join(f"[{eig}]^{m}" for eig, m in self.entries)
        return f"Spectrum({{{inner}}}, n={self.n})"

    # -- JSON wire format ---------------------------------------------------

    def to_json_dict(self) -> dict:
        entries = []
        for eig, mult in self.entries:
            if eig.exact is not None:
                value = format_surd(eig.exact)
            else:
                value = {"approx": eig.value, "radius": eig.radius}
            entries.append({"value": value, "mult": mult})
        return {"n": self.n, "entries": entries, "principal": self.principal}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Spectrum":
        entries = []
        for item in obj["entries"]:
            value = item["value"]
            if isinstance(value, str):
                eig = Eig.from_exact(parse_surd(value))
            else:
                eig = Eig.from_approx(value["approx"], value["radius"])
            entries.append((eig, int(item["mult"])))
        return cls(entries, n=int(obj["n"]), principal=int(obj.get("principal", 0)))

    @classmethod
    def from_json(cls, text: str) -> "Spectrum":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class Approximate:
    """An inexact scalar result carrying its accumulated radius."""

    value: float
    radius: float

    def __float__(self):
        return self.value


# -- delta and the discrepancy ------------------------------------------------


def _assumed_value(e: Eig) -> Fraction:
    """assume-exact reading of an interval: the midpoint, snapped to the
    nearest integer when it is within the merge threshold (numeric spectra
    of integral graphs land there)."""
    nearest = round(e.value)
    if abs(e.value - nearest) <= MERGE_THRESHOLD:
        return Fraction(nearest)
    return Fraction(e.value)


def _certify_region(e: Eig, assume_exact: bool) -> str:
    """Locate an approximate eigenvalue: 'nonneg', 'le_m1' or 'unit_neg'.

    The open interval (-1, 0) is where delta varies, so an interval that
    touches it cannot contribute an exact branch value.
    """
    if e.radius > APPROX_RADIUS_CAP and not assume_exact:
        raise UncertifiableBranch(
            f"interval radius {e.radius!r} exceeds the decision cap {APPROX_RADIUS_CAP}"
        )
    if e.lo >= 0:
        return "nonneg"
    if e.hi <= -1:
        return "le_m1"
    if not assume_exact:
        raise UncertifiableBranch(
            f"interval [{e.lo!r}, {e.hi!r}] is not certifiably clear of (-1, 0)"
        )
    v = _assumed_value(e)
    if v >= 0:
        return "nonneg"
    if v <= -1:
        return "le_m1"
    return "unit_neg"


def delta_of(x: Eig, assume_exact: bool = False) -> ExactValue:
    """The piecewise-linear term ``|1 + x| - |x|`` of one eigenvalue."""
    if x.exact is not None:
        v = x.exact
        if v.sign() >= 0:
            return ExactValue.from_rational(1)
        if v.compare(Surd(-1)) <= 0:
            return ExactValue.from_rational(-1)
        return ExactValue.from_surd(v * 2 + 1)
    region = _certify_region(x, assume_exact)
    if region == "nonneg":
        return ExactValue.from_rational(1)
    if region == "le_m1":
        return ExactValue.from_rational(-1)
    return ExactValue.from_rational(2 * _assumed_value(x) + 1)


@dataclass(frozen=True)
class DiscrepancyBreakdown:
    """Decomposition ``delta_total = sigma + T + m0 + S`` over Sp'.

    sigma -- sum of eigenvalue signs where |eig| >= 1;
    T     -- count of eigenvalues in (0, 1);
    m0    -- multiplicity of eigenvalue 0;
    S     -- sum of 2*eig + 1 over eigenvalues in (-1, 0).
    """

    sigma: int
    T: int
    m0: int
    S: ExactValue
    delta_total: ExactValue

    def __post_init__(self):
        if self.delta_total != self.S + (self.sigma + self.T + self.m0):
            raise AssertionError("discrepancy decomposition identity violated")


def _sp_prime(s: Spectrum) -> list[tuple[Eig, int]]:
    """Spectrum entries with exactly one copy of the principal eigenvalue removed."""
    out = []
    for i, (eig, mult) in enumerate(s.entries):
        if i == s.principal:
            if mult > 1:
                out.append((eig, mult - 1))
        else:
            out.append((eig, mult))
    return out


def discrepancy(s: Spectrum, assume_exact: bool = False) -> DiscrepancyBreakdown:
    """Exact discrepancy of a regular spectrum, over Sp' = Spec minus one degree copy."""
    sigma = 0
    t_count = 0
    m0 = 0
    s_terms = ExactValue()
    for eig, mult in _sp_prime(s):
        if eig.exact is not None:
            v = eig.exact
            if v.compare(Surd(1)) >= 0:
                sigma += mult
            elif v.compare(Surd(-1)) <= 0:
                sigma -= mult
            elif v.sign() == 0:
                m0 += mult
            elif v.sign() > 0:
                t_count += mult
            else:
                s_terms = s_terms + ExactValue.from_surd(v * 2 + 1).scaled(mult)
        else:
            region = _certify_region(eig, assume_exact)
            if region == "le_m1":
                sigma -= mult
            elif region == "unit_neg":
                s_terms = s_terms + ExactValue.from_rational(
                    (2 * _assumed_value(eig) + 1) * mult
                )
            else:
                v = _assumed_value(eig) if assume_exact else Fraction(eig.value)
                if v >= 1:
                    sigma += mult
                elif v == 0 and (assume_exact or eig.radius == 0):
                    m0 += mult
                else:
                    t_count += mult
    total = s_terms + (sigma + t_count + m0)
    return DiscrepancyBreakdown(sigma=sigma, T=t_count, m0=m0, S=s_terms, delta_total=total)


def energy(s: Spectrum) -> Union[ExactValue, Approximate]:
    """Sum of |eigenvalue| * multiplicity; exact when every entry is exact."""
    if s.is_exact:
        return exact_sum([(abs(e.exact), m) for e, m in s.entries])
    value = 0.0
    radius = 0.0
    for eig, mult in s.entries:
        if eig.exact is not None:
            value += abs(float(eig.exact)) * mult
        else:
            value += abs(eig.value) * mult
            radius += eig.radius * mult
    return Approximate(value=value, radius=radius)


def complement_spectrum(s: Spectrum, k: int, loops: bool = False) -> Spectrum:
    """Spectrum of the complement of a k-regular graph with spectrum ``s``.

    Loopless complement maps eig -> -1 - eig; the with-loops convention
    maps eig -> -eig.  The principal entry is replaced by n - k - 1.
    """
    n = s.n
    new_entries: list[tuple[Eig, int]] = [(Eig.from_exact(Surd(n - k - 1)), 1)]
    for eig, mult in _sp_prime(s):
        if eig.exact is not None:
            mapped = -eig.exact if loops else Surd(-1) - eig.exact
            new_entries.append((Eig.from_exact(mapped), mult))
        else:
            v = -eig.value if loops else -1.0 - eig.value
            new_entries.append((Eig.from_approx(v, eig.radius), mult))
    out = Spectrum(new_entries, n=n)
    target = Surd(n - k - 1)
    principal = next(
        i for i, (eig, _) in enumerate(out.entries)
        if eig.exact is not None and eig.exact == target
    )
    return Spectrum(out.entries, n=n, principal=principal)


@dataclass(frozen=True)
class EquienReport:
    equal: bool
    delta: Optional[ExactValue]
    energy: Union[ExactValue, Approximate]
    energy_complement: Union[ExactValue, Approximate]
    routes_agree: bool


def _energies_consistent(equal: bool, e1, e2) -> bool:
    if isinstance(e1, ExactValue) and isinstance(e2, ExactValue):
        return (e1 == e2) == equal
    v1, r1 = (e1.value, e1.radius) if isinstance(e1, Approximate) else (float(e1), 0.0)
    v2, r2 = (e2.value, e2.radius) if isinstance(e2, Approximate) else (float(e2), 0.0)
    overlap = abs(v1 - v2) <= r1 + r2 + 1e-12
    if equal:
        return overlap
    return True  # intervals cannot refute a strict inequality verdict


def check_equienergetic(s: Spectrum, k: int, loops: bool = False,
                        assume_exact: bool = False) -> EquienReport:
    """Decide E(graph) == E(complement) for a k-regular spectrum.

    Criterion route: n == 2k + 1 (with loops) or n == 2k + 1 - Delta
    (loopless).  The energy route recomputes both energies through
    complement_spectrum as an independent cross-check.
    """
    n = s.n
    if loops:
        delta = None
        equal = n == 2 * k + 1
    else:
        delta = discrepancy(s, assume_exact=assume_exact).delta_total
        equal = delta == Fraction(2 * k + 1 - n)
    e_graph = energy(s)
    e_comp = energy(complement_spectrum(s, k, loops=loops))
    agree = _energies_consistent(equal, e_graph, e_comp)
    return EquienReport(equal=equal, delta=delta, energy=e_graph,
                        energy_complement=e_comp, routes_agree=agree)


@dataclass(frozen=True)
class SpectrumFlags:
    integral: bool
    symmetric: bool
    almost_symmetric: bool


def _mult_map_exact(s: Spectrum) -> dict[Surd, int]:
    out: dict[Surd, int] = {}
    for eig, mult in s.entries:
        if eig.exact is None:
            continue
        out[eig.exact] = out.get(eig.exact, 0) + mult
    return out


def classify_spectrum(s: Spectrum) -> SpectrumFlags:
    """Integrality plus the (almost-)symmetry of the multiplicity function."""
    integral = all(e.exact is not None and e.exact.is_integer for e, _ in s.entries)

    def mult_at(value: float, exact: Optional[Surd]) -> int:
        total = 0
        for eig, m in s.entries:
            if exact is not None and eig.exact is not None:
                if eig.exact == exact:
                    total += m
            elif abs(eig.value - value) <= eig.radius + MERGE_THRESHOLD:
                total += m
        return total

    symmetric = True
    almost = True
    principal_exact = s.principal_eig.exact
    for eig, mult in s.entries:
        neg_exact = -eig.exact if eig.exact is not None else None
        m_neg = mult_at(-eig.value, neg_exact)
        if mult != m_neg:
            symmetric = False
            is_principal_value = (
                principal_exact is not None and eig.exact is not None
                and eig.exact == principal_exact
            ) or (eig is s.principal_eig)
            if not is_principal_value:
                almost = False
    return SpectrumFlags(integral=integral, symmetric=symmetric, almost_symmetric=almost)


def spectra_match(numeric: Spectrum, exact: Spectrum, tol: float = 1e-7) -> bool:
    """Entrywise agreement with multiplicity grouping at tolerance ``tol``."""
    if numeric.n != exact.n:
        return False
    for eig, mult in exact.entries:
        target = float(eig.exact) if eig.exact is not None else eig.value
        got = sum(m for e, m in numeric.entries if abs(e.value - target) <= tol)
        if got != mult:
            return False
    total = sum(m for _, m in numeric.entries)
    return total == exact.n
