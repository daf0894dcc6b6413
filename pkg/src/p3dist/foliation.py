"""Foliations by curves: analysis of one-dimensional polynomial vector
fields up to radial equivalence.

Singular scheme from the 2x2 minors against the radial field, conormal
invariants extracted from the Hilbert polynomial, the degree-1 trichotomy,
and the contraction pairing with codimension-one distributions.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import (
    InconsistentInvariants,
    DomainError,
    InvalidForm,
    RadialField,
    UnclassifiedDegree1,
)
from .distribution import ChernTriple
from .exterior import VField, contract
from .groebner import Ideal, irrelevant_ideal, saturate
from .hilbert import hilbert
from .poly import NVARS, Poly

_DEGREE1_CASES = {
    (0, 6, 4): "stable-points",
    (1, 5, 2): "semistable-line",
    (2, 4, 0): "split-skew-or-double",
}


@dataclass(frozen=True)
class CurveInvariants:
    degC: int
    pa: int
    lenU: int
    sat_ideal: Ideal


@dataclass(frozen=True)
class FoliationCurveReport:
    degree: int
    sing: CurveInvariants
    chern: ChernTriple  # invariants of the conormal-type sheaf
    degree1_case: str | None


def _validated_degree(v):
    deg = v.common_degree()
    if deg is None:
        raise InvalidForm(
            "components must be homogeneous of a common degree and not all zero"
        )
    return deg


def minors_against_radial(v):
    """The six 2x2 minors F_i*x_j - F_j*x_i defining the singular scheme."""
    out = []
    for i in range(NVARS):
        for j in range(i + 1, NVARS):
            out.append(
                v.components[i] * Poly.variable(j)
                - v.components[j] * Poly.variable(i)
            )
    return out


@functools.lru_cache(maxsize=256)
def sing_scheme_v(v):
    """Saturated ideal of the locus where the field is radially dependent."""
    _validated_degree(v)
    minors = [m for m in minors_against_radial(v) if not m.is_zero()]
    if not minors:
        raise RadialField("field is a multiple of the radial field")
    return saturate(Ideal(tuple(minors)), irrelevant_ideal())


def conormal_invariants(v):
    """Singular-scheme invariants and the Chern triple for a degree-d' field."""
    d = _validated_degree(v)
    sat = sing_scheme_v(v)
    h = hilbert(sat)
    dim = h.projective_dimension

    def c3_formula(degc, pa):
        return d ** 3 + d ** 2 + d - 3 * degc * (d - 1) + 2 * pa - 1

    if dim == -1:
        degc, pa, lenu = 0, 1, 0
        if c3_formula(0, 1) != 0:
            raise InconsistentInvariants(
                "empty singular scheme contradicts the invariant count"
            )
    elif dim == 0:
        degc, pa = 0, 1
        lenu = h.degree
        if lenu != c3_formula(0, 1):
            raise InconsistentInvariants(
                f"isolated length {lenu} contradicts the invariant count"
            )
    else:
        degc = h.degree
        k = h.constant_term
        if k.denominator != 1:
            raise InconsistentInvariants("non-integral Hilbert constant term")
        k = int(k)
        b = d ** 3 + d ** 2 + d - 3 * degc * (d - 1)
        pa = k - b
        lenu = 2 * k - b - 1
        if lenu < 0:
            raise InconsistentInvariants(f"negative isolated length {lenu}")
        if lenu != c3_formula(degc, pa):
            raise InconsistentInvariants("length/genus extraction is inconsistent")
    chern = ChernTriple(-3 - d, d ** 2 + 2 * d + 3 - degc, lenu)
    return CurveInvariants(degc, pa, lenu, sat), chern


def analyze(v):
    """Conormal invariants plus the degree-1 case when applicable."""
    d = _validated_degree(v)
    sing, chern = conormal_invariants(v)
    case = None
    if d == 1:
        key = (sing.degC, chern.c2, chern.c3)
        case = _DEGREE1_CASES.get(key)
        if case is None:
            raise UnclassifiedDegree1(
                f"degree-1 field with (degC, c2, c3) = {key} fits no case"
            )
    return FoliationCurveReport(d, sing, chern, case)


def classify_degree1(v):
    """Place a degree-1 field into the three-case trichotomy."""
    d = _validated_degree(v)
    if d != 1:
        raise DomainError(f"trichotomy applies to degree-1 fields, got {d}")
    return analyze(v)


def line_sing_invariants(dprime):
    """Chern triple when the singular scheme is a single reduced line."""
    if dprime < 1:
        raise DomainError("requires degree at least 1")
    return (
        -3 - dprime,
        dprime ** 2 + 2 * dprime + 2,
        dprime ** 3 + dprime ** 2 - 2 * dprime + 2,
    )


def contraction_check(v, omega):
    """True when the field lies in the distribution cut out by the 1-form."""
    if omega.grade != 1:
        raise InvalidForm("expected a grade-1 form")
    return contract(v, omega).is_zero()
