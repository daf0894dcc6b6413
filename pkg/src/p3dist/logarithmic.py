"""Logarithmic 1-forms attached to weighted tuples of hypersurfaces.

Given polynomials f_1..f_r of degrees d_1..d_r and weights with
sum(lambda_i * d_i) = 0, the 1-form sum_i lambda_i (prod_{j!=i} f_j) df_i
defines an integrable distribution of degree d = sum(d_i) - 2. The module
builds such forms, predicts the generic singular-scheme invariants from
the degree tuple alone, audits concrete instances against the prediction,
and decides which degree tuples are numerically excluded from the two
maximal-order families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, prod

from .errors import DegreeMismatch, DomainError, WeightRelationViolated
from .exterior import ExtForm
from .poly import NVARS, Poly
from . import distribution


@dataclass(frozen=True)
class LogType:
    """Weighted hypersurface tuple; validates degrees and the weight relation."""

    polys: tuple
    weights: tuple

    def __post_init__(self):
        if len(self.polys) < 2 or len(self.polys) != len(self.weights):
            raise DomainError("need at least two weighted polynomials")
        for f in self.polys:
            if f.homogeneous_degree() is None or f.homogeneous_degree() < 1:
                raise DegreeMismatch(
                    "each polynomial must be homogeneous of positive degree"
                )
        rel = sum(
            Fraction(w) * f.homogeneous_degree()
            for w, f in zip(self.weights, self.polys)
        )
        if rel != 0:
            raise WeightRelationViolated(
                f"sum of weight*degree is {rel}, expected 0"
            )

    @property
    def degrees(self):
        return tuple(f.homogeneous_degree() for f in self.polys)

    @property
    def form_degree(self):
        return sum(self.degrees) - 2


def build_log_form(log_type):
    """The 1-form sum_i lambda_i (prod_{j!=i} f_j) df_i."""
    polys = log_type.polys
    weights = log_type.weights
    coeffs = [Poly.zero()] * NVARS
    for i, (w, f) in enumerate(zip(weights, polys)):
        rest = prod((g for j, g in enumerate(polys) if j != i), start=Poly.constant(1))
        scaled = rest * Fraction(w)
        for k in range(NVARS):
            coeffs[k] = coeffs[k] + scaled * f.diff(k)
    return ExtForm.one_form(*coeffs)


def expected_curve_degree(degrees):
    """Degree of the generic non-isolated singular locus: e_2 of the tuple."""
    return sum(a * b for a, b in combinations(degrees, 2))


def expected_isolated_count(degrees):
    """Generic number of isolated singular points for the degree tuple.

    Coefficient of h^3 in (1 - h)^4 / prod_i (1 - d_i h).
    """
    series = [comb(4, k) * (-1) ** k for k in range(4)]  # (1-h)^4 up to h^3
    for d in degrees:
        series = [
            sum(series[j] * d ** (k - j) for j in range(k + 1))
            for k in range(4)
        ]
    return series[3]


@dataclass(frozen=True)
class LogAuditReport:
    degrees: tuple
    form_degree: int
    integrable: bool
    expected_degC: int
    actual_degC: int
    expected_lenU: int
    actual_lenU: int
    non_generic: bool
    dist_report: object


def audit_log_form(log_type):
    """Build the form, run the full analysis, compare with the predictions."""
    omega = build_log_form(log_type)
    report = distribution.classify(omega)
    degrees = log_type.degrees
    exp_degc = expected_curve_degree(degrees)
    exp_lenu = expected_isolated_count(degrees)
    non_generic = (report.sing.degC, report.sing.lenU) != (exp_degc, exp_lenu)
    return LogAuditReport(
        degrees=degrees,
        form_degree=log_type.form_degree,
        integrable=report.integrable,
        expected_degC=exp_degc,
        actual_degC=report.sing.degC,
        expected_lenU=exp_lenu,
        actual_lenU=report.sing.lenU,
        non_generic=non_generic,
        dist_report=report,
    )


def exclusion_check(degrees):
    """True when a generic form of this degree tuple cannot realize either
    maximal-order family: its (curve degree, isolated count) must hit
    (d^2 + 1, d) or (d^2, 2d) for d = sum(degrees) - 2."""
    if len(degrees) < 2 or any(d < 1 for d in degrees):
        raise DomainError("degrees must be a tuple of at least two positive ints")
    d = sum(degrees) - 2
    if d < 3:
        raise DomainError("families require degree at least 3")
    pair = (expected_curve_degree(degrees), expected_isolated_count(degrees))
    return pair not in {(d * d + 1, d), (d * d, 2 * d)}


def exclusion_sweep(d):
    """All degree tuples with sum d + 2 (ascending), each with its verdict."""
    target = d + 2

    def partitions(total, minpart):
        if total == 0:
            yield ()
            return
        for first in range(minpart, total + 1):
            for rest in partitions(total - first, first):
                yield (first,) + rest

    out = []
    for tup in partitions(target, 1):
        if len(tup) >= 2:
            out.append((tup, exclusion_check(tup)))
    return out
