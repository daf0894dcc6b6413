"""End-to-end analysis of codimension-one distributions given by a 1-form.

Validation, singular scheme, numerical invariants, integrability, the
minimal twist with a section, split detection, stability class with order
of nonstability, and matching against the two maximal-order families.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DivisorialSingularity,
    DomainError,
    EulerViolation,
    InconsistentInvariants,
    InvalidForm,
    NumericContradiction,
    WrongCodimension,
)
from .exterior import ExtForm, VField, contract, exterior_derivative, radial_field, wedge
from .groebner import Ideal, divide_exact, intersect, irrelevant_ideal, saturate
from .hilbert import hilbert
from .linalg import compute_tF
from .poly import Poly


@dataclass(frozen=True)
class ChernTriple:
    c1: int
    c2: int
    c3: int

    def as_tuple(self):
        return (self.c1, self.c2, self.c3)


@dataclass(frozen=True)
class SingInvariants:
    degC: int
    pa: int
    lenU: int
    sat_ideal: Ideal


@dataclass(frozen=True)
class StabilityVerdict:
    epsilon: int
    klass: str          # split | stable | strictly-semistable | unstable
    order: int
    max_order_flag: bool
    family: int | None


@dataclass(frozen=True)
class DistReport:
    degree: int
    integrable: bool
    regular: bool
    sing: SingInvariants
    chern: ChernTriple
    tF: int
    h0_at_tF: int
    minimal_section: VField
    stability: StabilityVerdict
    split_type: tuple | None
    notes: tuple = field(default_factory=tuple)


def poly_gcd(f, g):
    """gcd of two polynomials via lcm = generator of (f) meet (g)."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    inter = intersect(Ideal((f,)), Ideal((g,)))
    if len(inter.gens) != 1:
        raise InconsistentInvariants("intersection of principal ideals not principal")
    lcm = inter.gens[0]
    return divide_exact(f * g, lcm).primitive_integer()


def common_factor(polys):
    """gcd of a list of polynomials; constant result means no common factor."""
    acc = Poly.zero()
    for p in polys:
        acc = poly_gcd(acc, p)
        if acc.is_constant() and not acc.is_zero():
            return acc
    return acc


@functools.lru_cache(maxsize=256)
def singular_scheme(omega):
    """Saturated vanishing ideal of the coefficients of the 1-form."""
    coeffs = omega.one_form_coeffs()
    return saturate(Ideal(tuple(p for p in coeffs if not p.is_zero())), irrelevant_ideal())


def validate_oneform(omega):
    """Check the 1-form defines a distribution; return its degree d."""
    if omega.grade != 1:
        raise InvalidForm("expected a grade-1 form")
    coeffs = omega.one_form_coeffs()
    nonzero = [p for p in coeffs if not p.is_zero()]
    if not nonzero:
        raise InvalidForm("zero 1-form")
    degs = {p.homogeneous_degree() for p in nonzero}
    if len(degs) != 1 or None in degs:
        raise InvalidForm("coefficients must be homogeneous of a common degree")
    dega = degs.pop()
    if dega < 1:
        raise InvalidForm("coefficient degree must be at least 1")
    if not contract(radial_field(), omega).is_zero():
        raise EulerViolation("coefficients do not satisfy the Euler relation")
    g = common_factor(nonzero)
    if not g.is_constant():
        raise DivisorialSingularity(f"coefficients share the factor {g}")
    sat = singular_scheme(omega)
    h = hilbert(sat)
    if h.projective_dimension > 1:
        raise WrongCodimension("singular locus has a divisorial component")
    return dega - 1


def is_integrable(omega):
    """Frobenius condition for a 1-form: omega wedge d(omega) = 0."""
    return wedge(omega, exterior_derivative(omega)).is_zero()


def invariants(omega):
    """Singular-scheme invariants and Chern triple of the tangent sheaf."""
    d = validate_oneform(omega)
    sat = singular_scheme(omega)
    h = hilbert(sat)
    dim = h.projective_dimension

    def c3_formula(degc, pa):
        return d ** 3 + 2 * d ** 2 + 2 * d - degc * (3 * d - 2) + 2 * pa - 2

    if dim == -1:
        degc, pa, lenu = 0, 1, 0
        if c3_formula(0, 1) != 0:
            raise InconsistentInvariants(
                "empty singular scheme is impossible at this degree"
            )
    elif dim == 0:
        degc, pa = 0, 1
        lenu = h.degree
        if lenu != c3_formula(0, 1):
            raise InconsistentInvariants(
                f"isolated-singularity count {lenu} contradicts the invariant formula"
            )
    else:
        degc = h.degree
        k = h.constant_term
        if k.denominator != 1:
            raise InconsistentInvariants("non-integral Hilbert constant term")
        k = int(k)
        a = d ** 3 + 2 * d ** 2 + 2 * d - degc * (3 * d - 2)
        pa = k + 1 - a
        lenu = k - 1 + pa
        if lenu < 0:
            raise InconsistentInvariants(f"negative isolated length {lenu}")
        if lenu != c3_formula(degc, pa):
            raise InconsistentInvariants("length/genus extraction is inconsistent")
    chern = ChernTriple(2 - d, d ** 2 + 2 - degc, lenu)
    return SingInvariants(degc, pa, lenu, sat), chern


def split_test(tF, chern, degree):
    """Split type (a, b) when the twisted second Chern class vanishes."""
    c2_twisted = chern.c2 + chern.c1 * (tF - 1) + (tF - 1) ** 2
    if c2_twisted != 0:
        return None
    if degree < 2 * tF:
        raise NumericContradiction(
            f"split test passed with d={degree} < 2*tF={2 * tF}"
        )
    return (1 - tF, 1 + tF - degree)


def _stability(degree, tF, split, chern):
    eps = degree % 2
    if split is not None:
        return StabilityVerdict(eps, "split", 0, False, None)
    if degree >= 3 and 1 <= tF <= (degree - 2 + eps) // 2:
        order = (degree + eps) // 2 - tF
        max_order = tF == 1
        family = None
        if max_order:
            if chern.as_tuple() == (2 - degree, 1, degree):
                family = 1
            elif chern.as_tuple() == (2 - degree, 2, 2 * degree):
                family = 2
        return StabilityVerdict(eps, "unstable", order, max_order, family)
    if eps == 0:
        if tF >= degree // 2 + 1:
            return StabilityVerdict(eps, "stable", 0, False, None)
        if tF == degree // 2:
            return StabilityVerdict(eps, "strictly-semistable", 0, False, None)
    else:
        if tF >= (degree + 1) // 2:
            return StabilityVerdict(eps, "stable", 0, False, None)
    raise InconsistentInvariants(
        f"nonsplit sheaf with d={degree}, tF={tF} fits no stability class"
    )


def classify(omega):
    """Full analysis pipeline producing a DistReport."""
    d = validate_oneform(omega)
    sing, chern = invariants(omega)
    tF, section, sdim = compute_tF(omega, degree=d)
    split = split_test(tF, chern, d)
    verdict = _stability(d, tF, split, chern)
    notes = []
    if chern.c2 < 0:
        notes.append("negative c2: no nonempty minimal-section curve exists")
    regular = sing.sat_ideal.is_unit()
    return DistReport(
        degree=d,
        integrable=is_integrable(omega),
        regular=regular,
        sing=sing,
        chern=chern,
        tF=tF,
        h0_at_tF=sdim.h0,
        minimal_section=section,
        stability=verdict,
        split_type=split,
        notes=tuple(notes),
    )


def table1(d_max):
    """Split types O(1-t) + O(1+t-d) for 0 <= d <= d_max; impossible cells None."""
    if d_max < 0:
        raise DomainError("d_max must be non-negative")
    t_max = d_max // 2
    rows = []
    for d in range(d_max + 1):
        row = []
        for t in range(t_max + 1):
            if d < 2 * t:
                row.append(None)
            else:
                row.append((1 - t, 1 + t - d))
        rows.append(row)
    return rows


def splitruim_invariants(t):
    """Curve degree and genus of the semistable split family at twist t."""
    if t < 0:
        raise DomainError("t must be non-negative")
    return (3 * t * t + 2 * t + 1, t * (5 * t * t - t - 1))


def line_family_invariants(d, t):
    """Chern triple when the minimal section vanishes exactly on a line."""
    if d < 2 * (t - 1):
        raise DomainError(f"requires d >= 2(t-1), got d={d}, t={t}")
    return ChernTriple(2 - d, -t * t + d * (t - 1) + 2, d - 2 * (t - 1))


def family_dim(family, d):
    """Dimension of the parameter variety of each maximal-order family."""
    if d < 3:
        raise DomainError("families require degree at least 3")
    if family == 1:
        return d + 4
    if family == 2:
        return 2 * d + 7
    raise DomainError(f"unknown family {family}")
