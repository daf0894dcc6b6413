"""Exterior calculus on the homogeneous cone over P^3.

Forms are graded-antisymmetric tables indexed by strictly increasing index
tuples from {0,1,2,3} with polynomial coefficients. Grade-1 forms with
coefficients (A0..A3) represent A0*dx0 + ... + A3*dx3.
"""

from __future__ import annotations

from itertools import combinations

from .errors import GradeOverflow
from .poly import NVARS, Poly

_INDEX_SETS = {g: tuple(combinations(range(NVARS), g)) for g in range(NVARS + 1)}


def _merge_sign(a, b):
    """Sign of sorting a+b into increasing order; 0 if a repeated index."""
    if set(a) & set(b):
        return None, 0
    merged = a + b
    inv = 0
    for i in range(len(merged)):
        for j in range(i + 1, len(merged)):
            if merged[i] > merged[j]:
                inv += 1
    return tuple(sorted(merged)), (-1) ** inv


class ExtForm:
    """Exterior differential form of grade g with Poly coefficients."""

    __slots__ = ("grade", "coeffs")

    def __init__(self, grade, coeffs=None):
        if grade not in range(NVARS + 1):
            raise ValueError(f"grade must be 0..{NVARS}, got {grade}")
        table = {idx: Poly.zero() for idx in _INDEX_SETS[grade]}
        if coeffs:
            for idx, p in coeffs.items():
                idx = tuple(idx)
                if idx not in table:
                    raise ValueError(f"bad index tuple {idx} for grade {grade}")
                table[idx] = p if isinstance(p, Poly) else Poly.constant(p)
        object.__setattr__(self, "grade", grade)
        object.__setattr__(self, "coeffs", table)

    def __setattr__(self, name, value):
        raise AttributeError("ExtForm is immutable")

    @staticmethod
    def from_function(f):
        """Grade-0 form from a polynomial."""
        return ExtForm(0, {(): f})

    @staticmethod
    def one_form(a0, a1, a2, a3):
        return ExtForm(1, {(0,): a0, (1,): a1, (2,): a2, (3,): a3})

    def one_form_coeffs(self):
        if self.grade != 1:
            raise ValueError("not a 1-form")
        return tuple(self.coeffs[(i,)] for i in range(NVARS))

    def is_zero(self):
        return all(p.is_zero() for p in self.coeffs.values())

    def __add__(self, other):
        if self.grade != other.grade:
            raise ValueError("cannot add forms of different grade")
        return ExtForm(
            self.grade,
            {idx: self.coeffs[idx] + other.coeffs[idx] for idx in self.coeffs},
        )

    def __neg__(self):
        return ExtForm(self.grade, {idx: -p for idx, p in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return ExtForm(self.grade, {idx: p * scalar for idx, p in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ExtForm):
            return NotImplemented
        return self.grade == other.grade and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.grade, frozenset(self.coeffs.items())))

    def __repr__(self):
        nz = {idx: str(p) for idx, p in self.coeffs.items() if not p.is_zero()}
        return f"ExtForm(grade={self.grade}, {nz})"


def wedge(a, b):
    """Exterior product, with dx_i ^ dx_j = -dx_j ^ dx_i."""
    g = a.grade + b.grade
    if g > NVARS:
        raise GradeOverflow(f"wedge of grades {a.grade} and {b.grade} exceeds {NVARS}")
    out = {idx: Poly.zero() for idx in _INDEX_SETS[g]}
    for ia, pa in a.coeffs.items():
        if pa.is_zero():
            continue
        for ib, pb in b.coeffs.items():
            if pb.is_zero():
                continue
            idx, sign = _merge_sign(ia, ib)
            if sign:
                out[idx] = out[idx] + sign * (pa * pb)
    return ExtForm(g, out)


def exterior_derivative(a):
    """d operator; raises grade by one."""
    if a.grade >= NVARS:
        raise ValueError("cannot differentiate a top-grade form")
    out = {idx: Poly.zero() for idx in _INDEX_SETS[a.grade + 1]}
    for idx, p in a.coeffs.items():
        for i in range(NVARS):
            dp = p.diff(i)
            if dp.is_zero():
                continue
            new, sign = _merge_sign((i,), idx)
            if sign:
                out[new] = out[new] + sign * dp
    return ExtForm(a.grade + 1, out)


class VField:
    """Polynomial vector field F0*d/dx0 + ... + F3*d/dx3."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(
            p if isinstance(p, Poly) else Poly.constant(p) for p in components
        )
        if len(comps) != NVARS:
            raise ValueError(f"need {NVARS} components")
        object.__setattr__(self, "components", comps)

    def __setattr__(self, name, value):
        raise AttributeError("VField is immutable")

    def common_degree(self):
        """Shared homogeneous degree of the nonzero components, or None."""
        degs = {
            p.homogeneous_degree() for p in self.components if not p.is_zero()
        }
        if len(degs) != 1 or None in degs:
            return None
        return degs.pop()

    def is_zero(self):
        return all(p.is_zero() for p in self.components)

    def __eq__(self, other):
        if not isinstance(other, VField):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"VField({', '.join(str(p) for p in self.components)})"


def radial_field():
    """The distinguished Euler field (x0, x1, x2, x3)."""
    return VField(tuple(Poly.variable(i) for i in range(NVARS)))


def contract(v, a):
    """Interior product i_v(a); lowers grade by one."""
    if a.grade < 1:
        raise ValueError("cannot contract a grade-0 form")
    out = {idx: Poly.zero() for idx in _INDEX_SETS[a.grade - 1]}
    for idx, p in a.coeffs.items():
        if p.is_zero():
            continue
        for pos, i in enumerate(idx):
            f = v.components[i]
            if f.is_zero():
                continue
            rest = idx[:pos] + idx[pos + 1:]
            out[rest] = out[rest] + ((-1) ** pos) * (f * p)
    return ExtForm(a.grade - 1, out)
