"""Exact linear algebra over the rationals.

Rank/nullity via fraction-free Bareiss elimination on integer matrices;
kernel bases via reduced row echelon form. Built on top of these: the
dimension h0 of twisted section spaces of the tangent sheaf of a
codimension-one distribution, and the minimal twist admitting a section.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BoundViolated, InvalidForm
from .exterior import VField, contract, radial_field
from .poly import (
    NVARS,
    Poly,
    dim_graded_piece,
    mon_mul,
    monomials_of_degree,
)


class RatMatrix:
    """Dense row-major exact matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    def integer_rows(self):
        """Rows rescaled to integers (rank-preserving)."""
        out = []
        for r in self.rows:
            den = 1
            for c in r:
                c = Fraction(c)
                den = den * c.denominator // gcd(den, c.denominator)
            out.append([int(Fraction(c) * den) for c in r])
        return out


def bareiss_rank(matrix):
    """Rank by fraction-free Bareiss elimination."""
    m = matrix.integer_rows() if isinstance(matrix, RatMatrix) else [list(r) for r in matrix]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = 1
    rank = 0
    row = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(row, nrows):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != row:
            m[row], m[pivot_row] = m[pivot_row], m[row]
        piv = m[row][col]
        for r in range(row + 1, nrows):
            mr = m[r]
            f = mr[col]
            if f or True:
                top = m[row]
                for c in range(col, ncols):
                    mr[c] = (piv * mr[c] - f * top[c]) // prev
        prev = piv
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def kernel_dim(matrix):
    """Exact nullity: columns minus Bareiss rank."""
    if isinstance(matrix, RatMatrix):
        return matrix.ncols - bareiss_rank(matrix)
    ncols = len(matrix[0]) if matrix else 0
    return ncols - bareiss_rank(matrix)


def rref(rows):
    """Reduced row echelon form over Fraction; returns (rref_rows, pivots)."""
    m = [[Fraction(c) for c in r] for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    row = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(row, nrows):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        piv = m[row][col]
        m[row] = [c / piv for c in m[row]]
        for r in range(nrows):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return m, pivots


def kernel_basis(rows):
    """Basis of the right kernel, one vector per free column (RREF form)."""
    if not rows:
        return []
    ncols = len(rows[0])
    m, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class SectionSpaceDim:
    """Dimension bookkeeping for sections of the tangent sheaf at a twist."""

    twist: int
    raw_kernel_dim: int
    radial_dim: int
    h0: int


def _contraction_matrix(coeffs, dprime):
    """Matrix of (F_0..F_3) -> sum A_i F_i on degree-dprime quadruples.

    Columns: component-major over the degree-dprime monomial basis.
    Rows: monomials of the target degree.
    """
    dega = coeffs[0].homogeneous_degree()
    src_mons = monomials_of_degree(dprime)
    tgt_mons = monomials_of_degree(dprime + dega)
    tgt_index = {m: r for r, m in enumerate(tgt_mons)}
    ncols = NVARS * len(src_mons)
    rows = [[Fraction(0)] * ncols for _ in tgt_mons]
    col = 0
    for i in range(NVARS):
        ai = coeffs[i]
        for m in src_mons:
            for am, ac in ai.terms.items():
                rows[tgt_index[mon_mul(am, m)]][col] = ac
            col += 1
    return rows, src_mons


def h0_tangent_twist(omega, dprime):
    """h0 of the twist of the tangent sheaf whose sections are degree-dprime
    vector fields annihilated by the 1-form, modulo radial multiples."""
    coeffs = omega.one_form_coeffs()
    if not contract(radial_field(), omega).is_zero():
        raise InvalidForm("1-form does not annihilate the radial field")
    if dprime < 0:
        return SectionSpaceDim(dprime, 0, 0, 0)
    rows, _ = _contraction_matrix(coeffs, dprime)
    nullity = kernel_dim(RatMatrix(rows))
    radial = dim_graded_piece(dprime - 1)
    return SectionSpaceDim(dprime, nullity, radial, nullity - radial)


def _radial_vectors(dprime, src_mons):
    """Coefficient vectors of (x_0*f, ..., x_3*f) for f of degree dprime-1."""
    src_index = {m: i for i, m in enumerate(src_mons)}
    n = len(src_mons)
    out = []
    for f in monomials_of_degree(dprime - 1):
        v = [Fraction(0)] * (NVARS * n)
        for i in range(NVARS):
            shifted = list(f)
            shifted[i] += 1
            v[i * n + src_index[tuple(shifted)]] = Fraction(1)
        out.append(v)
    return out


def _vector_to_vfield(vec, src_mons):
    n = len(src_mons)
    den = 1
    for c in vec:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in vec]
    g = 0
    for c in ints:
        g = gcd(g, c)
    lead = next(c for c in ints if c)
    if lead < 0:
        g = -g
    ints = [c // g for c in ints]
    comps = []
    for i in range(NVARS):
        comps.append(Poly({m: Fraction(c) for m, c in zip(src_mons, ints[i * n:(i + 1) * n]) if c}))
    return VField(comps)


def _reduce_against(vec, echelon):
    """Reduce vec against an RREF list of (pivot_col, row)."""
    v = list(vec)
    for pc, row in echelon:
        if v[pc]:
            f = v[pc]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def minimal_section(omega, dprime):
    """Canonical non-radial kernel vector at the given twist, or None."""
    coeffs = omega.one_form_coeffs()
    rows, src_mons = _contraction_matrix(coeffs, dprime)
    kernel = kernel_basis(rows)
    if not kernel:
        return None
    # echelonize the radial subspace
    radial = _radial_vectors(dprime, src_mons)
    echelon = []
    for v in radial:
        v = _reduce_against(v, echelon)
        pc = next((i for i, c in enumerate(v) if c), None)
        if pc is None:
            continue
        piv = v[pc]
        row = [c / piv for c in v]
        echelon.append((pc, row))
    echelon.sort(key=lambda t: t[0])
    for v in kernel:
        red = _reduce_against(v, echelon)
        if any(red):
            return _vector_to_vfield(red, src_mons)
    return None


def compute_tF(omega, degree=None):
    """Minimal twist with a section, and a canonical minimal section.

    Stops by dprime = degree + 1; hitting the cap without a section is an
    internal bug, since a section is guaranteed to exist by then.
    """
    coeffs = omega.one_form_coeffs()
    if degree is None:
        degree = coeffs[0].homogeneous_degree() - 1
    for dprime in range(degree + 2):
        s = h0_tangent_twist(omega, dprime)
        if s.h0 > 0:
            section = minimal_section(omega, dprime)
            if section is None:
                raise BoundViolated(
                    "positive h0 but no non-radial kernel vector found"
                )
            return dprime, section, s
    raise BoundViolated(
        f"no section of the tangent sheaf found up to twist {degree + 1}"
    )
