"""Hilbert series and Hilbert polynomials of homogeneous ideals.

The series numerator is computed combinatorially from the leading-term
ideal by recursive pivot-variable splitting; the Hilbert polynomial, the
projective dimension and the degree are read off the reduced numerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .poly import NVARS, ZERO_MON, mon_divides


def _minimalize(mons):
    mons = sorted(set(mons), key=sum)
    out = []
    for m in mons:
        if not any(mon_divides(o, m) for o in out):
            out.append(m)
    return tuple(sorted(out))


def _poly_mul(a, b):
    out = {}
    for i, ca in a.items():
        for j, cb in b.items():
            out[i + j] = out.get(i + j, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


_memo = {}


def _numerator(gens):
    """Numerator of Hilb(R/I) over (1-t)^nvars for a monomial ideal."""
    gens = _minimalize(gens)
    if not gens:
        return {0: 1}
    if ZERO_MON in gens:
        return {}
    cached = _memo.get(gens)
    if cached is not None:
        return cached

    # variable occurrence counts
    counts = [0] * NVARS
    for m in gens:
        for i, e in enumerate(m):
            if e:
                counts[i] += 1
    best = max(range(NVARS), key=lambda i: counts[i])
    if counts[best] <= 1:
        # pairwise disjoint supports: product of (1 - t^deg)
        out = {0: 1}
        for m in gens:
            out = _poly_mul(out, {0: 1, sum(m): -1})
    else:
        # split along the pivot variable x_best:
        # N(I) = N(I + (x)) + t * N(I : x)
        plus = [m for m in gens if m[best] == 0]
        pivot = tuple(1 if i == best else 0 for i in range(NVARS))
        plus.append(pivot)
        quot = []
        for m in gens:
            if m[best]:
                mm = list(m)
                mm[best] -= 1
                quot.append(tuple(mm))
            else:
                quot.append(m)
        n_plus = _numerator(tuple(plus))
        n_quot = _numerator(tuple(quot))
        out = dict(n_plus)
        for k, v in n_quot.items():
            out[k + 1] = out.get(k + 1, 0) + v
        out = {k: v for k, v in out.items() if v}
    _memo[gens] = out
    return out


def _binomial_poly(shift, r):
    """Coefficients of C(t + shift, r) as a polynomial in t."""
    coeffs = [Fraction(1)]
    for i in range(r):
        # multiply by (t + shift - i)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] += c * (shift - i)
        coeffs = nxt
    f = Fraction(1, factorial(r))
    return [c * f for c in coeffs]


@dataclass(frozen=True)
class HilbertData:
    """Series numerator plus the polynomial data extracted from it."""

    numerator: tuple
    hp_coeffs: tuple        # HP(t) = sum hp_coeffs[k] * t^k, exact rationals
    projective_dimension: int   # deg HP; -1 for the empty scheme
    degree: int             # normalized leading coefficient of HP
    constant_term: Fraction

    def hp_value(self, t):
        return sum(c * t ** k for k, c in enumerate(self.hp_coeffs))

    def hp_string(self):
        if not self.hp_coeffs:
            return "0"
        parts = []
        for k in range(len(self.hp_coeffs) - 1, -1, -1):
            c = self.hp_coeffs[k]
            if not c:
                continue
            term = f"{abs(c)}" if k == 0 else (
                ("t" if k == 1 else f"t^{k}") if abs(c) == 1 else
                (f"{abs(c)}*t" if k == 1 else f"{abs(c)}*t^{k}")
            )
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"


def hilbert_from_lt(lt_monomials):
    """HilbertData from the leading-term monomials of a reduced basis."""
    num = _numerator(tuple(lt_monomials))
    if not num:
        # unit ideal
        return HilbertData((), (), -1, 0, Fraction(0))
    max_deg = max(num)
    coeffs = [num.get(k, 0) for k in range(max_deg + 1)]
    numerator = tuple(coeffs)

    # divide by (1 - t) while the value at t = 1 vanishes
    splits = 0
    while sum(coeffs) == 0:
        # Q with (1 - t) * Q = coeffs  =>  q_k = sum_{i<=k} c_i
        acc = 0
        q = []
        for c in coeffs:
            acc += c
            q.append(acc)
        assert q[-1] == 0
        while q and q[-1] == 0:
            q.pop()
        coeffs = q if q else [0]
        splits += 1
        if not any(coeffs):
            break
    dim_cone = NVARS - splits
    if not any(coeffs) or dim_cone <= 0:
        # Hilbert function eventually zero: empty projective scheme
        return HilbertData(numerator, (), -1, 0, Fraction(0))

    r = dim_cone - 1  # degree of the Hilbert polynomial
    hp = [Fraction(0)] * (r + 1)
    for k, qk in enumerate(coeffs):
        if not qk:
            continue
        for j, c in enumerate(_binomial_poly(r - k, r)):
            hp[j] += qk * c
    degree = sum(coeffs)
    return HilbertData(numerator, tuple(hp), r, degree, hp[0])


def hilbert(ideal):
    """HilbertData of R/I. Meaningful for all t >> 0; exact if I saturated."""
    gb = ideal.groebner()
    if gb.is_zero():
        # zero ideal: all of P^3
        return hilbert_from_lt(())
    return hilbert_from_lt(gb.leading_monomials())


def dimension_degree(ideal):
    """(projective dimension, degree); unit ideal gives (-1, 0)."""
    h = hilbert(ideal)
    return h.projective_dimension, h.degree
