"""Groebner engine and ideal toolbox.

Buchberger with the product and chain criteria, reduced bases, and the
ideal operations the analysis pipeline needs: membership, intersection,
colon, saturation (variable saturation via reverse-lex division, general
saturation via the auxiliary-variable trick). All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonTermination
from .poly import (
    NVARS,
    Poly,
    mon_div,
    mon_divides,
    mon_lcm,
    mon_mul,
)

# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """Total multiplicative monomial order, given by a sort key."""

    def __init__(self, tag, nvars, key):
        self.tag = tag
        self.nvars = nvars
        self.key = key

    def __repr__(self):
        return f"MonomialOrder({self.tag!r}, nvars={self.nvars})"


def _grevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


def grevlex_order(nvars=NVARS):
    return MonomialOrder("grevlex", nvars, _grevlex_key)


def lex_order(nvars=NVARS):
    return MonomialOrder("lex", nvars, lambda m: tuple(m))


def elimination_order(split, nvars):
    """Block order eliminating the first `split` variables (grevlex blocks)."""

    def key(m):
        return (_grevlex_key(m[:split]), _grevlex_key(m[split:]))

    return MonomialOrder(f"elim{split}", nvars, key)


GREVLEX = grevlex_order()


# ---------------------------------------------------------------------------
# coefficient fields


class _RationalField:
    p = None

    @staticmethod
    def convert(c):
        return c

    @staticmethod
    def div(a, b):
        return a / b


class _PrimeField:
    def __init__(self, p):
        self.p = p

    def convert(self, c):
        den = c.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes mod {self.p}")
        return (c.numerator % self.p) * pow(den, -1, self.p) % self.p

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p


QQ = _RationalField()


# ---------------------------------------------------------------------------
# engine core: polynomials as dict monomial -> coefficient (monic where noted)


def _lead(t, keyf):
    return max(t, key=keyf)


def _make_monic(t, keyf, field):
    lc = t[_lead(t, keyf)]
    if field.p is None:
        if lc == 1:
            return t
        return {m: c / lc for m, c in t.items()}
    inv = pow(lc, -1, field.p)
    return {m: c * inv % field.p for m, c in t.items()}


def _normal_form_terms(p, basis, keyf, field):
    """Fully reduce dict-poly p by a list of (lt, monic terms)."""
    work = dict(p)
    remainder = {}
    while work:
        m = _lead(work, keyf)
        c = work.pop(m)
        for lt, g in basis:
            if mon_divides(lt, m):
                shift = mon_div(m, lt)
                for gm, gc in g.items():
                    if gm == lt:
                        continue
                    mm = mon_mul(gm, shift)
                    v = work.get(mm, 0) - c * gc
                    if field.p is not None:
                        v %= field.p
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return remainder


def _spoly(g1, lt1, g2, lt2, keyf, field):
    lcm = mon_lcm(lt1, lt2)
    s1, s2 = mon_div(lcm, lt1), mon_div(lcm, lt2)
    out = {}
    for m, c in g1.items():
        out[mon_mul(m, s1)] = c
    for m, c in g2.items():
        mm = mon_mul(m, s2)
        v = out.get(mm, 0) - c
        if field.p is not None:
            v %= field.p
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


def _buchberger_terms(gens, keyf, field):
    """Reduced monic Groebner basis of dict-polys, sorted by leading term."""
    G = []
    for g in gens:
        if g:
            G.append(_make_monic(dict(g), keyf, field))
    # interreduce input a little: drop duplicates
    basis = [(_lead(g, keyf), g) for g in G]

    pairs = set()
    for i in range(len(basis)):
        for j in range(i):
            pairs.add((j, i))

    def lcm_of(i, j):
        return mon_lcm(basis[i][0], basis[j][0])

    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(lcm_of(*ij)), keyf(lcm_of(*ij))))
        pairs.discard((i, j))
        lti, ltj = basis[i][0], basis[j][0]
        lcm = mon_lcm(lti, ltj)
        # product criterion
        if lcm == mon_mul(lti, ltj):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mon_divides(basis[k][0], lcm):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 not in pairs and p2 not in pairs:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(basis[i][1], lti, basis[j][1], ltj, keyf, field)
        r = _normal_form_terms(s, basis, keyf, field)
        if r:
            r = _make_monic(r, keyf, field)
            new = len(basis)
            basis.append((_lead(r, keyf), r))
            for k in range(new):
                pairs.add((k, new))

    # minimalize
    minimal = []
    for idx, (lt, g) in enumerate(basis):
        if any(
            mon_divides(lt2, lt) and (lt2 != lt or jdx < idx)
            for jdx, (lt2, _) in enumerate(basis)
            if jdx != idx
        ):
            continue
        minimal.append((lt, g))
    # tail-reduce
    reduced = []
    for pos, (lt, g) in enumerate(minimal):
        others = minimal[:pos] + minimal[pos + 1:]
        r = _normal_form_terms(g, others, keyf, field)
        reduced.append((lt, _make_monic(r, keyf, field)))
    reduced.sort(key=lambda t: keyf(t[0]))
    return [g for _, g in reduced]


# ---------------------------------------------------------------------------
# public types


class GroebnerBasis:
    """Reduced basis under a monomial order; unique for (ideal, order)."""

    __slots__ = ("order", "basis", "_lt_basis")

    def __init__(self, order, basis):
        self.order = order
        self.basis = tuple(basis)
        self._lt_basis = tuple(
            (max(p.terms, key=order.key), p.terms) for p in self.basis
        )

    def leading_monomials(self):
        return tuple(lt for lt, _ in self._lt_basis)

    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant() and bool(self.basis[0])

    def is_zero(self):
        return not self.basis

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order.tag == other.order.tag and self.basis == other.basis

    def __hash__(self):
        return hash((self.order.tag, self.basis))

    def __repr__(self):
        return f"GroebnerBasis({self.order.tag}, {len(self.basis)} elements)"


class Ideal:
    """Homogeneous ideal given by generators, with cached reduced bases."""

    __slots__ = ("gens", "is_saturated", "_gb_cache")

    def __init__(self, gens, is_saturated=False):
        clean = tuple(g for g in gens if not g.is_zero())
        object.__setattr__(self, "gens", clean)
        object.__setattr__(self, "is_saturated", is_saturated)
        object.__setattr__(self, "_gb_cache", {})

    def __setattr__(self, name, value):
        if name == "is_saturated":
            object.__setattr__(self, name, value)
            return
        raise AttributeError("Ideal generators are immutable")

    def groebner(self, order=GREVLEX):
        gb = self._gb_cache.get(order.tag)
        if gb is None:
            gb = buchberger(self, order)
            self._gb_cache[order.tag] = gb
        return gb

    def contains(self, p):
        return normal_form(p, self.groebner()).is_zero()

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return self.groebner().is_unit()

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.groebner().basis == other.groebner().basis

    def __hash__(self):
        return hash(self.groebner().basis)

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"


def irrelevant_ideal():
    return Ideal(tuple(Poly.variable(i) for i in range(NVARS)))


# ---------------------------------------------------------------------------
# conversions between Poly and engine dicts


def _poly_to_terms(p):
    return dict(p.terms)


def _terms_to_poly(t):
    return Poly({m: (c if isinstance(c, Fraction) else Fraction(c)) for m, c in t.items()})


# ---------------------------------------------------------------------------
# operations


def buchberger(ideal, order=GREVLEX):
    """Reduced Groebner basis of an ideal. Idempotent."""
    gens = [_poly_to_terms(g) for g in ideal.gens]
    reduced = _buchberger_terms(gens, order.key, QQ)
    return GroebnerBasis(order, [_terms_to_poly(g) for g in reduced])


def normal_form(p, gb):
    """Remainder of multivariate division by a reduced basis."""
    r = _normal_form_terms(_poly_to_terms(p), gb._lt_basis, gb.order.key, QQ)
    return _terms_to_poly(r)


def leading_monomials_mod_p(ideal, prime, order=GREVLEX):
    """Leading monomials of the reduced basis over GF(prime).

    Used only as a consistency check against the rational computation.
    Raises ZeroDivisionError when the prime divides a denominator.
    """
    field = _PrimeField(prime)
    gens = []
    for g in ideal.gens:
        gens.append({m: field.convert(c) for m, c in g.terms.items()})
    reduced = _buchberger_terms(gens, order.key, field)
    return tuple(sorted((max(g, key=order.key) for g in reduced), key=order.key))


# -- auxiliary-variable machinery (variable t prepended at index 0) ---------


def _extend(p, t_exp):
    """Map a 4-variable dict-poly into 5 variables, multiplying by t^t_exp."""
    return {(t_exp,) + m: c for m, c in p.terms.items()}


def _project(terms5):
    """Drop the auxiliary variable; caller guarantees exponent 0."""
    return {m[1:]: c for m, c in terms5.items()}


def intersect(I, J):
    """Intersection of two ideals via t*I + (1-t)*J, eliminating t."""
    if I.is_zero() or J.is_zero():
        return Ideal(())
    gens5 = []
    for g in I.gens:
        gens5.append(_extend(g, 1))
    for g in J.gens:
        h = _extend(g, 0)
        for m, c in _extend(g, 1).items():
            h[m] = h.get(m, 0) - c
        gens5.append({m: c for m, c in h.items() if c})
    order5 = elimination_order(1, NVARS + 1)
    reduced = _buchberger_terms(gens5, order5.key, QQ)
    out = []
    for g in reduced:
        if all(m[0] == 0 for m in g):
            out.append(_terms_to_poly(_project(g)))
    return _reduced_ideal(out)


def divide_exact(p, f):
    """Exact division p / f; raises ValueError if f does not divide p."""
    if f.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    keyf = GREVLEX.key
    work = dict(p.terms)
    ltf = max(f.terms, key=keyf)
    lcf = f.terms[ltf]
    quot = {}
    while work:
        m = _lead(work, keyf)
        c = work.pop(m)
        if not mon_divides(ltf, m):
            raise ValueError("not an exact multiple")
        shift = mon_div(m, ltf)
        q = c / lcf
        quot[shift] = q
        for fm, fc in f.terms.items():
            if fm == ltf:
                continue
            mm = mon_mul(fm, shift)
            v = work.get(mm, 0) - q * fc
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return Poly(quot)


def colon(I, f):
    """Ideal quotient (I : f) = {g : g*f in I}."""
    if f.is_zero():
        raise ZeroDivisionError("colon by zero polynomial")
    if I.is_zero():
        return Ideal(())
    inter = intersect(I, Ideal((f,)))
    return Ideal(tuple(divide_exact(g, f) for g in inter.gens))


def saturate_single(I, f):
    """(I : f^infinity) by the auxiliary-variable (Rabinowitsch) trick."""
    if I.is_zero():
        return Ideal(())
    gens5 = [_extend(g, 0) for g in I.gens]
    # t*f - 1
    tf = _extend(f, 1)
    tf[(0,) + (0,) * NVARS] = tf.get((0,) + (0,) * NVARS, 0) - 1
    gens5.append({m: c for m, c in tf.items() if c})
    order5 = elimination_order(1, NVARS + 1)
    reduced = _buchberger_terms(gens5, order5.key, QQ)
    out = []
    for g in reduced:
        if all(m[0] == 0 for m in g):
            out.append(_terms_to_poly(_project(g)))
    return _reduced_ideal(out)


def saturate_iterated_colon(I, f, cap=64):
    """(I : f^infinity) as a stabilizing iterated colon; cap guards bugs."""
    current = I
    for _ in range(cap):
        nxt = colon(current, f)
        if nxt == current:
            return current
        current = nxt
    raise NonTermination(f"colon iteration did not stabilize within {cap} steps")


def _permute_poly(p, perm):
    return Poly({tuple(m[j] for j in perm): c for m, c in p.terms.items()})


def _reduced_ideal(gens, is_saturated=False):
    """Ideal presented by its reduced grevlex basis, with the cache primed."""
    reduced = _buchberger_terms([_poly_to_terms(g) for g in gens], GREVLEX.key, QQ)
    basis = [_terms_to_poly(g) for g in reduced]
    ideal = Ideal(basis, is_saturated=is_saturated)
    ideal._gb_cache[GREVLEX.tag] = GroebnerBasis(GREVLEX, basis)
    return ideal


def saturate_variable(I, i):
    """(I : x_i^infinity) for homogeneous I.

    Computed from a reverse-lex basis with x_i as the cheapest variable:
    dividing every basis element by its maximal x_i power generates the
    saturation. Cross-checked in the test suite against the iterated colon.
    """
    if I.is_zero():
        return Ideal(())
    perm = [j for j in range(NVARS) if j != i] + [i]
    inv = [0] * NVARS
    for pos, j in enumerate(perm):
        inv[j] = pos
    gens = [_poly_to_terms(_permute_poly(g, perm)) for g in I.gens]
    reduced = _buchberger_terms(gens, _grevlex_key, QQ)
    out = []
    for g in reduced:
        e = min(m[NVARS - 1] for m in g)
        if e:
            g = {m[:-1] + (m[-1] - e,): c for m, c in g.items()}
        out.append(_permute_poly(_terms_to_poly(g), inv))
    return _reduced_ideal(out)


def saturate(I, J):
    """(I : J^infinity); marks the result saturated when J is irrelevant."""
    if not J.gens:
        raise ValueError("saturation by the zero ideal")
    if I.is_zero():
        return Ideal((), is_saturated=True)

    variables = tuple(Poly.variable(i) for i in range(NVARS))
    if set(J.gens) == set(variables):
        parts = [saturate_variable(I, i) for i in range(NVARS)]
        result = parts[0]
        for part in parts[1:]:
            if result == part or part.contains_ideal(result):
                # result is already inside part, intersection is result
                continue
            if result.contains_ideal(part):
                result = part
                continue
            result = intersect(result, part)
        result.is_saturated = True
        return result

    if len(J.gens) == 1:
        return saturate_single(I, J.gens[0])

    parts = [saturate_single(I, f) for f in J.gens]
    result = parts[0]
    for part in parts[1:]:
        if part.contains_ideal(result):
            continue
        if result.contains_ideal(part):
            result = part
            continue
        result = intersect(result, part)
    return result
