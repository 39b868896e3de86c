"""Ideal arithmetic: powers, intersections, colons, saturation and friends."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .groebner import GroebnerBasis, groebner_basis, interreduce
from .hilbert import divide_one_minus_s, _trim
from .ideal import Ideal
from .poly import GREVLEX, MonomialOrder, Polynomial, Ring


class SmoothnessRequired(ValueError):
    """The symbolic-power shortcut was requested without a smoothness check."""


# -- powers and products ----------------------------------------------------


def ideal_power(I: Ideal, a: int) -> Ideal:
    """Generators are all ``a``-fold products of generators of ``I``."""
    if a < 1:
        raise ValueError("power must be >= 1")
    if a == 1:
        return I
    prods = []
    for combo in itertools.combinations_with_replacement(range(len(I.gens)), a):
        f = I.ring.one()
        for k in combo:
            f = f * I.gens[k]
        prods.append(f)
    return Ideal(prods, I.ring)


def ideal_product(I: Ideal, K: Ideal) -> Ideal:
    return Ideal([f * g for f in I.gens for g in K.gens], I.ring)


def ideal_sum(I: Ideal, K: Ideal) -> Ideal:
    return Ideal(list(I.gens) + list(K.gens), I.ring)


# -- intersection -------------------------------------------------------------


def intersect(I: Ideal, K: Ideal) -> Ideal:
    """``I`` intersected with ``K``.

    Containment is checked first; otherwise eliminate ``t`` from
    ``t*I + (1-t)*K`` (``t`` gets weight 0, so everything stays graded).
    """
    if I.is_zero() or K.is_zero():
        return Ideal([], I.ring)
    if I.issubset(K):
        return I
    if K.issubset(I):
        return K
    return _intersect_elim(I, K)


def _intersect_elim(I: Ideal, K: Ideal) -> Ideal:
    ring = I.ring
    big = Ring(("_t",) + ring.names, ring.field)
    t = big.gen(0)
    one = big.one()
    gens = [t * f.embed(big, 1) for f in I.gens] + [(one - t) * g.embed(big, 1) for g in K.gens]
    weights = (0,) + (1,) * ring.nvars
    gb = groebner_basis(gens, MonomialOrder("elim", split=1), weights=weights)
    keep = []
    for g in gb.elements:
        if all(m[0] == 0 for m in g.terms):
            keep.append(type(g)(ring, {m[1:]: c for m, c in g.terms.items()}, True))
    out = Ideal(keep, ring)
    if keep:
        out.set_groebner(GroebnerBasis(ring, GREVLEX, keep))
    return out


def intersect_all(ideals) -> Ideal:
    ideals = list(ideals)
    cur = ideals[0]
    for K in ideals[1:]:
        cur = intersect(cur, K)
    return cur


# -- colon ideals ---------------------------------------------------------------


def colon(I: Ideal, f: Polynomial) -> Ideal:
    """``I : f = {g : g*f in I}``, computed as ``(I cap (f)) / f``."""
    if not f.terms:
        raise ValueError("colon by the zero polynomial")
    ok, _ = f.is_homogeneous()
    if not ok:
        raise ValueError("colon expects a homogeneous polynomial")
    if f.is_constant():
        return I
    L = intersect(I, Ideal([f], I.ring))
    gb = L.groebner()
    quots = [g.exact_div(f) for g in gb.elements]
    out = Ideal(quots, I.ring)
    if quots:
        # lead terms divide through by LT(f), so this is again a Groebner basis
        out.set_groebner(GroebnerBasis(I.ring, GREVLEX, [q.monic() for q in quots]))
    return out


def colon_ideal(I: Ideal, K: Ideal) -> Ideal:
    """``I : K = {g : g*K in I}``."""
    if K.is_zero():
        raise ValueError("colon by the zero ideal")
    return intersect_all([colon(I, k) for k in K.gens])


# -- saturation -------------------------------------------------------------------


def saturate_variable(I: Ideal, i: int) -> Ideal:
    """``I : x_i^infinity``.

    In a grevlex order with ``x_i`` last, dividing each basis element by its
    largest power of ``x_i`` yields a Groebner basis of the saturation.
    """
    n = I.nvars
    order = MonomialOrder.grevlex_last(i, n)
    gb = I.groebner(order)
    out = []
    for g in gb.elements:
        k = min(m[i] for m in g.terms)
        if k:
            g = Polynomial(g.ring, {m[:i] + (m[i] - k,) + m[i + 1 :]: c for m, c in g.terms.items()}, True)
        out.append(g)
    # dividing can make some leads divisible by others
    gb = interreduce(out, order)
    J = Ideal(gb.elements, I.ring)
    J.set_groebner(gb)
    return J


def saturate(I: Ideal) -> Ideal:
    """Saturation of ``I`` with respect to the irrelevant ideal, as the
    intersection of the variable saturations ``I : x_i^infinity``."""
    if I.is_zero():
        return I
    if I.is_unit():
        return I
    parts = []
    for i in range(I.nvars):
        K = saturate_variable(I, i)
        if any(g.is_constant() for g in K.gens):
            continue  # contributes nothing to the intersection
        parts.append(K)
    if not parts:
        return Ideal([I.ring.one()], I.ring)
    cur = parts[0]
    for K in parts[1:]:
        if _subset_any_order(cur, K):
            continue
        if _subset_any_order(K, cur):
            cur = K
            continue
        cur = _intersect_elim(cur, K)
    return cur


def _subset_any_order(A: Ideal, B: Ideal) -> bool:
    gb = next(iter(B._gb.values()), None) or B.groebner()
    return all(gb.contains(g) for g in A.gens)


def saturate_iterated(I: Ideal, max_rounds: int = 200) -> Ideal:
    """Saturation by repeated colon with the maximal ideal (``J <- J : m``).

    Independent of :func:`saturate`: it uses only general colons through
    elimination, never the grevlex variable trick.
    """
    if I.is_zero():
        return I
    m = Ideal(I.ring.gens(), I.ring)
    cur = I
    for _ in range(max_rounds):
        nxt = colon_ideal(cur, m)
        if nxt.issubset(cur):
            return cur
        cur = nxt
    raise RuntimeError("iterated saturation did not stabilize")


def is_saturated(I: Ideal) -> bool:
    return sat_degree(I).sat_degree == 0


# -- saturation degree ---------------------------------------------------------------


@dataclass
class SatDegreeResult:
    """Saturation degree with the degrees where ``I_t`` is strictly smaller than ``sat(I)_t``."""

    sat_degree: int
    witness_degrees: list[int]
    gap_dims: dict[int, int]
    method: str = "hilbert"
    saturation: Ideal | None = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "sat_degree": self.sat_degree,
            "witness_degrees": list(self.witness_degrees),
            "gap_dims": {str(t): g for t, g in sorted(self.gap_dims.items())},
            "method": self.method,
        }


def gap_series(I: Ideal, S: Ideal) -> list[int]:
    """Coefficients of ``t -> dim S_t - dim I_t`` for ``I`` inside ``S`` with equal
    Hilbert polynomials; the difference of Hilbert series is a polynomial."""
    n = I.nvars
    diff = [a - b for a, b in itertools.zip_longest(I.hilbert_numerator(), S.hilbert_numerator(), fillvalue=0)]
    q = divide_one_minus_s(diff, n)
    if q is None:
        raise ArithmeticError("Hilbert polynomials differ; second ideal is not a saturation")
    return _trim(q)


def sat_degree(I: Ideal, method: str = "hilbert", scan_bound: int | None = None) -> SatDegreeResult:
    """Least ``t0`` with ``I_t == sat(I)_t`` for every ``t >= t0`` (0 when saturated).

    ``method="hilbert"`` reads the gap off the difference of the Hilbert
    series, which is a polynomial.  ``method="scan"`` compares graded
    dimensions degree by degree up to ``scan_bound`` (default: the arithmetic
    regularity of ``I``).
    """
    S = saturate(I)
    if I.is_zero():
        return SatDegreeResult(0, [], {}, method, S)
    if method == "hilbert":
        gaps = gap_series(I, S)
        gap_dims = {t: g for t, g in enumerate(gaps) if g}
    elif method == "scan":
        if scan_bound is None:
            from .resolution import arith_reg

            scan_bound = arith_reg(I)
        gap_dims = {}
        for t in range(scan_bound + 1):
            g = S.graded_dim(t) - I.graded_dim(t)
            if g:
                gap_dims[t] = g
    else:
        raise ValueError(f"unknown method {method!r}")
    if any(g < 0 for g in gap_dims.values()):
        raise ArithmeticError("saturation is smaller than the ideal; inconsistent computation")
    witnesses = sorted(gap_dims)
    sd = witnesses[-1] + 1 if witnesses else 0
    return SatDegreeResult(sd, witnesses, gap_dims, method, S)


# -- dimension and smoothness -----------------------------------------------------


def dimension(I: Ideal) -> int:
    """Projective dimension of ``V(I)``; ``-1`` for the empty scheme."""
    return I.dimension()


def codimension(I: Ideal) -> int:
    return I.ring.r - dimension(I)


@dataclass
class SmoothnessCertificate:
    smooth: bool
    codimension: int
    n_minors: int
    n_nonzero_minors: int
    singular_locus_dimension: int
    singular_locus_hilbert: list[int]
    note: str = (
        "Jacobian criterion over the coefficient field; assumes V(I) equidimensional "
        "and reduced structure given by sat(I)"
    )

    def __bool__(self):
        return self.smooth

    def to_dict(self) -> dict:
        return {
            "smooth": self.smooth,
            "codimension": self.codimension,
            "n_minors": self.n_minors,
            "n_nonzero_minors": self.n_nonzero_minors,
            "singular_locus_dimension": self.singular_locus_dimension,
            "singular_locus_hilbert": self.singular_locus_hilbert,
            "note": self.note,
        }


def jacobian_minors(gens, c: int) -> tuple[int, list[Polynomial]]:
    """All ``c x c`` minors of the Jacobian matrix of ``gens``; returns (count, nonzero)."""
    gens = list(gens)
    ring = gens[0].ring
    n = ring.nvars
    jac = [[f.diff(j) for j in range(n)] for f in gens]
    memo: dict = {}

    def det(rows, cols):
        if not rows:
            return ring.one()
        key = (rows, cols)
        if key in memo:
            return memo[key]
        total = ring.zero()
        r0 = rows[0]
        for idx, cj in enumerate(cols):
            entry = jac[r0][cj]
            if not entry.terms:
                continue
            sub = det(rows[1:], cols[:idx] + cols[idx + 1 :])
            if not sub.terms:
                continue
            term = entry * sub
            total = total - term if idx % 2 else total + term
        memo[key] = total
        return total

    count = 0
    out = []
    for rows in itertools.combinations(range(len(gens)), c):
        for cols in itertools.combinations(range(n), c):
            count += 1
            d = det(rows, cols)
            if d.terms:
                out.append(d)
    return count, out


def is_smooth(I: Ideal) -> SmoothnessCertificate:
    """Jacobian test: ``V(I)`` is smooth iff ``sat(I) + (c x c minors)`` cuts out
    the empty scheme, ``c`` the codimension."""
    S = saturate(I)
    dim = dimension(S)
    if dim < 0:
        raise ValueError("V(I) is empty; smoothness is not defined")
    c = I.ring.r - dim
    count, minors = jacobian_minors(S.gens, c)
    gb = S.groebner()
    reduced = []
    seen = set()
    for m in minors:
        r = gb.reduce(m)
        if r.terms:
            key = r.monic()
            if key not in seen:
                seen.add(key)
                reduced.append(r)
    K = Ideal(list(S.gens) + reduced, I.ring)
    data = K.hilbert_data(0)
    return SmoothnessCertificate(
        smooth=data.dimension < 0,
        codimension=c,
        n_minors=count,
        n_nonzero_minors=len(minors),
        singular_locus_dimension=data.dimension,
        singular_locus_hilbert=list(data.numerator),
    )


# -- symbolic powers -------------------------------------------------------------------


def symbolic_power(I: Ideal, a: int, smooth_checked: bool = False, override: bool = False) -> Ideal:
    """``I^(a)`` as ``sat(I^a)``, an identity that needs ``V(I)`` smooth.

    Pass ``smooth_checked=True`` after :func:`is_smooth` succeeded, or
    ``override=True`` to accept the identity without the check.
    """
    if not (smooth_checked or override):
        raise SmoothnessRequired(
            "symbolic power via saturation needs a smooth variety; run is_smooth first or pass override=True"
        )
    if a == 1:
        return saturate(I)
    return saturate(ideal_power(I, a))
