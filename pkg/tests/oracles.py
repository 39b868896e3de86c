"""Brute-force linear-algebra oracles, independent of Groebner bases and resolutions."""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb


def monomials(n: int, t: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(n), t):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


class Echelon:
    """Row-echelon basis over GF(p) for sparse vectors ``{key: value}``."""

    def __init__(self, p: int):
        self.p = p
        self.rows: dict = {}

    def reduce(self, v: dict) -> dict:
        p = self.p
        v = {k: c % p for k, c in v.items() if c % p}
        while v:
            k = max(v)
            row = self.rows.get(k)
            if row is None:
                return v
            f = v[k]
            for kk, c in row.items():
                nv = (v.get(kk, 0) - f * c) % p
                if nv:
                    v[kk] = nv
                else:
                    v.pop(kk, None)
        return v

    def add(self, v: dict) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        k = max(v)
        inv = pow(v[k], -1, self.p)
        self.rows[k] = {kk: c * inv % self.p for kk, c in v.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def _shift(f_terms: dict, u) -> dict:
    return {tuple(a + b for a, b in zip(m, u)): c for m, c in f_terms.items()}


def span_basis(gens, t: int, p: int) -> Echelon:
    """Echelon basis of ``I_t``, spanned by monomial multiples of the generators."""
    E = Echelon(p)
    if not gens:
        return E
    n = gens[0].ring.nvars
    for g in gens:
        d = g.degree()
        if d > t:
            continue
        for u in monomials(n, t - d):
            E.add(_shift(g.terms, u))
    return E


def span_dim(gens, t: int, p: int) -> int:
    """``dim I_t`` by linear algebra on monomial multiples."""
    return span_basis(gens, t, p).rank


def colon_power_dim(gens, t: int, k: int, p: int) -> int:
    """``dim (I : m^k)_t``: forms of degree ``t`` whose products with all degree-``k`` monomials lie in ``I``."""
    n = gens[0].ring.nvars
    E = span_basis(gens, t + k, p)
    shifts = monomials(n, k)
    # linear map S_t -> (S_{t+k} / I_{t+k})^{#shifts}; its kernel is the colon
    image = Echelon(p)
    rank = 0
    for m in monomials(n, t):
        vec = {}
        for j, u in enumerate(shifts):
            r = E.reduce({tuple(a + b for a, b in zip(m, u)): 1})
            for key, c in r.items():
                vec[(j, key)] = c
        if image.add(vec):
            rank += 1
    return comb(t + n - 1, n - 1) - rank


def sat_dim(gens, t: int, p: int, k: int = 8) -> int:
    """``dim sat(I)_t`` approximated by ``(I : m^k)_t``; exact once ``k`` is past the saturation exponent."""
    return colon_power_dim(gens, t, k, p)
