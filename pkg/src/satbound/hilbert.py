"""Hilbert functions and series of monomial ideals.

The graded pieces of S/I have the standard monomials of a Groebner basis
as a basis, so everything here works on the lead-term ideal only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb


def minimalize(gens) -> list[tuple[int, ...]]:
    """Minimal generators of the monomial ideal spanned by ``gens``."""
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def count_standard(gens, n: int, t: int) -> int:
    """Number of degree-``t`` monomials in ``n`` variables outside ``(gens)``.

    Walks the monomials of degree ``t`` variable by variable, pruning a
    branch as soon as the partial exponent vector is divisible by a
    generator (all later exponents can only grow).
    """
    if t < 0:
        return 0
    gens = [g for g in minimalize(gens) if sum(g) <= t]
    if not gens:
        return comb(t + n - 1, n - 1)
    count = 0
    e = [0] * n

    def walk(i, left, live):
        nonlocal count
        if i == n - 1:
            e[i] = left
            for g in live:
                if g[i] <= left:
                    return
            count += 1
            return
        for k in range(left, -1, -1):
            e[i] = k
            # generators whose first i+1 exponents are still compatible
            nxt = [g for g in live if g[i] <= k]
            # a generator is already satisfied iff all its remaining exponents are 0
            if any(not any(g[i + 1:]) for g in nxt):
                continue
            walk(i + 1, left - k, nxt)

    walk(0, t, gens)
    return count


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _shift(a, d):
    return [0] * d + list(a)


def hilbert_numerator(gens, n: int) -> list[int]:
    """Numerator ``K(s)`` with ``HS(S/(gens)) = K(s) / (1-s)^n``, as a coefficient list."""
    memo: dict = {}
    return _trim(_numer(tuple(minimalize(gens)), n, memo))


def _numer(gens, n, memo):
    if not gens:
        return [1]
    if gens in memo:
        return memo[gens]
    if any(not any(g) for g in gens):
        return [0]
    # pairwise coprime generators form a regular sequence
    support = [0] * n
    coprime = True
    for g in gens:
        for i, e in enumerate(g):
            if e:
                if support[i]:
                    coprime = False
                support[i] += 1
    if coprime:
        res = [1]
        for g in gens:
            d = sum(g)
            res = _poly_mul(res, [1] + [0] * (d - 1) + [-1])
        memo[gens] = res
        return res
    # pivot on the most frequent variable, at the median positive exponent
    i = max(range(n), key=lambda j: (support[j], -j))
    exps = sorted(g[i] for g in gens if g[i])
    k = exps[len(exps) // 2]
    if k == exps[-1] and len(exps) > 1:
        k = exps[0] if exps[0] < k else k
    piv = tuple(k if j == i else 0 for j in range(n))
    # S/M -> S/(M + piv) with kernel (S/(M : piv))(-k)
    plus = minimalize([g for g in gens] + [piv])
    colon = minimalize([tuple(max(0, a - b) for a, b in zip(g, piv)) for g in gens])
    res = _poly_add(_numer(tuple(plus), n, memo), _shift(_numer(tuple(colon), n, memo), k))
    memo[gens] = res
    return res


def divide_one_minus_s(a, times: int):
    """Exact division of a coefficient list by ``(1-s)^times``; ``None`` if inexact."""
    a = list(a)
    for _ in range(times):
        # q(s)(1-s) = a(s)  =>  q_i = a_0 + ... + a_i
        if sum(a) != 0:
            return None
        q = []
        acc = 0
        for x in a[:-1]:
            acc += x
            q.append(acc)
        a = q if q else [0]
    return a


def series_coefficient(numer, n: int, t: int) -> int:
    """Coefficient of ``s^t`` in ``numer(s) / (1-s)^n``."""
    return sum(c * comb(t - i + n - 1, n - 1) for i, c in enumerate(numer) if c and t - i >= 0)


@dataclass
class HilbertData:
    """Hilbert function values of S/I plus the projective dimension and degree of V(I)."""

    values: dict[int, int]
    dimension: int
    degree: int
    numerator: list[int]
    nvars: int
    stable: bool = True
    poly_from: int = 0  # values agree with the Hilbert polynomial for t >= poly_from
    hilbert_polynomial: list = field(default_factory=list)  # rational coefficients, lowest first

    def value(self, t: int) -> int:
        if t in self.values:
            return self.values[t]
        return series_coefficient(self.numerator, self.nvars, t)


def hilbert_data_from_leads(leads, n: int, t_max: int) -> HilbertData:
    numer = hilbert_numerator(leads, n)
    values = {t: series_coefficient(numer, n, t) for t in range(t_max + 1)}
    if numer == [0]:
        return HilbertData(values, -1, 0, numer, n, True, 0, [])
    # strip (1-s) factors: K = Q (1-s)^(n - krull)
    q = numer
    krull = n
    while krull > 0:
        nxt = divide_one_minus_s(q, 1)
        if nxt is None:
            break
        q = _trim(nxt)
        krull -= 1
    dim = krull - 1
    deg = sum(q)
    # HF(t) = HP(t) for t > deg(Q) - krull
    poly_from = max(0, len(q) - krull)
    hp = _hilbert_polynomial(q, krull)
    stable = t_max >= poly_from
    return HilbertData(values, dim, deg, numer, n, stable, poly_from, hp)


def _hilbert_polynomial(q, krull):
    """Coefficients (Fractions, lowest degree first) of the Hilbert polynomial."""
    from fractions import Fraction

    if krull == 0:
        return []
    # sum_i q_i * C(t - i + krull - 1, krull - 1), expanded in t
    out = [Fraction(0)] * krull
    for i, c in enumerate(q):
        if not c:
            continue
        # binomial (t - i + krull - 1 choose krull - 1) as polynomial in t
        poly = [Fraction(1)]
        for j in range(1, krull):
            # multiply by (t - i + j) / j
            nxt = [Fraction(0)] * (len(poly) + 1)
            for k, a in enumerate(poly):
                nxt[k] += a * (j - i) / j
                nxt[k + 1] += a / j
            poly = nxt
        for k, a in enumerate(poly):
            out[k] += c * a
    return out
