"""Graded characters of symmetric, exterior and hook Schur powers.

A graded free module (or a sum of line bundles ``O(-d)``) is recorded only by
the multiset of its generator degrees.  Every bound checked downstream
depends on ranks and degrees alone, so these characters are the whole model.
"""

from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb


class ContractViolation(ArithmeticError):
    """A multiset subtraction went negative: an internal invariant broke."""


class GradedMultiset:
    """Multiset of integer degrees, one per free generator."""

    __slots__ = ("_c",)

    def __init__(self, degrees=()):
        if isinstance(degrees, (Counter, dict)):
            self._c = Counter({d: m for d, m in degrees.items() if m})
            if any(m < 0 for m in self._c.values()):
                raise ContractViolation("negative multiplicity")
        else:
            self._c = Counter(int(d) for d in degrees)

    @classmethod
    def _raw(cls, counts: dict) -> "GradedMultiset":
        out = cls.__new__(cls)
        out._c = Counter({d: m for d, m in counts.items() if m})
        return out

    @property
    def rank(self) -> int:
        return sum(self._c.values())

    @property
    def degrees(self) -> list[int]:
        return sorted(self._c.elements())

    def counts(self) -> dict[int, int]:
        return dict(sorted(self._c.items()))

    def max_degree(self) -> int | None:
        return max(self._c) if self._c else None

    def min_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def is_empty(self) -> bool:
        return not self._c

    def key(self) -> tuple:
        return tuple(sorted(self._c.items()))

    def __eq__(self, other):
        return isinstance(other, GradedMultiset) and self._c == other._c

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"GradedMultiset({self.degrees})"

    def __add__(self, other: "GradedMultiset") -> "GradedMultiset":
        return GradedMultiset._raw(self._c + other._c)

    def __sub__(self, other: "GradedMultiset") -> "GradedMultiset":
        out = Counter(self._c)
        for d, m in other._c.items():
            out[d] -= m
            if out[d] < 0:
                raise ContractViolation(f"multiset subtraction went negative in degree {d}")
        return GradedMultiset._raw(out)

    def tensor(self, other: "GradedMultiset") -> "GradedMultiset":
        out = Counter()
        for d, m in self._c.items():
            for e, n in other._c.items():
                out[d + e] += m * n
        return GradedMultiset._raw(out)

    __mul__ = tensor

    def shift(self, c: int) -> "GradedMultiset":
        return GradedMultiset._raw({d + c: m for d, m in self._c.items()})

    def to_json(self) -> dict:
        return {"rank": self.rank, "degrees": self.degrees}


ONE = GradedMultiset([0])
EMPTY = GradedMultiset()


def _power(V: GradedMultiset, a: int, piece) -> GradedMultiset:
    """Combine per-degree pieces ``piece(mult, k)`` over all ways of splitting ``a``."""
    if a < 0:
        raise ValueError("power must be nonnegative")
    # layers[k] = character of the degree-k part over the degrees seen so far
    layers = [Counter({0: 1})] + [Counter() for _ in range(a)]
    for d, m in V.counts().items():
        new = [Counter() for _ in range(a + 1)]
        for k in range(a + 1):
            if not layers[k]:
                continue
            for j in range(a - k + 1):
                c = piece(m, j)
                if not c:
                    continue
                for e, n in layers[k].items():
                    new[k + j][e + j * d] += n * c
        layers = new
    return GradedMultiset._raw(layers[a])


def sym_power(V: GradedMultiset, a: int) -> GradedMultiset:
    return _power(V, a, lambda m, j: comb(m + j - 1, j))


def ext_power(V: GradedMultiset, k: int) -> GradedMultiset:
    return _power(V, k, comb)


@lru_cache(maxsize=None)
def _hook(a: int, k: int, vkey: tuple) -> GradedMultiset:
    V = GradedMultiset._raw(dict(vkey))
    if k > V.rank:
        return EMPTY
    if k == 1:
        return sym_power(V, a)
    if a == 1:
        return ext_power(V, k)
    # Pieri: S^{a-1} V (x) L^k V = S^{a,1^{k-1}} V (+) S^{a-1,1^k} V
    return sym_power(V, a - 1).tensor(ext_power(V, k)) - _hook(a - 1, k + 1, vkey)


def hook_graded(a: int, k: int, V: GradedMultiset) -> GradedMultiset:
    """Graded character of the hook Schur power ``S^{a,1^{k-1}} V``."""
    if a < 1 or k < 1:
        raise ValueError("hook shape needs a >= 1 and k >= 1")
    return _hook(a, k, V.key())


def hook_rank_oracle(a: int, k: int, n: int) -> int:
    """Count semistandard tableaux of shape ``(a, 1^{k-1})`` with entries in ``1..n``."""
    count = 0
    for column in combinations(range(1, n + 1), k):
        corner = column[0]
        for _ in combinations_with_replacement(range(corner, n + 1), a - 1):
            count += 1
    return count


class DegreeSequence:
    """Nonincreasing degrees ``d_0 >= ... >= d_p`` of forms in ``P^r``."""

    def __init__(self, d, r: int):
        d = [int(x) for x in d]
        if not d or any(x < 1 for x in d):
            raise ValueError("degrees must be positive")
        if r < 0:
            raise ValueError("r must be nonnegative")
        self.d = sorted(d, reverse=True)
        self.r = r

    @property
    def p(self) -> int:
        return len(self.d) - 1

    def padded(self) -> list[int]:
        """The ``r + 1`` largest degrees, padded by zeros when ``p < r``."""
        return (self.d + [0] * (self.r + 1))[: self.r + 1]

    def module(self) -> GradedMultiset:
        return GradedMultiset(self.d)

    def __repr__(self):
        return f"DegreeSequence({self.d}, r={self.r})"


def thm_bound(kind: str, a: int = 1, D: DegreeSequence | None = None, m: int | None = None) -> int:
    """Saturation bounds: ``macaulay``/``thmA`` give ``a d_0 + d_1 + ... + d_r - r``; ``thmB`` gives ``a m``."""
    if a < 1:
        raise ValueError("power must be positive")
    if kind in ("macaulay", "thmA"):
        if D is None:
            raise ValueError(f"{kind} needs a degree sequence")
        d = D.padded()
        return a * d[0] + sum(d[1:]) - D.r
    if kind == "thmB":
        if m is None:
            raise ValueError("thmB needs a regularity m")
        return a * m
    raise ValueError(f"unknown bound kind {kind!r}")


# -- Weyman terms -------------------------------------------------------------------------------


def _compositions(a: int, i: int, length: int):
    """All ``(k_0..k_{length-1})`` with sum ``a`` and ``sum j*k_j = i``."""

    def rec(j, left, weight):
        if j == length:
            if left == 0 and weight == 0:
                yield ()
            return
        for kj in range(left + 1):
            if j * kj > weight:
                break
            for rest in rec(j + 1, left - kj, weight - j * kj):
                yield (kj,) + rest

    yield from rec(0, a, i)


def weyman_terms(a: int, i: int, U) -> tuple[list[tuple[str, GradedMultiset]], GradedMultiset]:
    """Summands ``(x)_j C^{k_j} U_j`` of the ``i``-th term of the ``a``-th symmetric power complex.

    ``C`` is the symmetric power at even positions and the exterior power at
    odd ones.  Positions missing from ``U`` contribute nothing, so shorter
    resolutions simply have fewer summands.
    """
    if a < 1 or i < 0:
        raise ValueError("need a >= 1 and i >= 0")
    U = list(U)
    summands = []
    total = EMPTY
    for ks in _compositions(a, i, len(U)):
        char = ONE
        parts = []
        for j, kj in enumerate(ks):
            if kj == 0:
                continue
            if j % 2 == 0:
                char = char.tensor(sym_power(U[j], kj))
                parts.append(f"S^{kj} U{j}")
            else:
                char = char.tensor(ext_power(U[j], kj))
                parts.append(f"L^{kj} U{j}")
        if char.is_empty():
            continue
        summands.append((" * ".join(parts), char))
        total = total + char
    return summands, total


def resolution_modules(table) -> list[GradedMultiset]:
    """``[U_0, U_1, ...]`` from a Betti table of an ideal: the twists of each free module."""
    return [GradedMultiset(table.generator_degrees(i)) for i in range(table.length + 1)]


class RegularityPreconditionError(ValueError):
    """The input resolution is not m-regular."""


def weyman_reg_check(a: int, i: int, m: int, U) -> bool:
    """Whether every summand of the ``i``-th Weyman term lives in degree ``<= a m + i``."""
    for j, Uj in enumerate(U):
        top = Uj.max_degree()
        if top is not None and top > m + j:
            raise RegularityPreconditionError(f"U{j} has a generator of degree {top} > m + {j}")
    _, total = weyman_terms(a, i, U)
    top = total.max_degree()
    return top is None or top <= a * m + i


# -- Buchsbaum-Eisenbud complex -----------------------------------------------------------------


def be_complex(a: int, D: DegreeSequence) -> list[GradedMultiset]:
    """Terms ``C_i = S^{a,1^i} V`` for ``i = 0..p`` (``C_0 = S^a V``)."""
    V = D.module()
    return [hook_graded(a, i + 1, V) for i in range(D.p + 1)]


def h0(e: int, r: int) -> int:
    """``dim S_e`` in ``r + 1`` variables."""
    return comb(e + r, r) if e >= 0 else 0


def be_euler_char(a: int, D: DegreeSequence, t: int) -> int:
    """Alternating sum of ``dim (C_i)_t``; equals ``dim (J^a)_t`` when the complex is exact."""
    total = 0
    for i, C in enumerate(be_complex(a, D)):
        total += (-1) ** i * sum(m * h0(t - d, D.r) for d, m in C.counts().items())
    return total


def complex_table(terms, label: str = "C") -> str:
    """Aligned text listing of ranks and degrees of a sequence of graded modules."""
    lines = []
    for i, T in enumerate(terms):
        degs = ", ".join(f"{d}^{m}" if m > 1 else f"{d}" for d, m in T.counts().items())
        lines.append(f"{label}{i:<3} rank {T.rank:>6}   degrees {degs or '-'}")
    return "\n".join(lines)


def complex_json(terms) -> str:
    return json.dumps([{"i": i, **T.to_json()} for i, T in enumerate(terms)])
