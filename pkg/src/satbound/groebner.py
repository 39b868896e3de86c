"""Buchberger's algorithm for homogeneous ideals, with normal forms.

Pairs are processed degree by degree (the normal strategy; every input is
homogeneous, possibly for a weighting with zero weights) and pruned with the
Gebauer-Moeller criteria.  Output bases are reduced and monic.
"""

from __future__ import annotations

import heapq
from operator import add, le

from .poly import GREVLEX, MonomialOrder, Polynomial, Ring


class BudgetExceeded(RuntimeError):
    """Raised when a computation exceeds its configured step budget."""


# global default, settable by the CLI; ``None`` means unlimited
DEFAULT_BUDGET: int | None = None


class _Elt:
    __slots__ = ("lm", "lk", "tail", "deg")

    def __init__(self, lm, lk, tail, deg):
        self.lm = lm  # leading monomial
        self.lk = lk  # its order key
        self.tail = tail  # [(monomial, coeff, key)] without the (monic) leading term
        self.deg = deg


def _divides(a, b):
    return all(map(le, a, b))


class _Reducer:
    """Division machinery against a growing list of monic elements."""

    def __init__(self, order: MonomialOrder, p: int, nvars: int):
        self.key = order.key
        self.p = p
        self.elts: list[_Elt] = []
        self._hit: dict = {}
        self._miss: dict = {}

    def add(self, elt: _Elt):
        self.elts.append(elt)

    def find(self, m):
        i = self._hit.get(m)
        if i is not None:
            return self.elts[i]
        start = self._miss.get(m, 0)
        elts = self.elts
        for i in range(start, len(elts)):
            if _divides(elts[i].lm, m):
                self._hit[m] = i
                return elts[i]
        self._miss[m] = len(elts)
        return None

    def reduce(self, f: dict, full: bool = True) -> dict:
        """Normal form of ``f`` (a ``{monomial: coeff}`` dict, consumed)."""
        key = self.key
        p = self.p
        heap = [(-key(m), m) for m in f]
        heapq.heapify(heap)
        out = {}
        push = heapq.heappush
        pop = heapq.heappop
        find = self.find
        while heap:
            nk, m = pop(heap)
            c = f.pop(m, 0)
            if not c:
                continue
            g = find(m)
            if g is None:
                out[m] = c
                if not full:
                    for m2, c2 in f.items():
                        if c2:
                            out[m2] = c2
                    return out
                continue
            u = tuple(m[i] - g.lm[i] for i in range(len(m)))
            ku = -nk - g.lk
            for e, a, k in g.tail:
                e2 = tuple(map(add, e, u))
                old = f.get(e2)
                if old is None:
                    v = -c * a
                    if p:
                        v %= p
                    f[e2] = v
                    push(heap, (-(k + ku), e2))
                else:
                    v = old - c * a
                    if p:
                        v %= p
                    f[e2] = v
        return out


def _make_elt(f: dict, order: MonomialOrder, p: int, weights) -> _Elt:
    key = order.key
    lm = max(f, key=key)
    c = f[lm]
    if c != 1:
        inv = pow(c, -1, p) if p else 1 / c
        if p:
            f = {m: a * inv % p for m, a in f.items()}
        else:
            f = {m: a * inv for m, a in f.items()}
    tail = [(m, a, key(m)) for m, a in f.items() if m != lm]
    tail.sort(key=lambda t: -t[2])
    deg = sum(map(int.__mul__, lm, weights))
    return _Elt(lm, key(lm), tail, deg)


def _elt_dict(e: _Elt) -> dict:
    d = {m: a for m, a, _ in e.tail}
    d[e.lm] = 1
    return d


class GroebnerBasis:
    """A reduced, monic Groebner basis of a homogeneous ideal."""

    def __init__(self, ring: Ring, order: MonomialOrder, elements: list[Polynomial]):
        self.ring = ring
        self.order = order
        self.elements = elements
        self.leads = [g.leading(order)[0] for g in elements]
        self._reducer = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.elements]}, order={self.order!r})"

    def _get_reducer(self) -> _Reducer:
        if self._reducer is None:
            r = _Reducer(self.order, self.ring.field.p, self.ring.nvars)
            w = (1,) * self.ring.nvars
            for g in self.elements:
                r.add(_make_elt(dict(g.terms), self.order, self.ring.field.p, w))
            self._reducer = r
        return self._reducer

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial and basis live in different rings")
        if not f.terms:
            return f
        out = self._get_reducer().reduce(dict(f.terms))
        return Polynomial(self.ring, out, True)

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f).terms

    def is_unit(self) -> bool:
        return any(not any(m) for m in self.leads)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``G``; no term is divisible by a lead of ``G``."""
    return G.reduce(f)


def _spoly(a: _Elt, b: _Elt, lcm, p):
    ua = tuple(x - y for x, y in zip(lcm, a.lm))
    ub = tuple(x - y for x, y in zip(lcm, b.lm))
    out = {}
    for e, c, _ in a.tail:
        out[tuple(map(add, e, ua))] = c
    for e, c, _ in b.tail:
        m = tuple(map(add, e, ub))
        v = out.get(m, 0) - c
        if p:
            v %= p
        out[m] = v
    return {m: c for m, c in out.items() if c}


def groebner_basis(
    polys,
    order: MonomialOrder = GREVLEX,
    weights=None,
    budget: int | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``polys``.

    All inputs must be homogeneous for ``weights`` (default: standard
    grading).  ``budget`` caps the number of S-pair reductions.
    """
    polys = [f for f in polys if f.terms]
    if not polys:
        raise ValueError("need at least one nonzero generator")
    ring = polys[0].ring
    n = ring.nvars
    p = ring.field.p
    if weights is None:
        weights = (1,) * n
    if budget is None:
        budget = DEFAULT_BUDGET
    wdeg = lambda m: sum(map(int.__mul__, m, weights))  # noqa: E731
    for f in polys:
        if f.ring != ring:
            raise ValueError("generators live in different rings")
        if len({wdeg(m) for m in f.terms}) != 1:
            raise ValueError(f"generator is not homogeneous: {f}")

    inputs: dict[int, list[dict]] = {}
    for f in polys:
        inputs.setdefault(wdeg(next(iter(f.terms))), []).append(dict(f.terms))

    red = _Reducer(order, p, n)
    active: list[int] = []
    pairs: list[tuple] = []  # (degree, lcm key, i, j, lcm)
    steps = 0

    def update(h: int):
        nonlocal pairs, active
        eh = red.elts[h]
        lh = eh.lm
        cand = []
        for i in active:
            li = red.elts[i].lm
            cand.append((i, tuple(map(max, li, lh)), not any(x and y for x, y in zip(li, lh))))
        keep = []
        for idx, (i, lc, coprime) in enumerate(cand):
            if coprime:
                keep.append((i, lc, coprime))
                continue
            dominated = False
            for j, (_, l2, _) in enumerate(cand):
                if j != idx and _divides(l2, lc) and (l2 != lc or j < idx):
                    dominated = True
                    break
            if not dominated:
                keep.append((i, lc, coprime))
        new_pairs = []
        for i, lc, coprime in keep:
            if coprime:
                continue
            new_pairs.append((wdeg(lc), order.key(lc), i, h, lc))
        kept = []
        for pr in pairs:
            _, _, a, b, lc = pr
            if _divides(lh, lc):
                la = tuple(map(max, red.elts[a].lm, lh))
                lb = tuple(map(max, red.elts[b].lm, lh))
                if la != lc and lb != lc:
                    continue
            kept.append(pr)
        pairs = kept + new_pairs
        active = [i for i in active if not _divides(lh, red.elts[i].lm)] + [h]

    while inputs or pairs:
        d = min(list(inputs) + [pr[0] for pr in pairs])
        batch_pairs = sorted((pr for pr in pairs if pr[0] == d), key=lambda pr: (pr[1], pr[2], pr[3]))
        pairs = [pr for pr in pairs if pr[0] != d]
        todo = [("pair", pr) for pr in batch_pairs] + [("gen", f) for f in inputs.pop(d, [])]
        for kind, item in todo:
            steps += 1
            if budget is not None and steps > budget:
                raise BudgetExceeded(f"Groebner basis exceeded budget of {budget} reductions")
            if kind == "pair":
                _, _, i, j, lc = item
                s = _spoly(red.elts[i], red.elts[j], lc, p)
            else:
                s = dict(item)
            if not s:
                continue
            h = red.reduce(s)
            if h:
                red.add(_make_elt(h, order, p, weights))
                update(len(red.elts) - 1)

    return GroebnerBasis(ring, order, _interreduce([red.elts[i] for i in active], order, p, n, ring))


def _interreduce(elts, order, p, n, ring) -> list[Polynomial]:
    elts = sorted(elts, key=lambda e: e.lk)
    minimal = []
    for e in elts:
        if not any(_divides(m.lm, e.lm) for m in minimal):
            minimal.append(e)
    out = []
    for idx, e in enumerate(minimal):
        others = _Reducer(order, p, n)
        for j, o in enumerate(minimal):
            if j != idx:
                others.add(o)
        tail = others.reduce({m: a for m, a, _ in e.tail}) if e.tail else {}
        tail[e.lm] = 1
        out.append(Polynomial(ring, tail, True))
    return out


def interreduce(polys, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced basis from a set already known to be a Groebner basis."""
    polys = [f for f in polys if f.terms]
    ring = polys[0].ring
    p = ring.field.p
    w = (1,) * ring.nvars
    elts = [_make_elt(dict(f.terms), order, p, w) for f in polys]
    return GroebnerBasis(ring, order, _interreduce(elts, order, p, ring.nvars, ring))
