"""Graded free resolutions, Betti tables and regularity.

Resolutions are built with Schreyer's algorithm: the syzygies of a Groebner
basis, reduced with quotient tracking, form a Groebner basis for the induced
(Schreyer) order.  Sorting each level lexicographically before the next step
makes the frame die out after at most ``nvars`` steps.  The resulting
resolution is usually not minimal; Betti numbers come from the ranks of its
constant parts (equivalently, from splitting off unit entries, which
:func:`minimize` does explicitly).
"""

from __future__ import annotations

import heapq
import json
from collections import defaultdict
from dataclasses import dataclass, field
from operator import add, le

from . import groebner as _groebner
from .groebner import BudgetExceeded
from .hilbert import series_coefficient
from .ideal import Ideal
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial, Ring

# a module element: {(component, exponent tuple): coefficient}


def _divides(a, b):
    return all(map(le, a, b))


class _ModuleOrder:
    """Order on a free module: ``(order_key(x^u) + shift[c], rank[c])`` for ``x^u e_c``.

    With ``shift[c]`` the key of the lead monomial of the c-th basis image
    this is the Schreyer order; with ``shift[c] = deg(e_c) * B^n`` it is a
    degree-compatible term-over-position order.
    """

    def __init__(self, order: MonomialOrder, shift, rank):
        self.okey = order.key
        self.shift = list(shift)
        self.rank = list(rank)
        self.N = max(self.rank, default=0) + 1

    def key(self, comp, exps):
        return (self.okey(exps) + self.shift[comp]) * self.N + self.rank[comp]


class _MElt:
    __slots__ = ("lc", "lm", "lk", "tail")

    def __init__(self, lc, lm, lk, tail):
        self.lc = lc  # lead component
        self.lm = lm  # lead monomial
        self.lk = lk
        self.tail = tail  # [(comp, exps, coeff, key)]


def _make_melt(f: dict, mo: _ModuleOrder, p: int) -> _MElt:
    keyed = [(mo.key(c, e), c, e, a) for (c, e), a in f.items() if a]
    keyed.sort(reverse=True)
    lk, lc, lm, a0 = keyed[0]
    if a0 != 1:
        inv = pow(a0, -1, p) if p else 1 / a0
        conv = (lambda x: x * inv % p) if p else (lambda x: x * inv)
    else:
        conv = None
    tail = [(c, e, conv(a) if conv else a, k) for k, c, e, a in keyed[1:]]
    return _MElt(lc, lm, lk, tail)


class _ModReducer:
    def __init__(self, mo: _ModuleOrder, p: int):
        self.mo = mo
        self.p = p
        self.elts: list[_MElt] = []
        self.by_comp: dict[int, list[int]] = defaultdict(list)
        self._hit: dict = {}

    def add(self, e: _MElt):
        self.by_comp[e.lc].append(len(self.elts))
        self.elts.append(e)
        self._hit.clear()

    def find(self, comp, m):
        key = (comp, m)
        i = self._hit.get(key)
        if i is not None:
            return i
        for i in self.by_comp.get(comp, ()):
            if _divides(self.elts[i].lm, m):
                self._hit[key] = i
                return i
        return None

    def reduce(self, f: dict, track: bool = False, full: bool = True):
        """Return ``(remainder, quotients)``; quotients map element index to ``{exps: coeff}``."""
        mo = self.mo
        p = self.p
        N = mo.N
        heap = [(-mo.key(c, e), c, e) for (c, e) in f]
        heapq.heapify(heap)
        out = {}
        quot: dict = defaultdict(dict) if track else None
        push = heapq.heappush
        pop = heapq.heappop
        while heap:
            nk, comp, m = pop(heap)
            c = f.pop((comp, m), 0)
            if not c:
                continue
            i = self.find(comp, m)
            if i is None:
                out[(comp, m)] = c
                if not full:
                    for kk, cc in f.items():
                        if cc:
                            out[kk] = cc
                    return out, quot
                continue
            g = self.elts[i]
            u = tuple(x - y for x, y in zip(m, g.lm))
            if track:
                q = quot[i]
                v = q.get(u, 0) + c
                q[u] = v % p if p else v
            ku = (-nk - g.lk) // N * N
            for gc, e, a, k in g.tail:
                e2 = tuple(map(add, e, u))
                t = (gc, e2)
                old = f.get(t)
                if old is None:
                    v = -c * a
                    f[t] = v % p if p else v
                    push(heap, (-(k + ku), gc, e2))
                else:
                    v = old - c * a
                    f[t] = v % p if p else v
        return out, quot


def _mul_elt(f: dict, u, coeff, p) -> dict:
    if p:
        return {(c, tuple(map(add, e, u))): a * coeff % p for (c, e), a in f.items()}
    return {(c, tuple(map(add, e, u))): a * coeff for (c, e), a in f.items()}


def _axpy(acc: dict, f: dict, p):
    for k, a in f.items():
        v = acc.get(k, 0) + a
        if p:
            v %= p
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)
    return acc


def _melt_dict(e: _MElt) -> dict:
    d = {(c, m): a for c, m, a, _ in e.tail}
    d[(e.lc, e.lm)] = 1
    return d


# -- Schreyer resolution ----------------------------------------------------------------------


@dataclass
class SchreyerLevel:
    """Generators of ``F_k`` and their images in ``F_{k-1}``."""

    images: list[dict]  # module elements over F_{k-1}
    degrees: list[int]
    lead_comp: list[int]
    lead_mono: list[tuple]
    shift: list[int]  # Schreyer keys of the basis of F_k
    tie: list[tuple]


@dataclass
class SchreyerResolution:
    ring: Ring
    levels: list[SchreyerLevel]

    @property
    def length(self) -> int:
        return len(self.levels) - 1

    def ranks(self) -> list[int]:
        return [len(lv.images) for lv in self.levels]


def _ranks_from_ties(ties):
    order = sorted(range(len(ties)), key=lambda c: ties[c])
    rank = [0] * len(ties)
    for r, c in enumerate(order):
        rank[c] = r
    return rank


def schreyer_resolution(I: Ideal, budget: int | None = None) -> SchreyerResolution:
    """A (generally non-minimal) graded free resolution of ``I`` as a module."""
    ring = I.ring
    p = ring.field.p
    if budget is None:
        budget = _groebner.DEFAULT_BUDGET
    if I.is_zero():
        return SchreyerResolution(ring, [])
    gb = I.groebner(GREVLEX)
    lex = LEX.key
    # level 0: basis elements sorted lexicographically decreasing on their leads
    elems = sorted(gb.elements, key=lambda g: lex(g.leading(GREVLEX)[0]), reverse=True)
    images = [{(0, m): c for m, c in g.terms.items()} for g in elems]
    leads = [g.leading(GREVLEX)[0] for g in elems]
    okey = GREVLEX.key
    lvl = SchreyerLevel(
        images=images,
        degrees=[sum(m) for m in leads],
        lead_comp=[0] * len(elems),
        lead_mono=leads,
        shift=[okey(m) for m in leads],
        tie=[(-c,) for c in range(len(elems))],
    )
    levels = [lvl]
    prev_shift, prev_rank = [0], [0]
    steps = 0
    while True:
        cur = levels[-1]
        mo = _ModuleOrder(GREVLEX, prev_shift, prev_rank)
        red = _ModReducer(mo, p)
        for img in cur.images:
            e = _make_melt(img, mo, p)
            red.add(e)
        syz = []  # (lead comp i, lead monomial, element over F_k)
        groups = defaultdict(list)
        for i, c in enumerate(cur.lead_comp):
            groups[c].append(i)
        for comp, idxs in groups.items():
            for a_pos, i in enumerate(idxs):
                ui = cur.lead_mono[i]
                cands = {}
                for j in idxs[a_pos + 1 :]:
                    uj = cur.lead_mono[j]
                    lcm = tuple(map(max, ui, uj))
                    mij = tuple(x - y for x, y in zip(lcm, ui))
                    if mij not in cands:
                        cands[mij] = (j, tuple(x - y for x, y in zip(lcm, uj)))
                mins = [m for m in cands if not any(o != m and _divides(o, m) for o in cands)]
                for mij in mins:
                    steps += 1
                    if budget is not None and steps > budget:
                        raise BudgetExceeded(f"resolution exceeded budget of {budget} syzygy reductions")
                    j, mji = cands[mij]
                    s = _mul_elt(cur.images[i], mij, 1, p)
                    _axpy(s, _mul_elt(cur.images[j], mji, -1 if not p else p - 1, p), p)
                    rem, quot = red.reduce(s, track=True)
                    if rem:
                        raise ArithmeticError("Schreyer S-vector did not reduce to zero")
                    z = {(i, mij): 1}
                    neg1 = p - 1 if p else -1
                    z[(j, mji)] = z.get((j, mji), 0) + neg1
                    for l, qd in quot.items():
                        for v, a in qd.items():
                            k = (l, v)
                            val = z.get(k, 0) - a
                            if p:
                                val %= p
                            z[k] = val
                    z = {k: v for k, v in z.items() if v}
                    syz.append((i, mij, z))
        if not syz:
            break
        syz.sort(key=lambda t: (t[0], -lex(t[1])))
        shift = [okey(m) + cur.shift[i] for i, m, _ in syz]
        tie = [cur.tie[i] + (-c,) for c, (i, _, _) in enumerate(syz)]
        nxt = SchreyerLevel(
            images=[z for _, _, z in syz],
            degrees=[sum(m) + cur.degrees[i] for i, m, _ in syz],
            lead_comp=[i for i, _, _ in syz],
            lead_mono=[m for _, m, _ in syz],
            shift=shift,
            tie=tie,
        )
        prev_shift, prev_rank = cur.shift, _ranks_from_ties(cur.tie)
        levels.append(nxt)
    return SchreyerResolution(ring, levels)


# -- linear algebra over the field ------------------------------------------------------------


def matrix_rank(rows: list[dict], p: int) -> int:
    """Rank of a sparse matrix given as ``[{col: value}]``, over GF(p) or QQ (``p == 0``)."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col in pivots:
                prow = pivots[col]
                f = row[col]
                for c, v in prow.items():
                    nv = row.get(c, 0) - f * v
                    if p:
                        nv %= p
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            else:
                inv = pow(row[col], -1, p) if p else 1 / row[col]
                pivots[col] = {c: (v * inv % p if p else v * inv) for c, v in row.items()}
                rank += 1
                break
    return rank


def _constant_rank_by_degree(level: SchreyerLevel, p: int) -> dict[int, int]:
    zero = None
    by_deg = defaultdict(list)
    for c, img in enumerate(level.images):
        row = {}
        for (comp, m), a in img.items():
            if zero is None:
                zero = (0,) * len(m)
            if m == zero:
                row[comp] = a
        if row:
            by_deg[level.degrees[c]].append(row)
    return {d: matrix_rank(rows, p) for d, rows in by_deg.items()}


# -- Betti tables -------------------------------------------------------------------------------


@dataclass
class BettiTable:
    """Graded Betti numbers ``beta[(i, j)]`` of a minimal resolution of an ideal
    (``i = 0`` counts minimal generators)."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def length(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table has no regularity")
        return max(j - i for i, j in self.entries)

    def ranks(self) -> list[int]:
        out = [0] * (self.length + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return out

    def generator_degrees(self, i: int) -> list[int]:
        """Multiset of twists of ``F_i``, as a sorted list."""
        out = []
        for (k, j), b in sorted(self.entries.items()):
            if k == i:
                out.extend([j] * b)
        return out

    def quotient_entries(self) -> dict[tuple[int, int], int]:
        """Betti numbers of ``S/I``: ``beta_{i+1,j}(S/I) = beta_{i,j}(I)`` plus ``beta_{0,0} = 1``."""
        out = {(0, 0): 1}
        for (i, j), b in self.entries.items():
            out[(i + 1, j)] = b
        return out

    def hilbert_series_numerator(self) -> list[int]:
        """``sum (-1)^i beta_{i,j} s^j``: numerator of the Hilbert series of ``I``."""
        top = max((j for _, j in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, j), b in self.entries.items():
            out[j] += (-1) ** i * b
        return out

    def hilbert_value(self, nvars: int, t: int) -> int:
        return series_coefficient(self.hilbert_series_numerator(), nvars, t)

    def to_json(self) -> list[dict]:
        return [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(self.entries.items())]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def staircase(self) -> str:
        """Conventional layout: column ``i``, row ``j - i``."""
        if not self.entries:
            return "(zero)"
        cols = self.length + 1
        rows = sorted({j - i for i, j in self.entries})
        lo, hi = rows[0], rows[-1]
        head = ["     "] + [f"{i:>6}" for i in range(cols)]
        lines = ["".join(head)]
        lines.append("total:" + "".join(f"{r:>6}" for r in self.ranks())[1:])
        for d in range(lo, hi + 1):
            cells = []
            for i in range(cols):
                b = self.entries.get((i, i + d), 0)
                cells.append(f"{b if b else '.':>6}")
            lines.append(f"{d:>4}:" + "".join(cells))
        return "\n".join(lines)

    def __str__(self):
        return self.staircase()


def betti_from_schreyer(res: SchreyerResolution) -> BettiTable:
    p = res.ring.field.p
    f = []  # f[k][j]
    for lv in res.levels:
        cnt = defaultdict(int)
        for d in lv.degrees:
            cnt[d] += 1
        f.append(cnt)
    ranks = [dict()] + [_constant_rank_by_degree(lv, p) for lv in res.levels[1:]]
    entries = {}
    for k, cnt in enumerate(f):
        for j, fj in cnt.items():
            b = fj - ranks[k].get(j, 0) - (ranks[k + 1].get(j, 0) if k + 1 < len(ranks) else 0)
            if b < 0:
                raise ArithmeticError("negative Betti number; inconsistent resolution")
            if b:
                entries[(k, j)] = b
    return BettiTable(entries)


_BETTI_CACHE: dict = {}


def minimal_betti(I: Ideal, budget: int | None = None) -> BettiTable:
    """Betti table of a minimal graded free resolution of ``I``."""
    cached = getattr(I, "_betti", None)
    if cached is not None:
        return cached
    if I.is_zero():
        table = BettiTable({})
    elif I.is_unit():
        table = BettiTable({(0, 0): 1})
    else:
        table = betti_from_schreyer(schreyer_resolution(I, budget))
    I._betti = table
    return table


def arith_reg(I: Ideal) -> int:
    """Arithmetic (Eisenbud-Goto) regularity: ``max(j - i)`` over ``beta_{i,j}(I) != 0``."""
    if I.is_zero():
        raise ValueError("regularity of the zero ideal is undefined")
    return minimal_betti(I).regularity()


class DegenerateRegularity(ValueError):
    """Regularity requested for an ideal whose saturation is the unit ideal."""


def geom_reg(I: Ideal) -> int:
    """Castelnuovo-Mumford regularity of the ideal sheaf: arithmetic regularity of ``sat(I)``."""
    from .ideal_ops import saturate

    S = saturate(I)
    if S.is_unit():
        raise DegenerateRegularity("sat(I) is the unit ideal: V(I) is empty")
    return arith_reg(S)


# -- explicit minimal resolution ---------------------------------------------------------------


@dataclass
class Resolution:
    """A graded free resolution with explicit differentials.

    ``degrees[k]`` maps basis labels of ``F_k`` to degrees and ``maps[k]``
    maps each label of ``F_k`` to its image ``{label of F_{k-1}: Polynomial}``
    (``F_{-1} = S`` with the single label 0).
    """

    ring: Ring
    degrees: list[dict]
    maps: list[dict]

    def betti(self) -> BettiTable:
        entries = defaultdict(int)
        for k, degs in enumerate(self.degrees):
            for d in degs.values():
                entries[(k, d)] += 1
        return BettiTable(dict(entries))

    def constant_entries(self) -> list[tuple]:
        """Nonzero constant entries of the differentials ``F_k -> F_{k-1}``, ``k >= 1``."""
        out = []
        for k in range(1, len(self.maps)):
            for lab, col in self.maps[k].items():
                for row, f in col.items():
                    if f.terms and f.is_constant():
                        out.append((k, lab, row))
        return out

    def composition_is_zero(self) -> bool:
        zero = self.ring.zero()
        for k in range(1, len(self.maps)):
            for col in self.maps[k].values():
                acc = defaultdict(lambda: zero)
                for mid, f in col.items():
                    for row, g in self.maps[k - 1][mid].items():
                        acc[row] = acc[row] + f * g
                if any(v.terms for v in acc.values()):
                    return False
        return True


def _to_resolution(res: SchreyerResolution) -> Resolution:
    ring = res.ring
    degrees, maps = [], []
    for lv in res.levels:
        degrees.append({c: d for c, d in enumerate(lv.degrees)})
        cols = {}
        for c, img in enumerate(lv.images):
            col = defaultdict(dict)
            for (comp, m), a in img.items():
                col[comp][m] = a
            cols[c] = {comp: Polynomial(ring, t) for comp, t in col.items()}
        maps.append(cols)
    return Resolution(ring, degrees, maps)


def minimize(res: SchreyerResolution | Resolution) -> Resolution:
    """Split off unit entries until every differential has entries in the maximal ideal."""
    if isinstance(res, SchreyerResolution):
        res = _to_resolution(res)
    ring = res.ring
    f = ring.field
    degrees = [dict(d) for d in res.degrees]
    maps = [{lab: dict(col) for lab, col in m.items()} for m in res.maps]
    changed = True
    while changed:
        changed = False
        for k in range(1, len(maps)):
            pivot = None
            for lab, col in maps[k].items():
                for row, g in col.items():
                    if g.terms and g.is_constant():
                        pivot = (lab, row, next(iter(g.terms.values())))
                        break
                if pivot:
                    break
            if pivot is None:
                continue
            q, prow, c = pivot
            inv = f.inv(c)
            dq = maps[k][q]
            for lab, col in maps[k].items():
                if lab == q or prow not in col:
                    continue
                h = col[prow].scale(inv)
                for row, g in dq.items():
                    nv = col.get(row, ring.zero()) - h * g
                    if nv.terms:
                        col[row] = nv
                    else:
                        col.pop(row, None)
            del maps[k][q]
            del degrees[k][q]
            if k + 1 < len(maps):
                for col in maps[k + 1].values():
                    col.pop(q, None)
            # F_{k-1} loses the basis vector prow: drop it as a source of d_{k-1}
            del maps[k - 1][prow]
            del degrees[k - 1][prow]
            changed = True
    while maps and not maps[-1]:
        maps.pop()
        degrees.pop()
    return Resolution(ring, degrees, maps)


def minimal_resolution(I: Ideal) -> Resolution:
    return minimize(schreyer_resolution(I))


# -- syzygies of a presentation matrix -----------------------------------------------------------


def _module_degrees(columns, target_degrees):
    degs = []
    for col in columns:
        ds = {sum(m) + target_degrees[c] for (c, m), a in col.items() if a}
        if len(ds) != 1:
            raise ValueError("column is not homogeneous (or is zero)")
        degs.append(ds.pop())
    return degs


def module_groebner(columns, target_degrees, p: int, track: bool = True):
    """Groebner basis of the submodule spanned by ``columns`` with lift data.

    Columns are module elements ``{(row, exps): coeff}`` of a free module whose
    basis vector ``row`` has degree ``target_degrees[row]``.  Returns
    ``(reducer, lifts, degrees)`` where ``lifts[i]`` expresses basis element ``i`` as
    ``{column index: {exps: coeff}}``.
    """
    n = None
    for col in columns:
        for _, m in col:
            n = len(m)
            break
        if n:
            break
    top = 1 << 20
    shift = [d * top**n for d in target_degrees]
    mo = _ModuleOrder(GREVLEX, shift, [len(target_degrees) - 1 - r for r in range(len(target_degrees))])
    degs = _module_degrees(columns, target_degrees)
    red = _ModReducer(mo, p)
    lifts: list[dict] = []
    pending = sorted(range(len(columns)), key=lambda i: degs[i])
    items = [("col", i) for i in pending]
    pairs = []  # (deg, a, b)

    def elt_degree(e):
        return sum(e.lm) + target_degrees[e.lc]

    def lift_scale_add(acc, lift, u, coeff):
        for ci, poly in lift.items():
            tgt = acc.setdefault(ci, {})
            for m, a in poly.items():
                mm = tuple(map(add, m, u))
                v = tgt.get(mm, 0) + a * coeff
                if p:
                    v %= p
                if v:
                    tgt[mm] = v
                else:
                    tgt.pop(mm, None)

    def insert(vec, lift):
        e = _make_melt(vec, mo, p)
        lc_coef = vec[(e.lc, e.lm)]
        inv = pow(lc_coef, -1, p) if p else 1 / lc_coef
        scaled = {}
        lift_scale_add(scaled, lift, (0,) * n, inv)
        idx = len(red.elts)
        for j, o in enumerate(red.elts):
            if o.lc == e.lc:
                lcm = tuple(map(max, o.lm, e.lm))
                pairs.append((sum(lcm) + target_degrees[e.lc], j, idx))
        red.add(e)
        lifts.append(scaled)

    # process degree by degree
    while items or pairs:
        cand_degs = [degs[i] for _, i in items] + [d for d, _, _ in pairs]
        d = min(cand_degs)
        now_pairs = sorted(pr for pr in pairs if pr[0] == d)
        pairs[:] = [pr for pr in pairs if pr[0] != d]
        now_cols = [i for _, i in items if degs[i] == d]
        items = [it for it in items if degs[it[1]] != d]
        work = []
        for _, a, b in now_pairs:
            ea, eb = red.elts[a], red.elts[b]
            lcm = tuple(map(max, ea.lm, eb.lm))
            ua = tuple(x - y for x, y in zip(lcm, ea.lm))
            ub = tuple(x - y for x, y in zip(lcm, eb.lm))
            vec = _mul_elt(_melt_dict(ea), ua, 1, p)
            _axpy(vec, _mul_elt(_melt_dict(eb), ub, p - 1 if p else -1, p), p)
            lift = {}
            lift_scale_add(lift, lifts[a], ua, 1)
            lift_scale_add(lift, lifts[b], ub, p - 1 if p else -1)
            work.append((vec, lift))
        for i in now_cols:
            work.append((dict(columns[i]), {i: {(0,) * n: 1}}))
        for vec, lift in work:
            if not vec:
                continue
            rem, quot = red.reduce(dict(vec), track=True)
            if not rem:
                continue
            for l, qd in quot.items():
                for v, a in qd.items():
                    lift_scale_add(lift, lifts[l], v, p - a if p else -a)
            insert(rem, lift)
    return red, lifts, degs


def syzygies(columns, target_degrees=None, ring: Ring | None = None) -> list[dict]:
    """Minimal homogeneous generators of the kernel of ``S^m -> F`` given by ``columns``.

    ``columns`` may be polynomials (a one-row matrix) or module elements
    ``{(row, exps): coeff}``.  Kernel vectors are returned as
    ``{column index: Polynomial}``.
    """
    if columns and isinstance(columns[0], Polynomial):
        ring = columns[0].ring
        columns = [{(0, m): c for m, c in f.terms.items()} for f in columns]
        target_degrees = [0]
    if ring is None:
        raise ValueError("ring required for module columns")
    p = ring.field.p
    n = ring.nvars
    zero = (0,) * n
    if target_degrees is None:
        target_degrees = [0] * (1 + max(c for col in columns for (c, _) in col))
    nz = [i for i, col in enumerate(columns) if col]
    src_deg = {}
    gens: list[dict] = []  # kernel vectors {col index: {exps: coeff}}
    for i, col in enumerate(columns):
        if not col:
            gens.append({i: {zero: 1}})
    if nz:
        sub = [columns[i] for i in nz]
        degs = _module_degrees(sub, target_degrees)
        for k, i in enumerate(nz):
            src_deg[i] = degs[k]
        red, lifts, _ = module_groebner(sub, target_degrees, p)
        # Schreyer syzygies of the basis, pushed through the lifts
        elts = red.elts
        for a in range(len(elts)):
            for b in range(a + 1, len(elts)):
                ea, eb = elts[a], elts[b]
                if ea.lc != eb.lc:
                    continue
                lcm = tuple(map(max, ea.lm, eb.lm))
                ua = tuple(x - y for x, y in zip(lcm, ea.lm))
                ub = tuple(x - y for x, y in zip(lcm, eb.lm))
                vec = _mul_elt(_melt_dict(ea), ua, 1, p)
                _axpy(vec, _mul_elt(_melt_dict(eb), ub, p - 1 if p else -1, p), p)
                rem, quot = red.reduce(vec, track=True)
                assert not rem
                z = {}
                _lift_add(z, lifts[a], ua, 1, p)
                _lift_add(z, lifts[b], ub, p - 1 if p else -1, p)
                for l, qd in quot.items():
                    for v, c in qd.items():
                        _lift_add(z, lifts[l], v, p - c if p else -c, p)
                gens.append({nz[k]: t for k, t in z.items() if t})
        # each original column minus its expression through the basis
        for k, i in enumerate(nz):
            rem, quot = red.reduce(dict(columns[i]), track=True)
            assert not rem
            z = {k: {zero: 1}}
            for l, qd in quot.items():
                for v, c in qd.items():
                    _lift_add(z, lifts[l], v, p - c if p else -c, p)
            gens.append({nz[kk]: t for kk, t in z.items() if t})
    for i, col in enumerate(columns):
        if not col:
            src_deg[i] = 0
    gens = [g for g in gens if any(g.values())]
    gens = _trim_generators(gens, src_deg, p, n)
    return [{i: Polynomial(ring, t) for i, t in g.items() if t} for g in gens]


def _lift_add(acc, lift, u, coeff, p):
    for ci, poly in lift.items():
        tgt = acc.setdefault(ci, {})
        for m, a in poly.items():
            mm = tuple(map(add, m, u))
            v = tgt.get(mm, 0) + a * coeff
            if p:
                v %= p
            if v:
                tgt[mm] = v
            else:
                tgt.pop(mm, None)


def _trim_generators(gens, src_deg, p, n):
    """Drop generators lying in the submodule spanned by the others of lower or equal degree."""
    if not gens:
        return []
    cols = [{(c, m): a for c, t in g.items() for m, a in t.items()} for g in gens]
    degs = []
    for col in cols:
        (c, m) = next(iter(col))
        degs.append(sum(m) + src_deg[c])
    order = sorted(range(len(cols)), key=lambda i: degs[i])
    kept = []
    rank = max(src_deg) + 1
    tdeg = [src_deg.get(c, 0) for c in range(rank)]
    for i in order:
        if kept:
            red, _, _ = module_groebner([cols[k] for k in kept], tdeg, p, track=False)
            rem, _ = red.reduce(dict(cols[i]))
            if not rem:
                continue
        kept.append(i)
    return [gens[i] for i in kept]
