"""Polynomial rings, monomial orders and exact multivariate polynomials.

Monomials are dense exponent tuples.  Every monomial order used here is
encoded as a linear functional on exponent vectors (a single integer key,
``key(m1 * m2) == key(m1) + key(m2)``), which keeps comparisons cheap in the
Groebner kernel.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from operator import add

from .field import Field

# exponents must stay below this for the integer order keys to be faithful
EXP_BOUND = 1 << 20


class MonomialOrder:
    """A multiplicative monomial order.

    ``kind`` is ``grevlex``, ``lex`` or ``elim``.  ``elim`` is a block order
    that compares the first ``split`` variables by grevlex before looking at
    the rest (also by grevlex), so it eliminates those variables.
    """

    __slots__ = ("kind", "split", "perm", "_cache")

    def __init__(self, kind: str = "grevlex", split: int | None = None, perm=None):
        if kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "elim" and (split is None or split < 1):
            raise ValueError("elim order needs split >= 1")
        self.kind = kind
        self.split = split if kind == "elim" else None
        # perm[j] is the position variable j takes in the order (None: identity)
        if perm is not None:
            perm = tuple(perm)
            if sorted(perm) != list(range(len(perm))):
                raise ValueError("perm must be a permutation")
            if perm == tuple(range(len(perm))):
                perm = None
        self.perm = perm
        self._cache = {}

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.split, self.perm) == (
            other.kind,
            other.split,
            other.perm,
        )

    def __hash__(self):
        return hash((self.kind, self.split, self.perm))

    def __repr__(self):
        base = f"elim({self.split})" if self.kind == "elim" else self.kind
        return base if self.perm is None else f"{base}{list(self.perm)}"

    @property
    def name(self) -> str:
        return repr(self)

    @classmethod
    def grevlex_last(cls, i: int, n: int) -> "MonomialOrder":
        """Grevlex in which variable ``i`` is the last (cheapest) variable."""
        perm = list(range(n))
        perm[i], perm[n - 1] = n - 1, i
        return cls("grevlex", perm=perm)

    def weights(self, n: int) -> tuple[int, ...]:
        w = _weights(self.kind, self.split, n)
        if self.perm is None:
            return w
        if len(self.perm) != n:
            raise ValueError("order permutation has the wrong length")
        return tuple(w[self.perm[j]] for j in range(n))

    def key(self, m: tuple[int, ...]) -> int:
        k = self._cache.get(m)
        if k is None:
            w = self.weights(len(m))
            k = sum(map(int.__mul__, m, w))
            self._cache[m] = k
        return k

    def compare(self, m1: tuple[int, ...], m2: tuple[int, ...]) -> int:
        """Return -1, 0 or 1 as ``m1`` is smaller, equal or larger than ``m2``."""
        if len(m1) != len(m2):
            raise ValueError("monomials live in rings with different numbers of variables")
        if m1 == m2:
            return 0
        return 1 if self.key(m1) > self.key(m2) else -1


def _grevlex_weights(n: int) -> list[int]:
    top = EXP_BOUND**n
    return [top - EXP_BOUND**i for i in range(n)]


@lru_cache(maxsize=None)
def _weights(kind: str, split: int | None, n: int) -> tuple[int, ...]:
    if kind == "grevlex":
        return tuple(_grevlex_weights(n))
    if kind == "lex":
        return tuple(EXP_BOUND ** (n - 1 - i) for i in range(n))
    if split > n:
        raise ValueError("elimination split exceeds number of variables")
    rest = n - split
    shift = EXP_BOUND ** (rest + 1)
    head = [w * shift for w in _grevlex_weights(split)]
    return tuple(head + _grevlex_weights(rest))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def mono_mul(a, b):
    return tuple(map(add, a, b))


def mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(map(max, a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


class ParseError(ValueError):
    def __init__(self, msg: str, col: int):
        super().__init__(f"column {col}: {msg}")
        self.msg = msg
        self.col = col


class Ring:
    """Polynomial ring k[x_0, ..., x_r] with named variables."""

    __slots__ = ("field", "names", "nvars", "_index")

    def __init__(self, nvars_or_names, field: Field | None = None):
        if isinstance(nvars_or_names, int):
            names = tuple(f"x{i}" for i in range(nvars_or_names))
        else:
            names = tuple(nvars_or_names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for nm in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", nm):
                raise ValueError(f"bad variable name {nm!r}")
        self.field = field if field is not None else Field()
        self.names = names
        self.nvars = len(names)
        self._index = {nm: i for i, nm in enumerate(names)}

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names and self.field == other.field

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return f"Ring({list(self.names)}, {self.field!r})"

    @property
    def r(self) -> int:
        """Projective dimension of Proj of the ring."""
        return self.nvars - 1

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field(c)})

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def var(self, name: str) -> "Polynomial":
        return self.gen(self._index[name])

    def monomial(self, exps, c=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        return Polynomial(self, {exps: self.field(c)})

    def index(self, name: str) -> int:
        return self._index[name]

    def with_field(self, field: Field) -> "Ring":
        return Ring(self.names, field)

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()


class Polynomial:
    """Immutable polynomial stored as ``{exponent tuple: nonzero coefficient}``."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict, _clean: bool = False):
        self.ring = ring
        if not _clean:
            terms = {m: c for m, c in terms.items() if c}
        self.terms = terms
        self._hash = None

    # -- structure -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> tuple[bool, int | None]:
        """Return ``(homogeneous?, degree)``; the zero polynomial gives ``(True, None)``."""
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True, None
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list:
        key = order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading(self, order: MonomialOrder = GREVLEX):
        """Leading ``(monomial, coefficient)`` under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.key
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self.scale(self.ring.field.inv(c))

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if other.ring != self.ring:
            raise ValueError("polynomials belong to different rings")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if p:
                v %= p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, True)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {m: neg(c) for m, c in self.terms.items()}, True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero()
        p = f.p
        if p:
            return Polynomial(self.ring, {m: a * c % p for m, a in self.terms.items()}, True)
        return Polynomial(self.ring, {m: a * c for m, a in self.terms.items()}, True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        p = self.ring.field.p
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(map(add, m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items()}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, u, c=1) -> "Polynomial":
        p = self.ring.field.p
        if p:
            return Polynomial(self.ring, {tuple(map(add, m, u)): a * c % p for m, a in self.terms.items()}, True)
        return Polynomial(self.ring, {tuple(map(add, m, u)): a * c for m, a in self.terms.items()}, True)

    def exact_div(self, g: "Polynomial") -> "Polynomial":
        """Quotient ``self / g``; raises ``ValueError`` if ``g`` does not divide ``self``."""
        self._check(g)
        if not g.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.ring.field
        lm, lc = g.leading(GREVLEX)
        inv = f.inv(lc)
        rem = self
        quot = {}
        while rem.terms:
            m, c = rem.leading(GREVLEX)
            if not mono_divides(lm, m):
                raise ValueError("polynomial division is not exact")
            u = mono_div(m, lm)
            q = f(c * inv)
            quot[u] = q
            rem = rem - g.mul_monomial(u, q)
        return Polynomial(self.ring, quot)

    def diff(self, i: int) -> "Polynomial":
        """Partial derivative with respect to variable ``i``."""
        f = self.ring.field
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = f(c * e)
        return Polynomial(self.ring, out)

    def permute(self, perm, ring: Ring | None = None) -> "Polynomial":
        """Rename variables: variable ``i`` becomes variable ``perm[i]``."""
        ring = ring or self.ring
        n = ring.nvars
        out = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                e[perm[i]] = k
            out[tuple(e)] = c
        return Polynomial(ring, out, True)

    def embed(self, ring: Ring, offset: int = 0) -> "Polynomial":
        """Same polynomial in a larger ring, shifting variables by ``offset``."""
        pad_front = (0,) * offset
        pad_back = (0,) * (ring.nvars - offset - self.ring.nvars)
        return Polynomial(ring, {pad_front + m + pad_back: c for m, c in self.terms.items()}, True)

    # -- comparison / display ------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        f = self.ring.field
        names = self.ring.names
        parts = []
        for m, c in self.sorted_terms(GREVLEX):
            s = f.to_int_repr(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            factors = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e]
            if factors:
                body = "*".join(factors if s == "1" else [s] + factors)
            else:
                body = s
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class _Parser:
    """Recursive-descent parser for ``+ - * / ^ ( )``; ``/`` divides by a nonzero constant."""

    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if mt.end() == pos or not mt.group(0).strip():
                break
            num, ident, op = mt.groups()
            col = mt.start(mt.lastindex) + 1
            if num is not None:
                self.toks.append(("num", int(num), col))
            elif ident is not None:
                self.toks.append(("id", ident, col))
            else:
                if op not in "+-*/^()":
                    raise ParseError(f"unexpected character {op!r}", col)
                self.toks.append(("op", op, col))
            pos = mt.end()
        self.i = 0

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", None, len(self.text) + 1)

    def _take(self):
        t = self._peek()
        self.i += 1
        return t

    def parse(self) -> Polynomial:
        if not self.toks:
            raise ParseError("empty polynomial", 1)
        f = self._expr()
        kind, val, col = self._peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", col)
        return f

    def _expr(self):
        kind, val, _ = self._peek()
        sign = 1
        if kind == "op" and val in "+-":
            self._take()
            sign = -1 if val == "-" else 1
        acc = self._term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val, _ = self._peek()
            if kind == "op" and val in "+-":
                self._take()
                t = self._term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def _starts_factor(self, tok):
        kind, val, _ = tok
        return kind in ("num", "id") or (kind == "op" and val == "(")

    def _term(self):
        acc = self._factor()
        while True:
            tok = self._peek()
            if tok[0] == "op" and tok[1] == "*":
                self._take()
                acc = acc * self._factor()
            elif tok[0] == "op" and tok[1] == "/":
                self._take()
                col = self._peek()[2]
                den = self._factor()
                if not den.terms or not den.is_constant():
                    raise ParseError("can only divide by a nonzero constant", col)
                acc = acc.scale(self.ring.field.inv(next(iter(den.terms.values()))))
            elif self._starts_factor(tok):
                acc = acc * self._factor()
            else:
                return acc

    def _factor(self):
        base = self._atom()
        kind, val, _ = self._peek()
        if kind == "op" and val == "^":
            self._take()
            kind, val, col = self._take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", col)
            base = base**val
        return base

    def _atom(self):
        kind, val, col = self._take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "id":
            if val not in self.ring._index:
                raise ParseError(f"unknown variable {val!r}", col)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            inner = self._expr()
            k2, v2, c2 = self._take()
            if not (k2 == "op" and v2 == ")"):
                raise ParseError("expected ')'", c2)
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", col)
        raise ParseError(f"unexpected {val!r}", col)
