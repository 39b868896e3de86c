"""Coefficient fields: a prime field GF(p) or the rationals."""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 2147483629


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Exact coefficient field.

    ``p`` is the characteristic; ``p == 0`` means the rationals, whose
    elements are ``Fraction`` instances.  Prime-field elements are plain
    ints in ``range(p)``.
    """

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        if p != 0:
            if p >= 2**31 or not _is_prime(p):
                raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {p}")
        self.p = p

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def kind(self) -> str:
        return "prime" if self.p else "rationals"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.p else "QQ"

    def __call__(self, value):
        """Coerce an int or Fraction into the field."""
        p = self.p
        if p:
            if isinstance(value, Fraction):
                return value.numerator * pow(value.denominator, -1, p) % p
            return int(value) % p
        return Fraction(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def to_int_repr(self, a) -> str:
        """Signed text form; prime-field elements use the symmetric range."""
        if self.p:
            return str(a - self.p if a > self.p // 2 else a)
        return str(a)

    def describe(self) -> dict:
        return {"kind": self.kind, "characteristic": self.p}


def field_from_spec(spec: str | int | None) -> Field:
    """Parse ``prime``, ``rat``/``0`` or an explicit prime."""
    if spec is None or spec == "prime":
        return Field(DEFAULT_PRIME)
    if spec in ("rat", "rationals", "QQ", 0, "0"):
        return Field(0)
    return Field(int(spec))
