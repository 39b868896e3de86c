"""Constructors for the example ideal families used by the verifiers."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .field import Field, field_from_spec
from .ideal import Ideal
from .poly import Polynomial, Ring
from .schur import DegreeSequence

FAMILIES = (
    "hyperplane",
    "caviglia",
    "coord_points",
    "rnc",
    "twisted_cubic",
    "complete_intersection",
    "generic_regseq",
    "veronese",
    "two_planes",
)

MAX_RESEEDS = 20


class UnknownExample(ValueError):
    pass


@dataclass(frozen=True)
class ExampleSpec:
    name: str
    params: tuple = ()  # sorted (key, value) pairs so specs hash and compare by value

    @classmethod
    def make(cls, name: str, **params) -> "ExampleSpec":
        clean = {k: (tuple(v) if isinstance(v, list) else v) for k, v in params.items() if v is not None}
        return cls(name, tuple(sorted(clean.items())))

    @property
    def p(self) -> dict:
        return dict(self.params)

    def to_dict(self) -> dict:
        return {"name": self.name, "params": {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.params}}

    def label(self) -> str:
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={'/'.join(map(str, v)) if isinstance(v, tuple) else v}" for k, v in self.params)
        return f"{self.name}({inner})"


@dataclass
class Example:
    spec: ExampleSpec
    ideal: Ideal
    degrees: DegreeSequence
    dimension: int  # expected projective dimension of V(I)
    smooth: bool | None  # expected smoothness of V(I); None if not claimed
    reg: int | None = None  # expected regularity of sat(I) when known
    saturated: bool | None = None
    meta: dict = field(default_factory=dict)

    @property
    def ring(self) -> Ring:
        return self.ideal.ring


def var_names(n: int) -> list[str]:
    return list("xyzw"[:n]) if n <= 4 else [f"x{i}" for i in range(n)]


def _ring(r: int, fld: Field) -> Ring:
    return Ring(var_names(r + 1), fld)


def hyperplane(r: int, d: int, fld: Field) -> Example:
    """``f_i = x_i^{d-1} * l`` with ``l`` the sum of the variables; ``sat = (l)``."""
    if r < 1 or d < 1:
        raise ValueError("hyperplane needs r >= 1 and d >= 1")
    R = _ring(r, fld)
    xs = R.gens()
    ell = sum(xs[1:], xs[0])
    gens = [x ** (d - 1) * ell for x in xs]
    return Example(
        ExampleSpec.make("hyperplane", r=r, d=d),
        Ideal(gens, R),
        DegreeSequence([d] * (r + 1), r),
        dimension=r - 1,
        smooth=True,
        reg=1,
        saturated=(d == 1),
    )


def caviglia(d: int, fld: Field) -> Example:
    """``(x^d, y^d, x z^{d-1} - y w^{d-1})`` in ``P^3``: a singular curve with large saturation degree."""
    if d < 2:
        raise ValueError("caviglia needs d >= 2")
    R = _ring(3, fld)
    x, y, z, w = R.gens()
    gens = [x**d, y**d, x * z ** (d - 1) - y * w ** (d - 1)]
    return Example(
        ExampleSpec.make("caviglia", d=d),
        Ideal(gens, R),
        DegreeSequence([d] * 3, 3),
        dimension=1,
        smooth=False,
    )


def coord_points(r: int, fld: Field) -> Example:
    """The ``r + 1`` coordinate points of ``P^r``: all ``x_i x_j`` with ``i < j``."""
    if r < 1:
        raise ValueError("coord_points needs r >= 1")
    R = _ring(r, fld)
    xs = R.gens()
    gens = [xs[i] * xs[j] for i, j in combinations(range(r + 1), 2)]
    return Example(
        ExampleSpec.make("coord_points", r=r),
        Ideal(gens, R),
        DegreeSequence([2] * len(gens), r),
        dimension=0,
        smooth=True,
        reg=2,
        saturated=True,
    )


def rnc(r: int, fld: Field) -> Example:
    """Rational normal curve of degree ``r``: 2x2 minors of the Hankel matrix ``[x0..x_{r-1}; x1..x_r]``."""
    if r < 2:
        raise ValueError("rnc needs r >= 2")
    R = _ring(r, fld)
    xs = R.gens()
    top, bot = xs[:r], xs[1:]
    gens = [top[i] * bot[j] - top[j] * bot[i] for i, j in combinations(range(r), 2)]
    name = "twisted_cubic" if r == 3 else "rnc"
    spec = ExampleSpec.make(name) if r == 3 else ExampleSpec.make("rnc", r=r)
    return Example(
        spec,
        Ideal(gens, R),
        DegreeSequence([2] * len(gens), r),
        dimension=1,
        smooth=True,
        reg=2,
        saturated=True,
    )


def _random_form(R: Ring, d: int, rng: random.Random) -> Polynomial:
    terms = {}
    for combo in combinations_with_replacement(range(R.nvars), d):
        e = [0] * R.nvars
        for i in combo:
            e[i] += 1
        c = rng.randint(-9, 9)
        if c:
            terms[tuple(e)] = R.field(c)
    return Polynomial(R, terms)


def _generic_forms(R: Ring, degrees, seed: int):
    """Seeded random forms whose zero locus has the expected dimension; reseeds a bounded number of times."""
    r = R.nvars - 1
    want = r - len(degrees)
    for attempt in range(MAX_RESEEDS):
        rng = random.Random(seed + attempt)
        gens = [_random_form(R, d, rng) for d in degrees]
        if any(not g.terms for g in gens):
            continue
        I = Ideal(gens, R)
        if len(I.gens) == len(degrees) and I.dimension() == max(want, -1):
            return I, seed + attempt
    raise ArithmeticError(f"no regular sequence found in {MAX_RESEEDS} draws from seed {seed}")


def complete_intersection(degrees, r: int, fld: Field, generic: bool = False, seed: int = 0) -> Example:
    """Complete intersection of the given degrees in ``P^r``.

    By default the pure powers ``x_0^{d_0}, x_1^{d_1}, ...`` (a non-reduced
    scheme); with ``generic=True`` seeded random forms (smooth for a generic draw).
    """
    degrees = sorted((int(d) for d in degrees), reverse=True)
    if len(degrees) > r + 1 or any(d < 1 for d in degrees):
        raise ValueError("need at most r + 1 positive degrees")
    R = _ring(r, fld)
    meta = {}
    if generic:
        I, used = _generic_forms(R, degrees, seed)
        meta["seed_used"] = used
        spec = ExampleSpec.make("complete_intersection", degrees=degrees, r=r, generic=True, seed=seed)
        smooth = True
    else:
        xs = R.gens()
        I = Ideal([xs[i] ** d for i, d in enumerate(degrees)], R)
        spec = ExampleSpec.make("complete_intersection", degrees=degrees, r=r)
        smooth = all(d == 1 for d in degrees)
    return Example(
        spec,
        I,
        DegreeSequence(degrees, r),
        dimension=r - len(degrees),
        smooth=smooth,
        reg=sum(degrees) - len(degrees) + 1,
        saturated=len(degrees) <= r,
        meta=meta,
    )


def generic_regseq(degrees, r: int, fld: Field, seed: int = 0) -> Example:
    """Seeded generic forms, certified to be a regular sequence by the dimension of their zero locus."""
    degrees = sorted((int(d) for d in degrees), reverse=True)
    if len(degrees) > r + 1 or any(d < 1 for d in degrees):
        raise ValueError("need at most r + 1 positive degrees")
    R = _ring(r, fld)
    I, used = _generic_forms(R, degrees, seed)
    return Example(
        ExampleSpec.make("generic_regseq", degrees=degrees, r=r, seed=seed),
        I,
        DegreeSequence(degrees, r),
        dimension=r - len(degrees),
        smooth=True,
        reg=sum(degrees) - len(degrees) + 1,
        saturated=len(degrees) <= r,
        meta={"seed_used": used},
    )


def veronese(fld: Field) -> Example:
    """Veronese surface in ``P^5``: 2x2 minors of a generic symmetric 3x3 matrix."""
    R = _ring(5, fld)
    a, b, c, d, e, f = R.gens()
    M = [[a, b, c], [b, d, e], [c, e, f]]
    gens = []
    for r1, r2 in combinations(range(3), 2):
        for c1, c2 in combinations(range(3), 2):
            g = M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1]
            if g.terms:
                gens.append(g)
    I = Ideal(gens, R)
    return Example(
        ExampleSpec.make("veronese"),
        I,
        DegreeSequence([2] * len(I.gens), 5),
        dimension=2,
        smooth=True,
        reg=2,
        saturated=True,
    )


def two_planes(fld: Field) -> Example:
    """Two planes of ``P^3`` meeting in a line: ``(x y) = (x) ∩ (y)``; singular along the line."""
    R = _ring(3, fld)
    x, y, _, _ = R.gens()
    return Example(
        ExampleSpec.make("two_planes"),
        Ideal([x * y], R),
        DegreeSequence([2], 3),
        dimension=2,
        smooth=False,
        reg=2,
        saturated=True,
    )


def build_example(spec: ExampleSpec | str, fld: Field | None = None, **params) -> Example:
    """Deterministic ideal and metadata for a named family."""
    if isinstance(spec, str):
        spec = ExampleSpec.make(spec, **params)
    if fld is None:
        fld = field_from_spec(None)
    p = spec.p
    name = spec.name
    try:
        if name == "hyperplane":
            return hyperplane(p.get("r", 2), p.get("d", 2), fld)
        if name == "caviglia":
            return caviglia(p.get("d", 3), fld)
        if name == "coord_points":
            return coord_points(p.get("r", 2), fld)
        if name == "rnc":
            return rnc(p.get("r", 4), fld)
        if name == "twisted_cubic":
            return rnc(3, fld)
        if name == "complete_intersection":
            return complete_intersection(
                p.get("degrees", (2, 2)),
                p.get("r", 3),
                fld,
                generic=bool(p.get("generic", False)),
                seed=p.get("seed", 0),
            )
        if name == "generic_regseq":
            return generic_regseq(p.get("degrees", (2, 2, 2)), p.get("r", 2), fld, seed=p.get("seed", 0))
        if name == "veronese":
            return veronese(fld)
        if name == "two_planes":
            return two_planes(fld)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name}: {exc}") from None
    raise UnknownExample(f"unknown example family {name!r}; known: {', '.join(FAMILIES)}")


def default_corpus(fld: Field | None = None) -> list[Example]:
    """The fixed list of corpus ideals used by suite-wide invariants."""
    specs = [
        ExampleSpec.make("hyperplane", r=2, d=2),
        ExampleSpec.make("hyperplane", r=2, d=3),
        ExampleSpec.make("hyperplane", r=3, d=2),
        ExampleSpec.make("caviglia", d=3),
        ExampleSpec.make("caviglia", d=4),
        ExampleSpec.make("coord_points", r=2),
        ExampleSpec.make("twisted_cubic"),
        ExampleSpec.make("rnc", r=4),
        ExampleSpec.make("complete_intersection", degrees=(2, 2), r=3),
        ExampleSpec.make("complete_intersection", degrees=(3, 2), r=4),
        ExampleSpec.make("complete_intersection", degrees=(2, 2), r=3, generic=True, seed=0),
        ExampleSpec.make("generic_regseq", degrees=(2, 2, 2), r=2, seed=0),
        ExampleSpec.make("veronese"),
        ExampleSpec.make("two_planes"),
    ]
    return [build_example(s, fld) for s in specs]
