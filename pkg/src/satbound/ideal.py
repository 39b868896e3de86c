"""Homogeneous ideals with cached Groebner bases and Hilbert data."""

from __future__ import annotations

from math import comb

from .groebner import GroebnerBasis, groebner_basis
from .hilbert import HilbertData, count_standard, hilbert_data_from_leads, hilbert_numerator
from .poly import GREVLEX, MonomialOrder, Polynomial, Ring


class Ideal:
    """An ideal of ``ring`` spanned by homogeneous generators.

    Treated as immutable: the generator list never changes, and the caches
    only ever hold data derived from it.
    """

    def __init__(self, gens, ring: Ring | None = None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("an empty generator list needs an explicit ring")
            ring = gens[0].ring
        clean = []
        seen = set()
        for f in gens:
            if f.ring != ring:
                raise ValueError("generators live in different rings")
            ok, _ = f.is_homogeneous()
            if not ok:
                raise ValueError(f"generator is not homogeneous: {f}")
            if f.terms:
                g = f.monic()
                if g not in seen:
                    seen.add(g)
                    clean.append(f)
        self.ring = ring
        self.gens = tuple(clean)
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}
        self._numer = None

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"

    def __len__(self):
        return len(self.gens)

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def degrees(self) -> list[int]:
        return [g.degree() for g in self.gens]

    def is_zero(self) -> bool:
        return not self.gens

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            if not self.gens:
                gb = GroebnerBasis(self.ring, order, [])
            else:
                gb = groebner_basis(self.gens, order)
            self._gb[order] = gb
        return gb

    def set_groebner(self, gb: GroebnerBasis):
        """Install a basis already known to generate this ideal."""
        self._gb[gb.order] = gb

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def __contains__(self, f):
        return self.contains(f)

    def issubset(self, other: "Ideal") -> bool:
        gb = other.groebner()
        return all(gb.contains(g) for g in self.gens)

    def same_as(self, other: "Ideal") -> bool:
        return self.issubset(other) and other.issubset(self)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def leads(self, order: MonomialOrder = GREVLEX) -> list[tuple[int, ...]]:
        return list(self.groebner(order).leads)

    def hilbert_numerator(self) -> list[int]:
        if self._numer is None:
            self._numer = hilbert_numerator(self.leads(), self.nvars)
        return self._numer

    def quotient_dim(self, t: int, order: MonomialOrder = GREVLEX) -> int:
        """dim_k (S/I)_t by counting standard monomials."""
        if t < 0:
            return 0
        return count_standard(self.leads(order), self.nvars, t)

    def graded_dim(self, t: int, order: MonomialOrder = GREVLEX) -> int:
        """dim_k I_t."""
        if t < 0:
            return 0
        return comb(t + self.nvars - 1, self.nvars - 1) - self.quotient_dim(t, order)

    def hilbert_data(self, t_max: int = 10) -> HilbertData:
        data = hilbert_data_from_leads(self.leads(), self.nvars, t_max)
        self._numer = data.numerator
        return data

    def dimension(self) -> int:
        return self.hilbert_data(0).dimension

    def to_text(self) -> str:
        return "\n".join(str(g) for g in self.gens)


def ideal_member(f: Polynomial, I: Ideal) -> bool:
    ok, _ = f.is_homogeneous()
    if not ok:
        raise ValueError("membership test expects a homogeneous polynomial")
    return I.contains(f)


def graded_dim(I: Ideal, t: int) -> int:
    return I.graded_dim(t)


def hilbert_data(I: Ideal, t_max: int = 10) -> HilbertData:
    return I.hilbert_data(t_max)
