"""Carrier-agnostic cells, morphisms, and colimit interfaces.

Both carriers in this library (relational precubical sets and relational
automata) are finite objects made of named cells, and their morphisms are
cell maps subject to carrier-specific preservation conditions.  Everything
the lifting machinery needs is expressed against the small interface below:
enumerate cells, enumerate or validate morphisms, and compute colimits by
gluing (coproduct, quotient, pushout).
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Optional, Sequence


@dataclass(frozen=True)
class CellMorphism:
    """A morphism presented by its underlying cell map."""

    source: Any
    target: Any
    mapping: dict

    def __call__(self, cell):
        return self.mapping[cell]

    def then(self, other: "CellMorphism") -> "CellMorphism":
        """Composite ``self`` followed by ``other``."""
        if other.source != self.target:
            raise ValueError("morphisms are not composable")
        return CellMorphism(
            self.source,
            other.target,
            {c: other.mapping[v] for c, v in self.mapping.items()},
        )

    def key(self) -> tuple:
        """Canonical hashable key for the cell map (dedup, ordering)."""
        return tuple(sorted(self.mapping.items(), key=repr))

    def is_injective(self) -> bool:
        values = list(self.mapping.values())
        return len(values) == len(set(values))


@dataclass(frozen=True)
class LiftingProblem:
    """A commuting square ``p . top = bottom . i`` asking for a filler.

    A filler is a morphism ``h: cod(i) -> dom(p)`` with ``h . i = top`` and
    ``p . h = bottom``.
    """

    i: CellMorphism
    p: CellMorphism
    top: CellMorphism
    bottom: CellMorphism

    def __post_init__(self):
        if self.top.source != self.i.source or self.top.target != self.p.source:
            raise ValueError("top leg does not fit the square")
        if self.bottom.source != self.i.target or self.bottom.target != self.p.target:
            raise ValueError("bottom leg does not fit the square")
        if self.i.then(self.bottom).mapping != self.top.then(self.p).mapping:
            raise ValueError("square does not commute")


@dataclass(frozen=True)
class GeneratorSet:
    """Named generating cofibrations together with their codiagonals.

    The codiagonals are always computed from the positive part by a
    self-pushout and fold, never written by hand.
    """

    positive: tuple[tuple[str, CellMorphism], ...]
    codiagonals: tuple[tuple[str, CellMorphism], ...]

    def __iter__(self):
        return iter(self.positive)


class Carrier(ABC):
    """Finite-colimit interface shared by both object kinds."""

    name: str = "carrier"

    @abstractmethod
    def cells(self, obj) -> list:
        """Cells of an object, in canonical order."""

    @abstractmethod
    def make_morphism(self, source, target, mapping: Mapping, check: bool = True) -> CellMorphism:
        """Wrap a cell map as a morphism, validating preservation conditions."""

    @abstractmethod
    def hom(
        self,
        source,
        target,
        fixed: Optional[Mapping] = None,
        allowed: Optional[Mapping] = None,
        injective: bool = False,
    ) -> list[CellMorphism]:
        """All morphisms, optionally with some cells pre-assigned (``fixed``)
        or restricted to candidate sets (``allowed``)."""

    @abstractmethod
    def iso_signature(self, obj) -> dict:
        """Per-cell invariant preserved by isomorphisms (pruning aid)."""

    @abstractmethod
    def empty(self):
        """The object with no cells."""

    @abstractmethod
    def coproduct(self, objs: Sequence) -> tuple[Any, list[CellMorphism]]:
        """Disjoint union with its injections."""

    @abstractmethod
    def quotient(self, obj, pairs: Iterable[tuple]) -> tuple[Any, CellMorphism]:
        """Glue cells along the given pairs; returns the quotient and its
        projection.  Classes are named by their least member."""

    @abstractmethod
    def validate_object(self, obj) -> None:
        """Raise if the object violates the carrier's own laws."""

    def identity(self, obj) -> CellMorphism:
        return CellMorphism(obj, obj, {c: c for c in self.cells(obj)})

    def initial_morphism(self, obj) -> CellMorphism:
        return CellMorphism(self.empty(), obj, {})

    def pushout(
        self, f: CellMorphism, g: CellMorphism
    ) -> tuple[Any, CellMorphism, CellMorphism]:
        """Pushout of the span ``cod(f) <-f- dom -g-> cod(g)``.

        Returns ``(P, from_cod_f, from_cod_g)``.  Computed as the coproduct
        of the two legs' codomains glued along the images of the common
        domain.
        """
        if f.source != g.source:
            raise ValueError("span legs must share their domain")
        total, (in_f, in_g) = self.coproduct([f.target, g.target])
        pairs = [
            (in_f.mapping[f.mapping[a]], in_g.mapping[g.mapping[a]])
            for a in self.cells(f.source)
        ]
        quot, proj = self.quotient(total, pairs)
        return quot, in_f.then(proj), in_g.then(proj)

    def is_isomorphism(self, f: CellMorphism) -> bool:
        """Bijective on cells with a structure-preserving inverse."""
        if len(self.cells(f.source)) != len(self.cells(f.target)):
            return False
        if not f.is_injective():
            return False
        inverse = {v: c for c, v in f.mapping.items()}
        if set(inverse) != set(self.cells(f.target)):
            return False
        try:
            self.make_morphism(f.target, f.source, inverse, check=True)
        except ValueError:
            return False
        return True

    def find_isomorphism(self, X, Y) -> Optional[CellMorphism]:
        """Some isomorphism ``X -> Y``, or ``None``."""
        if len(self.cells(X)) != len(self.cells(Y)):
            return None
        sig_x = self.iso_signature(X)
        sig_y = self.iso_signature(Y)
        if sorted(sig_x.values(), key=repr) != sorted(sig_y.values(), key=repr):
            return None
        by_sig: dict = {}
        for cell, s in sig_y.items():
            by_sig.setdefault(s, []).append(cell)
        allowed = {cell: by_sig.get(s, []) for cell, s in sig_x.items()}
        for candidate in self.hom(X, Y, allowed=allowed, injective=True):
            if self.is_isomorphism(candidate):
                return candidate
        return None


__all__ = ["CellMorphism", "LiftingProblem", "GeneratorSet", "Carrier"]
