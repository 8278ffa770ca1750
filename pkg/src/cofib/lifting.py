"""Lifting problems, codiagonals, and unique-lifting certification.

A map has the *unique* right lifting property against a generator when
every commuting square against it has exactly one diagonal filler.  That
single counting condition is what certifies trivial fibrations here, and
it is equivalent to ordinary lifting against the generator together with
its codiagonal (the fold out of the generator's self-pushout); both sides
of that equivalence are implemented so the equivalence itself can be
tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .cells import Carrier, CellMorphism, GeneratorSet, LiftingProblem


def codiagonal(carrier: Carrier, f: CellMorphism) -> CellMorphism:
    """Fold map out of the self-pushout of ``f``."""
    pushout, j1, j2 = carrier.pushout(f, f)
    fold: dict = {}
    for x in carrier.cells(f.target):
        fold[j1.mapping[x]] = x
        fold[j2.mapping[x]] = x
    return carrier.make_morphism(pushout, f.target, fold, check=True)


def induced_on_self_pushouts(
    carrier: Carrier,
    f: CellMorphism,
    f2: CellMorphism,
    on_dom: CellMorphism,
    on_cod: CellMorphism,
) -> CellMorphism:
    """Map of self-pushouts induced by a commuting square ``(on_dom, on_cod)``
    from ``f`` to ``f2``; sends the class of a tagged cell to the class of
    its image under ``on_cod`` in the same copy."""
    p1, a1, b1 = carrier.pushout(f, f)
    p2, a2, b2 = carrier.pushout(f2, f2)
    mapping: dict = {}
    for x in carrier.cells(f.target):
        mapping[a1.mapping[x]] = a2.mapping[on_cod.mapping[x]]
        mapping[b1.mapping[x]] = b2.mapping[on_cod.mapping[x]]
    return carrier.make_morphism(p1, p2, mapping, check=True)


def solve_lifts(carrier: Carrier, problem: LiftingProblem) -> list[CellMorphism]:
    """All diagonal fillers of a lifting problem.

    Cells in the image of ``i`` are pinned by the top leg; the rest range
    over the fiber of ``p`` above their image under the bottom leg.
    """
    i, p, top, bottom = problem.i, problem.p, problem.top, problem.bottom
    fixed: dict = {}
    for a in carrier.cells(i.source):
        cell = i.mapping[a]
        if cell in fixed and fixed[cell] != top.mapping[a]:
            return []
        fixed[cell] = top.mapping[a]
    fibers: dict = {}
    for x in carrier.cells(p.source):
        fibers.setdefault(p.mapping[x], []).append(x)
    allowed = {
        b: fibers.get(bottom.mapping[b], [])
        for b in carrier.cells(i.target)
        if b not in fixed
    }
    out = []
    for h in carrier.hom(i.target, p.source, fixed=fixed, allowed=allowed):
        if all(p.mapping[h.mapping[b]] == bottom.mapping[b] for b in h.mapping):
            out.append(h)
    return out


def lifting_problems(
    carrier: Carrier, i: CellMorphism, p: CellMorphism
) -> Iterator[LiftingProblem]:
    """All commuting squares of ``p`` against ``i``, in canonical order."""
    for top in carrier.hom(i.source, p.source):
        fixed: dict = {}
        conflict = False
        for a, v in top.mapping.items():
            cell = i.mapping[a]
            image = p.mapping[v]
            if cell in fixed and fixed[cell] != image:
                conflict = True
                break
            fixed[cell] = image
        if conflict:
            continue
        for bottom in carrier.hom(i.target, p.target, fixed=fixed):
            yield LiftingProblem(i, p, top, bottom)


@dataclass
class LiftReport:
    """Outcome of a lifting-property check with the first failing square."""

    ok: bool
    checked: int
    failure: Optional[LiftingProblem] = None
    lift_count: Optional[int] = None
    generator: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def rlp(
    carrier: Carrier,
    p: CellMorphism,
    morphisms: Iterable[tuple[str, CellMorphism]],
) -> LiftReport:
    """Ordinary right lifting property: every square has at least one filler."""
    checked = 0
    for name, i in morphisms:
        for problem in lifting_problems(carrier, i, p):
            checked += 1
            if not solve_lifts(carrier, problem):
                return LiftReport(False, checked, problem, 0, name)
    return LiftReport(True, checked)


def unique_rlp(
    carrier: Carrier,
    p: CellMorphism,
    generators: GeneratorSet,
) -> LiftReport:
    """Unique right lifting property against the positive generators:
    every square must have exactly one filler."""
    checked = 0
    for name, i in generators.positive:
        for problem in lifting_problems(carrier, i, p):
            checked += 1
            n = len(solve_lifts(carrier, problem))
            if n != 1:
                return LiftReport(False, checked, problem, n, name)
    return LiftReport(True, checked)


def unique_rlp_single(
    carrier: Carrier, p: CellMorphism, i: CellMorphism
) -> bool:
    for problem in lifting_problems(carrier, i, p):
        if len(solve_lifts(carrier, problem)) != 1:
            return False
    return True


def rlp_with_codiagonal(
    carrier: Carrier, p: CellMorphism, i: CellMorphism
) -> bool:
    """RLP against ``i`` and its codiagonal (the other side of the
    unique-lifting equivalence)."""
    nabla = codiagonal(carrier, i)
    return rlp(carrier, p, [("i", i), ("nabla", nabla)]).ok


def morphisms_agree(f: CellMorphism, g: CellMorphism) -> bool:
    return f.mapping == g.mapping


def arrow_isomorphic(
    carrier: Carrier, f: CellMorphism, g: CellMorphism
) -> bool:
    """Isomorphism in the arrow category: isos of domains and codomains
    making the square commute."""
    for phi in carrier.hom(f.source, g.source):
        if not carrier.is_isomorphism(phi):
            continue
        for psi in carrier.hom(f.target, g.target):
            if not carrier.is_isomorphism(psi):
                continue
            if morphisms_agree(f.then(psi), phi.then(g)):
                return True
    return False


@dataclass
class AppendixReport:
    """Tally of the colimit identities checked on sampled morphisms."""

    sum_identity: int = 0
    pushout_square: int = 0
    composition_identity: int = 0
    double_codiagonal_iso: int = 0
    retract_identity: int = 0
    failures: list = None

    def __post_init__(self):
        if self.failures is None:
            self.failures = []

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def total(self) -> int:
        return (
            self.sum_identity
            + self.pushout_square
            + self.composition_identity
            + self.double_codiagonal_iso
            + self.retract_identity
        )


def check_sum_identity(
    carrier: Carrier, parts: Sequence[CellMorphism]
) -> bool:
    """Codiagonal of a sum is the sum of the codiagonals, up to isomorphism."""
    dom_sum, dom_inj = carrier.coproduct([f.source for f in parts])
    cod_sum, cod_inj = carrier.coproduct([f.target for f in parts])
    mapping: dict = {}
    for f, di, ci in zip(parts, dom_inj, cod_inj):
        for a in carrier.cells(f.source):
            mapping[di.mapping[a]] = ci.mapping[f.mapping[a]]
    sum_f = carrier.make_morphism(dom_sum, cod_sum, mapping, check=True)
    nabla_sum = codiagonal(carrier, sum_f)

    nablas = [codiagonal(carrier, f) for f in parts]
    nd_sum, nd_inj = carrier.coproduct([n.source for n in nablas])
    mapping = {}
    for n, di, ci in zip(nablas, nd_inj, cod_inj):
        for a in carrier.cells(n.source):
            mapping[di.mapping[a]] = ci.mapping[n.mapping[a]]
    sum_nabla = carrier.make_morphism(nd_sum, cod_sum, mapping, check=True)
    return arrow_isomorphic(carrier, nabla_sum, sum_nabla)


def check_pushout_square(
    carrier: Carrier, i1: CellMorphism, f: CellMorphism
) -> bool:
    """Pushing out ``i1`` along ``f`` turns the codiagonal square into a
    cocartesian one: the self-pushouts' comparison map to the new codomain
    is again a pushout."""
    b2, g, i2 = carrier.pushout(i1, f)
    i2 = carrier.make_morphism(f.target, b2, i2.mapping, check=True)
    g = carrier.make_morphism(i1.target, b2, g.mapping, check=True)
    nabla1 = codiagonal(carrier, i1)
    nabla2 = codiagonal(carrier, i2)
    top = induced_on_self_pushouts(carrier, i1, i2, f, g)
    pushed, from_b1, from_d2 = carrier.pushout(nabla1, top)
    # comparison map pushed -> b2 induced by (g, nabla2); the two cocone
    # legs must agree on glued classes for the map to exist at all
    mapping: dict = {}
    for x in carrier.cells(nabla1.target):
        mapping[from_b1.mapping[x]] = g.mapping[x]
    for y in carrier.cells(top.target):
        cls = from_d2.mapping[y]
        if cls in mapping and mapping[cls] != nabla2.mapping[y]:
            return False
        mapping[cls] = nabla2.mapping[y]
    comparison = carrier.make_morphism(pushed, b2, mapping, check=True)
    return carrier.is_isomorphism(comparison)


def check_composition_identity(
    carrier: Carrier, i1: CellMorphism, i2: CellMorphism
) -> bool:
    """The codiagonal of a composite factors as the coarsening map of
    self-pushouts followed by the codiagonal of the outer map."""
    comp = i1.then(i2)
    nabla_comp = codiagonal(carrier, comp)
    p_a, a1, a2 = carrier.pushout(comp, comp)
    p_b, b1, b2 = carrier.pushout(i2, i2)
    coarsen: dict = {}
    for x in carrier.cells(comp.target):
        coarsen[a1.mapping[x]] = b1.mapping[x]
        coarsen[a2.mapping[x]] = b2.mapping[x]
    step = carrier.make_morphism(p_a, p_b, coarsen, check=True)
    nabla2 = codiagonal(carrier, i2)
    return morphisms_agree(nabla_comp, step.then(nabla2))


def check_double_codiagonal_iso(carrier: Carrier, f: CellMorphism) -> bool:
    nabla = codiagonal(carrier, f)
    return carrier.is_isomorphism(codiagonal(carrier, nabla))


def check_retract_identity(carrier: Carrier, f: CellMorphism) -> bool:
    """Exhibit ``f`` as a retract of ``f + f`` and check the codiagonal of
    the retract is a retract of the codiagonal."""
    doubled_dom, dom_inj = carrier.coproduct([f.source, f.source])
    doubled_cod, cod_inj = carrier.coproduct([f.target, f.target])
    mapping: dict = {}
    for di, ci in zip(dom_inj, cod_inj):
        for a in carrier.cells(f.source):
            mapping[di.mapping[a]] = ci.mapping[f.mapping[a]]
    ff = carrier.make_morphism(doubled_dom, doubled_cod, mapping, check=True)
    # section: first copy; retraction: fold both copies back
    sec_dom = dom_inj[0]
    sec_cod = cod_inj[0]
    fold_dom = carrier.make_morphism(
        doubled_dom,
        f.source,
        {
            di.mapping[a]: a
            for di in dom_inj
            for a in carrier.cells(f.source)
        },
        check=True,
    )
    fold_cod = carrier.make_morphism(
        doubled_cod,
        f.target,
        {
            ci.mapping[x]: x
            for ci in cod_inj
            for x in carrier.cells(f.target)
        },
        check=True,
    )
    sigma = induced_on_self_pushouts(carrier, f, ff, sec_dom, sec_cod)
    rho = induced_on_self_pushouts(carrier, ff, f, fold_dom, fold_cod)
    if not morphisms_agree(sigma.then(rho), CellMorphism(
        sigma.source, sigma.source, {c: c for c in carrier.cells(sigma.source)}
    )):
        return False
    nabla_f = codiagonal(carrier, f)
    nabla_ff = codiagonal(carrier, ff)
    return morphisms_agree(sigma.then(nabla_ff), nabla_f.then(sec_cod)) and morphisms_agree(
        rho.then(nabla_f), nabla_ff.then(fold_cod)
    )


def appendix_identity_suite(
    carrier: Carrier,
    sample: Sequence[tuple[str, CellMorphism]],
    composable: Sequence[tuple[CellMorphism, CellMorphism]] = (),
    pushout_spans: Sequence[tuple[CellMorphism, CellMorphism]] = (),
) -> AppendixReport:
    """Check the codiagonal identities by explicit colimit computation.

    ``sample`` feeds the sum / double-codiagonal / retract checks (sums are
    taken over consecutive pairs), ``composable`` the composite identity,
    ``pushout_spans`` the cocartesian-square identity.
    """
    report = AppendixReport()
    morphs = [f for _name, f in sample]
    for name, f in sample:
        if check_double_codiagonal_iso(carrier, f):
            report.double_codiagonal_iso += 1
        else:
            report.failures.append(("double_codiagonal", name))
        if check_retract_identity(carrier, f):
            report.retract_identity += 1
        else:
            report.failures.append(("retract", name))
    for k in range(len(morphs) - 1):
        if check_sum_identity(carrier, morphs[k : k + 2]):
            report.sum_identity += 1
        else:
            report.failures.append(("sum", sample[k][0], sample[k + 1][0]))
    for i1, i2 in composable:
        if check_composition_identity(carrier, i1, i2):
            report.composition_identity += 1
        else:
            report.failures.append(("composition", i1, i2))
    for i1, f in pushout_spans:
        if check_pushout_square(carrier, i1, f):
            report.pushout_square += 1
        else:
            report.failures.append(("pushout", i1, f))
    return report


__all__ = [
    "codiagonal",
    "induced_on_self_pushouts",
    "solve_lifts",
    "lifting_problems",
    "LiftReport",
    "rlp",
    "unique_rlp",
    "unique_rlp_single",
    "rlp_with_codiagonal",
    "arrow_isomorphic",
    "AppendixReport",
    "check_sum_identity",
    "check_pushout_square",
    "check_composition_identity",
    "check_double_codiagonal_iso",
    "check_retract_identity",
    "appendix_identity_suite",
]
