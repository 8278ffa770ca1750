"""Finite relational precubical sets.

A relational precubical set is a graded family of named cubes together
with, for every cube ``a`` and every sign word ``g`` of positive degree, a
finite set of ``g``-faces of ``a``.  Faces are stored extensionally for
every word, not just for the degree-one generators, because the laws only
force composite relations to *contain* the composites of generating
relations; upward neighborhoods and blowups genuinely need the composite
entries.  The laws are:

* grading: every ``g``-face of ``a`` has dimension ``domain_dim(g)`` and
  ``codomain_dim(g) == dim(a)``;
* identity faces are implicit (every cube is its own face along the
  identity word, and nothing else is);
* closure: a face of a face is a face along the composite word.

Morphisms are dimension-preserving cell maps that send faces to faces.
"""

from __future__ import annotations

from collections import defaultdict, deque
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional

from .cells import Carrier, CellMorphism
from .words import (
    ZERO,
    BrickIndex,
    CubeWord,
    all_brick_indices,
    brick_cells,
    compose_words,
)


class FormatError(ValueError):
    """Malformed serialized input (bad schema, bad words, bad identifiers)."""


class RelPCS:
    """A finite relational precubical set."""

    __slots__ = ("dim_bound", "cubes", "faces", "_dim")

    def __init__(
        self,
        dim_bound: int,
        cubes: Mapping[int, Iterable[str]],
        faces: Mapping[tuple[str, CubeWord], Iterable[str]],
    ):
        self.dim_bound = dim_bound
        self.cubes = {
            d: frozenset(cs) for d, cs in cubes.items() if cs
        }
        self.faces = {
            key: frozenset(ts) for key, ts in faces.items() if ts
        }
        self._dim = {c: d for d, cs in self.cubes.items() for c in cs}

    def dim(self, cube: str) -> int:
        return self._dim[cube]

    def __contains__(self, cube: str) -> bool:
        return cube in self._dim

    def all_cubes(self) -> list[str]:
        """Cubes in canonical order: dimension descending, then identifier."""
        return sorted(self._dim, key=lambda c: (-self._dim[c], c))

    def n_cubes(self) -> int:
        return len(self._dim)

    def cube_counts(self) -> dict[int, int]:
        return {d: len(cs) for d, cs in sorted(self.cubes.items())}

    def faces_of(self, cube: str, word: CubeWord) -> frozenset[str]:
        if word.is_identity:
            return frozenset((cube,)) if self._dim.get(cube) == word.codomain_dim else frozenset()
        return self.faces.get((cube, word), frozenset())

    def relations(self) -> Iterator[tuple[str, CubeWord, str]]:
        for (a, g), bs in self.faces.items():
            for b in bs:
                yield a, g, b

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RelPCS)
            and self.dim_bound == other.dim_bound
            and self.cubes == other.cubes
            and self.faces == other.faces
        )

    __hash__ = None

    def __repr__(self) -> str:
        counts = ",".join(f"{d}:{n}" for d, n in self.cube_counts().items())
        return f"RelPCS(dim_bound={self.dim_bound}, cells[{counts}])"


def saturate(
    faces: Mapping[tuple[str, CubeWord], Iterable[str]]
) -> dict[tuple[str, CubeWord], set[str]]:
    """Close a face table under composition of words (worklist closure)."""
    rel: dict[tuple[str, CubeWord], set[str]] = defaultdict(set)
    outgoing: dict[str, set[tuple[CubeWord, str]]] = defaultdict(set)
    incoming: dict[str, set[tuple[str, CubeWord]]] = defaultdict(set)
    queue: deque[tuple[str, CubeWord, str]] = deque()

    def add(a: str, g: CubeWord, b: str) -> None:
        if b in rel[(a, g)]:
            return
        rel[(a, g)].add(b)
        outgoing[a].add((g, b))
        incoming[b].add((a, g))
        queue.append((a, g, b))

    for (a, g), bs in faces.items():
        for b in bs:
            add(a, g, b)
    while queue:
        a, g, b = queue.popleft()
        for g2, c in list(outgoing[b]):
            add(a, compose_words(g2, g), c)
        for x, g0 in list(incoming[a]):
            add(x, compose_words(g, g0), b)
    return dict(rel)


def relpcs(
    dim_bound: int,
    cubes: Mapping[int, Iterable[str]],
    faces: Mapping[tuple[str, CubeWord], Iterable[str]],
    close: bool = True,
) -> RelPCS:
    """Build a relational precubical set, saturating generator-only data."""
    table = faces if not close else saturate(faces)
    return RelPCS(dim_bound, cubes, table)


class ValidationReport:
    """Outcome of the structural check, with a witness on failure."""

    def __init__(self, problems: list[dict]):
        self.problems = problems

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


def validate(P: RelPCS) -> ValidationReport:
    """Check grading and closure; report a witnessing triple on failure."""
    problems: list[dict] = []
    for d, cs in P.cubes.items():
        if d < 0 or d > P.dim_bound:
            problems.append({"kind": "grading", "detail": f"dimension {d} out of range"})
    seen: dict[str, int] = {}
    for d, cs in P.cubes.items():
        for c in cs:
            if c in seen and seen[c] != d:
                problems.append({"kind": "grading", "detail": f"duplicate cube id {c!r}"})
            seen[c] = d
    for (a, g), bs in P.faces.items():
        if a not in P:
            problems.append({"kind": "grading", "detail": f"unknown cube {a!r}"})
            continue
        if g.is_identity:
            problems.append({"kind": "grading", "detail": f"identity word stored for {a!r}"})
            continue
        if g.codomain_dim != P.dim(a):
            problems.append(
                {"kind": "grading", "detail": f"word {g} does not match dim of {a!r}"}
            )
            continue
        for b in bs:
            if b not in P or P.dim(b) != g.domain_dim:
                problems.append(
                    {"kind": "grading", "detail": f"face {b!r} of {a!r} at {g} misgraded"}
                )
    if problems:
        return ValidationReport(problems)
    outgoing: dict[str, list[tuple[CubeWord, frozenset[str]]]] = defaultdict(list)
    for (a, g), bs in P.faces.items():
        outgoing[a].append((g, bs))
    for (a, g), bs in P.faces.items():
        for b in bs:
            for g2, cs in outgoing.get(b, ()):
                comp = compose_words(g2, g)
                for c in sorted(cs - P.faces_of(a, comp)):
                    problems.append(
                        {
                            "kind": "closure",
                            "witness": {"cube": a, "word": str(comp), "missing": c},
                        }
                    )
    return ValidationReport(problems)


def empty_pcs(dim_bound: int = 0) -> RelPCS:
    return RelPCS(dim_bound, {}, {})


def _split_word(g: CubeWord, left_len: int) -> tuple[CubeWord, CubeWord]:
    return CubeWord(g.letters[:left_len]), CubeWord(g.letters[left_len:])


def tensor(P: RelPCS, Q: RelPCS, joiner: str = ",") -> RelPCS:
    """Tensor product: cubes are pairs, words act coordinatewise.

    A word on a pair splits positionally: its first ``dim(p)`` letters act
    on the left factor, the rest on the right factor.
    """
    cubes: dict[int, set[str]] = defaultdict(set)
    pair_ids: list[tuple[str, str, int, int]] = []
    for dp, ps in sorted(P.cubes.items()):
        for dq, qs in sorted(Q.cubes.items()):
            for p in sorted(ps):
                for q in sorted(qs):
                    cubes[dp + dq].add(p + joiner + q)
                    pair_ids.append((p, q, dp, dq))
    faces: dict[tuple[str, CubeWord], set[str]] = defaultdict(set)
    for p, q, dp, dq in pair_ids:
        pid = p + joiner + q
        p_rels = [(g, bs) for (a, g), bs in P.faces.items() if a == p]
        q_rels = [(g, bs) for (a, g), bs in Q.faces.items() if a == q]
        p_rels.append((CubeWord.identity(dp), frozenset((p,))))
        q_rels.append((CubeWord.identity(dq), frozenset((q,))))
        for gp, bps in p_rels:
            for gq, bqs in q_rels:
                g = CubeWord(gp.letters + gq.letters)
                if g.is_identity:
                    continue
                for bp in bps:
                    for bq in bqs:
                        faces[(pid, g)].add(bp + joiner + bq)
    return RelPCS(P.dim_bound + Q.dim_bound, cubes, faces)


def _pair_id(cube: str, word: CubeWord) -> str:
    return f"{cube}|{word}"


def upward(P: RelPCS, c: str) -> tuple[RelPCS, CellMorphism]:
    """Upward neighborhood of a cube: all cubes having it as a face.

    Cells are pairs (cube, word along which ``c`` is its face); the pair
    bookkeeping makes one cube of ``P`` appear once per way it sees ``c``.
    Returns the neighborhood and the projection back to ``P``.
    """
    c_dim = P.dim(c)
    pairs: dict[tuple[str, CubeWord], str] = {}
    pairs[(c, CubeWord.identity(c_dim))] = _pair_id(c, CubeWord.identity(c_dim))
    outgoing: dict[str, list[tuple[CubeWord, frozenset[str]]]] = defaultdict(list)
    for (a, g), bs in P.faces.items():
        outgoing[a].append((g, bs))
        if c in bs:
            pairs[(a, g)] = _pair_id(a, g)
    cubes: dict[int, set[str]] = defaultdict(set)
    for (a, _g), pid in pairs.items():
        cubes[P.dim(a)].add(pid)
    faces: dict[tuple[str, CubeWord], set[str]] = defaultdict(set)
    for (a, u), pid in pairs.items():
        for g, bs in outgoing.get(a, ()):
            # the lower pair's word is u read off g's zero slots, provided
            # u matches g on its inserted coordinates
            if any(
                ug != gg for ug, gg in zip(u.letters, g.letters) if gg != ZERO
            ):
                continue
            v = CubeWord(
                tuple(ug for ug, gg in zip(u.letters, g.letters) if gg == ZERO)
            )
            for b in bs:
                if (b, v) in pairs:
                    faces[(pid, g)].add(pairs[(b, v)])
    nbhd = RelPCS(P.dim_bound, cubes, faces)
    proj = CellMorphism(nbhd, P, {pid: a for (a, _g), pid in pairs.items()})
    return nbhd, proj


# The two interval shapes: a single directed edge, and two consecutive
# edges around a central vertex.
def interval_v0() -> RelPCS:
    return relpcs(
        1,
        {0: ["s", "t"], 1: ["p0"]},
        {
            ("p0", CubeWord.parse("-")): ["s"],
            ("p0", CubeWord.parse("+")): ["t"],
        },
        close=False,
    )


def interval_v1() -> RelPCS:
    return relpcs(
        1,
        {0: ["s", "m", "t"], 1: ["e-", "e+"]},
        {
            ("e-", CubeWord.parse("-")): ["s"],
            ("e-", CubeWord.parse("+")): ["m"],
            ("e+", CubeWord.parse("-")): ["m"],
            ("e+", CubeWord.parse("+")): ["t"],
        },
        close=False,
    )


def rename_cells(P: RelPCS, mapping: Mapping[str, str]) -> RelPCS:
    cubes = {d: {mapping[c] for c in cs} for d, cs in P.cubes.items()}
    faces = {
        (mapping[a], g): {mapping[b] for b in bs}
        for (a, g), bs in P.faces.items()
    }
    return RelPCS(P.dim_bound, cubes, faces)


_CENTER_LETTER = {"p0": ZERO, "m": "1", "e-": "-", "e+": "+"}


@lru_cache(maxsize=None)
def brick(epsilon: BrickIndex) -> RelPCS:
    """The euclidean brick over ``epsilon``, with canonical cell names.

    Built as the upward neighborhood of the central cell of the tensor
    product of intervals, then renamed: each cell is the sign pattern
    recording which half (or center) of each subdivided direction it sits
    on.  The unique bottom-dimensional cube is ``min_cube(epsilon)``.
    """
    factors = [interval_v1() if b else interval_v0() for b in epsilon.bits]
    ambient = relpcs(0, {0: ["!"]}, {}, close=False)  # tensor unit
    for f in factors:
        ambient = tensor(ambient, f)
    center = ",".join(["!"] + ["m" if b else "p0" for b in epsilon.bits])
    if not epsilon.bits:
        center = "!"
    nbhd, _proj = upward(ambient, center)
    renaming = {}
    for pid in nbhd.all_cubes():
        cube_id = pid.rsplit("|", 1)[0]
        comps = cube_id.split(",")[1:] if epsilon.bits else []
        renaming[pid] = "".join(_CENTER_LETTER[c] for c in comps)
    return rename_cells(nbhd, renaming)


def min_cube(epsilon: BrickIndex) -> str:
    return str(brick_cells(epsilon).top)


def restrict(P: RelPCS, keep: Iterable[str]) -> RelPCS:
    """Full subobject on a set of cubes; relations touching others drop."""
    keep = set(keep)
    cubes = {d: cs & keep for d, cs in P.cubes.items()}
    faces = {
        (a, g): bs & keep
        for (a, g), bs in P.faces.items()
        if a in keep
    }
    return RelPCS(P.dim_bound, cubes, faces)


def delete_cube(P: RelPCS, cube: str) -> RelPCS:
    return restrict(P, set(P.all_cubes()) - {cube})


def brick_boundary(epsilon: BrickIndex) -> RelPCS:
    """The brick with its minimal cube removed (generating cofibration domain)."""
    return delete_cube(brick(epsilon), min_cube(epsilon))


def is_pcs_morphism(
    X: RelPCS, Y: RelPCS, mapping: Mapping[str, str]
) -> Optional[str]:
    """None if the cell map is a morphism, else a human-readable reason."""
    if set(mapping) != set(X.all_cubes()):
        return "mapping does not cover the source cubes"
    for c, v in mapping.items():
        if v not in Y:
            return f"image {v!r} is not a cube of the target"
        if Y.dim(v) != X.dim(c):
            return f"{c!r} -> {v!r} does not preserve dimension"
    for (a, g), bs in X.faces.items():
        img_faces = Y.faces_of(mapping[a], g)
        for b in bs:
            if mapping[b] not in img_faces:
                return f"face {b!r} of {a!r} at {g} is not preserved"
    return None


def hom_enumerate(
    X: RelPCS,
    Y: RelPCS,
    fixed: Optional[Mapping[str, str]] = None,
    allowed: Optional[Mapping[str, Iterable[str]]] = None,
    injective: bool = False,
) -> list[CellMorphism]:
    """All morphisms ``X -> Y`` by backtracking over cell assignments.

    Cells are processed by dimension descending then identifier; assigning
    a cube immediately narrows the candidate domains of its stored faces
    (forward checking), so dead branches die at the top.  ``fixed`` pins
    cells to images, ``allowed`` restricts candidate sets, ``injective``
    forbids repeated images.
    """
    order = X.all_cubes()
    by_dim: dict[int, list[str]] = {d: sorted(cs) for d, cs in Y.cubes.items()}
    down: dict[str, list[tuple[CubeWord, str]]] = defaultdict(list)
    for (a, g), bs in X.faces.items():
        for b in bs:
            down[a].append((g, b))
    fixed = dict(fixed or {})
    domains: dict[str, frozenset[str]] = {}
    for cell in order:
        base = set(by_dim.get(X.dim(cell), ()))
        if cell in fixed:
            base &= {fixed[cell]}
        if allowed is not None and cell in allowed:
            base &= set(allowed[cell])
        domains[cell] = frozenset(base)
    results: list[CellMorphism] = []
    assignment: dict[str, str] = {}
    used: set[str] = set()

    def search(i: int) -> None:
        if i == len(order):
            results.append(CellMorphism(X, Y, dict(assignment)))
            return
        cell = order[i]
        for v in sorted(domains[cell]):
            if injective and v in used:
                continue
            trail: list[tuple[str, frozenset[str]]] = []
            viable = True
            for g, b in down[cell]:
                narrowed = domains[b] & Y.faces_of(v, g)
                if narrowed != domains[b]:
                    trail.append((b, domains[b]))
                    domains[b] = narrowed
                if not narrowed:
                    viable = False
                    break
            if viable:
                assignment[cell] = v
                used.add(v)
                search(i + 1)
                used.discard(v)
                del assignment[cell]
            for b, old in reversed(trail):
                domains[b] = old

    search(0)
    return results


def is_local_embedding(
    m: CellMorphism,
) -> tuple[bool, Optional[tuple[str, str, CubeWord, str]]]:
    """Distinct cubes sharing a face along the same word must stay distinct."""
    X: RelPCS = m.source
    groups: dict[tuple[CubeWord, str], list[str]] = defaultdict(list)
    for (a, g), bs in X.faces.items():
        for b in bs:
            groups[(g, b)].append(a)
    for (g, b), cofaces in sorted(groups.items(), key=lambda kv: (str(kv[0][0]), kv[0][1])):
        seen: dict[str, str] = {}
        for a in sorted(cofaces):
            v = m(a)
            if v in seen:
                return False, (seen[v], a, g, b)
            seen[v] = a
    return True, None


class EuclideanReport:
    """Certificate (a chart per cube) or a counterexample cube."""

    def __init__(
        self,
        ok: bool,
        charts: dict[str, tuple[BrickIndex, CellMorphism]],
        counterexample: Optional[str],
    ):
        self.ok = ok
        self.charts = charts
        self.counterexample = counterexample

    def __bool__(self) -> bool:
        return self.ok


def euclidean_check(P: RelPCS, n: int) -> EuclideanReport:
    """Look for a chart at every cube: a surjective local embedding from a
    brick of the matching shape onto the cube's upward neighborhood."""
    charts: dict[str, tuple[BrickIndex, CellMorphism]] = {}
    for c in P.all_cubes():
        nbhd, _proj = upward(P, c)
        nbhd_cells = set(nbhd.all_cubes())
        found = None
        for eps in all_brick_indices(n):
            if eps.min_dim != P.dim(c):
                continue
            B = brick(eps)
            for phi in hom_enumerate(B, nbhd):
                if set(phi.mapping.values()) != nbhd_cells:
                    continue
                ok, _w = is_local_embedding(phi)
                if ok:
                    found = (eps, phi)
                    break
            if found:
                break
        if found is None:
            return EuclideanReport(False, charts, c)
        charts[c] = found
    return EuclideanReport(True, charts, None)


def to_json_dict(P: RelPCS) -> dict:
    return {
        "dim_bound": P.dim_bound,
        "cubes": {str(d): sorted(cs) for d, cs in sorted(P.cubes.items())},
        "faces": [
            {"cube": a, "word": str(g), "targets": sorted(bs)}
            for (a, g), bs in sorted(
                P.faces.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))
            )
        ],
    }


def from_json_dict(data: dict) -> RelPCS:
    if not isinstance(data, dict):
        raise FormatError("precubical set must be a JSON object")
    try:
        dim_bound = int(data["dim_bound"])
    except (KeyError, TypeError, ValueError):
        raise FormatError("missing or bad 'dim_bound'")
    cubes_raw = data.get("cubes", {})
    if not isinstance(cubes_raw, dict):
        raise FormatError("'cubes' must map dimensions to identifier lists")
    cubes: dict[int, list[str]] = {}
    for k, ids in cubes_raw.items():
        try:
            d = int(k)
        except ValueError:
            raise FormatError(f"bad dimension key {k!r}")
        if not isinstance(ids, list) or not all(isinstance(i, str) for i in ids):
            raise FormatError(f"cube list for dimension {k} must be strings")
        if len(set(ids)) != len(ids):
            raise FormatError(f"duplicate cube ids in dimension {k}")
        cubes[d] = ids
    faces: dict[tuple[str, CubeWord], set[str]] = defaultdict(set)
    entries = data.get("faces", [])
    if not isinstance(entries, list):
        raise FormatError("'faces' must be a list")
    for entry in entries:
        if not isinstance(entry, dict):
            raise FormatError("face entries must be objects")
        try:
            a = entry["cube"]
            word = entry["word"]
            targets = entry["targets"]
        except KeyError as exc:
            raise FormatError(f"face entry missing {exc}")
        if not isinstance(word, str) or any(ch not in "+-0" for ch in word):
            raise FormatError(f"bad word {word!r}")
        if not isinstance(targets, list):
            raise FormatError("face targets must be a list")
        faces[(a, CubeWord.parse(word))].update(targets)
    return RelPCS(dim_bound, cubes, faces)


class PCSCarrier(Carrier):
    """Colimit and enumeration interface for relational precubical sets."""

    name = "pcs"

    def cells(self, obj: RelPCS) -> list[str]:
        return obj.all_cubes()

    def make_morphism(self, source, target, mapping, check=True) -> CellMorphism:
        if check:
            reason = is_pcs_morphism(source, target, mapping)
            if reason is not None:
                raise ValueError(reason)
        return CellMorphism(source, target, dict(mapping))

    def hom(
        self, source, target, fixed=None, allowed=None, injective=False
    ) -> list[CellMorphism]:
        return hom_enumerate(
            source, target, fixed=fixed, allowed=allowed, injective=injective
        )

    def iso_signature(self, obj: RelPCS) -> dict:
        sigs = {}
        coface_count: dict[str, dict[str, int]] = defaultdict(lambda: defaultdict(int))
        for (a, g), bs in obj.faces.items():
            for b in bs:
                coface_count[b][str(g)] += 1
        for c in obj.all_cubes():
            face_profile = tuple(
                sorted(
                    (str(g), len(bs))
                    for (a, g), bs in obj.faces.items()
                    if a == c
                )
            )
            coface_profile = tuple(sorted(coface_count[c].items()))
            sigs[c] = (obj.dim(c), face_profile, coface_profile)
        return sigs

    def empty(self) -> RelPCS:
        return empty_pcs(0)

    def coproduct(self, objs) -> tuple[RelPCS, list[CellMorphism]]:
        cubes: dict[int, set[str]] = defaultdict(set)
        faces: dict[tuple[str, CubeWord], set[str]] = {}
        injections = []
        bound = max([o.dim_bound for o in objs], default=0)
        for k, obj in enumerate(objs):
            tag = f"{k}/"
            for d, cs in obj.cubes.items():
                cubes[d].update(tag + c for c in cs)
            for (a, g), bs in obj.faces.items():
                faces[(tag + a, g)] = {tag + b for b in bs}
        total = RelPCS(bound, cubes, faces)
        for k, obj in enumerate(objs):
            tag = f"{k}/"
            injections.append(
                CellMorphism(obj, total, {c: tag + c for c in obj.all_cubes()})
            )
        return total, injections

    def quotient(self, obj: RelPCS, pairs) -> tuple[RelPCS, CellMorphism]:
        parent = {c: c for c in obj.all_cubes()}

        def find(x: str) -> str:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in pairs:
            if obj.dim(a) != obj.dim(b):
                raise ValueError(f"cannot merge cubes of different dimension: {a!r}, {b!r}")
            ra, rb = find(a), find(b)
            if ra != rb:
                lo, hi = min(ra, rb), max(ra, rb)
                parent[hi] = lo
        rep = {c: find(c) for c in obj.all_cubes()}
        cubes: dict[int, set[str]] = defaultdict(set)
        for d, cs in obj.cubes.items():
            cubes[d].update(rep[c] for c in cs)
        faces: dict[tuple[str, CubeWord], set[str]] = defaultdict(set)
        for (a, g), bs in obj.faces.items():
            faces[(rep[a], g)].update(rep[b] for b in bs)
        quot = relpcs(obj.dim_bound, cubes, faces, close=True)
        proj = CellMorphism(obj, quot, rep)
        return quot, proj

    def validate_object(self, obj: RelPCS) -> None:
        report = validate(obj)
        if not report.ok:
            raise ValueError(f"invalid precubical set: {report.problems[0]}")


PCS_CARRIER = PCSCarrier()

__all__ = [
    "FormatError",
    "RelPCS",
    "relpcs",
    "saturate",
    "validate",
    "ValidationReport",
    "empty_pcs",
    "tensor",
    "upward",
    "interval_v0",
    "interval_v1",
    "rename_cells",
    "brick",
    "min_cube",
    "restrict",
    "delete_cube",
    "brick_boundary",
    "is_pcs_morphism",
    "hom_enumerate",
    "is_local_embedding",
    "EuclideanReport",
    "euclidean_check",
    "to_json_dict",
    "from_json_dict",
    "PCSCarrier",
    "PCS_CARRIER",
]
