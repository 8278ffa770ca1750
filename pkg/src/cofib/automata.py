"""Relational labelled automata and their cofibrant replacement.

A relational automaton is a labelled graph whose edges carry *sets* of
sources and targets (possibly empty or plural), plus initial and accepting
state sets.  A word is recognized when some chain of edges carries it from
an initial to an accepting state, one matching source/target per step.

The generating cofibrations build exactly the automata that concatenate
well: initial states only ever gain outgoing edges, accepting states are
reached through a dedicated target per edge, and an internal state is only
added together with its complete star of incident edges.  The cofibrant
replacement below realizes that shape explicitly; its defining contract is
that the projection back to the input has the unique right lifting
property against every generator, which is checked by counting fillers.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Optional, Sequence

from .cells import Carrier, CellMorphism, GeneratorSet
from .lifting import LiftReport, codiagonal, rlp, unique_rlp
from .pcs import FormatError

ST = "st"
ED = "ed"


@dataclass(frozen=True)
class Edge:
    label: str
    sources: frozenset[str]
    targets: frozenset[str]


def _edge(label: str, sources: Iterable[str] = (), targets: Iterable[str] = ()) -> Edge:
    return Edge(label, frozenset(sources), frozenset(targets))


def _natural(eid: str) -> tuple[int, str]:
    return (len(eid), eid)


class RelAutomaton:
    """A finite relational automaton over a fixed alphabet."""

    __slots__ = ("alphabet", "states", "edges", "initial", "accepting")

    def __init__(
        self,
        alphabet: Iterable[str],
        states: Iterable[str],
        edges: Mapping[str, Edge],
        initial: Iterable[str],
        accepting: Iterable[str],
    ):
        self.alphabet = frozenset(alphabet)
        self.states = frozenset(states)
        self.edges = dict(edges)
        self.initial = frozenset(initial)
        self.accepting = frozenset(accepting)
        if not self.initial <= self.states or not self.accepting <= self.states:
            raise ValueError("initial/accepting states must be states")
        for eid, e in self.edges.items():
            if e.label not in self.alphabet:
                raise ValueError(f"edge {eid!r} label {e.label!r} not in alphabet")
            if not e.sources <= self.states or not e.targets <= self.states:
                raise ValueError(f"edge {eid!r} endpoints must be states")

    def edge_ids(self) -> list[str]:
        return sorted(self.edges, key=_natural)

    def in_edges(self, v: str) -> list[str]:
        return [eid for eid in self.edge_ids() if v in self.edges[eid].targets]

    def out_edges(self, v: str) -> list[str]:
        return [eid for eid in self.edge_ids() if v in self.edges[eid].sources]

    def is_simple(self) -> bool:
        """Every edge has exactly one source and one target."""
        return all(
            len(e.sources) == 1 and len(e.targets) == 1 for e in self.edges.values()
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RelAutomaton)
            and self.alphabet == other.alphabet
            and self.states == other.states
            and self.edges == other.edges
            and self.initial == other.initial
            and self.accepting == other.accepting
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"RelAutomaton({len(self.states)} states, {len(self.edges)} edges, "
            f"|I|={len(self.initial)}, |T|={len(self.accepting)})"
        )


def automaton(
    alphabet: Iterable[str],
    states: Iterable[str],
    edges: Sequence[tuple[str, Iterable[str], Iterable[str]]],
    initial: Iterable[str],
    accepting: Iterable[str],
) -> RelAutomaton:
    """Convenience builder; edges are (label, sources, targets) triples."""
    table = {f"e{k}": _edge(l, s, t) for k, (l, s, t) in enumerate(edges)}
    return RelAutomaton(alphabet, states, table, initial, accepting)


def to_json_dict(A: RelAutomaton) -> dict:
    return {
        "alphabet": sorted(A.alphabet),
        "states": sorted(A.states),
        "initial": sorted(A.initial),
        "accepting": sorted(A.accepting),
        "edges": [
            {
                "label": A.edges[eid].label,
                "sources": sorted(A.edges[eid].sources),
                "targets": sorted(A.edges[eid].targets),
            }
            for eid in A.edge_ids()
        ],
    }


def from_json_dict(data: dict) -> RelAutomaton:
    if not isinstance(data, dict):
        raise FormatError("automaton must be a JSON object")
    for key in ("alphabet", "states", "initial", "accepting"):
        value = data.get(key, [])
        if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
            raise FormatError(f"'{key}' must be a list of strings")
    entries = data.get("edges", [])
    if not isinstance(entries, list):
        raise FormatError("'edges' must be a list")
    edges: dict[str, Edge] = {}
    for k, entry in enumerate(entries):
        if not isinstance(entry, dict) or "label" not in entry:
            raise FormatError("edge entries must be objects with a label")
        label = entry["label"]
        sources = entry.get("sources", [])
        targets = entry.get("targets", [])
        if not isinstance(label, str):
            raise FormatError("edge label must be a string")
        if not isinstance(sources, list) or not isinstance(targets, list):
            raise FormatError("edge endpoints must be lists")
        edges[f"e{k}"] = _edge(label, sources, targets)
    try:
        return RelAutomaton(
            data.get("alphabet", []),
            data.get("states", []),
            edges,
            data.get("initial", []),
            data.get("accepting", []),
        )
    except ValueError as exc:
        raise FormatError(str(exc))


# -- language ---------------------------------------------------------------

Word = tuple[str, ...]


def language_upto(A: RelAutomaton, L: int) -> set[Word]:
    """All recognized words of length at most ``L``.

    Depth-first over prefixes with state-set transitions: a letter maps a
    state set to all targets of matching edges touched by it.
    """
    by_label: dict[str, list[Edge]] = defaultdict(list)
    for e in A.edges.values():
        by_label[e.label].append(e)
    words: set[Word] = set()

    def explore(prefix: Word, active: frozenset[str]) -> None:
        if active & A.accepting:
            words.add(prefix)
        if len(prefix) == L:
            return
        for a in sorted(by_label):
            nxt = frozenset().union(
                *(e.targets for e in by_label[a] if e.sources & active)
            )
            if nxt:
                explore(prefix + (a,), nxt)

    explore((), frozenset(A.initial))
    return words


def path_automaton(word: Word, alphabet: Iterable[str]) -> RelAutomaton:
    """The automaton recognizing exactly one word: a simple chain."""
    n = len(word)
    states = [f"q{i}" for i in range(n + 1)]
    edges = {
        f"e{i}": _edge(a, [f"q{i}"], [f"q{i+1}"]) for i, a in enumerate(word)
    }
    return RelAutomaton(alphabet, states, edges, ["q0"], [f"q{n}"])


# -- carrier ----------------------------------------------------------------


class AutomatonCarrier(Carrier):
    """Colimit and enumeration interface for relational automata.

    Cells are tagged pairs: ``("st", state)`` and ``("ed", edge_id)``.
    """

    name = "automata"

    def cells(self, A: RelAutomaton) -> list:
        return [(ST, s) for s in sorted(A.states)] + [
            (ED, e) for e in A.edge_ids()
        ]

    def make_morphism(self, source, target, mapping, check=True) -> CellMorphism:
        if check:
            reason = self._morphism_violation(source, target, mapping)
            if reason is not None:
                raise ValueError(reason)
        return CellMorphism(source, target, dict(mapping))

    def _morphism_violation(
        self, A: RelAutomaton, B: RelAutomaton, mapping: Mapping
    ) -> Optional[str]:
        if set(mapping) != set(self.cells(A)):
            return "mapping does not cover the source cells"
        for cell, image in mapping.items():
            kind, name = cell
            if kind == ST:
                if image[0] != ST or image[1] not in B.states:
                    return f"state {name!r} has a non-state image"
                if name in A.initial and image[1] not in B.initial:
                    return f"initial state {name!r} not sent to an initial state"
                if name in A.accepting and image[1] not in B.accepting:
                    return f"accepting state {name!r} not sent to an accepting state"
            else:
                if image[0] != ED or image[1] not in B.edges:
                    return f"edge {name!r} has a non-edge image"
                e, d = A.edges[name], B.edges[image[1]]
                if e.label != d.label:
                    return f"edge {name!r} changes label"
                for u in e.sources:
                    if mapping[(ST, u)][1] not in d.sources:
                        return f"source {u!r} of {name!r} not preserved"
                for u in e.targets:
                    if mapping[(ST, u)][1] not in d.targets:
                        return f"target {u!r} of {name!r} not preserved"
        return None

    def hom(
        self, A: RelAutomaton, B: RelAutomaton, fixed=None, allowed=None, injective=False
    ) -> list[CellMorphism]:
        """Backtracking over states then edges; assigning a state narrows
        the domains of its incident edges."""
        state_order = sorted(A.states)
        edge_order = A.edge_ids()
        fixed = dict(fixed or {})
        b_sources: dict[str, set[str]] = {}
        b_targets: dict[str, set[str]] = {}

        domains: dict = {}
        for s in state_order:
            base = {
                t
                for t in B.states
                if (s not in A.initial or t in B.initial)
                and (s not in A.accepting or t in B.accepting)
            }
            cell = (ST, s)
            if cell in fixed:
                image = fixed[cell]
                base &= {image[1]} if image[0] == ST else set()
            if allowed is not None and cell in allowed:
                base &= {im[1] for im in allowed[cell] if im[0] == ST}
            domains[cell] = frozenset(base)
        for eid in edge_order:
            e = A.edges[eid]
            base = {d for d, de in B.edges.items() if de.label == e.label}
            cell = (ED, eid)
            if cell in fixed:
                image = fixed[cell]
                base &= {image[1]} if image[0] == ED else set()
            if allowed is not None and cell in allowed:
                base &= {im[1] for im in allowed[cell] if im[0] == ED}
            domains[cell] = frozenset(base)

        incident: dict[str, list[tuple[str, str]]] = defaultdict(list)
        for eid in edge_order:
            e = A.edges[eid]
            for u in e.sources:
                incident[u].append(("s", eid))
            for u in e.targets:
                incident[u].append(("t", eid))

        order = [(ST, s) for s in state_order] + [(ED, e) for e in edge_order]
        results: list[CellMorphism] = []
        assignment: dict = {}
        used: set = set()

        def search(i: int) -> None:
            if i == len(order):
                results.append(CellMorphism(A, B, dict(assignment)))
                return
            cell = order[i]
            kind, name = cell
            for v in sorted(domains[cell]):
                image = (kind, v)
                if injective and image in used:
                    continue
                trail = []
                viable = True
                if kind == ST:
                    for side, eid in incident[name]:
                        ecell = (ED, eid)
                        pool = frozenset(
                            d
                            for d in domains[ecell]
                            if v
                            in (
                                B.edges[d].sources
                                if side == "s"
                                else B.edges[d].targets
                            )
                        )
                        if pool != domains[ecell]:
                            trail.append((ecell, domains[ecell]))
                            domains[ecell] = pool
                        if not pool:
                            viable = False
                            break
                if viable:
                    assignment[cell] = image
                    used.add(image)
                    search(i + 1)
                    used.discard(image)
                    del assignment[cell]
                for ecell, old in reversed(trail):
                    domains[ecell] = old

        search(0)
        return results

    def iso_signature(self, A: RelAutomaton) -> dict:
        sigs: dict = {}
        for s in A.states:
            profile = tuple(
                sorted(
                    (e.label, s in e.sources, s in e.targets)
                    for e in A.edges.values()
                    if s in e.sources or s in e.targets
                )
            )
            sigs[(ST, s)] = (ST, s in A.initial, s in A.accepting, profile)
        for eid, e in A.edges.items():
            sigs[(ED, eid)] = (ED, e.label, len(e.sources), len(e.targets))
        return sigs

    def empty(self) -> RelAutomaton:
        return RelAutomaton([], [], {}, [], [])

    def coproduct(self, objs) -> tuple[RelAutomaton, list[CellMorphism]]:
        alphabet: set[str] = set()
        states: set[str] = set()
        edges: dict[str, Edge] = {}
        initial: set[str] = set()
        accepting: set[str] = set()
        for k, A in enumerate(objs):
            tag = f"{k}/"
            alphabet |= A.alphabet
            states |= {tag + s for s in A.states}
            initial |= {tag + s for s in A.initial}
            accepting |= {tag + s for s in A.accepting}
            for eid, e in A.edges.items():
                edges[tag + eid] = _edge(
                    e.label, (tag + s for s in e.sources), (tag + s for s in e.targets)
                )
        total = RelAutomaton(alphabet, states, edges, initial, accepting)
        injections = []
        for k, A in enumerate(objs):
            tag = f"{k}/"
            mapping = {(ST, s): (ST, tag + s) for s in A.states}
            mapping.update({(ED, e): (ED, tag + e) for e in A.edges})
            injections.append(CellMorphism(A, total, mapping))
        return total, injections

    def quotient(self, A: RelAutomaton, pairs) -> tuple[RelAutomaton, CellMorphism]:
        parent: dict = {c: c for c in self.cells(A)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in pairs:
            if a[0] != b[0]:
                raise ValueError("cannot merge a state with an edge")
            ra, rb = find(a), find(b)
            if ra != rb:
                lo, hi = min(ra, rb), max(ra, rb)
                parent[hi] = lo
        rep = {c: find(c) for c in self.cells(A)}
        label_of: dict[str, str] = {}
        for eid, e in A.edges.items():
            cls = rep[(ED, eid)][1]
            if cls in label_of and label_of[cls] != e.label:
                raise ValueError("cannot merge edges with different labels")
            label_of[cls] = e.label
        states = {rep[(ST, s)][1] for s in A.states}
        initial = {rep[(ST, s)][1] for s in A.initial}
        accepting = {rep[(ST, s)][1] for s in A.accepting}
        sources: dict[str, set[str]] = defaultdict(set)
        targets: dict[str, set[str]] = defaultdict(set)
        for eid, e in A.edges.items():
            cls = rep[(ED, eid)][1]
            sources[cls] |= {rep[(ST, s)][1] for s in e.sources}
            targets[cls] |= {rep[(ST, s)][1] for s in e.targets}
        edges = {
            cls: _edge(label_of[cls], sources[cls], targets[cls]) for cls in label_of
        }
        quot = RelAutomaton(A.alphabet, states, edges, initial, accepting)
        return quot, CellMorphism(A, quot, rep)

    def validate_object(self, A: RelAutomaton) -> None:
        RelAutomaton(A.alphabet, A.states, A.edges, A.initial, A.accepting)


AUT_CARRIER = AutomatonCarrier()


def state_map(m: CellMorphism) -> dict[str, str]:
    return {c[1]: v[1] for c, v in m.mapping.items() if c[0] == ST}


def edge_map(m: CellMorphism) -> dict[str, str]:
    return {c[1]: v[1] for c, v in m.mapping.items() if c[0] == ED}


def rename(A: RelAutomaton, states: Mapping[str, str], edges: Mapping[str, str]) -> RelAutomaton:
    return RelAutomaton(
        A.alphabet,
        (states[s] for s in A.states),
        {
            edges[eid]: _edge(
                e.label, (states[s] for s in e.sources), (states[s] for s in e.targets)
            )
            for eid, e in A.edges.items()
        },
        (states[s] for s in A.initial),
        (states[s] for s in A.accepting),
    )


def canonical_rename(A: RelAutomaton) -> RelAutomaton:
    states = {s: f"q{i}" for i, s in enumerate(sorted(A.states))}
    edges = {e: f"e{i}" for i, e in enumerate(A.edge_ids())}
    return rename(A, states, edges)


# -- generating cofibrations --------------------------------------------------


def gen_initial(alphabet: Iterable[str], accepting: bool) -> CellMorphism:
    cod = RelAutomaton(alphabet, ["q"], {}, ["q"], ["q"] if accepting else [])
    return CellMorphism(AUT_CARRIER.empty(), cod, {})


def gen_edge(alphabet: Iterable[str], label: str) -> CellMorphism:
    cod = RelAutomaton(alphabet, [], {"e": _edge(label)}, [], [])
    return CellMorphism(AUT_CARRIER.empty(), cod, {})


def gen_source(alphabet: Iterable[str], label: str) -> CellMorphism:
    dom = RelAutomaton(alphabet, ["q"], {"e": _edge(label)}, ["q"], [])
    cod = RelAutomaton(alphabet, ["q"], {"e": _edge(label, ["q"])}, ["q"], [])
    return CellMorphism(dom, cod, {(ST, "q"): (ST, "q"), (ED, "e"): (ED, "e")})


def gen_accept(alphabet: Iterable[str], label: str) -> CellMorphism:
    dom = RelAutomaton(alphabet, [], {"e": _edge(label)}, [], [])
    cod = RelAutomaton(
        alphabet, ["t"], {"e": _edge(label, (), ["t"])}, [], ["t"]
    )
    return CellMorphism(dom, cod, {(ED, "e"): (ED, "e")})


def gen_internal(
    alphabet: Iterable[str], in_labels: Sequence[str], out_labels: Sequence[str]
) -> CellMorphism:
    edges_dom = {}
    for i, a in enumerate(in_labels):
        edges_dom[f"in{i}"] = _edge(a)
    for j, b in enumerate(out_labels):
        edges_dom[f"out{j}"] = _edge(b)
    dom = RelAutomaton(alphabet, [], edges_dom, [], [])
    edges_cod = {}
    for i, a in enumerate(in_labels):
        edges_cod[f"in{i}"] = _edge(a, (), ["q"])
    for j, b in enumerate(out_labels):
        edges_cod[f"out{j}"] = _edge(b, ["q"], ())
    cod = RelAutomaton(alphabet, ["q"], edges_cod, [], [])
    return CellMorphism(dom, cod, {(ED, e): (ED, e) for e in edges_dom})


def automata_generators(
    alphabet: Iterable[str], max_in: int = 2, max_out: int = 2
) -> GeneratorSet:
    """The generator family over an alphabet, internal stars up to the
    given arities, with codiagonals computed by self-pushout.

    Squares against an internal-star generator only constrain through the
    *sets* of edges hitting the new state, so checking arities up to 2 is
    exact for the whole family: a failure at any arity forces one at
    (1,1), (1,2) or (2,1).
    """
    letters = sorted(set(alphabet))
    positive: list[tuple[str, CellMorphism]] = [
        ("initial", gen_initial(letters, accepting=False)),
        ("initial_accepting", gen_initial(letters, accepting=True)),
    ]
    for a in letters:
        positive.append((f"edge({a})", gen_edge(letters, a)))
    for a in letters:
        positive.append((f"source({a})", gen_source(letters, a)))
    for a in letters:
        positive.append((f"accept({a})", gen_accept(letters, a)))
    for m in range(1, max_in + 1):
        for n in range(1, max_out + 1):
            for ins in combinations_with_replacement(letters, m):
                for outs in combinations_with_replacement(letters, n):
                    name = f"internal({','.join(ins)}|{','.join(outs)})"
                    positive.append((name, gen_internal(letters, ins, outs)))
    nablas = tuple(
        (f"nabla[{name}]", codiagonal(AUT_CARRIER, f)) for name, f in positive
    )
    return GeneratorSet(tuple(positive), nablas)


def check_conditions(A: RelAutomaton) -> tuple[bool, Optional[tuple[str, str]]]:
    """Initial states have only outgoing edges; accepting non-initial
    states have only incoming edges.  Returns a (state, edge) witness."""
    for eid in A.edge_ids():
        e = A.edges[eid]
        for v in sorted(e.targets):
            if v in A.initial:
                return False, (v, eid)
        for v in sorted(e.sources):
            if v in A.accepting and v not in A.initial:
                return False, (v, eid)
    return True, None


# -- cofibrant replacement ----------------------------------------------------


@dataclass(frozen=True)
class CertStep:
    """One pushout in a build script: which generator, where to attach it,
    and what to call the cells it creates."""

    generator: str
    labels: tuple[str, ...]
    attach: tuple[tuple, ...]
    fresh: tuple[tuple, ...]


@dataclass(frozen=True)
class CofibCertificate:
    """Ordered build script; replaying it from the empty automaton by
    pushouts must reproduce the object exactly."""

    alphabet: tuple[str, ...]
    steps: tuple[CertStep, ...]


def _generator_instance(alphabet, name: str, labels: tuple[str, ...]) -> CellMorphism:
    if name == "initial":
        return gen_initial(alphabet, accepting=False)
    if name == "initial_accepting":
        return gen_initial(alphabet, accepting=True)
    if name == "edge":
        return gen_edge(alphabet, labels[0])
    if name == "source":
        return gen_source(alphabet, labels[0])
    if name == "accept":
        return gen_accept(alphabet, labels[0])
    if name == "internal":
        sep = labels.index("|")
        return gen_internal(alphabet, labels[:sep], labels[sep + 1 :])
    raise ValueError(f"unknown generator {name!r}")


@dataclass
class ReplacementResult:
    replacement: RelAutomaton
    beta: CellMorphism
    certificate: CofibCertificate


def _fresh_names(A: RelAutomaton) -> tuple[dict, dict, dict]:
    """Deterministic names for the replacement's states, unique by construction."""
    taken: set[str] = set()

    def claim(base: str) -> str:
        name = base
        k = 0
        while name in taken:
            k += 1
            name = f"{base}#{k}"
        taken.add(name)
        return name

    init_name = {v: claim(f"init({v})") for v in sorted(A.initial)}
    acc_name = {
        (eid, v): claim(f"acc({eid},{v})")
        for eid in A.edge_ids()
        for v in sorted(A.edges[eid].targets & A.accepting)
    }
    internal = [
        v for v in sorted(A.states) if A.in_edges(v) and A.out_edges(v)
    ]
    int_name = {v: claim(f"int({v})") for v in internal}
    return init_name, acc_name, int_name


def cofibrant_replacement(A: RelAutomaton) -> ReplacementResult:
    """Rebuild an automaton in the shape the generators can produce.

    Every edge survives with its label.  Each initial state gets a copy
    carrying only its outgoing edges; each accepting target of an edge
    gets its own accepting copy reached only by that edge; each state with
    both incoming and outgoing edges gets one internal copy carrying its
    full star.  The projection sends every copy back to its original.
    """
    init_name, acc_name, int_name = _fresh_names(A)
    states = set(init_name.values()) | set(acc_name.values()) | set(int_name.values())
    initial = set(init_name.values())
    accepting = {init_name[v] for v in A.initial & A.accepting}
    accepting |= set(acc_name.values())
    edges: dict[str, Edge] = {}
    for eid in A.edge_ids():
        e = A.edges[eid]
        sources = {init_name[v] for v in e.sources & A.initial}
        sources |= {int_name[v] for v in e.sources if v in int_name}
        targets = {acc_name[(eid, v)] for v in e.targets & A.accepting}
        targets |= {int_name[v] for v in e.targets if v in int_name}
        edges[eid] = _edge(e.label, sources, targets)
    replacement = RelAutomaton(A.alphabet, states, edges, initial, accepting)

    mapping = {(ED, eid): (ED, eid) for eid in A.edges}
    for v, name in init_name.items():
        mapping[(ST, name)] = (ST, v)
    for (eid, v), name in acc_name.items():
        mapping[(ST, name)] = (ST, v)
    for v, name in int_name.items():
        mapping[(ST, name)] = (ST, v)
    beta = AUT_CARRIER.make_morphism(replacement, A, mapping)

    steps: list[CertStep] = []
    for v in sorted(A.initial):
        kind = "initial_accepting" if v in A.accepting else "initial"
        steps.append(
            CertStep(kind, (), (), (((ST, "q"), (ST, init_name[v])),))
        )
    for eid in A.edge_ids():
        steps.append(
            CertStep(
                "edge",
                (A.edges[eid].label,),
                (),
                (((ED, "e"), (ED, eid)),),
            )
        )
    for v in sorted(A.initial):
        for eid in A.out_edges(v):
            steps.append(
                CertStep(
                    "source",
                    (A.edges[eid].label,),
                    (
                        ((ST, "q"), (ST, init_name[v])),
                        ((ED, "e"), (ED, eid)),
                    ),
                    (),
                )
            )
    for eid in A.edge_ids():
        for v in sorted(A.edges[eid].targets & A.accepting):
            steps.append(
                CertStep(
                    "accept",
                    (A.edges[eid].label,),
                    (((ED, "e"), (ED, eid)),),
                    (((ST, "t"), (ST, acc_name[(eid, v)])),),
                )
            )
    for v in sorted(int_name):
        ins = A.in_edges(v)
        outs = A.out_edges(v)
        labels = tuple(A.edges[e].label for e in ins) + ("|",) + tuple(
            A.edges[e].label for e in outs
        )
        attach = tuple(
            ((ED, f"in{i}"), (ED, eid)) for i, eid in enumerate(ins)
        ) + tuple(((ED, f"out{j}"), (ED, eid)) for j, eid in enumerate(outs))
        steps.append(
            CertStep("internal", labels, attach, (((ST, "q"), (ST, int_name[v])),))
        )
    certificate = CofibCertificate(tuple(sorted(A.alphabet)), tuple(steps))
    return ReplacementResult(replacement, beta, certificate)


def replay_certificate(cert: CofibCertificate) -> RelAutomaton:
    """Re-run a build script from the empty automaton by real pushouts,
    renaming each step's new cells to their recorded names."""
    current = RelAutomaton(cert.alphabet, [], {}, [], [])
    for step in cert.steps:
        gen = _generator_instance(cert.alphabet, step.generator, step.labels)
        attach = AUT_CARRIER.make_morphism(gen.source, current, dict(step.attach))
        pushed, from_cod, from_cur = AUT_CARRIER.pushout(gen, attach)
        fresh = dict(step.fresh)
        state_names: dict[str, str] = {}
        edge_names: dict[str, str] = {}
        for s in current.states:
            state_names[from_cur.mapping[(ST, s)][1]] = s
        for e in current.edges:
            edge_names[from_cur.mapping[(ED, e)][1]] = e
        gen_image = set(gen.mapping.values())
        for cell in AUT_CARRIER.cells(gen.target):
            if cell in gen_image:
                continue
            kind, name = cell
            target = fresh[cell][1]
            if kind == ST:
                state_names[from_cod.mapping[cell][1]] = target
            else:
                edge_names[from_cod.mapping[cell][1]] = target
        current = rename(pushed, state_names, edge_names)
    return current


# -- right adjoint, normalization ---------------------------------------------


def to_simple(A: RelAutomaton) -> RelAutomaton:
    """Split every edge into one copy per (source, target) pair.

    This is the right adjoint to viewing ordinary automata as relational
    ones: states and markers are untouched, and maps from a simple
    automaton into the result correspond exactly to relational maps into
    the input.
    """
    edges: dict[str, Edge] = {}
    k = 0
    for eid in A.edge_ids():
        e = A.edges[eid]
        for u in sorted(e.sources):
            for v in sorted(e.targets):
                edges[f"d{k}"] = _edge(e.label, [u], [v])
                k += 1
    return RelAutomaton(A.alphabet, A.states, edges, A.initial, A.accepting)


def merge_initial_states(A: RelAutomaton) -> tuple[RelAutomaton, CellMorphism]:
    inits = sorted(A.initial)
    pairs = [((ST, inits[0]), (ST, v)) for v in inits[1:]]
    return AUT_CARRIER.quotient(A, pairs)


@dataclass
class NormalizeResult:
    automaton: RelAutomaton
    warning: Optional[str] = None


def normalize(A: RelAutomaton) -> NormalizeResult:
    """Cofibrant replacement, one initial state, then back to simple edges.

    The result recognizes the same words, has a unique initial state, and
    satisfies the concatenation-safety conditions.  An automaton with no
    initial state recognizes nothing and is returned unchanged.
    """
    if not A.initial:
        return NormalizeResult(A, warning="no initial state; nothing to normalize")
    replaced = cofibrant_replacement(A).replacement
    merged, _proj = merge_initial_states(replaced)
    return NormalizeResult(canonical_rename(to_simple(merged)))


# -- verification -------------------------------------------------------------


@dataclass
class ReplacementReport:
    edge_count_ok: bool
    state_formula_ok: bool
    conditions_ok: bool
    lifting: LiftReport
    codiagonal_lifting: LiftReport
    language_ok: bool
    replay_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.edge_count_ok
            and self.state_formula_ok
            and self.conditions_ok
            and self.lifting.ok
            and self.codiagonal_lifting.ok
            and self.language_ok
            and self.replay_ok
        )

    def summary(self) -> dict:
        return {
            "edge_count_preserved": self.edge_count_ok,
            "state_formula_exact": self.state_formula_ok,
            "conditions": self.conditions_ok,
            "unique_rlp": self.lifting.ok,
            "codiagonal_rlp": self.codiagonal_lifting.ok,
            "language_preserved": self.language_ok,
            "certificate_replays": self.replay_ok,
            "ok": self.ok,
        }


def verify_replacement(
    A: RelAutomaton,
    result: Optional[ReplacementResult] = None,
    language_bound: int = 5,
    check_codiagonals: bool = True,
) -> ReplacementReport:
    if result is None:
        result = cofibrant_replacement(A)
    R = result.replacement
    internal = sum(1 for v in A.states if A.in_edges(v) and A.out_edges(v))
    expected_states = (
        len(A.initial)
        + sum(len(e.targets & A.accepting) for e in A.edges.values())
        + internal
    )
    gens = automata_generators(A.alphabet | R.alphabet)
    lifting = unique_rlp(AUT_CARRIER, result.beta, gens)
    if check_codiagonals:
        codiag = rlp(AUT_CARRIER, result.beta, gens.codiagonals)
    else:
        codiag = LiftReport(True, 0)
    return ReplacementReport(
        edge_count_ok=len(R.edges) == len(A.edges),
        state_formula_ok=len(R.states) == expected_states,
        conditions_ok=check_conditions(R)[0],
        lifting=lifting,
        codiagonal_lifting=codiag,
        language_ok=language_upto(R, language_bound) == language_upto(A, language_bound),
        replay_ok=replay_certificate(result.certificate) == R,
    )


__all__ = [
    "Edge",
    "RelAutomaton",
    "automaton",
    "to_json_dict",
    "from_json_dict",
    "Word",
    "language_upto",
    "path_automaton",
    "AutomatonCarrier",
    "AUT_CARRIER",
    "state_map",
    "edge_map",
    "rename",
    "canonical_rename",
    "gen_initial",
    "gen_edge",
    "gen_source",
    "gen_accept",
    "gen_internal",
    "automata_generators",
    "check_conditions",
    "CertStep",
    "CofibCertificate",
    "ReplacementResult",
    "cofibrant_replacement",
    "replay_certificate",
    "to_simple",
    "merge_initial_states",
    "NormalizeResult",
    "normalize",
    "ReplacementReport",
    "verify_replacement",
]
