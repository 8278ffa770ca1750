"""Fixture corpus shared across the test modules."""

from __future__ import annotations

import random

from cofib import samples
from cofib.automata import RelAutomaton, automaton
from cofib.pcs import PCS_CARRIER, RelPCS, brick, brick_boundary, relpcs, tensor
from cofib.words import BrickIndex, CubeWord

W = CubeWord.parse


def _wedge_two_loops() -> RelPCS:
    return relpcs(
        1,
        {0: ["v"], 1: ["e", "f"]},
        {
            ("e", W("-")): ["v"],
            ("e", W("+")): ["v"],
            ("f", W("-")): ["v"],
            ("f", W("+")): ["v"],
        },
    )


def _line_two_edges() -> RelPCS:
    return relpcs(
        1,
        {0: ["p", "q", "r"], 1: ["e", "f"]},
        {
            ("e", W("-")): ["p"],
            ("e", W("+")): ["q"],
            ("f", W("-")): ["q"],
            ("f", W("+")): ["r"],
        },
    )


def _half_open_edge() -> RelPCS:
    return relpcs(1, {0: ["v"], 1: ["e"]}, {("e", W("-")): ["v"]})


def _bare_edge() -> RelPCS:
    return relpcs(1, {1: ["e"]}, {})


def _doubled_target_edge() -> RelPCS:
    return relpcs(
        1, {0: ["v", "w"], 1: ["e"]}, {("e", W("+")): ["v", "w"]}
    )


def _two_open_squares() -> RelPCS:
    return relpcs(2, {2: ["c1", "c2"]}, {})


def _doubled_face_square() -> RelPCS:
    return relpcs(
        2,
        {1: ["e1", "e2"], 2: ["c"]},
        {("c", W("-0")): ["e1", "e2"]},
    )


def _pillow() -> RelPCS:
    """Two squares sharing their whole boundary."""
    sq = samples.closed_square()
    faces = dict(sq.faces)
    extra = {
        ("c2", g): bs for (a, g), bs in sq.faces.items() if a == "c"
    }
    faces.update(extra)
    cubes = {d: set(cs) for d, cs in sq.cubes.items()}
    cubes[2] = cubes[2] | {"c2"}
    return relpcs(2, cubes, faces)


def _disjoint_circle_interval() -> RelPCS:
    total, _inj = PCS_CARRIER.coproduct([samples.circle(), samples.interval()])
    return total


def pcs_corpus() -> list[tuple[str, RelPCS, int]]:
    """At least twenty named fixtures, each with its ambient dimension."""
    entries: list[tuple[str, RelPCS, int]] = [
        ("torus", samples.one_square_torus(), 2),
        ("circle", samples.circle(), 1),
        ("interval", samples.interval(), 1),
        ("lone-vertex", samples.lone_vertex(), 1),
        ("y-graph", samples.y_graph(), 1),
        ("closed-square", samples.closed_square(), 2),
        ("open-square", samples.open_square(), 2),
        ("empty", relpcs(1, {}, {}), 1),
        ("two-open-squares", _two_open_squares(), 2),
        ("line", _line_two_edges(), 1),
        ("wedge", _wedge_two_loops(), 1),
        ("half-open-edge", _half_open_edge(), 1),
        ("bare-edge", _bare_edge(), 1),
        ("doubled-target", _doubled_target_edge(), 1),
        ("brick-11", brick(BrickIndex.parse("11")), 2),
        ("brick-01", brick(BrickIndex.parse("01")), 2),
        ("brick-11-boundary", brick_boundary(BrickIndex.parse("11")), 2),
        ("cylinder", tensor(samples.circle(), samples.interval()), 2),
        ("torus-tensor", tensor(samples.circle(), samples.circle()), 2),
        ("pillow", _pillow(), 2),
        ("doubled-face-square", _doubled_face_square(), 2),
        ("interval-v1", relpcs(1, {0: ["s", "m", "t"], 1: ["l", "r"]}, {
            ("l", W("-")): ["s"], ("l", W("+")): ["m"],
            ("r", W("-")): ["m"], ("r", W("+")): ["t"],
        }), 1),
        ("circle-at-2", samples.circle(), 2),
        ("wedge-at-2", _wedge_two_loops(), 2),
    ]
    return entries


def euclidean_expectations() -> dict[str, bool]:
    """Ground truth for the euclidean-iff-isomorphism criterion, derived by
    inspecting each fixture's upward neighborhoods."""
    return {
        "torus": False,
        "circle": True,
        "interval": False,
        "lone-vertex": False,
        "y-graph": False,
        "closed-square": False,
        "open-square": True,
        "empty": True,
        "two-open-squares": True,
        "line": False,
        "wedge": False,
        "half-open-edge": False,
        "bare-edge": True,
        "doubled-target": False,
        "brick-11": True,
        "brick-01": True,
        "brick-11-boundary": True,
        "cylinder": False,
        "torus-tensor": True,
        "pillow": False,
        "doubled-face-square": False,
        "interval-v1": False,
        "circle-at-2": False,
        "wedge-at-2": False,
    }


def pcs_sample_maps():
    """Small morphisms for lifting-property sampling in the cube carrier."""
    from cofib.blowup import blowup
    from cofib.lifting import codiagonal

    maps = []
    for name, P, n in pcs_corpus():
        if P.n_cubes() > 6 or n > 1:
            continue
        result = blowup(P, n)
        maps.append((f"beta[{name}]", result.beta))
        maps.append((f"id[{name}]", PCS_CARRIER.identity(P)))
    B = brick(BrickIndex.parse("11"))
    _quot, proj = PCS_CARRIER.quotient(B, [("-1", "1-")])
    maps.append(("collapse", proj))
    return maps


def aut_sample_maps():
    """Small morphisms for lifting-property sampling in the automata carrier."""
    from cofib.automata import AUT_CARRIER, cofibrant_replacement, gen_accept
    from cofib.lifting import codiagonal

    maps = []
    for name, builder in list(samples.AUT_SAMPLES.items())[:5]:
        A = builder()
        res = cofibrant_replacement(A)
        maps.append((f"beta[{name}]", res.beta))
        maps.append((f"id[{name}]", AUT_CARRIER.identity(A)))
    maps.append(("nabla_acc", codiagonal(AUT_CARRIER, gen_accept(["a", "b"], "a"))))
    return maps


def random_automaton(rng: random.Random, max_states: int = 5, max_edges: int = 8,
                     alphabet: str = "abc") -> RelAutomaton:
    n = rng.randint(1, max_states)
    states = [f"s{i}" for i in range(n)]

    def subset(p: float) -> list[str]:
        return [s for s in states if rng.random() < p]

    edges = []
    for _ in range(rng.randint(0, max_edges)):
        edges.append((rng.choice(alphabet), subset(0.4), subset(0.4)))
    return automaton(alphabet, states, edges, subset(0.4), subset(0.4))


def automata_corpus(count: int = 200, seed: int = 20240) -> list[RelAutomaton]:
    rng = random.Random(seed)
    named = [builder() for builder in samples.AUT_SAMPLES.values()]
    rest = [random_automaton(rng) for _ in range(count - len(named))]
    return named + rest
