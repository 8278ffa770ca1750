"""Batch front-end: load JSON fixtures, run the pipelines, emit reports.

Exit codes: 0 on success, 1 when a check fails (the report carries the
witness), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import automata as aut
from . import pcs
from . import regex as rx
from . import samples
from .blowup import blowup as compute_blowup
from .blowup import brick_generators, verify_blowup
from .lifting import (
    appendix_identity_suite,
    rlp_with_codiagonal,
    unique_rlp,
    unique_rlp_single,
)
from .words import BrickIndex


class InputError(Exception):
    pass


def _emit(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))


def _load_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")


def _load_pcs(path: str) -> pcs.RelPCS:
    return pcs.from_json_dict(_load_json(path))


def _load_automaton(path: str) -> aut.RelAutomaton:
    return aut.from_json_dict(_load_json(path))


def _word_list(words) -> list[str]:
    return sorted("".join(w) for w in words)


# -- pcs subcommands ----------------------------------------------------------


def cmd_pcs_validate(args) -> int:
    P = _load_pcs(args.file)
    report = pcs.validate(P)
    _emit({"ok": report.ok, "problems": report.problems})
    return 0 if report.ok else 1


def cmd_pcs_blowup(args) -> int:
    P = _load_pcs(args.file)
    report = pcs.validate(P)
    if not report.ok:
        _emit({"ok": False, "problems": report.problems})
        return 1
    result = compute_blowup(P, args.n)
    payload = {
        "blowup": pcs.to_json_dict(result.blowup),
        "beta": dict(sorted(result.beta.mapping.items())),
        "cells_by_dimension": {
            str(d): n for d, n in result.blowup.cube_counts().items()
        },
    }
    if args.provenance:
        payload["provenance"] = result.provenance_json()
    if args.output:
        Path(args.output).write_text(
            json.dumps(pcs.to_json_dict(result.blowup), indent=2, sort_keys=True)
        )
    _emit(payload)
    return 0


def cmd_pcs_euclid(args) -> int:
    P = _load_pcs(args.file)
    report = pcs.euclidean_check(P, args.n)
    payload = {"ok": report.ok}
    if report.ok:
        payload["charts"] = {
            cube: {"epsilon": str(eps), "chart": dict(sorted(phi.mapping.items()))}
            for cube, (eps, phi) in report.charts.items()
        }
    else:
        payload["counterexample"] = report.counterexample
    _emit(payload)
    return 0 if report.ok else 1


def cmd_pcs_verify(args) -> int:
    P = _load_pcs(args.file)
    vreport = pcs.validate(P)
    if not vreport.ok:
        _emit({"ok": False, "problems": vreport.problems})
        return 1
    report = verify_blowup(P, args.n)
    payload = report.summary()
    if not report.lifting.ok:
        payload["lifting_failure"] = {
            "generator": report.lifting.generator,
            "lift_count": report.lifting.lift_count,
        }
    _emit(payload)
    return 0 if report.ok else 1


def cmd_pcs_brick(args) -> int:
    try:
        eps = BrickIndex.parse(args.epsilon)
    except ValueError as exc:
        raise InputError(str(exc))
    _emit(pcs.to_json_dict(pcs.brick(eps)))
    return 0


def _quote(s: str) -> str:
    return json.dumps(s)


def pcs_to_dot(P: pcs.RelPCS) -> str:
    """Cells as nodes ranked by dimension; a face entry with several
    targets goes through a point-shaped surrogate node (DOT has no native
    hyperedges)."""
    shapes = {0: "ellipse", 1: "box"}
    lines = ["digraph precubical {", "  rankdir=BT;"]
    for d in sorted(P.cubes):
        cs = sorted(P.cubes[d])
        lines.append(f"  // dimension {d} ({len(cs)} cells)")
        for c in cs:
            shape = shapes.get(d, "box3d")
            lines.append(f"  {_quote(c)} [shape={shape}];")
        lines.append(
            "  { rank=same; " + " ".join(f"{_quote(c)};" for c in cs) + " }"
        )
    k = 0
    for (a, g), bs in sorted(P.faces.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))):
        targets = sorted(bs)
        if len(targets) == 1:
            lines.append(f"  {_quote(a)} -> {_quote(targets[0])} [label={_quote(str(g))}];")
        else:
            mid = f"rel{k}"
            k += 1
            lines.append(f"  {_quote(mid)} [shape=point, label=\"\"];")
            lines.append(f"  {_quote(a)} -> {_quote(mid)} [label={_quote(str(g))}, arrowhead=none];")
            for b in targets:
                lines.append(f"  {_quote(mid)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def pcs_to_tikz(P: pcs.RelPCS) -> str:
    """Schematic layered figure: one row per dimension, faces as arrows."""
    max_dim = max(P.cubes, default=0)
    if max_dim > 2:
        raise InputError("tikz export supports dimension at most 2")
    lines = ["\\begin{tikzpicture}[->, node distance=12mm]"]
    pos: dict[str, tuple[int, int]] = {}
    styles = {0: "draw, circle, inner sep=1.5pt", 1: "draw", 2: "draw, fill=gray!30"}
    for d in sorted(P.cubes):
        cs = sorted(P.cubes[d])
        lines.append(f"  % dimension {d} ({len(cs)} cells)")
        for i, c in enumerate(cs):
            pos[c] = (i, d)
            lines.append(
                f"  \\node[{styles[d]}] (c{len(pos)-1}) at ({2*i},{2*d}) "
                f"{{{c}}};"
            )
    index = {c: i for i, c in enumerate(pos)}
    for (a, g), bs in sorted(P.faces.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))):
        for b in sorted(bs):
            lines.append(
                f"  \\draw (c{index[a]}) -- node[midway, scale=0.6] {{{g}}} (c{index[b]});"
            )
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def cmd_pcs_export(args) -> int:
    P = _load_pcs(args.file)
    if args.format == "dot":
        sys.stdout.write(pcs_to_dot(P))
    else:
        sys.stdout.write(pcs_to_tikz(P))
    return 0


# -- automata subcommands -----------------------------------------------------


def cmd_aut_lang(args) -> int:
    A = _load_automaton(args.file)
    words = aut.language_upto(A, args.length)
    _emit({"length_bound": args.length, "words": _word_list(words)})
    return 0


def _certificate_json(cert: aut.CofibCertificate) -> list[dict]:
    out = []
    for step in cert.steps:
        out.append(
            {
                "generator": step.generator,
                "labels": list(step.labels),
                "attach": {f"{k[0]}:{k[1]}": f"{v[0]}:{v[1]}" for k, v in step.attach},
                "fresh": {f"{k[0]}:{k[1]}": f"{v[0]}:{v[1]}" for k, v in step.fresh},
            }
        )
    return out


def cmd_aut_cofrep(args) -> int:
    A = _load_automaton(args.file)
    result = aut.cofibrant_replacement(A)
    gens = aut.automata_generators(A.alphabet)
    lift = unique_rlp(aut.AUT_CARRIER, result.beta, gens)
    payload = {
        "replacement": aut.to_json_dict(result.replacement),
        "beta_states": dict(sorted(aut.state_map(result.beta).items())),
        "beta_edges": dict(sorted(aut.edge_map(result.beta).items())),
        "certificate": _certificate_json(result.certificate),
        "unique_rlp": lift.ok,
    }
    _emit(payload)
    return 0 if lift.ok else 1


def cmd_aut_normalize(args) -> int:
    A = _load_automaton(args.file)
    result = aut.normalize(A)
    payload = {"automaton": aut.to_json_dict(result.automaton)}
    if result.warning:
        payload["warning"] = result.warning
    _emit(payload)
    return 0


def cmd_aut_conditions(args) -> int:
    A = _load_automaton(args.file)
    ok, witness = aut.check_conditions(A)
    payload = {"ok": ok}
    if witness:
        payload["witness"] = {"state": witness[0], "edge": witness[1]}
    _emit(payload)
    return 0 if ok else 1


def cmd_aut_verify(args) -> int:
    A = _load_automaton(args.file)
    report = aut.verify_replacement(A, language_bound=args.length)
    payload = report.summary()
    if not report.lifting.ok:
        payload["lifting_failure"] = {
            "generator": report.lifting.generator,
            "lift_count": report.lifting.lift_count,
        }
    _emit(payload)
    return 0 if report.ok else 1


# -- regex subcommands ----------------------------------------------------------


def cmd_rx_compile(args) -> int:
    r = rx.parse(args.expr, ascii_aliases=args.ascii)
    A = rx.compile_regex(r, args.alphabet or "")
    payload = {"regex": str(r), "automaton": aut.to_json_dict(A)}
    if args.length is not None:
        payload["words"] = _word_list(aut.language_upto(A, args.length))
    _emit(payload)
    return 0


def cmd_rx_fuzz(args) -> int:
    report = rx.kleene_fuzz(
        seed=args.seed,
        count=args.count,
        depth=args.depth,
        L=args.length,
        alphabet=tuple(args.alphabet),
    )
    _emit(report.summary())
    print(f"{len(report.mismatches)} mismatches", file=sys.stderr)
    return 0 if report.ok else 1


# -- toolkit --------------------------------------------------------------------


def _appendix_pcs_inputs():
    carrier = pcs.PCS_CARRIER
    gens = brick_generators(1)
    sample = list(gens.positive)
    gens2 = brick_generators(2)
    sample.append(gens2.positive[3])  # the vertex-shaped generator in dim 2
    composable = []
    for name, i in sample:
        composable.append((carrier.initial_morphism(i.source), i))
    spans = []
    circle_blowup = compute_blowup(samples.circle(), 1)
    i1 = gens.positive[1][1]  # boundary of the subdivided interval brick
    for f in pcs.hom_enumerate(i1.source, circle_blowup.blowup):
        spans.append((i1, f))
    return carrier, sample, composable, spans


def _appendix_aut_inputs():
    carrier = aut.AUT_CARRIER
    gens = aut.automata_generators("ab", max_in=1, max_out=1)
    sample = list(gens.positive)
    composable = []
    edge_a = aut.gen_edge(["a", "b"], "a")
    acc_a = aut.gen_accept(["a", "b"], "a")
    composable.append((edge_a, acc_a))
    src_a = aut.gen_source(["a", "b"], "a")
    composable.append((carrier.initial_morphism(src_a.source), src_a))
    spans = []
    loop = samples.loop_a()
    big = aut.RelAutomaton(
        "ab", loop.states, loop.edges, loop.initial, loop.accepting
    )
    for f in carrier.hom(acc_a.source, big):
        spans.append((acc_a, f))
    return carrier, sample, composable, spans


def cmd_toolkit_appendix(args) -> int:
    results = {}
    ok = True
    for name, inputs in (
        ("pcs", _appendix_pcs_inputs()),
        ("automata", _appendix_aut_inputs()),
    ):
        carrier, sample, composable, spans = inputs
        report = appendix_identity_suite(
            carrier, sample, composable=composable, pushout_spans=spans
        )
        lemma_checked = 0
        lemma_ok = True
        for gname, i in sample[:4]:
            p = carrier.identity(i.target)
            lemma_checked += 1
            if unique_rlp_single(carrier, p, i) != rlp_with_codiagonal(carrier, p, i):
                lemma_ok = False
        results[name] = {
            "sum_identity": report.sum_identity,
            "pushout_square": report.pushout_square,
            "composition_identity": report.composition_identity,
            "double_codiagonal_iso": report.double_codiagonal_iso,
            "retract_identity": report.retract_identity,
            "unique_lift_equivalence": lemma_checked if lemma_ok else "failed",
            "failures": [str(f) for f in report.failures],
        }
        ok = ok and report.ok and lemma_ok
    _emit({"ok": ok, "carriers": results})
    return 0 if ok else 1


# -- wiring ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cofib",
        description="blowups of relational precubical sets and homotopical "
        "regex compilation, with every theorem checked on the input",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    p = groups.add_parser("pcs", help="relational precubical sets")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("validate", help="check grading and closure")
    c.add_argument("file")
    c.set_defaults(func=cmd_pcs_validate)
    c = sub.add_parser("blowup", help="compute the blowup and its map")
    c.add_argument("-n", type=int, required=True, help="ambient dimension")
    c.add_argument("file")
    c.add_argument("-o", "--output", help="write the blowup JSON here")
    c.add_argument("--provenance", action="store_true")
    c.set_defaults(func=cmd_pcs_blowup)
    c = sub.add_parser("euclid", help="search for a chart at every cube")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("file")
    c.set_defaults(func=cmd_pcs_euclid)
    c = sub.add_parser("verify", help="run the blowup theorem checks")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("file")
    c.set_defaults(func=cmd_pcs_verify)
    c = sub.add_parser("brick", help="print a euclidean brick")
    c.add_argument("-e", "--epsilon", required=True, help="bit string, e.g. 11")
    c.set_defaults(func=cmd_pcs_brick)
    c = sub.add_parser("export", help="DOT or TikZ figure")
    c.add_argument("--format", choices=["dot", "tikz"], required=True)
    c.add_argument("file")
    c.set_defaults(func=cmd_pcs_export)

    a = groups.add_parser("aut", help="relational automata")
    sub = a.add_subparsers(dest="command", required=True)
    c = sub.add_parser("lang", help="recognized words up to a length")
    c.add_argument("-L", "--length", type=int, required=True)
    c.add_argument("file")
    c.set_defaults(func=cmd_aut_lang)
    c = sub.add_parser("cofrep", help="cofibrant replacement with certificate")
    c.add_argument("file")
    c.set_defaults(func=cmd_aut_cofrep)
    c = sub.add_parser("normalize", help="replacement, one initial state, simple edges")
    c.add_argument("file")
    c.set_defaults(func=cmd_aut_normalize)
    c = sub.add_parser("conditions", help="concatenation-safety conditions")
    c.add_argument("file")
    c.set_defaults(func=cmd_aut_conditions)
    c = sub.add_parser("verify", help="replacement suite: lifting + language")
    c.add_argument("-L", "--length", type=int, default=5)
    c.add_argument("file")
    c.set_defaults(func=cmd_aut_verify)

    r = groups.add_parser("rx", help="regular expressions")
    sub = r.add_subparsers(dest="command", required=True)
    c = sub.add_parser("compile", help="compile to an automaton")
    c.add_argument("expr")
    c.add_argument("--alphabet", default="")
    c.add_argument("--ascii", action="store_true", help="accept 0 and () aliases")
    c.add_argument("-L", "--length", type=int, default=None, help="include words up to L")
    c.set_defaults(func=cmd_rx_compile)
    c = sub.add_parser("fuzz", help="compiler vs recursive semantics")
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--count", type=int, required=True)
    c.add_argument("--depth", type=int, required=True)
    c.add_argument("-L", "--length", type=int, required=True)
    c.add_argument("--alphabet", default="ab")
    c.set_defaults(func=cmd_rx_fuzz)

    t = groups.add_parser("toolkit", help="carrier-agnostic identity suites")
    sub = t.add_subparsers(dest="command", required=True)
    c = sub.add_parser("appendix", help="codiagonal identities by explicit colimits")
    c.set_defaults(func=cmd_toolkit_appendix)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, pcs.FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
