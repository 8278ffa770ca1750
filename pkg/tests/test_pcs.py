"""Relational precubical sets: validation, tensor, neighborhoods, bricks,
morphism enumeration, local embeddings, euclidean certification."""

import itertools

import pytest

from corpus import pcs_corpus
from cofib import samples
from cofib.pcs import (
    PCS_CARRIER,
    brick,
    brick_boundary,
    delete_cube,
    empty_pcs,
    euclidean_check,
    from_json_dict,
    hom_enumerate,
    interval_v0,
    interval_v1,
    is_local_embedding,
    is_pcs_morphism,
    min_cube,
    relpcs,
    tensor,
    to_json_dict,
    upward,
    validate,
)
from cofib.words import BrickIndex, CubeWord, all_brick_indices, brick_cells, word_to_min

W = CubeWord.parse
E = BrickIndex.parse


def test_validate_ok_on_corpus():
    for name, P, _n in pcs_corpus():
        assert validate(P).ok, name


def test_validate_reports_broken_closure():
    P = samples.broken_closure_square()
    report = validate(P)
    assert not report.ok
    witness = report.problems[0]["witness"]
    assert witness == {"cube": "c", "word": "--", "missing": "v"}


def test_validate_rejects_misgraded_face():
    P = relpcs(2, {0: ["v"], 2: ["c"]}, {("c", W("-")): ["v"]}, close=False)
    report = validate(P)
    assert not report.ok
    assert report.problems[0]["kind"] == "grading"


def test_saturation_builds_closure():
    P = samples.one_square_torus()
    assert P.faces_of("c", W("--")) == frozenset({"v"})
    assert P.faces_of("c", W("+-")) == frozenset({"v"})


# -- tensor --------------------------------------------------------------------


def test_tensor_of_intervals_is_closed_square():
    sq = tensor(interval_v0(), interval_v0())
    assert sq.cube_counts() == {0: 4, 1: 4, 2: 1}
    assert validate(sq).ok


def test_tensor_of_subdivided_intervals():
    T = tensor(interval_v1(), interval_v1())
    assert T.cube_counts() == {0: 9, 1: 12, 2: 4}
    assert validate(T).ok
    nbhd, _ = upward(T, "m,m")
    assert nbhd.cube_counts() == {0: 1, 1: 4, 2: 4}
    sig = sorted(PCS_CARRIER.iso_signature(nbhd).values(), key=repr)
    sig_brick = sorted(PCS_CARRIER.iso_signature(brick(E("11"))).values(), key=repr)
    assert PCS_CARRIER.find_isomorphism(nbhd, brick(E("11"))) is not None
    assert sig == sig_brick


def test_tensor_with_empty_is_empty():
    P = samples.circle()
    assert tensor(P, empty_pcs(1)).n_cubes() == 0
    assert tensor(empty_pcs(1), P).n_cubes() == 0


def test_tensor_validates_on_corpus_pairs():
    small = [P for _n, P, _d in [(n, P, d) for n, P, d in pcs_corpus()][:6]]
    for P, Q in itertools.combinations(small, 2):
        if P.n_cubes() * Q.n_cubes() > 60:
            continue
        assert validate(tensor(P, Q)).ok


# -- upward neighborhoods --------------------------------------------------------


def test_upward_of_top_cube_is_single_cell():
    sq = samples.closed_square()
    nbhd, proj = upward(sq, "c")
    assert nbhd.cube_counts() == {2: 1}
    assert set(proj.mapping.values()) == {"c"}


def test_upward_of_circle_vertex_is_the_subdivided_point():
    nbhd, proj = upward(samples.circle(), "v")
    assert nbhd.cube_counts() == {0: 1, 1: 2}
    assert PCS_CARRIER.find_isomorphism(nbhd, brick(E("1"))) is not None


def test_upward_projection_is_a_morphism():
    for name, P, _n in pcs_corpus()[:8]:
        for c in P.all_cubes():
            nbhd, proj = upward(P, c)
            assert validate(nbhd).ok, (name, c)
            assert is_pcs_morphism(nbhd, P, proj.mapping) is None


def test_upward_of_torus_vertex():
    nbhd, _ = upward(samples.one_square_torus(), "v")
    assert nbhd.cube_counts() == {0: 1, 1: 2, 2: 4}


# -- bricks ----------------------------------------------------------------------


def test_brick_cell_counts():
    assert brick(E("00")).cube_counts() == {2: 1}
    assert brick(E("11")).cube_counts() == {0: 1, 1: 4, 2: 4}
    assert brick(E("10")).cube_counts() == {1: 1, 2: 2}
    assert brick(E("01")).cube_counts() == {1: 1, 2: 2}


def test_brick_cells_match_poset_naming():
    for n in range(4):
        for eps in all_brick_indices(n):
            B = brick(eps)
            assert set(B.all_cubes()) == {str(w) for w in brick_cells(eps)}
            assert validate(B).ok
            assert min_cube(eps) in B


def test_brick_min_reached_along_word_to_min():
    for n in range(1, 4):
        for eps in all_brick_indices(n):
            B = brick(eps)
            bottom = min_cube(eps)
            for w in brick_cells(eps):
                if str(w) == bottom:
                    continue
                assert B.faces_of(str(w), word_to_min(w)) == frozenset({bottom})


def test_upward_of_min_is_the_graph_of_word_to_min():
    for n in range(1, 4):
        for eps in all_brick_indices(n):
            B = brick(eps)
            nbhd, proj = upward(B, min_cube(eps))
            pairs = {
                (proj.mapping[pid], g)
                for pid in nbhd.all_cubes()
                for g in [W(pid.rsplit("|", 1)[1])]
            }
            expected = {(str(w), word_to_min(w)) for w in brick_cells(eps)}
            assert pairs == expected


# -- morphism enumeration ---------------------------------------------------------


def naive_hom(X, Y):
    """All-assignments filter; only usable on tiny objects."""
    cells = X.all_cubes()
    pools = [sorted(Y.cubes.get(X.dim(c), ())) for c in cells]
    out = []
    for choice in itertools.product(*pools):
        mapping = dict(zip(cells, choice))
        if is_pcs_morphism(X, Y, mapping) is None:
            out.append(mapping)
    return out


def test_hom_agrees_with_naive_filter():
    objs = [P for _name, P, _n in pcs_corpus() if 0 < P.n_cubes() <= 6][:6]
    for X in objs:
        for Y in objs:
            fast = {m.key() for m in hom_enumerate(X, Y)}
            slow = {
                tuple(sorted(m.items(), key=repr)) for m in naive_hom(X, Y)
            }
            assert fast == slow


def test_hom_brick_to_torus_unique():
    torus = samples.one_square_torus()
    for eps in all_brick_indices(2):
        assert len(hom_enumerate(brick(eps), torus)) == 1


def test_hom_into_empty():
    assert hom_enumerate(samples.open_square(), empty_pcs(2)) == []
    assert len(hom_enumerate(empty_pcs(2), samples.open_square())) == 1


def test_no_map_from_subdivided_point_to_interval():
    assert hom_enumerate(brick(E("1")), samples.interval()) == []


def test_hom_composition_closed():
    circle = samples.circle()
    wedge = relpcs(
        1,
        {0: ["v"], 1: ["e", "f"]},
        {
            ("e", W("-")): ["v"],
            ("e", W("+")): ["v"],
            ("f", W("-")): ["v"],
            ("f", W("+")): ["v"],
        },
    )
    for f in hom_enumerate(circle, wedge):
        for g in hom_enumerate(wedge, circle):
            composite = f.then(g)
            assert is_pcs_morphism(circle, circle, composite.mapping) is None


def test_hom_enumeration_is_deterministic():
    for name, P, _n in pcs_corpus()[:10]:
        first = [m.key() for m in hom_enumerate(P, P)]
        second = [m.key() for m in hom_enumerate(P, P)]
        assert first == second, name
        assert len(first) == len(set(first)), name


# -- local embeddings ------------------------------------------------------------


def test_identity_is_local_embedding():
    P = samples.one_square_torus()
    ok, witness = is_local_embedding(PCS_CARRIER.identity(P))
    assert ok and witness is None


def test_collapsing_edges_with_common_target_is_not_local_embedding():
    B = brick(E("11"))
    quot, proj = PCS_CARRIER.quotient(B, [("-1", "1-")])
    ok, witness = is_local_embedding(proj)
    assert not ok
    a, b, g, c = witness
    assert {a, b} == {"-1", "1-"}
    assert c == "11"
    assert g in (W("+"),)


def test_injective_morphisms_are_local_embeddings():
    B = brick(E("01"))
    for m in hom_enumerate(B, brick(E("11"))):
        if m.is_injective():
            assert is_local_embedding(m)[0]


# -- euclidean certification -------------------------------------------------------


def test_euclidean_examples():
    assert euclidean_check(samples.circle(), 1).ok
    report = euclidean_check(samples.y_graph(), 1)
    assert not report.ok
    assert report.counterexample in {"a", "v"}
    assert not euclidean_check(samples.one_square_torus(), 2).ok


def test_euclidean_charts_cover_all_cubes():
    report = euclidean_check(samples.circle(), 1)
    assert set(report.charts) == {"v", "e"}
    eps, phi = report.charts["v"]
    assert str(eps) == "1"


def test_brick_boundaries_are_euclidean():
    for n in range(1, 3):
        for eps in all_brick_indices(n):
            assert euclidean_check(brick_boundary(eps), n).ok, str(eps)


def test_deleting_makes_holes_visible():
    B = brick(E("11"))
    broken = delete_cube(B, "-1")
    assert not euclidean_check(broken, 2).ok


# -- serialization ------------------------------------------------------------------


def test_json_round_trip():
    for name, P, _n in pcs_corpus():
        data = to_json_dict(P)
        Q = from_json_dict(data)
        assert Q == P, name
        assert to_json_dict(Q) == data, name


def test_json_errors():
    from cofib.pcs import FormatError

    with pytest.raises(FormatError):
        from_json_dict([])
    with pytest.raises(FormatError):
        from_json_dict({"dim_bound": "x"})
    with pytest.raises(FormatError):
        from_json_dict({"dim_bound": 1, "cubes": {"0": ["v", "v"]}})
    with pytest.raises(FormatError):
        from_json_dict(
            {"dim_bound": 1, "cubes": {"1": ["e"]}, "faces": [{"cube": "e", "word": "-x", "targets": []}]}
        )


# -- colimit universal properties ----------------------------------------------------


def test_pushout_universal_property_small():
    carrier = PCS_CARRIER
    boundary = brick_boundary(E("1"))
    i = carrier.make_morphism(
        boundary, brick(E("1")), {c: c for c in boundary.all_cubes()}
    )
    target = samples.circle()
    attach = hom_enumerate(boundary, target)[0]
    pushed, from_brick, from_target = carrier.pushout(i, attach)
    assert validate(pushed).ok
    X = samples.circle()
    for u in hom_enumerate(brick(E("1")), X):
        for v in hom_enumerate(target, X):
            if i.then(u).mapping != attach.then(v).mapping:
                continue
            mediators = [
                w
                for w in hom_enumerate(pushed, X)
                if from_brick.then(w).mapping == u.mapping
                and from_target.then(w).mapping == v.mapping
            ]
            assert len(mediators) == 1


def test_quotient_universal_property_small():
    carrier = PCS_CARRIER
    B = brick(E("01"))
    quot, proj = carrier.quotient(B, [("0-", "0+")])
    assert validate(quot).ok
    X = samples.one_square_torus()
    for f in hom_enumerate(B, X):
        if f.mapping["0-"] != f.mapping["0+"]:
            continue
        mediators = [
            w for w in hom_enumerate(quot, X) if proj.then(w).mapping == f.mapping
        ]
        assert len(mediators) == 1
