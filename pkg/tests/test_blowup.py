"""Blowup computation and the theorem checks on the fixture corpus."""

import pytest

from corpus import euclidean_expectations, pcs_corpus
from cofib import samples
from cofib.blowup import (
    blowup,
    brick_colimit_check,
    brick_generators,
    induced_map,
    verify_blowup,
)
from cofib.pcs import (
    PCS_CARRIER,
    hom_enumerate,
    relpcs,
    validate,
)
from cofib.words import BrickIndex, CubeWord, all_brick_indices

W = CubeWord.parse
E = BrickIndex.parse


def test_torus_blowup_is_the_torus():
    result = blowup(samples.one_square_torus(), 2)
    B = result.blowup
    assert B.cube_counts() == {0: 1, 1: 2, 2: 1}
    (square,) = B.cubes[2]
    vertical, horizontal = sorted(B.cubes[1])
    assert B.faces_of(square, W("0-")) == B.faces_of(square, W("0+"))
    assert B.faces_of(square, W("-0")) == B.faces_of(square, W("+0"))
    assert B.faces_of(square, W("0-")) != B.faces_of(square, W("-0"))
    assert {result.beta.mapping[e] for e in B.cubes[1]} == {"e"}
    assert result.beta.mapping[square] == "c"
    assert validate(B).ok


def test_blowup_of_single_vertex_is_empty():
    result = blowup(samples.lone_vertex(), 1)
    assert result.blowup.n_cubes() == 0


def test_blowup_of_interval_is_one_open_edge():
    result = blowup(samples.interval(), 1)
    assert result.blowup.cube_counts() == {1: 1}
    assert set(result.beta.mapping.values()) == {"e"}


def test_blowup_of_circle_is_isomorphic_to_it():
    result = blowup(samples.circle(), 1)
    assert PCS_CARRIER.is_isomorphism(result.beta)


def test_blowup_of_y_graph():
    result = blowup(samples.y_graph(), 1)
    assert result.blowup.cube_counts() == {0: 2, 1: 3}
    report = verify_blowup(samples.y_graph(), 1, result)
    assert report.euclidean.ok and report.lifting.ok
    assert not report.input_euclidean.ok


def test_blowup_grading_preserved_by_beta():
    for name, P, n in pcs_corpus():
        result = blowup(P, n)
        for cube in result.blowup.all_cubes():
            assert result.blowup.dim(cube) == P.dim(result.beta.mapping[cube]), name


def test_blowup_validates_on_corpus():
    for name, P, n in pcs_corpus():
        assert validate(blowup(P, n).blowup).ok, name


def test_blowup_rejects_invalid_input():
    with pytest.raises(ValueError):
        blowup(samples.broken_closure_square(), 2)


def test_blowup_idempotent_up_to_isomorphism():
    for name, P, n in pcs_corpus():
        if P.n_cubes() > 8:
            continue
        once = blowup(P, n).blowup
        twice = blowup(once, n).blowup
        assert PCS_CARRIER.find_isomorphism(twice, once) is not None, name


def test_blowup_provenance_lists_every_cube():
    result = blowup(samples.one_square_torus(), 2)
    entries = result.provenance_json()
    assert {e["cube"] for e in entries} == set(result.blowup.all_cubes())
    assert {e["epsilon"] for e in entries} == {"00", "01", "10", "11"}


def test_postcomposition_induces_a_map_of_blowups():
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
    source = blowup(circle, 1)
    target = blowup(wedge, 1)
    for alpha in hom_enumerate(circle, wedge):
        induced = induced_map(source, target, alpha)
        for cube in source.blowup.all_cubes():
            left = alpha.mapping[source.beta.mapping[cube]]
            right = target.beta.mapping[induced.mapping[cube]]
            assert left == right


def test_verify_blowup_on_corpus_matches_expectations():
    expect = euclidean_expectations()
    for name, P, n in pcs_corpus():
        report = verify_blowup(P, n)
        assert report.ok, name
        assert report.input_euclidean.ok == expect[name], name


def test_brick_colimit_examples():
    assert brick_colimit_check(E("11"))
    assert brick_colimit_check(E("00"))
    assert brick_colimit_check(E("101"))


def test_brick_colimit_all_small_shapes():
    for n in range(0, 4):
        for eps in all_brick_indices(n):
            assert brick_colimit_check(eps), str(eps)


def test_brick_generator_domains_are_the_boundaries():
    gens = dict(brick_generators(2).positive)
    i = gens["i_11"]
    assert i.source.n_cubes() == 8
    assert i.target.n_cubes() == 9
