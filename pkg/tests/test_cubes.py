import itertools
import random

import pytest

from gpdkit.crossed import CrossedModuleData
from gpdkit.cubes import (
    EDGE_SEAMS,
    FACE_SLOTS,
    Cube,
    commutativity_oracle,
    compose_cubes,
    enumerate_cubes,
    fold_five_faces,
    is_commutative_cube,
    make_cube,
    random_commutative_cube,
    random_cube,
)
from gpdkit.errors import EdgeMismatch, PreconditionFailed
from gpdkit.finite import cyclic_group, group_as_groupoid, trivial_group
from gpdkit.squares import Square, identity_square


def shadow_module():
    """Nontrivial kernel: a cyclic fiber over the one-point base."""
    c3 = cyclic_group(3)
    return CrossedModuleData(
        "c3shadow",
        group_as_groupoid(trivial_group(), name="pt"),
        {"*": c3},
        {"*": {x: "e" for x in c3.elements}},
        {(x, "e"): x for x in c3.elements},
    )


def identity_cube(xm, obj="*"):
    e = identity_square(xm, obj)
    return make_cube(e, e, e, e, e, e)


def test_seam_table_covers_each_edge_twice():
    # every (slot, edge) pair occurs exactly once across the twelve seams
    slots = [(s, e) for seam in EDGE_SEAMS for (s, e) in seam]
    assert len(slots) == 24
    assert len(set(slots)) == 24
    assert {s for s, _ in slots} == set(FACE_SLOTS)


def test_identity_cube_is_commutative(a3s3):
    c = identity_cube(a3s3)
    assert fold_five_faces(c) == identity_square(a3s3, "*")
    assert is_commutative_cube(c)
    assert commutativity_oracle(c)


def test_cube_requires_matching_seams(a3s3, a3s3_model):
    c = random_commutative_cube(a3s3_model, random.Random(3))
    faces = dict(c.faces)
    other = next(
        s for s in a3s3_model.squares if s.left != faces["d3+"].left
    )
    faces["d3+"] = other
    with pytest.raises(EdgeMismatch):
        Cube(faces)


def test_enumerate_c2_cubes(sq_c2):
    cubes = list(enumerate_cubes(sq_c2))
    assert len(cubes) == 128
    # oracle: edge assignments satisfying all six face words in the
    # two-element group; the face-word equations have rank 5 over GF(2)
    edges = list(itertools.product((0, 1), repeat=12))
    (E100, E101, E110, E111, E200, E201, E210, E211, E300, E301, E310, E311) = range(12)
    face_edges = [
        (E300, E201, E301, E200),  # lid: top,right,bottom,left
        (E310, E211, E311, E210),  # base
        (E300, E101, E310, E100),  # west
        (E301, E111, E311, E110),  # east
        (E200, E110, E210, E100),  # front
        (E201, E111, E211, E101),  # back
    ]
    count = sum(
        1
        for assign in edges
        if all(
            (assign[t] + assign[r] + assign[b] + assign[l]) % 2 == 0
            for t, r, b, l in face_edges
        )
    )
    assert count == 128


def test_all_c2_cubes_commutative(sq_c2):
    for c in enumerate_cubes(sq_c2):
        assert is_commutative_cube(c)
        assert commutativity_oracle(c)


def test_compose_cubes_all_directions(sq_c2):
    cubes = list(enumerate_cubes(sq_c2))
    slot = {1: ("d1+", "d1-"), 2: ("d2+", "d2-"), 3: ("d3+", "d3-")}
    composed = 0
    for d in (1, 2, 3):
        plus, minus = slot[d]
        for c1, c2 in itertools.product(cubes, repeat=2):
            if c1.face(plus) != c2.face(minus):
                continue
            comp = compose_cubes(c1, c2, d)
            composed += 1
            assert is_commutative_cube(comp)
    assert composed > 0


def test_compose_rejects_mismatched(sq_c2):
    cubes = list(enumerate_cubes(sq_c2))
    c1 = cubes[0]
    c2 = next(c for c in cubes if c.face("d3-") != c1.face("d3+"))
    with pytest.raises(EdgeMismatch):
        compose_cubes(c1, c2, 3)
    with pytest.raises(PreconditionFailed):
        compose_cubes(c1, c1, 4)


def test_sampled_lambda_composites_commutative(a3s3_model):
    rng = random.Random(21)
    for d in (1, 2, 3):
        for _ in range(30):
            if d == 1:
                lower = random_commutative_cube(a3s3_model, rng)
                upper = random_commutative_cube(
                    a3s3_model, rng, fixed=("d1+", lower.face("d1-"))
                )
                comp = compose_cubes(upper, lower, 1)
            elif d == 2:
                c1 = random_commutative_cube(a3s3_model, rng)
                c2 = random_commutative_cube(
                    a3s3_model, rng, fixed=("d2-", c1.face("d2+"))
                )
                comp = compose_cubes(c1, c2, 2)
            else:
                c1 = random_commutative_cube(a3s3_model, rng)
                c2 = random_commutative_cube(
                    a3s3_model, rng, fixed=("d3-", c1.face("d3+"))
                )
                comp = compose_cubes(c1, c2, 3)
            assert is_commutative_cube(comp)
            assert commutativity_oracle(comp)


def test_oracle_agrees_on_lambda_models(a3s3_model, aut_s3_model):
    rng = random.Random(22)
    for model in (a3s3_model, aut_s3_model):
        for _ in range(50):
            c = random_cube(model, rng)
            assert commutativity_oracle(c) == is_commutative_cube(c)


def test_five_identity_faces_nonthin_lid():
    xm = shadow_module()
    e = identity_square(xm, "*")
    lid = Square(xm, "t", "e", "e", "e", "e")
    cube = make_cube(lid, e, e, e, e, e)
    assert not is_commutative_cube(cube)
    assert fold_five_faces(cube) == e


def test_perturbed_face_detected(a3s3, a3s3_model):
    c = random_commutative_cube(a3s3_model, random.Random(23))
    front = c.face("d3-")
    other_elt = next(
        m for m in a3s3.fibers["*"].elements if m != front.elt
    )
    fake = Square(a3s3, other_elt, front.top, front.right, front.bottom, front.left)
    perturbed = make_cube(
        c.face("d1-"), c.face("d1+"), c.face("d2-"), c.face("d2+"), fake, c.face("d3+")
    )
    assert not is_commutative_cube(perturbed)


def test_oracle_needs_one_object(a3s3):
    from gpdkit.crossed import trivial_crossed_module
    from gpdkit.finite import interval_finite_groupoid

    xm = trivial_crossed_module(interval_finite_groupoid())
    c = identity_cube(xm, "0")
    assert is_commutative_cube(c)
    with pytest.raises(PreconditionFailed):
        commutativity_oracle(c)
