import pytest

from gpdkit.errors import (
    BaseNotInComponent,
    Disconnected,
    InvalidPresentation,
    TreeInvalid,
)
from gpdkit.presentations import (
    GroupoidPresentation,
    discrete_presentation,
    interval_groupoid,
    spanning_tree,
    tree_paths,
)
from gpdkit.words import ArrowGen, Word, free_reduce


def circle():
    return GroupoidPresentation(
        "circle", ("0", "1"), (ArrowGen("a", "0", "1"), ArrowGen("b", "0", "1"))
    )


def test_interval_shape():
    iv = interval_groupoid()
    assert len(iv.objects) == 2
    assert len(iv.generators) == 1
    assert len(iv.relations) == 0


def test_interval_free_groupoid_has_four_arrows():
    # oracle: enumerate freely reduced words by breadth-first extension
    iv = interval_groupoid()
    gen = iv.generators[0]
    seen = set()
    frontier = [Word(o, ()) for o in iv.objects]
    while frontier:
        nxt = []
        for w in frontier:
            key = (w.base, w.letters)
            if key in seen:
                continue
            seen.add(key)
            for exp in (1, -1):
                if (gen.src if exp == 1 else gen.dst) == w.end:
                    r = free_reduce(Word(w.base, w.letters + ((gen, exp),)))
                    if (r.base, r.letters) not in seen:
                        nxt.append(r)
        frontier = nxt
    assert len(seen) == 4


def test_presentation_validation():
    with pytest.raises(InvalidPresentation):
        GroupoidPresentation("empty", ())
    with pytest.raises(InvalidPresentation):
        GroupoidPresentation("dup", ("0",), (ArrowGen("a", "0", "0"), ArrowGen("a", "0", "0")))
    with pytest.raises(InvalidPresentation):
        GroupoidPresentation("stray", ("0",), (ArrowGen("a", "0", "9"),))
    a = ArrowGen("a", "0", "1")
    with pytest.raises(InvalidPresentation):
        GroupoidPresentation(
            "bad-rel",
            ("0", "1"),
            (a,),
            ((Word("0", ((a, 1),)), Word("0", ())),),  # not coterminal
        )


def test_discrete_presentations_are_legal():
    p = discrete_presentation("pts", ("0", "1"))
    assert p.generators == ()
    assert spanning_tree(GroupoidPresentation("one", ("z",))) == set()


def test_spanning_tree_interval():
    iv = interval_groupoid()
    assert spanning_tree(iv) == {iv.generators[0]}


def test_spanning_tree_circle_prefers_lexicographic():
    c = circle()
    assert {g.name for g in spanning_tree(c)} == {"a"}


def test_spanning_tree_disconnected():
    p = GroupoidPresentation("two", ("0", "1"))
    with pytest.raises(Disconnected) as err:
        spanning_tree(p)
    assert err.value.components == [["0"], ["1"]]


def test_tree_paths_and_validation():
    c = circle()
    a = c.generator("a")
    b = c.generator("b")
    paths = tree_paths(c, "1", {a})
    assert paths["1"] == Word("1", ())
    assert paths["0"] == Word("1", ((a, -1),))
    with pytest.raises(TreeInvalid):
        tree_paths(c, "0", {a, b})  # a cycle, not a tree
    with pytest.raises(TreeInvalid):
        tree_paths(c, "0", set())  # does not span
    with pytest.raises(BaseNotInComponent):
        tree_paths(c, "7", {a})
    with pytest.raises(TreeInvalid):
        tree_paths(c, "0", {ArrowGen("zz", "0", "1")})
