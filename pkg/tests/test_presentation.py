import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spx.presentation import (ComplexPresentation, HomologyShape, PresentationError, abelianize, bouquet,
                              lens_attach, moore, moore_decomposition, named_complex, nonorientable_surface,
                              orientable_surface, parse_presentation)

from conftest import NAMED, RANDOM


def test_parse_torus():
    p = parse_presentation("""
        # the torus
        circles a b
        cell D = a b a^- b^-
    """)
    assert p.circle_names == ("a", "b")
    assert p.words == (((1, 1), (2, 1), (1, -1), (2, -1)),)
    assert p.boundary_vectors == ((0, 0),)
    assert p.words == orientable_surface(1).words


def test_empty_word_and_no_circles():
    p = parse_presentation("cell S =\n")
    assert p.circle_count == 0 and p.words == ((),)
    assert parse_presentation(p.render()) == p


@pytest.mark.parametrize("text, line, column", [
    ("circles a\ncell D = a b\n", 2, 12),
    ("circles a a\n", 1, None),
    ("circles a\nfoo D = a\n", 2, 1),
    ("cell D = a\n", 1, 10),
    ("circles a\ncell D = a\ncell D = a\n", 3, 6),
    ("circles a\ncell D a\n", 2, 1),
    ("circles a\ncell D = a\ncircles b\n", 3, 1),
    ("circles 1a\n", 1, 9),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(PresentationError) as err:
        parse_presentation(text)
    assert err.value.line == line
    if column is not None:
        assert err.value.column == column


def test_constructor_validation():
    with pytest.raises(PresentationError):
        ComplexPresentation(("a",), ("D",), (((2, 1),),))
    with pytest.raises(PresentationError):
        ComplexPresentation(("a",), ("D",), (((1, 2),),))
    with pytest.raises(PresentationError):
        ComplexPresentation(("a",), ("a",), ((),))


@pytest.mark.parametrize("name", NAMED)
def test_render_and_json_round_trip(name):
    p = named_complex(name)
    assert parse_presentation(p.render()) == p
    assert ComplexPresentation.from_json(p.to_json()) == p


words = st.lists(st.tuples(st.integers(1, 3), st.sampled_from((1, -1))), max_size=8)


@settings(max_examples=50, deadline=None)
@given(st.lists(words, max_size=3))
def test_round_trip_random(ws):
    p = ComplexPresentation(("x", "y", "z"), tuple(f"E{j}" for j in range(len(ws))), tuple(map(tuple, ws)))
    assert parse_presentation(p.render()) == p
    for w, vec in zip(p.words, p.boundary_vectors):
        assert sum(vec) == sum(e for _, e in w)


def test_abelianize():
    assert abelianize(((1, 1), (2, 1), (1, -1), (2, -1)), 2) == (0, 0)
    assert abelianize(((1, 1),) * 5, 1) == (5,)
    assert nonorientable_surface(3).boundary_vectors == ((2, 2, 2),)


def test_named_lookup():
    assert named_complex("surface:2") == orientable_surface(2)
    assert named_complex("torus") == orientable_surface(1)
    assert named_complex("rp2") == nonorientable_surface(1)
    assert named_complex("lens", 6) == lens_attach(6)
    assert moore(4) == lens_attach(4)
    assert named_complex("bouquet:3") == bouquet(3)
    for bad in ("klein", "surface", "sphere:2", "lens:x"):
        with pytest.raises(ValueError):
            named_complex(bad)


@pytest.mark.parametrize("p, shape", [
    (named_complex("sphere"), HomologyShape(0, 1)),
    (named_complex("sphere2"), HomologyShape(0, 1)),
    (named_complex("point"), HomologyShape(0, 0)),
    (orientable_surface(1), HomologyShape(2, 1)),
    (orientable_surface(3), HomologyShape(6, 1)),
    (nonorientable_surface(1), HomologyShape(0, 0, (2,))),
    (nonorientable_surface(3), HomologyShape(2, 0, (2,))),
    (lens_attach(6), HomologyShape(0, 0, (6,))),
    (bouquet(4), HomologyShape(4, 0)),
    (RANDOM[0], HomologyShape(1, 1, (6,))),
])
def test_moore_decomposition(p, shape):
    assert moore_decomposition(p) == shape


def test_shape_validation():
    with pytest.raises(ValueError):
        HomologyShape(-1, 0)
    with pytest.raises(ValueError):
        HomologyShape(0, 0, (1,))


@settings(max_examples=60, deadline=None)
@given(words, words)
def test_abelianize_additive(w1, w2):
    w1, w2 = tuple(w1), tuple(w2)
    a, b = abelianize(w1, 3), abelianize(w2, 3)
    assert abelianize(w1 + w2, 3) == tuple(x + y for x, y in zip(a, b))
    inverse = tuple((i, -e) for i, e in reversed(w1))
    assert abelianize(inverse, 3) == tuple(-x for x in a)


@pytest.mark.parametrize("g", range(1, 7))
def test_surface_shapes(g):
    assert moore_decomposition(orientable_surface(g)) == HomologyShape(2 * g, 1)
    assert moore_decomposition(nonorientable_surface(g)) == HomologyShape(g - 1, 0, (2,))
