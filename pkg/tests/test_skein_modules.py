from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinrt.chebyshev import t_coefficients
from skeinrt.data import ideal_element
from skeinrt.laurent import LaurentPoly
from skeinrt.skein_modules import (
    Fig8Element,
    ReductionError,
    SolidTorusElement,
    Theory,
    act_fig8,
    act_fig8_generator,
    act_solid_torus,
    storage_to_yz,
    yz_to_storage,
)
from skeinrt.torus import TorusElement

from strategies import laurent, torus_elements

B = TorusElement.basis
S = SolidTorusElement.s
tp = LaurentPoly.monomial
THEORIES = list(Theory)


# -- solid torus ------------------------------------------------------------


@pytest.mark.parametrize("j", range(2, 8))
def test_longitude_raises_and_lowers(j):
    assert act_solid_torus(Theory.RT, B(1, 0), S(j - 1)) == S(j - 2) + S(j)


@pytest.mark.parametrize("j", range(1, 8))
def test_meridian_is_diagonal(j):
    assert act_solid_torus(Theory.RT, B(0, 1), S(j - 1)) == S(j - 1, tp(2 * j) + tp(-2 * j))


def test_solid_torus_examples():
    assert act_solid_torus(Theory.RT, B(2, 0), S(0)) == S(2) - S(0)
    assert act_solid_torus(Theory.KAUFFMAN, B(0, 1), S(0)) == S(0, -(tp(2) + tp(-2)))
    assert act_solid_torus("rt", TorusElement.identity(), S(3)) == S(3)


def test_negative_indices_normalize():
    assert SolidTorusElement({-1: 5}) == SolidTorusElement()
    assert SolidTorusElement({-3: 1}) == S(1, -1)


def _times_alpha(w: SolidTorusElement) -> SolidTorusElement:
    acc = SolidTorusElement()
    for j, c in w.items():
        acc = acc + S(j + 1, c) + S(j - 1, c)
    return acc


@pytest.mark.parametrize("p", range(0, 11))
def test_longitude_powers_are_chebyshev(p):
    w = S(2) + S(0, tp(3))
    expected = SolidTorusElement()
    for d, c in t_coefficients(p).items():
        term = w
        for _ in range(d):
            term = _times_alpha(term)
        expected = expected + term.scale(c)
    got = act_solid_torus(Theory.RT, B(p, 0), w) if p else act_solid_torus(Theory.RT, TorusElement.identity(2), w)
    assert got == expected


def test_kauffman_is_signed_rt():
    for p in range(-8, 9):
        for q in range(-8, 9):
            w = S(0) + S(3, tp(1)) + S(5)
            rt = act_solid_torus(Theory.RT, B(p, q), w)
            k = act_solid_torus(Theory.KAUFFMAN, B(p, q), w)
            assert k == (rt if q % 2 == 0 else -rt)


@st.composite
def solid_elements(draw):
    return SolidTorusElement(draw(st.dictionaries(st.integers(0, 6), laurent, max_size=3)))


@given(st.sampled_from(THEORIES), torus_elements(bound=3), torus_elements(bound=3), solid_elements())
def test_solid_torus_action_is_associative(theory, a, b, w):
    assert act_solid_torus(theory, a, act_solid_torus(theory, b, w)) == act_solid_torus(theory, a * b, w)


def test_solid_torus_json():
    w = S(0, tp(-2)) + S(4, 3)
    assert SolidTorusElement.from_json(w.to_json()) == w
    assert SolidTorusElement.from_json([[-2, 1]]) == S(0, -1)
    with pytest.raises(ValueError):
        SolidTorusElement.from_json([[1.0, 1]])


# -- figure-eight complement --------------------------------------------------


def test_meridian_acts_by_chebyshev_in_x():
    out = act_fig8(Theory.RT, B(0, 2), Fig8Element.empty())
    assert out == Fig8Element({(2, "1"): 1, (0, "1"): -2})


def test_yz_change_of_basis_examples():
    assert yz_to_storage(Theory.RT, Fig8Element({(0, "Y"): 1})) == Fig8Element({(0, "y"): tp(2), (0, "1"): -1})
    assert yz_to_storage(Theory.KAUFFMAN, Fig8Element({(0, "Z"): 1})) == Fig8Element({(0, "z"): tp(-2), (0, "1"): 1})


@st.composite
def fig8_storage(draw):
    keys = st.tuples(st.integers(0, 2), st.sampled_from(["1", "y", "z"]))
    return Fig8Element(draw(st.dictionaries(keys, laurent, max_size=3)))


@given(st.sampled_from(THEORIES), fig8_storage())
def test_yz_round_trip(theory, w):
    assert yz_to_storage(theory, storage_to_yz(theory, w)) == w
    big = storage_to_yz(theory, w)
    assert storage_to_yz(theory, yz_to_storage(theory, big)) == big


@pytest.mark.parametrize("theory", THEORIES)
@pytest.mark.parametrize("q", [-3, 0, 2])
def test_peeling_one_x(theory, q):
    lhs = act_fig8(theory, B(1, q), Fig8Element({(1, "1"): 1}))
    rhs = act_fig8(theory, TorusElement.identity(tp(1)), act_fig8_generator(theory, q + 1, "1")) + act_fig8(
        theory, TorusElement.identity(tp(-1)), act_fig8_generator(theory, q - 1, "1")
    )
    assert lhs == rhs


@pytest.mark.parametrize("theory", THEORIES)
def test_p_reduction_example(theory):
    e = Fig8Element.empty()
    lhs = act_fig8(theory, B(2, 3), e)
    inner = act_fig8(theory, B(1, 0), act_fig8(theory, B(1, 3), e)) - act_fig8(theory, B(0, 3, tp(-3)), e)
    assert lhs == act_fig8(theory, TorusElement.identity(tp(-3)), inner)


@given(
    st.sampled_from(THEORIES),
    torus_elements(bound=3, max_terms=2),
    torus_elements(bound=3, max_terms=2),
    fig8_storage(),
)
def test_fig8_action_is_associative(theory, a, b, w):
    assert act_fig8(theory, a, act_fig8(theory, b, w)) == act_fig8(theory, a * b, w)


@pytest.mark.parametrize("theory", THEORIES)
def test_printed_ideal_elements_annihilate_empty(theory):
    assert not act_fig8(theory, ideal_element(theory), Fig8Element.empty())


def test_printed_z_row_breaks_annihilation():
    for theory in THEORIES:
        assert act_fig8(theory, ideal_element(theory), Fig8Element.empty(), reading="printed")


def test_generator_rows_first_line_shape():
    # the empty-skein row at q = 0 in the RT theory, assembled by hand
    from skeinrt.chebyshev import s_coefficients

    def sx(k, shift):
        return {d: tp(shift, c) for d, c in s_coefficients(k).items()}

    expected = Fig8Element()
    for label, parts in (("Y", ((2, 2), (0, -2))), ("Z", ((0, 2), (2, -2))), ("1", ((-4, 2), (-4, -2)))):
        for k, shift in parts:
            expected = expected + Fig8Element({(d, label): c for d, c in sx(k, shift).items()})
    assert act_fig8_generator(Theory.RT, 0, "1") == expected


def test_fig8_element_validation_and_json():
    with pytest.raises(ValueError):
        Fig8Element({(0, "y"): 1, (0, "Y"): 1})
    with pytest.raises(ValueError):
        Fig8Element({(-1, "1"): 1})
    with pytest.raises(ValueError):
        Fig8Element({(0, "w"): 1})
    w = Fig8Element({(3, "z"): tp(2), (0, "1"): 4})
    assert Fig8Element.from_json(w.to_json()) == w
    assert Fig8Element.parse("t^2*x^3z + 4") == w
    with pytest.raises(ValueError):
        Fig8Element.parse("x^3z*t^2")  # coefficients go first


def test_text_parsers():
    assert SolidTorusElement.parse("S_1 - (t^2 + t^-2)*S_0") == S(1) + S(0, -(tp(2) + tp(-2)))
    assert SolidTorusElement.parse("S_{-3}") == S(1, -1)
    assert Fig8Element.parse("x^2Y - t^3*xZ + 1") == Fig8Element({(2, "Y"): 1, (1, "Z"): tp(3, -1), (0, "1"): 1})


def test_reduction_error_is_a_runtime_error():
    assert issubclass(ReductionError, RuntimeError)
