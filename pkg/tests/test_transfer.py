from __future__ import annotations

import json
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinrt.laurent import LaurentPoly
from skeinrt.skein_modules import Theory
from skeinrt.transfer import (
    FIG8_TAGS,
    ParityTag,
    TaggedRelation,
    UntaggedGeneratorError,
    derive_prop3,
    fig8_row_reference,
    fig8_row_relations,
    peripheral_relation,
    peripheral_sign,
    quoted_composite_parity,
    relations_match,
    search_parity_assignment,
    solid_torus_relation,
    torus_curve_tag,
    torus_knot_relations,
    transfer,
    transfer_relative,
)
from skeinrt.data import ideal_element

from strategies import laurent

tp = LaurentPoly.monomial


def test_knot_relation_example():
    # K - <K> * empty = 0 becomes -K - <K> * empty = 0 for one component with trace 0
    bracket = LaurentPoly({2: -1, -2: -1})
    rel = TaggedRelation.build([(1, {"K": 1}), (-bracket, {})], {"K": ParityTag(1, 0)})
    moved = transfer(rel)
    assert moved.terms == TaggedRelation.build([(-1, {"K": 1}), (-bracket, {})]).terms


def test_empty_term_is_unchanged():
    rel = TaggedRelation.build([(tp(3), {})])
    assert transfer(rel).terms == rel.terms


def test_untagged_generator_raises():
    with pytest.raises(UntaggedGeneratorError):
        transfer(TaggedRelation.build([(1, {"w": 1})]))


@st.composite
def relations(draw):
    gens = ["a", "b", "c"]
    tags = {g: ParityTag(draw(st.integers(0, 1)), draw(st.integers(0, 1))) for g in gens}
    rel = TaggedRelation({}, tags)
    for _ in range(draw(st.integers(0, 4))):
        mono = {g: draw(st.integers(0, 3)) for g in gens}
        rel.add(draw(laurent), mono)
    return rel


@given(relations(), laurent)
def test_involution_and_linearity(rel, c):
    assert transfer(transfer(rel)).terms == rel.terms
    scaled = TaggedRelation({k: v * c for k, v in rel.terms.items() if v * c}, rel.tags)
    moved = transfer(rel)
    assert transfer(scaled).terms == {k: v * c for k, v in moved.terms.items() if v * c}


@given(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1), st.integers(0, 1), st.integers(0, 5))
def test_parity_additivity(a, b, c, d, m):
    x, y = ParityTag(a, b), ParityTag(c, d)
    s = x + y
    assert (s.components_parity, s.trace_parity) == ((a + c) % 2, (b + d) % 2)
    assert x.times(m) == ParityTag(a * m % 2, b * m % 2)


def test_torus_curve_tag_examples():
    for q in range(-5, 6):
        assert torus_curve_tag(1, q) == ParityTag(1, q % 2)
    assert torus_curve_tag(2, 4) == ParityTag(0, 0)
    tag = torus_curve_tag(3, 5, "peripheral")
    assert (tag.components_parity + tag.trace_parity) % 2 == 1
    with pytest.raises(ValueError):
        torus_curve_tag(0, 0)


def test_peripheral_sign_is_minus_one_to_the_p():
    for p in range(-20, 21):
        for q in range(-20, 21):
            if (p, q) != (0, 0):
                assert peripheral_sign(p, q) == (-1) ** (p % 2)


def test_quoted_composite_parity_is_not_p():
    # n(1 + p'q') is not p mod 2: (1, 1) has n = 1, p'q' = 1
    assert quoted_composite_parity(1, 1) == 0
    bad = [(p, q) for p in range(-20, 21) for q in range(-20, 21)
           if (p, q) != (0, 0) and quoted_composite_parity(p, q) != p % 2]
    assert (3, 5) in bad and (-20, -19) in bad
    assert all(gcd(p, q) % 2 == 1 for p, q in bad)


@pytest.mark.parametrize("p,q,j,sign", [(1, 1, 2, -1), (2, 0, 1, 1), (3, -2, 4, 1), (0, 3, 2, -1)])
def test_derive_prop3_examples(p, q, j, sign):
    ok, derived, expected = derive_prop3(p, q, j)
    assert ok
    rt = solid_torus_relation(Theory.RT, p, q, j)
    # the right-hand sides differ by the printed (-1)^q
    alpha_only = [k for k in rt.terms if all(g == "alpha" for g, _ in k)]
    for k in alpha_only:
        if len(k) and k != (("alpha", j - 1),):
            assert expected.terms[k] == rt.terms[k].scale(sign)


def test_derive_prop3_exhaustive():
    for p in range(-8, 9):
        for q in range(-8, 9):
            for j in range(1, 13):
                assert derive_prop3(p, q, j)[0], (p, q, j)


def test_search_recovers_cylinder_tag():
    for p, q in [(1, 1), (2, 3), (3, 0), (2, 2), (0, 1)]:
        rt = solid_torus_relation(Theory.RT, p, q, 3)
        k = solid_torus_relation(Theory.KAUFFMAN, p, q, 3)
        curve = f"({p},{q})_T"
        report = search_parity_assignment(rt, k, [curve])
        tag = torus_curve_tag(p, q)
        expected = (tag.components_parity, tag.trace_parity)
        sums = {(a + b) % 2 for a, b in (r[curve] for r in report.assignments)}
        assert expected in [r[curve] for r in report.assignments]
        assert sums == {sum(expected) % 2}


@pytest.mark.parametrize("q", range(-10, 11))
def test_fig8_rows_transfer(q):
    k = fig8_row_relations(Theory.KAUFFMAN, q)
    rt = fig8_row_relations(Theory.RT, q)
    for g in ("1", "Y", "Z"):
        assert transfer_relative(k[g], fig8_row_reference(q, g)).same_terms(rt[g])


def test_fig8_search_finds_zero_trace_assignment():
    k = fig8_row_relations(Theory.KAUFFMAN, 2)
    rt = fig8_row_relations(Theory.RT, 2)
    report = search_parity_assignment([k[g] for g in ("1", "Y", "Z")], [rt[g] for g in ("1", "Y", "Z")], ["x", "y", "z"])
    assert {g: (1, 0) for g in "xyz"} in report.assignments
    assert all(t == ParityTag(1, 0) for t in FIG8_TAGS.values())


def test_peripheral_ideals_transfer():
    rel_rt = peripheral_relation(ideal_element(Theory.RT))
    rel_k = peripheral_relation(ideal_element(Theory.KAUFFMAN))
    assert relations_match(transfer(rel_k), rel_rt) != 0


def test_torus_knot_pair_report():
    for p, i in [(3, 1), (4, 1), (5, 3)]:
        k, rt = torus_knot_relations(p, i)
        tags = {"x": ParityTag(1, 0), "y": ParityTag(1, 0)}
        report = search_parity_assignment(k.with_tags(tags), rt, ["x", "y"], trace_only=True)
        assert not report.found
        assert len(report.residuals) == 4
        assert json.loads(report.dumps())["assignments"] == []
    # for even i both printed forms agree, so the identity assignment works
    k, rt = torus_knot_relations(4, 2)
    assert k.same_terms(rt)
