"""The twelve acceptance criteria, each run against its wall-clock limit.

One ``PASS``/``FAIL`` line per criterion is printed in the pytest terminal
summary (see ``conftest.py``).  Run just these with::

    python3 -m pytest tests/test_acceptance.py -v
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager
from math import gcd

import pytest

from skeinrt.chebyshev import Kind, expand, power_to_s_basis
from skeinrt.conventions import load
from skeinrt.data import (
    FIGURE_EIGHT_BRAID,
    TREFOIL_ZERO_WRITHE_BRAID,
    ideal_element,
    printed_recurrence,
)
from skeinrt.diagrams import BraidDiagram, bracket, cable_expand, colored_jones, kirby_melvin_eval, rt_jones
from skeinrt.diagrams.corpus import corpus
from skeinrt.diagrams.oracle import bracket_state_sum
from skeinrt.diagrams.reference import figure_eight_cyclotomic, trefoil_cyclotomic
from skeinrt.laurent import LaurentPoly
from skeinrt.quantum_torus import QTElement, qt_multiply
from skeinrt.recurrence import Recurrence, peripheral_to_recurrence, recurrence_equal
from skeinrt.scenarios import oracle_sequence, run_scenario
from skeinrt.skein_modules import Fig8Element, Theory, act_fig8, storage_to_yz, yz_to_storage
from skeinrt.torus import TorusElement, embed_quantum_torus
from skeinrt.transfer import (
    ParityTag,
    TaggedRelation,
    derive_prop3,
    fig8_row_reference,
    fig8_row_relations,
    peripheral_relation,
    peripheral_sign,
    quoted_composite_parity,
    torus_curve_tag,
    transfer,
    transfer_relative,
)

SEED = 20240601

# criterion number -> (status, detail); read by the terminal-summary hook
RESULTS: dict[int, tuple[str, str]] = {}
TITLES = {
    1: "product-to-sum associativity",
    2: "Kauffman solid-torus action by transfer",
    3: "figure-eight table rows by transfer",
    4: "ideal annihilates the empty skein",
    5: "recurrence matches the printed one",
    6: "oracle basics and corpus agreement",
    7: "colored Jones sign relation",
    8: "printed recurrence annihilates the oracle",
    9: "quantum torus embedding",
    10: "peripheral substitution rule",
    11: "torus-knot parity report",
    12: "transfer involution and basis round-trips",
}


@contextmanager
def criterion(number: int, limit: float, detail: str = ""):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        RESULTS[number] = ("FAIL", f"{elapsed:.2f}s/{limit:g}s: {type(exc).__name__}: {str(exc)[:160]}")
        _print(number)
        raise
    elapsed = time.perf_counter() - start
    if elapsed > limit:
        RESULTS[number] = ("FAIL", f"{elapsed:.2f}s exceeds {limit:g}s")
        _print(number)
        pytest.fail(f"criterion {number} took {elapsed:.2f}s (limit {limit:g}s)")
    RESULTS[number] = ("PASS", f"{elapsed:.2f}s/{limit:g}s" + (f"; {detail}" if detail else ""))
    _print(number)


def _print(number: int) -> None:
    status, detail = RESULTS[number]
    print(f"criterion {number:2d} {status}: {TITLES[number]} ({detail})")


def _random_element(rng: random.Random, bound: int, terms: int = 2) -> TorusElement:
    acc = TorusElement()
    for _ in range(rng.randint(1, terms)):
        p, q = rng.randint(-bound, bound), rng.randint(-bound, bound)
        coeff = LaurentPoly.monomial(rng.randint(-4, 4), rng.choice((-2, -1, 1, 2)))
        acc = acc + TorusElement.basis(p, q, coeff)
    return acc


def test_criterion_01_associativity():
    rng = random.Random(SEED)
    with criterion(1, 5.0, "1000 triples"):
        for _ in range(1000):
            x, y, z = (_random_element(rng, 10, terms=1) for _ in range(3))
            assert (x * y) * z == x * (y * z), (x, y, z)


def test_criterion_02_prop3_by_transfer():
    with criterion(2, 10.0, "|p|,|q| <= 8, 1 <= j <= 12"):
        checked = 0
        for p in range(-8, 9):
            for q in range(-8, 9):
                for j in range(1, 13):
                    ok, derived, expected = derive_prop3(p, q, j)
                    assert ok, (p, q, j, str(derived), str(expected))
                    checked += 1
        assert checked == 17 * 17 * 12


def test_criterion_03_fig8_rows():
    # x, y, z carry trace parity 0; each (1,q)_T keeps its own cylinder tag
    with criterion(3, 5.0, "63 rows, YZ basis"):
        for q in range(-10, 11):
            kauffman = fig8_row_relations(Theory.KAUFFMAN, q)
            rt = fig8_row_relations(Theory.RT, q)
            for g in ("1", "Y", "Z"):
                derived = transfer_relative(kauffman[g], fig8_row_reference(q, g))
                assert derived.same_terms(rt[g]), (q, g)


def test_criterion_04_ideal_annihilation():
    reading = load().z_row_reading
    with criterion(4, 5.0, f"Z-row reading {reading!r}"):
        for theory in Theory:
            out = act_fig8(theory, ideal_element(theory), Fig8Element.empty(), reading)
            assert not out, (theory, str(out))
        # the printed Z row does not annihilate; the selected reading is documented
        assert act_fig8(Theory.RT, ideal_element(Theory.RT), Fig8Element.empty(), "printed")


def test_criterion_05_recurrence_match():
    conv = load()
    with criterion(5, 5.0, "unit L^2 M^7, corrected text"):
        P = peripheral_to_recurrence(ideal_element(Theory.RT), conv.embedding_sign)
        ref = printed_recurrence(fixed=True)
        cmp = recurrence_equal(P, ref.to_qt())
        assert cmp.status == "equal-up-to-unit"
        sign, e, a, b = cmp.unit
        # P = sign t^e L^a M^b Q, so Q = sign t^-e M^-b L^-a P
        inverse = qt_multiply(QTElement.monomial(0, -b), QTElement.monomial(-a, 0))
        normalized = Recurrence.from_qt(qt_multiply(inverse, P).scale(LaurentPoly.monomial(-e, sign)))
        assert normalized.shifts() == [-2, -1, 0, 1, 2]
        for n in range(-6, 7):
            assert normalized.coefficient(2, n) == LaurentPoly({6 * n + 6: 1, -2 * n + 2: -1})
            for k in (-2, -1, 0, 1):
                assert normalized.coefficient(k, n) == ref.coefficient(k, n), (k, n)
        assert (conv.embedding_sign, conv.weight_offset) == (-1, 1)
        assert conv.to_json()["z_row_reading"] == conv.z_row_reading


def _s_cable_bracket(knot: BraidDiagram, n: int) -> LaurentPoly:
    total = LaurentPoly()
    for c, cable in cable_expand(knot, n):
        total = total + c * bracket(cable)
    return total


def _s_cable_rt(knot: BraidDiagram, n: int) -> LaurentPoly:
    # the RT evaluation of S_n(K), cable by cable
    total = LaurentPoly()
    for c, cable in cable_expand(knot, n):
        total = total + c * rt_jones(cable)
    return total


def test_criterion_06_oracle_basics():
    unknot = BraidDiagram(1, ())
    with criterion(6, 30.0):
        assert bracket(unknot) == LaurentPoly({2: -1, -2: -1})
        assert rt_jones(unknot) == LaurentPoly({2: 1, -2: 1})
        items = corpus(10)
        for name, d in items.items():
            b = bracket(d)
            assert b == bracket_state_sum(d), name
            parity = d.component_count() + sum(d.self_writhe())
            assert kirby_melvin_eval(d) == (-b if parity % 2 else b), name
    RESULTS[6] = ("PASS", RESULTS[6][1] + f"; {len(items)} diagrams")


def test_criterion_07_sign_relation():
    fig8 = BraidDiagram.from_json(FIGURE_EIGHT_BRAID)
    trefoil0 = BraidDiagram.from_json(TREFOIL_ZERO_WRITHE_BRAID)
    with criterion(7, 120.0, "figure-eight and 0-writhe trefoil, n <= 3"):
        for knot, closed_form in ((fig8, figure_eight_cyclotomic), (trefoil0, lambda n: trefoil_cyclotomic(n, -1))):
            assert sum(knot.self_writhe()) == 0
            for n in range(4):
                j = _s_cable_rt(knot, n)
                assert j == closed_form(n), n
                assert j == _s_cable_bracket(knot, n).scale((-1) ** n), n
                assert colored_jones(knot, n) == j


def test_criterion_08_recurrence_vs_oracle():
    fig8 = BraidDiagram.from_json(FIGURE_EIGHT_BRAID)
    with criterion(8, 120.0, "corrected text; literal text fails"):
        y = oracle_sequence([colored_jones(fig8, n) for n in range(4)])
        assert y(-1) == LaurentPoly() and y(-2) == -y(0)
        rec = printed_recurrence(fixed=True)
        centres = range(-2 - min(rec.shifts()) - 3, 3 - max(rec.shifts()) + 1)
        assert len(centres) >= 3
        for n in centres:
            assert not rec.evaluate(y, n), n
        literal = printed_recurrence(fixed=False)
        assert any(literal.evaluate(y, n) for n in centres)


def test_criterion_09_embedding():
    rng = random.Random(SEED + 9)
    with criterion(9, 5.0, "500 pairs"):
        assert embed_quantum_torus(TorusElement.basis(1, 0)) == QTElement.monomial(1, 0) + QTElement.monomial(-1, 0)
        for _ in range(500):
            x, y = _random_element(rng, 6), _random_element(rng, 6)
            assert embed_quantum_torus(x * y) == qt_multiply(embed_quantum_torus(x), embed_quantum_torus(y))


def _nonzero_pairs(bound: int):
    for p in range(-bound, bound + 1):
        for q in range(-bound, bound + 1):
            if p or q:
                yield p, q


def _sign(p: int) -> int:
    return -1 if p % 2 else 1


def test_criterion_10_peripheral_substitution():
    # the composite exponent n(1 + (p'-1)q') from the peripheral self-pairing (p'-1)q'
    with criterion(10, 1.0, "corrected parity n(1+(p'-1)q')"):
        for p, q in _nonzero_pairs(20):
            n = gcd(p, q)
            pp, qq = p // n, q // n
            assert n * (1 + (pp - 1) * qq) % 2 == p % 2
            assert peripheral_sign(p, q) == _sign(p)
            tag = torus_curve_tag(p, q, "peripheral")
            rel = TaggedRelation.build([(1, {"c": 1})], {"c": tag})
            assert transfer(rel).terms == TaggedRelation.build([(_sign(p), {"c": 1})]).terms
        e = ideal_element(Theory.KAUFFMAN)
        moved = transfer(peripheral_relation(e))
        expected = TorusElement()
        for (p, q), c in e.items():
            expected = expected + TorusElement.basis(p, q, c.scale(_sign(p)))
        assert moved.terms == peripheral_relation(expected).terms


@pytest.mark.xfail(strict=True, reason="the quoted identity n(1+p'q') = p (mod 2) is false, e.g. at (1, 1)")
def test_criterion_10_quoted_parity_literal():
    try:
        with criterion(10, 1.0):
            for p, q in _nonzero_pairs(20):
                assert quoted_composite_parity(p, q) == p % 2, (p, q)
    finally:
        if RESULTS.get(10, ("",))[0] == "FAIL":
            RESULTS[10] = ("FAIL", "quoted n(1+p'q') = p fails at (1,1), (3,5), ...; corrected form passes")


def test_criterion_11_torus_knot_report():
    with criterion(11, 1.0, "status report"):
        result = run_scenario("torus-knot-parity")
        assert result.status == "report" and result.exit_code == 2
        assert result.payload["cases"]
        assert result.payload["odd_i_with_assignment"] == []


def test_criterion_12_round_trips():
    rng = random.Random(SEED + 12)
    with criterion(12, 5.0, "200 relations, 200 fig8 elements, powers 0..30"):
        for _ in range(200):
            tags = {g: ParityTag(rng.randint(0, 1), rng.randint(0, 1)) for g in "abc"}
            rel = TaggedRelation({}, tags)
            for _ in range(rng.randint(0, 5)):
                mono = {g: rng.randint(0, 3) for g in "abc"}
                rel.add(LaurentPoly.monomial(rng.randint(-6, 6), rng.randint(-3, 3) or 1), mono)
            assert transfer(transfer(rel)).terms == rel.terms
        for _ in range(200):
            w = Fig8Element()
            for _ in range(rng.randint(0, 4)):
                w = w + Fig8Element.parse(f"{rng.randint(-3, 3) or 1}*x^{rng.randint(0, 4)}{rng.choice('yz')}")
            w = w + Fig8Element.empty(rng.randint(-2, 2))
            theory = rng.choice(list(Theory))
            assert yz_to_storage(theory, storage_to_yz(theory, w)) == w
            yz = storage_to_yz(theory, w)
            assert storage_to_yz(theory, yz_to_storage(theory, yz)) == yz
        for power in range(31):
            back: dict[int, int] = {}
            for j, c in power_to_s_basis(power).items():
                for k, v in expand(Kind.S, j).coefficients.items():
                    back[k] = back.get(k, 0) + c * v
            assert {k: v for k, v in back.items() if v} == {power: 1}
