from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinrt.data import FIGURE_EIGHT_BRAID
from skeinrt.diagrams import BraidDiagram, bracket
from skeinrt.diagrams import tl
from skeinrt.diagrams._tl_py import decode, encode
from skeinrt.diagrams.oracle import bracket_state_sum
from skeinrt.laurent import LaurentPoly
from skeinrt.diagrams.tl import BIRTH_RIGHT, CROSS, DEATH_RIGHT, braid_bracket_terms, contract, plan

compiled = pytest.mark.skipif(tl.contract_compiled is None, reason="compiled kernel not built")


def test_backend_selection():
    assert tl.BACKEND in ("compiled", "python")
    with pytest.raises(ValueError):
        contract([], "fortran")


@st.composite
def dyck_words(draw, half=5):
    opens = closes = 0
    bits = []
    while closes < half:
        can_open, can_close = opens < half, closes < opens
        if can_open and (not can_close or draw(st.booleans())):
            bits.append(1)
            opens += 1
        else:
            bits.append(0)
            closes += 1
    return sum(b << k for k, b in enumerate(bits))


@given(dyck_words())
def test_matching_codec_round_trip(key):
    partner = decode(key, 10)
    assert all(partner[partner[k]] == k != partner[k] for k in range(10))
    assert encode(partner) == key


def test_single_crossing_program():
    # closure of sigma_1 on two strands: t * loop^2 + t^-1 * loop = t^5 + t
    program = [(BIRTH_RIGHT, 0, 0), (BIRTH_RIGHT, 0, 0), (CROSS, 0, 1), (DEATH_RIGHT, 0, 0), (DEATH_RIGHT, 0, 0)]
    assert contract(program, "python") == {1: 1, 5: 1}


def test_plan_keeps_fig8_cables_narrow():
    d = BraidDiagram.from_json(FIGURE_EIGHT_BRAID)
    for m in (1, 2, 3):
        program, free = plan(d.cable(m).strands, list(d.cable(m).word))
        width = peak = 0
        for op, _, _ in program:
            width += 1 if op in (tl.BIRTH_LEFT, tl.BIRTH_RIGHT) else -1 if op in (tl.DEATH_LEFT, tl.DEATH_RIGHT) else 0
            peak = max(peak, width)
        assert free == 0 and peak <= 3 * m


@compiled
def test_kernels_agree_on_random_braids():
    rng = random.Random(99)
    for _ in range(60):
        k = rng.randint(2, 6)
        word = [rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(rng.randint(1, 14))]
        program, _ = plan(k, word)
        assert contract(program, "compiled") == contract(program, "python")


@compiled
def test_kernels_agree_on_a_cable():
    d = BraidDiagram.from_json(FIGURE_EIGHT_BRAID).cable(2)
    assert braid_bracket_terms(d.strands, list(d.word), "compiled") == braid_bracket_terms(d.strands, list(d.word), "python")


@compiled
def test_overflow_falls_back_to_exact_integers():
    # 70 separate loops: coefficients of (-t^2 - t^-2)^70 exceed 64 bits
    program = [(BIRTH_RIGHT, 0, 0), (DEATH_RIGHT, 0, 0)] * 70
    expected = LaurentPoly({2: -1, -2: -1}) ** 70
    assert max(abs(c) for _, c in expected.items()) > 2 ** 63
    with pytest.raises(OverflowError):
        tl.contract_compiled(program)
    assert contract(program, "compiled") == dict(expected.items())


def test_empty_and_free_strands():
    assert braid_bracket_terms(0, []) == {0: 1}
    assert braid_bracket_terms(3, [1]) == dict(bracket(BraidDiagram(3, (1,))).items())
    assert bracket(BraidDiagram(3, (1,))) == bracket_state_sum(BraidDiagram(3, (1,)))


def test_pure_python_fallback_is_selected_at_import():
    import os
    import subprocess
    import sys

    env = dict(os.environ, SKEINRT_PURE_PYTHON="1")
    code = "from skeinrt.diagrams import BACKEND, bracket, BraidDiagram; print(BACKEND, bracket(BraidDiagram(2, (1, 1, 1))))"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    assert out.split()[0] == "python"
    assert out.split(maxsplit=1)[1].strip() == str(bracket(BraidDiagram(2, (1, 1, 1))))
