from __future__ import annotations

import json

from skeinrt import golden
from skeinrt.skein_modules import Fig8Element, Theory, act_fig8_generator, yz_to_storage


def test_golden_files_are_current():
    assert golden.check() == {name: "ok" for name in golden.CASES}


def test_rt_fig8_golden_is_the_generator_row():
    data = json.loads((golden.GOLDEN_DIR / "rt_fig8_1_0_on_empty.json").read_text())
    row = act_fig8_generator(Theory.RT, 0, "1")
    assert Fig8Element.from_json(data["table_basis"]) == row
    assert Fig8Element.from_json(data["storage_basis"]) == yz_to_storage(Theory.RT, row)


def test_bless_writes_only_when_asked(tmp_path, monkeypatch):
    monkeypatch.setattr(golden, "GOLDEN_DIR", tmp_path / "g")
    assert set(golden.check().values()) == {"missing"}
    golden.bless()
    assert set(golden.check().values()) == {"ok"}
    path = golden.GOLDEN_DIR / "torus_products.json"
    path.write_text("[]")
    assert golden.check()["torus_products"] == "changed"
