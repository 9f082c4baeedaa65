"""Moving skein identities between the Kauffman and RT theories by parity bookkeeping.

A relation ``sum c_k L_k = 0`` that holds in one theory holds in the other
after multiplying each coefficient by ``(-1)^(n(L_k) + tr(L_k))``, where ``n``
counts components and ``tr`` is the trace of the linking matrix.  Neither
number is computed from topology here: every generator carries a
:class:`ParityTag`, and a monomial's parities are the tag sums weighted by
multiplicity.

A Chebyshev skein ``S_k(g)`` is a combination of powers ``g^m`` with
``m = k mod 2``, so it is recorded as the monomial ``{g: k}``; only the parity
of a multiplicity ever matters.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping

from .laurent import ZERO, LaurentPoly

__all__ = [
    "ParityTag",
    "TaggedRelation",
    "UntaggedGeneratorError",
    "transfer",
    "torus_curve_tag",
    "peripheral_sign",
    "derive_prop3",
    "relations_match",
    "transfer_relative",
    "fig8_row_reference",
    "search_parity_assignment",
    "SearchReport",
    "solid_torus_relation",
    "fig8_row_relations",
    "peripheral_relation",
    "quoted_composite_parity",
    "torus_knot_relations",
]

Monomial = tuple[tuple[str, int], ...]


class UntaggedGeneratorError(KeyError):
    pass


@dataclass(frozen=True)
class ParityTag:
    components_parity: int = 0
    trace_parity: int = 0

    def __post_init__(self):
        object.__setattr__(self, "components_parity", self.components_parity % 2)
        object.__setattr__(self, "trace_parity", self.trace_parity % 2)

    def __add__(self, other: ParityTag) -> ParityTag:
        return ParityTag(
            self.components_parity + other.components_parity, self.trace_parity + other.trace_parity
        )

    def times(self, m: int) -> ParityTag:
        return ParityTag(m * self.components_parity, m * self.trace_parity)

    @property
    def sign(self) -> int:
        return -1 if (self.components_parity + self.trace_parity) % 2 else 1


def _monomial(gens: Mapping[str, int] | Iterable[tuple[str, int]]) -> Monomial:
    items = gens.items() if isinstance(gens, Mapping) else gens
    acc: dict[str, int] = {}
    for g, m in items:
        acc[g] = acc.get(g, 0) + m
    return tuple(sorted((g, m) for g, m in acc.items() if m))


@dataclass
class TaggedRelation:
    """``sum coeff * monomial = 0`` with a tag table for the generators.

    Terms are combined on construction, so equal monomials never appear twice.
    """

    terms: dict[Monomial, LaurentPoly] = field(default_factory=dict)
    tags: dict[str, ParityTag | None] = field(default_factory=dict)

    @classmethod
    def build(cls, terms: Iterable[tuple[LaurentPoly | int, Mapping[str, int]]], tags=None) -> TaggedRelation:
        rel = cls({}, dict(tags or {}))
        for c, gens in terms:
            rel.add(c, gens)
        return rel

    def add(self, c: LaurentPoly | int, gens: Mapping[str, int] | Monomial) -> None:
        key = _monomial(gens)
        v = self.terms.get(key, ZERO) + LaurentPoly._coerce(c)
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    def generators(self) -> set[str]:
        return {g for mono in self.terms for g, _ in mono}

    def tag_of(self, mono: Monomial) -> ParityTag:
        total = ParityTag()
        for g, m in mono:
            tag = self.tags.get(g)
            if tag is None:
                raise UntaggedGeneratorError(g)
            total = total + tag.times(m)
        return total

    def with_tags(self, tags: Mapping[str, ParityTag]) -> TaggedRelation:
        return TaggedRelation(dict(self.terms), {**self.tags, **tags})

    def negated(self) -> TaggedRelation:
        return TaggedRelation({k: -c for k, c in self.terms.items()}, dict(self.tags))

    def same_terms(self, other: TaggedRelation) -> bool:
        return self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0 = 0"
        parts = []
        for mono, c in sorted(self.terms.items()):
            word = "*".join(g if m == 1 else f"{g}^{m}" for g, m in mono) or "1"
            parts.append(f"({c})*{word}")
        return " + ".join(parts) + " = 0"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": c.to_json(), "monomial": [[g, m] for g, m in mono]}
                for mono, c in sorted(self.terms.items())
            ],
            "tags": {
                g: None if t is None else [t.components_parity, t.trace_parity]
                for g, t in sorted(self.tags.items())
            },
        }


def transfer(rel: TaggedRelation) -> TaggedRelation:
    """Multiply every coefficient by ``(-1)^(n + tr)`` of its monomial."""
    out = {}
    for mono, c in rel.terms.items():
        out[mono] = -c if rel.tag_of(mono).sign < 0 else c
    return TaggedRelation(out, dict(rel.tags))


def transfer_relative(rel: TaggedRelation, reference: Mapping[str, int] | Monomial) -> TaggedRelation:
    """Transfer, then divide by the sign picked up by ``reference``.

    This quotients out the global ``±1`` so that the reference term keeps its
    coefficient and the comparison with the other theory becomes exact.
    """
    moved = transfer(rel)
    if rel.tag_of(_monomial(reference)).sign < 0:
        moved = moved.negated()
    return moved


def relations_match(a: TaggedRelation, b: TaggedRelation) -> int:
    """``+1`` or ``-1`` if ``a = ±b`` termwise, else ``0``."""
    if a.terms == b.terms:
        return 1
    if a.terms == b.negated().terms:
        return -1
    return 0


def _split(p: int, q: int) -> tuple[int, int, int]:
    n = gcd(p, q)
    return n, p // n, q // n


def torus_curve_tag(p: int, q: int, context: str = "cylinder") -> ParityTag:
    """Tag of ``(p,q)_T`` as ``n`` parallel copies of the primitive curve ``(p', q')``.

    On the cylinder over the torus each copy has self-pairing ``p'q'``.  In
    the peripheral context (the boundary torus of a knot complement) each copy
    has self-pairing ``(p'-1) q'``, so the combined exponent is ``p mod 2``.
    """
    if p == 0 and q == 0:
        raise ValueError("(0,0) is not a curve")
    n, pp, qq = _split(p, q)
    if context == "cylinder":
        return ParityTag(n, n * pp * qq)
    if context == "peripheral":
        return ParityTag(n, n * (pp - 1) * qq)
    raise ValueError(f"unknown context {context!r}")


def peripheral_sign(p: int, q: int) -> int:
    return torus_curve_tag(p, q, "peripheral").sign


def quoted_composite_parity(p: int, q: int) -> int:
    """``n (1 + p'q') mod 2``: the composite exponent in the form it is usually quoted.

    This does NOT reduce to ``p mod 2`` in general -- ``(1, 1)`` gives 0 --
    see :func:`torus_curve_tag` for the form that does.
    """
    n, pp, qq = _split(p, q)
    return n * (1 + pp * qq) % 2


# ---------------------------------------------------------------------------
# relation builders


def _curve(p: int, q: int) -> str:
    return f"({p},{q})_T"


ALPHA = "alpha"


def solid_torus_relation(theory, p: int, q: int, j: int) -> TaggedRelation:
    """``(p,q)_T S_{j-1}(alpha) - [action] = 0`` in the solid torus, tagged for the cylinder."""
    from .skein_modules import SolidTorusElement, act_solid_torus
    from .torus import TorusElement

    image = act_solid_torus(theory, TorusElement.basis(p, q), SolidTorusElement.s(j - 1))
    rel = TaggedRelation({}, {ALPHA: ParityTag(1, 0)})
    lhs: dict[str, int] = {ALPHA: j - 1}
    if (p, q) != (0, 0):
        lhs[_curve(p, q)] = 1
        rel.tags[_curve(p, q)] = torus_curve_tag(p, q)
        rel.add(1, lhs)
    else:
        rel.add(2, lhs)
    for k, c in image.items():
        rel.add(-c, {ALPHA: k})
    return rel


def derive_prop3(p: int, q: int, j: int) -> tuple[bool, TaggedRelation, TaggedRelation]:
    """Transfer the RT solid-torus relation and compare with the Kauffman one.

    The transferred relation is divided by the sign of its left-hand term and
    must then equal the Kauffman relation exactly.  Returns ``(ok, derived, expected)``.
    """
    from .skein_modules import Theory

    rt = solid_torus_relation(Theory.RT, p, q, j)
    expected = solid_torus_relation(Theory.KAUFFMAN, p, q, j)
    lhs = {ALPHA: j - 1, **({_curve(p, q): 1} if (p, q) != (0, 0) else {})}
    derived = transfer_relative(rt, lhs)
    return derived.same_terms(expected), derived, expected


def peripheral_relation(e) -> TaggedRelation:
    """``e . ∅ = 0`` for a peripheral element ``e``, each ``(p,q)_T`` tagged peripherally."""
    rel = TaggedRelation()
    for (p, q), c in e.items():
        if (p, q) == (0, 0):
            rel.add(c, {})
            continue
        rel.tags[_curve(p, q)] = torus_curve_tag(p, q, "peripheral")
        rel.add(c, {_curve(p, q): 1})
    return rel


FIG8_TAGS = {"x": ParityTag(1, 0), "y": ParityTag(1, 0), "z": ParityTag(1, 0)}


def fig8_row_relations(theory, q: int, reading: str | None = None, tags=None) -> dict[str, TaggedRelation]:
    """The three table rows ``(1,q)_T G = RHS`` (``G`` in ∅, Y, Z) as storage-basis relations.

    ``G`` is expanded through the theory's Y/Z change of basis, so every term
    is a monomial ``(1,q)_T^e x^n g`` with ``g`` in ``{1, y, z}``.  The
    left-hand monomial ``(1,q)_T g`` is :func:`fig8_row_reference`.
    """
    from .skein_modules import Fig8Element, Theory, act_fig8_generator, yz_to_storage

    theory = Theory.coerce(theory)
    curve = _curve(1, q)
    base_tags = {curve: torus_curve_tag(1, q), **FIG8_TAGS, **(tags or {})}
    out = {}
    for g in ("1", "Y", "Z"):
        rel = TaggedRelation({}, dict(base_tags))
        left = yz_to_storage(theory, Fig8Element({(0, g): 1}))
        for (n, h), c in left.items():
            rel.add(c, _fig8_gens(n, h, {curve: 1}))
        right = yz_to_storage(theory, act_fig8_generator(theory, q, g, reading))
        for (n, h), c in right.items():
            rel.add(-c, _fig8_gens(n, h))
        out[g] = rel
    return out


def fig8_row_reference(q: int, g: str) -> dict[str, int]:
    return _fig8_gens(0, {"1": "1", "Y": "y", "Z": "z"}[g], {_curve(1, q): 1})


def _fig8_gens(n: int, h: str, extra=None) -> dict[str, int]:
    gens = dict(extra or {})
    if n:
        gens["x"] = n
    if h != "1":
        gens[h] = 1
    return gens


def torus_knot_relations(p: int, i: int) -> tuple[TaggedRelation, TaggedRelation]:
    """The Kauffman and RT forms of the reduction formula for ``S_{p+i}(y)``.

    ``t^(-2i-1) S_{p+i}(y) + t^(2i+1) S_{p-i-1}(y) = s S_{2i}(x) (t^-1 S_p(y) + t S_{p-1}(y))``
    with ``s = (-1)^i`` (Kauffman) or ``1`` (RT).  Chebyshev indices are
    S-normalized first.
    """
    from .chebyshev import s_normalize

    def build(sign: int) -> TaggedRelation:
        rel = TaggedRelation({}, {"x": None, "y": None})
        for c, xs, ys in (
            (LaurentPoly.monomial(-2 * i - 1), 0, p + i),
            (LaurentPoly.monomial(2 * i + 1), 0, p - i - 1),
            (LaurentPoly.monomial(-1, -sign), 2 * i, p),
            (LaurentPoly.monomial(1, -sign), 2 * i, p - 1),
        ):
            sx, kx = s_normalize(xs)
            sy, ky = s_normalize(ys)
            if sx == 0 or sy == 0:
                continue
            rel.add(c.scale(sx * sy), {"x": kx, "y": ky})
        return rel

    return build((-1) ** i), build(1)


# ---------------------------------------------------------------------------
# assignment search


ALL_TAGS = tuple(ParityTag(a, b) for a in (0, 1) for b in (0, 1))


@dataclass
class SearchReport:
    unknowns: list[str]
    fixed: dict[str, tuple[int, int]]
    assignments: list[dict[str, tuple[int, int]]]
    residuals: list[dict]
    relations: int

    @property
    def found(self) -> bool:
        return bool(self.assignments)

    def to_json(self) -> dict:
        return {
            "unknowns": self.unknowns,
            "fixed": {g: list(v) for g, v in sorted(self.fixed.items())},
            "relations": self.relations,
            "assignments": [{g: list(v) for g, v in a.items()} for a in self.assignments],
            "residuals": self.residuals,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _first_diff(a: TaggedRelation, b: TaggedRelation) -> dict:
    """First monomial where ``a`` differs from ``+b`` and from ``-b``."""
    keys = sorted(set(a.terms) | set(b.terms))
    out = {}
    for label, other in (("plus", b), ("minus", b.negated())):
        for k in keys:
            x, y = a.terms.get(k, ZERO), other.terms.get(k, ZERO)
            if x != y:
                out[label] = {
                    "monomial": [[g, m] for g, m in k],
                    "transferred": str(x),
                    "target": str(y),
                    "mismatches": sum(1 for kk in keys if a.terms.get(kk, ZERO) != other.terms.get(kk, ZERO)),
                }
                break
    return out


def search_parity_assignment(
    source: TaggedRelation | list[TaggedRelation],
    target: TaggedRelation | list[TaggedRelation],
    unknowns: list[str],
    trace_only: bool = False,
) -> SearchReport:
    """All tag assignments for ``unknowns`` under which every source transfers to ``±`` its target.

    Each relation pair may use its own global sign.  With ``trace_only`` the
    component parities of the unknowns are taken from the source tags (which
    must then be present) and only trace parities are searched.  When nothing
    fits, the report lists, per assignment, the first residual term.
    """
    sources = [source] if isinstance(source, TaggedRelation) else list(source)
    targets = [target] if isinstance(target, TaggedRelation) else list(target)
    if len(sources) != len(targets):
        raise ValueError("source and target lists differ in length")
    fixed: dict[str, tuple[int, int]] = {}
    for rel in sources:
        for g, tag in rel.tags.items():
            if g not in unknowns and tag is not None:
                fixed[g] = (tag.components_parity, tag.trace_parity)

    def options(g):
        if not trace_only:
            return ALL_TAGS
        base = sources[0].tags.get(g)
        if base is None:
            raise UntaggedGeneratorError(g)
        return tuple(ParityTag(base.components_parity, f) for f in (0, 1))

    assignments, residuals = [], []
    for combo in itertools.product(*(options(g) for g in unknowns)):
        chosen = dict(zip(unknowns, combo))
        ok = True
        first = None
        for src, tgt in zip(sources, targets):
            moved = transfer(src.with_tags(chosen))
            if not relations_match(moved, tgt):
                ok = False
                first = _first_diff(moved, tgt)
                break
        flat = {g: (t.components_parity, t.trace_parity) for g, t in chosen.items()}
        if ok:
            assignments.append(flat)
        else:
            residuals.append({"assignment": {g: list(v) for g, v in flat.items()}, "diff": first})
    return SearchReport(
        list(unknowns),
        fixed,
        assignments,
        residuals if not assignments else [],
        len(sources),
    )
