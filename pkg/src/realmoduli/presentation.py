"""Presentations of graded-commutative algebras: generators, kinds and the two
relation shapes that occur (none, or one linear sum relation among exterior
generators of a common degree)."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import groupby

from .series import TruncatedSeries, one, series_div_cyclotomic, series_mul, binomial_power
from .topology import CircleType


class GenKind(enum.Enum):
    EXTERIOR = "Exterior"
    POLYNOMIAL = "Polynomial"
    DIVIDED_POWER = "DividedPower"

    @property
    def is_even(self) -> bool:
        return self is not GenKind.EXTERIOR


class Freeness(enum.Enum):
    FREE = "Free"
    FREE_CHAR_ZERO_ONLY = "FreeCharZeroOnly"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Generator:
    label: str
    degree: int
    kind: GenKind

    def to_json(self) -> dict:
        return {"label": self.label, "degree": self.degree, "kind": self.kind.value}

    @classmethod
    def from_json(cls, obj: dict) -> "Generator":
        return cls(obj["label"], int(obj["degree"]), GenKind(obj["kind"]))


@dataclass(frozen=True)
class SumRelation:
    """``l_1 + ... + l_m = 0`` among exterior generators of one degree."""

    labels: tuple[str, ...]

    def to_json(self) -> dict:
        return {"type": "sum", "labels": list(self.labels)}


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class GradedAlgebraPresentation:
    generators: tuple[Generator, ...] = ()
    relations: tuple[SumRelation, ...] = ()
    freeness: Freeness = Freeness.FREE

    def __post_init__(self):
        by_label = {}
        for gen in self.generators:
            if gen.label in by_label:
                raise PresentationError(f"duplicate generator {gen.label}")
            if gen.degree < 1:
                raise PresentationError(f"generator {gen.label} must have positive degree")
            if gen.kind.is_even != (gen.degree % 2 == 0):
                raise PresentationError(
                    f"{gen.kind.value} generator {gen.label} has degree {gen.degree} "
                    "of the wrong parity")
            by_label[gen.label] = gen
        used = set()
        for rel in self.relations:
            if not isinstance(rel, SumRelation):
                raise PresentationError(f"unsupported relation {rel!r}")
            if len(rel.labels) < 2:
                raise PresentationError("a sum relation needs at least two generators")
            gens = []
            for lab in rel.labels:
                if lab not in by_label:
                    raise PresentationError(f"relation mentions unknown generator {lab}")
                if lab in used:
                    raise PresentationError(f"generator {lab} appears in two relations")
                used.add(lab)
                gens.append(by_label[lab])
            if any(g.kind is not GenKind.EXTERIOR for g in gens):
                raise PresentationError("sum relations must involve exterior generators only")
            if len({g.degree for g in gens}) != 1:
                raise PresentationError("sum relations must be homogeneous")

    def to_json(self) -> dict:
        return {
            "generators": [g.to_json() for g in self.generators],
            "relations": [r.to_json() for r in self.relations],
            "freeness": self.freeness.value,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GradedAlgebraPresentation":
        rels = []
        for r in obj.get("relations", []):
            if r.get("type") != "sum":
                raise PresentationError(f"unsupported relation form {r!r}")
            rels.append(SumRelation(tuple(r["labels"])))
        return cls(tuple(Generator.from_json(g) for g in obj["generators"]), tuple(rels),
                   Freeness(obj.get("freeness", "Free")))

    @property
    def is_exterior(self) -> bool:
        return all(g.kind is GenKind.EXTERIOR for g in self.generators)

    def __str__(self) -> str:
        return render(self)


def presentation_poincare(p: GradedAlgebraPresentation, n: int) -> TruncatedSeries:
    s = one(n)
    for gen in p.generators:
        if gen.kind is GenKind.EXTERIOR:
            s = series_mul(s, binomial_power(gen.degree, 1, n))
        else:
            s = series_div_cyclotomic(s, gen.degree)
    by_label = {g.label: g for g in p.generators}
    for rel in p.relations:
        # one exterior factor (1 + t^d) drops out: divide by it exactly
        d = by_label[rel.labels[0]].degree
        s = _divide_by_one_plus(s, d)
    return s


def _divide_by_one_plus(s: TruncatedSeries, d: int) -> TruncatedSeries:
    out = list(s.coeffs)
    for m in range(d, len(out)):
        out[m] -= out[m - d]
    return TruncatedSeries(tuple(out))


_SUBSCRIPT_SPLIT = "_"


def _stem(label: str) -> str:
    return label.split(_SUBSCRIPT_SPLIT, 1)[0]


def render(p: GradedAlgebraPresentation) -> str:
    if not p.generators:
        return "k"
    related = {}
    for rel in p.relations:
        for lab in rel.labels:
            related[lab] = rel
    parts = []
    key = lambda g: (g.kind, g.degree, _stem(g.label), related.get(g.label))
    for (kind, deg, _, rel), grp in groupby(p.generators, key=key):
        labels = [g.label for g in grp]
        if len(labels) > 2:
            names = f"{labels[0]},…,{labels[-1]}"
        else:
            names = ",".join(labels)
        symbol = {GenKind.EXTERIOR: "Λ", GenKind.POLYNOMIAL: "S",
                  GenKind.DIVIDED_POWER: "Γ"}[kind]
        text = f"{symbol}({names}; deg {deg})"
        if rel is not None:
            text += "/(" + "+".join(rel.labels) + ")"
        parts.append(text)
    return " ⊗ ".join(parts)


def numbered(stem: str, count: int, degree: int, kind: GenKind, start: int = 1) -> list[Generator]:
    return [Generator(f"{stem}_{i}", degree, kind) for i in range(start, start + count)]


def exterior_presentation(deg1: int, deg3: int, stems=("a", "c")) -> GradedAlgebraPresentation:
    gens = numbered(stems[0], deg1, 1, GenKind.EXTERIOR) + numbered(stems[1], deg3, 3, GenKind.EXTERIOR)
    return GradedAlgebraPresentation(tuple(gens))


def loop_group_presentation(circle: CircleType) -> GradedAlgebraPresentation:
    """Cohomology of the classifying space of the real loop group over one boundary circle."""
    if circle is CircleType.IDENTITY_MOEBIUS:
        return GradedAlgebraPresentation()
    return GradedAlgebraPresentation((Generator("q", 3, GenKind.EXTERIOR),
                                      Generator("p", 4, GenKind.POLYNOMIAL)))
