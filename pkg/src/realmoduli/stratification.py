"""Harder–Narasimhan strata of rank-two Real bundles and the orientability of their
normal bundles.

Unstable strata are indexed by the degree ``d1`` of the maximal destabilising line
sub-bundle.  Whether a stratum changes cohomology in characteristic other than 2
depends only on the orientability of its normal bundle: nonorientable strata have
acyclic Thom spaces, orientable ones enter through a Gysin shift by their real
codimension.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .topology import (CurveKind, CurveTopology, RealBundleType, ValidationError,
                       validate_real_bundle)


@dataclass(frozen=True)
class Stratum:
    scss_degree: int
    real_codim: int
    fixed_component_count: Optional[int] = None

    def to_json(self) -> dict:
        return {"d1": self.scss_degree, "codim": self.real_codim,
                "components": self.fixed_component_count}


class Verdict(enum.Enum):
    ALL_NONORIENTABLE = "AllNonorientable"
    ALL_ORIENTABLE = "AllOrientable"
    INDETERMINATE = "Indeterminate"


class Trigger(enum.Enum):
    PARITY = "Parity"
    TYPE_I_VANISHING_COMPONENT = "TypeIVanishingComponent"
    TYPE_II = "TypeII"
    CONVERSE = "Converse"


@dataclass(frozen=True)
class OrientabilityVerdict:
    verdict: Verdict
    triggered: Optional[Trigger] = None

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value,
                "triggered_condition": self.triggered.value if self.triggered else None}


@dataclass(frozen=True)
class ContributionRule:
    kind: str  # "Vanishing" or "Gysin"
    shift: Optional[int] = None

    def __str__(self) -> str:
        return self.kind if self.shift is None else f"{self.kind}({self.shift})"


def stratum_codim(genus: int, degree: int, d1: int) -> int:
    return 2 * d1 - degree + genus - 1


def minimal_scss_degree(degree: int) -> int:
    # smallest integer strictly above d/2
    return degree // 2 + 1


def enumerate_strata(genus: int, degree: int, max_codim: int,
                     circles: int | None = None) -> list[Stratum]:
    if max_codim < 0:
        raise ValueError("max_codim must be non-negative")
    comps = 2 ** (2 * circles - 2) if circles else None
    out = []
    d1 = minimal_scss_degree(degree)
    while True:
        codim = stratum_codim(genus, degree, d1)
        if codim > max_codim:
            break
        out.append(Stratum(d1, codim, comps))
        d1 += 1
    return out


def normal_bundle_orientability(c: CurveTopology, b: RealBundleType) -> OrientabilityVerdict:
    if b.rank != 2:
        raise ValidationError(f"orientability rule is for rank two bundles, got rank {b.rank}",
                              ["rank"])
    validate_real_bundle(c, b)
    nonor = Verdict.ALL_NONORIENTABLE
    if (b.degree - c.genus) % 2 == 0:
        return OrientabilityVerdict(nonor, Trigger.PARITY)
    if c.kind is CurveKind.TYPE_I and not all(b.w1):
        return OrientabilityVerdict(nonor, Trigger.TYPE_I_VANISHING_COMPONENT)
    if c.kind is CurveKind.TYPE_II:
        return OrientabilityVerdict(nonor, Trigger.TYPE_II)
    if c.fixed_circles >= 1:
        return OrientabilityVerdict(Verdict.ALL_ORIENTABLE, Trigger.CONVERSE)
    return OrientabilityVerdict(Verdict.INDETERMINATE)


def stratum_contribution(v: OrientabilityVerdict, s: Stratum) -> ContributionRule:
    if v.verdict is Verdict.ALL_NONORIENTABLE:
        return ContributionRule("Vanishing")
    if v.verdict is Verdict.ALL_ORIENTABLE:
        return ContributionRule("Gysin", s.real_codim)
    raise ValidationError("contribution is undetermined for an indeterminate verdict",
                          ["indeterminate"])


def betti_agreement_cutoff(genus: int, degree: int) -> int:
    """Degree up to which the semistable part has the Betti numbers of the whole space.

    Every unstable stratum has real codimension at least the minimal one, so a Gysin
    shift can only disturb degrees ``>= codim_min - 1``.
    """
    if degree % 2 == 0:
        raise ValidationError("Betti agreement cutoff is defined for odd degree only",
                              ["degree_even"])
    codim_min = stratum_codim(genus, degree, minimal_scss_degree(degree))
    return codim_min - 2


def strata_table(c: CurveTopology, b: RealBundleType, max_codim: int) -> list[dict]:
    """Rows ``{d1, codim, contribution}``; contribution is the verdict name when undetermined."""
    verdict = normal_bundle_orientability(c, b)
    rows = []
    for s in enumerate_strata(c.genus, b.degree, max_codim, c.fixed_circles):
        if verdict.verdict is Verdict.INDETERMINATE:
            contrib = Verdict.INDETERMINATE.value
        else:
            contrib = str(stratum_contribution(verdict, s))
        rows.append({"d1": s.scss_degree, "codim": s.real_codim, "contribution": contrib})
    return rows
