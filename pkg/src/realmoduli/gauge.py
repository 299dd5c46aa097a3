"""Closed-form cohomology of real gauge groups, of the odd-degree moduli spaces and
of their fixed-determinant invariants, plus the Koszul–Tate model checked by the
oracle in :mod:`realmoduli.dga`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .field import FieldSpec
from .presentation import (Freeness, GenKind, Generator, GradedAlgebraPresentation,
                           SumRelation, exterior_presentation, numbered)
from .series import (TruncatedSeries, binomial_power, series_div, series_div_cyclotomic,
                     series_mul)
from .stratification import Verdict, betti_agreement_cutoff, normal_bundle_orientability
from .topology import (CircleType, CurveTopology, GaugeCase, QuaternionicBundleType,
                       RealBundleType, SurfaceDecomposition, ValidationError,
                       classify_gauge_case, validate_curve, validate_quaternionic,
                       validate_real_bundle)
from .dga.algebra import CDGA


class Subject(enum.Enum):
    CLASSIFYING_SPACE = "ClassifyingSpace"
    MODULI_SPACE = "ModuliSpace"
    MODULI_STACK = "ModuliStack"
    FIXED_DETERMINANT_INVARIANTS = "FixedDeterminantInvariants"


# Anchors naming the result each report relies on, with its formula.
CITATIONS = {
    "classification": {
        "result": "classification of Real bundles by rank, degree and w1",
        "statement": "d ≡ w1(Σ^τ) mod 2; 2^(a-1) types for a ≥ 1 circles"},
    "bg_generic": {
        "result": "real gauge group cohomology, generic type",
        "statement": "H*(BG) exterior, P_t = (1+t)^g (1+t^3)^(g-1)"},
    "bg_all_moebius": {
        "result": "real gauge group cohomology, type I with every w1 bit 1",
        "statement": "H*(BG) free, P_t = (1+t)^g (1+t^3)^g / (1-t^2)"},
    "bg_all_orientable": {
        "result": "real gauge group cohomology, every w1 bit 0",
        "statement": "P_t = (1+t)^g (1+t^3)^g / (1-t^4); free in characteristic 0"},
    "orientability": {
        "result": "orientability of normal bundles to unstable strata",
        "statement": "nonorientable if d ≡ g mod 2, or type I with a w1 zero, or type II"},
    "thom_vanishing": {
        "result": "nonorientable normal bundle over (S^1)^2g × RP^∞",
        "statement": "H*(N, N_0; k) = 0 for char k ≠ 2"},
    "equivariant_iso": {
        "result": "gauge group cohomology equals moduli cohomology",
        "statement": "H*(BG; k) ≅ H*(M(E,τ̃); k) when all strata are nonorientable and d is odd"},
    "moduli_exterior": {
        "result": "odd-degree rank-two moduli cohomology",
        "statement": "Λ(g generators of degree 1, g-1 of degree 3); real dimension 4g-3"},
    "betti_agreement": {
        "result": "Thom–Gysin agreement below the minimal codimension",
        "statement": "b_i(M) = b_i(BG) for i ≤ g-2; b_1 = g, b_2 = C(g,2)+1 in the exceptional type"},
    "fixed_determinant": {
        "result": "fixed-determinant factorisation",
        "statement": "H*(M) ≅ H*(M_Λ)^(T_2) ⊗ Λ(g generators of degree 1)"},
    "quaternionic_stack": {
        "result": "rank-two Quaternionic bundles over curves with real points",
        "statement": "every invariant operator is semistable, so ℳ(E,τ̃) ≃ BG"},
}


def _cite(*keys: str) -> list[dict]:
    return [dict(anchor=k, **CITATIONS[k]) for k in keys]


@dataclass
class CohomologyReport:
    subject: Subject
    case: Optional[GaugeCase]
    genus: int
    degree: int
    series: Optional[TruncatedSeries] = None
    presentation: Optional[GradedAlgebraPresentation] = None
    partial_up_to: Optional[int] = None
    flags: dict = field(default_factory=dict)
    citations: list = field(default_factory=list)
    real_dimension: Optional[int] = None
    statement: Optional[str] = None

    def betti(self) -> list[int]:
        return list(self.series.coeffs) if self.series is not None else []

    def to_json(self) -> dict:
        pres = None
        if self.presentation is not None:
            pres = self.presentation.to_json()
            pres["text"] = str(self.presentation)
        return {
            "subject": self.subject.value,
            "case": self.case.value if self.case else None,
            "genus": self.genus,
            "degree": self.degree,
            "series": self.series.to_json() if self.series is not None else None,
            "presentation": pres,
            "partial_up_to": self.partial_up_to,
            "flags": dict(self.flags),
            "citations": list(self.citations),
            "real_dimension": self.real_dimension,
            "statement": self.statement,
        }


def _require_gauge_inputs(c: CurveTopology, b: RealBundleType) -> None:
    validate_curve(c)
    if c.fixed_circles == 0:
        raise ValidationError("gauge group cohomology needs a curve with real points",
                              ["no_real_points"])
    if b.rank != 2:
        raise ValidationError(f"only rank two is supported, got rank {b.rank}", ["rank"])
    validate_real_bundle(c, b)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def bg_series(genus: int, case: GaugeCase, n: int) -> TruncatedSeries:
    g = genus
    if case is GaugeCase.GENERIC:
        if g < 1:
            raise ValidationError("generic case needs genus >= 1", ["genus"])
        return series_mul(binomial_power(1, g, n), binomial_power(3, g - 1, n))
    base = series_mul(binomial_power(1, g, n), binomial_power(3, g, n))
    return series_div_cyclotomic(base, 2 if case is GaugeCase.ALL_MOEBIUS else 4)


def bg_cohomology(c: CurveTopology, b: RealBundleType, k: FieldSpec, n: int) -> CohomologyReport:
    _require_gauge_inputs(c, b)
    g = c.genus
    case = classify_gauge_case(c, b)
    char0 = k.characteristic == 0
    series = bg_series(g, case, n)
    if case is GaugeCase.GENERIC:
        pres = exterior_presentation(g, g - 1)
        flags = {"is_exterior": "yes", "ring_known": "yes"}
        cites = _cite("bg_generic")
    elif case is GaugeCase.ALL_MOEBIUS:
        gens = (numbered("a", g, 1, GenKind.EXTERIOR) + numbered("c", g, 3, GenKind.EXTERIOR)
                + [Generator("z", 2, GenKind.DIVIDED_POWER)])
        pres = GradedAlgebraPresentation(
            tuple(gens), freeness=Freeness.FREE if char0 else Freeness.FREE_CHAR_ZERO_ONLY)
        flags = {"is_exterior": "no", "ring_known": _yes(char0)}
        cites = _cite("bg_all_moebius")
    else:
        gens = (numbered("a", g, 1, GenKind.EXTERIOR) + numbered("c", g, 3, GenKind.EXTERIOR)
                + [Generator("p", 4, GenKind.POLYNOMIAL)])
        pres = GradedAlgebraPresentation(
            tuple(gens), freeness=Freeness.FREE if char0 else Freeness.FREE_CHAR_ZERO_ONLY)
        flags = {"is_exterior": "no", "ring_known": _yes(char0)}
        cites = _cite("bg_all_orientable")
    flags["characteristic"] = k.characteristic
    # even degree: no coarse moduli space, the answer describes the stack-level object
    flags["stack_level"] = b.degree % 2 == 0
    return CohomologyReport(Subject.CLASSIFYING_SPACE, case, g, b.degree, series, pres,
                            flags=flags, citations=_cite("classification") + cites)


def _require_moduli_inputs(c: CurveTopology, b: RealBundleType) -> None:
    if b.degree % 2 == 0:
        raise ValidationError("moduli space results need odd degree", ["degree_even"])
    if c.genus < 2:
        raise ValidationError("moduli space results need genus >= 2", ["genus"])
    if c.fixed_circles == 0:
        raise ValidationError("odd degree Real bundles need real points", ["no_real_points"])
    _require_gauge_inputs(c, b)


def moduli_cohomology(c: CurveTopology, b: RealBundleType, k: FieldSpec, n: int) -> CohomologyReport:
    _require_moduli_inputs(c, b)
    g, d = c.genus, b.degree
    dim = 4 * g - 3
    case = classify_gauge_case(c, b)
    verdict = normal_bundle_orientability(c, b)
    flags = {"characteristic": k.characteristic}
    if case is not GaugeCase.ALL_MOEBIUS:
        assert verdict.verdict is Verdict.ALL_NONORIENTABLE, verdict
        top = min(n, dim)
        series = bg_series(g, GaugeCase.GENERIC, top)
        flags.update(is_exterior="yes", ring_known="yes")
        return CohomologyReport(
            Subject.MODULI_SPACE, case, g, d, series, exterior_presentation(g, g - 1),
            flags=flags, real_dimension=dim,
            citations=_cite("orientability", "thom_vanishing", "equivariant_iso",
                            "bg_generic", "moduli_exterior"))
    assert verdict.verdict is Verdict.ALL_ORIENTABLE, verdict
    cutoff = betti_agreement_cutoff(g, d)
    top = min(n, cutoff)
    series = bg_series(g, case, top) if top >= 0 else None
    flags.update(is_exterior="no" if g >= 4 else "unknown", ring_known="no")
    return CohomologyReport(
        Subject.MODULI_SPACE, case, g, d, series, None, partial_up_to=top,
        flags=flags, real_dimension=dim,
        citations=_cite("orientability", "bg_all_moebius", "betti_agreement"))


def fixed_determinant_invariants(c: CurveTopology, b: RealBundleType, k: FieldSpec,
                                 n: int) -> CohomologyReport:
    full = moduli_cohomology(c, b, k, n)
    g = c.genus
    flags = {"characteristic": k.characteristic}
    dim = 3 * g - 3
    if full.partial_up_to is None:
        top = min(n, dim)
        pres = GradedAlgebraPresentation(tuple(numbered("c", g - 1, 3, GenKind.EXTERIOR)))
        flags.update(is_exterior="yes", ring_known="yes")
        return CohomologyReport(
            Subject.FIXED_DETERMINANT_INVARIANTS, full.case, g, b.degree,
            binomial_power(3, g - 1, top), pres, flags=flags, real_dimension=dim,
            citations=full.citations + _cite("fixed_determinant"))
    top = full.partial_up_to
    series = series_div(full.series, binomial_power(1, g, top)) if full.series else None
    first = None
    if series is not None:
        first = next((i for i in range(1, len(series)) if series[i]), None)
    flags.update(is_exterior="no" if g >= 4 else "unknown", ring_known="no",
                 first_positive_invariant_degree=first)
    return CohomologyReport(
        Subject.FIXED_DETERMINANT_INVARIANTS, full.case, g, b.degree, series, None,
        partial_up_to=top, flags=flags, real_dimension=dim,
        citations=full.citations + _cite("fixed_determinant"))


def quaternionic_stack_report(c: CurveTopology, q: QuaternionicBundleType) -> CohomologyReport:
    validate_curve(c)
    if q.rank != 2:
        raise ValidationError(f"only rank two is supported, got rank {q.rank}", ["rank"])
    validate_quaternionic(c, q.rank, q.degree)
    if c.fixed_circles == 0:
        raise ValidationError("the stack equivalence needs a curve with real points",
                              ["no_real_points"])
    return CohomologyReport(
        Subject.MODULI_STACK, None, c.genus, q.degree,
        flags={"quaternionic": True},
        statement="ℳ(E,τ̃) ≃ BG^τ̃ (no unstable strata)",
        citations=_cite("quaternionic_stack"))


def koszul_tate_generators(dec: SurfaceDecomposition, f: int,
                           k: FieldSpec) -> list[Generator]:
    n, hg = dec.boundary_circles, dec.half_genus
    zkind = GenKind.POLYNOMIAL if k.characteristic == 0 else GenKind.DIVIDED_POWER
    return (numbered("q", f, 3, GenKind.EXTERIOR) + numbered("p", f, 4, GenKind.POLYNOMIAL)
            + numbered("x", n - 1, 1, GenKind.EXTERIOR) + numbered("y", n - 1, 3, GenKind.EXTERIOR)
            + [Generator("z", 2, zkind)]
            + numbered("alpha", 2 * hg, 1, GenKind.EXTERIOR)
            + numbered("beta", 2 * hg, 3, GenKind.EXTERIOR))


def build_koszul_tate(dec: SurfaceDecomposition, circle_kinds: Sequence[CircleType],
                      k: FieldSpec) -> CDGA:
    """Koszul–Tate model whose cohomology is the E2 page for the gauge group.

    Non-Möbius circles are renumbered to positions ``1..f``.
    """
    dec.check()
    n, a = dec.boundary_circles, dec.identity_glued
    kinds = list(circle_kinds)
    errs = []
    if len(kinds) != n:
        errs.append("circle_count")
    elif any(ck is CircleType.ANTIPODAL for ck in kinds[:a]) or any(
            ck is not CircleType.ANTIPODAL for ck in kinds[a:]):
        errs.append("circle_order")
    if errs:
        raise ValidationError(f"circle kinds {[ck.value for ck in kinds]} inconsistent with {dec}",
                              errs)
    f = sum(ck is not CircleType.IDENTITY_MOEBIUS for ck in kinds)
    gens = koszul_tate_generators(dec, f, k)
    diff = {}
    for i in range(1, n):
        if f == n:
            diff[f"y_{i}"] = [(1, {f"p_{i}": 1}), (-1, {f"p_{n}": 1})]
        elif i <= f:
            diff[f"y_{i}"] = [(1, {f"p_{i}": 1})]
    if f > 0:
        diff["z"] = [(1, {f"q_{i}": 1}) for i in range(1, f + 1)]
    return CDGA(gens, diff, k)


def e2_presentation(dec: SurfaceDecomposition, f: int) -> GradedAlgebraPresentation:
    """The E2 page as a presentation, in the generator names of the Koszul–Tate model."""
    n, hg = dec.boundary_circles, dec.half_genus
    ext = GenKind.EXTERIOR
    gens = numbered("x", n - 1, 1, ext) + numbered("alpha", 2 * hg, 1, ext) + numbered("beta", 2 * hg, 3, ext)
    rels = ()
    if f > 0:
        qs = numbered("q", f, 3, ext)
        gens = qs + gens
        if f >= 2:
            rels = (SumRelation(tuple(q.label for q in qs)),)
        else:
            gens = gens[1:]  # a single q is killed by the relation
    if f == 0:
        gens += numbered("y", n - 1, 3, ext) + [Generator("z", 2, GenKind.DIVIDED_POWER)]
    elif f < n:
        gens += numbered("y", n - 1 - f, 3, ext, start=f + 1)
    else:
        gens += [Generator("p", 4, GenKind.POLYNOMIAL)]
    return GradedAlgebraPresentation(tuple(gens), rels)
