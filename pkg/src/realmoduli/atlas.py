"""One row per (curve topology, Real bundle type): the full set of computed results."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from .field import FieldSpec
from .gauge import bg_cohomology, fixed_determinant_invariants, moduli_cohomology
from .stratification import normal_bundle_orientability, strata_table
from .topology import (CurveTopology, RealBundleType, ValidationError, enumerate_real_bundles,
                       quaternionic_violations, valid_curves)

MAX_ATLAS_GENUS = 12


@dataclass
class AtlasRow:
    genus: int
    curve_type: str
    circles: int
    rank: int
    degree: int
    w1: str
    case: Optional[str]
    verdict: Optional[str]
    triggered_condition: Optional[str]
    strata: list = field(default_factory=list)
    bg_series: Optional[list] = None
    moduli_series: Optional[list] = None
    moduli_partial_up_to: Optional[int] = None
    moduli_is_exterior: Optional[str] = None
    fixed_determinant_series: Optional[list] = None
    quaternionic_valid: bool = False
    citations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, obj: dict) -> "AtlasRow":
        return cls(**obj)


def atlas_row(c: CurveTopology, b: RealBundleType, k: FieldSpec, n: int,
              max_codim: int) -> AtlasRow:
    row = AtlasRow(c.genus, c.kind.value, c.fixed_circles, b.rank, b.degree, b.w1_string,
                   None, None, None)
    row.quaternionic_valid = not quaternionic_violations(c, b.rank, b.degree)
    if b.rank != 2:
        return row
    verdict = normal_bundle_orientability(c, b)
    row.verdict = verdict.verdict.value
    row.triggered_condition = verdict.triggered.value if verdict.triggered else None
    row.strata = strata_table(c, b, max_codim)
    anchors = []
    if c.fixed_circles >= 1:
        bg = bg_cohomology(c, b, k, n)
        row.case = bg.case.value
        row.bg_series = bg.betti()
        anchors += [ct["anchor"] for ct in bg.citations]
        if b.degree % 2 and c.genus >= 2:
            mod = moduli_cohomology(c, b, k, n)
            row.moduli_series = mod.betti()
            row.moduli_partial_up_to = mod.partial_up_to
            row.moduli_is_exterior = mod.flags["is_exterior"]
            fd = fixed_determinant_invariants(c, b, k, n)
            row.fixed_determinant_series = fd.betti()
            anchors += [ct["anchor"] for ct in fd.citations]
    row.citations = list(dict.fromkeys(anchors))
    return row


def _row_task(args) -> AtlasRow:
    return atlas_row(*args)


def atlas(genera, degree: int, k: FieldSpec, n: int, max_codim: int, rank: int = 2,
          jobs: int = 1) -> list[AtlasRow]:
    genera = sorted(set(genera))
    bad = [g for g in genera if not 1 <= g <= MAX_ATLAS_GENUS]
    if bad:
        raise ValidationError(f"atlas genus range must lie in 1..{MAX_ATLAS_GENUS}, got {bad}",
                              ["genus_guardrail"])
    tasks = []
    for g in genera:
        for c in valid_curves(g):
            for b in enumerate_real_bundles(c, rank, degree):
                tasks.append((c, b, k, n, max_codim))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_row_task, tasks))
    return [_row_task(t) for t in tasks]
