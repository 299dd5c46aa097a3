"""Topological types of real curves and of Real / Quaternionic bundles over them."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass


class ValidationError(ValueError):
    """Raised when discrete input data violates a classification constraint.

    ``violations`` holds one short machine-readable code per failed check.
    """

    def __init__(self, message: str, violations: list[str] | None = None):
        super().__init__(message)
        self.violations = list(violations or [])

    def to_json(self) -> dict:
        return {"error": str(self), "violations": self.violations}


class CurveKind(enum.Enum):
    TYPE0 = "0"
    TYPE_I = "I"
    TYPE_II = "II"

    @classmethod
    def parse(cls, text: str) -> "CurveKind":
        key = str(text).strip().upper().replace("TYPE", "").replace("_", "").strip()
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValidationError(f"unknown curve type {text!r}", ["curve_type"])


KIND_ORDER = {CurveKind.TYPE0: 0, CurveKind.TYPE_I: 1, CurveKind.TYPE_II: 2}


class CircleType(enum.Enum):
    IDENTITY_ORIENTABLE = "IdentityOrientable"
    IDENTITY_MOEBIUS = "IdentityMoebius"
    ANTIPODAL = "Antipodal"


class GaugeCase(enum.Enum):
    GENERIC = "Generic"
    ALL_MOEBIUS = "AllMoebius"
    ALL_ORIENTABLE = "AllOrientable"


@dataclass(frozen=True)
class CurveTopology:
    genus: int
    kind: CurveKind
    fixed_circles: int

    def to_json(self) -> dict:
        return {"genus": self.genus, "curve_type": self.kind.value, "circles": self.fixed_circles}

    @classmethod
    def from_json(cls, obj: dict) -> "CurveTopology":
        return cls(int(obj["genus"]), CurveKind.parse(obj["curve_type"]), int(obj["circles"]))


@dataclass(frozen=True)
class SurfaceDecomposition:
    """Half surface of genus ``half_genus`` with ``boundary_circles`` boundary
    components, ``identity_glued`` of which are glued to their copy by the identity."""

    half_genus: int
    boundary_circles: int
    identity_glued: int

    @property
    def genus(self) -> int:
        return 2 * self.half_genus + self.boundary_circles - 1

    def kind(self) -> CurveKind:
        if self.identity_glued == 0:
            return CurveKind.TYPE0
        if self.identity_glued == self.boundary_circles:
            return CurveKind.TYPE_I
        return CurveKind.TYPE_II

    def check(self) -> None:
        errs = []
        if self.half_genus < 0:
            errs.append("half_genus")
        if self.boundary_circles < 1:
            errs.append("boundary_circles")
        if not 0 <= self.identity_glued <= self.boundary_circles:
            errs.append("identity_glued")
        if errs:
            raise ValidationError(f"invalid surface decomposition {self}", errs)


@dataclass(frozen=True)
class RealBundleType:
    rank: int
    degree: int
    w1: tuple[int, ...]

    @property
    def moebius_count(self) -> int:
        return sum(self.w1)

    @property
    def w1_string(self) -> str:
        return "".join(str(b) for b in self.w1)

    def to_json(self) -> dict:
        return {"rank": self.rank, "degree": self.degree, "w1": self.w1_string}

    @classmethod
    def from_json(cls, obj: dict) -> "RealBundleType":
        return cls(int(obj["rank"]), int(obj["degree"]), parse_w1(obj["w1"]))


@dataclass(frozen=True)
class QuaternionicBundleType:
    rank: int
    degree: int

    def to_json(self) -> dict:
        return {"rank": self.rank, "degree": self.degree}


def parse_w1(text: str) -> tuple[int, ...]:
    text = text.strip()
    if any(ch not in "01" for ch in text):
        raise ValidationError(f"w1 must be a string of 0/1 characters, got {text!r}", ["w1"])
    return tuple(int(ch) for ch in text)


def curve_violations(c: CurveTopology) -> list[str]:
    g, a = c.genus, c.fixed_circles
    errs = []
    if g < 0:
        errs.append("genus_negative")
    if a < 0:
        errs.append("circles_negative")
    if c.kind is CurveKind.TYPE0:
        if a != 0:
            errs.append("type0_has_no_circles")
    elif c.kind is CurveKind.TYPE_I:
        if not 1 <= a <= g + 1:
            errs.append("type1_circle_range")
        if (a - g - 1) % 2:
            errs.append("parity")
    else:
        if not 1 <= a <= g:
            errs.append("type2_circle_range")
    return errs


def validate_curve(c: CurveTopology) -> None:
    errs = curve_violations(c)
    if errs:
        raise ValidationError(f"invalid real curve {c.to_json()}: " + ", ".join(errs), errs)


def valid_curves(genus: int):
    """All valid curve topologies of the given genus, in (kind, circles) order."""
    yield CurveTopology(genus, CurveKind.TYPE0, 0)
    for a in range(1, genus + 2):
        if (a - genus - 1) % 2 == 0:
            yield CurveTopology(genus, CurveKind.TYPE_I, a)
    for a in range(1, genus + 1):
        yield CurveTopology(genus, CurveKind.TYPE_II, a)


def enumerate_real_bundles(c: CurveTopology, rank: int, degree: int) -> list[RealBundleType]:
    validate_curve(c)
    want = degree % 2
    out = []
    for bits in itertools.product((0, 1), repeat=c.fixed_circles):
        if sum(bits) % 2 == want:
            out.append(RealBundleType(rank, degree, bits))
    return out


def validate_real_bundle(c: CurveTopology, b: RealBundleType) -> None:
    validate_curve(c)
    errs = []
    if b.rank < 1:
        errs.append("rank")
    if len(b.w1) != c.fixed_circles:
        errs.append("w1_length")
    elif (b.moebius_count - b.degree) % 2:
        errs.append("parity")
    if errs:
        raise ValidationError(
            f"invalid Real bundle {b.to_json()} over {c.to_json()}: " + ", ".join(errs), errs)


def quaternionic_violations(c: CurveTopology, rank: int, degree: int) -> list[str]:
    errs = []
    if rank < 1:
        errs.append("rank")
    if (degree - rank * (c.genus - 1)) % 2:
        errs.append("parity")
    if rank % 2 == 1 and c.kind is not CurveKind.TYPE0:
        errs.append("odd_rank_needs_no_real_points")
    return errs


def validate_quaternionic(c: CurveTopology, rank: int, degree: int) -> None:
    validate_curve(c)
    errs = quaternionic_violations(c, rank, degree)
    if errs:
        raise ValidationError(
            f"no Quaternionic bundle of rank {rank}, degree {degree} over {c.to_json()}: "
            + ", ".join(errs), errs)


def decompose_surface(c: CurveTopology) -> SurfaceDecomposition:
    """Canonical decomposition: fewest boundary circles compatible with the type."""
    validate_curve(c)
    g, a = c.genus, c.fixed_circles
    if c.kind is CurveKind.TYPE0:
        raise ValidationError("gauge computations need real points; type 0 curve rejected",
                              ["no_real_points"])
    if c.kind is CurveKind.TYPE_I:
        n = a
    else:
        n = a + 1
        if (n - g - 1) % 2:
            n += 1
    return SurfaceDecomposition((g + 1 - n) // 2, n, a)


def all_decompositions(c: CurveTopology) -> list[SurfaceDecomposition]:
    """Every decomposition realising ``c``, canonical one first."""
    first = decompose_surface(c)
    out = [first]
    if c.kind is CurveKind.TYPE_II:
        n = first.boundary_circles + 2
        while n <= c.genus + 1:
            out.append(SurfaceDecomposition((c.genus + 1 - n) // 2, n, c.fixed_circles))
            n += 2
    return out


def circle_types(c: CurveTopology, b: RealBundleType,
                 dec: SurfaceDecomposition | None = None) -> list[CircleType]:
    """Boundary circle kinds: identity-glued circles in w1 order, then antipodal ones."""
    validate_real_bundle(c, b)
    dec = dec or decompose_surface(c)
    kinds = [CircleType.IDENTITY_MOEBIUS if bit else CircleType.IDENTITY_ORIENTABLE for bit in b.w1]
    kinds += [CircleType.ANTIPODAL] * (dec.boundary_circles - dec.identity_glued)
    return kinds


def classify_gauge_case(c: CurveTopology, b: RealBundleType) -> GaugeCase:
    if c.fixed_circles == 0:
        raise ValidationError("gauge case needs a curve with real points", ["no_real_points"])
    validate_real_bundle(c, b)
    if all(b.w1) and c.kind is CurveKind.TYPE_I:
        return GaugeCase.ALL_MOEBIUS
    if not any(b.w1):
        return GaugeCase.ALL_ORIENTABLE
    return GaugeCase.GENERIC
