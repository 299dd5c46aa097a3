"""Finite-type graded-commutative differential graded algebras.

Monomials are exponent tuples indexed by generator position.  Exterior generators
carry exponent 0 or 1; for a divided-power generator the exponent ``k`` stands for
the basis element ``gamma_k``.  Products are normalised to generator index order
with the Koszul sign of the exterior reordering.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Mapping, Sequence

from ..field import FieldSpec
from ..presentation import GenKind, Generator

Monomial = tuple[int, ...]
Element = dict  # Monomial -> coefficient


class CDGAError(ValueError):
    pass


@dataclass(frozen=True)
class SparseMatrix:
    """Matrix of a linear map with one sparse row ``{target column: coefficient}`` per
    source basis element."""

    nrows: int
    ncols: int
    rows: tuple[dict, ...]

    def is_zero(self) -> bool:
        return not any(self.rows)

    def to_dense(self) -> list[list]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out[i][j] = v
        return out

    def compose(self, other: "SparseMatrix", field: FieldSpec) -> "SparseMatrix":
        """Matrix of ``other ∘ self`` (apply ``self`` first)."""
        if self.ncols != other.nrows:
            raise CDGAError("shape mismatch in composition")
        rows = []
        for row in self.rows:
            acc: dict = {}
            for j, v in row.items():
                for k, w in other.rows[j].items():
                    acc[k] = field.reduce(acc.get(k, 0) + v * w)
            rows.append({k: v for k, v in acc.items() if v})
        return SparseMatrix(self.nrows, other.ncols, tuple(rows))


class CDGA:
    """Free graded-commutative algebra on ``generators`` with a differential given on
    generators and extended by the Leibniz rule
    ``d(ab) = d(a) b + (-1)^{|a|} a d(b)``."""

    def __init__(self, generators: Sequence[Generator],
                 differential: Mapping[str, Iterable] | None = None,
                 field: FieldSpec | None = None):
        self.generators = tuple(generators)
        self.field = field or FieldSpec(0)
        self.index = {}
        for i, gen in enumerate(self.generators):
            if gen.label in self.index:
                raise CDGAError(f"duplicate generator {gen.label}")
            if gen.degree < 1:
                raise CDGAError(f"generator {gen.label} needs positive degree")
            if gen.kind.is_even != (gen.degree % 2 == 0):
                raise CDGAError(f"{gen.kind.value} generator {gen.label} has degree "
                                f"{gen.degree} of the wrong parity")
            self.index[gen.label] = i
        self.degrees = tuple(g.degree for g in self.generators)
        self.kinds = tuple(g.kind for g in self.generators)
        self.odd = tuple(k is GenKind.EXTERIOR for k in self.kinds)
        self.images: list[Element] = [{} for _ in self.generators]
        for label, terms in (differential or {}).items():
            if label not in self.index:
                raise CDGAError(f"differential given for unknown generator {label}")
            i = self.index[label]
            elem: Element = {}
            for coeff, mono in terms:
                exps = self._monomial(mono)
                if self.degree(exps) != self.degrees[i] + 1:
                    raise CDGAError(f"non-homogeneous differential: d({label}) has a term of "
                                    f"degree {self.degree(exps)}, expected {self.degrees[i] + 1}")
                c = self.field.reduce(elem.get(exps, 0) + Fraction(coeff))
                elem[exps] = c
            self.images[i] = {m: c for m, c in elem.items() if c}

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def _monomial(self, mono) -> Monomial:
        if isinstance(mono, tuple) and len(mono) == len(self.generators) and all(
                isinstance(e, int) for e in mono):
            exps = list(mono)
        else:
            exps = [0] * len(self.generators)
            items = mono.items() if isinstance(mono, Mapping) else [(lab, 1) for lab in mono]
            for lab, e in items:
                if lab not in self.index:
                    raise CDGAError(f"unknown generator {lab} in differential")
                exps[self.index[lab]] += e
        for i, e in enumerate(exps):
            if e < 0 or (self.odd[i] and e > 1):
                raise CDGAError(f"invalid exponent {e} for generator {self.generators[i].label}")
        return tuple(exps)

    def degree(self, exps: Monomial) -> int:
        return sum(e * d for e, d in zip(exps, self.degrees))

    def label(self, exps: Monomial) -> str:
        parts = []
        for gen, e in zip(self.generators, exps):
            if e == 0:
                continue
            if gen.kind is GenKind.DIVIDED_POWER:
                parts.append(f"γ{e}({gen.label})")
            else:
                parts.append(gen.label if e == 1 else f"{gen.label}^{e}")
        return "·".join(parts) or "1"

    def multiply(self, a: Monomial, b: Monomial):
        """Normal form of ``a*b`` as ``(coefficient, monomial)``, or ``None`` if zero."""
        coeff = 1
        inversions = 0
        odd_in_a_above = 0
        n = len(a)
        # count pairs (i in a, j in b) of odd generators with i > j
        for j in range(n - 1, -1, -1):
            if self.odd[j]:
                if b[j] and a[j]:
                    return None
                if b[j]:
                    inversions += odd_in_a_above
                if a[j]:
                    odd_in_a_above += 1
        out = []
        for i in range(n):
            ai, bi = a[i], b[i]
            if ai and bi and self.kinds[i] is GenKind.DIVIDED_POWER:
                coeff *= comb(ai + bi, ai)
            out.append(ai + bi)
        if inversions % 2:
            coeff = -coeff
        coeff = self.field.reduce(coeff)
        if coeff == 0:
            return None
        return coeff, tuple(out)

    def d_monomial(self, exps: Monomial) -> Element:
        out: Element = {}
        n = len(exps)
        sign = 1
        for j in range(n):
            e = exps[j]
            if e == 0:
                continue
            image = self.images[j]
            if image:
                kind = self.kinds[j]
                factor = e if kind is GenKind.POLYNOMIAL else 1
                head = exps[:j] + (e - 1,) + (0,) * (n - j - 1)
                tail = (0,) * (j + 1) + exps[j + 1:]
                for mono, c in image.items():
                    left = self.multiply(head, mono)
                    if left is None:
                        continue
                    full = self.multiply(left[1], tail)
                    if full is None:
                        continue
                    val = sign * factor * c * left[0] * full[0]
                    key = full[1]
                    out[key] = self.field.reduce(out.get(key, 0) + val)
            if self.odd[j]:
                sign = -sign
        return {m: c for m, c in out.items() if c}

    def d(self, elem: Element) -> Element:
        out: Element = {}
        for mono, c in elem.items():
            for m2, c2 in self.d_monomial(mono).items():
                out[m2] = self.field.reduce(out.get(m2, 0) + c * c2)
        return {m: c for m, c in out.items() if c}

    def to_json(self) -> dict:
        diff = {}
        for gen, image in zip(self.generators, self.images):
            diff[gen.label] = [
                {"coeff": str(c),
                 "monomial": {self.generators[i].label: e for i, e in enumerate(m) if e}}
                for m, c in sorted(image.items(), reverse=True)]
        return {"generators": [g.to_json() for g in self.generators],
                "differential": diff, "char": self.characteristic}

    @classmethod
    def from_json(cls, obj: dict) -> "CDGA":
        gens = [Generator.from_json(g) for g in obj["generators"]]
        diff = {lab: [(Fraction(t["coeff"]), t["monomial"]) for t in terms]
                for lab, terms in obj.get("differential", {}).items()}
        return cls(gens, diff, FieldSpec(int(obj.get("char", 0))))


def monomial_basis(c: CDGA, m: int) -> list[Monomial]:
    """Monomials of total degree ``m``, in descending lexicographic order of exponents."""
    if m < 0:
        return []
    n = len(c.generators)
    out: list[Monomial] = []
    exps = [0] * n
    degs = c.degrees
    odd = c.odd

    def rec(i: int, remaining: int) -> None:
        if i == n:
            if remaining == 0:
                out.append(tuple(exps))
            return
        top = 1 if odd[i] else remaining // degs[i]
        top = min(top, remaining // degs[i])
        for e in range(top, -1, -1):
            exps[i] = e
            rec(i + 1, remaining - e * degs[i])
        exps[i] = 0

    rec(0, m)
    return out


def differential_matrix(c: CDGA, m: int, source: list[Monomial] | None = None,
                        target: list[Monomial] | None = None) -> SparseMatrix:
    source = monomial_basis(c, m) if source is None else source
    target = monomial_basis(c, m + 1) if target is None else target
    col = {mono: j for j, mono in enumerate(target)}
    rows = []
    for mono in source:
        rows.append({col[k]: v for k, v in c.d_monomial(mono).items()})
    return SparseMatrix(len(source), len(target), tuple(rows))


def integral_rows(rows: Iterable[dict]) -> list[dict]:
    """Clear denominators row by row; row scaling leaves the rank unchanged."""
    out = []
    for row in rows:
        den = 1
        for v in row.values():
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        out.append({j: int(v * den) for j, v in row.items()})
    return out
