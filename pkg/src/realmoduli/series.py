"""Truncated formal power series in one variable ``t`` with integer coefficients.

Every Poincaré series handled by the package is an instance of
:class:`TruncatedSeries`.  The truncation degree is always explicit and
binary operations resolve mismatched truncations to the smaller one, so no
coefficient is ever reported beyond what is actually known.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of a power series known up to ``t^N``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series needs at least the constant term")
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be integers, got {c!r}")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], truncation: int | None = None) -> "TruncatedSeries":
        cs = [int(c) for c in coeffs]
        if truncation is None:
            truncation = len(cs) - 1
        if truncation < 0:
            raise ValueError("truncation must be non-negative")
        cs = cs[: truncation + 1] + [0] * (truncation + 1 - len(cs))
        return cls(tuple(cs))

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise ValueError("truncation must be non-negative")
        if n > self.truncation:
            raise ValueError(f"cannot extend a series known to t^{self.truncation} up to t^{n}")
        return TruncatedSeries(self.coeffs[: n + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.truncation, other.truncation)
        return TruncatedSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def evaluate(self, t: int) -> int:
        return sum(c * t**k for k, c in enumerate(self.coeffs))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "truncation": self.truncation}

    @classmethod
    def from_json(cls, obj: dict) -> "TruncatedSeries":
        return cls.from_coeffs(obj["coeffs"], obj["truncation"])

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            text = "0"
        else:
            first_sign, first = terms[0]
            text = ("-" if first_sign == "-" else "") + first
            text += "".join(f" {s} {b}" for s, b in terms[1:])
        return f"{text} + O(t^{self.truncation + 1})"


def one(n: int) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs([1], n)


def zero(n: int) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs([0], n)


def binomial_power(degree: int, exponent: int, n: int) -> TruncatedSeries:
    """``(1 + t^degree)^exponent`` for a non-negative exponent."""
    if degree < 1 or exponent < 0:
        raise ValueError("need degree >= 1 and exponent >= 0")
    cs = [0] * (n + 1)
    for j in range(exponent + 1):
        if j * degree > n:
            break
        cs[j * degree] = comb(exponent, j)
    return TruncatedSeries(tuple(cs))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.truncation, b.truncation)
    out = [0] * (n + 1)
    for i, ai in enumerate(a.coeffs[: n + 1]):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(tuple(out))


def series_div_cyclotomic(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply ``a`` by ``1/(1 - t^k)``, i.e. running sums along residues mod ``k``."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    out = list(a.coeffs)
    for m in range(k, len(out)):
        out[m] += out[m - k]
    return TruncatedSeries(tuple(out))


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact quotient ``a/b`` when ``b`` has constant term +-1 (a unit of Z[[t]])."""
    if b.coeffs[0] not in (1, -1):
        raise ValueError("divisor must have constant term +1 or -1")
    n = min(a.truncation, b.truncation)
    lead = b.coeffs[0]
    out = [0] * (n + 1)
    for m in range(n + 1):
        acc = a.coeffs[m] - sum(out[i] * b.coeffs[m - i] for i in range(m))
        out[m] = acc * lead
    return TruncatedSeries(tuple(out))


def product(factors: Sequence[TruncatedSeries], n: int) -> TruncatedSeries:
    acc = one(n)
    for f in factors:
        acc = series_mul(acc, f)
    return acc
