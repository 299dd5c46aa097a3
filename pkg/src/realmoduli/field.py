from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .topology import ValidationError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``characteristic=0``) or F_p for an odd prime p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 2:
            raise ValidationError("characteristic 2 unsupported", ["characteristic_2"])
        if p != 0 and not _is_prime(p):
            raise ValidationError(f"characteristic must be 0 or an odd prime, got {p}",
                                  ["characteristic"])

    def reduce(self, x) -> int | Fraction:
        """Canonical representative: integers/fractions in char 0, residues in char p."""
        p = self.characteristic
        if p == 0:
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ValidationError(f"{x} is not defined in characteristic {p}", ["denominator"])
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def to_json(self) -> int:
        return self.characteristic
