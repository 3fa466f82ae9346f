"""Dense integer polynomials with exact coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    if not c:
        c = [0]
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial over the integers; ``coefficients[d]`` multiplies ``x**d``.

    The zero polynomial is stored as ``(0,)`` so ``degree`` is 0 for it.
    """

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Sequence[int] = (0,)):
        object.__setattr__(self, "coefficients", _trim(int(c) for c in coefficients))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def linear(cls, constant: int, slope: int = 1) -> IntPolynomial:
        """``slope*x + constant``."""
        return cls([constant, slope])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def __getitem__(self, d: int) -> int:
        if 0 <= d < len(self.coefficients):
            return self.coefficients[d]
        return 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        n = max(len(self), len(other))
        return IntPolynomial([self[d] + other[d] for d in range(n)])

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coefficients])

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)})"


def _coerce(p: IntPolynomial | int) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    return IntPolynomial([p])
