"""Exact arithmetic in the cyclotomic field Q(zeta_12).

Elements are stored as four rational coordinates ``(c0, c1, c2, c3)`` meaning
``c0 + c1*z + c2*z**2 + c3*z**3`` where ``z = exp(i*pi/6)`` is reduced with
``z**4 = z**2 - 1``.  The field holds both the cubic root of unity
``j = z**4 = exp(2*pi*i/3)`` and ``i = z**3``.

The human-readable form uses the basis ``{1, j, i, ij}``, e.g. ``"1 - j + 1/2*ij"``.
"""
from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Union

Number = Union[int, Fraction]

_ZETA = cmath.exp(1j * cmath.pi / 6)
_ZETA_FLOAT = tuple(_ZETA**k for k in range(4))


def _reduce_poly(p: list) -> tuple:
    # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
    return (p[0] - p[4] - p[6], p[1] - p[5], p[2] + p[4], p[3] + p[5])


def _normalized(nums: tuple, den: int) -> tuple:
    g = gcd(*nums, den)
    if g != 1:
        nums = tuple(x // g for x in nums)
        den //= g
    return nums, den


class CycloScalar:
    """Immutable element of Q(zeta_12).

    Internally four integer numerators over one positive denominator, kept in
    lowest terms so equality is a tuple comparison.
    """

    __slots__ = ("nums", "den")

    def __init__(self, c0: Number = 0, c1: Number = 0, c2: Number = 0, c3: Number = 0):
        fr = [Fraction(c) for c in (c0, c1, c2, c3)]
        den = lcm(*(f.denominator for f in fr))
        self.nums, self.den = _normalized(tuple(int(f * den) for f in fr), den)

    @classmethod
    def _raw(cls, nums: tuple, den: int) -> "CycloScalar":
        obj = cls.__new__(cls)
        obj.nums, obj.den = _normalized(nums, den)
        return obj

    @classmethod
    def coerce(cls, x) -> "CycloScalar":
        if isinstance(x, CycloScalar):
            return x
        if isinstance(x, int):
            return cls._raw((x, 0, 0, 0), 1)
        if isinstance(x, Fraction):
            return cls._raw((x.numerator, 0, 0, 0), x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to CycloScalar")

    @property
    def coords(self) -> tuple:
        """Rational coordinates on 1, z, z^2, z^3."""
        return tuple(Fraction(n, self.den) for n in self.nums)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            o = CycloScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return CycloScalar._raw(tuple(a + b for a, b in zip(self.nums, o.nums)), self.den)
        return CycloScalar._raw(tuple(a * o.den + b * self.den for a, b in zip(self.nums, o.nums)),
                                self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar._raw(tuple(-a for a in self.nums), self.den)

    def __sub__(self, other):
        try:
            o = CycloScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloScalar.coerce(other)
        elif not isinstance(other, CycloScalar):
            return NotImplemented
        a0, a1, a2, a3 = self.nums
        b0, b1, b2, b3 = other.nums
        p = (
            a0 * b0,
            a0 * b1 + a1 * b0,
            a0 * b2 + a1 * b1 + a2 * b0,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            a1 * b3 + a2 * b2 + a3 * b1,
            a2 * b3 + a3 * b2,
            a3 * b3,
        )
        return CycloScalar._raw(_reduce_poly(p), self.den * other.den)

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycloScalar":
        """Apply the automorphism z -> z**k (k coprime to 12)."""
        k %= 12
        if k not in (1, 5, 7, 11):
            raise ValueError("k must be a unit mod 12")
        images = [zeta_power(k * m).nums for m in range(4)]
        nums = tuple(sum(n * img[r] for n, img in zip(self.nums, images)) for r in range(4))
        return CycloScalar._raw(nums, self.den)

    def conj(self) -> "CycloScalar":
        """Complex conjugation, z -> z**-1."""
        return self.galois(11)

    def norm(self) -> Fraction:
        """Field norm down to Q: product of the four Galois images."""
        prod = self * self.galois(5) * self.galois(7) * self.galois(11)
        assert not any(prod.nums[1:]), "norm left Q"
        return Fraction(prod.nums[0], prod.den)

    def inverse(self) -> "CycloScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
        cofactor = self.galois(5) * self.galois(7) * self.galois(11)
        n = self * cofactor
        return cofactor * Fraction(n.den, n.nums[0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, CycloScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycloScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.nums)

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.conj() == self

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def __eq__(self, other):
        try:
            o = CycloScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.nums == o.nums and self.den == o.den

    def __hash__(self):
        return hash((self.nums, self.den))

    # -- conversions ------------------------------------------------------

    def to_float(self) -> complex:
        return sum(n * z for n, z in zip(self.nums, _ZETA_FLOAT)) / self.den

    __complex__ = to_float

    def __abs__(self) -> float:
        return abs(self.to_float())

    def basis_coords(self) -> tuple:
        """Coordinates ``(a, b, c, d)`` in the basis ``1, j, i, ij``."""
        c0, c1, c2, c3 = self.coords
        return (c0 + c2, c2, c3, -c1)

    @classmethod
    def from_basis(cls, a: Number = 0, b: Number = 0, c: Number = 0, d: Number = 0):
        # j = z^2 - 1, i = z^3, ij = -z
        return cls(Fraction(a) - Fraction(b), -Fraction(d), b, c)

    def __str__(self):
        terms = []
        for coef, name in zip(self.basis_coords(), ("", "j", "i", "ij")):
            if not coef:
                continue
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            if name and mag == 1:
                body = name
            elif name:
                body = f"{mag}*{name}"
            else:
                body = str(mag)
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"CycloScalar({str(self)!r})"


_TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)(?:\*(ij|j|i))?|(ij|j|i))")


def parse_scalar(text: str) -> CycloScalar:
    """Inverse of ``str(CycloScalar)``."""
    s = re.sub(r"\s*([+*-])\s*", r"\1", text.strip())
    if not s or re.search(r"\s", s):
        raise ValueError("empty scalar literal")
    coeffs = {"": Fraction(0), "j": Fraction(0), "i": Fraction(0), "ij": Fraction(0)}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (pos > 0 and not m.group(1)):
            raise ValueError(f"malformed scalar literal: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(4):
            coeffs[m.group(4)] += sign
        else:
            coeffs[m.group(3) or ""] += sign * Fraction(m.group(2))
        pos = m.end()
    return CycloScalar.from_basis(coeffs[""], coeffs["j"], coeffs["i"], coeffs["ij"])


ZERO = CycloScalar()
ONE = CycloScalar(1)
ZETA = CycloScalar(0, 1)

_ZETA_POWERS = [ONE]
for _ in range(11):
    _ZETA_POWERS.append(_ZETA_POWERS[-1] * ZETA)


def zeta_power(n: int) -> CycloScalar:
    """``z**n`` for any integer n (z has order 12)."""
    return _ZETA_POWERS[n % 12]


J = zeta_power(4)
J2 = zeta_power(8)
I = zeta_power(3)
SQRT3 = ZETA + zeta_power(11)


def csum(values: Iterable) -> CycloScalar:
    return reduce(lambda a, b: a + b, values, ZERO)


def random_scalar(rng, bound: int = 3, denominators: tuple = (1,)) -> CycloScalar:
    """Random element with integer-ish coordinates drawn from ``rng`` (numpy Generator)."""
    coords = []
    for _ in range(4):
        num = int(rng.integers(-bound, bound + 1))
        den = denominators[int(rng.integers(len(denominators)))]
        coords.append(Fraction(num, den))
    return CycloScalar(*coords)
