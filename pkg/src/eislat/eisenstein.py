"""Exact arithmetic in the Eisenstein integers E = Z[w], w = exp(2 pi i / 3).

Elements are stored on the basis {1, w}.  Magnitudes are only ever compared
through the integer norm a^2 - ab + b^2, never through floats.
"""

from __future__ import annotations

import re
from typing import Union

__all__ = [
    "EisInt",
    "ZERO",
    "ONE",
    "OMEGA",
    "OMEGA_BAR",
    "THETA",
    "UNITS",
    "norm",
    "euclid_div",
    "nearest_quotient",
    "exact_div",
    "divides",
    "gcd",
    "mod_theta",
    "canonical_associate",
    "is_unit",
    "unit_power",
    "parse_eis",
]


class EisInt:
    """The Eisenstein integer a + b*w."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        self.a = int(a)
        self.b = int(b)

    @classmethod
    def coerce(cls, x: Union["EisInt", int]) -> "EisInt":
        if isinstance(x, EisInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, (tuple, list)) and len(x) == 2:
            return cls(x[0], x[1])
        raise TypeError(f"cannot interpret {x!r} as an Eisenstein integer")

    def __repr__(self) -> str:
        return f"EisInt({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.b == 1:
            w = "w"
        elif self.b == -1:
            w = "-w"
        else:
            w = f"{self.b}w"
        if self.a == 0:
            return w
        return f"{self.a}{w}" if w.startswith("-") else f"{self.a}+{w}"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EisInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __add__(self, other):
        if isinstance(other, int):
            return EisInt(self.a + other, self.b)
        if isinstance(other, EisInt):
            return EisInt(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return EisInt(self.a - other, self.b)
        if isinstance(other, EisInt):
            return EisInt(self.a - other.a, self.b - other.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return EisInt(other - self.a, -self.b)
        return NotImplemented

    def __neg__(self) -> "EisInt":
        return EisInt(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, int):
            return EisInt(self.a * other, self.b * other)
        if isinstance(other, EisInt):
            a, b, c, d = self.a, self.b, other.a, other.b
            bd = b * d
            # w^2 = -1 - w
            return EisInt(a * c - bd, a * d + b * c - bd)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "EisInt":
        if k < 0:
            raise ValueError("negative powers are not defined in E (use unit_power for units)")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "EisInt":
        # conj(w) = w^2 = -1 - w
        return EisInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)

    def sort_key(self) -> tuple[int, int]:
        return (self.a, self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def to_complex(self) -> complex:
        """Floating point value, for display only."""
        return complex(self.a - self.b / 2, self.b * 3 ** 0.5 / 2)


ZERO = EisInt(0, 0)
ONE = EisInt(1, 0)
OMEGA = EisInt(0, 1)
OMEGA_BAR = EisInt(-1, -1)
THETA = EisInt(1, 2)  # w - wbar = sqrt(-3)

# (-w)^k for k = 0..5; index k is the exponent of the hexflection eigenvalue.
UNITS = (
    EisInt(1, 0),
    EisInt(0, -1),
    EisInt(-1, -1),
    EisInt(-1, 0),
    EisInt(0, 1),
    EisInt(1, 1),
)


def norm(x: EisInt) -> int:
    return x.norm()


def is_unit(x: EisInt) -> bool:
    return EisInt.coerce(x).norm() == 1


def unit_power(u: EisInt, k: int) -> EisInt:
    """u**k for a unit u, any integer k."""
    if not is_unit(u):
        raise ValueError(f"{u} is not a unit")
    k %= 6
    r = ONE
    for _ in range(k):
        r = r * u
    return r


def nearest_quotient(n: EisInt, d: EisInt) -> EisInt:
    """The Eisenstein integer q closest to n/d.

    Always satisfies 3 * norm(n - q*d) <= norm(d), the exact form of the
    covering radius 1/sqrt(3).  Ties go to the lexicographically least (a, b).
    """
    n, d = EisInt.coerce(n), EisInt.coerce(d)
    N = d.norm()
    if N == 0:
        raise ZeroDivisionError("division by zero in E")
    m = n * d.conj()  # n/d = m / N
    a0, b0 = m.a // N, m.b // N
    # n/d sits in a unit cell made of two equilateral triangles of side 1,
    # so the nearest lattice point is one of the four cell corners.
    best = None
    best_key = None
    for da in (0, 1):
        for db in (0, 1):
            q = EisInt(a0 + da, b0 + db)
            key = ((n - q * d).norm(), q.a, q.b)
            if best_key is None or key < best_key:
                best, best_key = q, key
    return best


def euclid_div(n: EisInt, d: EisInt) -> tuple[EisInt, EisInt]:
    """Return (q, r) with n = q*d + r and norm(r) < norm(d)."""
    n, d = EisInt.coerce(n), EisInt.coerce(d)
    q = nearest_quotient(n, d)
    return q, n - q * d


def exact_div(n: EisInt, d: EisInt) -> EisInt:
    """n / d, raising ArithmeticError unless d divides n."""
    n, d = EisInt.coerce(n), EisInt.coerce(d)
    N = d.norm()
    if N == 0:
        raise ZeroDivisionError("division by zero in E")
    m = n * d.conj()
    if m.a % N or m.b % N:
        raise ArithmeticError(f"{d} does not divide {n}")
    return EisInt(m.a // N, m.b // N)


def divides(d: EisInt, n: EisInt) -> bool:
    d, n = EisInt.coerce(d), EisInt.coerce(n)
    if not d:
        return not n
    m = n * d.conj()
    N = d.norm()
    return m.a % N == 0 and m.b % N == 0


def canonical_associate(x: EisInt) -> EisInt:
    """The associate of x with argument in [0, pi/3); zero maps to zero.

    In coordinates that is the unique associate with a > b >= 0.
    """
    x = EisInt.coerce(x)
    if not x:
        return x
    for u in UNITS:
        y = x * u
        if y.a > y.b >= 0:
            return y
    raise AssertionError("unreachable: every nonzero element has a first-sextant associate")


def gcd(x: EisInt, y: EisInt) -> EisInt:
    x, y = EisInt.coerce(x), EisInt.coerce(y)
    while y:
        _, r = euclid_div(x, y)
        x, y = y, r
    return canonical_associate(x)


def mod_theta(x: EisInt) -> int:
    """Image of x in E / theta E = F_3, as a residue in {0, 1, 2}.

    w = 1 + (w - 1) and theta divides w - 1, so a + b*w reduces to a + b.
    """
    x = EisInt.coerce(x)
    return (x.a + x.b) % 3


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(wb|w|)")


def parse_eis(text: str) -> EisInt:
    """Parse '3', '-1+2w', '2-wb', '1+2*w' (w = omega, wb = omega-bar)."""
    s = text.replace(" ", "").lower()
    if not s:
        raise ValueError("empty Eisenstein integer")
    pos = 0
    total = ZERO
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse Eisenstein integer {text!r}")
        sign, digits, sym = m.groups()
        if not digits and not sym:
            raise ValueError(f"cannot parse Eisenstein integer {text!r}")
        if pos > 0 and not sign:
            raise ValueError(f"missing operator in {text!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        if sym == "w":
            total = total + EisInt(0, c)
        elif sym == "wb":
            total = total + OMEGA_BAR * c
        else:
            total = total + c
        pos = m.end()
    return total
