"""Arithmetic in GF(2^m) for small m, with GF(8) as the default instance.

Elements are plain ints whose bit i is the coefficient of x^i.  Products
go through log/antilog tables built once per field.
"""

from __future__ import annotations

from functools import lru_cache


class ZeroInverseError(ZeroDivisionError):
    pass


def _poly_mod(a: int, m: int) -> int:
    deg = m.bit_length() - 1
    while a.bit_length() - 1 >= deg:
        a ^= m << (a.bit_length() - 1 - deg)
    return a


def is_irreducible(modulus: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2 over GF(2)."""
    deg = modulus.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for p in range(1 << d, 1 << (d + 1)):
            if _poly_mod(modulus, p) == 0:
                return False
    return True


class Field:
    """GF(2^degree) defined by an irreducible ``modulus``.

    The modulus must also be primitive (x generates the unit group) since
    the log tables are built from powers of x.
    """

    def __init__(self, degree: int = 3, modulus: int = 0b1011):
        if modulus.bit_length() - 1 != degree:
            raise ValueError(f"modulus {modulus:#b} does not have degree {degree}")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus:#b} is reducible over GF(2)")
        self.degree = degree
        self.modulus = modulus
        self.order = 1 << degree
        n = self.order - 1
        antilog = []
        log = [None] * self.order
        x = 1
        for i in range(n):
            if log[x] is not None:
                raise ValueError(f"modulus {modulus:#b} is not primitive")
            antilog.append(x)
            log[x] = i
            x <<= 1
            if x & self.order:
                x ^= modulus
        self.antilog = tuple(antilog)
        self.log = tuple(log)

    def __repr__(self):
        return f"Field(degree={self.degree}, modulus={self.modulus:#b})"

    @property
    def elements(self) -> range:
        return range(self.order)

    def _check(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of GF({self.order})")

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        return self.antilog[(self.log[a] + self.log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroInverseError("0 has no multiplicative inverse")
        return self.antilog[-self.log[a] % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if a == 0:
            if e < 0:
                raise ZeroInverseError("0 has no multiplicative inverse")
            return 1 if e == 0 else 0
        return self.antilog[(self.log[a] * e) % (self.order - 1)]

    def frobenius(self, a: int, times: int = 1) -> int:
        """a -> a^(2^times)."""
        return self.pow(a, 1 << (times % self.degree))

    def primitive_element(self) -> int:
        return self.antilog[1]


@lru_cache(maxsize=None)
def gf8() -> Field:
    return Field(3, 0b1011)


GF8 = gf8()
add = GF8.add
mul = GF8.mul
inv = GF8.inv
frobenius = GF8.frobenius
