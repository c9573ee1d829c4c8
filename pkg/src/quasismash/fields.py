"""Exact scalar fields.

Scalars are plain Python numbers: ``int``/``Fraction`` over Q and
``int`` in ``range(p)`` over GF(p).  A field object knows how to bring a
raw value into canonical form, invert it, and read/write it as text.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache


class Field:
    name = "?"
    zero = 0
    one = 1

    def normalize(self, x):
        raise NotImplementedError

    def coerce(self, x):
        return self.normalize(x)

    def inv(self, x):
        raise NotImplementedError

    def div(self, x, y):
        return self.normalize(x * self.inv(y))

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def spec(self) -> str:
        return self.name

    def __repr__(self):
        return f"<field {self.name}>"


class Rationals(Field):
    name = "Q"

    def normalize(self, x):
        if type(x) is int:
            return x
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, int):
            return int(x)
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.normalize(Fraction(1) / x)

    def parse(self, text):
        s = text.strip().replace("−", "-")
        if not re.fullmatch(r"[+-]?\d+(/[+-]?\d+)?", s):
            raise ValueError(f"not a rational literal: {text!r}")
        return self.normalize(Fraction(s))

    def format(self, x):
        x = self.normalize(x)
        return str(x)


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 3 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"characteristic must be an odd prime, got {p}")
        self.p = p
        self.name = f"Fp:{p}"

    def normalize(self, x):
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def parse(self, text):
        s = text.strip().replace("−", "-")
        m = re.fullmatch(r"([+-]?\d+(?:/[+-]?\d+)?)(?:\s*mod\s*(\d+))?", s)
        if not m:
            raise ValueError(f"not a scalar literal: {text!r}")
        if m.group(2) is not None and int(m.group(2)) != self.p:
            raise ValueError(f"modulus {m.group(2)} does not match field {self.name}")
        f = Fraction(m.group(1))
        if f.denominator % self.p == 0:
            raise ValueError(f"denominator divisible by {self.p}: {text!r}")
        return self.normalize(f)

    def format(self, x):
        return f"{self.normalize(x)} mod {self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """``"Q"`` or ``"Fp:<p>"``."""
    s = spec.strip()
    if s == "Q":
        return QQ
    m = re.fullmatch(r"Fp:(\d+)", s)
    if m:
        return GF(int(m.group(1)))
    raise ValueError(f"unknown field {spec!r}; expected 'Q' or 'Fp:<p>'")
