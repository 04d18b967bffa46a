"""Exact coefficient fields: the rationals, prime fields F_p and extensions F_{p^m}.

Elements of F_{p^m} are stored as coordinate tuples (c_0, ..., c_{m-1}) with
respect to the power basis 1, x, ..., x^{m-1} of F_p[x]/(modulus).  The
modulus is the first monic irreducible of degree m in lexicographic order of
(c_{m-1}, ..., c_0), so make_field(p, m) is canonical.

Every element also has an integer index whose base-p digits are its
coordinates (c_0 least significant).  Index order is the coordinate
lexicographic order used by enumerate_elements: 0, 1, 2, ...
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    CapacityError,
    FieldMismatchError,
    InvalidParameterError,
    NotEnumerableError,
)

MAX_FIELD_ORDER = int(os.environ.get("MINWEIGHT_MAX_FIELD_ORDER", 10_000))

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^m, raising InvalidParameterError if q is not a prime power."""
    if q < 2:
        raise InvalidParameterError(f"q={q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise InvalidParameterError(f"q={q} is not a prime power")
    return p, m


# -- dense polynomials over F_p as int lists (low to high), for the modulus search


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _rem_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(a[:db])


def _monic_lex(deg: int, p: int) -> Iterator[list[int]]:
    # (c_{deg-1}, ..., c_0) in lexicographic order; lists are low to high
    for top_down in itertools.product(range(p), repeat=deg):
        yield list(reversed(top_down)) + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2 over F_p."""
    m = len(poly) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for g in _monic_lex(d, p):
            if not _rem_p(poly, g, p):
                return False
    return True


def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    for cand in _monic_lex(m, p):
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("unreachable: irreducibles exist in every degree")


# -- fields


@dataclass(frozen=True)
class FieldDescriptor:
    """An exact coefficient field; build with make_field, not directly."""

    kind: str  # "rationals" | "finite"
    p: int | None = None
    m: int = 1
    modulus: tuple[int, ...] | None = None  # low to high, only for m >= 2

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def characteristic(self) -> int:
        return self.p if self.is_finite else 0

    @property
    def q(self) -> int | None:
        return self.p**self.m if self.is_finite else None

    @property
    def zero(self) -> FieldElement:
        return self(0)

    @property
    def one(self) -> FieldElement:
        return self(1)

    @property
    def gen(self) -> FieldElement:
        """The class of x in F_p[x]/(modulus); for m = 1 this is just 1."""
        if not self.is_finite:
            raise InvalidParameterError("the rationals have no power-basis generator")
        if self.m == 1:
            return self.one
        return FieldElement(self, (0, 1) + (0,) * (self.m - 2))

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is not self and value.field != self:
                raise FieldMismatchError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "rationals":
            return FieldElement(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator == 1:
                value = value.numerator
            else:
                return self(value.numerator) / self(value.denominator)
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.m - 1))
        if isinstance(value, (tuple, list)):
            return self.element(value)
        raise TypeError(f"cannot convert {value!r} into {self}")

    def element(self, coords: Sequence[int]) -> FieldElement:
        """Element with the given power-basis coordinates (c_0, ..., c_{m-1})."""
        if len(coords) != self.m:
            raise InvalidParameterError(f"expected {self.m} coordinates, got {len(coords)}")
        return FieldElement(self, tuple(c % self.p for c in coords))

    def from_index(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise InvalidParameterError(f"index {index} outside [0, {self.q})")
        coords = []
        for _ in range(self.m):
            index, c = divmod(index, self.p)
            coords.append(c)
        return FieldElement(self, tuple(coords))

    def index(self, a: FieldElement) -> int:
        return sum(c * self.p**i for i, c in enumerate(a.value))

    def elements(self) -> list[FieldElement]:
        return enumerate_elements(self)

    def parse(self, text: str) -> FieldElement:
        text = text.strip()
        if self.kind == "rationals":
            return FieldElement(self, Fraction(text))
        if self.m == 1:
            return self(int(text))
        if ":" in text:
            digits = [int(t) for t in text.split(":")]
        else:
            digits = [_DIGITS.index(ch) for ch in text.lower()]
        if len(digits) != self.m or any(not 0 <= d < self.p for d in digits):
            raise InvalidParameterError(f"{text!r} is not an element of {self}")
        return FieldElement(self, tuple(reversed(digits)))

    def to_json(self) -> dict:
        if self.kind == "rationals":
            return {"kind": "rationals"}
        out = {"kind": "finite", "p": self.p, "m": self.m, "q": self.q}
        if self.modulus is not None:
            out["modulus"] = list(self.modulus)
        return out

    @classmethod
    def from_json(cls, data: dict) -> FieldDescriptor:
        if data["kind"] == "rationals":
            return make_field(None)
        F = make_field(data["p"], data.get("m", 1))
        if "modulus" in data and tuple(data["modulus"]) != F.modulus:
            raise InvalidParameterError("only canonical moduli are supported")
        return F

    def __str__(self) -> str:
        if self.kind == "rationals":
            return "QQ"
        return f"GF({self.q})"


@functools.lru_cache(maxsize=None)
def make_field(p: int | None = None, m: int = 1) -> FieldDescriptor:
    """Canonical field descriptor: the rationals when p is None, else F_{p^m}.

    >>> make_field(2, 3).modulus
    (1, 1, 0, 1)
    """
    if p is None:
        return FieldDescriptor("rationals")
    if not is_prime(p):
        raise InvalidParameterError(f"invalid characteristic: {p} is not prime")
    if m < 1:
        raise InvalidParameterError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_FIELD_ORDER:
        raise CapacityError(f"field of order {p}^{m} exceeds the limit {MAX_FIELD_ORDER}")
    modulus = canonical_modulus(p, m) if m >= 2 else None
    return FieldDescriptor("finite", p, m, modulus)


def field_of_order(q: int) -> FieldDescriptor:
    return make_field(*prime_power(q))


def enumerate_elements(F: FieldDescriptor) -> list[FieldElement]:
    if not F.is_finite:
        raise NotEnumerableError("the rationals cannot be enumerated")
    return [F.from_index(i) for i in range(F.q)]


class FieldElement:
    """Immutable element of a FieldDescriptor.

    value is a Fraction for the rationals and a coordinate tuple otherwise.
    Plain ints are accepted as the other operand of every operator.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, b) -> FieldElement:
        if isinstance(b, FieldElement):
            if b.field is not self.field and b.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {b.field}")
            return b
        return self.field(b)

    def __bool__(self) -> bool:
        if self.field.kind == "rationals":
            return self.value != 0
        return any(self.value)

    def __eq__(self, b) -> bool:
        if isinstance(b, FieldElement):
            return self.field == b.field and self.value == b.value
        if isinstance(b, (int, Fraction)):
            return self == self.field(b)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __add__(self, b):
        b = self._other(b)
        if self.field.kind == "rationals":
            return FieldElement(self.field, self.value + b.value)
        p = self.field.p
        return FieldElement(self.field, tuple((x + y) % p for x, y in zip(self.value, b.value)))

    __radd__ = __add__

    def __neg__(self):
        if self.field.kind == "rationals":
            return FieldElement(self.field, -self.value)
        p = self.field.p
        return FieldElement(self.field, tuple(-x % p for x in self.value))

    def __sub__(self, b):
        return self + (-self._other(b))

    def __rsub__(self, b):
        return self._other(b) - self

    def __mul__(self, b):
        b = self._other(b)
        F = self.field
        if F.kind == "rationals":
            return FieldElement(F, self.value * b.value)
        p, m = F.p, F.m
        if m == 1:
            return FieldElement(F, (self.value[0] * b.value[0] % p,))
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(self.value):
            if x:
                for j, y in enumerate(b.value):
                    prod[i + j] += x * y
        mod = F.modulus
        # modulus is monic: x^m = -(c_0 + ... + c_{m-1} x^{m-1})
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(m):
                    prod[i - m + j] -= c * mod[j]
        return FieldElement(F, tuple(c % p for c in prod[:m]))

    __rmul__ = __mul__

    def inv(self) -> FieldElement:
        if not self:
            raise ZeroDivisionError(f"inverse of zero in {self.field}")
        F = self.field
        if F.kind == "rationals":
            return FieldElement(F, 1 / self.value)
        if F.m == 1:
            return FieldElement(F, (pow(self.value[0], F.p - 2, F.p),))
        return self ** (F.q - 2)

    def __truediv__(self, b):
        return self * self._other(b).inv()

    def __rtruediv__(self, b):
        return self._other(b) * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __str__(self) -> str:
        F = self.field
        if F.kind == "rationals":
            return str(self.value)
        if F.m == 1:
            return str(self.value[0])
        if F.p <= len(_DIGITS):
            return "".join(_DIGITS[c] for c in reversed(self.value))
        return ":".join(str(c) for c in reversed(self.value))

    def __repr__(self) -> str:
        return f"FieldElement({str(self)!r}, {self.field})"


def arith(a: FieldElement, b: FieldElement | int | None, op: str) -> FieldElement:
    """Dispatch one of add, sub, mul, div, inv, neg, pow (b is the exponent for pow)."""
    if op == "inv":
        return a.inv()
    if op == "neg":
        return -a
    if b is None:
        raise InvalidParameterError(f"operation {op!r} needs a second operand")
    if op == "pow":
        return a ** int(b)
    ops = {
        "add": a.__add__,
        "sub": a.__sub__,
        "mul": a.__mul__,
        "div": a.__truediv__,
    }
    if op not in ops:
        raise InvalidParameterError(f"unknown operation {op!r}")
    if isinstance(b, FieldElement) and b.field != a.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    return ops[op](b)
