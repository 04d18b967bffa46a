"""Dense univariate polynomials over a FieldDescriptor.

Coefficients are stored low to high with no trailing zeros, so the zero
polynomial has an empty coefficient tuple and degree None.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import FieldMismatchError, InvalidParameterError
from .ff import FieldDescriptor, FieldElement


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # constructors

    @classmethod
    def x(cls, field: FieldDescriptor) -> Polynomial:
        return cls(field, [0, 1])

    @classmethod
    def constant(cls, field: FieldDescriptor, c) -> Polynomial:
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: FieldDescriptor, degree: int, c=1) -> Polynomial:
        return cls(field, [0] * degree + [c])

    @classmethod
    def linear(cls, field: FieldDescriptor, root) -> Polynomial:
        """x - root."""
        return cls(field, [-field(root), 1])

    # queries

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    @property
    def leading(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coeffs) if c)

    def __getitem__(self, i: int) -> FieldElement:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else self.field.zero

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __call__(self, a) -> FieldElement:
        a = self.field(a)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    # ring operations

    def _coerce(self, b) -> Polynomial:
        if isinstance(b, Polynomial):
            if b.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {b.field}")
            return b
        return Polynomial(self.field, [b])

    def __add__(self, b):
        b = self._coerce(b)
        n = max(len(self.coeffs), len(b.coeffs))
        return Polynomial(self.field, [self[i] + b[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, b):
        return self + (-self._coerce(b))

    def __rsub__(self, b):
        return self._coerce(b) - self

    def __mul__(self, b):
        b = self._coerce(b)
        if not self.coeffs or not b.coeffs:
            return Polynomial(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise InvalidParameterError("negative polynomial power")
        result, base = Polynomial(self.field, [1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, b):
        b = self._coerce(b)
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = b.degree
        inv = b.leading.inv()
        quot = [self.field.zero] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] * inv
            if c:
                quot[i - db] = c
                for j, y in enumerate(b.coeffs):
                    rem[i - db + j] = rem[i - db + j] - c * y
        return Polynomial(self.field, quot), Polynomial(self.field, rem[:db])

    def __floordiv__(self, b):
        return divmod(self, b)[0]

    def __mod__(self, b):
        return divmod(self, b)[1]

    def __eq__(self, b) -> bool:
        if isinstance(b, Polynomial):
            return self.field == b.field and self.coeffs == b.coeffs
        if isinstance(b, (int, FieldElement)):
            return self == self._coerce(b)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # the weight-preserving normalizations

    def multiplicity_at(self, xi) -> int:
        """Largest k with (x - xi)^k dividing self, by repeated synthetic division.

        Correct in every characteristic, unlike the derivative test.
        """
        if not self:
            raise InvalidParameterError("multiplicity at a root of the zero polynomial is undefined")
        xi = self.field(xi)
        cs = list(self.coeffs)
        k = 0
        while len(cs) > 1:
            # Horner: quotient coefficients and remainder of cs / (x - xi)
            quot = [self.field.zero] * (len(cs) - 1)
            acc = self.field.zero
            for i in range(len(cs) - 1, -1, -1):
                acc = acc * xi + cs[i]
                if i:
                    quot[i - 1] = acc
            if acc:
                break
            cs = quot
            k += 1
        return k

    def strip_x_power(self) -> tuple[Polynomial, int]:
        if not self:
            raise InvalidParameterError("cannot strip powers of x from the zero polynomial")
        s = next(i for i, c in enumerate(self.coeffs) if c)
        return Polynomial(self.field, self.coeffs[s:]), s

    def dilate_root(self, xi) -> Polynomial:
        """f(xi * x): a root at xi becomes a root at 1 of the same multiplicity.

        Coefficient i is scaled by xi^i, so the weight is unchanged.
        """
        xi = self.field(xi)
        if not xi:
            raise InvalidParameterError("dilation by zero")
        out, power = [], self.field.one
        for c in self.coeffs:
            out.append(c * power)
            power = power * xi
        return Polynomial(self.field, out)

    # text and JSON

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        rationals = self.field.kind == "rationals"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "+"
            if rationals and c.value < 0:
                sign, c = "-", -c
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                term = str(c)
            elif c == self.field.one:
                term = mono
            else:
                term = f"{c}*{mono}"
            if not parts:
                parts.append(term if sign == "+" else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, {self.field})"

    _TERM = re.compile(r"^(?:(?P<c>[^*]+)\*)?x(?:\^(?P<e>\d+))?$")

    @classmethod
    def parse(cls, field: FieldDescriptor, text: str) -> Polynomial:
        """Inverse of str(): e.g. "x^3 + 2*x^2 + x" or "x^3 + 3/2*x^2 - 1/2"."""
        s = text.replace(" ", "")
        if not s:
            raise InvalidParameterError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        terms = re.findall(r"([+-])([^+-]+)", s)
        if "".join(a + b for a, b in terms) != s:
            raise InvalidParameterError(f"cannot parse polynomial {text!r}")
        coeffs: dict[int, FieldElement] = {}
        for sign, body in terms:
            m = cls._TERM.match(body)
            if m:
                c = field.parse(m["c"]) if m["c"] else field.one
                e = int(m["e"]) if m["e"] else 1
            else:
                c, e = field.parse(body), 0
            if sign == "-":
                c = -c
            coeffs[e] = coeffs.get(e, field.zero) + c
        top = max(coeffs)
        return cls(field, [coeffs.get(i, 0) for i in range(top + 1)])

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> Polynomial:
        F = FieldDescriptor.from_json(data["field"])
        return cls(F, [F.parse(c) for c in data["coeffs"]])


def weight(f: Polynomial) -> int:
    return f.weight


def multiplicity_at(f: Polynomial, xi) -> int:
    return f.multiplicity_at(xi)


def strip_x_power(f: Polynomial) -> tuple[Polynomial, int]:
    return f.strip_x_power()


def dilate_root(f: Polynomial, xi) -> Polynomial:
    return f.dilate_root(xi)


def ring_ops(a: Polynomial, b: Polynomial | int, op: str):
    """Dispatch add, mul, divmod or pow (b is the exponent for pow)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divmod":
        return divmod(a, b)
    if op == "pow":
        return a ** int(b)
    raise InvalidParameterError(f"unknown operation {op!r}")
