"""Weight lower bounds for polynomials with a nonzero root of multiplicity k.

In characteristic 0 the weight is at least k + 1.  In characteristic p it is
at least prod(k_t + 1) over the base-p digits k_t of k, attained by
(x - 1)^k = prod_t (x^{p^t} - 1)^{k_t}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import _kernel
from .errors import CapacityError, InvalidParameterError
from .ff import FieldDescriptor, FieldElement, is_prime
from .poly import Polynomial

DEFAULT_BUDGET = _kernel.DEFAULT_BUDGET


@dataclass(frozen=True)
class PadicExpansion:
    k: int
    p: int
    digits: tuple[int, ...]  # k_0, k_1, ..., least significant first

    @property
    def bound(self) -> int:
        return math.prod(d + 1 for d in self.digits)

    def value(self) -> int:
        return sum(d * self.p**t for t, d in enumerate(self.digits))

    def to_json(self) -> dict:
        return {"k": self.k, "p": self.p, "digits": list(self.digits), "bound": str(self.bound)}


def padic_digits(k: int, p: int) -> PadicExpansion:
    if k < 1:
        raise InvalidParameterError(f"multiplicity must be positive, got k={k}")
    if not is_prime(p):
        raise InvalidParameterError(f"invalid characteristic: {p} is not prime")
    digits, r = [], k
    while r:
        r, d = divmod(r, p)
        digits.append(d)
    return PadicExpansion(k, p, tuple(digits))


def weight_lower_bound(k: int, F: FieldDescriptor | int) -> int:
    """k + 1 in characteristic 0, prod(k_t + 1) in characteristic p.

    F may also be given directly as a characteristic (0 or a prime).
    """
    char = F if isinstance(F, int) else F.characteristic
    if k < 1:
        raise InvalidParameterError(f"multiplicity must be positive, got k={k}")
    if char == 0:
        return k + 1
    return padic_digits(k, char).bound


@dataclass(frozen=True)
class BoundReport:
    f: Polynomial
    xi: FieldElement
    multiplicity: int
    bound: int
    weight: int

    @property
    def holds(self) -> bool:
        return self.weight >= self.bound

    @property
    def tight(self) -> bool:
        return self.weight == self.bound

    def to_json(self) -> dict:
        return {
            "k": self.multiplicity,
            "bound": str(self.bound),
            "weight": str(self.weight),
            "holds": self.holds,
            "tight": self.tight,
            "field": self.f.field.to_json(),
            "poly": str(self.f),
        }


def check_bound(f: Polynomial, xi) -> BoundReport:
    if not f:
        raise InvalidParameterError("check_bound needs a nonzero polynomial")
    xi = f.field(xi)
    if not xi:
        raise InvalidParameterError("the root must be nonzero")
    k = f.multiplicity_at(xi)
    # k = 0: no root there, the bound is the trivial weight >= 1
    bound = weight_lower_bound(k, f.field) if k else 1
    return BoundReport(f, xi, k, bound, f.weight)


def extremal_example(k: int, F: FieldDescriptor) -> Polynomial:
    """(x - 1)^k, assembled as prod_t (x^{p^t} - 1)^{k_t} in characteristic p."""
    if k < 1:
        raise InvalidParameterError(f"multiplicity must be positive, got k={k}")
    if not F.is_finite:
        return Polynomial(F, [-1, 1]) ** k
    f = Polynomial(F, [1])
    for t, d in enumerate(padic_digits(k, F.p).digits):
        if d:
            f = f * (Polynomial.monomial(F, F.p**t) - 1) ** d
    return f


@dataclass(frozen=True)
class RatioReport:
    degree: int
    distinct_roots: tuple[FieldElement, ...]
    weight: int

    @property
    def ratio(self) -> Fraction | None:
        if not self.distinct_roots:
            return None
        return Fraction(self.degree, len(self.distinct_roots))

    @property
    def holds(self) -> bool:
        return self.ratio is None or self.weight >= self.ratio + 1

    @property
    def tight(self) -> bool:
        return self.ratio is not None and self.weight == self.ratio + 1

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "distinct_roots": [str(r) for r in self.distinct_roots],
            "weight": self.weight,
            "holds": self.holds,
            "tight": self.tight,
        }


def ratio_bound_check(f: Polynomial, roots: Iterable | None = None) -> RatioReport:
    """weight(f) >= deg(f) / #roots + 1 for f with f(0) != 0 that splits over its field.

    Over a finite field the roots are found by evaluating at every element;
    over the rationals the caller supplies them.  The inequality follows from
    some root carrying multiplicity >= deg / #roots, which needs f to be a
    product of linear factors; a polynomial that does not split is refused.
    Also refused: a root of multiplicity >= p in characteristic p.
    """
    if not f:
        raise InvalidParameterError("ratio check needs a nonzero polynomial")
    F = f.field
    if not f[0]:
        raise InvalidParameterError("f(0) = 0; apply strip_x_power first")
    if F.is_finite:
        found = tuple(a for a in F.elements() if a and not f(a))
    else:
        if roots is None:
            raise InvalidParameterError("roots must be supplied over the rationals")
        found = tuple(dict.fromkeys(F(r) for r in roots))
        for r in found:
            if f(r):
                raise InvalidParameterError(f"{r} is not a root of {f}")
    if not found:
        return RatioReport(f.degree, (), f.weight)
    mults = [f.multiplicity_at(r) for r in found]
    if F.is_finite and max(mults) >= F.p:
        raise InvalidParameterError(
            f"a root has multiplicity {max(mults)} >= p = {F.p}; the ratio bound does not apply"
        )
    if sum(mults) != f.degree:
        raise InvalidParameterError("f does not split into linear factors over the given roots")
    return RatioReport(f.degree, found, f.weight)


def empirical_min_weight(k: int, n: int, F: FieldDescriptor, budget: int = DEFAULT_BUDGET) -> int:
    """Smallest weight of a monic f of degree <= n with multiplicity exactly k at 1.

    Exhaustive over cofactors g with g(1) != 0 in f = (x - 1)^k g.
    """
    if not F.is_finite:
        raise InvalidParameterError("exhaustive scan needs a finite field")
    if not 1 <= k <= n:
        raise InvalidParameterError(f"need 1 <= k <= n, got k={k}, n={n}")
    if F.q ** (n - k) > budget:
        raise CapacityError(f"q^(n-k) = {F.q ** (n - k)} exceeds the budget {budget}")
    h = tuple(c.value[0] for c in (Polynomial(F, [-1, 1]) ** k).coeffs)
    best = None
    for d in range(n - k + 1):
        sweep = _kernel.CofactorSweep(F.p, F.m, h, d)
        t = _kernel.run_sweep(sweep, require_nonzero_at=1)
        if t.weights:
            w = min(t.weights)
            best = w if best is None else min(best, w)
    return best
