"""Monic multiples f = (x + 1)^k g of degree n with prescribed zero coefficients.

Writing g = g_0 + ... + g_{n-k} x^{n-k} with g_{n-k} = 1, the coefficient
f_i = sum_j g_j C(k, i - j) is affine in g_0..g_{n-k-1}.  Forcing f_i = 0 for
every i in a set I of indices below n gives a linear system; with |I| = n - k
it has exactly one solution when the characteristic is 0 or exceeds n, and
that solution is the unique weight-(k+1) polynomial supported off I.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .errors import InvalidParameterError
from .ff import FieldDescriptor, FieldElement, make_field
from .poly import Polynomial


@dataclass(frozen=True)
class SupportSpec:
    """Forced-zero indices I and allowed-nonzero indices J, partitioning {0, ..., n-1}."""

    n: int
    zeros: frozenset[int]

    def __post_init__(self):
        bad = [i for i in self.zeros if not 0 <= i < self.n]
        if bad:
            raise InvalidParameterError(f"indices {sorted(bad)} outside [0, {self.n})")

    @classmethod
    def from_zeros(cls, n: int, zeros: Iterable[int]) -> SupportSpec:
        return cls(n, frozenset(zeros))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> SupportSpec:
        support = frozenset(support)
        bad = [j for j in support if not 0 <= j < n]
        if bad:
            raise InvalidParameterError(f"indices {sorted(bad)} outside [0, {n})")
        return cls(n, frozenset(range(n)) - support)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self.zeros

    def to_json(self) -> dict:
        return {"n": self.n, "zeros": sorted(self.zeros), "support": sorted(self.support)}


def binomial_in_field(k: int, r: int, F: FieldDescriptor) -> FieldElement:
    if r < 0 or r > k:
        return F.zero
    return F(comb(k, r))


@dataclass(frozen=True)
class LinearSystem:
    field: FieldDescriptor
    n: int
    k: int
    rows: tuple[int, ...]  # the indices i in I, ascending
    matrix: tuple[tuple[FieldElement, ...], ...]  # one row per i, columns g_0..g_{n-k-1}
    rhs: tuple[FieldElement, ...]

    @property
    def unknowns(self) -> int:
        return self.n - self.k


def _check_regime(n: int, k: int, F: FieldDescriptor, allow_boundary: bool = False) -> None:
    if not 1 <= k <= n:
        raise InvalidParameterError(f"need 1 <= k <= n, got k={k}, n={n}")
    if F.is_finite:
        limit_ok = n < F.p or (allow_boundary and n == F.p)
        if not limit_ok:
            raise InvalidParameterError(
                f"unsupported regime: requires n < p (n={n}, p={F.p}); "
                "see example_n_equals_p for n = p"
            )


def build_system(n: int, k: int, zeros: SupportSpec | Iterable[int], F: FieldDescriptor) -> LinearSystem:
    """Equations f_i = 0 (i in I) in the unknowns g_0..g_{n-k-1}, with g_{n-k} = 1."""
    _check_regime(n, k, F)
    return _build(n, k, zeros, F)


def _build(n, k, zeros, F) -> LinearSystem:
    spec = zeros if isinstance(zeros, SupportSpec) else SupportSpec.from_zeros(n, zeros)
    if spec.n != n:
        raise InvalidParameterError(f"support is for degree {spec.n}, not {n}")
    rows = tuple(sorted(spec.zeros))
    d = n - k
    matrix = tuple(tuple(binomial_in_field(k, i - j, F) for j in range(d)) for i in rows)
    rhs = tuple(-binomial_in_field(k, i - d, F) for i in rows)
    return LinearSystem(F, n, k, rows, matrix, rhs)


@dataclass(frozen=True)
class Solution:
    """Affine solution set: particular + span(basis), or inconsistent."""

    consistent: bool
    particular: tuple[FieldElement, ...] | None
    basis: tuple[tuple[FieldElement, ...], ...]

    @property
    def dimension(self) -> int | None:
        return len(self.basis) if self.consistent else None

    @property
    def unique(self) -> bool:
        return self.consistent and not self.basis


def solve_exact(S: LinearSystem) -> Solution:
    """Gauss-Jordan elimination, pivoting on the first nonzero entry of each column."""
    F = S.field
    cols = S.unknowns
    A = [list(row) + [b] for row, b in zip(S.matrix, S.rhs)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, len(A)) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = A[r][c].inv()
        A[r] = [a * inv for a in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    if any(row[cols] for row in A[r:]):
        return Solution(False, None, ())

    particular = [F.zero] * cols
    for i, c in enumerate(pivots):
        particular[c] = A[i][cols]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F.zero] * cols
        v[fc] = F.one
        for i, c in enumerate(pivots):
            v[c] = -A[i][fc]
        basis.append(tuple(v))
    return Solution(True, tuple(particular), tuple(basis))


def solution_count(S: LinearSystem) -> int | None:
    """Number of solutions: q^dim over F_q, 0 if inconsistent, None if infinite."""
    sol = solve_exact(S)
    if not sol.consistent:
        return 0
    if S.field.is_finite:
        return S.field.q ** sol.dimension
    return 1 if sol.unique else None


def polynomial_from_cofactor(k: int, g_low: Iterable, F: FieldDescriptor) -> Polynomial:
    """(x + 1)^k (g_0 + ... + g_{d-1} x^{d-1} + x^d)."""
    g = Polynomial(F, list(g_low) + [1])
    return Polynomial(F, [1, 1]) ** k * g


def construct_extremal(n: int, k: int, zeros: SupportSpec | Iterable[int], F: FieldDescriptor | None = None) -> Polynomial:
    """The unique monic (x + 1)^k g of degree n vanishing on the indices in zeros.

    zeros must have exactly n - k elements; F defaults to the rationals.
    """
    F = F if F is not None else make_field(None)
    _check_regime(n, k, F)
    return _construct(n, k, zeros, F)


def _construct(n, k, zeros, F) -> Polynomial:
    S = _build(n, k, zeros, F)
    if len(S.rows) != n - k:
        raise InvalidParameterError(f"need exactly n - k = {n - k} forced zeros, got {len(S.rows)}")
    sol = solve_exact(S)
    if not sol.unique:
        raise ArithmeticError(f"singular system for n={n}, k={k}, zeros={sorted(S.rows)} over {F}")
    return polynomial_from_cofactor(k, sol.particular, F)


def all_extremal(n: int, k: int, F: FieldDescriptor | None = None) -> dict[frozenset[int], Polynomial]:
    """construct_extremal for every (n-k)-subset of {0, ..., n-1}."""
    F = F if F is not None else make_field(None)
    _check_regime(n, k, F)
    return {
        frozenset(I): _construct(n, k, I, F)
        for I in itertools.combinations(range(n), n - k)
    }


def count_extremal_formula(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise InvalidParameterError(f"need 1 <= k <= n, got k={k}, n={n}")
    return comb(n, k)


@dataclass(frozen=True)
class BoundaryExample:
    p: int
    k: int
    count: int  # C(p-1, k) + 1
    polynomials: tuple[Polynomial, ...]  # the distinct constructions, x^p + 1 first

    def description(self) -> str:
        return (
            f"x^{self.p} + 1 plus {self.count - 1} polynomials of weight {self.k + 1} "
            "divisible by x"
        )

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "count": str(self.count),
            "description": self.description(),
            "polynomials": [str(f) for f in self.polynomials],
        }


def example_n_equals_p(p: int, k: int) -> BoundaryExample:
    """Degree-p monic multiples of (x + 1)^k over F_p with weight <= k + 1.

    Every (p-k)-subset I still gives a unique solution, but subsets avoiding
    0 all collapse onto x^p + 1, leaving C(p-1, k) + 1 distinct polynomials.
    The returned polynomials are built subset by subset and deduplicated.
    """
    F = make_field(p)
    if not 0 < k < p:
        raise InvalidParameterError(f"need 0 < k < p, got k={k}, p={p}")
    _check_regime(p, k, F, allow_boundary=True)
    seen: dict[Polynomial, None] = {}
    for I in itertools.combinations(range(p), p - k):
        seen[_construct(p, k, I, F)] = None
    special = Polynomial.monomial(F, p) + 1
    polys = sorted(seen, key=lambda f: (f != special, [F.index(c) for c in reversed(f.coeffs)]))
    return BoundaryExample(p, k, comb(p - 1, k) + 1, tuple(polys))
