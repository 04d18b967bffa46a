"""Brute-force ground truth over F_q for the closed-form counts and bounds.

Every sweep walks the q^(n-k) monic cofactors g and looks at f = (x + 1)^k g
directly; nothing here consults the counting formulas.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator

from . import _kernel
from .bounds import weight_lower_bound
from .construct import polynomial_from_cofactor
from .counting import WeightDistribution, check_regime, m_w, weight_distribution
from .errors import CapacityError, InvalidParameterError
from .ff import FieldDescriptor, enumerate_elements, field_of_order, is_prime
from .poly import Polynomial

DEFAULT_BUDGET = _kernel.DEFAULT_BUDGET


@dataclass(frozen=True)
class SweepConfig:
    q: int
    n: int
    k: int
    budget: int = DEFAULT_BUDGET
    partitions: int = 1

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise InvalidParameterError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.partitions < 1:
            raise InvalidParameterError("partitions must be >= 1")
        self.field  # validates q
        if self.size > self.budget:
            raise CapacityError(f"q^(n-k) = {self.size} exceeds the budget {self.budget}")

    @property
    def field(self) -> FieldDescriptor:
        return field_of_order(self.q)

    @property
    def size(self) -> int:
        return self.q ** (self.n - self.k)

    def to_json(self) -> dict:
        # partitions is deliberately absent: results never depend on it
        return {"q": self.q, "n": self.n, "k": self.k, "budget": self.budget}


def _sweep(cfg: SweepConfig) -> _kernel.CofactorSweep:
    F = cfg.field
    h = tuple(comb(cfg.k, i) % F.p for i in range(cfg.k + 1))
    return _kernel.CofactorSweep(F.p, F.m, h, cfg.n - cfg.k)


def _poly_at_rank(cfg: SweepConfig, rank: int) -> Polynomial:
    F = cfg.field
    return Polynomial(F, [F.from_index(i) for i in _sweep(cfg).coefficients(rank)])


def enumerate_multiples(cfg: SweepConfig) -> Iterator[Polynomial]:
    """Every f = (x + 1)^k g with g monic of degree n - k, in cofactor-lex order.

    Built with plain polynomial multiplication; this is the slow reference
    stream the vectorised tallies are tested against.
    """
    F = cfg.field
    elems = enumerate_elements(F)
    d = cfg.n - cfg.k

    def stream():
        for top_down in itertools.product(elems, repeat=d):
            yield polynomial_from_cofactor(cfg.k, reversed(top_down), F)

    return stream()


def empirical_weight_distribution(cfg: SweepConfig) -> WeightDistribution:
    t = _kernel.run_sweep(_sweep(cfg), workers=cfg.partitions)
    witnesses = {w: str(_poly_at_rank(cfg, r)) for w, r in sorted(t.first_rank.items())}
    return WeightDistribution(
        cfg.q, cfg.n, cfg.k, dict(sorted(t.weights.items())), "enumeration", witnesses
    )


def support_counts(cfg: SweepConfig) -> dict[frozenset[int], int]:
    """Number of f whose nonzero coefficients below degree n are exactly J, per J."""
    t = _kernel.run_sweep(_sweep(cfg), workers=cfg.partitions, supports=True)
    out = {}
    for mask in range(1 << cfg.n):
        J = frozenset(i for i in range(cfg.n) if mask >> i & 1)
        out[J] = t.supports.get(mask, 0)
    return out


def empirical_fixed_support_count(cfg: SweepConfig, J: Iterable[int]) -> int:
    J = frozenset(J)
    if any(not 0 <= j < cfg.n for j in J):
        raise InvalidParameterError(f"support {sorted(J)} not inside [0, {cfg.n})")
    return support_counts(cfg)[J]


def sweep_report(cfg: SweepConfig, timing: bool = False) -> dict:
    """JSON-ready report of a weight-distribution sweep.

    wall_time_ms is only included on request, so that default reports are
    byte-identical across runs and worker counts.
    """
    t0 = time.perf_counter()
    dist = empirical_weight_distribution(cfg)
    report = {
        "config": cfg.to_json(),
        "distribution": dist.to_json(),
        "witnesses": {str(w): s for w, s in dist.witnesses.items()},
    }
    if timing:
        report["wall_time_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return report


# -- exhaustive lower-bound sweep over all monic polynomials of F_p[x]


def _multiplicity_at_one(coeffs: list[int], p: int) -> int:
    k = 0
    cs = coeffs
    while len(cs) > 1:
        quot = [0] * (len(cs) - 1)
        acc = 0
        for i in range(len(cs) - 1, -1, -1):
            acc = (acc + cs[i]) % p
            if i:
                quot[i - 1] = acc
        if acc:
            break
        cs = quot
        k += 1
    return k


def _scan_degree(args) -> tuple[dict, list]:
    """(k -> (min weight, witness coeffs, count)), violations, for one degree."""
    p, n = args
    best: dict[int, list] = {}
    violations = []
    for top_down in itertools.product(range(p), repeat=n):
        coeffs = list(reversed(top_down)) + [1]
        k = _multiplicity_at_one(coeffs, p)
        if not k:
            continue
        w = sum(1 for c in coeffs if c)
        if w < weight_lower_bound(k, p):
            violations.append((k, coeffs))
        row = best.get(k)
        if row is None:
            best[k] = [w, coeffs, 1]
        else:
            row[2] += 1
            if w < row[0]:
                row[0], row[1] = w, coeffs
    return best, violations


@dataclass
class BoundSweepReport:
    p: int
    max_degree: int
    rows: dict[int, dict] = field(default_factory=dict)  # k -> {bound, min_weight, witness, count}
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and all(
            r["min_weight"] == r["bound"] for r in self.rows.values()
        )

    def to_json(self, timing_ms: float | None = None) -> dict:
        out = {
            "config": {"p": self.p, "max_degree": self.max_degree},
            "violations": self.violations,
            "witnesses": {
                str(k): {
                    "bound": str(r["bound"]),
                    "min_weight": str(r["min_weight"]),
                    "witness": r["witness"],
                    "count": str(r["count"]),
                }
                for k, r in sorted(self.rows.items())
            },
        }
        if timing_ms is not None:
            out["wall_time_ms"] = timing_ms
        return out


def bound_sweep(p: int, max_degree: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> BoundSweepReport:
    """Check weight >= prod(k_t + 1) for every monic f in F_p[x] of degree <= max_degree.

    k is the multiplicity of 1 as a root.  Per k, the witness is the first
    minimal-weight polynomial in (degree, then coefficient-lex) order.
    """
    if not is_prime(p):
        raise InvalidParameterError(f"invalid characteristic: {p} is not prime")
    if max_degree < 1:
        raise InvalidParameterError("max_degree must be >= 1")
    total = sum(p**d for d in range(1, max_degree + 1))
    if total > budget:
        raise CapacityError(f"{total} polynomials exceed the budget {budget}")
    jobs = [(p, n) for n in range(1, max_degree + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_degree, jobs))
    else:
        results = [_scan_degree(j) for j in jobs]

    F = field_of_order(p)
    report = BoundSweepReport(p, max_degree)
    merged: dict[int, list] = {}
    # degrees ascend, so strict < keeps the earliest witness on ties
    for best, violations in results:
        for k, (w, coeffs, count) in best.items():
            row = merged.get(k)
            if row is None:
                merged[k] = [w, coeffs, count]
            else:
                row[2] += count
                if w < row[0]:
                    row[0], row[1] = w, coeffs
        for k, coeffs in violations:
            report.violations.append({"k": k, "poly": str(Polynomial(F, coeffs))})
    for k, (w, coeffs, count) in sorted(merged.items()):
        report.rows[k] = {
            "bound": weight_lower_bound(k, p),
            "min_weight": w,
            "witness": str(Polynomial(F, coeffs)),
            "count": count,
        }
    return report


# -- the n = p boundary


@dataclass(frozen=True)
class BoundaryCount:
    p: int
    k: int
    low_weight: int  # weight <= k + 1
    low_weight_constant_nonzero: int
    total: int


def boundary_sweep(p: int, k: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> BoundaryCount:
    """Count degree-p monic multiples of (x + 1)^k over F_p with weight <= k + 1."""
    if not is_prime(p) or not 0 < k < p:
        raise InvalidParameterError(f"need prime p and 0 < k < p, got p={p}, k={k}")
    cfg = SweepConfig(p, p, k, budget, workers)
    low = low_const = 0
    for J, c in support_counts(cfg).items():
        if len(J) + 1 <= k + 1:
            low += c
            if 0 in J:
                low_const += c
    return BoundaryCount(p, k, low, low_const, cfg.size)


# -- formula against enumeration


@dataclass
class Verification:
    q: int
    n: int
    k: int
    polynomials: int
    distribution_match: bool
    support_mismatches: list[tuple[frozenset[int], int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.distribution_match and not self.support_mismatches

    def message(self) -> str:
        if self.ok:
            return f"formula matches enumeration ({self.polynomials} polynomials)"
        parts = []
        if not self.distribution_match:
            parts.append("weight distribution differs")
        if self.support_mismatches:
            parts.append(f"{len(self.support_mismatches)} supports differ from M_w")
        return f"MISMATCH q={self.q} n={self.n} k={self.k}: " + "; ".join(parts)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "polynomials": str(self.polynomials),
            "distribution_match": self.distribution_match,
            "support_mismatches": [
                {"support": sorted(J), "empirical": str(e), "formula": str(f)}
                for J, e, f in self.support_mismatches
            ],
            "ok": self.ok,
        }


def verify(cfg: SweepConfig, per_support: bool | None = None) -> Verification:
    """Compare the closed forms with exhaustive enumeration at one grid point.

    per_support additionally checks every J against M_{|J|+1}; by default it
    runs whenever the support tally fits (n <= 20).
    """
    check_regime(cfg.q, cfg.n, cfg.k)
    formula = weight_distribution(cfg.q, cfg.n, cfg.k)
    if per_support is None:
        per_support = cfg.n <= _kernel.MAX_SUPPORT_BITS
    if per_support:
        counts = support_counts(cfg)
        empirical: dict[int, int] = {}
        mismatches = []
        for J, c in counts.items():
            w = len(J) + 1
            if c:
                empirical[w] = empirical.get(w, 0) + c
            expected = m_w(cfg.q, cfg.k, w)
            if c != expected:
                mismatches.append((J, c, expected))
        match = dict(sorted(empirical.items())) == formula.counts
        return Verification(cfg.q, cfg.n, cfg.k, cfg.size, match, mismatches)
    dist = empirical_weight_distribution(cfg)
    return Verification(cfg.q, cfg.n, cfg.k, cfg.size, dist.same_counts(_as_enum(formula)))


def _as_enum(d: WeightDistribution) -> WeightDistribution:
    return WeightDistribution(d.q, d.n, d.k, d.counts, "enumeration")


def default_grid(qs: Iterable[int] = (5, 7, 11, 13, 25, 49), budget: int = 10**6) -> list[SweepConfig]:
    """Every (q, n, k) with 1 <= k <= n < p and q^(n-k) <= budget."""
    grid = []
    for q in qs:
        F = field_of_order(q)
        for n in range(1, F.p):
            for k in range(1, n + 1):
                if q ** (n - k) <= budget:
                    grid.append(SweepConfig(q, n, k, budget))
    return grid
