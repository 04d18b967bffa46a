"""Closed-form counts of monic multiples of (x + 1)^k over F_q by weight.

For 1 <= k <= n < p, the number of such polynomials of degree n whose
nonzero lower coefficients occupy one fixed set J of size w - 1 is

    M_w = sum_{v >= k} (-1)^(w-v-1) C(w-1, v) q^(v-k),

independently of J, so exactly C(n, w-1) M_w have weight w.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from math import comb

from .errors import InvalidParameterError
from .ff import prime_power


def binomial_exact(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def m_w(q: int, k: int, w: int) -> int:
    if k < 1 or w < 1:
        raise InvalidParameterError(f"need k >= 1 and w >= 1, got k={k}, w={w}")
    # C(w-1, v) vanishes for v > w - 1
    return sum(
        (-1) ** (w - v - 1) * comb(w - 1, v) * q ** (v - k)
        for v in range(k, w)
    )


@dataclass
class WeightDistribution:
    q: int
    n: int
    k: int
    counts: dict[int, int]  # weight -> count, zero entries omitted
    source: str  # "formula" | "enumeration"
    witnesses: dict[int, str] = field(default_factory=dict, compare=False)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def same_counts(self, other: WeightDistribution) -> bool:
        return (self.q, self.n, self.k, self.counts) == (other.q, other.n, other.k, other.counts)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "source": self.source,
            "counts": {str(w): str(c) for w, c in sorted(self.counts.items())},
            "total": str(self.total),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["w", "count"])
        for w, c in sorted(self.counts.items()):
            writer.writerow([w, c])
        return buf.getvalue()


def check_regime(q: int, n: int, k: int) -> int:
    """Validate 1 <= k <= n < p for q = p^m and return p."""
    p, _ = prime_power(q)
    if not 1 <= k <= n:
        raise InvalidParameterError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n >= p:
        raise InvalidParameterError(f"requires n < p (n={n}, p={p})")
    return p


def weight_distribution(q: int, n: int, k: int) -> WeightDistribution:
    check_regime(q, n, k)
    counts = {}
    for w in range(k + 1, n + 2):
        c = comb(n, w - 1) * m_w(q, k, w)
        if c:
            counts[w] = c
    return WeightDistribution(q, n, k, counts, "formula")


def total_identity_check(q: int, n: int, k: int) -> bool:
    """sum_w C(n, w-1) M_w == q^(n-k), summed over every w from 1 to n+1."""
    check_regime(q, n, k)
    lhs = sum(comb(n, w - 1) * m_w(q, k, w) for w in range(1, n + 2))
    return lhs == q ** (n - k)
