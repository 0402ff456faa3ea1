"""Brute-force reference implementations.

Everything here is deliberately naive: embedding counts come from the
textbook recursion on string suffixes or from trying every index subset,
and whole spaces come from scanning every string in {0,1}^n.  None of the
closed forms or the iterative counting code from the other modules is used,
so agreement between the two sides is meaningful evidence.  The only
arithmetic anchors the oracle trusts are the compatible-set size and mask
mass formulas, which the shared histogram type checks on construction.

oracle_weight_table is the same full-space scan vectorized with numpy (all
2^n strings advance one position per pass); it exists because grids of
thousands of full scans are outside pure-Python time budgets, and it is
cross-checked against the scalar scan in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb, log2

import numpy as np

from .core import BudgetError, Mask
from .entropy import EntropyReport, WeightDistribution

__all__ = [
    "OracleBudget",
    "OracleSpace",
    "index_to_string",
    "oracle_count",
    "oracle_entropy",
    "oracle_space",
    "oracle_weight_table",
]


@dataclass(frozen=True)
class OracleBudget:
    """Size guards for brute-force work.

    max_n caps string lengths anywhere in the oracle, max_scan_n caps
    pure-Python full-space scans and mask listings, max_subsets caps
    index-subset iteration.
    """

    max_n: int = 24
    max_scan_n: int = 14
    max_subsets: int = 2_000_000


DEFAULT_ORACLE_BUDGET = OracleBudget()


def oracle_count(y: str, x: str, budget: OracleBudget | None = None) -> int:
    """Embedding count by checking every |x|-subset of y's positions."""
    b = budget or DEFAULT_ORACLE_BUDGET
    if len(y) > b.max_n:
        raise BudgetError(f"|y|={len(y)} exceeds oracle budget {b.max_n}")
    if comb(len(y), len(x)) > b.max_subsets:
        raise BudgetError(
            f"C({len(y)}, {len(x)}) subsets exceed oracle budget {b.max_subsets}"
        )
    return sum(
        1
        for pi in combinations(range(len(y)), len(x))
        if all(y[i] == c for i, c in zip(pi, x))
    )


@lru_cache(maxsize=None)
def _suffix_count(y: str, x: str) -> int:
    if not x:
        return 1
    if len(y) < len(x):
        return 0
    n = _suffix_count(y[1:], x)
    if y[0] == x[0]:
        n += _suffix_count(y[1:], x[1:])
    return n


@dataclass
class OracleSpace:
    """Full listing of one compatible set: y -> weight (lex order), masks on request."""

    n: int
    x: str
    weights: dict[str, int]
    masks: dict[str, list[Mask]] | None = None

    def distribution(self, by_cluster: bool = False) -> WeightDistribution:
        counts: dict[int, int] = {}
        for w in self.weights.values():
            counts[w] = counts.get(w, 0) + 1
        breakdown = None
        if by_cluster:
            h = self.x.count("1")
            parts: dict[int, dict[int, int]] = {}
            for y, w in self.weights.items():
                part = parts.setdefault(y.count("1") - h, {})
                part[w] = part.get(w, 0) + 1
            breakdown = {c: dict(sorted(parts[c].items())) for c in sorted(parts)}
        return WeightDistribution(self.n, self.x, dict(sorted(counts.items())), breakdown)

    def singletons(self) -> list[str]:
        return [y for y, w in self.weights.items() if w == 1]


def oracle_space(
    n: int, x: str, with_masks: bool = False, budget: OracleBudget | None = None
) -> OracleSpace:
    """Scan all of {0,1}^n, keeping every y that contains x, with its weight."""
    b = budget or DEFAULT_ORACLE_BUDGET
    if n > b.max_scan_n:
        raise BudgetError(f"n={n} exceeds oracle scan budget {b.max_scan_n}")
    if with_masks and comb(n, len(x)) > b.max_subsets:
        raise BudgetError("mask listing exceeds the oracle subset budget")
    _suffix_count.cache_clear()
    weights: dict[str, int] = {}
    masks: dict[str, list[Mask]] | None = {} if with_masks else None
    for bits in product("01", repeat=n):
        y = "".join(bits)
        w = _suffix_count(y, x)
        if w:
            weights[y] = w
            if masks is not None:
                masks[y] = [
                    pi
                    for pi in combinations(range(n), len(x))
                    if all(y[i] == c for i, c in zip(pi, x))
                ]
    return OracleSpace(n, x, weights, masks)


def oracle_entropy(
    n: int,
    x: str,
    alphas: tuple[float, ...] = (2.0,),
    budget: OracleBudget | None = None,
) -> EntropyReport:
    """Entropy measures summed per string (not per weight class).

    Normalizes by the enumerated weight total, so the whole computation is
    independent of the closed-form mask mass.
    """
    for a in alphas:
        if a <= 0 or a == 1:
            raise ValueError(f"alpha must be positive and not 1, got {a}")
    sp = oracle_space(n, x, budget=budget)
    total = sum(sp.weights.values())
    shannon = 0.0
    for w in sp.weights.values():
        p = w / total
        shannon -= p * log2(p)
    renyi = {}
    for a in alphas:
        s = sum((w / total) ** a for w in sp.weights.values())
        renyi[a] = log2(s) / (1 - a)
    top = max(sp.weights.values())
    return EntropyReport(shannon=shannon, renyi=renyi, min_entropy=-log2(top / total))


def index_to_string(i: int, n: int) -> str:
    """The length-n bit string whose big-endian integer value is i."""
    if not 0 <= i < 1 << n:
        raise ValueError(f"index {i} out of range for n={n}")
    return format(i, f"0{n}b") if n else ""


def oracle_weight_table(
    n: int, x: str, budget: OracleBudget | None = None
) -> np.ndarray:
    """Weights of every y in {0,1}^n at once, indexed per index_to_string.

    A vectorized rendering of the oracle_space scan: one pass per position of
    y, advancing all 2^n strings together.  Values are bounded by C(n, |x|),
    far inside int64 for any n within budget.
    """
    b = budget or DEFAULT_ORACLE_BUDGET
    if n > b.max_n:
        raise BudgetError(f"n={n} exceeds oracle budget {b.max_n}")
    m = len(x)
    if (m + 1) << n > 1 << 26:
        raise BudgetError(f"scan table for n={n}, |x|={m} exceeds the memory guard")
    size = 1 << n
    ids = np.arange(size, dtype=np.int64)
    xb = np.array([1 if c == "1" else 0 for c in x], dtype=np.int64)
    state = [np.ones(size, dtype=np.int64)] + [
        np.zeros(size, dtype=np.int64) for _ in range(m)
    ]
    for pos in range(n):
        bit = (ids >> (n - 1 - pos)) & 1
        for j in range(min(m, pos + 1), 0, -1):
            state[j] += (bit == xb[j - 1]) * state[j - 1]
    return state[m]
