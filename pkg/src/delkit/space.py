"""The space of length-n supersequences of x and its structure.

The compatible set of x at length n is every y in {0,1}^n that contains x as
a subsequence.  Its size depends only on (n, |x|).  Cluster c collects the
members with exactly c more 1s than x; cluster sizes depend only on
(n, |x|, h(x)) and have three equivalent computations (a closed double sum, a
simplified single sum, and a first-symbol recursion), kept separate so they
can be checked against each other.

A maximal initial is a member whose greedy (leftmost) embedding of x ends on
the last position of y.  A singleton is a member that embeds x exactly once;
singletons are produced by run-splitting insertions only, so their count is
governed by how many insertion slots each run of x offers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .core import (
    Mask,
    binomial,
    check_budget,
    hamming_weight,
    multichoose,
    rle_encode,
    validate_bits,
)

__all__ = [
    "RunSlots",
    "cluster_size_closed",
    "cluster_size_recursive",
    "cluster_size_simple",
    "composition_slots",
    "enumerate_singletons",
    "enumerate_supersequences",
    "initial_mask",
    "is_maximal_initial",
    "maximal_initials_cluster",
    "maximal_initials_total",
    "run_slots",
    "singleton_cluster_count",
    "singleton_count",
    "upsilon_size",
]


def upsilon_size(n: int, m: int) -> int:
    """Number of length-n supersequences of any fixed x with |x| = m."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    return sum(comb(n, r) for r in range(m, n + 1))


def enumerate_supersequences(
    n: int, x: str, budget: int | None = None
) -> Iterator[tuple[str, int]]:
    """Yield (y, weight) for every length-n supersequence y of x, in lex order.

    Depth-first walk over y prefixes carrying the embedding-count table for
    x's prefixes, pruning any prefix that cannot fit the unmatched tail of x
    into the remaining positions.
    """
    validate_bits(x)
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    check_budget(n, budget)
    m = len(x)
    if m > n:
        return
    # stack entries: (prefix, counts table, greedily matched symbols)
    stack: list[tuple[str, tuple[int, ...], int]] = [("", (1,) + (0,) * m, 0)]
    while stack:
        prefix, counts, matched = stack.pop()
        if len(prefix) == n:
            yield prefix, counts[m]
            continue
        room = n - len(prefix) - 1
        for bit in ("1", "0"):
            grown = matched + 1 if matched < m and x[matched] == bit else matched
            if m - grown > room:
                continue
            nxt = list(counts)
            for j in range(m, 0, -1):
                if x[j - 1] == bit:
                    nxt[j] += nxt[j - 1]
            stack.append((prefix + bit, tuple(nxt), grown))


def _check_cluster_shape(n: int, m: int, h: int) -> None:
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    if not 0 <= h <= m:
        raise ValueError(f"need 0 <= h <= m, got h={h}, m={m}")


def cluster_size_closed(n: int, m: int, h: int, c: int) -> int:
    """Size of cluster c, as the double sum over (|y| run count, excess-1 runs).

    Sums over the length l of the region of y whose runs host x's symbols and
    the number g of extra 1s falling inside that region; c out of [0, n-m]
    gives 0.
    """
    _check_cluster_shape(n, m, h)
    if c < 0 or c > n - m:
        return 0
    if m == 0:
        return binomial(n, c)
    total = 0
    for l in range(m, n + 1):
        for g in range(max(0, c - (n - l)), min(c, l - m) + 1):
            total += (
                multichoose(l - m - g, h)
                * multichoose(g, m - h)
                * binomial(n - l, c - g)
            )
    return total


def cluster_size_simple(n: int, m: int, h: int, c: int) -> int:
    """Size of cluster c, as a single sum over the position of the h-th 1."""
    _check_cluster_shape(n, m, h)
    if c < 0 or c > n - m:
        return 0
    if h == 0:
        return binomial(n, c)
    z = n - m - c
    return sum(binomial(p - 1, h - 1) * binomial(n - p, c) for p in range(h, h + z + 1))


@lru_cache(maxsize=None)
def _cluster_rec(n: int, x: str, c: int) -> int:
    if c < 0 or c > n - len(x):
        return 0
    if not x:
        return comb(n, c)
    if x[0] == "1":
        # y starts with the matched 1, or with an excess 0
        return _cluster_rec(n - 1, x[1:], c) + _cluster_rec(n - 1, x, c)
    # y starts with the matched 0, or with an excess 1
    return _cluster_rec(n - 1, x[1:], c) + _cluster_rec(n - 1, x, c - 1)


def cluster_size_recursive(n: int, x: str, c: int) -> int:
    """Size of cluster c by recursion on the first symbol of y."""
    validate_bits(x)
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return _cluster_rec(n, x, c)


def initial_mask(y: str, x: str) -> Mask | None:
    """The greedy (leftmost) embedding mask of x in y, or None."""
    validate_bits(y)
    validate_bits(x)
    out = []
    i = 0
    for ch in x:
        while i < len(y) and y[i] != ch:
            i += 1
        if i == len(y):
            return None
        out.append(i)
        i += 1
    return tuple(out)


def is_maximal_initial(y: str, x: str) -> bool:
    """True when the greedy embedding of x in y ends on y's last position."""
    mask = initial_mask(y, x)
    if mask is None:
        return False
    if not x:
        return y == ""
    return mask[-1] == len(y) - 1


def maximal_initials_total(n: int, m: int) -> int:
    """Number of length-n supersequences whose greedy mask ends at position n."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    return comb(n - 1, m - 1)


def maximal_initials_cluster(n: int, m: int, h: int, c: int) -> int:
    """Number of maximal initials inside cluster c."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not 0 <= h <= m:
        raise ValueError(f"need 0 <= h <= m, got h={h}, m={m}")
    if c < 0 or c > n - m:
        return 0
    return multichoose(n - m - c, h) * multichoose(c, m - h)


@dataclass(frozen=True)
class RunSlots:
    """Insertion-slot counts of a string, split by run symbol.

    rho0 counts the slots offered by runs of 0s, rho1 by runs of 1s.
    """

    rho0: int
    rho1: int

    @property
    def total(self) -> int:
        return self.rho0 + self.rho1


def composition_slots(lengths: tuple[int, ...]) -> tuple[int, ...]:
    """Insertion slots offered by each run of a string with these run lengths.

    A run spanning the whole string offers len+1 slots, a run touching
    exactly one end offers len, and an interior run offers len-1: splitting
    insertions may not extend the run past a neighbouring run of the other
    symbol, but the string's own ends are free.
    """
    ell = len(lengths)
    if any(k < 1 for k in lengths):
        raise ValueError(f"run lengths must be positive, got {lengths}")
    if ell == 0:
        return ()
    if ell == 1:
        return (lengths[0] + 1,)
    return tuple(
        k if i in (0, ell - 1) else k - 1 for i, k in enumerate(lengths)
    )


def run_slots(x: str) -> RunSlots:
    """Slot counts of x by run symbol; x must be nonempty."""
    validate_bits(x)
    if not x:
        raise ValueError("run_slots needs a nonempty string")
    r = rle_encode(x)
    slots = composition_slots(r.lengths)
    rho = {"0": 0, "1": 0}
    for sym, s in zip(r.symbols(), slots):
        rho[sym] += s
    return RunSlots(rho0=rho["0"], rho1=rho["1"])


def singleton_count(n: int, x: str) -> int:
    """Number of length-n supersequences of x with exactly one embedding.

    Equals C(n - m + rho0 + rho1 - 1, n - m): all n - m inserted symbols must
    be run-splitting, and splitting insertions into distinct slots commute.
    The empty x has weight 1 in every y, so its count is 2**n.
    """
    validate_bits(x)
    m = len(x)
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= |x| <= n, got |x|={m}, n={n}")
    if m == 0:
        return 2**n
    rs = run_slots(x)
    return binomial(n - m + rs.total - 1, n - m)


def singleton_cluster_count(n: int, x: str, c: int) -> int:
    """Number of singletons inside cluster c.

    The c inserted 1s split runs of 0s and the n - m - c inserted 0s split
    runs of 1s, independently.
    """
    validate_bits(x)
    m = len(x)
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= |x| <= n, got |x|={m}, n={n}")
    if c < 0 or c > n - m:
        return 0
    if m == 0:
        return binomial(n, c)
    rs = run_slots(x)
    return multichoose(n - m - c, rs.rho1) * multichoose(c, rs.rho0)


def enumerate_singletons(n: int, x: str, budget: int | None = None) -> list[str]:
    """All weight-1 supersequences of x at length n, in lex order."""
    return [y for y, w in enumerate_supersequences(n, x, budget) if w == 1]
