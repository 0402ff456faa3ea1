"""Counting the embeddings of one bit string inside another.

An embedding of x in y is a strictly increasing choice of |x| positions of y
whose projection spells x; the number of embeddings is the weight of y as a
supersequence of x.  Three independent routes compute it:

* a dynamic program over prefix pairs (the workhorse),
* explicit enumeration of the position masks themselves,
* a run-length route that groups masks by which run of y hosts the last
  symbol of each run of x.

The run route works as follows.  After aligning leading symbols (if y starts
with the wrong symbol, its first run can never host anything and is dropped),
every mask induces a map f from x's run indices into y's run indices: f(i) is
the run of y containing the mask position of the last symbol of x's run i.
Such maps are exactly the strictly increasing, parity-preserving sequences
(f(i) = i mod 2), and the masks inducing a given f factor per run of x: run i
draws its k'_i symbols from the same-parity runs of y in (f(i-1), f(i)], with
at least one symbol landing in run f(i) itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .core import Mask, binomial, check_budget, rle_encode, validate_bits

__all__ = [
    "BlockMap",
    "block_map_weights",
    "count_embeddings_dp",
    "count_embeddings_runs",
    "enumerate_block_maps",
    "enumerate_masks",
    "sigma_count",
]


def count_embeddings_dp(y: str, x: str) -> int:
    """Number of embeddings of x in y, by dynamic programming.

    One pass over y with a rolling table indexed by prefixes of x; O(|y||x|)
    time, O(|x|) space, exact ints throughout.
    """
    validate_bits(y)
    validate_bits(x)
    m = len(x)
    if m == 0:
        return 1
    if len(y) < m:
        return 0
    # counts[j] = embeddings of x[:j] in the scanned prefix of y; update
    # descending so each y symbol is used at most once per embedding
    counts = [1] + [0] * m
    hits = {"0": [], "1": []}
    for j in range(m, 0, -1):
        hits[x[j - 1]].append(j)
    for ch in y:
        for j in hits[ch]:
            counts[j] += counts[j - 1]
    return counts[m]


def enumerate_masks(y: str, x: str, budget: int | None = None) -> list[Mask]:
    """All embedding masks of x in y, as 0-based tuples in lexicographic order."""
    validate_bits(y)
    validate_bits(x)
    check_budget(len(y), budget, "len(y)")
    n, m = len(y), len(x)
    if m == 0:
        return [()]
    out: list[Mask] = []
    prefix: list[int] = []

    def extend(start: int, j: int) -> None:
        if j == m:
            out.append(tuple(prefix))
            return
        # leave room for the remaining symbols of x
        for i in range(start, n - (m - j) + 1):
            if y[i] == x[j]:
                prefix.append(i)
                extend(i + 1, j + 1)
                prefix.pop()

    extend(0, 0)
    return out


def sigma_count(lp: int, l: int) -> int:
    """Number of strictly increasing parity-preserving maps [lp] -> [l].

    With lt = l if l and lp share parity else l-1: zero when lt < lp, else
    C(lp + u, u) where u = (lt - lp) / 2.
    """
    if lp < 0 or l < 0:
        raise ValueError("run counts must be nonnegative")
    lt = l if (l - lp) % 2 == 0 else l - 1
    if lt < lp:
        return 0
    u = (lt - lp) // 2
    return binomial(lp + u, u)


@dataclass(frozen=True)
class BlockMap:
    """A strictly increasing map of run indices with f(i) = i (mod 2).

    ``images`` holds f(1), ..., f(lp) as 1-based run indices of y.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = 0
        for i, v in enumerate(self.images, start=1):
            if v <= prev or (v - i) % 2:
                raise ValueError(f"not an increasing parity-preserving map: {self.images}")
            prev = v

    def __call__(self, i: int) -> int:
        """f(i) for 1-based i; f(0) = 0."""
        return 0 if i == 0 else self.images[i - 1]


@lru_cache(maxsize=None)
def _block_map_images(lp: int, l: int) -> tuple[tuple[int, ...], ...]:
    if lp == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend(i: int) -> None:
        if i > lp:
            out.append(tuple(prefix))
            return
        start = prefix[-1] + 1 if prefix else 1
        if (start - i) % 2:
            start += 1
        # f must still reach l with lp - i more strict increases
        for v in range(start, l - (lp - i) + 1, 2):
            prefix.append(v)
            extend(i + 1)
            prefix.pop()

    extend(1)
    return tuple(out)


def enumerate_block_maps(lp: int, l: int) -> list[BlockMap]:
    """All maps counted by sigma_count(lp, l), in lexicographic order."""
    if lp < 0 or l < 0:
        raise ValueError("run counts must be nonnegative")
    return [BlockMap(images) for images in _block_map_images(lp, l)]


def _aligned_run_lengths(y: str, x: str) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Run lengths of (y, x) after dropping y's unusable leading run.

    None when y runs out of runs, i.e. no embedding can exist.
    """
    ry = rle_encode(y)
    rx = rle_encode(x)
    ky = ry.lengths
    if ry.leading != rx.leading:
        ky = ky[1:]
        if not ky:
            return None
    return ky, rx.lengths


def _map_weight(ky: tuple[int, ...], kx: tuple[int, ...], images: tuple[int, ...]) -> int:
    w = 1
    prev = 0
    for i, fi in enumerate(images):
        # symbols available to run i of x: same-parity runs of y in (prev, fi]
        avail = 0
        for j in range(prev + 1, fi + 1, 2):
            avail += ky[j - 1]
        need = kx[i]
        w *= comb(avail, need) - comb(avail - ky[fi - 1], need)
        if w == 0:
            return 0
        prev = fi
    return w


def count_embeddings_runs(y: str, x: str) -> int:
    """Number of embeddings of x in y, by the run-length route."""
    validate_bits(y)
    validate_bits(x)
    if not x:
        return 1
    if not y:
        return 0
    aligned = _aligned_run_lengths(y, x)
    if aligned is None:
        return 0
    ky, kx = aligned
    return sum(_map_weight(ky, kx, images) for images in _block_map_images(len(kx), len(ky)))


def block_map_weights(y: str, x: str) -> list[tuple[BlockMap, int]]:
    """Per-map weights of the run route, for maps of nonzero weight.

    The weights partition the mask set: they sum to count_embeddings_dp(y, x).
    Maps are indexed against y's runs after leading-symbol alignment.
    """
    validate_bits(y)
    validate_bits(x)
    if not x:
        return [(BlockMap(()), 1)]
    if not y:
        return []
    aligned = _aligned_run_lengths(y, x)
    if aligned is None:
        return []
    ky, kx = aligned
    out = []
    for images in _block_map_images(len(kx), len(ky)):
        w = _map_weight(ky, kx, images)
        if w:
            out.append((BlockMap(images), w))
    return out
