"""Shared value types and exact arithmetic for bit-string combinatorics.

Bit strings are plain ``str`` objects over the characters '0' and '1' (the
CLI wire format); masks are tuples of 0-based indices, rendered 1-based
wherever output is meant for humans.  All counts are Python ints, so nothing
here can overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from math import comb

Mask = tuple[int, ...]

DEFAULT_BUDGET = 24  # max string length for exhaustive enumerations


class BudgetError(ValueError):
    """An enumeration was refused because its input exceeds the budget."""


def check_budget(n: int, budget: int | None = None, what: str = "n") -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if n > limit:
        raise BudgetError(f"{what}={n} exceeds enumeration budget {limit}")


def validate_bits(s: str) -> str:
    """Return ``s`` unchanged if it is a string over {'0','1'}, else raise."""
    if not isinstance(s, str) or any(c not in "01" for c in s):
        raise ValueError(f"not a bit string: {s!r}")
    return s


_FLIP = str.maketrans("01", "10")


def complement(s: str) -> str:
    """Bitwise complement."""
    return validate_bits(s).translate(_FLIP)


def hamming_weight(s: str) -> int:
    """Number of 1s."""
    return s.count("1")


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k < 0 or k > n.  Needs n >= 0."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multichoose(objects: int, bins: int) -> int:
    """Ways to distribute ``objects`` identical items over ``bins`` bins.

    C(objects + bins - 1, objects), with the edge conventions that zero
    objects always fit (even with zero bins) and that a positive number of
    objects never fits into zero bins.
    """
    if objects < 0:
        return 0
    if objects == 0:
        return 1
    if bins <= 0:
        return 0
    return comb(objects + bins - 1, objects)


@dataclass(frozen=True)
class Rle:
    """Run-length encoding: the leading symbol plus the maximal-run lengths.

    Adjacent runs alternate symbols by construction, so the leading symbol
    and the length sequence determine the string; non-alternating encodings
    cannot be represented.  The empty string is encoded as zero runs with
    leading symbol '0' by convention.
    """

    leading: str
    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.leading not in ("0", "1"):
            raise ValueError(f"leading symbol must be '0' or '1', got {self.leading!r}")
        if any(not isinstance(k, int) or k < 1 for k in self.lengths):
            raise ValueError(f"run lengths must be positive integers, got {self.lengths}")

    @classmethod
    def encode(cls, s: str) -> "Rle":
        validate_bits(s)
        if not s:
            return cls("0", ())
        return cls(s[0], tuple(len(list(g)) for _, g in groupby(s)))

    def decode(self) -> str:
        sym = self.leading
        parts = []
        for k in self.lengths:
            parts.append(sym * k)
            sym = "1" if sym == "0" else "0"
        return "".join(parts)

    @property
    def block_count(self) -> int:
        return len(self.lengths)

    @property
    def total(self) -> int:
        return sum(self.lengths)

    def symbols(self) -> tuple[str, ...]:
        """Symbol of each run, in order."""
        first = self.leading
        other = "1" if first == "0" else "0"
        return tuple(first if i % 2 == 0 else other for i in range(len(self.lengths)))

    @classmethod
    def parse(cls, text: str) -> "Rle":
        """Parse the text form ``(a; k1,k2,...)``, e.g. ``(1; 6,1)``."""
        t = text.strip()
        if not (t.startswith("(") and t.endswith(")")) or ";" not in t:
            raise ValueError(f"not a run-length encoding: {text!r}")
        head, _, tail = t[1:-1].partition(";")
        head = head.strip()
        tail = tail.strip()
        lengths = tuple(int(p) for p in tail.split(",")) if tail else ()
        return cls(head if head else "0", lengths)

    def __str__(self) -> str:
        return f"({self.leading}; {','.join(str(k) for k in self.lengths)})"


def rle_encode(s: str) -> Rle:
    return Rle.encode(s)


def rle_decode(r: Rle) -> str:
    return r.decode()


def format_mask(mask: Mask) -> str:
    """Render a 0-based index tuple 1-based, e.g. (0, 1, 3) -> ``{1, 2, 4}``."""
    return "{" + ", ".join(str(i + 1) for i in mask) + "}"


def mask_complement(mask: Mask, n: int) -> Mask:
    """Indices of [0, n) not in ``mask``; a projection mask's deletion mask."""
    if any(i < 0 or i >= n for i in mask):
        raise ValueError(f"mask {mask} out of range for n={n}")
    if len(set(mask)) != len(mask):
        raise ValueError(f"mask {mask} has repeated indices")
    chosen = set(mask)
    return tuple(i for i in range(n) if i not in chosen)
