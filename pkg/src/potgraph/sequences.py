"""Degree sequences: parsing, graphicality tests, and the lay-off reduction.

A degree sequence here is always stored non-increasing. Zeros are legal terms
(they denote isolated vertices); operations that require positive terms say so
and `DegreeSequence.strip_zeros` is the documented normalization.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator

from .errors import DomainError, SequenceParseError

__all__ = [
    "MAX_TERMS",
    "DegreeSequence",
    "parse_sequence",
    "is_graphic_eg",
    "layoff",
    "is_graphic_kw",
]

# Adjacency rows are 64-bit masks, so graphs (and hence realizable sequences)
# are capped at 64 vertices.
MAX_TERMS = 64

_TERM_RE = re.compile(r"\s*(-?\d+)\s*(?:\^\s*(-?\d+)\s*)?")


@dataclass(frozen=True, order=True)
class DegreeSequence:
    """Non-increasing sequence of nonnegative integers with cached sum."""

    terms: tuple[int, ...]
    sigma: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        for t in self.terms:
            if not isinstance(t, int):
                raise DomainError(f"degree terms must be integers, got {t!r}")
            if t < 0:
                raise DomainError(f"negative degree {t}")
        if len(self.terms) > MAX_TERMS:
            raise DomainError(
                f"sequence has {len(self.terms)} terms, the supported maximum is {MAX_TERMS}"
            )
        object.__setattr__(self, "terms", tuple(sorted(self.terms, reverse=True)))
        object.__setattr__(self, "sigma", sum(self.terms))

    @property
    def n(self) -> int:
        return len(self.terms)

    @property
    def max_positive(self) -> int:
        """Largest positive term, 0 if there is none."""
        return self.terms[0] if self.terms and self.terms[0] > 0 else 0

    @property
    def min_positive(self) -> int:
        """Smallest positive term, 0 if there is none."""
        positive = [t for t in self.terms if t > 0]
        return positive[-1] if positive else 0

    def strip_zeros(self) -> "DegreeSequence":
        """Drop zero terms; realizations differ only by isolated vertices."""
        return DegreeSequence(tuple(t for t in self.terms if t > 0))

    def render(self) -> str:
        """Canonical exponent notation, e.g. (5,3,3,3,3,3) -> "5,3^5"."""
        parts = []
        for value, group in itertools.groupby(self.terms):
            count = sum(1 for _ in group)
            parts.append(f"{value}^{count}" if count > 1 else f"{value}")
        return ",".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __getitem__(self, idx):
        return self.terms[idx]


def parse_sequence(text: str) -> DegreeSequence:
    """Parse comma-separated exponent notation into a DegreeSequence.

    Grammar: ``seq := term ("," term)*``, ``term := INT ("^" INT)?`` where the
    optional exponent is a repeat count >= 1. Whitespace around tokens is
    ignored. "5^3,3^3", "5,3,3,3,3,3" and "3^3, 5^3" all denote the same
    sequence; terms are re-sorted, so input order never matters.

    Raises:
        SequenceParseError: malformed token (the message names the offending
            character span of ``text``).
        DomainError: empty input, negative degree, exponent < 1, or more than
            MAX_TERMS expanded terms.
    """
    if not text.strip():
        raise DomainError("empty degree-sequence text")
    terms: list[int] = []
    pos = 0
    for chunk in text.split(","):
        start, end = pos, pos + len(chunk)
        pos = end + 1
        span = f"characters {start}..{end}"
        match = _TERM_RE.fullmatch(chunk)
        if match is None:
            raise SequenceParseError(
                f"malformed term {chunk.strip()!r} at {span}", text, start, end
            )
        base = int(match.group(1))
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        if base < 0:
            raise DomainError(f"negative degree {base} at {span}")
        if exponent < 1:
            raise DomainError(f"exponent {exponent} at {span}; exponents must be >= 1")
        if len(terms) + exponent > MAX_TERMS:
            raise DomainError(
                f"sequence expands past {MAX_TERMS} terms at {span}"
            )
        terms.extend([base] * exponent)
    return DegreeSequence(tuple(terms))


def is_graphic_eg(seq: DegreeSequence) -> bool:
    """Erdős–Gallai test: is some simple graph's degree sequence equal to seq?

    seq is graphic iff its sum is even and for every k in 1..n
    ``sum(d[:k]) <= k(k-1) + sum(min(d_i, k) for i > k)``.
    The empty sequence is graphic (empty graph).
    """
    d = seq.terms
    n = len(d)
    if n == 0:
        return True
    if seq.sigma % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        bound = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if prefix > bound:
            return False
    return True


def layoff(seq: DegreeSequence, k: int) -> DegreeSequence:
    """Residual sequence after laying off the k-th term (1-based).

    Removes d_k and decrements the d_k largest remaining terms, skipping
    position k itself when d_k >= k: positions 1..k-1 and k+1..d_k+1 lose one
    each; when d_k < k positions 1..d_k lose one each. The result is re-sorted
    non-increasing (the sort is stable, so equal terms keep their order).

    Raises:
        DomainError: k out of range, or the reduction needs more positive
            partners than exist / would drive a term negative (either way the
            input was not graphic).
    """
    n = seq.n
    if not 1 <= k <= n:
        raise DomainError(f"lay-off index {k} out of range 1..{n}")
    d = list(seq.terms)
    dk = d[k - 1]
    if dk >= k:
        if dk > n - 1:
            raise DomainError(
                f"term {dk} needs {dk} partners but only {n - 1} terms remain; not graphic"
            )
        partners = list(range(k - 1)) + list(range(k, dk + 1))
    else:
        partners = list(range(dk))
    for i in partners:
        d[i] -= 1
        if d[i] < 0:
            raise DomainError(
                f"laying off term {k} drives a term negative; not graphic"
            )
    del d[k - 1]
    d.sort(reverse=True)
    return DegreeSequence(tuple(d))


def is_graphic_kw(seq: DegreeSequence) -> bool:
    """Graphicality via the lay-off recursion (always lays off the last term).

    Cross-check for is_graphic_eg: a sequence is graphic iff the residual
    after laying off its smallest term is graphic, and the empty sequence is
    graphic. Runs in O(n^2) sorts overall.
    """
    cur = seq
    while cur.n:
        try:
            cur = layoff(cur, cur.n)
        except DomainError:
            return False
    return True
