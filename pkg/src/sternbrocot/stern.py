"""Stern-Brocot sequences on [0,1] and their new-mediant layers.

Level 0 is {0/1, 1/1}; each next level inserts the mediant between every
pair of neighbours, so level n holds 2**n + 1 fractions. The fractions
that first appear at level n are exactly those whose regular
continued-fraction quotients sum to n + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cf import expand_rcf, sum_partial_quotients
from .exact import mediant


@dataclass(frozen=True)
class SternBrocotLevel:
    """One materialized level: a strictly increasing run from 0 to 1.

    Materialized as a sorted tuple (not a pointer tree) so that rank
    queries are a binary search away.
    """

    index: int
    elements: tuple[Fraction, ...]


def first_level() -> SternBrocotLevel:
    return SternBrocotLevel(0, (Fraction(0), Fraction(1)))


def next_level(level: SternBrocotLevel) -> SternBrocotLevel:
    """Insert the mediant between each pair of neighbours."""
    elements = level.elements
    out: list[Fraction] = []
    for left, right in zip(elements, elements[1:]):
        out.append(left)
        out.append(mediant(left, right))
    out.append(elements[-1])
    return SternBrocotLevel(level.index + 1, tuple(out))


def stern_level(n: int) -> SternBrocotLevel:
    """Materialize level n (2**n + 1 elements)."""
    if n < 0:
        raise ValueError("level index must be >= 0")
    level = first_level()
    for _ in range(n):
        level = next_level(level)
    return level


def new_mediants(n: int) -> tuple[Fraction, ...]:
    """The 2**(n-1) fractions that first appear at level n, in increasing order.

    The endpoints 0 and 1 take part in the mediants but never appear here.
    """
    if n < 1:
        raise ValueError("new mediants exist from level 1 on")
    elements = stern_level(n - 1).elements
    return tuple(mediant(a, b) for a, b in zip(elements, elements[1:]))


def characterize_Qn(x: Fraction) -> int:
    """The unique level at which x in (0,1) first appears.

    Equal to S(x) - 1, where S is the sum of the regular
    continued-fraction quotients of x.
    """
    if not 0 < x < 1:
        raise ValueError(f"need 0 < x < 1, got {x}")
    return sum_partial_quotients(expand_rcf(x)) - 1
