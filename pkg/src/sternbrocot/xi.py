"""The reduced-fraction analogue of the Stern-Brocot construction.

Grade the rationals of (0,1) by the digit sum of their reduced
continued fraction: generation k collects the values with
L(x) = k + 1. Generation k has exactly fibonacci(k) members, and the
generations assemble into an infinite binary tree rooted at 1/2 in
which appending a digit 2 steps two generations down and incrementing
the last digit steps one generation down. `xi(n)` is the union of the
first n generations together with the endpoints 0 and 1 - the sequence
whose empirical distribution the `dist` module studies.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .cf import ReducedRCF, digit_sum_L, expand_rrcf, value_rrcf


def fibonacci(n: int) -> int:
    """F(1) = F(2) = 1, F(n+1) = F(n) + F(n-1)."""
    if n < 1:
        raise ValueError("Fibonacci numbers are indexed from 1 here")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


@dataclass(frozen=True, slots=True)
class XiTreeNode:
    """A tree node: a rational in (0,1), its reduced digits, its generation."""

    value: Fraction
    digits: ReducedRCF
    level: int

    def __post_init__(self) -> None:
        if self.level != digit_sum_L(self.digits) - 1:
            raise ValueError("level must be the digit sum minus one")

    @classmethod
    def from_digits(cls, digits: ReducedRCF | tuple[int, ...]) -> "XiTreeNode":
        d = digits if isinstance(digits, ReducedRCF) else ReducedRCF(tuple(digits))
        return cls(value=value_rrcf(d), digits=d, level=digit_sum_L(d) - 1)

    @classmethod
    def root(cls) -> "XiTreeNode":
        return cls.from_digits((2,))


@dataclass(frozen=True, slots=True)
class XiSequence:
    """Generations 1..index plus the endpoints, sorted; fibonacci(index+2) + 1 values."""

    index: int
    elements: tuple[Fraction, ...]


def node_for(x: Fraction) -> XiTreeNode:
    """The unique tree node whose value is x in (0,1)."""
    return XiTreeNode.from_digits(expand_rrcf(x))


def left_child(node: XiTreeNode) -> XiTreeNode:
    """Append a digit 2: two generations down, and the smaller child."""
    return XiTreeNode.from_digits(node.digits.digits + (2,))


def right_child(node: XiTreeNode) -> XiTreeNode:
    """Increment the last digit: one generation down, the larger child."""
    d = node.digits.digits
    return XiTreeNode.from_digits(d[:-1] + (d[-1] + 1,))


def _digit_lists(total: int) -> Iterator[tuple[int, ...]]:
    """All tuples (b1,...,bl) with every bi >= 2 and b1+...+bl = total."""
    if total < 2:
        return
    yield (total,)
    for first in range(2, total - 1):
        for rest in _digit_lists(total - first):
            yield (first, *rest)


@lru_cache(maxsize=None)
def theta(k: int) -> tuple[XiTreeNode, ...]:
    """Generation k: all nodes with digit sum k + 1, sorted by value.

    Enumerated directly as digit compositions rather than by walking the
    tree, so tree-walk tests have an independent route to check against.
    """
    if k < 1:
        raise ValueError("generations are indexed from 1")
    nodes = [XiTreeNode.from_digits(d) for d in _digit_lists(k + 1)]
    nodes.sort(key=lambda node: node.value)
    return tuple(nodes)


@lru_cache(maxsize=None)
def xi(n: int) -> XiSequence:
    """Generations 1..n plus {0, 1}, merged into one sorted sequence."""
    if n < 1:
        raise ValueError("sequence index must be >= 1")
    if n == 1:
        return XiSequence(1, (Fraction(0), Fraction(1, 2), Fraction(1)))
    previous = xi(n - 1).elements
    fresh = tuple(node.value for node in theta(n))
    return XiSequence(n, tuple(heapq.merge(previous, fresh)))


def subtree_count(node_level: int, up_to_level: int) -> int:
    """Size of the subtree below (and including) a node of the given
    generation, truncated at generation up_to_level.

    The subtree hanging off any node is generation-shift isomorphic to
    the whole tree, whose first j generations hold fibonacci(j+2) - 1
    nodes; hence the count depends only on the two levels.
    """
    if node_level < 1:
        raise ValueError("node level must be >= 1")
    if up_to_level < node_level:
        return 0
    return fibonacci(up_to_level - node_level + 3) - 1


def subtree_nodes(root: XiTreeNode, up_to_level: int) -> Iterator[XiTreeNode]:
    """Every node of the subtree rooted at `root` down to up_to_level."""
    if root.level > up_to_level:
        return
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        if node.level + 1 <= up_to_level:
            stack.append(right_child(node))
        if node.level + 2 <= up_to_level:
            stack.append(left_child(node))
