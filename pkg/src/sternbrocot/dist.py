"""Empirical distribution functions of the two mediant constructions.

The fraction of a level's elements lying at or below x converges, as the
level grows, to Minkowski's ?(x) for the Stern-Brocot sequences and to
the tau**2 singular function for the reduced-fraction sequences `xi(n)`.
This module computes the finite-n empirical values exactly, monitors
their convergence to the exact Q(sqrt5) target, and exposes the
subtree-count ratios whose Fibonacci limit tau**2 drives that
convergence.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cf import digit_sum_L, expand_rcf, expand_rrcf
from .exact import QuadSurd, mediant, to_decimal
from .singular import g_tau2
from .stern import stern_level
from .xi import fibonacci, subtree_count, xi

#: Largest xi index verify_theorem1 will materialize (~2.2M elements).
MAX_XI_INDEX = 30


@dataclass(frozen=True)
class EmpiricalCDF:
    """Rank queries over one materialized, sorted sequence.

    The value at x is (number of elements <= x) / (total), an exact
    rational; a nondecreasing step function that reaches 1 at x = 1.
    """

    kind: str
    index: int
    elements: tuple[Fraction, ...]

    @classmethod
    def build(cls, kind: str, n: int) -> "EmpiricalCDF":
        return _build_cdf(kind, n)

    def value(self, x: Fraction) -> Fraction:
        if not 0 <= x <= 1:
            raise ValueError(f"need 0 <= x <= 1, got {x}")
        return Fraction(bisect_right(self.elements, x), len(self.elements))


@lru_cache(maxsize=8)
def _build_cdf(kind: str, n: int) -> EmpiricalCDF:
    if kind == "stern_brocot":
        return EmpiricalCDF(kind, n, stern_level(n).elements)
    if kind == "xi":
        return EmpiricalCDF(kind, n, xi(n).elements)
    raise ValueError(f"unknown sequence kind: {kind!r}")


def empirical_cdf(kind: str, n: int, x: Fraction) -> Fraction:
    """Exact rank ratio of x in the level-n sequence of the given kind
    ("stern_brocot" or "xi")."""
    return EmpiricalCDF.build(kind, n).value(x)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    empirical: Fraction
    abs_error_decimal: str


@dataclass(frozen=True)
class ConvergenceReport:
    """Exact convergence table of the xi empirical CDF at one point."""

    x: Fraction
    target: QuadSurd
    tolerance: Fraction
    rows: tuple[ConvergenceRow, ...]
    passed: bool


def verify_theorem1(x: Fraction, n_max: int, tolerance: Fraction = Fraction(1, 50)) -> ConvergenceReport:
    """Tabulate |empirical_cdf(xi, n, x) - g_tau2(x)| for n = 2..n_max.

    The target is exact in Q(sqrt5); errors are reported as 30-digit
    decimals, and the pass verdict compares the final error against the
    tolerance exactly. Refuses n_max beyond MAX_XI_INDEX rather than
    approximating.
    """
    if not 0 < x < 1:
        raise ValueError(f"need 0 < x < 1, got {x}")
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    if n_max > MAX_XI_INDEX:
        raise ValueError(f"refusing n_max > {MAX_XI_INDEX}: the sequence would not fit in memory")
    target = g_tau2(expand_rcf(x))
    rows = []
    final_error: QuadSurd = QuadSurd(0)
    for n in range(2, n_max + 1):
        empirical = empirical_cdf("xi", n, x)
        final_error = abs(target - empirical)
        rows.append(ConvergenceRow(n, empirical, to_decimal(final_error, 30)))
    return ConvergenceReport(x, target, tolerance, tuple(rows), final_error <= tolerance)


def mediant_ratio(x: Fraction, y: Fraction, n_of_pair: int, m: int) -> Fraction:
    """Finite-depth version of the gap-splitting ratio at the mediant of
    two neighbours x < y of xi(n_of_pair).

    Counting through generation m, the subtree under the mediant's left
    child covers (g(mediant) - g(x)) and the subtree under the mediant
    covers (g(y) - g(x)); their size ratio
    (fibonacci(m-k+1) - 1) / (fibonacci(m-k+3) - 1), with k the mediant's
    generation, tends to tau**2 as m grows.
    """
    sequence = xi(n_of_pair).elements
    position = bisect_left(sequence, x)
    if position >= len(sequence) - 1 or sequence[position] != x or sequence[position + 1] != y:
        raise ValueError(f"{x} and {y} are not consecutive in the index-{n_of_pair} sequence")
    k = digit_sum_L(expand_rrcf(mediant(x, y))) - 1
    if m < k:
        raise ValueError(f"depth m = {m} does not reach the mediant's generation {k}")
    return Fraction(subtree_count(k + 2, m), subtree_count(k, m))


def fibonacci_ratio_limit(j: int) -> Fraction:
    """F(j) / F(j+2); approaches tau**2 from alternating sides, with
    strictly shrinking error."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return Fraction(fibonacci(j), fibonacci(j + 2))
