"""The one-parameter family of singular functions over the unit interval.

For a split parameter lam in (0,1), g maps 0 to 0, 1 to 1, and sends the
mediant of two Stern-Brocot neighbours x < y to
g(x) + (g(y) - g(x)) * lam, i.e. each gap is split in ratio lam : 1-lam.
At lam = 1/2 this is Minkowski's question-mark function.

Four routes to the same values:

* `g_inductive`  - replay the defining mediant recurrence along the
  binary search path to x; O(S(x)) exact steps.
* `question_mark` - Salem's alternating dyadic series from the regular
  continued-fraction quotients (the lam = 1/2 case).
* `g_series`     - the generalization of that series to every lam:
  the k-th term is (-1)**(k+1) times lam**(sum of odd-position
  quotients up to k, minus 1) times (1-lam)**(sum of even-position
  quotients up to k).
* `g_tau2`       - the lam = tau**2 specialization, where 1 - lam = tau
  collapses every term to a signed power of tau, evaluated in Q(sqrt5).

Evaluators are generic over the coefficient system: any exact ordered
field element with +, -, *, ** works, so Fraction and QuadSurd share one
code path and nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Union

from .cf import RegularCF
from .exact import TAU, QuadSurd, mediant

LambdaValue = Union[Fraction, QuadSurd]
GValue = Union[Fraction, QuadSurd]


def _check_lambda(lam: LambdaValue) -> None:
    if not 0 < lam < 1:
        raise ValueError("the split parameter must lie strictly between 0 and 1")


def _zero_one(lam: LambdaValue) -> tuple[GValue, GValue]:
    zero = lam - lam
    return zero, zero + 1


def g_inductive(x: Fraction, lam: LambdaValue) -> GValue:
    """Evaluate g at a rational x in [0,1] by replaying the gap splits.

    Walks the Stern-Brocot bisection path from the gap (0, 1) down to x,
    carrying the g-values of the enclosing neighbours; the path length is
    the quotient sum S(x), so no level is ever materialized.
    """
    _check_lambda(lam)
    if not 0 <= x <= 1:
        raise ValueError(f"need 0 <= x <= 1, got {x}")
    zero, one = _zero_one(lam)
    if x == 0:
        return zero
    if x == 1:
        return one
    lo, hi = Fraction(0), Fraction(1)
    g_lo, g_hi = zero, one
    while True:
        mid = mediant(lo, hi)
        g_mid = g_lo + (g_hi - g_lo) * lam
        if x == mid:
            return g_mid
        if x < mid:
            hi, g_hi = mid, g_mid
        else:
            lo, g_lo = mid, g_mid


def question_mark(cf: RegularCF) -> Fraction:
    """Minkowski's ?(x) from the quotients of x: the alternating sum of
    1 / 2**(a1 + ... + ak - 1). Always a dyadic rational."""
    total = Fraction(0)
    cumulative = 0
    sign = 1
    for a in cf.quotients:
        cumulative += a
        total += Fraction(sign, 2 ** (cumulative - 1))
        sign = -sign
    return total if cf.quotients else Fraction(1)


def _series_terms(quotients: Iterable[int], lam: LambdaValue) -> Iterator[GValue]:
    """Unsigned term magnitudes of the alternating series for g.

    Term k multiplies the previous one by lam**ak (k odd) or
    (1-lam)**ak (k even); both factors are < 1, so magnitudes strictly
    decrease - which is what makes partial sums bracket the value.
    """
    zero, one = _zero_one(lam)
    complement = one - lam
    magnitude = one
    for position, a in enumerate(quotients, start=1):
        if a < 1:
            raise ValueError(f"partial quotients must be >= 1, got {a}")
        if position == 1:
            magnitude = magnitude * lam ** (a - 1)
        elif position % 2 == 0:
            magnitude = magnitude * complement ** a
        else:
            magnitude = magnitude * lam ** a
        yield magnitude


def g_series(cf: RegularCF, lam: LambdaValue) -> GValue:
    """Evaluate g by the finite alternating series over the quotients of x.

    The empty quotient list (x = 1) evaluates to 1, mirroring value_rcf.
    """
    _check_lambda(lam)
    zero, one = _zero_one(lam)
    if not cf.quotients:
        return one
    total = zero
    sign = 1
    for magnitude in _series_terms(cf.quotients, lam):
        total = total + magnitude if sign > 0 else total - magnitude
        sign = -sign
    return total


def g_tau2(cf: RegularCF) -> QuadSurd:
    """The tau**2 specialization, entirely in Q(sqrt5).

    Since 1 - tau**2 = tau, term k collapses to a signed power of tau
    with exponent (sum of alpha_i * a_i up to k) - 2, where alpha is 2 on
    odd positions and 1 on even ones.
    """
    one = QuadSurd(1)
    if not cf.quotients:
        return one
    total = QuadSurd(0)
    weighted = 0
    sign = 1
    for position, a in enumerate(cf.quotients, start=1):
        weighted += 2 * a if position % 2 == 1 else a
        term = TAU ** (weighted - 2)
        total = total + term if sign > 0 else total - term
        sign = -sign
    return total


def g_stream(
    quotients: Iterable[int],
    lam: LambdaValue,
    epsilon: Fraction,
) -> tuple[GValue, GValue]:
    """Enclose g(x) for an irrational x given as a stream of quotients.

    Consumes quotients until the magnitude of the next unadded term drops
    below epsilon, then returns (lo, hi) with lo < g(x) < hi and
    hi - lo < epsilon: the signs alternate and the magnitudes strictly
    decrease, so the value always lies between consecutive partial sums.

    Raises if the stream is exhausted first - a finite stream means x was
    rational, and g_series gives the exact value instead.
    """
    _check_lambda(lam)
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    zero, _ = _zero_one(lam)
    partial = zero
    sign = 1
    for magnitude in _series_terms(quotients, lam):
        if magnitude < epsilon:
            bracket = partial + magnitude if sign > 0 else partial - magnitude
            return (partial, bracket) if sign > 0 else (bracket, partial)
        partial = partial + magnitude if sign > 0 else partial - magnitude
        sign = -sign
    raise ValueError("quotient stream ended: the value is rational, use g_series")
