"""The digit-dominance semiring on the naturals with a top element.

Values live in W = N ∪ {inf}.  Both operations are selections driven by the
base-10 digit sum: addition keeps the operand with the larger digit sum
(numeric max on ties), multiplication keeps the one with the smaller digit sum
(numeric min on ties).  Under the induced order -- digit sum first, numeric
value to break ties -- addition is exactly max and multiplication exactly min,
so W is a totally ordered chain with 0 at the bottom and infinity on top.

Finite values are plain Python ints; the top element is float("inf").  The mix
is safe because the operations only ever select one of their arguments, so no
int/float arithmetic takes place.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .semiring import Semiring

INF = math.inf

# Ingestion cap for finite values.  Selection never creates new magnitudes, so
# nothing computed downstream can exceed what the parsers let in.
MAX_FINITE = 2**64 - 1


def is_value(v) -> bool:
    """True for a well-formed semiring value: a capped natural or INF."""
    if isinstance(v, float):
        return v == INF
    return isinstance(v, int) and not isinstance(v, bool) and 0 <= v <= MAX_FINITE


@lru_cache(maxsize=None)
def digit_sum(a):
    """Base-10 digit sum; infinity maps to a sentinel above every finite sum."""
    if a == INF:
        return INF
    return sum(map(int, str(a)))


def w_add(a, b):
    """Keep the operand with the larger digit sum, numeric max on ties."""
    da, db = digit_sum(a), digit_sum(b)
    if da != db:
        return a if da > db else b
    return a if a >= b else b


def w_mul(a, b):
    """Keep the operand with the smaller digit sum, numeric min on ties."""
    da, db = digit_sum(a), digit_sum(b)
    if da != db:
        return a if da < db else b
    return a if a <= b else b


def w_leq(a, b) -> bool:
    """Induced order: a <= b iff w_add(a, b) == b."""
    da, db = digit_sum(a), digit_sum(b)
    if da != db:
        return da < db
    return a <= b


W = Semiring("digital", add=w_add, mul=w_mul, zero=0, one=INF, leq=w_leq)


def w_max_component(h, y):
    """Largest x with w_add(w_mul(x, h), y) == y: INF when h <= y, else y.

    This is the per-component maximum that the maximal-solution solver folds
    over; it is specific to W's order.
    """
    return INF if w_leq(h, y) else y


def parse_value(text: str):
    """Parse a decimal literal or the token "inf"."""
    s = text.strip()
    if s.lower() == "inf":
        return INF
    if not s.isdigit():
        raise ValueError(f"not a semiring value: {text!r}")
    v = int(s)
    if v > MAX_FINITE:
        raise ValueError(f"value exceeds the 64-bit cap: {text!r}")
    return v


def value_to_json(v):
    """JSON form: plain number, or the string "inf" for the top element."""
    return "inf" if v == INF else v


def value_from_json(obj):
    if isinstance(obj, str):
        if obj == "inf":
            return INF
        raise ValueError(f"not a semiring value: {obj!r}")
    if isinstance(obj, int) and not isinstance(obj, bool) and 0 <= obj <= MAX_FINITE:
        return obj
    raise ValueError(f"not a semiring value: {obj!r}")
