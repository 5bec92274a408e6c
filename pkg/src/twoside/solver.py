"""Maximal solutions of one-sided linear systems over an idempotent semiring.

A system is  (z_1 * H_1) + ... + (z_K * H_K) = Y  with columns H_k and target
Y given and the scalars z_k unknown.  Over semirings whose induced order
admits per-component maxima, the order-greatest candidate takes each z_k as
the order-minimum over components of the largest x with
(x * H_k[l]) + Y[l] == Y[l].  The candidate solves the system whenever
anything does, so one verification pass decides solvability.

The solver is generic over the semiring interface but needs a per-semiring
`max_component(h, y)` callback; the digit-dominance one ships as
`digital.w_max_component`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .semiring import Semiring


@dataclass(frozen=True)
class LinearSystem:
    columns: tuple  # K coefficient vectors, each of length L
    target: tuple  # length L

    def __post_init__(self):
        columns = tuple(tuple(c) for c in self.columns)
        target = tuple(self.target)
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "target", target)
        if not columns:
            raise ValueError("need at least one column")
        if not target:
            raise ValueError("need a non-empty target")
        if any(len(c) != len(target) for c in columns):
            raise ValueError("column length must match target length")

    @property
    def unknowns(self) -> int:
        return len(self.columns)

    @property
    def components(self) -> int:
        return len(self.target)


def max_candidate(system: LinearSystem, sr: Semiring, max_component: Callable):
    """Coordinatewise order-maximum candidate (unverified).

    Components where max_component yields the top element impose no
    constraint; with the fold below they simply never win the minimum, and an
    all-unconstrained column comes out as the top element itself.
    """
    if sr.leq is None:
        raise ValueError("semiring must expose its induced order")
    leq = sr.leq
    out = []
    for col in system.columns:
        best = None
        for h, y in zip(col, system.target):
            c = max_component(h, y)
            if best is None or leq(c, best):
                best = c
        out.append(best)
    return tuple(out)


def verify(system: LinearSystem, z, sr: Semiring) -> bool:
    """Exact check that the combination with coefficients z hits the target."""
    if len(z) != system.unknowns:
        raise ValueError("coefficient count must match column count")
    add, mul, zero = sr.add, sr.mul, sr.zero
    acc = [zero] * system.components
    for zk, col in zip(z, system.columns):
        for idx, h in enumerate(col):
            acc[idx] = add(acc[idx], mul(zk, h))
    return tuple(acc) == system.target


def maximal_solution(
    system: LinearSystem, sr: Semiring, max_component: Callable
) -> Optional[tuple]:
    """The order-greatest solution, or None when the system has no solution."""
    cand = max_candidate(system, sr, max_component)
    return cand if verify(system, cand, sr) else None
