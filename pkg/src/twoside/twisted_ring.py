"""Twisted group rings of dihedral groups over small finite fields.

Group elements x^i y^k of <x, y | x^m = y^2 = 1, y x^a = x^{m-a} y> are
(i, k) pairs with 0 <= i < m and k in {0, 1}; a ring element keeps one field
coefficient per group element.  Multiplying (a x^i y) by (b x^j y^k) picks up
the twist factor tau^j, where tau is the highest-order root of unity in the
field whose order divides m.  That divisibility is exactly what makes the
twist a 2-cocycle, hence the ring associative: any unit of larger order
breaks the cocycle identity on pairs of rotations whose exponents wrap past
m.  tau is derived canonically from the field generator t as
t^((p^n - 1) / gcd(m, p^n - 1)).

The adjoint rescales the x^i y^k coefficient by tau^{-i}.  On elements of the
symmetric reflection subspace (coefficients equal at x^j y and x^{m-j} y) the
adjoint exactly cancels the twist picked up during multiplication, which
gives the commutation identities the key exchange and the attack both lean
on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from random import Random
from typing import List, Tuple

from .gf import (
    FieldCtx,
    element_from_index,
    f_add,
    f_inv,
    f_mul,
    f_pow,
    f_sub,
    field_from_json,
    field_to_json,
)

MAX_M = 64  # dense coefficient storage; enough for every desk-scale group here

DIHEDRAL_IDENTITY = (0, 0)


def dihedral_mul(m: int, a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
    """Group law on (rotation exponent, reflection bit) pairs."""
    i, k = a
    j, l = b
    if k:
        return ((i - j) % m, 1 - l)
    return ((i + j) % m, l)


def dihedral_inv(m: int, a: Tuple[int, int]) -> Tuple[int, int]:
    i, k = a
    return a if k else ((-i) % m, 0)


@dataclass(frozen=True)
class RingCtx:
    """Field plus dihedral parameter plus the derived twist tables."""

    field: FieldCtx
    m: int
    twist: tuple
    twist_pows: tuple  # tau^0 .. tau^{m-1}
    twist_inv_pows: tuple  # tau^0, tau^{-1}, .., tau^{-(m-1)}

    def __post_init__(self):
        if not 1 <= self.m <= MAX_M:
            raise ValueError(f"m must be in 1..{MAX_M}")
        if len(self.twist_pows) != self.m or len(self.twist_inv_pows) != self.m:
            raise ValueError("twist tables must have m entries")

    @property
    def group_size(self) -> int:
        return 2 * self.m


def make_ring_ctx(fld: FieldCtx, m: int) -> RingCtx:
    """Attach the dihedral parameter and derive the twist root of unity."""
    if not 1 <= m <= MAX_M:
        raise ValueError(f"m must be in 1..{MAX_M}")
    units = fld.order - 1
    d = math.gcd(m, units)
    tau = f_pow(fld, fld.t, units // d)
    pows = [fld.one]
    for _ in range(1, m):
        pows.append(f_mul(fld, pows[-1], tau))
    tau_inv = f_inv(fld, tau)
    inv_pows = [fld.one]
    for _ in range(1, m):
        inv_pows.append(f_mul(fld, inv_pows[-1], tau_inv))
    return RingCtx(fld, m, tau, tuple(pows), tuple(inv_pows))


def cocycle(ctx: RingCtx, g: Tuple[int, int], h: Tuple[int, int]) -> tuple:
    """Twist unit attached to the product of basis elements g and h.

    Trivial unless g carries the reflection; then it is tau to the rotation
    exponent of h.  Both cocycle axioms hold because tau^m == 1.
    """
    if g[1]:
        return ctx.twist_pows[h[0] % ctx.m]
    return ctx.field.one


@dataclass(frozen=True)
class RingElement:
    """Dense coefficient vector over the group; index i + m*k holds x^i y^k."""

    ctx: RingCtx = field(repr=False)
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(tuple(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.ctx.group_size:
            raise ValueError("coefficient count must be 2*m")
        n = self.ctx.field.n
        if any(len(c) != n for c in coeffs):
            raise ValueError("coefficients must be field elements of length n")

    @classmethod
    def zero(cls, ctx: RingCtx) -> "RingElement":
        return cls(ctx, ((ctx.field.zero),) * ctx.group_size)

    @classmethod
    def one(cls, ctx: RingCtx) -> "RingElement":
        return cls.single(ctx, 0, 0, ctx.field.one)

    @classmethod
    def single(cls, ctx: RingCtx, i: int, k: int, coeff=None) -> "RingElement":
        """c * x^i y^k as a ring element; coeff defaults to the field one."""
        if not (0 <= i < ctx.m and k in (0, 1)):
            raise ValueError("group index out of range")
        if coeff is None:
            coeff = ctx.field.one
        coeffs = [ctx.field.zero] * ctx.group_size
        coeffs[i + ctx.m * k] = tuple(coeff)
        return cls(ctx, tuple(coeffs))

    def coeff(self, i: int, k: int) -> tuple:
        return self.coeffs[i % self.ctx.m + self.ctx.m * k]

    def is_zero(self) -> bool:
        return not any(any(c) for c in self.coeffs)

    def _require_same(self, other: "RingElement") -> None:
        if self.ctx != other.ctx:
            raise ValueError("ring context mismatch")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._require_same(other)
        fld = self.ctx.field
        return RingElement(
            self.ctx,
            tuple(f_add(fld, a, b) for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._require_same(other)
        fld = self.ctx.field
        return RingElement(
            self.ctx,
            tuple(f_sub(fld, a, b) for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._require_same(other)
        ctx = self.ctx
        m = ctx.m
        fld = ctx.field
        zero = fld.zero
        pows = ctx.twist_pows
        out = [zero] * (2 * m)
        for idx_a, ca in enumerate(self.coeffs):
            if ca == zero:
                continue
            ia = idx_a % m
            refl_a = idx_a >= m
            for idx_b, cb in enumerate(other.coeffs):
                if cb == zero:
                    continue
                ib = idx_b % m
                c = f_mul(fld, ca, cb)
                if refl_a:
                    c = f_mul(fld, c, pows[ib])
                    io = (ia - ib) % m
                    ko = idx_b < m  # reflection bit flips
                else:
                    io = (ia + ib) % m
                    ko = idx_b >= m
                o = io + (m if ko else 0)
                out[o] = f_add(fld, out[o], c)
        return RingElement(ctx, tuple(out))

    def scale(self, c) -> "RingElement":
        """Multiply every coefficient by a field element (or an F_p int)."""
        fld = self.ctx.field
        if isinstance(c, int):
            c = fld.from_int(c)
        return RingElement(self.ctx, tuple(f_mul(fld, c, a) for a in self.coeffs))

    def adjoint(self) -> "RingElement":
        """Rescale the x^i y^k coefficient by tau^{-i}."""
        ctx = self.ctx
        m = ctx.m
        fld = ctx.field
        inv_pows = ctx.twist_inv_pows
        out = list(self.coeffs)
        for idx, c in enumerate(out):
            i = idx % m
            if i and c != fld.zero:
                out[idx] = f_mul(fld, c, inv_pows[i])
        return RingElement(ctx, tuple(out))

    def rotation_part(self) -> "RingElement":
        """Projection onto the span of the x^i (the commuting half)."""
        m = self.ctx.m
        zero = self.ctx.field.zero
        return RingElement(self.ctx, self.coeffs[:m] + (zero,) * m)

    def reflection_part(self) -> "RingElement":
        """Projection onto the span of the x^i y."""
        m = self.ctx.m
        zero = self.ctx.field.zero
        return RingElement(self.ctx, (zero,) * m + self.coeffs[m:])

    def __repr__(self) -> str:
        terms = []
        m = self.ctx.m
        for idx, c in enumerate(self.coeffs):
            if any(c):
                i, k = idx % m, idx // m
                name = f"x^{i}" if not k else (f"x^{i}y" if i else "y")
                if idx == 0:
                    name = "1"
                terms.append(f"{list(c)}*{name}")
        return "RingElement(" + (" + ".join(terms) if terms else "0") + ")"


@dataclass(frozen=True)
class SubspaceBasis:
    label: str
    elements: tuple

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, idx):
        return self.elements[idx]


def _t_powers(ctx: RingCtx) -> List[tuple]:
    fld = ctx.field
    out = [fld.one]
    for _ in range(1, fld.n):
        out.append(f_mul(fld, out[-1], fld.t))
    return out


def basis_r1(ctx: RingCtx) -> SubspaceBasis:
    """F_p-basis t^i x^j of the commuting rotation subring."""
    elems = []
    for tp in _t_powers(ctx):
        for j in range(ctx.m):
            elems.append(RingElement.single(ctx, j, 0, tp))
    return SubspaceBasis("rotation subring", tuple(elems))


def _symmetric_basis(ctx: RingCtx, k: int) -> Tuple[RingElement, ...]:
    """t^i copies of the symmetric combinations x^j + x^{m-j} (times y^k)."""
    m = ctx.m
    elems = []
    for tp in _t_powers(ctx):
        orbit = [RingElement.single(ctx, 0, k, tp)]
        for j in range(1, (m + 1) // 2):
            orbit.append(
                RingElement.single(ctx, j, k, tp)
                + RingElement.single(ctx, m - j, k, tp)
            )
        if m % 2 == 0:
            orbit.append(RingElement.single(ctx, m // 2, k, tp))
        elems.extend(orbit)
    return tuple(elems)


def basis_a1(ctx: RingCtx) -> SubspaceBasis:
    """Symmetric subspace of the rotation half."""
    return SubspaceBasis("symmetric rotations", _symmetric_basis(ctx, 0))


def basis_a2(ctx: RingCtx) -> SubspaceBasis:
    """Symmetric subspace of the reflection half; the right-factor key space."""
    return SubspaceBasis("symmetric reflections", _symmetric_basis(ctx, 1))


def _sample_span(basis: SubspaceBasis, ctx: RingCtx, rng: Random) -> RingElement:
    p = ctx.field.p
    acc = RingElement.zero(ctx)
    for elem in basis.elements:
        c = rng.randrange(p)
        if c:
            acc = acc + elem.scale(c)
    return acc


def sample_r1(ctx: RingCtx, rng: Random) -> RingElement:
    """Uniform element of the rotation subring."""
    return _sample_span(basis_r1(ctx), ctx, rng)


def sample_a1(ctx: RingCtx, rng: Random) -> RingElement:
    """Uniform element of the symmetric rotation subspace."""
    return _sample_span(basis_a1(ctx), ctx, rng)


def sample_a2(ctx: RingCtx, rng: Random) -> RingElement:
    """Uniform element of the symmetric reflection subspace."""
    return _sample_span(basis_a2(ctx), ctx, rng)


def sample_element(ctx: RingCtx, rng: Random, full_support: bool = True) -> RingElement:
    """Random ring element; by default every coefficient is nonzero."""
    fld = ctx.field
    lo = 1 if full_support else 0
    coeffs = tuple(
        element_from_index(fld, rng.randrange(lo, fld.order))
        for _ in range(ctx.group_size)
    )
    return RingElement(ctx, coeffs)


def flatten(elem: RingElement) -> tuple:
    """All coefficient vectors concatenated into one F_p coordinate vector."""
    return tuple(c for coeff in elem.coeffs for c in coeff)


def unflatten(ctx: RingCtx, vec) -> RingElement:
    n = ctx.field.n
    vec = tuple(vec)
    if len(vec) != ctx.group_size * n:
        raise ValueError("coordinate vector has the wrong length")
    coeffs = tuple(vec[i * n : (i + 1) * n] for i in range(ctx.group_size))
    return RingElement(ctx, coeffs)


def ring_ctx_to_json(ctx: RingCtx) -> dict:
    obj = field_to_json(ctx.field)
    obj["m"] = ctx.m
    return obj


def ring_ctx_from_json(obj: dict) -> RingCtx:
    return make_ring_ctx(field_from_json(obj), obj["m"])


def element_to_json(elem: RingElement) -> dict:
    items = []
    m = elem.ctx.m
    for idx, c in enumerate(elem.coeffs):
        if any(c):
            items.append([idx % m, idx // m, list(c)])
    return {
        "m": m,
        "field": field_to_json(elem.ctx.field),
        "coeffs": items,
    }


def element_from_json(obj: dict, ctx: RingCtx = None) -> RingElement:
    if ctx is None:
        ctx = make_ring_ctx(field_from_json(obj["field"]), obj["m"])
    else:
        if obj["m"] != ctx.m or field_from_json(obj["field"]) != ctx.field:
            raise ValueError("element JSON does not match the ring context")
    coeffs = [ctx.field.zero] * ctx.group_size
    seen = set()
    for i, k, c in obj["coeffs"]:
        if not (0 <= i < ctx.m and k in (0, 1)):
            raise ValueError("group index out of range")
        idx = i + ctx.m * k
        if idx in seen:
            raise ValueError("duplicate coefficient entry")
        seen.add(idx)
        if len(c) != ctx.field.n or any(not (0 <= v < ctx.field.p) for v in c):
            raise ValueError("coefficient is not a reduced field element")
        coeffs[idx] = tuple(c)
    return RingElement(ctx, tuple(coeffs))
