"""Key exchange in a twisted dihedral group ring, and the attack on it.

Each party picks a left factor g from the rotation subring and a right
factor k from the symmetric reflection subspace, and publishes g * h * k
for a public ring element h.  The left factors commute with each other and
the right factors commute through the adjoint, so both parties arrive at
the same shared element.

The attack never touches the secret factors.  The published element lives
in the span of the products (basis of rotation subring) * h * (basis of
symmetric reflections), so one Gaussian elimination over F_p writes it as a
known linear combination of those products, and replaying that combination
against the other party's public element reproduces the shared key.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import List, Optional, Tuple

from .errors import AttackError
from .gf import gauss_solve, make_field_ctx
from .twisted_ring import (
    RingCtx,
    RingElement,
    SubspaceBasis,
    basis_a2,
    basis_r1,
    element_from_json,
    element_to_json,
    flatten,
    make_ring_ctx,
    ring_ctx_from_json,
    ring_ctx_to_json,
    sample_a2,
    sample_element,
    sample_r1,
)


@dataclass(frozen=True)
class TwistedParams:
    """Public data: the ring and the element everyone multiplies around."""

    ctx: RingCtx
    h: RingElement

    def __post_init__(self):
        if self.h.ctx != self.ctx:
            raise ValueError("public element must live in the stated ring")


@dataclass(frozen=True)
class TwistedKeyPair:
    left: RingElement
    right: RingElement
    pk: RingElement


@dataclass(frozen=True)
class ExchangeTranscript:
    params: TwistedParams
    alice: TwistedKeyPair
    bob: TwistedKeyPair
    shared_key: RingElement
    keys_agree: bool


def random_params(
    p: int, n: int, m: int, rng: Random, full_support: bool = True
) -> TwistedParams:
    """Fresh ring of the given shape plus a random public element."""
    fld = make_field_ctx(p, n, rng)
    ctx = make_ring_ctx(fld, m)
    h = sample_element(ctx, rng, full_support=full_support)
    return TwistedParams(ctx, h)


def keypair_from_secrets(
    params: TwistedParams, left: RingElement, right: RingElement
) -> TwistedKeyPair:
    pk = (left * params.h) * right
    return TwistedKeyPair(left, right, pk)


def keygen(params: TwistedParams, rng: Random) -> TwistedKeyPair:
    left = sample_r1(params.ctx, rng)
    right = sample_a2(params.ctx, rng)
    return keypair_from_secrets(params, left, right)


def shared_key(own: TwistedKeyPair, other_pk: RingElement) -> RingElement:
    """Wrap the peer's public element in our secrets, adjoint on the right."""
    return (own.left * other_pk) * own.right.adjoint()


def run_exchange(params: TwistedParams, rng: Random) -> ExchangeTranscript:
    alice = keygen(params, rng)
    bob = keygen(params, rng)
    k_a = shared_key(alice, bob.pk)
    k_b = shared_key(bob, alice.pk)
    return ExchangeTranscript(params, alice, bob, k_a, k_a == k_b)


# -- key recovery from public data only --------------------------------------


def basis_products(params: TwistedParams) -> Tuple[SubspaceBasis, SubspaceBasis, list]:
    """Products L_i * h * R_j for L_i, R_j ranging over the secret-space bases."""
    left_basis = basis_r1(params.ctx)
    right_basis = basis_a2(params.ctx)
    products = []
    for li in left_basis:
        li_h = li * params.h
        for rj in right_basis:
            products.append(li_h * rj)
    return left_basis, right_basis, products


def attack_system(
    params: TwistedParams, target_pk: RingElement
) -> Tuple[list, tuple, SubspaceBasis, SubspaceBasis]:
    """Columns (as F_p coordinate vectors) and right-hand side for the solver."""
    left_basis, right_basis, products = basis_products(params)
    columns = [flatten(prod) for prod in products]
    rhs = flatten(target_pk)
    # gauss_solve wants equations as rows: transpose the column list
    rows = [tuple(col[r] for col in columns) for r in range(len(rhs))]
    return rows, rhs, left_basis, right_basis


def recover_shared_key(
    params: TwistedParams,
    solution,
    other_pk: RingElement,
    left_basis: SubspaceBasis,
    right_basis: SubspaceBasis,
) -> RingElement:
    """Replay a solved combination against the other party's public element."""
    ctx = params.ctx
    acc = RingElement.zero(ctx)
    width = len(right_basis)
    cached_left: Optional[RingElement] = None
    cached_i = -1
    for idx, z in enumerate(solution):
        if not z:
            continue
        i, j = divmod(idx, width)
        if i != cached_i:
            cached_left = left_basis[i] * other_pk
            cached_i = i
        acc = acc + (cached_left * right_basis[j].adjoint()).scale(z)
    return acc


def attack(params: TwistedParams, target_pk: RingElement, other_pk: RingElement) -> RingElement:
    """Recover the shared key of the party that published target_pk."""
    rows, rhs, left_basis, right_basis = attack_system(params, target_pk)
    solution = gauss_solve(rows, rhs, params.ctx.field.p)
    if solution is None:
        raise AttackError(
            "public element is outside the span of the basis products"
        )
    return recover_shared_key(params, solution, other_pk, left_basis, right_basis)


# -- serialization ------------------------------------------------------------


def params_to_json(params: TwistedParams) -> dict:
    obj = ring_ctx_to_json(params.ctx)
    obj["h"] = element_to_json(params.h)["coeffs"]
    return obj


def params_from_json(obj: dict) -> TwistedParams:
    ctx = ring_ctx_from_json(obj)
    h = element_from_json(
        {"m": ctx.m, "field": ring_ctx_to_json(ctx), "coeffs": obj["h"]}, ctx
    )
    return TwistedParams(ctx, h)


def transcript_to_json(tr: ExchangeTranscript, include_secrets: bool = False) -> dict:
    def elem(e: RingElement) -> list:
        return element_to_json(e)["coeffs"]

    obj = {
        "scheme": "twisted",
        "params": params_to_json(tr.params),
        "alice_public": elem(tr.alice.pk),
        "bob_public": elem(tr.bob.pk),
        "keys_agree": tr.keys_agree,
    }
    if include_secrets:
        obj["secrets"] = {
            "alice_left": elem(tr.alice.left),
            "alice_right": elem(tr.alice.right),
            "bob_left": elem(tr.bob.left),
            "bob_right": elem(tr.bob.right),
            "shared_key": elem(tr.shared_key),
        }
    return obj


def _elem_from_coeffs(ctx: RingCtx, coeffs: list) -> RingElement:
    return element_from_json(
        {"m": ctx.m, "field": ring_ctx_to_json(ctx), "coeffs": coeffs}, ctx
    )


def transcript_from_json(obj: dict) -> ExchangeTranscript:
    params = params_from_json(obj["params"])
    ctx = params.ctx
    alice_pk = _elem_from_coeffs(ctx, obj["alice_public"])
    bob_pk = _elem_from_coeffs(ctx, obj["bob_public"])
    zero = RingElement.zero(ctx)
    secrets = obj.get("secrets")
    if secrets:
        alice = TwistedKeyPair(
            _elem_from_coeffs(ctx, secrets["alice_left"]),
            _elem_from_coeffs(ctx, secrets["alice_right"]),
            alice_pk,
        )
        bob = TwistedKeyPair(
            _elem_from_coeffs(ctx, secrets["bob_left"]),
            _elem_from_coeffs(ctx, secrets["bob_right"]),
            bob_pk,
        )
        key = _elem_from_coeffs(ctx, secrets["shared_key"])
    else:
        alice = TwistedKeyPair(zero, zero, alice_pk)
        bob = TwistedKeyPair(zero, zero, bob_pk)
        key = zero
    return ExchangeTranscript(params, alice, bob, key, bool(obj["keys_agree"]))
