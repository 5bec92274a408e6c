"""Key exchange over the digit-sum semiring, and the attack on it.

Both parties sandwich a public square matrix M between two secret circulant
matrices and publish the result.  Circulants over a commutative semiring
commute, so wrapping the peer's public matrix in one's own secrets lands on
the same shared matrix for both sides.

The attack solves the one-sided-linear system that expresses a public
matrix in the basis C_i M C_j of two-sided circulant products.  Over this
semiring every solvable system has a componentwise-maximal solution that a
single scan computes, so recovery is one pass over n^2 columns; replaying
the found combination against the other public matrix yields the shared
key, no secrets needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random
from typing import Optional, Tuple

from .digital import (
    INF,
    MAX_FINITE,
    W,
    is_value,
    value_from_json,
    value_to_json,
    w_max_component,
)
from .errors import AttackError
from .matrices import (
    Circulant,
    SemiringMatrix,
    circulant_from_json,
    circulant_generators,
    circulant_to_json,
    flatten_two_sided,
    matrix_from_json,
    matrix_to_json,
)
from .solver import LinearSystem, maximal_solution

DEFAULT_ENTRY_BOUND = 10**9


@dataclass(frozen=True)
class DigitalParams:
    """Public data: the matrix size and the matrix everyone multiplies around."""

    n: int
    matrix: SemiringMatrix
    entry_bound: int = DEFAULT_ENTRY_BOUND

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.matrix.n != self.n:
            raise ValueError("matrix size must match n")
        if self.matrix.sr is not W:
            raise ValueError("matrix must live over the digit-sum semiring")
        if not 1 <= self.entry_bound <= MAX_FINITE:
            raise ValueError("entry bound out of range")


@dataclass(frozen=True)
class DigitalKeyPair:
    left: Circulant
    right: Circulant
    pk: SemiringMatrix


@dataclass(frozen=True)
class ExchangeTranscript:
    params: DigitalParams
    alice: DigitalKeyPair
    bob: DigitalKeyPair
    shared_key: SemiringMatrix
    keys_agree: bool


def sample_value(bound: int, rng: Random, inf_prob: float = 0.0):
    if inf_prob and rng.random() < inf_prob:
        return INF
    return rng.randrange(bound + 1)


def sample_circulant(
    n: int, bound: int, rng: Random, inf_prob: float = 0.0
) -> Circulant:
    col = tuple(sample_value(bound, rng, inf_prob) for _ in range(n))
    return Circulant(W, col)


def sample_matrix(n: int, bound: int, rng: Random, inf_prob: float = 0.0) -> SemiringMatrix:
    rows = tuple(
        tuple(sample_value(bound, rng, inf_prob) for _ in range(n)) for _ in range(n)
    )
    return SemiringMatrix(W, rows)


def random_params(
    n: int, rng: Random, entry_bound: int = DEFAULT_ENTRY_BOUND
) -> DigitalParams:
    return DigitalParams(n, sample_matrix(n, entry_bound, rng), entry_bound)


def keypair_from_circulants(
    params: DigitalParams, left: Circulant, right: Circulant
) -> DigitalKeyPair:
    pk = left.expand() @ params.matrix @ right.expand()
    return DigitalKeyPair(left, right, pk)


def keygen(params: DigitalParams, rng: Random) -> DigitalKeyPair:
    left = sample_circulant(params.n, params.entry_bound, rng)
    right = sample_circulant(params.n, params.entry_bound, rng)
    return keypair_from_circulants(params, left, right)


def shared_key(own: DigitalKeyPair, other_pk: SemiringMatrix) -> SemiringMatrix:
    """Wrap the peer's public matrix in our own circulants."""
    return own.left.expand() @ other_pk @ own.right.expand()


def run_exchange(params: DigitalParams, rng: Random) -> ExchangeTranscript:
    alice = keygen(params, rng)
    bob = keygen(params, rng)
    k_a = shared_key(alice, bob.pk)
    k_b = shared_key(bob, alice.pk)
    return ExchangeTranscript(params, alice, bob, k_a, k_a == k_b)


# -- key recovery from public data only --------------------------------------


def attack_columns(params: DigitalParams) -> Tuple[tuple, tuple, tuple]:
    """Flattened products C_i M C_j plus the generators used to build them."""
    gens = circulant_generators(W, params.n)
    columns, pairs = flatten_two_sided(params.matrix, gens, gens)
    return columns, pairs, gens


def recover_shared_key(
    params: DigitalParams,
    solution: tuple,
    other_pk: SemiringMatrix,
    pairs: tuple,
    gens: tuple,
) -> SemiringMatrix:
    """Replay a solved combination against the other party's public matrix."""
    acc = None
    cached_i = -1
    cached_left: Optional[SemiringMatrix] = None
    for z, (i, j) in zip(solution, pairs):
        if z == W.zero:
            continue
        if i != cached_i:
            cached_left = gens[i] @ other_pk
            cached_i = i
        term = (cached_left @ gens[j]).scale(z)
        acc = term if acc is None else acc + term
    if acc is None:
        # all-zero combination: the zero matrix
        from .matrices import zeros

        acc = zeros(W, params.n)
    return acc


def attack(
    params: DigitalParams, target_pk: SemiringMatrix, other_pk: SemiringMatrix
) -> SemiringMatrix:
    """Recover the shared key of the party that published target_pk."""
    columns, pairs, gens = attack_columns(params)
    system = LinearSystem(columns, target_pk.flat())
    solution = maximal_solution(system, W, w_max_component)
    if solution is None:
        raise AttackError(
            "public matrix is outside the span of the two-sided products"
        )
    return recover_shared_key(params, solution, other_pk, pairs, gens)


# -- serialization ------------------------------------------------------------


def params_to_json(params: DigitalParams) -> dict:
    return {
        "n": params.n,
        "entry_bound": params.entry_bound,
        "matrix": matrix_to_json(params.matrix, value_to_json),
    }


def params_from_json(obj: dict) -> DigitalParams:
    n = obj["n"]
    matrix = matrix_from_json(obj["matrix"], W, value_from_json)
    return DigitalParams(n, matrix, obj.get("entry_bound", DEFAULT_ENTRY_BOUND))


def transcript_to_json(tr: ExchangeTranscript, include_secrets: bool = False) -> dict:
    obj = {
        "scheme": "digital",
        "params": params_to_json(tr.params),
        "alice_public": matrix_to_json(tr.alice.pk, value_to_json),
        "bob_public": matrix_to_json(tr.bob.pk, value_to_json),
        "keys_agree": tr.keys_agree,
    }
    if include_secrets:
        obj["secrets"] = {
            "alice_left": circulant_to_json(tr.alice.left, value_to_json),
            "alice_right": circulant_to_json(tr.alice.right, value_to_json),
            "bob_left": circulant_to_json(tr.bob.left, value_to_json),
            "bob_right": circulant_to_json(tr.bob.right, value_to_json),
            "shared_key": matrix_to_json(tr.shared_key, value_to_json),
        }
    return obj


def transcript_from_json(obj: dict) -> ExchangeTranscript:
    params = params_from_json(obj["params"])
    alice_pk = matrix_from_json(obj["alice_public"], W, value_from_json)
    bob_pk = matrix_from_json(obj["bob_public"], W, value_from_json)
    secrets = obj.get("secrets")
    placeholder = Circulant(W, (W.zero,) * params.n)
    if secrets:
        alice = DigitalKeyPair(
            circulant_from_json(secrets["alice_left"], W, value_from_json),
            circulant_from_json(secrets["alice_right"], W, value_from_json),
            alice_pk,
        )
        bob = DigitalKeyPair(
            circulant_from_json(secrets["bob_left"], W, value_from_json),
            circulant_from_json(secrets["bob_right"], W, value_from_json),
            bob_pk,
        )
        key = matrix_from_json(secrets["shared_key"], W, value_from_json)
    else:
        from .matrices import zeros

        alice = DigitalKeyPair(placeholder, placeholder, alice_pk)
        bob = DigitalKeyPair(placeholder, placeholder, bob_pk)
        key = zeros(W, params.n)
    return ExchangeTranscript(params, alice, bob, key, bool(obj["keys_agree"]))
