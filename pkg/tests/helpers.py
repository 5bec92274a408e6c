"""Shared oracles and generators for the test suite.

Everything here is deliberately written as straight-line brute force,
independent of the library's own shortcuts, so the tests compare two
implementations that share no code.
"""

import itertools
from random import Random

from twoside.digital import INF, digit_sum, w_add, w_mul
from twoside.gf import FieldCtx, f_mul, make_field_ctx
from twoside.twisted_ring import RingCtx, RingElement, cocycle, dihedral_mul

# the twisted acceptance grid: (p, extension degree, dihedral m)
TWISTED_GRID = [(2, 2, 3), (3, 2, 4), (5, 1, 6), (2, 3, 5), (7, 1, 8)]

DIGITAL_SIZES = [2, 3, 4, 6, 8]


_FIELD_CACHE = {}


def make_test_field(p: int, n: int, seed: int = 99) -> FieldCtx:
    key = (p, n, seed)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = make_field_ctx(p, n, Random(seed))
    return _FIELD_CACHE[key]


def field_elements(ctx: FieldCtx):
    """Every element of the field, as coefficient tuples."""
    return [tuple(c) for c in itertools.product(range(ctx.p), repeat=ctx.n)]


# -- digital oracles ----------------------------------------------------------


def w_dot(zs, columns, length):
    """Evaluate the combination sum_k z_k * H_k, one fold per component."""
    out = []
    for r in range(length):
        acc = 0
        for z, col in zip(zs, columns):
            acc = w_add(acc, w_mul(z, col[r]))
        out.append(acc)
    return tuple(out)


def w_solutions_exhaustive(columns, target, values):
    """All z tuples over the given value set that hit the target exactly."""
    k = len(columns)
    length = len(target)
    found = []
    for zs in itertools.product(values, repeat=k):
        if w_dot(zs, columns, length) == target:
            found.append(zs)
    return found


def w_rank(v):
    """Sort key realizing the induced order: digit sum first, value second."""
    return (digit_sum(v), v)


def naive_mat_mul(sr, a_rows, b_rows):
    """Index-arithmetic triple loop, no transposes, no comprehensions."""
    n = len(a_rows)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = sr.mul(a_rows[i][0], b_rows[0][j])
            for k in range(1, n):
                acc = sr.add(acc, sr.mul(a_rows[i][k], b_rows[k][j]))
            out[i][j] = acc
    return out


def mat_rows(mat):
    return [list(row) for row in mat.rows]


BOOL_OR_AND = None  # filled below


class _BoolSemiring:
    """Tiny exhaustive stand-in: ({False, True}, or, and)."""

    name = "bool"
    zero = False
    one = True

    @staticmethod
    def add(a, b):
        return a or b

    @staticmethod
    def mul(a, b):
        return a and b

    @staticmethod
    def leq(a, b):
        return (a or b) == b

    @staticmethod
    def sum(items):
        acc = False
        for item in items:
            acc = acc or item
        return acc


BOOL_OR_AND = _BoolSemiring()


# -- twisted ring oracle -------------------------------------------------------


def naive_ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Multiply via the full 2m x 2m basis table: coefficients times cocycle."""
    ctx = a.ctx
    m = ctx.m
    fld = ctx.field
    table = {}
    for i, k in itertools.product(range(m), (0, 1)):
        ca = a.coeff(i, k)
        if ca == fld.zero:
            continue
        for j, l in itertools.product(range(m), (0, 1)):
            cb = b.coeff(j, l)
            if cb == fld.zero:
                continue
            g = dihedral_mul(m, (i, k), (j, l))
            c = f_mul(fld, f_mul(fld, ca, cb), cocycle(ctx, (i, k), (j, l)))
            prev = table.get(g, fld.zero)
            table[g] = tuple(
                (x + y) % fld.p for x, y in zip(prev, c)
            )
    coeffs = [fld.zero] * (2 * m)
    for (i, k), c in table.items():
        coeffs[i + m * k] = c
    return RingElement(ctx, tuple(coeffs))


def symmetric_reflection_vectors(ctx: RingCtx):
    """Dimension count oracle: enumerate the constraint r_i = r_{m-i} directly.

    Returns the list of free coefficient slots of the symmetric reflection
    subspace, so its F_p dimension is n * len(result).
    """
    m = ctx.m
    slots = [0]
    slots.extend(range(1, (m + 1) // 2))
    if m % 2 == 0 and m > 1:
        slots.append(m // 2)
    return slots


# -- misc ----------------------------------------------------------------------


def random_digit_tie_pair(rng: Random):
    """Two distinct finite values with equal digit sums."""
    digits = [rng.randrange(10) for _ in range(rng.randrange(1, 6))]
    while sum(digits) == 0:
        digits = [rng.randrange(10) for _ in range(rng.randrange(1, 6))]
    a = int("".join(map(str, digits)))
    shuffled = digits[:]
    rng.shuffle(shuffled)
    # appending a zero keeps the digit sum; guarantees a != b half the time
    b = int("".join(map(str, shuffled)) + ("0" if rng.random() < 0.5 else ""))
    return a, b


def gauss_residual(rows, x, rhs, p):
    """Max-norm of A x - b over F_p; zero means exact solution."""
    worst = 0
    for row, b in zip(rows, rhs):
        s = sum(r * v for r, v in zip(row, x)) % p
        worst = max(worst, (s - b) % p)
    return worst
