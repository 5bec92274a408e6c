"""Arithmetic in F_p and small extension fields, plus exact linear solving.

Field elements are fixed-length coefficient tuples (little endian, length n)
relative to a FieldCtx that pins the prime p, a monic irreducible modulus of
degree n, and a generator t of the multiplicative group.  Everything is exact
integer arithmetic.  Field sizes are capped at desk scale so that p^n - 1
factors by trial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from random import Random
from typing import List, Optional, Sequence, Tuple

MAX_PRIME = (1 << 16) - 1
MAX_DEGREE = 8
MAX_ORDER = 1 << 20  # cap on p^n


def is_prime(num: int) -> bool:
    if num < 2:
        return False
    if num < 4:
        return True
    if num % 2 == 0:
        return False
    f = 3
    while f * f <= num:
        if num % f == 0:
            return False
        f += 2
    return True


def _prime_factors(x: int) -> List[int]:
    """Distinct prime factors by trial division."""
    out = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        out.append(x)
    return out


# -- dense little-endian polynomials over F_p, trimmed (no trailing zeros) --


def _trim(c: Sequence[int]) -> Tuple[int, ...]:
    k = len(c)
    while k and c[k - 1] == 0:
        k -= 1
    return tuple(c[:k])


def _padd(a, b, p) -> Tuple[int, ...]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return _trim(out)


def _psub(a, b, p) -> Tuple[int, ...]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _trim(out)


def _pmul(a, b, p) -> Tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % p for v in out])


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv_lead = pow(b[-1], -1, p)
    deg_b = len(b) - 1
    quot = [0] * max(len(a) - deg_b, 0)
    for i in range(len(a) - 1, deg_b - 1, -1):
        f = (a[i] * inv_lead) % p
        if f:
            quot[i - deg_b] = f
            for j, bv in enumerate(b):
                a[i - deg_b + j] = (a[i - deg_b + j] - f * bv) % p
    return _trim(quot), _trim(a)


def _pmod(a, b, p) -> Tuple[int, ...]:
    return _pdivmod(a, b, p)[1]


def _pgcd(a, b, p) -> Tuple[int, ...]:
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple((v * inv) % p for v in a)
    return a


def _pextgcd(a, b, p):
    """(g, s) with s*a == g modulo b, g the monic gcd of a and b."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = (1,), ()
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
    if r0:
        inv = pow(r0[-1], -1, p)
        r0 = tuple((v * inv) % p for v in r0)
        s0 = tuple((v * inv) % p for v in s0)
    return r0, s0


def _ppowmod(base, e: int, mod, p) -> Tuple[int, ...]:
    result = (1,)
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1 over F_p."""
    poly = _trim(poly)
    if len(poly) < 2 or poly[-1] != 1:
        raise ValueError("need a monic polynomial of degree >= 1")
    deg = len(poly) - 1
    if deg == 1:
        return True
    x = (0, 1)
    # x^(p^k) mod poly via iterated Frobenius
    frob = {1: _ppowmod(x, p, poly, p)}
    for k in range(2, deg + 1):
        frob[k] = _ppowmod(frob[k - 1], p, poly, p)
    if _psub(frob[deg], x, p):
        return False
    for q in _prime_factors(deg):
        if _pgcd(_psub(frob[deg // q], x, p), poly, p) != (1,):
            return False
    return True


def find_irreducible(p: int, n: int, rng: Random) -> Tuple[int, ...]:
    """Random monic irreducible of degree n; deterministic for a given rng."""
    if n == 1:
        return (rng.randrange(p), 1)
    while True:
        cand = tuple(rng.randrange(p) for _ in range(n)) + (1,)
        if is_irreducible(cand, p):
            return cand


def _elem_pow_raw(a, e: int, modulus, p) -> Tuple[int, ...]:
    return _ppowmod(_trim(a), e, modulus, p)


def find_primitive(p: int, n: int, modulus: Sequence[int], rng: Random):
    """Random search for a generator of the multiplicative group of F_{p^n}."""
    modulus = _trim(modulus)
    order = p**n - 1
    one = (1,) + (0,) * (n - 1)
    if order == 1:
        return one
    checks = [order // q for q in _prime_factors(order)]
    while True:
        cand = tuple(rng.randrange(p) for _ in range(n))
        if not any(cand):
            continue
        if all(_pad_to(_elem_pow_raw(cand, e, modulus, p), n) != one for e in checks):
            return cand


def _pad_to(c: Sequence[int], n: int) -> Tuple[int, ...]:
    return tuple(c) + (0,) * (n - len(c))


@dataclass(frozen=True)
class FieldCtx:
    """F_{p^n} as F_p[u] modulo a monic irreducible; all invariants re-checked.

    `t` generates the multiplicative group, so its powers 1, t, .., t^{n-1}
    are an F_p-basis of the field; the basis constructions downstream rely on
    that.
    """

    p: int
    n: int
    modulus: tuple
    t: tuple

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(self.modulus))
        object.__setattr__(self, "t", tuple(self.t))
        p, n = self.p, self.n
        if not is_prime(p) or p > MAX_PRIME:
            raise ValueError("p must be a prime below 2^16")
        if not 1 <= n <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}")
        if p**n > MAX_ORDER:
            raise ValueError("field order exceeds the desk-scale cap")
        if len(self.modulus) != n + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if any(not (0 <= c < p) for c in self.modulus):
            raise ValueError("modulus coefficients must be reduced mod p")
        if not is_irreducible(self.modulus, p):
            raise ValueError("modulus is reducible")
        if len(self.t) != n or any(not (0 <= c < p) for c in self.t):
            raise ValueError("t must be a length-n coefficient vector mod p")
        order = p**n - 1
        one = (1,) + (0,) * (n - 1)
        if order == 1:
            ok = self.t == one
        else:
            ok = any(self.t) and all(
                _pad_to(_elem_pow_raw(self.t, order // q, self.modulus, p), n) != one
                for q in _prime_factors(order)
            )
        if not ok:
            raise ValueError("t must generate the multiplicative group")
        object.__setattr__(self, "_zero", (0,) * n)
        object.__setattr__(self, "_one", one)

    @property
    def order(self) -> int:
        return self.p**self.n

    @property
    def zero(self) -> tuple:
        return self._zero

    @property
    def one(self) -> tuple:
        return self._one

    def from_int(self, c: int) -> tuple:
        """Embed an integer as a constant field element."""
        return (c % self.p,) + (0,) * (self.n - 1)


def make_field_ctx(p: int, n: int, rng) -> FieldCtx:
    """Build a field context; rng may be a seed int or a Random instance."""
    if not isinstance(rng, Random):
        rng = Random(rng)
    if not is_prime(p) or p > MAX_PRIME:
        raise ValueError("p must be a prime below 2^16")
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}")
    if p**n > MAX_ORDER:
        raise ValueError("field order exceeds the desk-scale cap")
    modulus = find_irreducible(p, n, rng)
    t = find_primitive(p, n, modulus, rng)
    return FieldCtx(p, n, modulus, t)


def f_add(ctx: FieldCtx, a, b) -> tuple:
    p = ctx.p
    return tuple((x + y) % p for x, y in zip(a, b))


def f_neg(ctx: FieldCtx, a) -> tuple:
    p = ctx.p
    return tuple((-x) % p for x in a)


def f_sub(ctx: FieldCtx, a, b) -> tuple:
    p = ctx.p
    return tuple((x - y) % p for x, y in zip(a, b))


@lru_cache(maxsize=None)
def f_mul(ctx: FieldCtx, a, b) -> tuple:
    p, n = ctx.p, ctx.n
    if n == 1:
        return ((a[0] * b[0]) % p,)
    out = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    red = _pmod(_trim([v % p for v in out]), ctx.modulus, p)
    return _pad_to(red, n)


@lru_cache(maxsize=None)
def f_inv(ctx: FieldCtx, a) -> tuple:
    if not any(a):
        raise ZeroDivisionError("inverse of zero in the field")
    g, s = _pextgcd(_trim(a), ctx.modulus, ctx.p)
    if g != (1,):
        raise ValueError("element shares a factor with the modulus")
    return _pad_to(s, ctx.n)


def f_pow(ctx: FieldCtx, a, e: int) -> tuple:
    if e < 0:
        a = f_inv(ctx, a)
        e = -e
    result = ctx.one
    base = tuple(a)
    while e:
        if e & 1:
            result = f_mul(ctx, result, base)
        base = f_mul(ctx, base, base)
        e >>= 1
    return result


def element_from_index(ctx: FieldCtx, idx: int) -> tuple:
    """The idx-th field element under base-p digit order, 0 <= idx < p^n."""
    if not 0 <= idx < ctx.order:
        raise ValueError("index out of range")
    out = []
    for _ in range(ctx.n):
        out.append(idx % ctx.p)
        idx //= ctx.p
    return tuple(out)


def element_to_index(ctx: FieldCtx, a) -> int:
    idx = 0
    for c in reversed(a):
        idx = idx * ctx.p + c
    return idx


def field_to_json(ctx: FieldCtx) -> dict:
    return {"p": ctx.p, "n": ctx.n, "modulus": list(ctx.modulus), "t": list(ctx.t)}


def field_from_json(obj: dict) -> FieldCtx:
    return FieldCtx(obj["p"], obj["n"], tuple(obj["modulus"]), tuple(obj["t"]))


# -- exact linear algebra over F_p --


def gauss_solve_full(rows, rhs, p: int):
    """Row-reduce A x = b over F_p.

    Returns (solution, kernel_basis, pivot_cols) with free variables set to
    zero, or None when the system is inconsistent.  Adding any combination of
    kernel vectors to the particular solution stays a solution.
    """
    r = len(rows)
    if r == 0 or r != len(rhs):
        raise ValueError("need equally many rows and right-hand sides, at least one")
    c = len(rows[0])
    if c == 0 or any(len(row) != c for row in rows):
        raise ValueError("rows must be non-empty and equally long")
    a = [[v % p for v in row] + [rhs[i] % p] for i, row in enumerate(rows)]
    piv_cols: List[int] = []
    row_i = 0
    for col in range(c):
        piv = None
        for k in range(row_i, r):
            if a[k][col]:
                piv = k
                break
        if piv is None:
            continue
        a[row_i], a[piv] = a[piv], a[row_i]
        inv = pow(a[row_i][col], -1, p)
        a[row_i] = [(v * inv) % p for v in a[row_i]]
        pivot_row = a[row_i]
        for k in range(row_i + 1, r):
            f = a[k][col]
            if f:
                a[k] = [(x - f * y) % p for x, y in zip(a[k], pivot_row)]
        piv_cols.append(col)
        row_i += 1
        if row_i == r:
            break
    # echelon form leaves the rows below the rank all-zero in the coefficients
    for k in range(row_i, r):
        if a[k][c]:
            return None
    x = [0] * c
    for idx in range(len(piv_cols) - 1, -1, -1):
        col = piv_cols[idx]
        row = a[idx]
        s = row[c]
        for j in range(col + 1, c):
            if row[j] and x[j]:
                s -= row[j] * x[j]
        x[col] = s % p
    pivot_set = set(piv_cols)
    kernel = []
    for free in range(c):
        if free in pivot_set:
            continue
        v = [0] * c
        v[free] = 1
        for idx in range(len(piv_cols) - 1, -1, -1):
            col = piv_cols[idx]
            row = a[idx]
            s = 0
            for j in range(col + 1, c):
                if row[j] and v[j]:
                    s += row[j] * v[j]
            v[col] = (-s) % p
        kernel.append(v)
    return x, kernel, piv_cols


def gauss_solve(rows, rhs, p: int) -> Optional[list]:
    """One solution of A x = b over F_p (free variables zero), or None."""
    full = gauss_solve_full(rows, rhs, p)
    return None if full is None else full[0]
