"""Exact p-adic valuation arithmetic.

Everything here is plain Python integers (arbitrary precision); no floats
are used anywhere in the package.  The module provides a Legendre-style
oracle v_p(n!) = sum floor(n/p^i), three closed-form counting identities
for factorials of special shapes, and exact multinomial coefficients.
The closed forms never call the oracle and vice versa, so each side can
be used to check the other.
"""

from __future__ import annotations

import math

# Deterministic Miller-Rabin witness set: correct for all n < 3.3 * 10^24,
# which covers every 64-bit input.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_PRIME_CHECK_LIMIT = 2**64

# Inputs above this make the factorial oracle desk-infeasible; the closed
# forms have no such limit.
ORACLE_INPUT_LIMIT = 10**8


def is_prime_64bit(n: int) -> bool:
    """Deterministic primality check for 0 <= n < 2**64."""
    if n >= _PRIME_CHECK_LIMIT:
        raise ValueError(f"primality check is deterministic only below 2**64, got {n}")
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n in small:
        return True
    if any(n % q == 0 for q in small):
        return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Prime(int):
    """An integer validated to be prime at construction.

    Construction of a composite (or of anything below 2) raises ValueError,
    so a Prime instance is a trusted precondition everywhere downstream.
    Behaves as a plain int in all arithmetic.
    """

    def __new__(cls, value) -> "Prime":
        v = int(value)
        if not is_prime_64bit(v):
            raise ValueError(f"{v} is not a prime")
        return super().__new__(cls, v)


def vp(p: int, n: int) -> int:
    """Largest e such that p^e divides n, for n >= 1.

    v_p(0) would be infinite, so n = 0 is rejected.
    """
    p = Prime(p)
    if n < 1:
        raise ValueError(f"v_p is only defined for n >= 1, got n={n}")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_factorial_oracle(p: int, n: int, limit: int = ORACLE_INPUT_LIMIT) -> int:
    """v_p(n!) by direct summation of floor(n/p^i) (Legendre).

    Independent of every closed form in this module.  Inputs above
    `limit` (default 10^8) are rejected: the oracle exists for desk-scale
    verification, not for production-sized arguments.
    """
    p = Prime(p)
    if n < 0:
        raise ValueError(f"factorial argument must be nonnegative, got {n}")
    if n > limit:
        raise ValueError(
            f"oracle input {n} exceeds the verification limit {limit}; "
            "pass a larger limit explicitly if you really mean it"
        )
    total = 0
    q = n
    while q:
        q //= p
        total += q
    return total


def vp_factorial_prime_power(p: int, n: int) -> int:
    """v_p(p^n!) = (p^n - 1)/(p - 1), exactly.

    The division is exact: p^n - 1 = (p - 1)(p^{n-1} + ... + 1).
    """
    p = Prime(p)
    if n < 0:
        raise ValueError(f"exponent must be nonnegative, got {n}")
    return (p**n - 1) // (p - 1)


def vp_factorial_k_times_prime_power(p: int, k: int, n: int) -> int:
    """v_p((k p^n)!) = k * v_p(p^n!) for 1 <= k < p."""
    p = Prime(p)
    if not 1 <= k < p:
        raise ValueError(f"k must satisfy 1 <= k < p, got k={k} for p={p}")
    if n < 0:
        raise ValueError(f"exponent must be nonnegative, got {n}")
    return k * vp_factorial_prime_power(p, n)


def vp_factorial_misc(p: int, k: int, n: int) -> int:
    """v_p((p^k (p^n - 1))!) = v_p(p^{k+n}!) - v_p(p^k!) - n.

    Expanded through vp_factorial_prime_power, this is
    p^k (p^n - 1)/(p - 1) - n.
    """
    p = Prime(p)
    if k < 0 or n < 0:
        raise ValueError(f"exponents must be nonnegative, got k={k}, n={n}")
    return vp_factorial_prime_power(p, k + n) - vp_factorial_prime_power(p, k) - n


def multinomial(top: int, parts: list[int] | tuple[int, ...]) -> int:
    """Exact multinomial coefficient top! / prod(part_i!).

    Computed as a product of binomials over the running partial sums, so
    the full factorials are never materialized.  Requires sum(parts) == top.
    """
    if top < 0:
        raise ValueError(f"top must be nonnegative, got {top}")
    parts = list(parts)
    for part in parts:
        if part < 0:
            raise ValueError(f"parts must be nonnegative, got {part}")
    if sum(parts) != top:
        raise ValueError(f"parts {parts} sum to {sum(parts)}, expected top={top}")
    out = 1
    running = 0
    for part in parts:
        running += part
        out *= math.comb(running, part)
    return out
