"""Generic Brauer classes mod p and Blanchet-style index reduction.

A family A_1, ..., A_n of degree-p algebras is *generic* when every
tensor monomial with all exponents coprime to p is a division algebra.
We model the Brauer span of such a family as vectors in (Z/p)^n, with
one axiom extending genericity to arbitrary exponent vectors: the index
of the class with exponents (c_1, ..., c_n) is p^(number of nonzero c_j).
(Each such class is a generic monomial in the sub-family where it has a
nonzero exponent, and a sub-family of a generic family is generic.)

On this model the index-reduction gcd over the function field of a
generalized Severi-Brauer variety X_{p^d}(A) becomes a finite exact
computation,

    gcd over i = 1..p^d of  (p^d / gcd(p^d, i)) * index(B + i*A),

which is what the counterexample scenarios below evaluate.  The range
stops at i = p^d because the model is p-periodic in i and i = p^d
realizes the factor-1 branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConsistencyError
from .valuation import Prime


@dataclass(frozen=True)
class BrauerVector:
    """A Brauer class in the generic model: residues mod p, one per generator."""

    p: int
    coords: tuple[int, ...]

    def __post_init__(self):
        p = int(Prime(self.p))
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coords", coords)
        if len(coords) < 1:
            raise ValueError("a Brauer vector needs at least one coordinate")
        for c in coords:
            if not 0 <= c < p:
                raise ValueError(f"coordinate {c} not a residue mod {p}")

    def __len__(self):
        return len(self.coords)


def model_index(v: BrauerVector) -> int:
    """p^(number of nonzero coordinates)."""
    return v.p ** sum(1 for c in v.coords if c != 0)


def combine(v: BrauerVector, w: BrauerVector, i: int) -> BrauerVector:
    """v + i*w with coordinates reduced mod p."""
    if v.p != w.p or len(v) != len(w):
        raise ValueError(
            f"vectors live in different groups: (p={v.p}, n={len(v)}) "
            f"vs (p={w.p}, n={len(w)})"
        )
    return BrauerVector(
        v.p, tuple((a + i * b) % v.p for a, b in zip(v.coords, w.coords))
    )


def index_reduction(target: BrauerVector, fiber: BrauerVector, d: int) -> int:
    """Index of `target` over the function field of X_{p^d}(fiber).

    Evaluates the gcd formula over i = 1..p^d; the last index covers the
    i = 0 residue class with multiplier 1.
    """
    if target.p != fiber.p or len(target) != len(fiber):
        raise ValueError("target and fiber must share p and length")
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    p = target.p
    pd = p**d
    out = 0
    for i in range(1, pd + 1):
        term = (pd // math.gcd(pd, i)) * model_index(combine(target, fiber, i))
        out = math.gcd(out, term)
    return out


def prop1_scenario(p: int) -> dict:
    """Sharpness scenario at index p^2.

    Takes A = A_1 x ... x A_p (all exponents 1) and the reweighted
    product A' with exponents (1, 1, 2, 3, ..., p-1), over the function
    field of X_{p^2}(A).  A drops to index p^2 there while A' keeps
    index p^p, so every common splitting field of the A_j has degree
    divisible by p^p.  Raises ConsistencyError if the computed pair is
    not (p^2, p^p).
    """
    p = int(Prime(p))
    if p < 3:
        raise ValueError(
            f"the scenario needs p >= 3 (the exponent pattern degenerates at p=2), got {p}"
        )
    base = BrauerVector(p, (1,) * p)
    twisted = BrauerVector(p, (1, 1) + tuple(range(2, p)))
    index_base = index_reduction(base, base, 2)
    index_twisted = index_reduction(twisted, base, 2)
    if (index_base, index_twisted) != (p**2, p**p):
        raise ConsistencyError(
            f"expected ({p**2}, {p**p}), computed ({index_base}, {index_twisted})"
        )
    return {
        "p": p,
        "exponents_of_A_prime": twisted.coords,
        "index_of_A": index_base,
        "index_of_A_prime": index_twisted,
    }


_CASE_RESIDUE_MINUS_ONE = "i = p-1 mod p, p coprime to i"
_CASE_COPRIME_OTHER = "other i coprime to p"
_CASE_MULTIPLE = "p divides i"


def prop1_case_table(p: int) -> list[dict]:
    """Per-term breakdown of the prop1 gcd into its three residue cases.

    Every term (p^2/gcd(p^2, i)) * index(A' + i*A) for i = 1..p^2 falls
    into one of three buckets with a predicted value:

    * i = p-1 mod p (automatically coprime to p): p^2 * p^(p-2)
    * any other i coprime to p:                   p^2 * p^(p-1)
    * p | i:                                      p * p^p, or p^p at i = p^2

    A bucket mismatch raises ConsistencyError.
    """
    p = int(Prime(p))
    if p < 3:
        raise ValueError(f"the case table needs p >= 3, got {p}")
    base = BrauerVector(p, (1,) * p)
    twisted = BrauerVector(p, (1, 1) + tuple(range(2, p)))
    p2 = p * p
    rows = []
    for i in range(1, p2 + 1):
        factor = p2 // math.gcd(p2, i)
        idx = model_index(combine(twisted, base, i))
        term = factor * idx
        if i % p == p - 1:
            case = _CASE_RESIDUE_MINUS_ONE
            expected = p2 * p ** (p - 2)
        elif i % p != 0:
            case = _CASE_COPRIME_OTHER
            expected = p2 * p ** (p - 1)
        else:
            case = _CASE_MULTIPLE
            expected = factor * p**p
            if factor not in (1, p):
                raise ConsistencyError(
                    f"multiplier {factor} at i={i} is neither 1 nor p"
                )
        if term != expected:
            raise ConsistencyError(
                f"term {term} at i={i} does not match its case value {expected}"
            )
        rows.append(
            {
                "i": i,
                "factor": factor,
                "index": idx,
                "term": term,
                "case": case,
            }
        )
    return rows


def prop2_scenario(p: int, d: int, n: int) -> dict:
    """Sharpness scenario at index p^d with d < n < p.

    Takes A = A_1 x ... x A_n (exponents all 1) and A' with exponents
    (1, 2, ..., n), over the function field of X_{p^d}(A).  The computed
    pair must be (p^d, p^n); the d = 1 reduction (where the per-term
    case values are easiest to see) is re-checked as well.
    """
    p = int(Prime(p))
    if not 0 < d < n < p:
        raise ValueError(f"need 0 < d < n < p, got d={d}, n={n}, p={p}")
    base = BrauerVector(p, (1,) * n)
    twisted = BrauerVector(p, tuple(range(1, n + 1)))
    index_base = index_reduction(base, base, d)
    index_twisted = index_reduction(twisted, base, d)
    if (index_base, index_twisted) != (p**d, p**n):
        raise ConsistencyError(
            f"expected ({p**d}, {p**n}), computed ({index_base}, {index_twisted})"
        )
    if index_reduction(twisted, base, 1) != p**n:
        raise ConsistencyError("d=1 reduction disagrees with the d>=1 scenario")
    return {
        "p": p,
        "d": d,
        "n": n,
        "exponents_of_A_prime": twisted.coords,
        "index_of_A": index_base,
        "index_of_A_prime": index_twisted,
    }
