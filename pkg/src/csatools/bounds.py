"""Splitting-field degree bounds for Azumaya algebras over etale extensions.

Three bounds live here:

* the general bound for an algebra of component degrees (d_1, ..., d_m)
  whose corestriction has index I and period P: the multinomial
  (sum d_i - m; d_1 - 1, ..., d_m - 1) times P^r with
  r = (sum d_i - m) mod I;
* its prime-power specialization for degree p^n over an extension of
  degree p^k with corestriction index dividing p^k: total splits as
  p^{n(p^k - 1)} * m with gcd(m, p) = 1, and m has an explicit
  factorial formula;
* the a-priori baseline prod (deg A_q)^{[F(q):F]} that requires no index
  hypothesis at all.

Every report carries each factor separately so the CLI can label where
the total came from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import ConsistencyError
from .valuation import Prime, multinomial, vp


@dataclass(frozen=True)
class AlgebraShape:
    """Input data for the general bound.

    degrees is the unordered multiset of component degrees (stored
    sorted); index and period are the index I and period P of the
    corestriction, validated so that P divides I.
    """

    degrees: tuple[int, ...]
    index: int
    period: int

    def __post_init__(self):
        degrees = tuple(sorted(int(d) for d in self.degrees))
        object.__setattr__(self, "degrees", degrees)
        if len(degrees) < 1:
            raise ValueError("need at least one component degree")
        if any(d < 1 for d in degrees):
            raise ValueError(f"component degrees must be >= 1, got {degrees}")
        if self.index < 1 or self.period < 1:
            raise ValueError("index and period must be positive")
        if self.index % self.period != 0:
            raise ValueError(
                f"period {self.period} must divide index {self.index}"
            )


@dataclass(frozen=True)
class BaselinePoint:
    """One point of Spec L: a component degree and its residue degree."""

    component_degree: int
    residue_degree: int

    def __post_init__(self):
        if self.component_degree < 1 or self.residue_degree < 1:
            raise ValueError("baseline point entries must be >= 1")


@dataclass(frozen=True)
class BoundReport:
    """A splitting-degree bound with every factor recorded.

    Always: total = multinomial_factor * period_power, where
    period_power = period^remainder.  In the prime-power case p_part and
    cofactor are filled and total = p_part * cofactor with
    gcd(cofactor, p) = 1.
    """

    multinomial_factor: int
    remainder: int
    period_power: int
    total: int
    p_part: int | None = None
    cofactor: int | None = None
    provenance: tuple[str, ...] = field(default=())


def general_bound(shape: AlgebraShape) -> BoundReport:
    """Degree of a splitting extension from index and period alone."""
    degrees = shape.degrees
    m = len(degrees)
    top = sum(degrees) - m
    r = top % shape.index
    mult = multinomial(top, [d - 1 for d in degrees])
    period_power = shape.period**r
    return BoundReport(
        multinomial_factor=mult,
        remainder=r,
        period_power=period_power,
        total=mult * period_power,
        provenance=(
            f"multinomial ({top}; {', '.join(str(d - 1) for d in degrees)})",
            f"r = {top} mod {shape.index} = {r}",
            f"period_power = {shape.period}^{r}",
            "total = multinomial_factor * period_power",
        ),
    )


def cofactor_m(p: int, k: int, n: int) -> int:
    """The prime-to-p cofactor (p^k (p^n - 1))! / ((p^n - 1)!)^{p^k} / p^{n(p^k - 1)}.

    The division is exact; a nonzero remainder would mean the formula
    itself is wrong, so that raises ConsistencyError rather than
    ValueError.
    """
    p = Prime(p)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    pk = p**k
    pn = p**n
    numerator = math.factorial(pk * (pn - 1))
    denominator = math.factorial(pn - 1) ** pk * p ** (n * (pk - 1))
    quotient, residue = divmod(numerator, denominator)
    if residue:
        raise ConsistencyError(
            f"cofactor division not exact for p={p}, k={k}, n={n}"
        )
    return quotient


def prime_power_bound(p: int, k: int, n: int) -> BoundReport:
    """Splitting degree p^{n(p^k - 1)} * m with m coprime to p.

    Verifies gcd(m, p) = 1 and v_p(total) = n(p^k - 1) before returning;
    either failing would mean the closed forms disagree with themselves.
    """
    p = Prime(p)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    pk = p**k
    p_part = p ** (n * (pk - 1))
    m = cofactor_m(p, k, n)
    total = p_part * m
    if math.gcd(m, p) != 1:
        raise ConsistencyError(f"cofactor {m} shares a factor with p={p}")
    if vp(p, total) != n * (pk - 1):
        raise ConsistencyError(
            f"v_{p}(total) != {n * (pk - 1)} for p={p}, k={k}, n={n}"
        )
    return BoundReport(
        multinomial_factor=total,
        remainder=0,
        period_power=1,
        total=total,
        p_part=p_part,
        cofactor=m,
        provenance=(
            f"p_part = {p}^({n}*({p}^{k} - 1))",
            f"cofactor = ({p}^{k}*({p}^{n} - 1))! / (({p}^{n} - 1)!)^({p}^{k}) / p_part",
            "total = p_part * cofactor",
        ),
    )


def baseline_bound(points: list[BaselinePoint]) -> int:
    """prod (component degree)^(residue degree): the no-hypothesis bound."""
    pts = [
        pt if isinstance(pt, BaselinePoint) else BaselinePoint(*pt)
        for pt in points
    ]
    if not pts:
        raise ValueError("baseline bound needs at least one point")
    out = 1
    for pt in pts:
        out *= pt.component_degree**pt.residue_degree
    return out


class BoundImprovement(NamedTuple):
    baseline: int
    improved_p_part: int


def bound_improvement(p: int, k: int, n: int) -> BoundImprovement:
    """(p^{n p^k}, p^{n(p^k - 1)}): baseline vs index-aware p-part.

    The improved p-part times p^n always reproduces the baseline; this is
    re-checked on every call.
    """
    p = Prime(p)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    pk = p**k
    baseline = p ** (n * pk)
    improved = p ** (n * (pk - 1))
    if improved * p**n != baseline:
        raise ConsistencyError("p-part bookkeeping broke")
    return BoundImprovement(baseline, improved)
