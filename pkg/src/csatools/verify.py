"""One-shot verification suites behind `csatools verify`.

Each suite replays a family of exact identities: frozen regression
values, closed forms against their brute-force oracles, and the
structural invariants of every module.  Suites are deterministic (any
randomness is seeded) and sized for desk-scale runtimes, so `verify
--all` doubles as a smoke test of the whole package.

This module also hosts karpenko_lower_bound_grouped, a structurally
different re-implementation of the cycle-bound minimum (grouped by
valuation class instead of iterating forward), kept here rather than in
the library proper so the two routes stay independent.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from . import bounds, brauer, chowring, karpenko, valuation
from .errors import ConsistencyError

SUITE_ORDER = (
    "known-values",
    "valuation-oracle",
    "segre-degree",
    "chow-laws",
    "bound-valuation",
    "karpenko-certificates",
    "brauer-model",
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, got, want, label: str):
        self.checks += 1
        if got != want:
            self.failures.append(f"{label}: got {got!r}, want {want!r}")

    def expect_true(self, cond, label: str):
        self.expect(bool(cond), True, label)


def karpenko_lower_bound_grouped(p: int, n: int, codim: int) -> int:
    """The cycle-bound minimum, grouped by valuation class.

    For fixed v, the candidates i + n - v with v_p(codim - i) = v are
    minimized by the largest j = codim - i in that class, and that j is
    computable directly: take floor(codim / p^v) and step down once if p
    still divides it.  O(log codim) instead of O(codim).
    """
    p = int(valuation.Prime(p))
    if n < 1 or codim < 1:
        raise ValueError("need n >= 1 and codim >= 1")
    best = codim
    pv = 1
    v = 0
    while pv <= codim:
        q = codim // pv
        if q % p == 0:
            q -= 1
        if q >= 1:
            j = q * pv  # largest j <= codim with v_p(j) exactly v
            cand = (codim - j) + n - v
            if cand < best:
                best = cand
        pv *= p
        v += 1
    return best


def _partitions(total: int, maximum: int | None = None):
    """Yield all partitions of `total` as nonincreasing tuples."""
    if maximum is None:
        maximum = total
    if total == 0:
        yield ()
        return
    for head in range(min(total, maximum), 0, -1):
        for tail in _partitions(total - head, head):
            yield (head,) + tail


def _random_chow_class(rng: random.Random, shape: chowring.RingShape) -> chowring.ChowClass:
    terms = {}
    for _ in range(rng.randrange(1, 5)):
        exps = tuple(rng.randrange(0, d) for d in shape.bounds)
        terms[exps] = rng.randrange(-3, 4)
    return chowring.ChowClass(shape, terms)


def suite_known_values() -> SuiteResult:
    """Frozen regression values for every headline quantity."""
    r = SuiteResult("known-values")

    b = bounds.prime_power_bound(3, 1, 1)
    r.expect((b.total, b.p_part, b.cofactor), (90, 9, 10), "prime_power_bound(3,1,1)")
    b = bounds.prime_power_bound(2, 1, 1)
    r.expect((b.total, b.cofactor), (2, 1), "prime_power_bound(2,1,1)")

    for m in range(1, 7):
        shape = (2, 2 * m)
        r.expect(chowring.segre_degree_expansion(shape), 2 * m, f"segre expansion {shape}")
        r.expect(chowring.segre_degree_closed_form(shape), 2 * m, f"segre closed form {shape}")
    r.expect(chowring.segre_degree_expansion((2, 2)), 2, "segre (2,2)")
    r.expect(chowring.segre_degree_expansion((3, 3, 3)), 90, "segre (3,3,3)")
    r.expect(chowring.segre_degree_closed_form((5,)), 1, "segre single factor")

    for p, k, n in ((2, 1, 1), (3, 1, 1)):
        got = bounds.baseline_bound([bounds.BaselinePoint(p**n, p**k)])
        r.expect(got, p ** (n * p**k), f"baseline p={p},k={k},n={n}")
    r.expect(bounds.baseline_bound([(2, 1), (2, 1)]), 4, "baseline two quaternions")
    r.expect(bounds.baseline_bound([(1, 5)]), 1, "baseline split algebra")

    g = bounds.general_bound(bounds.AlgebraShape((2, 2), 2, 2))
    r.expect((g.remainder, g.total), (0, 2), "general_bound (2,2) I=2 P=2")
    g = bounds.general_bound(bounds.AlgebraShape((3, 3, 3), 3, 3))
    r.expect((g.remainder, g.total), (0, 90), "general_bound (3,3,3) I=3 P=3")
    g = bounds.general_bound(bounds.AlgebraShape((4,), 4, 4))
    r.expect((g.remainder, g.total), (3, 64), "general_bound (4,) I=4 P=4")

    r.expect(bounds.cofactor_m(2, 1, 1), 1, "cofactor_m(2,1,1)")
    r.expect(bounds.cofactor_m(3, 1, 1), 10, "cofactor_m(3,1,1)")
    r.expect(bounds.bound_improvement(2, 1, 1), (4, 2), "bound_improvement(2,1,1)")
    r.expect(bounds.bound_improvement(3, 1, 1), (27, 9), "bound_improvement(3,1,1)")

    r.expect(karpenko.karpenko_lower_bound(2, 1, 1), 1, "karpenko bound (2,1,1)")
    r.expect(karpenko.karpenko_lower_bound(3, 2, 3), 1, "karpenko bound (3,2,3)")

    v = brauer.BrauerVector
    r.expect(brauer.index_reduction(v(3, (1, 1, 2)), v(3, (1, 1, 1)), 2), 27, "index_reduction p=3")
    r.expect(brauer.index_reduction(v(5, (1, 2, 3)), v(5, (1, 1, 1)), 2), 125, "index_reduction p=5")
    r.expect(brauer.index_reduction(v(3, (1, 1, 1)), v(3, (1, 1, 1)), 2), 9, "index_reduction base class")
    return r


def suite_valuation_oracle() -> SuiteResult:
    """Closed-form counting identities against the Legendre oracle."""
    r = SuiteResult("valuation-oracle")
    primes = [2, 3, 5, 7, 11, 13]

    for p in primes:
        for n in range(0, 7):
            r.expect(
                valuation.vp_factorial_prime_power(p, n),
                valuation.vp_factorial_oracle(p, p**n),
                f"v_{p}(({p}^{n})!)",
            )

    for p in primes:
        for k in range(1, p):
            for n in range(0, 5):
                if k * p**n > 10**6:
                    continue
                r.expect(
                    valuation.vp_factorial_k_times_prime_power(p, k, n),
                    valuation.vp_factorial_oracle(p, k * p**n),
                    f"v_{p}(({k}*{p}^{n})!)",
                )

    for p in (2, 3, 5, 7):
        for k in range(0, 4):
            for n in range(0, 4):
                arg = p**k * (p**n - 1)
                if arg > 10**6:
                    continue
                r.expect(
                    valuation.vp_factorial_misc(p, k, n),
                    valuation.vp_factorial_oracle(p, arg),
                    f"v_{p}(({p}^{k}({p}^{n}-1))!)",
                )

    for top in range(0, 21):
        for parts in _partitions(top):
            prod = 1
            for part in parts:
                prod *= math.factorial(part)
            r.expect(
                valuation.multinomial(top, parts) * prod,
                math.factorial(top),
                f"multinomial identity {top} {parts}",
            )

    rng = random.Random(1201)
    for _ in range(60):
        top = rng.randrange(0, 40)
        parts = []
        left = top
        while left > 0:
            c = rng.randrange(1, left + 1)
            parts.append(c)
            left -= c
        coeff = valuation.multinomial(top, parts)
        for p in (2, 3, 5):
            want = valuation.vp_factorial_oracle(p, top) - sum(
                valuation.vp_factorial_oracle(p, part) for part in parts
            )
            r.expect(valuation.vp(p, coeff), want, f"v_{p} of multinomial({top},{parts})")
    return r


def suite_segre_degree() -> SuiteResult:
    """Ring expansion vs closed form, exhaustively for m <= 4, d_i <= 5."""
    r = SuiteResult("segre-degree")
    for m in range(1, 5):
        for bounds_tuple in itertools.product(range(1, 6), repeat=m):
            shape = chowring.RingShape(bounds_tuple)
            h = chowring.hyperplane_sum(shape)
            top = chowring.power(h, shape.dimension)
            expansion = chowring.point_degree(top)
            closed = chowring.segre_degree_closed_form(shape)
            r.expect(expansion, closed, f"segre degree {bounds_tuple}")
            r.expect_true(expansion > 0, f"point degree positive {bounds_tuple}")
            r.expect_true(
                chowring.multiply(top, h).is_zero(),
                f"power beyond dimension vanishes {bounds_tuple}",
            )
    return r


def suite_chow_laws() -> SuiteResult:
    """Commutativity, associativity and unit laws on seeded random classes."""
    r = SuiteResult("chow-laws")
    rng = random.Random(91)
    shapes = [
        chowring.RingShape(b) for b in ((2, 2), (3, 2), (2, 2, 2), (4, 3))
    ]
    for shape in shapes:
        one = chowring.unit(shape)
        for _ in range(12):
            a = _random_chow_class(rng, shape)
            b = _random_chow_class(rng, shape)
            c = _random_chow_class(rng, shape)
            r.expect(
                chowring.multiply(a, b),
                chowring.multiply(b, a),
                f"commutativity on {shape.bounds}",
            )
            r.expect(
                chowring.multiply(chowring.multiply(a, b), c),
                chowring.multiply(a, chowring.multiply(b, c)),
                f"associativity on {shape.bounds}",
            )
            r.expect(chowring.multiply(a, one), a, f"unit on {shape.bounds}")
    return r


def suite_bound_valuation() -> SuiteResult:
    """v_p(total) = n(p^k - 1), coprimality, and the two bound routes."""
    r = SuiteResult("bound-valuation")
    for p in (2, 3, 5):
        for k in (0, 1, 2):
            for n in (1, 2):
                if p**k * (p**n - 1) > 10**4:
                    continue
                report = bounds.prime_power_bound(p, k, n)
                want = n * (p**k - 1)
                r.expect(
                    valuation.vp(p, report.total), want, f"v_{p}(total) p={p},k={k},n={n}"
                )
                r.expect(
                    math.gcd(report.cofactor, p), 1, f"gcd(m,p) p={p},k={k},n={n}"
                )
                general = bounds.general_bound(
                    bounds.AlgebraShape((p**n,) * p**k, p**k, p**k)
                )
                r.expect(general.remainder, 0, f"r=0 p={p},k={k},n={n}")
                r.expect(
                    general.multinomial_factor,
                    report.total,
                    f"general vs prime-power p={p},k={k},n={n}",
                )
    for d in range(1, 6):
        for period in (1, d):
            g = bounds.general_bound(bounds.AlgebraShape((d,), d, period))
            r.expect(g.multinomial_factor, 1, f"single-component multinomial d={d}")
            r.expect(
                g.total, period ** ((d - 1) % d), f"single-component total d={d},P={period}"
            )
    return r


def suite_karpenko_certificates() -> SuiteResult:
    """Loop certificates vs the symbolic route, plus the grouped oracle."""
    r = SuiteResult("karpenko-certificates")
    sweep_cap = 10**7
    for p in (3, 5, 7):
        rr = 1
        while p ** (rr * p) <= sweep_cap:
            cert = karpenko.corestriction_certificate(p, rr, budget=sweep_cap)
            r.expect_true(cert.violated, f"certificate violated p={p},r={rr}")
            r.expect(
                karpenko.proof_inequalities(p, rr),
                cert.violated,
                f"symbolic vs loop p={p},r={rr}",
            )
            r.expect(
                cert.codim,
                p ** (rr * p) - p**rr - p - 1,
                f"codimension formula p={p},r={rr}",
            )
            r.expect(
                cert.observed_valuation, rr * p - rr, f"observed valuation p={p},r={rr}"
            )
            rr += 1

    # the symbolic route keeps working far beyond the loop budget
    for p, rr in ((3, 5), (5, 3), (7, 5), (11, 2), (13, 1)):
        r.expect_true(karpenko.proof_inequalities(p, rr), f"symbolic only p={p},r={rr}")

    rng = random.Random(422)
    grid = [(p, n, k) for p in (2, 3, 5, 7) for n in (1, 2, 3) for k in (1, 2, 3, 7, 26, 120)]
    grid += [(rng.choice((2, 3, 5)), rng.randrange(1, 6), rng.randrange(1, 4000)) for _ in range(40)]
    grid += [(3, 3, 20), (5, 5, 3114), (3, 6, 716)]
    for p, n, k in grid:
        forward = karpenko.karpenko_lower_bound(p, n, k)
        grouped = karpenko_lower_bound_grouped(p, n, k)
        r.expect(forward, grouped, f"iteration orders p={p},n={n},k={k}")
        r.expect_true(forward <= k, f"bound <= codim p={p},n={n},k={k}")

    aux = karpenko.auxiliary_inequalities
    r.expect(tuple(aux(3, 1)), (True, True), "auxiliary (3,1)")
    r.expect(aux(2, 1).pr_ge_r_plus_2, False, "auxiliary (2,1) first fails")
    r.expect(tuple(aux(3, 4)), (True, True), "auxiliary (3,4)")
    return r


def suite_brauer_model() -> SuiteResult:
    """Counterexample scenarios, case tables, and model invariants."""
    r = SuiteResult("brauer-model")
    for p in (3, 5, 7):
        report = brauer.prop1_scenario(p)
        r.expect(
            (report["index_of_A"], report["index_of_A_prime"]),
            (p**2, p**p),
            f"prop1 scenario p={p}",
        )
    for p in (3, 5, 7):
        try:
            rows = brauer.prop1_case_table(p)
        except ConsistencyError as exc:
            r.checks += 1
            r.failures.append(f"prop1 case table p={p}: {exc}")
        else:
            r.expect(len(rows), p * p, f"prop1 table length p={p}")
    for p in (3, 5, 7):
        for n in range(2, p):
            for d in range(1, n):
                report = brauer.prop2_scenario(p, d, n)
                r.expect(
                    (report["index_of_A"], report["index_of_A_prime"]),
                    (p**d, p**n),
                    f"prop2 scenario p={p},d={d},n={n}",
                )

    rng = random.Random(77)
    for p in (3, 5):
        for _ in range(10):
            n = rng.randrange(1, 5)
            v = brauer.BrauerVector(p, tuple(rng.randrange(p) for _ in range(n)))
            w = brauer.BrauerVector(p, tuple(rng.randrange(p) for _ in range(n)))
            for i in range(-3, 2 * p * p, 5):
                r.expect(
                    brauer.model_index(brauer.combine(v, w, i)),
                    brauer.model_index(brauer.combine(v, w, i % p)),
                    f"periodicity p={p}",
                )
            for d in (1, 2):
                reduced = brauer.index_reduction(v, w, d)
                r.expect(
                    brauer.model_index(v) % reduced,
                    0,
                    f"reduced index divides p={p},d={d}",
                )
                perm = list(range(n))
                rng.shuffle(perm)
                vs = brauer.BrauerVector(p, tuple(v.coords[j] for j in perm))
                ws = brauer.BrauerVector(p, tuple(w.coords[j] for j in perm))
                r.expect(
                    brauer.index_reduction(vs, ws, d),
                    reduced,
                    f"permutation invariance p={p},d={d}",
                )
            zero = brauer.BrauerVector(p, (0,) * n)
            r.expect(
                brauer.index_reduction(zero, w, 2), 1, f"zero target p={p}"
            )
    return r


_SUITES = {
    "known-values": suite_known_values,
    "valuation-oracle": suite_valuation_oracle,
    "segre-degree": suite_segre_degree,
    "chow-laws": suite_chow_laws,
    "bound-valuation": suite_bound_valuation,
    "karpenko-certificates": suite_karpenko_certificates,
    "brauer-model": suite_brauer_model,
}


def suite_names() -> tuple[str, ...]:
    return SUITE_ORDER


def run_suites(names: list[str] | None = None) -> list[SuiteResult]:
    """Run the named suites (all of them by default), in fixed order."""
    if names is None:
        names = list(SUITE_ORDER)
    results = []
    for name in names:
        if name not in _SUITES:
            raise ValueError(
                f"unknown suite {name!r}; choose from {', '.join(SUITE_ORDER)}"
            )
        results.append(_SUITES[name]())
    return results
