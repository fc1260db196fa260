"""Stable-ideal testing and the two truncation-degree bounds t and q.

An ideal is stable when for every member u and every index j below the
largest variable in u, shifting one power of that largest variable onto
x_j stays inside the ideal.  Checking the minimal generators suffices;
:func:`is_stable_exhaustive` exists to validate that reduction degree by
degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .hypergraphs import (
    IncreasingHypergraph,
    canonical_vertex_order,
    containment_vector,
    covered_restriction,
    special_dual,
)
from .ideals import MonomialIdeal
from .monomials import Monomial, compositions


@dataclass(frozen=True)
class StabilityWitness:
    generator: Monomial
    shift_index: int
    shifted: Monomial

    def render(self) -> str:
        return (
            f"witness: u={self.generator} j={self.shift_index} "
            f"shifted={self.shifted} (not in ideal)"
        )


@dataclass(frozen=True)
class StabilityReport:
    ideal: MonomialIdeal
    is_stable: bool
    witness: Optional[StabilityWitness]

    def render(self) -> str:
        lines = [f"stable: {'yes' if self.is_stable else 'no'}"]
        if self.witness is not None:
            lines.append(self.witness.render())
        return "\n".join(lines)


def is_stable(ideal: MonomialIdeal) -> StabilityReport:
    """Generator-level stability check with a failure witness.

    Among all failing (generator, shift index) pairs the witness is the
    one with the largest index gap m(u) - j (ties: smaller j, then
    generator order), i.e. the shift reaching furthest left of the
    generator's top variable.
    """
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("stability undefined for the zero and unit ideals")
    best: Optional[tuple[int, int, int]] = None  # (-gap, j, gen position)
    best_witness: Optional[StabilityWitness] = None
    for pos, g in enumerate(ideal.gens):
        m = g.max_index()
        for j in range(1, m):
            shifted = g.stability_shift(j)
            if not ideal.contains(shifted):
                key = (-(m - j), j, pos)
                if best is None or key < best:
                    best = key
                    best_witness = StabilityWitness(g, j, shifted)
    return StabilityReport(ideal, best_witness is None, best_witness)


def is_stable_exhaustive(ideal: MonomialIdeal, degree_bound: int) -> bool:
    """Check the stability condition on every member up to ``degree_bound``,
    not just the generators.  Agrees with :func:`is_stable` once the bound
    reaches deg(I) + n."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("stability undefined for the zero and unit ideals")
    n = ideal.n
    for deg in range(1, degree_bound + 1):
        for exps in compositions(deg, n):
            u = Monomial(exps)
            if not ideal.contains(u):
                continue
            m = u.max_index()
            for j in range(1, m):
                if not ideal.contains(u.stability_shift(j)):
                    return False
    return True


def t_bound(a: Sequence[int]) -> int:
    """Sum of the containment entries minus the largest one.

    Equals the sum over all entries but the first when the entries are
    sorted nonincreasingly, so the value does not depend on vertex order.
    """
    entries = tuple(a)
    if not entries or all(e == 0 for e in entries):
        raise ValueError("bound undefined for an all-zero vector")
    if any(e < 0 for e in entries):
        raise ValueError("containment entries must be nonnegative")
    return sum(entries) - max(entries)


def q_bound(ideal: MonomialIdeal) -> int:
    """m(I) * (deg(I) - 1) + 1, the generic truncation bound."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("bound undefined for the zero and unit ideals")
    return ideal.max_index() * (ideal.deg() - 1) + 1


def _check_pure_power_hypothesis(exponents: Sequence[int]) -> tuple[int, ...]:
    a = tuple(exponents)
    n = len(a)
    if n < 1:
        raise ValueError("need at least one exponent")
    if any(a[i] < a[i + 1] for i in range(n - 1)):
        raise ValueError(f"exponents must be nonincreasing, got {list(a)}")
    if a[-1] < 1:
        raise ValueError("exponents must all be at least 1")
    if a[0] > n - 1:
        raise ValueError(f"hypothesis violated: leading exponent {a[0]} exceeds n - 1 = {n - 1}")
    return a


def pure_power_truncation_stable(exponents: Sequence[int]) -> bool:
    """Build (x_1^{a_1}, ..., x_n^{a_n}) with n-1 >= a_1 >= ... >= a_n >= 1,
    truncate at t = sum - max, and test stability.

    Membership of a shifted degree-t monomial in the truncation reduces to
    membership in the pure-power ideal itself, which keeps the check fast
    even when the truncation has many generators.
    """
    a = _check_pure_power_hypothesis(exponents)
    n = len(a)
    t = sum(a) - a[0]
    ideal = MonomialIdeal(
        n, (Monomial.variable(i + 1, n, a[i]) for i in range(n))
    )
    truncated = ideal.truncate(t)
    for g in truncated.gens:
        m = g.max_index()
        exps = g.exponents
        for j in range(1, m):
            se = list(exps)
            se[j - 1] += 1
            se[m - 1] -= 1
            if not any(se[i] >= a[i] for i in range(n)):
                return False
    return True


def truncation_stability(ideal: MonomialIdeal, t: int) -> StabilityReport:
    """Stability report for ideal.truncate(t), with the same verdict and
    witness as is_stable on the truncation.

    Shifting a generator preserves its degree, so membership of the
    shifted monomial in the truncation is just membership in the original
    ideal; testing against the few original generators stays cheap even
    when the truncation has thousands.
    """
    truncated = ideal.truncate(t)
    if truncated.is_zero or truncated.is_unit:
        return StabilityReport(truncated, True, None)
    best: Optional[StabilityWitness] = None
    best_key = None
    for pos, u in enumerate(truncated.gens):
        m = u.max_index()
        for j in range(1, m):
            shifted = u.stability_shift(j)
            if not ideal.contains(shifted):
                key = (-(m - j), j, pos)
                if best_key is None or key < best_key:
                    best_key = key
                    best = StabilityWitness(u, j, shifted)
    return StabilityReport(truncated, best is None, best)


def intersection_truncation_stable(
    first: MonomialIdeal, second: MonomialIdeal, t_first: int, t_second: int
) -> bool:
    """Check that the intersection, truncated at max of the two degrees,
    is stable.  Requires both inputs' own truncations to be stable."""
    if not is_stable(first.truncate(t_first)).is_stable:
        raise ValueError(f"first ideal's truncation at {t_first} is not stable")
    if not is_stable(second.truncate(t_second)).is_stable:
        raise ValueError(f"second ideal's truncation at {t_second} is not stable")
    cut = max(t_first, t_second)
    return is_stable(first.intersect(second).truncate(cut)).is_stable


@dataclass(frozen=True)
class DualTruncationCheck:
    stable: bool
    t: int
    report: StabilityReport
    restricted: bool


def dual_truncation_stable(h: IncreasingHypergraph) -> DualTruncationCheck:
    """Truncate the dual at t = sum - max of the containment vector and
    test stability.

    Stability depends on the variable order, so the hypergraph is brought
    to canonical vertex order first and edge-free vertices are dropped;
    ``restricted`` records whether any were.
    """
    canonical, _ = canonical_vertex_order(h)
    restricted = covered_restriction(canonical)
    dual, _ = special_dual(restricted)
    t = t_bound(containment_vector(restricted))
    report = truncation_stability(dual, t)
    return DualTruncationCheck(
        stable=report.is_stable,
        t=t,
        report=report,
        restricted=restricted.n < h.n,
    )


def minimal_stable_truncation_degree(ideal: MonomialIdeal, start: int) -> Optional[int]:
    """Smallest degree at or below ``start`` whose truncation is stable,
    found by downward search.  Diagnostic only; returns None when the
    truncation at ``start`` itself is not stable."""
    if not is_stable(ideal.truncate(start)).is_stable:
        return None
    t = start
    while t > 0 and is_stable(ideal.truncate(t - 1)).is_stable:
        t -= 1
    return t
