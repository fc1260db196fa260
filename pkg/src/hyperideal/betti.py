"""Multigraded Betti numbers of monomial ideals, computed exactly.

The Betti number in homological index i and multidegree b equals the
dimension of reduced homology in degree i-1 of the Koszul complex at b,
so every value here comes from exact rank computations rather than from
any resolution heuristic.  Nonzero values only occur at points of the
lcm lattice of the generators, which keeps the search finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .homology import GuardError, SimplicialComplex, validate_characteristic
from .ideals import MonomialIdeal
from .monomials import Monomial

MAX_GENERATORS = 20


def lcm_lattice(ideal: MonomialIdeal) -> list[Monomial]:
    """All least common multiples of nonempty generator subsets, without
    duplicates, in canonical order."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no lcm lattice")
    if len(ideal.gens) > MAX_GENERATORS:
        raise GuardError(
            f"{len(ideal.gens)} generators exceed the desk-scale limit "
            f"{MAX_GENERATORS}"
        )
    seen = set(ideal.gens)
    frontier = list(ideal.gens)
    while frontier:
        nxt = []
        for m in frontier:
            for g in ideal.gens:
                joined = m.lcm(g)
                if joined not in seen:
                    seen.add(joined)
                    nxt.append(joined)
        frontier = nxt
    return sorted(seen, key=Monomial.sort_key)


def koszul_complex(ideal: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    """Simplicial complex on the support of b whose faces are the subsets
    one can subtract from b (one unit per chosen variable) while staying
    inside the ideal.  Void when b itself lies outside the ideal."""
    if b.n != ideal.n:
        raise ValueError("ambient dimension mismatch")
    support = sorted(b.support())
    if not ideal.contains(b):
        return SimplicialComplex.void(support)
    faces: list[frozenset[int]] = [frozenset()]
    frontier = [()]
    while frontier:
        nxt = []
        for face in frontier:
            start = face[-1] if face else 0
            for v in support:
                if v <= start:
                    continue
                candidate = face + (v,)
                exps = list(b.exponents)
                for w in candidate:
                    exps[w - 1] -= 1
                if ideal.contains(Monomial(tuple(exps))):
                    faces.append(frozenset(candidate))
                    nxt.append(candidate)
        frontier = nxt
    return SimplicialComplex(support, faces)


@dataclass(frozen=True)
class BettiTable:
    """Sparse table of nonzero multigraded Betti numbers of an ideal."""

    n: int
    char: int
    entries: dict[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)

    def total(self, i: int) -> int:
        return sum(v for (j, _), v in self.entries.items() if j == i)

    def totals(self) -> tuple[int, ...]:
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        return tuple(self.total(i) for i in range(top + 1))

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("empty betti table has no regularity")
        return max(sum(b) - i for i, b in self.entries)

    def rows(self) -> list[tuple[int, tuple[int, ...], int]]:
        ordered = sorted(self.entries.items(), key=lambda kv: (sum(kv[0][1]), kv[0][0], kv[0][1]))
        return [(i, b, v) for (i, b), v in ordered]

    def render(self) -> str:
        lines = []
        for i, b, v in self.rows():
            vec = ",".join(str(e) for e in b)
            lines.append(f"i={i} b=[{vec}] |b|={sum(b)} beta={v}")
        totals = ",".join(str(v) for v in self.totals())
        lines.append(f"totals=({totals})")
        lines.append(f"reg={self.regularity()} (char {self.char})")
        return "\n".join(lines)


def betti_table(ideal: MonomialIdeal, char: int = 0) -> BettiTable:
    """Exact multigraded Betti numbers of the ideal over a field of the
    given characteristic."""
    validate_characteristic(char)
    if ideal.is_zero:
        raise ValueError("the zero ideal has no betti table")
    entries: dict[tuple[int, tuple[int, ...]], int] = {}
    for b in lcm_lattice(ideal):
        complex_at_b = koszul_complex(ideal, b)
        dims = complex_at_b.reduced_homology_dims(char)
        for offset, dim in enumerate(dims):
            if dim:
                entries[(offset, b.exponents)] = dim
    return BettiTable(ideal.n, char, entries)


def regularity(ideal: MonomialIdeal, char: int = 0) -> int:
    """Largest degree minus homological index over the nonzero Betti
    numbers; this is the Castelnuovo-Mumford regularity of the ideal."""
    return betti_table(ideal, char).regularity()


def _signed_subset_counts(ideal: MonomialIdeal) -> dict[tuple[int, ...], int]:
    """For each lattice point b, the sum of (-1)^(|S|-1) over nonempty
    generator subsets S with lcm equal to b.

    Folds one generator at a time: subsets through generator k either
    avoid it (counts unchanged) or are an old subset joined with it (sign
    flipped, lcm joined) or the singleton.  Equivalent to enumerating all
    2^g subsets but linear in generators times lattice size.
    """
    counts: dict[Monomial, int] = {}
    for g in ideal.gens:
        updated = dict(counts)
        updated[g] = updated.get(g, 0) + 1
        for b, value in counts.items():
            joined = b.lcm(g)
            updated[joined] = updated.get(joined, 0) - value
        counts = updated
    return {b.exponents: v for b, v in counts.items() if v != 0}


def euler_consistency_check(
    ideal: MonomialIdeal, table: BettiTable
) -> tuple[bool, list[tuple[int, ...]]]:
    """Compare the alternating sum of Betti numbers at every multidegree
    with the signed subset count from the generators.  The two must agree
    pointwise for any correct table; mismatching multidegrees are
    returned for diagnostics."""
    expected = _signed_subset_counts(ideal)
    actual: dict[tuple[int, ...], int] = {}
    for (i, b), v in table.entries.items():
        sign = 1 if i % 2 == 0 else -1
        actual[b] = actual.get(b, 0) + sign * v
    actual = {b: v for b, v in actual.items() if v != 0}
    mismatches = sorted(
        set(expected) ^ set(actual)
        | {b for b in set(expected) & set(actual) if expected[b] != actual[b]}
    )
    return (not mismatches, mismatches)
