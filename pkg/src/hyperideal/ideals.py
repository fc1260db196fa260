"""Monomial ideals held by minimal generating sets, and duality with
respect to a degree vector.

All operations are exact and deterministic: generators are kept minimized
and sorted in the canonical order, so equal ideals have identical
representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .monomials import Monomial, compositions


def minimal_generators(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop every monomial strictly divisible by another in the set.

    Monomials of equal degree only divide each other when equal, so after
    deduplication a candidate needs checking only against kept generators
    of strictly smaller degree.  If the unit monomial is present it
    absorbs everything else.
    """
    uniq = sorted(set(gens), key=Monomial.sort_key)
    kept: list[Monomial] = []
    smaller_end = 0  # kept[:smaller_end] have degree < current degree
    current_degree = None
    for g in uniq:
        d = g.degree()
        if d != current_degree:
            smaller_end = len(kept)
            current_degree = d
        if any(kept[i].divides(g) for i in range(smaller_end)):
            continue
        kept.append(g)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal in n variables, stored minimized and sorted.

    The zero ideal (no generators) and the unit ideal (generated by 1)
    are representable and flagged via :attr:`is_zero` / :attr:`is_unit`;
    the structural operations (degree, max index, duality, stability)
    reject them.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Iterable[Monomial] = ()):
        if n < 1:
            raise ValueError("ambient dimension must be positive")
        gens = tuple(gens)
        for g in gens:
            if g.n != n:
                raise ValueError(f"generator {g} has ambient {g.n}, expected {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", minimal_generators(gens))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def from_exponents(cls, n: int, vectors: Iterable[Sequence[int]]) -> MonomialIdeal:
        return cls(n, (Monomial(tuple(v)) for v in vectors))

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @classmethod
    def unit_ideal(cls, n: int) -> MonomialIdeal:
        return cls(n, (Monomial.unit(n),))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.n}, {list(self.gens)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(str(g) for g in self.gens)

    def contains(self, u: Monomial) -> bool:
        """Membership: true iff some minimal generator divides u."""
        if u.n != self.n:
            raise ValueError(f"ambient dimension mismatch: {u.n} vs {self.n}")
        return any(g.divides(u) for g in self.gens)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        """Intersection via pairwise lcms of generators, then minimization."""
        if self.n != other.n:
            raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")
        return MonomialIdeal(self.n, (g.lcm(h) for g in self.gens for h in other.gens))

    def truncate(self, t: int) -> MonomialIdeal:
        """The ideal generated by the members of degree >= t.

        Generators below degree t are padded up to degree t by every
        complementary monomial; generators at degree >= t are kept.
        """
        if self.is_zero:
            raise ValueError("truncation of the zero ideal is undefined")
        if t <= 0:
            return self
        cands: list[Monomial] = []
        for g in self.gens:
            gap = t - g.degree()
            if gap <= 0:
                cands.append(g)
            else:
                exps = g.exponents
                for w in compositions(gap, self.n):
                    cands.append(Monomial(tuple(a + b for a, b in zip(exps, w))))
        return MonomialIdeal(self.n, cands)

    def deg(self) -> int:
        """Highest degree among the minimal generators."""
        if self.is_zero:
            raise ValueError("degree of the zero ideal is undefined")
        return max(g.degree() for g in self.gens)

    def max_index(self) -> int:
        """Largest variable index occurring in any minimal generator."""
        if self.is_zero or self.is_unit:
            raise ValueError("max index undefined for the zero and unit ideals")
        return max(g.max_index() for g in self.gens)

    def support(self) -> frozenset[int]:
        return frozenset().union(*(g.support() for g in self.gens)) if self.gens else frozenset()


@dataclass(frozen=True)
class IrreducibleComponent:
    """An ideal generated by pure variable powers, encoded as one vector.

    Entry v_i >= 1 stands for the generator x_i^{v_i}; entry 0 means the
    variable is absent.  At least one entry must be positive.
    """

    n: int
    powers: tuple[int, ...]

    def __post_init__(self) -> None:
        powers = tuple(self.powers)
        if len(powers) != self.n:
            raise ValueError(f"expected {self.n} entries, got {len(powers)}")
        if any(p < 0 for p in powers):
            raise ValueError("entries must be nonnegative")
        if not any(p >= 1 for p in powers):
            raise ValueError("an irreducible component needs a positive entry")
        object.__setattr__(self, "powers", powers)

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(
            self.n,
            (Monomial.variable(i + 1, self.n, p) for i, p in enumerate(self.powers) if p >= 1),
        )

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, p in enumerate(self.powers) if p >= 1)

    def contains_monomial(self, u: Monomial) -> bool:
        if u.n != self.n:
            raise ValueError(f"ambient dimension mismatch: {u.n} vs {self.n}")
        return any(p >= 1 and e >= p for e, p in zip(u.exponents, self.powers))

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        return all(self.contains_monomial(g) for g in other.gens)

    def __str__(self) -> str:
        return str(self.as_ideal())


def vector_complement(c: Sequence[int], d: Sequence[int]) -> tuple[int, ...]:
    """Coordinatewise complement of d inside c: c_i + 1 - d_i where d_i >= 1,
    and 0 where d_i = 0.  Requires d <= c componentwise."""
    if len(c) != len(d):
        raise ValueError(f"vector length mismatch: {len(c)} vs {len(d)}")
    for i, (ci, di) in enumerate(zip(c, d)):
        if di > ci:
            raise ValueError(
                f"complement undefined: entry {i + 1} has {di} > {ci}"
            )
    return tuple(ci + 1 - di if di >= 1 else 0 for ci, di in zip(c, d))


def irreducible_from_vector(v: Sequence[int]) -> IrreducibleComponent:
    """The component generated by x_i^{v_i} over the positive entries of v."""
    return IrreducibleComponent(len(tuple(v)), tuple(v))


def intersect_components(components: Sequence[IrreducibleComponent]) -> MonomialIdeal:
    if not components:
        raise ValueError("cannot intersect an empty list of components")
    return reduce(MonomialIdeal.intersect, (c.as_ideal() for c in components))


def alexander_dual(ideal: MonomialIdeal, c: Sequence[int]) -> MonomialIdeal:
    """Dual of a monomial ideal with respect to the degree vector c.

    Intersects, over the minimal generators x^b, the pure-power ideals
    whose exponents are the complement of b inside c.  Every generator
    must divide x^c.
    """
    comps = dual_components(ideal, c)
    return intersect_components(comps)


def dual_components(ideal: MonomialIdeal, c: Sequence[int]) -> tuple[IrreducibleComponent, ...]:
    """The irreducible components of the dual, one per minimal generator,
    in generator order."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("dual undefined for the zero and unit ideals")
    c = tuple(c)
    if len(c) != ideal.n:
        raise ValueError(f"degree vector length {len(c)} != ambient {ideal.n}")
    bound = Monomial(c)
    for g in ideal.gens:
        if not g.divides(bound):
            raise ValueError(f"generator {g} does not divide x^c with c={list(c)}")
    return tuple(
        irreducible_from_vector(vector_complement(c, g.exponents)) for g in ideal.gens
    )


def irredundant_filter(
    components: Sequence[IrreducibleComponent],
) -> list[IrreducibleComponent]:
    """Remove components containing the intersection of the others.

    The intersection of the surviving components equals the original
    intersection.  Scanning is deterministic: the first redundant
    component found is dropped and the scan restarts.
    """
    comps = list(components)
    changed = True
    while changed and len(comps) > 1:
        changed = False
        for i in range(len(comps)):
            rest = comps[:i] + comps[i + 1 :]
            if comps[i].contains_ideal(intersect_components(rest)):
                del comps[i]
                changed = True
                break
    return comps


def associated_primes(
    components: Sequence[IrreducibleComponent],
) -> list[frozenset[int]]:
    """Supports of the irredundant components, deduplicated in order.

    For an intersection given in irreducible form these supports are the
    associated primes (the radical of a pure-power ideal is the prime on
    its support).
    """
    if not components:
        raise ValueError("no components given")
    seen: list[frozenset[int]] = []
    for comp in irredundant_filter(components):
        s = comp.support()
        if s not in seen:
            seen.append(s)
    return seen


def is_totally_ordered_ass(components: Sequence[IrreducibleComponent]) -> bool:
    """True iff the associated primes form a chain under set inclusion."""
    primes = associated_primes(components)
    primes.sort(key=lambda s: (len(s), sorted(s)))
    return all(a <= b for a, b in zip(primes, primes[1:]))
