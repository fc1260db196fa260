"""Monomials as exponent vectors, with exact integer arithmetic throughout.

Exponents are plain Python integers, so there is no overflow to guard
against; every derived quantity (degree, bound, Betti number) is an exact
combinatorial integer.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Monomial:
    """A monomial x1^e1 * ... * xn^en stored as its exponent vector.

    The ambient dimension is ``len(exponents)``.  The unit monomial (all
    zeros) is a valid value: it is the identity for :meth:`lcm` and it
    divides everything.  Operations that are undefined on the unit
    monomial, such as :meth:`max_index`, raise ``ValueError``.
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(self.exponents)
        if not exps:
            raise ValueError("ambient dimension must be positive")
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {exps!r}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, *exponents: int) -> Monomial:
        return cls(tuple(exponents))

    @classmethod
    def unit(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int, power: int = 1) -> Monomial:
        """The pure power x_i^power in ambient dimension n (1-based i)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        return cls(tuple(power if k == i - 1 else 0 for k in range(n)))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def degree(self) -> int:
        """Total degree: the sum of the exponents."""
        return sum(self.exponents)

    def _require_same_ambient(self, other: Monomial) -> None:
        if self.n != other.n:
            raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")

    def divides(self, other: Monomial) -> bool:
        """Componentwise order: true iff self_i <= other_i for every i."""
        self._require_same_ambient(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        """Componentwise maximum."""
        self._require_same_ambient(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def times(self, other: Monomial) -> Monomial:
        self._require_same_ambient(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def support(self) -> frozenset[int]:
        """1-based indices of the variables that occur."""
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e >= 1)

    def max_index(self) -> int:
        """Largest 1-based variable index dividing the monomial.

        Undefined (raises) on the unit monomial.
        """
        for i in range(self.n - 1, -1, -1):
            if self.exponents[i] >= 1:
                return i + 1
        raise ValueError("max index of the unit monomial is undefined")

    def stability_shift(self, j: int) -> Monomial:
        """Move one power from the largest occurring variable onto x_j.

        Returns x_j * self / x_m where m = max_index(self).  Requires
        1 <= j < m; degree is preserved.
        """
        m = self.max_index()
        if not 1 <= j < m:
            raise ValueError(f"shift index {j} must satisfy 1 <= j < max index {m}")
        exps = list(self.exponents)
        exps[j - 1] += 1
        exps[m - 1] -= 1
        return Monomial(tuple(exps))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Key for the canonical order: degree ascending, then lexicographically
        descending on the exponent vector (so x1^2 sorts before x2^2)."""
        return (self.degree(), tuple(-e for e in self.exponents))

    def __str__(self) -> str:
        if self.is_unit():
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e >= 2:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def vector_str(self) -> str:
        return "[" + ",".join(str(e) for e in self.exponents) + "]"


def canonical_compare(u: Monomial, v: Monomial) -> int:
    """Total order on same-ambient monomials: -1, 0 or 1.

    Degree ascending with lexicographic-descending tie break; two
    monomials compare equal exactly when their exponent vectors match.
    """
    u._require_same_ambient(v)
    ku, kv = u.sort_key(), v.sort_key()
    if ku < kv:
        return -1
    if ku > kv:
        return 1
    return 0


def compositions(total: int, parts: int):
    """Yield all tuples of ``parts`` nonnegative integers summing to ``total``.

    Deterministic (lexicographic from the left, largest first coordinate
    first is *not* guaranteed; the order is first coordinate descending).
    """
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail
