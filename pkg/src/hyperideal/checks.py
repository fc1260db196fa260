"""Claim suite for nested-hypergraph ideals.

Each structural property of the pipeline (generator bounds, chain of
associated primes, stability of truncations, the two regularity bounds)
becomes one named claim with a pass/fail status and a witness on
failure.  Reports render deterministically so they can serve as golden
files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import MAX_GENERATORS, BettiTable, betti_table, euler_consistency_check
from .hypergraphs import (
    IncreasingHypergraph,
    canonical_vertex_order,
    containment_vector,
    covered_restriction,
    inclusion_ideal,
    special_dual,
)
from .ideals import (
    MonomialIdeal,
    alexander_dual,
    dual_components,
    irredundant_filter,
    is_totally_ordered_ass,
)
from .monomials import Monomial
from .stability import is_stable, pure_power_truncation_stable, q_bound, t_bound, truncation_stability

PASS = "pass"
FAIL = "fail"
NA = "n/a"
SKIPPED = "skipped"

HYPERGRAPH_CLAIMS = (
    "generators_bounded_by_containment",
    "inclusion_ideal_minimal",
    "associated_primes_chain",
    "component_truncations_stable",
    "dual_involution",
    "dual_truncation_stable",
    "deg_le_t",
    "t_le_q",
    "regularity_le_t",
    "regularity_lt_q",
    "euler_consistency",
)


@dataclass(frozen=True)
class ClaimResult:
    name: str
    status: str
    detail: str = ""

    def render(self) -> str:
        if self.detail:
            return f"{self.name}: {self.status} ({self.detail})"
        return f"{self.name}: {self.status}"


@dataclass
class CheckReport:
    source: str
    kind: str
    values: dict
    claims: list[ClaimResult]

    def claim(self, name: str) -> ClaimResult:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(name)

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, NA: 0, SKIPPED: 0}
        for c in self.claims:
            out[c.status] += 1
        return out

    def exit_status(self) -> int:
        counts = self.counts()
        if counts[FAIL]:
            return 1
        if counts[SKIPPED]:
            return 3
        return 0

    def to_text(self) -> str:
        v = self.values
        lines = [f"check: {self.source}", f"kind: {self.kind}"]
        if self.kind == "hypergraph":
            lines.append(f"n={v['n']} d={v['d']} s={v['s']}")
            lines.append("a=[" + ",".join(str(e) for e in v["a"]) + "]")
            lines.append(f"ideal: {v['ideal']}")
            lines.append(f"dual: {v['dual']}")
            lines.append(f"components: {v['components']}")
            lines.append(f"deg={v['deg']} m={v['m']}")
            lines.append(f"t={v['t']} q={v['q']} t_edge_indexed={v['t_edge_indexed']}")
        else:
            lines.append(f"n={v['n']}")
            lines.append(f"gens: {v['gens']}")
            lines.append(f"deg={v['deg']} m={v['m']} q={v['q']}")
            lines.append(f"stable: {'yes' if v['stable'] else 'no'}")
            if v.get("witness"):
                lines.append(v["witness"])
        if v["reg"] is None:
            lines.append(f"reg=skipped (char {v['char']})")
        else:
            lines.append(f"reg={v['reg']} (char {v['char']})")
        if self.kind == "hypergraph":
            lines.append(f"restricted: {'yes' if v['restricted'] else 'no'}")
        lines.extend(c.render() for c in self.claims)
        counts = self.counts()
        lines.append(
            f"result: {counts[PASS]} pass, {counts[FAIL]} fail, "
            f"{counts[NA]} n/a, {counts[SKIPPED]} skipped"
        )
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "source": self.source,
            "kind": self.kind,
            "values": dict(self.values),
            "claims": [
                {"name": c.name, "status": c.status, "detail": c.detail}
                for c in self.claims
            ],
            "exit": self.exit_status(),
        }


def _verdict(name: str, ok: bool, good: str, bad: str) -> ClaimResult:
    return ClaimResult(name, PASS if ok else FAIL, good if ok else bad)


def _oracle_guard_message(ideal: MonomialIdeal, skip_reg: bool) -> str | None:
    if skip_reg:
        return "regularity oracle disabled by flag"
    count = len(ideal.gens)
    if count > MAX_GENERATORS:
        return f"{count} generators exceed the oracle guard {MAX_GENERATORS}"
    return None


def run_hypergraph_checks(
    h: IncreasingHypergraph,
    char: int = 0,
    skip_reg: bool = False,
    source: str = "<memory>",
) -> CheckReport:
    """Evaluate every claim the pipeline makes about one hypergraph.

    Quantities that depend on the variable order (stability, q, the
    regularity oracle's input) are computed after canonical relabeling
    with edge-free vertices dropped; the display values keep the input
    labeling.
    """
    a = containment_vector(h)
    ideal = inclusion_ideal(h)
    dual, comps = special_dual(h)

    canonical, _ = canonical_vertex_order(h)
    restricted = covered_restriction(canonical)
    dual_r, comps_r = special_dual(restricted)

    t = t_bound(a)
    q = q_bound(dual_r)
    deg = dual_r.deg()
    m = dual_r.max_index()
    a_desc = sorted(a, reverse=True)
    t_edge_indexed = sum(a_desc[1 : h.s])

    claims: list[ClaimResult] = []

    bound = Monomial(a)
    offenders = [g for g in ideal.gens if not g.divides(bound)]
    claims.append(
        _verdict(
            "generators_bounded_by_containment",
            not offenders,
            f"{len(ideal.gens)} generators divide x^a",
            f"{offenders[0] if offenders else ''} does not divide x^a",
        )
    )

    pairwise = all(
        not u.divides(w) for u in ideal.gens for w in ideal.gens if u is not w
    )
    claims.append(
        _verdict(
            "inclusion_ideal_minimal",
            pairwise and len(ideal.gens) == h.s,
            f"{h.s} pairwise incomparable generators",
            "a generator divides another or the count is off",
        )
    )

    irredundant = irredundant_filter(comps_r)
    supports = {c.support() for c in irredundant}
    edge_sets = {frozenset(e) for e in restricted.edges}
    claims.append(
        _verdict(
            "associated_primes_chain",
            is_totally_ordered_ass(comps_r) and supports == edge_sets,
            f"{len(irredundant)} primes match the edge chain",
            "supports differ from the edge chain or are not nested",
        )
    )

    component_results = []
    component_error = ""
    for comp in comps_r:
        exps = comp.powers[: len(comp.support())]
        try:
            component_results.append(pure_power_truncation_stable(exps))
        except ValueError as exc:
            component_results.append(False)
            component_error = str(exc)
    component_ts = ",".join(
        str(t_bound(comp.powers[: len(comp.support())])) for comp in comps_r
    )
    claims.append(
        _verdict(
            "component_truncations_stable",
            all(component_results),
            f"component t values {component_ts}",
            component_error or "a component's truncation is not stable",
        )
    )

    claims.append(
        _verdict(
            "dual_involution",
            alexander_dual(dual, a) == ideal,
            "double dual returns the inclusion ideal",
            "double dual differs from the inclusion ideal",
        )
    )

    trunc_report = truncation_stability(dual_r, t)
    stable_at_t = trunc_report.is_stable
    claims.append(
        _verdict(
            "dual_truncation_stable",
            stable_at_t,
            f"dual truncated at t={t} is stable",
            trunc_report.witness.render() if trunc_report.witness else "unstable",
        )
    )

    claims.append(
        _verdict("deg_le_t", deg <= t, f"deg={deg} <= t={t}", f"deg={deg} > t={t}")
    )
    claims.append(
        _verdict("t_le_q", t <= q, f"t={t} <= q={q}", f"t={t} > q={q}")
    )

    reg: int | None = None
    table: BettiTable | None = None
    guard_message = _oracle_guard_message(dual_r, skip_reg)
    if guard_message is None:
        table = betti_table(dual_r, char)
        reg = table.regularity()

    if reg is None:
        claims.append(ClaimResult("regularity_le_t", SKIPPED, guard_message))
        claims.append(ClaimResult("regularity_lt_q", SKIPPED, guard_message))
    else:
        claims.append(
            _verdict(
                "regularity_le_t", reg <= t, f"reg={reg} <= t={t}", f"reg={reg} > t={t}"
            )
        )
        if deg == 1:
            claims.append(
                ClaimResult(
                    "regularity_lt_q",
                    NA,
                    "strict bound degenerates for ideals generated in degree 1",
                )
            )
        else:
            claims.append(
                _verdict(
                    "regularity_lt_q",
                    reg < q,
                    f"reg={reg} < q={q}",
                    f"reg={reg} >= q={q}",
                )
            )

    if table is None:
        claims.append(ClaimResult("euler_consistency", SKIPPED, guard_message))
    else:
        ok, mismatches = euler_consistency_check(dual_r, table)
        claims.append(
            _verdict(
                "euler_consistency",
                ok,
                "alternating sums match at every lattice point",
                f"mismatch at {len(mismatches)} multidegrees, first {list(mismatches[0]) if mismatches else ''}",
            )
        )

    values = {
        "n": h.n,
        "d": h.d,
        "s": h.s,
        "a": list(a),
        "ideal": str(ideal),
        "dual": str(dual),
        "components": " | ".join(str(c) for c in comps),
        "deg": deg,
        "m": m,
        "t": t,
        "q": q,
        "t_edge_indexed": t_edge_indexed,
        "reg": reg,
        "char": char,
        "restricted": restricted.n < h.n,
        "stable_at_t": stable_at_t,
    }
    return CheckReport(source, "hypergraph", values, claims)


def run_ideal_checks(
    ideal: MonomialIdeal,
    char: int = 0,
    skip_reg: bool = False,
    source: str = "<memory>",
) -> CheckReport:
    """Ideal-level subset of the suite for inputs with no hypergraph
    structure.  Hypergraph-only claims are reported as not applicable."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("checks need a proper nonzero monomial ideal")

    cap = tuple(
        max(g.exponents[i] for g in ideal.gens) for i in range(ideal.n)
    )
    dual = alexander_dual(ideal, cap)
    stability = is_stable(ideal)

    involution = _verdict(
        "dual_involution",
        alexander_dual(dual, cap) == ideal,
        "double dual with the exponent cap returns the ideal",
        "double dual differs from the ideal",
    )

    reg: int | None = None
    table: BettiTable | None = None
    guard_message = _oracle_guard_message(ideal, skip_reg)
    if guard_message is None:
        table = betti_table(ideal, char)
        reg = table.regularity()

    if table is None:
        euler = ClaimResult("euler_consistency", SKIPPED, guard_message)
    else:
        ok, mismatches = euler_consistency_check(ideal, table)
        euler = _verdict(
            "euler_consistency",
            ok,
            "alternating sums match at every lattice point",
            f"mismatch at {len(mismatches)} multidegrees",
        )

    special = {"dual_involution": involution, "euler_consistency": euler}
    claims = [
        special.get(name, ClaimResult(name, NA, "requires a hypergraph instance"))
        for name in HYPERGRAPH_CLAIMS
    ]

    values = {
        "n": ideal.n,
        "gens": str(ideal),
        "deg": ideal.deg(),
        "m": ideal.max_index(),
        "q": q_bound(ideal),
        "stable": stability.is_stable,
        "witness": stability.witness.render() if stability.witness else "",
        "reg": reg,
        "char": char,
    }
    return CheckReport(source, "ideal", values, claims)


BENCH_COLUMNS = (
    "instance_id",
    "n",
    "s",
    "d",
    "t",
    "q",
    "deg",
    "m",
    "reg",
    "reg_le_t",
    "t_le_q",
    "stable_at_t",
    "ass_chain",
)


def bench_row(
    instance_id: int,
    h: IncreasingHypergraph,
    char: int = 0,
    skip_reg: bool = False,
) -> dict:
    """One flat result row per instance for the bench sweep; blank cells
    mark quantities the oracle guard skipped."""
    report = run_hypergraph_checks(h, char=char, skip_reg=skip_reg)
    v = report.values

    def cell(name: str) -> str:
        status = report.claim(name).status
        if status == PASS:
            return "true"
        if status == FAIL:
            return "false"
        return ""

    return {
        "instance_id": instance_id,
        "n": v["n"],
        "s": v["s"],
        "d": v["d"],
        "t": v["t"],
        "q": v["q"],
        "deg": v["deg"],
        "m": v["m"],
        "reg": "" if v["reg"] is None else v["reg"],
        "reg_le_t": cell("regularity_le_t"),
        "t_le_q": cell("t_le_q"),
        "stable_at_t": "true" if v["stable_at_t"] else "false",
        "ass_chain": cell("associated_primes_chain"),
    }
