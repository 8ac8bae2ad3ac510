"""Executable structural checks and exhaustive sweep machinery.

Every check encodes one law relating a finite ring to its
annihilator-intersection graph as hypothesis -> conclusion.  A check is
*inapplicable* when the hypothesis fails, *skipped* (with a reason) when a
cap prevents evaluating it, and otherwise passes or fails with a structured
witness.  Converses are only asserted where the law is an equivalence.

Sweeps enumerate ring families deterministically, run a selected set of
checks per ring, and aggregate pass/fail/skip counts; every failure keeps
its witness.
"""

from __future__ import annotations

import json
import math
import os
import time
from collections import Counter
from dataclasses import dataclass, field

from .graphs import (
    Graph,
    build_ia,
    build_ia_zn_symbolic,
    build_torsion,
    compress_classes,
)
from .invariants import InvariantReport, diameter, invariants, is_isomorphic
from .rings import (
    CapExceededError,
    ProductRing,
    RingSpec,
    big_omega,
    factorize,
    format_element,
    is_prime,
    is_prime_power,
    parse_ring_spec,
    radical,
)

CHECK_IDS = (
    "T2.ideal",
    "T2.thann",
    "T2.goldie",
    "T2.subring",
    "T2.no-Kmn",
    "T2.embed",
    "T3.vnr-or-nil",
    "T3.girth",
    "T3.diam3",
    "T3.card2",
    "T3.torsion-complete",
    "T3.torsion-diam",
    "L4.gcd-adj",
    "L4.three-primes",
    "T5.two-domains",
    "T5.n-domains",
    "T5.artinian-local",
    "T5.mixed",
)

SYMBOLIC_CHECK_IDS = (
    "T2.no-Kmn",
    "T3.girth",
    "T3.diam3",
    "T3.card2",
    "L4.gcd-adj",
    "L4.three-primes",
)


@dataclass(frozen=True)
class Caps:
    """Work bounds per check family; anything above is skipped, never guessed."""

    element: int = 5000  # brute-force element enumeration
    torsion: int = 300  # ring order for torsion-graph checks
    total: int = 200  # ring order for total-graph embedding checks
    subring: int = 500  # ring order for the generated-subring check
    iso: int = 64  # vertex count for isomorphism testing
    graph: int = 4096  # vertex count for graph construction

    @staticmethod
    def from_env(env: dict | None = None) -> "Caps":
        """Read overrides from IAGRAPH_CAPS, e.g. "element=2000,torsion=100"."""
        env = os.environ if env is None else env
        raw = env.get("IAGRAPH_CAPS", "")
        values = {}
        for part in raw.split(","):
            part = part.strip()
            if not part:
                continue
            name, _, num = part.partition("=")
            if name not in Caps.__dataclass_fields__ or not num.isdigit():
                raise ValueError(f"bad IAGRAPH_CAPS entry {part!r}")
            values[name] = int(num)
        return Caps(**values)


@dataclass
class TheoremCheck:
    id: str
    applicable: bool
    passed: bool | None
    witness: dict | None = None
    skipped: bool = False
    reason: str = ""

    @property
    def failed(self) -> bool:
        return self.applicable and not self.skipped and self.passed is False

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "applicable": self.applicable,
            "passed": self.passed,
            "witness": self.witness,
            "skipped": self.skipped,
            "reason": self.reason,
        }


@dataclass
class RingReport:
    ring: str
    checks: list[TheoremCheck]
    timing_ms: int = 0

    def summary(self) -> dict:
        out = {"checks": len(self.checks), "applicable": 0, "passed": 0, "failed": 0, "skipped": 0}
        for c in self.checks:
            if c.skipped:
                out["skipped"] += 1
            elif c.applicable:
                out["applicable"] += 1
                if c.passed:
                    out["passed"] += 1
                else:
                    out["failed"] += 1
        return out

    @property
    def failures(self) -> list[TheoremCheck]:
        return [c for c in self.checks if c.failed]

    def to_json_dict(self) -> dict:
        return {
            "ring": self.ring,
            "checks": [c.to_json_dict() for c in self.checks],
            "summary": self.summary(),
            "timing_ms": self.timing_ms,
        }


def report_csv_rows(report: RingReport) -> list[list[str]]:
    rows = []
    for c in report.checks:
        rows.append(
            [
                report.ring,
                c.id,
                str(c.applicable).lower(),
                "" if c.passed is None else str(c.passed).lower(),
                json.dumps(c.witness, sort_keys=True) if c.witness else "",
            ]
        )
    return rows


CSV_HEADER = ["ring", "check_id", "applicable", "passed", "witness"]


# ---------------------------------------------------------------------------
# per-ring evaluation context (lazy, shared across checks)


class _RingContext:
    def __init__(self, ring: ProductRing, caps: Caps):
        self.ring = ring
        self.caps = caps
        self.spec = ring.spec
        self._cache: dict[str, object] = {}

    def _get(self, name: str, maker):
        if name not in self._cache:
            self._cache[name] = maker()
        return self._cache[name]

    # graph side -----------------------------------------------------------
    @property
    def raw_classes(self):
        return self._get(
            "raw_classes", lambda: self.ring.annihilator_classes(self.caps.element)
        )

    @property
    def classes(self):
        return self._get("classes", lambda: compress_classes(self.ring, self.caps.element))

    @property
    def ia(self) -> Graph:
        def make():
            classes = self.classes
            if len(classes) > self.caps.graph:
                raise CapExceededError(
                    f"{len(classes)} vertices above graph cap {self.caps.graph}"
                )
            edges = [
                (i, j)
                for i in range(len(classes))
                for j in range(i + 1, len(classes))
                if self.ring.ann_sets_intersect(classes[i].key, classes[j].key)
            ]
            return Graph(
                labels=[c.label for c in classes],
                edges=edges,
                class_sizes=[c.size for c in classes],
            )

        return self._get("ia", make)

    @property
    def ia_inv(self) -> InvariantReport:
        return self._get("ia_inv", lambda: invariants(self.ia))

    @property
    def torsion(self) -> Graph:
        def make():
            if self.ring.order > self.caps.torsion:
                raise CapExceededError(
                    f"order {self.ring.order} above torsion cap {self.caps.torsion}"
                )
            return build_torsion(self.ring, self.caps.element, self.caps.graph)

        return self._get("torsion", make)

    # ring side ------------------------------------------------------------
    @property
    def zset(self) -> set:
        return self._get("zset", lambda: self.ring.zero_divisor_set(self.caps.element))

    @property
    def z_ideal_witness(self):
        return self._get(
            "z_ideal_witness", lambda: self.ring.zero_divisor_ideal_witness(self.caps.element)
        )

    @property
    def z_ideal(self) -> bool:
        return self.z_ideal_witness is None

    @property
    def reduced(self) -> bool:
        # fast-path specialization: Nil(R) is trivial iff every modulus is squarefree
        return self._get(
            "reduced", lambda: all(radical(n) == n for n in self.spec.factors)
        )

    @property
    def common_ann_nonzero(self) -> bool:
        return self._get(
            "common_ann_nonzero",
            lambda: len(self.ring.common_annihilator_of_zero_divisors(self.caps.element)) > 1,
        )

    @property
    def decomposition(self):
        return self._get(
            "decomposition",
            lambda: self.ring.has_ann_direct_sum_decomposition(self.caps.element),
        )


# ---------------------------------------------------------------------------
# the checks


def _check_ideal(ctx: _RingContext) -> TheoremCheck:
    """Complete graph forces the zero-divisors to form an ideal."""
    if not ctx.ia_inv.complete:
        return TheoremCheck("T2.ideal", applicable=False, passed=None)
    if ctx.z_ideal:
        return TheoremCheck("T2.ideal", applicable=True, passed=True)
    x, y = ctx.z_ideal_witness
    return TheoremCheck(
        "T2.ideal",
        applicable=True,
        passed=False,
        witness={"non_closed_pair": [format_element(x), format_element(y)]},
    )


def _check_thann(ctx: _RingContext) -> TheoremCheck:
    """A common nonzero annihilator of Z(R) forces a complete graph."""
    if not ctx.common_ann_nonzero:
        return TheoremCheck("T2.thann", applicable=False, passed=None)
    ok = ctx.ia_inv.complete
    witness = None if ok else {"vertices": ctx.ia.vertex_count, "edges": ctx.ia.edge_count}
    return TheoremCheck("T2.thann", applicable=True, passed=ok, witness=witness)


def _check_goldie(ctx: _RingContext) -> TheoremCheck:
    """Finite ring: Z(R) is an ideal iff the graph is complete (equivalence)."""
    ideal = ctx.z_ideal
    complete = ctx.ia_inv.complete
    ok = ideal == complete
    witness = None
    if not ok:
        witness = {"z_ideal": ideal, "ia_complete": complete}
        if not ideal:
            x, y = ctx.z_ideal_witness
            witness["non_closed_pair"] = [format_element(x), format_element(y)]
    return TheoremCheck("T2.goldie", applicable=True, passed=ok, witness=witness)


def _check_subring(ctx: _RingContext) -> TheoremCheck:
    """The subring generated by class representatives and 1 has the same graph."""
    if ctx.ring.order > ctx.caps.subring:
        raise CapExceededError(
            f"order {ctx.ring.order} above subring cap {ctx.caps.subring}"
        )
    reps = [c.representative for c in ctx.classes]
    sub = ctx.ring.subring_generated(reps, include_one=True, cap=ctx.caps.element)
    sub.validate_closure()
    ia_sub = build_ia(sub, ctx.caps.element, ctx.caps.graph)
    ok, _ = is_isomorphic(ia_sub, ctx.ia, ctx.caps.iso)
    witness = None
    if not ok:
        witness = {
            "subring_order": sub.order,
            "subring_vertices": ia_sub.vertex_count,
            "subring_edges": ia_sub.edge_count,
            "ring_vertices": ctx.ia.vertex_count,
            "ring_edges": ctx.ia.edge_count,
        }
    return TheoremCheck("T2.subring", applicable=True, passed=ok, witness=witness)


def _check_no_kmn(ctx_or_inv) -> TheoremCheck:
    """The graph is never complete bipartite with both parts above 1."""
    inv = ctx_or_inv.ia_inv if isinstance(ctx_or_inv, _RingContext) else ctx_or_inv
    parts = inv.bipartite_parts
    ok = parts is None or parts[0] == 1
    witness = None if ok else {"parts": list(parts)}
    return TheoremCheck("T2.no-Kmn", applicable=True, passed=ok, witness=witness)


def _check_embed(ctx: _RingContext) -> TheoremCheck:
    """Every compressed edge lifts to total-graph adjacency for all member pairs."""
    if ctx.ring.order > ctx.caps.total:
        raise CapExceededError(f"order {ctx.ring.order} above total cap {ctx.caps.total}")
    raw = ctx.raw_classes
    zset = ctx.zset
    mods = ctx.spec.factors
    edges = ctx.ia.edges()
    if not edges:
        return TheoremCheck(
            "T2.embed", applicable=True, passed=True, reason="no edges (vacuous)"
        )
    for i, j in edges:
        for x in raw[i][1]:
            for y in raw[j][1]:
                s = tuple((a + b) % n for a, b, n in zip(x, y, mods))
                if s not in zset:
                    return TheoremCheck(
                        "T2.embed",
                        applicable=True,
                        passed=False,
                        witness={
                            "edge": [ctx.ia.labels[i], ctx.ia.labels[j]],
                            "members": [format_element(x), format_element(y)],
                            "sum": format_element(s),
                        },
                    )
    return TheoremCheck("T2.embed", applicable=True, passed=True)


def _check_vnr_or_nil(ctx: _RingContext) -> TheoremCheck:
    """Reduced without an annihilator direct-sum split, or non-reduced:
    the graph is connected with diameter at most 3."""
    if ctx.reduced:
        decomposes, _ = ctx.decomposition
        if decomposes:
            return TheoremCheck("T3.vnr-or-nil", applicable=False, passed=None)
    inv = ctx.ia_inv
    ok = inv.connected and inv.diameter is not None and inv.diameter <= 3
    witness = None if ok else {"connected": inv.connected, "diameter": _num(inv.diameter)}
    return TheoremCheck("T3.vnr-or-nil", applicable=True, passed=ok, witness=witness)


def _girth_ok(inv: InvariantReport) -> bool:
    return inv.girth is None or inv.girth == 3


def _check_girth(ctx_or_inv) -> TheoremCheck:
    """Girth is 3 or infinite, never anything else."""
    inv = ctx_or_inv.ia_inv if isinstance(ctx_or_inv, _RingContext) else ctx_or_inv
    ok = _girth_ok(inv)
    witness = None if ok else {"girth": _num(inv.girth)}
    return TheoremCheck("T3.girth", applicable=True, passed=ok, witness=witness)


def _check_diam3(ctx_or_inv) -> TheoremCheck:
    """More than 2 vertices: connected with diameter at most 3; exactly 3: complete."""
    inv = ctx_or_inv.ia_inv if isinstance(ctx_or_inv, _RingContext) else ctx_or_inv
    if inv.vertex_count <= 2:
        return TheoremCheck("T3.diam3", applicable=False, passed=None)
    ok = inv.connected and inv.diameter is not None and inv.diameter <= 3
    if inv.vertex_count == 3:
        ok = ok and inv.complete
    witness = None
    if not ok:
        witness = {
            "vertices": inv.vertex_count,
            "connected": inv.connected,
            "diameter": _num(inv.diameter),
            "complete": inv.complete,
        }
    return TheoremCheck("T3.diam3", applicable=True, passed=ok, witness=witness)


def _card2_verdict(inv: InvariantReport, z_ideal: bool) -> TheoremCheck:
    if inv.vertex_count != 2:
        return TheoremCheck("T3.card2", applicable=False, passed=None)
    edge = inv.edge_count == 1
    ok = edge == z_ideal
    witness = None if ok else {"edge": edge, "z_ideal": z_ideal}
    return TheoremCheck("T3.card2", applicable=True, passed=ok, witness=witness)


def _check_card2(ctx: _RingContext) -> TheoremCheck:
    """Exactly 2 vertices: the single possible edge exists iff Z(R) is an ideal."""
    if ctx.ia_inv.vertex_count != 2:
        return TheoremCheck("T3.card2", applicable=False, passed=None)
    return _card2_verdict(ctx.ia_inv, ctx.z_ideal)


def _check_torsion_complete(ctx: _RingContext) -> TheoremCheck:
    """The torsion graph is complete iff the compressed graph is complete."""
    tor = ctx.torsion
    n = tor.vertex_count
    tor_complete = tor.edge_count == n * (n - 1) // 2
    ok = tor_complete == ctx.ia_inv.complete
    witness = None
    if not ok:
        witness = {"torsion_complete": tor_complete, "ia_complete": ctx.ia_inv.complete}
    return TheoremCheck("T3.torsion-complete", applicable=True, passed=ok, witness=witness)


def _check_torsion_diam(ctx: _RingContext) -> TheoremCheck:
    """Connectivity transfers both ways; diameters agree past a single vertex."""
    tor = ctx.torsion
    tor_diam = diameter(tor)
    tor_conn = tor_diam is not None
    ia_conn = ctx.ia_inv.connected
    ok = tor_conn == ia_conn
    if ok and ctx.ia_inv.vertex_count > 1:
        ok = tor_diam == ctx.ia_inv.diameter
    witness = None
    if not ok:
        witness = {
            "torsion_connected": tor_conn,
            "ia_connected": ia_conn,
            "torsion_diameter": _num(tor_diam),
            "ia_diameter": _num(ctx.ia_inv.diameter),
        }
    return TheoremCheck("T3.torsion-diam", applicable=True, passed=ok, witness=witness)


def _graphs_equal_by_labels(a: Graph, b: Graph) -> bool:
    return set(a.labels) == set(b.labels) and a.edge_labels() == b.edge_labels()


def _check_gcd_adj(ctx: _RingContext) -> TheoremCheck:
    """For Z_n the brute-force graph equals the divisor/gcd form, label for label."""
    if ctx.spec.arity != 1:
        return TheoremCheck("L4.gcd-adj", applicable=False, passed=None)
    symbolic = build_ia_zn_symbolic(dict(factorize(ctx.spec.factors[0])), ctx.caps.graph)
    ok = _graphs_equal_by_labels(ctx.ia, symbolic)
    witness = None
    if not ok:
        witness = {
            "brute_vertices": sorted(ctx.ia.labels),
            "symbolic_vertices": sorted(symbolic.labels),
            "brute_edges": sorted(sorted(e) for e in ctx.ia.edge_labels()),
            "symbolic_edges": sorted(sorted(e) for e in symbolic.edge_labels()),
        }
    return TheoremCheck("L4.gcd-adj", applicable=True, passed=ok, witness=witness)


def _three_primes_verdict(n: int, inv: InvariantReport) -> TheoremCheck:
    fac = factorize(n)
    if big_omega(n) < 3:
        return TheoremCheck("L4.three-primes", applicable=False, passed=None)
    ok = (
        inv.connected
        and inv.diameter is not None
        and inv.diameter <= 2
        and inv.girth == 3
    )
    if len(fac) >= 2:  # at least two distinct primes: diameter exactly 2
        ok = ok and inv.diameter == 2
    witness = None
    if not ok:
        witness = {
            "n": n,
            "vertices": inv.vertex_count,
            "connected": inv.connected,
            "diameter": _num(inv.diameter),
            "girth": _num(inv.girth),
        }
    return TheoremCheck("L4.three-primes", applicable=True, passed=ok, witness=witness)


def _check_three_primes(ctx: _RingContext) -> TheoremCheck:
    """Z_n with at least 3 prime factors (with multiplicity): connected,
    diameter at most 2, girth 3; diameter exactly 2 given 2 distinct primes."""
    if ctx.spec.arity != 1:
        return TheoremCheck("L4.three-primes", applicable=False, passed=None)
    n = ctx.spec.factors[0]
    if big_omega(n) < 3:
        return TheoremCheck("L4.three-primes", applicable=False, passed=None)
    return _three_primes_verdict(n, ctx.ia_inv)


def _check_two_domains(ctx: _RingContext) -> TheoremCheck:
    """A product of exactly two prime fields: two isolated vertices."""
    fac = ctx.spec.factors
    if len(fac) != 2 or not all(is_prime(n) for n in fac):
        return TheoremCheck("T5.two-domains", applicable=False, passed=None)
    inv = ctx.ia_inv
    ok = inv.vertex_count == 2 and inv.edge_count == 0
    witness = None
    if not ok:
        witness = {"vertices": inv.vertex_count, "edges": inv.edge_count}
    return TheoremCheck("T5.two-domains", applicable=True, passed=ok, witness=witness)


def _check_n_domains(ctx: _RingContext) -> TheoremCheck:
    """A product of more than two prime fields: connected, diameter 2, girth 3."""
    fac = ctx.spec.factors
    if len(fac) <= 2 or not all(is_prime(n) for n in fac):
        return TheoremCheck("T5.n-domains", applicable=False, passed=None)
    inv = ctx.ia_inv
    ok = inv.connected and inv.diameter == 2 and inv.girth == 3
    witness = None if ok else _inv_witness(inv)
    return TheoremCheck("T5.n-domains", applicable=True, passed=ok, witness=witness)


def _check_artinian_local(ctx: _RingContext) -> TheoremCheck:
    """A product of local factors Z_{p^k}, each with k >= 2 (so each carries a
    nilpotent whose annihilator is the maximal ideal): connected, diameter 2,
    girth 3.  Field factors are excluded; those products belong to the
    domain-product or mixed cases."""
    fac = ctx.spec.factors
    if len(fac) < 2:
        return TheoremCheck("T5.artinian-local", applicable=False, passed=None)
    for n in fac:
        if not is_prime_power(n) or is_prime(n):
            return TheoremCheck("T5.artinian-local", applicable=False, passed=None)
    inv = ctx.ia_inv
    ok = inv.connected and inv.diameter == 2 and inv.girth == 3
    witness = None if ok else _inv_witness(inv)
    return TheoremCheck("T5.artinian-local", applicable=True, passed=ok, witness=witness)


def _check_mixed(ctx: _RingContext) -> TheoremCheck:
    """A product of two factors where at least one has a nonzero zero-divisor:
    connected, not complete, diameter at most 3, girth 3."""
    fac = ctx.spec.factors
    if len(fac) != 2 or all(is_prime(n) for n in fac):
        return TheoremCheck("T5.mixed", applicable=False, passed=None)
    inv = ctx.ia_inv
    ok = (
        inv.connected
        and not inv.complete
        and inv.diameter is not None
        and inv.diameter <= 3
        and inv.girth == 3
    )
    witness = None if ok else _inv_witness(inv)
    return TheoremCheck("T5.mixed", applicable=True, passed=ok, witness=witness)


def _num(value):
    return "inf" if value is None else value


def _inv_witness(inv: InvariantReport) -> dict:
    return {
        "vertices": inv.vertex_count,
        "edges": inv.edge_count,
        "connected": inv.connected,
        "diameter": _num(inv.diameter),
        "girth": _num(inv.girth),
        "complete": inv.complete,
    }


_CHECK_FUNCS = {
    "T2.ideal": _check_ideal,
    "T2.thann": _check_thann,
    "T2.goldie": _check_goldie,
    "T2.subring": _check_subring,
    "T2.no-Kmn": _check_no_kmn,
    "T2.embed": _check_embed,
    "T3.vnr-or-nil": _check_vnr_or_nil,
    "T3.girth": _check_girth,
    "T3.diam3": _check_diam3,
    "T3.card2": _check_card2,
    "T3.torsion-complete": _check_torsion_complete,
    "T3.torsion-diam": _check_torsion_diam,
    "L4.gcd-adj": _check_gcd_adj,
    "L4.three-primes": _check_three_primes,
    "T5.two-domains": _check_two_domains,
    "T5.n-domains": _check_n_domains,
    "T5.artinian-local": _check_artinian_local,
    "T5.mixed": _check_mixed,
}


def resolve_check_ids(checks) -> tuple[str, ...]:
    if checks in (None, "all") or checks == ("all",) or checks == ["all"]:
        return CHECK_IDS
    ids = tuple(checks)
    for cid in ids:
        if cid not in _CHECK_FUNCS:
            raise ValueError(f"unknown check id {cid!r}")
    return ids


def check_ring(ring, checks="all", caps: Caps | None = None) -> RingReport:
    """Run the selected checks on one ring, brute-force mode."""
    caps = caps or Caps()
    if isinstance(ring, str):
        ring = ProductRing(parse_ring_spec(ring))
    elif isinstance(ring, RingSpec):
        ring = ProductRing(ring)
    ids = resolve_check_ids(checks)
    ctx = _RingContext(ring, caps)
    start = time.perf_counter_ns()
    results = []
    for cid in ids:
        try:
            results.append(_CHECK_FUNCS[cid](ctx))
        except CapExceededError as exc:
            results.append(
                TheoremCheck(cid, applicable=False, passed=None, skipped=True, reason=str(exc))
            )
    elapsed = (time.perf_counter_ns() - start) // 1_000_000
    return RingReport(ring=ring.spec.ring_id(), checks=results, timing_ms=int(elapsed))


def embedding_check(ring, caps: Caps | None = None) -> TheoremCheck:
    """Standalone entry for the total-graph embedding law."""
    caps = caps or Caps()
    if isinstance(ring, str):
        ring = ProductRing(parse_ring_spec(ring))
    elif isinstance(ring, RingSpec):
        ring = ProductRing(ring)
    ctx = _RingContext(ring, caps)
    try:
        return _check_embed(ctx)
    except CapExceededError as exc:
        return TheoremCheck(
            "T2.embed", applicable=False, passed=None, skipped=True, reason=str(exc)
        )


# ---------------------------------------------------------------------------
# symbolic-mode checking for Z_n


_SYMBOLIC_INV_CACHE: dict[tuple[int, ...], tuple[InvariantReport, bool]] = {}


def _symbolic_signature(fac) -> tuple[int, ...]:
    return tuple(sorted((e for _, e in fac), reverse=True))


def symbolic_invariants(n: int, caps: Caps, use_cache: bool = True) -> InvariantReport:
    """Invariants of the divisor-form graph of Z_n.

    The divisor graph depends only on the multiset of exponents in the
    factorization of n (divisors correspond to exponent vectors and gcd
    adjacency only reads those vectors), so results may be cached per
    exponent signature.
    """
    fac = factorize(n)
    sig = _symbolic_signature(fac)
    if use_cache and sig in _SYMBOLIC_INV_CACHE:
        return _SYMBOLIC_INV_CACHE[sig][0]
    inv = invariants(build_ia_zn_symbolic(dict(fac), caps.graph))
    _SYMBOLIC_INV_CACHE[sig] = (inv, True)
    return inv


def check_zn_symbolic(
    n: int, checks="all", caps: Caps | None = None, use_cache: bool = True
) -> RingReport:
    """Run the symbolic-capable checks on Z_n without enumerating elements."""
    caps = caps or Caps()
    ids = resolve_check_ids(checks)
    inv = symbolic_invariants(n, caps, use_cache)
    fac = factorize(n)
    results = []
    for cid in ids:
        if cid not in SYMBOLIC_CHECK_IDS:
            results.append(
                TheoremCheck(
                    cid,
                    applicable=False,
                    passed=None,
                    skipped=True,
                    reason="not available in symbolic mode",
                )
            )
        elif cid == "T3.girth":
            results.append(_check_girth(inv))
        elif cid == "T3.diam3":
            results.append(_check_diam3(inv))
        elif cid == "T2.no-Kmn":
            results.append(_check_no_kmn(inv))
        elif cid == "L4.three-primes":
            results.append(_three_primes_verdict(n, inv))
        elif cid == "T3.card2":
            # closed form: Z(Z_n) is an ideal exactly for prime powers
            results.append(_card2_verdict(inv, z_ideal=len(fac) == 1))
        elif n <= caps.element:  # L4.gcd-adj needs the brute side
            results.append(check_ring(RingSpec((n,)), ["L4.gcd-adj"], caps).checks[0])
        else:
            results.append(
                TheoremCheck(
                    cid,
                    applicable=False,
                    passed=None,
                    skipped=True,
                    reason=f"order {n} above element cap {caps.element}",
                )
            )
    return RingReport(ring=f"Z{n}", checks=results)


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class SweepConfig:
    family: str  # zn | zn-symbolic | products | domain-products
    max_n: int  # max modulus (zn families) / max order (products) / max k
    max_factors: int = 3
    checks: tuple[str, ...] | str = "all"
    caps: Caps = field(default_factory=Caps)
    jobs: int = 1
    use_cache: bool = True  # symbolic family only

    def __post_init__(self):
        if self.family not in ("zn", "zn-symbolic", "products", "domain-products"):
            raise ValueError(f"unknown sweep family {self.family!r}")
        if self.max_n < 2:
            raise ValueError("sweep bound must be at least 2")
        if self.max_factors < 1:
            raise ValueError("max_factors must be at least 1")


@dataclass
class CheckStats:
    applicable: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    inapplicable: int = 0
    failures: list = field(default_factory=list)
    skip_reasons: Counter = field(default_factory=Counter)

    def absorb(self, ring: str, check: TheoremCheck) -> None:
        if check.skipped:
            self.skipped += 1
            self.skip_reasons[check.reason] += 1
        elif not check.applicable:
            self.inapplicable += 1
        else:
            self.applicable += 1
            if check.passed:
                self.passed += 1
            else:
                self.failed += 1
                self.failures.append({"ring": ring, "witness": check.witness})

    def to_json_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "inapplicable": self.inapplicable,
            "failures": self.failures,
            "skip_reasons": dict(sorted(self.skip_reasons.items())),
        }


@dataclass
class SweepAggregate:
    family: str
    ring_count: int
    stats: dict[str, CheckStats]
    elapsed_ms: int = 0

    @property
    def total_failures(self) -> int:
        return sum(s.failed for s in self.stats.values())

    def failures_for(self, check_id: str) -> list:
        return self.stats[check_id].failures if check_id in self.stats else []

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "ring_count": self.ring_count,
            "total_failures": self.total_failures,
            "checks": {cid: s.to_json_dict() for cid, s in sorted(self.stats.items())},
            "elapsed_ms": self.elapsed_ms,
        }


def enumerate_product_specs(max_order: int, max_factors: int) -> list[RingSpec]:
    """All sorted factor tuples with 2..max_factors factors and order <= max_order,
    ascending by (order, factor count, factors)."""
    found: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], min_factor: int, budget: int) -> None:
        if len(prefix) >= 2:
            found.append(prefix)
        if len(prefix) == max_factors:
            return
        f = min_factor
        while f <= budget:
            extend(prefix + (f,), f, budget // f)
            f += 1

    extend((), 2, max_order)
    found.sort(key=lambda fac: (math.prod(fac), len(fac), fac))
    return [RingSpec(fac) for fac in found]


def _first_primes(k: int) -> list[int]:
    out = []
    cand = 2
    while len(out) < k:
        if all(cand % p for p in out):
            out.append(cand)
        cand += 1
    return out


def _sweep_items(config: SweepConfig):
    if config.family == "zn":
        return [RingSpec((n,)) for n in range(2, config.max_n + 1)]
    if config.family == "zn-symbolic":
        return list(range(2, config.max_n + 1))
    if config.family == "products":
        return enumerate_product_specs(config.max_n, config.max_factors)
    primes = _first_primes(config.max_factors)
    return [RingSpec(tuple(primes[:k])) for k in range(2, config.max_factors + 1)]


def _run_item(item, config: SweepConfig) -> RingReport:
    if config.family == "zn-symbolic":
        report = check_zn_symbolic(item, config.checks, config.caps, config.use_cache)
        # periodic cache validation: recompute directly and compare
        if config.use_cache and item % 199 == 0:
            fresh = check_zn_symbolic(item, config.checks, config.caps, use_cache=False)
            if [c.to_json_dict() for c in fresh.checks] != [
                c.to_json_dict() for c in report.checks
            ]:
                raise RuntimeError(f"symbolic cache mismatch at n={item}")
        return report
    return check_ring(item, config.checks, config.caps)


def sweep(config: SweepConfig, report_sink=None) -> SweepAggregate:
    """Run the configured family; aggregate per-check outcomes deterministically."""
    items = _sweep_items(config)
    start = time.perf_counter_ns()
    ids = resolve_check_ids(config.checks)
    stats = {cid: CheckStats() for cid in ids}

    if config.jobs > 1:
        from multiprocessing import Pool

        with Pool(config.jobs) as pool:
            reports = pool.starmap(
                _run_item, [(item, config) for item in items], chunksize=64
            )
    else:
        reports = (_run_item(item, config) for item in items)

    count = 0
    for report in reports:
        count += 1
        for check in report.checks:
            stats[check.id].absorb(report.ring, check)
        if report_sink is not None:
            report_sink(report)
    elapsed = (time.perf_counter_ns() - start) // 1_000_000
    return SweepAggregate(
        family=config.family, ring_count=count, stats=stats, elapsed_ms=int(elapsed)
    )
