"""Exhaustive verification of the extremal bounds and supporting lemmas.

A *universe* is a stream of graphs, normally every isomorphism class up to
some order produced by :mod:`misbounds.generate`, or a graph6 corpus.  Each
check walks the universe once and returns a :class:`VerificationReport`.
Reports from disjoint shards of a universe merge associatively, so sweeps
can be spread over worker processes.

For the bound theorems the equality clause is checked in both directions:
graphs attaining the bound must be recognized as family members, and
recognized members must attain it.  The family constructors are then run
on their own, so a recognizer bug and a constructor bug show up
differently (``source`` is ``"recognizer"`` or ``"constructor"``).
"""

from __future__ import annotations

import enum
import json
import os
import random
import time
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import bounds
from .canon import certificate
from .families import FamilyId, enumerate_family, make_general_extremal, recognize
from .generate import GenerationLimitError, _limit_for, generate_nonisomorphic
from .graph import (
    Graph,
    _induced,
    add_pendant_vertices,
    component_masks,
    disjoint_union,
    has_triangle,
    iter_bits,
    make_basic,
    parse_graph6,
    read_graph6,
    to_graph6,
)
from .matching import (
    _mu,
    _mu_without,
    gallai_edmonds,
    has_perfect_matching,
    is_factor_critical,
    matched_vertices,
    maximum_matching,
)
from .mis import count_independent_sets, count_mis

__all__ = [
    "TheoremId",
    "VerificationReport",
    "Universe",
    "generated_universe",
    "corpus_universe",
    "check_bound_theorem",
    "check_lemma_suite",
    "check_gallai_edmonds",
    "check_order_bounds",
    "run_check",
    "format_summary",
]


class TheoremId(enum.Enum):
    THM1 = "THM1"
    THM2 = "THM2"
    THM3 = "THM3"
    THM4 = "THM4"
    LEM21_STRICT = "LEM21_STRICT"
    LEM31 = "LEM31"
    LEM32 = "LEM32"
    LEM33 = "LEM33"
    THMB_PROPS = "THMB_PROPS"
    THMD = "THMD"
    THME_ODD = "THME_ODD"
    MOON_MOSER = "MOON_MOSER"
    THMC = "THMC"


BOUND_THEOREMS = (TheoremId.THM1, TheoremId.THM2, TheoremId.THM3, TheoremId.THM4)
LEMMAS = (TheoremId.LEM21_STRICT, TheoremId.LEM31, TheoremId.LEM32, TheoremId.LEM33)
ORDER_THEOREMS = (TheoremId.MOON_MOSER, TheoremId.THMC, TheoremId.THMD, TheoremId.THME_ODD)

# hypothesis filter each check expects its universe to satisfy
FILTERS: dict[TheoremId, tuple[str, ...]] = {
    TheoremId.THM1: (),
    TheoremId.THM2: ("connected",),
    TheoremId.THM3: ("triangle-free",),
    TheoremId.THM4: ("connected", "triangle-free"),
    TheoremId.LEM21_STRICT: ("connected",),
    TheoremId.LEM31: (),
    TheoremId.LEM32: (),
    TheoremId.LEM33: ("connected",),
    TheoremId.THMB_PROPS: (),
    TheoremId.THMD: ("triangle-free",),
    TheoremId.THME_ODD: ("triangle-free",),
    TheoremId.MOON_MOSER: (),
    TheoremId.THMC: ("connected",),
}

# brute-force maximum-matching enumeration is only attempted up to this order
BRUTE_FORCE_ORDER = 8


# --------------------------------------------------------------------------
# universes


@dataclass(frozen=True)
class Universe:
    """A description of the graphs a check ran over."""

    max_order: int
    filter: tuple[str, ...]
    source: str
    min_order: int = 1

    def to_dict(self) -> dict:
        return {
            "min_order": self.min_order,
            "max_order": self.max_order,
            "filter": list(self.filter),
            "source": self.source,
        }


def generated_universe(max_n: int, filter: Iterable[str] = (), min_n: int = 1) -> tuple[Universe, Iterator[Graph]]:
    """Every isomorphism class of order ``min_n .. max_n`` passing ``filter``.

    Raises :class:`GenerationLimitError` immediately, not midway through a
    sweep, when ``max_n`` is beyond the generator's limit.
    """
    filt = tuple(sorted(filter))
    cap = _limit_for(frozenset(filt))
    if max_n > cap:
        raise GenerationLimitError(f"order {max_n} exceeds the internal generation limit {cap}; use --corpus")

    def graphs():
        for n in range(min_n, max_n + 1):
            yield from generate_nonisomorphic(n, filt)

    return Universe(max_n, filt, "generated", min_n), graphs()


def corpus_universe(
    path: str, max_n: int | None = None, filter: Iterable[str] = ()
) -> tuple[Universe, Iterator[Graph]]:
    """Graphs read from a graph6 file, optionally capped by order.

    ``filter`` records the hypothesis the corpus is meant to satisfy; graphs
    that do not are flagged by the checks rather than dropped here.
    """
    if not os.path.exists(path):
        raise FileNotFoundError(f"corpus {path!r} does not exist")
    filt = tuple(sorted(filter))

    def graphs():
        with open(path, encoding="ascii") as fh:
            for g in read_graph6(fh):
                if max_n is None or g.n <= max_n:
                    yield g

    return Universe(max_n if max_n is not None else 64, filt, f"corpus:{os.path.basename(path)}"), graphs()


# --------------------------------------------------------------------------
# reports


@dataclass
class VerificationReport:
    """Outcome of one check over one universe.

    ``violations`` holds graphs breaking the bound or a lemma assertion,
    ``equality_mismatches`` holds disagreements between "attains the bound"
    and "is a family member", ``flagged`` holds universe graphs that do not
    satisfy the check's hypothesis and ``excluded`` holds graphs the
    statement itself sets aside.
    """

    theorem: TheoremId
    universe: Universe
    graphs_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    equality_graphs: list[str] = field(default_factory=list)
    equality_mismatches: list[dict] = field(default_factory=list)
    flagged: list[dict] = field(default_factory=list)
    excluded: list[str] = field(default_factory=list)
    wall_time: float = 0.0
    orders: set[int] = field(default_factory=set, repr=False, compare=False)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.equality_mismatches

    def merge(self, other: VerificationReport) -> VerificationReport:
        """Combine reports of two shards; shard order is preserved."""
        if other.theorem is not self.theorem:
            raise ValueError(f"cannot merge {self.theorem.value} with {other.theorem.value}")
        uni = self.universe
        if other.universe != uni:
            uni = Universe(
                max(uni.max_order, other.universe.max_order),
                uni.filter,
                uni.source,
                min(uni.min_order, other.universe.min_order),
            )
        return VerificationReport(
            self.theorem,
            uni,
            self.graphs_checked + other.graphs_checked,
            self.violations + other.violations,
            self.equality_graphs + other.equality_graphs,
            self.equality_mismatches + other.equality_mismatches,
            self.flagged + other.flagged,
            self.excluded + other.excluded,
            self.wall_time + other.wall_time,
            self.orders | other.orders,
        )

    def summary(self) -> dict:
        return {
            "record": "summary",
            "theorem": self.theorem.value,
            "universe": self.universe.to_dict(),
            "graphs_checked": self.graphs_checked,
            "violations": len(self.violations),
            "equality_graphs": len(self.equality_graphs),
            "equality_mismatches": len(self.equality_mismatches),
            "flagged": len(self.flagged),
            "excluded": len(self.excluded),
            "ok": self.ok,
            "wall_time": round(self.wall_time, 3),
        }

    def records(self) -> Iterator[dict]:
        yield self.summary()
        for v in self.violations:
            yield {"record": "violation", **v}
        for g6 in self.equality_graphs:
            yield {"record": "equality", "graph6": g6}
        for m in self.equality_mismatches:
            yield {"record": "mismatch", **m}
        for f in self.flagged:
            yield {"record": "flagged", **f}
        for g6 in self.excluded:
            yield {"record": "excluded", "graph6": g6}

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records())


def format_summary(reports: Iterable[VerificationReport]) -> str:
    """Plain-text table, one row per report."""
    header = ("theorem", "universe", "checked", "violations", "equality", "mismatches", "flagged", "status", "seconds")
    rows = [header]
    for r in reports:
        u = r.universe
        filt = "+".join(u.filter) or "all"
        rows.append((
            r.theorem.value,
            f"n={u.min_order}..{u.max_order} {filt} ({u.source})",
            str(r.graphs_checked),
            str(len(r.violations)),
            str(len(r.equality_graphs)),
            str(len(r.equality_mismatches)),
            str(len(r.flagged)),
            "PASS" if r.ok else "FAIL",
            f"{r.wall_time:.2f}",
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows) + "\n"


# --------------------------------------------------------------------------
# shared helpers


def _hypothesis(g: Graph, filt: tuple[str, ...]) -> str | None:
    if "connected" in filt and (g.n == 0 or len(component_masks(g.adj, g.full)) != 1):
        return "not connected"
    if "triangle-free" in filt and has_triangle(g.adj):
        return "has a triangle"
    return None


def _moon_moser_extremal(g: Graph) -> bool:
    """Disjoint triangles plus, by order mod 3, nothing, one K4 or two K2s,
    or one K2."""
    sizes = []
    for c in component_masks(g.adj, g.full):
        k = c.bit_count()
        edges = sum((g.adj[v] & c).bit_count() for v in iter_bits(c)) // 2
        if edges != k * (k - 1) // 2:
            return False
        sizes.append(k)
    rest = sorted(k for k in sizes if k != 3)
    return rest in ([], [4], [2, 2], [2]) and g.n >= 2


def _moon_moser_members(n: int) -> list[Graph]:
    k3 = make_general_extremal(1, 0)
    r = n % 3
    if r == 0:
        return [disjoint_union([k3] * (n // 3))]
    if r == 1:
        m = (n - 4) // 3
        k2 = make_basic("complete", 2)
        return [disjoint_union([make_basic("complete", 4)] + [k3] * m), disjoint_union([k2, k2] + [k3] * m)]
    return [disjoint_union([make_basic("complete", 2)] + [k3] * ((n - 2) // 3))]


@dataclass(frozen=True)
class _BoundRule:
    bound: Callable[[Graph, int], int | None]  # (graph, mu) -> bound or None if vacuous
    member: Callable[[Graph, int], bool] | None  # equality family test, given mu
    constructed: Callable[[int], Iterable[Graph]] | None  # members of a given order
    excluded: Callable[[Graph], bool] | None = None


def _mu_bound(fn, minimum):
    return lambda g, mu: fn(mu) if mu >= minimum else None


def _order_bound(fn, minimum):
    return lambda g, mu: fn(g.n) if g.n >= minimum else None


def _family_rule(family: FamilyId, bound_fn, min_mu: int) -> _BoundRule:
    return _BoundRule(
        _mu_bound(bound_fn, min_mu),
        lambda g, mu: recognize(g, family, t=mu),
        lambda n: enumerate_family(family, n),
    )


def _thme_bound(g: Graph, mu: int):
    return bounds.chang_q(g.n) if g.n >= 4 else None


def _thme_member(g: Graph, mu: int) -> bool:
    return recognize(g, FamilyId.D_N)


def _thme_constructed(n: int):
    return enumerate_family(FamilyId.D_N, n) if n % 2 == 1 else ()


def _thme_excluded(g: Graph) -> bool:
    return recognize(g, FamilyId.A_N) or recognize(g, FamilyId.B_N)


RULES: dict[TheoremId, _BoundRule] = {
    TheoremId.THM1: _family_rule(FamilyId.GENERAL_T1, bounds.general_bound, 0),
    TheoremId.THM2: _family_rule(FamilyId.H_T, bounds.connected_bound_h, 1),
    TheoremId.THM3: _family_rule(FamilyId.M_T, bounds.trianglefree_bound_m, 1),
    TheoremId.THM4: _family_rule(FamilyId.F_T, bounds.connected_trianglefree_bound_f, 1),
    TheoremId.MOON_MOSER: _BoundRule(
        _order_bound(bounds.moon_moser, 2),
        lambda g, mu: _moon_moser_extremal(g),
        lambda n: _moon_moser_members(n) if n >= 2 else (),
    ),
    TheoremId.THMC: _BoundRule(_order_bound(bounds.griggs_c, 1), None, None),
    TheoremId.THMD: _BoundRule(
        _order_bound(bounds.hujter_bound, 4),
        lambda g, mu: recognize(g, FamilyId.A_N),
        lambda n: enumerate_family(FamilyId.A_N, n),
    ),
    # the equality clause is only claimed for odd orders
    TheoremId.THME_ODD: _BoundRule(_thme_bound, None, _thme_constructed, _thme_excluded),
}


# --------------------------------------------------------------------------
# per-graph checks; each returns (violations, equality graph6 or None, mismatches)


def _bound_graph(thm: TheoremId, g: Graph, g6: str, report: VerificationReport) -> None:
    rule = RULES[thm]
    if rule.excluded is not None and rule.excluded(g):
        report.excluded.append(g6)
        return
    mu = _mu(g.adj)
    b = rule.bound(g, mu)
    if b is None:
        return
    mis = count_mis(g)
    if mis > b:
        report.violations.append({"graph6": g6, "n": g.n, "mu": mu, "mis": mis, "bound": int(b)})
    member = rule.member
    if thm is TheoremId.THME_ODD and g.n % 2 == 1:
        member = _thme_member
    if mis == b:
        report.equality_graphs.append(g6)
        if member is not None and not member(g, mu):
            report.equality_mismatches.append(
                {"graph6": g6, "direction": "achieves-but-unrecognized", "source": "recognizer"}
            )
    elif member is not None and member(g, mu):
        report.equality_mismatches.append(
            {"graph6": g6, "direction": "recognized-but-below", "source": "recognizer"}
        )


def _fail(report: VerificationReport, g6: str, check: str, detail: str) -> None:
    report.violations.append({"graph6": g6, "check": check, "detail": detail})


def _lem21(g: Graph, g6: str, report: VerificationReport) -> None:
    m = maximum_matching(g)
    mu = len(m)
    mis = count_mis(g)
    core = _induced(g.adj, matched_vertices(m))
    core_is = count_independent_sets(Graph(len(core), core, check=False))
    if not mis <= core_is <= 3**mu:
        _fail(report, g6, "matched-core", f"mis={mis} i(core)={core_is} 3^mu={3**mu}")
    if mu >= 2 and not mis < 3**mu:
        _fail(report, g6, "strict", f"mis={mis} mu={mu}")


def _subsets_for(g: Graph, g6: str) -> Iterable[int]:
    if g.n <= 7:
        return range(1 << g.n)
    rng = random.Random(g6)
    return [rng.getrandbits(g.n) for _ in range(50)]


def _lem31(g: Graph, g6: str, report: VerificationReport) -> None:
    mis = count_mis(g)
    for s in _subsets_for(g, g6):
        rows = _induced(g.adj, s)
        sub = count_mis(Graph(len(rows), rows, check=False))
        if sub > mis:
            _fail(report, g6, "induced-subgraph", f"subset {s:#x} has {sub} > {mis}")
            return


def _all_maximum_matchings(adj, n: int) -> list[int]:
    """Every maximum matching, each as a tuple-free bitmask of edge ids."""
    found: list[tuple[tuple[int, int], ...]] = []
    best = [0]

    def rec(mask: int, chosen: list[tuple[int, int]]):
        if not mask:
            if len(chosen) > best[0]:
                best[0] = len(chosen)
                found.clear()
            if len(chosen) == best[0]:
                found.append(tuple(chosen))
            return
        # upper bound prune
        if len(chosen) + mask.bit_count() // 2 < best[0]:
            return
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        rec(rest, chosen)
        for u in iter_bits(adj[v] & rest):
            chosen.append((v, u))
            rec(rest & ~(1 << u), chosen)
            chosen.pop()

    rec((1 << n) - 1, [])
    return found


def _covered(m) -> int:
    mask = 0
    for u, v in m:
        mask |= (1 << u) | (1 << v)
    return mask


def _lem32(g: Graph, g6: str, report: VerificationReport) -> None:
    mu = _mu(g.adj)
    always = None
    if g.n <= BRUTE_FORCE_ORDER:
        always = g.full
        for m in _all_maximum_matchings(g.adj, g.n):
            always &= _covered(m)
    for v in range(g.n):
        mv = _mu_without(g.adj, v)
        if mv not in (mu - 1, mu):
            _fail(report, g6, "vertex-deletion", f"mu(G-{v})={mv}, mu={mu}")
        elif always is not None and (mv == mu - 1) != bool(always >> v & 1):
            _fail(report, g6, "saturation-dichotomy", f"vertex {v}")


def _lem33(g: Graph, g6: str, report: VerificationReport) -> None:
    mu = _mu(g.adj)
    for v in range(g.n):
        if _mu_without(g.adj, v) != mu - 1:
            continue
        for k in (1, 2):
            grown = add_pendant_vertices(g, v, k)
            if _mu(grown.adj) != mu:
                _fail(report, g6, "leaf-attachment", f"vertex {v}, {k} leaves")


def _thmb(g: Graph, g6: str, report: VerificationReport) -> None:
    ge = gallai_edmonds(g)
    d, a, c = ge.D.bits, ge.A.bits, ge.C.bits
    adj = g.adj
    dcomps = component_masks(adj, d)
    for comp in dcomps:
        rows = _induced(adj, comp)
        if not is_factor_critical(Graph(len(rows), rows, check=False)):
            _fail(report, g6, "D-factor-critical", f"component {comp:#x}")
    rows = _induced(adj, c)
    if not has_perfect_matching(Graph(len(rows), rows, check=False)):
        _fail(report, g6, "C-perfect", f"C={c:#x}")
    # surplus of every non-empty subset of A in the contracted bipartite graph
    avs = list(iter_bits(a))
    reach = [sum(1 << i for i, comp in enumerate(dcomps) if adj[x] & comp) for x in avs]
    for k in range(1, len(avs) + 1):
        for sub in combinations(range(len(avs)), k):
            nb = 0
            for i in sub:
                nb |= reach[i]
            if nb.bit_count() - k < 1:
                _fail(report, g6, "surplus", f"A-subset {[avs[i] for i in sub]}")
                break
    matchings = [tuple(maximum_matching(g))]
    if g.n <= BRUTE_FORCE_ORDER:
        matchings = _all_maximum_matchings(adj, g.n)
        # D read off from the definition, independently of the deletion test
        missed = 0
        for m in matchings:
            missed |= g.full & ~_covered(m)
        if missed != d:
            _fail(report, g6, "D-definition", f"deletion test {d:#x}, matchings {missed:#x}")
    for m in matchings:
        detail = _matching_structure(adj, m, a, c, dcomps)
        if detail:
            _fail(report, g6, "matching-structure", detail)
            break


def _matching_structure(adj, m, a: int, c: int, dcomps: list[int]) -> str | None:
    mate = {}
    for u, v in m:
        mate[u], mate[v] = v, u
    for x in iter_bits(c):
        if x not in mate or not c >> mate[x] & 1:
            return f"C vertex {x} not matched inside C"
    used = set()
    for x in iter_bits(a):
        y = mate.get(x)
        if y is None:
            return f"A vertex {x} unmatched"
        owner = next((i for i, comp in enumerate(dcomps) if comp >> y & 1), None)
        if owner is None:
            return f"A vertex {x} matched outside D"
        if owner in used:
            return f"two A vertices matched into D component {owner}"
        used.add(owner)
    for comp in dcomps:
        inside = sum(1 for x in iter_bits(comp) if x in mate and comp >> mate[x] & 1)
        if inside != comp.bit_count() - 1:
            return f"D component {comp:#x} not near-perfectly matched"
    return None


_LEMMA_FUNCS = {
    TheoremId.LEM21_STRICT: _lem21,
    TheoremId.LEM31: _lem31,
    TheoremId.LEM32: _lem32,
    TheoremId.LEM33: _lem33,
    TheoremId.THMB_PROPS: _thmb,
}


# --------------------------------------------------------------------------
# sweeping


def _sweep(thm: TheoremId, universe: Universe, graphs: Iterable[Graph]) -> VerificationReport:
    report = VerificationReport(thm, universe)
    filt = FILTERS[thm]
    lemma = _LEMMA_FUNCS.get(thm)
    start = time.perf_counter()
    for g in graphs:
        g6 = to_graph6(g)
        reason = _hypothesis(g, filt)
        if reason is not None:
            report.flagged.append({"graph6": g6, "reason": reason})
            continue
        report.graphs_checked += 1
        report.orders.add(g.n)
        if lemma is not None:
            lemma(g, g6, report)
        else:
            _bound_graph(thm, g, g6, report)
    report.wall_time = time.perf_counter() - start
    return report


def _sweep_shard(args) -> VerificationReport:
    thm, universe, lines = args
    return _sweep(thm, universe, (parse_graph6(s) for s in lines))


def _constructor_check(thm: TheoremId, report: VerificationReport) -> None:
    """Run the family constructors independently of the recognizers."""
    rule = RULES.get(thm)
    if rule is None or rule.constructed is None:
        return
    start = time.perf_counter()
    filt = FILTERS[thm]
    orders = sorted(report.orders)
    built: dict[int, set[bytes]] = {}
    for n in orders:
        certs = set()
        for h in rule.constructed(n):
            if _hypothesis(h, filt) is not None:
                continue
            certs.add(certificate(h))
            mu = _mu(h.adj)
            b = rule.bound(h, mu)
            if b is None:
                continue
            if count_mis(h) != b:
                report.equality_mismatches.append(
                    {"graph6": to_graph6(h), "direction": "recognized-but-below", "source": "constructor"}
                )
        built[n] = certs
    for g6 in report.equality_graphs:
        g = parse_graph6(g6)
        if thm is TheoremId.THME_ODD and g.n % 2 == 0:
            continue
        if certificate(g) not in built.get(g.n, ()):
            report.equality_mismatches.append(
                {"graph6": g6, "direction": "achieves-but-unrecognized", "source": "constructor"}
            )
    report.wall_time += time.perf_counter() - start


def run_check(
    thm: TheoremId | str,
    universe: Universe,
    graphs: Iterable[Graph],
    *,
    workers: int = 1,
    shard_size: int = 2000,
) -> VerificationReport:
    """Sweep ``graphs`` with the check named by ``thm``.

    With ``workers > 1`` the universe is cut into consecutive index ranges
    that are checked in separate processes and merged in order, so the
    result does not depend on the worker count.
    """
    thm = TheoremId(thm)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    start = time.perf_counter()
    if workers == 1:
        report = _sweep(thm, universe, graphs)
    else:
        lines = [to_graph6(g) for g in graphs]
        shards = [(thm, universe, lines[i:i + shard_size]) for i in range(0, len(lines), shard_size)]
        report = VerificationReport(thm, universe)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_sweep_shard, shards):
                report = report.merge(part)
    if thm in RULES:
        _constructor_check(thm, report)
    report.wall_time = time.perf_counter() - start
    return report


def check_bound_theorem(universe, thm: TheoremId | str, **kw) -> VerificationReport:
    """Bound and equality check for one of ``THM1`` .. ``THM4``.

    ``universe`` is either a ``(Universe, graphs)`` pair, as returned by
    :func:`generated_universe`, or a bare iterable of graphs.
    """
    thm = TheoremId(thm)
    if thm not in BOUND_THEOREMS:
        raise ValueError(f"{thm.value} is not a matching-number bound")
    return run_check(thm, *_split(universe, thm), **kw)


def check_lemma_suite(universe, lemma: TheoremId | str, **kw) -> VerificationReport:
    lemma = TheoremId(lemma)
    if lemma not in LEMMAS:
        raise ValueError(f"{lemma.value} is not a lemma suite")
    return run_check(lemma, *_split(universe, lemma), **kw)


def check_gallai_edmonds(universe, **kw) -> VerificationReport:
    return run_check(TheoremId.THMB_PROPS, *_split(universe, TheoremId.THMB_PROPS), **kw)


def check_order_bounds(universe, thm: TheoremId | str, **kw) -> VerificationReport:
    thm = TheoremId(thm)
    if thm not in ORDER_THEOREMS:
        raise ValueError(f"{thm.value} is not an order bound")
    return run_check(thm, *_split(universe, thm), **kw)


def _split(universe, thm: TheoremId) -> tuple[Universe, Iterable[Graph]]:
    if isinstance(universe, tuple) and len(universe) == 2 and isinstance(universe[0], Universe):
        return universe
    graphs = list(universe)
    top = max((g.n for g in graphs), default=0)
    low = min((g.n for g in graphs), default=1)
    return Universe(top, FILTERS[thm], "explicit", low), graphs
