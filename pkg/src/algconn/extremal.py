"""Graph classes, extremal reports and exhaustive theorem certification.

Every statement about "the graph minimizing/maximizing algebraic
connectivity over a class" is certified here by enumerating the class up
to isomorphism, computing the connectivity of each member, and comparing
the extremizer set against the claimed family by canonical form.
Randomized monotonicity checkers use fixed seeds so reruns are identical.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional

from .enumeration import (
    CONNECTED_CAP,
    TREE_CAP,
    UNICYCLIC_CAP,
    enumerate_connected,
    enumerate_trees,
    enumerate_unicyclic,
)
from .errors import CapExceededError, EmptyClassError, GraphError
from .families import FamilySpec, build_family
from .graph import (
    Graph,
    attach_paths,
    canonical_form,
    components_at,
    diameter,
    graft,
    is_cut_vertex,
    pendant_vertices,
)
from .perron import bottleneck
from .spectral import mu_value

TIE_TOL = 1e-9
CASES_PER_ORDER = 40

CLASS_IDS = ("H_nk", "T_nk", "F_n", "U_n", "Trees_diam", "AllConnected")


@dataclass(frozen=True)
class GraphClass:
    """A named class of connected graphs of one order.

    H_nk: connected with exactly k pendant vertices.  T_nk: trees with k
    pendant vertices.  F_n: pendant-free connected.  U_n: unicyclic.
    Trees_diam: trees of diameter exactly d.  AllConnected: everything.
    """

    class_id: str
    n: int
    k: Optional[int] = None
    d: Optional[int] = None

    def __str__(self) -> str:
        extra = ""
        if self.k is not None:
            extra = f", k={self.k}"
        if self.d is not None:
            extra = f", d={self.d}"
        return f"{self.class_id}(n={self.n}{extra})"


def class_members(c: GraphClass) -> Iterator[Graph]:
    """Stream the class, one representative per isomorphism class."""
    if c.class_id not in CLASS_IDS:
        raise GraphError(f"unknown class id {c.class_id!r}")
    if c.class_id == "H_nk":
        if c.k is None:
            raise GraphError("H_nk needs parameter k")
        if c.n > CONNECTED_CAP:
            raise CapExceededError(f"H_nk capped at n <= {CONNECTED_CAP}")
        return (
            g for g in enumerate_connected(c.n) if len(pendant_vertices(g)) == c.k
        )
    if c.class_id == "T_nk":
        if c.k is None:
            raise GraphError("T_nk needs parameter k")
        if c.n > TREE_CAP:
            raise CapExceededError(f"T_nk capped at n <= {TREE_CAP}")
        return (
            g for g in enumerate_trees(c.n) if len(pendant_vertices(g)) == c.k
        )
    if c.class_id == "F_n":
        if c.n > CONNECTED_CAP:
            raise CapExceededError(f"F_n capped at n <= {CONNECTED_CAP}")
        return (g for g in enumerate_connected(c.n) if not pendant_vertices(g))
    if c.class_id == "U_n":
        if c.n > UNICYCLIC_CAP:
            raise CapExceededError(f"U_n capped at n <= {UNICYCLIC_CAP}")
        return enumerate_unicyclic(c.n)
    if c.class_id == "Trees_diam":
        if c.d is None:
            raise GraphError("Trees_diam needs parameter d")
        if c.n > TREE_CAP:
            raise CapExceededError(f"Trees_diam capped at n <= {TREE_CAP}")
        return (g for g in enumerate_trees(c.n) if diameter(g) == c.d)
    if c.n > CONNECTED_CAP:
        raise CapExceededError(f"AllConnected capped at n <= {CONNECTED_CAP}")
    return enumerate_connected(c.n)


def claimed_family(c: GraphClass, objective: str) -> Optional[FamilySpec]:
    """The family the literature claims extremal for (class, objective)."""
    n, k, d = c.n, c.k, c.d
    cid = c.class_id
    if cid == "H_nk" and objective == "max":
        if (n, k) != (3, 1):
            return FamilySpec("p_n_k", (n, k))
    if cid == "H_nk" and objective == "min":
        if k == 1 and n >= 4:
            return FamilySpec("c3_tail", (n,))
        if k is not None and k >= 2:
            return FamilySpec("t_kld", ((k + 1) // 2, k // 2, n - k))
    if cid == "T_nk":
        if objective == "max":
            return FamilySpec("t_spider", (n, k))
        return FamilySpec("t_kld", ((k + 1) // 2, k // 2, n - k))
    if cid == "F_n" and objective == "min":
        if n >= 6:
            return FamilySpec("dumbbell", (n,))
        if n == 5:
            return FamilySpec("two_cycles", (n,))
        return FamilySpec("cycle", (n,))
    if cid == "F_n" and objective == "max":
        return FamilySpec("complete", (n,))
    if cid == "U_n" and objective == "min":
        if n >= 4:
            return FamilySpec("c3_tail", (n,))
        return FamilySpec("cycle", (n,))
    if cid == "U_n" and objective == "max":
        if n <= 6:
            return FamilySpec("cycle", (n,))
        return FamilySpec("p_n_k", (n, n - 3))
    if cid == "Trees_diam":
        if objective == "min":
            half = n - d + 1
            return FamilySpec("t_kld", ((half + 1) // 2, half // 2, d - 1))
        if n >= d + 2:
            return FamilySpec("t_broom", (n, d + 1))
        return FamilySpec("path", (n,))
    if cid == "AllConnected":
        if objective == "max":
            return FamilySpec("complete", (n,))
        return FamilySpec("path", (n,))
    return None


@dataclass(frozen=True)
class ExtremalReport:
    graph_class: GraphClass
    objective: str
    optimum: float
    extremizers: tuple[bytes, ...]
    extremizer_graphs: tuple[Graph, ...]
    claimed_family: Optional[FamilySpec]
    claimed_value: Optional[float]
    unique: bool
    class_size: int


@lru_cache(maxsize=1 << 18)
def _mu_cached(g: Graph) -> float:
    return mu_value(g)


def _mu_many(graphs: list[Graph], workers: int) -> list[float]:
    if workers <= 1 or len(graphs) < 4 * workers:
        return [_mu_cached(g) for g in graphs]
    from multiprocessing import get_context

    with get_context("fork").Pool(workers) as pool:
        return pool.map(mu_value, graphs, chunksize=64)


def extremal_mu(
    c: GraphClass,
    objective: str,
    *,
    tie_tol: float = TIE_TOL,
    workers: int = 1,
) -> ExtremalReport:
    """Optimum of the algebraic connectivity over a class, with extremizers.

    Extremizers collect every member within tie_tol of the optimum; the
    report also evaluates the claimed family registered for the query.
    Deterministic for any worker count: members arrive in canonical order
    and the merge never depends on scheduling.
    """
    if objective not in ("min", "max"):
        raise GraphError(f"objective must be 'min' or 'max', got {objective!r}")
    members = list(class_members(c))
    if not members:
        raise EmptyClassError(f"class {c} is empty")
    values = _mu_many(members, workers)
    optimum = min(values) if objective == "min" else max(values)
    pairs = [
        (g, v) for g, v in zip(members, values) if abs(v - optimum) <= tie_tol
    ]
    spec = claimed_family(c, objective)
    claimed_value = _mu_cached(build_family(spec)) if spec is not None else None
    return ExtremalReport(
        graph_class=c,
        objective=objective,
        optimum=optimum,
        extremizers=tuple(canonical_form(g) for g, _ in pairs),
        extremizer_graphs=tuple(g for g, _ in pairs),
        claimed_family=spec,
        claimed_value=claimed_value,
        unique=len(pairs) == 1,
        class_size=len(members),
    )


# ---------------------------------------------------------------------------
# Theorem checkers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CaseResult:
    label: str
    status: str  # "pass" | "fail" | "vacuous"
    detail: str = ""
    counterexample: Optional[Graph] = None


@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    cases: tuple[CaseResult, ...]

    @property
    def status(self) -> str:
        statuses = {c.status for c in self.cases}
        if "fail" in statuses:
            return "fail"
        if "pass" in statuses:
            return "pass"
        return "vacuous"

    def counterexamples(self) -> list[Graph]:
        return [c.counterexample for c in self.cases if c.counterexample]


def _case(label: str, ok: bool, detail: str, bad: Optional[Graph] = None) -> CaseResult:
    return CaseResult(
        label=label,
        status="pass" if ok else "fail",
        detail=detail,
        counterexample=None if ok else bad,
    )


def _vacuous(label: str, why: str) -> CaseResult:
    return CaseResult(label=label, status="vacuous", detail=why)


def _unique_extremizer_case(
    label: str, c: GraphClass, objective: str, expect: Graph
) -> CaseResult:
    try:
        report = extremal_mu(c, objective)
    except EmptyClassError:
        return _vacuous(label, "class is empty")
    want = canonical_form(expect)
    if report.extremizers == (want,):
        return _case(label, True, f"unique optimum {report.optimum:.12g}")
    bad = next(
        (g for g in report.extremizer_graphs if canonical_form(g) != want),
        report.extremizer_graphs[0],
    )
    return _case(
        label,
        False,
        f"extremizers {len(report.extremizers)}, optimum {report.optimum:.12g}",
        bad,
    )


def _feasible_pendant_counts(n: int) -> list[int]:
    return [k for k in range(1, n) if (n, k) != (3, 1)]


def _chained_star(n: int, k: int) -> Graph:
    """Star plus a path threaded through n-k-1 of its leaves.

    Keeps exactly k pendant vertices and algebraic connectivity one, yet is
    not isomorphic to the clique-with-pendants graph once n >= 5.
    """
    g = build_family(FamilySpec("star", (n,)))
    extra = [(i, i + 1) for i in range(1, n - k - 1)]
    return Graph(n, list(g.edges) + extra)


def _check_thm_4_2(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 3:
        return [_vacuous(f"n={n}", "needs n >= 3")]
    out = []
    ks = [k] if k is not None else _feasible_pendant_counts(n)
    for kk in ks:
        label = f"n={n},k={kk}"
        if (n, kk) == (3, 1):
            out.append(_vacuous(label, "no order-3 graph has one pendant vertex"))
            continue
        if kk == n - 2:
            out.append(_vacuous(label, "k = n-2 is the tree case"))
            continue
        c = GraphClass("H_nk", n, k=kk)
        try:
            report = extremal_mu(c, "max")
        except EmptyClassError:
            out.append(_vacuous(label, "class is empty"))
            continue
        family = canonical_form(build_family(FamilySpec("p_n_k", (n, kk))))
        ok = abs(report.optimum - 1.0) <= TIE_TOL and family in report.extremizers
        detail = f"max {report.optimum:.12g}, extremizers {len(report.extremizers)}"
        if ok and kk in (n - 1, n - 3):
            ok = report.unique
            detail += ", uniqueness expected"
        elif ok and 1 <= kk <= n - 4:
            rival = _chained_star(n, kk)
            ok = (
                not report.unique
                and canonical_form(rival) in report.extremizers
                and canonical_form(rival) != family
            )
            detail += ", tie with chained star expected"
        out.append(_case(label, ok, detail))
    return out


def _check_thm_4_3(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 4:
        return [_vacuous(f"n={n}", "needs n >= 4")]
    expect = build_family(FamilySpec("p_n_k", (n, n - 2)))
    return [
        _unique_extremizer_case(
            f"n={n}", GraphClass("H_nk", n, k=n - 2), "max", expect
        )
    ]


def _check_thm_4_4(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 4:
        return [_vacuous(f"n={n}", "needs n >= 4")]
    expect = build_family(FamilySpec("c3_tail", (n,)))
    out = [
        _unique_extremizer_case(f"n={n}", GraphClass("H_nk", n, k=1), "min", expect)
    ]
    if n == 5:
        c4_pendant = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
        mu_c4 = _mu_cached(c4_pendant)
        mu_c3 = _mu_cached(build_family(FamilySpec("c3_tail", (5,))))
        ok = (
            abs(mu_c4 - 0.8299) <= 5e-4
            and abs(mu_c3 - 0.5188) <= 5e-4
            and mu_c4 > mu_c3
        )
        out.append(
            _case("n=5 numeric chain", ok, f"mu(C4+pendant)={mu_c4:.6f}, mu(C3 tail)={mu_c3:.6f}")
        )
    return out


def _check_thm_4_5(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 3:
        return [_vacuous(f"n={n}", "needs n >= 3")]
    out = []
    ks = [k] if k is not None else [kk for kk in range(2, n)]
    for kk in ks:
        if kk < 2:
            out.append(_vacuous(f"n={n},k={kk}", "needs k >= 2"))
            continue
        expect = build_family(FamilySpec("t_kld", ((kk + 1) // 2, kk // 2, n - kk)))
        out.append(
            _unique_extremizer_case(
                f"n={n},k={kk}", GraphClass("H_nk", n, k=kk), "min", expect
            )
        )
    return out


def _check_thm_4_7(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 3:
        return [_vacuous(f"n={n}", "needs n >= 3")]
    out = []
    ks = [k] if k is not None else [kk for kk in range(2, n)]
    for kk in ks:
        expect = build_family(FamilySpec("t_spider", (n, kk)))
        out.append(
            _unique_extremizer_case(
                f"n={n},k={kk}", GraphClass("T_nk", n, k=kk), "max", expect
            )
        )
    return out


def _check_prop_2_1(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 3:
        return [_vacuous(f"n={n}", "needs n >= 3")]
    out = []
    for dia in range(2, n):
        c = GraphClass("Trees_diam", n, d=dia)
        expect = build_family(claimed_family(c, "min"))
        out.append(_unique_extremizer_case(f"n={n},diam={dia}", c, "min", expect))
    return out


def _check_prop_2_2(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 3:
        return [_vacuous(f"n={n}", "needs n >= 3")]
    out = []
    for dia in range(2, n):
        c = GraphClass("Trees_diam", n, d=dia)
        expect = build_family(claimed_family(c, "max"))
        out.append(_unique_extremizer_case(f"n={n},diam={dia}", c, "max", expect))
    return out


def _rng_for(theorem_id: str, n: int) -> random.Random:
    return random.Random(f"{theorem_id}:{n}")


def _random_tree(rng: random.Random, n: int) -> Graph:
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def _random_connected(rng: random.Random, n: int, max_extra: int = 3) -> Graph:
    g = _random_tree(rng, n)
    free = [
        (u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)
    ]
    rng.shuffle(free)
    extra = rng.randint(0, min(max_extra, len(free)))
    return Graph(n, list(g.edges) + free[:extra])


def _check_prop_2_3(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 2:
        return [_vacuous(f"n={n}", "needs base order >= 2")]
    rng = _rng_for("PROP_2_3", n)
    worst = 0.0
    for _ in range(CASES_PER_ORDER):
        base = _random_tree(rng, n)
        v = rng.randrange(n)
        kk = rng.randint(1, 3)
        ll = rng.randint(kk, 3)
        att = attach_paths(base, v, kk, ll)
        grafted = graft(att)
        before = mu_value(att.graph)
        after = mu_value(grafted.graph)
        worst = max(worst, after - before)
        if after > before + 1e-9:
            return [
                _case(
                    f"n={n}",
                    False,
                    f"graft increased mu by {after - before:.3e}",
                    att.graph,
                )
            ]
    return [_case(f"n={n}", True, f"{CASES_PER_ORDER} grafts, max increase {worst:.3e}")]


def _pendant_fan_variants(g: Graph, v: int, t: int, rng: random.Random) -> list[Graph]:
    """g plus t pendants at v, then each count of extra edges among them."""
    n = g.n
    new = list(range(n, n + t))
    base_edges = list(g.edges) + [(v, w) for w in new]
    pairs = [(a, b) for i, a in enumerate(new) for b in new[i + 1 :]]
    out = []
    for count in range(len(pairs) + 1):
        chosen = rng.sample(pairs, count)
        out.append(Graph(n + t, base_edges + chosen))
    return out


def _check_thm_3_5(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 2:
        return [_vacuous(f"n={n}", "needs n >= 2")]
    rng = _rng_for("THM_3_5", n)
    worst = 0.0
    cases = 0
    attempts = 0
    while cases < CASES_PER_ORDER and attempts < 20 * CASES_PER_ORDER:
        attempts += 1
        g = _random_connected(rng, n)
        non_cut = [v for v in range(n) if not is_cut_vertex(g, v)]
        if not non_cut:
            continue
        v = rng.choice(non_cut)
        t = rng.randint(1, 4)
        variants = _pendant_fan_variants(g, v, t, rng)
        reference = mu_value(variants[0])
        for variant in variants[1:]:
            spread = abs(mu_value(variant) - reference)
            worst = max(worst, spread)
            if spread > 1e-9:
                return [
                    _case(
                        f"n={n}",
                        False,
                        f"pendant fan completion moved mu by {spread:.3e}",
                        variant,
                    )
                ]
        cases += 1
    return [_case(f"n={n}", True, f"{cases} fans, max spread {worst:.3e}")]


def _check_lemma_5_1(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 6:
        return [_vacuous(f"n={n}", "needs n >= 6")]
    g = build_family(FamilySpec("two_cycles", (n,)))
    mu = mu_value(g)
    mu_cycle = 2.0 * (1.0 - math.cos(2.0 * math.pi / n))
    if n % 2 == 1:
        want = 2.0 * (1.0 - math.cos(2.0 * math.pi / (n + 1)))
        ok = abs(mu - want) <= 1e-9 and mu < mu_cycle
        detail = f"mu={mu:.12g} (closed form), cycle {mu_cycle:.12g}"
    else:
        lower = 2.0 * (1.0 - math.cos(2.0 * math.pi / (n + 2)))
        ok = lower < mu < mu_cycle
        detail = f"{lower:.12g} < mu={mu:.12g} < {mu_cycle:.12g}"
    return [_case(f"n={n}", ok, detail, None if ok else g)]


def _check_thm_5_2(n: int, k: Optional[int]) -> list[CaseResult]:
    if n == 5:
        mu_two = _mu_cached(build_family(FamilySpec("two_cycles", (5,))))
        mu_cycle = _mu_cached(build_family(FamilySpec("cycle", (5,))))
        ok = abs(mu_two - 1.0) <= 1e-9 and mu_cycle > mu_two
        return [
            _case("n=5 comparison", ok, f"mu(two cycles)={mu_two:.9f} < mu(C5)={mu_cycle:.9f}")
        ]
    if n < 6:
        return [_vacuous(f"n={n}", "needs n >= 6")]
    expect = build_family(FamilySpec("dumbbell", (n,)))
    return [_unique_extremizer_case(f"n={n}", GraphClass("F_n", n), "min", expect)]


def _check_thm_6_1(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 4:
        return [_vacuous(f"n={n}", "only one unicyclic graph below order 4")]
    c = GraphClass("U_n", n)
    if n <= 5:
        expect = build_family(FamilySpec("cycle", (n,)))
        return [_unique_extremizer_case(f"n={n}", c, "max", expect)]
    if n == 6:
        report = extremal_mu(c, "max")
        want = {
            canonical_form(build_family(FamilySpec("cycle", (6,)))),
            canonical_form(build_family(FamilySpec("p_n_k", (6, 3)))),
        }
        ok = set(report.extremizers) == want and abs(report.optimum - 1.0) <= TIE_TOL
        return [
            _case(
                "n=6 tie",
                ok,
                f"extremizers {len(report.extremizers)}, optimum {report.optimum:.12g}",
            )
        ]
    expect = build_family(FamilySpec("p_n_k", (n, n - 3)))
    return [_unique_extremizer_case(f"n={n}", c, "max", expect)]


def _check_thm_6_2(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 4:
        return [_vacuous(f"n={n}", "only one unicyclic graph below order 4")]
    expect = build_family(FamilySpec("c3_tail", (n,)))
    out = [_unique_extremizer_case(f"n={n}", GraphClass("U_n", n), "min", expect)]
    if n == 5:
        h = Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])
        table = [
            (build_family(FamilySpec("c3_tail", (5,))), 0.5188, 5e-4),
            (h, 0.6972, 5e-4),
            (Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]), 0.8299, 5e-4),
            (build_family(FamilySpec("p_n_k", (5, 2))), 1.0, 1e-9),
        ]
        bad = [
            f"{want}!={_mu_cached(g):.6f}"
            for g, want, tol in table
            if abs(_mu_cached(g) - want) > tol
        ]
        out.append(
            _case("n=5 table", not bad, "; ".join(bad) if bad else "all four values match")
        )
    return out


def _check_lemma_1_1(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 2:
        return [_vacuous(f"n={n}", "needs n >= 2")]
    rng = _rng_for("LEMMA_1_1", n)
    for _ in range(CASES_PER_ORDER):
        g = _random_connected(rng, n)
        v = rng.randrange(n)
        bigger = Graph(n + 1, list(g.edges) + [(v, n)])
        if mu_value(bigger) > mu_value(g) + 1e-9:
            return [_case(f"n={n}", False, "pendant vertex raised mu", g)]
    return [_case(f"n={n}", True, f"{CASES_PER_ORDER} pendant additions")]


def _check_lemma_1_2(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 3:
        return [_vacuous(f"n={n}", "needs n >= 3")]
    rng = _rng_for("LEMMA_1_2", n)
    cases = 0
    attempts = 0
    while cases < CASES_PER_ORDER and attempts < 20 * CASES_PER_ORDER:
        attempts += 1
        g = _random_connected(rng, n)
        free = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not g.has_edge(u, v)
        ]
        if not free:
            continue
        u, v = rng.choice(free)
        if mu_value(g.with_edge(u, v)) < mu_value(g) - 1e-9:
            return [_case(f"n={n}", False, "edge addition lowered mu", g)]
        cases += 1
    return [_case(f"n={n}", True, f"{cases} edge additions")]


def _check_cor_3_2(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 3:
        return [_vacuous(f"n={n}", "needs n >= 3")]
    rng = _rng_for("COR_3_2", n)
    cases = 0
    attempts = 0
    while cases < CASES_PER_ORDER and attempts < 20 * CASES_PER_ORDER:
        attempts += 1
        g = _random_connected(rng, n, max_extra=2)
        if not any(is_cut_vertex(g, v) for v in range(n)):
            continue
        if mu_value(g) > 1.0 + 1e-10:
            return [_case(f"n={n}", False, "cut vertex but mu > 1", g)]
        cases += 1
    return [_case(f"n={n}", True, f"{cases} graphs with cut vertices")]


def _is_clique_closed(g: Graph, v: int, comp: frozenset[int]) -> bool:
    verts = sorted(comp | {v})
    return all(
        g.has_edge(a, b) for i, a in enumerate(verts) for b in verts[i + 1 :]
    )


def _check_lemma_3_1(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 3:
        return [_vacuous(f"n={n}", "needs n >= 3")]
    rng = _rng_for("LEMMA_3_1", n)
    checked = 0
    for _ in range(CASES_PER_ORDER):
        g = _random_connected(rng, n)
        v = rng.randrange(n)
        # Glue a clique of 2..4 new vertices at v to guarantee a closed component.
        t = rng.randint(2, 4)
        new = list(range(n, n + t))
        edges = list(g.edges) + [(v, w) for w in new]
        edges += [(a, b) for i, a in enumerate(new) for b in new[i + 1 :]]
        big = Graph(n + t, edges)
        for comp in components_at(big, v).components:
            if _is_clique_closed(big, v, comp):
                checked += 1
                rho = bottleneck(big, v, comp).perron_value
                if abs(rho - 1.0) > 1e-9:
                    return [
                        _case(f"n={n}", False, f"clique-closed component rho={rho}", big)
                    ]
    return [_case(f"n={n}", True, f"{checked} clique-closed components at rho=1")]


def _check_lemma_3_4(n: int, k: Optional[int]) -> list[CaseResult]:
    if n < 3:
        return [_vacuous(f"n={n}", "needs n >= 3")]
    rng = _rng_for("LEMMA_3_4", n)
    checked = 0
    for _ in range(CASES_PER_ORDER):
        g = _random_connected(rng, n)
        for v in range(n):
            if is_cut_vertex(g, v):
                continue
            comp = components_at(g, v).components[0]
            rho = bottleneck(g, v, comp).perron_value
            checked += 1
            if rho < 1.0 - 1e-10:
                return [
                    _case(f"n={n}", False, f"non-cut vertex with rho={rho} < 1", g)
                ]
    return [_case(f"n={n}", True, f"{checked} non-cut vertices with rho >= 1")]


CHECKERS: dict[str, Callable[[int, Optional[int]], list[CaseResult]]] = {
    "THM_4_2": _check_thm_4_2,
    "REMARK_4_3": _check_thm_4_2,
    "THM_4_3": _check_thm_4_3,
    "THM_4_4": _check_thm_4_4,
    "THM_4_5": _check_thm_4_5,
    "THM_4_7": _check_thm_4_7,
    "PROP_2_1": _check_prop_2_1,
    "PROP_2_2": _check_prop_2_2,
    "PROP_2_3": _check_prop_2_3,
    "THM_3_5": _check_thm_3_5,
    "LEMMA_5_1": _check_lemma_5_1,
    "THM_5_2": _check_thm_5_2,
    "THM_6_1": _check_thm_6_1,
    "THM_6_2": _check_thm_6_2,
    "LEMMA_1_1": _check_lemma_1_1,
    "LEMMA_1_2": _check_lemma_1_2,
    "COR_3_2": _check_cor_3_2,
    "LEMMA_3_1": _check_lemma_3_1,
    "LEMMA_3_4": _check_lemma_3_4,
}


def theorem_ids() -> list[str]:
    return sorted(CHECKERS)


def verify_theorem(
    theorem_id: str, n_min: int, n_max: int, k: Optional[int] = None
) -> VerificationReport:
    """Run the registered checker for every order in [n_min, n_max]."""
    if theorem_id not in CHECKERS:
        raise GraphError(f"unknown theorem id {theorem_id!r}")
    if n_min > n_max:
        raise GraphError(f"empty order range {n_min}..{n_max}")
    checker = CHECKERS[theorem_id]
    cases: list[CaseResult] = []
    for n in range(n_min, n_max + 1):
        cases.extend(checker(n, k))
    return VerificationReport(theorem_id=theorem_id, cases=tuple(cases))
