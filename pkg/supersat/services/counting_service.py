# supersat/services/counting_service.py
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from supersat.config import check_guardrail, setting
from supersat.errors import BudgetExceededError, DivisibilityError, NotColorCriticalError, SupersatError
from supersat.models import (
    CheckReport,
    CheckStatus,
    ColoringProfile,
    CountMethod,
    CountReport,
    Edge,
    Graph,
    PatternProfile,
    VertexPartition,
    normalize_edge,
)
from supersat.services.graph_core import build_turan_plus_edge, turan_part_sizes
from supersat.utils.time_helpers import stopwatch

logger = logging.getLogger(__name__)

# pair predicate on host vertices: True means the image edge is not allowed
PairFilter = Callable[[int, int], bool]


# =========================================================
# Edge-preserving injections
# =========================================================
def _placement_order(pattern: Graph, fixed: Sequence[int]) -> list[int]:
    """Fixed vertices first, then greedily the vertex with most already-placed neighbours."""
    order = list(fixed)
    placed = set(order)
    remaining = [v for v in range(pattern.n) if v not in placed]
    while remaining:
        best = max(
            remaining,
            key=lambda v: (sum(1 for w in pattern.adjacency[v] if w in placed), pattern.degrees[v], -v),
        )
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order


class InjectionSearch:
    """Backtracking over partial maps V(F) -> V(G) that keep every pattern edge on a host edge.

    Each attempted extension of a partial map is charged against the budget.
    """

    def __init__(
        self,
        pattern: Graph,
        host: Graph,
        *,
        fixed: dict[int, int] | None = None,
        forbid: PairFilter | None = None,
        budget: int | None = None,
    ):
        self.pattern = pattern
        self.host = host
        self.fixed = dict(fixed or {})
        self.forbid = forbid
        self.budget = int(budget if budget is not None else setting("COUNT_BUDGET"))
        self.extensions = 0
        self.order = _placement_order(pattern, list(self.fixed))
        position = {v: i for i, v in enumerate(self.order)}
        # for each vertex, the pattern neighbours placed before it
        self.back = [
            tuple(w for w in pattern.adjacency[v] if position[w] < position[v]) for v in self.order
        ]

    def _charge(self, found: int) -> None:
        self.extensions += 1
        if self.extensions > self.budget:
            raise BudgetExceededError(
                f"injection search exceeded the budget of {self.budget} extensions", lower_bound=found
            )

    def _candidates(self, depth: int, image: list[int], used: set[int]) -> Iterable[int]:
        v = self.order[depth]
        if v in self.fixed:
            return (self.fixed[v],)
        back = self.back[depth]
        need = self.pattern.degrees[v]
        if back:
            anchors = sorted((image[w] for w in back), key=lambda h: self.host.degrees[h])
            pool = set(self.host.neighbor_sets[anchors[0]])
            for h in anchors[1:]:
                pool &= self.host.neighbor_sets[h]
            pool -= used
            return sorted(c for c in pool if self.host.degrees[c] >= need)
        return [c for c in range(self.host.n) if c not in used and self.host.degrees[c] >= need]

    def _admissible(self, depth: int, candidate: int, image: list[int], used: set[int]) -> bool:
        if candidate in used or not 0 <= candidate < self.host.n:
            return False
        for w in self.back[depth]:
            target = image[w]
            if not self.host.has_edge(candidate, target):
                return False
            if self.forbid is not None and not self._is_fixed_edge(self.order[depth], w) \
                    and self.forbid(candidate, target):
                return False
        return True

    def _is_fixed_edge(self, u: int, v: int) -> bool:
        return u in self.fixed and v in self.fixed

    def count(self, limit: int | None = None) -> int:
        """Number of injections, stopping early once `limit` have been found."""
        if self.pattern.n > self.host.n:
            return 0
        image = [-1] * self.pattern.n
        used: set[int] = set()
        found = 0
        depth_max = self.pattern.n

        def extend(depth: int) -> bool:
            nonlocal found
            if depth == depth_max:
                found += 1
                return limit is not None and found >= limit
            v = self.order[depth]
            for candidate in self._candidates(depth, image, used):
                self._charge(found)
                if not self._admissible(depth, candidate, image, used):
                    continue
                image[v] = candidate
                used.add(candidate)
                stop = extend(depth + 1)
                used.discard(candidate)
                image[v] = -1
                if stop:
                    return True
            return False

        if depth_max == 0:
            return 1
        extend(0)
        return found


def count_injections(
    pattern: Graph,
    host: Graph,
    *,
    fixed: dict[int, int] | None = None,
    forbid: PairFilter | None = None,
    budget: int | None = None,
) -> int:
    """Edge-preserving injections V(F) -> V(G), counted without any division."""
    return InjectionSearch(pattern, host, fixed=fixed, forbid=forbid, budget=budget).count()


def _pattern_graph(pattern: PatternProfile | Graph) -> Graph:
    return pattern.graph if isinstance(pattern, PatternProfile) else pattern.normalize()


def _aut(pattern: PatternProfile | Graph, budget: int | None) -> int:
    if isinstance(pattern, PatternProfile):
        return pattern.aut
    graph = pattern.normalize()
    return count_injections(graph, graph, budget=budget)


def _check_pattern_size(graph: Graph, override: bool) -> None:
    check_guardrail("COUNT_MAX_PATTERN", graph.n, override=override, what="pattern order")


def contains_copy(host: Graph, pattern: PatternProfile | Graph, budget: int | None = None) -> bool:
    graph = _pattern_graph(pattern)
    return InjectionSearch(graph, host, budget=budget).count(limit=1) > 0


def _divide(injections: int, aut: int, what: str) -> int:
    copies, rest = divmod(injections, aut)
    if rest:
        raise DivisibilityError(f"{what}: {injections} injections are not divisible by |Aut(F)| = {aut}")
    return copies


def count_copies(
    host: Graph,
    pattern: PatternProfile | Graph,
    *,
    budget: int | None = None,
    override: bool = False,
) -> int:
    """N_F(G): subgraphs of G isomorphic to F, as injections / |Aut(F)|."""
    graph = _pattern_graph(pattern)
    _check_pattern_size(graph, override)
    aut = _aut(pattern, budget)
    try:
        injections = count_injections(graph, host, budget=budget)
    except BudgetExceededError as exc:
        exc.lower_bound //= aut
        raise
    return _divide(injections, aut, "count_copies")


def count_copies_through_edge(
    host: Graph,
    pattern: PatternProfile | Graph,
    edge: Sequence[int],
    exclusive_within: VertexPartition | None = None,
    *,
    budget: int | None = None,
    override: bool = False,
) -> int:
    """Copies of F whose edge set contains e.

    With a partition, only copies whose sole intra-part edge is e are counted.
    """
    u, v = normalize_edge(int(edge[0]), int(edge[1]))
    if not host.has_edge(u, v):
        raise SupersatError(f"edge ({u}, {v}) is not in the host graph")
    graph = _pattern_graph(pattern)
    _check_pattern_size(graph, override)

    forbid: PairFilter | None = None
    if exclusive_within is not None:
        if not exclusive_within.same_part(u, v):
            raise SupersatError(f"edge ({u}, {v}) is not inside a part of the given partition")
        forbid = exclusive_within.same_part

    aut = _aut(pattern, budget)
    total = 0
    for a, b in graph.sorted_edges:
        for x, y in ((u, v), (v, u)):
            total += count_injections(graph, host, fixed={a: x, b: y}, forbid=forbid, budget=budget)
    return _divide(total, aut, "count_copies_through_edge")


# =========================================================
# Exact formula for c(n, F)
# =========================================================
def falling_factorial(x: Fraction | int, k: int) -> Fraction:
    if k < 0:
        raise SupersatError(f"falling factorial length must be nonnegative, got {k}")
    x = Fraction(x)
    result = Fraction(1)
    for i in range(k):
        result *= x - i
    return result


def coloring_contribution(profile: ColoringProfile, n: int, r: int) -> Fraction:
    """2 (n/r - 2)_{tau1} * prod_{i>=2} (n/r)_{tau_i}."""
    if r < 1 or n % r:
        raise DivisibilityError(f"the exact formula needs r | n (n = {n}, r = {r}); use the brute-force count")
    if len(profile.tau) != r:
        raise SupersatError(f"coloring uses {len(profile.tau)} classes, expected r = {r}")
    q = Fraction(n, r)
    value = 2 * falling_factorial(q - 2, profile.tau[0])
    for tau in profile.tau[1:]:
        value *= falling_factorial(q, tau)
    return value


def _require_critical(profile: PatternProfile) -> None:
    if not profile.is_color_critical:
        raise NotColorCriticalError(f"{profile.label} is not color-critical")
    if profile.chi < 3:
        raise NotColorCriticalError(f"{profile.label} has chromatic number {profile.chi}; need at least 3")


def c_exact(n: int, profile: PatternProfile) -> int:
    """c(n, F) = (1/|Aut F|) * sum over good edges and their colorings of the contribution."""
    _require_critical(profile)
    r = profile.r
    if n % r:
        raise DivisibilityError(f"the exact formula needs r | n (n = {n}, r = {r}); use c_bruteforce")
    if n // r < 2:
        raise SupersatError(f"the exact formula needs n/r >= 2, got n = {n}, r = {r}")
    total = sum(
        (coloring_contribution(c, n, r) for cs in profile.colorings.values() for c in cs),
        Fraction(0),
    )
    value = total / profile.aut
    if value.denominator != 1 or value < 0:
        raise DivisibilityError(f"c({n}, {profile.label}) evaluated to {value}, not a nonnegative integer")
    return int(value)


def c_bruteforce(
    n: int,
    profile: PatternProfile,
    *,
    budget: int | None = None,
    override: bool = False,
) -> int:
    """min over parts of T_{n,r} of N_F(T_{n,r} + one edge inside that part)."""
    r = profile.r
    if r < 1:
        raise SupersatError(f"{profile.label} has no edges to count")
    sizes = turan_part_sizes(n, r)
    # parts of equal size give isomorphic hosts
    representatives = {}
    for index, size in enumerate(sizes):
        if size >= 2:
            representatives.setdefault(size, index)
    if not representatives:
        raise SupersatError(f"T_{{{n},{r}}} has no part that can take an extra edge")
    counts = {}
    for size, index in sorted(representatives.items()):
        host = build_turan_plus_edge(n, r, part=index).graph
        counts[size] = count_copies(host, profile, budget=budget, override=override)
    logger.debug("c_bruteforce(%d, %s): per part size %s", n, profile.label, counts)
    return min(counts.values())


def alpha_exact(profile: PatternProfile) -> Fraction:
    """Leading coefficient of c(n, F) in n^(f-2): 2 * #colorings / (r^(f-2) |Aut F|)."""
    _require_critical(profile)
    return Fraction(2 * profile.coloring_count(), profile.r ** (profile.f - 2) * profile.aut)


def c_value(n: int, profile: PatternProfile, *, budget: int | None = None, override: bool = False) -> tuple[int, CountMethod]:
    """c(n, F) by the formula when it applies, else by brute force."""
    if n % profile.r == 0 and n // profile.r >= 2:
        return c_exact(n, profile), CountMethod.FORMULA
    return c_bruteforce(n, profile, budget=budget, override=override), CountMethod.BRUTE_FORCE


def alpha_residual_scan(profile: PatternProfile, n_values: Iterable[int]) -> CheckReport:
    """Tabulates |c(n,F) - alpha n^(f-2)| / n^(f-3) and tests alpha n^(f-2)/2 < c(n,F) < 2 alpha n^(f-2).

    Points where the two-sided bound fails are listed as findings; small n is allowed to fail.
    """
    alpha = alpha_exact(profile)
    f, r = profile.f, profile.r
    rows = []
    findings = []
    for n in n_values:
        if n % r:
            raise DivisibilityError(f"n = {n} is not divisible by r = {r}")
        value, method = c_value(n, profile)
        lead = alpha * n ** (f - 2)
        residual = abs(value - lead) / Fraction(n) ** (f - 3)
        holds = lead / 2 < value < 2 * lead
        rows.append({
            "n": n,
            "c": value,
            "method": method.value,
            "leading_term": lead,
            "residual": residual,
            "ratio": float(value / lead) if lead else None,
            "sandwich": holds,
        })
        if not holds:
            findings.append(n)
    return CheckReport(
        "alpha-sandwich",
        CheckStatus.FAIL if findings else CheckStatus.PASS,
        margins={"max_residual": float(max((row["residual"] for row in rows), default=0))},
        first_violation={"n": findings[0]} if findings else None,
        details={"pattern": profile.label, "alpha": alpha, "rows": rows, "findings": findings},
    )


# =========================================================
# Reports
# =========================================================
def count_report(quantity: str, compute: Callable[[], int | Fraction], method: CountMethod,
                 pattern: str, host: str) -> CountReport:
    with stopwatch() as elapsed:
        value = compute()
    return CountReport(quantity, value, method, pattern, host, elapsed[0])
