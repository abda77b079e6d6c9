"""Ground-truth adjudication for pairs of circulant graphs.

Cheap invariants (degree, edge count, triangles, bipartiteness) screen
out obvious non-isomorphisms; an exhaustive backtracking search settles
the rest.  classify_pair layers the structured witnesses first, so the
expensive search only runs when no unit multiplier or residue shift
explains the pair.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .adams import type1_contains
from .classification import (
    Classification,
    IDENTICAL,
    ISOMORPHIC_OTHER,
    NOT_ISOMORPHIC,
    TYPE1,
    TYPE1_AFTER_TYPE2,
    TYPE2,
)
from .core import (
    CirculantGraph,
    InputError,
    LabeledGraph,
    adjacency,
    symmetric_closure,
)
from .theta import ThetaTransform, theta_exact_image

BOUND_ENV = "CIRCULANT_ORACLE_BOUND"
DEFAULT_BOUND = 64


class OrderBoundError(RuntimeError):
    """Search refused: graph order exceeds the configured bound."""


def oracle_bound(override: int | None = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(BOUND_ENV)
    if raw is None:
        return DEFAULT_BOUND
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{BOUND_ENV} must be an integer, got {raw!r}")


# ------------------------------------------------------------- invariants


def triangle_count(graph: CirculantGraph) -> int:
    """Number of triangles, computed from jump arithmetic.

    Ordered difference triples (a, b, c) from the symmetric closure with
    a + b + c = 0 mod n count each triangle six times from each of the n
    base vertices... n * |solutions| / 6 total, equivalently closed
    3-walks / 6 on the boolean adjacency.
    """
    n = graph.order
    closure = symmetric_closure(graph.jumps).elements
    solutions = sum(
        1 for a in closure for b in closure if (-(a + b)) % n in closure
    )
    total = n * solutions
    assert total % 6 == 0
    return total // 6


def triangle_count_walks(labeled: LabeledGraph) -> int:
    """Independent triangle count: closed 3-walks on boolean adjacency / 6."""
    nbr = labeled.neighbor_sets()
    walks = sum(len(nbr[j] & nbr[i]) for i in range(labeled.order) for j in nbr[i])
    assert walks % 6 == 0
    return walks // 6


def is_bipartite(labeled: LabeledGraph) -> bool:
    nbr = labeled.neighbor_sets()
    color = [-1] * labeled.order
    for start in range(labeled.order):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in nbr[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


@dataclass(frozen=True)
class ScreenMismatch:
    invariant: str
    value_a: object
    value_b: object

    def __str__(self) -> str:
        return f"{self.invariant} differ: {self.value_a} vs {self.value_b}"


def invariant_screen(a: CirculantGraph, b: CirculantGraph) -> ScreenMismatch | None:
    """First cheap invariant separating the graphs, or None if all agree.

    Comparison order: degree, edge count, triangle count, bipartiteness.
    """
    if a.order != b.order:
        return ScreenMismatch("orders", a.order, b.order)
    if a.degree != b.degree:
        return ScreenMismatch("degrees", a.degree, b.degree)
    if a.edge_count != b.edge_count:
        return ScreenMismatch("edge counts", a.edge_count, b.edge_count)
    ta, tb = triangle_count(a), triangle_count(b)
    if ta != tb:
        return ScreenMismatch("triangle counts", ta, tb)
    ba, bb = is_bipartite(adjacency(a)), is_bipartite(adjacency(b))
    if ba != bb:
        return ScreenMismatch("bipartiteness", ba, bb)
    return None


# ----------------------------------------------------------- exact search


def _mult_adjacency(labeled: LabeledGraph) -> list[dict[int, int]]:
    adj: list[dict[int, int]] = [dict() for _ in range(labeled.order)]
    for a, b in labeled.edges:
        adj[a][b] = adj[a].get(b, 0) + 1
        adj[b][a] = adj[b].get(a, 0) + 1
    return adj


def _search_order(adj: list[dict[int, int]]) -> list[int]:
    # breadth-first per component so each new vertex is pinned by mapped ones
    from collections import deque

    n = len(adj)
    seen = [False] * n
    order: list[int] = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _labeled_isomorphism(la: LabeledGraph, lb: LabeledGraph) -> tuple[int, ...] | None:
    n = la.order
    if lb.order != n or la.edge_count != lb.edge_count:
        return None
    adj_a, adj_b = _mult_adjacency(la), _mult_adjacency(lb)

    def profile(adj, v):
        return (len(adj[v]), sorted(adj[v].values()))

    profiles_a = sorted(map(str, (profile(adj_a, v) for v in range(n))))
    profiles_b = sorted(map(str, (profile(adj_b, v) for v in range(n))))
    if profiles_a != profiles_b:
        return None

    order = _search_order(adj_a)
    mapping = [-1] * n
    used = [False] * n
    inverse: dict[int, int] = {}

    def feasible(v: int, w: int) -> bool:
        if profile(adj_a, v) != profile(adj_b, w):
            return False
        for u, mult in adj_a[v].items():
            img = mapping[u]
            if img != -1 and adj_b[w].get(img, 0) != mult:
                return False
        for wb, mult in adj_b[w].items():
            # mapped B-neighbours must correspond to A-neighbours of v
            if wb in inverse:
                if adj_a[v].get(inverse[wb], 0) != mult:
                    return False
        return True

    def backtrack(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        candidates = None
        for u in adj_a[v]:
            if mapping[u] != -1:
                cand = set(adj_b[mapping[u]])
                candidates = cand if candidates is None else candidates & cand
        if candidates is None:
            candidates = set(range(n))
        for w in sorted(candidates):
            if used[w]:
                continue
            if not feasible(v, w):
                continue
            mapping[v] = w
            used[w] = True
            inverse[w] = v
            if backtrack(idx + 1):
                return True
            mapping[v] = -1
            used[w] = False
            del inverse[w]
        return False

    if not backtrack(0):
        return None
    perm = tuple(mapping)
    # soundness: the permutation must carry the edge multiset exactly
    mapped = sorted(
        (perm[a], perm[b]) if perm[a] < perm[b] else (perm[b], perm[a])
        for a, b in la.edges
    )
    assert mapped == sorted(lb.edges), "search returned an invalid permutation"
    return perm


def isomorphic(
    a: CirculantGraph, b: CirculantGraph, bound: int | None = None
) -> tuple[int, ...] | None:
    """Exhaustive isomorphism search; a verified vertex bijection or None.

    Backtracking maps vertices in breadth-first order, restricting each
    candidate by the images of already-mapped neighbours and by local
    degree/multiplicity profiles.  Refuses orders above the bound
    (default 64, env CIRCULANT_ORACLE_BOUND).
    """
    limit = oracle_bound(bound)
    if a.order > limit or b.order > limit:
        raise OrderBoundError(
            f"order {max(a.order, b.order)} exceeds search bound {limit}"
        )
    if a.order != b.order:
        return None
    return _labeled_isomorphism(adjacency(a), adjacency(b))


# -------------------------------------------------------- classification


def _divisors_from_2(n: int) -> list[int]:
    return [m for m in range(2, n + 1) if n % m == 0]


def classify_pair(
    a: CirculantGraph, b: CirculantGraph, bound: int | None = None
) -> Classification:
    """Strongest available relation between two same-order circulants.

    Fixed search order: identical jump sets; unit multiplier; residue
    shift (every divisor m, every t, both directions); unit multiplier
    composed with a residue shift; then the invariant screen and, only
    if everything else is inconclusive, the exhaustive search.  The
    order bound is enforced only when that final search is reached.
    """
    if a.order != b.order:
        raise InputError(
            f"classification requires equal orders, got {a.order} and {b.order}"
        )
    n = a.order
    if a.jumps == b.jumps:
        return Classification(IDENTICAL)
    unit = type1_contains(a, b.jumps)
    if unit is not None:
        return Classification(TYPE1, x=unit.x)

    circulant_images: list[tuple[int, int, str, CirculantGraph]] = []
    for m in _divisors_from_2(n):
        for t in range(1, n // m):
            for direction, src, dst in (("a-to-b", a, b), ("b-to-a", b, a)):
                image = theta_exact_image(src, ThetaTransform(n, m, t))
                if image.circulant_jumps is None:
                    continue
                img_graph = CirculantGraph(image.circulant_jumps)
                circulant_images.append((m, t, direction, img_graph))
                if image.circulant_jumps == dst.jumps:
                    return Classification(TYPE2, m=m, t=t, direction=direction)

    for m, t, direction, img_graph in circulant_images:
        target = b.jumps if direction == "a-to-b" else a.jumps
        unit = type1_contains(img_graph, target)
        if unit is not None:
            return Classification(
                TYPE1_AFTER_TYPE2, x=unit.x, m=m, t=t, direction=direction
            )

    mismatch = invariant_screen(a, b)
    if mismatch is not None:
        return Classification(NOT_ISOMORPHIC, evidence=str(mismatch))
    perm = isomorphic(a, b, bound=bound)
    if perm is not None:
        return Classification(ISOMORPHIC_OTHER, permutation=perm)
    return Classification(
        NOT_ISOMORPHIC, evidence="exhaustive backtracking search found no bijection"
    )
