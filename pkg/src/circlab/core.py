"""Circulant graphs in standard position.

A circulant graph of order n is built from a reduced set of jumps
{r_1 < ... < r_k} with 1 <= r_i <= n // 2: vertex i is adjacent to
i + r and i - r (mod n) for every jump r.  The symmetric closure
{r, n - r} describes the same adjacency as plain difference membership.
The diameter jump n/2 (even n) joins each antipodal pair through two
coincident edges; the pair is counted twice in edge totals but only
once toward degree.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

MIN_ORDER = 3


class InputError(ValueError):
    """Rejects malformed orders, jumps, literals, or transform parameters."""


def _check_order(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < MIN_ORDER:
        raise InputError(f"order must be an integer >= {MIN_ORDER}, got {n!r}")


@dataclass(frozen=True)
class JumpSet:
    """Strictly increasing jumps, each in [1, n // 2]."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        _check_order(self.n)
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not self.values:
            raise InputError("jump set must be non-empty")
        half = self.n // 2
        prev = 0
        for r in self.values:
            if not 1 <= r <= half:
                raise InputError(
                    f"jump {r} outside [1, {half}] for order {self.n}"
                )
            if r <= prev:
                raise InputError("jumps must be strictly increasing")
            prev = r

    def __str__(self) -> str:
        return f"C{self.n}({','.join(str(v) for v in self.values)})"


@dataclass(frozen=True)
class ConnectionSet:
    """Full difference set: nonzero residues closed under negation mod n."""

    n: int
    elements: frozenset[int]

    def __post_init__(self):
        _check_order(self.n)
        object.__setattr__(self, "elements", frozenset(self.elements))
        if not self.elements:
            raise InputError("connection set must be non-empty")
        for e in self.elements:
            if not 1 <= e <= self.n - 1:
                raise InputError(f"connection element {e} outside [1, {self.n - 1}]")
            if (self.n - e) % self.n not in self.elements:
                raise InputError(f"connection set not closed under negation: {e}")

    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))


def reflexive_reduce(values, n: int) -> JumpSet:
    """Reduce arbitrary nonzero residues to canonical jumps.

    Each value is taken mod n and any residue above n/2 is replaced by its
    mirror n - r, so multiplied or shifted jump lists collapse back to
    standard position.  A value congruent to 0 mod n is rejected: it would
    describe a self-loop, not a jump.
    """
    _check_order(n)
    vals = list(values)
    if not vals:
        raise InputError("jump set must be non-empty")
    out = set()
    for v in vals:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InputError(f"jump must be an integer, got {v!r}")
        r = v % n
        if r == 0:
            raise InputError(f"zero jump: {v} is 0 mod {n}")
        if 2 * r > n:
            r = n - r
        out.add(r)
    return JumpSet(n, tuple(sorted(out)))


def symmetric_closure(jumps: JumpSet) -> ConnectionSet:
    """Expand jumps to the full difference set {r, n - r}."""
    n = jumps.n
    elems = set()
    for r in jumps.values:
        elems.add(r)
        elems.add(n - r)
    return ConnectionSet(n, frozenset(elems))


@dataclass(frozen=True)
class CirculantGraph:
    """A circulant graph identified with its reduced jump set."""

    jumps: JumpSet

    @property
    def order(self) -> int:
        return self.jumps.n

    @classmethod
    def of(cls, n: int, values) -> "CirculantGraph":
        vals = sorted(set(int(v) for v in values)) if values else []
        return cls(JumpSet(n, tuple(vals)))

    @property
    def degree(self) -> int:
        # the diameter jump contributes a single neighbour
        n = self.order
        return sum(1 if 2 * r == n else 2 for r in self.jumps.values)

    @property
    def edge_count(self) -> int:
        """Edge total with the antipodal pair counted as a double edge."""
        return self.order * len(self.jumps.values)

    @property
    def simple_edge_count(self) -> int:
        """Distinct vertex pairs joined by at least one edge."""
        n = self.order
        return self.edge_count - (n // 2 if n % 2 == 0 and n // 2 in self.jumps.values else 0)

    def __str__(self) -> str:
        return str(self.jumps)

    def full_literal(self) -> str:
        """Literal listing the whole symmetric closure, one value per difference."""
        elems = symmetric_closure(self.jumps).sorted_elements()
        return f"C{self.order}({','.join(str(e) for e in elems)})"

    def to_json(self) -> dict:
        return {"n": self.order, "jumps": list(self.jumps.values)}


_LITERAL = re.compile(r"^[Cc]?(\d+)\((\d+(?:,\d+)*)\)$")


def parse_graph(text: str) -> CirculantGraph:
    """Parse a graph literal such as ``C27(1,3,8,10)``.

    Values must lie in [1, n - 1]; a value above n/2 is folded onto its
    mirror so full-closure literals parse back to the same graph.
    """
    m = _LITERAL.match(text.strip())
    if not m:
        raise InputError(f"malformed graph literal: {text!r}")
    n = int(m.group(1))
    _check_order(n)
    values = [int(v) for v in m.group(2).split(",")]
    for v in values:
        if not 1 <= v <= n - 1:
            raise InputError(f"jump {v} outside [1, {n - 1}] in literal {text!r}")
    return CirculantGraph(reflexive_reduce(values, n))


def graph_from_json(obj) -> CirculantGraph:
    if not isinstance(obj, dict) or "n" not in obj or "jumps" not in obj:
        raise InputError('graph object must have "n" and "jumps"')
    n = obj["n"]
    _check_order(n)
    jumps = obj["jumps"]
    if not isinstance(jumps, (list, tuple)):
        raise InputError('"jumps" must be a list of integers')
    return CirculantGraph(reflexive_reduce(jumps, n))


@dataclass(frozen=True)
class LabeledGraph:
    """Graph on vertices 0..n-1 as a normalized edge multiset.

    Edges are (a, b) with a < b, sorted, with multiplicity at most 2.
    Images of circulant graphs under vertex relabelings land here, so
    double edges are not pinned to the antipodal difference; adjacency()
    alone guarantees that placement.
    """

    order: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        _check_order(self.order)
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        counts = Counter(self.edges)
        for (a, b), c in counts.items():
            if not (isinstance(a, int) and isinstance(b, int)):
                raise InputError("edge endpoints must be integers")
            if not 0 <= a < b <= self.order - 1:
                raise InputError(f"bad edge ({a}, {b}) for order {self.order}")
            if c > 2:
                raise InputError(f"edge ({a}, {b}) has multiplicity {c} > 2")

    def neighbor_sets(self) -> list[set[int]]:
        nbr = [set() for _ in range(self.order)]
        for a, b in self.edges:
            nbr[a].add(b)
            nbr[b].add(a)
        return nbr

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(s) for s in self.neighbor_sets()))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def simple_edge_count(self) -> int:
        return len(set(self.edges))


def adjacency(graph: CirculantGraph) -> LabeledGraph:
    """Lay the circulant out on labeled vertices.

    Every jump r < n/2 contributes the n pairs {i, i+r}; the diameter jump
    contributes its n/2 antipodal pairs twice each, preserving the n*k
    edge total.
    """
    n = graph.order
    edges: list[tuple[int, int]] = []
    for r in graph.jumps.values:
        if 2 * r == n:
            for i in range(r):
                edges.append((i, i + r))
                edges.append((i, i + r))
        else:
            for i in range(n):
                j = i + r
                if j >= n:
                    j -= n
                edges.append((i, j) if i < j else (j, i))
    edges.sort()
    return LabeledGraph(n, tuple(edges))


def detect_circulant(labeled: LabeledGraph) -> JumpSet | None:
    """Recognize a labeled graph that is circulant under the identity labeling.

    The graph is a circulant in standard position exactly when every
    difference class it touches is complete: all n pairs {i, i + d} for a
    reduced difference d < n/2, or all n/2 antipodal pairs for d = n/2.
    Class completeness is equivalent to every row of the adjacency matrix
    being the cyclic shift of row zero, with row zero symmetric under
    negation.  Multiplicities are ignored; adjacency is boolean here.
    """
    n = labeled.order
    distinct = set(labeled.edges)
    if not distinct:
        return None
    counts: Counter[int] = Counter()
    for a, b in distinct:
        d = b - a
        if 2 * d > n:
            d = n - d
        counts[d] += 1
    for d, c in counts.items():
        full = n // 2 if 2 * d == n else n
        if c != full:
            return None
    return JumpSet(n, tuple(sorted(counts)))
