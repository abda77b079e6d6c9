"""Residue-class shift relabeling and Type-2 isomorphism.

For a divisor m of n and a shift index t, the vertex map sends x to
x + j*t*m (mod n) where j = x mod m: each residue class mod m rotates
by a different multiple of t*m.  The map is a bijection fixing class 0.
Applied to a circulant graph it yields a labeled graph that may or may
not be circulant in standard position; when it is, and the resulting
jump set is not reachable by any unit multiplier, the two graphs are
Type-2 isomorphic.

Two image computations are provided.  The exact one maps every edge and
is authoritative.  The fast one applies the shift to each element of the
symmetric closure; it mirrors the classic per-jump bookkeeping and is
correct for m = 2 and for the generated families, but in general it
tracks only one residue class per difference and can misjudge, so exact
wins whenever they disagree.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd

from .adams import type1_contains
from .classification import (
    Classification,
    IDENTICAL,
    NON_CIRCULANT_IMAGE,
    TYPE1,
    TYPE2,
)
from .core import (
    CirculantGraph,
    InputError,
    JumpSet,
    LabeledGraph,
    detect_circulant,
    reflexive_reduce,
    symmetric_closure,
    _check_order,
)
from .groups import GroupReport, check_abelian_group


@dataclass(frozen=True)
class ThetaTransform:
    """Shift parameters: order n, divisor m >= 2, index 0 <= t <= n/m - 1."""

    n: int
    m: int
    t: int

    def __post_init__(self):
        _check_order(self.n)
        if not isinstance(self.m, int) or self.m < 2:
            raise InputError(f"divisor m must be an integer >= 2, got {self.m!r}")
        if self.n % self.m != 0:
            raise InputError(f"m={self.m} does not divide n={self.n}")
        if not isinstance(self.t, int) or not 0 <= self.t <= self.n // self.m - 1:
            raise InputError(
                f"shift t={self.t!r} outside [0, {self.n // self.m - 1}]"
            )


def theta_vertex(transform: ThetaTransform, x: int) -> int:
    """Image of a single vertex: x + (x mod m) * t * m, mod n."""
    if not 0 <= x < transform.n:
        raise InputError(f"vertex {x} outside [0, {transform.n - 1}]")
    return (x + (x % transform.m) * transform.t * transform.m) % transform.n


def vertex_permutation(transform: ThetaTransform) -> tuple[int, ...]:
    """The whole vertex map as a tuple indexed by source vertex."""
    n, m, t = transform.n, transform.m, transform.t
    return tuple((x + (x % m) * t * m) % n for x in range(n))


@dataclass(frozen=True)
class FastResult:
    multiset: tuple[int, ...]
    symmetric: bool
    reduced: JumpSet | None


def theta_fast(jumps: JumpSet, transform: ThetaTransform) -> FastResult:
    """Per-jump image of the symmetric closure, with the pairing test.

    Every closure element r maps to r + (r mod m)*t*m mod n.  The sorted
    result is accepted as symmetric when element i and element (last - i)
    sum to n (the middle element of an odd-length list must equal n/2);
    only then is a reduced jump set reported.
    """
    if jumps.n != transform.n:
        raise InputError("jump set and transform orders differ")
    n, m, t = transform.n, transform.m, transform.t
    imgs = sorted(
        (r + (r % m) * t * m) % n for r in symmetric_closure(jumps).elements
    )
    k = len(imgs)
    symmetric = all(imgs[i] + imgs[k - 1 - i] == n for i in range((k + 1) // 2))
    reduced = reflexive_reduce(imgs, n) if symmetric else None
    return FastResult(tuple(imgs), symmetric, reduced)


@dataclass(frozen=True)
class ThetaImage:
    """Outcome of one exact transform application."""

    source: CirculantGraph
    transform: ThetaTransform
    labeled: LabeledGraph
    circulant_jumps: JumpSet | None
    fast_multiset: tuple[int, ...]
    fast_symmetric: bool
    fast_reduced: JumpSet | None

    @property
    def is_circulant(self) -> bool:
        return self.circulant_jumps is not None

    def to_json(self) -> dict:
        return {
            "m": self.transform.m,
            "t": self.transform.t,
            "verdict": "circulant" if self.is_circulant else "non-circulant",
            "jumps": list(self.circulant_jumps.values) if self.circulant_jumps else None,
            "fast_symmetric": self.fast_symmetric,
        }


def theta_exact_image(graph: CirculantGraph, transform: ThetaTransform) -> ThetaImage:
    """Map every edge through the vertex bijection and test the result.

    This is the authoritative image: the labeled graph is a relabeling of
    the source (hence always isomorphic to it), and the circulant verdict
    comes from difference-class completeness of the mapped edge set.
    """
    if transform.n != graph.order:
        raise InputError(
            f"transform order {transform.n} differs from graph order {graph.order}"
        )
    n, m, t = transform.n, transform.m, transform.t
    tab = [(x + (x % m) * t * m) % n for x in range(n)]
    edges: list[tuple[int, int]] = []
    for r in graph.jumps.values:
        if 2 * r == n:
            for i in range(r):
                a, b = tab[i], tab[i + r]
                e = (a, b) if a < b else (b, a)
                edges.append(e)
                edges.append(e)
        else:
            for i in range(n):
                j = i + r
                if j >= n:
                    j -= n
                a, b = tab[i], tab[j]
                edges.append((a, b) if a < b else (b, a))
    edges.sort()
    labeled = LabeledGraph(n, tuple(edges))
    fast = theta_fast(graph.jumps, transform)
    return ThetaImage(
        source=graph,
        transform=transform,
        labeled=labeled,
        circulant_jumps=detect_circulant(labeled),
        fast_multiset=fast.multiset,
        fast_symmetric=fast.symmetric,
        fast_reduced=fast.reduced,
    )


def _classify_image(graph: CirculantGraph, image: ThetaImage) -> Classification:
    tr = image.transform
    if image.circulant_jumps is None:
        return Classification(NON_CIRCULANT_IMAGE, m=tr.m, t=tr.t)
    if image.circulant_jumps == graph.jumps:
        return Classification(IDENTICAL, m=tr.m, t=tr.t)
    unit = type1_contains(graph, image.circulant_jumps)
    if unit is not None:
        return Classification(TYPE1, x=unit.x, m=tr.m, t=tr.t)
    return Classification(TYPE2, m=tr.m, t=tr.t)


def classify_theta(graph: CirculantGraph, transform: ThetaTransform) -> Classification:
    """Classify one exact image: non-circulant, identical, Type-1, or Type-2."""
    return _classify_image(graph, theta_exact_image(graph, transform))


def _warn_preconditions(graph: CirculantGraph, m: int) -> None:
    n = graph.order
    if not any(gcd(n, r) % m == 0 for r in graph.jumps.values):
        warnings.warn(
            f"m={m} divides gcd({n}, r) for no jump r of {graph}; "
            "scanning anyway",
            stacklevel=3,
        )
    if len(graph.jumps.values) < 3:
        warnings.warn(
            f"{graph} has fewer than 3 jumps; scanning anyway",
            stacklevel=3,
        )


def vnm_set(graph: CirculantGraph, m: int) -> list[ThetaImage]:
    """Exact images for every shift index t = 0 .. n/m - 1."""
    n = graph.order
    if not isinstance(m, int) or m < 2 or n % m != 0:
        raise InputError(f"m={m!r} must be a divisor >= 2 of n={n}")
    _warn_preconditions(graph, m)
    return [
        theta_exact_image(graph, ThetaTransform(n, m, t)) for t in range(n // m)
    ]


@dataclass(frozen=True)
class Type2SetResult:
    """Scan summary: base graph, distinct Type-2 images, first hit, period."""

    base: CirculantGraph
    m: int
    members: tuple[CirculantGraph, ...]
    t1: int | None
    period: int

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "m": self.m,
            "members": [g.to_json() for g in self.members],
            "t1": self.t1,
            "period": self.period,
        }


def type2_set(graph: CirculantGraph, m: int) -> Type2SetResult:
    """Collect the base graph and every distinct Type-2 image over all t.

    Members appear in order of first appearance.  t1 is the least t >= 1
    whose image classifies as Type-2; the period is the least t >= 1 whose
    image set equals the base jump set again, or n/m if that never happens.
    """
    n = graph.order
    if not isinstance(m, int) or m < 2 or n % m != 0:
        raise InputError(f"m={m!r} must be a divisor >= 2 of n={n}")
    _warn_preconditions(graph, m)
    members: list[CirculantGraph] = [graph]
    seen = {graph.jumps}
    t1: int | None = None
    period: int | None = None
    for t in range(1, n // m):
        image = theta_exact_image(graph, ThetaTransform(n, m, t))
        cls = _classify_image(graph, image)
        if cls.tag == IDENTICAL and period is None:
            period = t
        if cls.tag == TYPE2 and image.circulant_jumps not in seen:
            seen.add(image.circulant_jumps)
            members.append(CirculantGraph(image.circulant_jumps))
            if t1 is None:
                t1 = t
        elif cls.tag == TYPE2 and t1 is None:
            t1 = t
    return Type2SetResult(
        base=graph,
        m=m,
        members=tuple(members),
        t1=t1,
        period=period if period is not None else n // m,
    )


def type2_group_check(result: Type2SetResult) -> GroupReport:
    """Verify shift-index addition mod the period on the scanned members.

    Elements are the residues t in [0, period) whose exact image is a
    member; the product of t and t' is the recomputed image of the member
    at t' under the shift t, which must equal the member at (t + t') mod
    period.  This checks closure, identity (t = 0), inverses, and
    commutativity with actual image computations.
    """
    base = result.base
    n, m, period = base.order, result.m, result.period
    member_jumps = {g.jumps for g in result.members}

    jumps_at: dict[int, JumpSet] = {}
    for t in range(period):
        image = theta_exact_image(base, ThetaTransform(n, m, t))
        if image.circulant_jumps is not None and image.circulant_jumps in member_jumps:
            jumps_at[t] = image.circulant_jumps
    elements = sorted(jumps_at)

    def op(t_a: int, t_b: int):
        intermediate = CirculantGraph(jumps_at[t_b])
        composed = theta_exact_image(intermediate, ThetaTransform(n, m, t_a))
        target = (t_a + t_b) % period
        if composed.circulant_jumps is None or target not in jumps_at:
            return None
        if composed.circulant_jumps != jumps_at[target]:
            return None
        return target

    return check_abelian_group(elements, op, 0, label=str)
