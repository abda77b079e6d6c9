"""Unit-multiplier (Type-1) isomorphism.

Multiplying every jump by a unit x of Z_n and reducing to standard
position relabels the graph by i -> x*i, so the image is always
isomorphic to the source.  The set of graphs reachable this way is the
graph's Type-1 set; it carries an abelian group structure induced by
multiplication of the witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import CirculantGraph, InputError, JumpSet, reflexive_reduce
from .groups import GroupReport, check_abelian_group


@dataclass(frozen=True)
class UnitMultiplier:
    """A multiplier x with gcd(x, n) = 1, 1 <= x <= n - 1."""

    n: int
    x: int

    def __post_init__(self):
        if not isinstance(self.x, int) or not 1 <= self.x <= self.n - 1:
            raise InputError(f"multiplier {self.x!r} outside [1, {self.n - 1}]")
        if gcd(self.x, self.n) != 1:
            raise InputError(f"multiplier {self.x} is not a unit mod {self.n}")


def units(n: int) -> list[UnitMultiplier]:
    """All units of Z_n in increasing order."""
    if n < 3:
        raise InputError(f"order must be >= 3, got {n}")
    return [UnitMultiplier(n, x) for x in range(1, n) if gcd(x, n) == 1]


def adams_image(graph: CirculantGraph, u: UnitMultiplier) -> CirculantGraph:
    """Multiply every jump by the unit and reduce back to standard position."""
    if u.n != graph.order:
        raise InputError(f"multiplier mod {u.n} applied to order {graph.order}")
    return CirculantGraph(
        reflexive_reduce([u.x * r for r in graph.jumps.values], graph.order)
    )


@dataclass(frozen=True)
class Type1Set:
    """Orbit of a graph under all unit multipliers, with least witnesses."""

    base: CirculantGraph
    members: tuple[CirculantGraph, ...]
    witnesses: dict

    def witness_for(self, member: CirculantGraph) -> UnitMultiplier:
        return self.witnesses[member]

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "members": [m.to_json() for m in self.members],
            "witnesses": {str(m): self.witnesses[m].x for m in self.members},
        }


def type1_set(graph: CirculantGraph) -> Type1Set:
    """Scan every unit and collect the distinct images.

    The witness stored for each member is the least unit producing it;
    members are ordered lexicographically by jump sequence.  x and n - x
    always produce the same member, so at most phi(n)/2 graphs appear.
    """
    witnesses: dict[CirculantGraph, UnitMultiplier] = {}
    for u in units(graph.order):
        img = adams_image(graph, u)
        if img not in witnesses:
            witnesses[img] = u
    members = tuple(sorted(witnesses, key=lambda g: g.jumps.values))
    return Type1Set(base=graph, members=members, witnesses=witnesses)


def type1_contains(graph: CirculantGraph, target: JumpSet) -> UnitMultiplier | None:
    """Least unit x with x * jumps(graph) reducing to the target, if any."""
    if target.n != graph.order:
        raise InputError("target jump set has a different order")
    for u in units(graph.order):
        if adams_image(graph, u).jumps == target:
            return u
    return None


def type1_compose(a: UnitMultiplier, b: UnitMultiplier) -> UnitMultiplier:
    """Compose two multiplier witnesses: the product unit mod n."""
    if a.n != b.n:
        raise InputError("multipliers live in different moduli")
    return UnitMultiplier(a.n, (a.x * b.x) % a.n)


def type1_group_check(t1: Type1Set) -> GroupReport:
    """Verify the induced group law image(x) * image(y) = image(x*y).

    Elements are the distinct members; the product of two members is
    computed from their least witnesses and must land back in the set.
    """
    base = t1.base

    def op(g1: CirculantGraph, g2: CirculantGraph):
        u = type1_compose(t1.witnesses[g1], t1.witnesses[g2])
        prod = adams_image(base, u)
        return prod if prod in t1.witnesses else None

    return check_abelian_group(list(t1.members), op, base, label=str)
