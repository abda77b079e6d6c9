"""Finite abelian group verification by explicit table checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GroupReport:
    order: int
    closure_ok: bool
    identity_ok: bool
    inverses_ok: bool
    abelian_ok: bool
    cyclic: bool
    violations: tuple[str, ...]

    @property
    def is_group(self) -> bool:
        return self.closure_ok and self.identity_ok and self.inverses_ok

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "is_group": self.is_group,
            "abelian": self.abelian_ok,
            "cyclic": self.cyclic,
            "violations": list(self.violations),
        }


def check_abelian_group(elements, op, identity, label=repr) -> GroupReport:
    """Check group axioms on a small element list with a computed operation.

    ``op(a, b)`` returns the product element or None when the product falls
    outside the candidate set (a closure violation).  Every violated axiom
    is recorded with the witnessing operands.
    """
    elems = list(elements)
    violations: list[str] = []

    if identity not in elems:
        violations.append(f"identity {label(identity)} not among elements")
    identity_ok = identity in elems

    table: dict[tuple[int, int], object] = {}
    closure_ok = True
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            prod = op(a, b)
            table[(i, j)] = prod
            if prod is None or prod not in elems:
                closure_ok = False
                violations.append(f"closure fails: {label(a)} * {label(b)}")

    if identity_ok:
        e = elems.index(identity)
        for i, a in enumerate(elems):
            if table.get((e, i)) != a or table.get((i, e)) != a:
                identity_ok = False
                violations.append(f"identity fails on {label(a)}")

    inverses_ok = identity_ok and closure_ok
    if inverses_ok:
        for i, a in enumerate(elems):
            if not any(table[(i, j)] == identity for j in range(len(elems))):
                inverses_ok = False
                violations.append(f"no inverse for {label(a)}")

    abelian_ok = True
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if table[(i, j)] != table[(j, i)]:
                abelian_ok = False
                violations.append(
                    f"commutativity fails: {label(elems[i])}, {label(elems[j])}"
                )

    cyclic = False
    if closure_ok and identity_ok and inverses_ok:
        for i, g in enumerate(elems):
            seen = {elems.index(identity)}
            cur = i
            while cur not in seen:
                seen.add(cur)
                cur = elems.index(table[(cur, i)])
            if len(seen) == len(elems):
                cyclic = True
                break

    return GroupReport(
        order=len(elems),
        closure_ok=closure_ok,
        identity_ok=identity_ok,
        inverses_ok=inverses_ok,
        abelian_ok=abelian_ok,
        cyclic=cyclic,
        violations=tuple(violations),
    )
