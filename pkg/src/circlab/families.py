"""Generators for the two constructed families of Type-2 related pairs.

The order-8n family pairs R = {2, 2s-1, 4n-(2s-1)} with
S = {2, 2n-(2s-1), 2n+2s-1}; the residue shift with m = 2, t = n swaps
them.  The extended form replaces the single even jump 2 with any even
jumps 2*p_1, ..., 2*p_k whose halves are coprime and include a unit of
Z_4n.

The order-n*p^3 family (p an odd prime) follows the classic generator
program: for each admissible seed k, the base member is the symmetric
list built from k and p around multiples of n*p^2, and the other p - 1
members are produced by the shift r -> r + n*t*p*(r mod p) mod n*p^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import CirculantGraph, InputError, JumpSet, reflexive_reduce
from .theta import ThetaTransform


def _is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------- order 8n


@dataclass(frozen=True)
class Family8n:
    """A generated pair of order-8n graphs with its designated transform."""

    n: int
    s: int
    evens: tuple[int, ...]
    r_graph: CirculantGraph
    s_graph: CirculantGraph
    transform: ThetaTransform

    @property
    def order(self) -> int:
        return 8 * self.n

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "evens": list(self.evens),
            "r_graph": self.r_graph.to_json(),
            "s_graph": self.s_graph.to_json(),
            "transform": {"m": self.transform.m, "t": self.transform.t},
        }


def _build_8n(n: int, s: int, evens: tuple[int, ...]) -> Family8n:
    if not isinstance(n, int) or n < 2:
        raise InputError(f"requires n >= 2, got {n!r}")
    if not isinstance(s, int) or not 1 <= 2 * s - 1 <= 2 * n - 1:
        raise InputError(f"requires 1 <= 2s-1 <= 2n-1, got s={s!r}")
    if n == 2 * s - 1:
        raise InputError(f"requires n != 2s-1, violated by n={n}, s={s}")
    if not evens:
        raise InputError("requires at least one even jump")
    halves = []
    for e in evens:
        if not isinstance(e, int) or e < 2 or e % 2 != 0:
            raise InputError(f"even jumps must be even integers >= 2, got {e!r}")
        halves.append(e // 2)
    if not any(gcd(4 * n, y) == 1 for y in halves):
        raise InputError(f"no even jump 2y with gcd({4 * n}, y) = 1")
    g = 0
    for y in halves:
        g = gcd(g, y)
    if g != 1:
        raise InputError(f"halves of the even jumps must be coprime, gcd = {g}")
    order = 8 * n
    odd_r = (2 * s - 1, 4 * n - (2 * s - 1))
    odd_s = (2 * n - (2 * s - 1), 2 * n + (2 * s - 1))
    r_graph = CirculantGraph(reflexive_reduce(evens + odd_r, order))
    s_graph = CirculantGraph(reflexive_reduce(evens + odd_s, order))
    return Family8n(
        n=n,
        s=s,
        evens=tuple(evens),
        r_graph=r_graph,
        s_graph=s_graph,
        transform=ThetaTransform(order, 2, n),
    )


def gen_8n_basic(n: int, s: int) -> Family8n:
    """The three-jump pair: even part is the single jump 2."""
    return _build_8n(n, s, (2,))


def gen_8n_extended(n: int, s: int, evens) -> Family8n:
    """The pair with a caller-chosen even part (halves coprime, one a unit)."""
    return _build_8n(n, s, tuple(int(e) for e in evens))


# ------------------------------------------------------------ order n*p^3


@dataclass(frozen=True)
class FamilyNp3:
    """One seed's family: p members of order n*p^3 cycled by the shift.

    ``full_members`` are the sorted symmetric lists of 2(p+1) values the
    generator program prints; ``members`` are their reduced jump sets.
    """

    p: int
    n: int
    k: int
    x: int
    y: int
    d: tuple[int, ...]
    full_members: tuple[tuple[int, ...], ...]
    members: tuple[JumpSet, ...]

    @property
    def order(self) -> int:
        return self.n * self.p**3

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "k": self.k,
            "members": [list(m.values) for m in self.members],
            "full_members": [list(m) for m in self.full_members],
        }


def _np3_transform_list(values, n: int, p: int, t: int, v: int) -> tuple[int, ...]:
    return tuple(sorted((r + n * t * p * (r % p)) % v for r in values))


def _np3_base_list(p: int, n: int, k: int) -> tuple[int, ...]:
    # first half: k, p, then j*n*p^2 -+ k up to j = (p-1)/2; mirror the rest
    v = n * p**3
    half = [k, p]
    for j in range(1, (p - 1) // 2 + 1):
        half.append(j * n * p * p - k)
        half.append(j * n * p * p + k)
    full = half + [v - e for e in reversed(half)]
    return tuple(sorted(full))


def gen_np3(p: int, n: int, k_max: int | None = None, full_range: bool = False) -> list[FamilyNp3]:
    """All families for one order n*p^3, one per admissible seed k.

    Seeds run from 1 to n*p - 1 (the generator program's range) skipping
    multiples of p; ``full_range`` extends them to n*p^2 - 1, the widest
    admissible window.  ``k_max`` caps the scan explicitly.
    """
    if not _is_odd_prime(p):
        raise InputError(f"p must be an odd prime, got {p!r}")
    if not isinstance(n, int) or n < 1:
        raise InputError(f"requires n >= 1, got {n!r}")
    v = n * p**3
    limit = n * p * p - 1 if full_range else n * p - 1
    if k_max is not None:
        if not isinstance(k_max, int) or k_max < 1:
            raise InputError(f"k_max must be a positive integer, got {k_max!r}")
        limit = min(limit, k_max)
    out = []
    for k in range(1, limit + 1):
        if k % p == 0:
            continue
        base = _np3_base_list(p, n, k)
        fulls = [base]
        for t in range(1, p):
            fulls.append(_np3_transform_list(base, n, p, t, v))
        x, y = k % p, k // p
        d = tuple(((i - 1) * n * p * x + x + y * p) % v for i in range(1, p + 1))
        out.append(
            FamilyNp3(
                p=p,
                n=n,
                k=k,
                x=x,
                y=y,
                d=d,
                full_members=tuple(fulls),
                members=tuple(reflexive_reduce(f, v) for f in fulls),
            )
        )
    return out


def np3_member_elements(p: int, n: int, x: int, y: int, i: int) -> tuple[int, ...]:
    """Full symmetric list of member i built directly from the d_i formula.

    d_i = (i-1)*n*p*x + (x + y*p); the member is {p, n*p^3 - p} together
    with j*n*p^2 +- d_i for j = 0 .. p (folding j = 0 and j = p onto d_i
    and n*p^3 - d_i), all mod n*p^3.
    """
    if not _is_odd_prime(p):
        raise InputError(f"p must be an odd prime, got {p!r}")
    if not isinstance(n, int) or n < 1:
        raise InputError(f"requires n >= 1, got {n!r}")
    if not isinstance(x, int) or not 1 <= x <= p - 1:
        raise InputError(f"requires 1 <= x <= p-1, got {x!r}")
    if not isinstance(y, int) or y < 0:
        raise InputError(f"requires y >= 0, got {y!r}")
    k = x + y * p
    if not 1 <= k <= n * p * p - 1:
        raise InputError(f"requires 1 <= x + y*p <= n*p^2 - 1, got {k}")
    if not isinstance(i, int) or not 1 <= i <= p:
        raise InputError(f"requires 1 <= i <= p, got {i!r}")
    v = n * p**3
    d = ((i - 1) * n * p * x + k) % v
    elems = {p, v - p, d, (v - d) % v}
    for j in range(1, p):
        elems.add((j * n * p * p - d) % v)
        elems.add((j * n * p * p + d) % v)
    if len(elems) != 2 * (p + 1):
        raise InputError(
            f"degenerate member: expected {2 * (p + 1)} elements, got {len(elems)}"
        )
    return tuple(sorted(elems))


def gen_np3_member(p: int, n: int, x: int, y: int, i: int) -> JumpSet:
    """Reduced jump set of member i for seed x + y*p."""
    elems = np3_member_elements(p, n, x, y, i)
    return reflexive_reduce(elems, n * p**3)


# ------------------------------------------------------- program format


def program_format(p: int, n_max: int, k_max: int | None = None,
                   full_range: bool = False) -> str:
    """Text block matching the family generator program's output.

    For each n up to n_max: a header line, a 28-dash rule, then for each
    seed the p member lines as full-closure literals followed by a
    34-dash separator framed by blank lines.
    """
    pieces: list[str] = []
    for n in range(1, n_max + 1):
        v = n * p**3
        pieces.append(f"\n p = {p} and n={n}\n")
        pieces.append("-" * 28 + "\n")
        for fam in gen_np3(p, n, k_max=k_max, full_range=full_range):
            for full in fam.full_members:
                pieces.append(f"C{v}({','.join(str(e) for e in full)})\n")
            pieces.append("\n" + "-" * 34 + "\n\n")
    return "".join(pieces)
