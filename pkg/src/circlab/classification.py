"""Outcome lattice for relating two circulant graphs or a transform image."""

from __future__ import annotations

from dataclasses import dataclass

IDENTICAL = "Identical"
TYPE1 = "Type1"
TYPE2 = "Type2"
TYPE1_AFTER_TYPE2 = "Type1AfterType2"
ISOMORPHIC_OTHER = "IsomorphicOther"
NOT_ISOMORPHIC = "NotIsomorphic"
NON_CIRCULANT_IMAGE = "NonCirculantImage"

TAGS = (
    IDENTICAL,
    TYPE1,
    TYPE2,
    TYPE1_AFTER_TYPE2,
    ISOMORPHIC_OTHER,
    NOT_ISOMORPHIC,
    NON_CIRCULANT_IMAGE,
)


@dataclass(frozen=True)
class Classification:
    """A tag plus the witness data that justifies it.

    x is a unit multiplier witness, (m, t) a residue-shift witness,
    permutation an explicit vertex bijection, and evidence a human
    summary (for NotIsomorphic, the distinguishing invariant).
    ``direction`` records which operand the witness transforms:
    "a-to-b" (default) or "b-to-a".
    """

    tag: str
    x: int | None = None
    m: int | None = None
    t: int | None = None
    permutation: tuple[int, ...] | None = None
    evidence: str | None = None
    direction: str = "a-to-b"

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown classification tag {self.tag!r}")
        if self.direction not in ("a-to-b", "b-to-a"):
            raise ValueError(f"bad direction {self.direction!r}")

    def __str__(self) -> str:
        parts = [self.tag]
        if self.x is not None:
            parts.append(f"x={self.x}")
        if self.m is not None:
            parts.append(f"m={self.m}")
        if self.t is not None:
            parts.append(f"t={self.t}")
        if self.direction == "b-to-a":
            parts.append("(witness maps b to a)")
        if self.evidence:
            parts.append(f"({self.evidence})")
        return " ".join(parts)

    def to_json(self) -> dict:
        witness: dict = {}
        if self.x is not None:
            witness["x"] = self.x
        if self.m is not None:
            witness["m"] = self.m
        if self.t is not None:
            witness["t"] = self.t
        if self.permutation is not None:
            witness["permutation"] = list(self.permutation)
        return {
            "tag": self.tag,
            "witness": witness,
            "direction": self.direction,
            "evidence": self.evidence,
        }
