"""Connected sums, cuts along free tori, reduction and the [Q,R] comparison."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Mapping, Tuple

from .charring import VirtualCharacter, invariant_part
from .fpdata import FixedCircle, OddManifoldData
from .localize import LITERAL_OFF, Convention, quantize_odd3


class SpecError(ValueError):
    """A connected-sum or cut specification does not fit the manifold."""


@dataclass(frozen=True)
class ConSumSpec:
    left_circle: str
    right_circle: str
    l: int

    def __post_init__(self):
        if self.l == 0:
            raise SpecError("gluing speed l must be nonzero")

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> "ConSumSpec":
        _expect_keys(doc, {"left", "right", "l"}, "consum spec")
        if not isinstance(doc["l"], int) or isinstance(doc["l"], bool):
            raise SpecError("consum spec: l must be an integer")
        return cls(str(doc["left"]), str(doc["right"]), doc["l"])

    def to_json(self) -> Dict[str, Any]:
        return {"left": self.left_circle, "right": self.right_circle, "l": self.l}


@dataclass(frozen=True)
class SeamRecord:
    """One component of Z/S^1: its determinant weight and the degree of alpha on it."""

    mu: int
    a: int


@dataclass(frozen=True)
class CutSpec:
    plus_side: FrozenSet[str] = frozenset()
    minus_side: FrozenSet[str] = frozenset()
    seam: Tuple[SeamRecord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "plus_side", frozenset(self.plus_side))
        object.__setattr__(self, "minus_side", frozenset(self.minus_side))
        object.__setattr__(self, "seam", tuple(self.seam))
        both = self.plus_side & self.minus_side
        if both:
            raise SpecError(f"circles on both sides of the cut: {sorted(both)}")

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> "CutSpec":
        _expect_keys(doc, {"plus", "minus", "seam"}, "cut spec")
        try:
            seam = [SeamRecord(int(r["mu"]), int(r["a"])) for r in doc["seam"]]
            if any(set(r) != {"mu", "a"} for r in doc["seam"]):
                raise SpecError("cut spec: seam records have exactly the keys mu, a")
            return cls(frozenset(map(str, doc["plus"])), frozenset(map(str, doc["minus"])), seam)
        except (TypeError, KeyError, ValueError) as exc:
            if isinstance(exc, SpecError):
                raise
            raise SpecError(f"cut spec: {exc}") from None

    def to_json(self) -> Dict[str, Any]:
        return {
            "plus": sorted(self.plus_side),
            "minus": sorted(self.minus_side),
            "seam": [{"mu": r.mu, "a": r.a} for r in self.seam],
        }


def _expect_keys(doc: Any, keys: set, what: str) -> None:
    if not isinstance(doc, Mapping):
        raise SpecError(f"{what} must be an object")
    if set(doc) != keys:
        raise SpecError(f"{what} must have exactly the keys {sorted(keys)}, got {sorted(doc)}")


def _fresh_id(base: str, taken: set) -> str:
    cid = base
    while cid in taken:
        cid += "'"
    taken.add(cid)
    return cid


def connected_sum(m1: OddManifoldData, m2: OddManifoldData, spec: ConSumSpec) -> OddManifoldData:
    """Glue along balls around the designated circles.

    The two designated circles become one with ``mu = mu1 + mu2``, ``n = l`` and
    ``a = a1 + a2``; its sigma is taken from the left circle.  Ids of ``m2`` that
    clash with ``m1`` get primes appended.
    """
    try:
        c1 = m1.circle(spec.left_circle)
    except KeyError:
        raise SpecError(f"{m1.name} has no circle {spec.left_circle!r}") from None
    try:
        c2 = m2.circle(spec.right_circle)
    except KeyError:
        raise SpecError(f"{m2.name} has no circle {spec.right_circle!r}") from None
    if c1.n != spec.l or c2.n != spec.l:
        raise SpecError(f"designated circles have n = {c1.n}, {c2.n}; both must equal l = {spec.l}")
    if c1.sigma != c2.sigma:
        warnings.warn(
            f"connected sum: orientation signs {c1.sigma} and {c2.sigma} differ; using {c1.sigma}",
            stacklevel=2,
        )

    taken: set = set()
    circles: List[FixedCircle] = []
    alpha: Dict[str, int] = {}
    merged_id = f"{c1.id}#{c2.id}"
    for c in m1.circles:
        if c is c1:
            cid = _fresh_id(merged_id, taken)
            circles.append(FixedCircle(cid, c1.mu + c2.mu, spec.l, c1.sigma))
            alpha[cid] = m1.a(c1.id) + m2.a(c2.id)
            continue
        cid = _fresh_id(c.id, taken)
        circles.append(c if cid == c.id else FixedCircle(cid, c.mu, c.n, c.sigma))
        if c.id in m1.alpha:
            alpha[cid] = m1.alpha[c.id]
    for c in m2.circles:
        if c is c2:
            continue
        cid = _fresh_id(c.id, taken)
        circles.append(c if cid == c.id else FixedCircle(cid, c.mu, c.n, c.sigma))
        if c.id in m2.alpha:
            alpha[cid] = m2.alpha[c.id]
    return OddManifoldData(f"{m1.name}#{m2.name}", circles, alpha)


def correction_D(mu1: int, mu2: int, a1: int, a2: int, l: int) -> VirtualCharacter:
    """Defect ``Q(M1 # M2) - Q(M1) - Q(M2)`` of a connected sum, exponents in s-units."""
    top = l + mu1 + mu2
    return (
        VirtualCharacter({top: a1}) - VirtualCharacter({l + mu1: a1})
        + VirtualCharacter({top: a2}) - VirtualCharacter({l + mu2: a2})
    )


def cut_split(m: OddManifoldData, spec: CutSpec) -> Tuple[OddManifoldData, OddManifoldData]:
    """Split ``m`` into the two cut pieces.

    Each seam record becomes a fixed circle ``(mu, n=+1, a)`` on both pieces,
    with sigma +1 on the plus side and -1 on the minus side, so the seam terms
    cancel in ``Q(M+) + Q(M-)``.
    """
    ids = {c.id for c in m.circles}
    unknown = (spec.plus_side | spec.minus_side) - ids
    if unknown:
        raise SpecError(f"cut spec names unknown circles {sorted(unknown)}")
    missing = ids - spec.plus_side - spec.minus_side
    if missing:
        raise SpecError(f"cut spec leaves circles unassigned: {sorted(missing)}")

    def piece(side: FrozenSet[str], sigma: int, suffix: str) -> OddManifoldData:
        circles = [c for c in m.circles if c.id in side]
        alpha = {cid: a for cid, a in m.alpha.items() if cid in side}
        taken = {c.id for c in circles}
        for i, rec in enumerate(spec.seam):
            cid = _fresh_id(f"Z{i}", taken)
            circles.append(FixedCircle(cid, rec.mu, 1, sigma))
            alpha[cid] = rec.a
        return OddManifoldData(f"{m.name}{suffix}", circles, alpha)

    return piece(spec.plus_side, 1, "+"), piece(spec.minus_side, -1, "-")


def reduce_circles(spec: CutSpec) -> int:
    """Quantization of M_red = Z/S^1: the total degree of alpha over its circles."""
    return sum(rec.a for rec in spec.seam)


@dataclass(frozen=True)
class QRReport:
    q_invariant: int
    q_reduced: int
    equal: bool

    def lines(self) -> List[str]:
        return [
            f"q_invariant: {self.q_invariant}",
            f"q_reduced: {self.q_reduced}",
            f"equal: {'true' if self.equal else 'false'}",
        ]


def qr_report(m: OddManifoldData, spec: CutSpec, conv: Convention = LITERAL_OFF) -> QRReport:
    """Compare the invariant part of Q(M) with Q(M_red).  Reports, does not assert."""
    ids = {c.id for c in m.circles}
    if not (spec.plus_side | spec.minus_side) <= ids:
        raise SpecError("cut spec names circles the manifold does not have")
    q_inv = invariant_part(quantize_odd3(m, conv))
    q_red = reduce_circles(spec)
    return QRReport(q_inv, q_red, q_inv == q_red)
