"""Fixed-point character formulas in odd dimension three and at isolated even fixed points."""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .charring import ONE, RationalCharacter, VirtualCharacter, ZERO
from .fpdata import EvenManifoldData, FixedCircle, OddManifoldData


class NormalFactor(str, enum.Enum):
    LITERAL = "literal"
    EULER = "euler"


@dataclass(frozen=True)
class Convention:
    """How the normal-bundle factor and the codimension sign enter the 3D formula.

    ``LITERAL`` contributes ``z^(n/2)`` per circle; ``EULER`` contributes
    ``1 / (z^(n/2) - z^(-n/2))``.  With ``codim_sign`` every term picks up
    ``(-1)^1`` from the complex codimension of a fixed circle times S^1.
    """

    normal_factor: NormalFactor = NormalFactor.LITERAL
    codim_sign: bool = False

    def __post_init__(self):
        object.__setattr__(self, "normal_factor", NormalFactor(self.normal_factor))

    def label(self) -> str:
        return f"({self.normal_factor.value}, {'on' if self.codim_sign else 'off'})"


LITERAL_OFF = Convention(NormalFactor.LITERAL, False)
LITERAL_ON = Convention(NormalFactor.LITERAL, True)
EULER_OFF = Convention(NormalFactor.EULER, False)
EULER_ON = Convention(NormalFactor.EULER, True)
ALL_CONVENTIONS = (LITERAL_OFF, LITERAL_ON, EULER_OFF, EULER_ON)


def sine_factor(w: int) -> VirtualCharacter:
    """``z^(w/2) - z^(-w/2)`` in s-units."""
    return VirtualCharacter({w: 1, -w: -1})


def _common_denominator(weight_lists: Iterable[Iterable[int]]) -> Tuple[VirtualCharacter, Dict[int, int]]:
    """Product of ``sine_factor(|w|)`` with, for each |w|, the largest multiplicity seen."""
    need: Dict[int, int] = {}
    for ws in weight_lists:
        for k, m in Counter(abs(w) for w in ws).items():
            need[k] = max(need.get(k, 0), m)
    den = ONE
    for k in sorted(need):
        den = den * sine_factor(k) ** need[k]
    return den, need


def _local_numerator(coeff: int, mu: int, weights: Iterable[int], need: Dict[int, int]) -> VirtualCharacter:
    # 1/(s^-k - s^k) = -1/(s^k - s^-k): the sign of each negative weight is kept
    weights = list(weights)
    sign = coeff * (-1) ** sum(1 for w in weights if w < 0)
    have = Counter(abs(w) for w in weights)
    num = VirtualCharacter.monomial(mu, sign)
    for k in sorted(need):
        missing = need[k] - have.get(k, 0)
        if missing:
            num = num * sine_factor(k) ** missing
    return num


def local_sum_odd3(m: OddManifoldData, conv: Convention = LITERAL_OFF) -> RationalCharacter:
    """Uncertified fixed-point sum of a 3-manifold, as a single fraction."""
    sign = -1 if conv.codim_sign else 1
    if conv.normal_factor is NormalFactor.LITERAL:
        terms = ZERO
        for c in m.circles:
            terms = terms + VirtualCharacter.monomial(c.mu + c.n, sign * c.sigma * m.a(c.id))
        return RationalCharacter(terms)

    active = [c for c in m.circles if m.a(c.id)]
    den, need = _common_denominator([(c.n,) for c in active])
    num = ZERO
    for c in active:
        num = num + _local_numerator(sign * c.sigma * m.a(c.id), c.mu, (c.n,), need)
    return RationalCharacter(num, den)


def quantize_odd3(m: OddManifoldData, conv: Convention = LITERAL_OFF) -> VirtualCharacter:
    """Quantization character of a 3-manifold with fixed circles.

    Under the euler convention the fraction is certified by exact division;
    :class:`~oddquant.charring.NotDivisible` means the data cannot come from
    a closed manifold.
    """
    return local_sum_odd3(m, conv).reduce()


def local_sum_even(n: EvenManifoldData) -> RationalCharacter:
    sign = (-1) ** n.half_dim
    den, need = _common_denominator(p.weights for p in n.points)
    num = ZERO
    for p in n.points:
        num = num + _local_numerator(sign * p.sigma, p.mu, p.weights, need)
    return RationalCharacter(num, den)


def quantize_even_isolated(n: EvenManifoldData) -> VirtualCharacter:
    """Character of an even-dimensional manifold from its isolated fixed points.

    Each point contributes ``sigma * (-1)^half_dim * z^(mu/2) / prod_j (z^(w_j/2) - z^(-w_j/2))``.
    """
    return local_sum_even(n).reduce()


def up_surface_to_3(n: EvenManifoldData) -> OddManifoldData:
    """Pass from a surface N to N x S^1 carrying the generator of H^1(S^1)."""
    if n.half_dim != 1:
        raise ValueError(f"up_surface_to_3 needs a surface, got half_dim={n.half_dim}")
    circles: List[FixedCircle] = [FixedCircle(p.id, p.mu, p.weights[0], p.sigma) for p in n.points]
    return OddManifoldData(f"{n.name}xS1", circles, {c.id: 1 for c in circles})
