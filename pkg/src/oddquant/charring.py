"""Virtual characters of the circle group with half-integer weights.

A character is a finite Laurent polynomial in ``s = z^(1/2)`` with integer
coefficients.  Exponents are always stored in s-units, so the s-exponent
``k`` stands for ``z^(k/2)``.  Coefficients are Python ints and therefore
unbounded.
"""
from __future__ import annotations

import re
from typing import Dict, Iterable, Iterator, Mapping, Tuple


class NotDivisible(ArithmeticError):
    """Raised when a character is not an exact multiple of another."""


class VirtualCharacter:
    """Immutable integer combination of powers of ``s = z^(1/2)``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: Dict[int, int] = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[int(k)] = int(c)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def monomial(cls, s_exp: int, coeff: int = 1) -> "VirtualCharacter":
        return cls({s_exp: coeff})

    @classmethod
    def constant(cls, c: int) -> "VirtualCharacter":
        return cls({0: c})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "VirtualCharacter":
        acc: Dict[int, int] = {}
        for k, c in pairs:
            acc[k] = acc.get(k, 0) + c
        return cls(acc)

    @property
    def terms(self) -> Dict[int, int]:
        """Copy of the canonical ``{s_exponent: coefficient}`` map."""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms.items())

    def coeff(self, s_exp: int) -> int:
        return self._terms.get(s_exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        """True iff every s-exponent is even, i.e. the character lies in R(S^1)."""
        return all(k % 2 == 0 for k in self._terms)

    def min_exp(self) -> int:
        return next(iter(self._terms))

    def max_exp(self) -> int:
        return next(reversed(self._terms))

    def shift(self, k: int) -> "VirtualCharacter":
        """Multiply by ``s^k``."""
        return VirtualCharacter({e + k: c for e, c in self._terms.items()})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = VirtualCharacter.constant(other)
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: "VirtualCharacter | int") -> "VirtualCharacter":
        return char_sum(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "VirtualCharacter":
        return VirtualCharacter({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "VirtualCharacter | int") -> "VirtualCharacter":
        return char_sum(self, -_coerce(other))

    def __rsub__(self, other: int) -> "VirtualCharacter":
        return char_sum(_coerce(other), -self)

    def __mul__(self, other: "VirtualCharacter | int") -> "VirtualCharacter":
        if isinstance(other, int):
            return VirtualCharacter({k: c * other for k, c in self._terms.items()})
        return char_product(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "VirtualCharacter":
        if n < 0:
            raise ValueError("negative powers are not characters")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self) -> str:
        return f"VirtualCharacter({canonical_string(self)!r})"

    def __str__(self) -> str:
        return canonical_string(self)


def _coerce(x: "VirtualCharacter | int") -> VirtualCharacter:
    if isinstance(x, VirtualCharacter):
        return x
    if isinstance(x, int):
        return VirtualCharacter.constant(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a character")


ZERO = VirtualCharacter()
ONE = VirtualCharacter.constant(1)


def char_sum(a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    acc = a.terms
    for k, c in b.items():
        acc[k] = acc.get(k, 0) + c
    return VirtualCharacter(acc)


def char_product(a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    acc: Dict[int, int] = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            acc[k] = acc.get(k, 0) + ca * cb
    return VirtualCharacter(acc)


def exact_quotient(num: VirtualCharacter, den: VirtualCharacter) -> VirtualCharacter:
    """Return ``q`` with ``q * den == num``.

    Both operands are shifted so their lowest exponent is 0 and then divided
    as integer polynomials, highest degree first.  Any nonzero remainder or a
    non-integral step raises :class:`NotDivisible`.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero character")
    if num.is_zero():
        return ZERO

    lo_n, lo_d = num.min_exp(), den.min_exp()
    rem = [0] * (num.max_exp() - lo_n + 1)
    for k, c in num.items():
        rem[k - lo_n] = c
    dcoef = [0] * (den.max_exp() - lo_d + 1)
    for k, c in den.items():
        dcoef[k - lo_d] = c

    deg_d = len(dcoef) - 1
    lead = dcoef[-1]
    if len(rem) - 1 < deg_d:
        raise NotDivisible(f"{num} is not divisible by {den}")

    quot = [0] * (len(rem) - deg_d)
    for i in range(len(rem) - 1, deg_d - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise NotDivisible(f"{num} is not divisible by {den}")
        j = i - deg_d
        quot[j] = q
        for t, dc in enumerate(dcoef):
            if dc:
                rem[j + t] -= q * dc
    if any(rem[:deg_d]):
        raise NotDivisible(f"{num} is not divisible by {den}")

    shift = lo_n - lo_d
    return VirtualCharacter({j + shift: c for j, c in enumerate(quot) if c})


def invariant_part(a: VirtualCharacter) -> int:
    """Multiplicity of the trivial representation."""
    return a.coeff(0)


class RationalCharacter:
    """Quotient of two virtual characters, compared by cross-multiplication."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: VirtualCharacter, denominator: VirtualCharacter = ONE):
        if denominator.is_zero():
            raise ZeroDivisionError("rational character with zero denominator")
        self.numerator = numerator
        self.denominator = denominator

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VirtualCharacter):
            other = RationalCharacter(other)
        if not isinstance(other, RationalCharacter):
            return NotImplemented
        return (self.numerator * other.denominator) == (other.numerator * self.denominator)

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "RationalCharacter | VirtualCharacter") -> "RationalCharacter":
        if isinstance(other, VirtualCharacter):
            other = RationalCharacter(other)
        if self.denominator == other.denominator:
            return RationalCharacter(self.numerator + other.numerator, self.denominator)
        return RationalCharacter(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalCharacter":
        return RationalCharacter(-self.numerator, self.denominator)

    def __sub__(self, other: "RationalCharacter | VirtualCharacter") -> "RationalCharacter":
        return self + (-other)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def reduce(self) -> VirtualCharacter:
        """Certify the quotient is a virtual character and return it."""
        return exact_quotient(self.numerator, self.denominator)

    def __repr__(self) -> str:
        return f"RationalCharacter(({self.numerator}) / ({self.denominator}))"


# -- text form -------------------------------------------------------------

def _render_power(k: int) -> str:
    if k % 2:
        return f"z^({k}/2)"
    e = k // 2
    return "z" if e == 1 else f"z^{e}"


def canonical_string(a: VirtualCharacter) -> str:
    """Render ``a`` with terms in increasing exponent order, e.g. ``"-3*z^(-1/2) + 2 + z^2"``."""
    if a.is_zero():
        return "0"
    parts = []
    for i, (k, c) in enumerate(a.items()):
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif mag == 1:
            body = _render_power(k)
        else:
            body = f"{mag}*{_render_power(k)}"
        if i == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


_TERM = re.compile(
    r"""(?:(?P<coeff>\d+)\*)?z(?:\^(?:\((?P<half>-?\d+)/2\)|(?P<int>-?\d+)))?
      |(?P<const>\d+)""",
    re.VERBOSE,
)


def parse_character(text: str) -> VirtualCharacter:
    """Inverse of :func:`canonical_string`.  Also accepts non-canonical term order."""
    s = text.strip()
    if s == "0":
        return ZERO
    pos = 0
    sign = 1
    if s.startswith("-"):
        sign, pos = -1, 1
    acc: Dict[int, int] = {}
    while True:
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"bad character term at offset {pos} in {text!r}")
        if m.group("const") is not None:
            k, c = 0, int(m.group("const"))
        else:
            c = int(m.group("coeff")) if m.group("coeff") else 1
            if m.group("half") is not None:
                k = int(m.group("half"))
                if k % 2 == 0:
                    raise ValueError(f"half exponent must be odd in {text!r}")
            elif m.group("int") is not None:
                k = 2 * int(m.group("int"))
            else:
                k = 2
        acc[k] = acc.get(k, 0) + sign * c
        pos = m.end()
        if pos == len(s):
            break
        if s.startswith(" + ", pos):
            sign = 1
        elif s.startswith(" - ", pos):
            sign = -1
        else:
            raise ValueError(f"expected ' + ' or ' - ' at offset {pos} in {text!r}")
        pos += 3
    return VirtualCharacter(acc)
