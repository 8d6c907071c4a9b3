"""Seeded, deterministic theorem-check suites.

Each suite draws ``cases`` random instances from ``random.Random(seed)`` and
records every case where the two sides of an identity disagree.
"""
from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from .charring import (
    NotDivisible,
    ONE,
    VirtualCharacter,
    ZERO,
    canonical_string,
    exact_quotient,
    invariant_part,
    parse_character,
)
from .fpdata import (
    EvenManifoldData,
    FixedCircle,
    IsolatedFixedPoint,
    OddManifoldData,
    ValidationError,
    disjoint_union,
    s2xs1,
    s3,
    sphere,
)
from .localize import (
    ALL_CONVENTIONS,
    EULER_ON,
    LITERAL_OFF,
    NormalFactor,
    local_sum_even,
    local_sum_odd3,
    quantize_even_isolated,
    quantize_odd3,
    up_surface_to_3,
)
from .surgery import (
    ConSumSpec,
    CutSpec,
    SeamRecord,
    connected_sum,
    correction_D,
    cut_split,
    qr_report,
    reduce_circles,
)

DEFAULT_SEED = 20240601


@dataclass
class Failure:
    digest: str
    expected: str
    actual: str


@dataclass
class CheckReport:
    check_name: str
    seed: int
    cases_run: int = 0
    failures: List[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, inputs: Any, expected: Any, actual: Any) -> bool:
        if expected == actual:
            return True
        self.failures.append(Failure(digest(inputs), _text(expected), _text(actual)))
        return False

    def lines(self) -> List[str]:
        out = [
            f"check: {self.check_name}",
            f"seed: {self.seed}",
            f"cases_run: {self.cases_run}",
            f"failures: {len(self.failures)}",
        ]
        for f in self.failures:
            out.append(f"failure: {f.digest} expected={f.expected} actual={f.actual}")
        out.append(f"result: {'pass' if self.passed else 'fail'}")
        return out


def _text(x: Any) -> str:
    if isinstance(x, VirtualCharacter):
        return canonical_string(x)
    return str(x)


def digest(inputs: Any) -> str:
    blob = json.dumps(inputs, sort_keys=True, default=repr).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


# -- random data -----------------------------------------------------------

def random_character(rng: random.Random, max_terms: int = 20, max_exp: int = 40, max_coeff: int = 100) -> VirtualCharacter:
    n = rng.randint(0, max_terms)
    return VirtualCharacter.from_pairs(
        (rng.randint(-max_exp, max_exp), rng.randint(-max_coeff, max_coeff)) for _ in range(n)
    )


def random_nonzero_character(rng: random.Random, **kw) -> VirtualCharacter:
    while True:
        c = random_character(rng, **kw)
        if c:
            return c


def random_sphere_params(rng: random.Random, max_l: int = 5, max_mu: int = 15) -> Tuple[int, int, int]:
    """Speed and pole weights with the right parity and ``2l | mu_N - mu_S``."""
    while True:
        l = rng.randint(1, max_l)
        mu_s = rng.randint(-max_mu, max_mu)
        mu_n = rng.randint(-max_mu, max_mu)
        if (mu_s - l) % 2 == 0 and (mu_n - mu_s) % (2 * l) == 0:
            return l, mu_n, mu_s


def random_block(rng: random.Random, a: int) -> OddManifoldData:
    """An S^2 x S^1 piece with both circles carrying ``a``, possibly orientation-reversed."""
    l, mu_n, mu_s = random_sphere_params(rng)
    block = s2xs1(l, mu_n, mu_s, a)
    if rng.random() < 0.3:
        block = OddManifoldData(
            block.name,
            [FixedCircle(c.id, c.mu, c.n, -c.sigma) for c in block.circles],
            block.alpha,
        )
    return block


def random_genuine_odd(rng: random.Random, max_blocks: int = 4) -> Tuple[OddManifoldData, List[str]]:
    """Disjoint union of S^2 x S^1 blocks and S^3 pieces.

    Returns the manifold with zero alpha plus the list of block prefixes so
    callers can assign alpha per block; such data is divisible under every
    convention.
    """
    parts = [random_block(rng, 0) for _ in range(rng.randint(0, max_blocks))]
    if rng.random() < 0.3:
        n1 = rng.choice([v for v in range(-4, 5) if v])
        parts.append(s3(n1, 0, rng.randint(-6, 6)))
    m = disjoint_union("genuine", parts)
    groups: Dict[str, List[str]] = {}
    for c in m.circles:
        groups.setdefault(c.id.split(".")[0], []).append(c.id)
    # S^3 circles must keep alpha = 0
    blocks = [g for g, ids in groups.items() if len(ids) == 2]
    return m, blocks


def block_alpha(m: OddManifoldData, blocks: List[str], values: Dict[str, int]) -> Dict[str, int]:
    return {c.id: values[c.id.split(".")[0]] for c in m.circles if c.id.split(".")[0] in blocks}


def random_odd(rng: random.Random, max_circles: int = 6, max_mu: int = 20, max_n: int = 6, max_a: int = 10) -> OddManifoldData:
    """Unconstrained circle data; only meaningful as a fraction under the euler convention."""
    k = rng.randint(0, max_circles)
    circles = []
    for i in range(k):
        n = rng.choice([v for v in range(-max_n, max_n + 1) if v])
        circles.append(FixedCircle(f"F{i}", rng.randint(-max_mu, max_mu), n, rng.choice((1, -1))))
    alpha = {c.id: rng.randint(-max_a, max_a) for c in circles if rng.random() < 0.8}
    return OddManifoldData("random", circles, alpha)


def random_consum_pair(rng: random.Random) -> Tuple[OddManifoldData, OddManifoldData, ConSumSpec]:
    l = rng.randint(1, 6)

    def side(tag: str) -> OddManifoldData:
        m = random_odd(rng, max_circles=4)
        mu = rng.randint(-20, 20)
        if (mu + l) % 2:
            mu += 1 if mu < 20 else -1
        glue = FixedCircle(f"{tag}glue", mu, l, 1)
        alpha = dict(m.alpha)
        alpha[glue.id] = rng.randint(-10, 10)
        return OddManifoldData(tag, list(m.circles) + [glue], alpha)

    m1, m2 = side("A"), side("B")
    return m1, m2, ConSumSpec("Aglue", "Bglue", l)


def random_seam(rng: random.Random, paired: bool) -> List[SeamRecord]:
    if not paired:
        return [SeamRecord(rng.randint(-20, 20), rng.randint(-10, 10)) for _ in range(rng.randint(0, 4))]
    recs = []
    for _ in range(rng.randint(0, 2)):
        mu = rng.randint(-20, 20)
        mu2 = mu + 2 * rng.randint(-5, 5)
        d = rng.randint(-10, 10)
        recs += [SeamRecord(mu, d), SeamRecord(mu2, -d)]
    return recs


def random_cut(rng: random.Random, genuine: bool) -> Tuple[OddManifoldData, CutSpec]:
    """A manifold plus a cut.

    Genuine cuts keep each S^2 x S^1 block on one side and use paired seams,
    so every piece is divisible under the euler convention too.
    """
    if genuine:
        m, blocks = random_genuine_odd(rng)
        m = m.with_alpha(block_alpha(m, blocks, {b: rng.randint(-10, 10) for b in blocks}))
        side_of = {}
        for c in m.circles:
            g = c.id.split(".")[0]
            side_of.setdefault(g, rng.random() < 0.5)
        plus = {c.id for c in m.circles if side_of[c.id.split(".")[0]]}
    else:
        m = random_odd(rng)
        plus = {c.id for c in m.circles if rng.random() < 0.5}
    minus = {c.id for c in m.circles} - plus
    return m, CutSpec(frozenset(plus), frozenset(minus), random_seam(rng, paired=genuine))


# -- suites ----------------------------------------------------------------

def check_ring(seed: int = DEFAULT_SEED, cases: int = 200) -> CheckReport:
    rep = CheckReport("ring", seed)
    rng = random.Random(seed)
    for _ in range(cases):
        a, b, c = (random_character(rng) for _ in range(3))
        key = [canonical_string(x) for x in (a, b, c)]
        rep.expect(key + ["assoc+"], (a + b) + c, a + (b + c))
        rep.expect(key + ["assoc*"], (a * b) * c, a * (b * c))
        rep.expect(key + ["comm+"], a + b, b + a)
        rep.expect(key + ["comm*"], a * b, b * a)
        rep.expect(key + ["distrib"], a * (b + c), a * b + a * c)
        rep.expect(key + ["id+"], a + ZERO, a)
        rep.expect(key + ["id*"], a * ONE, a)
        rep.expect(key + ["inverse"], a + (-a), ZERO)
        rep.expect(key + ["inv_part"], invariant_part(a + b), invariant_part(a) + invariant_part(b))
        rep.expect(key + ["parse"], parse_character(canonical_string(a)), a)
        if b:
            rep.expect(key + ["quotient"], exact_quotient(a * b, b), a)
        rep.cases_run += 1
    return rep


def check_linearity(seed: int = DEFAULT_SEED, cases: int = 100) -> CheckReport:
    rep = CheckReport("linearity", seed)
    rng = random.Random(seed)
    for _ in range(cases):
        m, blocks = random_genuine_odd(rng)
        v1 = {b: rng.randint(-10, 10) for b in blocks}
        v2 = {b: rng.randint(-10, 10) for b in blocks}
        m1 = m.with_alpha(block_alpha(m, blocks, v1))
        m2 = m.with_alpha(block_alpha(m, blocks, v2))
        m12 = m.with_alpha(block_alpha(m, blocks, {b: v1[b] + v2[b] for b in blocks}))
        for conv in ALL_CONVENTIONS:
            key = [_manifest_key(m12), v1, v2, conv.label()]
            rep.expect(key, quantize_odd3(m1, conv) + quantize_odd3(m2, conv), quantize_odd3(m12, conv))
        rep.cases_run += 1
    return rep


def check_updown(seed: int = DEFAULT_SEED, cases: int = 50) -> CheckReport:
    rep = CheckReport("updown", seed)
    rng = random.Random(seed)
    for _ in range(cases):
        params = random_sphere_params(rng)
        n = sphere(*params)
        even = quantize_even_isolated(n)
        odd = quantize_odd3(up_surface_to_3(n), EULER_ON)
        rep.expect(list(params), even, odd)
        if params[1] != params[2]:
            rep.expect(list(params) + ["nonzero"], True, bool(even) and bool(odd))
        rep.cases_run += 1
    return rep


def check_integrality(seed: int = DEFAULT_SEED, cases: int = 50) -> CheckReport:
    rep = CheckReport("integrality", seed)
    rng = random.Random(seed)
    for _ in range(cases):
        l, mu_n, mu_s = random_sphere_params(rng)
        n = sphere(l, mu_n, mu_s)
        frac = local_sum_even(n)
        try:
            q = exact_quotient(frac.numerator, frac.denominator)
            rep.expect([l, mu_n, mu_s], True, q.is_integral() and q * frac.denominator == frac.numerator)
        except NotDivisible:
            rep.expect([l, mu_n, mu_s], "divisible", "NotDivisible")
        try:
            IsolatedFixedPoint("N", mu_n + 1, (l,), 1)
            rep.expect([l, mu_n + 1, "parity"], "ValidationError", "accepted")
        except ValidationError:
            pass
        lone = EvenManifoldData("lone", 1, [IsolatedFixedPoint("p", mu_n, (l,), 1)])
        try:
            q = quantize_even_isolated(lone)
            rep.expect([l, mu_n, "lone"], "NotDivisible", canonical_string(q))
        except NotDivisible:
            pass
        rep.cases_run += 1
    return rep


def check_consum(seed: int = DEFAULT_SEED, cases: int = 100) -> CheckReport:
    rep = CheckReport("consum", seed)
    rng = random.Random(seed)
    for _ in range(cases):
        m1, m2, spec = random_consum_pair(rng)
        c1, c2 = m1.circle(spec.left_circle), m2.circle(spec.right_circle)
        joined = connected_sum(m1, m2, spec)
        expected = (
            quantize_odd3(m1, LITERAL_OFF)
            + quantize_odd3(m2, LITERAL_OFF)
            + correction_D(c1.mu, c2.mu, m1.a(c1.id), m2.a(c2.id), spec.l)
        )
        key = [_manifest_key(m1), _manifest_key(m2), spec.to_json()]
        rep.expect(key, expected, quantize_odd3(joined, LITERAL_OFF))
        flipped = connected_sum(m2, m1, ConSumSpec(spec.right_circle, spec.left_circle, spec.l))
        rep.expect(key + ["commute"], quantize_odd3(joined), quantize_odd3(flipped))
        rep.cases_run += 1
    return rep


def check_additivity(seed: int = DEFAULT_SEED, cases: int = 100) -> CheckReport:
    rep = CheckReport("additivity", seed)
    rng = random.Random(seed)
    for i in range(cases):
        genuine = i % 2 == 0
        m, spec = random_cut(rng, genuine)
        plus, minus = cut_split(m, spec)
        key = [_manifest_key(m), spec.to_json()]
        for conv in ALL_CONVENTIONS:
            whole = local_sum_odd3(m, conv)
            parts = local_sum_odd3(plus, conv) + local_sum_odd3(minus, conv)
            if whole != parts:
                rep.failures.append(Failure(digest(key + [conv.label()]), repr(whole), repr(parts)))
            if genuine or conv.normal_factor is NormalFactor.LITERAL:
                rep.expect(
                    key + [conv.label(), "reduced"],
                    quantize_odd3(m, conv),
                    quantize_odd3(plus, conv) + quantize_odd3(minus, conv),
                )
        rep.expect(key + ["reduce"], reduce_circles(spec), sum(r.a for r in spec.seam))
        rep.cases_run += 1
    # the T^3 pattern: no interior circles, every fixed circle comes from a seam
    for _ in range(max(1, cases // 10)):
        seam = random_seam(rng, paired=True) or [SeamRecord(1, 1), SeamRecord(3, -1)]
        spec = CutSpec(frozenset(), frozenset(), seam)
        plus, minus = cut_split(OddManifoldData("T3"), spec)
        for conv in ALL_CONVENTIONS:
            rep.expect([spec.to_json(), conv.label(), "T3"], -quantize_odd3(minus, conv), quantize_odd3(plus, conv))
        rep.cases_run += 1
    return rep


def check_s3zero(seed: int = DEFAULT_SEED, cases: int = 50) -> CheckReport:
    rep = CheckReport("s3zero", seed)
    rng = random.Random(seed)
    nonzero = [v for v in range(-9, 10) if v]
    for _ in range(cases):
        n1, n2, mu = rng.choice(nonzero), rng.choice(nonzero), rng.randint(-10, 10)
        m = s3(n1, n2, mu)
        for conv in ALL_CONVENTIONS:
            rep.expect([n1, n2, mu, conv.label()], ZERO, quantize_odd3(m, conv))
        # a cut along a free torus; alpha restricts to zero on Z/S^1
        spec = CutSpec(frozenset(), frozenset(), [SeamRecord(mu, 0)])
        r = qr_report(m, spec, LITERAL_OFF)
        rep.expect([n1, n2, mu, "qr"], (0, 0, True), (r.q_invariant, r.q_reduced, r.equal))
        rep.cases_run += 1
    return rep


def _manifest_key(m: OddManifoldData) -> Any:
    return [[c.id, c.mu, c.n, c.sigma, m.a(c.id)] for c in m.circles]


SUITES: Dict[str, Callable[..., CheckReport]] = {
    "ring": check_ring,
    "linearity": check_linearity,
    "updown": check_updown,
    "consum": check_consum,
    "additivity": check_additivity,
    "integrality": check_integrality,
    "s3zero": check_s3zero,
}

DEFAULT_CASES = {
    "ring": 200,
    "linearity": 100,
    "updown": 50,
    "consum": 100,
    "additivity": 100,
    "integrality": 50,
    "s3zero": 50,
}


def run_suite(name: str, seed: Optional[int] = None, cases: Optional[int] = None) -> CheckReport:
    fn = SUITES[name]
    return fn(DEFAULT_SEED if seed is None else seed, DEFAULT_CASES[name] if cases is None else cases)
