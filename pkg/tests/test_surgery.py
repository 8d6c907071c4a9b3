import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddquant.charring import VirtualCharacter as V, ZERO
from oddquant.checks import random_consum_pair, random_cut
from oddquant.fpdata import FixedCircle, OddManifoldData, s2xs1, s3
from oddquant.localize import ALL_CONVENTIONS, EULER_ON, LITERAL_OFF, local_sum_odd3, quantize_odd3
from oddquant.surgery import (
    ConSumSpec,
    CutSpec,
    SeamRecord,
    SpecError,
    connected_sum,
    correction_D,
    cut_split,
    qr_report,
    reduce_circles,
)

M1 = OddManifoldData("M1", [FixedCircle("F1", 2, 2, 1)], {"F1": 1})
M2 = OddManifoldData("M2", [FixedCircle("G1", 4, 2, 1)], {"G1": 1})


class TestConnectedSum:
    def test_worked_example(self):
        joined = connected_sum(M1, M2, ConSumSpec("F1", "G1", 2))
        (c,) = joined.circles
        assert (c.mu, c.n, c.sigma, joined.a(c.id)) == (6, 2, 1, 2)

    def test_worked_identity(self):
        joined = connected_sum(M1, M2, ConSumSpec("F1", "G1", 2))
        d = correction_D(2, 4, 1, 1, 2)
        assert d == V({8: 2, 4: -1, 6: -1})
        assert quantize_odd3(joined) == quantize_odd3(M1) + quantize_odd3(M2) + d

    def test_zero_alpha_half(self):
        m2 = M2.with_alpha({})
        joined = connected_sum(M1, m2, ConSumSpec("F1", "G1", 2))
        d = correction_D(2, 4, 1, 0, 2)
        assert quantize_odd3(joined) == quantize_odd3(M1) + d
        assert d == V({8: 1, 4: -1})

    def test_untouched_circles_kept_and_renamed(self):
        a = OddManifoldData("A", [FixedCircle("F1", 2, 2, 1), FixedCircle("X", 0, 3, -1)], {"X": 4})
        b = OddManifoldData("B", [FixedCircle("X", 1, 1, 1), FixedCircle("G1", 0, 2, 1)], {"X": 5})
        joined = connected_sum(a, b, ConSumSpec("F1", "G1", 2))
        assert [c.id for c in joined.circles] == ["F1#G1", "X", "X'"]
        assert joined.a("X") == 4 and joined.a("X'") == 5

    @pytest.mark.parametrize("spec", [ConSumSpec("nope", "G1", 2), ConSumSpec("F1", "nope", 2), ConSumSpec("F1", "G1", 3)])
    def test_spec_errors(self, spec):
        with pytest.raises(SpecError):
            connected_sum(M1, M2, spec)

    def test_zero_speed(self):
        with pytest.raises(SpecError):
            ConSumSpec("F1", "G1", 0)

    def test_sigma_mismatch_warns(self):
        m2 = OddManifoldData("M2", [FixedCircle("G1", 4, 2, -1)], {"G1": 1})
        with pytest.warns(UserWarning):
            joined = connected_sum(M1, m2, ConSumSpec("F1", "G1", 2))
        assert joined.circles[0].sigma == 1


class TestCorrectionD:
    def test_collapses(self):
        assert correction_D(3, 0, 5, 0, 1) == ZERO

    def test_no_alpha(self):
        assert correction_D(3, 7, 0, 0, 2) == ZERO


@settings(max_examples=200)
@given(st.integers(0, 2**32))
def test_connected_sum_identity_and_commutativity(seed):
    rng = random.Random(seed)
    m1, m2, spec = random_consum_pair(rng)
    c1, c2 = m1.circle(spec.left_circle), m2.circle(spec.right_circle)
    joined = connected_sum(m1, m2, spec)
    expected = quantize_odd3(m1) + quantize_odd3(m2) + correction_D(c1.mu, c2.mu, m1.a(c1.id), m2.a(c2.id), spec.l)
    assert quantize_odd3(joined, LITERAL_OFF) == expected
    other = connected_sum(m2, m1, ConSumSpec(spec.right_circle, spec.left_circle, spec.l))
    assert quantize_odd3(other) == quantize_odd3(joined)


class TestCut:
    def test_t3_pattern(self):
        spec = CutSpec(seam=[SeamRecord(1, 2), SeamRecord(3, -2)])
        plus, minus = cut_split(OddManifoldData("T3"), spec)
        assert [(c.mu, c.n, c.sigma) for c in plus.circles] == [(1, 1, 1), (3, 1, 1)]
        assert [(c.mu, c.n, c.sigma) for c in minus.circles] == [(1, 1, -1), (3, 1, -1)]
        for conv in ALL_CONVENTIONS:
            assert quantize_odd3(plus, conv) == -quantize_odd3(minus, conv)
            assert quantize_odd3(plus, conv) != ZERO

    def test_plain_partition(self):
        m = s2xs1(1, 3, -3, 1)
        plus, minus = cut_split(m, CutSpec({"N"}, {"S"}))
        assert quantize_odd3(m) == quantize_odd3(plus) + quantize_odd3(minus)

    def test_s2xs1_with_seam(self):
        m = s2xs1(1, 3, -3, 1)
        plus, minus = cut_split(m, CutSpec({"N", "S"}, set(), [SeamRecord(1, 4)]))
        for conv in ALL_CONVENTIONS:
            assert local_sum_odd3(m, conv) == local_sum_odd3(plus, conv) + local_sum_odd3(minus, conv)

    def test_seam_ids_avoid_collisions(self):
        m = OddManifoldData("M", [FixedCircle("Z0", 0, 1, 1)], {"Z0": 1})
        plus, _ = cut_split(m, CutSpec({"Z0"}, set(), [SeamRecord(0, 1)]))
        assert [c.id for c in plus.circles] == ["Z0", "Z0'"]

    @pytest.mark.parametrize(
        "plus,minus", [({"N"}, set()), ({"N", "S", "Q"}, set())]
    )
    def test_non_partition(self, plus, minus):
        with pytest.raises(SpecError):
            cut_split(s2xs1(1, 1, 1, 1), CutSpec(plus, minus))

    def test_overlap(self):
        with pytest.raises(SpecError):
            CutSpec({"N"}, {"N", "S"})


@settings(max_examples=100)
@given(st.integers(0, 2**32), st.booleans())
def test_additivity_random(seed, genuine):
    m, spec = random_cut(random.Random(seed), genuine)
    plus, minus = cut_split(m, spec)
    for conv in ALL_CONVENTIONS:
        assert local_sum_odd3(m, conv) == local_sum_odd3(plus, conv) + local_sum_odd3(minus, conv)
    if genuine:
        assert quantize_odd3(m, EULER_ON) == quantize_odd3(plus, EULER_ON) + quantize_odd3(minus, EULER_ON)


class TestReduce:
    def test_sum(self):
        assert reduce_circles(CutSpec(seam=[SeamRecord(0, 3), SeamRecord(5, -1)])) == 2

    def test_empty(self):
        assert reduce_circles(CutSpec()) == 0

    @given(st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9))), st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9))))
    def test_additive_under_concatenation(self, s1, s2):
        r1 = [SeamRecord(*t) for t in s1]
        r2 = [SeamRecord(*t) for t in s2]
        assert reduce_circles(CutSpec(seam=r1 + r2)) == reduce_circles(CutSpec(seam=r1)) + reduce_circles(CutSpec(seam=r2))


class TestQR:
    def test_s3(self):
        r = qr_report(s3(2, 3, 5), CutSpec(seam=[SeamRecord(5, 0)]))
        assert (r.q_invariant, r.q_reduced, r.equal) == (0, 0, True)

    def test_empty(self):
        r = qr_report(OddManifoldData("e"), CutSpec())
        assert (r.q_invariant, r.q_reduced, r.equal) == (0, 0, True)

    @pytest.mark.parametrize("d", [-3, -1, 0, 2])
    def test_s2xs1(self, d):
        r = qr_report(s2xs1(1, 3, -3, 1), CutSpec({"N"}, {"S"}, [SeamRecord(0, d)]), EULER_ON)
        assert r.q_invariant == -1
        assert r.q_reduced == d
        assert r.equal == (d == -1)

    def test_lines(self):
        assert qr_report(OddManifoldData("e"), CutSpec()).lines() == ["q_invariant: 0", "q_reduced: 0", "equal: true"]


def test_spec_json_roundtrip():
    c = CutSpec({"b", "a"}, {"c"}, [SeamRecord(1, -2)])
    assert CutSpec.from_json(c.to_json()) == c
    s = ConSumSpec("F1", "G1", 2)
    assert ConSumSpec.from_json(s.to_json()) == s


@pytest.mark.parametrize(
    "doc",
    [{"plus": [], "minus": []}, {"plus": [], "minus": [], "seam": [{"mu": 1}]}, {"plus": [], "minus": [], "seam": [{"mu": 1, "a": 1, "x": 0}]}, [], {"plus": 3, "minus": [], "seam": []}],
)
def test_bad_cut_json(doc):
    with pytest.raises(SpecError):
        CutSpec.from_json(doc)
