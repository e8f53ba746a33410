import math
import random

import pytest

from crtspectra.field import build_field, element_of_order
from crtspectra.sequences import (AnfCombiner, BitSequence, Lfsr,
                                  combiner_stream, cyclic_convolve,
                                  lfsr_stream, pointwise_product,
                                  sequence_period)

import reference_values as rv


def test_bitsequence_basics():
    s = BitSequence.from_string("0010111")
    assert s.period == 7
    assert s.bit(0) == 0 and s.bit(2) == 1
    assert s.bit(9) == s.bit(2)          # periodic extension
    assert str(s) == "0010111"
    with pytest.raises(ValueError):
        BitSequence(())
    with pytest.raises(ValueError):
        BitSequence.from_string("01x")


def test_lfsr_validation():
    with pytest.raises(ValueError):
        Lfsr(0x1, 0b1)      # degree 0
    with pytest.raises(ValueError):
        Lfsr(0x6, 0b1)      # even constant term: not a pure recurrence
    with pytest.raises(ValueError):
        Lfsr(0xB, 0b1000)   # state wider than the register


def test_reference_streams():
    assert str(lfsr_stream(Lfsr(*rv.LFSR_A), 3)) == rv.STREAM_A
    assert str(lfsr_stream(Lfsr(*rv.LFSR_B), 7)) == rv.STREAM_B
    assert str(lfsr_stream(Lfsr(*rv.LFSR_C), 31)) == rv.STREAM_C


def test_seed_string_orientation():
    # leftmost character of the seed is s_0
    l = Lfsr.from_seed_string(0xB, "001")
    assert str(lfsr_stream(l, 7)) == "0010111"


def test_run_does_not_mutate_register():
    l = Lfsr(*rv.LFSR_B)
    first = lfsr_stream(l, 7)
    second = lfsr_stream(l, 7)
    assert first == second


def test_zero_state_flagged():
    with pytest.warns(RuntimeWarning):
        s = lfsr_stream(Lfsr(0xB, 0), 5)
    assert str(s) == "00000"


def test_sequence_period_examples():
    assert sequence_period("011011") == 3
    assert sequence_period("0010111") == 7
    assert sequence_period("0000") == 1
    assert sequence_period(BitSequence.from_string(rv.STREAM_C * 2)) == 31


def test_sequence_period_sampled():
    rng = random.Random(17)
    for _ in range(100):
        p = rng.randrange(1, 12)
        reps = rng.randrange(1, 5)
        core = [rng.randrange(2) for _ in range(p)]
        s = core * reps
        q = sequence_period(s)
        assert len(s) % q == 0 and q <= p
        assert all(s[i] == s[i % q] for i in range(len(s)))


def test_pointwise_product_reference():
    a = BitSequence.from_string(rv.STREAM_A)
    b = BitSequence.from_string(rv.STREAM_B)
    assert str(pointwise_product(a, b)) == rv.PRODUCT_AB


def test_pointwise_product_identity_and_zero():
    b = BitSequence.from_string(rv.STREAM_B)
    ones = BitSequence.from_string("1")
    zeros = BitSequence.from_string("0")
    assert pointwise_product(b, ones) == b
    assert pointwise_product(b, zeros).period == 1


def test_pointwise_product_period_divides_lcm():
    rng = random.Random(23)
    for _ in range(60):
        s = [rng.randrange(2) for _ in range(rng.randrange(1, 9))]
        t = [rng.randrange(2) for _ in range(rng.randrange(1, 9))]
        u = pointwise_product(BitSequence(tuple(s)), BitSequence(tuple(t)))
        assert math.lcm(len(s), len(t)) % u.period == 0


def test_anf_parse_and_cancellation():
    f = AnfCombiner.parse("1*2+2*3+1*3")
    assert f.n_vars == 3
    assert len(f.monomials) == 3
    # duplicated monomial cancels in characteristic 2
    g = AnfCombiner.parse("1*2+1*2+2*3", n_vars=3)
    h = AnfCombiner.parse("2*3", n_vars=3)
    for x in range(2):
        for y in range(2):
            for z in range(2):
                assert g.evaluate((x, y, z)) == h.evaluate((x, y, z))
    with pytest.raises(ValueError):
        AnfCombiner(2, [[]])


def test_combiner_stream_reference():
    seqs = [BitSequence.from_string(x)
            for x in (rv.STREAM_A, rv.STREAM_B, rv.STREAM_C)]
    f = AnfCombiner.parse(rv.COMBINER_ANF)
    s = combiner_stream(f, seqs)
    assert s.period == 651
    assert str(s).startswith(rv.COMBINER_PREFIX)


def test_combiner_arity_mismatch():
    f = AnfCombiner.parse("1*2", n_vars=2)
    one = BitSequence.from_string("01")
    with pytest.raises(ValueError):
        combiner_stream(f, [one])


def test_cyclic_convolve_delta_is_identity():
    fld = build_field(6)
    rng = random.Random(29)
    n = 7
    delta = [fld.one] + [fld.zero] * (n - 1)
    vec = [fld.element(rng.randrange(64)) for _ in range(n)]
    assert cyclic_convolve(vec, delta) == vec


def test_cyclic_convolve_rejections():
    fld = build_field(6)
    v3 = [fld.one] * 3
    with pytest.raises(ValueError):
        cyclic_convolve(v3, [fld.one] * 5)      # length mismatch
    with pytest.raises(ValueError):
        cyclic_convolve([fld.one] * 4, [fld.one] * 4)   # even length
    other = build_field(3)
    with pytest.raises(ValueError):
        cyclic_convolve(v3, [other.one] * 3)    # mixed fields
