import random

import pytest

from crtspectra.bm import berlekamp_massey, BmResult, regenerate
from crtspectra.sequences import BitSequence, Lfsr, lfsr_stream, pointwise_product

import reference_values as rv


def _product_bits(x, y, n):
    a = BitSequence.from_string(x)
    b = BitSequence.from_string(y)
    u = pointwise_product(a, b)
    return [u.bit(t) for t in range(n)]


def test_reference_product_ab():
    r = berlekamp_massey(_product_bits(rv.STREAM_A, rv.STREAM_B, 42))
    assert r.linear_complexity == 6
    assert r.minimal_poly == rv.G_AB


def test_reference_product_bc():
    r = berlekamp_massey(_product_bits(rv.STREAM_B, rv.STREAM_C, 434))
    assert r.linear_complexity == 15
    assert r.minimal_poly == rv.G_BC


def test_reference_product_ac():
    r = berlekamp_massey(_product_bits(rv.STREAM_A, rv.STREAM_C, 186))
    assert r.linear_complexity == 10
    assert r.minimal_poly == rv.G_AC


def test_all_zero():
    r = berlekamp_massey([0] * 16)
    assert r.linear_complexity == 0
    assert r.minimal_poly == 1


def test_result_invariant():
    with pytest.raises(ValueError):
        BmResult(3, 0x3)    # degree 1 polynomial cannot claim L = 3


def test_lfsr_output_recovers_register_length():
    rng = random.Random(31)
    # primitive connections of a few degrees; nonzero seeds
    for conn in (0x7, 0xB, 0xD, 0x19, 0x25):
        m = conn.bit_length() - 1
        seed = rng.randrange(1, 1 << m)
        bits = list(lfsr_stream(Lfsr(conn, seed), 4 * m))
        r = berlekamp_massey(bits)
        assert r.linear_complexity == m
        assert regenerate(r, bits[:m], 4 * m) == bits


def test_regenerate_zero_complexity():
    r = berlekamp_massey([0, 0, 0, 0])
    assert regenerate(r, [], 6) == [0] * 6


def test_regenerate_needs_exactly_l_seed_bits():
    r = berlekamp_massey(_product_bits(rv.STREAM_A, rv.STREAM_B, 42))
    with pytest.raises(ValueError):
        regenerate(r, [0] * 5, 21)


def test_combiner_regeneration_full_period():
    seqs = [BitSequence.from_string(x)
            for x in (rv.STREAM_A, rv.STREAM_B, rv.STREAM_C)]
    from crtspectra.sequences import AnfCombiner, combiner_stream
    s = combiner_stream(AnfCombiner.parse(rv.COMBINER_ANF), seqs)
    bits = [s.bit(t) for t in range(1302)]
    r = berlekamp_massey(bits)
    assert r.linear_complexity == 31
    assert r.minimal_poly == rv.G_COMBINER
    assert regenerate(r, bits[:31], 651) == bits[:651]


def test_random_short_sequences_regenerate():
    rng = random.Random(37)
    for _ in range(80):
        n = rng.randrange(2, 40)
        bits = [rng.randrange(2) for _ in range(n)]
        r = berlekamp_massey(bits)
        assert r.linear_complexity <= n
        if r.linear_complexity * 2 <= n:
            # enough data for the profile to be trustworthy end to end
            assert regenerate(r, bits[:r.linear_complexity], n) == bits
