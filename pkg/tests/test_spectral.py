import random

import pytest

from crtspectra.field import build_field, element_of_order
from crtspectra.sequences import BitSequence, cyclic_convolve, pointwise_product
from crtspectra.spectral import (Spectrum, blahut_check, coset_expand,
                                 coset_reduce, default_field_for_period, dft,
                                 dft_point, idft)

import reference_values as rv

F6 = build_field(6)
A = BitSequence.from_string(rv.STREAM_A)
B = BitSequence.from_string(rv.STREAM_B)
C = BitSequence.from_string(rv.STREAM_C)
U = pointwise_product(A, B)


def test_default_field_for_period():
    fld, root = default_field_for_period(21)
    assert fld.m == 6
    assert root.order() == 21
    fld1, root1 = default_field_for_period(1)
    assert root1 == fld1.one


def test_dft_factor_a():
    fld, root = default_field_for_period(3)
    S = dft(A, fld, root)
    assert list(S.values) == rv.SPECTRUM_A


def test_dft_factor_b():
    fld, root = default_field_for_period(7)
    S = dft(B, fld, root)
    assert list(S.values) == rv.SPECTRUM_B
    assert S.support() == [3, 5, 6]


def test_dft_rejects_root_order_mismatch():
    root = element_of_order(F6, 9)
    with pytest.raises(ValueError):
        dft(U, F6, root)


def test_dft_brute_equivalence_small_random():
    # random period-7 sequences against the raw transform definition
    fld, root = default_field_for_period(7)
    rng = random.Random(41)
    for _ in range(25):
        bits = tuple(rng.randrange(2) for _ in range(7))
        if not any(bits):
            continue
        S = dft(BitSequence(bits), fld, root)
        for k in range(7):
            acc = fld.zero
            for t, b in enumerate(bits):
                if b:
                    acc = acc + root ** (t * k)
            assert S.point_value(k) == acc


def test_idft_roundtrip_all_streams():
    for s in (A, B, C, U):
        fld, root = default_field_for_period(s.period)
        assert idft(dft(s, fld, root)) == s


def test_idft_rejects_even_period():
    with pytest.raises(ValueError):
        # no odd-order root can exist; constructing the spectrum itself
        # is impossible, so go through the period guard directly
        default_field_for_period(6)


def test_idft_rejects_non_binary_reconstruction():
    # single spike of value w (not 1) at k=0 inverts to the constant w
    fld, root = default_field_for_period(3)
    S = Spectrum(3, fld, root, (1, None, None))
    with pytest.raises(ValueError):
        idft(S)


def test_spectrum_invariants():
    fld, root = default_field_for_period(7)
    with pytest.raises(ValueError):
        Spectrum(7, fld, root, (None,) * 6)       # wrong length
    with pytest.raises(ValueError):
        Spectrum(7, fld, root, (7, None, None, None, None, None, None))
    bad_root = fld.generator                       # order 7? generator is
    if bad_root.order() != 7:                      # full group: reject
        with pytest.raises(ValueError):
            Spectrum(7, fld, bad_root, (None,) * 7)


def test_dft_point_matches_full_transform():
    fld, root = default_field_for_period(21)
    S = dft(U, fld, root)
    for k in (0, 5, 13, 20):
        assert dft_point(U, root, k) == S.values[k]
    with pytest.raises(ValueError):
        dft_point(U, root, 21)
    with pytest.raises(ValueError):
        dft_point(U, root, -1)


def test_dft_point_counts_multiplications():
    from crtspectra.costs import OpCounter
    from crtspectra.field import CountingField
    fld, root = default_field_for_period(21)
    counter = OpCounter()
    cf = CountingField(fld, counter)
    dft_point(U, cf.element(root.bits), 13)
    assert counter.mul_count >= 20   # Horner walks the whole period


def test_blahut_on_reference_product():
    fld, root = default_field_for_period(21)
    S = dft(U, fld, root)
    assert S.nonzero_count() == 6
    assert blahut_check(S, 6)
    assert not blahut_check(S, 7)


def test_coset_reduce_reference():
    fld, root = default_field_for_period(21)
    S = dft(U, fld, root)
    assert coset_reduce(S) == {5: 9}
    fld31, root31 = default_field_for_period(31)
    assert coset_reduce(dft(C, fld31, root31)) == rv.REDUCED_C


def test_coset_reduce_rejects_conjugacy_violation():
    fld, root = default_field_for_period(21)
    S = dft(U, fld, root)
    vals = list(S.values)
    vals[10] = (vals[10] + 1) % 21    # break 2*d rule inside coset of 5
    broken = Spectrum(21, fld, root, tuple(vals))
    k, k2 = broken.conjugacy_violation()
    assert (k2 - 2 * k) % 21 == 0
    with pytest.raises(ValueError) as e:
        coset_reduce(broken)
    assert str(k) in str(e.value) and str(k2) in str(e.value)


def test_coset_expand_inverts_reduce():
    fld, root = default_field_for_period(21)
    S = dft(U, fld, root)
    assert coset_expand(coset_reduce(S), 21, fld, root) == S


def test_convolution_duality_at_21():
    # transform of a bitwise product = cyclic convolution of transforms,
    # all three taken at the same 21-point root
    root = element_of_order(F6, 21)
    a21 = BitSequence.from_string(rv.STREAM_A * 7)
    b21 = BitSequence.from_string(rv.STREAM_B * 3)
    u21 = BitSequence.from_string(rv.PRODUCT_AB)
    Sa = dft(a21, F6, root)
    Sb = dft(b21, F6, root)
    Su = dft(u21, F6, root)
    assert Su.value_array() == cyclic_convolve(Sa.value_array(),
                                               Sb.value_array())
