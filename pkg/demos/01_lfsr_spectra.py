"""One LFSR under the finite-field transform.

Generates the period-7 register stream, transforms it over GF(2^3), and
shows the structural facts the rest of the package leans on: Blahut's
count, the conjugate (coset) symmetry, and exact inversion.
"""

from crtspectra import (berlekamp_massey, blahut_check, coset_reduce,
                        default_field_for_period, dft, idft, Lfsr,
                        lfsr_stream)


def main():
    reg = Lfsr(0xB, 0b100)          # x^3 + x + 1, seed 001
    s = lfsr_stream(reg, 7)
    print(f"stream       : {s}  (period {s.period})")

    field, root = default_field_for_period(s.period)
    print(f"field        : GF(2^{field.m}), modulus 0x{field.modulus:x}")
    print(f"root         : order {root.order()} element")

    S = dft(s, field, root)
    cells = ["Z" if d is None else f"r^{d}" for d in S.values]
    print(f"spectrum     : [{', '.join(cells)}]")

    r = berlekamp_massey(list(s) * 2)
    print(f"complexity   : L = {r.linear_complexity}")
    print(f"blahut check : {S.nonzero_count()} nonzero points == L -> "
          f"{blahut_check(S, r.linear_complexity)}")

    # one exponent per cyclotomic coset pins down the whole spectrum
    print(f"coset leaders: {coset_reduce(S)}  (doubling fills the rest)")

    back = idft(S)
    print(f"inverse      : {back}  round-trips: {back == s}")


if __name__ == "__main__":
    main()
