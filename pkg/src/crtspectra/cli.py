"""Command-line front end.

Exit codes: 0 success, 1 verification found mismatches, 2 usage errors or
malformed input files (reported with line/column). All file outputs are
written atomically.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import cases
from .bm import berlekamp_massey
from .costs import OpCounter, estimate_crt_breakdown, estimate_direct, measure
from .crtconv import (CrtBasis, combiner_spectrum, product_spectrum,
                      product_spectrum_point, support_indices)
from .field import (PRIMITIVE_POLYS, build_field, default_modulus,
                    element_of_order, factor_int)
from .formats import (FormatError, atomic_write, parse_field, parse_sequence,
                      parse_spectrum, serialize_sequence, serialize_spectrum)
from .gf2poly import parse_poly, poly_str
from .oracle import verify_theorem1
from .sequences import AnfCombiner, combiner_stream, Lfsr, lfsr_stream, pointwise_product
from .spectral import coset_reduce, default_field_for_period, dft, dft_point


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        atomic_write(out_path, text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _fmt_value(d) -> str:
    return "0" if d is None else f"g^{d}"


def _sig3(x: float) -> str:
    """Three significant figures, plain decimal notation."""
    if x == 0:
        return "0"
    from math import floor, log10
    k = 2 - floor(log10(abs(x)))
    r = round(x, k)
    if k <= 0 or r == int(r):
        return str(int(r))
    return f"{r:.{k}f}"


# --------------------------------------------------------------------------
# subcommand bodies

def _cmd_field(args) -> int:
    lines = []
    if args.field_cmd == "inspect":
        if args.m is None and args.mod is None:
            lines.append("# default primitive modulus table")
            for m in sorted(PRIMITIVE_POLYS):
                lines.append(f"{m} 0x{default_modulus(m):x}")
        else:
            m = args.m
            modulus = parse_poly(args.mod) if args.mod else None
            if m is None:
                m = modulus.bit_length() - 1
            fld = build_field(m, modulus)
            lines.append(f"GF2m m={fld.m} mod=0x{fld.modulus:x}")
            lines.append(f"order={fld.group_order}")
            facs = (",".join(str(p) for p in fld.group_order_factors)
                    if fld.group_order_factors else "1")
            lines.append(f"order_factors={facs}")
            lines.append(
                f"generator=0x{fld.generator.bits:x}"
                f" ({poly_str(fld.generator.bits)})")
    _emit("\n".join(lines), args.out)
    return 0


def _cmd_seq(args) -> int:
    if args.seq_cmd == "gen":
        conn = parse_poly(args.poly)
        seed = int(args.seed, 0)
        s = lfsr_stream(Lfsr(conn, seed), args.bits)
    elif args.seq_cmd == "product":
        seqs = [parse_sequence_file(p) for p in args.inputs]
        if len(seqs) < 2:
            raise ValueError("seq product needs at least two --in files")
        s = seqs[0]
        for t in seqs[1:]:
            s = pointwise_product(s, t)
    else:  # combine
        seqs = [parse_sequence_file(p) for p in args.inputs]
        f = AnfCombiner.parse(args.anf, n_vars=len(seqs))
        s = combiner_stream(f, seqs)
    _emit(serialize_sequence(s), args.out)
    return 0


def parse_sequence_file(path: str):
    from .formats import read_text
    return parse_sequence(read_text(path), path)


def parse_spectrum_file(path: str):
    from .formats import read_text
    return parse_spectrum(read_text(path), path)


def _cmd_bm(args) -> int:
    s = parse_sequence_file(args.infile)
    r = berlekamp_massey(s)
    text = (f"L={r.linear_complexity}\n"
            f"g=0x{r.minimal_poly:x} {poly_str(r.minimal_poly)}")
    _emit(text, args.out)
    return 0


def _cmd_dft(args) -> int:
    s = parse_sequence_file(args.infile)
    if args.field:
        field = parse_field(args.field, "<--field>")
        if field.group_order % s.period:
            raise ValueError(
                f"GF(2^{field.m}) has no element of order {s.period}")
        root = element_of_order(field, s.period)
    else:
        field, root = default_field_for_period(s.period)
    if args.point is not None:
        d = dft_point(s, root, args.point)
        _emit(f"{args.point} {'Z' if d is None else d}", args.out)
        return 0
    S = dft(s, field, root)
    if args.reduce:
        reps = coset_reduce(S)
        lines = [f"N={S.N} leaders={len(reps)}"]
        for k in sorted(reps):
            lines.append(f"{k} {reps[k]}")
        _emit("\n".join(lines), args.out)
        return 0
    _emit(serialize_spectrum(S), args.out)
    return 0


def _cmd_crt_conv(args) -> int:
    factors = [parse_spectrum_file(p) for p in args.factors]
    basis = CrtBasis([f.N for f in factors])
    if args.point is not None:
        d = product_spectrum_point(factors, basis, args.point)
        _emit(f"{args.point} {'Z' if d is None else d}", args.out)
        return 0
    if args.support_only:
        idx = support_indices(factors, basis)
        _emit("\n".join(str(k) for k in idx), args.out)
        return 0
    S = product_spectrum(factors, basis)
    _emit(serialize_spectrum(S), args.out)
    return 0


def _cmd_combine_spectrum(args) -> int:
    factors = [parse_spectrum_file(p) for p in args.factors]
    basis = CrtBasis([f.N for f in factors])
    f = AnfCombiner.parse(args.anf, n_vars=len(factors))
    S = combiner_spectrum(f, factors, basis)
    _emit(serialize_spectrum(S), args.out)
    return 0


def _parse_lfsr_spec(text: str):
    try:
        conn_s, seed_s = text.split(":", 1)
        return parse_poly(conn_s), int(seed_s, 0)
    except ValueError:
        raise ValueError(
            f"bad --lfsr {text!r}; expected <poly>:<seed> like 0xb:0x1") from None


def _run_tampered(run, k_bad: int, bound: int):
    """Recompute one verification with a fault injected at index k_bad.

    Exists to prove the oracle is not vacuous: the tampered run must FAIL.
    """
    from .oracle import _one_period, brute_dft, compare_spectra
    from .spectral import Spectrum

    seqs = [_one_period(c, s, bound) for c, s in run]
    basis = CrtBasis([q.period for q in seqs])
    factors = []
    for q in seqs:
        fld, rt = default_field_for_period(q.period)
        factors.append(dft(q, fld, rt))
    S = product_spectrum(factors, basis)
    if not 0 <= k_bad < S.N:
        raise ValueError(f"--tamper-index {k_bad} out of range for N={S.N}")
    vals = list(S.values)
    vals[k_bad] = 0 if vals[k_bad] is None else None
    tampered = Spectrum(S.N, S.field, S.root, tuple(vals))
    prod = seqs[0]
    for t in seqs[1:]:
        prod = pointwise_product(prod, t)
    ref = brute_dft(prod, tampered.field, tampered.root)
    return compare_spectra(ref, tampered), S.N


def _cmd_verify(args) -> int:
    specs = [_parse_lfsr_spec(t) for t in args.lfsr]

    if args.tamper_index is not None:
        mms, N = _run_tampered(specs, args.tamper_index, args.bound)
        verdict = "FAIL" if mms else "PASS"
        print(f"{verdict} N={N} tampered_at={args.tamper_index} "
              f"mismatches={len(mms)}")
        for mm in mms:
            print(json.dumps({"index": mm.index, "expected": mm.expected,
                              "actual": mm.actual}))
        return 1 if mms else 0

    runs = []
    if args.random_seeds:
        seed = args.seed if args.seed is not None else random.randrange(1 << 30)
        rng = random.Random(seed)
        print(f"seed={seed}")
        for _ in range(args.random_seeds):
            run = []
            for conn, _ in specs:
                m = conn.bit_length() - 1
                run.append((conn, rng.randrange(1, 1 << m)))
            runs.append(run)
    else:
        runs.append(specs)

    overall_ok = True
    json_lines = []
    for run in runs:
        rep = verify_theorem1(run, bound=args.bound)
        overall_ok = overall_ok and rep.ok
        label = " ".join(f"0x{c:x}:0x{s:x}" for c, s in run)
        if args.json:
            json_lines.append(json.dumps({
                "lfsrs": label, "ok": rep.ok, "N": rep.N,
                "support": rep.support_size, "L": rep.linear_complexity,
                "blahut_ok": rep.blahut_ok, "conjugacy_ok": rep.conjugacy_ok,
                "mismatches": len(rep.mismatches)}))
            for mm in rep.mismatches:
                json_lines.append(json.dumps({
                    "lfsrs": label, "index": mm.index,
                    "expected": mm.expected, "actual": mm.actual}))
        else:
            print(f"{rep.summary()}  [{label}]")
            for mm in rep.mismatches:
                print(json.dumps({"index": mm.index, "expected": mm.expected,
                                  "actual": mm.actual}))
    if args.json:
        _emit("\n".join(json_lines), args.out)
    return 0 if overall_ok else 1


def _cmd_bench(args) -> int:
    if args.case != "bc108":
        raise ValueError(f"unknown bench case {args.case!r}")
    ex = cases.pair_case(cases.LFSR_B, cases.LFSR_C)
    b, c = ex.streams
    bc = ex.product
    S = ex.spectrum
    k = 108
    n_direct = S.field.m
    est_direct = estimate_direct(S.N, n_direct)
    bk = estimate_crt_breakdown(
        [b.period, c.period],
        [ex.factors[0].field.m, ex.factors[1].field.m], S.N)

    def run_direct(counter: OpCounter):
        fld = S.field.with_counter(counter)
        dft_point(bc, fld.element(S.root.bits), k)

    def run_crt(counter: OpCounter):
        f1 = ex.factors[0].field.with_counter(counter)
        f2 = ex.factors[1].field.with_counter(counter)
        d1 = dft_point(b, f1.element(ex.factors[0].root.bits), k % b.period)
        d2 = dft_point(c, f2.element(ex.factors[1].root.bits), k % c.period)
        if d1 is not None and d2 is not None:
            product_spectrum_point(ex.factors, ex.basis, k)

    m_direct = measure(run_direct)
    m_crt = measure(run_crt)

    rows = [
        ("bits required", str(n_direct), str(bk.factor_bits)),
        ("field", f"GF(2^{n_direct})",
         " x ".join(f"GF(2^{f.field.m})" for f in ex.factors)),
        ("estimated bit ops", _sig3(est_direct), _sig3(bk.total)),
        ("estimated breakdown", "-",
         " + ".join(_sig3(x) for x in bk.factor_costs)
         + f" + {_sig3(bk.crt_cost)}"),
        ("measured field mults", str(m_direct.mul_count), str(m_crt.mul_count)),
        ("measured field ops", str(m_direct.total()), str(m_crt.total())),
    ]
    if args.json:
        lines = [json.dumps({"quantity": q, "direct": d, "crt": c_})
                 for q, d, c_ in rows]
        _emit("\n".join(lines), args.out)
        return 0
    lines = [f"# one spectral point of b.c at k={k} (N={S.N})", ""]
    lines.append("| quantity | direct | crt |")
    lines.append("|---|---|---|")
    for q, d, c_ in rows:
        lines.append(f"| {q} | {d} | {c_} |")
    lines.append("")
    lines.append("csv:")
    lines.append("quantity,direct,crt")
    for q, d, c_ in rows:
        lines.append(f"{q.replace(' ', '_')},{d},{c_}")
    _emit("\n".join(lines), args.out)
    return 0


def report_tables(example: int) -> str:
    """Markdown reproduction of the worked tables; byte-stable on purpose."""
    if example == 1:
        ex = cases.example1()
        A, B = ex.factors
        U = ex.spectrum
        ks = list(range(U.N))
        rows = [
            ("k", [str(k) for k in ks]),
            ("A_(k mod 3)", [_fmt_value(A.values[k % 3]) for k in ks]),
            ("B_(k mod 7)", [_fmt_value(B.values[k % 7]) for k in ks]),
            ("U_k", [_fmt_value(U.values[k]) for k in ks]),
        ]
        lines = [f"# product spectrum at period {U.N}", ""]
        lines.append("| " + " | ".join(["row"] + rows[0][1]) + " |")
        lines.append("|" + "---|" * (U.N + 1))
        for name, cells in rows[1:]:
            lines.append("| " + " | ".join([name] + cells) + " |")
        lines.append("")
        return "\n".join(lines)
    if example == 2:
        ex = cases.example2()
        lines = []
        for title, S in (
            (f"spectrum of b.c, period {ex.bc.spectrum.N}", ex.bc.spectrum),
            (f"spectrum of a.c, period {ex.ac.spectrum.N}", ex.ac.spectrum),
            (f"spectrum of a.b.c, period {ex.triple.triple_spectrum.N}",
             ex.triple.triple_spectrum),
        ):
            lines.append(f"# {title}")
            lines.append("")
            lines.append("| k | S_k |")
            lines.append("|---|---|")
            for k in S.support():
                lines.append(f"| {k} | {_fmt_value(S.values[k])} |")
            lines.append("")
        return "\n".join(lines)
    raise ValueError(f"no example {example}; choose 1 or 2")


def _cmd_report(args) -> int:
    if args.json:
        if args.example == 1:
            ex = cases.example1()
            S = ex.spectrum
            lines = [json.dumps({"table": "product21", "k": k,
                                 "value": S.values[k]}) for k in range(S.N)]
        else:
            ex = cases.example2()
            lines = []
            for name, S in (("bc", ex.bc.spectrum), ("ac", ex.ac.spectrum),
                            ("abc", ex.triple.triple_spectrum)):
                for k in S.support():
                    lines.append(json.dumps(
                        {"table": name, "k": k, "value": S.values[k]}))
        _emit("\n".join(lines), args.out)
        return 0
    _emit(report_tables(args.example), args.out)
    return 0


# --------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="crtspectra",
        description="spectra of LFSR products via CRT index/exponent maps")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("field", help="field inspection")
    fs = p.add_subparsers(dest="field_cmd", required=True)
    pi = fs.add_parser("inspect")
    pi.add_argument("--m", type=int)
    pi.add_argument("--mod")
    pi.add_argument("--out")

    p = sub.add_parser("seq", help="generate and combine sequences")
    ss = p.add_subparsers(dest="seq_cmd", required=True)
    pg = ss.add_parser("gen")
    pg.add_argument("--poly", required=True)
    pg.add_argument("--seed", dest="seed", required=True)
    pg.add_argument("--bits", type=int, required=True)
    pg.add_argument("--out")
    pp = ss.add_parser("product")
    pp.add_argument("--in", dest="inputs", action="append", required=True)
    pp.add_argument("--out")
    pc = ss.add_parser("combine")
    pc.add_argument("--anf", required=True)
    pc.add_argument("--in", dest="inputs", action="append", required=True)
    pc.add_argument("--out")

    p = sub.add_parser("bm", help="linear complexity of a sequence file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")

    p = sub.add_parser("dft", help="spectrum of a sequence file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--field")
    p.add_argument("--point", type=int)
    p.add_argument("--reduce", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("crt-conv", help="product spectrum from factor spectra")
    p.add_argument("--factors", nargs="+", required=True)
    p.add_argument("--point", type=int)
    p.add_argument("--support-only", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("combine-spectrum",
                       help="combiner spectrum from factor spectra")
    p.add_argument("--anf", required=True)
    p.add_argument("--factors", nargs="+", required=True)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="oracle-backed end-to-end checks")
    vs = p.add_subparsers(dest="verify_cmd", required=True)
    pv = vs.add_parser("theorem1")
    pv.add_argument("--lfsr", action="append", required=True,
                    metavar="POLY:SEED")
    pv.add_argument("--bound", type=int, default=100_000)
    pv.add_argument("--random-seeds", type=int, default=0,
                    help="also run this many random nonzero seed tuples")
    pv.add_argument("--seed", type=int, default=None,
                    help="seed for --random-seeds; printed so runs replay")
    pv.add_argument("--tamper-index", type=int, default=None,
                    help="inject a fault at this spectral index; the run "
                         "must then FAIL (exercises the mismatch path)")
    pv.add_argument("--json", action="store_true")
    pv.add_argument("--out")

    p = sub.add_parser("bench", help="cost comparison tables")
    p.add_argument("--case", default="bc108")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("report", help="reproduce the worked tables")
    p.add_argument("--example", type=int, required=True, choices=(1, 2))
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    return ap


_DISPATCH = {
    "field": _cmd_field,
    "seq": _cmd_seq,
    "bm": _cmd_bm,
    "dft": _cmd_dft,
    "crt-conv": _cmd_crt_conv,
    "combine-spectrum": _cmd_combine_spectrum,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    # verify owns the global seed; stash it on args for _cmd_verify
    try:
        return _DISPATCH[args.cmd](args)
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
