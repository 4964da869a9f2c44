"""Command line workbench.

Subcommands mirror the library: ``generate`` (triple stream), ``classify``
(residue classes), ``gaps`` (gap sequences), ``autocorr`` (C(k) data and
summaries), ``table2`` (divisibility count table, optionally diffed
against the bundled reference), ``theorem-check`` (grid census vs closed
form), and ``report`` (one-shot directory of all artifacts).

Everything is deterministic: repeated runs with the same arguments write
byte-identical output.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or configuration
error, 3 overflow guard, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Sequence, TextIO

import numpy as np

from . import reference
from .autocorr import compute, expected_offpeak, summarize
from .gaps import GapSequence, gap_sequence, gaps_from_letters, mean_gap
from .randomness import chi_square_frequencies, serial_correlation
from .residues import (
    ClassLabel,
    ClassSequence,
    divisibility_table,
    grid_census,
    is_odd_prime,
    theorem_probability,
)
from .triples import OverflowGuardError, generate_a_values, generate_ordered

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_IO = 4

DEFAULT_COUNT = 100_000
DEFAULT_MODULUS = 3
DEFAULT_MAX_LAG = 100
QUICK_COUNT = 10_000


class UsageError(ValueError):
    pass


def _fmt(x) -> str:
    """Exact integers verbatim, everything else 6 significant digits."""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return format(float(x), ".6g")


def _jsonval(x):
    if isinstance(x, Fraction):
        return float(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    return x


@contextmanager
def _open_out(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


class Emitter:
    """Writes rows as CSV or JSONL, plus '#'-prefixed summary lines."""

    def __init__(self, out: TextIO, fmt: str, columns: Sequence[str]):
        self.out = out
        self.fmt = fmt
        self.columns = list(columns)
        if fmt == "csv":
            out.write(",".join(self.columns) + "\n")

    def row(self, *values) -> None:
        if self.fmt == "csv":
            self.out.write(",".join(_fmt(v) for v in values) + "\n")
        else:
            obj = {c: _jsonval(v) for c, v in zip(self.columns, values)}
            self.out.write(json.dumps(obj, sort_keys=True) + "\n")

    def note(self, key: str, value) -> None:
        if self.fmt == "csv":
            self.out.write(f"# {key}={value}\n")
        else:
            self.out.write(json.dumps({key: _jsonval(value)}, sort_keys=True) + "\n")


def _check_count(count: int) -> int:
    if count < 1:
        raise UsageError(f"--count must be >= 1, got {count}")
    return count

def _check_modulus(p: int) -> int:
    if not is_odd_prime(p):
        raise UsageError(f"--modulus must be an odd prime >= 3, got {p}")
    return p


def _label(args) -> ClassLabel:
    try:
        return ClassLabel.from_letter(args.label, args.modulus)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _gaps_for(args, residue: int | None = None) -> GapSequence:
    """Gap sequence from --from-string, or from a generated stream."""
    p = _check_modulus(args.modulus)
    if args.from_string is not None:
        label = _label(args) if residue is None else ClassLabel.from_residue(residue, p)
        return gaps_from_letters(args.from_string, label.letter, p)
    count = _check_count(args.count)
    a = generate_a_values(count)
    cs = ClassSequence(p, a % p)
    label = _label(args) if residue is None else ClassLabel.from_residue(residue, p)
    return gap_sequence(cs, label)


def cmd_generate(args) -> int:
    count = _check_count(args.count)
    triples = generate_ordered(count)
    with _open_out(args.output) as out:
        em = Emitter(out, args.format, ["index", "s", "t", "a", "b", "c"])
        for tr in triples:
            em.row(tr.index, tr.s, tr.t, tr.a, tr.b, tr.c)
    return EXIT_OK


def cmd_classify(args) -> int:
    count = _check_count(args.count)
    p = _check_modulus(args.modulus)
    a = generate_a_values(count)
    cs = ClassSequence(p, a % p)
    with _open_out(args.output) as out:
        em = Emitter(out, args.format, ["index", "a", "residue", "letter"])
        for i, (ai, ri) in enumerate(zip(a.tolist(), cs.residues.tolist())):
            em.row(i, ai, ri, ClassLabel.from_residue(ri, p).text)
        seq = cs.letters if p <= 26 else ",".join(map(str, cs.residues.tolist()))
        em.note("sequence", seq)
    return EXIT_OK


def cmd_gaps(args) -> int:
    gs = _gaps_for(args)
    positions = gs.positions()
    with _open_out(args.output) as out:
        em = Emitter(out, args.format, ["k", "position", "gap"])
        for k, gap in enumerate(gs.gaps.tolist()):
            em.row(k, int(positions[k + 1]), gap)
        em.note("label", gs.label.text)
        em.note("first_position", gs.first_position)
        em.note("gaps", ",".join(map(str, gs.gaps.tolist())))
        if len(gs):
            em.note("mean_gap", _fmt(mean_gap(gs)))
    return EXIT_OK


def _emit_autocorr(em: Emitter, gs: GapSequence, args) -> None:
    try:
        result = compute(gs.gaps.tolist(), args.max_lag, args.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for k in range(result.k_max + 1):
        em.row(k, result.values[k])
    s = summarize(result, expected_offpeak(args.modulus, gs.label))
    em.note(
        "summary",
        f"p={args.modulus} class={gs.label.text} n_gaps={len(gs)} "
        f"peak={_fmt(s.peak)} offpeak_mean={_fmt(s.offpeak_mean)} "
        f"expected={_fmt(s.expected)} rel_deviation={_fmt(s.rel_deviation)}",
    )


def cmd_autocorr(args) -> int:
    p = _check_modulus(args.modulus)
    if args.max_lag < 1:
        raise UsageError(f"--max-lag must be >= 1, got {args.max_lag}")
    if args.label is not None:
        gs = _gaps_for(args)
        with _open_out(args.output) as out:
            em = Emitter(out, args.format, ["k", "c"])
            _emit_autocorr(em, gs, args)
        return EXIT_OK
    # all classes: one file per class under --output, or stdout sections
    sequences = [_gaps_for(args, residue=r) for r in range(p)]
    if args.output is None or args.output == "-":
        for gs in sequences:
            em = Emitter(sys.stdout, args.format, ["k", "c"])
            em.note("class", gs.label.text)
            _emit_autocorr(em, gs, args)
        return EXIT_OK
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    ext = "csv" if args.format == "csv" else "jsonl"
    for gs in sequences:
        path = outdir / f"autocorr_p{p}_{gs.label.text}.{ext}"
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            em = Emitter(fh, args.format, ["k", "c"])
            _emit_autocorr(em, gs, args)
    return EXIT_OK


def _table_lengths(args) -> list[int]:
    count = _check_count(args.count)
    if args.lengths:
        lengths = sorted(set(args.lengths))
        too_big = [x for x in lengths if x > count]
        if too_big:
            raise UsageError(f"--lengths {too_big} exceed --count {count}")
        if any(x < 1 for x in lengths):
            raise UsageError("--lengths must be >= 1")
        return lengths
    return [x for x in reference.REFERENCE_LENGTHS if x <= count]


def cmd_table2(args) -> int:
    primes = args.primes or list(reference.REFERENCE_PRIMES)
    for p in primes:
        _check_modulus(p)
    lengths = _table_lengths(args)
    if not lengths:
        raise UsageError("no prefix lengths <= --count remain")
    table = divisibility_table(max(lengths), lengths, primes)
    with _open_out(args.output) as out:
        if not args.compare:
            em = Emitter(out, args.format, ["length"] + [str(p) for p in primes])
            for i, length in enumerate(table.lengths):
                em.row(length, *table.counts[i])
            return EXIT_OK
        em = Emitter(
            out, args.format,
            ["length", "prime", "count", "reference", "rel_err", "flag"],
        )
        for i, length in enumerate(table.lengths):
            for j, p in enumerate(primes):
                ours = table.counts[i][j]
                known = length in reference.DIVISIBILITY_REFERENCE and (
                    p in reference.REFERENCE_PRIMES
                )
                if known:
                    ref = reference.reference_count(length, p)
                    rel = (ours - ref) / ref
                    flag = (
                        "ref-suspect"
                        if (length, p) in reference.SUSPECT_CELLS
                        else ""
                    )
                    em.row(length, p, ours, ref, rel, flag)
                else:
                    em.row(length, p, ours, "", "", "no-reference")
    return EXIT_OK


def cmd_theorem_check(args) -> int:
    primes = args.primes or list(reference.REFERENCE_PRIMES)
    for p in primes:
        _check_modulus(p)
    mismatch = False
    with _open_out(args.output) as out:
        for p in primes:
            divisible, qualifying = grid_census(p)
            ratio = Fraction(divisible, qualifying)
            closed = theorem_probability(p)
            ok = (divisible, qualifying) == (2 * (p - 1), p * p - 1) and ratio == closed
            mismatch |= not ok
            out.write(
                f"p={p}: census {divisible}/{qualifying} = {ratio} "
                f"closed_form={closed} [{'ok' if ok else 'MISMATCH'}]\n"
            )
    return EXIT_MISMATCH if mismatch else EXIT_OK


def _write_report(outdir: Path, count: int) -> None:
    a = generate_a_values(count)

    # divisibility table + reference diff
    lengths = [x for x in reference.REFERENCE_LENGTHS if x <= count]
    primes = list(reference.REFERENCE_PRIMES)
    table = divisibility_table(count, lengths or [count], primes)
    with open(outdir / "table2.csv", "w", encoding="utf-8", newline="\n") as fh:
        em = Emitter(fh, "csv", ["length"] + [str(p) for p in primes])
        for i, length in enumerate(table.lengths):
            em.row(length, *table.counts[i])
    max_rel: dict[int, float] = {}
    with open(outdir / "table2_compare.csv", "w", encoding="utf-8", newline="\n") as fh:
        em = Emitter(fh, "csv", ["length", "prime", "count", "reference", "rel_err", "flag"])
        for i, length in enumerate(table.lengths):
            for j, p in enumerate(primes):
                if length not in reference.DIVISIBILITY_REFERENCE:
                    continue
                ours = table.counts[i][j]
                ref = reference.reference_count(length, p)
                rel = (ours - ref) / ref
                flag = "ref-suspect" if (length, p) in reference.SUSPECT_CELLS else ""
                if not flag:
                    max_rel[p] = max(max_rel.get(p, 0.0), abs(rel))
                em.row(length, p, ours, ref, rel, flag)

    # theorem census
    with open(outdir / "theorem.csv", "w", encoding="utf-8", newline="\n") as fh:
        em = Emitter(fh, "csv", ["prime", "divisible", "qualifying", "ratio", "closed_form", "ok"])
        census_ok = True
        for p in primes:
            divisible, qualifying = grid_census(p)
            ratio = Fraction(divisible, qualifying)
            closed = theorem_probability(p)
            ok = ratio == closed and (divisible, qualifying) == (2 * (p - 1), p * p - 1)
            census_ok &= ok
            em.row(p, divisible, qualifying, str(ratio), str(closed), ok)

    # autocorrelation data + summaries, randomness reports
    summary_rows = []
    randomness_rows = []
    for p in (3, 5, 7):
        cs = ClassSequence(p, a % p)
        chi = chi_square_frequencies(cs)
        randomness_rows.append(
            ("chi_square", p, "", chi.statistic, chi.df, chi.threshold, chi.passed)
        )
        for r in range(p):
            label = ClassLabel.from_residue(r, p)
            gs = gap_sequence(cs, label)
            k_max = min(DEFAULT_MAX_LAG, len(gs) - 1)
            result = compute(gs.gaps.tolist(), k_max, "circular")
            path = outdir / f"autocorr_p{p}_{label.text}.csv"
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                em = Emitter(fh, "csv", ["k", "c"])
                for k in range(result.k_max + 1):
                    em.row(k, result.values[k])
            s = summarize(result, expected_offpeak(p, label))
            summary_rows.append(
                (p, label.text, len(gs), s.peak, s.offpeak_mean,
                 s.offpeak_min, s.offpeak_max, s.expected, s.rel_deviation)
            )
            if r == 0:
                sc = serial_correlation(gs, 1)
                randomness_rows.append(
                    ("serial_corr_lag1", p, label.text, sc.details["r"],
                     sc.df, sc.threshold, sc.passed)
                )
    with open(outdir / "autocorr_summary.csv", "w", encoding="utf-8", newline="\n") as fh:
        em = Emitter(fh, "csv", ["p", "class", "n_gaps", "peak", "offpeak_mean",
                                 "offpeak_min", "offpeak_max", "expected", "rel_deviation"])
        for row in summary_rows:
            em.row(*row)
    with open(outdir / "randomness.csv", "w", encoding="utf-8", newline="\n") as fh:
        em = Emitter(fh, "csv", ["test", "p", "class", "statistic", "df", "threshold", "passed"])
        for row in randomness_rows:
            em.row(*row)

    # informational diff of computed class strings vs bundled reference strings
    with open(outdir / "class_string_diff.txt", "w", encoding="utf-8", newline="\n") as fh:
        for p in (3, 5, 7):
            ref = reference.CLASS_STRING_REFERENCE[p]
            ours = ClassSequence(p, a[: len(ref)] % p).letters
            mismatch = next(
                (i for i, (x, y) in enumerate(zip(ours, ref)) if x != y), None
            )
            agree = sum(x == y for x, y in zip(ours, ref)) / len(ref)
            fh.write(f"modulus {p}: reference string length {len(ref)}\n")
            fh.write(f"  computed:  {ours}\n")
            fh.write(f"  reference: {ref}\n")
            fh.write(
                f"  first mismatch at index {mismatch}; "
                f"agreement {agree:.3f}\n"
            )
            if p == 7 and "I" in ref:
                fh.write("  note: reference contains letter 'I', impossible for 7 classes\n")

    # top-level digest
    with open(outdir / "summary.txt", "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"stream length: {count}\n")
        fh.write(f"theorem census: {'ok' if census_ok else 'MISMATCH'}\n")
        for p in primes:
            if p in max_rel:
                fh.write(
                    f"table2 p={p}: max |rel err| vs reference = {max_rel[p]:.4f}\n"
                )
        for row in summary_rows:
            fh.write(
                f"autocorr p={row[0]} class {row[1]}: peak={_fmt(row[3])} "
                f"offpeak={_fmt(row[4])} expected={_fmt(row[7])} "
                f"rel_dev={_fmt(row[8])}\n"
            )
        for row in randomness_rows:
            fh.write(
                f"randomness {row[0]} p={row[1]}: statistic={_fmt(row[3])} "
                f"threshold={_fmt(row[5])} passed={_fmt(row[6])}\n"
            )


def cmd_report(args) -> int:
    count = QUICK_COUNT if args.quick else _check_count(args.count)
    outdir = Path(args.output or "pptseq-report")
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"pptseq: cannot create {outdir}: {exc}", file=sys.stderr)
        return EXIT_IO
    _write_report(outdir, count)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pptseq",
        description="Primitive Pythagorean triple stream analysis workbench.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p_: argparse.ArgumentParser, *, count=True, modulus=False,
               label=False, lag=False, fmt=True) -> None:
        if count:
            p_.add_argument("--count", type=int, default=DEFAULT_COUNT,
                            help=f"stream length (default {DEFAULT_COUNT})")
        if modulus:
            p_.add_argument("--modulus", type=int, default=DEFAULT_MODULUS,
                            help=f"odd prime modulus (default {DEFAULT_MODULUS})")
        if label:
            p_.add_argument("--class", dest="label", default=None,
                            help="class letter (A = residue 0)")
            p_.add_argument("--from-string", dest="from_string", default=None,
                            help="analyze this letter string instead of the stream")
        if lag:
            p_.add_argument("--max-lag", dest="max_lag", type=int,
                            default=DEFAULT_MAX_LAG,
                            help=f"largest lag (default {DEFAULT_MAX_LAG})")
            p_.add_argument("--mode", choices=["circular", "windowed"],
                            default="circular", help="boundary handling")
        if fmt:
            p_.add_argument("--format", choices=["csv", "jsonl"], default="csv")
        p_.add_argument("--output", default=None,
                        help="output file (default stdout)")

    p_gen = sub.add_parser("generate", help="emit the ordered triple stream")
    common(p_gen)
    p_gen.set_defaults(func=cmd_generate)

    p_cls = sub.add_parser("classify", help="residue classes of the stream")
    common(p_cls, modulus=True)
    p_cls.set_defaults(func=cmd_classify)

    p_gap = sub.add_parser("gaps", help="gap sequence of one class")
    common(p_gap, modulus=True, label=True)
    p_gap.set_defaults(func=cmd_gaps)

    p_ac = sub.add_parser("autocorr", help="autocorrelation of class gaps")
    common(p_ac, modulus=True, label=True, lag=True)
    p_ac.set_defaults(func=cmd_autocorr)

    p_t2 = sub.add_parser("table2", help="divisibility count table")
    common(p_t2)
    p_t2.add_argument("--lengths", type=_int_list, default=None,
                      help="comma-separated prefix lengths")
    p_t2.add_argument("--primes", type=_int_list, default=None,
                      help="comma-separated odd primes")
    p_t2.add_argument("--compare", action="store_true",
                      help="diff against the bundled reference counts")
    p_t2.set_defaults(func=cmd_table2)

    p_th = sub.add_parser("theorem-check", help="grid census vs closed form")
    p_th.add_argument("--primes", type=_int_list, default=None)
    p_th.add_argument("--output", default=None)
    p_th.set_defaults(func=cmd_theorem_check)

    p_rep = sub.add_parser("report", help="write all artifacts to a directory")
    p_rep.add_argument("--count", type=int, default=DEFAULT_COUNT)
    p_rep.add_argument("--quick", action="store_true",
                       help=f"shorthand for --count {QUICK_COUNT}")
    p_rep.add_argument("--output", default=None,
                       help="output directory (default pptseq-report)")
    p_rep.set_defaults(func=cmd_report)

    return top


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    # gaps requires a class label; autocorr defaults to every class
    if args.command == "gaps" and args.label is None:
        print("pptseq: gaps requires --class", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except OverflowGuardError as exc:
        print(f"pptseq: overflow guard: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (UsageError, ValueError) as exc:
        print(f"pptseq: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"pptseq: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
