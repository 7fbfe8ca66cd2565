"""Command-line front end.

Subcommands: gen (print a coordinator polynomial), analyze (root and
coefficient diagnostics), roots (isolating intervals, plus trig
brackets for type D), enumerate (brute-force word-length census),
verify (census against closed form), report (batch table over n).

Exit codes: 0 success / property holds, 1 a checked property failed
(witness printed), 2 usage or input error.  All diagnostics go to
stderr; results go to stdout or --out.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from pathlib import Path
from typing import Optional

from .coordinator import (
    CLOSED_FORM_TAGS,
    EXCEPTIONAL_RANKS,
    MIN_RANK,
    LatticeType,
    UnsupportedTypeError,
    coordinator,
    legendre_identity_check,
)
from .exactpoly import Polynomial, poly
from .latticeenum import (
    ExpensiveLatticeError,
    MemoryBudgetExceeded,
    ReconstructionError,
    census_to_csv,
    enumerate_lengths,
    lattice_spec,
    oracle_verify,
    recover_coordinator,
)
from .realroots import (
    BracketingError,
    d_type_brackets,
    is_real_rooted,
    isolate_real_roots,
    refine_bracket,
)
from .seqanalysis import (
    check_log_concave,
    check_no_internal_zeros,
    check_unimodal,
    pf_minor_check,
)

_TYPE_CHOICES = list(CLOSED_FORM_TAGS) + sorted(EXCEPTIONAL_RANKS)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _numstr(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else str(f)


def _f12(x: float) -> str:
    return f"{x:.12g}"


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _ltype(args) -> LatticeType:
    tag = args.type
    n = getattr(args, "n", None)
    if tag in CLOSED_FORM_TAGS:
        if n is None:
            raise ValueError(f"--n is required for type {tag}")
        return LatticeType(tag, n)
    return LatticeType(tag, n) if n is not None else LatticeType(tag)


def _poly_for(lt: LatticeType, allow_expensive: bool) -> Polynomial:
    """Coordinator polynomial: closed form, or recovery from a census."""
    if lt.tag in CLOSED_FORM_TAGS:
        return coordinator(lt).poly
    spec = lattice_spec(lt, allow_expensive)
    return recover_coordinator(enumerate_lengths(spec, lt.rank))


def _json_line(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _cmd_gen(args) -> int:
    lt = _ltype(args)
    h = _poly_for(lt, args.allow_expensive)
    coeffs = [_numstr(c) for c in h.coeffs]
    if args.format == "json":
        text = _json_line({"type": lt.tag, "n": lt.rank, "coeffs": coeffs})
    elif args.format == "csv":
        text = "k,h_k\n" + "".join(f"{k},{c}\n" for k, c in enumerate(coeffs))
    else:
        text = (
            f"type:{lt}\ndegree:{h.degree}\ncoeffs:" + " ".join(coeffs) + "\n"
        )
    _emit(text, args.out)
    return 0


_EXPECT_KEYS = ("real-rooted", "log-concave", "unimodal", "pf")


def _cmd_analyze(args) -> int:
    lt = _ltype(args)
    h = _poly_for(lt, args.allow_expensive)
    coeffs = h.coeffs
    rr = is_real_rooted(h)
    lc = check_log_concave(coeffs)
    um = check_unimodal(coeffs)
    nz = check_no_internal_zeros(coeffs)
    pf = pf_minor_check(coeffs, args.max_order)
    order = args.max_order
    held = {
        "real-rooted": rr.is_real_rooted,
        "log-concave": lc.holds,
        "unimodal": um.holds,
        "pf": pf.holds,
    }
    failed_expect = args.expect if args.expect and not held[args.expect] else None

    if args.format == "json":
        obj = {
            "type": lt.tag,
            "n": lt.rank,
            "degree": rr.degree,
            "distinct_real": rr.distinct_real,
            "real_with_multiplicity": rr.real_with_multiplicity,
            "real_rooted": rr.is_real_rooted,
            "log_concave": lc.holds,
            "unimodal": um.holds,
            "no_internal_zeros": nz.holds,
            "pf": {"order": order, "holds": pf.holds, "clamped": pf.clamped},
        }
        if lc.witness:
            w = lc.witness
            obj["log_concave_witness"] = {
                "index": w.index,
                "left": _numstr(w.left),
                "center": _numstr(w.center),
                "right": _numstr(w.right),
            }
        if pf.witness:
            w = pf.witness
            obj["pf_witness"] = {
                "rows": list(w.rows),
                "cols": list(w.cols),
                "determinant": _numstr(w.determinant),
            }
        if failed_expect:
            obj["expect_failed"] = failed_expect
        text = _json_line(obj)
    elif args.format == "csv":
        text = (
            f"type,n,degree,distinct_real,real_rooted,log_concave,unimodal,pf{order}\n"
            f"{lt.tag},{lt.rank},{rr.degree},{rr.distinct_real},"
            f"{_bool(rr.is_real_rooted)},{_bool(lc.holds)},{_bool(um.holds)},"
            f"{_bool(pf.holds)}\n"
        )
    else:
        lines = [
            f"type:{lt}",
            f"degree:{rr.degree}",
            f"distinct_real:{rr.distinct_real}",
            f"real_with_multiplicity:{rr.real_with_multiplicity}",
            f"real_rooted:{_bool(rr.is_real_rooted)}",
            f"log_concave:{_bool(lc.holds)}",
            f"unimodal:{_bool(um.holds)}",
            f"no_internal_zeros:{_bool(nz.holds)}",
            f"pf{order}:{_bool(pf.holds)}",
        ]
        if lc.witness:
            w = lc.witness
            lines.append(
                f"log_concave_witness:index={w.index} left={_numstr(w.left)} "
                f"center={_numstr(w.center)} right={_numstr(w.right)}"
            )
        if um.witness:
            w = um.witness
            lines.append(
                f"unimodal_witness:descent={w.descent_index} ascent={w.ascent_index}"
            )
        if pf.witness:
            w = pf.witness
            lines.append(
                f"pf_witness:rows={w.rows} cols={w.cols} det={_numstr(w.determinant)}"
            )
        if failed_expect:
            lines.append(f"expect_failed:{failed_expect}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 1 if failed_expect else 0


def _cmd_roots(args) -> int:
    lt = _ltype(args)
    h = _poly_for(lt, args.allow_expensive)
    intervals = isolate_real_roots(h, args.width)
    brackets = []
    if lt.tag == "D" and lt.rank >= 3:
        for b in d_type_brackets(lt.rank):
            brackets.append((b, refine_bracket(b, h, args.width)))
    if args.format == "json":
        obj = {
            "type": lt.tag,
            "n": lt.rank,
            "intervals": [[_numstr(iv.lo), _numstr(iv.hi)] for iv in intervals],
            "brackets": [
                {
                    "j": b.j,
                    "phi": [_f12(b.phi_lo), _f12(b.phi_hi)],
                    "x": [_numstr(iv.lo), _numstr(iv.hi)],
                }
                for b, iv in brackets
            ],
        }
        text = _json_line(obj)
    elif args.format == "csv":
        text = "lo,hi\n" + "".join(
            f"{_numstr(iv.lo)},{_numstr(iv.hi)}\n" for iv in intervals
        )
    else:
        lines = [f"type:{lt}", f"distinct_real:{len(intervals)}"]
        lines += [
            f"interval:[{_numstr(iv.lo)}, {_numstr(iv.hi)}]" for iv in intervals
        ]
        lines += [
            f"bracket:j={b.j} phi=[{_f12(b.phi_lo)}, {_f12(b.phi_hi)}] "
            f"x=[{_numstr(iv.lo)}, {_numstr(iv.hi)}]"
            for b, iv in brackets
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_enumerate(args) -> int:
    lt = _ltype(args)
    spec = lattice_spec(lt, args.allow_expensive)
    census = enumerate_lengths(
        spec, args.K, memory_budget_mib=args.memory_budget
    )
    if args.format == "json":
        text = _json_line(
            {
                "type": lt.tag,
                "n": lt.rank,
                "K": census.K,
                "counts": [str(c) for c in census.counts],
            }
        )
    elif args.format == "csv":
        text = census_to_csv(census)
    else:
        text = f"type:{lt}\n" + "".join(
            f"S({k}) = {c}\n" for k, c in enumerate(census.counts)
        )
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    lt = _ltype(args)
    rep = oracle_verify(
        lt,
        args.K,
        allow_expensive=args.allow_expensive,
        memory_budget_mib=args.memory_budget,
    )
    legendre = legendre_identity_check(lt.rank) if lt.tag == "A" else None
    ok = rep.matched and legendre is not False
    if args.format == "json":
        obj = {
            "type": lt.tag,
            "n": lt.rank,
            "K": rep.K,
            "counts": [str(c) for c in rep.census.counts],
            "matched": rep.matched,
        }
        if rep.closed_form is not None:
            obj["closed_form"] = [_numstr(c) for c in rep.closed_form.coeffs]
        if rep.recovered is not None:
            obj["recovered"] = [_numstr(c) for c in rep.recovered.coeffs]
        if rep.first_mismatch is not None:
            k, exp, got = rep.first_mismatch
            obj["first_mismatch"] = {"k": k, "expected": str(exp), "got": str(got)}
        if rep.detail:
            obj["detail"] = rep.detail
        if legendre is not None:
            obj["legendre_identity"] = legendre
        text = _json_line(obj)
    elif args.format == "csv":
        text = census_to_csv(rep.census)
    else:
        lines = [
            f"type:{lt}",
            f"K:{rep.K}",
            "census:[" + ", ".join(str(c) for c in rep.census.counts) + "]",
            f"matched:{_bool(rep.matched)}",
        ]
        if rep.closed_form is not None:
            lines.append(
                "closed_form:" + " ".join(_numstr(c) for c in rep.closed_form.coeffs)
            )
        if rep.recovered is not None:
            lines.append(
                "recovered:" + " ".join(_numstr(c) for c in rep.recovered.coeffs)
            )
        if rep.first_mismatch is not None:
            k, exp, got = rep.first_mismatch
            lines.append(f"first_mismatch:k={k} expected={exp} got={got}")
        if rep.detail:
            lines.append(f"detail:{rep.detail}")
        if legendre is not None:
            lines.append(f"legendre_identity:{_bool(legendre)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if ok else 1


def _report_row(tag: str, n: int) -> dict:
    lt = LatticeType(tag, n)
    h = coordinator(lt).poly
    rr = is_real_rooted(h)
    lc = check_log_concave(h.coeffs)
    um = check_unimodal(h.coeffs)
    pf = pf_minor_check(h.coeffs, 3)
    return {
        "n": n,
        "degree": rr.degree,
        "distinct_real": rr.distinct_real,
        "real_rooted": rr.is_real_rooted,
        "log_concave": lc.holds,
        "unimodal": um.holds,
        "pf3": pf.holds,
    }


_REPORT_COLS = ("n", "degree", "distinct_real", "real_rooted", "log_concave", "unimodal", "pf3")


def _cmd_report(args) -> int:
    tag = args.type
    if tag not in CLOSED_FORM_TAGS:
        raise ValueError("report ranges over n and needs a type in A/B/C/D")
    if args.n is None:
        raise ValueError("--n is required for report")
    lo = MIN_RANK[tag]
    ns = list(range(lo, args.n + 1))
    if not ns:
        raise ValueError(f"type {tag} needs n >= {lo}")
    threads = int(os.environ.get("COORDLAT_THREADS", "0") or "0")
    if threads >= 2:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(partial(_report_row, tag), ns))
    else:
        rows = [_report_row(tag, n) for n in ns]
    rows.sort(key=lambda r: r["n"])
    if args.format == "json":
        text = _json_line({"type": tag, "rows": rows})
    else:
        cells = [
            [
                str(r["n"]),
                str(r["degree"]),
                str(r["distinct_real"]),
                _bool(r["real_rooted"]),
                _bool(r["log_concave"]),
                _bool(r["unimodal"]),
                _bool(r["pf3"]),
            ]
            for r in rows
        ]
        if args.format == "csv":
            text = ",".join(_REPORT_COLS) + "\n" + "".join(
                ",".join(row) + "\n" for row in cells
            )
        else:
            widths = [
                max(len(col), *(len(row[i]) for row in cells))
                for i, col in enumerate(_REPORT_COLS)
            ]
            header = "  ".join(c.ljust(w) for c, w in zip(_REPORT_COLS, widths))
            body = "".join(
                "  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n"
                for row in cells
            )
            text = header.rstrip() + "\n" + body
    _emit(text, args.out)
    return 0


def _add_common(sp, n_required: bool = False) -> None:
    sp.add_argument("--type", required=True, choices=_TYPE_CHOICES)
    sp.add_argument("--n", type=int, required=n_required)
    sp.add_argument("--format", choices=["json", "csv", "text"], default="text")
    sp.add_argument("--out", default=None)
    sp.add_argument("--allow-expensive", action="store_true")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="coordlat",
        description="Coordinator polynomials of root lattices: exact "
        "construction, root location, and brute-force cross-checks.",
    )
    sub = p.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("gen", help="print a coordinator polynomial")
    _add_common(sp)
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("analyze", help="root and coefficient diagnostics")
    _add_common(sp)
    sp.add_argument("--max-order", type=int, default=3)
    sp.add_argument("--expect", choices=_EXPECT_KEYS, default=None)
    sp.set_defaults(func=_cmd_analyze)

    sp = sub.add_parser("roots", help="isolating intervals and trig brackets")
    _add_common(sp)
    sp.add_argument("--width", type=_rational, default=Fraction(1, 1024))
    sp.set_defaults(func=_cmd_roots)

    sp = sub.add_parser("enumerate", help="brute-force word-length census")
    _add_common(sp)
    sp.add_argument("--K", type=int, required=True)
    sp.add_argument("--memory-budget", type=int, default=None, metavar="MiB")
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("verify", help="census against the closed form")
    _add_common(sp)
    sp.add_argument("--K", type=int, required=True)
    sp.add_argument("--memory-budget", type=int, default=None, metavar="MiB")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("report", help="batch table over n = 1..N")
    _add_common(sp)
    sp.set_defaults(func=_cmd_report)

    return p


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except MemoryBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        UnsupportedTypeError,
        ExpensiveLatticeError,
        ReconstructionError,
        BracketingError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
