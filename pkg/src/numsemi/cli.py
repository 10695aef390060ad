"""Command-line surface: compute, analyze, verify, tabulate.

Subcommands: ``frobenius``, ``analyze``, ``verify``, ``table``, ``perms``.
Output formats: text (default), json (one object per invocation; verify
emits an array), csv (header row, LF line endings).  Every JSON record
carries ``"schema": "1"``.

Exit codes: 0 success / all checks pass; 1 verification counterexample or
method disagreement; 2 invalid input; 3 overflow; 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

from numsemi import core, figurate, telescopic
from numsemi.errors import InvariantViolation, NotCoprimeError

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INVALID_INPUT = 2
EXIT_OVERFLOW = 3
EXIT_IO = 4

SCHEMA_VERSION = "1"


def _parse_gens(text: str) -> tuple[int, ...]:
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"generator list must be comma-separated integers, got {text!r}") from None
    if not entries:
        raise ValueError("generator list is empty")
    if any(g < 1 for g in entries):
        raise ValueError("generators must be positive")
    if len(set(entries)) != len(entries):
        raise ValueError("duplicate generators are rejected")
    return entries


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise ValueError(f"range must look like a..b, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"range endpoints must be integers, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise ValueError(f"range must satisfy 1 <= a <= b, got {text!r}")
    return lo, hi


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected n,k with two integers, got {text!r}")
    return int(parts[0]), int(parts[1])


def _emit(payload: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(payload)


def _record_to_text(record: dict) -> str:
    lines: list[str] = []

    def walk(prefix: str, mapping: dict) -> None:
        for key, sub in mapping.items():
            if isinstance(sub, dict):
                walk(f"{prefix}{key}.", sub)
            else:
                lines.append(f"{prefix}{key}: {_scalar(sub)}")

    walk("", record)
    return "\n".join(lines) + "\n"


def _scalar(value: object) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _record_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _scalar(v) if isinstance(v, (list, tuple, bool)) else v for k, v in row.items()})
    return buf.getvalue()


def _format_payload(record: dict | list, fmt: str, csv_rows: list[dict] | None = None) -> str:
    if fmt == "json":
        return json.dumps(record, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        if csv_rows is None:
            raise ValueError("csv output is not supported for this command")
        return _record_to_csv(csv_rows)
    if isinstance(record, list):
        return "".join(_record_to_text(r) for r in record)
    return _record_to_text(record)


# ---------------------------------------------------------------------------
# frobenius


def _frobenius_methods(args: argparse.Namespace) -> tuple[dict, dict[str, int]]:
    """Build the input descriptor and the per-method Frobenius values."""
    methods: dict[str, int] = {}
    if args.gens is not None:
        gens = _parse_gens(args.gens)
        descriptor = {"kind": "gens", "generators": list(gens)}
        if len(gens) >= 2:
            methods["reduction"] = telescopic.brauer_shockley_frobenius(gens)
            primary = "reduction"
        else:
            methods["oracle"] = core.frobenius_oracle(gens)
            primary = "oracle"
        if args.cross_check:
            methods["oracle"] = core.frobenius_oracle(gens)
    elif args.triangular is not None:
        n = args.triangular
        gens = figurate.triangular_generators(n)
        descriptor = {"kind": "triangular", "n": n, "generators": list(gens)}
        methods["closed-form"] = figurate.frobenius_triangular(n)
        if args.cross_check:
            methods["cubic-form"] = figurate.baker_a(n)
            methods["reduction"] = telescopic.brauer_shockley_frobenius(gens)
            methods["oracle"] = core.frobenius_oracle(gens)
        primary = "closed-form"
    elif args.tetrahedral is not None:
        n = args.tetrahedral
        gens = figurate.tetrahedral_generators(n)
        descriptor = {"kind": "tetrahedral", "n": n, "generators": list(gens)}
        methods["closed-form"] = figurate.frobenius_tetrahedral(n)
        if args.cross_check:
            methods["reduction"] = telescopic.brauer_shockley_frobenius(gens)
            methods["oracle"] = core.frobenius_oracle(gens)
        primary = "closed-form"
    elif args.arith is not None:
        n, k = _parse_pair(args.arith)
        gens = figurate.arithmetic_generators(n, k)
        descriptor = {"kind": "arith", "n": n, "k": k, "generators": list(gens)}
        methods["closed-form"] = figurate.brauer_arithmetic_frobenius(n, k)
        if args.cross_check:
            methods["oracle"] = core.frobenius_oracle(gens)
        primary = "closed-form"
    else:
        n = args.choose4
        gens = figurate.choose4_generators(n)
        descriptor = {"kind": "choose4", "n": n, "generators": list(gens)}
        methods["reduction"] = telescopic.brauer_shockley_frobenius(gens)
        if args.cross_check:
            methods["oracle"] = core.frobenius_oracle(gens)
        primary = "reduction"
    descriptor["primary"] = primary
    return descriptor, methods


def cmd_frobenius(args: argparse.Namespace) -> int:
    descriptor, methods = _frobenius_methods(args)
    values = set(methods.values())
    record = {
        "schema": SCHEMA_VERSION,
        "input": descriptor,
        "frobenius": methods[descriptor["primary"]],
        "provenance": descriptor["primary"],
        "methods": {k: v for k, v in sorted(methods.items())},
    }
    if len(methods) > 1:
        record["agreement"] = len(values) == 1
    csv_rows = [
        {
            "input": descriptor["kind"],
            "generators": list(descriptor["generators"]),
            "frobenius": record["frobenius"],
            "provenance": record["provenance"],
        }
    ]
    _emit(_format_payload(record, args.format, csv_rows), args.out)
    if len(methods) > 1 and len(values) != 1:
        print(f"method disagreement: {methods}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


# ---------------------------------------------------------------------------
# analyze


def _apery_summary(ap: core.AperySet, full: bool) -> dict:
    elements = ap.sorted_elements()
    summary: dict = {
        "anchor": ap.anchor,
        "size": len(ap),
        "max": ap.max_element(),
        "frobenius_from_apery": ap.frobenius(),
    }
    if full or len(elements) <= 6:
        summary["elements"] = list(elements)
    else:
        summary["smallest"] = list(elements[:3])
        summary["largest"] = list(elements[-3:])
    return summary


def _arranged_minimal(entries: tuple[int, ...]) -> tuple[int, ...]:
    """Minimal generators ordered by first occurrence in the given list."""
    minimal = set(core.NumericalSemigroup(entries).generators)
    return tuple(g for g in entries if g in minimal)


def _analyze_generic(gens: tuple[int, ...], args: argparse.Namespace) -> dict:
    semigroup = core.NumericalSemigroup(gens)
    arrangement = _arranged_minimal(gens)
    record: dict = {
        "schema": SCHEMA_VERSION,
        "input": {"kind": "gens", "generators": list(gens)},
        "minimal_generators": list(semigroup.generators),
        "embedding_dimension": semigroup.embedding_dimension,
    }
    telescopic_given = (
        bool(telescopic.is_telescopic(gens)) if len(gens) >= 2 else True
    )
    record["telescopic_as_given"] = telescopic_given
    verdict = telescopic.is_free(arrangement)
    record["arrangement"] = list(arrangement)
    record["free"] = bool(verdict)
    record["cstar"] = list(verdict.cstars)
    methods = {"oracle": semigroup.frobenius()}
    if isinstance(verdict, telescopic.FreeDecomposition):
        methods["free-form"] = telescopic.free_frobenius(verdict)
        record["presentation"] = [
            {"lhs": list(l), "rhs": list(r)}
            for l, r in telescopic.free_presentation(verdict).relations
        ]
        record["betti"] = sorted(telescopic.free_betti(verdict))
    elif semigroup.embedding_dimension <= core.BETTI_ORACLE_MAX_EMBEDDING_DIM:
        record["betti"] = sorted(semigroup.betti_elements(args.betti_bound))
    if len(gens) >= 2:
        methods["reduction"] = telescopic.brauer_shockley_frobenius(gens)
    record["frobenius"] = methods["oracle"]
    record["provenance"] = "oracle"
    record["methods"] = dict(sorted(methods.items()))
    record["agreement"] = len(set(methods.values())) == 1
    record["apery"] = _apery_summary(semigroup.apery(), args.full)
    return record


def _analyze_family(kind: str, n: int, args: argparse.Namespace) -> dict:
    if kind == "triangular":
        gens = figurate.triangular_generators(n)
        direction = figurate.triangular_direction(n)
        closed_frobenius = figurate.frobenius_triangular(n)
        structural = n >= 3
    else:
        gens = figurate.tetrahedral_generators(n)
        direction = figurate.tetrahedral_direction(n)
        closed_frobenius = figurate.frobenius_tetrahedral(n)
        structural = n >= 4
    record: dict = {
        "schema": SCHEMA_VERSION,
        "input": {"kind": kind, "n": n, "generators": list(gens)},
        "minimal_generators": list(core.NumericalSemigroup(gens).generators),
        "embedding_dimension": figurate.figurate_embedding_dimension(kind, n),
        "direction": direction.value,
    }
    methods = {"closed-form": closed_frobenius, "reduction": telescopic.brauer_shockley_frobenius(gens)}
    record["frobenius"] = closed_frobenius
    record["provenance"] = "closed-form"
    if structural:
        if kind == "triangular":
            form = figurate.triangular_cstar(n)
            presentation = figurate.triangular_presentation(n)
            betti = figurate.triangular_betti(n)
            ap = figurate.triangular_apery(n)
        else:
            form = figurate.tetrahedral_cstar(n)
            presentation = figurate.tetrahedral_presentation(n)
            betti = figurate.tetrahedral_betti(n)
            ap = figurate.tetrahedral_apery(n)
        record["arrangement"] = list(form.arrangement)
        record["cstar"] = list(form.cstars)
        record["free"] = True
        record["presentation"] = [
            {"lhs": list(l), "rhs": list(r)} for l, r in presentation.relations
        ]
        record["betti"] = sorted(betti)
        record["apery"] = _apery_summary(ap, args.full)
    else:
        # closed structural forms refuse below full embedding dimension
        record["note"] = figurate._REDUCED_EDIM_MSG
        semigroup = core.NumericalSemigroup(gens)
        record["betti"] = sorted(semigroup.betti_elements(args.betti_bound))
        record["apery"] = _apery_summary(semigroup.apery(), args.full)
        methods["oracle"] = semigroup.frobenius()
    record["methods"] = dict(sorted(methods.items()))
    record["agreement"] = len(set(methods.values())) == 1
    return record


def cmd_analyze(args: argparse.Namespace) -> int:
    if args.gens is not None:
        record = _analyze_generic(_parse_gens(args.gens), args)
    elif args.triangular is not None:
        record = _analyze_family("triangular", args.triangular, args)
    else:
        record = _analyze_family("tetrahedral", args.tetrahedral, args)
    csv_rows = [
        {
            "generators": record["input"]["generators"],
            "frobenius": record["frobenius"],
            "free": record.get("free", ""),
            "betti": record.get("betti", ""),
        }
    ]
    _emit(_format_payload(record, args.format, csv_rows), args.out)
    if not record.get("agreement", True):
        print(f"method disagreement: {record['methods']}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _check_triangular(n: int) -> str | None:
    gens = figurate.triangular_generators(n)
    closed = figurate.frobenius_triangular(n)
    cubic = figurate.baker_a(n)
    oracle = core.frobenius_oracle(gens)
    reduction = telescopic.brauer_shockley_frobenius(gens)
    if not closed == cubic == oracle == reduction:
        return f"frobenius mismatch: closed={closed} cubic={cubic} oracle={oracle} reduction={reduction}"
    if not telescopic.is_telescopic(gens):
        return "forward arrangement not telescopic"
    if not telescopic.is_telescopic(gens[::-1]):
        return "reverse arrangement not telescopic"
    if n < 3:
        return None
    form = figurate.triangular_cstar(n)
    generic_cstars, _ = telescopic.cstar_constants(form.arrangement)
    if form.cstars != generic_cstars:
        return f"c* mismatch: closed={form.cstars} generic={generic_cstars}"
    fd = telescopic.is_free(form.arrangement)
    if not fd:
        return "freeness product test failed"
    figurate.triangular_presentation(n)  # validates evaluation equality on construction
    closed_betti = figurate.triangular_betti(n)
    if closed_betti != telescopic.free_betti(fd):
        return f"Betti mismatch: closed={closed_betti} free={telescopic.free_betti(fd)}"
    semigroup = core.NumericalSemigroup(gens)
    ap_closed = figurate.triangular_apery(n)
    if ap_closed != semigroup.apery(ap_closed.anchor):
        return "Apery mismatch between closed form and oracle"
    if ap_closed.frobenius() != closed:
        return "max(Apery) - anchor disagrees with the Frobenius number"
    if n <= 12 and closed_betti != semigroup.betti_elements():
        return "Betti oracle disagrees with the closed form"
    return None


def _check_tetrahedral(n: int) -> str | None:
    gens = figurate.tetrahedral_generators(n)
    closed = figurate.frobenius_tetrahedral(n)
    oracle = core.frobenius_oracle(gens)
    reduction = telescopic.brauer_shockley_frobenius(gens)
    if not closed == oracle == reduction:
        return f"frobenius mismatch: closed={closed} oracle={oracle} reduction={reduction}"
    forward = bool(telescopic.is_telescopic(gens))
    reverse = bool(telescopic.is_telescopic(gens[::-1]))
    expect_forward = n % 6 in (0, 1, 2, 3)
    if forward != expect_forward or reverse != (not expect_forward):
        return f"classification mismatch: forward={forward} reverse={reverse} n mod 6 = {n % 6}"
    if n < 4:
        return None
    form = figurate.tetrahedral_cstar(n)
    generic_cstars, _ = telescopic.cstar_constants(form.arrangement)
    if form.cstars != generic_cstars:
        return f"c* mismatch: closed={form.cstars} generic={generic_cstars}"
    fd = telescopic.is_free(form.arrangement)
    if not fd:
        return "freeness product test failed"
    figurate.tetrahedral_presentation(n)
    closed_betti = figurate.tetrahedral_betti(n)
    if closed_betti != telescopic.free_betti(fd):
        return f"Betti mismatch: closed={closed_betti} free={telescopic.free_betti(fd)}"
    semigroup = core.NumericalSemigroup(gens)
    ap_closed = figurate.tetrahedral_apery(n)
    if ap_closed != semigroup.apery(ap_closed.anchor):
        return "Apery mismatch between closed form and oracle"
    if ap_closed.frobenius() != closed:
        return "max(Apery) - anchor disagrees with the Frobenius number"
    if n <= 8 and closed_betti != semigroup.betti_elements():
        return "Betti oracle disagrees with the closed form"
    return None


def _check_choose4(n: int) -> str | None:
    gens, cls = figurate.choose4_family(n)
    x = n % 6
    if n in (3, 4, 5):
        if cls is not figurate.TelescopicClass.BOTH:
            return f"expected both directions telescopic, got {cls.value}"
    else:
        forward_expected = x in (0, 1, 2)
        forward = cls in (figurate.TelescopicClass.FORWARD, figurate.TelescopicClass.BOTH)
        if forward != forward_expected:
            return f"forward classification mismatch at x={x}: {cls.value}"
        if n >= 9:
            reverse = cls in (figurate.TelescopicClass.REVERSE, figurate.TelescopicClass.BOTH)
            if reverse != (x in (3, 4, 5)):
                return f"reverse classification mismatch at x={x}: {cls.value}"
    if 3 <= n <= 20:
        reduction = telescopic.brauer_shockley_frobenius(gens)
        oracle = core.frobenius_oracle(gens)
        if reduction != oracle:
            return f"frobenius mismatch: reduction={reduction} oracle={oracle}"
    return None


def _check_arith(n: int) -> str | None:
    if n < 2:
        return None
    for k in range(2, n + 1):
        formula = figurate.brauer_arithmetic_frobenius(n, k)
        oracle = core.frobenius_oracle(figurate.arithmetic_generators(n, k))
        if formula != oracle:
            return f"k={k}: formula={formula} oracle={oracle}"
    return None


_VERIFY_CHECKS: dict[str, Callable[[int], str | None]] = {
    "triangular": _check_triangular,
    "tetrahedral": _check_tetrahedral,
    "choose4": _check_choose4,
    "arith": _check_arith,
}


def cmd_verify(args: argparse.Namespace) -> int:
    if args.family == "choose5perms":
        report = figurate.choose5_counterexample()
        ok = report.telescopic_count == 0
        record = {
            "schema": SCHEMA_VERSION,
            "family": "choose5perms",
            "total": report.total,
            "telescopic": report.telescopic_count,
            "pass": ok,
        }
        payload_rows = [record]
        _emit(_format_payload([record], args.format, payload_rows), args.out)
        if not ok:
            print("counterexample: some permutation is telescopic", file=sys.stderr)
            return EXIT_COUNTEREXAMPLE
        return EXIT_OK

    if args.range is None:
        raise ValueError("--range a..b is required for this family")
    lo, hi = _parse_range(args.range)
    check = _VERIFY_CHECKS[args.family]
    ns = list(range(lo, hi + 1))
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            details = list(pool.map(check, ns))
    else:
        details = [check(n) for n in ns]
    records = []
    first_failure: tuple[int, str] | None = None
    for n, detail in zip(ns, details):
        ok = detail is None
        records.append(
            {"schema": SCHEMA_VERSION, "family": args.family, "n": n, "pass": ok, "detail": detail or ""}
        )
        if not ok and first_failure is None:
            first_failure = (n, detail)
    if args.format == "text":
        lines = [f"n={r['n']} {'pass' if r['pass'] else 'FAIL ' + r['detail']}" for r in records]
        total_ok = sum(1 for r in records if r["pass"])
        lines.append(f"{total_ok}/{len(records)} pass")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_format_payload(records, args.format, records), args.out)
    if first_failure is not None:
        print(f"first counterexample: n={first_failure[0]}: {first_failure[1]}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


# ---------------------------------------------------------------------------
# table


def _table_row(family: str, n: int) -> dict:
    if family == "triangular":
        gens = figurate.triangular_generators(n)
        row = {
            "n": n,
            "generators": list(gens),
            "frobenius": figurate.frobenius_triangular(n),
            "cstar": list(figurate.triangular_cstar(n).cstars) if n >= 3 else "",
            "betti": sorted(figurate.triangular_betti(n)) if n >= 3 else "",
            "direction": figurate.triangular_direction(n).value,
        }
    elif family == "tetrahedral":
        gens = figurate.tetrahedral_generators(n)
        row = {
            "n": n,
            "generators": list(gens),
            "frobenius": figurate.frobenius_tetrahedral(n),
            "cstar": list(figurate.tetrahedral_cstar(n).cstars) if n >= 4 else "",
            "betti": sorted(figurate.tetrahedral_betti(n)) if n >= 4 else "",
            "direction": figurate.tetrahedral_direction(n).value,
        }
    else:  # choose4
        gens, cls = figurate.choose4_family(n)
        ordered = gens if cls in (figurate.TelescopicClass.FORWARD, figurate.TelescopicClass.BOTH) else gens[::-1]
        fd = None
        if cls is not figurate.TelescopicClass.NEITHER:
            # the raw five-term sequence may carry redundant generators
            verdict = telescopic.is_free(_arranged_minimal(ordered))
            fd = verdict if verdict else None
        row = {
            "n": n,
            "generators": list(gens),
            "frobenius": telescopic.brauer_shockley_frobenius(gens),
            "cstar": list(fd.cstars) if fd else "",
            "betti": sorted(telescopic.free_betti(fd)) if fd else "",
            "direction": cls.value,
        }
    return row


def cmd_table(args: argparse.Namespace) -> int:
    rows: list[dict]
    if args.family == "arith":
        if args.n is None or args.k is None:
            raise ValueError("table --family arith needs --n N and --k a..b")
        klo, khi = _parse_range(args.k)
        rows = [
            {
                "k": k,
                "generators": list(figurate.arithmetic_generators(args.n, k)),
                "frobenius": figurate.brauer_arithmetic_frobenius(args.n, k),
            }
            for k in range(klo, khi + 1)
        ]
    else:
        if args.range is None:
            raise ValueError("--range a..b is required for this family")
        lo, hi = _parse_range(args.range)
        ns = list(range(lo, hi + 1))
        if args.threads > 1:
            with ThreadPoolExecutor(max_workers=args.threads) as pool:
                rows = list(pool.map(lambda n: _table_row(args.family, n), ns))
        else:
            rows = [_table_row(args.family, n) for n in ns]
    if args.format == "json":
        payload = json.dumps(
            {"schema": SCHEMA_VERSION, "family": args.family, "rows": rows}, sort_keys=True, indent=2
        ) + "\n"
    elif args.format == "csv":
        payload = _record_to_csv(rows)
    else:
        payload = "".join(_record_to_text(row) for row in rows)
    _emit(payload, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# perms


def cmd_perms(args: argparse.Namespace) -> int:
    report = figurate.choose5_counterexample()
    record: dict = {
        "schema": SCHEMA_VERSION,
        "base": list(report.base),
        "total": report.total,
        "telescopic": report.telescopic_count,
        "pass": report.telescopic_count == 0,
    }
    if args.full:
        record["outcomes"] = [
            {"permutation": list(o.permutation), "failing_index": o.failing_index}
            for o in report.outcomes
        ]
    csv_rows = [
        {"permutation": list(o.permutation), "failing_index": o.failing_index}
        for o in report.outcomes
    ]
    _emit(_format_payload(record, args.format, csv_rows), args.out)
    return EXIT_OK if report.telescopic_count == 0 else EXIT_COUNTEREXAMPLE


# ---------------------------------------------------------------------------
# parser


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--out", default=None, help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="numsemi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_frob = sub.add_parser("frobenius", help="Frobenius number of a generator family or list")
    group = p_frob.add_mutually_exclusive_group(required=True)
    group.add_argument("--gens", help="comma-separated generators, order preserved")
    group.add_argument("--triangular", type=int, metavar="N")
    group.add_argument("--tetrahedral", type=int, metavar="N")
    group.add_argument("--arith", metavar="N,K", help="consecutive run n..n+k-1")
    group.add_argument("--choose4", type=int, metavar="N")
    p_frob.add_argument("--cross-check", action="store_true", help="run all applicable methods")
    _add_common(p_frob)
    p_frob.set_defaults(func=cmd_frobenius)

    p_an = sub.add_parser("analyze", help="structure report: generators, c*, freeness, Betti, Apery")
    group = p_an.add_mutually_exclusive_group(required=True)
    group.add_argument("--gens")
    group.add_argument("--triangular", type=int, metavar="N")
    group.add_argument("--tetrahedral", type=int, metavar="N")
    p_an.add_argument("--full", action="store_true", help="dump all Apery elements")
    p_an.add_argument("--betti-bound", type=int, default=None, help="override the Betti scan bound")
    _add_common(p_an)
    p_an.set_defaults(func=cmd_analyze)

    p_ver = sub.add_parser("verify", help="cross-check closed forms against oracles over a range")
    p_ver.add_argument(
        "--family",
        required=True,
        choices=("triangular", "tetrahedral", "choose4", "choose5perms", "arith"),
    )
    p_ver.add_argument("--range", default=None, metavar="A..B")
    p_ver.add_argument("--threads", type=int, default=1)
    _add_common(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_tab = sub.add_parser("table", help="one row per index: generators, Frobenius, c*, Betti")
    p_tab.add_argument("--family", required=True, choices=("triangular", "tetrahedral", "choose4", "arith"))
    p_tab.add_argument("--range", default=None, metavar="A..B")
    p_tab.add_argument("--n", type=int, default=None, help="run start (family arith)")
    p_tab.add_argument("--k", default=None, metavar="A..B", help="run length range (family arith)")
    p_tab.add_argument("--threads", type=int, default=1)
    _add_common(p_tab)
    p_tab.set_defaults(func=cmd_table)

    p_perm = sub.add_parser("perms", help="telescopic sweep over all permutations of the C(.,5) six-tuple")
    p_perm.add_argument("--full", action="store_true", help="list every permutation outcome")
    _add_common(p_perm)
    p_perm.set_defaults(func=cmd_perms)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_INVALID_INPUT
        return code
    try:
        return args.func(args)
    except NotCoprimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except OverflowError as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
